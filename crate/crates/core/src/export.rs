//! Rendering of enumeration trees and gap-set lists.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::enumeration::EnumTree;
use crate::error::{GnsError, Result};
use crate::gapset::Gns;
use crate::order::MonomialOrder;
use crate::point::Point;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = GnsError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(GnsError::UnknownFormat(other.to_string())),
        }
    }
}

pub fn export_tree(t: &EnumTree, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(t),
        ExportFormat::Json => to_json(t),
    }
}

/// Canonical gap list, e.g. `{(0,1),(1,0)}`.
fn gap_label(s: &Gns) -> String {
    let mut out = String::from("{");
    for (i, g) in s.gaps().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{g}");
    }
    out.push('}');
    out
}

fn to_dot(t: &EnumTree) -> String {
    let mut out = String::new();
    let forced: Vec<String> = t.forced_gaps.iter().map(|g| g.to_string()).collect();
    let _ = writeln!(out, "digraph family {{");
    let _ = writeln!(
        out,
        "  label=\"corner {} forced [{}] order {}\";",
        t.corner,
        forced.join(" "),
        t.order
    );
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
    for (id, node) in t.nodes.iter().enumerate() {
        let extra = if node.maximal { ", peripheries=2" } else { "" };
        let _ = writeln!(out, "  n{id} [label=\"{}\"{extra}];", gap_label(&node.gns));
    }
    for (id, node) in t.nodes.iter().enumerate() {
        if let (Some(parent), Some(via)) = (node.parent, &node.via) {
            let _ = writeln!(out, "  n{parent} -> n{id} [label=\"{via}\"];");
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct TreeDoc<'a> {
    corner: &'a Point,
    forced: Vec<&'a Point>,
    order: MonomialOrder,
    nodes: Vec<NodeDoc<'a>>,
}

#[derive(Serialize)]
struct NodeDoc<'a> {
    id: usize,
    parent: Option<usize>,
    via: Option<&'a Point>,
    gaps: Vec<&'a Point>,
    maximal: bool,
    children: Vec<usize>,
}

fn to_json(t: &EnumTree) -> String {
    let mut children = vec![Vec::new(); t.len()];
    for (id, node) in t.nodes.iter().enumerate() {
        if let Some(p) = node.parent {
            children[p].push(id);
        }
    }
    let doc = TreeDoc {
        corner: &t.corner,
        forced: t.forced_gaps.iter().collect(),
        order: t.order,
        nodes: t
            .nodes
            .iter()
            .zip(children)
            .enumerate()
            .map(|(id, (n, children))| NodeDoc {
                id,
                parent: n.parent,
                via: n.via.as_ref(),
                gaps: n.gns.gaps().iter().collect(),
                maximal: n.maximal,
                children,
            })
            .collect(),
    };
    let mut s = serde_json::to_string(&doc).expect("tree documents serialize");
    s.push('\n');
    s
}

/// A JSON document listing gap sets of one family, one set per line:
///
/// ```text
/// {"corner":[3,2],"forced":[[2,1]],"count":3,"semigroups":[
/// {"d":2,"gaps":[[0,1],[1,0],[1,1]]},
/// ...
/// ]}
/// ```
///
/// The members are written in the given order; callers sort them when a
/// canonical listing is wanted.
pub fn gapset_list_document<'a, I>(corner: &Point, forced: I, members: &[Gns]) -> String
where
    I: IntoIterator<Item = &'a Point>,
{
    let forced: Vec<&Point> = forced.into_iter().collect();
    let mut out = String::new();
    let _ = write!(
        out,
        "{{\"corner\":{},\"forced\":{},\"count\":{},\"semigroups\":[",
        serde_json::to_string(corner).expect("points serialize"),
        serde_json::to_string(&forced).expect("points serialize"),
        members.len()
    );
    for (i, s) in members.iter().enumerate() {
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        out.push_str(&s.gaps().to_json());
    }
    out.push_str("\n]}\n");
    out
}
