//! The families `𝓕(c; h₁,…,hₙ)` of semigroups with corner `c` that keep
//! `h₁,…,hₙ` as gaps, organised as rooted trees of unitary extensions.
//!
//! The root is the ordinary semigroup `𝒪(c)`. A node `T` is extended by its
//! corner special gaps outside the forced set. In [`Mode::Dedup`] only the
//! gaps that are `≺`-smaller than every nonzero element of `T` inside the
//! box are used, so each member is reached from exactly one parent: the
//! parent of `T` is `T` minus its `≺`-least nonzero element below `c − 1`.
//! [`Mode::Visited`] uses every candidate and a visited set instead.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{GnsError, Result};
use crate::frame::{bit, Bits, BoxFrame, Mask};
use crate::gapset::{GapSet, Gns};
use crate::order::MonomialOrder;
use crate::point::Point;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Monomial-order generation rule.
    #[default]
    Dedup,
    /// Every corner special gap, duplicates removed with a visited set.
    Visited,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyQuery {
    pub corner: Point,
    pub forced_gaps: BTreeSet<Point>,
    pub order: MonomialOrder,
    /// Report only the maximal members when walking.
    pub maximal_only: bool,
}

impl FamilyQuery {
    /// `𝓕(c)` under the lexicographic order.
    pub fn new(corner: Point) -> Self {
        FamilyQuery {
            corner,
            forced_gaps: BTreeSet::new(),
            order: MonomialOrder::Lex,
            maximal_only: false,
        }
    }

    pub fn forcing<I: IntoIterator<Item = Point>>(mut self, gaps: I) -> Self {
        self.forced_gaps.extend(gaps);
        self
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self
    }

    pub fn maximal_only(mut self, yes: bool) -> Self {
        self.maximal_only = yes;
        self
    }

    /// Checks the query and builds its frame.
    pub fn frame(&self) -> Result<BoxFrame> {
        check_corner(&self.corner)?;
        let frame = BoxFrame::new(&self.corner)?;
        for g in &self.forced_gaps {
            self.corner.check_dim(g)?;
            if g.is_zero() || frame.index_of(g).is_none() {
                return Err(GnsError::ForcedGapOutsideBox {
                    gap: g.clone(),
                    corner: self.corner.clone(),
                });
            }
        }
        Ok(frame)
    }
}

/// A corner of a semigroup with positive genus has every coordinate `≥ 1`
/// and at least one `> 1`.
fn check_corner(c: &Point) -> Result<()> {
    if c.dim() == 0 {
        return Err(GnsError::ZeroDimension);
    }
    let coords = c.coords();
    if coords.contains(&0) || coords.iter().all(|&x| x == 1) {
        return Err(GnsError::InvalidCorner(c.clone()));
    }
    Ok(())
}

/// The ordinary semigroup `𝒪(c)`: every nonzero point `≤ c − 1` is a gap.
pub fn ordinary(c: &Point) -> Result<Gns> {
    check_corner(c)?;
    let top = c.minus_ones().expect("coordinates are positive");
    let gaps = top.box_below().filter(|x| !x.is_zero()).collect();
    Ok(Gns::from_valid(GapSet::from_set_unchecked(c.dim(), gaps)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub gns: Gns,
    pub parent: Option<usize>,
    /// The gap removed from the parent.
    pub via: Option<Point>,
    pub depth: usize,
    /// `CEH ⊆ forced`, i.e. inclusion-maximal in the family.
    pub maximal: bool,
}

/// Rooted tree of a family, nodes in breadth-first order with children in
/// ascending monomial order of their extension point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumTree {
    pub corner: Point,
    pub forced_gaps: BTreeSet<Point>,
    pub order: MonomialOrder,
    pub mode: Mode,
    pub nodes: Vec<TreeNode>,
}

impl EnumTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn children(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .filter(move |(_, n)| n.parent == Some(id))
            .map(|(i, _)| i)
    }

    pub fn depth(&self) -> usize {
        self.nodes.iter().map(|n| n.depth).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.parent.is_some()).count()
    }

    /// Member gap sets, canonically sorted.
    pub fn members(&self) -> BTreeSet<Gns> {
        self.nodes.iter().map(|n| n.gns.clone()).collect()
    }

    pub fn maximal_members(&self) -> Vec<Gns> {
        let mut out: Vec<Gns> = self
            .nodes
            .iter()
            .filter(|n| n.maximal)
            .map(|n| n.gns.clone())
            .collect();
        out.sort();
        out
    }
}

/// A node as produced by the kernel walk.
#[derive(Clone, Copy, Debug)]
pub struct RawNode {
    pub id: usize,
    pub parent: Option<usize>,
    /// Box index of the extension point.
    pub via: Option<usize>,
    pub depth: usize,
    pub gaps: Mask,
    pub maximal: bool,
}

/// Breadth-first walk of the family, handing each node to `visit` without
/// retaining the tree. Only the frontier (and the visited set in
/// [`Mode::Visited`]) is kept in memory.
pub fn walk_masks<F>(q: &FamilyQuery, mode: Mode, mut visit: F) -> Result<BoxFrame>
where
    F: FnMut(&BoxFrame, RawNode),
{
    let frame = q.frame()?;
    let forced = frame
        .mask_of(&q.forced_gaps)
        .expect("forced gaps checked against the box");
    let rank = frame.ranks(q.order);
    let mut seen: HashSet<Mask> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut next_id = 0usize;

    let root = frame.full();
    if mode == Mode::Visited {
        seen.insert(root);
    }
    queue.push_back((next_id, None, None, 0usize, root));
    next_id += 1;

    while let Some((id, parent, via, depth, gaps)) = queue.pop_front() {
        let special = frame.special_gaps(gaps);
        let free = frame.corner_special_gaps(gaps, special) & !forced;
        let maximal = free == 0;
        if !q.maximal_only || maximal {
            visit(
                &frame,
                RawNode {
                    id,
                    parent,
                    via,
                    depth,
                    gaps,
                    maximal,
                },
            );
        }

        let candidates = match mode {
            Mode::Dedup => {
                // x must be ≺ every nonzero member of T inside the box
                let members = frame.full() & !gaps;
                let bound = Bits(members).map(|s| rank[s]).min().unwrap_or(u8::MAX);
                Bits(free)
                    .filter(|&x| rank[x] < bound)
                    .fold(0, |m, x| m | bit(x))
            }
            Mode::Visited => free,
        };
        let mut children: Vec<usize> = Bits(candidates).collect();
        children.sort_by_key(|&x| rank[x]);
        for x in children {
            let child = gaps & !bit(x);
            if mode == Mode::Visited && !seen.insert(child) {
                continue;
            }
            queue.push_back((next_id, Some(id), Some(x), depth + 1, child));
            next_id += 1;
        }
    }
    Ok(frame)
}

/// Builds the whole tree of `𝓕(c; forced)`.
///
/// `maximal_only` is ignored here: the tree always carries every member.
pub fn enumerate_family_with(q: &FamilyQuery, mode: Mode) -> Result<EnumTree> {
    let full = q.clone().maximal_only(false);
    let mut nodes = Vec::new();
    walk_masks(&full, mode, |frame, raw| {
        nodes.push(TreeNode {
            gns: frame.to_gns(raw.gaps),
            parent: raw.parent,
            via: raw.via.map(|x| frame.point(x).clone()),
            depth: raw.depth,
            maximal: raw.maximal,
        })
    })?;
    Ok(EnumTree {
        corner: q.corner.clone(),
        forced_gaps: q.forced_gaps.clone(),
        order: q.order,
        mode,
        nodes,
    })
}

/// Tree of `𝓕(c; forced)` with the monomial-order rule.
pub fn enumerate_family(q: &FamilyQuery) -> Result<EnumTree> {
    enumerate_family_with(q, Mode::Dedup)
}

/// All members of `𝓕(c; forced)` as masks in the query's frame.
pub fn family_masks(q: &FamilyQuery) -> Result<(BoxFrame, Vec<Mask>)> {
    let mut out = Vec::new();
    let frame = walk_masks(q, Mode::Dedup, |_, raw| out.push(raw.gaps))?;
    Ok((frame, out))
}

/// `𝓜𝓕(c; forced)`: members with `CEH(S) ⊆ forced`, canonically sorted.
pub fn maximal_elements(q: &FamilyQuery) -> Result<Vec<Gns>> {
    let q = q.clone().maximal_only(true);
    let mut out = Vec::new();
    walk_masks(&q, Mode::Dedup, |frame, raw| out.push(frame.to_gns(raw.gaps)))?;
    out.sort();
    Ok(out)
}

/// `⟨S ∪ X⟩`: the smallest semigroup containing `S` and the points `X`.
///
/// Seeds `X` as members, then repeatedly drops every gap that is a sum of
/// two nonzero members until nothing changes.
pub fn smallest_gns_containing<'a, I>(s: &Gns, extra: I) -> Result<Gns>
where
    I: IntoIterator<Item = &'a Point>,
{
    let mut gaps: BTreeSet<Point> = s.gaps().as_set().clone();
    for x in extra {
        if x.dim() != s.dim() {
            return Err(GnsError::DimensionMismatch {
                expected: s.dim(),
                found: x.dim(),
            });
        }
        gaps.remove(x);
    }
    loop {
        let reachable: Vec<Point> = gaps
            .iter()
            .filter(|h| {
                h.box_below().any(|a| {
                    !a.is_zero() && &a != *h && !gaps.contains(&a) && {
                        let b = h.checked_sub(&a).expect("a lies below h");
                        !gaps.contains(&b)
                    }
                })
            })
            .cloned()
            .collect();
        if reachable.is_empty() {
            break;
        }
        for h in reachable {
            gaps.remove(&h);
        }
    }
    Ok(Gns::from_valid(GapSet::from_set_unchecked(s.dim(), gaps)))
}

/// `𝓜𝓕(g₂ + 1; g₁)` for numerical semigroups, which coincides with the
/// maximal numerical semigroups having both `g₁` and `g₂` as gaps.
pub fn d1_ml_bridge(g1: u32, g2: u32) -> Result<Vec<Gns>> {
    if g1 == 0 || g1 >= g2 {
        return Err(GnsError::NotIncreasingPair {
            g1: Point::from([g1]),
            g2: Point::from([g2]),
        });
    }
    maximal_elements(&FamilyQuery::new(Point::from([g2 + 1])).forcing([Point::from([g1])]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(c: [u32; N]) -> Point {
        Point::from(c)
    }

    fn gns(dim: usize, pts: &[&[u32]]) -> Gns {
        Gns::new(GapSet::new(dim, pts.iter().map(|c| Point::new(c.to_vec()))).unwrap()).unwrap()
    }

    #[test]
    fn ordinary_examples() {
        assert_eq!(
            ordinary(&p([3, 2])).unwrap(),
            gns(2, &[&[0, 1], &[1, 0], &[1, 1], &[2, 0], &[2, 1]])
        );
        assert_eq!(ordinary(&p([2])).unwrap(), gns(1, &[&[1]]));
        let o = ordinary(&p([4, 3])).unwrap();
        assert_eq!(o.genus(), 11);
        assert_eq!(o.corner(), p([4, 3]));
        assert!(matches!(ordinary(&p([0, 3])), Err(GnsError::InvalidCorner(_))));
        assert!(matches!(ordinary(&p([1, 1])), Err(GnsError::InvalidCorner(_))));
    }

    #[test]
    fn query_validation() {
        let q = FamilyQuery::new(p([3, 2])).forcing([p([3, 0])]);
        assert!(matches!(q.frame(), Err(GnsError::ForcedGapOutsideBox { .. })));
        let q = FamilyQuery::new(p([3, 2])).forcing([p([0, 0])]);
        assert!(matches!(q.frame(), Err(GnsError::ForcedGapOutsideBox { .. })));
        let q = FamilyQuery::new(p([3, 2])).forcing([p([1])]);
        assert!(matches!(q.frame(), Err(GnsError::DimensionMismatch { .. })));
    }

    #[test]
    fn single_gap_family_in_dimension_one() {
        // gap subsets of {1,2} containing 2 with lub 2: only {1,2} is closed
        let t = enumerate_family(&FamilyQuery::new(p([3])).forcing([p([2])])).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.nodes[0].gns, gns(1, &[&[1], &[2]]));
        assert!(t.nodes[0].maximal);

        let t = enumerate_family(&FamilyQuery::new(p([2]))).unwrap();
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn closure_examples() {
        let o7 = ordinary(&p([7])).unwrap();
        assert_eq!(
            smallest_gns_containing(&o7, &[p([2])]).unwrap(),
            gns(1, &[&[1], &[3], &[5]])
        );
        let fig1 = gns(2, &[&[0, 1], &[1, 0], &[1, 1], &[1, 2], &[3, 0]]);
        assert_eq!(smallest_gns_containing(&fig1, &[]).unwrap(), fig1);
        let o44 = ordinary(&p([4, 4])).unwrap();
        let closed = smallest_gns_containing(&o44, &[p([1, 1])]).unwrap();
        let expected: BTreeSet<Point> = p([3, 3])
            .box_below()
            .filter(|x| !x.is_zero() && ![p([1, 1]), p([2, 2]), p([3, 3])].contains(x))
            .collect();
        assert_eq!(closed.gaps().as_set(), &expected);
    }

    #[test]
    fn bridge_rejects_bad_pairs() {
        assert!(d1_ml_bridge(3, 3).is_err());
        assert!(d1_ml_bridge(0, 3).is_err());
        assert_eq!(d1_ml_bridge(1, 2).unwrap(), vec![gns(1, &[&[1], &[2]])]);
    }
}
