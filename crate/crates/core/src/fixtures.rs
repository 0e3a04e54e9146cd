//! Reference semigroups and families with corner special gaps, as data.
//!
//! These are typed in by hand and used as golden values: nothing here is
//! computed.

use crate::gapset::{GapSet, Gns};
use crate::point::Point;

fn gns(dim: usize, pts: &[&[u32]]) -> Gns {
    let gaps = GapSet::new(dim, pts.iter().map(|c| Point::new(c.to_vec())))
        .expect("fixture gap sets are well formed");
    Gns::new(gaps).expect("fixture gap sets are semigroups")
}

fn p(c: &[u32]) -> Point {
    Point::new(c.to_vec())
}

/// Corner `(4,3)`, two corner special gaps out of four special gaps.
pub fn corner_43_example() -> Gns {
    gns(2, &[&[0, 1], &[1, 0], &[1, 1], &[1, 2], &[3, 0]])
}

/// Irreducible with corner `(5,3)` whose Frobenius element is corner special.
pub fn irreducible_53() -> Gns {
    gns(
        2,
        &[&[1, 0], &[1, 1], &[1, 2], &[2, 0], &[2, 1], &[4, 0], &[4, 1], &[4, 2]],
    )
}

/// Frobenius semigroup with corner `(4,4)` and `EH = CEH = {(2,3),(3,3)}`.
pub fn non_atom_44() -> Gns {
    gns(
        2,
        &[
            &[1, 0], &[1, 1], &[2, 0], &[2, 1], &[2, 2],
            &[2, 3], &[3, 0], &[3, 1], &[3, 2], &[3, 3],
        ],
    )
}

/// Atom with three special gaps, reaching `|EH| = d + 1`.
pub fn atom_three_special() -> Gns {
    gns(2, &[&[0, 1], &[1, 0], &[1, 1], &[2, 0], &[2, 1], &[2, 2], &[3, 1]])
}

/// A labelled member of a worked family.
#[derive(Clone, Debug)]
pub struct Labelled {
    pub label: &'static str,
    pub gns: Gns,
    /// Label of the parent in the reference tree, `None` for the root.
    pub parent: Option<&'static str>,
}

fn extend(base: &Gns, added: &[&[u32]]) -> Gns {
    let mut gaps = base.gaps().clone();
    for a in added {
        gaps = gaps.without(&p(a));
    }
    Gns::new(gaps).expect("reference extensions are semigroups")
}

/// `𝓕((3,2); (2,1))`: seven members, three of them maximal (`S4, S6, S7`).
pub fn family_32_forcing_21() -> Vec<Labelled> {
    let s = gns(2, &[&[0, 1], &[1, 0], &[1, 1], &[2, 0], &[2, 1]]);
    vec![
        Labelled { label: "S", gns: s.clone(), parent: None },
        Labelled { label: "S1", gns: extend(&s, &[&[0, 1]]), parent: Some("S") },
        Labelled { label: "S2", gns: extend(&s, &[&[1, 1]]), parent: Some("S") },
        Labelled { label: "S3", gns: extend(&s, &[&[2, 0]]), parent: Some("S") },
        Labelled { label: "S4", gns: extend(&s, &[&[0, 1], &[1, 1]]), parent: Some("S2") },
        Labelled { label: "S6", gns: extend(&s, &[&[1, 1], &[2, 0]]), parent: Some("S3") },
        Labelled { label: "S7", gns: extend(&s, &[&[2, 0], &[1, 0]]), parent: Some("S3") },
    ]
}

/// `𝓕((3,2); (2,0))`: seven members, maximal ones `S4, S5, S6`.
pub fn family_32_forcing_20() -> Vec<Labelled> {
    let s = gns(2, &[&[0, 1], &[1, 0], &[1, 1], &[2, 0], &[2, 1]]);
    vec![
        Labelled { label: "S", gns: s.clone(), parent: None },
        Labelled { label: "S1", gns: extend(&s, &[&[0, 1]]), parent: Some("S") },
        Labelled { label: "S2", gns: extend(&s, &[&[1, 1]]), parent: Some("S") },
        Labelled { label: "S3", gns: extend(&s, &[&[2, 1]]), parent: Some("S") },
        Labelled { label: "S4", gns: extend(&s, &[&[1, 1], &[0, 1]]), parent: Some("S2") },
        Labelled { label: "S5", gns: extend(&s, &[&[2, 1], &[0, 1]]), parent: Some("S3") },
        Labelled { label: "S6", gns: extend(&s, &[&[2, 1], &[1, 1]]), parent: Some("S3") },
    ]
}

/// `𝓜𝓕((4,4); (2,2), (3,3))`, fourteen semigroups, none irreducible.
pub fn maximal_44_forcing_22_33() -> Vec<Gns> {
    const LIST: [[[u32; 2]; 9]; 14] = [
        [[1, 0], [1, 1], [2, 0], [2, 1], [2, 2], [3, 0], [3, 1], [3, 2], [3, 3]],
        [[0, 1], [1, 0], [1, 1], [2, 0], [2, 1], [2, 2], [3, 0], [3, 1], [3, 3]],
        [[0, 1], [1, 0], [1, 1], [1, 2], [2, 0], [2, 2], [3, 0], [3, 1], [3, 3]],
        [[0, 1], [0, 3], [1, 0], [1, 1], [2, 0], [2, 1], [2, 2], [3, 1], [3, 3]],
        [[0, 1], [0, 3], [1, 0], [1, 1], [1, 2], [2, 0], [2, 2], [3, 1], [3, 3]],
        [[0, 1], [0, 2], [1, 0], [1, 1], [2, 0], [2, 1], [2, 2], [3, 0], [3, 3]],
        [[0, 1], [0, 2], [1, 0], [1, 1], [1, 3], [2, 1], [2, 2], [3, 0], [3, 3]],
        [[0, 1], [0, 2], [1, 0], [1, 1], [1, 2], [2, 0], [2, 2], [3, 0], [3, 3]],
        [[0, 1], [0, 2], [1, 0], [1, 1], [1, 2], [1, 3], [2, 2], [3, 0], [3, 3]],
        [[0, 1], [0, 2], [0, 3], [1, 1], [1, 2], [1, 3], [2, 2], [2, 3], [3, 3]],
        [[0, 1], [0, 2], [0, 3], [1, 0], [1, 1], [2, 0], [2, 1], [2, 2], [3, 3]],
        [[0, 1], [0, 2], [0, 3], [1, 0], [1, 1], [1, 3], [2, 1], [2, 2], [3, 3]],
        [[0, 1], [0, 2], [0, 3], [1, 0], [1, 1], [1, 2], [2, 0], [2, 2], [3, 3]],
        [[0, 1], [0, 2], [0, 3], [1, 0], [1, 1], [1, 2], [1, 3], [2, 2], [3, 3]],
    ];
    LIST.iter()
        .map(|gaps| gns(2, &gaps.iter().map(|g| &g[..]).collect::<Vec<_>>()))
        .collect()
}

/// `𝓜𝓕((4,4); (1,1), (3,3))`, twenty-two semigroups, all irreducible.
pub fn maximal_44_forcing_11_33() -> Vec<Gns> {
    const LIST: [[[u32; 2]; 8]; 22] = [
        [[1, 0], [1, 1], [2, 0], [2, 1], [3, 0], [3, 1], [3, 2], [3, 3]],
        [[1, 0], [1, 1], [1, 2], [2, 0], [3, 0], [3, 1], [3, 2], [3, 3]],
        [[1, 0], [1, 1], [1, 2], [1, 3], [3, 0], [3, 1], [3, 2], [3, 3]],
        [[0, 1], [1, 0], [1, 1], [2, 0], [2, 1], [3, 0], [3, 1], [3, 3]],
        [[0, 1], [1, 0], [1, 1], [1, 3], [2, 1], [3, 0], [3, 1], [3, 3]],
        [[0, 1], [1, 0], [1, 1], [1, 2], [2, 0], [3, 0], [3, 1], [3, 3]],
        [[0, 1], [1, 0], [1, 1], [1, 2], [1, 3], [3, 0], [3, 1], [3, 3]],
        [[0, 1], [0, 3], [1, 1], [1, 3], [2, 1], [2, 3], [3, 1], [3, 3]],
        [[0, 1], [0, 3], [1, 0], [1, 1], [2, 0], [2, 1], [3, 1], [3, 3]],
        [[0, 1], [0, 3], [1, 0], [1, 1], [1, 3], [2, 1], [3, 1], [3, 3]],
        [[0, 1], [0, 3], [1, 0], [1, 1], [1, 2], [2, 0], [3, 1], [3, 3]],
        [[0, 1], [0, 3], [1, 0], [1, 1], [1, 2], [1, 3], [3, 1], [3, 3]],
        [[0, 1], [0, 2], [1, 0], [1, 1], [2, 0], [2, 1], [3, 0], [3, 3]],
        [[0, 1], [0, 2], [1, 0], [1, 1], [1, 3], [2, 1], [3, 0], [3, 3]],
        [[0, 1], [0, 2], [1, 0], [1, 1], [1, 2], [2, 0], [3, 0], [3, 3]],
        [[0, 1], [0, 2], [1, 0], [1, 1], [1, 2], [1, 3], [3, 0], [3, 3]],
        [[0, 1], [0, 2], [0, 3], [1, 1], [1, 3], [2, 1], [2, 3], [3, 3]],
        [[0, 1], [0, 2], [0, 3], [1, 1], [1, 2], [1, 3], [2, 3], [3, 3]],
        [[0, 1], [0, 2], [0, 3], [1, 0], [1, 1], [2, 0], [2, 1], [3, 3]],
        [[0, 1], [0, 2], [0, 3], [1, 0], [1, 1], [1, 3], [2, 1], [3, 3]],
        [[0, 1], [0, 2], [0, 3], [1, 0], [1, 1], [1, 2], [2, 0], [3, 3]],
        [[0, 1], [0, 2], [0, 3], [1, 0], [1, 1], [1, 2], [1, 3], [3, 3]],
    ];
    LIST.iter()
        .map(|gaps| gns(2, &gaps.iter().map(|g| &g[..]).collect::<Vec<_>>()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_lists_are_distinct_semigroups() {
        let a = maximal_44_forcing_22_33();
        let b = maximal_44_forcing_11_33();
        assert_eq!(a.iter().collect::<std::collections::BTreeSet<_>>().len(), 14);
        assert_eq!(b.iter().collect::<std::collections::BTreeSet<_>>().len(), 22);
        for s in a.iter().chain(&b) {
            assert_eq!(s.corner(), Point::from([4, 4]));
        }
    }
}
