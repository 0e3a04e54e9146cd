//! Brute-force oracles shared by the integration tests. They work on plain
//! point sets and never call the bitmask kernel.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gns::Point;

/// Nonzero points of the box `0 ≤ x ≤ c − 1`.
pub fn box_points(c: &Point) -> Vec<Point> {
    c.minus_ones()
        .expect("corner coordinates are positive")
        .box_below()
        .filter(|p| !p.is_zero())
        .collect()
}

/// Closure of the complement of `gaps` under addition, checked pair by pair.
pub fn closed(gaps: &BTreeSet<Point>, universe: &[Point]) -> bool {
    let elems: Vec<&Point> = universe.iter().filter(|p| !gaps.contains(*p)).collect();
    for a in &elems {
        for b in &elems {
            if gaps.contains(&a.add(b)) {
                return false;
            }
        }
    }
    true
}

pub fn corner_of(gaps: &BTreeSet<Point>, dim: usize) -> Point {
    let mut acc = vec![0u32; dim];
    for g in gaps {
        for (a, &x) in acc.iter_mut().zip(g.coords()) {
            *a = (*a).max(x + 1);
        }
    }
    Point::new(acc)
}

/// Every gap set of a semigroup with corner exactly `c`, by subset
/// enumeration of the box.
pub fn all_with_corner(c: &Point) -> Vec<BTreeSet<Point>> {
    let pts = box_points(c);
    assert!(pts.len() < 20, "box too large for subset enumeration");
    let mut out = Vec::new();
    for bits in 0u32..(1 << pts.len()) {
        let gaps: BTreeSet<Point> = pts
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, p)| p.clone())
            .collect();
        if &corner_of(&gaps, c.dim()) == c && closed(&gaps, &pts) {
            out.push(gaps);
        }
    }
    out.sort();
    out
}

/// Members of a list that are inclusion-maximal as semigroups, i.e. whose
/// gap set has no proper subset in the list.
pub fn minimal_gap_sets(sets: &[BTreeSet<Point>]) -> Vec<BTreeSet<Point>> {
    sets.iter()
        .filter(|s| !sets.iter().any(|t| t != *s && t.is_subset(s)))
        .cloned()
        .collect()
}

pub fn gaps_of(s: &gns::Gns) -> BTreeSet<Point> {
    s.gaps().iter().cloned().collect()
}
