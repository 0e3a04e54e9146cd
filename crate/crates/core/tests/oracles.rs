mod common;

use std::collections::BTreeSet;

use gns::enumeration::{d1_ml_bridge, enumerate_family_with};
use gns::{FamilyQuery, Mode, MonomialOrder, Point};

use common::*;

fn corners_up_to(bound: &Point) -> Vec<Point> {
    bound
        .box_below()
        .filter(|c| c.coords().iter().all(|&x| x >= 1) && c.coords().iter().any(|&x| x > 1))
        .collect()
}

fn node_sets(q: &FamilyQuery, mode: Mode) -> BTreeSet<BTreeSet<Point>> {
    let t = enumerate_family_with(q, mode).unwrap();
    let sets: BTreeSet<BTreeSet<Point>> = t.nodes.iter().map(|n| gaps_of(&n.gns)).collect();
    assert_eq!(sets.len(), t.len(), "duplicate nodes in {mode:?} mode for {q:?}");
    sets
}

/// Dedup tree, visited-set walk and subset enumeration agree for every
/// corner up to `bound` and every choice of forced gaps.
fn check_all_forcings(bound: Point, order: MonomialOrder) -> usize {
    let mut families = 0;
    for c in corners_up_to(&bound) {
        let all = all_with_corner(&c);
        let pts = box_points(&c);
        for bits in 0u32..(1 << pts.len()) {
            let forced: BTreeSet<Point> = pts
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, p)| p.clone())
                .collect();
            let expected: BTreeSet<BTreeSet<Point>> = all
                .iter()
                .filter(|g| forced.is_subset(g))
                .cloned()
                .collect();
            if expected.is_empty() {
                continue;
            }
            let q = FamilyQuery::new(c.clone())
                .forcing(forced.iter().cloned())
                .with_order(order);
            assert_eq!(node_sets(&q, Mode::Dedup), expected, "dedup {c} {forced:?}");
            assert_eq!(node_sets(&q, Mode::Visited), expected, "visited {c} {forced:?}");

            let listed: Vec<BTreeSet<Point>> = expected.iter().cloned().collect();
            let maximal: BTreeSet<BTreeSet<Point>> = minimal_gap_sets(&listed).into_iter().collect();
            let got: BTreeSet<BTreeSet<Point>> = gns::maximal_elements(&q)
                .unwrap()
                .iter()
                .map(gaps_of)
                .collect();
            assert_eq!(got, maximal, "maximal elements {c} {forced:?}");
            families += 1;
        }
    }
    families
}

#[test]
fn enumeration_matches_subset_oracle_below_43_lex() {
    let n = check_all_forcings(Point::from([4, 3]), MonomialOrder::Lex);
    assert!(n > 1000);
}

#[test]
fn enumeration_matches_subset_oracle_below_33_grlex() {
    check_all_forcings(Point::from([3, 3]), MonomialOrder::Grlex);
}

#[test]
fn enumeration_matches_subset_oracle_in_dimension_one() {
    check_all_forcings(Point::from([8]), MonomialOrder::Lex);
}

#[test]
fn enumeration_matches_subset_oracle_in_dimension_three() {
    check_all_forcings(Point::from([2, 2, 3]), MonomialOrder::Lex);
}

#[test]
fn d1_bridge_matches_subset_oracle() {
    for g2 in 2..=8u32 {
        let universe: Vec<Point> = (1..=g2).map(|x| Point::from([x])).collect();
        for g1 in 1..g2 {
            let avoiding: Vec<BTreeSet<Point>> = (0u32..(1 << g2))
                .map(|bits| {
                    universe
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| bits >> i & 1 == 1)
                        .map(|(_, p)| p.clone())
                        .collect::<BTreeSet<Point>>()
                })
                .filter(|g| {
                    g.contains(&Point::from([g1]))
                        && g.contains(&Point::from([g2]))
                        && closed(g, &universe)
                })
                .collect();
            let expected: BTreeSet<BTreeSet<Point>> =
                minimal_gap_sets(&avoiding).into_iter().collect();
            let got: BTreeSet<BTreeSet<Point>> =
                d1_ml_bridge(g1, g2).unwrap().iter().map(gaps_of).collect();
            assert_eq!(got, expected, "g1={g1} g2={g2}");
        }
    }
}

#[test]
fn universe_counts_match_subset_oracle() {
    let mut total = 0;
    for c in corners_up_to(&Point::from([4, 4])) {
        let oracle = all_with_corner(&c).len();
        let (_, masks) = gns::enumeration::family_masks(&FamilyQuery::new(c.clone())).unwrap();
        assert_eq!(masks.len(), oracle, "{c}");
        total += oracle;
    }
    assert_eq!(total, 2123);
}

#[test]
fn smallest_gns_containing_is_the_intersection_of_supersets() {
    use gns::enumeration::{ordinary, smallest_gns_containing};
    let o = ordinary(&Point::from([4, 4])).unwrap();
    let pts = box_points(&Point::from([4, 4]));
    let valid: Vec<BTreeSet<Point>> = (0u32..(1 << pts.len()))
        .map(|bits| {
            pts.iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, p)| p.clone())
                .collect::<BTreeSet<Point>>()
        })
        .filter(|g| closed(g, &pts))
        .collect();
    for seed in &pts {
        let got = gaps_of(&smallest_gns_containing(&o, [seed]).unwrap());
        // the largest gap set not containing the seed
        let expected = valid
            .iter()
            .filter(|g| !g.contains(seed))
            .max_by_key(|g| g.len())
            .unwrap();
        let union_closed = valid.iter().filter(|g| !g.contains(seed)).all(|g| g.is_subset(expected));
        assert!(union_closed);
        assert_eq!(&got, expected, "seed {seed}");
    }
}
