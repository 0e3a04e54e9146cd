use gns::theorems::{registry, verify_in, Universe, Verdict};
use gns::Point;

/// Statements expected to fail somewhere in the sweep.
const REFUTABLE: &[&str] = &["converse-irreducible-ceh-empty"];

fn sweep(bound: Point) {
    let u = Universe::build(&bound).unwrap();
    for st in registry() {
        let r = verify_in(st, &u);
        println!(
            "{:<34} bound {} checked {:>5} vacuous {:>5} counterexamples {:>3} {:?}",
            st.id,
            bound,
            r.checked,
            r.vacuous,
            r.counterexamples.len(),
            r.verdict()
        );
        if REFUTABLE.contains(&st.id) {
            continue;
        }
        assert!(
            r.counterexamples.is_empty(),
            "{} at {bound}: {:?}",
            st.id,
            &r.counterexamples[..r.counterexamples.len().min(3)]
        );
    }
}

#[test]
fn every_statement_holds_below_44() {
    sweep(Point::from([4, 4]));
}

#[test]
fn every_statement_holds_below_53() {
    sweep(Point::from([5, 3]));
}

#[test]
fn every_statement_holds_in_dimension_one() {
    sweep(Point::from([8]));
}

#[test]
fn every_statement_holds_in_dimension_three() {
    sweep(Point::from([3, 2, 2]));
}

#[test]
fn universe_sizes() {
    assert_eq!(Universe::build(&Point::from([4, 4])).unwrap().len(), 2123);
    assert_eq!(Universe::build(&Point::from([3, 3])).unwrap().len(), 66);
    assert_eq!(Universe::build(&Point::from([4, 3])).unwrap().len(), 301);
}

#[test]
fn converse_fails_on_the_irreducible_example() {
    let u = Universe::build(&Point::from([5, 3])).unwrap();
    let st = gns::theorems::statement("converse-irreducible-ceh-empty").unwrap();
    let r = verify_in(st, &u);
    assert_eq!(r.verdict(), Verdict::Refuted);
    let example: Vec<Point> = gns::fixtures::irreducible_53().gaps().iter().cloned().collect();
    assert!(r.counterexamples.iter().any(|c| c.gaps == example));
}
