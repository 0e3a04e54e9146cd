//! Per-semigroup invariants: corner element, Frobenius element,
//! pseudo-Frobenius elements, special gaps, corner special gaps, the slabs
//! `H(S)^(i)` and the irreducibility / atomicity predicates.
//!
//! Sets are returned as `BTreeSet<Point>`, i.e. in lexicographic order.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{GnsError, Result};
use crate::gapset::Gns;
use crate::point::{maximals, Point};

/// The gaps on the top layer of axis `i` and their maximal elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Slab {
    /// 1-based axis index.
    pub i: usize,
    /// Gaps whose `i`-th coordinate equals `cᵢ − 1`.
    pub h: BTreeSet<Point>,
    /// Maximal elements of `h` under the natural partial order.
    pub mh: BTreeSet<Point>,
}

impl Gns {
    /// The corner element `c(S) = lub(H(S)) + 𝟏`; the zero vector for
    /// genus 0.
    pub fn corner(&self) -> Point {
        match self.gaps().lub() {
            Some(l) => l.plus_ones(),
            None => Point::zero(self.dim()),
        }
    }

    /// `F(S) = c(S) − 𝟏` when it is a gap.
    pub fn frobenius(&self) -> Option<Point> {
        let f = self.gaps().lub()?;
        self.is_gap(&f).then_some(f)
    }

    /// Whether `x + S* ⊆ S`, for a gap `x`.
    ///
    /// Only `s ≤ c − 1 − x` can push `x + s` back into the gap box.
    fn is_pseudo_frobenius(&self, x: &Point, top: &Point) -> bool {
        let room = top.checked_sub(x).expect("gaps lie below the corner");
        room.box_below()
            .filter(|s| !s.is_zero() && self.contains(s))
            .all(|s| self.contains(&x.add(&s)))
    }

    /// `PF(S) = {x ∈ H(S) : x + S* ⊆ S}`.
    pub fn pseudo_frobenius(&self) -> BTreeSet<Point> {
        let Some(top) = self.gaps().lub() else {
            return BTreeSet::new();
        };
        self.gaps()
            .iter()
            .filter(|x| self.is_pseudo_frobenius(x, &top))
            .cloned()
            .collect()
    }

    /// `EH(S) = {x ∈ PF(S) : 2x ∈ S}`, the gaps whose unitary extension is
    /// again a semigroup.
    pub fn special_gaps(&self) -> BTreeSet<Point> {
        let Some(top) = self.gaps().lub() else {
            return BTreeSet::new();
        };
        self.gaps()
            .iter()
            .filter(|x| self.contains(&x.scale(2)) && self.is_pseudo_frobenius(x, &top))
            .cloned()
            .collect()
    }

    /// `H(S)^(i)` and `MH(S)^(i)` for a 0-based `axis`.
    pub fn slab(&self, axis: usize) -> Result<Slab> {
        if axis >= self.dim() {
            return Err(GnsError::AxisOutOfRange {
                axis,
                dim: self.dim(),
            });
        }
        let top = self.gaps().lub().ok_or(GnsError::GenusZero)?;
        let h: BTreeSet<Point> = self
            .gaps()
            .iter()
            .filter(|g| g.coords()[axis] == top.coords()[axis])
            .cloned()
            .collect();
        let mh = maximals(&h).into_iter().collect();
        Ok(Slab { i: axis + 1, h, mh })
    }

    /// All `d` slabs; empty for genus 0.
    pub fn slabs(&self) -> Vec<Slab> {
        if self.genus() == 0 {
            return Vec::new();
        }
        (0..self.dim())
            .map(|i| self.slab(i).expect("positive genus, axis in range"))
            .collect()
    }

    /// `CEH(S)`: special gaps whose unitary extension keeps the corner.
    ///
    /// A special gap fails to be corner-special exactly when it is the only
    /// gap on some top slab `H(S)^(i)`.
    pub fn corner_special_gaps(&self) -> BTreeSet<Point> {
        let eh = self.special_gaps();
        let fast = self.ceh_from_slabs(&eh);
        debug_assert_eq!(fast, self.ceh_by_definition(&eh), "slab criterion disagrees on {self}");
        fast
    }

    fn ceh_from_slabs(&self, eh: &BTreeSet<Point>) -> BTreeSet<Point> {
        let slabs = self.slabs();
        eh.iter()
            .filter(|h| !slabs.iter().any(|s| s.h.len() == 1 && s.h.contains(*h)))
            .cloned()
            .collect()
    }

    fn ceh_by_definition(&self, eh: &BTreeSet<Point>) -> BTreeSet<Point> {
        let corner = self.corner();
        eh.iter()
            .filter(|h| Gns::from_valid(self.gaps().without(h)).corner() == corner)
            .cloned()
            .collect()
    }

    /// `CEH(S)` recomputed from the definition: remove each special gap and
    /// compare corners.
    pub fn corner_special_gaps_by_definition(&self) -> BTreeSet<Point> {
        self.ceh_by_definition(&self.special_gaps())
    }

    /// Irreducible iff `|EH(S)| = 1`. Undefined for genus 0.
    pub fn is_irreducible(&self) -> Result<bool> {
        if self.genus() == 0 {
            return Err(GnsError::GenusZero);
        }
        Ok(self.special_gaps().len() == 1)
    }

    /// Irreducibility of a Frobenius semigroup through the splits of its
    /// Frobenius element: every `F = h + h'` (skipping `h = h' = F/2`) must
    /// have exactly one summand among the gaps.
    pub fn irreducible_via_decompositions(&self) -> Result<bool> {
        let f = self.frobenius().ok_or(GnsError::NoFrobenius)?;
        let half = f
            .coords()
            .iter()
            .all(|c| c % 2 == 0)
            .then(|| Point::new(f.coords().iter().map(|c| c / 2).collect::<Vec<_>>()));
        Ok(f.box_below().all(|h| {
            if half.as_ref() == Some(&h) {
                return true;
            }
            let rest = f.checked_sub(&h).expect("h lies below F");
            self.is_gap(&h) != self.is_gap(&rest)
        }))
    }

    /// Atom of the family with the same corner iff `|CEH(S)| ≤ 1`.
    pub fn is_atomic(&self) -> Result<bool> {
        if self.genus() == 0 {
            return Err(GnsError::GenusZero);
        }
        Ok(self.corner_special_gaps().len() <= 1)
    }

    /// Atomic and not irreducible.
    pub fn is_ani(&self) -> Result<bool> {
        Ok(self.is_atomic()? && !self.is_irreducible()?)
    }

    /// `S ∪ {h}`; only special gaps give a semigroup.
    pub fn unitary_extension(&self, h: &Point) -> Result<Gns> {
        if h.dim() != self.dim() {
            return Err(GnsError::DimensionMismatch {
                expected: self.dim(),
                found: h.dim(),
            });
        }
        if !self.special_gaps().contains(h) {
            return Err(GnsError::NotSpecialGap(h.clone()));
        }
        Ok(Gns::from_valid(self.gaps().without(h)))
    }

    pub fn profile(&self) -> GnsProfile {
        GnsProfile::of(self)
    }
}

/// Every invariant of a semigroup, computed once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GnsProfile {
    pub corner: Point,
    pub genus: usize,
    pub frobenius: Option<Point>,
    pub pf: BTreeSet<Point>,
    pub eh: BTreeSet<Point>,
    pub ceh: BTreeSet<Point>,
    /// `false` for genus 0, where the notion does not apply.
    pub irreducible: bool,
    pub atomic: bool,
    pub ani: bool,
    pub slabs: Vec<Slab>,
}

impl GnsProfile {
    pub fn of(s: &Gns) -> Self {
        let pf = s.pseudo_frobenius();
        let eh: BTreeSet<Point> = pf
            .iter()
            .filter(|x| s.contains(&x.scale(2)))
            .cloned()
            .collect();
        let ceh = s.ceh_from_slabs(&eh);
        debug_assert_eq!(ceh, s.ceh_by_definition(&eh));
        let proper = s.genus() > 0;
        let irreducible = proper && eh.len() == 1;
        let atomic = proper && ceh.len() <= 1;
        GnsProfile {
            corner: s.corner(),
            genus: s.genus(),
            frobenius: s.frobenius(),
            irreducible,
            atomic,
            ani: atomic && !irreducible,
            slabs: s.slabs(),
            pf,
            eh,
            ceh,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("profiles always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gapset::GapSet;

    fn gns(dim: usize, pts: &[&[u32]]) -> Gns {
        Gns::new(GapSet::new(dim, pts.iter().map(|c| Point::new(c.to_vec()))).unwrap()).unwrap()
    }

    fn set(pts: &[&[u32]]) -> BTreeSet<Point> {
        pts.iter().map(|c| Point::new(c.to_vec())).collect()
    }

    fn fig1() -> Gns {
        gns(2, &[&[0, 1], &[1, 0], &[1, 1], &[1, 2], &[3, 0]])
    }

    fn irreducible_53() -> Gns {
        gns(
            2,
            &[&[1, 0], &[1, 1], &[1, 2], &[2, 0], &[2, 1], &[4, 0], &[4, 1], &[4, 2]],
        )
    }

    fn non_atom_44() -> Gns {
        gns(
            2,
            &[
                &[1, 0], &[1, 1], &[2, 0], &[2, 1], &[2, 2],
                &[2, 3], &[3, 0], &[3, 1], &[3, 2], &[3, 3],
            ],
        )
    }

    fn ordinary_32() -> Gns {
        gns(2, &[&[0, 1], &[1, 0], &[1, 1], &[2, 0], &[2, 1]])
    }

    #[test]
    fn corner_examples() {
        assert_eq!(fig1().corner(), Point::from([4, 3]));
        assert_eq!(Gns::full(2).corner(), Point::from([0, 0]));
        assert_eq!(irreducible_53().corner(), Point::from([5, 3]));
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(non_atom_44().frobenius(), Some(Point::from([3, 3])));
        assert_eq!(fig1().frobenius(), None);
        assert_eq!(gns(1, &[&[1]]).frobenius(), Some(Point::from([1])));
        assert_eq!(Gns::full(1).frobenius(), None);
    }

    #[test]
    fn pseudo_frobenius_examples() {
        assert_eq!(fig1().pseudo_frobenius(), set(&[&[0, 1], &[1, 1], &[1, 2], &[3, 0]]));
        assert_eq!(gns(1, &[&[1]]).pseudo_frobenius(), set(&[&[1]]));
        // no nonzero element of 𝒪(c) lies in the box, so every gap is PF;
        // (1,0) only drops out of EH because 2·(1,0) is a gap
        let o = ordinary_32();
        assert_eq!(o.pseudo_frobenius(), o.gaps().as_set().clone());
        assert_eq!(o.special_gaps(), set(&[&[0, 1], &[1, 1], &[2, 0], &[2, 1]]));
    }

    #[test]
    fn special_gap_examples() {
        assert_eq!(fig1().special_gaps(), set(&[&[0, 1], &[1, 1], &[1, 2], &[3, 0]]));
        assert_eq!(irreducible_53().special_gaps(), set(&[&[4, 2]]));
        assert_eq!(non_atom_44().special_gaps(), set(&[&[2, 3], &[3, 3]]));
    }

    #[test]
    fn slab_examples() {
        let s = irreducible_53();
        let first = s.slab(0).unwrap();
        assert_eq!(first.h, set(&[&[4, 0], &[4, 1], &[4, 2]]));
        assert_eq!(first.mh, set(&[&[4, 2]]));
        assert_eq!(s.slab(1).unwrap().h, set(&[&[1, 2], &[4, 2]]));

        let d1 = gns(1, &[&[1], &[2], &[5]]);
        let top = d1.slab(0).unwrap();
        assert_eq!(top.h, set(&[&[5]]));
        assert_eq!(top.mh, set(&[&[5]]));

        assert!(matches!(s.slab(2), Err(GnsError::AxisOutOfRange { .. })));
        assert_eq!(Gns::full(2).slab(0), Err(GnsError::GenusZero));
    }

    #[test]
    fn corner_special_gap_examples() {
        assert_eq!(fig1().corner_special_gaps(), set(&[&[0, 1], &[1, 1]]));
        assert_eq!(
            ordinary_32().corner_special_gaps(),
            set(&[&[0, 1], &[1, 1], &[2, 0], &[2, 1]])
        );
        assert_eq!(irreducible_53().corner_special_gaps(), set(&[&[4, 2]]));
        for s in [fig1(), ordinary_32(), irreducible_53(), non_atom_44()] {
            assert_eq!(s.corner_special_gaps(), s.corner_special_gaps_by_definition());
        }
    }

    #[test]
    fn irreducibility_examples() {
        assert!(irreducible_53().is_irreducible().unwrap());
        assert!(!non_atom_44().is_irreducible().unwrap());
        assert_eq!(Gns::full(2).is_irreducible(), Err(GnsError::GenusZero));
    }

    #[test]
    fn irreducibility_via_splits() {
        assert!(irreducible_53().irreducible_via_decompositions().unwrap());
        assert!(!non_atom_44().irreducible_via_decompositions().unwrap());
        // 5 = 1 + 4 with both summands gaps
        let d1 = gns(1, &[&[1], &[2], &[3], &[4], &[5]]);
        assert!(!d1.irreducible_via_decompositions().unwrap());
        assert!(!d1.is_irreducible().unwrap());
        assert_eq!(fig1().irreducible_via_decompositions(), Err(GnsError::NoFrobenius));
    }

    #[test]
    fn atomicity_examples() {
        assert!(!non_atom_44().is_atomic().unwrap());
        let atom = gns(2, &[&[0, 1], &[1, 0], &[1, 1], &[2, 0], &[2, 1], &[2, 2], &[3, 1]]);
        assert_eq!(atom.special_gaps(), set(&[&[2, 1], &[2, 2], &[3, 1]]));
        assert_eq!(atom.corner_special_gaps(), set(&[&[2, 1]]));
        assert!(atom.is_atomic().unwrap());
        assert!(atom.is_ani().unwrap());
        assert!(irreducible_53().is_atomic().unwrap());
        assert!(!irreducible_53().is_ani().unwrap());
        assert!(!non_atom_44().is_ani().unwrap());
    }

    #[test]
    fn unitary_extension_examples() {
        let ext = fig1().unitary_extension(&Point::from([0, 1])).unwrap();
        assert_eq!(ext.gaps(), gns(2, &[&[1, 0], &[1, 1], &[1, 2], &[3, 0]]).gaps());
        let s2 = ordinary_32().unitary_extension(&Point::from([1, 1])).unwrap();
        assert_eq!(s2, gns(2, &[&[0, 1], &[1, 0], &[2, 0], &[2, 1]]));
        assert_eq!(
            fig1().unitary_extension(&Point::from([1, 0])),
            Err(GnsError::NotSpecialGap(Point::from([1, 0])))
        );
    }

    #[test]
    fn genus_zero_profile() {
        let p = Gns::full(3).profile();
        assert_eq!(p.corner, Point::zero(3));
        assert_eq!(p.genus, 0);
        assert!(p.pf.is_empty() && p.eh.is_empty() && p.ceh.is_empty());
        assert!(p.frobenius.is_none());
        assert!(!p.irreducible && !p.atomic && !p.ani);
        assert!(p.slabs.is_empty());
    }

    #[test]
    fn profile_json_layout() {
        let json = fig1().profile().to_json();
        assert!(json.starts_with(
            r#"{"corner":[4,3],"genus":5,"frobenius":null,"pf":[[0,1],[1,1],[1,2],[3,0]],"eh":[[0,1],[1,1],[1,2],[3,0]],"ceh":[[0,1],[1,1]],"irreducible":false,"atomic":false,"ani":false,"slabs":[{"i":1,"h":[[3,0]],"mh":[[3,0]]}"#
        ), "{json}");
    }
}
