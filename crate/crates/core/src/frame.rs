//! Bitmask kernel for semigroups whose gaps live in a fixed lattice box.
//!
//! A [`BoxFrame`] indexes the box `{x : 0 ≤ x ≤ c − 1}` in lexicographic
//! order with mixed-radix strides, so index 0 is the origin and
//! `index(x + s) = index(x) + index(s)` whenever `x + s` stays in the box.
//! Gap sets become `u128` masks and translation by `x` becomes a shift,
//! which keeps the exhaustive sweeps cheap.

use std::collections::BTreeSet;

use crate::error::{GnsError, Result};
use crate::gapset::{GapSet, Gns};
use crate::order::MonomialOrder;
use crate::point::Point;

pub type Mask = u128;

/// Largest box the kernel can index.
pub const MAX_BOX_POINTS: usize = Mask::BITS as usize;

#[derive(Clone, Debug)]
pub struct BoxFrame {
    corner: Point,
    points: Vec<Point>,
    strides: Vec<usize>,
    /// Every nonzero point of the box.
    full: Mask,
    /// `reach[x]`: the points `s` with `x + s` inside the box.
    reach: Vec<Mask>,
    /// `double[x]`: index of `2x` if it lies inside the box.
    double: Vec<Option<u8>>,
    /// `slabs[i]`: points whose `i`-th coordinate is `cᵢ − 1`.
    slabs: Vec<Mask>,
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub Mask);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

#[inline]
pub fn bit(i: usize) -> Mask {
    1 << i
}

impl BoxFrame {
    /// Frame for the box below `corner`. Every coordinate of `corner` must be
    /// at least 1.
    pub fn new(corner: &Point) -> Result<Self> {
        if corner.dim() == 0 {
            return Err(GnsError::ZeroDimension);
        }
        if corner.coords().contains(&0) {
            return Err(GnsError::InvalidCorner(corner.clone()));
        }
        let size = corner
            .coords()
            .iter()
            .try_fold(1usize, |acc, &c| acc.checked_mul(c as usize))
            .unwrap_or(usize::MAX);
        if size > MAX_BOX_POINTS {
            return Err(GnsError::BoxTooLarge {
                corner: corner.clone(),
                size,
                max: MAX_BOX_POINTS,
            });
        }
        let top = corner.minus_ones().expect("coordinates are positive");
        let points: Vec<Point> = top.box_below().collect();
        debug_assert_eq!(points.len(), size);

        let dim = corner.dim();
        let mut strides = vec![1usize; dim];
        for i in (0..dim.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * corner.coords()[i + 1] as usize;
        }

        let mut frame = BoxFrame {
            corner: corner.clone(),
            full: (1..size).fold(0, |m, i| m | bit(i)),
            reach: Vec::with_capacity(size),
            double: Vec::with_capacity(size),
            slabs: vec![0; dim],
            points,
            strides,
        };
        for x in 0..size {
            let px = &frame.points[x];
            let mut reach = 0;
            for (s, ps) in frame.points.iter().enumerate() {
                if px.add(ps).leq(&top) {
                    reach |= bit(s);
                }
            }
            frame.reach.push(reach);
            frame
                .double
                .push(frame.index_of(&px.scale(2)).map(|i| i as u8));
            for (axis, &t) in top.coords().iter().enumerate() {
                if px.coords()[axis] == t && x != 0 {
                    frame.slabs[axis] |= bit(x);
                }
            }
        }
        Ok(frame)
    }

    pub fn corner(&self) -> &Point {
        &self.corner
    }

    pub fn dim(&self) -> usize {
        self.corner.dim()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Mask of every nonzero point, i.e. the ordinary semigroup.
    pub fn full(&self) -> Mask {
        self.full
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        if p.dim() != self.dim() {
            return None;
        }
        let mut idx = 0;
        for ((&x, &c), &stride) in p.coords().iter().zip(self.corner.coords()).zip(&self.strides) {
            if x >= c {
                return None;
            }
            idx += x as usize * stride;
        }
        Some(idx)
    }

    /// Mask of a set of points, `None` if one falls outside the box.
    pub fn mask_of<'a, I>(&self, points: I) -> Option<Mask>
    where
        I: IntoIterator<Item = &'a Point>,
    {
        points
            .into_iter()
            .try_fold(0, |m, p| self.index_of(p).map(|i| m | bit(i)))
    }

    pub fn points_of(&self, mask: Mask) -> BTreeSet<Point> {
        Bits(mask).map(|i| self.points[i].clone()).collect()
    }

    pub fn to_gapset(&self, mask: Mask) -> GapSet {
        GapSet::from_set_unchecked(self.dim(), self.points_of(mask))
    }

    pub fn to_gns(&self, mask: Mask) -> Gns {
        Gns::from_valid(self.to_gapset(mask))
    }

    /// Translate the points of `set` by point `x`, dropping those that leave
    /// the box.
    #[inline]
    pub fn translate(&self, set: Mask, x: usize) -> Mask {
        (set & self.reach[x]) << x
    }

    /// Closure of the complement under addition.
    pub fn is_valid(&self, gaps: Mask) -> bool {
        let members = self.full & !gaps;
        Bits(members).all(|s| self.translate(members, s) & gaps == 0)
    }

    pub fn pseudo_frobenius(&self, gaps: Mask) -> Mask {
        let members = self.full & !gaps;
        Bits(gaps)
            .filter(|&x| self.translate(members, x) & gaps == 0)
            .fold(0, |m, x| m | bit(x))
    }

    pub fn special_gaps(&self, gaps: Mask) -> Mask {
        let pf = self.pseudo_frobenius(gaps);
        Bits(pf)
            .filter(|&x| match self.double[x] {
                Some(d) => gaps & bit(d as usize) == 0,
                None => true,
            })
            .fold(0, |m, x| m | bit(x))
    }

    /// Whether the semigroup has exactly this frame's corner: every top slab
    /// holds a gap.
    pub fn has_frame_corner(&self, gaps: Mask) -> bool {
        self.slabs.iter().all(|&s| gaps & s != 0)
    }

    /// Corner special gaps among `special` (which must be the special gaps
    /// of `gaps`, and `gaps` must have this frame's corner).
    pub fn corner_special_gaps(&self, gaps: Mask, special: Mask) -> Mask {
        let lonely = self
            .slabs
            .iter()
            .map(|&s| gaps & s)
            .filter(|m| m.count_ones() == 1)
            .fold(0, |acc, m| acc | m);
        special & !lonely
    }

    /// Rank of each box index under a monomial order.
    pub fn ranks(&self, order: MonomialOrder) -> Vec<u8> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| order.cmp(&self.points[a], &self.points[b]));
        let mut rank = vec![0u8; self.len()];
        for (r, i) in idx.into_iter().enumerate() {
            rank[i] = r as u8;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(c: [u32; N]) -> Point {
        Point::from(c)
    }

    #[test]
    fn indexing_is_lexicographic_and_additive() {
        let f = BoxFrame::new(&p([4, 3])).unwrap();
        assert_eq!(f.len(), 12);
        for (i, q) in p([3, 2]).box_below().enumerate() {
            assert_eq!(f.index_of(&q), Some(i));
            assert_eq!(f.point(i), &q);
        }
        let a = f.index_of(&p([1, 1])).unwrap();
        let b = f.index_of(&p([2, 0])).unwrap();
        assert_eq!(f.index_of(&p([3, 1])), Some(a + b));
        assert_eq!(f.index_of(&p([4, 0])), None);
    }

    #[test]
    fn rejects_bad_corners() {
        assert!(matches!(BoxFrame::new(&p([0, 3])), Err(GnsError::InvalidCorner(_))));
        assert!(matches!(
            BoxFrame::new(&p([12, 12])),
            Err(GnsError::BoxTooLarge { size: 144, .. })
        ));
        assert!(BoxFrame::new(&p([128])).is_ok());
    }

    #[test]
    fn kernel_matches_reference_on_every_subset() {
        // every gap subset of the (3,3) box, against the set-based code
        let f = BoxFrame::new(&p([3, 3])).unwrap();
        let nonzero: Vec<usize> = (1..f.len()).collect();
        for bits in 0u32..(1 << nonzero.len()) {
            let mask = nonzero
                .iter()
                .enumerate()
                .filter(|(k, _)| bits >> k & 1 == 1)
                .fold(0, |m, (_, &i)| m | bit(i));
            let gaps = f.to_gapset(mask);
            assert_eq!(f.is_valid(mask), gaps.is_valid(), "{gaps}");
            if !gaps.is_valid() {
                continue;
            }
            let s = Gns::new(gaps).unwrap();
            assert_eq!(f.points_of(f.pseudo_frobenius(mask)), s.pseudo_frobenius());
            let eh = f.special_gaps(mask);
            assert_eq!(f.points_of(eh), s.special_gaps());
            if f.has_frame_corner(mask) {
                assert_eq!(&s.corner(), f.corner());
                assert_eq!(
                    f.points_of(f.corner_special_gaps(mask, eh)),
                    s.corner_special_gaps_by_definition()
                );
            } else {
                assert_ne!(&s.corner(), f.corner());
            }
        }
    }
}
