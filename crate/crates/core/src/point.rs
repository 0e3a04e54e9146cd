//! Lattice points of ℕ₀^d and the natural partial order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GnsError, Result};

/// An element of ℕ₀^d.
///
/// The derived `Ord` is the lexicographic order, which is also the canonical
/// storage order for gap sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<u32>);

impl Point {
    pub fn new(coords: impl Into<Vec<u32>>) -> Self {
        Point(coords.into())
    }

    pub fn zero(dim: usize) -> Self {
        Point(vec![0; dim])
    }

    /// The all-ones vector 𝟏.
    pub fn ones(dim: usize) -> Self {
        Point(vec![1; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Total degree, the sum of the coordinates.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub(crate) fn check_dim(&self, other: &Point) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(GnsError::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            })
        }
    }

    /// `self ≤ other` componentwise. Both points must have the same dimension.
    pub fn leq(&self, other: &Point) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self < other`: componentwise `≤` and distinct.
    pub fn strictly_below(&self, other: &Point) -> bool {
        self != other && self.leq(other)
    }

    pub fn add(&self, other: &Point) -> Point {
        debug_assert_eq!(self.dim(), other.dim());
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> Point {
        Point(self.0.iter().map(|&a| a * k).collect())
    }

    /// `self − other`, or `None` when some coordinate would be negative
    /// (the difference then lies outside ℕ₀^d).
    pub fn checked_sub(&self, other: &Point) -> Option<Point> {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Point)
    }

    /// `self − 𝟏`, or `None` if a coordinate is zero.
    pub fn minus_ones(&self) -> Option<Point> {
        self.checked_sub(&Point::ones(self.dim()))
    }

    pub fn plus_ones(&self) -> Point {
        self.add(&Point::ones(self.dim()))
    }

    /// Signed difference `self − other`, used by closed-form predicates that
    /// may leave ℕ₀^d.
    pub fn signed_sub(&self, other: &Point) -> Vec<i64> {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| i64::from(a) - i64::from(b))
            .collect()
    }

    /// All points `x` with `0 ≤ x ≤ self`, in lexicographic order.
    pub fn box_below(&self) -> BoxIter {
        BoxIter {
            upper: self.0.clone(),
            next: Some(vec![0; self.dim()]),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Vec<u32>> for Point {
    fn from(v: Vec<u32>) -> Self {
        Point(v)
    }
}

impl<const N: usize> From<[u32; N]> for Point {
    fn from(v: [u32; N]) -> Self {
        Point(v.to_vec())
    }
}

/// Odometer over the lattice box `[0, upper]`.
pub struct BoxIter {
    upper: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl Iterator for BoxIter {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut axis = succ.len();
        loop {
            if axis == 0 {
                break;
            }
            axis -= 1;
            if succ[axis] < self.upper[axis] {
                succ[axis] += 1;
                self.next = Some(succ);
                break;
            }
            succ[axis] = 0;
        }
        Some(Point(current))
    }
}

/// Natural partial order: `x ≤ y` iff `xᵢ ≤ yᵢ` for all `i`.
pub fn partial_leq(x: &Point, y: &Point) -> Result<bool> {
    x.check_dim(y)?;
    Ok(x.leq(y))
}

/// Coordinatewise maximum of a non-empty set of points.
pub fn lub<'a, I>(points: I) -> Result<Point>
where
    I: IntoIterator<Item = &'a Point>,
{
    let mut iter = points.into_iter();
    let first = iter.next().ok_or(GnsError::EmptySet)?;
    let mut acc = first.0.clone();
    for p in iter {
        first.check_dim(p)?;
        for (a, &b) in acc.iter_mut().zip(&p.0) {
            *a = (*a).max(b);
        }
    }
    Ok(Point(acc))
}

/// Maximal elements of a set under the natural partial order, in the input
/// order.
pub fn maximals<'a, I>(points: I) -> Vec<Point>
where
    I: IntoIterator<Item = &'a Point>,
    I::IntoIter: Clone,
{
    let iter = points.into_iter();
    iter.clone()
        .filter(|p| !iter.clone().any(|q| p.strictly_below(q)))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(c: [u32; N]) -> Point {
        Point::from(c)
    }

    #[test]
    fn partial_order_examples() {
        assert!(partial_leq(&p([1, 2]), &p([3, 2])).unwrap());
        assert!(!partial_leq(&p([1, 2]), &p([2, 1])).unwrap());
        assert!(partial_leq(&p([0, 1]), &p([1, 1])).unwrap());
        assert!(matches!(
            partial_leq(&p([1]), &p([1, 1])),
            Err(GnsError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn lub_examples() {
        let fig1 = [p([0, 1]), p([1, 0]), p([1, 1]), p([1, 2]), p([3, 0])];
        assert_eq!(lub(&fig1).unwrap(), p([3, 2]));
        assert_eq!(lub(&[p([5, 7])]).unwrap(), p([5, 7]));
        assert_eq!(lub(&[p([1, 0]), p([0, 1])]).unwrap(), p([1, 1]));
        assert_eq!(lub(&[]), Err(GnsError::EmptySet));
        let l = lub(&fig1).unwrap();
        assert_eq!(lub(std::slice::from_ref(&l)).unwrap(), l);
    }

    #[test]
    fn box_iteration_is_lexicographic_and_complete() {
        let pts: Vec<Point> = p([2, 1]).box_below().collect();
        assert_eq!(
            pts,
            vec![p([0, 0]), p([0, 1]), p([1, 0]), p([1, 1]), p([2, 0]), p([2, 1])]
        );
        assert_eq!(p([3]).box_below().count(), 4);
        assert_eq!(p([1, 2, 3]).box_below().count(), 2 * 3 * 4);
    }

    #[test]
    fn subtraction_leaves_the_orthant() {
        assert_eq!(p([3, 3]).checked_sub(&p([1, 2])), Some(p([2, 1])));
        assert_eq!(p([3, 1]).checked_sub(&p([1, 2])), None);
        assert_eq!(p([1, 3]).minus_ones(), Some(p([0, 2])));
        assert_eq!(p([0, 3]).minus_ones(), None);
    }

    #[test]
    fn maximal_elements() {
        let pts = [p([0, 1]), p([1, 1]), p([1, 2]), p([3, 0])];
        assert_eq!(maximals(&pts), vec![p([1, 2]), p([3, 0])]);
    }
}
