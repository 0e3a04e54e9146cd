//! Gap sets and validated semigroups.
//!
//! A generalized numerical semigroup `S ⊆ ℕ₀^d` is stored only through its
//! finite gap set `H(S) = ℕ₀^d ∖ S`. Membership in `S` is "not a gap".

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GnsError, Result};
use crate::point::{self, Point};

/// Wire form: `{"d": 2, "gaps": [[0,1],[1,0]]}`.
#[derive(Serialize, Deserialize)]
struct GapSetDoc {
    d: usize,
    gaps: Vec<Point>,
}

/// A finite set of nonzero points of a fixed dimension, kept in lexicographic
/// order. Not necessarily closed; see [`GapSet::validate`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GapSetDoc", into = "GapSetDoc")]
pub struct GapSet {
    dim: usize,
    gaps: BTreeSet<Point>,
}

impl GapSet {
    /// Builds a gap set, rejecting the zero vector, duplicates and points of
    /// the wrong dimension.
    pub fn new<I>(dim: usize, gaps: I) -> Result<Self>
    where
        I: IntoIterator<Item = Point>,
    {
        if dim == 0 {
            return Err(GnsError::ZeroDimension);
        }
        let mut set = BTreeSet::new();
        for g in gaps {
            if g.dim() != dim {
                return Err(GnsError::DimensionMismatch {
                    expected: dim,
                    found: g.dim(),
                });
            }
            if g.is_zero() {
                return Err(GnsError::ZeroGap);
            }
            if set.contains(&g) {
                return Err(GnsError::DuplicateGap(g));
            }
            set.insert(g);
        }
        Ok(GapSet { dim, gaps: set })
    }

    pub fn empty(dim: usize) -> Self {
        assert!(dim > 0, "dimension must be positive");
        GapSet {
            dim,
            gaps: BTreeSet::new(),
        }
    }

    pub(crate) fn from_set_unchecked(dim: usize, gaps: BTreeSet<Point>) -> Self {
        debug_assert!(gaps.iter().all(|g| g.dim() == dim && !g.is_zero()));
        GapSet { dim, gaps }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn is_gap(&self, p: &Point) -> bool {
        self.gaps.contains(p)
    }

    /// Membership in the complement. Points off the lattice (`None`) are not
    /// members.
    pub fn in_complement(&self, p: Option<&Point>) -> bool {
        p.is_some_and(|p| !self.gaps.contains(p))
    }

    /// Gaps in lexicographic order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Point> + Clone {
        self.gaps.iter()
    }

    pub fn as_set(&self) -> &BTreeSet<Point> {
        &self.gaps
    }

    pub fn lub(&self) -> Option<Point> {
        point::lub(&self.gaps).ok()
    }

    pub fn is_subset(&self, other: &GapSet) -> bool {
        self.gaps.is_subset(&other.gaps)
    }

    pub fn without(&self, p: &Point) -> GapSet {
        let mut gaps = self.gaps.clone();
        gaps.remove(p);
        GapSet { dim: self.dim, gaps }
    }

    /// Gap-set union, i.e. intersection of the complements.
    pub fn union(&self, other: &GapSet) -> GapSet {
        debug_assert_eq!(self.dim, other.dim);
        GapSet {
            dim: self.dim,
            gaps: self.gaps.union(&other.gaps).cloned().collect(),
        }
    }

    /// Checks that the complement is closed under addition: every gap `h`
    /// split as `h = x + y` with `x, y` nonzero has a gap among `x, y`.
    ///
    /// On failure the first offending split is reported.
    pub fn validate(&self) -> Result<()> {
        for h in &self.gaps {
            for x in h.box_below() {
                if x.is_zero() || &x == h {
                    continue;
                }
                let y = h.checked_sub(&x).expect("x lies below h");
                // each unordered split once
                if y < x {
                    continue;
                }
                if !self.is_gap(&x) && !self.is_gap(&y) {
                    let (left, right) = if x > y { (x, y) } else { (y, x) };
                    return Err(GnsError::NotClosed {
                        sum: h.clone(),
                        left,
                        right,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("gap sets always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| GnsError::Parse(e.to_string()))
    }
}

impl TryFrom<GapSetDoc> for GapSet {
    type Error = GnsError;

    fn try_from(doc: GapSetDoc) -> Result<Self> {
        GapSet::new(doc.d, doc.gaps)
    }
}

impl From<GapSet> for GapSetDoc {
    fn from(g: GapSet) -> Self {
        GapSetDoc {
            d: g.dim,
            gaps: g.gaps.into_iter().collect(),
        }
    }
}

impl fmt::Debug for GapSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.gaps).finish()
    }
}

impl fmt::Display for GapSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.gaps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

/// Predicate form of [`GapSet::validate`].
pub fn validate_gapset(h: &GapSet) -> bool {
    h.is_valid()
}

/// A generalized numerical semigroup, i.e. a gap set whose complement is
/// closed under addition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GapSet", into = "GapSet")]
pub struct Gns(GapSet);

impl Gns {
    pub fn new(gaps: GapSet) -> Result<Self> {
        gaps.validate()?;
        Ok(Gns(gaps))
    }

    /// ℕ₀^d itself.
    pub fn full(dim: usize) -> Self {
        Gns(GapSet::empty(dim))
    }

    pub(crate) fn from_valid(gaps: GapSet) -> Self {
        debug_assert!(gaps.is_valid(), "not a semigroup: {gaps}");
        Gns(gaps)
    }

    pub fn gaps(&self) -> &GapSet {
        &self.0
    }

    pub fn into_gaps(self) -> GapSet {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn genus(&self) -> usize {
        self.0.genus()
    }

    pub fn is_gap(&self, p: &Point) -> bool {
        self.0.is_gap(p)
    }

    /// `p ∈ S`.
    pub fn contains(&self, p: &Point) -> bool {
        !self.0.is_gap(p)
    }
}

impl TryFrom<GapSet> for Gns {
    type Error = GnsError;

    fn try_from(g: GapSet) -> Result<Self> {
        Gns::new(g)
    }
}

impl From<Gns> for GapSet {
    fn from(s: Gns) -> Self {
        s.0
    }
}

impl fmt::Debug for Gns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gns{:?}", self.0)
    }
}

impl fmt::Display for Gns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ℕ₀^{} ∖ {}", self.dim(), self.0)
    }
}
