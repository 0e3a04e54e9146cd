//! Closed-form criteria for two fixed gaps `g₁ < g₂`, and exhaustive
//! verification of the structural statements about corner special gaps,
//! atoms and irreducibility over every semigroup with corner below a bound.
//!
//! The sweeps deliberately avoid the shortcuts they are meant to test:
//! irreducibility and atomicity are decided from the intersection
//! definitions, maximality by inclusion, and corner special gaps by
//! recomputing the corner of each unitary extension.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{family_masks, maximal_elements, FamilyQuery};
use crate::error::{GnsError, Result};
use crate::frame::{bit, Bits, BoxFrame, Mask};
use crate::gapset::Gns;
use crate::point::{maximals, Point};

/// Two gaps with `g₁ < g₂` in the natural partial order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapPair {
    pub g1: Point,
    pub g2: Point,
}

impl GapPair {
    pub fn new(g1: Point, g2: Point) -> Result<Self> {
        g1.check_dim(&g2)?;
        if !g1.strictly_below(&g2) {
            return Err(GnsError::NotIncreasingPair { g1, g2 });
        }
        Ok(GapPair { g1, g2 })
    }

    /// The corner `g₂ + 𝟏` shared by every semigroup in the pair's families.
    pub fn corner(&self) -> Point {
        self.g2.plus_ones()
    }

    /// `g₂ − g₁`, nonzero and in ℕ₀^d.
    pub fn difference(&self) -> Point {
        self.g2.checked_sub(&self.g1).expect("g1 < g2")
    }

    /// `2g₁ − g₂`, which may leave ℕ₀^d.
    pub fn excess(&self) -> Vec<i64> {
        self.g1.scale(2).signed_sub(&self.g2)
    }

    /// `F(g₂ + 𝟏; g₁, g₂)`.
    pub fn family(&self) -> FamilyQuery {
        FamilyQuery::new(self.corner()).forcing([self.g1.clone(), self.g2.clone()])
    }
}

impl fmt::Display for GapPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g1={} g2={}", self.g1, self.g2)
    }
}

/// The positive `k` with `y = k·x`, if any.
pub fn is_multiple(y: &Point, x: &Point) -> Result<Option<u32>> {
    y.check_dim(x)?;
    if x.is_zero() {
        return Err(GnsError::ZeroBase);
    }
    let y: Vec<i64> = y.coords().iter().map(|&c| i64::from(c)).collect();
    let x: Vec<i64> = x.coords().iter().map(|&c| i64::from(c)).collect();
    Ok(signed_multiple(&y, &x))
}

/// `y = k·x` with `k ≥ 1` over signed vectors; `x` must be nonzero.
fn signed_multiple(y: &[i64], x: &[i64]) -> Option<u32> {
    let mut k: Option<i64> = None;
    for (&a, &b) in y.iter().zip(x) {
        if b == 0 {
            if a != 0 {
                return None;
            }
            continue;
        }
        if a % b != 0 {
            return None;
        }
        let q = a / b;
        if q < 1 || k.is_some_and(|k| k != q) {
            return None;
        }
        k = Some(q);
    }
    k.and_then(|k| u32::try_from(k).ok())
}

fn signed(p: &Point) -> Vec<i64> {
    p.coords().iter().map(|&c| i64::from(c)).collect()
}

fn to_point(v: &[i64]) -> Option<Point> {
    v.iter()
        .map(|&c| u32::try_from(c).ok())
        .collect::<Option<Vec<_>>>()
        .map(Point::new)
}

/// `g₂` is a multiple of `g₂ − g₁` and `2g₁ ≠ g₂`: then no Frobenius
/// semigroup with corner `g₂ + 𝟏` avoiding `g₁` is irreducible.
pub fn ani_sufficient(g: &GapPair) -> bool {
    signed_multiple(&signed(&g.g2), &signed(&g.difference())).is_some() && g.g1.scale(2) != g.g2
}

/// Some semigroup has special gaps exactly `{g₁, g₂}`: requires `g₂ < 2g₁`
/// and either `g₂ = k(g₂ − g₁)` or `g₂` not a multiple of `2g₁ − g₂`.
pub fn exists_eh_pair(g: &GapPair) -> bool {
    let double = g.g1.scale(2);
    if !g.g2.strictly_below(&double) {
        return false;
    }
    let excess = g.excess();
    signed_multiple(&signed(&g.g2), &signed(&g.difference())).is_some()
        || signed_multiple(&signed(&g.g2), &excess).is_none()
}

/// Truth value of a closed form that is only defined on part of its domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosedForm {
    Holds,
    Fails,
    /// The criterion refers to a multiple of a vector with a negative
    /// coordinate, which it does not define.
    Inapplicable,
}

impl ClosedForm {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            ClosedForm::Holds => Some(true),
            ClosedForm::Fails => Some(false),
            ClosedForm::Inapplicable => None,
        }
    }
}

/// Criterion for every member of `𝓜𝓕(g₂ + 𝟏; g₁, g₂)` to be irreducible:
/// `2g₁ ≤ g₂`, or `g₂` is not a multiple of `g₂ − g₁` but is a multiple of
/// `2g₁ − g₂`.
pub fn all_maximals_irreducible(g: &GapPair) -> ClosedForm {
    if g.g1.scale(2).leq(&g.g2) {
        return ClosedForm::Holds;
    }
    if signed_multiple(&signed(&g.g2), &signed(&g.difference())).is_some() {
        return ClosedForm::Fails;
    }
    let excess = g.excess();
    if excess.iter().any(|&c| c < 0) {
        return ClosedForm::Inapplicable;
    }
    if signed_multiple(&signed(&g.g2), &excess).is_some() {
        ClosedForm::Holds
    } else {
        ClosedForm::Fails
    }
}

/// Search for a member of `𝓕(g₂ + 𝟏; g₁, g₂)` whose special gaps are exactly
/// `{g₁, g₂}`.
pub fn find_eh_pair(g: &GapPair) -> Result<Option<Gns>> {
    let (frame, masks) = family_masks(&g.family())?;
    let target = frame
        .mask_of([&g.g1, &g.g2])
        .expect("the pair lies in its own box");
    let mut hits: Vec<Gns> = masks
        .into_par_iter()
        .filter(|&m| frame.special_gaps(m) == target)
        .map(|m| frame.to_gns(m))
        .collect();
    hits.sort();
    Ok(hits.into_iter().next())
}

/// Whether every member of `𝓜𝓕(g₂ + 𝟏; g₁, g₂)` is irreducible, by
/// enumeration.
pub fn all_maximals_irreducible_by_search(g: &GapPair) -> Result<bool> {
    Ok(maximal_elements(&g.family())?
        .iter()
        .all(|s| s.special_gaps().len() == 1))
}

/// `M̃_{g₁,g₂}(S)`: maximal gaps `x` with `2x ∈ S` and `gᵢ − x ∉ S` for both
/// `i`, where a difference with a negative coordinate counts as `∉ S`.
///
/// Requires `S ∈ 𝓕(g₂ + 𝟏; g₁, g₂)`.
pub fn m_tilde(s: &Gns, g: &GapPair) -> Result<BTreeSet<Point>> {
    s.gaps().lub().map(|l| l.check_dim(&g.g1)).transpose()?;
    for gi in [&g.g1, &g.g2] {
        if !s.is_gap(gi) {
            return Err(GnsError::NotAGap(gi.clone()));
        }
    }
    if s.corner() != g.corner() {
        return Err(GnsError::InvalidCorner(s.corner()));
    }
    let outside = |gi: &Point, x: &Point| match gi.checked_sub(x) {
        Some(d) => s.is_gap(&d),
        None => true,
    };
    let candidates: Vec<&Point> = s
        .gaps()
        .iter()
        .filter(|x| s.contains(&x.scale(2)) && outside(&g.g1, x) && outside(&g.g2, x))
        .collect();
    Ok(maximals(candidates).into_iter().collect())
}

/// `M_g(S)`: maximal gaps `x` with `2x ≠ g` and `g − x ∉ S`, a difference
/// with a negative coordinate counting as `∉ S`.
pub fn m_g(s: &Gns, g: &Point) -> Result<BTreeSet<Point>> {
    if g.dim() != s.dim() {
        return Err(GnsError::DimensionMismatch {
            expected: s.dim(),
            found: g.dim(),
        });
    }
    if !s.is_gap(g) {
        return Err(GnsError::NotAGap(g.clone()));
    }
    let candidates: Vec<&Point> = s
        .gaps()
        .iter()
        .filter(|x| {
            &x.scale(2) != g
                && match g.checked_sub(x) {
                    Some(d) => s.is_gap(&d),
                    None => true,
                }
        })
        .collect();
    Ok(maximals(candidates).into_iter().collect())
}

/// A semigroup (or parameter choice) on which a statement fails.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    /// Gap set of the offending semigroup; empty when the failure concerns a
    /// parameter choice with no semigroup to show.
    pub gaps: Vec<Point>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub bound: Point,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<GapPair>,
    /// Instances examined, including vacuous ones.
    pub checked: usize,
    /// Instances on which the hypothesis did not apply.
    pub vacuous: usize,
    pub counterexamples: Vec<Counterexample>,
    pub ms: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    /// No instance satisfied the hypothesis.
    Vacuous,
    Refuted,
}

impl VerificationReport {
    pub fn verdict(&self) -> Verdict {
        if !self.counterexamples.is_empty() {
            Verdict::Refuted
        } else if self.vacuous == self.checked {
            Verdict::Vacuous
        } else {
            Verdict::Verified
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Recomputes `𝓜𝓕(g₂ + 𝟏; g₁, g₂)` and compares "every member is
/// non-irreducible" with [`ani_sufficient`].
pub fn verify_teo_ani(g: &GapPair) -> Result<VerificationReport> {
    let start = Instant::now();
    let maximal = maximal_elements(&g.family())?;
    let expected = ani_sufficient(g);
    let all_reducible = maximal.iter().all(|s| s.special_gaps().len() != 1);
    let mut counterexamples = Vec::new();
    if all_reducible != expected {
        let detail = format!(
            "closed form says {expected}, maximal family has {} members",
            maximal.len()
        );
        counterexamples = maximal
            .iter()
            .filter(|s| (s.special_gaps().len() != 1) != expected)
            .map(|s| Counterexample {
                gaps: s.gaps().iter().cloned().collect(),
                detail: detail.clone(),
            })
            .collect();
        if counterexamples.is_empty() {
            counterexamples.push(Counterexample {
                gaps: Vec::new(),
                detail,
            });
        }
    }
    Ok(VerificationReport {
        id: "teo-ani".into(),
        bound: g.corner(),
        params: Some(g.clone()),
        checked: maximal.len(),
        vacuous: 0,
        counterexamples,
        ms: start.elapsed().as_millis(),
    })
}

/// One semigroup of the universe, all sets as masks of the bound's box.
#[derive(Clone, Debug)]
pub struct Member {
    pub gns: Gns,
    pub corner: Point,
    pub gaps: Mask,
    pub pf: Mask,
    pub eh: Mask,
    /// Corner special gaps recomputed from the corner of each extension.
    pub ceh: Mask,
    /// Corner special gaps from the enumeration kernel's slab rule.
    pub ceh_kernel: Mask,
}

/// Every semigroup with positive genus and corner `≤ bound`.
pub struct Universe {
    bound: Point,
    frame: BoxFrame,
    members: Vec<Member>,
    index: HashMap<Mask, usize>,
    by_corner: BTreeMap<Point, Vec<usize>>,
    /// `levels[i][v]`: box points whose `i`-th coordinate is `v`.
    levels: Vec<Vec<Mask>>,
    supersets: Vec<Vec<u32>>,
    subsets: Vec<Vec<u32>>,
    irreducible: OnceLock<Vec<bool>>,
    atom: OnceLock<Vec<bool>>,
}

/// Valid corners `c ≤ bound` of semigroups with positive genus.
fn corners_below(bound: &Point) -> Vec<Point> {
    let top = bound.minus_ones().expect("bound coordinates are positive");
    top.box_below()
        .map(|p| p.plus_ones())
        .filter(|c| c.coords().iter().any(|&x| x > 1))
        .collect()
}

impl Universe {
    pub fn build(bound: &Point) -> Result<Self> {
        let frame = BoxFrame::new(bound)?;
        let dim = bound.dim();
        let mut levels = vec![Vec::new(); dim];
        for (axis, lv) in levels.iter_mut().enumerate() {
            *lv = (0..bound.coords()[axis])
                .map(|v| {
                    (0..frame.len())
                        .filter(|&i| frame.point(i).coords()[axis] == v)
                        .fold(0, |m, i| m | bit(i))
                })
                .collect();
        }

        let per_corner: Vec<Vec<Member>> = corners_below(bound)
            .into_par_iter()
            .map(|c| -> Result<Vec<Member>> {
                let (local, masks) = family_masks(&FamilyQuery::new(c.clone()))?;
                let to_global: Vec<usize> = (0..local.len())
                    .map(|i| frame.index_of(local.point(i)).expect("c ≤ bound"))
                    .collect();
                let lift = |m: Mask| Bits(m).fold(0, |acc, i| acc | bit(to_global[i]));
                Ok(masks
                    .into_iter()
                    .map(|m| {
                        let kernel = local.corner_special_gaps(m, local.special_gaps(m));
                        let gaps = lift(m);
                        let pf = frame.pseudo_frobenius(gaps);
                        let eh = frame.special_gaps(gaps);
                        let ceh = Bits(eh)
                            .filter(|&h| lub_plus_one(&frame, gaps & !bit(h)) == c)
                            .fold(0, |acc, h| acc | bit(h));
                        Member {
                            gns: frame.to_gns(gaps),
                            corner: c.clone(),
                            gaps,
                            pf,
                            eh,
                            ceh,
                            ceh_kernel: lift(kernel),
                        }
                    })
                    .collect())
            })
            .collect::<Result<_>>()?;
        let mut members: Vec<Member> = per_corner.into_iter().flatten().collect();
        members.sort_by(|a, b| a.gns.cmp(&b.gns));

        let index: HashMap<Mask, usize> =
            members.iter().enumerate().map(|(i, m)| (m.gaps, i)).collect();
        let mut by_corner: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
        for (i, m) in members.iter().enumerate() {
            by_corner.entry(m.corner.clone()).or_default().push(i);
        }
        // T ⊋ S as semigroups iff H(T) ⊊ H(S)
        let supersets: Vec<Vec<u32>> = members
            .par_iter()
            .map(|s| {
                members
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| t.gaps != s.gaps && t.gaps & !s.gaps == 0)
                    .map(|(j, _)| j as u32)
                    .collect()
            })
            .collect();
        let mut subsets = vec![Vec::new(); members.len()];
        for (i, sup) in supersets.iter().enumerate() {
            for &j in sup {
                subsets[j as usize].push(i as u32);
            }
        }
        Ok(Universe {
            bound: bound.clone(),
            frame,
            members,
            index,
            by_corner,
            levels,
            supersets,
            subsets,
            irreducible: OnceLock::new(),
            atom: OnceLock::new(),
        })
    }

    pub fn bound(&self) -> &Point {
        &self.bound
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn frame(&self) -> &BoxFrame {
        &self.frame
    }

    /// Members with corner `c`.
    pub fn family(&self, c: &Point) -> &[usize] {
        self.by_corner.get(c).map_or(&[], Vec::as_slice)
    }

    fn points(&self, m: Mask) -> impl Iterator<Item = &Point> + Clone {
        Bits(m).map(|i| self.frame.point(i))
    }

    fn mask(&self, p: &Point) -> Option<Mask> {
        self.frame.index_of(p).map(bit)
    }

    /// `x ∈ S` for `x ∈ ℕ₀^d`: everything outside the bound's box is in `S`.
    fn contains(&self, m: &Member, x: &Point) -> bool {
        self.mask(x).is_none_or(|b| m.gaps & b == 0)
    }

    /// Membership for a signed vector; points outside ℕ₀^d are not in `S`.
    fn contains_signed(&self, m: &Member, v: &[i64]) -> bool {
        to_point(v).is_some_and(|p| self.contains(m, &p))
    }

    fn slab(&self, m: &Member, axis: usize) -> Mask {
        m.gaps & self.levels[axis][m.corner.coords()[axis] as usize - 1]
    }

    fn frobenius(&self, m: &Member) -> Option<usize> {
        let f = m.corner.minus_ones().expect("positive genus");
        self.frame.index_of(&f).filter(|&i| m.gaps & bit(i) != 0)
    }

    fn strict_supersets(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.supersets[i].iter().map(|&j| j as usize)
    }

    /// `S` is inclusion-maximal among the semigroups with its corner that
    /// keep every point of `forced` as a gap.
    fn maximal_in_family(&self, i: usize, forced: Mask) -> bool {
        let s = &self.members[i];
        !self
            .strict_supersets(i)
            .any(|j| self.members[j].corner == s.corner && self.members[j].gaps & forced == forced)
    }

    /// Whether `S` is the intersection of two strictly larger semigroups
    /// among `candidates` (its strict supersets satisfying a filter).
    ///
    /// Both factors can be shrunk to minimal strict supersets, so only those
    /// are paired up.
    fn splits(&self, i: usize, keep: impl Fn(usize) -> bool) -> bool {
        let s = &self.members[i];
        let mut cands: Vec<usize> = self.strict_supersets(i).filter(|&j| keep(j)).collect();
        cands.sort_by_key(|&j| std::cmp::Reverse(self.members[j].gaps.count_ones()));
        let mut minimal: Vec<Mask> = Vec::new();
        for j in cands {
            let g = self.members[j].gaps;
            if !minimal.iter().any(|&m| m != g && g & !m == 0) {
                minimal.push(g);
            }
        }
        minimal
            .iter()
            .enumerate()
            .any(|(a, &x)| minimal[a + 1..].iter().any(|&y| x | y == s.gaps))
    }

    /// Irreducibility from the definition.
    pub fn irreducible(&self, i: usize) -> bool {
        self.irreducible.get_or_init(|| {
            (0..self.len())
                .into_par_iter()
                .map(|k| !self.splits(k, |_| true))
                .collect()
        })[i]
    }

    /// Atom of `𝓕(c)` from the definition.
    pub fn atom(&self, i: usize) -> bool {
        self.atom.get_or_init(|| {
            (0..self.len())
                .into_par_iter()
                .map(|k| {
                    let c = &self.members[k].corner;
                    !self.splits(k, |j| &self.members[j].corner == c)
                })
                .collect()
        })[i]
    }

    fn fail(&self, i: usize, detail: impl Into<String>) -> Outcome {
        Outcome::Fails(Counterexample {
            gaps: self.members[i].gns.gaps().iter().cloned().collect(),
            detail: detail.into(),
        })
    }

    fn show(&self, m: Mask) -> String {
        let pts: Vec<String> = self.points(m).map(|p| p.to_string()).collect();
        format!("{{{}}}", pts.join(","))
    }
}

fn lub_plus_one(frame: &BoxFrame, m: Mask) -> Point {
    let mut acc = vec![0u32; frame.dim()];
    let mut any = false;
    for i in Bits(m) {
        any = true;
        for (a, &x) in acc.iter_mut().zip(frame.point(i).coords()) {
            *a = (*a).max(x + 1);
        }
    }
    if any {
        Point::new(acc)
    } else {
        Point::zero(frame.dim())
    }
}

/// Result of evaluating a statement on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The hypothesis does not apply.
    Vacuous,
    Holds,
    Fails(Counterexample),
}

fn check(ok: bool, fail: impl FnOnce() -> Outcome) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        fail()
    }
}

type MemberCheck = fn(&Universe, usize) -> Outcome;
type PairCheck = fn(&Universe, &GapPair) -> Outcome;

#[derive(Clone, Copy)]
enum Kind {
    /// Evaluated on every semigroup of the universe.
    Member(MemberCheck),
    /// Evaluated on every pair `g₁ < g₂` of nonzero points with
    /// `g₂ + 𝟏 ≤ bound`.
    Pair(PairCheck),
}

/// A registered statement.
#[derive(Clone, Copy)]
pub struct Statement {
    pub id: &'static str,
    pub summary: &'static str,
    kind: Kind,
}

impl fmt::Debug for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Statement").field("id", &self.id).finish()
    }
}

macro_rules! member {
    ($id:literal, $summary:literal, $f:expr) => {
        Statement { id: $id, summary: $summary, kind: Kind::Member($f) }
    };
}

macro_rules! pair {
    ($id:literal, $summary:literal, $f:expr) => {
        Statement { id: $id, summary: $summary, kind: Kind::Pair($f) }
    };
}

static REGISTRY: &[Statement] = &[
    member!("corner-definition", "lub(H)+1 is the unique point meeting both corner conditions", corner_definition),
    member!("corner-lub-eh", "c = lub(EH)+1", corner_lub_eh),
    member!("corner-lub-mh", "c = lub(union of MH^(i))+1", corner_lub_mh),
    member!("mh-subset-eh", "every MH^(i) is contained in EH", mh_subset_eh),
    member!("corner-monotone", "S ⊆ T implies c(T) ≤ c(S)", corner_monotone),
    member!("corner-sandwich", "S1 ⊆ S ⊆ S2 with c(S1) = c(S2) = c implies c(S) = c", corner_sandwich),
    member!("special-gap-extension", "S ∪ {h} is a semigroup iff h ∈ EH", special_gap_extension),
    member!("maximals-of-difference", "S ⊊ T implies Maximals(T∖S) ⊆ EH(S)", maximals_of_difference),
    member!("irreducible-iff-one-eh", "irreducible iff |EH| = 1", irreducible_iff_one_eh),
    member!("irreducible-iff-decompositions", "irreducible iff some gap f has g − h ∈ S for all gaps h with 2h ≠ f", irreducible_iff_decompositions),
    member!("soma-frobenius", "Frobenius: every split F = h + h' has exactly one gap iff |EH| = 1", soma_frobenius),
    member!("unique-max-eh-frobenius", "a unique maximal special gap is the Frobenius element", unique_max_eh_frobenius),
    member!("dominated-special-is-ceh", "h ∈ EH below some gap is corner special", dominated_special_is_ceh),
    member!("off-slab-special-is-ceh", "h ∈ EH outside every H^(i) is corner special", off_slab_special_is_ceh),
    member!("non-ceh-owns-slab", "h ∈ EH∖CEH implies H^(i) = {h} for some i", non_ceh_owns_slab),
    member!("ceh-pigeonhole", "|EH| ≥ d+k implies |CEH| ≥ k", ceh_pigeonhole),
    member!("fast-path-ceh", "slab rule for CEH agrees with the definition", fast_path_ceh),
    member!("d1-ceh", "d = 1: CEH = EH∖{F}", d1_ceh),
    member!("frobenius-ceh-empty-irreducible", "Frobenius and CEH = ∅ implies irreducible", frobenius_ceh_empty_irreducible),
    member!("converse-irreducible-ceh-empty", "irreducible implies CEH = ∅ (false in general)", converse_irreducible_ceh_empty),
    member!("intersection-closed", "F(c) is closed under intersection", intersection_closed),
    member!("atom-iff-ceh", "atom iff |CEH| ≤ 1", atom_iff_ceh),
    member!("non-atom-intersection", "|CEH| ≥ 2 implies S is the intersection of two larger members of F(c)", non_atom_intersection),
    member!("atom-iff-maximal-forced", "atom iff S ∈ MF(c; h) for some h", atom_iff_maximal_forced),
    member!("ceh-unit-maximal", "for a gap h: CEH ⊆ {h} iff S ∈ MF(c; h)", ceh_unit_maximal),
    member!("ceh-pair-maximal", "for gaps h1 ≠ h2: CEH ⊆ {h1,h2} iff S ∈ MF(c; h1, h2)", ceh_pair_maximal),
    member!("ceh-empty-maximal", "CEH = ∅ iff S is maximal in F(c)", ceh_empty_maximal),
    member!("eh-bound-atom", "atom implies |EH| ≤ d+1", eh_bound_atom),
    member!("ani-frobenius-two-eh", "atomic, non-irreducible and Frobenius implies |EH| = 2", ani_frobenius_two_eh),
    member!("irreducible-mf", "irreducible with Frobenius f iff S ∈ MF(f+1; f)", irreducible_mf),
    member!("eh-subset-mf", "for gaps g1 < g2 = c−1: S ∈ MF(g2+1; g1, g2) iff EH ⊆ {g1, g2}", eh_subset_mf),
    member!("m-tilde-maximal", "S ∈ F(g2+1; g1, g2): each x ∈ M̃ extends inside the family, and M̃ = ∅ iff maximal", m_tilde_maximal),
    member!("m-g-double", "h ∈ M_g(S) implies not (2h ≤ g and 2h ≠ g)", m_g_double),
    member!("m-g-eh-pair", "EH = {g1 < g2} implies M_g2(S) = {g1}", m_g_eh_pair),
    member!("eh-pair-double", "EH = {g1 < g2} implies not 2g1 ≤ g2", eh_pair_double),
    member!("eh-pair-double-strict", "EH = {g1 < g2} implies g2 < 2g1", eh_pair_double_strict),
    member!("eh-pair-membership", "g2 < 2g1: EH = {g1, g2} iff S ∈ MF(g2+1; g1, g2) and g2 − g1 ∉ S", eh_pair_membership),
    member!("eh-pair-multiple", "EH = {g1 < g2} implies g2 = k(g2 − g1) or 2g1 − g2 ∈ S", eh_pair_multiple),
    member!("non-pf-reaches-special", "h ∈ H∖PF implies x − h ∈ S for some x ∈ EH", non_pf_reaches_special),
    member!("pf-escape", "t ∈ PF implies k·t ∈ EH for some k ≥ 1", pf_escape),
    pair!("teo-ani", "every member of MF(g2+1; g1, g2) is non-irreducible iff g2 is a multiple of g2 − g1 and 2g1 ≠ g2", teo_ani),
    pair!("ani-sufficient", "under the multiple condition every Frobenius member of F(g2+1; g1) is non-irreducible and the maximal ones are atoms", ani_sufficient_check),
    pair!("eh-pair-exists", "some S has EH = {g1, g2} iff g2 < 2g1 and (g2 = k(g2 − g1) or g2 not a multiple of 2g1 − g2)", eh_pair_exists),
    pair!("all-maximals-irreducible", "every member of MF(g2+1; g1, g2) is irreducible iff 2g1 ≤ g2, or g2 is not a multiple of g2 − g1 but is one of 2g1 − g2", all_maximals_irreducible_check),
];

pub fn registry() -> &'static [Statement] {
    REGISTRY
}

pub fn statement(id: &str) -> Result<&'static Statement> {
    REGISTRY
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| GnsError::UnknownStatement(id.to_string()))
}

/// Sweeps statement `id` over every semigroup with corner `≤ bound` (or
/// every pair with `g₂ + 𝟏 ≤ bound`).
pub fn verify_proposition(id: &str, bound: &Point) -> Result<VerificationReport> {
    let st = statement(id)?;
    let start = Instant::now();
    let universe = Universe::build(bound)?;
    let mut report = verify_in(st, &universe);
    report.ms = start.elapsed().as_millis();
    Ok(report)
}

/// Sweeps one statement over an already built universe.
pub fn verify_in(st: &Statement, u: &Universe) -> VerificationReport {
    let start = Instant::now();
    let outcomes: Vec<Outcome> = match st.kind {
        Kind::Member(f) => (0..u.len()).into_par_iter().map(|i| f(u, i)).collect(),
        Kind::Pair(f) => pairs_below(&u.bound)
            .par_iter()
            .map(|g| f(u, g))
            .collect(),
    };
    let vacuous = outcomes.iter().filter(|o| **o == Outcome::Vacuous).count();
    let mut counterexamples: Vec<Counterexample> = outcomes
        .iter()
        .filter_map(|o| match o {
            Outcome::Fails(c) => Some(c.clone()),
            _ => None,
        })
        .collect();
    counterexamples.sort();
    VerificationReport {
        id: st.id.to_string(),
        bound: u.bound.clone(),
        params: None,
        checked: outcomes.len(),
        vacuous,
        counterexamples,
        ms: start.elapsed().as_millis(),
    }
}

/// Pairs `g₁ < g₂` of nonzero points with `g₂ + 𝟏 ≤ bound`.
fn pairs_below(bound: &Point) -> Vec<GapPair> {
    let top = bound.minus_ones().expect("bound coordinates are positive");
    let pts: Vec<Point> = top.box_below().filter(|p| !p.is_zero()).collect();
    let mut out = Vec::new();
    for g2 in &pts {
        for g1 in &pts {
            if g1.strictly_below(g2) {
                out.push(GapPair { g1: g1.clone(), g2: g2.clone() });
            }
        }
    }
    out
}

fn corner_definition(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    // corner conditions for a candidate c: every gap lies strictly below c in
    // each coordinate, and each layer c_i − 1 holds a gap
    let satisfies = |c: &Point| {
        u.contains(m, c)
            && u.points(m.gaps).all(|h| h.coords().iter().zip(c.coords()).all(|(a, b)| a < b))
            && (0..c.dim()).all(|axis| {
                let ci = c.coords()[axis];
                ci >= 1 && u.points(m.gaps).any(|h| h.coords()[axis] == ci - 1)
            })
    };
    let found: Vec<Point> = u.bound.box_below().filter(|c| satisfies(c)).collect();
    check(found == [m.corner.clone()], || {
        u.fail(i, format!("corner candidates {found:?}, expected {}", m.corner))
    })
}

fn corner_lub_eh(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let c = lub_plus_one(&u.frame, m.eh);
    check(c == m.corner, || u.fail(i, format!("lub(EH)+1 = {c}")))
}

fn mh_union(u: &Universe, m: &Member) -> Mask {
    (0..m.corner.dim())
        .map(|axis| {
            let slab = u.slab(m, axis);
            let max = maximals(u.points(slab));
            u.frame.mask_of(&max).expect("slab points are in the box")
        })
        .fold(0, |a, b| a | b)
}

fn corner_lub_mh(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let c = lub_plus_one(&u.frame, mh_union(u, m));
    check(c == m.corner, || u.fail(i, format!("lub(MH)+1 = {c}")))
}

fn mh_subset_eh(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let mh = mh_union(u, m);
    check(mh & !m.eh == 0, || {
        u.fail(i, format!("MH points outside EH: {}", u.show(mh & !m.eh)))
    })
}

fn corner_monotone(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    match u.strict_supersets(i).find(|&j| !u.members[j].corner.leq(&m.corner)) {
        None if u.supersets[i].is_empty() => Outcome::Vacuous,
        None => Outcome::Holds,
        Some(j) => u.fail(i, format!("superset {} has corner {}", u.members[j].gns, u.members[j].corner)),
    }
}

fn corner_sandwich(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let below: BTreeSet<&Point> = u.subsets[i].iter().map(|&j| &u.members[j as usize].corner).collect();
    let above: BTreeSet<&Point> = u.strict_supersets(i).map(|j| &u.members[j].corner).collect();
    let shared: Vec<&&Point> = below.intersection(&above).collect();
    if shared.is_empty() {
        return Outcome::Vacuous;
    }
    check(shared.iter().all(|c| **c == &m.corner), || {
        u.fail(i, format!("sandwiched between corners {shared:?}"))
    })
}

fn special_gap_extension(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    for h in Bits(m.gaps) {
        let extended = m.gaps & !bit(h);
        let valid = u.frame.is_valid(extended);
        if valid != (m.eh & bit(h) != 0) {
            return u.fail(i, format!("extension by {} valid: {valid}", u.frame.point(h)));
        }
    }
    Outcome::Holds
}

fn maximals_of_difference(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    if u.supersets[i].is_empty() {
        return Outcome::Vacuous;
    }
    for j in u.strict_supersets(i) {
        let diff = m.gaps & !u.members[j].gaps;
        let max = maximals(u.points(diff));
        let mask = u.frame.mask_of(&max).expect("box points");
        if mask & !m.eh != 0 {
            return u.fail(i, format!("T = {}: maximal {} not special", u.members[j].gns, u.show(mask & !m.eh)));
        }
    }
    Outcome::Holds
}

fn irreducible_iff_one_eh(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let irr = u.irreducible(i);
    check(irr == (m.eh.count_ones() == 1), || {
        u.fail(i, format!("irreducible {irr}, |EH| = {}", m.eh.count_ones()))
    })
}

fn irreducible_iff_decompositions(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let criterion = u.points(m.gaps).any(|f| {
        u.points(m.gaps).all(|h| {
            &h.scale(2) == f || u.contains_signed(m, &f.signed_sub(h))
        })
    });
    let irr = u.irreducible(i);
    check(irr == criterion, || u.fail(i, format!("irreducible {irr}, criterion {criterion}")))
}

fn soma_frobenius(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let Ok(split) = m.gns.irreducible_via_decompositions() else {
        return Outcome::Vacuous;
    };
    let one = m.eh.count_ones() == 1;
    check(split == one, || u.fail(i, format!("split criterion {split}, |EH| = 1 {one}")))
}

fn unique_max_eh_frobenius(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let max = maximals(u.points(m.eh));
    if max.len() != 1 {
        return Outcome::Vacuous;
    }
    let f = u.frobenius(m).map(|f| u.frame.point(f));
    check(f == Some(&max[0]), || u.fail(i, format!("unique maximal {} but Frobenius {f:?}", max[0])))
}

fn dominated_special_is_ceh(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let dominated: Vec<&Point> = u
        .points(m.eh)
        .filter(|h| u.points(m.gaps).any(|g| h.strictly_below(g)))
        .collect();
    if dominated.is_empty() {
        return Outcome::Vacuous;
    }
    let mask = u.frame.mask_of(dominated.iter().copied()).expect("box points");
    check(mask & !m.ceh == 0, || u.fail(i, format!("not corner special: {}", u.show(mask & !m.ceh))))
}

fn off_slab_special_is_ceh(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let on_slab = (0..m.corner.dim()).fold(0, |a, axis| a | u.slab(m, axis));
    let off = m.eh & !on_slab;
    if off == 0 {
        return Outcome::Vacuous;
    }
    check(off & !m.ceh == 0, || u.fail(i, format!("not corner special: {}", u.show(off & !m.ceh))))
}

fn non_ceh_owns_slab(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let outside = m.eh & !m.ceh;
    if outside == 0 {
        return Outcome::Vacuous;
    }
    let bad = Bits(outside)
        .filter(|&h| !(0..m.corner.dim()).any(|axis| u.slab(m, axis) == bit(h)))
        .fold(0, |a, h| a | bit(h));
    check(bad == 0, || u.fail(i, format!("no singleton slab for {}", u.show(bad))))
}

fn ceh_pigeonhole(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let d = m.corner.dim() as u32;
    let eh = m.eh.count_ones();
    if eh <= d {
        return Outcome::Vacuous;
    }
    let k = eh - d;
    check(m.ceh.count_ones() >= k, || {
        u.fail(i, format!("|EH| = {eh}, |CEH| = {} < {k}", m.ceh.count_ones()))
    })
}

fn fast_path_ceh(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let from_set = u.frame.mask_of(&m.gns.corner_special_gaps()).expect("box points");
    check(m.ceh_kernel == m.ceh && from_set == m.ceh, || {
        u.fail(i, format!("kernel {} set code {} definition {}", u.show(m.ceh_kernel), u.show(from_set), u.show(m.ceh)))
    })
}

fn d1_ceh(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    if m.corner.dim() != 1 {
        return Outcome::Vacuous;
    }
    let f = u.frobenius(m).map_or(0, bit);
    check(m.ceh == m.eh & !f, || u.fail(i, format!("CEH {} EH {}", u.show(m.ceh), u.show(m.eh))))
}

fn frobenius_ceh_empty_irreducible(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    if u.frobenius(m).is_none() || m.ceh != 0 {
        return Outcome::Vacuous;
    }
    check(u.irreducible(i), || u.fail(i, "Frobenius with CEH = ∅ but reducible"))
}

fn converse_irreducible_ceh_empty(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    if !u.irreducible(i) {
        return Outcome::Vacuous;
    }
    check(m.ceh == 0, || u.fail(i, format!("irreducible with CEH = {}", u.show(m.ceh))))
}

fn intersection_closed(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    for &j in u.family(&m.corner) {
        let union = m.gaps | u.members[j].gaps;
        let ok = u.index.get(&union).is_some_and(|&k| u.members[k].corner == m.corner);
        if !ok {
            return u.fail(i, format!("intersection with {} leaves F(c)", u.members[j].gns));
        }
    }
    Outcome::Holds
}

fn atom_iff_ceh(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let atom = u.atom(i);
    check(atom == (m.ceh.count_ones() <= 1), || {
        u.fail(i, format!("atom {atom}, |CEH| = {}", m.ceh.count_ones()))
    })
}

fn non_atom_intersection(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    if m.ceh.count_ones() < 2 {
        return Outcome::Vacuous;
    }
    let same: Vec<Mask> = u
        .strict_supersets(i)
        .filter(|&j| u.members[j].corner == m.corner)
        .map(|j| u.members[j].gaps)
        .collect();
    let found = same
        .iter()
        .enumerate()
        .any(|(a, &x)| same[a + 1..].iter().any(|&y| x | y == m.gaps));
    check(found, || u.fail(i, "no pair of larger members intersects to S"))
}

fn atom_iff_maximal_forced(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let witness = Bits(m.gaps).find(|&h| u.maximal_in_family(i, bit(h)));
    let atom = u.atom(i);
    check(atom == witness.is_some(), || {
        u.fail(i, format!("atom {atom}, maximal for {:?}", witness.map(|h| u.frame.point(h))))
    })
}

fn ceh_unit_maximal(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    for h in Bits(m.gaps) {
        let criterion = m.ceh & !bit(h) == 0;
        if criterion != u.maximal_in_family(i, bit(h)) {
            return u.fail(i, format!("h = {}: CEH ⊆ {{h}} is {criterion}", u.frame.point(h)));
        }
    }
    Outcome::Holds
}

fn ceh_pair_maximal(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let gaps: Vec<usize> = Bits(m.gaps).collect();
    if gaps.len() < 2 {
        return Outcome::Vacuous;
    }
    for (a, &h1) in gaps.iter().enumerate() {
        for &h2 in &gaps[a + 1..] {
            let forced = bit(h1) | bit(h2);
            let criterion = m.ceh & !forced == 0;
            if criterion != u.maximal_in_family(i, forced) {
                return u.fail(i, format!("forced {}: CEH ⊆ forced is {criterion}", u.show(forced)));
            }
        }
    }
    Outcome::Holds
}

fn ceh_empty_maximal(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let maximal = u.maximal_in_family(i, 0);
    check(maximal == (m.ceh == 0), || u.fail(i, format!("maximal {maximal}, CEH {}", u.show(m.ceh))))
}

fn eh_bound_atom(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    if !u.atom(i) {
        return Outcome::Vacuous;
    }
    let d = m.corner.dim() as u32;
    check(m.eh.count_ones() <= d + 1, || u.fail(i, format!("atom with |EH| = {}", m.eh.count_ones())))
}

fn ani_frobenius_two_eh(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    if u.frobenius(m).is_none() || !u.atom(i) || u.irreducible(i) {
        return Outcome::Vacuous;
    }
    check(m.eh.count_ones() == 2, || u.fail(i, format!("|EH| = {}", m.eh.count_ones())))
}

fn irreducible_mf(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    // both sides force f = c − 1 to be a gap, so only Frobenius members can
    // satisfy either side
    let Some(f) = u.frobenius(m) else {
        return check(!u.irreducible(i) || m.gns.frobenius().is_some(), || {
            u.fail(i, "irreducible without Frobenius element")
        });
    };
    let irr = u.irreducible(i);
    let maximal = u.maximal_in_family(i, bit(f));
    check(irr == maximal, || u.fail(i, format!("irreducible {irr}, maximal in MF(c; F) {maximal}")))
}

fn eh_subset_mf(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let Some(f) = u.frobenius(m) else {
        return Outcome::Vacuous;
    };
    let g2 = u.frame.point(f);
    for g1 in Bits(m.gaps).filter(|&g| u.frame.point(g).strictly_below(g2)) {
        let forced = bit(g1) | bit(f);
        let maximal = u.maximal_in_family(i, forced);
        let criterion = m.eh & !forced == 0;
        if maximal != criterion {
            return u.fail(i, format!("g1 = {}: maximal {maximal}, EH ⊆ pair {criterion}", u.frame.point(g1)));
        }
    }
    Outcome::Holds
}

fn m_tilde_maximal(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let Some(f) = u.frobenius(m) else {
        return Outcome::Vacuous;
    };
    let g2 = u.frame.point(f).clone();
    for g1 in Bits(m.gaps & !bit(f)) {
        let pair = GapPair { g1: u.frame.point(g1).clone(), g2: g2.clone() };
        let mt = m_tilde(&m.gns, &pair).expect("member of the pair's family");
        let forced = bit(g1) | bit(f);
        for x in &mt {
            let ext = m.gaps & !u.mask(x).expect("gap");
            let inside = u.index.get(&ext).is_some_and(|&k| u.members[k].corner == m.corner);
            if !inside {
                return u.fail(i, format!("{pair}: extension by {x} leaves the family"));
            }
        }
        let maximal = u.maximal_in_family(i, forced);
        if maximal != mt.is_empty() {
            return u.fail(i, format!("{pair}: maximal {maximal}, M̃ = {mt:?}"));
        }
    }
    Outcome::Holds
}

fn m_g_double(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    for g in u.points(m.gaps) {
        for h in m_g(&m.gns, g).expect("g is a gap") {
            let d = h.scale(2);
            if d.leq(g) && &d != g {
                return u.fail(i, format!("g = {g}: 2·{h} < g"));
            }
        }
    }
    Outcome::Holds
}

/// `EH = {g₁ < g₂}` with comparable special gaps.
fn eh_pair(u: &Universe, m: &Member) -> Option<(Point, Point)> {
    if m.eh.count_ones() != 2 {
        return None;
    }
    let mut it = u.points(m.eh);
    let (a, b) = (it.next()?.clone(), it.next()?.clone());
    if a.strictly_below(&b) {
        Some((a, b))
    } else if b.strictly_below(&a) {
        Some((b, a))
    } else {
        None
    }
}

fn m_g_eh_pair(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let Some((g1, g2)) = eh_pair(u, m) else {
        return Outcome::Vacuous;
    };
    let got = m_g(&m.gns, &g2).expect("g2 is a gap");
    check(got == BTreeSet::from([g1.clone()]), || u.fail(i, format!("M_g2 = {got:?}, expected {{{g1}}}")))
}

fn eh_pair_double(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let Some((g1, g2)) = eh_pair(u, m) else {
        return Outcome::Vacuous;
    };
    check(!g1.scale(2).leq(&g2), || u.fail(i, format!("2·{g1} ≤ {g2}")))
}

fn eh_pair_double_strict(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let Some((g1, g2)) = eh_pair(u, m) else {
        return Outcome::Vacuous;
    };
    check(g2.strictly_below(&g1.scale(2)), || u.fail(i, format!("{g2} is not below 2·{g1}")))
}

fn eh_pair_membership(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    // both sides put g2 = c − 1 and g1 among the gaps
    let Some(f) = u.frobenius(m) else {
        return Outcome::Vacuous;
    };
    let g2 = u.frame.point(f);
    let mut fired = false;
    for g1i in Bits(m.gaps) {
        let g1 = u.frame.point(g1i);
        if !(g1.strictly_below(g2) && g2.strictly_below(&g1.scale(2))) {
            continue;
        }
        fired = true;
        let lhs = m.eh == bit(g1i) | bit(f);
        let diff = g2.checked_sub(g1).expect("g1 < g2");
        let rhs = u.maximal_in_family(i, bit(g1i) | bit(f)) && !u.contains(m, &diff);
        if lhs != rhs {
            return u.fail(i, format!("g1 = {g1}: EH pair {lhs}, maximal with g2 − g1 ∉ S {rhs}"));
        }
    }
    if fired {
        Outcome::Holds
    } else {
        Outcome::Vacuous
    }
}

fn eh_pair_multiple(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let Some((g1, g2)) = eh_pair(u, m) else {
        return Outcome::Vacuous;
    };
    let diff = g2.checked_sub(&g1).expect("g1 < g2");
    let multiple = is_multiple(&g2, &diff).expect("nonzero difference").is_some();
    let excess = g1.scale(2).signed_sub(&g2);
    check(multiple || u.contains_signed(m, &excess), || {
        u.fail(i, format!("g2 not a multiple of {diff} and 2g1 − g2 = {excess:?} ∉ S"))
    })
}

fn non_pf_reaches_special(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    let rest = m.gaps & !m.pf;
    if rest == 0 {
        return Outcome::Vacuous;
    }
    for h in u.points(rest) {
        let ok = u.points(m.eh).any(|x| u.contains_signed(m, &x.signed_sub(h)));
        if !ok {
            return u.fail(i, format!("h = {h}: no special gap x with x − h ∈ S"));
        }
    }
    Outcome::Holds
}

fn pf_escape(u: &Universe, i: usize) -> Outcome {
    let m = &u.members[i];
    for t in u.points(m.pf) {
        // k·t leaves the box, and hence the gaps, after finitely many steps
        let ok = (1..)
            .map(|k| t.scale(k))
            .take_while(|p| u.mask(p).is_some())
            .any(|p| m.eh & u.mask(&p).expect("in box") != 0);
        if !ok {
            return u.fail(i, format!("no multiple of {t} is special"));
        }
    }
    Outcome::Holds
}

/// Members of `𝓜𝓕(g₂ + 𝟏; g₁, g₂)` by inclusion.
fn pair_maximal(u: &Universe, g: &GapPair, forced: &[&Point]) -> Vec<usize> {
    let mask = u.frame.mask_of(forced.iter().copied()).expect("pair inside the bound");
    u.family(&g.corner())
        .iter()
        .copied()
        .filter(|&i| u.members[i].gaps & mask == mask && u.maximal_in_family(i, mask))
        .collect()
}

fn pair_fail(u: &Universe, members: &[usize], g: &GapPair, detail: String) -> Outcome {
    match members.first() {
        Some(&i) => u.fail(i, format!("{g}: {detail}")),
        None => Outcome::Fails(Counterexample { gaps: Vec::new(), detail: format!("{g}: {detail}") }),
    }
}

fn teo_ani(u: &Universe, g: &GapPair) -> Outcome {
    let mf = pair_maximal(u, g, &[&g.g1, &g.g2]);
    let all_reducible = mf.iter().all(|&i| !u.irreducible(i));
    let expected = ani_sufficient(g);
    if all_reducible == expected {
        return Outcome::Holds;
    }
    let witness: Vec<usize> = mf.iter().copied().filter(|&i| u.irreducible(i) == expected).collect();
    pair_fail(u, &witness, g, format!("closed form {expected}, all non-irreducible {all_reducible}"))
}

fn ani_sufficient_check(u: &Universe, g: &GapPair) -> Outcome {
    if !ani_sufficient(g) {
        return Outcome::Vacuous;
    }
    let c = g.corner();
    let g1 = u.mask(&g.g1).expect("in box");
    let g2 = u.mask(&g.g2).expect("in box");
    let frobenius: Vec<usize> = u
        .family(&c)
        .iter()
        .copied()
        .filter(|&i| u.members[i].gaps & (g1 | g2) == g1 | g2)
        .collect();
    if let Some(&i) = frobenius.iter().find(|&&i| u.irreducible(i)) {
        return u.fail(i, format!("{g}: irreducible Frobenius member"));
    }
    let bad: Vec<usize> = frobenius
        .iter()
        .copied()
        .filter(|&i| u.maximal_in_family(i, g1) && !u.atom(i))
        .collect();
    if bad.is_empty() {
        Outcome::Holds
    } else {
        pair_fail(u, &bad, g, "maximal Frobenius member is not an atom".into())
    }
}

fn eh_pair_exists(u: &Universe, g: &GapPair) -> Outcome {
    let target = u.frame.mask_of([&g.g1, &g.g2]).expect("in box");
    let witness = u.members.iter().position(|m| m.eh == target);
    let expected = exists_eh_pair(g);
    if witness.is_some() == expected {
        return Outcome::Holds;
    }
    let w: Vec<usize> = witness.into_iter().collect();
    pair_fail(u, &w, g, format!("closed form {expected}, witness found {}", !w.is_empty()))
}

fn all_maximals_irreducible_check(u: &Universe, g: &GapPair) -> Outcome {
    let Some(expected) = all_maximals_irreducible(g).as_bool() else {
        return Outcome::Vacuous;
    };
    let mf = pair_maximal(u, g, &[&g.g1, &g.g2]);
    let all = mf.iter().all(|&i| u.irreducible(i));
    if all == expected {
        return Outcome::Holds;
    }
    let witness: Vec<usize> = mf.iter().copied().filter(|&i| !u.irreducible(i)).collect();
    pair_fail(u, &witness, g, format!("closed form {expected}, all irreducible {all}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn p<const N: usize>(c: [u32; N]) -> Point {
        Point::from(c)
    }

    fn pair<const N: usize>(a: [u32; N], b: [u32; N]) -> GapPair {
        GapPair::new(p(a), p(b)).unwrap()
    }

    #[test]
    fn multiples() {
        assert_eq!(is_multiple(&p([3, 3]), &p([1, 1])).unwrap(), Some(3));
        assert_eq!(is_multiple(&p([3, 3]), &p([1, 2])).unwrap(), None);
        assert_eq!(is_multiple(&p([4, 4]), &p([2, 2])).unwrap(), Some(2));
        assert_eq!(is_multiple(&p([0, 4]), &p([0, 2])).unwrap(), Some(2));
        assert_eq!(is_multiple(&p([0, 0]), &p([1, 0])).unwrap(), None);
        assert_eq!(is_multiple(&p([1, 1]), &p([0, 0])), Err(GnsError::ZeroBase));
        assert_eq!(signed_multiple(&[3, 3], &[-1, -1]), None);
    }

    #[test]
    fn pair_validation() {
        assert!(GapPair::new(p([2, 2]), p([3, 3])).is_ok());
        assert!(matches!(
            GapPair::new(p([3, 3]), p([3, 3])),
            Err(GnsError::NotIncreasingPair { .. })
        ));
        assert!(GapPair::new(p([1, 2]), p([2, 1])).is_err());
        assert!(GapPair::new(p([1]), p([2, 2])).is_err());
    }

    #[test]
    fn closed_forms() {
        assert!(ani_sufficient(&pair([2, 2], [3, 3])));
        assert!(!ani_sufficient(&pair([1, 1], [3, 3])));
        assert!(!ani_sufficient(&pair([1, 2], [2, 4])));
        assert!(exists_eh_pair(&pair([2, 2], [3, 3])));
        assert!(!exists_eh_pair(&pair([1], [2])));
        assert_eq!(all_maximals_irreducible(&pair([1, 1], [3, 3])), ClosedForm::Holds);
        assert_eq!(all_maximals_irreducible(&pair([2, 2], [3, 3])), ClosedForm::Fails);
        // 2g1 − g2 = (-1,1) with g2 not a multiple of g2 − g1 = (2,1)
        assert_eq!(all_maximals_irreducible(&pair([1, 2], [3, 3])), ClosedForm::Inapplicable);
    }

    #[test]
    fn closed_forms_match_search_on_examples() {
        for g in [pair([2, 2], [3, 3]), pair([1, 1], [3, 3]), pair([3, 2], [4, 3]), pair([1], [2])] {
            assert_eq!(exists_eh_pair(&g), find_eh_pair(&g).unwrap().is_some(), "{g}");
        }
        assert!(all_maximals_irreducible_by_search(&pair([1, 1], [3, 3])).unwrap());
        assert!(!all_maximals_irreducible_by_search(&pair([2, 2], [3, 3])).unwrap());
    }

    #[test]
    fn teo_ani_examples() {
        let r = verify_teo_ani(&pair([2, 2], [3, 3])).unwrap();
        assert_eq!((r.checked, r.verdict()), (14, Verdict::Verified));
        let r = verify_teo_ani(&pair([1, 1], [3, 3])).unwrap();
        assert_eq!((r.checked, r.verdict()), (22, Verdict::Verified));
        let r = verify_teo_ani(&pair([2], [4])).unwrap();
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn m_g_of_an_eh_pair() {
        // EH = {(2,2),(3,3)} on the fourteen-member list
        let g = pair([2, 2], [3, 3]);
        for s in fixtures::maximal_44_forcing_22_33() {
            assert!(m_tilde(&s, &g).unwrap().is_empty(), "{s}");
            if s.special_gaps() == BTreeSet::from([p([2, 2]), p([3, 3])]) {
                assert_eq!(m_g(&s, &p([3, 3])).unwrap(), BTreeSet::from([p([2, 2])]));
            }
        }
        let irr = fixtures::irreducible_53();
        assert!(m_g(&irr, &p([4, 2])).unwrap().is_empty());
        assert_eq!(m_g(&irr, &p([0, 1])), Err(GnsError::NotAGap(p([0, 1]))));
    }

    #[test]
    fn m_tilde_of_ordinary_is_nonempty() {
        let o = crate::enumeration::ordinary(&p([4, 4])).unwrap();
        assert!(!m_tilde(&o, &pair([2, 2], [3, 3])).unwrap().is_empty());
        assert!(m_tilde(&o, &pair([1, 1], [2, 2])).is_err());
    }

    #[test]
    fn registry_lookup() {
        assert!(statement("atom-iff-ceh").is_ok());
        assert_eq!(
            statement("nope").unwrap_err(),
            GnsError::UnknownStatement("nope".into())
        );
        let ids: BTreeSet<&str> = registry().iter().map(|s| s.id).collect();
        assert_eq!(ids.len(), registry().len());
    }

    #[test]
    fn small_universe() {
        let u = Universe::build(&p([3, 2])).unwrap();
        // genus-positive semigroups with gaps inside the (3,2) box
        assert_eq!(u.len(), 17);
        for st in registry() {
            let r = verify_in(st, &u);
            if st.id == "converse-irreducible-ceh-empty" {
                continue;
            }
            assert!(r.counterexamples.is_empty(), "{}: {:?}", st.id, r.counterexamples);
        }
    }
}
