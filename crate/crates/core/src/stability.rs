//! Bad and good sets, deficiency, partitions `[n] = S ∪ T`, the families
//! `Y` and `Z`, and the stability bounds for simply rooted families.
//!
//! `∅` has no root, so it never lies in `F_S`. Wherever a lemma needs
//! `F_S ∪ F_T = F`, the two parts are taken as `F_S ∪ ({∅} ∩ F)` and
//! `F_T ∪ ({∅} ∩ F)`; see [`Split`].

use std::fmt;

use serde::{Serialize, Serializer};

use crate::colex::colex_total_size;
use crate::compression::{fixed_in, full_down, CompressionTrace};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::predicates::{is_simply_rooted, is_simply_rooted_with, stats_with, FamilyStats, RootTable};
use crate::rational::{frac_string, Frac};
use crate::set::{ElementSet, GroundSize};

/// Members `B` with `δB ⊆ F`.
pub fn full_shadow_sets(f: &Family) -> Family {
    let n = f.ground();
    let mut out = f.clone();
    for i in n.elements() {
        let ok = f.lift(i).union(&Family::containing(n, i).complement());
        out = out.intersection(&ok);
    }
    out
}

/// `def(F) = Σ_{B ∈ F} |δB \ F|`.
pub fn deficiency(f: &Family) -> u64 {
    let n = f.ground();
    n.elements().map(|i| f.degree(i) - f.lift(i).intersection_len(f) as u64).sum()
}

/// `{B ∈ F : P(B) ⊆ F}`.
pub fn largest_downset(f: &Family) -> Family {
    f.downset_core()
}

/// A simply rooted family with its root table and down-compression trace.
#[derive(Clone, Debug)]
pub struct RootedFamily {
    family: Family,
    roots: RootTable,
    down: CompressionTrace,
    fixed: Family,
    full_shadow: Family,
}

impl RootedFamily {
    pub fn new(f: &Family) -> Result<Self> {
        let roots = RootTable::new(f);
        if !is_simply_rooted_with(f, &roots) {
            return Err(Error::NotSimplyRooted);
        }
        let (_, down) = full_down(f);
        let fixed = fixed_in(&down);
        Ok(RootedFamily { family: f.clone(), roots, down, fixed, full_shadow: full_shadow_sets(f) })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn ground(&self) -> GroundSize {
        self.family.ground()
    }

    pub fn m(&self) -> u64 {
        self.family.len() as u64
    }

    pub fn roots(&self) -> &RootTable {
        &self.roots
    }

    pub fn down(&self) -> &CompressionTrace {
        &self.down
    }

    /// `d_F(B)` for a member `B`.
    pub fn image(&self, b: ElementSet) -> ElementSet {
        self.down.image(b).expect("image of a member")
    }

    /// Members with `d_F(B) = B`.
    pub fn fixed(&self) -> &Family {
        &self.fixed
    }

    /// Members with `δB ⊆ F`.
    pub fn full_shadow(&self) -> &Family {
        &self.full_shadow
    }

    pub fn bad(&self) -> Family {
        self.full_shadow.union(&self.fixed)
    }

    /// `Y(F)`: members that are bad for both reasons.
    pub fn y(&self) -> Family {
        self.full_shadow.intersection(&self.fixed)
    }

    pub fn stats(&self) -> FamilyStats {
        stats_with(&self.family, &self.roots)
    }

    /// `[∅ ∈ F]`.
    pub fn has_empty(&self) -> bool {
        self.family.contains(ElementSet::EMPTY)
    }

    /// Members other than `∅`.
    pub fn q(&self) -> u64 {
        self.m() - self.has_empty() as u64
    }

    /// `F_S`.
    pub fn rooted_in(&self, s: ElementSet) -> Family {
        self.roots.rooted_in(s)
    }

    pub fn split(&self, partition: Partition) -> Split {
        let b_s = self.rooted_in(partition.s);
        let b_t = self.rooted_in(partition.t);
        let mut f1 = b_s.clone();
        let mut f2 = b_t.clone();
        if self.has_empty() {
            f1.insert(ElementSet::EMPTY).expect("∅ fits");
            f2.insert(ElementSet::EMPTY).expect("∅ fits");
        }
        let down1 = full_down(&f1).1;
        let down2 = full_down(&f2).1;
        Split { partition, b_s, b_t, f1, f2, down1, down2 }
    }

    /// `Z(F, F1, F2)` from three traces.
    fn z_with(&self, f1: &Family, down1: &CompressionTrace, f2: &Family, down2: &CompressionTrace) -> Family {
        let mut z = Family::empty(self.ground());
        for b in f1.intersection(f2).iter() {
            let d = self.image(b);
            let d1 = down1.image(b).expect("member of F1");
            let d2 = down2.image(b).expect("member of F2");
            if d != d1 && d != d2 && d1 != d2 {
                z.insert(b).expect("fits");
            }
        }
        z
    }
}

/// An ordered pair `(S, T)` of disjoint sets with `S ∪ T = [n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    pub s: ElementSet,
    pub t: ElementSet,
}

impl Partition {
    /// `(S, [n] \ S)`.
    pub fn new(s: ElementSet, n: GroundSize) -> Result<Self> {
        if !s.fits(n) {
            return Err(Error::SetOutOfRange { set: s, n: n.get() });
        }
        Ok(Partition { s, t: n.full_set().difference(s) })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S = {}, T = {}", self.s, self.t)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct P {
            s: String,
            t: String,
        }
        P { s: self.s.to_string(), t: self.t.to_string() }.serialize(s)
    }
}

/// `F_S`, `F_T`, the adjusted parts `F1`, `F2` and their traces.
#[derive(Clone, Debug)]
pub struct Split {
    pub partition: Partition,
    pub b_s: Family,
    pub b_t: Family,
    /// `F_S ∪ ({∅} ∩ F)`.
    pub f1: Family,
    /// `F_T ∪ ({∅} ∩ F)`.
    pub f2: Family,
    pub down1: CompressionTrace,
    pub down2: CompressionTrace,
}

/// `(q² - M²) / 4` with `q = |F \ {∅}|` and `M = max_i |F_{i}|`, which is
/// `q²(1 - p²)/4` for `p = M / q`.
pub fn large_product_target(q: u64, max_rooted: u64) -> Frac {
    Frac::new(q as i128 * q as i128 - max_rooted as i128 * max_rooted as i128, 4)
}

/// A partition with `|F_S| |F_T| >= (q² - M²)/4`.
///
/// Greedy first: start from `S = ∅` and keep moving the element of `T` that
/// most increases `min(|F_S|, |F_T|)`, smallest element on ties. If that
/// stops short of the target, every split of the elements that root
/// something is tried (up to 20 of them) and the first one, in order of the
/// bitmask of `S`, that reaches the target is returned. Failing both, the
/// partition with the largest product is returned.
pub fn partition_search(f: &Family) -> Result<Partition> {
    Ok(partition_search_rooted(&RootedFamily::new(f)?))
}

pub fn partition_search_rooted(rf: &RootedFamily) -> Partition {
    let n = rf.ground();
    let sizes = |s: ElementSet| {
        let a = rf.rooted_in(s).len() as u64;
        let b = rf.rooted_in(n.full_set().difference(s)).len() as u64;
        (a, b)
    };
    let target = large_product_target(rf.q(), rf.roots().max_rooted() as u64);
    let meets = |(a, b): (u64, u64)| Frac::from_integer(a as i128 * b as i128) >= target;

    let mut s = ElementSet::EMPTY;
    let mut current = sizes(s);
    loop {
        let mut best: Option<(ElementSet, (u64, u64))> = None;
        for t in n.full_set().difference(s).elements() {
            let cand = s.with(t);
            let sz = sizes(cand);
            let better_than = best.map_or(current.0.min(current.1), |(_, b)| b.0.min(b.1));
            if sz.0.min(sz.1) > better_than {
                best = Some((cand, sz));
            }
        }
        match best {
            Some((cand, sz)) => {
                s = cand;
                current = sz;
            }
            None => break,
        }
    }
    if meets(current) {
        return Partition::new(s, n).expect("fits");
    }

    let active: Vec<u32> = n.elements().filter(|&i| !rf.roots().rooted_at(i).is_empty()).collect();
    let mut best = (s, current.0 * current.1);
    if active.len() <= 20 {
        for mask in 0u32..1 << active.len() {
            let cand = ElementSet::from_elements(
                active.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e),
            )
            .expect("elements in range");
            let sz = sizes(cand);
            if meets(sz) {
                return Partition::new(cand, n).expect("fits");
            }
            if sz.0 * sz.1 > best.1 {
                best = (cand, sz.0 * sz.1);
            }
        }
    }
    Partition::new(best.0, n).expect("fits")
}

/// Bad, good and fixed sets of a simply rooted family, with the counts
/// `b1`, `b2`, `b3` for a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadSetAnalysis {
    pub full_shadow: Family,
    pub fixed: Family,
    pub bad: Family,
    pub good: Family,
    pub partition: Partition,
    /// Full-shadow members outside `F_S ∩ F_T`.
    pub b1: u64,
    /// `|F_S ∩ F_T|`.
    pub b2: u64,
    /// Fixed members.
    pub b3: u64,
}

pub fn classify_sets(f: &Family) -> Result<BadSetAnalysis> {
    let rf = RootedFamily::new(f)?;
    let partition = partition_search_rooted(&rf);
    Ok(classify_rooted(&rf, &rf.split(partition)))
}

pub fn classify_sets_with(f: &Family, partition: Partition) -> Result<BadSetAnalysis> {
    let rf = RootedFamily::new(f)?;
    Ok(classify_rooted(&rf, &rf.split(partition)))
}

pub fn classify_rooted(rf: &RootedFamily, split: &Split) -> BadSetAnalysis {
    let both = split.b_s.intersection(&split.b_t);
    let bad = rf.bad();
    BadSetAnalysis {
        full_shadow: rf.full_shadow.clone(),
        fixed: rf.fixed.clone(),
        good: rf.family.difference(&bad),
        bad,
        partition: split.partition,
        b1: rf.full_shadow.difference(&both).len() as u64,
        b2: both.len() as u64,
        b3: rf.fixed.len() as u64,
    }
}

/// `Y(F) = {B ∈ F : δB ⊆ F and d_F(B) = B}`.
pub fn y_family(f: &Family) -> Result<Family> {
    Ok(RootedFamily::new(f)?.y())
}

/// `Z(F, F1, F2)`: members of `F1 ∩ F2` whose images under `d_F`, `d_F1`
/// and `d_F2` are pairwise distinct.
pub fn z_family(f: &Family, f1: &Family, f2: &Family) -> Result<Family> {
    if f1.union(f2) != *f {
        return Err(Error::domain("Z(F, F1, F2) needs F1 ∪ F2 = F"));
    }
    if !is_simply_rooted(f1) || !is_simply_rooted(f2) {
        return Err(Error::NotSimplyRooted);
    }
    let rf = RootedFamily::new(f)?;
    let down1 = full_down(f1).1;
    let down2 = full_down(f2).1;
    Ok(rf.z_with(f1, &down1, f2, &down2))
}

/// `Z(F, F1, F2)` for the parts of a split.
pub fn z_of_split(rf: &RootedFamily, split: &Split) -> Family {
    rf.z_with(&split.f1, &split.down1, &split.f2, &split.down2)
}

/// `Z(F, F_S, F_T)` without the `∅` adjustment.
pub fn z_unadjusted(rf: &RootedFamily, split: &Split) -> Family {
    if !rf.has_empty() {
        return z_of_split(rf, split);
    }
    let d_s = full_down(&split.b_s).1;
    let d_t = full_down(&split.b_t).1;
    rf.z_with(&split.b_s, &d_s, &split.b_t, &d_t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StabilityVariant {
    /// `c = 12`.
    Twelfth,
    /// `c = 8`.
    Eighth,
}

impl StabilityVariant {
    pub fn constant(self) -> i128 {
        match self {
            StabilityVariant::Twelfth => 12,
            StabilityVariant::Eighth => 8,
        }
    }
}

/// `||I(m)|| + m - m²(1 - p²)/(c 2^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityBound {
    pub m: u64,
    pub p: Frac,
    pub n: GroundSize,
    pub variant: StabilityVariant,
    pub value: Frac,
}

impl StabilityBound {
    /// The bound for `m` sets whose largest rooted subfamily has `max_rooted`
    /// members.
    pub fn new(m: u64, max_rooted: u64, n: GroundSize, variant: StabilityVariant) -> Self {
        let p = if m == 0 { Frac::from_integer(0) } else { Frac::new(max_rooted as i128, m as i128) };
        let loss = Frac::new(
            m as i128 * m as i128 - max_rooted as i128 * max_rooted as i128,
            variant.constant() << n.get(),
        );
        let value = Frac::from_integer(colex_total_size(m) as i128 + m as i128) - loss;
        StabilityBound { m, p, n, variant, value }
    }
}

impl Serialize for StabilityBound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct B {
            m: u64,
            p: String,
            n: u32,
            variant: StabilityVariant,
            value: String,
        }
        B { m: self.m, p: frac_string(&self.p), n: self.n.get(), variant: self.variant, value: frac_string(&self.value) }
            .serialize(s)
    }
}

/// The bound for `F` with `p` its exact largest rooted fraction, and whether
/// `||F||` stays within it.
pub fn stability_bound(f: &Family, variant: StabilityVariant) -> Result<(StabilityBound, bool)> {
    Ok(stability_bound_rooted(&RootedFamily::new(f)?, variant))
}

pub fn stability_bound_rooted(rf: &RootedFamily, variant: StabilityVariant) -> (StabilityBound, bool) {
    let bound = StabilityBound::new(rf.m(), rf.roots().max_rooted() as u64, rf.ground(), variant);
    let holds = Frac::from_integer(rf.family.total_size() as i128) <= bound.value;
    (bound, holds)
}

/// One evaluated inequality `lhs <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub id: &'static str,
    pub lhs: Frac,
    pub rhs: Frac,
    pub slack: Frac,
    pub pass: bool,
    /// Set when a hypothesis of the inequality failed.
    pub note: Option<String>,
}

impl Inequality {
    pub fn new(id: &'static str, lhs: Frac, rhs: Frac) -> Self {
        let slack = rhs - lhs;
        Inequality { id, lhs, rhs, slack, pass: slack >= Frac::from_integer(0), note: None }
    }

    pub fn ints(id: &'static str, lhs: impl Into<i128>, rhs: impl Into<i128>) -> Self {
        Inequality::new(id, Frac::from_integer(lhs.into()), Frac::from_integer(rhs.into()))
    }

    fn failed_hypothesis(mut self, note: impl Into<String>) -> Self {
        self.pass = false;
        self.note = Some(note.into());
        self
    }
}

impl Serialize for Inequality {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct I<'a> {
            id: &'a str,
            lhs: String,
            rhs: String,
            slack: String,
            pass: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            note: &'a Option<String>,
        }
        I {
            id: self.id,
            lhs: frac_string(&self.lhs),
            rhs: frac_string(&self.rhs),
            slack: frac_string(&self.slack),
            pass: self.pass,
            note: &self.note,
        }
        .serialize(s)
    }
}

/// The bad-set counting inequalities for one partition, evaluated on the
/// adjusted parts `F1`, `F2`.
pub fn bad_set_lower_bounds(f: &Family, partition: Partition) -> Result<Vec<Inequality>> {
    let rf = RootedFamily::new(f)?;
    Ok(bad_set_inequalities(&rf, &rf.split(partition)))
}

pub fn bad_set_inequalities(rf: &RootedFamily, split: &Split) -> Vec<Inequality> {
    let n = rf.ground().get();
    let cells = 1i128 << n;
    let d1 = split.down1.result();
    let d2 = split.down2.result();
    let meet = d1.intersection_len(d2) as i128;
    let f12 = split.f1.intersection(&split.f2);
    let inter = f12.len() as i128;
    let b = rf.bad().len() as i128;
    let analysis = classify_rooted(rf, split);
    let (b1, b2, b3) = (analysis.b1 as i128, analysis.b2 as i128, analysis.b3 as i128);
    let y = rf.y().len() as i128;
    let z = z_of_split(rf, split).len() as i128;
    let product = Frac::new(split.f1.len() as i128 * split.f2.len() as i128, cells);
    let harris_lhs = Frac::new(d1.len() as i128 * d2.len() as i128, cells);
    let int = Frac::from_integer;

    let mut split_rooted_2 = Inequality::ints("split_rooted_2", meet, b + z);
    if !f12.is_subset(rf.full_shadow()) {
        split_rooted_2 = split_rooted_2.failed_hypothesis("a member of F1 ∩ F2 lacks part of its shadow");
    }
    vec![
        Inequality::ints("split_rooted", meet, b + inter),
        Inequality::new("harris", harris_lhs, int(meet)),
        Inequality::new("lower_b", product, int(b + inter)),
        Inequality::new("many_bad", product, int(b1 + 2 * b2 + b3)),
        split_rooted_2,
        Inequality::new("many_bad_2", product, int(b1 + b2 + b3 + z - y)),
        Inequality::ints("Y_ge_Z", z, y),
        Inequality::new("refinement", product, int(b1 + b2 + b3)),
    ]
}

/// `F_i^+ = {B - i : i ∈ B ∈ F}` and `F_i^- = {B ∈ F : i ∉ B}`, both over
/// the same ground set with `i` unused.
pub fn split_on(f: &Family, i: u32) -> Result<(Family, Family)> {
    let n = f.ground();
    if i == 0 || i > n.get() {
        return Err(Error::ElementOutOfRange { element: i, n: n.get() });
    }
    let with_i = f.intersection(&Family::containing(n, i));
    let minus = f.difference(&with_i);
    let mut plus = with_i;
    plus.pair_map(i, |_, hi| (hi, 0));
    Ok((plus, minus))
}

/// Per-family analysis record.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisRecord {
    pub m: u64,
    pub total_size: u64,
    pub p: String,
    pub partition: Partition,
    pub b1: u64,
    pub b2: u64,
    pub b3: u64,
    pub bad: u64,
    pub good: u64,
    pub y: u64,
    pub z: u64,
    pub def: u64,
    pub fixed: u64,
    pub full_shadow: u64,
    pub largest_downset: u64,
    pub inequalities: Vec<Inequality>,
}

pub fn analysis_record(f: &Family) -> Result<AnalysisRecord> {
    let rf = RootedFamily::new(f)?;
    let split = rf.split(partition_search_rooted(&rf));
    let a = classify_rooted(&rf, &split);
    Ok(AnalysisRecord {
        m: rf.m(),
        total_size: f.total_size(),
        p: frac_string(&rf.stats().max_rooted_fraction),
        partition: split.partition,
        b1: a.b1,
        b2: a.b2,
        b3: a.b3,
        bad: a.bad.len() as u64,
        good: a.good.len() as u64,
        y: rf.y().len() as u64,
        z: z_of_split(&rf, &split).len() as u64,
        def: deficiency(f),
        fixed: a.fixed.len() as u64,
        full_shadow: a.full_shadow.len() as u64,
        largest_downset: largest_downset(f).len() as u64,
        inequalities: bad_set_inequalities(&rf, &split),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colex::initial_segment;
    use crate::predicates::{roots, shadow};
    use crate::testutil::{all_families, fam, g, set};

    fn punctured_square() -> Family {
        fam(2, &[&[1], &[2], &[1, 2]])
    }

    /// `{B + n : B ∈ I(m)}` over `[n]`.
    fn lifted_segment(m: u64, n: u32) -> Family {
        Family::from_sets(g(n), initial_segment(m).unwrap().iter().map(|b| b.with(n))).unwrap()
    }

    fn deficiency_oracle(f: &Family) -> u64 {
        f.iter()
            .map(|b| shadow(b, f.ground()).unwrap().iter().filter(|c| !f.contains(*c)).count() as u64)
            .sum()
    }

    #[test]
    fn classify_examples() {
        let a = classify_sets(&punctured_square()).unwrap();
        assert_eq!(a.bad, fam(2, &[&[2], &[1, 2]]));
        assert_eq!(a.good, fam(2, &[&[1]]));

        for (m, n) in [(1, 1), (2, 2), (3, 3), (4, 3), (5, 4), (8, 4)] {
            let a = classify_sets(&lifted_segment(m, n)).unwrap();
            assert!(a.bad.is_empty(), "m = {m}, n = {n}");
        }

        let a = classify_sets(&fam(0, &[&[]])).unwrap();
        assert_eq!(a.bad, fam(0, &[&[]]));
        assert!(classify_sets(&fam(2, &[&[1, 2]])).is_err());
    }

    #[test]
    fn deficiency_examples() {
        assert_eq!(deficiency(&Family::full(g(4))), 0);
        assert_eq!(deficiency(&fam(2, &[&[1, 2]])), 2);
        assert_eq!(deficiency(&punctured_square()), 2);
    }

    #[test]
    fn deficiency_matches_oracle() {
        for f in all_families(3) {
            assert_eq!(deficiency(&f), deficiency_oracle(&f));
        }
    }

    #[test]
    fn deficiency_of_rooted_family() {
        for f in all_families(4).filter(is_simply_rooted) {
            assert_eq!(deficiency(&f), f.len() as u64 - full_shadow_sets(&f).len() as u64);
        }
    }

    #[test]
    fn largest_downset_examples() {
        let d = fam(2, &[&[], &[1], &[2]]);
        assert_eq!(largest_downset(&d), d);
        assert!(largest_downset(&fam(2, &[&[1], &[1, 2]])).is_empty());
        assert_eq!(largest_downset(&fam(2, &[&[], &[1], &[1, 2]])), fam(2, &[&[], &[1]]));
    }

    #[test]
    fn partition_examples() {
        let p = partition_search(&punctured_square()).unwrap();
        assert_eq!(p, Partition { s: set(&[1]), t: set(&[2]) });

        let star = fam(3, &[&[1], &[1, 2], &[1, 3], &[1, 2, 3]]);
        let p = partition_search(&star).unwrap();
        assert_eq!(p.s.union(p.t), g(3).full_set());

        let p = partition_search(&fam(1, &[&[1]])).unwrap();
        assert!(p.s.is_empty() || p.t.is_empty());
    }

    #[test]
    fn partition_meets_target_n4() {
        for f in all_families(4).filter(is_simply_rooted).filter(|f| !f.is_empty()) {
            let rf = RootedFamily::new(&f).unwrap();
            let p = partition_search_rooted(&rf);
            let split = rf.split(p);
            let product = Frac::from_integer(split.b_s.len() as i128 * split.b_t.len() as i128);
            assert!(product >= large_product_target(rf.q(), rf.roots().max_rooted() as u64), "{f:?}");
        }
    }

    #[test]
    fn y_examples() {
        assert_eq!(y_family(&Family::full(g(3))).unwrap(), Family::full(g(3)));
        assert!(y_family(&punctured_square()).unwrap().is_empty());
        assert_eq!(y_family(&fam(0, &[&[]])).unwrap(), fam(0, &[&[]]));
    }

    #[test]
    fn z_examples() {
        let f = punctured_square();
        assert!(z_family(&f, &f, &f).unwrap().is_empty());
        let f1 = rooted_in(&f, &[1]);
        let f2 = rooted_in(&f, &[2]);
        assert!(z_family(&f, &f1, &f2).unwrap().is_empty());
        assert!(z_family(&f, &f1, &f1).is_err());
    }

    fn rooted_in(f: &Family, s: &[u32]) -> Family {
        crate::predicates::rooted_subfamily(f, set(s)).unwrap()
    }

    #[test]
    fn z_members_have_many_roots() {
        for f in all_families(4).filter(is_simply_rooted) {
            let rf = RootedFamily::new(&f).unwrap();
            for s in 0u32..16 {
                let split = rf.split(Partition::new(ElementSet::from_bits(s), g(4)).unwrap());
                for b in z_of_split(&rf, &split).iter() {
                    let r = roots(&f, b).unwrap().len();
                    assert!(r >= 2);
                    if rf.image(b) != b {
                        assert!(r >= 3);
                    }
                }
            }
        }
    }

    #[test]
    fn stability_examples() {
        let star = fam(3, &[&[1], &[1, 2], &[1, 3], &[1, 2, 3]]);
        let (bound, holds) = stability_bound(&star, StabilityVariant::Twelfth).unwrap();
        assert_eq!(bound.p, Frac::from_integer(1));
        assert_eq!(bound.value, Frac::from_integer(colex_total_size(4) as i128 + 4));
        assert!(holds);

        for m in 1..=16u64 {
            let n = crate::colex::ground_for(m) + 1;
            let f = lifted_segment(m, n);
            assert_eq!(f.total_size(), colex_total_size(m) + m);
            for v in [StabilityVariant::Twelfth, StabilityVariant::Eighth] {
                let (bound, holds) = stability_bound(&f, v).unwrap();
                assert_eq!(bound.value, Frac::from_integer(f.total_size() as i128));
                assert!(holds);
            }
        }
    }

    #[test]
    fn bound_denominator() {
        let b = StabilityBound::new(5, 2, g(4), StabilityVariant::Twelfth);
        assert_eq!(12 * 16 % *b.value.denom(), 0);
        assert_eq!(b.value, Frac::from_integer(colex_total_size(5) as i128 + 5) - Frac::new(21, 192));
    }

    #[test]
    fn inequality_examples() {
        let recs = bad_set_lower_bounds(&Family::full(g(3)), Partition::new(set(&[1]), g(3)).unwrap()).unwrap();
        assert_eq!(recs.len(), 8);
        assert!(recs.iter().all(|r| r.pass), "{recs:?}");

        let f = lifted_segment(4, 4);
        let rf = RootedFamily::new(&f).unwrap();
        let split = rf.split(partition_search_rooted(&rf));
        assert!(split.b_s.is_empty() || split.b_t.is_empty());
        for r in bad_set_inequalities(&rf, &split) {
            assert!(r.pass);
            if r.id == "many_bad" {
                assert_eq!(r.lhs, Frac::from_integer(0));
                assert_eq!(r.rhs, Frac::from_integer(0));
            }
        }

        let recs = bad_set_lower_bounds(&punctured_square(), Partition::new(set(&[1]), g(2)).unwrap()).unwrap();
        assert!(recs.iter().all(|r| r.pass), "{recs:?}");
    }

    #[test]
    fn split_on_examples() {
        let f = fam(3, &[&[1], &[2], &[1, 2], &[3], &[2, 3]]);
        let (plus, minus) = split_on(&f, 2).unwrap();
        assert_eq!(plus, fam(3, &[&[], &[1], &[3]]));
        assert_eq!(minus, fam(3, &[&[1], &[3]]));
        assert_eq!(f.total_size(), plus.total_size() + minus.total_size() + plus.len() as u64);
    }

    #[test]
    fn record_serializes() {
        let r = analysis_record(&punctured_square()).unwrap();
        assert_eq!((r.bad, r.good, r.def), (2, 1, 2));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["p"], "2/3");
        assert_eq!(json["inequalities"].as_array().unwrap().len(), 8);
    }
}
