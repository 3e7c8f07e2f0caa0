//! Exhaustive and seeded random generation of union-closed and simply rooted
//! families, canonical forms under ground-set permutations, and brute-force
//! search for `f(m)`.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::predicates::is_union_closed;
use crate::set::{ElementSet, GroundSize};

pub const MAX_EXHAUSTIVE_GROUND: u32 = 4;
pub const MAX_RANDOM_GROUND: u32 = 16;
pub const MAX_CANONICAL_GROUND: u32 = 8;
/// Draws per sample before a size filter gives up.
pub const REJECTION_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random,
}

/// Which families to produce and how.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationPlan {
    pub n: GroundSize,
    pub mode: Mode,
    /// Number of samples in random mode; ignored otherwise.
    pub sample_count: u64,
    pub seed: u64,
    /// Keep only families with exactly this many members.
    pub size: Option<u64>,
    /// Keep only families that do (or do not) contain `∅`.
    pub contains_empty: Option<bool>,
}

impl EnumerationPlan {
    pub fn exhaustive(n: GroundSize) -> Self {
        EnumerationPlan { n, mode: Mode::Exhaustive, sample_count: 0, seed: 0, size: None, contains_empty: None }
    }

    pub fn random(n: GroundSize, sample_count: u64, seed: u64) -> Self {
        EnumerationPlan { n, mode: Mode::Random, sample_count, seed, size: None, contains_empty: None }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n.get();
        match self.mode {
            Mode::Exhaustive if n > MAX_EXHAUSTIVE_GROUND => Err(Error::capacity(format!(
                "exhaustive enumeration needs n <= {MAX_EXHAUSTIVE_GROUND}, got {n}"
            ))),
            Mode::Random if n > MAX_RANDOM_GROUND => {
                Err(Error::capacity(format!("random sampling needs n <= {MAX_RANDOM_GROUND}, got {n}")))
            }
            _ => Ok(()),
        }
    }

    fn accepts(&self, f: &Family) -> bool {
        self.size.is_none_or(|m| f.len() as u64 == m)
            && self.contains_empty.is_none_or(|e| f.contains(ElementSet::EMPTY) == e)
    }

    /// Number of candidates the plan walks: `2^{2^n}` or the sample count.
    pub fn candidates(&self) -> u64 {
        match self.mode {
            Mode::Exhaustive => 1u64 << self.n.cells(),
            Mode::Random => self.sample_count,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    UnionClosed,
    SimplyRooted,
}

fn yielded(kind: Kind, a: Family) -> Family {
    match kind {
        Kind::UnionClosed => a,
        Kind::SimplyRooted => a.complement(),
    }
}

/// Every union-closed family over `[n]` (exhaustive) or `sample_count`
/// seeded samples (random).
pub fn enumerate_union_closed(plan: &EnumerationPlan) -> Result<Box<dyn Iterator<Item = Result<Family>> + Send>> {
    stream(plan, Kind::UnionClosed)
}

/// Complements of the union-closed stream; filters apply to the yielded
/// family.
pub fn enumerate_simply_rooted(plan: &EnumerationPlan) -> Result<Box<dyn Iterator<Item = Result<Family>> + Send>> {
    stream(plan, Kind::SimplyRooted)
}

fn stream(plan: &EnumerationPlan, kind: Kind) -> Result<Box<dyn Iterator<Item = Result<Family>> + Send>> {
    plan.validate()?;
    let plan = plan.clone();
    Ok(match plan.mode {
        Mode::Exhaustive => Box::new(
            (0..plan.candidates())
                .filter_map(move |w| exhaustive_candidate(&plan, kind, w))
                .map(Ok),
        ),
        Mode::Random => Box::new((0..plan.sample_count).map(move |i| sample(&plan, kind, i))),
    })
}

/// The family with characteristic word `w`, if it belongs to the stream.
fn exhaustive_candidate(plan: &EnumerationPlan, kind: Kind, w: u64) -> Option<Family> {
    let f = Family::from_word(plan.n, w).expect("n <= 4");
    let a = match kind {
        Kind::UnionClosed => f,
        Kind::SimplyRooted => f.complement(),
    };
    if !is_union_closed(&a) {
        return None;
    }
    let out = yielded(kind, a);
    plan.accepts(&out).then_some(out)
}

/// Exhaustive candidate `w` as a union-closed family, if it is one and passes
/// the filters.
pub fn exhaustive_union_closed_at(plan: &EnumerationPlan, w: u64) -> Option<Family> {
    exhaustive_candidate(plan, Kind::UnionClosed, w)
}

/// Exhaustive candidate `w` as a simply rooted family (the complement of a
/// union-closed one), if it passes the filters.
pub fn exhaustive_simply_rooted_at(plan: &EnumerationPlan, w: u64) -> Option<Family> {
    exhaustive_candidate(plan, Kind::SimplyRooted, w)
}

/// RNG for sample `index`: seeded from `seed`, one stream per index, so a
/// sample does not depend on how samples are split across workers.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Random sample `index` of a union-closed plan.
pub fn sample_union_closed(plan: &EnumerationPlan, index: u64) -> Result<Family> {
    sample(plan, Kind::UnionClosed, index)
}

/// Random sample `index` of a simply rooted plan.
pub fn sample_simply_rooted(plan: &EnumerationPlan, index: u64) -> Result<Family> {
    sample(plan, Kind::SimplyRooted, index)
}

fn sample(plan: &EnumerationPlan, kind: Kind, index: u64) -> Result<Family> {
    plan.validate()?;
    let mut rng = sample_rng(plan.seed, index);
    for _ in 0..REJECTION_CAP {
        let out = yielded(kind, mixed_union_closed(plan.n, &mut rng));
        if plan.accepts(&out) {
            return Ok(out);
        }
    }
    Err(Error::capacity(format!("no family passed the filters in {REJECTION_CAP} draws (sample {index})")))
}

/// Adds `s` to a union-closed family, keeping it union-closed.
fn close_with(family: &mut Family, members: &mut Vec<ElementSet>, s: ElementSet) {
    if family.contains(s) {
        return;
    }
    let mut fresh = vec![s];
    for &x in members.iter() {
        fresh.push(x.union(s));
    }
    for y in fresh {
        if family.insert(y).expect("fits") {
            members.push(y);
        }
    }
}

fn closure_of(n: GroundSize, seeds: impl IntoIterator<Item = ElementSet>) -> Family {
    let mut family = Family::empty(n);
    let mut members = Vec::new();
    for s in seeds {
        close_with(&mut family, &mut members, s);
    }
    family
}

/// Closes `seed_sets` uniform subsets of `[n]` under pairwise unions.
pub fn random_union_closed(n: GroundSize, seed_sets: u64, seed: u64) -> Result<Family> {
    if n.get() > MAX_RANDOM_GROUND {
        return Err(Error::capacity(format!("random sampling needs n <= {MAX_RANDOM_GROUND}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_union_closed_from(n, seed_sets, &mut rng))
}

pub fn random_union_closed_from(n: GroundSize, seed_sets: u64, rng: &mut impl Rng) -> Family {
    let mask = n.full_set().bits();
    let seeds: Vec<ElementSet> = (0..seed_sets).map(|_| ElementSet::from_bits(rng.random::<u32>() & mask)).collect();
    closure_of(n, seeds)
}

/// Closes `seed_sets` random subsets in which each element is present with
/// probability `density`.
pub fn random_union_closed_biased(n: GroundSize, seed_sets: u64, density: f64, rng: &mut impl Rng) -> Family {
    let seeds: Vec<ElementSet> = (0..seed_sets)
        .map(|_| {
            let bits = n.elements().filter(|_| rng.random_bool(density)).fold(0u32, |acc, e| acc | 1 << (e - 1));
            ElementSet::from_bits(bits)
        })
        .collect();
    closure_of(n, seeds)
}

/// The sampler behind random plans. Uniform closures alone leave most of the
/// cube outside the family, so their complements are large; sparse biased
/// seeds and up-sets fill the cube and give small complements.
pub fn mixed_union_closed(n: GroundSize, rng: &mut impl Rng) -> Family {
    let cells = n.cells() as u64;
    let max_seeds = (2 * n.get() as u64 + 2).min(cells.max(1));
    match rng.random_range(0..4u32) {
        0 => {
            let k = rng.random_range(0..=max_seeds);
            random_union_closed_from(n, k, rng)
        }
        1 | 2 => {
            let density = rng.random_range(0.05..0.95);
            let k = rng.random_range(0..=(cells / 2).max(1));
            random_union_closed_biased(n, k, density, rng)
        }
        _ => {
            let k = rng.random_range(0..=max_seeds);
            let base = random_union_closed_from(n, k, rng);
            let top = rng.random_range(0..=n.get().div_ceil(2) as u64);
            let density = rng.random_range(0.3..0.9);
            let ups = random_union_closed_biased(n, top, density, rng).upward_closure();
            let mut members: Vec<ElementSet> = base.iter().collect();
            let mut family = base;
            for s in ups.iter() {
                close_with(&mut family, &mut members, s);
            }
            family
        }
    }
}

/// Lexicographically least image of a family under all permutations of its
/// ground set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub representative: Family,
}

pub fn canonicalize(f: &Family) -> Result<CanonicalForm> {
    let n = f.ground().get();
    if n > MAX_CANONICAL_GROUND {
        return Err(Error::capacity(format!("canonical forms need n <= {MAX_CANONICAL_GROUND}, got {n}")));
    }
    let best = (1..=n)
        .permutations(n as usize)
        .map(|perm| f.permute(&perm))
        .min_by(|a, b| a.cmp_characteristic(b))
        .unwrap_or_else(|| f.clone());
    Ok(CanonicalForm { representative: best })
}

/// Result of a brute-force search for `f(m)` inside `P(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalSearch {
    pub min_total: u64,
    pub minimizers: Vec<CanonicalForm>,
}

/// Least total size over union-closed `F ⊆ P(n)` with `|F| = m`, and the
/// minimizers up to isomorphism, ascending.
pub fn extremal_search(n: GroundSize, m: u64) -> Result<ExtremalSearch> {
    let mut plan = EnumerationPlan::exhaustive(n);
    plan.size = Some(m);
    plan.validate()?;
    let mut best: Option<u64> = None;
    let mut minimizers = BTreeSet::new();
    for f in enumerate_union_closed(&plan)? {
        let f = f?;
        let total = f.total_size();
        match best {
            Some(b) if total > b => continue,
            Some(b) if total == b => {}
            _ => {
                best = Some(total);
                minimizers.clear();
            }
        }
        minimizers.insert(canonicalize(&f)?);
    }
    match best {
        None => Err(Error::domain(format!("no union-closed family of {m} sets in P({n})"))),
        Some(min_total) => Ok(ExtremalSearch { min_total, minimizers: minimizers.into_iter().collect() }),
    }
}
