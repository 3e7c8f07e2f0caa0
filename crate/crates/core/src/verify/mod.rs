//! The check suite: a catalog of statements, a sharded runner over the
//! family population, and the JSON report.
//!
//! Per-family checks run on simply rooted families `F` (their complements
//! `A` are the union-closed families) or on arbitrary families. Global
//! checks run once per suite. Conjecture probes are reported separately
//! and never fail a run.

pub mod checks;
pub mod constants;
mod global;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::compression::UpOrder;
use crate::enumerate::{
    exhaustive_simply_rooted_at, sample_rng, sample_simply_rooted, EnumerationPlan, Mode,
};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::format::to_text;
use crate::rational::{frac_string, Frac};
use crate::set::GroundSize;

use checks::{ArbitraryCheck, Context, Outcome, RootedCheck};

/// Violations kept per check; the total is still counted.
pub const VIOLATION_CAP: usize = 100;
const SHARD: u64 = 1024;

/// Which population a per-family check ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Population {
    SimplyRooted,
    Arbitrary,
}

#[derive(Clone, Copy)]
enum FamilyCheck {
    Rooted(RootedCheck),
    Arbitrary(ArbitraryCheck),
}

type GlobalCheck = fn(&VerifyConfig) -> Tally;

/// One catalog entry.
#[derive(Clone)]
pub struct CheckDescriptor {
    pub id: &'static str,
    pub anchor: &'static str,
    pub conjecture: bool,
    pub note: Option<&'static str>,
    family: Option<FamilyCheck>,
    global: Option<GlobalCheck>,
}

impl CheckDescriptor {
    pub fn population(&self) -> Option<Population> {
        self.family.map(|f| match f {
            FamilyCheck::Rooted(_) => Population::SimplyRooted,
            FamilyCheck::Arbitrary(_) => Population::Arbitrary,
        })
    }

    pub fn has_global(&self) -> bool {
        self.global.is_some()
    }
}

impl std::fmt::Debug for CheckDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckDescriptor")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .field("population", &self.population())
            .field("global", &self.has_global())
            .field("conjecture", &self.conjecture)
            .finish()
    }
}

/// Anchors the catalog must cover, each exactly once.
pub const REQUIRED_ANCHORS: &[&str] = &[
    "eq_comp_equiv",
    "obs_rooted",
    "eq_rooted_bound",
    "thm_colex_bound",
    "cor_old_bound",
    "lem_KK",
    "lem_colex_sums",
    "lem_Rei_basics/it_end_down",
    "lem_Rei_basics/it_rooted",
    "lem_rooted_basics/it_down-set",
    "lem_rooted_basics/it_one_fall",
    "lem_no_falls",
    "lem_full_sh",
    "lem_full_sh/bad_sets",
    "lem_def",
    "lem_def/tight",
    "lem_fall_b",
    "lem_smaller_falls",
    "lem_good_fall",
    "lem_split_rooted",
    "cor_lower_b",
    "lem_many_bad",
    "lem_large_product",
    "thm_stability",
    "lem_low_degrees",
    "thm_down-set",
    "lem_few_with_root",
    "thm_main",
    "cor_main",
    "lem_colex_total",
    "lem_colex_total/threshold",
    "lem_Rei",
    "lem_uc_image",
    "lem_cube_set",
    "lem_root_fall",
    "cor_Z_roots",
    "lem_split_rooted_2",
    "lem_many_bad_2",
    "lem_Y_ge_Z",
    "lem_refinement",
    "thm_stability_2",
    "sec_refine/constants",
    "eq:con1",
    "con:max_rooted",
    "sec_further/eps_delta",
];

fn d(
    id: &'static str,
    anchor: &'static str,
    family: Option<FamilyCheck>,
    global: Option<GlobalCheck>,
) -> CheckDescriptor {
    CheckDescriptor { id, anchor, conjecture: false, note: None, family, global }
}

fn rooted(c: RootedCheck) -> Option<FamilyCheck> {
    Some(FamilyCheck::Rooted(c))
}

fn note(mut c: CheckDescriptor, text: &'static str) -> CheckDescriptor {
    c.note = Some(text);
    c
}

fn probe(mut c: CheckDescriptor) -> CheckDescriptor {
    c.conjecture = true;
    c
}

/// The full catalog, in report order. Panics if it does not cover
/// [`REQUIRED_ANCHORS`] exactly or repeats an id.
pub fn catalog() -> Vec<CheckDescriptor> {
    use checks::*;
    let arbitrary = |c: ArbitraryCheck| Some(FamilyCheck::Arbitrary(c));
    let cat = vec![
        d("compression_duality", "eq_comp_equiv", rooted(compression_duality), None),
        d("obs_rooted_duality", "obs_rooted", arbitrary(obs_rooted_duality), None),
        note(
            d("rooted_bound", "eq_rooted_bound", rooted(rooted_bound), Some(global::rooted_bound_tight)),
            "global part: equality for {B + N : B in I(m)}, m <= 64",
        ),
        note(
            d("thm_colex_bound", "thm_colex_bound", rooted(colex_bound_family), Some(global::colex_bound)),
            "global part: exhaustive f(m) over P(k) for k <= min(n, 4) and the explicit construction",
        ),
        d("cor_old_bound", "cor_old_bound", rooted(old_bound), None),
        d("lemma_KK", "lem_KK", rooted(kk), None),
        d("lemma_colex_sums", "lem_colex_sums", None, Some(global::colex_sums)),
        d("lemma_rei_basics_down", "lem_Rei_basics/it_end_down", rooted(rei_basics_down), None),
        d("lemma_rei_basics_rooted", "lem_Rei_basics/it_rooted", rooted(rei_basics_rooted), None),
        d("lemma_rooted_basics_powerset", "lem_rooted_basics/it_down-set", rooted(rooted_basics_powerset), None),
        d("lemma_rooted_basics_one_fall", "lem_rooted_basics/it_one_fall", rooted(rooted_basics_one_fall), None),
        d("lemma_no_falls", "lem_no_falls", rooted(no_falls), None),
        d("lemma_full_sh", "lem_full_sh", rooted(full_sh), None),
        d("bad_count_bridge", "lem_full_sh/bad_sets", rooted(bad_count_bridge), None),
        d("lemma_def", "lem_def", arbitrary(deficiency_bound), None),
        d("lemma_def_tight", "lem_def/tight", None, Some(global::deficiency_tight)),
        d("lemma_fall_b", "lem_fall_b", rooted(fall_b), None),
        note(
            d("lemma_smaller_falls", "lem_smaller_falls", rooted(smaller_falls), None),
            "subfamilies: F1, F2, each F_{i}, and F_S, F_T when the empty set is present",
        ),
        d("lemma_good_fall", "lem_good_fall", rooted(good_fall), None),
        note(
            d("lemma_split_rooted", "lem_split_rooted", rooted(split_rooted), None),
            "F1, F2 include the empty set when F does",
        ),
        d("cor_lower_b", "cor_lower_b", rooted(lower_b), None),
        d("lemma_many_bad", "lem_many_bad", rooted(many_bad), None),
        note(
            d("lemma_large_product", "lem_large_product", rooted(large_product), None),
            "target (q^2 - M^2)/4 with q = m minus one if the empty set is present",
        ),
        d("thm_stability_12", "thm_stability", rooted(stability_12), None),
        note(
            d("lemma_low_degrees", "lem_low_degrees", rooted(low_degrees), None),
            "vacuous unless P(n) minus F is a counterexample; 'in m(1/2 + p) sets' read as at least",
        ),
        d("thm_down_set", "thm_down-set", rooted(down_set_theorem), None),
        note(
            d("lemma_few_with_root", "lem_few_with_root", rooted(few_with_root), None),
            "unconditional proof steps for every element; the conclusion itself is vacuous",
        ),
        note(
            d("thm_main", "thm_main", rooted(main_theorem), Some(global::constants_twelve)),
            "per family vacuous without a counterexample; global part derives c1 for c = 12",
        ),
        note(
            d("cor_main", "cor_main", rooted(main_corollary), Some(global::constants_c2)),
            "per family: |A| >= (2/3 - 2/327) 2^n implies the conjecture for A",
        ),
        note(
            d("lemma_colex_total", "lem_colex_total", None, Some(global::colex_total)),
            "bound everywhere and equality on the alternating forms",
        ),
        d("cms_threshold", "lem_colex_total/threshold", None, Some(global::cms_threshold)),
        d("lemma_rei_cubes", "lem_Rei", rooted(rei_cubes), None),
        d("lemma_uc_image", "lem_uc_image", rooted(uc_image), None),
        d("lemma_cube_set", "lem_cube_set", rooted(cube_set), None),
        d("lemma_root_fall", "lem_root_fall", rooted(root_fall), None),
        d("cor_Z_roots", "cor_Z_roots", rooted(z_roots), None),
        d("lemma_split_rooted_2", "lem_split_rooted_2", rooted(split_rooted_2), None),
        d("lemma_many_bad_2", "lem_many_bad_2", rooted(many_bad_2), None),
        note(
            d("lemma_Y_ge_Z", "lem_Y_ge_Z", rooted(y_ge_z), None),
            "checked for Z(F, F1, F2) and for Z(F, F_S, F_T)",
        ),
        d("lemma_refinement", "lem_refinement", rooted(refinement), None),
        d("thm_stability_8", "thm_stability_2", rooted(stability_8), None),
        note(
            d("improved_constants", "sec_refine/constants", rooted(improved_corollary), Some(global::constants_eight)),
            "per family: |A| >= (2/3 - 1/104) 2^n implies the conjecture for A",
        ),
        probe(d("max_degree_probe", "eq:con1", rooted(max_degree_probe), None)),
        probe(d("max_rooted_probe", "con:max_rooted", rooted(max_rooted_probe), None)),
        probe(note(
            d("eps_delta_probe", "sec_further/eps_delta", rooted(eps_delta_probe), None),
            "extremum: largest (||F|| - ||I(m)||)/m seen with max |F_{i}| <= m/2",
        )),
    ];
    let ids: BTreeSet<_> = cat.iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), cat.len(), "duplicate check id");
    let anchors: Vec<_> = cat.iter().map(|c| c.anchor).collect();
    for a in REQUIRED_ANCHORS {
        let hits = anchors.iter().filter(|x| *x == a).count();
        assert_eq!(hits, 1, "anchor {a} covered {hits} times");
    }
    assert_eq!(anchors.len(), REQUIRED_ANCHORS.len(), "catalog has anchors outside the required list");
    cat
}

/// Suite configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub n: GroundSize,
    pub mode: Mode,
    /// Samples in random mode.
    pub samples: u64,
    pub seed: u64,
    /// Check ids to run; all when `None`.
    pub checks: Option<Vec<String>>,
    /// Worker threads. Does not affect the report.
    #[serde(skip)]
    pub parallel: usize,
    pub up_order: UpOrder,
}

impl VerifyConfig {
    pub fn exhaustive(n: GroundSize) -> Self {
        VerifyConfig { n, mode: Mode::Exhaustive, samples: 0, seed: 0, checks: None, parallel: 1, up_order: UpOrder::Ascending }
    }

    pub fn random(n: GroundSize, samples: u64, seed: u64) -> Self {
        VerifyConfig { n, mode: Mode::Random, samples, seed, checks: None, parallel: 1, up_order: UpOrder::Ascending }
    }

    pub fn with_checks(mut self, ids: &[&str]) -> Self {
        self.checks = Some(ids.iter().map(|s| s.to_string()).collect());
        self
    }

    fn plan(&self) -> EnumerationPlan {
        match self.mode {
            Mode::Exhaustive => EnumerationPlan::exhaustive(self.n),
            Mode::Random => EnumerationPlan::random(self.n, self.samples, self.seed),
        }
    }

    /// Selected descriptors in catalog order; unknown ids are a domain error.
    pub fn selected(&self) -> Result<Vec<CheckDescriptor>> {
        let cat = catalog();
        let Some(ids) = &self.checks else { return Ok(cat) };
        if let Some(bad) = ids.iter().find(|id| !cat.iter().any(|c| c.id == id.as_str())) {
            return Err(Error::Domain(format!("unknown check id '{bad}'")));
        }
        Ok(cat.into_iter().filter(|c| ids.iter().any(|id| id == c.id)).collect())
    }
}

/// A failing instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Population index (word or sample number) or global case number.
    pub index: u64,
    /// The family in file format, or a description of a global case.
    pub family: String,
    pub lhs: String,
    pub rhs: String,
    pub detail: String,
}

/// Running counts for one check; merged in index order.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    instances: u64,
    vacuous: u64,
    violations: Vec<Violation>,
    violation_count: u64,
    extremum: Option<Frac>,
    details: Option<serde_json::Value>,
    elapsed: Duration,
}

impl Tally {
    fn record(&mut self, index: u64, family: impl FnOnce() -> String, o: Outcome) {
        self.instances += 1;
        match o {
            Outcome::Pass => {}
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::Measured(x) => {
                if self.extremum.as_ref().is_none_or(|e| x > *e) {
                    self.extremum = Some(x);
                }
            }
            Outcome::Fail { lhs, rhs, detail } => {
                self.violation_count += 1;
                if self.violations.len() < VIOLATION_CAP {
                    self.violations.push(Violation { index, family: family(), lhs, rhs, detail });
                }
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.vacuous += other.vacuous;
        self.violation_count += other.violation_count;
        let room = VIOLATION_CAP - self.violations.len();
        self.violations.extend(other.violations.into_iter().take(room));
        if let Some(x) = other.extremum {
            if self.extremum.as_ref().is_none_or(|e| x > *e) {
                self.extremum = Some(x);
            }
        }
        if other.details.is_some() {
            self.details = other.details;
        }
        self.elapsed += other.elapsed;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub anchor: String,
    pub conjecture: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub instances_tested: u64,
    /// Instances where the hypothesis did not apply.
    pub vacuous: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extremum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
    /// Time of the global part; per-family work is timed as a whole in
    /// [`SuiteReport::population_time`]. Not part of the JSON.
    #[serde(skip)]
    pub wall_time: Duration,
    /// Why the check or its per-family part did not run.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped_reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub run_config: VerifyConfig,
    pub seed: u64,
    pub checks: Vec<CheckReport>,
    pub conjecture_probes: Vec<CheckReport>,
    /// Time spent on the shared per-family pass. Not part of the JSON.
    #[serde(skip)]
    pub population_time: Duration,
}

impl SuiteReport {
    pub fn check(&self, id: &str) -> Option<&CheckReport> {
        self.checks.iter().chain(&self.conjecture_probes).find(|c| c.id == id)
    }

    /// No non-conjecture check failed.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// 0 when every executed check passes, 1 on a failure, 3 when nothing
    /// ran.
    pub fn exit_code(&self) -> i32 {
        if !self.all_pass() {
            1
        } else if self.checks.iter().chain(&self.conjecture_probes).all(|c| c.status == Status::Skipped) {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<30} {:<8} {:>10} {:>9} {:>10} {:>9}", "check", "status", "instances", "vacuous", "violations", "global");
        let rows = |out: &mut String, list: &[CheckReport]| {
            for c in list {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skipped => "skipped",
                };
                let _ = writeln!(
                    out,
                    "{:<30} {:<8} {:>10} {:>9} {:>10} {:>8.2}s",
                    c.id,
                    status,
                    c.instances_tested,
                    c.vacuous,
                    c.violation_count,
                    c.wall_time.as_secs_f64()
                );
            }
        };
        rows(&mut out, &self.checks);
        let _ = writeln!(out, "conjecture probes (findings, not failures):");
        rows(&mut out, &self.conjecture_probes);
        let _ = writeln!(out, "per-family pass: {:.2}s", self.population_time.as_secs_f64());
        out
    }
}

/// Random arbitrary family `index`: every cell kept with a density drawn
/// per sample. Uses its own RNG streams, disjoint from the simply rooted
/// samples.
pub fn sample_arbitrary(n: GroundSize, seed: u64, index: u64) -> Family {
    let mut rng = sample_rng(seed, (1 << 63) | index);
    let density: f64 = rng.random();
    let mut f = Family::empty(n);
    for cell in 0..n.cells() as u32 {
        if rng.random_bool(density) {
            f.insert(crate::set::ElementSet::from_bits(cell)).expect("fits");
        }
    }
    f
}

struct Selected<'a> {
    rooted: Vec<(usize, RootedCheck)>,
    arbitrary: Vec<(usize, ArbitraryCheck)>,
    cfg: &'a VerifyConfig,
    plan: EnumerationPlan,
}

impl Selected<'_> {
    fn shard(&self, lo: u64, hi: u64, slots: usize) -> Result<Vec<Tally>> {
        let mut tallies = vec![Tally::default(); slots];
        let exhaustive = self.cfg.mode == Mode::Exhaustive;
        for index in lo..hi {
            if !self.rooted.is_empty() {
                let f = if exhaustive {
                    exhaustive_simply_rooted_at(&self.plan, index)
                } else {
                    Some(sample_simply_rooted(&self.plan, index)?)
                };
                if let Some(f) = f {
                    let ctx = Context::new(&f, self.cfg.up_order).expect("complement of a union-closed family");
                    for &(slot, check) in &self.rooted {
                        tallies[slot].record(index, || to_text(&f), check(&ctx));
                    }
                }
            }
            if !self.arbitrary.is_empty() {
                let g = if exhaustive {
                    Family::from_word(self.cfg.n, index)?
                } else {
                    sample_arbitrary(self.cfg.n, self.cfg.seed, index)
                };
                for &(slot, check) in &self.arbitrary {
                    tallies[slot].record(index, || to_text(&g), check(&g));
                }
            }
        }
        Ok(tallies)
    }
}

/// Runs the selected checks. The report depends only on the configuration
/// minus `parallel`.
pub fn run_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let descriptors = cfg.selected()?;
    let plan = cfg.plan();
    let capacity = plan.validate().err();

    let mut sel = Selected { rooted: vec![], arbitrary: vec![], cfg, plan: plan.clone() };
    if capacity.is_none() {
        for (slot, desc) in descriptors.iter().enumerate() {
            match desc.family {
                Some(FamilyCheck::Rooted(c)) => sel.rooted.push((slot, c)),
                Some(FamilyCheck::Arbitrary(c)) => sel.arbitrary.push((slot, c)),
                None => {}
            }
        }
    }

    let mut tallies = vec![Tally::default(); descriptors.len()];
    let population_start = Instant::now();
    if !sel.rooted.is_empty() || !sel.arbitrary.is_empty() {
        let total = plan.candidates();
        let shards: Vec<(u64, u64)> = (0..total.div_ceil(SHARD)).map(|s| (s * SHARD, ((s + 1) * SHARD).min(total))).collect();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.parallel.max(1))
            .build()
            .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
        let results: Vec<Result<Vec<Tally>>> =
            pool.install(|| shards.par_iter().map(|&(lo, hi)| sel.shard(lo, hi, descriptors.len())).collect());
        for shard in results {
            for (acc, t) in tallies.iter_mut().zip(shard?) {
                acc.merge(t);
            }
        }
    }

    let population_time = population_start.elapsed();
    for (slot, desc) in descriptors.iter().enumerate() {
        if let Some(g) = desc.global {
            let start = Instant::now();
            let mut t = g(cfg);
            t.elapsed = start.elapsed();
            tallies[slot].merge(t);
        }
    }

    let mut report = SuiteReport {
        run_config: cfg.clone(),
        seed: cfg.seed,
        checks: vec![],
        conjecture_probes: vec![],
        population_time,
    };
    for (desc, t) in descriptors.iter().zip(tallies) {
        let skipped_reason = match (&capacity, desc.family.is_some()) {
            (Some(e), true) => Some(e.to_string()),
            _ => None,
        };
        let status = if t.instances == 0 {
            Status::Skipped
        } else if t.violation_count > 0 {
            Status::Fail
        } else {
            Status::Pass
        };
        let r = CheckReport {
            id: desc.id.to_string(),
            anchor: desc.anchor.to_string(),
            conjecture: desc.conjecture,
            note: desc.note.map(str::to_string),
            instances_tested: t.instances,
            vacuous: t.vacuous,
            violation_count: t.violation_count,
            violations: t.violations,
            status,
            extremum: t.extremum.as_ref().map(frac_string),
            details: t.details,
            wall_time: t.elapsed,
            skipped_reason,
        };
        if desc.conjecture {
            report.conjecture_probes.push(r);
        } else {
            report.checks.push(r);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::g;

    #[test]
    fn catalog_is_complete() {
        let cat = catalog();
        assert_eq!(cat.len(), REQUIRED_ANCHORS.len());
        assert_eq!(cat.iter().filter(|c| c.conjecture).count(), 3);
    }

    #[test]
    fn unknown_check_is_an_error() {
        let cfg = VerifyConfig::exhaustive(g(2)).with_checks(&["nope"]);
        assert!(matches!(run_suite(&cfg), Err(Error::Domain(_))));
    }

    #[test]
    fn exhaustive_n3_passes() {
        let r = run_suite(&VerifyConfig::exhaustive(g(3))).unwrap();
        for c in r.checks.iter().chain(&r.conjecture_probes) {
            assert_eq!(c.status, Status::Pass, "{}: {:?}", c.id, c.violations.first());
        }
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn single_check() {
        let r = run_suite(&VerifyConfig::exhaustive(g(4)).with_checks(&["lemma_Y_ge_Z"])).unwrap();
        assert_eq!(r.checks.len(), 1);
        assert!(r.conjecture_probes.is_empty());
        assert_eq!(r.checks[0].status, Status::Pass);
    }

    #[test]
    fn over_capacity_skips_family_checks() {
        let r = run_suite(&VerifyConfig::exhaustive(g(5)).with_checks(&["lemma_no_falls", "lemma_colex_sums"])).unwrap();
        assert_eq!(r.check("lemma_no_falls").unwrap().status, Status::Skipped);
        assert!(r.check("lemma_no_falls").unwrap().skipped_reason.is_some());
        assert_eq!(r.check("lemma_colex_sums").unwrap().status, Status::Pass);
        assert_eq!(r.exit_code(), 0);
        let none = run_suite(&VerifyConfig::exhaustive(g(5)).with_checks(&["lemma_no_falls"])).unwrap();
        assert_eq!(none.exit_code(), 3);
    }

    #[test]
    fn empty_random_population_is_skipped() {
        let r = run_suite(&VerifyConfig::random(g(5), 0, 1).with_checks(&["lemma_no_falls"])).unwrap();
        assert_eq!(r.checks[0].status, Status::Skipped);
    }

    #[test]
    fn parallelism_does_not_change_report() {
        let mut cfg = VerifyConfig::random(g(5), 3000, 7);
        let one = run_suite(&cfg).unwrap().to_json();
        cfg.parallel = 4;
        assert_eq!(one, run_suite(&cfg).unwrap().to_json());
    }

    #[test]
    fn descending_order_is_reported() {
        let mut cfg = VerifyConfig::exhaustive(g(3)).with_checks(&["lemma_uc_image"]);
        cfg.up_order = UpOrder::Descending;
        let r = run_suite(&cfg).unwrap();
        assert_eq!(r.checks[0].status, Status::Fail);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn arbitrary_samples_vary() {
        let a = sample_arbitrary(g(4), 1, 0);
        let b = sample_arbitrary(g(4), 1, 1);
        assert_eq!(a, sample_arbitrary(g(4), 1, 0));
        assert_ne!(a, b);
    }
}
