//! Checks that do not range over the family population: exhaustive
//! searches, numeric sweeps, explicit constructions and the constant chain.
//! Sweep sizes grow with the configured `n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use super::checks::Outcome;
use super::constants::{c2_from_c1, derive_constants, derive_constants_fixpoint, ConstantChain};
use super::{Tally, VerifyConfig};
use crate::colex::{
    above_cms_threshold, colex_sums_slack, colex_total_size, colex_upper_bound, exceeds_half_r, extremal_construction,
    f_extremal, initial_segment, is_alternating_form,
};
use crate::enumerate::{extremal_search, MAX_EXHAUSTIVE_GROUND};
use crate::family::Family;
use crate::predicates::is_union_closed;
use crate::rational::{frac_string, Frac};
use crate::set::{ElementSet, GroundSize};
use crate::stability::deficiency;

fn big(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn outcome(ok: bool, lhs: impl ToString, rhs: impl ToString, detail: &str) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail { lhs: lhs.to_string(), rhs: rhs.to_string(), detail: detail.to_string() }
    }
}

/// Exhaustive `f(m)` for `n' <= min(n, 4)` with a unique minimizer class,
/// and the explicit construction for `m <= 2^{min(n, 10)}`.
pub fn colex_bound(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let mut index = 0;
    for n in 0..=cfg.n.get().min(MAX_EXHAUSTIVE_GROUND) {
        let lo = if n == 0 { 1 } else { (1u64 << (n - 1)) + 1 };
        for m in lo..=1u64 << n {
            let f = f_extremal(m).expect("m >= 1");
            let o = match extremal_search(GroundSize::new(n).expect("n <= 4"), m) {
                Ok(s) => {
                    let construction = extremal_construction(m).expect("small m");
                    let found = s.minimizers.iter().any(|c| {
                        crate::enumerate::canonicalize(&construction).is_ok_and(|x| x == *c)
                    });
                    if s.min_total != f {
                        outcome(false, s.min_total, f, "exhaustive minimum vs f(m)")
                    } else {
                        let classes = s.minimizers.len();
                        outcome(found && classes == 1, classes, 1, "one minimizer class, the construction")
                    }
                }
                Err(e) => outcome(false, e, f, "search failed"),
            };
            t.record(index, || format!("search n={n} m={m}"), o);
            index += 1;
        }
    }
    for m in 1..=1u64 << cfg.n.get().min(10) {
        let a = extremal_construction(m).expect("small m");
        let f = f_extremal(m).expect("m >= 1");
        let ok = is_union_closed(&a) && a.len() as u64 == m && a.total_size() == f;
        t.record(index, || format!("construction m={m}"), outcome(ok, a.total_size(), f, "||construction|| = f(m)"));
        index += 1;
    }
    t
}

/// Equality in the rooted bound for `{B + N : B ∈ I(m)}`, `m <= 64`.
pub fn rooted_bound_tight(_: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    for m in 1..=64u64 {
        let seg = initial_segment(m).expect("small m");
        let n = seg.ground().get() + 1;
        let b = lifted(&seg, n, 1);
        let total = b.total_size();
        let bound = colex_total_size(m) + m;
        let ok = crate::predicates::is_simply_rooted(&b) && total == bound;
        t.record(m, || format!("m={m}"), outcome(ok, total, bound, "||B|| = ||I(m)|| + m"));
    }
    t
}

/// `{A ∪ {N, ..., N+k-1} : A ∈ I(m)}` over `[N + k - 1]`.
fn lifted(seg: &Family, n_top: u32, k: u32) -> Family {
    let base = n_top - k + 1;
    let extra = (base..=n_top).fold(ElementSet::EMPTY, |s, i| s.with(i));
    let ground = GroundSize::new(n_top).expect("n <= 24");
    Family::from_sets(ground, seg.iter().map(|a| a.union(extra))).expect("fits")
}

/// Tightness of the deficiency bound for `k <= 3`, `m <= 64`, and
/// `||B|| <= 3` whenever `|B| = 2` and `def(B) = 3`.
pub fn deficiency_tight(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let mut index = 0;
    for k in 1..=3u32 {
        for m in 1..=64u64 {
            let seg = initial_segment(m).expect("small m");
            let b = lifted(&seg, seg.ground().get() + k, k);
            let def = deficiency(&b);
            let total = b.total_size();
            let ok = def == k as u64 * m && total == colex_total_size(m) + def;
            t.record(index, || format!("k={k} m={m}"), outcome(ok, total, colex_total_size(m) + def, "tight"));
            index += 1;
        }
    }
    let n = GroundSize::new(cfg.n.get().clamp(3, 5)).expect("n <= 5");
    let cells = n.cells() as u32;
    for x in 0..cells {
        for y in x + 1..cells {
            let b = Family::from_sets(n, [ElementSet::from_bits(x), ElementSet::from_bits(y)]).expect("fits");
            if deficiency(&b) != 3 {
                continue;
            }
            let total = b.total_size();
            t.record(index, || crate::format::to_text(&b), outcome(total <= 3, total, 3, "|B| = 2, def = 3"));
            index += 1;
        }
    }
    t
}

/// All `m1, m2` up to `clamp(2^n, 16, 512)`.
pub fn colex_sums(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let limit = (1u64 << cfg.n.get().min(9)).clamp(16, 512);
    for m1 in 1..=limit {
        for m2 in 1..=limit {
            let slack = colex_sums_slack(m1, m2);
            let o = outcome(slack >= 0, slack, 0, "||I(m1)|| + ||I(m2)|| + min <= ||I(m1 + m2)||");
            t.record((m1 - 1) * limit + m2 - 1, || format!("m1={m1} m2={m2}"), o);
        }
    }
    t
}

/// The bound for `2 <= m <= 2^{min(n + 8, 20)}`, with equality on the
/// alternating forms.
pub fn colex_total(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    for m in 2..=1u64 << (cfg.n.get() + 8).min(20) {
        let bound = colex_upper_bound(m).expect("m >= 2");
        let total = Frac::from_integer(colex_total_size(m) as i128);
        let o = if total > bound {
            outcome(false, frac_string(&total), frac_string(&bound), "||I(m)|| <= bound")
        } else if is_alternating_form(m) && total != bound {
            outcome(false, frac_string(&total), frac_string(&bound), "equality on form")
        } else {
            Outcome::Pass
        };
        t.record(m, || format!("m={m}"), o);
    }
    t
}

/// `||I(m)|| > m r / 2` iff `m > 2^{r+2} / 3`, for `m <= 2^{r+3}` and
/// `r <= min(n + 6, 18)`.
pub fn cms_threshold(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let mut index = 0;
    for r in 1..=(cfg.n.get() + 6).min(18) {
        for m in 1..=1u64 << (r + 3) {
            let (a, b) = (exceeds_half_r(m, r), above_cms_threshold(m, r));
            t.record(index, || format!("r={r} m={m}"), outcome(a == b, a, b, "threshold"));
            index += 1;
        }
    }
    t
}

/// `t = 3, c = 12, α = 2/3`: the quadratic is `9p² + 36p - 1` and `1/37`
/// lies on its failing side.
pub fn constants_twelve(_: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let d = derive_constants(&ConstantChain::standard(12).expect("valid"));
    let prim = d.quadratic.primitive();
    let expect = [BigInt::from(9), BigInt::from(36), BigInt::from(-1)];
    t.record(0, || "quadratic".into(), outcome(prim == expect, format!("{prim:?}"), "[9, 36, -1]", "quadratic"));
    let negative = d.quadratic.eval(&big(1, 37)) < big(0, 1);
    t.record(1, || "p=1/37".into(), outcome(negative, "q(1/37) >= 0", "< 0", "1/37 fails"));
    t.record(2, || "c1".into(), outcome(d.c1_at_least(&big(1, 37)), d.c1_f64(), "1/37", "c1 >= 1/37"));
    t.details = Some(json!(d));
    t
}

/// `c1 = 1/37` gives `c2 = 2/327`.
pub fn constants_c2(_: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let c2 = c2_from_c1(&big(1, 37));
    t.record(0, || "c1=1/37".into(), outcome(c2 == big(2, 327), &c2, "2/327", "c2 from c1"));
    t
}

/// `c = 8` with `α` feedback to a fixpoint certifies `c1 >= 1/24` and
/// `c2 >= 1/104`.
pub fn constants_eight(_: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let d = derive_constants_fixpoint(&ConstantChain::standard(8).expect("valid"), 200);
    t.record(0, || "c1".into(), outcome(d.c1_at_least(&big(1, 24)), d.c1_f64(), "1/24", "c1 >= 1/24"));
    t.record(1, || "c2".into(), outcome(d.c2_at_least(&big(1, 104)), d.c2_f64(), "1/104", "c2 >= 1/104"));
    t.details = Some(json!(d));
    t
}
