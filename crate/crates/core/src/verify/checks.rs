//! Per-family checks. Each takes a prepared [`Context`] (simply rooted
//! population) or a bare family (arbitrary population) and reports one
//! [`Outcome`].

use std::collections::HashMap;

use crate::colex::{colex_total_size, f_extremal, kk_downset_bound};
use crate::compression::{full_down, full_up_with, reimer_from_trace, CompressionTrace, UpOrder};
use crate::family::Family;
use crate::format::to_text;
use crate::predicates::{is_downset, is_simply_rooted, is_union_closed};
use crate::rational::{frac_string, Frac};
use crate::set::ElementSet;
use crate::stability::{
    bad_set_inequalities, deficiency, large_product_target, largest_downset, partition_search_rooted, split_on,
    stability_bound_rooted, z_of_split, z_unadjusted, Inequality, RootedFamily, Split, StabilityVariant,
};

/// Result of one check on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The statement's hypothesis does not hold here.
    Vacuous,
    Fail { lhs: String, rhs: String, detail: String },
    /// Passed, with a value to fold into the check's running maximum.
    Measured(Frac),
}

fn fail(lhs: impl ToString, rhs: impl ToString, detail: impl Into<String>) -> Outcome {
    Outcome::Fail { lhs: lhs.to_string(), rhs: rhs.to_string(), detail: detail.into() }
}

/// `lhs <= rhs`.
fn le(lhs: i128, rhs: i128, what: &str) -> Outcome {
    if lhs <= rhs {
        Outcome::Pass
    } else {
        fail(lhs, rhs, what)
    }
}

fn le_frac(lhs: Frac, rhs: Frac, what: &str) -> Outcome {
    if lhs <= rhs {
        Outcome::Pass
    } else {
        fail(frac_string(&lhs), frac_string(&rhs), what)
    }
}

/// First failing outcome, else pass.
fn all(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    outcomes.into_iter().find(|o| matches!(o, Outcome::Fail { .. })).unwrap_or(Outcome::Pass)
}

fn from_record(r: &Inequality) -> Outcome {
    if r.pass {
        Outcome::Pass
    } else {
        let detail = r.note.clone().unwrap_or_else(|| r.id.to_string());
        fail(frac_string(&r.lhs), frac_string(&r.rhs), detail)
    }
}

fn i(x: impl TryInto<i128>) -> i128 {
    x.try_into().ok().expect("fits in i128")
}

/// Everything the simply rooted checks share for one family.
pub struct Context {
    pub rf: RootedFamily,
    /// `P(n) \ F`, union-closed.
    pub a: Family,
    pub up: CompressionTrace,
    pub up_order: UpOrder,
    pub split: Split,
    /// Original members with their images after each down step `k = 0..=n`.
    pub down_images: Vec<Vec<ElementSet>>,
    pub down_steps: Vec<Family>,
    pub up_steps: Vec<Family>,
    pub records: Vec<Inequality>,
    /// `(F', d trace of F')` for the simply rooted subfamilies used by the
    /// monotonicity checks.
    pub subfamilies: Vec<(String, CompressionTrace)>,
    pub i_m: i128,
}

impl Context {
    pub fn new(f: &Family, up_order: UpOrder) -> Option<Self> {
        let rf = RootedFamily::new(f).ok()?;
        let a = f.complement();
        let (_, up) = full_up_with(&a, up_order);
        let split = rf.split(partition_search_rooted(&rf));

        let mut down_images = Vec::new();
        let mut down_steps = Vec::new();
        rf.down().replay(|_, fam, imgs| {
            down_steps.push(fam.clone());
            down_images.push(imgs.to_vec());
        });
        let mut up_steps = Vec::new();
        up.replay(|_, fam, _| up_steps.push(fam.clone()));

        let records = bad_set_inequalities(&rf, &split);

        let mut subfamilies = vec![
            ("F1".to_string(), split.down1.clone()),
            ("F2".to_string(), split.down2.clone()),
        ];
        if rf.has_empty() {
            subfamilies.push(("F_S".to_string(), full_down(&split.b_s).1));
            subfamilies.push(("F_T".to_string(), full_down(&split.b_t).1));
        }
        for r in rf.ground().elements() {
            let sub = rf.roots().rooted_at(r);
            if !sub.is_empty() && sub != f {
                subfamilies.push((format!("F_{{{r}}}"), full_down(sub).1));
            }
        }
        let i_m = i(colex_total_size(rf.m()));
        Some(Context { rf, a, up, up_order, split, down_images, down_steps, up_steps, records, subfamilies, i_m })
    }

    fn f(&self) -> &Family {
        self.rf.family()
    }

    fn m(&self) -> i128 {
        i(self.rf.m())
    }

    fn n(&self) -> u32 {
        self.rf.ground().get()
    }

    fn total(&self) -> i128 {
        i(self.f().total_size())
    }

    fn record(&self, id: &str) -> &Inequality {
        self.records.iter().find(|r| r.id == id).expect("record present")
    }

    /// `A` is a counterexample to the union-closed conjecture: it has a
    /// nonempty member and every element lies in fewer than half its sets.
    fn a_is_counterexample(&self) -> bool {
        let size = self.a.len() as u64;
        let nonempty = size > self.a.contains(ElementSet::EMPTY) as u64;
        nonempty && self.a.degrees().iter().all(|&d| 2 * d < size)
    }

    /// If `|A| >= (2/3 - c2) 2^n` then `A` satisfies the conjecture.
    fn large_a_satisfies(&self, c2: Frac) -> Outcome {
        let size = i(self.a.len());
        let threshold = (Frac::new(2, 3) - c2) * Frac::from_integer(1i128 << self.n());
        let trivial = size <= self.a.contains(ElementSet::EMPTY) as i128;
        if Frac::from_integer(size) < threshold || trivial {
            return Outcome::Vacuous;
        }
        let max_deg = i(self.a.degrees().into_iter().max().unwrap_or(0));
        le(size, 2 * max_deg, "|A| <= 2 max deg_A")
    }
}

pub fn compression_duality(c: &Context) -> Outcome {
    let f = c.f();
    for i in c.rf.ground().elements() {
        let mut d = f.clone();
        d.pair_map(i, |lo, hi| (lo | hi, lo & hi));
        let mut u = c.a.clone();
        u.pair_map(i, |lo, hi| (lo & hi, lo | hi));
        if d.complement() != u {
            return fail(to_text(&d.complement()), to_text(&u), format!("P(n) \\ d_{i}(F) != u_{i}(P(n) \\ F)"));
        }
    }
    if c.up_order == UpOrder::Ascending {
        for (k, (d, u)) in c.down_steps.iter().zip(&c.up_steps).enumerate() {
            if d.complement() != *u {
                return fail(to_text(&d.complement()), to_text(u), format!("P(n) \\ D_{k}(F) != U_{k}(A)"));
            }
        }
    } else if c.rf.down().result().complement() != *c.up.result() {
        return fail(to_text(&c.rf.down().result().complement()), to_text(c.up.result()), "P(n) \\ d(F) != u(A)");
    }
    Outcome::Pass
}

pub fn rooted_bound(c: &Context) -> Outcome {
    le(c.total(), c.i_m + c.m(), "||F|| <= ||I(m)|| + m")
}

/// `||A|| >= f(|A|)` for the union-closed complement.
pub fn colex_bound_family(c: &Context) -> Outcome {
    let size = c.a.len() as u64;
    if size == 0 {
        return Outcome::Vacuous;
    }
    let f = f_extremal(size).expect("size >= 1");
    le(i(f), i(c.a.total_size()), "f(|A|) <= ||A||")
}

pub fn old_bound(c: &Context) -> Outcome {
    c.large_a_satisfies(Frac::from_integer(0))
}

pub fn kk(c: &Context) -> Outcome {
    let d = c.rf.down().result();
    let core = largest_downset(c.f());
    let mut out = vec![];
    if is_downset(d) {
        out.push(le(i(d.total_size()), i(colex_total_size(d.len() as u64)), "||d(F)|| <= ||I(|d(F)|)||"));
    }
    out.push(match kk_downset_bound(&core) {
        Ok(_) => Outcome::Pass,
        Err(e) => fail("", "", e.to_string()),
    });
    all(out)
}

pub fn rei_basics_down(c: &Context) -> Outcome {
    if is_downset(c.rf.down().result()) {
        Outcome::Pass
    } else {
        fail(to_text(c.rf.down().result()), "a down-set", "d(F) is not a down-set")
    }
}

pub fn rei_basics_rooted(c: &Context) -> Outcome {
    for (k, d) in c.down_steps.iter().enumerate().skip(1) {
        if !is_simply_rooted(d) {
            return fail(to_text(d), "simply rooted", format!("D_{k}(F) is not simply rooted"));
        }
    }
    Outcome::Pass
}

pub fn rooted_basics_powerset(c: &Context) -> Outcome {
    let sets = c.rf.down().sets();
    for k in 1..c.down_steps.len() {
        let core = c.down_steps[k].downset_core();
        for (j, &img) in c.down_images[k].iter().enumerate() {
            if img != sets[j] && !core.contains(img) {
                return fail(img, format!("P({img}) ⊆ D_{k}(F)"), format!("{} moved at step {k}", sets[j]));
            }
        }
    }
    Outcome::Pass
}

pub fn rooted_basics_one_fall(c: &Context) -> Outcome {
    for (b, d) in c.rf.down().pairs() {
        if !d.is_subset(b) || b.difference(d).len() > 1 {
            return fail(b.difference(d).len(), 1, format!("|{b} \\ d_F({b})| with d_F({b}) = {d}"));
        }
    }
    Outcome::Pass
}

pub fn no_falls(c: &Context) -> Outcome {
    le(c.total(), c.i_m + c.m() - i(c.rf.fixed().len()), "||F|| <= ||I(m)|| + m - |fixed|")
}

pub fn full_sh(c: &Context) -> Outcome {
    le(c.total(), c.i_m + c.m() - i(c.rf.full_shadow().len()), "||F|| <= ||I(m)|| + m - |full shadow|")
}

pub fn bad_count_bridge(c: &Context) -> Outcome {
    let b = i(c.rf.bad().len());
    le(2 * c.total(), 2 * (c.i_m + c.m()) - b, "2||F|| <= 2(||I(m)|| + m) - b")
}

pub fn down_set_theorem(c: &Context) -> Outcome {
    let d = i(largest_downset(c.f()).len());
    le(c.total(), c.i_m + c.m() - d, "||F|| <= ||I(m)|| + m - |D|")
}

pub fn fall_b(c: &Context) -> Outcome {
    let f = c.f();
    for (b, d) in c.rf.down().pairs() {
        for x in b.elements().filter(|&x| !f.contains(b.without(x))) {
            if d != b && d != b.without(x) {
                return fail(d, format!("{b} or {}", b.without(x)), format!("d_F({b}) with {} missing", b.without(x)));
            }
        }
    }
    Outcome::Pass
}

pub fn smaller_falls(c: &Context) -> Outcome {
    for (name, t) in &c.subfamilies {
        for (b, d) in t.pairs() {
            if d == b && c.rf.image(b) != b {
                return fail(c.rf.image(b), b, format!("{b} fixed in {name} but not in F"));
            }
        }
    }
    Outcome::Pass
}

pub fn good_fall(c: &Context) -> Outcome {
    let bad = c.rf.bad();
    for (name, t) in &c.subfamilies {
        for (b, d) in t.pairs().filter(|(b, _)| !bad.contains(*b)) {
            if c.rf.image(b) != d {
                return fail(c.rf.image(b), d, format!("good set {b}: d_F vs d_{name}"));
            }
        }
    }
    Outcome::Pass
}

pub fn split_rooted(c: &Context) -> Outcome {
    from_record(c.record("split_rooted"))
}

pub fn lower_b(c: &Context) -> Outcome {
    all([from_record(c.record("harris")), from_record(c.record("lower_b"))])
}

pub fn many_bad(c: &Context) -> Outcome {
    from_record(c.record("many_bad"))
}

pub fn large_product(c: &Context) -> Outcome {
    let product = Frac::from_integer(i(c.split.b_s.len()) * i(c.split.b_t.len()));
    let target = large_product_target(c.rf.q(), c.rf.roots().max_rooted() as u64);
    le_frac(target, product, "(q² - M²)/4 <= |F_S||F_T|")
}

fn stability(c: &Context, v: StabilityVariant) -> Outcome {
    let (bound, holds) = stability_bound_rooted(&c.rf, v);
    if holds {
        Outcome::Pass
    } else {
        fail(c.total(), frac_string(&bound.value), "||F|| <= stability bound")
    }
}

pub fn stability_12(c: &Context) -> Outcome {
    stability(c, StabilityVariant::Twelfth)
}

pub fn stability_8(c: &Context) -> Outcome {
    stability(c, StabilityVariant::Eighth)
}

/// Conclusion of the degree lemma for counterexamples; vacuous otherwise.
/// "In `m(1/2 + p)` sets" is read as "in at least".
pub fn low_degrees(c: &Context) -> Outcome {
    if !c.a_is_counterexample() || c.m() == 0 {
        return Outcome::Vacuous;
    }
    let max_deg = i(c.f().degrees().into_iter().max().unwrap_or(0));
    let p = (Frac::new(max_deg, c.m()) - Frac::new(1, 2)).clamp(Frac::from_integer(0), Frac::new(1, 2));
    let rhs = Frac::from_integer(c.m()) * (Frac::new(i(c.n()), 2) - Frac::from_integer(1) + p);
    if Frac::from_integer(c.i_m) > rhs {
        Outcome::Pass
    } else {
        fail(c.i_m, frac_string(&rhs), "||I(m)|| > m(n/2 - 1 + p)")
    }
}

/// The unconditional steps of the few-roots argument, for every element.
pub fn few_with_root(c: &Context) -> Outcome {
    let f = c.f();
    let m = c.m();
    let mut out = Vec::new();
    for r in c.rf.ground().elements() {
        let (plus, minus) = split_on(f, r).expect("element in range");
        let (mp, mm) = (i(plus.len()), i(minus.len()));
        out.push(if c.total() == i(plus.total_size()) + i(minus.total_size()) + mp {
            Outcome::Pass
        } else {
            fail(c.total(), i(plus.total_size()) + i(minus.total_size()) + mp, format!("split identity at {r}"))
        });
        if !is_simply_rooted(&plus) {
            out.push(fail(to_text(&plus), "simply rooted", format!("F_{r}^+ not simply rooted")));
        }
        let d_plus = plus.downset_core();
        let rooted = c.rf.roots().rooted_at(r);
        for b in rooted.iter() {
            if !d_plus.contains(b.without(r)) {
                out.push(fail(b.without(r), "in D+", format!("rooted set {b} at {r}")));
            }
        }
        let dp = i(d_plus.len());
        let ip = i(colex_total_size(plus.len() as u64));
        let im = i(colex_total_size(minus.len() as u64));
        out.push(le(i(plus.total_size()), ip + mp - dp, "||F+|| <= ||I(m+)|| + m+ - |D+|"));
        out.push(le(c.total(), ip + im + m + mp - dp, "||F|| <= ||I(m+)|| + ||I(m-)|| + m + m+ - |D+|"));
        if mp > mm {
            out.push(le(ip + im + mm, c.i_m, "||I(m+)|| + ||I(m-)|| + m- <= ||I(m)||"));
            // p = |F_{r}| / 3m; hypothesis m+ <= m(1/2 + p).
            let k = i(rooted.len());
            if 6 * mp <= 3 * m + 2 * k {
                out.push(le(3 * c.total(), 3 * (c.i_m + m) - k, "||F|| <= ||I(m)|| + m - pm"));
            }
        }
    }
    all(out)
}

/// Bound for counterexample complements with `c1 = 1/37`; vacuous when `A`
/// satisfies the conjecture.
pub fn main_theorem(c: &Context) -> Outcome {
    if !c.a_is_counterexample() {
        return Outcome::Vacuous;
    }
    let rhs = Frac::from_integer(c.m()) * (Frac::new(i(c.n()), 2) - Frac::from_integer(1) + Frac::new(1, 37));
    if Frac::from_integer(c.i_m) > rhs {
        Outcome::Pass
    } else {
        fail(c.i_m, frac_string(&rhs), "||I(m)|| > m(n/2 - 1 + 1/37)")
    }
}

pub fn main_corollary(c: &Context) -> Outcome {
    c.large_a_satisfies(Frac::new(2, 327))
}

pub fn improved_corollary(c: &Context) -> Outcome {
    c.large_a_satisfies(Frac::new(1, 104))
}

pub fn rei_cubes(c: &Context) -> Outcome {
    let dec = reimer_from_trace(&c.up);
    match dec.overlap() {
        None => Outcome::Pass,
        Some((x, y)) => fail(x, y, "cubes [A, u_A(A)] overlap"),
    }
}

pub fn uc_image(c: &Context) -> Outcome {
    let sets = c.rf.down().sets();
    for (j, &b) in sets.iter().enumerate() {
        if c.rf.image(b) == b {
            continue;
        }
        let k = (1..c.down_images.len()).find(|&k| c.down_images[k][j] != b).expect("moved set");
        if !c.up_steps[k].contains(b) {
            return fail(b, format!("U_{k}(A)"), format!("{b} first moves at step {k}"));
        }
    }
    Outcome::Pass
}

fn cube_owners(c: &Context) -> HashMap<ElementSet, ElementSet> {
    let mut owner = HashMap::new();
    for (a, u) in c.up.pairs() {
        for s in u.difference(a).subsets() {
            owner.entry(s.union(a)).or_insert(a);
        }
    }
    owner
}

pub fn cube_set(c: &Context) -> Outcome {
    let owner = cube_owners(c);
    for b in c.f().iter() {
        if let Some(&a) = owner.get(&b) {
            let expect = b.difference(c.rf.roots().roots_of(b));
            if a != expect {
                return fail(a, expect, format!("{b} lies in the cube of {a}"));
            }
        }
    }
    Outcome::Pass
}

pub fn root_fall(c: &Context) -> Outcome {
    for (b, d) in c.rf.down().pairs() {
        let roots = c.rf.roots().roots_of(b);
        let ok = d == b || (d.is_subset(b) && b.difference(d).len() == 1 && b.difference(d).is_subset(roots));
        if !ok {
            return fail(d, format!("{b} minus one of {roots}"), format!("d_F({b})"));
        }
    }
    Outcome::Pass
}

fn check_z_roots(c: &Context, z: &Family, label: &str) -> Outcome {
    for b in z.iter() {
        let r = c.rf.roots().roots_of(b).len() as i128;
        let need = if c.rf.image(b) == b { 2 } else { 3 };
        if r < need {
            return fail(r, need, format!("|R({b})| for {b} in {label}"));
        }
    }
    Outcome::Pass
}

pub fn z_roots(c: &Context) -> Outcome {
    let adjusted = z_of_split(&c.rf, &c.split);
    let literal = z_unadjusted(&c.rf, &c.split);
    all([check_z_roots(c, &adjusted, "Z(F, F1, F2)"), check_z_roots(c, &literal, "Z(F, F_S, F_T)")])
}

pub fn split_rooted_2(c: &Context) -> Outcome {
    from_record(c.record("split_rooted_2"))
}

pub fn many_bad_2(c: &Context) -> Outcome {
    from_record(c.record("many_bad_2"))
}

pub fn y_ge_z(c: &Context) -> Outcome {
    let y = i(c.rf.y().len());
    let literal = i(z_unadjusted(&c.rf, &c.split).len());
    all([from_record(c.record("Y_ge_Z")), le(literal, y, "|Z(F, F_S, F_T)| <= |Y(F)|")])
}

pub fn refinement(c: &Context) -> Outcome {
    from_record(c.record("refinement"))
}

/// `||F|| <= ||I(m)|| + max_i deg(i)`.
pub fn max_degree_probe(c: &Context) -> Outcome {
    let max_deg = i(c.f().degrees().into_iter().max().unwrap_or(0));
    le(c.total(), c.i_m + max_deg, "||F|| <= ||I(m)|| + max deg")
}

/// `||F|| <= ||I(m)|| + max_i |F_{i}|`.
pub fn max_rooted_probe(c: &Context) -> Outcome {
    le(c.total(), c.i_m + i(c.rf.roots().max_rooted()), "||F|| <= ||I(m)|| + max |F_{i}|")
}

/// For `p <= 1/2`: `||F|| < ||I(m)|| + m`; measures `(||F|| - ||I(m)||) / m`.
pub fn eps_delta_probe(c: &Context) -> Outcome {
    let m = c.m();
    if m == 0 || 2 * i(c.rf.roots().max_rooted()) > m {
        return Outcome::Vacuous;
    }
    if c.total() < c.i_m + m {
        Outcome::Measured(Frac::new(c.total() - c.i_m, m))
    } else {
        fail(c.total(), c.i_m + m, "||F|| < ||I(m)|| + m with p <= 1/2")
    }
}

/// Union-closed iff the complement is simply rooted.
pub fn obs_rooted_duality(g: &Family) -> Outcome {
    let uc = is_union_closed(g);
    let sr = is_simply_rooted(&g.complement());
    if uc == sr {
        Outcome::Pass
    } else {
        fail(format!("union-closed: {uc}"), format!("complement simply rooted: {sr}"), "duality")
    }
}

/// `||G|| <= ||I(|G|)|| + def(G)` for any family.
pub fn deficiency_bound(g: &Family) -> Outcome {
    le(i(g.total_size()), i(colex_total_size(g.len() as u64)) + i(deficiency(g)), "||G|| <= ||I(m)|| + def(G)")
}

/// A check over the simply rooted population.
pub type RootedCheck = fn(&Context) -> Outcome;
/// A check over arbitrary families.
pub type ArbitraryCheck = fn(&Family) -> Outcome;

/// Root tables of all the prefix families agree with a direct check; used
/// by tests only.
#[cfg(test)]
fn roots_consistent(f: &Family) -> bool {
    let t = crate::predicates::RootTable::new(f);
    f.iter().all(|b| t.roots_of(b) == crate::predicates::roots(f, b).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{all_families, fam, g};

    const ROOTED: &[(&str, RootedCheck)] = &[
        ("compression_duality", compression_duality),
        ("rooted_bound", rooted_bound),
        ("colex_bound_family", colex_bound_family),
        ("old_bound", old_bound),
        ("kk", kk),
        ("rei_basics_down", rei_basics_down),
        ("rei_basics_rooted", rei_basics_rooted),
        ("rooted_basics_powerset", rooted_basics_powerset),
        ("rooted_basics_one_fall", rooted_basics_one_fall),
        ("no_falls", no_falls),
        ("full_sh", full_sh),
        ("bad_count_bridge", bad_count_bridge),
        ("down_set_theorem", down_set_theorem),
        ("fall_b", fall_b),
        ("smaller_falls", smaller_falls),
        ("good_fall", good_fall),
        ("split_rooted", split_rooted),
        ("lower_b", lower_b),
        ("many_bad", many_bad),
        ("large_product", large_product),
        ("stability_12", stability_12),
        ("stability_8", stability_8),
        ("low_degrees", low_degrees),
        ("few_with_root", few_with_root),
        ("main_theorem", main_theorem),
        ("main_corollary", main_corollary),
        ("improved_corollary", improved_corollary),
        ("rei_cubes", rei_cubes),
        ("uc_image", uc_image),
        ("cube_set", cube_set),
        ("root_fall", root_fall),
        ("z_roots", z_roots),
        ("split_rooted_2", split_rooted_2),
        ("many_bad_2", many_bad_2),
        ("y_ge_z", y_ge_z),
        ("refinement", refinement),
        ("max_degree_probe", max_degree_probe),
        ("max_rooted_probe", max_rooted_probe),
        ("eps_delta_probe", eps_delta_probe),
    ];

    #[test]
    fn every_check_passes_n3() {
        for f in all_families(3).filter(is_simply_rooted) {
            let c = Context::new(&f, UpOrder::Ascending).unwrap();
            for (name, check) in ROOTED {
                let o = check(&c);
                assert!(!matches!(o, Outcome::Fail { .. }), "{name} on {f:?}: {o:?}");
            }
        }
        for f in all_families(3) {
            assert_eq!(obs_rooted_duality(&f), Outcome::Pass);
            assert_eq!(deficiency_bound(&f), Outcome::Pass);
            assert!(roots_consistent(&f));
        }
    }

    #[test]
    fn descending_up_order_breaks_uc_image() {
        let broken = all_families(3).filter(is_simply_rooted).any(|f| {
            let c = Context::new(&f, UpOrder::Descending).unwrap();
            matches!(uc_image(&c), Outcome::Fail { .. })
        });
        assert!(broken);
    }

    #[test]
    fn not_rooted_has_no_context() {
        assert!(Context::new(&fam(2, &[&[1, 2]]), UpOrder::Ascending).is_none());
    }

    #[test]
    fn few_with_root_on_punctured_cube() {
        let mut f = Family::full(g(3));
        f.remove(ElementSet::EMPTY);
        let c = Context::new(&f, UpOrder::Ascending).unwrap();
        assert_eq!(few_with_root(&c), Outcome::Pass);
    }
}
