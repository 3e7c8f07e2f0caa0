//! Colex order, initial segments `I(m)`, their total sizes, the extremal
//! value `f(m)` and bounds on `||I(m)||`.
//!
//! Under the bitmask encoding of [`ElementSet`], colex order is integer order:
//! the set of rank `k` is the set whose bitmask is `k`. So `I(m)` consists of
//! the bitmasks `0..m` and `||I(m)||` is the number of one bits among
//! `0, ..., m - 1`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::predicates::is_downset;
use crate::rational::{frac, Frac};
use crate::set::{ElementSet, GroundSize, MAX_GROUND};

/// Position of a set in colex order, starting from 0 at `∅`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ColexRank(pub u64);

impl ColexRank {
    pub fn of(s: ElementSet) -> Self {
        ColexRank(s.bits() as u64)
    }

    /// The set at this rank, if it fits in the supported ground set.
    pub fn set(self) -> Option<ElementSet> {
        (self.0 < 1 << MAX_GROUND).then(|| ElementSet::from_bits(self.0 as u32))
    }
}

/// `A < B` in colex order: `max(A △ B) ∈ B`.
pub fn colex_less(a: ElementSet, b: ElementSet) -> Result<bool> {
    match a.symmetric_difference(b).max() {
        None => Err(Error::domain(format!("colex order is strict; {a} compared with itself"))),
        Some(top) => Ok(b.contains(top)),
    }
}

/// Total comparator built from [`colex_less`].
pub fn colex_cmp(a: ElementSet, b: ElementSet) -> Ordering {
    match colex_less(a, b) {
        Err(_) => Ordering::Equal,
        Ok(true) => Ordering::Less,
        Ok(false) => Ordering::Greater,
    }
}

/// Smallest `n` with `m <= 2^n`.
pub fn ground_for(m: u64) -> u32 {
    if m <= 1 {
        0
    } else {
        64 - (m - 1).leading_zeros()
    }
}

/// `I(m)` over the smallest ground set that holds it.
pub fn initial_segment(m: u64) -> Result<Family> {
    let n = ground_for(m);
    if n > MAX_GROUND {
        return Err(Error::capacity(format!("I({m}) needs a ground set of size {n}")));
    }
    initial_segment_in(m, GroundSize::new(n)?)
}

/// `I(m)` as a family over `[n]`.
pub fn initial_segment_in(m: u64, n: GroundSize) -> Result<Family> {
    if m > n.cells() as u64 {
        return Err(Error::capacity(format!("I({m}) does not fit in P({n})")));
    }
    let mut words = vec![0u64; n.cells().div_ceil(64)];
    let full = (m / 64) as usize;
    for w in &mut words[..full] {
        *w = u64::MAX;
    }
    if !m.is_multiple_of(64) {
        words[full] = (1u64 << (m % 64)) - 1;
    }
    Ok(Family::from_words(n, words))
}

/// `||I(m)||`: one bits among `0, ..., m - 1`, in `O(log m)`.
pub fn colex_total_size(m: u64) -> u64 {
    let mut total = 0u64;
    for b in 0..63 {
        let period = 1u64 << (b + 1);
        let half = 1u64 << b;
        if half >= m {
            break;
        }
        total += (m / period) * half + (m % period).saturating_sub(half);
    }
    total
}

/// `f(m) = n 2^{n-1} - ||I(m')|| - m'` where `2^{n-1} < m <= 2^n` and
/// `m' = 2^n - m`: the least total size of a union-closed family of `m` sets.
pub fn f_extremal(m: u64) -> Result<u64> {
    let (n, m_prime) = extremal_params(m)?;
    let powerset_total = if n == 0 { 0 } else { (n as u64) << (n - 1) };
    Ok(powerset_total - colex_total_size(m_prime) - m_prime)
}

/// `(n, m')` for [`f_extremal`].
pub fn extremal_params(m: u64) -> Result<(u32, u64)> {
    if m == 0 {
        return Err(Error::domain("f(m) is defined for m >= 1"));
    }
    if m > 1 << 62 {
        return Err(Error::capacity(format!("m = {m} is too large")));
    }
    let n = ground_for(m);
    Ok((n, (1u64 << n) - m))
}

/// The union-closed family attaining `f(m)`: the complement in `P(n)` of
/// `{B ∪ {n} : B ∈ I(m')}`.
pub fn extremal_construction(m: u64) -> Result<Family> {
    let (n, m_prime) = extremal_params(m)?;
    let ground = GroundSize::new(n).map_err(|_| Error::capacity(format!("f({m}) needs n = {n}")))?;
    let mut removed = Family::empty(ground);
    for rank in 0..m_prime {
        removed.insert(ElementSet::from_bits(rank as u32).with(n))?;
    }
    Ok(removed.complement())
}

/// Slack `||I(|D|)|| - ||D||` of the Kruskal–Katona total-size bound for a
/// down-set `D`.
pub fn kk_downset_bound(d: &Family) -> Result<u64> {
    if !is_downset(d) {
        return Err(Error::NotDownSet);
    }
    let bound = colex_total_size(d.len() as u64);
    let total = d.total_size();
    assert!(total <= bound, "Kruskal–Katona total-size bound violated by {d:?}");
    Ok(bound - total)
}

/// Slack in `||I(m1)|| + ||I(m2)|| <= ||I(m1 + m2)|| - min(m1, m2)`;
/// negative slack means the inequality fails.
pub fn colex_sums_slack(m1: u64, m2: u64) -> i128 {
    colex_total_size(m1 + m2) as i128
        - m1.min(m2) as i128
        - colex_total_size(m1) as i128
        - colex_total_size(m2) as i128
}

pub fn colex_superadditivity(m1: u64, m2: u64) -> Result<bool> {
    if m1 == 0 || m2 == 0 {
        return Err(Error::domain("superadditivity needs m1, m2 >= 1"));
    }
    Ok(colex_sums_slack(m1, m2) >= 0)
}

/// Parameters of the colex upper bound for one admissible `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColexBoundParams {
    pub r: u32,
    pub m: u64,
    /// `m' = m - 2^r / 3`.
    pub m_prime: Frac,
    /// `m (r/2 - 1) + 3 m' / 2`.
    pub bound: Frac,
}

/// Every `r >= 1` with `2^r / 3 <= m <= 2^{r+1} / 3`, with its bound.
pub fn colex_bound_candidates(m: u64) -> Vec<ColexBoundParams> {
    let m3 = 3 * m as i128;
    (1..64u32)
        .filter(|&r| (1i128 << r) <= m3 && m3 <= (1i128 << (r + 1)))
        .map(|r| {
            let m_prime = frac(m3 - (1i128 << r), 3);
            let bound = Frac::from_integer(m as i128) * frac(r as i128 - 2, 2) + m_prime * frac(3, 2);
            ColexBoundParams { r, m, m_prime, bound }
        })
        .collect()
}

/// `min_r [m (r/2 - 1) + 3 m'/2]` over the admissible `r`; always an integer
/// or half-integer and at least `||I(m)||`.
pub fn colex_upper_bound(m: u64) -> Result<Frac> {
    if m <= 1 {
        return Err(Error::domain("the colex upper bound needs m >= 2"));
    }
    if m > 1 << 60 {
        return Err(Error::capacity(format!("m = {m} is too large")));
    }
    Ok(colex_bound_candidates(m).into_iter().map(|c| c.bound).min().expect("some r is admissible for m >= 1"))
}

/// Whether `m = 2^a + 2^{a-2} + ... + 2^{a-2j} + 2^{a-2j-1}` with `a > 0`,
/// `j >= 0` and `a - 2j - 1 > 0`.
pub fn is_alternating_form(m: u64) -> bool {
    alternating_form_with_min_exponent(m, 1)
}

/// The same shape with the last exponent allowed down to `min_last`.
pub fn alternating_form_with_min_exponent(m: u64, min_last: u32) -> bool {
    if m.count_ones() < 2 {
        return false;
    }
    let bits: Vec<u32> = (0..64).rev().filter(|b| m >> b & 1 == 1).collect();
    let (last, head) = bits.split_last().unwrap();
    let gaps_ok = head.windows(2).all(|w| w[0] - w[1] == 2);
    let tail_ok = head.last().unwrap() - last == 1;
    gaps_ok && tail_ok && *last >= min_last
}

/// `||I(m)|| > m r / 2`.
pub fn exceeds_half_r(m: u64, r: u32) -> bool {
    2 * colex_total_size(m) as u128 > m as u128 * r as u128
}

/// `m > 2^{r+2} / 3`.
pub fn above_cms_threshold(m: u64, r: u32) -> bool {
    3 * m as u128 > 1u128 << (r + 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::is_union_closed;
    use crate::testutil::{fam, g, set};

    /// Brute-force digit sums.
    fn digit_sum_total(m: u64) -> u64 {
        (0..m).map(|k| k.count_ones() as u64).sum()
    }

    #[test]
    fn colex_less_examples() {
        assert!(colex_less(ElementSet::EMPTY, set(&[1])).unwrap());
        assert!(colex_less(set(&[1, 2]), set(&[3])).unwrap());
        assert!(colex_less(set(&[1, 3]), set(&[2, 3])).unwrap());
        assert!(!colex_less(set(&[3]), set(&[1, 2])).unwrap());
        assert!(colex_less(set(&[2]), set(&[2])).is_err());
    }

    #[test]
    fn rank_order_is_colex_order() {
        for n in 0..=10u32 {
            let mut sets: Vec<ElementSet> = Family::full(g(n)).iter().collect();
            sets.reverse();
            sets.sort_by(|&a, &b| colex_cmp(a, b));
            let ranks: Vec<u64> = sets.iter().map(|&s| ColexRank::of(s).0).collect();
            assert_eq!(ranks, (0..1u64 << n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn i9_matches_listing() {
        let i9 = initial_segment(9).unwrap();
        let listing = fam(4, &[&[], &[1], &[2], &[1, 2], &[3], &[1, 3], &[2, 3], &[1, 2, 3], &[4]]);
        assert_eq!(i9, listing);
        assert_eq!(i9.total_size(), 13);
    }

    #[test]
    fn initial_segment_edges() {
        assert!(initial_segment(0).unwrap().is_empty());
        assert_eq!(initial_segment(1).unwrap(), fam(0, &[&[]]));
        for r in 0..=10 {
            assert_eq!(initial_segment(1 << r).unwrap(), Family::full(g(r)));
        }
        assert!(initial_segment_in(9, g(3)).is_err());
        assert_eq!(initial_segment_in(70, g(7)).unwrap().len(), 70);
    }

    #[test]
    fn initial_segments_are_downsets() {
        let n = g(16);
        for m in (0..=1u64 << 16).step_by(97).chain([1 << 16, 65535, 3, 5]) {
            assert!(is_downset(&initial_segment_in(m, n).unwrap()), "I({m})");
        }
    }

    #[test]
    fn total_size_examples() {
        assert_eq!(colex_total_size(9), 13);
        assert_eq!(colex_total_size(6), 7);
        assert_eq!(colex_total_size(0), 0);
        for r in 1..40u64 {
            assert_eq!(colex_total_size(1 << r), r << (r - 1));
        }
    }

    #[test]
    fn total_size_matches_digit_sums() {
        let mut acc = 0u64;
        for m in 0..=1u64 << 16 {
            assert_eq!(colex_total_size(m), acc, "m = {m}");
            acc += m.count_ones() as u64;
        }
        assert_eq!(colex_total_size(1000), digit_sum_total(1000));
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_extremal(1).unwrap(), 0);
        assert_eq!(f_extremal(8).unwrap(), 12);
        assert_eq!(f_extremal(3).unwrap(), 3);
        assert_eq!(f_extremal(6).unwrap(), 9);
        assert_eq!(f_extremal(12).unwrap(), 24);
        assert!(f_extremal(0).is_err());
    }

    #[test]
    fn f_exceeds_reimer_bound() {
        for m in 1..5000u64 {
            let f = f_extremal(m).unwrap() as f64;
            assert!(f >= m as f64 / 2.0 * (m as f64).log2() - 1e-9, "m = {m}");
        }
    }

    #[test]
    fn extremal_construction_examples() {
        for n in 0..=5 {
            assert_eq!(extremal_construction(1 << n).unwrap(), Family::full(g(n)));
        }
        let a = extremal_construction(3).unwrap();
        assert_eq!(a, fam(2, &[&[], &[1], &[1, 2]]));
        assert_eq!(a.total_size(), 3);
        let a = extremal_construction(6).unwrap();
        assert_eq!(a.complement(), fam(3, &[&[3], &[1, 3]]));
        assert_eq!(a.total_size(), 9);
        for m in 1..=300 {
            let a = extremal_construction(m).unwrap();
            assert_eq!(a.len() as u64, m);
            assert!(is_union_closed(&a));
            assert_eq!(a.total_size(), f_extremal(m).unwrap());
        }
    }

    #[test]
    fn kk_examples() {
        assert_eq!(kk_downset_bound(&initial_segment(11).unwrap()), Ok(0));
        assert_eq!(kk_downset_bound(&fam(3, &[&[], &[3]])), Ok(0));
        assert_eq!(kk_downset_bound(&Family::full(g(2))), Ok(0));
        assert_eq!(kk_downset_bound(&fam(2, &[&[1]])), Err(Error::NotDownSet));
    }

    #[test]
    fn superadditivity_examples() {
        assert!(colex_superadditivity(1, 1).unwrap());
        assert_eq!(colex_sums_slack(1, 1), 0);
        assert_eq!(colex_sums_slack(4, 4), 12 - 4 - 8);
        assert!(colex_superadditivity(9, 9).unwrap());
        assert_eq!(colex_sums_slack(9, 9), colex_total_size(18) as i128 - 9 - 26);
        assert!(colex_superadditivity(0, 3).is_err());
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(colex_upper_bound(6).unwrap(), Frac::from_integer(7));
        let c = colex_bound_candidates(6);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].r, 4);
        assert_eq!(c[0].m_prime, frac(2, 3));
        assert_eq!(colex_upper_bound(22).unwrap(), Frac::from_integer(colex_total_size(22) as i128));
        assert!(colex_upper_bound(1).is_err());
    }

    #[test]
    fn alternating_forms() {
        assert!(is_alternating_form(6));
        assert!(is_alternating_form(22));
        assert!(is_alternating_form(12));
        assert!(!is_alternating_form(3));
        assert!(!is_alternating_form(8));
        assert!(!is_alternating_form(7));
        assert!(alternating_form_with_min_exponent(3, 0));
        assert!(alternating_form_with_min_exponent(11, 0));
    }

    #[test]
    fn cms_threshold_small_r() {
        for r in 1..=10u32 {
            for m in 1..=1u64 << (r + 3) {
                assert_eq!(exceeds_half_r(m, r), above_cms_threshold(m, r), "r = {r}, m = {m}");
            }
        }
    }
}
