use crate::family::Family;
use crate::set::{ElementSet, GroundSize};

pub(crate) fn g(n: u32) -> GroundSize {
    GroundSize::new(n).unwrap()
}

pub(crate) fn set(es: &[u32]) -> ElementSet {
    ElementSet::from_elements(es.iter().copied()).unwrap()
}

pub(crate) fn fam(n: u32, sets: &[&[u32]]) -> Family {
    Family::from_sets(g(n), sets.iter().map(|s| set(s))).unwrap()
}

/// Every family over `P(n)`, `n <= 4`.
pub(crate) fn all_families(n: u32) -> impl Iterator<Item = Family> {
    let cells = 1u32 << n;
    let count: u64 = 1 << cells;
    (0..count).map(move |w| Family::from_word(g(n), w).unwrap())
}
