//! Basic predicates and statistics on families: union-closure, simple
//! rootedness, roots, rooted subfamilies, shadows and cubes.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::rational::{frac_string, Frac};
use crate::set::{ElementSet, GroundSize};

/// True iff `A ∪ B` is a member for all members `A`, `B`.
pub fn is_union_closed(f: &Family) -> bool {
    let sets: Vec<ElementSet> = f.iter().collect();
    for (k, &a) in sets.iter().enumerate() {
        for &b in &sets[k + 1..] {
            if !f.contains(a.union(b)) {
                return false;
            }
        }
    }
    true
}

/// True iff every member contains all its subsets.
pub fn is_downset(f: &Family) -> bool {
    f.downset_core() == *f
}

/// True iff every member contains all its supersets.
pub fn is_upset(f: &Family) -> bool {
    f.upward_closure() == *f
}

/// For each element `r`, the members `B` with `r ∈ B` and `[{r}, B] ⊆ F`.
///
/// Computed per `r` as an AND-over-subsets sweep restricted to cells that
/// contain `r`.
#[derive(Clone, Debug)]
pub struct RootTable {
    n: GroundSize,
    per_element: Vec<Family>,
}

impl RootTable {
    pub fn new(f: &Family) -> Self {
        let n = f.ground();
        let per_element = n
            .elements()
            .map(|r| {
                let mut g = f.intersection(&Family::containing(n, r));
                for j in n.elements().filter(|&j| j != r) {
                    g.pair_map(j, |lo, hi| (lo, hi & lo));
                }
                g
            })
            .collect();
        RootTable { n, per_element }
    }

    /// Members rooted at `r`.
    pub fn rooted_at(&self, r: u32) -> &Family {
        &self.per_element[(r - 1) as usize]
    }

    /// `R_F(B)`: all roots of `B`.
    pub fn roots_of(&self, b: ElementSet) -> ElementSet {
        let mut bits = 0u32;
        for r in b.elements() {
            if self.per_element[(r - 1) as usize].contains(b) {
                bits |= 1 << (r - 1);
            }
        }
        ElementSet::from_bits(bits)
    }

    /// Members rooted at some element of `s`.
    pub fn rooted_in(&self, s: ElementSet) -> Family {
        let mut out = Family::empty(self.n);
        for r in s.elements().filter(|&r| r <= self.n.get()) {
            out = out.union(&self.per_element[(r - 1) as usize]);
        }
        out
    }

    /// Members with at least one root.
    pub fn rooted(&self) -> Family {
        self.rooted_in(self.n.full_set())
    }

    /// `max_i |F_{i}|`.
    pub fn max_rooted(&self) -> usize {
        self.per_element.iter().map(Family::len).max().unwrap_or(0)
    }
}

/// True iff every nonempty member has a root. `∅` may be a member.
pub fn is_simply_rooted(f: &Family) -> bool {
    is_simply_rooted_with(f, &RootTable::new(f))
}

pub(crate) fn is_simply_rooted_with(f: &Family, roots: &RootTable) -> bool {
    let mut nonempty = f.clone();
    nonempty.remove(ElementSet::EMPTY);
    nonempty.is_subset(&roots.rooted())
}

/// `R_F(B)`, the elements `r ∈ B` with `[{r}, B] ⊆ F`.
pub fn roots(f: &Family, b: ElementSet) -> Result<ElementSet> {
    if !f.contains(b) {
        return Err(Error::NotMember(b));
    }
    let mut bits = 0u32;
    for r in b.elements() {
        let free = b.without(r);
        if free.subsets().all(|c| f.contains(c.with(r))) {
            bits |= 1 << (r - 1);
        }
    }
    Ok(ElementSet::from_bits(bits))
}

/// `F_S`: members rooted at some element of `S`. Never contains `∅`.
pub fn rooted_subfamily(f: &Family, s: ElementSet) -> Result<Family> {
    if !s.fits(f.ground()) {
        return Err(Error::SetOutOfRange { set: s, n: f.ground().get() });
    }
    let table = RootTable::new(f);
    if !is_simply_rooted_with(f, &table) {
        return Err(Error::NotSimplyRooted);
    }
    Ok(table.rooted_in(s))
}

/// `δB = {B - i : i ∈ B}`.
pub fn shadow(b: ElementSet, n: GroundSize) -> Result<Family> {
    Family::from_sets(n, b.elements().map(|i| b.without(i)))
}

/// `δ₂B`: subsets of `B` of size `|B| - 2`.
pub fn shadow2(b: ElementSet, n: GroundSize) -> Result<Family> {
    let elems: Vec<u32> = b.elements().collect();
    let mut out = Family::empty(n);
    for (k, &i) in elems.iter().enumerate() {
        for &j in &elems[k + 1..] {
            out.insert(b.without(i).without(j))?;
        }
    }
    Ok(out)
}

/// The interval `[A, B] = {C : A ⊆ C ⊆ B}`.
pub fn cube(a: ElementSet, b: ElementSet, n: GroundSize) -> Result<Family> {
    if !a.is_subset(b) {
        return Err(Error::NotSubset(a, b));
    }
    Family::from_sets(n, b.difference(a).subsets().map(|c| c.union(a)))
}

/// Size, total size, degrees and the largest rooted fraction of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyStats {
    pub size: u64,
    pub total_size: u64,
    pub degrees: Vec<u64>,
    /// `p = max_i |F_{i}| / m`, zero for the empty family.
    pub max_rooted_fraction: Frac,
    pub max_rooted: u64,
}

impl FamilyStats {
    pub fn max_degree(&self) -> u64 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Serialize)]
struct StatsJson<'a> {
    size: u64,
    total_size: u64,
    degrees: &'a [u64],
    max_rooted: u64,
    p: String,
}

impl Serialize for FamilyStats {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        StatsJson {
            size: self.size,
            total_size: self.total_size,
            degrees: &self.degrees,
            max_rooted: self.max_rooted,
            p: frac_string(&self.max_rooted_fraction),
        }
        .serialize(s)
    }
}

pub fn stats(f: &Family) -> FamilyStats {
    stats_with(f, &RootTable::new(f))
}

pub(crate) fn stats_with(f: &Family, roots: &RootTable) -> FamilyStats {
    let size = f.len() as u64;
    let degrees = f.degrees();
    let max_rooted = roots.max_rooted() as u64;
    let max_rooted_fraction =
        if size == 0 { Frac::from_integer(0) } else { Ratio::new(max_rooted as i128, size as i128) };
    FamilyStats { size, total_size: degrees.iter().sum(), degrees, max_rooted_fraction, max_rooted }
}
