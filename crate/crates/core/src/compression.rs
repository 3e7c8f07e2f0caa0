//! Down- and up-compressions, compression traces and Reimer's cube
//! decomposition.
//!
//! `d_i` replaces each member `B ∋ i` by `B - i` when `B - i` is vacant;
//! `u_i` replaces each `A ∌ i` by `A + i` when `A + i` is vacant. The full
//! down-compression applies `d_1` first and `d_n` last. Up-compressions use
//! the same ascending order by default, which is the order for which
//! `U_k(A) = P(n) \ D_k(P(n) \ A)` holds for every prefix `k`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::predicates::{is_simply_rooted, is_union_closed};
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Down,
    Up,
}

/// Order in which the up-compressions `u_1, ..., u_n` are applied.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UpOrder {
    /// `u_1` first, matching the down-compression order.
    #[default]
    Ascending,
    /// `u_n` first.
    Descending,
}

impl UpOrder {
    fn elements(self, n: u32) -> Vec<u32> {
        match self {
            UpOrder::Ascending => (1..=n).collect(),
            UpOrder::Descending => (1..=n).rev().collect(),
        }
    }
}

fn check_direction(f: &Family, i: u32) -> Result<()> {
    if i == 0 || i > f.ground().get() {
        return Err(Error::ElementOutOfRange { element: i, n: f.ground().get() });
    }
    Ok(())
}

#[inline]
fn step(f: &mut Family, dir: Direction, i: u32) {
    match dir {
        Direction::Down => f.pair_map(i, |lo, hi| (lo | hi, lo & hi)),
        Direction::Up => f.pair_map(i, |lo, hi| (lo & hi, lo | hi)),
    }
}

/// Moves each tracked image through one compression of `family`, then
/// compresses `family` itself.
fn advance(family: &mut Family, images: &mut [ElementSet], dir: Direction, i: u32) {
    for x in images.iter_mut() {
        match dir {
            Direction::Down => {
                if x.contains(i) && !family.contains(x.without(i)) {
                    *x = x.without(i);
                }
            }
            Direction::Up => {
                if !x.contains(i) && !family.contains(x.with(i)) {
                    *x = x.with(i);
                }
            }
        }
    }
    step(family, dir, i);
}

/// `d_i(F)`.
pub fn down_compress_dir(f: &Family, i: u32) -> Result<Family> {
    check_direction(f, i)?;
    let mut out = f.clone();
    step(&mut out, Direction::Down, i);
    Ok(out)
}

/// `u_i(F)`.
pub fn up_compress_dir(f: &Family, i: u32) -> Result<Family> {
    check_direction(f, i)?;
    let mut out = f.clone();
    step(&mut out, Direction::Up, i);
    Ok(out)
}

/// Where every member of a family ends up after a full compression sequence.
///
/// Only the original family and the final images are stored; intermediate
/// families are recomputed on demand with [`prefix`](Self::prefix) or
/// [`replay`](Self::replay).
#[derive(Clone, Debug)]
pub struct CompressionTrace {
    direction: Direction,
    order: Vec<u32>,
    original: Family,
    sets: Vec<ElementSet>,
    images: Vec<ElementSet>,
    result: Family,
}

impl CompressionTrace {
    fn run(f: &Family, direction: Direction, order: Vec<u32>) -> Self {
        let sets: Vec<ElementSet> = f.iter().collect();
        let mut images = sets.clone();
        let mut family = f.clone();
        for &i in &order {
            advance(&mut family, &mut images, direction, i);
        }
        CompressionTrace { direction, order, original: f.clone(), sets, images, result: family }
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Elements in the order their compressions are applied.
    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn original(&self) -> &Family {
        &self.original
    }

    /// The fully compressed family.
    pub fn result(&self) -> &Family {
        &self.result
    }

    /// Original members, ascending.
    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    /// Final images, aligned with [`sets`](Self::sets).
    pub fn images(&self) -> &[ElementSet] {
        &self.images
    }

    pub fn pairs(&self) -> impl Iterator<Item = (ElementSet, ElementSet)> + '_ {
        self.sets.iter().copied().zip(self.images.iter().copied())
    }

    /// Final image of an original member.
    pub fn image(&self, b: ElementSet) -> Option<ElementSet> {
        self.sets.binary_search(&b).ok().map(|k| self.images[k])
    }

    /// Family and per-set images after the first `k` compressions.
    pub fn prefix(&self, k: usize) -> (Family, Vec<ElementSet>) {
        let mut family = self.original.clone();
        let mut images = self.sets.clone();
        for &i in &self.order[..k.min(self.order.len())] {
            advance(&mut family, &mut images, self.direction, i);
        }
        (family, images)
    }

    /// Calls `visit(k, family_k, images_k)` for every prefix length
    /// `k = 0..=n`, in one pass.
    pub fn replay(&self, mut visit: impl FnMut(usize, &Family, &[ElementSet])) {
        let mut family = self.original.clone();
        let mut images = self.sets.clone();
        visit(0, &family, &images);
        for (k, &i) in self.order.iter().enumerate() {
            advance(&mut family, &mut images, self.direction, i);
            visit(k + 1, &family, &images);
        }
    }

    /// Two-column `before -> after` listing.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (b, d) in self.pairs() {
            writeln!(s, "{b} -> {d}").unwrap();
        }
        s
    }
}

/// `d(F) = d_n ... d_1(F)` and the trace `B ↦ d_F(B)`.
pub fn full_down(f: &Family) -> (Family, CompressionTrace) {
    let trace = CompressionTrace::run(f, Direction::Down, (1..=f.ground().get()).collect());
    (trace.result.clone(), trace)
}

/// `u(A)` with `u_1` applied first, and the trace `A ↦ u_A(A)`.
pub fn full_up(f: &Family) -> (Family, CompressionTrace) {
    full_up_with(f, UpOrder::Ascending)
}

pub fn full_up_with(f: &Family, order: UpOrder) -> (Family, CompressionTrace) {
    let trace = CompressionTrace::run(f, Direction::Up, order.elements(f.ground().get()));
    (trace.result.clone(), trace)
}

/// Members with `d_F(B) = B`.
pub fn fixed_sets(f: &Family) -> Family {
    fixed_in(&full_down(f).1)
}

pub(crate) fn fixed_in(trace: &CompressionTrace) -> Family {
    let mut out = Family::empty(trace.original.ground());
    for (b, d) in trace.pairs() {
        if b == d {
            out.insert(b).expect("trace sets lie in the ground set");
        }
    }
    out
}

/// The cubes `[A, u_A(A)]` of a union-closed family.
#[derive(Clone, Debug)]
pub struct ReimerDecomposition {
    cubes: Vec<(ElementSet, ElementSet)>,
    overlap: Option<(ElementSet, ElementSet)>,
}

impl ReimerDecomposition {
    /// `(A, u_A(A))` for every member `A`, ascending in `A`.
    pub fn cubes(&self) -> &[(ElementSet, ElementSet)] {
        &self.cubes
    }

    /// `Σ 2^{|u(A) \ A|}`.
    pub fn cell_count(&self) -> u64 {
        self.cubes.iter().map(|(a, u)| 1u64 << u.difference(*a).len()).sum()
    }

    pub fn is_disjoint(&self) -> bool {
        self.overlap.is_none()
    }

    /// Two members whose cubes meet, if any.
    pub fn overlap(&self) -> Option<(ElementSet, ElementSet)> {
        self.overlap
    }

    /// The member whose cube contains `b`.
    pub fn owner(&self, b: ElementSet) -> Option<ElementSet> {
        self.cubes.iter().find(|(a, u)| a.is_subset(b) && b.is_subset(*u)).map(|(a, _)| *a)
    }
}

fn find_overlap(n: crate::set::GroundSize, cubes: &[(ElementSet, ElementSet)]) -> Option<(ElementSet, ElementSet)> {
    let mut owner: Vec<u32> = vec![u32::MAX; n.cells()];
    for (k, (a, u)) in cubes.iter().enumerate() {
        for c in u.difference(*a).subsets() {
            let cell = c.union(*a).index();
            if owner[cell] != u32::MAX {
                return Some((cubes[owner[cell] as usize].0, *a));
            }
            owner[cell] = k as u32;
        }
    }
    None
}

pub fn reimer_decomposition(a: &Family) -> Result<ReimerDecomposition> {
    reimer_decomposition_with(a, UpOrder::Ascending)
}

pub fn reimer_decomposition_with(a: &Family, order: UpOrder) -> Result<ReimerDecomposition> {
    if !is_union_closed(a) {
        return Err(Error::NotUnionClosed);
    }
    Ok(reimer_from_trace(&full_up_with(a, order).1))
}

pub(crate) fn reimer_from_trace(trace: &CompressionTrace) -> ReimerDecomposition {
    let cubes: Vec<_> = trace.pairs().collect();
    let overlap = find_overlap(trace.original.ground(), &cubes);
    ReimerDecomposition { cubes, overlap }
}

/// For a member `B` of a simply rooted family that moves under `d_F`,
/// the prefix length `k` (the first step at which `B` moves) and the member
/// `A` of `P(n) \ F` with `U_{(A,k)}(A) = B`.
///
/// `Ok(None)` means no such member exists.
pub fn uc_image_witness(f: &Family, b: ElementSet) -> Result<Option<(usize, ElementSet)>> {
    uc_image_witness_with(f, b, UpOrder::Ascending)
}

pub fn uc_image_witness_with(f: &Family, b: ElementSet, order: UpOrder) -> Result<Option<(usize, ElementSet)>> {
    if !f.contains(b) {
        return Err(Error::NotMember(b));
    }
    if !is_simply_rooted(f) {
        return Err(Error::NotSimplyRooted);
    }
    let (_, down) = full_down(f);
    let (_, up) = full_up_with(&f.complement(), order);
    uc_witness_from(&down, &up, b)
}

/// First prefix length at which member `b` moves; until then its image is `b`.
pub(crate) fn first_move(down: &CompressionTrace, b: ElementSet) -> Option<usize> {
    let mut family = down.original.clone();
    for (k, &i) in down.order.iter().enumerate() {
        let moves = match down.direction {
            Direction::Down => b.contains(i) && !family.contains(b.without(i)),
            Direction::Up => !b.contains(i) && !family.contains(b.with(i)),
        };
        if moves {
            return Some(k + 1);
        }
        step(&mut family, down.direction, i);
    }
    None
}

pub(crate) fn uc_witness_from(
    down: &CompressionTrace,
    up: &CompressionTrace,
    b: ElementSet,
) -> Result<Option<(usize, ElementSet)>> {
    if down.image(b) == Some(b) {
        return Err(Error::domain(format!("{b} is fixed by the down-compression; no witness applies")));
    }
    let k = first_move(down, b).expect("a set that moves has a first move");
    let (_, images) = up.prefix(k);
    Ok(up.sets.iter().zip(&images).find(|(_, &img)| img == b).map(|(&a, _)| (k, a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{all_families, fam, g, set};

    #[test]
    fn down_dir_examples() {
        assert_eq!(down_compress_dir(&fam(2, &[&[1], &[1, 2]]), 1).unwrap(), fam(2, &[&[], &[2]]));
        assert_eq!(down_compress_dir(&fam(2, &[&[], &[1]]), 1).unwrap(), fam(2, &[&[], &[1]]));
        assert_eq!(down_compress_dir(&fam(2, &[&[2], &[1, 2]]), 2).unwrap(), fam(2, &[&[], &[1]]));
        assert!(down_compress_dir(&fam(2, &[&[1]]), 3).is_err());
        assert!(down_compress_dir(&fam(2, &[&[1]]), 0).is_err());
    }

    #[test]
    fn up_dir_examples() {
        assert_eq!(up_compress_dir(&fam(1, &[&[]]), 1).unwrap(), fam(1, &[&[1]]));
        assert_eq!(up_compress_dir(&fam(2, &[&[], &[1]]), 1).unwrap(), fam(2, &[&[], &[1]]));
        let f = fam(2, &[&[1], &[1, 2]]);
        assert_eq!(down_compress_dir(&f, 1).unwrap().complement(), up_compress_dir(&f.complement(), 1).unwrap());
    }

    /// Direct set-by-set definition of `d_i`, independent of the word sweep.
    fn down_oracle(f: &Family, i: u32) -> Family {
        Family::from_sets(
            f.ground(),
            f.iter().map(|b| if b.contains(i) && !f.contains(b.without(i)) { b.without(i) } else { b }),
        )
        .unwrap()
    }

    #[test]
    fn word_sweep_matches_definition() {
        for n in 1..=4 {
            for f in all_families(n).step_by(7) {
                for i in 1..=n {
                    assert_eq!(down_compress_dir(&f, i).unwrap(), down_oracle(&f, i));
                }
            }
        }
        // across word boundaries
        let n = g(9);
        let f = Family::from_sets(n, (0..512u32).filter(|b| b.count_ones() % 3 == 1).map(ElementSet::from_bits)).unwrap();
        for i in 1..=9 {
            assert_eq!(down_compress_dir(&f, i).unwrap(), down_oracle(&f, i));
        }
    }

    #[test]
    fn eq1_duality_exhaustive() {
        for n in 1..=3 {
            for f in all_families(n) {
                for i in 1..=n {
                    let d = down_compress_dir(&f, i).unwrap();
                    assert_eq!(d.len(), f.len());
                    assert!(d.total_size() <= f.total_size());
                    assert_eq!(down_compress_dir(&d, i).unwrap(), d);
                    assert_eq!(d.complement(), up_compress_dir(&f.complement(), i).unwrap());
                }
            }
        }
    }

    #[test]
    fn full_down_examples() {
        let (d, t) = full_down(&fam(2, &[&[2], &[1, 2]]));
        assert_eq!(d, fam(2, &[&[], &[1]]));
        assert_eq!(t.image(set(&[2])), Some(ElementSet::EMPTY));
        assert_eq!(t.image(set(&[1, 2])), Some(set(&[1])));

        let down = fam(3, &[&[], &[1], &[2], &[1, 2], &[3]]);
        let (d, t) = full_down(&down);
        assert_eq!(d, down);
        assert!(t.pairs().all(|(b, x)| b == x));

        let f = Family::full(g(2)).difference(&fam(2, &[&[]]));
        let (d, t) = full_down(&f);
        assert_eq!(d, fam(2, &[&[], &[1], &[2]]));
        assert_eq!(t.image(set(&[1])), Some(ElementSet::EMPTY));
        assert_eq!(t.image(set(&[2])), Some(set(&[2])));
        assert_eq!(t.image(set(&[1, 2])), Some(set(&[1])));
        assert_eq!(t.to_text(), "{1} -> {}\n{2} -> {2}\n{1,2} -> {1}\n");
    }

    #[test]
    fn full_up_examples() {
        let up = fam(2, &[&[1], &[1, 2]]);
        assert_eq!(full_up(&up).0, up);
        let a = fam(2, &[&[], &[1], &[1, 2]]);
        assert_eq!(full_up(&a).0, full_down(&a.complement()).0.complement());
        assert_eq!(full_up(&fam(2, &[&[]])).0, fam(2, &[&[1, 2]]));
    }

    #[test]
    fn up_prefixes_are_dual_to_down_prefixes() {
        for n in 1..=3 {
            for f in all_families(n) {
                let (_, down) = full_down(&f.complement());
                let (_, up) = full_up(&f);
                for k in 0..=n as usize {
                    assert_eq!(up.prefix(k).0, down.prefix(k).0.complement());
                }
            }
        }
    }

    #[test]
    fn descending_up_order_breaks_prefix_duality() {
        let mut broken = false;
        for f in all_families(2) {
            let (_, down) = full_down(&f.complement());
            let (_, up) = full_up_with(&f, UpOrder::Descending);
            if up.prefix(1).0 != down.prefix(1).0.complement() {
                broken = true;
            }
        }
        assert!(broken);
    }

    #[test]
    fn fixed_sets_examples() {
        let down = fam(3, &[&[], &[1], &[2]]);
        assert_eq!(fixed_sets(&down), down);
        assert!(fixed_sets(&fam(2, &[&[2], &[1, 2]])).is_empty());
        let f = Family::full(g(2)).difference(&fam(2, &[&[]]));
        assert_eq!(fixed_sets(&f), fam(2, &[&[2]]));
    }

    #[test]
    fn reimer_examples() {
        for n in 0..=3 {
            let r = reimer_decomposition(&Family::full(g(n))).unwrap();
            assert!(r.cubes().iter().all(|(a, u)| a == u));
        }
        let r = reimer_decomposition(&fam(2, &[&[]])).unwrap();
        assert_eq!(r.cubes(), &[(ElementSet::EMPTY, set(&[1, 2]))]);
        assert_eq!(r.cell_count(), 4);

        let r = reimer_decomposition(&fam(2, &[&[], &[1], &[1, 2]])).unwrap();
        assert!(r.is_disjoint());
        assert!(r.cell_count() <= 4);

        assert!(matches!(reimer_decomposition(&fam(2, &[&[1], &[2]])), Err(Error::NotUnionClosed)));
    }

    #[test]
    fn reimer_cubes_disjoint_exhaustive() {
        for n in 0..=4 {
            for a in all_families(n).filter(is_union_closed) {
                let r = reimer_decomposition(&a).unwrap();
                assert!(r.is_disjoint(), "{a:?}");
                assert!(r.cell_count() <= 1 << n);
            }
        }
    }

    #[test]
    fn uc_image_examples() {
        let f = Family::full(g(2)).difference(&fam(2, &[&[]]));
        assert_eq!(uc_image_witness(&f, set(&[1])).unwrap(), Some((1, ElementSet::EMPTY)));

        let f = fam(2, &[&[2], &[1, 2]]);
        assert_eq!(uc_image_witness(&f, set(&[1, 2])).unwrap(), Some((2, set(&[1]))));

        let down = fam(2, &[&[], &[1], &[2]]);
        for b in down.iter() {
            assert!(uc_image_witness(&down, b).is_err());
        }
        assert!(uc_image_witness(&fam(2, &[&[1, 2]]), set(&[1, 2])).is_err());
    }
}
