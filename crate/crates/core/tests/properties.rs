use proptest::prelude::*;

use ucsize_core::colex::{colex_cmp, colex_total_size, colex_upper_bound, initial_segment, ColexRank};
use ucsize_core::compression::{down_compress_dir, full_down, reimer_decomposition, up_compress_dir};
use ucsize_core::enumerate::{mixed_union_closed, random_union_closed, sample_rng};
use ucsize_core::predicates::{
    is_downset, is_simply_rooted, is_union_closed, roots, rooted_subfamily, shadow, shadow2, RootTable,
};
use ucsize_core::stability::{
    deficiency, full_shadow_sets, largest_downset, z_of_split, z_unadjusted, Partition, RootedFamily,
};
use ucsize_core::{ElementSet, Family, GroundSize};

fn ground(n: u32) -> GroundSize {
    GroundSize::new(n).unwrap()
}

/// Any family over `[n]`, `1 <= n <= 6`.
fn arbitrary_family() -> impl Strategy<Value = Family> {
    (1u32..=6).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), 1 << n).prop_map(move |bits| {
            let sets = bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| ElementSet::from_bits(i as u32));
            Family::from_sets(ground(n), sets).unwrap()
        })
    })
}

/// Complement of a random union-closed family over `[n]`, `1 <= n <= 7`.
fn rooted_family() -> impl Strategy<Value = Family> {
    (1u32..=7, any::<u64>()).prop_map(|(n, seed)| mixed_union_closed(ground(n), &mut sample_rng(seed, 0)).complement())
}

fn rooted_with_subset() -> impl Strategy<Value = (Family, u32)> {
    rooted_family().prop_flat_map(|f| {
        let full = f.ground().full_set().bits();
        (Just(f), 0..=full)
    })
}

fn total(f: &Family) -> i128 {
    f.total_size() as i128
}

fn colex(m: usize) -> i128 {
    colex_total_size(m as u64) as i128
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn union_closed_iff_complement_rooted(f in arbitrary_family()) {
        prop_assert_eq!(is_union_closed(&f), is_simply_rooted(&f.complement()));
    }

    #[test]
    fn degrees_sum_to_total(f in arbitrary_family()) {
        prop_assert_eq!(f.degrees().iter().sum::<u64>(), f.total_size());
    }

    #[test]
    fn shadow_sizes(bits in 0u32..1 << 8) {
        let b = ElementSet::from_bits(bits);
        let k = b.len() as usize;
        prop_assert_eq!(shadow(b, ground(8)).unwrap().len(), k);
        prop_assert_eq!(shadow2(b, ground(8)).unwrap().len(), k * k.saturating_sub(1) / 2);
    }

    #[test]
    fn compression_duality(f in arbitrary_family()) {
        for i in f.ground().elements() {
            let d = down_compress_dir(&f, i).unwrap();
            prop_assert_eq!(d.complement(), up_compress_dir(&f.complement(), i).unwrap());
        }
    }

    #[test]
    fn deficiency_bound(f in arbitrary_family()) {
        prop_assert!(total(&f) <= colex(f.len()) + deficiency(&f) as i128);
    }

    #[test]
    fn rooted_subfamilies_cover((f, s) in rooted_with_subset()) {
        let n = f.ground();
        let s = ElementSet::from_bits(s);
        let t = n.full_set().difference(s);
        let fs = rooted_subfamily(&f, s).unwrap();
        let ft = rooted_subfamily(&f, t).unwrap();
        let empty = f.contains(ElementSet::EMPTY) as usize;
        prop_assert!(fs.len() + ft.len() + empty >= f.len());
        prop_assert!(is_simply_rooted(&fs));
        prop_assert!(is_simply_rooted(&ft));
    }

    #[test]
    fn down_compression_facts(f in rooted_family()) {
        let (d, trace) = full_down(&f);
        prop_assert!(is_downset(&d));
        prop_assert_eq!(d.len(), f.len());
        let mut images: Vec<_> = trace.images().to_vec();
        images.sort();
        images.dedup();
        prop_assert_eq!(images.len(), f.len());
        let table = RootTable::new(&f);
        for (b, img) in trace.pairs() {
            let r = table.roots_of(b);
            prop_assert!(img == b || (img.is_subset(b) && b.difference(img).len() == 1 && b.difference(img).is_subset(r)));
            for x in b.elements().filter(|&x| !f.contains(b.without(x))) {
                prop_assert!(img == b || img == b.without(x));
            }
        }
    }

    #[test]
    fn prefix_images_lie_in_powerset_core(f in rooted_family()) {
        let (_, trace) = full_down(&f);
        for k in 1..=f.ground().get() as usize {
            let (dk, imgs) = trace.prefix(k);
            let core = dk.downset_core();
            for (b, img) in trace.sets().iter().zip(&imgs) {
                prop_assert!(img == b || core.contains(*img));
            }
        }
    }

    #[test]
    fn subfamily_compressions((f, s) in rooted_with_subset()) {
        let sub = rooted_subfamily(&f, ElementSet::from_bits(s)).unwrap();
        let (_, big) = full_down(&f);
        let (_, small) = full_down(&sub);
        for k in 0..=f.ground().get() as usize {
            prop_assert!(small.prefix(k).0.is_subset(&big.prefix(k).0));
        }
        let rf = RootedFamily::new(&f).unwrap();
        let bad = rf.bad();
        for (b, img) in small.pairs() {
            if img == b {
                prop_assert_eq!(big.image(b), Some(b));
            }
            if !bad.contains(b) {
                prop_assert_eq!(big.image(b), Some(img));
            }
        }
    }

    #[test]
    fn total_size_bounds(f in rooted_family()) {
        let rf = RootedFamily::new(&f).unwrap();
        let (m, im) = (f.len() as i128, colex(f.len()));
        prop_assert!(total(&f) <= im + m - rf.fixed().len() as i128);
        prop_assert!(total(&f) <= im + m - full_shadow_sets(&f).len() as i128);
        prop_assert!(total(&f) <= im + m - largest_downset(&f).len() as i128);
        prop_assert!(2 * total(&f) <= 2 * (im + m) - rf.bad().len() as i128);
    }

    #[test]
    fn y_at_least_z_for_every_partition((f, s) in rooted_with_subset()) {
        let rf = RootedFamily::new(&f).unwrap();
        let split = rf.split(Partition::new(ElementSet::from_bits(s), f.ground()).unwrap());
        let y = rf.y().len();
        prop_assert!(y >= z_of_split(&rf, &split).len());
        prop_assert!(y >= z_unadjusted(&rf, &split).len());
    }

    #[test]
    fn roots_agree_with_table(f in rooted_family()) {
        let table = RootTable::new(&f);
        for b in f.iter() {
            prop_assert_eq!(table.roots_of(b), roots(&f, b).unwrap());
        }
    }

    #[test]
    fn reimer_cubes_disjoint(n in 1u32..=8, seeds in 1u64..40, seed in any::<u64>()) {
        let a = random_union_closed(ground(n), seeds, seed).unwrap();
        prop_assert!(is_union_closed(&a));
        prop_assert!(reimer_decomposition(&a).unwrap().is_disjoint());
    }

    #[test]
    fn generation_is_reproducible(n in 1u32..=10, seeds in 1u64..40, seed in any::<u64>()) {
        prop_assert_eq!(random_union_closed(ground(n), seeds, seed).unwrap(), random_union_closed(ground(n), seeds, seed).unwrap());
    }

    #[test]
    fn colex_bound_holds(m in 2u64..1 << 40) {
        let bound = colex_upper_bound(m).unwrap();
        prop_assert!(ucsize_core::Frac::from_integer(colex_total_size(m) as i128) <= bound);
    }

    #[test]
    fn colex_order_is_rank_order(a in 0u32..1 << 12, b in 0u32..1 << 12) {
        let (x, y) = (ElementSet::from_bits(a), ElementSet::from_bits(b));
        prop_assert_eq!(colex_cmp(x, y), ColexRank::of(x).cmp(&ColexRank::of(y)));
    }

    #[test]
    fn initial_segments_are_downsets(m in 0u64..=1 << 12) {
        prop_assert!(is_downset(&initial_segment(m).unwrap()));
    }
}
