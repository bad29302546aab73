mod common;

use asymgon::geometry::{is_asymmetric, polygon_area, VertexSelection};
use asymgon::lattice::IntervalVector;
use asymgon::oracle::oracle_solve;
use asymgon::rhythm::{decode_rhythm, encode_intervals};
use asymgon::DiameterSet;
use itertools::Itertools;
use proptest::prelude::*;
use rand::seq::index::sample;
use rand::Rng;

#[test]
fn sine_sum_area_matches_shoelace() {
    let mut rng = common::rng(1);
    for _ in 0..10_000 {
        let n = rng.gen_range(3..20);
        let ds = asymgon::io::random_diameters(n, &mut rng);
        let k = rng.gen_range(3..=2 * n);
        let mut idx = sample(&mut rng, 2 * n, k).into_vec();
        idx.sort_unstable();
        let sel = VertexSelection::new(idx.clone()).unwrap();
        let a = polygon_area(&ds, &sel).unwrap();
        assert!((a - common::shoelace(&ds, &idx)).abs() < 1e-9);
    }
}

#[test]
fn window_sums_agree_with_antipodal_pairs() {
    for m in (6..=16).step_by(2) {
        for k in 3..=m {
            for idx in (0..m).combinations(k) {
                let sel = VertexSelection::new(idx).unwrap();
                let iv = IntervalVector::from_selection(&sel, m).unwrap();
                assert_eq!(iv.is_asymmetric(), is_asymmetric(&sel, m / 2));
            }
        }
    }
}

#[test]
fn rhythm_round_trip_is_exhaustive_for_small_lattices() {
    for m in 3..=16usize {
        for mask in 0u32..(1 << m) {
            if mask.count_ones() < 3 {
                continue;
            }
            let bits: String = (0..m)
                .map(|p| if mask >> p & 1 == 1 { '1' } else { '0' })
                .collect();
            let iv = decode_rhythm(&bits).unwrap();
            let back = encode_intervals(&iv);
            let first = bits.find('1').unwrap();
            let rotated = format!("{}{}", &bits[first..], &bits[..first]);
            assert_eq!(back, rotated);
        }
    }
}

#[test]
fn oracle_ignores_input_order() {
    for seed in 0..20u64 {
        let ds = common::instance(6, 80_000 + seed);
        let mut angles = ds.angles().to_vec();
        angles.reverse();
        let (shuffled, _) = DiameterSet::from_unnormalized(&angles).unwrap();
        for k in 3..6 {
            let a = oracle_solve(&ds, k, true).unwrap().area;
            let b = oracle_solve(&shuffled, k, true).unwrap().area;
            assert_eq!(a, b);
        }
    }
}

#[test]
fn oracle_matches_closed_form_on_even_lattices() {
    for n in 3..=10 {
        let ds = DiameterSet::evenly_spaced(n).unwrap();
        for k in 3..=2 * n {
            let best = oracle_solve(&ds, k, false).unwrap().area;
            let closed = asymgon::lattice::max_subpolygon_lattice(2 * n, k)
                .unwrap()
                .area();
            assert!((best - closed).abs() < 1e-9, "m {} k {k}", 2 * n);
        }
    }
}

proptest! {
    #[test]
    fn area_is_invariant_under_rotation(n in 3usize..12, seed in any::<u64>(), steps in 0usize..24) {
        let mut rng = common::rng(seed);
        let even = DiameterSet::evenly_spaced(n).unwrap();
        let k = rng.gen_range(3..=6.min(2 * n));
        let sel = VertexSelection::new(sample(&mut rng, 2 * n, k).into_vec()).unwrap();
        let rotated = sel.rotated(steps, 2 * n);
        let a = polygon_area(&even, &sel).unwrap();
        let b = polygon_area(&even, &rotated).unwrap();
        prop_assert!((a - b).abs() < 1e-9);
        prop_assert_eq!(is_asymmetric(&sel, n), is_asymmetric(&rotated, n));
    }

    #[test]
    fn vertex_order_does_not_matter(n in 3usize..10, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let ds = asymgon::io::random_diameters(n, &mut rng);
        let k = rng.gen_range(3..=6.min(2 * n));
        let idx = sample(&mut rng, 2 * n, k).into_vec();
        let mut sorted = idx.clone();
        sorted.sort_unstable();
        let a = polygon_area(&ds, &VertexSelection::new(idx).unwrap()).unwrap();
        let b = polygon_area(&ds, &VertexSelection::new(sorted).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn rhythm_round_trip(gaps in prop::collection::vec(1usize..6, 3..10)) {
        let m: usize = gaps.iter().sum();
        prop_assume!(m <= 24);
        let iv = IntervalVector::new(gaps.clone(), m).unwrap();
        let decoded = decode_rhythm(&encode_intervals(&iv)).unwrap();
        prop_assert_eq!(decoded.gaps(), &gaps[..]);
    }
}
