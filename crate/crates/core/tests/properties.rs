use num_bigint::BigInt;
use proptest::prelude::*;

use cwlift::bounds::{bound_report, chain_upper, johnson_schonheim, sphere_size};
use cwlift::codes::{
    code_to_packing, hamming_distance, intersection_size, packing_to_code, parse_code, verify_code, write_code, Code,
    SetSystem, Word,
};
use cwlift::designs::{disjointify, greedy_packing, steiner_triple_system};
use cwlift::lifting::{lift, probabilistic_construct, shorten, LiftPlan};

fn pairwise_common(systems: &[SetSystem]) -> usize {
    let mut total = 0;
    for (i, a) in systems.iter().enumerate() {
        for b in &systems[i + 1..] {
            total += intersection_size(a, b).unwrap();
        }
    }
    total
}

fn word(n: usize, q: u16) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0..q as u8, n).prop_map(move |s| Word::new(s, q).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn triangle_inequality((u, v, z) in (1usize..12, 2u16..6).prop_flat_map(|(n, q)| (word(n, q), word(n, q), word(n, q)))) {
        let d = |a: &Word, b: &Word| hamming_distance(a, b).unwrap();
        prop_assert!(d(&u, &z) <= d(&u, &v) + d(&v, &z));
        prop_assert_eq!(d(&u, &v), d(&v, &u));
        prop_assert_eq!(d(&u, &u), 0);
    }

    #[test]
    fn subcodes_of_valid_codes_verify(seed in 0u64..1000, keep in proptest::collection::vec(any::<bool>(), 40)) {
        let full = probabilistic_construct(9, 4, 3, 4, 2, seed).unwrap().final_code;
        prop_assume!(verify_code(&full).valid);
        let words: Vec<Word> = full.words().iter().zip(keep.iter().cycle()).filter(|(_, &k)| k).map(|(w, _)| w.clone()).collect();
        prop_assume!(!words.is_empty());
        let sub = Code::new(full.params(), words, "sub").unwrap();
        prop_assert!(verify_code(&sub).valid);
    }

    #[test]
    fn code_file_round_trip(seed in 0u64..500, q in 3u16..8) {
        let code = probabilistic_construct(10, 5, 4, q, 1, seed).unwrap().final_code;
        let back = parse_code(&write_code(&code)).unwrap();
        prop_assert_eq!(back.words(), code.words());
        prop_assert_eq!(back.params(), code.params());
    }

    #[test]
    fn packing_code_round_trip(n in 4usize..12, k in 2usize..5, seed in 0u64..100) {
        prop_assume!(k <= n);
        let p = greedy_packing(n, k, 2, 1, Some(seed)).unwrap();
        let sys = p.into_system();
        prop_assume!(!sys.is_empty());
        let back = code_to_packing(&packing_to_code(&sys).unwrap()).unwrap();
        prop_assert_eq!(back, sys);
    }

    #[test]
    fn greedy_packings_respect_lambda(n in 5usize..13, w in 2usize..5, t in 1usize..3, lambda in 1u32..3, seed in 0u64..50) {
        prop_assume!(t < w && w <= n);
        let p = greedy_packing(n, w, t, lambda, Some(seed)).unwrap();
        let mut counts = std::collections::HashMap::new();
        for b in p.blocks() {
            cwlift::math::for_each_sub_of(b, t, |s| *counts.entry(s.to_vec()).or_insert(0u32) += 1);
        }
        prop_assert!(counts.values().all(|&c| c <= lambda));
    }

    #[test]
    fn disjointify_copies_are_disjoint_images(n in prop::sample::select(vec![7usize, 9, 13, 15]), s in 2usize..4, seed in 0u64..20) {
        // Two Fano planes at most are pairwise disjoint.
        let s = if n == 7 { s.min(2) } else { s };
        let sts = steiner_triple_system(n).unwrap();
        let out = disjointify(&sts, s, seed, 200_000).unwrap();
        prop_assert_eq!(out.systems.len(), s);
        prop_assert_eq!(pairwise_common(&out.systems), 0);
        for (sys, perm) in out.systems.iter().zip(&out.permutations) {
            prop_assert_eq!(sys, &sts.permuted(perm).unwrap());
        }
    }

    #[test]
    fn lift_size_is_additive(n in prop::sample::select(vec![7usize, 9, 13]), s in 1usize..4, seed in 0u64..20) {
        let s = if n == 7 { s.min(2) } else { s };
        let sts = steiner_triple_system(n).unwrap();
        let out = disjointify(&sts, s, seed, 200_000).unwrap();
        let classes: Vec<(Code, u8)> = out.systems.iter().enumerate().map(|(i, c)| (packing_to_code(c).unwrap(), i as u8 + 1)).collect();
        let total: usize = classes.iter().map(|(c, _)| c.len()).sum();
        let code = lift(&LiftPlan { classes, q: s as u16 + 1 }).unwrap();
        prop_assert_eq!(code.len(), total);
        prop_assert!(verify_code(&code).valid);
        prop_assert!(code.min_distance().at_least(4));
    }

    #[test]
    fn shortening_keeps_distance(seed in 0u64..200, coord in 0usize..10) {
        let code = probabilistic_construct(10, 4, 3, 5, 1, seed).unwrap().final_code;
        if let Ok(short) = shorten(&code, coord) {
            prop_assert!(verify_code(&short).valid);
            prop_assert_eq!(short.params().n, 9);
        }
    }

    #[test]
    fn lambda_one_has_no_conflicts(n in 6usize..16, w in 2usize..5, extra in 1usize..3, q in 3u16..9, seed in 0u64..1000) {
        let d = w + extra;
        prop_assume!(w <= n && d <= 2 * w);
        let run = probabilistic_construct(n, d, w, q, 1, seed).unwrap();
        prop_assert_eq!(run.conflicts_found, 0);
        prop_assert_eq!(run.deleted, 0);
        prop_assert!(verify_code(&run.final_code).valid);
    }

    #[test]
    fn probabilistic_output_always_verifies(n in 8usize..16, q in 3u16..10, lambda in 1u64..4, seed in 0u64..1000) {
        let run = probabilistic_construct(n, 5, 4, q, lambda, seed).unwrap();
        prop_assert!(verify_code(&run.final_code).valid);
        prop_assert_eq!(run.final_code.len() + run.deleted, run.packing.len());
    }

    #[test]
    fn scalar_types_agree(n in 1u64..30, d in 1u64..9, w in 1u64..5, q in 2u64..12) {
        prop_assume!(w <= n && d <= 2 * w);
        let a = bound_report::<i64>(n, d, w, q).unwrap();
        let b = bound_report::<i128>(n, d, w, q).unwrap();
        let c = bound_report::<BigInt>(n, d, w, q).unwrap();
        prop_assert_eq!(i128::from(a.best_upper), b.best_upper);
        prop_assert_eq!(i128::from(a.best_lower), b.best_lower);
        prop_assert_eq!(BigInt::from(b.best_upper), c.best_upper);
        prop_assert_eq!(BigInt::from(b.best_lower), c.best_lower);
    }

    #[test]
    fn report_brackets_are_consistent(n in 1u64..40, d in 1u64..11, w in 1u64..6, q in 2u64..20) {
        prop_assume!(w <= n && d <= 2 * w);
        let r = bound_report::<i128>(n, d, w, q).unwrap();
        prop_assert!(r.best_lower <= r.best_upper);
        if let Some(e) = &r.exact {
            prop_assert!(r.best_lower <= e.value && e.value <= r.best_upper);
        }
        prop_assert!(chain_upper::<i128>(n, d, w, q).unwrap().value >= r.best_lower);
    }

    #[test]
    fn upper_bounds_monotone_in_q(n in 3u64..30, d in 1u64..9, w in 1u64..5, q in 2u64..15) {
        prop_assume!(w <= n && d <= 2 * w);
        let lo = bound_report::<i128>(n, d, w, q).unwrap();
        let hi = bound_report::<i128>(n, d, w, q + 1).unwrap();
        prop_assert!(lo.best_upper <= hi.best_upper, "q={} -> {} vs {}", q, lo.best_upper, hi.best_upper);
        prop_assert!(lo.best_lower <= hi.best_upper);
    }

    #[test]
    fn johnson_schonheim_nested_is_tighter(n in 1u64..40, k in 1u64..7, t in 1u64..5, lambda in 1u64..4) {
        prop_assume!(t <= k && k <= n);
        let js = johnson_schonheim::<i128>(n, k, t, lambda).unwrap();
        prop_assert!(num_rational::Ratio::from_integer(js.nested.value) <= js.loose);
    }

    #[test]
    fn sphere_sizes_sum_to_the_space(n in 1u64..12, w in 0u64..6, q in 2u64..6) {
        prop_assume!(w <= n);
        // Every weight-w word is within distance 2w of any other.
        let all: i128 = sphere_size::<i128>(n, w, q, 2 * w).unwrap();
        let total = cwlift::math::binomial_u128(n, w) as i128 * ((q - 1) as i128).pow(w as u32);
        prop_assert_eq!(all, total);
    }
}
