use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qild::generator::{numerator_image, random_constructive, random_instance, InstanceShape};
use qild::geometry::{hull2d, minkowski_sum, normalize_direction, Point2};
use qild::mpoly::MultiPoly;
use qild::oracle::brute_force_decompose;
use qild::qild::{decompose_bivariate_iter, decompose_newton, is_q_integer_linear, verify};
use qild::qring::QCoef;

prop_compose! {
    fn qcoef()(terms in prop::collection::vec((-3i64..4, -6i64..7), 0..4)) -> QCoef {
        QCoef::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
    }
}

prop_compose! {
    fn nonzero_qcoef()(c in qcoef().prop_filter("nonzero", |c| !c.is_zero())) -> QCoef {
        c
    }
}

fn mpoly(n: usize, max_terms: usize, max_deg: i64) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, n), qcoef()),
        0..=max_terms,
    )
    .prop_map(move |terms| MultiPoly::from_terms(n, terms))
}

fn nonzero_mpoly(n: usize, max_terms: usize, max_deg: i64) -> impl Strategy<Value = MultiPoly> {
    mpoly(n, max_terms, max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qcoef_ring_laws(a in qcoef(), b in qcoef(), c in qcoef()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn qcoef_exact_division(a in qcoef(), b in nonzero_qcoef()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn qcoef_gcd_ignores_units(a in nonzero_qcoef(), b in nonzero_qcoef(), k in -4i64..5) {
        let g = a.gcd(&b);
        prop_assert!(g.is_normalized());
        prop_assert!(a.div_exact(&g).is_ok() && b.div_exact(&g).is_ok());
        let u = &QCoef::from_int(-1) * &QCoef::q_pow(k);
        prop_assert_eq!(a.gcd(&(&b * &u)), g);
    }

    #[test]
    fn mpoly_exact_division(a in mpoly(3, 4, 3), b in nonzero_mpoly(3, 4, 3)) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn mpoly_content_times_primitive(a in nonzero_mpoly(3, 3, 2), b in nonzero_mpoly(3, 3, 2)) {
        let p = &a * &b;
        for vars in [vec![0], vec![0, 2], vec![1, 2]] {
            let (c, prim) = p.content_and_primitive(&vars).unwrap();
            prop_assert!(!c.involves_any(&vars));
            prop_assert_eq!(&c * &prim, p.clone());
            prop_assert!(prim.content(&vars).is_one());
        }
    }

    #[test]
    fn monomial_substitution_is_multiplicative(
        a in mpoly(3, 4, 3),
        b in mpoly(3, 4, 3),
        ty in prop::collection::vec(-3i64..4, 3),
    ) {
        let lhs = (&a * &b).substitute_monomial(1, &ty);
        let rhs = &a.substitute_monomial(1, &ty) * &b.substitute_monomial(1, &ty);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn direction_normalization_is_idempotent(v in prop::collection::vec(-20i64..21, 1..5)) {
        prop_assume!(v.iter().any(|&x| x != 0));
        let d = normalize_direction(&v).unwrap();
        prop_assert_eq!(normalize_direction(d.entries()).unwrap(), d.clone());
        let neg: Vec<i64> = v.iter().map(|x| -3 * x).collect();
        prop_assert_eq!(normalize_direction(&neg).unwrap(), d);
    }

    #[test]
    fn hull_of_product_is_minkowski_sum(a in nonzero_mpoly(2, 6, 5), b in nonzero_mpoly(2, 6, 5)) {
        let pts = |p: &MultiPoly| -> Vec<Point2> { p.terms().map(|(e, _)| [e[0], e[1]]).collect() };
        let lhs = hull2d(&pts(&(&a * &b))).unwrap();
        let rhs = minkowski_sum(&hull2d(&pts(&a)).unwrap(), &hull2d(&pts(&b)).unwrap());
        let mut l = lhs.vertices().to_vec();
        let mut r = rhs.vertices().to_vec();
        l.sort();
        r.sort();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn hull_is_invariant_under_translation(a in nonzero_mpoly(2, 6, 5), dx in -5i64..6, dy in -5i64..6) {
        let pts: Vec<Point2> = a.terms().map(|(e, _)| [e[0], e[1]]).collect();
        let moved: Vec<Point2> = pts.iter().map(|p| [p[0] + dx, p[1] + dy]).collect();
        let h = hull2d(&pts).unwrap();
        let expected: Vec<Point2> = h.vertices().iter().map(|p| [p[0] + dx, p[1] + dy]).collect();
        prop_assert_eq!(hull2d(&moved).unwrap().vertices().to_vec(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn decompositions_round_trip_and_agree(seed in any::<u64>(), n in 2usize..5, m in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_instance(&mut rng, InstanceShape::new(n, m, 2, 1));
        let a = decompose_newton(&p).unwrap();
        let b = decompose_bivariate_iter(&p).unwrap();
        prop_assert!(verify(&p, &a));
        prop_assert!(verify(&p, &b));
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(is_q_integer_linear(&p).unwrap(), a.is_linear());
    }

    #[test]
    fn oracle_agrees_on_constructed_inputs(seed in any::<u64>(), n in 2usize..5, m in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, expected) = random_constructive(&mut rng, n, m);
        prop_assert_eq!(brute_force_decompose(&p).unwrap(), expected.clone());
        prop_assert_eq!(decompose_newton(&p).unwrap(), expected);
        prop_assert!(is_q_integer_linear(&p).unwrap());
    }

    #[test]
    fn monomial_scaling_shifts_only_the_monomial(
        seed in any::<u64>(),
        beta in prop::collection::vec(0i64..4, 3),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_instance(&mut rng, InstanceShape::new(3, 1, 2, 1));
        let scaled = p.shift(&beta);
        let a = decompose_newton(&p).unwrap();
        let b = decompose_newton(&scaled).unwrap();
        let shifted: Vec<i64> = a.monomial.iter().zip(&beta).map(|(x, y)| x + y).collect();
        prop_assert_eq!(b.monomial, shifted);
        prop_assert_eq!(b.factors, a.factors);
        prop_assert_eq!(b.p0, a.p0);
        prop_assert_eq!(b.content, a.content);
    }

    #[test]
    fn linear_products_are_recognized(seed in any::<u64>(), ty in prop::collection::vec(-4i64..5, 3)) {
        prop_assume!(ty.iter().any(|&x| x != 0));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, _) = random_constructive(&mut rng, 3, 1);
        let extra = MultiPoly::from_int_terms(1, &[(&[2], 1, 1), (&[0], 0, -3)]);
        let q = &p * &numerator_image(&extra, &ty).0;
        let d = decompose_newton(&q).unwrap();
        prop_assert!(verify(&q, &d));
        prop_assert!(d.is_linear());
        prop_assert!(is_q_integer_linear(&q).unwrap());
    }
}
