use g2skein::annulus11::{A11Algebra, A11Elem, BasisKey, StarMode};
use g2skein::qscalar::{CyclotomicField, Field, Integers, LaurentQ, QRat, RationalFunctions, Ring};
use g2skein::weblambda::{to_eprime, LLPoly};
use g2skein::xyring::{from_pq_basis, psi, to_pq_basis, XYPoly};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::sync::OnceLock;

fn laurent() -> impl Strategy<Value = LaurentQ> {
    prop::collection::vec((-3i64..=3, -4i64..=4), 0..4)
        .prop_map(|ts| LaurentQ::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentQ> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn qrat() -> impl Strategy<Value = QRat> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| QRat::new(n, d).unwrap())
}

fn xy_int() -> impl Strategy<Value = XYPoly<BigInt>> {
    prop::collection::vec(((0u32..=3, 0u32..=2), -5i64..=5), 0..5)
        .prop_map(|ts| XYPoly::from_terms(ts.into_iter().map(|(k, c)| (k, BigInt::from(c)))))
}

fn ll_int() -> impl Strategy<Value = LLPoly<BigInt>> {
    prop::collection::vec(((-2i64..=2, -2i64..=2), -5i64..=5), 0..5)
        .prop_map(|ts| LLPoly::from_terms(ts.into_iter().map(|(k, c)| (k, BigInt::from(c)))))
}

fn basis_key() -> impl Strategy<Value = BasisKey> {
    prop_oneof![
        (-3i64..=3, 0u32..=3).prop_map(|(i, j)| BasisKey::AC(i, j)),
        (0u32..=2, 0u32..=2).prop_map(|(i, j)| BasisKey::F(i, j)),
    ]
}

fn a11() -> impl Strategy<Value = A11Elem<QRat>> {
    prop::collection::vec((basis_key(), laurent()), 1..3)
        .prop_map(|ts| A11Elem::from_terms(ts.into_iter().map(|(k, c)| (k, QRat::from_laurent(c)))))
}

fn generic() -> &'static A11Algebra<RationalFunctions> {
    static ALG: OnceLock<A11Algebra<RationalFunctions>> = OnceLock::new();
    ALG.get_or_init(|| A11Algebra::new(RationalFunctions).unwrap())
}

fn at_m10() -> &'static A11Algebra<CyclotomicField> {
    static ALG: OnceLock<A11Algebra<CyclotomicField>> = OnceLock::new();
    ALG.get_or_init(|| A11Algebra::new(CyclotomicField::new(10)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qrat_field_laws(a in qrat(), b in qrat(), c in qrat()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.invert_q().invert_q(), a);
    }

    #[test]
    fn qrat_text_round_trip(a in qrat()) {
        prop_assert_eq!(QRat::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn specialization_is_a_ring_map(a in qrat(), b in qrat(), m in prop::sample::select(vec![1u32, 2, 5, 7, 10, 14])) {
        let f = CyclotomicField::new(m);
        if let (Ok(fa), Ok(fb)) = (f.embed(&a), f.embed(&b)) {
            prop_assert_eq!(f.embed(&a.mul(&b)).unwrap(), fa.mul(&fb));
            prop_assert_eq!(f.embed(&a.add(&b)).unwrap(), fa.add(&fb));
        }
    }

    #[test]
    fn xy_ring_laws(a in xy_int(), b in xy_int(), c in xy_int()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn xy_text_round_trip(a in xy_int()) {
        prop_assert_eq!(XYPoly::parse(&Integers, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn pq_basis_round_trip(a in xy_int()) {
        let r = RationalFunctions;
        let a = XYPoly::embed(&r, &a);
        prop_assert_eq!(from_pq_basis(&r, &to_pq_basis(&r, &a)), a);
    }

    #[test]
    fn psi_is_multiplicative(a in xy_int(), b in xy_int()) {
        prop_assert_eq!(psi(&Integers, &a.mul(&b)), psi(&Integers, &a).mul(&psi(&Integers, &b)));
    }

    #[test]
    fn laurent_ring_laws(a in ll_int(), b in ll_int(), c in ll_int()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.swap().swap(), a.clone());
        prop_assert!(a.add(&a.swap()).is_symmetric());
    }

    #[test]
    fn laurent_text_round_trip(a in ll_int()) {
        prop_assert_eq!(LLPoly::parse(&Integers, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn eprime_expansion_inverts_rewriting(a in ll_int()) {
        let sym = a.add(&a.swap());
        let e = to_eprime(&Integers, &sym).unwrap();
        prop_assert_eq!(e.expand(&Integers), sym);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn a11_commutative_associative(u in a11(), v in a11(), w in a11()) {
        let alg = generic();
        prop_assert_eq!(alg.mul(&u, &v), alg.mul(&v, &u));
        prop_assert_eq!(alg.mul(&alg.mul(&u, &v), &w), alg.mul(&u, &alg.mul(&v, &w)));
        prop_assert_eq!(alg.mul(&u, &v.add(&w)), alg.mul(&u, &v).add(&alg.mul(&u, &w)));
        prop_assert_eq!(alg.mul(&alg.unit(), &u), u);
    }

    #[test]
    fn a_is_absorbed_by_f(i in -3i64..=3, j in 0u32..=3, k in 0u32..=3) {
        let alg = generic();
        let f = A11Elem::basis(BasisKey::F(j, k), QRat::one());
        prop_assert_eq!(alg.mul(&alg.a_pow(i), &f), f);
    }

    #[test]
    fn a11_text_round_trip(u in a11()) {
        prop_assert_eq!(A11Elem::parse(&RationalFunctions, &u.to_string()).unwrap(), u);
    }

    #[test]
    fn star_maps_are_algebra_maps(a in xy_int(), b in xy_int()) {
        let alg = generic();
        let r = RationalFunctions;
        let (a, b) = (XYPoly::embed(&r, &a), XYPoly::embed(&r, &b));
        for mode in [StarMode::Up, StarMode::Down, StarMode::UpBar, StarMode::DownUnder] {
            let lhs = alg.star_sub(&a.mul(&b), mode);
            let rhs = alg.mul(&alg.star_sub(&a, mode), &alg.star_sub(&b, mode));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn defect_is_linear(a in xy_int(), b in xy_int()) {
        let alg = at_m10();
        let f = alg.field();
        let (a, b) = (XYPoly::embed(f, &a), XYPoly::embed(f, &b));
        let lhs = alg.transparency_defect(&a.add(&b));
        let rhs = alg.transparency_defect(&a).add(&alg.transparency_defect(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn f_up_is_multiplicative(a in ll_int(), b in ll_int()) {
        let alg = generic();
        let r = RationalFunctions;
        let sym = |p: &LLPoly<BigInt>| {
            let s = p.add(&p.swap()).map_coeffs(|c| r.from_bigint(c));
            to_eprime(&r, &s).unwrap()
        };
        let (ea, eb) = (sym(&a), sym(&b));
        let prod = to_eprime(&r, &ea.expand(&r).mul(&eb.expand(&r))).unwrap();
        prop_assert_eq!(alg.f_up(&prod), alg.mul(&alg.f_up(&ea), &alg.f_up(&eb)));
        prop_assert_eq!(alg.f_down(&prod), alg.mul(&alg.f_down(&ea), &alg.f_down(&eb)));
    }
}
