use exact_scalar::{gamma_half_monomial, rat, PiHalfValue, PiMonomial, RBig, UBig};
use poly_core::*;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = PiHalfValue> {
    prop::collection::vec((0u32..3, -9i64..10, 1i64..5), 0..3).prop_map(|t| {
        t.into_iter()
            .map(|(m, n, d)| PiHalfValue::monomial(rat(n, d), m))
            .sum()
    })
}

fn poly(max_len: usize) -> impl Strategy<Value = ExactPoly> {
    prop::collection::vec(scalar(), 0..=max_len).prop_map(ExactPoly::new)
}

fn rational_poly() -> impl Strategy<Value = ExactPoly> {
    prop::collection::vec(-20i64..20, 1..=6).prop_map(|c| ExactPoly::from_ints(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reflection_splits_into_parts(p in poly(8)) {
        let (e, o) = even_odd_parts(&p);
        prop_assert_eq!(&e + &o, p.clone());
        prop_assert_eq!(p.reflect(), &e - &o);
        prop_assert!(e.is_even() && o.is_odd());
    }

    #[test]
    fn m_product_commutes(a in poly(6), b in poly(6)) {
        prop_assert_eq!(m_product(&a, &b), m_product(&b, &a));
    }

    #[test]
    fn m_product_associates(a in poly(6), b in poly(6), c in poly(6)) {
        prop_assert_eq!(
            m_product(&m_product(&a, &b), &c),
            m_product(&a, &m_product(&b, &c))
        );
    }

    #[test]
    fn integral_representation_agrees(a in rational_poly(), b in rational_poly(), ti in 0usize..3) {
        let t = [0.5, 1.0, 2.0][ti];
        let (x, y) = m_product_integral_check(&a, &b, t, 64).unwrap();
        let scale = x.abs().max(1.0);
        prop_assert!((x - y).abs() <= 1e-8 * scale, "{} vs {}", x, y);
    }
}

#[test]
fn jensen_multipliers_increase_to_one() {
    for l in 0..10u32 {
        let mut prev = RBig::ZERO;
        for n in 1..60u32 {
            let j = jensen_multiplier(n, l);
            assert!(j >= prev, "l = {l}, n = {n}");
            assert!(j <= RBig::ONE);
            prev = j;
        }
    }
}

#[test]
fn repeated_t_formula() {
    // t^{⊛k} = (√π/2)^k / Γ(k/2+1) tᵏ
    let t = ExactPoly::from_ints(&[0, 1]);
    let mut acc = ExactPoly::one();
    for k in 1..=8u32 {
        acc = m_product(&acc, &t);
        let c = &PiMonomial::new(RBig::from_parts(1.into(), UBig::ONE << k as usize), k as i32)
            / &gamma_half_monomial(k + 2).unwrap();
        assert_eq!(acc, ExactPoly::monomial(c.to_value().unwrap(), k as usize), "k = {k}");
    }
}
