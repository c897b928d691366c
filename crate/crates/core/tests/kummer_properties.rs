#![allow(clippy::neg_cmp_op_on_partial_ord)]
use maglap::kummer::kummer_m_estimate;
use maglap::{kummer_m, kummer_m_sign, kummer_series, Exact, KummerArgs, PrecisionPolicy, Sign};
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn m64(a: f64, b: f64, z: f64) -> f64 {
    kummer_m(
        &KummerArgs::new(a, b, z).unwrap(),
        &PrecisionPolicy::default(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn kummer_transformation(a in -6.0..6.0f64, b in 0.5..8.0f64, z in -10.0..10.0f64) {
        let lhs = m64(a, b, z);
        let rhs = z.exp() * m64(b - a, b, -z);
        let scale = lhs.abs().max(rhs.abs()).max(1e-3);
        prop_assert!((lhs - rhs).abs() <= 1e-9 * scale, "lhs {lhs} rhs {rhs}");
    }

    #[test]
    fn polynomial_matches_exact(n in 0i64..12, b in 1u32..10, z in -20.0..20.0f64) {
        let args = KummerArgs::new(-(n as f64), b as f64, z).unwrap();
        let exact = kummer_series::<Exact>(&args, ()).unwrap().value.to_f64().unwrap();
        let double = kummer_series::<f64>(&args, ()).unwrap();
        prop_assert!((double.value - exact).abs() <= double.error_bound.max(1e-300) * 1.0001 + 4.0 * f64::EPSILON * exact.abs());
    }

    #[test]
    fn positive_for_positive_parameters(a in 0.0..10.0f64, b in 0.1..10.0f64, z in 0.0..60.0f64) {
        let s = kummer_m_sign(&KummerArgs::new(a, b, z).unwrap(), &PrecisionPolicy::default()).unwrap();
        prop_assert_eq!(s.sign, Sign::Positive);
    }

    #[test]
    fn certified_sign_survives_doubled_precision(a in -15.0..-0.01f64, b in 1u32..6, z in 0.5..40.0f64) {
        let policy = PrecisionPolicy::default();
        let args = KummerArgs::new(a, b as f64, z).unwrap();
        let s = kummer_m_sign(&args, &policy).unwrap();
        let digits = 2 * policy.working_digits(z);
        let e = kummer_m_estimate(&args, Some(digits)).unwrap();
        prop_assert!(e.value.abs() > e.error_bound);
        prop_assert_eq!(s.sign.as_i32(), e.value.signum() as i32);
    }
}

#[test]
fn integer_roots_are_exact_zeros() {
    // M(-1, b, z) = 1 - z/b
    for b in 1..=20 {
        let args = KummerArgs::new(-1.0, b as f64, b as f64).unwrap();
        let s = kummer_m_sign(&args, &PrecisionPolicy::default()).unwrap();
        assert_eq!(s.sign, Sign::Zero);
    }
}

#[test]
fn reference_values() {
    // 40-digit values of M(a, b, z)
    let cases = [
        (0.5, 1.5, 2.0, 2.364_453_892_805_209_3),
        (-2.5, 3.0, 7.0, 0.651_133_825_169_327),
        (-7.3, 2.0, 15.0, 24.636_850_239_834_339),
    ];
    for (a, b, z, want) in cases {
        let got = m64(a, b, z);
        assert!(
            ((got - want) / want).abs() < 1e-12,
            "M({a},{b},{z}) = {got}, want {want}"
        );
    }
}
