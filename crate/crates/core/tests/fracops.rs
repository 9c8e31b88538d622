mod common;

use common::reference::ML_1_5_2_AT_MINUS_5;
use common::{fo, rel_err};
use fslp_core::fracops::{
    caputo_derivative_series, ml_solution_as_series, rl_derivative_series, rl_integral_numeric, rl_integral_series,
    Which,
};
use fslp_core::solutions::fe3_fss;
use fslp_core::specfun::{gamma, rgamma};
use fslp_core::{GenPowerSeries, QuadratureConfig, Side};
use proptest::prelude::*;

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn left(base: f64, step: f64, coeffs: Vec<f64>) -> GenPowerSeries {
    GenPowerSeries::new(base, step, coeffs, 0.0, Side::Left).unwrap()
}

fn assert_coeffs_close(got: &GenPowerSeries, want: &GenPowerSeries, tol: f64) {
    assert_eq!(got.coeffs.len(), want.coeffs.len(), "{got:?} vs {want:?}");
    assert!((got.base - want.base).abs() < 1e-12, "base {} vs {}", got.base, want.base);
    assert!((got.step - want.step).abs() < 1e-12);
    for (k, (g, w)) in got.coeffs.iter().zip(&want.coeffs).enumerate() {
        assert!(rel_err(*g, *w) <= tol, "c_{k}: {g} vs {w}");
    }
}

#[test]
fn integral_examples() {
    let alpha = fo(0.4);
    let c = GenPowerSeries::constant(3.0, 0.0, Side::Left);
    let out = rl_integral_series(&c, alpha).unwrap();
    assert!((out.base - 0.4).abs() < 1e-15);
    assert!(rel_err(out.coeffs[0], 3.0 * rgamma(1.4)) < 1e-15);

    // I^{1-α}[(t-a)^{α-1}/Γ(α)] = 1
    let a = 0.7;
    let y1 = GenPowerSeries::new(a - 1.0, 1.0, vec![rgamma(a)], 2.0, Side::Left).unwrap();
    let out = rl_integral_series(&y1, fo(1.0 - a)).unwrap();
    assert!(out.is_constant());
    assert!((out.coeffs[0] - 1.0).abs() < 1e-15);

    let s = left(0.5, 1.0, vec![1.5, -0.25]);
    let exact = rl_integral_series(&s, fo(0.5)).unwrap();
    for t in [0.2, 0.5, 0.9, 1.3] {
        let numeric = rl_integral_numeric(|x| s.evaluate(x).unwrap(), fo(0.5), 0.0, t, &cfg()).unwrap();
        assert!((numeric - exact.evaluate(t).unwrap()).abs() < 1e-8, "t={t}");
    }
}

#[test]
fn derivative_examples() {
    for a in [0.3, 0.6, 0.9] {
        let y1 = left(a - 1.0, 1.0, vec![1.0]);
        assert!(rl_derivative_series(&y1, fo(a)).unwrap().is_zero());
        let y2 = left(a, 1.0, vec![rgamma(a + 1.0)]);
        let d = rl_derivative_series(&y2, fo(a)).unwrap();
        assert!(d.is_constant());
        assert!((d.coeffs[0] - 1.0).abs() < 1e-14);
    }
    // a non-integrable result is rejected
    let s = left(-0.5, 1.0, vec![1.0]);
    assert!(rl_derivative_series(&s, fo(0.7)).unwrap_err().is_domain());
}

#[test]
fn rl_derivative_matches_finite_difference_of_numeric_integral() {
    // D^α = d/dt ∘ I^{1-α}
    let alpha = fo(0.6);
    let s = left(0.3, 0.7, vec![1.0, -2.0, 0.5]);
    let exact = rl_derivative_series(&s, alpha).unwrap();
    let tight = QuadratureConfig {
        abs_tol: 1e-14,
        rel_tol: 1e-13,
        ..cfg()
    };
    let integral = |t: f64| rl_integral_numeric(|x| s.evaluate(x).unwrap(), fo(0.4), 0.0, t, &tight).unwrap();
    let h = 1e-4;
    for t in [0.2, 0.4, 0.6, 0.8] {
        let fd = (integral(t + h) - integral(t - h)) / (2.0 * h);
        let want = exact.evaluate(t).unwrap();
        assert!((fd - want).abs() < 1e-6, "t={t}: {fd} vs {want}");
    }
}

#[test]
fn caputo_examples() {
    let c = GenPowerSeries::constant(2.5, 0.0, Side::Left);
    assert!(caputo_derivative_series(&c, fo(0.7)).unwrap().is_zero());
    for a in [0.3, 0.7] {
        let s = left(a, 1.0, vec![rgamma(a + 1.0)]);
        let d = caputo_derivative_series(&s, fo(a)).unwrap();
        assert!(d.is_constant() && (d.coeffs[0] - 1.0).abs() < 1e-14);
    }
    let s = left(1.4, 1.0, vec![1.0]);
    let d = caputo_derivative_series(&s, fo(0.7)).unwrap();
    assert!((d.base - 0.7).abs() < 1e-15);
    let want = gamma(2.4).unwrap() / gamma(1.7).unwrap();
    assert!(rel_err(d.coeffs[0], want) < 1e-14);
    // numeric Caputo: I^{0.3} of the classical derivative 1.4 t^{0.4}
    for t in [0.25, 0.5, 1.0] {
        let numeric = rl_integral_numeric(|x: f64| 1.4 * x.powf(0.4), fo(0.3), 0.0, t, &cfg()).unwrap();
        assert!(rel_err(numeric, d.evaluate(t).unwrap()) < 1e-9, "t={t}");
    }
    let singular = left(-0.2, 1.0, vec![1.0]);
    assert!(caputo_derivative_series(&singular, fo(0.5)).unwrap_err().is_domain());
}

#[test]
fn numeric_integral_examples() {
    for (a, t) in [(0.3, 0.8), (0.75, 1.0), (0.95, 2.5)] {
        let got = rl_integral_numeric(|_| 1.0, fo(a), 0.0, t, &cfg()).unwrap();
        assert!(rel_err(got, t.powf(a) * rgamma(a + 1.0)) < 1e-12);
    }
    for (a, b) in [(0.5, 0.5), (0.3, 2.3)] {
        let got = rl_integral_numeric(|s: f64| s.powf(b - 1.0), fo(a), 0.0, 0.6, &cfg()).unwrap();
        let want = gamma(b).unwrap() / gamma(a + b).unwrap() * 0.6f64.powf(a + b - 1.0);
        assert!(rel_err(got, want) < 1e-10);
    }
    // I^{1-α} y2 at t = 1 is E_{2α,2}(-λ)
    let (alpha, lambda) = (0.75, 5.0);
    let y2 = |t: f64| fe3_fss(fo(alpha), lambda, t).unwrap().1;
    let got = rl_integral_numeric(y2, fo(1.0 - alpha), 0.0, 1.0, &cfg()).unwrap();
    assert!(rel_err(got, ML_1_5_2_AT_MINUS_5) < 1e-10, "{got}");
    assert!(rl_integral_numeric(|_| 1.0, fo(0.5), 1.0, 0.5, &cfg()).unwrap_err().is_domain());
}

#[test]
fn solution_series_examples() {
    let lambda: f64 = 3.0;
    let s = ml_solution_as_series(fo(1.0), lambda, Which::Y2, 30).unwrap();
    for t in [0.1, 0.5, 1.0] {
        let want = (lambda.sqrt() * t).sin() / lambda.sqrt();
        assert!((s.evaluate(t).unwrap() - want).abs() < 1e-15);
    }
    let s = ml_solution_as_series(fo(0.6), 0.0, Which::Y2, 10).unwrap();
    let n = s.clone().normalized();
    assert_eq!(n.coeffs.len(), 1);
    assert!((n.base - 0.6).abs() < 1e-15 && rel_err(n.coeffs[0], rgamma(1.6)) < 1e-15);

    let s = ml_solution_as_series(fo(0.75), 5.0, Which::Y1, 30).unwrap();
    let (y1, _) = fe3_fss(fo(0.75), 5.0, 0.5).unwrap();
    assert!((s.evaluate(0.5).unwrap() - y1).abs() < 1e-12);
    assert!(ml_solution_as_series(fo(0.75), 5.0, Which::Y1, 0).unwrap_err().is_domain());
}

/// ᶜD^α_{b-} ∘ D^α_{a+} applied at the coefficient level.
fn fe1_operator(y: &GenPowerSeries, alpha: f64, b: f64) -> GenPowerSeries {
    let inner = rl_derivative_series(y, fo(alpha)).unwrap();
    if inner.is_zero() {
        return GenPowerSeries::zero(b, Side::Right);
    }
    assert!(inner.is_constant(), "D^α y must be constant, got {inner:?}");
    let right = inner.reanchor(b, Side::Right).unwrap();
    caputo_derivative_series(&right, fo(alpha)).unwrap()
}

#[test]
fn fe1_pair_is_annihilated() {
    for alpha in [0.2, 0.5, 0.6, 0.75, 0.9, 1.0] {
        let (a, b) = (-1.0, 2.0);
        let y1 = GenPowerSeries::new(alpha - 1.0, 1.0, vec![rgamma(alpha)], a, Side::Left).unwrap();
        let y2 = GenPowerSeries::new(alpha, 1.0, vec![rgamma(alpha + 1.0)], a, Side::Left).unwrap();
        assert!(fe1_operator(&y1, alpha, b).is_zero(), "alpha={alpha}");
        assert!(fe1_operator(&y2, alpha, b).is_zero(), "alpha={alpha}");
    }
}

#[test]
fn right_caputo_sign() {
    // ᶜD^α_{b-}(b-t)^β = Γ(β+1)/Γ(β+1-α) (b-t)^{β-α}; at α = 1 this is -d/dt
    let s = GenPowerSeries::new(2.0, 1.0, vec![1.0], 1.0, Side::Right).unwrap();
    let d = caputo_derivative_series(&s, fo(1.0)).unwrap();
    assert!((d.coeffs[0] - 2.0).abs() < 1e-15 && (d.base - 1.0).abs() < 1e-15);
    // -d/dt (1-t)^2 = 2(1-t)
    let t = 0.25;
    assert!((d.evaluate(t).unwrap() - 2.0 * (1.0 - t)).abs() < 1e-15);
    assert!((s.classical_derivative().evaluate(t).unwrap() + 2.0 * (1.0 - t)).abs() < 1e-15);
}

/// `-ᶜD^α ∘ D^α y - λ y` for the truncated series; only the order-K tail
/// term may survive.
fn fe3_residual(alpha: f64, lambda: f64, which: Which, k: usize) -> (GenPowerSeries, GenPowerSeries) {
    let y = ml_solution_as_series(fo(alpha), lambda, which, k).unwrap();
    let d = rl_derivative_series(&y, fo(alpha)).unwrap();
    let lhs = caputo_derivative_series(&d, fo(alpha)).unwrap();
    (y, lhs)
}

#[test]
fn fe3_series_satisfy_the_equation_up_to_the_tail_term() {
    const K: usize = 60;
    for alpha in [0.6, 0.75, 0.9] {
        for lambda in [1.0, 5.0, 20.0] {
            for which in [Which::Y1, Which::Y2] {
                let (y, lhs) = fe3_residual(alpha, lambda, which, K);
                // ᶜD^α D^α y = -λ y on the first K-1 terms
                assert_eq!(lhs.coeffs.len(), K - 1, "alpha={alpha} lambda={lambda} {which:?}");
                assert!((lhs.base - y.base).abs() < 1e-12);
                for j in 0..K - 1 {
                    let want = -lambda * y.coeffs[j];
                    assert!(rel_err(lhs.coeffs[j], want) <= 1e-12, "alpha={alpha} lambda={lambda} {which:?} c_{j}");
                }
                // the residual is the single term λ c_{K-1} t^{μ+(K-1)ν}
                let tail = lambda * y.coeffs[K - 1].abs();
                assert!(tail > 0.0 && tail < 1e-20, "tail {tail:e}");
            }
        }
    }
}

#[test]
fn y2_derivative_is_y1() {
    for alpha in [0.55, 0.75, 1.0] {
        for lambda in [0.0, 2.0, 30.0] {
            let y1 = ml_solution_as_series(fo(alpha), lambda, Which::Y1, 40).unwrap();
            let y2 = ml_solution_as_series(fo(alpha), lambda, Which::Y2, 40).unwrap();
            let d = y2.classical_derivative();
            // e/Γ(e+1) against 1/Γ(e): equal up to the rounding of Γ
            assert_coeffs_close(&d, &y1.normalized(), 1e-13);
        }
    }
}

#[test]
fn boundary_condition_identity_on_coefficients() {
    // I^{1-α}[t^α E_{2α,α+1}(-λt^{2α})] = t E_{2α,2}(-λt^{2α})
    for alpha in [0.6, 0.75, 0.9] {
        for lambda in [1.0, 5.0, 20.0] {
            let y2 = ml_solution_as_series(fo(alpha), lambda, Which::Y2, 60).unwrap();
            let out = rl_integral_series(&y2, fo(1.0 - alpha)).unwrap();
            assert!((out.base - 1.0).abs() < 1e-15);
            for (k, c) in out.coeffs.iter().enumerate() {
                let want = (-lambda).powi(k as i32) * rgamma(2.0 * alpha * k as f64 + 2.0);
                assert!(rel_err(*c, want) <= 1e-13, "alpha={alpha} lambda={lambda} c_{k}");
            }
        }
    }
}

fn series_strategy() -> impl Strategy<Value = GenPowerSeries> {
    (
        -0.95f64..3.0,
        0.1f64..2.0,
        proptest::collection::vec(prop_oneof![-5.0f64..-0.1, 0.1f64..5.0], 1..6),
        -2.0f64..2.0,
    )
        .prop_map(|(base, step, coeffs, origin)| GenPowerSeries::new(base, step, coeffs, origin, Side::Left).unwrap())
}

proptest! {
    #[test]
    fn derivative_inverts_integral(s in series_strategy(), alpha in 0.05f64..=1.0) {
        let back = rl_derivative_series(&rl_integral_series(&s, fo(alpha)).unwrap(), fo(alpha)).unwrap();
        prop_assert_eq!(back.coeffs.len(), s.coeffs.len());
        prop_assert!((back.base - s.base).abs() < 1e-12);
        for (g, w) in back.coeffs.iter().zip(&s.coeffs) {
            prop_assert!(rel_err(*g, *w) <= 1e-13);
        }
    }

    #[test]
    fn numeric_integral_matches_series(
        base in -0.5f64..2.0,
        step in 0.2f64..1.5,
        coeffs in proptest::collection::vec(prop_oneof![-3.0f64..-0.1, 0.1f64..3.0], 3..=3),
        ai in 0usize..3,
        ti in 0usize..3,
    ) {
        let alpha = [0.55, 0.75, 0.95][ai];
        let t = [0.3, 0.7, 1.0][ti];
        let s = GenPowerSeries::new(base, step, coeffs, 0.0, Side::Left).unwrap();
        let exact = rl_integral_series(&s, fo(alpha)).unwrap().evaluate(t).unwrap();
        let numeric = rl_integral_numeric(|x| s.evaluate(x).unwrap(), fo(alpha), 0.0, t, &cfg()).unwrap();
        // terms may cancel; measure against the size of the individual terms
        let scale = rl_integral_series(&GenPowerSeries::new(base, step, s.coeffs.iter().map(|c| c.abs()).collect(), 0.0, Side::Left).unwrap(), fo(alpha))
            .unwrap()
            .evaluate(t)
            .unwrap();
        prop_assert!((numeric - exact).abs() <= 1e-7 * scale, "{} vs {}", numeric, exact);
    }
}
