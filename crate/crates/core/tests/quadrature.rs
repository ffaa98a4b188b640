use num_complex::Complex64;
use phi_stieltjes::densities::{
    make_h_density, make_phi_density, Breakpoints, PiecewiseDensity, TailHint,
};
use phi_stieltjes::quadrature::{
    integrate_panels, integrate_stieltjes, integrate_stieltjes_complex, phi_integral_closed_form,
    phi_series_partial_sum, IntegrationRequest,
};
use phi_stieltjes::specfun::{CutPlanePoint, EXP_NEG_EULER_GAMMA};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::LN_2;

/// Closed-form value and its own error bound.
fn reference_with_bound(x: f64) -> (f64, f64) {
    let r = phi_integral_closed_form(x, 4000).unwrap();
    assert!(r.total_error() < 1e-13, "{r:?}");
    (r.value, r.total_error())
}

fn reference(x: f64) -> f64 {
    reference_with_bound(x).0
}

#[test]
fn zero_density_integrates_to_zero() {
    let zero = PiecewiseDensity::new(
        "zero",
        |_| 0.0,
        Breakpoints::Integers,
        TailHint::Compact { end: 4.0 },
    );
    let r = integrate_stieltjes(&IntegrationRequest::new(zero, 1.0, 1e-12)).unwrap();
    assert_eq!(r.value, 0.0);
    assert_eq!(r.discretization_error, 0.0);
    assert_eq!(r.truncation_error, 0.0);
    assert!(r.budget_met);
}

#[test]
fn indicator_of_unit_interval() {
    let ind = PiecewiseDensity::new(
        "indicator",
        |s| if s < 1.0 { 1.0 } else { 0.0 },
        Breakpoints::Integers,
        TailHint::Compact { end: 1.0 },
    );
    let r = integrate_stieltjes(&IntegrationRequest::new(ind, 1.0, 1e-13)).unwrap();
    assert!((r.value - std::f64::consts::LN_2).abs() < 1e-15);
}

#[test]
fn h_density_at_one() {
    // the bare h integral is Φ(1) − 1 − e^{−γ}; the point mass at 0 carries the rest
    let r = integrate_stieltjes(&IntegrationRequest::new(make_h_density(), 1.0, 1e-9)).unwrap();
    assert!(r.budget_met);
    let want = 1.0 - EXP_NEG_EULER_GAMMA;
    assert!((r.value - want).abs() <= r.total_error(), "{r:?}");
    assert!((r.value + EXP_NEG_EULER_GAMMA - 1.0).abs() < 1e-8);
}

#[test]
fn closed_form_examples() {
    let r = phi_integral_closed_form(1.0, 5000).unwrap();
    assert!((r.value - LN_2).abs() < 1e-10);
    assert!((r.value - LN_2).abs() <= r.total_error() + 1e-15);
    let prefix = phi_series_partial_sum(1.0, 0).unwrap();
    assert!((prefix - 0.386294361119890).abs() < 1e-12);
    assert!(phi_integral_closed_form(0.0, 10).is_err());
    assert!(phi_integral_closed_form(-2.0, 10).is_err());
}

#[test]
fn closed_form_tail_bound_shrinks_with_terms() {
    let mut last = f64::INFINITY;
    for k in [1usize, 10, 100, 1000] {
        let r = phi_integral_closed_form(3.0, k).unwrap();
        assert!(r.truncation_error < last);
        assert!((r.value - reference(3.0)).abs() <= r.total_error());
        last = r.truncation_error;
    }
}

#[test]
fn closed_form_agrees_with_quadrature() {
    for &x in &[0.5, 1.0, 3.0, 10.0] {
        let cf = phi_integral_closed_form(x, 2000).unwrap();
        let q =
            integrate_stieltjes(&IntegrationRequest::new(make_phi_density(), x, 1e-11)).unwrap();
        assert!(q.budget_met);
        assert!(
            (cf.value - q.value).abs() <= cf.total_error() + q.total_error(),
            "x = {x}: {cf:?} {q:?}"
        );
    }
}

#[test]
fn halving_the_target_never_increases_the_error() {
    for &x in &[0.2, 1.0, 7.0] {
        // errors are compared up to the reference's own rounding bound
        let (want, floor) = reference_with_bound(x);
        let mut target = 1e-4;
        let mut last = f64::INFINITY;
        while target >= 1e-12 {
            let r = integrate_stieltjes(&IntegrationRequest::new(make_phi_density(), x, target))
                .unwrap();
            let err = (r.value - want).abs();
            assert!(
                err <= last + floor,
                "x = {x}, target = {target:e}: {err:e} > {last:e}"
            );
            last = err;
            target *= 0.5;
        }
    }
}

#[test]
fn reported_bounds_are_honest() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut honest = 0;
    let trials = 200;
    for _ in 0..trials {
        let x = 10f64.powf(rng.gen_range(-1.5..2.0));
        let target = 10f64.powf(rng.gen_range(-12.0..-4.0));
        let r =
            integrate_stieltjes(&IntegrationRequest::new(make_phi_density(), x, target)).unwrap();
        let (want, slack) = reference_with_bound(x);
        if (r.value - want).abs() <= r.total_error() + slack {
            honest += 1;
        }
    }
    assert!(honest * 100 >= 99 * trials, "{honest}/{trials}");
}

#[test]
fn breakpoint_at_two_is_not_needed_for_h_but_agrees() {
    let h = make_h_density();
    let f = |s: f64| h.eval(s) / (s + 1.0);
    let with = integrate_panels(f, &[1.5, 2.0, 2.5], 1e-12, 5000);
    let without = integrate_panels(f, &[1.5, 2.5], 1e-12, 5000);
    assert!(with.converged && without.converged);
    assert!((with.value - without.value).abs() <= with.error + without.error);
    assert!(with.intervals <= without.intervals);
}

#[test]
fn complex_shift_has_negative_imaginary_part() {
    let phi = make_phi_density();
    for &(x, y) in &[(1.0, 0.5), (0.1, 2.0), (-3.0, 0.1), (5.0, 10.0)] {
        let z = CutPlanePoint::new(x, y).unwrap();
        let r = integrate_stieltjes_complex(&phi, z, 1e-10).unwrap();
        assert!(r.budget_met);
        assert!(r.value.im < 0.0, "z = {x}+{y}i: {:?}", r.value);
        let rc = integrate_stieltjes_complex(&phi, z.conj(), 1e-10).unwrap();
        assert!((rc.value - r.value.conj()).norm() < 1e-14);
    }
}

#[test]
fn complex_shift_on_the_real_axis_matches_real_path() {
    let phi = make_phi_density();
    let z = CutPlanePoint::new(2.0, 0.0).unwrap();
    let c = integrate_stieltjes_complex(&phi, z, 1e-11).unwrap();
    let r = integrate_stieltjes(&IntegrationRequest::new(phi, 2.0, 1e-11)).unwrap();
    assert!((c.value - Complex64::new(r.value, 0.0)).norm() < 1e-13);
}

#[test]
fn higher_kernel_powers() {
    // ∫φ/(s+x)² = −d/dx ∫φ/(s+x)
    let x = 1.5;
    let d = 1e-4;
    let lo = reference(x - d);
    let hi = reference(x + d);
    let fd = -(hi - lo) / (2.0 * d);
    let r = integrate_stieltjes(
        &IntegrationRequest::new(make_phi_density(), x, 1e-12).with_kernel_power(2),
    )
    .unwrap();
    assert!((r.value - fd).abs() < 1e-8);
}

#[test]
fn power_law_tail() {
    // density 1/(1+s)², ∫ ds/((1+s)²(s+1)) = 1/2
    let d = PiecewiseDensity::new(
        "inverse-square",
        |s| 1.0 / ((1.0 + s) * (1.0 + s)),
        Breakpoints::Points(vec![]),
        TailHint::PowerLaw {
            exponent: -2.0,
            onset: 1.0,
        },
    );
    let r = integrate_stieltjes(&IntegrationRequest::new(d, 1.0, 1e-9)).unwrap();
    assert!(r.budget_met);
    assert!((r.value - 0.5).abs() <= r.total_error());
}
