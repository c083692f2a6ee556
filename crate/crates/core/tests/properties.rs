use lorentz_zeta::experiment::{parse_data_csv, write_data_csv, DataRow};
use lorentz_zeta::potentials::{electric_field, phi_closed, FieldVariant};
use lorentz_zeta::quadrature::{
    integrate_lorentz, integrate_theta_form, log_linear_identity, Execution, Kernel, LineOptions, LorentzMeasure,
};
use lorentz_zeta::symmetry::{solve_alpha_prime, DEFAULT_SOLVER_TOL};
use lorentz_zeta::zeta::{zeta, zeta_log_derivative, ComplexValue, EvalOptions};
use proptest::prelude::*;

fn eval() -> EvalOptions {
    EvalOptions::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_symmetry(sigma in 0.05f64..3.0, t in -200.0f64..200.0) {
        let s = ComplexValue::new(sigma, t);
        prop_assume!((s - 1.0).norm() > 1e-3);
        let a = zeta(s, &eval()).unwrap();
        let b = zeta(s.conj(), &eval()).unwrap();
        prop_assert!((a.conj() - b).norm() <= 1e-14, "{s}: {a} vs {b}");
    }

    #[test]
    fn log_derivative_matches_central_difference(sigma in 1.2f64..3.0, t in 0.0f64..60.0) {
        let s = ComplexValue::new(sigma, t);
        let h = 1e-5;
        let z = zeta(s, &eval()).unwrap();
        let fd = (zeta(s + h, &eval()).unwrap() - zeta(s - h, &eval()).unwrap()) / (2.0 * h * z);
        let exact = zeta_log_derivative(s, &eval()).unwrap();
        prop_assert!((fd - exact).norm() <= 1e-6 * (1.0 + exact.norm()), "{s}: {fd} vs {exact}");
    }

    #[test]
    fn solved_pairs_match_potentials(alpha in 0.01f64..0.49) {
        let pair = solve_alpha_prime(alpha, DEFAULT_SOLVER_TOL, &eval()).unwrap();
        let outside = zeta(ComplexValue::new(2.0 * pair.alpha_prime, 0.0), &eval()).unwrap().re.ln();
        prop_assert!((pair.potential - outside).abs() <= 2.0 * DEFAULT_SOLVER_TOL);
        prop_assert!(pair.potential > 0.0);
        prop_assert!(pair.rho_outside > 1.0);
    }

    #[test]
    fn inside_field_is_twice_exp_potential(alpha in 0.001f64..0.499) {
        let field = electric_field(alpha, FieldVariant::DAlpha, &eval()).unwrap();
        let phi = phi_closed(0.5 + alpha, 0.5 - alpha, &eval()).unwrap();
        prop_assert!((field - 2.0 * phi.exp()).abs() <= 1e-12 * field);
    }

    #[test]
    fn data_csv_round_trips(
        rows in prop::collection::vec(
            (prop::num::f64::NORMAL | prop::num::f64::ZERO, "[a-z_]{1,16}", prop::num::f64::NORMAL | prop::num::f64::SUBNORMAL),
            0..40,
        )
    ) {
        let rows: Vec<DataRow> = rows.into_iter().map(|(x, series, y)| DataRow { x, series, y }).collect();
        let text = write_data_csv(&rows).unwrap();
        let parsed = parse_data_csv(&text).unwrap();
        prop_assert_eq!(&parsed, &rows);
        prop_assert_eq!(write_data_csv(&parsed).unwrap(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn identity_residual_within_budget(rho in 0.6f64..3.0, rho0 in 0.1f64..1.0) {
        let check = log_linear_identity(rho, rho0, 1000.0, 1e-10).unwrap();
        prop_assert!(check.residual.abs() <= check.quadrature.total_error(), "{check:?}");
    }
}

#[test]
fn halving_tol_never_worsens_identity() {
    for (rho, rho0) in [(2.0, 1.0), (0.7, 0.2), (1.3, 0.6), (2.8, 0.15)] {
        let mut last = f64::INFINITY;
        for tol in [1e-6, 5e-7, 2.5e-7, 1.25e-7, 6.25e-8] {
            let r = log_linear_identity(rho, rho0, 1000.0, tol).unwrap().residual.abs();
            assert!(r <= last + 1e-13, "rho = {rho}, rho0 = {rho0}, tol = {tol}: {r} > {last}");
            last = r;
        }
    }
}

#[test]
fn serial_and_parallel_agree() {
    let measure = LorentzMeasure::new(0.3).unwrap();
    let serial = LineOptions::default();
    let parallel = LineOptions {
        execution: Execution::Parallel,
        ..LineOptions::default()
    };
    let a = integrate_lorentz(0.8, &measure, Kernel::Lorentz, &serial).unwrap();
    let b = integrate_lorentz(0.8, &measure, Kernel::Lorentz, &parallel).unwrap();
    assert!((a.value - b.value).abs() <= 1e-13);
    assert_eq!(a.panels, b.panels);
}

#[test]
fn line_and_theta_forms_agree_right_of_the_strip() {
    let opts = LineOptions {
        t_max: 400.0,
        ..LineOptions::default()
    };
    for (rho, rho0) in [(1.2, 0.5), (1.6, 1.0), (2.5, 0.2)] {
        let line = integrate_lorentz(rho, &LorentzMeasure::new(rho0).unwrap(), Kernel::Lorentz, &opts).unwrap();
        let theta = integrate_theta_form(rho, rho0, (opts.t_max / rho0).atan(), &opts).unwrap();
        let combined = line.error_estimate + theta.error_estimate + 1e-12;
        assert!((line.value - theta.value).abs() <= combined, "rho = {rho}: {} vs {}", line.value, theta.value);
    }
}

#[test]
fn theta_form_vanishes_on_empty_range() {
    let q = integrate_theta_form(0.8, 0.3, 1e-9, &LineOptions::default()).unwrap();
    assert!(q.value.abs() < 1e-8);
}
