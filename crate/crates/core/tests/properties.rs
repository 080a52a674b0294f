use defect_oscillator::coherent::{
    coherent_closed, coherent_evolved, coherent_overlap, coherent_series, EvolvedCoherentState,
};
use defect_oscillator::defect::{
    bargmann_index, centrifugal_parameter, energy_squared, gamma_constant, Component, DefectConfig,
    DefectKind, QuantumNumbers,
};
use defect_oscillator::radial::{overlap, Form, SturmianMode};
use defect_oscillator::su11::{build_rep, casimir_deviation, commutator_residuals, CoherentParam};
use num_complex::Complex64;
use proptest::prelude::*;

fn defect() -> impl Strategy<Value = DefectConfig> {
    (
        0usize..3,
        0.2f64..=1.0,
        0.3f64..3.0,
        0.3f64..3.0,
        -1.5f64..1.5,
        -1.0f64..1.0,
    )
        .prop_map(|(kind, alpha, mass, omega, flux, torsion)| {
            let builder = match kind {
                0 => DefectConfig::builder(DefectKind::CosmicString),
                1 => DefectConfig::builder(DefectKind::MagneticCosmicString).flux_ratio(flux),
                _ => DefectConfig::builder(DefectKind::CosmicDislocation)
                    .flux_ratio(flux)
                    .torsion(torsion),
            };
            builder
                .alpha(alpha)
                .mass(mass)
                .omega(omega)
                .build()
                .unwrap()
        })
}

fn quantum_numbers() -> impl Strategy<Value = QuantumNumbers> {
    (0u32..8, -4i32..=4, -2.0f64..2.0, any::<bool>()).prop_map(|(n_r, l, k_z, upper)| {
        let component = if upper {
            Component::Upper
        } else {
            Component::Lower
        };
        QuantumNumbers::new(n_r, l, k_z, component)
    })
}

fn disk_point(max_modulus: f64) -> impl Strategy<Value = Complex64> {
    (0.0..max_modulus, 0.0..std::f64::consts::TAU).prop_map(|(r, a)| Complex64::from_polar(r, a))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn energy_is_bound_and_gamma_counts_quanta(cfg in defect(), qn in quantum_numbers()) {
        let level = energy_squared(&cfg, &qn);
        prop_assert!(level.is_bound());
        prop_assert!(level.e_squared >= cfg.mass().powi(2) + qn.k_z.powi(2) - 1e-12);
        let k = bargmann_index(centrifugal_parameter(&cfg, &qn));
        let gamma = gamma_constant(&cfg, &qn, level.e_squared);
        let want = 4.0 * cfg.m_omega() * (f64::from(qn.n_r) + k);
        prop_assert!((gamma - want).abs() < 1e-10 * want.max(1.0));
    }

    #[test]
    fn casimir_matches_defect_geometry(cfg in defect(), qn in quantum_numbers()) {
        let lambda = centrifugal_parameter(&cfg, &qn);
        let k = bargmann_index(lambda);
        let rep = build_rep(k, 24).unwrap();
        prop_assert!(casimir_deviation(&rep, (lambda * lambda - 1.0) / 4.0) < 1e-10 * k.max(1.0).powi(2));
        let res = commutator_residuals(&rep);
        prop_assert!(res.ladder < 1e-12 * k.max(1.0) && res.closure < 1e-12 * k.max(1.0));
    }

    #[test]
    fn sturmian_orthonormal(k in 0.5f64..3.0, m_omega in 0.3f64..3.0, m in 0u32..6, n in 0u32..6) {
        let a = SturmianMode::new(m, k, m_omega, Form::F).unwrap();
        let value = overlap(&a, &a.with_n(n)).unwrap();
        let want = if m == n { 1.0 } else { 0.0 };
        prop_assert!((value - want).abs() < 1e-8);
    }

    #[test]
    fn series_matches_closed(xi in disk_point(0.9), k in 0.5f64..2.0, rho in 0.1f64..6.0) {
        let closed = coherent_closed(xi, k, 1.0, rho).unwrap();
        let series = coherent_series(xi, k, 1.0, rho, 1e-16).unwrap();
        prop_assert!((closed - series.value).norm() < 1e-11);
    }

    #[test]
    fn overlap_modulus_formula(a in disk_point(0.9), b in disk_point(0.9), k in 0.5f64..2.5) {
        let value = coherent_overlap(a, b, k).unwrap();
        let want = ((1.0 - a.norm_sqr()) * (1.0 - b.norm_sqr()) / (1.0 - a.conj() * b).norm_sqr()).powf(2.0 * k);
        prop_assert!((value.norm_sqr() - want).abs() < 1e-10);
        prop_assert!(value.norm() <= 1.0 + 1e-12);
    }

    #[test]
    fn evolution_preserves_modulus_and_period(
        xi in disk_point(0.9),
        k in 0.5f64..2.0,
        tau in 0.0f64..5.0,
        hbar in 0.5f64..2.0,
        rho in 0.1f64..4.0,
    ) {
        let state = EvolvedCoherentState::new(CoherentParam::new(xi).unwrap(), k, 0.8, tau, hbar).unwrap();
        prop_assert!((state.xi_tau().norm() - xi.norm()).abs() < 1e-15);
        prop_assert!((state.global_phase().norm() - 1.0).abs() < 1e-15);
        let a = coherent_evolved(&state, rho).unwrap().norm();
        let b = coherent_evolved(&state.at(tau + state.period()), rho).unwrap().norm();
        prop_assert!((a - b).abs() <= 1e-10 * a.max(1e-200));
    }

    #[test]
    fn overlap_with_evolved_depends_on_modulus(r in 0.0f64..0.9, a1 in 0.0f64..6.3, a2 in 0.0f64..6.3, tau in 0.0f64..3.0) {
        let overlap_at = |angle: f64| {
            let p = CoherentParam::new(Complex64::from_polar(r, angle)).unwrap();
            let s = EvolvedCoherentState::new(p, 1.25, 1.0, tau, 1.0).unwrap();
            coherent_overlap(p.xi(), s.xi_tau(), 1.25).unwrap().norm()
        };
        prop_assert!((overlap_at(a1) - overlap_at(a2)).abs() < 1e-12);
    }
}
