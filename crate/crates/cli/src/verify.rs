//! The full verification suite behind `defect-osc verify`.

use std::f64::consts::TAU;
use std::io::Write;

use defect_oscillator::coherent::{
    coherent_closed, coherent_evolved, coherent_norm, coherent_overlap, coherent_series,
    EvolvedCoherentState,
};
use defect_oscillator::defect::{
    bargmann_index, centrifugal_parameter, energy_squared, Component, DefectConfig, DefectKind,
    QuantumNumbers,
};
use defect_oscillator::radial::{
    d3_eigenvalue_check, ladder_action_check, overlap, Form, RadialEquation, SturmianMode,
};
use defect_oscillator::su11::{
    build_rep, casimir_deviation, commutator_residuals, displacement_bch, displacement_direct,
    CoherentParam,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::config::RunConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// Pass when the residual is below the threshold.
    Max,
    /// Pass when the residual exceeds the threshold.
    Min,
}

impl Bound {
    fn name(self) -> &'static str {
        match self {
            Bound::Max => "max",
            Bound::Min => "min",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Threshold {
    pub check: &'static str,
    pub bound: Bound,
    pub value: f64,
    pub measure: &'static str,
}

const fn max(check: &'static str, value: f64, measure: &'static str) -> Threshold {
    Threshold {
        check,
        bound: Bound::Max,
        value,
        measure,
    }
}

pub const THRESHOLDS: [Threshold; 16] = [
    max(
        "commutators",
        1e-15,
        "interior [K0,K+-] -+ K+- and [K-,K+] - 2K0 over (k+dim)^2; dims 8, 32, 128",
    ),
    max(
        "casimir",
        1e-15,
        "interior C - k(k-1) over (k+dim)^2; dims 8, 32, 128",
    ),
    max(
        "casimir_geometry",
        1e-15,
        "interior C - (Lambda^2-1)/4 over (k+16)^2 for all three defects",
    ),
    max(
        "bch",
        1e-8,
        "max |D_direct - D_bch| on guarded columns, dim 64",
    ),
    max(
        "orthonormality",
        1e-8,
        "max |<F_m|F_n> - delta_mn|, m,n <= 8",
    ),
    max(
        "ode_residual",
        1e-9,
        "max |radial residual| / max(|F|, 1e-3 max|F|) over the rho grid",
    ),
    Threshold {
        check: "ode_negative_control",
        bound: Bound::Min,
        value: 1e-2,
        measure: "smallest residual with E^2 raised by one level",
    },
    max("k0_eigenvalue", 1e-8, "max |K0 F / F - (n+k)|"),
    max(
        "ladder",
        1e-6,
        "max |projection - sqrt((n+1)(2k+n))|, |projection - sqrt(n(2k+n-1))|",
    ),
    max(
        "series_vs_closed",
        1e-8,
        "max |series - closed| / sup|closed| on rho in [0.1, 6]",
    ),
    max("normalization", 1e-6, "max |int |chi|^2 rho drho - 1|"),
    max("overlap_formula", 1e-10, "max ||<a|b>|^2 - closed formula|"),
    max(
        "evolution_static",
        1e-12,
        "max |chi(tau=0) - chi_closed| / sup|chi|",
    ),
    max(
        "periodicity",
        1e-10,
        "max ||chi(tau+T)| - |chi(tau)|| / sup|chi|",
    ),
    max(
        "evolution_norm",
        1e-6,
        "max |norm(tau) - 1| over the tau grid",
    ),
    max(
        "flat_degeneracy",
        1e-12,
        "max |E^2 - (m^2 + 4 m omega n_r + kz^2)| / E^2, l <= 5",
    ),
];

pub fn threshold(check: &str) -> &'static Threshold {
    THRESHOLDS
        .iter()
        .find(|t| t.check == check)
        .expect("every check has a threshold")
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub check: &'static str,
    pub residual: f64,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(check: &'static str, outcome: defect_oscillator::Result<(f64, String)>) -> Self {
        let t = threshold(check);
        match outcome {
            Ok((residual, detail)) => {
                let passed = match t.bound {
                    Bound::Max => residual < t.value,
                    Bound::Min => residual > t.value,
                };
                Self {
                    check,
                    residual,
                    passed,
                    detail,
                }
            }
            Err(e) => Self {
                check,
                residual: f64::NAN,
                passed: false,
                detail: format!("error: {e}"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, check: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == check)
    }

    /// Threshold table as `#` lines, then one CSV record per check.
    pub fn write_csv<W: Write>(&self, mut out: W) -> csv::Result<()> {
        writeln!(out, "# thresholds")?;
        for t in &THRESHOLDS {
            writeln!(
                out,
                "# {} {} {:e}: {}",
                t.check,
                t.bound.name(),
                t.value,
                t.measure
            )?;
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "check",
            "bound",
            "threshold",
            "residual",
            "passed",
            "detail",
        ])?;
        for c in &self.checks {
            let t = threshold(c.check);
            w.write_record([
                c.check.to_owned(),
                t.bound.name().to_owned(),
                format!("{:.16e}", t.value),
                format!("{:.16e}", c.residual),
                c.passed.to_string(),
                c.detail.clone(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let thresholds: Vec<Value> = THRESHOLDS
            .iter()
            .map(|t| json!({"check": t.check, "bound": t.bound.name(), "value": t.value, "measure": t.measure}))
            .collect();
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"check": c.check, "residual": c.residual, "passed": c.passed, "detail": c.detail}))
            .collect();
        json!({"passed": self.passed(), "thresholds": thresholds, "checks": checks})
    }
}

const ALGEBRA_INDICES: [f64; 4] = [0.5, 1.0, 1.375, 2.25];
const ALGEBRA_DIMS: [usize; 3] = [8, 32, 128];
const COHERENT_INDICES: [f64; 3] = [0.5, 1.0, 1.375];

struct Suite<'a> {
    cfg: &'a RunConfig,
    /// Bargmann indices of the configured quantum numbers.
    state_indices: Vec<f64>,
    /// Coherent parameters: the configured one plus seeded samples.
    xis: Vec<Complex64>,
}

fn random_disk_point(rng: &mut ChaCha8Rng, max_modulus: f64) -> Complex64 {
    Complex64::from_polar(
        max_modulus * rng.random::<f64>().sqrt(),
        TAU * rng.random::<f64>(),
    )
}

fn unique(mut values: Vec<f64>) -> Vec<f64> {
    values.sort_by(f64::total_cmp);
    values.dedup();
    values
}

fn fmax(acc: f64, v: f64) -> f64 {
    if v.is_nan() || acc.is_nan() {
        f64::NAN
    } else {
        acc.max(v)
    }
}

fn grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect()
}

impl Suite<'_> {
    fn algebra_indices(&self) -> Vec<f64> {
        unique(
            ALGEBRA_INDICES
                .iter()
                .copied()
                .chain(self.state_indices.iter().copied())
                .collect(),
        )
    }

    fn commutators(&self) -> defect_oscillator::Result<(f64, String)> {
        let mut worst = 0.0;
        let mut absolute = 0.0;
        for k in self.algebra_indices() {
            for dim in ALGEBRA_DIMS {
                let r = commutator_residuals(&build_rep(k, dim)?);
                let raw = r.ladder.max(r.closure);
                absolute = fmax(absolute, raw);
                worst = fmax(worst, raw / (k + dim as f64).powi(2));
            }
        }
        Ok((worst, format!("largest unscaled residual {absolute:.3e}")))
    }

    fn casimir(&self) -> defect_oscillator::Result<(f64, String)> {
        let mut worst = 0.0;
        let mut absolute = 0.0;
        for k in self.algebra_indices() {
            for dim in ALGEBRA_DIMS {
                let rep = build_rep(k, dim)?;
                let raw = casimir_deviation(&rep, k * (k - 1.0) + self.cfg.casimir_offset);
                absolute = fmax(absolute, raw);
                worst = fmax(worst, raw / (k + dim as f64).powi(2));
            }
        }
        Ok((worst, format!("largest unscaled deviation {absolute:.3e}")))
    }

    fn casimir_geometry(&self) -> defect_oscillator::Result<(f64, String)> {
        let alpha = self.cfg.defect.alpha();
        let defects = [
            DefectConfig::builder(DefectKind::CosmicString)
                .alpha(alpha)
                .build()?,
            DefectConfig::builder(DefectKind::MagneticCosmicString)
                .alpha(alpha)
                .flux_ratio(0.35)
                .build()?,
            DefectConfig::builder(DefectKind::CosmicDislocation)
                .alpha(alpha)
                .flux_ratio(0.35)
                .torsion(0.2)
                .build()?,
        ];
        let mut worst = 0.0;
        let mut count = 0;
        for defect in &defects {
            for qn in self.cfg.quantum_numbers() {
                let lambda = centrifugal_parameter(defect, &qn);
                let k = bargmann_index(lambda);
                let rep = build_rep(k, 16)?;
                let raw = casimir_deviation(
                    &rep,
                    (lambda * lambda - 1.0) / 4.0 + self.cfg.casimir_offset,
                );
                worst = fmax(worst, raw / (k + 16.0).powi(2));
                count += 1;
            }
        }
        Ok((worst, format!("{count} (defect, state) pairs")))
    }

    fn bch(&self, rng: &mut ChaCha8Rng) -> defect_oscillator::Result<(f64, String)> {
        let mut worst = 0.0;
        let mut least_guarded = usize::MAX;
        for (k, max_modulus) in [(0.5, 0.9), (1.0, 0.8), (1.375, 0.8)] {
            let rep = build_rep(k, 64)?;
            let mut xis = vec![Complex64::new(max_modulus, 0.0)];
            xis.extend((0..3).map(|_| random_disk_point(rng, max_modulus)));
            for xi in xis {
                let p = CoherentParam::new(xi)?;
                let direct = displacement_direct(&rep, &p)?;
                let bch = displacement_bch(&rep, &p)?;
                let cols = direct.guarded_columns.min(bch.guarded_columns);
                least_guarded = least_guarded.min(cols);
                let diff = (&direct.matrix - &bch.matrix)
                    .columns()
                    .into_iter()
                    .take(cols)
                    .flat_map(|c| c.to_vec())
                    .fold(0.0, |acc, z| fmax(acc, z.norm()));
                worst = fmax(worst, diff);
            }
        }
        Ok((worst, format!("fewest guarded columns {least_guarded}")))
    }

    fn orthonormality(&self) -> defect_oscillator::Result<(f64, String)> {
        let mut worst = 0.0;
        for k in COHERENT_INDICES {
            for m_omega in [0.5, 1.0, 2.0] {
                for m in 0..=8 {
                    let a = SturmianMode::new(m, k, m_omega, Form::F)?;
                    for n in m..=8 {
                        let want = if m == n { 1.0 } else { 0.0 };
                        worst = fmax(worst, (overlap(&a, &a.with_n(n))? - want).abs());
                    }
                }
            }
        }
        Ok((
            worst,
            "k in {0.5, 1, 1.375}, m omega in {0.5, 1, 2}".to_owned(),
        ))
    }

    fn modes(&self) -> Vec<(QuantumNumbers, SturmianMode)> {
        self.cfg
            .quantum_numbers()
            .into_iter()
            .map(|qn| (qn, SturmianMode::for_state(&self.cfg.defect, &qn, Form::F)))
            .collect()
    }

    fn ode(&self, raise: f64) -> (f64, f64) {
        let grid = self.cfg.rho_grid();
        let (mut worst, mut least) = (0.0, f64::INFINITY);
        for (qn, mode) in self.modes() {
            let mut eq = RadialEquation::from_spectrum(&self.cfg.defect, &qn);
            eq.gamma += raise;
            let r = eq.residual(&mode, &grid);
            worst = fmax(worst, r);
            least = least.min(r);
        }
        (worst, least)
    }

    fn ode_residual(&self) -> defect_oscillator::Result<(f64, String)> {
        Ok((self.ode(0.0).0, format!("{} modes", self.modes().len())))
    }

    fn ode_negative_control(&self) -> defect_oscillator::Result<(f64, String)> {
        let level = 4.0 * self.cfg.defect.m_omega();
        Ok((self.ode(level).1, format!("Gamma raised by {level}")))
    }

    fn k0_eigenvalue(&self) -> defect_oscillator::Result<(f64, String)> {
        let mut worst = 0.0;
        for (_, mode) in self.modes() {
            worst = fmax(worst, d3_eigenvalue_check(&mode)?);
        }
        Ok((worst, format!("{} modes", self.modes().len())))
    }

    fn ladder(&self) -> defect_oscillator::Result<(f64, String)> {
        let mut worst = 0.0;
        for (_, mode) in self.modes() {
            let c = ladder_action_check(&mode)?;
            let (n, k) = (f64::from(mode.n()), mode.k());
            worst = fmax(worst, (c.up - ((n + 1.0) * (2.0 * k + n)).sqrt()).abs());
            worst = fmax(worst, (c.down - (n * (2.0 * k + n - 1.0)).sqrt()).abs());
        }
        Ok((worst, "reported with the fixed phase -1".to_owned()))
    }

    fn series_vs_closed(&self) -> defect_oscillator::Result<(f64, String)> {
        let rho = grid(0.1, 6.0, 40);
        let m_omega = self.cfg.defect.m_omega();
        let mut worst = 0.0;
        let mut most_terms = 0;
        for k in COHERENT_INDICES {
            for &xi in &self.xis {
                let closed: Vec<Complex64> = rho
                    .iter()
                    .map(|&r| coherent_closed(xi, k, m_omega, r))
                    .collect::<Result<_, _>>()?;
                let sup = closed.iter().fold(0.0, |a, v| fmax(a, v.norm()));
                for (&r, c) in rho.iter().zip(&closed) {
                    let s = coherent_series(xi, k, m_omega, r, 1e-16)?;
                    most_terms = most_terms.max(s.terms);
                    worst = fmax(worst, (s.value - c).norm() / sup);
                }
            }
        }
        Ok((worst, format!("at most {most_terms} terms")))
    }

    fn normalization(&self) -> defect_oscillator::Result<(f64, String)> {
        let mut worst = 0.0;
        for k in COHERENT_INDICES {
            for &xi in &self.xis {
                worst = fmax(
                    worst,
                    (coherent_norm(xi, k, self.cfg.defect.m_omega())? - 1.0).abs(),
                );
            }
        }
        Ok((worst, format!("{} parameters", self.xis.len())))
    }

    fn overlap_formula(&self) -> defect_oscillator::Result<(f64, String)> {
        let mut worst = 0.0;
        for k in COHERENT_INDICES {
            for &a in &self.xis {
                for &b in &self.xis {
                    let value = coherent_overlap(a, b, k)?.norm_sqr();
                    let closed = ((1.0 - a.norm_sqr()) * (1.0 - b.norm_sqr())
                        / (1.0 - a.conj() * b).norm_sqr())
                    .powf(2.0 * k);
                    worst = fmax(worst, (value - closed).abs());
                }
            }
        }
        Ok((worst, format!("{} pairs per index", self.xis.len().pow(2))))
    }

    fn evolution_states(&self) -> defect_oscillator::Result<Vec<EvolvedCoherentState>> {
        let base = CoherentParam::new(self.cfg.xi)?;
        let d = &self.cfg.defect;
        self.state_indices
            .iter()
            .map(|&k| EvolvedCoherentState::new(base, k, d.m_omega(), 0.0, d.hbar()))
            .collect()
    }

    fn profile(
        state: &EvolvedCoherentState,
        rho: &[f64],
    ) -> defect_oscillator::Result<Vec<Complex64>> {
        rho.iter().map(|&r| coherent_evolved(state, r)).collect()
    }

    fn evolution_static(&self) -> defect_oscillator::Result<(f64, String)> {
        let rho = self.cfg.rho_grid();
        let mut worst = 0.0;
        for state in self.evolution_states()? {
            let evolved = Self::profile(&state, &rho)?;
            let sup = evolved.iter().fold(0.0, |a, v| fmax(a, v.norm()));
            for (&r, v) in rho.iter().zip(&evolved) {
                let closed = coherent_closed(state.base.xi(), state.k, state.m_omega, r)?;
                worst = fmax(worst, (v - closed).norm() / sup);
            }
        }
        Ok((worst, "tau = 0".to_owned()))
    }

    fn periodicity(&self) -> defect_oscillator::Result<(f64, String)> {
        let rho = self.cfg.rho_grid();
        let mut worst = 0.0;
        for start in self.evolution_states()? {
            for tau in self.cfg.tau_grid() {
                let now = Self::profile(&start.at(tau), &rho)?;
                let later = Self::profile(&start.at(tau + start.period()), &rho)?;
                let sup = now.iter().fold(0.0, |a, v| fmax(a, v.norm()));
                for (a, b) in now.iter().zip(&later) {
                    worst = fmax(worst, (a.norm() - b.norm()).abs() / sup);
                }
            }
        }
        Ok((worst, format!("{} tau points", self.cfg.tau_grid().len())))
    }

    fn evolution_norm(&self) -> defect_oscillator::Result<(f64, String)> {
        let mut worst = 0.0;
        for start in self.evolution_states()? {
            for tau in self.cfg.tau_grid() {
                let s = start.at(tau);
                worst = fmax(
                    worst,
                    (coherent_norm(s.xi_tau(), s.k, s.m_omega)? - 1.0).abs(),
                );
            }
        }
        Ok((worst, format!("{} tau points", self.cfg.tau_grid().len())))
    }

    fn flat_degeneracy(&self) -> defect_oscillator::Result<(f64, String)> {
        let d = &self.cfg.defect;
        let flat = DefectConfig::builder(DefectKind::CosmicString)
            .mass(d.mass())
            .omega(d.omega())
            .hbar(d.hbar())
            .build()?;
        let mut worst = 0.0;
        for n_r in 0..=self.cfg.nr_max {
            let want =
                d.mass().powi(2) + 4.0 * flat.m_omega() * f64::from(n_r) + self.cfg.k_z.powi(2);
            for l in 0..=5 {
                let qn = QuantumNumbers::new(n_r, l, self.cfg.k_z, Component::Upper);
                let e2 = energy_squared(&flat, &qn).e_squared;
                worst = fmax(worst, (e2 - want).abs() / e2);
            }
        }
        Ok((worst, "Upper, l in 0..=5".to_owned()))
    }
}

pub fn cmd_verify(cfg: &RunConfig) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let state_indices = unique(
        cfg.quantum_numbers()
            .iter()
            .map(|qn| bargmann_index(centrifugal_parameter(&cfg.defect, qn)))
            .collect(),
    );
    let mut xis = vec![cfg.xi, Complex64::new(0.9, 0.0), Complex64::new(0.0, 0.0)];
    xis.extend((0..4).map(|_| random_disk_point(&mut rng, 0.9)));
    let suite = Suite {
        cfg,
        state_indices,
        xis,
    };

    let checks = vec![
        CheckResult::new("commutators", suite.commutators()),
        CheckResult::new("casimir", suite.casimir()),
        CheckResult::new("casimir_geometry", suite.casimir_geometry()),
        CheckResult::new("bch", suite.bch(&mut rng)),
        CheckResult::new("orthonormality", suite.orthonormality()),
        CheckResult::new("ode_residual", suite.ode_residual()),
        CheckResult::new("ode_negative_control", suite.ode_negative_control()),
        CheckResult::new("k0_eigenvalue", suite.k0_eigenvalue()),
        CheckResult::new("ladder", suite.ladder()),
        CheckResult::new("series_vs_closed", suite.series_vs_closed()),
        CheckResult::new("normalization", suite.normalization()),
        CheckResult::new("overlap_formula", suite.overlap_formula()),
        CheckResult::new("evolution_static", suite.evolution_static()),
        CheckResult::new("periodicity", suite.periodicity()),
        CheckResult::new("evolution_norm", suite.evolution_norm()),
        CheckResult::new("flat_degeneracy", suite.flat_degeneracy()),
    ];
    Report { checks }
}
