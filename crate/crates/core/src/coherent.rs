//! Radial SU(1,1) Perelomov coherent states `χ(ρ, ξ) = Σ c_n(ξ) χ_n(ρ)` in
//! configuration space, their closed form and their evolution in the
//! fictitious time `τ` generated by `4mω K₀`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::radial::{sturmian_sequence, Form};
use crate::special::{integrate_halfline, log_gamma_unchecked, QuadratureSpec};
use crate::su11::{perelomov_coefficient, CoherentParam};

const MAX_SERIES_TERMS: u64 = 100_000;
const SMALL_TERMS_TO_STOP: u32 = 5;

fn check_family(function: &'static str, k: f64, m_omega: f64) -> Result<()> {
    if !(k >= 0.5 && k.is_finite()) {
        return Err(Error::domain(
            function,
            format!("Bargmann index must be >= 1/2, got {k}"),
        ));
    }
    if !(m_omega > 0.0 && m_omega.is_finite()) {
        return Err(Error::domain(
            function,
            format!("m*omega must be positive, got {m_omega}"),
        ));
    }
    Ok(())
}

fn check_point(function: &'static str, xi: Complex64, rho: f64) -> Result<()> {
    if !(xi.norm() < 1.0) {
        return Err(Error::domain(
            function,
            format!("|xi| must be < 1, got {}", xi.norm()),
        ));
    }
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::domain(
            function,
            format!("rho must be positive, got {rho}"),
        ));
    }
    Ok(())
}

/// `(1−|ξ|²)^k √(2/Γ(2k)) (mω)^k ρ^{2k−1} exp((mωρ²/2)(ξ+1)/(ξ−1)) / (1−ξ)^{2k}`,
/// principal branch.
pub fn coherent_closed(xi: Complex64, k: f64, m_omega: f64, rho: f64) -> Result<Complex64> {
    check_family("coherent_closed", k, m_omega)?;
    check_point("coherent_closed", xi, rho)?;
    let one = Complex64::new(1.0, 0.0);
    let x = m_omega * rho * rho;
    let real_part = k * (-xi.norm_sqr()).ln_1p()
        + 0.5 * (std::f64::consts::LN_2 - log_gamma_unchecked(2.0 * k))
        + k * m_omega.ln()
        + (2.0 * k - 1.0) * rho.ln();
    let log_value = 0.5 * x * (xi + one) / (xi - one) - 2.0 * k * (one - xi).ln() + real_part;
    Ok(log_value.exp())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    pub terms: u64,
}

/// Partial sums of `Σ c_n(ξ) χ_n(ρ)`, stopped once `SMALL_TERMS_TO_STOP`
/// consecutive terms fall below `tail_tol · |partial sum|`.
pub fn coherent_series(
    xi: Complex64,
    k: f64,
    m_omega: f64,
    rho: f64,
    tail_tol: f64,
) -> Result<SeriesValue> {
    check_family("coherent_series", k, m_omega)?;
    check_point("coherent_series", xi, rho)?;
    if !(tail_tol > 0.0) {
        return Err(Error::domain(
            "coherent_series",
            format!("tail_tol must be positive, got {tail_tol}"),
        ));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut small_run = 0;
    for (n, basis) in (0..MAX_SERIES_TERMS).zip(sturmian_sequence(k, m_omega, Form::Chi, rho)) {
        let term = perelomov_coefficient(k, xi, n) * basis;
        sum += term;
        if term.norm() < tail_tol * sum.norm() {
            small_run += 1;
            if small_run == SMALL_TERMS_TO_STOP {
                return Ok(SeriesValue {
                    value: sum,
                    terms: n + 1,
                });
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NonConvergence {
        what: "coherent_series",
        detail: format!("no convergence within {MAX_SERIES_TERMS} terms at xi={xi}, rho={rho}"),
    })
}

/// `∫|χ(ρ, ξ)|² ρ dρ` of the closed form.
pub fn coherent_norm(xi: Complex64, k: f64, m_omega: f64) -> Result<f64> {
    check_family("coherent_norm", k, m_omega)?;
    check_point("coherent_norm", xi, 1.0)?;
    let one = Complex64::new(1.0, 0.0);
    let scale = m_omega * (1.0 - xi.norm_sqr()) / (one - xi).norm_sqr();
    integrate_halfline(
        |rho| {
            if rho <= 0.0 {
                return 0.0;
            }
            coherent_closed(xi, k, m_omega, rho).map_or(f64::NAN, |v| v.norm_sqr() * rho)
        },
        &QuadratureSpec::gaussian(scale),
    )
}

/// `⟨ξ₁|ξ₂⟩ = Σ c_n(ξ₁)* c_n(ξ₂)`.
pub fn coherent_overlap(xi1: Complex64, xi2: Complex64, k: f64) -> Result<Complex64> {
    check_family("coherent_overlap", k, 1.0)?;
    check_point("coherent_overlap", xi1, 1.0)?;
    check_point("coherent_overlap", xi2, 1.0)?;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut small_run = 0;
    for n in 0..MAX_SERIES_TERMS {
        let term = perelomov_coefficient(k, xi1, n).conj() * perelomov_coefficient(k, xi2, n);
        sum += term;
        if term.norm() <= f64::EPSILON * 1e-2 * sum.norm() {
            small_run += 1;
            if small_run == SMALL_TERMS_TO_STOP {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NonConvergence {
        what: "coherent_overlap",
        detail: format!("no convergence within {MAX_SERIES_TERMS} terms"),
    })
}

/// `𝒰(τ)|ξ⟩ = e^{−4imωkτ/ħ} |ξ e^{−4imωτ/ħ}⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolvedCoherentState {
    pub base: CoherentParam,
    pub k: f64,
    pub m_omega: f64,
    pub tau: f64,
    pub hbar: f64,
}

impl EvolvedCoherentState {
    pub fn new(base: CoherentParam, k: f64, m_omega: f64, tau: f64, hbar: f64) -> Result<Self> {
        check_family("EvolvedCoherentState", k, m_omega)?;
        if !(hbar > 0.0 && hbar.is_finite()) {
            return Err(Error::domain(
                "EvolvedCoherentState",
                format!("hbar must be positive, got {hbar}"),
            ));
        }
        if !tau.is_finite() {
            return Err(Error::domain(
                "EvolvedCoherentState",
                format!("tau must be finite, got {tau}"),
            ));
        }
        Ok(Self {
            base,
            k,
            m_omega,
            tau,
            hbar,
        })
    }

    pub fn at(&self, tau: f64) -> Self {
        Self { tau, ..*self }
    }

    fn angle(&self) -> f64 {
        -4.0 * self.m_omega * self.tau / self.hbar
    }

    pub fn xi_tau(&self) -> Complex64 {
        self.base.xi() * Complex64::cis(self.angle())
    }

    pub fn global_phase(&self) -> Complex64 {
        Complex64::cis(self.k * self.angle())
    }

    /// Period `πħ/(2mω)` of `|χ(ρ, τ)|`.
    pub fn period(&self) -> f64 {
        evolution_period(self.m_omega, self.hbar)
    }
}

pub fn evolution_period(m_omega: f64, hbar: f64) -> f64 {
    PI * hbar / (2.0 * m_omega)
}

pub fn coherent_evolved(state: &EvolvedCoherentState, rho: f64) -> Result<Complex64> {
    if state.tau == 0.0 {
        return coherent_closed(state.base.xi(), state.k, state.m_omega, rho);
    }
    Ok(state.global_phase() * coherent_closed(state.xi_tau(), state.k, state.m_omega, rho)?)
}
