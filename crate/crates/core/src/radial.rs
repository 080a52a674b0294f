//! Normalized Sturmian basis in configuration space and analytic checks of
//! the radial equation and its su(1,1) operators.
//!
//! With `x = mωρ²` the mode of group numbers `(n, k)` is
//!
//! ```text
//! F_n(ρ) = N_n e^{−x/2} ρ^{2k−½} L_n^{2k−1}(x),   N_n² = 2 n! (mω)^{2k} / Γ(n+2k)
//! χ_n(ρ) = F_n(ρ)/√ρ
//! ```
//!
//! normalized as `∫F²dρ = ∫χ²ρdρ = 1` and positive as `ρ → 0⁺`.

use crate::defect::{
    bargmann_index, centrifugal_parameter, energy_squared, gamma_constant, DefectConfig,
    QuantumNumbers,
};
use crate::error::{Error, Result};
use crate::special::{
    integrate_halfline, laguerre_sequence, laguerre_value, log_gamma_unchecked, QuadratureSpec,
};

/// Phase relating the differential ladder operators to the abstract ones on
/// the positive Sturmian basis: `𝔇± F_n = LADDER_PHASE · √(…) F_{n±1}`.
pub const LADDER_PHASE: f64 = -1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form {
    /// `F` (or `G`), weight `dρ`.
    F,
    /// `χ = F/√ρ`, weight `ρ dρ`.
    Chi,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SturmianMode {
    n: u32,
    k: f64,
    m_omega: f64,
    form: Form,
}

/// Value and first two ρ-derivatives of `F`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derivatives {
    pub value: f64,
    pub first: f64,
    pub second: f64,
}

impl SturmianMode {
    pub fn new(n: u32, k: f64, m_omega: f64, form: Form) -> Result<Self> {
        if !(k >= 0.5 && k.is_finite()) {
            return Err(Error::domain(
                "SturmianMode",
                format!("Bargmann index must be >= 1/2, got {k}"),
            ));
        }
        if !(m_omega > 0.0 && m_omega.is_finite()) {
            return Err(Error::domain(
                "SturmianMode",
                format!("m*omega must be positive, got {m_omega}"),
            ));
        }
        Ok(Self {
            n,
            k,
            m_omega,
            form,
        })
    }

    /// Mode solving the radial equation of `qn` in the defect `cfg`.
    pub fn for_state(cfg: &DefectConfig, qn: &QuantumNumbers, form: Form) -> Self {
        Self {
            n: qn.n_r,
            k: bargmann_index(centrifugal_parameter(cfg, qn)),
            m_omega: cfg.m_omega(),
            form,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn m_omega(&self) -> f64 {
        self.m_omega
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn with_n(&self, n: u32) -> Self {
        Self { n, ..*self }
    }

    pub fn with_form(&self, form: Form) -> Self {
        Self { form, ..*self }
    }

    /// Laguerre order `2k − 1 = |Λ|`.
    pub fn laguerre_order(&self) -> f64 {
        2.0 * self.k - 1.0
    }

    fn power(&self) -> f64 {
        match self.form {
            Form::F => 2.0 * self.k - 0.5,
            Form::Chi => 2.0 * self.k - 1.0,
        }
    }

    /// `ln N_n`.
    pub fn log_norm(&self) -> f64 {
        log_norm(self.n, self.k, self.m_omega)
    }

    /// `N_n e^{−x/2} ρ^p`, the factor multiplying the Laguerre polynomial.
    fn envelope(&self, rho: f64) -> f64 {
        let x = self.m_omega * rho * rho;
        (self.log_norm() - 0.5 * x).exp() * rho.powf(self.power())
    }

    pub fn eval(&self, rho: f64) -> f64 {
        let x = self.m_omega * rho * rho;
        self.envelope(rho) * laguerre_value(self.n, self.laguerre_order(), x)
    }

    /// Analytic `F`, `F'`, `F''` (always of the `F` form).
    pub fn f_derivatives(&self, rho: f64) -> Derivatives {
        let mode = self.with_form(Form::F);
        let c = self.m_omega;
        let a = self.laguerre_order();
        let p = mode.power();
        let x = c * rho * rho;
        let envelope = mode.envelope(rho);

        let u = laguerre_value(self.n, a, x);
        let dl = if self.n >= 1 {
            -laguerre_value(self.n - 1, a + 1.0, x)
        } else {
            0.0
        };
        let ddl = if self.n >= 2 {
            laguerre_value(self.n - 2, a + 2.0, x)
        } else {
            0.0
        };
        let du = 2.0 * c * rho * dl;
        let ddu = 4.0 * c * c * rho * rho * ddl + 2.0 * c * dl;

        let phi1 = p / rho - c * rho;
        let phi2 = -p / (rho * rho) - c;
        Derivatives {
            value: envelope * u,
            first: envelope * (phi1 * u + du),
            second: envelope * ((phi2 + phi1 * phi1) * u + 2.0 * phi1 * du + ddu),
        }
    }

    /// Grid `[0.05, R]`, geometric, with `R` past the turning point far
    /// enough that the Gaussian factor is below `e^{−20}`.
    pub fn check_grid(&self, points: usize) -> Vec<f64> {
        let reach = ((4.0 * (f64::from(self.n) + self.k) + 40.0) / self.m_omega).sqrt();
        geometric_grid(0.05, reach.max(0.1), points)
    }

    fn quadrature(&self) -> QuadratureSpec {
        QuadratureSpec::gaussian(self.m_omega)
    }
}

pub(crate) fn log_norm(n: u32, k: f64, m_omega: f64) -> f64 {
    let nf = f64::from(n);
    0.5 * (std::f64::consts::LN_2 + log_gamma_unchecked(nf + 1.0) + 2.0 * k * m_omega.ln()
        - log_gamma_unchecked(nf + 2.0 * k))
}

/// `count` points from `lo` to `hi` with a constant ratio.
pub fn geometric_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi / lo).ln() / (count - 1) as f64;
            (0..count).map(|i| lo * (step * i as f64).exp()).collect()
        }
    }
}

/// Values of modes `n = 0, 1, 2, …` of one `(k, mω, form)` family at `rho`.
pub(crate) fn sturmian_sequence(
    k: f64,
    m_omega: f64,
    form: Form,
    rho: f64,
) -> impl Iterator<Item = f64> {
    let ground = SturmianMode {
        n: 0,
        k,
        m_omega,
        form,
    };
    let x = m_omega * rho * rho;
    let log_base = -0.5 * x + ground.power() * rho.ln();
    laguerre_sequence(ground.laguerre_order(), x)
        .enumerate()
        .map(move |(n, l)| (log_norm(n as u32, k, m_omega) + log_base).exp() * l)
}

pub fn sturmian_eval(mode: &SturmianMode, rho: f64) -> f64 {
    mode.eval(rho)
}

/// `⟨a|b⟩` with the weight of their common form.
pub fn overlap(a: &SturmianMode, b: &SturmianMode) -> Result<f64> {
    if a.k != b.k || a.m_omega != b.m_omega || a.form != b.form {
        return Err(Error::Mismatch(format!(
            "overlap needs equal k, m*omega and form: {a:?} vs {b:?}"
        )));
    }
    let weight_power = match a.form {
        Form::F => 0,
        Form::Chi => 1,
    };
    integrate_halfline(
        |rho| a.eval(rho) * b.eval(rho) * rho.powi(weight_power),
        &a.quadrature(),
    )
}

/// Radial equation `−ρ²F'' + m²ω²ρ⁴F − Γρ²F − (¼ − Λ²)F = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialEquation {
    pub centrifugal: f64,
    pub gamma: f64,
    pub m_omega: f64,
}

impl RadialEquation {
    /// Equation of `qn` with `Γ` taken from the energy spectrum.
    pub fn from_spectrum(cfg: &DefectConfig, qn: &QuantumNumbers) -> Self {
        let e_squared = energy_squared(cfg, qn).e_squared;
        Self {
            centrifugal: centrifugal_parameter(cfg, qn),
            gamma: gamma_constant(cfg, qn, e_squared),
            m_omega: cfg.m_omega(),
        }
    }

    pub fn apply(&self, d: &Derivatives, rho: f64) -> f64 {
        let r2 = rho * rho;
        -r2 * d.second + self.m_omega * self.m_omega * r2 * r2 * d.value
            - self.gamma * r2 * d.value
            - (0.25 - self.centrifugal * self.centrifugal) * d.value
    }

    /// Largest `|residual| / max(|F|, 10⁻³ max|F|)` over the grid.
    pub fn residual(&self, mode: &SturmianMode, rho_grid: &[f64]) -> f64 {
        let derivs: Vec<Derivatives> = rho_grid.iter().map(|&r| mode.f_derivatives(r)).collect();
        let peak = derivs.iter().fold(0.0f64, |m, d| m.max(d.value.abs()));
        let floor = 1e-3 * peak;
        derivs
            .iter()
            .zip(rho_grid)
            .map(|(d, &rho)| self.apply(d, rho).abs() / d.value.abs().max(floor))
            .fold(0.0, f64::max)
    }
}

pub fn ode_residual(
    mode: &SturmianMode,
    cfg: &DefectConfig,
    qn: &QuantumNumbers,
    rho_grid: &[f64],
) -> f64 {
    RadialEquation::from_spectrum(cfg, qn).residual(mode, rho_grid)
}

/// `𝔇₃F = (1/4mω)[−F'' + ((2k−1)² − ¼)/ρ² F + m²ω²ρ² F]`.
fn apply_k0(mode: &SturmianMode, d: &Derivatives, rho: f64) -> f64 {
    let c = mode.m_omega;
    let a = mode.laguerre_order();
    (-d.second + (a * a - 0.25) / (rho * rho) * d.value + c * c * rho * rho * d.value) / (4.0 * c)
}

/// `𝔇±F = ½[∓ρF' + mωρ²F ∓ ½F] − 𝔇₃F`.
fn apply_ladder(mode: &SturmianMode, rho: f64, raising: bool) -> f64 {
    let d = mode.f_derivatives(rho);
    let sign = if raising { 1.0 } else { -1.0 };
    0.5 * (-sign * rho * d.first + mode.m_omega * rho * rho * d.value - sign * 0.5 * d.value)
        - apply_k0(mode, &d, rho)
}

fn require_f(mode: &SturmianMode, function: &'static str) -> Result<()> {
    match mode.form {
        Form::F => Ok(()),
        Form::Chi => Err(Error::Mismatch(format!("{function} acts on the F form"))),
    }
}

/// Largest `|(𝔇₃F)/F − (n + k)|` over grid points where `|F| > 10⁻⁶ max|F|`.
pub fn d3_eigenvalue_check(mode: &SturmianMode) -> Result<f64> {
    require_f(mode, "d3_eigenvalue_check")?;
    let grid = mode.check_grid(400);
    let derivs: Vec<Derivatives> = grid.iter().map(|&r| mode.f_derivatives(r)).collect();
    let peak = derivs.iter().fold(0.0f64, |m, d| m.max(d.value.abs()));
    let expected = f64::from(mode.n) + mode.k;
    Ok(derivs
        .iter()
        .zip(&grid)
        .filter(|(d, _)| d.value.abs() > 1e-6 * peak)
        .map(|(d, &rho)| (apply_k0(mode, d, rho) / d.value - expected).abs())
        .fold(0.0, f64::max))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderCoefficients {
    /// `LADDER_PHASE · ⟨F_{n+1}|𝔇₊F_n⟩`, expected `√((n+1)(2k+n))`.
    pub up: f64,
    /// `LADDER_PHASE · ⟨F_{n−1}|𝔇₋F_n⟩`, expected `√(n(2k+n−1))`; zero for `n = 0`.
    pub down: f64,
    /// `‖𝔇₊F_n‖`; equals `|up|` when the image lies entirely along `F_{n+1}`.
    pub up_norm: f64,
    /// `‖𝔇₋F_n‖`.
    pub down_norm: f64,
}

pub fn ladder_action_check(mode: &SturmianMode) -> Result<LadderCoefficients> {
    require_f(mode, "ladder_action_check")?;
    let spec = mode.quadrature();
    let project = |target: Option<SturmianMode>, raising: bool| -> Result<(f64, f64)> {
        let norm_sq = integrate_halfline(|r| apply_ladder(mode, r, raising).powi(2), &spec)?;
        let coeff = match target {
            Some(t) => integrate_halfline(|r| t.eval(r) * apply_ladder(mode, r, raising), &spec)?,
            None => 0.0,
        };
        Ok((LADDER_PHASE * coeff, norm_sq.max(0.0).sqrt()))
    };
    let (up, up_norm) = project(Some(mode.with_n(mode.n + 1)), true)?;
    let below = mode.n.checked_sub(1).map(|n| mode.with_n(n));
    let (down, down_norm) = project(below, false)?;
    Ok(LadderCoefficients {
        up,
        down,
        up_norm,
        down_norm,
    })
}
