//! Defect geometries, angular parameters and the energy spectrum.
//!
//! Each defect changes only the angular parameter entering the centrifugal
//! term of the radial equation:
//!
//! | defect                 | parameter `X∓`                               |
//! |------------------------|----------------------------------------------|
//! | cosmic string          | `(l + ½)/α ∓ ½`                              |
//! | magnetic cosmic string | `(l + ½ + eΦ_B/2π)/α ∓ ½`                    |
//! | cosmic dislocation     | `(l + ½ + eΦ_B/2π − k_z J^z)/α ∓ ½`          |
//!
//! The upper spinor component uses `X₋` in the centrifugal term and `X₊` in
//! `Γ₊`; the lower component swaps the two.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DefectKind {
    CosmicString,
    MagneticCosmicString,
    CosmicDislocation,
}

impl DefectKind {
    pub fn name(self) -> &'static str {
        match self {
            DefectKind::CosmicString => "string",
            DefectKind::MagneticCosmicString => "magnetic",
            DefectKind::CosmicDislocation => "dislocation",
        }
    }
}

impl std::str::FromStr for DefectKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "string" => Ok(DefectKind::CosmicString),
            "magnetic" => Ok(DefectKind::MagneticCosmicString),
            "dislocation" => Ok(DefectKind::CosmicDislocation),
            other => Err(Error::InvalidConfig(format!(
                "unknown defect '{other}' (expected string, magnetic or dislocation)"
            ))),
        }
    }
}

/// Physical parameters of one defect spacetime plus the oscillator constants.
///
/// Only constructible through [`DefectConfig::builder`], which rejects
/// out-of-range values and nonzero parameters the chosen defect does not use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DefectConfig {
    kind: DefectKind,
    alpha: f64,
    mass: f64,
    omega: f64,
    flux_ratio: f64,
    torsion: f64,
    hbar: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct DefectConfigBuilder {
    kind: DefectKind,
    alpha: f64,
    mass: f64,
    omega: f64,
    flux_ratio: f64,
    torsion: f64,
    hbar: f64,
}

impl DefectConfigBuilder {
    pub fn alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn mass(mut self, mass: f64) -> Self {
        self.mass = mass;
        self
    }

    pub fn omega(mut self, omega: f64) -> Self {
        self.omega = omega;
        self
    }

    /// `eΦ_B/2π`.
    pub fn flux_ratio(mut self, flux_ratio: f64) -> Self {
        self.flux_ratio = flux_ratio;
        self
    }

    /// `J^z`.
    pub fn torsion(mut self, torsion: f64) -> Self {
        self.torsion = torsion;
        self
    }

    pub fn hbar(mut self, hbar: f64) -> Self {
        self.hbar = hbar;
        self
    }

    pub fn build(self) -> Result<DefectConfig> {
        let invalid = |msg: String| Err(Error::InvalidConfig(msg));
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return invalid(format!("alpha must lie in (0, 1], got {}", self.alpha));
        }
        for (name, value) in [
            ("mass", self.mass),
            ("omega", self.omega),
            ("hbar", self.hbar),
        ] {
            if !(value > 0.0 && value.is_finite()) {
                return invalid(format!("{name} must be positive and finite, got {value}"));
            }
        }
        if !self.flux_ratio.is_finite() || !self.torsion.is_finite() {
            return invalid("flux ratio and torsion must be finite".into());
        }
        match self.kind {
            DefectKind::CosmicString if self.flux_ratio != 0.0 => {
                return invalid("the cosmic string takes no magnetic flux".into())
            }
            DefectKind::CosmicString | DefectKind::MagneticCosmicString if self.torsion != 0.0 => {
                return invalid(format!("{} takes no torsion", self.kind.name()))
            }
            _ => {}
        }
        Ok(DefectConfig {
            kind: self.kind,
            alpha: self.alpha,
            mass: self.mass,
            omega: self.omega,
            flux_ratio: self.flux_ratio,
            torsion: self.torsion,
            hbar: self.hbar,
        })
    }
}

impl DefectConfig {
    /// Starts from flat-space defaults: `α = m = ω = ħ = 1`, no flux, no torsion.
    pub fn builder(kind: DefectKind) -> DefectConfigBuilder {
        DefectConfigBuilder {
            kind,
            alpha: 1.0,
            mass: 1.0,
            omega: 1.0,
            flux_ratio: 0.0,
            torsion: 0.0,
            hbar: 1.0,
        }
    }

    pub fn kind(&self) -> DefectKind {
        self.kind
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn flux_ratio(&self) -> f64 {
        self.flux_ratio
    }

    pub fn torsion(&self) -> f64 {
        self.torsion
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn m_omega(&self) -> f64 {
        self.mass * self.omega
    }
}

/// Spinor component: `Upper` is χ (F), `Lower` is φ (G).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    Upper,
    Lower,
}

impl Component {
    pub fn name(self) -> &'static str {
        match self {
            Component::Upper => "upper",
            Component::Lower => "lower",
        }
    }

    /// Sign of the parameter in the centrifugal term.
    pub fn centrifugal_sign(self) -> Sign {
        match self {
            Component::Upper => Sign::Minus,
            Component::Lower => Sign::Plus,
        }
    }

    /// Sign of the parameter entering `Γ`.
    pub fn shift_sign(self) -> Sign {
        match self {
            Component::Upper => Sign::Plus,
            Component::Lower => Sign::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Minus,
    Plus,
}

/// Discrete labels of one radial mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumNumbers {
    pub n_r: u32,
    pub l: i32,
    /// Wave number along the string axis.
    pub k_z: f64,
    pub component: Component,
}

impl QuantumNumbers {
    pub fn new(n_r: u32, l: i32, k_z: f64, component: Component) -> Self {
        Self {
            n_r,
            l,
            k_z,
            component,
        }
    }
}

/// `Λ∓`, `Θ∓` or `Π∓` depending on the defect.
pub fn angular_parameter(cfg: &DefectConfig, qn: &QuantumNumbers, sign: Sign) -> f64 {
    let orbital = f64::from(qn.l) + 0.5;
    let numerator = match cfg.kind {
        DefectKind::CosmicString => orbital,
        DefectKind::MagneticCosmicString => orbital + cfg.flux_ratio,
        DefectKind::CosmicDislocation => orbital + cfg.flux_ratio - qn.k_z * cfg.torsion,
    };
    let base = numerator / cfg.alpha;
    match sign {
        Sign::Minus => base - 0.5,
        Sign::Plus => base + 0.5,
    }
}

/// Angular parameter in the centrifugal term of `qn.component`.
pub fn centrifugal_parameter(cfg: &DefectConfig, qn: &QuantumNumbers) -> f64 {
    angular_parameter(cfg, qn, qn.component.centrifugal_sign())
}

/// Angular parameter entering `Γ` for `qn.component`.
pub fn shift_parameter(cfg: &DefectConfig, qn: &QuantumNumbers) -> f64 {
    angular_parameter(cfg, qn, qn.component.shift_sign())
}

/// Bargmann index `k = (|Λ| + 1)/2` of the discrete series carried by a mode
/// with centrifugal parameter `Λ`.
pub fn bargmann_index(lambda: f64) -> f64 {
    0.5 * lambda.abs() + 0.5
}

/// `E²` of one level, with the two energy branches when it is a bound state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub e_squared: f64,
}

impl EnergyLevel {
    /// `(+√E², −√E²)`, or `None` outside the bound-state region.
    pub fn branches(&self) -> Option<(f64, f64)> {
        (self.e_squared >= 0.0).then(|| {
            let e = self.e_squared.sqrt();
            (e, -e)
        })
    }

    pub fn is_bound(&self) -> bool {
        self.e_squared >= 0.0
    }

    pub fn diagnostic(&self) -> Option<String> {
        (!self.is_bound()).then(|| {
            format!(
                "E² = {:e} < 0: parameters lie outside the bound-state region",
                self.e_squared
            )
        })
    }
}

/// `E² = m² + 4mω[n_r + ½|X_c| − ½X_s + ½] + k_z²` with `X_c`, `X_s` the
/// centrifugal and shift parameters of the component.
pub fn energy_squared(cfg: &DefectConfig, qn: &QuantumNumbers) -> EnergyLevel {
    let centrifugal = centrifugal_parameter(cfg, qn);
    let shift = shift_parameter(cfg, qn);
    let bracket = f64::from(qn.n_r) + 0.5 * centrifugal.abs() - 0.5 * shift + 0.5;
    EnergyLevel {
        e_squared: cfg.mass * cfg.mass + 4.0 * cfg.m_omega() * bracket + qn.k_z * qn.k_z,
    }
}

/// `Γ± = E² − m² + 2mω X± − k_z²`; `Γ₊` for the upper component, `Γ₋` for the lower.
pub fn gamma_constant(cfg: &DefectConfig, qn: &QuantumNumbers, e_squared: f64) -> f64 {
    e_squared - cfg.mass * cfg.mass + 2.0 * cfg.m_omega() * shift_parameter(cfg, qn)
        - qn.k_z * qn.k_z
}

/// Constants of the factorization
/// `(ρ d/dρ + μρ² + δ)(−ρ d/dρ + ερ² + λ) F = σ F`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorizationConstants {
    pub mu: f64,
    pub delta: f64,
    pub epsilon: f64,
    pub lambda: f64,
    pub sigma: f64,
}

/// Positive branch `μ = ε = mω`, which annihilates decaying solutions.
pub fn factorization_constants(
    cfg: &DefectConfig,
    qn: &QuantumNumbers,
    gamma: f64,
) -> FactorizationConstants {
    let m_omega = cfg.m_omega();
    let reduced = gamma / (2.0 * m_omega);
    let lambda = -reduced - 0.5;
    let centrifugal = centrifugal_parameter(cfg, qn);
    FactorizationConstants {
        mu: m_omega,
        delta: lambda - 1.0,
        epsilon: m_omega,
        lambda,
        sigma: (reduced + 1.0).powi(2) - centrifugal * centrifugal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flat() -> DefectConfig {
        DefectConfig::builder(DefectKind::CosmicString)
            .build()
            .unwrap()
    }

    #[test]
    fn angular_parameter_examples() {
        let qn0 = QuantumNumbers::new(0, 0, 0.0, Component::Upper);
        assert_eq!(angular_parameter(&flat(), &qn0, Sign::Minus), 0.0);

        let cs = DefectConfig::builder(DefectKind::CosmicString)
            .alpha(0.8)
            .build()
            .unwrap();
        let qn1 = QuantumNumbers::new(0, 1, 0.0, Component::Upper);
        assert!((angular_parameter(&cs, &qn1, Sign::Minus) - 1.375).abs() < 1e-15);

        let mag = DefectConfig::builder(DefectKind::MagneticCosmicString)
            .alpha(0.5)
            .flux_ratio(0.5)
            .build()
            .unwrap();
        assert_eq!(angular_parameter(&mag, &qn0, Sign::Minus), 1.5);

        let dis = DefectConfig::builder(DefectKind::CosmicDislocation)
            .torsion(1.0)
            .build()
            .unwrap();
        let qn_kz = QuantumNumbers::new(0, 0, 0.5, Component::Upper);
        assert_eq!(angular_parameter(&dis, &qn_kz, Sign::Minus), -0.5);
    }

    #[test]
    fn bargmann_examples() {
        assert_eq!(bargmann_index(0.0), 0.5);
        assert_eq!(bargmann_index(1.0), 1.0);
        assert_eq!(bargmann_index(-2.0), 1.5);
    }

    #[test]
    fn energy_examples() {
        let cfg = flat();
        let ground = energy_squared(&cfg, &QuantumNumbers::new(0, 0, 0.0, Component::Upper));
        assert_eq!(ground.e_squared, 1.0);
        assert_eq!(ground.branches(), Some((1.0, -1.0)));
        let first = energy_squared(&cfg, &QuantumNumbers::new(1, 0, 0.0, Component::Upper));
        assert_eq!(first.e_squared, 5.0);
    }

    #[test]
    fn negative_energy_squared_is_a_diagnostic() {
        let level = EnergyLevel { e_squared: -0.25 };
        assert!(level.branches().is_none());
        assert!(level.diagnostic().unwrap().contains("bound-state"));
        assert!(EnergyLevel { e_squared: 0.0 }.diagnostic().is_none());
    }

    #[test]
    fn spectrum_bracket_is_never_negative() {
        // the bracket reduces to n_r, −Λ₋, n_r + 1 or 1 − Λ₊ depending on signs
        for alpha in [0.05, 0.3, 0.77, 1.0] {
            let cfg = DefectConfig::builder(DefectKind::CosmicString)
                .alpha(alpha)
                .mass(0.3)
                .build()
                .unwrap();
            for l in -6..=6 {
                for component in [Component::Upper, Component::Lower] {
                    let qn = QuantumNumbers::new(0, l, 0.0, component);
                    assert!(energy_squared(&cfg, &qn).e_squared >= 0.09 - 1e-15);
                }
            }
        }
    }

    #[test]
    fn gamma_examples() {
        let cfg = flat();
        let qn = QuantumNumbers::new(0, 0, 0.0, Component::Upper);
        assert_eq!(gamma_constant(&cfg, &qn, 1.0), 2.0);
        let qn_kz = QuantumNumbers::new(0, 0, 2.0, Component::Upper);
        assert_eq!(gamma_constant(&cfg, &qn_kz, 5.0), 2.0);
    }

    #[test]
    fn factorization_examples() {
        let cfg = flat();
        let qn = QuantumNumbers::new(0, 0, 0.0, Component::Upper);
        let c = factorization_constants(&cfg, &qn, 2.0);
        assert_eq!(
            (c.mu, c.epsilon, c.lambda, c.delta, c.sigma),
            (1.0, 1.0, -1.5, -2.5, 4.0)
        );

        // l = 1 at alpha = 1 gives Λ₋ = 1
        let qn1 = QuantumNumbers::new(0, 1, 0.0, Component::Upper);
        let c = factorization_constants(&cfg, &qn1, 0.0);
        assert_eq!((c.lambda, c.delta, c.sigma), (-0.5, -1.5, 0.0));
        assert_eq!(c.lambda - c.delta, 1.0);
    }

    #[test]
    fn builder_rejects_bad_values() {
        assert!(DefectConfig::builder(DefectKind::CosmicString)
            .alpha(0.0)
            .build()
            .is_err());
        assert!(DefectConfig::builder(DefectKind::CosmicString)
            .alpha(1.2)
            .build()
            .is_err());
        assert!(DefectConfig::builder(DefectKind::CosmicString)
            .mass(-1.0)
            .build()
            .is_err());
        assert!(DefectConfig::builder(DefectKind::CosmicString)
            .hbar(0.0)
            .build()
            .is_err());
        assert!(DefectConfig::builder(DefectKind::CosmicString)
            .flux_ratio(0.1)
            .build()
            .is_err());
        assert!(DefectConfig::builder(DefectKind::MagneticCosmicString)
            .torsion(0.1)
            .build()
            .is_err());
        assert!(DefectConfig::builder(DefectKind::CosmicDislocation)
            .flux_ratio(0.2)
            .torsion(0.1)
            .build()
            .is_ok());
    }

    #[test]
    fn defect_names_round_trip() {
        for kind in [
            DefectKind::CosmicString,
            DefectKind::MagneticCosmicString,
            DefectKind::CosmicDislocation,
        ] {
            assert_eq!(kind.name().parse::<DefectKind>().unwrap(), kind);
        }
        assert!("cone".parse::<DefectKind>().is_err());
    }
}
