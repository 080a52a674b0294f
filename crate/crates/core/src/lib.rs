//! Dirac oscillator coupled to a cosmic string, a magnetic cosmic string or a
//! cosmic dislocation, solved through its su(1,1) radial symmetry.
//!
//! The crate starts from the reduced radial equation
//!
//! ```text
//! [ d²/dρ² + (1/ρ) d/dρ − Λ²/ρ² − m²ω²ρ² + Γ ] Ψ = 0
//! ```
//!
//! where the defect enters only through the angular parameter `Λ`
//! (see [`defect`]). From there it provides
//!
//! * energy spectra for both spinor components ([`defect`]),
//! * Laguerre polynomials, log-gamma, half-line quadrature and dense matrix
//!   exponentials ([`special`]),
//! * truncated matrix representations of su(1,1), Casimir checks and the
//!   displacement operator in direct and normal-ordered form ([`su11`]),
//! * the normalized Sturmian basis with analytic ODE, `K₀` and ladder checks
//!   ([`radial`]),
//! * radial Perelomov coherent states and their time evolution
//!   ([`coherent`]).
//!
//! ```
//! use defect_oscillator::coherent::coherent_closed;
//! use defect_oscillator::defect::{energy_squared, Component, DefectConfig, DefectKind, QuantumNumbers};
//! use defect_oscillator::radial::{Form, SturmianMode};
//! use num_complex::Complex64;
//!
//! let cfg = DefectConfig::builder(DefectKind::CosmicString).alpha(0.8).build()?;
//! let qn = QuantumNumbers::new(1, 2, 0.0, Component::Upper);
//! let e2 = energy_squared(&cfg, &qn).e_squared;
//! assert!(e2 > 1.0);
//!
//! let mode = SturmianMode::for_state(&cfg, &qn, Form::Chi);
//! assert!(mode.eval(1.2).is_finite());
//! let chi = coherent_closed(Complex64::new(0.3, 0.1), mode.k(), cfg.m_omega(), 1.2)?;
//! assert!(chi.norm() > 0.0);
//! # Ok::<(), defect_oscillator::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod coherent;
pub mod defect;
pub mod error;
pub mod radial;
pub mod special;
pub mod su11;

pub use error::{Error, Result};
