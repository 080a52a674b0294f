//! Truncated discrete-series representations of su(1,1).
//!
//! Basis states `|k,n⟩`, `n = 0..N−1`, with
//!
//! ```text
//! K₀|k,n⟩ = (k+n)|k,n⟩
//! K₊|k,n⟩ = √((n+1)(2k+n)) |k,n+1⟩
//! K₋|k,n⟩ = √(n(2k+n−1))  |k,n−1⟩
//! ```
//!
//! Truncation only corrupts the last row and column of products, so algebra
//! checks are restricted to the leading `(N−1)×(N−1)` block.

use ndarray::{s, Array1, Array2};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::{log_gamma_unchecked, matrix_exp};

/// Largest last-row amplitude a displacement column may carry and still
/// count as free of truncation error.
pub const GUARD_TOL: f64 = 2e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Su11Rep {
    k: f64,
    dim: usize,
    k0: Array2<f64>,
    kp: Array2<f64>,
    km: Array2<f64>,
}

impl Su11Rep {
    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn k0(&self) -> &Array2<f64> {
        &self.k0
    }

    pub fn k_plus(&self) -> &Array2<f64> {
        &self.kp
    }

    pub fn k_minus(&self) -> &Array2<f64> {
        &self.km
    }
}

pub fn build_rep(k: f64, dim: usize) -> Result<Su11Rep> {
    if !(k >= 0.5 && k.is_finite()) {
        return Err(Error::domain(
            "build_rep",
            format!("Bargmann index must be >= 1/2, got {k}"),
        ));
    }
    if dim < 2 {
        return Err(Error::domain(
            "build_rep",
            format!("dimension must be >= 2, got {dim}"),
        ));
    }
    let k0 = Array2::from_diag(&Array1::from_shape_fn(dim, |n| k + n as f64));
    let mut kp = Array2::<f64>::zeros((dim, dim));
    for n in 0..dim - 1 {
        let nf = n as f64;
        kp[[n + 1, n]] = ((nf + 1.0) * (2.0 * k + nf)).sqrt();
    }
    let km = kp.t().to_owned();
    Ok(Su11Rep { k, dim, k0, kp, km })
}

fn commutator(a: &Array2<f64>, b: &Array2<f64>) -> Array2<f64> {
    a.dot(b) - b.dot(a)
}

fn interior_max(m: &Array2<f64>) -> f64 {
    let n = m.nrows() - 1;
    m.slice(s![..n, ..n])
        .iter()
        .fold(0.0, |acc, v| acc.max(v.abs()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutatorResiduals {
    /// `max(‖[K₀,K₊] − K₊‖, ‖[K₀,K₋] + K₋‖)` on the interior block.
    pub ladder: f64,
    /// `‖[K₋,K₊] − 2K₀‖` on the interior block.
    pub closure: f64,
}

pub fn commutator_residuals(rep: &Su11Rep) -> CommutatorResiduals {
    let up = commutator(&rep.k0, &rep.kp) - &rep.kp;
    let down = commutator(&rep.k0, &rep.km) + &rep.km;
    let closure = commutator(&rep.km, &rep.kp) - &rep.k0 * 2.0;
    CommutatorResiduals {
        ladder: interior_max(&up).max(interior_max(&down)),
        closure: interior_max(&closure),
    }
}

/// `C² = −K₊K₋ + K₀(K₀ − 1)`.
pub fn casimir_matrix(rep: &Su11Rep) -> Array2<f64> {
    let eye = Array2::<f64>::eye(rep.dim);
    rep.k0.dot(&(&rep.k0 - &eye)) - rep.kp.dot(&rep.km)
}

/// Largest interior-block deviation of `C²` from `expected · I`.
pub fn casimir_deviation(rep: &Su11Rep, expected: f64) -> f64 {
    let c = casimir_matrix(rep) - Array2::<f64>::eye(rep.dim) * expected;
    interior_max(&c)
}

/// Deviation of `C²` from `k(k−1)` on the interior block, off-diagonal
/// entries included.
pub fn casimir_eigenvalue_check(rep: &Su11Rep) -> f64 {
    casimir_deviation(rep, rep.k * (rep.k - 1.0))
}

/// Parameter of the displacement operator `D(ξ) = exp(ξK₊ − ξ*K₋)` together
/// with its normal-form coordinates `ζ = tanh|ξ| · ξ/|ξ|`, `η = ln(1 − |ζ|²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentParam {
    xi: Complex64,
}

impl CoherentParam {
    pub fn new(xi: Complex64) -> Result<Self> {
        if !(xi.norm() < 1.0) {
            return Err(Error::domain(
                "CoherentParam",
                format!("|xi| must be < 1, got {}", xi.norm()),
            ));
        }
        Ok(Self { xi })
    }

    pub fn xi(&self) -> Complex64 {
        self.xi
    }

    pub fn zeta(&self) -> Complex64 {
        let r = self.xi.norm();
        if r == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            self.xi * (r.tanh() / r)
        }
    }

    pub fn eta(&self) -> f64 {
        (-self.zeta().norm_sqr()).ln_1p()
    }
}

/// A displacement matrix and the number of leading columns that are free of
/// truncation error.
#[derive(Debug, Clone, PartialEq)]
pub struct Displacement {
    pub matrix: Array2<Complex64>,
    pub guarded_columns: usize,
}

impl Displacement {
    /// Columns past the guarded block.
    pub fn buffer(&self) -> usize {
        self.matrix.ncols() - self.guarded_columns
    }
}

fn guard(matrix: Array2<Complex64>) -> Result<Displacement> {
    let last = matrix.nrows() - 1;
    let guarded_columns = matrix
        .row(last)
        .iter()
        .take_while(|z| z.norm() <= GUARD_TOL)
        .count();
    if guarded_columns == 0 {
        return Err(Error::TruncationDominated {
            dim: matrix.nrows(),
            boundary: matrix[[last, 0]].norm(),
        });
    }
    Ok(Displacement {
        matrix,
        guarded_columns,
    })
}

fn complexify(m: &Array2<f64>, factor: Complex64) -> Array2<Complex64> {
    m.mapv(|v| factor * v)
}

/// `exp(ξK₊ − ξ*K₋)` of the truncated generators.
pub fn displacement_direct(rep: &Su11Rep, p: &CoherentParam) -> Result<Displacement> {
    let xi = p.xi();
    let generator = complexify(&rep.kp, xi) - complexify(&rep.km, xi.conj());
    guard(matrix_exp(&generator)?)
}

/// `exp(ζK₊) exp(ηK₀) exp(−ζ*K₋)`.
///
/// Rows `0..N` of each factor are exact restrictions of the infinite
/// operators, so the guarded columns reproduce `D(ξ)` itself.
pub fn displacement_bch(rep: &Su11Rep, p: &CoherentParam) -> Result<Displacement> {
    let zeta = p.zeta();
    let raise = matrix_exp(&complexify(&rep.kp, zeta))?;
    let scale = matrix_exp(&complexify(&rep.k0, Complex64::new(p.eta(), 0.0)))?;
    let lower = matrix_exp(&complexify(&rep.km, -zeta.conj()))?;
    guard(raise.dot(&scale).dot(&lower))
}

/// `c_n = (1−|z|²)^k √(Γ(n+2k)/(n! Γ(2k))) zⁿ`, evaluated in log space.
pub(crate) fn perelomov_coefficient(k: f64, z: Complex64, n: u64) -> Complex64 {
    let r = z.norm();
    if r == 0.0 {
        return if n == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        };
    }
    let nf = n as f64;
    let log_mag = k * (-r * r).ln_1p()
        + 0.5
            * (log_gamma_unchecked(nf + 2.0 * k)
                - log_gamma_unchecked(nf + 1.0)
                - log_gamma_unchecked(2.0 * k))
        + nf * r.ln();
    Complex64::from_polar(log_mag.exp(), nf * z.arg())
}

/// Expansion of `|z⟩` over `|k,0⟩ … |k,n_max⟩`, with `z` the point of the unit disk
/// (the normal-form `ζ` when the state is `D(ξ)|k,0⟩`).
pub fn perelomov_coefficients(k: f64, z: Complex64, n_max: usize) -> Result<Vec<Complex64>> {
    if !(z.norm() < 1.0) {
        return Err(Error::domain(
            "perelomov_coefficients",
            format!("|z| must be < 1, got {}", z.norm()),
        ));
    }
    if !(k >= 0.5) {
        return Err(Error::domain(
            "perelomov_coefficients",
            format!("Bargmann index must be >= 1/2, got {k}"),
        ));
    }
    Ok((0..=n_max as u64)
        .map(|n| perelomov_coefficient(k, z, n))
        .collect())
}
