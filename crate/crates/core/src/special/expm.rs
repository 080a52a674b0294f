use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub const MATRIX_EXP_DIM_CAP: usize = 256;

/// Largest 1-norm handed to the Taylor core after scaling.
const SCALED_NORM: f64 = 0.5;
const MAX_TAYLOR_TERMS: usize = 40;

/// `exp(A)` by scaling and squaring around a truncated Taylor series.
///
/// The Taylor core keeps entrywise relative accuracy for triangular
/// generators such as `ζK₊`, whose exponentials have entries spanning many
/// orders of magnitude.
pub fn matrix_exp(a: &Array2<Complex64>) -> Result<Array2<Complex64>> {
    let (rows, cols) = a.dim();
    if rows != cols {
        return Err(Error::Mismatch(format!(
            "matrix_exp needs a square matrix, got {rows}x{cols}"
        )));
    }
    if rows > MATRIX_EXP_DIM_CAP {
        return Err(Error::DimensionCap {
            dim: rows,
            cap: MATRIX_EXP_DIM_CAP,
        });
    }
    if a.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::domain("matrix_exp", "matrix has non-finite entries"));
    }

    let norm = one_norm(a);
    let squarings = if norm > SCALED_NORM {
        (norm / SCALED_NORM).log2().ceil() as i32
    } else {
        0
    };
    let scaled = a.mapv(|z| z * 0.5f64.powi(squarings));

    let mut sum = Array2::<Complex64>::eye(rows);
    let mut term = Array2::<Complex64>::eye(rows);
    for j in 1..=MAX_TAYLOR_TERMS {
        term = term.dot(&scaled).mapv(|z| z / j as f64);
        sum += &term;
        if max_abs(&term) <= f64::EPSILON * max_abs(&sum) * 1e-2 {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum.dot(&sum);
    }
    Ok(sum)
}

fn one_norm(a: &Array2<Complex64>) -> f64 {
    a.columns()
        .into_iter()
        .map(|c| c.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

fn max_abs(a: &Array2<Complex64>) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
