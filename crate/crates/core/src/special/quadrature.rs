use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// How the half-line is cut to a finite interval `[0, R]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailCutoff {
    /// Integrand bounded by a polynomial times `exp(−scale·x²)`.
    Gaussian {
        scale: f64,
    },
    /// Integrand bounded by a polynomial times `exp(−rate·x)`.
    Exponential {
        rate: f64,
    },
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub tail: TailCutoff,
}

impl QuadratureSpec {
    pub fn gaussian(scale: f64) -> Self {
        Self {
            tail: TailCutoff::Gaussian { scale },
            ..Self::default()
        }
    }

    pub fn exponential(rate: f64) -> Self {
        Self {
            tail: TailCutoff::Exponential { rate },
            ..Self::default()
        }
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_subdivisions: 1 << 20,
            tail: TailCutoff::Gaussian { scale: 1.0 },
        }
    }
}

// Gauss–Kronrod 7/15 nodes on [-1, 1]; odd indices are the Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.lo.total_cmp(&self.lo))
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Panel {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let f_center = f(center);
    let mut kronrod = f_center * WGK[7];
    let mut gauss = f_center * WG[3];
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let pair = f(center - dx) + f(center + dx);
        kronrod += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Panel {
        lo,
        hi,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
    }
}

/// Upper limit beyond which the integrand contributes less than a small
/// fraction of `abs_tol`.
fn upper_limit<F: Fn(f64) -> f64>(f: &F, spec: &QuadratureSpec) -> Result<f64> {
    let log_tol = (1.0 / spec.abs_tol).ln().max(1.0);
    let mut upper = match spec.tail {
        TailCutoff::Fixed(upper) => return Ok(upper),
        TailCutoff::Gaussian { scale } if scale > 0.0 => (log_tol / scale).sqrt(),
        TailCutoff::Exponential { rate } if rate > 0.0 => log_tol / rate,
        other => {
            return Err(Error::domain(
                "integrate_halfline",
                format!("tail rule needs a positive decay constant, got {other:?}"),
            ))
        }
    };
    for _ in 0..200 {
        let tail_peak = (0..=16)
            .map(|i| f(upper * (1.0 + f64::from(i) / 16.0)).abs())
            .fold(0.0, f64::max);
        if tail_peak * upper <= 1e-3 * spec.abs_tol {
            return Ok(upper);
        }
        upper *= 1.25;
    }
    Err(Error::NonConvergence {
        what: "tail cutoff",
        detail: format!("integrand still significant at x = {upper:e}"),
    })
}

/// `∫₀^∞ f(x) dx` by adaptive Gauss–Kronrod subdivision of `[0, R]`, with `R`
/// chosen from `spec.tail`.
pub fn integrate_halfline<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec) -> Result<f64> {
    if !(spec.rel_tol > 0.0 && spec.abs_tol > 0.0) {
        return Err(Error::domain(
            "integrate_halfline",
            "tolerances must be positive",
        ));
    }
    let upper = upper_limit(&f, spec)?;
    const INITIAL_PANELS: usize = 16;
    let width = upper / INITIAL_PANELS as f64;
    let mut heap: BinaryHeap<Panel> = (0..INITIAL_PANELS)
        .map(|i| kronrod(&f, i as f64 * width, (i + 1) as f64 * width))
        .collect();
    let mut panels = INITIAL_PANELS;
    loop {
        let (value, error) = heap
            .iter()
            .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
        if !value.is_finite() {
            return Err(Error::domain(
                "integrate_halfline",
                "integrand is not finite",
            ));
        }
        if error <= spec.abs_tol.max(spec.rel_tol * value.abs()) {
            return Ok(value);
        }
        if panels >= spec.max_subdivisions {
            return Err(Error::NonConvergence {
                what: "integrate_halfline",
                detail: format!("{panels} subdivisions, error estimate {error:e}"),
            });
        }
        let worst = heap.pop().expect("panel heap is never empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            return Err(Error::NonConvergence {
                what: "integrate_halfline",
                detail: format!("panel at {:e} cannot be split further", worst.lo),
            });
        }
        heap.push(kronrod(&f, worst.lo, mid));
        heap.push(kronrod(&f, mid, worst.hi));
        panels += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{laguerre, log_gamma};

    #[test]
    fn elementary_integrals() {
        let exp = integrate_halfline(|x| (-x).exp(), &QuadratureSpec::exponential(1.0)).unwrap();
        assert!((exp - 1.0).abs() < 1e-10);

        let gauss = integrate_halfline(|x| (-x * x).exp(), &QuadratureSpec::gaussian(1.0)).unwrap();
        assert!((gauss - std::f64::consts::PI.sqrt() / 2.0).abs() < 1e-10);
    }

    #[test]
    fn laguerre_weight_norm() {
        let value = integrate_halfline(
            |x| (-x).exp() * x * laguerre(2, 1.0, x).unwrap().powi(2),
            &QuadratureSpec::exponential(1.0),
        )
        .unwrap();
        assert!((value - 3.0).abs() < 1e-9);
    }

    #[test]
    fn orthogonality() {
        for alpha in [0.0, 0.5, 1.0, 2.5] {
            for m in 0..=8u32 {
                for n in 0..=m {
                    let value = integrate_halfline(
                        |x| {
                            (-x).exp()
                                * x.powf(alpha)
                                * laguerre(m, alpha, x).unwrap()
                                * laguerre(n, alpha, x).unwrap()
                        },
                        &QuadratureSpec::exponential(1.0),
                    )
                    .unwrap();
                    let norm = |j: u32| {
                        (log_gamma(f64::from(j) + alpha + 1.0).unwrap()
                            - log_gamma(f64::from(j) + 1.0).unwrap())
                        .exp()
                    };
                    if m == n {
                        assert!((value / norm(n) - 1.0).abs() < 1e-8, "α={alpha} n={n}");
                    } else {
                        assert!(
                            value.abs() < 1e-8 * (norm(m) * norm(n)).sqrt(),
                            "α={alpha} m={m} n={n}: {value}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn reports_non_convergence() {
        let spec = QuadratureSpec {
            max_subdivisions: 17,
            rel_tol: 1e-14,
            abs_tol: 1e-15,
            tail: TailCutoff::Fixed(1.0),
        };
        let err = integrate_halfline(|x| (50.0 * x).sin().abs() / x.sqrt(), &spec).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { .. }));
    }

    #[test]
    fn rejects_bad_tail_rule() {
        let spec = QuadratureSpec::gaussian(0.0);
        assert!(integrate_halfline(|x| (-x * x).exp(), &spec).is_err());
    }
}
