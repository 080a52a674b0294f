use num_complex::Complex64;

use crate::error::{Error, Result};

/// Generalized Laguerre polynomial `L_n^a(x)` by the three-term recurrence
/// `(j+1) L_{j+1} = (2j + 1 + a − x) L_j − (j + a) L_{j−1}`.
pub fn laguerre(n: u32, a: f64, x: f64) -> Result<f64> {
    check_order(a, "laguerre")?;
    Ok(laguerre_value(n, a, x))
}

/// `d/dx L_n^a(x) = −L_{n−1}^{a+1}(x)`.
pub fn laguerre_derivative(n: u32, a: f64, x: f64) -> Result<f64> {
    check_order(a, "laguerre_derivative")?;
    Ok(match n {
        0 => 0.0,
        _ => -laguerre_value(n - 1, a + 1.0, x),
    })
}

/// Closed form of `Σ_n L_n^a(x) yⁿ = exp(−xy/(1−y)) / (1−y)^{a+1}`, principal branch.
pub fn laguerre_generating_closed(a: f64, y: Complex64, x: f64) -> Result<Complex64> {
    check_order(a, "laguerre_generating_closed")?;
    if !(y.norm() < 1.0) {
        return Err(Error::domain(
            "laguerre_generating_closed",
            format!("|y| must be < 1, got {}", y.norm()),
        ));
    }
    let one_minus = Complex64::new(1.0, 0.0) - y;
    Ok((-x * y / one_minus).exp() / one_minus.powf(a + 1.0))
}

fn check_order(a: f64, function: &'static str) -> Result<()> {
    if a > -1.0 {
        Ok(())
    } else {
        Err(Error::domain(
            function,
            format!("order must exceed -1, got {a}"),
        ))
    }
}

pub(crate) fn laguerre_value(n: u32, a: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut curr = 1.0 + a - x;
    for j in 1..n {
        let j = f64::from(j);
        let next = ((2.0 * j + 1.0 + a - x) * curr - (j + a) * prev) / (j + 1.0);
        prev = curr;
        curr = next;
    }
    curr
}

/// Endless sequence `L_0^a(x), L_1^a(x), …` from the same recurrence.
pub(crate) fn laguerre_sequence(a: f64, x: f64) -> LaguerreSequence {
    LaguerreSequence {
        a,
        x,
        next_order: 0,
        prev: 0.0,
        curr: 0.0,
    }
}

pub(crate) struct LaguerreSequence {
    a: f64,
    x: f64,
    next_order: u64,
    prev: f64,
    curr: f64,
}

impl Iterator for LaguerreSequence {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let value = match self.next_order {
            0 => 1.0,
            1 => 1.0 + self.a - self.x,
            n => {
                let j = (n - 1) as f64;
                ((2.0 * j + 1.0 + self.a - self.x) * self.curr - (j + self.a) * self.prev)
                    / (j + 1.0)
            }
        };
        self.prev = self.curr;
        self.curr = value;
        self.next_order += 1;
        Some(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Double-double number: unevaluated sum `hi + lo`.
    #[derive(Clone, Copy)]
    struct Dd(f64, f64);

    impl Dd {
        fn from(x: f64) -> Self {
            Dd(x, 0.0)
        }

        fn two_sum(a: f64, b: f64) -> Dd {
            let s = a + b;
            let v = s - a;
            Dd(s, (a - (s - v)) + (b - v))
        }

        fn add(self, o: Dd) -> Dd {
            let Dd(s, e) = Dd::two_sum(self.0, o.0);
            let e = e + self.1 + o.1;
            Dd::two_sum(s, e)
        }

        fn mul(self, o: Dd) -> Dd {
            let p = self.0 * o.0;
            let e = self.0.mul_add(o.0, -p) + self.0 * o.1 + self.1 * o.0;
            Dd::two_sum(p, e)
        }

        fn div(self, o: Dd) -> Dd {
            let q = self.0 / o.0;
            let r = self.add(o.mul(Dd::from(-q)));
            Dd::two_sum(q, r.0 / o.0)
        }
    }

    /// Explicit sum `Σ_i (−1)^i C(n+a, n−i) xⁱ / i!` in double-double precision.
    fn laguerre_series(n: u32, a: f64, x: f64) -> f64 {
        let mut total = Dd::from(0.0);
        for i in 0..=n {
            let mut term = Dd::from(1.0);
            for j in 1..=(n - i) {
                let num = Dd::from(a).add(Dd::from(f64::from(i + j)));
                term = term.mul(num).div(Dd::from(f64::from(j)));
            }
            for j in 1..=i {
                term = term.mul(Dd::from(x)).div(Dd::from(f64::from(j)));
            }
            if i % 2 == 1 {
                term = Dd(-term.0, -term.1);
            }
            total = total.add(term);
        }
        total.0 + total.1
    }

    #[test]
    fn low_orders() {
        assert_eq!(laguerre(0, 2.5, 7.3).unwrap(), 1.0);
        assert!((laguerre(1, 0.3, 2.2).unwrap() - (1.0 + 0.3 - 2.2)).abs() < 1e-15);
        assert!((laguerre(2, 1.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(matches!(laguerre(2, -1.0, 1.0), Err(Error::Domain { .. })));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(laguerre_derivative(0, 1.0, 3.2).unwrap(), 0.0);
        assert_eq!(laguerre_derivative(1, 0.7, 1.1).unwrap(), -1.0);
        let h = 1e-5;
        let fd = (laguerre_value(3, 0.5, 2.0 + h) - laguerre_value(3, 0.5, 2.0 - h)) / (2.0 * h);
        assert!((laguerre_derivative(3, 0.5, 2.0).unwrap() - fd).abs() < 1e-7);
        assert!(laguerre_derivative(3, -2.0, 2.0).is_err());
    }

    #[test]
    fn sequence_matches_pointwise_values() {
        for (n, value) in laguerre_sequence(1.7, 3.3).take(25).enumerate() {
            let direct = laguerre_value(n as u32, 1.7, 3.3);
            assert!((value - direct).abs() <= 1e-13 * direct.abs().max(1.0));
        }
    }

    #[test]
    fn generating_function_examples() {
        let z = laguerre_generating_closed(1.3, Complex64::new(0.0, 0.0), 4.0).unwrap();
        assert!((z - 1.0).norm() < 1e-15);
        let z = laguerre_generating_closed(0.0, Complex64::new(0.5, 0.0), 0.0).unwrap();
        assert!((z - 2.0).norm() < 1e-15);

        let y = Complex64::new(0.3, 0.2);
        let closed = laguerre_generating_closed(1.0, y, 1.7).unwrap();
        let series: Complex64 = laguerre_sequence(1.0, 1.7)
            .take(200)
            .enumerate()
            .map(|(n, l)| l * y.powu(n as u32))
            .sum();
        assert!((closed - series).norm() < 1e-10);
        assert!(laguerre_generating_closed(1.0, Complex64::new(1.0, 0.0), 1.0).is_err());
    }

    proptest! {
        #[test]
        fn recurrence_matches_explicit_series(n in 0u32..=30, a in -0.9f64..5.0, x in 0.0f64..40.0) {
            let rec = laguerre_value(n, a, x);
            let series = laguerre_series(n, a, x);
            prop_assert!((rec - series).abs() <= 1e-9 * series.abs(), "{rec} vs {series}");
        }

        #[test]
        fn generating_identity_inside_disk(
            a in -0.5f64..4.0,
            r in 0.0f64..0.9,
            theta in 0.0f64..std::f64::consts::TAU,
            x in 0.0f64..6.0,
        ) {
            let y = Complex64::from_polar(r, theta);
            let closed = laguerre_generating_closed(a, y, x).unwrap();
            let mut sum = Complex64::new(0.0, 0.0);
            let mut power = Complex64::new(1.0, 0.0);
            for l in laguerre_sequence(a, x).take(2000) {
                sum += l * power;
                power *= y;
            }
            prop_assert!((closed - sum).norm() <= 1e-10 * closed.norm().max(1.0));
        }
    }
}
