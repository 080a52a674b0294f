use crate::error::{Error, Result};

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if x > 0.0 && x.is_finite() {
        Ok(log_gamma_unchecked(x))
    } else {
        Err(Error::domain(
            "log_gamma",
            format!("argument must be positive, got {x}"),
        ))
    }
}

pub(crate) fn log_gamma_unchecked(x: f64) -> f64 {
    libm::lgamma(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_values() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert!((log_gamma(5.0).unwrap() - 24f64.ln()).abs() < 1e-14);
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!((log_gamma(0.5).unwrap() - sqrt_pi.ln()).abs() < 1e-14);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
        assert!(log_gamma(f64::NAN).is_err());
    }

    #[test]
    fn recursion() {
        let mut x = 0.5;
        while x <= 50.0 {
            let diff = log_gamma(x + 1.0).unwrap() - log_gamma(x).unwrap();
            assert!((diff - x.ln()).abs() < 1e-12, "x = {x}");
            x += 0.137;
        }
    }
}
