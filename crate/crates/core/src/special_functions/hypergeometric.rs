use super::{rising_factorial, AsymptoticOrder};
use crate::{Complex64, Error, Result};

/// Distance from ℤ below which s counts as an integer for ₁F₁(s; s+1; y).
pub const NON_GENERIC_RADIUS: f64 = 1e-10;

/// (s e^y / y) Σ_{j=0}^{N} (1−s)_j y^{−j}, the large-y approximant of ₁F₁(s; s+1; y).
pub fn confluent_1f1_asymptotic(s: Complex64, y: f64, order: AsymptoticOrder) -> Result<Complex64> {
    let nearest = libm::round(s.re);
    if (s - nearest).norm() <= NON_GENERIC_RADIUS {
        return Err(Error::NonGenericParameter(nearest));
    }
    if !(y >= 1.0 && y.is_finite()) {
        return Err(Error::InvalidArgument("₁F₁ asymptotics need y ≥ 1"));
    }
    let one_minus_s = Complex64::new(1.0, 0.0) - s;
    let sum: Complex64 = (0..=order.terms() as usize)
        .map(|j| rising_factorial(one_minus_s, j) / libm::pow(y, j as f64))
        .sum();
    Ok(sum * s * (libm::exp(y) / y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(n: u32) -> AsymptoticOrder {
        AsymptoticOrder::new(n).unwrap()
    }

    /// ₁F₁(s; s+1; y) = Σ s/(s+n) · yⁿ/n!.
    fn taylor(s: Complex64, y: f64) -> Complex64 {
        let mut power = 1.0;
        let mut sum = Complex64::new(0.0, 0.0);
        for n in 0..2000 {
            if n > 0 {
                power *= y / n as f64;
            }
            let term = s / (s + n as f64) * power;
            sum += term;
            if n as f64 > y && term.norm() < 1e-18 * sum.norm() {
                break;
            }
        }
        sum
    }

    #[test]
    fn leading_term() {
        let v = confluent_1f1_asymptotic(Complex64::new(0.5, 0.0), 200.0, order(0)).unwrap();
        let expected = 0.5 * libm::exp(200.0) / 200.0;
        assert!((v.re - expected).abs() / expected < 1e-14);
    }

    #[test]
    fn agrees_with_taylor_series() {
        let s = Complex64::new(0.25, 0.0);
        let y = 100.0;
        let oracle = taylor(s, y);
        // mpmath.hyp1f1(0.25, 1.25, 100)
        assert!((oracle.re - 6.771_602_300_918_11e40).abs() / 6.771_602_300_918_11e40 < 1e-12);
        let v = confluent_1f1_asymptotic(s, y, order(3)).unwrap();
        assert!((v - oracle).norm() / oracle.norm() <= 20.0 * libm::pow(y, -4.0));
    }

    #[test]
    fn magnitude_of_complex_parameter() {
        let s = Complex64::new(1.5, -0.7);
        let v = confluent_1f1_asymptotic(s, 80.0, order(2)).unwrap();
        let scale = s.norm() * libm::exp(80.0) / 80.0;
        assert!(v.norm().is_finite());
        assert!(v.norm() < 2.0 * scale && v.norm() > 0.5 * scale);
    }

    #[test]
    fn integers_are_rejected() {
        let r = confluent_1f1_asymptotic(Complex64::new(2.0 + 1e-12, 0.0), 10.0, order(1));
        assert_eq!(r, Err(Error::NonGenericParameter(2.0)));
        assert!(confluent_1f1_asymptotic(Complex64::new(2.0, 0.1), 10.0, order(1)).is_ok());
    }
}
