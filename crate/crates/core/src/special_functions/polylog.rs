use core::f64::consts::PI;

use super::bernoulli::bernoulli;
use super::riemann_zeta;
use crate::{Complex64, Error, Result};

/// Distance from an even integer within which Li_ℓ(e^{πix}) is rejected.
pub const X_EXCLUSION_RADIUS: f64 = 1e-6;

// Highest k in the ζ-series; limited by the Bernoulli table (B_64).
const SERIES_EXTRA_TERMS: usize = 62;

/// Li_ℓ(e^{πix}) = Σ_{n≥1} e^{πinx}/n^ℓ for ℓ ≥ 1.
///
/// Li₁ uses the principal logarithm, −log(1 − e^{πix}). For x ∈ (0, 2) the
/// argument 1 − e^{πix} stays in the right half-plane, away from the cut.
/// Odd integers x (w = −1) are regular points and are accepted.
pub fn polylog_unit_circle(ell: u32, x: f64) -> Result<Complex64> {
    if ell == 0 {
        return Err(Error::InvalidArgument(
            "polylogarithm order must be at least 1",
        ));
    }
    if !x.is_finite() {
        return Err(Error::InvalidArgument(
            "polylogarithm abscissa must be finite",
        ));
    }
    // r ≡ x (mod 2), r ∈ (−1, 1]; the series has period 2 in x.
    let mut r = x - 2.0 * libm::round(x / 2.0);
    if r <= -1.0 {
        r += 2.0;
    }
    if r.abs() <= X_EXCLUSION_RADIUS {
        return Err(Error::PolylogOnSingularity(x));
    }
    // Li_ℓ(e^{−iθ}) = conj Li_ℓ(e^{iθ}); evaluate on the upper half circle only.
    let value = upper_arc(ell, r.abs());
    Ok(if r < 0.0 { value.conj() } else { value })
}

/// Li_ℓ(e^{iπr}) for r ∈ (0, 1].
fn upper_arc(ell: u32, r: f64) -> Complex64 {
    let theta = PI * r;
    if ell == 1 {
        return Complex64::new(-libm::log(2.0 * libm::sin(theta / 2.0)), (PI - theta) / 2.0);
    }
    // Li_ℓ(e^μ) = μ^{ℓ−1}/(ℓ−1)! (H_{ℓ−1} − ln(−μ)) + Σ_{k ≠ ℓ−1} ζ(ℓ−k) μ^k/k!,  |μ| < 2π.
    let mu = Complex64::new(0.0, theta);
    let singular_k = (ell - 1) as usize;
    let ln_minus_mu = Complex64::new(libm::log(theta), -PI / 2.0);
    let harmonic: f64 = (1..=singular_k).map(|k| 1.0 / k as f64).sum();

    let mut power = Complex64::new(1.0, 0.0); // μ^k / k!
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..=singular_k + SERIES_EXTRA_TERMS {
        if k > 0 {
            power = power * mu / k as f64;
        }
        if k == singular_k {
            sum += power * (Complex64::new(harmonic, 0.0) - ln_minus_mu);
        } else {
            sum += power * zeta_at_integer(ell as i64 - k as i64);
        }
    }
    sum
}

fn zeta_at_integer(n: i64) -> f64 {
    match n {
        0 => -0.5,
        n if n < 0 => {
            let m = (1 - n) as usize;
            bernoulli(m).map_or(0.0, |b| -b / m as f64)
        }
        n => {
            riemann_zeta(Complex64::new(n as f64, 0.0))
                .expect("n ≥ 2")
                .re
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Truncated Σ e^{πinx}/n^ℓ.
    fn direct(ell: u32, x: f64, terms: usize) -> Complex64 {
        let mut sum = c(0.0, 0.0);
        for n in 1..=terms {
            sum += Complex64::from_polar(1.0, PI * n as f64 * x) / libm::pow(n as f64, ell as f64);
        }
        sum
    }

    #[test]
    fn li1_closed_form_at_minus_one() {
        let v = polylog_unit_circle(1, 1.0).unwrap();
        assert!((v - c(-libm::log(2.0), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn li2_alternating() {
        // Σ(−1)^n/n² summed in pairs to convergence.
        let oracle: f64 = (1..=2_000_000u64)
            .rev()
            .map(|n| if n % 2 == 0 { 1.0 } else { -1.0 } / (n as f64 * n as f64))
            .sum();
        let v = polylog_unit_circle(2, 1.0).unwrap();
        assert!((v.re - oracle).abs() < 1e-12);
        assert!((v.re + PI * PI / 12.0).abs() < 1e-14);
        assert!(v.im.abs() < 1e-15);
    }

    #[test]
    fn conjugation_symmetry_is_exact() {
        for ell in 1..6 {
            for &x in &[0.5, 0.123, 1.7, -3.3] {
                assert_eq!(
                    polylog_unit_circle(ell, -x).unwrap(),
                    polylog_unit_circle(ell, x).unwrap().conj()
                );
            }
        }
    }

    #[test]
    fn matches_direct_summation() {
        for ell in 2..8 {
            for &x in &[0.25, 0.5, 0.9, 1.3, 1.99] {
                let oracle = direct(ell, x, 200_000);
                let tail = libm::pow(200_000.0, 1.0 - ell as f64);
                let v = polylog_unit_circle(ell, x).unwrap();
                assert!(
                    (v - oracle).norm() < 1e-12 + tail,
                    "ℓ={ell} x={x}: {v} vs {oracle}"
                );
            }
        }
    }

    #[test]
    fn frozen_values() {
        // (3/π)·Li₂(−i) from mpmath.polylog.
        let v = polylog_unit_circle(2, -0.5).unwrap() * (3.0 / PI);
        assert!((v - c(-0.196_349_540_849_362_08, -0.874_682_712_092_456_3)).norm() < 1e-14);
    }

    #[test]
    fn periodicity_and_singularities() {
        let a = polylog_unit_circle(3, 0.4).unwrap();
        let b = polylog_unit_circle(3, 4.4).unwrap();
        assert!((a - b).norm() < 1e-13);
        assert_eq!(
            polylog_unit_circle(1, 2.0),
            Err(Error::PolylogOnSingularity(2.0))
        );
        assert_eq!(
            polylog_unit_circle(2, 1e-7),
            Err(Error::PolylogOnSingularity(1e-7))
        );
        assert!(polylog_unit_circle(2, 3.0).is_ok());
        assert!(polylog_unit_circle(0, 0.5).is_err());
    }
}
