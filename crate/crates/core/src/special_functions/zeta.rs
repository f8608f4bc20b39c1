use core::f64::consts::PI;

use super::bernoulli::BERNOULLI_OVER_FACTORIAL;
use super::gamma_fn;
use crate::{Complex64, Error, Result};

/// |s − 1| at or below which ζ reports its pole.
pub const ZETA_POLE_RADIUS: f64 = 1e-12;

const EM_TERMS: usize = 30;

/// Euler–Maclaurin with a direct sum up to N − 1 and 15 Bernoulli corrections.
fn euler_maclaurin(s: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 1..EM_TERMS {
        sum += (-s * libm::log(n as f64)).exp();
    }
    let n = EM_TERMS as f64;
    let ln_n = libm::log(n);
    let n_pow = (-s * ln_n).exp();
    sum += n_pow * n / (s - one) + n_pow * 0.5;
    // Term k carries (s)_{2k−1} N^{−s−2k+1}.
    let mut rising = s;
    let mut power = n_pow / n;
    for (k, coeff) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        if k > 0 {
            let j = (2 * k) as f64;
            rising = rising * (s + (j - 1.0)) * (s + j);
            power /= n * n;
        }
        sum += rising * power * *coeff;
    }
    sum
}

/// ζ(s) by Euler–Maclaurin alone, without reflection.
///
/// Accurate to about 1e-13 for |s| ≲ 30 with Re s > −1, including the left
/// half of the critical strip; used as a second route independent of the
/// functional equation.
pub fn zeta_euler_maclaurin(s: Complex64) -> Result<Complex64> {
    if (s - 1.0).norm() <= ZETA_POLE_RADIUS {
        return Err(Error::PoleAtOne);
    }
    Ok(euler_maclaurin(s))
}

/// The Riemann ζ function for |Im s| up to about 50.
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::InvalidArgument("ζ argument must be finite"));
    }
    if (s - 1.0).norm() <= ZETA_POLE_RADIUS {
        return Err(Error::PoleAtOne);
    }
    if s.re >= 0.5 || s.norm() < 0.1 {
        return Ok(euler_maclaurin(s));
    }
    // ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s)
    let one = Complex64::new(1.0, 0.0);
    let reflected = euler_maclaurin(one - s);
    let factor = (s * libm::log(2.0) + (s - one) * libm::log(PI)).exp() * (s * (PI / 2.0)).sin();
    Ok(factor * gamma_fn(one - s)? * reflected)
}

/// ξ(s) = s(s−1)π^{−s/2}Γ(s/2)ζ(s)/2, with ξ(0) = ξ(1) = 1/2.
pub fn xi_completed(s: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if (s - one).norm() <= ZETA_POLE_RADIUS || s.norm() <= ZETA_POLE_RADIUS {
        return Complex64::new(0.5, 0.0);
    }
    if s.re < 0.5 {
        return xi_right_half(one - s);
    }
    xi_right_half(s)
}

// Written as (s−1)π^{−s/2}Γ(1+s/2)ζ(s) so that no factor has a pole for Re s ≥ 1/2.
fn xi_right_half(s: Complex64) -> Complex64 {
    let gamma = gamma_fn(s * 0.5 + 1.0).expect("Γ(1 + s/2) is pole-free for Re s ≥ 1/2");
    let zeta = riemann_zeta(s).expect("ζ pole excluded by the caller");
    (s - 1.0) * (-s * (0.5 * libm::log(PI))).exp() * gamma * zeta
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn zeta_two_matches_partial_sums() {
        // Σ_{n ≤ M} 1/n² + 1/M − 1/(2M²) + 1/(6M³)
        let m = 100_000;
        let partial: f64 = (1..=m).rev().map(|n| 1.0 / (n as f64 * n as f64)).sum();
        let mf = m as f64;
        let oracle = partial + 1.0 / mf - 0.5 / (mf * mf) + 1.0 / (6.0 * mf * mf * mf);
        let z = riemann_zeta(c(2.0, 0.0)).unwrap();
        assert!((z.re - oracle).abs() / oracle < 1e-13);
        assert!((z.re - PI * PI / 6.0).abs() < 1e-14);
    }

    #[test]
    fn special_values() {
        assert!((riemann_zeta(c(0.0, 0.0)).unwrap() - c(-0.5, 0.0)).norm() < 1e-14);
        assert!(rel(riemann_zeta(c(-1.0, 0.0)).unwrap(), c(-1.0 / 12.0, 0.0)) < 1e-13);
        assert!(riemann_zeta(c(-2.0, 0.0)).unwrap().norm() < 1e-15);
        assert_eq!(riemann_zeta(c(1.0, 0.0)), Err(Error::PoleAtOne));
    }

    #[test]
    fn frozen_critical_line_value() {
        // mpmath.zeta(0.5+14.134725141734693j) is ≈ 0 (first nontrivial zero).
        let z = riemann_zeta(c(0.5, 14.134_725_141_734_693)).unwrap();
        assert!(z.norm() < 1e-12);
        // mpmath.zeta(2+40j)
        let z = riemann_zeta(c(2.0, 40.0)).unwrap();
        assert!(
            rel(z, c(0.897_090_206_914_265_96, -0.150_006_035_705_833_86)) < 1e-11,
            "{z}"
        );
    }

    #[test]
    fn xi_limits_and_values() {
        assert_eq!(xi_completed(c(1.0, 0.0)), c(0.5, 0.0));
        assert_eq!(xi_completed(c(0.0, 0.0)), c(0.5, 0.0));
        // ξ(1 ± δ) via the ζ route approaches 1/2.
        assert!((xi_completed(c(1.0 + 1e-6, 0.0)).re - 0.5).abs() < 1e-6);
        assert!(rel(xi_completed(c(2.0, 0.0)), c(PI / 6.0, 0.0)) < 1e-14);
        // mpmath: ξ(1.5), ξ(1.2+4i)
        assert!(rel(xi_completed(c(1.5, 0.0)), c(0.508_731_038_726_324, 0.0)) < 1e-13);
        assert!(
            rel(
                xi_completed(c(1.2, 4.0)),
                c(0.342_965_215_501_399_3, 0.045_820_761_963_359_53)
            ) < 1e-12
        );
    }

    #[test]
    fn xi_is_symmetric() {
        for &(re, im) in &[(0.2, 3.0), (0.7, -11.0), (-0.3, 2.0), (0.5, 25.0)] {
            let s = c(re, im);
            let a = xi_completed(s);
            let b = xi_completed(c(1.0, 0.0) - s);
            assert!((a - b).norm() <= 1e-12 * (1.0 + a.norm()));
        }
    }
}
