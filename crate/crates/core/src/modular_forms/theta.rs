//! Jacobi thetas ϑ = θ₃, θ₄ and θ₂.
//!
//! Direct q-series are used once Im τ ≥ [`SERIES_THRESHOLD`]; below that τ is
//! moved up by T and S, and the three thetas are permuted and rescaled with
//! the known transformation factors.

use core::f64::consts::PI;

use super::point::UpperHalfPoint;
use crate::Complex64;

/// Decimal digits guaranteed by the truncation N(v).
pub const SERIES_DIGITS: u32 = 13;
/// Smallest Im τ evaluated by the plain series.
pub const SERIES_THRESHOLD: f64 = 0.2;

/// The triple (θ₃, θ₄, θ₂) at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thetas {
    pub theta3: Complex64,
    pub theta4: Complex64,
    pub theta2: Complex64,
}

/// N(v) = ⌈√(2(D+2)ln 10/(πv))⌉: the tail past N is below 10^{−D}.
pub fn truncation(v: f64) -> usize {
    let digits = f64::from(SERIES_DIGITS) + 2.0;
    libm::ceil(libm::sqrt(
        2.0 * digits * core::f64::consts::LN_10 / (PI * v),
    )) as usize
}

/// Plain truncated series, valid for every τ but slow for small Im τ.
pub mod series {
    use super::*;

    // e^{πi m τ} with m·u reduced mod 2 before forming the angle.
    fn nome_power(tau: Complex64, m: f64) -> Complex64 {
        let angle = m * tau.re;
        let angle = angle - 2.0 * libm::round(angle / 2.0);
        Complex64::from_polar(libm::exp(-PI * m * tau.im), PI * angle)
    }

    /// ϑ(τ) = Σ_{n∈ℤ} e^{πin²τ}.
    pub fn theta3(tau: UpperHalfPoint) -> Complex64 {
        thetas(tau).theta3
    }

    pub fn thetas(tau: UpperHalfPoint) -> Thetas {
        let t = tau.tau();
        let n_max = truncation(tau.v());
        let mut s3 = Complex64::new(0.0, 0.0);
        let mut s4 = Complex64::new(0.0, 0.0);
        let mut s2 = Complex64::new(0.0, 0.0);
        // Smallest terms first.
        for n in (1..=n_max).rev() {
            let term = nome_power(t, (n * n) as f64);
            s3 += term;
            if n % 2 == 0 {
                s4 += term;
            } else {
                s4 -= term;
            }
        }
        for n in (0..=n_max).rev() {
            let h = n as f64 + 0.5;
            s2 += nome_power(t, h * h);
        }
        Thetas {
            theta3: s3 * 2.0 + 1.0,
            theta4: s4 * 2.0 + 1.0,
            theta2: s2 * 2.0,
        }
    }
}

/// (θ₃, θ₄, θ₂)(τ), routed through T and S when Im τ is small.
pub fn thetas(tau: UpperHalfPoint) -> Thetas {
    // θ_k(τ) = factor · θ_{perm[k]}(τ_current), indices 0 = θ₃, 1 = θ₄, 2 = θ₂.
    let mut current = tau;
    let mut perm = [0usize, 1, 2];
    let mut factor = [Complex64::new(1.0, 0.0); 3];
    let eighth = Complex64::from_polar(1.0, PI / 4.0);
    while current.v() < SERIES_THRESHOLD {
        let k = libm::round(current.u());
        if k != 0.0 {
            // θ₃(τ'+k) = θ₃ or θ₄ of τ' by parity, θ₂(τ'+k) = e^{iπk/4} θ₂(τ').
            let odd = (k as i64).rem_euclid(2) == 1;
            let phase = eighth.powi((k as i64).rem_euclid(8) as i32);
            for j in 0..3 {
                perm[j] = match perm[j] {
                    0 if odd => 1,
                    1 if odd => 0,
                    2 => {
                        factor[j] *= phase;
                        2
                    }
                    other => other,
                };
            }
            current = current.translate(-k);
        }
        // |τ'| < 1 now; τ' = −1/w with Im w > Im τ'.
        let w = current.invert();
        let root = (-Complex64::i() * w.tau()).sqrt();
        for j in 0..3 {
            factor[j] *= root;
            perm[j] = match perm[j] {
                0 => 0,
                1 => 2,
                _ => 1,
            };
        }
        current = w;
    }
    let base = series::thetas(current);
    let pick = |k: usize| match k {
        0 => base.theta3,
        1 => base.theta4,
        _ => base.theta2,
    };
    Thetas {
        theta3: factor[0] * pick(perm[0]),
        theta4: factor[1] * pick(perm[1]),
        theta2: factor[2] * pick(perm[2]),
    }
}

/// ϑ(τ) = θ₃(τ).
pub fn theta(tau: UpperHalfPoint) -> Complex64 {
    thetas(tau).theta3
}

pub fn theta2(tau: UpperHalfPoint) -> Complex64 {
    thetas(tau).theta2
}

/// Real thetas on the imaginary axis τ = it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisThetas {
    pub theta3: f64,
    pub theta4: f64,
    pub theta2: f64,
}

fn axis_series(t: f64) -> AxisThetas {
    let n_max = truncation(t);
    let (mut s3, mut s4, mut s2) = (0.0, 0.0, 0.0);
    for n in (1..=n_max).rev() {
        let term = libm::exp(-PI * (n * n) as f64 * t);
        s3 += term;
        s4 += if n % 2 == 0 { term } else { -term };
    }
    for n in (0..=n_max).rev() {
        let h = n as f64 + 0.5;
        s2 += libm::exp(-PI * h * h * t);
    }
    AxisThetas {
        theta3: 1.0 + 2.0 * s3,
        theta4: 1.0 + 2.0 * s4,
        theta2: 2.0 * s2,
    }
}

/// (θ₃, θ₄, θ₂)(it) for t > 0, inverting t ↦ 1/t below 1.
pub fn axis_thetas(t: f64) -> AxisThetas {
    if t >= 1.0 {
        return axis_series(t);
    }
    let inv = axis_series(1.0 / t);
    let scale = 1.0 / libm::sqrt(t);
    AxisThetas {
        theta3: scale * inv.theta3,
        theta4: scale * inv.theta2,
        theta2: scale * inv.theta4,
    }
}

/// ϑ(it) − 1 without cancellation for large t.
pub fn theta_minus_one_on_axis(t: f64) -> f64 {
    if t >= 1.0 {
        let n_max = truncation(t);
        return 2.0
            * (1..=n_max)
                .rev()
                .map(|n| libm::exp(-PI * (n * n) as f64 * t))
                .sum::<f64>();
    }
    axis_thetas(t).theta3 - 1.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special_functions::gamma_fn;

    fn pt(u: f64, v: f64) -> UpperHalfPoint {
        UpperHalfPoint::new(u, v).unwrap()
    }

    #[test]
    fn theta_at_i() {
        let g = gamma_fn(Complex64::new(0.75, 0.0)).unwrap().re;
        let expected = libm::pow(PI, 0.25) / g;
        assert!((theta(pt(0.0, 1.0)).re - expected).abs() < 1e-14);
        assert!((expected - 1.086_434_811_213_308).abs() < 1e-14);
    }

    #[test]
    fn theta_high_on_axis() {
        // mpmath.jtheta(3, 0, exp(-5π))
        let v = theta(pt(0.0, 5.0));
        assert!((v.re - 1.000_000_301_403_455).abs() < 1e-15);
        let d = theta_minus_one_on_axis(5.0);
        assert!((d - 2.0 * libm::exp(-5.0 * PI)).abs() < 1e-20);
    }

    #[test]
    fn theta2_symmetries() {
        let t = thetas(pt(0.0, 1.0));
        let ratio = (t.theta2 / t.theta3).powi(4);
        assert!((ratio.re - 0.5).abs() < 1e-14);
        let a = theta2(pt(0.3, 2.0));
        let b = theta2(pt(-0.3, 2.0));
        assert!((a - b.conj()).norm() < 1e-15);
        let v = 12.0;
        let lead = 2.0 * libm::exp(-PI * v / 4.0);
        assert!((theta2(pt(0.0, v)).re / lead - 1.0).abs() < 1e-15);
    }

    #[test]
    fn reduction_agrees_with_plain_series() {
        for &(u, v) in &[
            (0.0, 0.05),
            (0.37, 0.11),
            (-1.8, 0.02),
            (0.5, 0.15),
            (3.2, 0.19),
        ] {
            let fast = thetas(pt(u, v));
            let slow = series::thetas(pt(u, v));
            for (a, b) in [
                (fast.theta3, slow.theta3),
                (fast.theta4, slow.theta4),
                (fast.theta2, slow.theta2),
            ] {
                assert!(
                    (a - b).norm() <= 1e-11 * (1.0 + b.norm()),
                    "τ = {u}+{v}i: {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn jacobi_identity() {
        for &(u, v) in &[(0.2, 0.9), (-0.4, 0.3), (0.1, 0.03)] {
            let t = thetas(pt(u, v));
            let lhs = t.theta3.powi(4);
            let rhs = t.theta4.powi(4) + t.theta2.powi(4);
            assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm());
        }
    }

    #[test]
    fn axis_matches_complex_path() {
        for &t in &[0.03, 0.4, 1.0, 2.5, 9.0] {
            let a = axis_thetas(t);
            let c = thetas(pt(0.0, t));
            assert!((a.theta3 - c.theta3.re).abs() <= 1e-13 * a.theta3);
            assert!((a.theta4 - c.theta4.re).abs() <= 1e-13 * a.theta4.abs() + 1e-300);
            assert!((a.theta2 - c.theta2.re).abs() <= 1e-13 * a.theta2);
        }
    }
}
