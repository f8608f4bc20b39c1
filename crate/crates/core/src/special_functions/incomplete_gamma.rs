use core::f64::consts::PI;

use super::{gamma_fn, rising_factorial, AsymptoticOrder};
use crate::{Complex64, Error, Result};

/// Γ(s, y) together with an underflow marker.
///
/// When `e^{-y}` drives the result below the smallest normal double the value
/// is reported as exact zero and `underflow` is set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IncompleteGamma {
    pub value: Complex64,
    pub underflow: bool,
}

const LN_UNDERFLOW: f64 = -745.0;
const MAX_TERMS: usize = 5000;
const CIRCLE_RADIUS: f64 = 0.5;
const CIRCLE_NODES: usize = 64;
const CIRCLE_TRIGGER: f64 = 0.25;

fn use_continued_fraction(s: Complex64, y: f64) -> bool {
    y >= s.norm() + 4.0
}

/// ln(e^y Γ(s, y)) by the modified Lentz continued fraction.
fn ln_scaled_continued_fraction(s: Complex64, y: f64) -> Result<Complex64> {
    let tiny = Complex64::new(1e-150, 0.0);
    let mut b = Complex64::new(y + 1.0, 0.0) - s;
    let mut c = Complex64::new(1.0, 0.0) / tiny;
    let mut d = Complex64::new(1.0, 0.0) / b;
    let mut h = d;
    for i in 1..MAX_TERMS {
        let an = (s - i as f64) * i as f64;
        b += 2.0;
        d = an * d + b;
        if d.norm() < tiny.re {
            d = tiny;
        }
        c = b + an / c;
        if c.norm() < tiny.re {
            c = tiny;
        }
        d = Complex64::new(1.0, 0.0) / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).norm() < 4.0 * f64::EPSILON {
            return Ok(s * libm::log(y) + h.ln());
        }
    }
    Err(Error::NumericalDegeneracy(
        "incomplete Γ continued fraction did not converge",
    ))
}

/// γ(s, y) = y^s e^{-y} Σ yⁿ / (s)_{n+1}.
fn lower_series(s: Complex64, y: f64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0) / s;
    let mut sum = term;
    for n in 1..MAX_TERMS {
        term *= y / (s + n as f64);
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            return Ok(sum * (s * libm::log(y) - y).exp());
        }
    }
    Err(Error::NumericalDegeneracy(
        "incomplete Γ series did not converge",
    ))
}

fn upper_by_complement(s: Complex64, y: f64) -> Result<Complex64> {
    Ok(gamma_fn(s)? - lower_series(s, y)?)
}

/// Γ(s, y) is entire in s; near the poles of Γ(s) the complement cancels, so
/// evaluate on a circle around the pole and apply Cauchy's formula.
fn upper_near_pole(s: Complex64, y: f64, pole: f64) -> Result<Complex64> {
    let centre = Complex64::new(pole, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..CIRCLE_NODES {
        let phase = Complex64::from_polar(1.0, 2.0 * PI * (k as f64 + 0.5) / CIRCLE_NODES as f64);
        let node = centre + phase * CIRCLE_RADIUS;
        let value = if use_continued_fraction(node, y) {
            (ln_scaled_continued_fraction(node, y)? - y).exp()
        } else {
            upper_by_complement(node, y)?
        };
        acc += value * (node - centre) / (node - s);
    }
    Ok(acc / CIRCLE_NODES as f64)
}

fn check_y(y: f64) -> Result<()> {
    if !(y > 0.0 && y.is_finite()) {
        return Err(Error::InvalidArgument("incomplete Γ needs a finite y > 0"));
    }
    Ok(())
}

fn nearby_pole(s: Complex64) -> Option<f64> {
    let m = libm::round(s.re);
    (m <= 0.0 && (s - m).norm() < CIRCLE_TRIGGER).then_some(m)
}

/// Γ(s, y) = ∫_y^∞ t^{s−1} e^{−t} dt for y > 0.
pub fn upper_incomplete_gamma(s: Complex64, y: f64) -> Result<IncompleteGamma> {
    check_y(y)?;
    if use_continued_fraction(s, y) {
        let ln = ln_scaled_continued_fraction(s, y)? - y;
        if ln.re < LN_UNDERFLOW {
            return Ok(IncompleteGamma {
                value: Complex64::new(0.0, 0.0),
                underflow: true,
            });
        }
        return Ok(IncompleteGamma {
            value: ln.exp(),
            underflow: false,
        });
    }
    let value = match nearby_pole(s) {
        Some(pole) => upper_near_pole(s, y, pole)?,
        None => upper_by_complement(s, y)?,
    };
    Ok(IncompleteGamma {
        value,
        underflow: false,
    })
}

/// e^y Γ(s, y), free of the underflow in e^{−y}.
pub(crate) fn upper_incomplete_gamma_scaled(s: Complex64, y: f64) -> Result<Complex64> {
    check_y(y)?;
    if use_continued_fraction(s, y) {
        return Ok(ln_scaled_continued_fraction(s, y)?.exp());
    }
    Ok(upper_incomplete_gamma(s, y)?.value * libm::exp(y))
}

/// y^{s−1} e^{−y} Σ_{j<N} (−1)^j (1−s)_j y^{−j}, the large-y expansion of Γ(s, y).
pub fn incomplete_gamma_asymptotic(
    s: Complex64,
    y: f64,
    order: AsymptoticOrder,
) -> Result<Complex64> {
    if !(y >= 1.0 && y.is_finite()) {
        return Err(Error::InvalidArgument(
            "asymptotic incomplete Γ needs y ≥ 1",
        ));
    }
    let one_minus_s = Complex64::new(1.0, 0.0) - s;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut sign = 1.0;
    for j in 0..order.terms() as usize {
        sum += rising_factorial(one_minus_s, j) * (sign / libm::pow(y, j as f64));
        sign = -sign;
    }
    Ok(sum * ((s - 1.0) * libm::log(y) - y).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{integrate, QuadratureOptions};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn exponential_case() {
        for &y in &[0.3, 2.0, 7.5, 50.0] {
            let g = upper_incomplete_gamma(c(1.0, 0.0), y).unwrap();
            assert!(rel(g.value, c(libm::exp(-y), 0.0)) < 1e-13, "y = {y}");
        }
    }

    #[test]
    fn small_y_approaches_gamma() {
        let g = upper_incomplete_gamma(c(3.0, 0.0), 1e-12).unwrap();
        assert!((g.value.re - 2.0).abs() < 1e-11);
    }

    #[test]
    fn frozen_complex_value() {
        // mpmath.gammainc(0.5+0.5j, 10)
        let g = upper_incomplete_gamma(c(0.5, 0.5), 10.0).unwrap();
        assert!(rel(g.value, c(5.029_362_498_244_64e-6, 1.275_935_000_331_13e-5)) < 1e-12);
    }

    #[test]
    fn matches_defining_integral() {
        // Substitute t = y + u to integrate a smooth, decaying function.
        let opts = QuadratureOptions {
            abs_tol: 1e-22,
            rel_tol: 1e-13,
            max_subdivisions: 500,
        };
        for &(s, y) in &[
            (c(0.5, 0.5), 10.0),
            (c(-1.3, 2.0), 3.0),
            (c(2.5, -1.0), 1.5),
        ] {
            let quad = integrate(
                |u| Ok(((s - 1.0) * libm::log(y + u) - (y + u)).exp()),
                &[0.0, 5.0, 20.0, 60.0, 120.0],
                &opts,
            )
            .unwrap();
            let g = upper_incomplete_gamma(s, y).unwrap();
            assert!(rel(g.value, quad.value) < 1e-10, "s = {s}, y = {y}");
        }
    }

    #[test]
    fn branches_agree_at_the_switch() {
        let s = c(0.7, 1.1);
        let y = s.norm() + 4.0;
        let cf = (ln_scaled_continued_fraction(s, y).unwrap() - y).exp();
        let series = upper_by_complement(s, y).unwrap();
        assert!(rel(cf, series) < 1e-12);
    }

    #[test]
    fn non_positive_integers() {
        // Γ(0, y) = E₁(y); mpmath.expint(1, 0.5)
        let g = upper_incomplete_gamma(c(0.0, 0.0), 0.5).unwrap();
        assert!(rel(g.value, c(0.559_773_594_776_160_8, 0.0)) < 1e-12);
        // Γ(−2, 1) = E₁(1)/2 by the downward recurrence.
        let expected = 0.219_383_934_395_520_27 / 2.0;
        let g = upper_incomplete_gamma(c(-2.0, 1e-9), 1.0).unwrap();
        assert!(rel(g.value, c(expected, 0.0)) < 1e-8);
    }

    #[test]
    fn underflow_is_flagged() {
        let g = upper_incomplete_gamma(c(0.5, 0.0), 800.0).unwrap();
        assert!(g.underflow);
        assert_eq!(g.value, c(0.0, 0.0));
        let scaled = upper_incomplete_gamma_scaled(c(0.5, 0.0), 800.0).unwrap();
        assert!(scaled.norm() > 0.0 && scaled.norm().is_finite());
    }

    #[test]
    fn rejects_non_positive_y() {
        assert!(upper_incomplete_gamma(c(1.0, 0.0), 0.0).is_err());
        assert!(upper_incomplete_gamma(c(1.0, 0.0), -1.0).is_err());
    }

    #[test]
    fn asymptotic_small_orders() {
        let one = AsymptoticOrder::new(1).unwrap();
        let a = incomplete_gamma_asymptotic(c(1.0, 0.0), 50.0, one).unwrap();
        assert!(rel(a, c(libm::exp(-50.0), 0.0)) < 1e-14);
        let two = AsymptoticOrder::new(2).unwrap();
        let a = incomplete_gamma_asymptotic(c(2.0, 0.0), 100.0, two).unwrap();
        assert!(rel(a, c(101.0 * libm::exp(-100.0), 0.0)) < 1e-14);
        assert!(incomplete_gamma_asymptotic(c(2.0, 0.0), 0.5, two).is_err());
    }

    #[test]
    fn asymptotic_tracks_converged_value() {
        let s = c(0.3, 0.0);
        let y = 40.0;
        let exact = upper_incomplete_gamma(s, y).unwrap().value;
        let approx = incomplete_gamma_asymptotic(s, y, AsymptoticOrder::new(5).unwrap()).unwrap();
        // Bounded by the first omitted term, |(1−s)_5| y^{−5} ≈ 55.9·y^{−5}.
        let first_omitted = rising_factorial(c(1.0, 0.0) - s, 5).norm();
        let r = rel(approx, exact) * libm::pow(y, 5.0);
        assert!(r <= first_omitted && r > 0.5 * first_omitted, "{r}");
    }
}
