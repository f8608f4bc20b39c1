use core::f64::consts::PI;

use super::upper_incomplete_gamma;
use crate::modular_forms::theta_minus_one_on_axis;
use crate::quadrature::{integrate, QuadratureOptions};
use crate::{Complex64, Error, Result};

// Width of the quadrature window before the Γ(w, ·) tail takes over.
const WINDOW: f64 = 2.0;
const OPTIONS: QuadratureOptions = QuadratureOptions {
    abs_tol: 1e-14,
    rel_tol: 1e-13,
    max_subdivisions: 400,
};

/// ∫_a^∞ (ϑ(iu) − 1) u^{w−1} du.
fn theta_tail_integral(a: f64, w: Complex64) -> Result<Complex64> {
    let b = a + WINDOW;
    let head = integrate(
        |u| Ok((w - 1.0).scale(libm::log(u)).exp() * theta_minus_one_on_axis(u)),
        &[a, 0.5 * (a + b), b],
        &OPTIONS,
    )?
    .value;
    // ∫_b^∞ e^{−πn²u} u^{w−1} du = (πn²)^{−w} Γ(w, πn²b)
    let mut tail = Complex64::new(0.0, 0.0);
    for n in 1..=8u32 {
        let rate = PI * f64::from(n * n);
        if rate * b > 745.0 {
            break;
        }
        let g = upper_incomplete_gamma(w, rate * b)?.value;
        tail += (-w * libm::log(rate)).exp() * g;
    }
    Ok(head + tail * 2.0)
}

/// ξ(2s) through Riemann's theta integral split at t₀ > 0.
///
/// The small-t integral is mapped to [1/t₀, ∞) by t ↦ 1/t, and the boundary
/// terms are multiplied out so that no division by s or s − 1/2 remains:
///
/// ξ(2s) = P·(I(t₀, s) + I(1/t₀, 1/2 − s)) − (2s − 1)t₀^s/2 + s·t₀^{s−1/2},
///
/// with P = s(2s−1)/2 and I(a, w) = ∫_a^∞ (ϑ(iu) − 1) u^{w−1} du.
pub fn xi_via_theta(s: Complex64, t0: f64) -> Result<Complex64> {
    if !(t0 > 0.0 && t0.is_finite()) {
        return Err(Error::InvalidArgument(
            "t0 must be a finite positive number",
        ));
    }
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::InvalidArgument("s must be finite"));
    }
    let half = Complex64::new(0.5, 0.0);
    let prefactor = s * (s * 2.0 - 1.0) * 0.5;
    let integrals = theta_tail_integral(t0, s)? + theta_tail_integral(1.0 / t0, half - s)?;
    let ln_t0 = libm::log(t0);
    let boundary = -(s * 2.0 - 1.0) * (s * ln_t0).exp() * 0.5 + s * ((s - 0.5) * ln_t0).exp();
    Ok(prefactor * integrals + boundary)
}
