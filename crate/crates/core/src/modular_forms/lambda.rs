use super::point::UpperHalfPoint;
use super::theta::{axis_thetas, thetas};
use crate::{Complex64, Error, Result};

/// λ(τ) = θ₂⁴/ϑ⁴.
pub fn lambda_modular(tau: UpperHalfPoint) -> Result<Complex64> {
    let t = thetas(tau);
    if t.theta3.norm() < 1e-75 {
        return Err(Error::NumericalDegeneracy("ϑ(τ)⁴ underflows"));
    }
    Ok((t.theta2 / t.theta3).powi(4))
}

/// 1 − λ(τ) = θ₄⁴/ϑ⁴, free of the cancellation in 1 − λ near λ = 1.
pub fn one_minus_lambda(tau: UpperHalfPoint) -> Result<Complex64> {
    let t = thetas(tau);
    if t.theta3.norm() < 1e-75 {
        return Err(Error::NumericalDegeneracy("ϑ(τ)⁴ underflows"));
    }
    Ok((t.theta4 / t.theta3).powi(4))
}

/// j_ϑ(τ) = 1/(λ(1−λ)) = ϑ⁸/(θ₂θ₄)⁴.
pub fn j_theta(tau: UpperHalfPoint) -> Result<Complex64> {
    let t = thetas(tau);
    let denom = t.theta2 * t.theta4;
    if denom.norm() < 1e-150 {
        return Err(Error::NumericalDegeneracy("λ(1−λ) underflows"));
    }
    let value = (t.theta3 * t.theta3 / denom).powi(4);
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::NumericalDegeneracy("j_ϑ overflows"));
    }
    Ok(value)
}

/// 1/j_ϑ(τ) = λ(1−λ); bounded where j_ϑ is large.
pub fn inverse_j_theta(tau: UpperHalfPoint) -> Result<Complex64> {
    let t = thetas(tau);
    if t.theta3.norm() < 1e-75 {
        return Err(Error::NumericalDegeneracy("ϑ(τ)⁴ underflows"));
    }
    Ok((t.theta2 * t.theta4 / (t.theta3 * t.theta3)).powi(4))
}

/// μ(t) = 1/j_ϑ(it), real and invariant under t ↦ 1/t.
pub fn axis_inverse_j(t: f64) -> f64 {
    let a = axis_thetas(t);
    let r = a.theta2 * a.theta4 / (a.theta3 * a.theta3);
    let r2 = r * r;
    r2 * r2
}
