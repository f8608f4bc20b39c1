//! Behaviour of F_z(s) as Im z → ∞.
//!
//! F_z(s) plus the polynomial and polylogarithmic terms in y = Im z built
//! here tends to ξ(2s). The coefficient functions C_{ℓ,s} and D_{ℓ,s} are
//! provided separately in their closed form.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::mellin::{f_z, QuadratureConfig};
use crate::modular_forms::PolePoint;
use crate::special_functions::{
    polylog_unit_circle, rising_factorial, xi_completed, SpectralParameter, X_EXCLUSION_RADIUS,
};
use crate::{Complex64, Error, Result};

/// Exclusion radius around the integers and half-integers where the floor
/// cutoffs ⌊σ⌋ and ⌊1/2 − σ⌋ jump.
pub const CUTOFF_EXCLUSION_RADIUS: f64 = 1e-3;

fn check_abscissa(x: f64) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::InvalidArgument("x must be finite"));
    }
    if (x - libm::round(x)).abs() <= X_EXCLUSION_RADIUS {
        return Err(Error::IntegerAbscissa(x));
    }
    Ok(())
}

/// C_{ℓ,s}(x): 1/s for ℓ = 0, and for ℓ ≥ 1
/// π^{−1}[(s+1−ℓ)_{ℓ−1} Li_ℓ(e^{−πix}) − (1−s)_{ℓ−1} Li_ℓ(e^{−πix})].
pub fn correction_c(ell: u32, s: SpectralParameter, x: f64) -> Result<Complex64> {
    let s = s.s();
    if ell == 0 {
        if s == Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidArgument("C_{0,s} needs s ≠ 0"));
        }
        return Ok(Complex64::new(1.0, 0.0) / s);
    }
    check_abscissa(x)?;
    let li = polylog_unit_circle(ell, -x)?;
    let n = (ell - 1) as usize;
    let one = Complex64::new(1.0, 0.0);
    let first = rising_factorial(s + 1.0 - ell as f64, n) * li;
    let second = rising_factorial(one - s, n) * li;
    Ok((first - second) / PI)
}

/// D_{ℓ,s}(x) = C_{ℓ,1/2−s}(x).
pub fn correction_d(ell: u32, s: SpectralParameter, x: f64) -> Result<Complex64> {
    correction_c(ell, s.reflect(), x)
}

/// Overall sign of the four polylogarithm sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignConvention {
    /// Sums oriented so that the corrected value converges to ξ(2s).
    #[default]
    Convergent,
    /// The opposite orientation; the corrected value then drifts away from
    /// ξ(2s) whenever a sum is non-empty.
    Reversed,
}

impl SignConvention {
    fn factor(self) -> f64 {
        match self {
            SignConvention::Convergent => -1.0,
            SignConvention::Reversed => 1.0,
        }
    }
}

/// Additive corrections to F_z(s), as coefficients of powers of y.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrectionExpansion {
    pub x: f64,
    pub s: SpectralParameter,
    /// Coefficients of y^s and y^{1/2−s}.
    pub leading_terms: [Complex64; 2],
    /// Entry ℓ−1 multiplies y^{s−ℓ}, for ℓ = 1..=⌊σ⌋.
    pub c_terms: Vec<Complex64>,
    /// Entry ℓ−1 multiplies y^{1/2−s−ℓ}, for ℓ = 1..=⌊1/2−σ⌋.
    pub d_terms: Vec<Complex64>,
}

impl CorrectionExpansion {
    /// Sum of all terms at height y.
    pub fn evaluate(&self, y: f64) -> Complex64 {
        let s = self.s.s();
        let r = self.s.reflect().s();
        let ln_y = libm::log(y);
        let pow = |e: Complex64| (e * ln_y).exp();
        let mut total = self.leading_terms[0] * pow(s) + self.leading_terms[1] * pow(r);
        for (k, c) in self.c_terms.iter().enumerate() {
            total += *c * pow(s - (k + 1) as f64);
        }
        for (k, d) in self.d_terms.iter().enumerate() {
            total += *d * pow(r - (k + 1) as f64);
        }
        total
    }
}

fn cutoff(sigma: f64) -> usize {
    let f = libm::floor(sigma);
    if f <= 0.0 {
        0
    } else {
        f as usize
    }
}

/// The correction terms at x = Re z, oriented so that the limit is ξ(2s).
pub fn proposition_corrections(z: &PolePoint, s: SpectralParameter) -> Result<CorrectionExpansion> {
    proposition_corrections_with(z, s, SignConvention::default())
}

/// [`proposition_corrections`] with an explicit orientation of the sums.
pub fn proposition_corrections_with(
    z: &PolePoint,
    s: SpectralParameter,
    convention: SignConvention,
) -> Result<CorrectionExpansion> {
    let x = z.x();
    check_abscissa(x)?;
    s.check_cutoff_stability(CUTOFF_EXCLUSION_RADIUS)?;
    let sv = s.s();
    let r = s.reflect().s();
    let prefactor = sv * r * convention.factor();
    let one = Complex64::new(1.0, 0.0);

    // ± s(1/2−s) π^{−ℓ} [−a_ℓ Li_ℓ(e^{πix}) + b_ℓ Li_ℓ(e^{−πix})]
    let term = |ell: usize, a: Complex64, b: Complex64| -> Result<Complex64> {
        let plus = polylog_unit_circle(ell as u32, x)?;
        let minus = polylog_unit_circle(ell as u32, -x)?;
        Ok(prefactor * (b * minus - a * plus) / libm::pow(PI, ell as f64))
    };
    let mut c_terms = Vec::new();
    for ell in 1..=cutoff(s.sigma()) {
        let a = rising_factorial(one - sv, ell - 1);
        let b = rising_factorial(sv + 1.0 - ell as f64, ell - 1);
        c_terms.push(term(ell, a, b)?);
    }
    let mut d_terms = Vec::new();
    for ell in 1..=cutoff(0.5 - s.sigma()) {
        let a = rising_factorial(sv + 0.5, ell - 1);
        let b = rising_factorial(Complex64::new(1.5 - ell as f64, 0.0) - sv, ell - 1);
        d_terms.push(term(ell, a, b)?);
    }
    Ok(CorrectionExpansion {
        x,
        s,
        leading_terms: [r, sv],
        c_terms,
        d_terms,
    })
}

/// F_z(s) plus all correction terms at y = Im z.
pub fn corrected_f_z(
    z: &PolePoint,
    s: SpectralParameter,
    cfg: &QuadratureConfig,
) -> Result<Complex64> {
    corrected_f_z_with(z, s, cfg, SignConvention::default())
}

pub fn corrected_f_z_with(
    z: &PolePoint,
    s: SpectralParameter,
    cfg: &QuadratureConfig,
    convention: SignConvention,
) -> Result<Complex64> {
    let expansion = proposition_corrections_with(z, s, convention)?;
    Ok(f_z(z, s, cfg)?.value + expansion.evaluate(z.y()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub y: f64,
    pub value: Complex64,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceStudy {
    pub x: f64,
    pub s: SpectralParameter,
    /// ξ(2s).
    pub target: Complex64,
    pub rows: Vec<ConvergenceRow>,
    /// Whether the error column strictly decreases.
    pub monotone: bool,
}

impl ConvergenceStudy {
    pub fn final_error(&self) -> f64 {
        self.rows.last().map_or(f64::NAN, |r| r.error)
    }
}

/// Corrected values at z = x + iy for each y, against ξ(2s).
pub fn convergence_study(
    x: f64,
    s: SpectralParameter,
    y_values: &[f64],
    cfg: &QuadratureConfig,
) -> Result<ConvergenceStudy> {
    if y_values.is_empty() {
        return Err(Error::InvalidArgument(
            "convergence study needs at least one y",
        ));
    }
    if y_values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument(
            "y values must be strictly increasing",
        ));
    }
    check_abscissa(x)?;
    let target = xi_completed(s.s() * 2.0);
    let rows = y_values
        .iter()
        .map(|&y| {
            let z = PolePoint::new(x, y)?;
            let value = corrected_f_z(&z, s, cfg)?;
            Ok(ConvergenceRow {
                y,
                value,
                error: (value - target).norm(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let monotone = rows.windows(2).all(|w| w[1].error < w[0].error);
    Ok(ConvergenceStudy {
        x,
        s,
        target,
        rows,
        monotone,
    })
}
