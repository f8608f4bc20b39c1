//! The non-modular analytic substrate: Γ, incomplete Γ, ₁F₁ asymptotics,
//! polylogarithms on the unit circle, ζ and the completed ξ.
//!
//! Everything here is a pure function of its arguments. The only tables
//! (Lanczos and Bernoulli coefficients) are `const`.

mod bernoulli;
mod gamma;
mod hypergeometric;
mod incomplete_gamma;
mod polylog;
mod xi_theta;
mod zeta;

pub use gamma::{gamma_fn, POLE_RADIUS};
pub use hypergeometric::{confluent_1f1_asymptotic, NON_GENERIC_RADIUS};
pub use incomplete_gamma::{incomplete_gamma_asymptotic, upper_incomplete_gamma, IncompleteGamma};
pub use polylog::{polylog_unit_circle, X_EXCLUSION_RADIUS};
pub use xi_theta::xi_via_theta;
pub use zeta::{riemann_zeta, xi_completed, zeta_euler_maclaurin, ZETA_POLE_RADIUS};

pub(crate) use incomplete_gamma::upper_incomplete_gamma_scaled;

use crate::{Complex64, Error, Result};

/// A point s = σ + it of the spectral variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralParameter(Complex64);

impl SpectralParameter {
    pub fn new(re: f64, im: f64) -> Self {
        SpectralParameter(Complex64::new(re, im))
    }

    pub fn s(&self) -> Complex64 {
        self.0
    }

    /// σ = Re(s).
    pub fn sigma(&self) -> f64 {
        self.0.re
    }

    /// The mirror point 1/2 − s of the functional equation.
    pub fn reflect(&self) -> Self {
        SpectralParameter(Complex64::new(0.5, 0.0) - self.0)
    }

    /// Fails when σ lies within `radius` of an integer or a half-integer,
    /// where ⌊σ⌋ or ⌊1/2 − σ⌋ jump.
    pub fn check_cutoff_stability(&self, radius: f64) -> Result<()> {
        let twice = 2.0 * self.sigma();
        if (twice - libm::round(twice)).abs() <= 2.0 * radius {
            return Err(Error::UnstableCutoff(self.sigma()));
        }
        Ok(())
    }
}

impl From<Complex64> for SpectralParameter {
    fn from(s: Complex64) -> Self {
        SpectralParameter(s)
    }
}

impl From<f64> for SpectralParameter {
    fn from(s: f64) -> Self {
        SpectralParameter::new(s, 0.0)
    }
}

/// Largest admissible number of terms in an asymptotic expansion.
pub const MAX_ASYMPTOTIC_ORDER: u32 = 30;

/// Number of terms N of a truncated asymptotic expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct AsymptoticOrder(u32);

impl AsymptoticOrder {
    pub fn new(terms: u32) -> Result<Self> {
        if terms > MAX_ASYMPTOTIC_ORDER {
            return Err(Error::InvalidArgument(
                "asymptotic order exceeds the configured maximum",
            ));
        }
        Ok(AsymptoticOrder(terms))
    }

    pub fn terms(&self) -> u32 {
        self.0
    }
}

/// Rising factorial (a)_n = a(a+1)…(a+n−1), by direct product.
pub fn rising_factorial(a: Complex64, n: usize) -> Complex64 {
    (0..n).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (a + j as f64))
}
