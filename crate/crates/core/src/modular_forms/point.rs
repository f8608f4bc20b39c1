use core::f64::consts::PI;

use super::group::{reduce_to_fundamental_domain, IntegerMatrix2x2};
use crate::{Complex64, Error, Result};

/// τ = u + iv in the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperHalfPoint {
    u: f64,
    v: f64,
}

impl UpperHalfPoint {
    pub fn new(u: f64, v: f64) -> Result<Self> {
        if !(u.is_finite() && v.is_finite() && v > 0.0) {
            return Err(Error::InvalidArgument("τ must be finite with Im τ > 0"));
        }
        Ok(UpperHalfPoint { u, v })
    }

    pub fn from_complex(tau: Complex64) -> Result<Self> {
        Self::new(tau.re, tau.im)
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn tau(&self) -> Complex64 {
        Complex64::new(self.u, self.v)
    }

    /// q = e^{2πiτ}.
    pub fn q(&self) -> Complex64 {
        Complex64::from_polar(libm::exp(-2.0 * PI * self.v), 2.0 * PI * self.u)
    }

    /// −1/τ.
    pub fn invert(&self) -> Self {
        let t = -Complex64::new(1.0, 0.0) / self.tau();
        UpperHalfPoint { u: t.re, v: t.im }
    }

    /// τ + k.
    pub fn translate(&self, k: f64) -> Self {
        UpperHalfPoint {
            u: self.u + k,
            v: self.v,
        }
    }
}

/// The pole location z = x + iy of H_z, with its reduced representative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolePoint {
    point: UpperHalfPoint,
    reduced: UpperHalfPoint,
    matrix: IntegerMatrix2x2,
    axis_margin: f64,
}

impl PolePoint {
    /// Builds the point and reduces it into the fundamental domain of Γ_ϑ.
    pub fn new(x: f64, y: f64) -> Result<Self> {
        let point = UpperHalfPoint::new(x, y)?;
        let (reduced, matrix) = reduce_to_fundamental_domain(point)?;
        Ok(PolePoint {
            point,
            reduced,
            matrix,
            axis_margin: reduced.u().abs(),
        })
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    pub fn x(&self) -> f64 {
        self.point.u()
    }

    pub fn y(&self) -> f64 {
        self.point.v()
    }

    pub fn z(&self) -> Complex64 {
        self.point.tau()
    }

    pub fn point(&self) -> UpperHalfPoint {
        self.point
    }

    /// Representative z′ = γz in the fundamental domain.
    pub fn reduced(&self) -> UpperHalfPoint {
        self.reduced
    }

    /// γ ∈ Γ_ϑ with z′ = γz.
    pub fn matrix(&self) -> IntegerMatrix2x2 {
        self.matrix
    }

    /// |Re z′|; zero exactly on the orbit of the imaginary axis.
    pub fn axis_margin(&self) -> f64 {
        self.axis_margin
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_lower_half_plane() {
        assert!(UpperHalfPoint::new(0.0, 0.0).is_err());
        assert!(UpperHalfPoint::new(0.0, -1.0).is_err());
        assert!(UpperHalfPoint::new(f64::NAN, 1.0).is_err());
        assert!(PolePoint::new(0.3, -2.0).is_err());
    }

    #[test]
    fn nome_modulus() {
        let t = UpperHalfPoint::new(0.3, 0.7).unwrap();
        assert!((t.q().norm() - libm::exp(-2.0 * PI * 0.7)).abs() < 1e-16);
    }

    #[test]
    fn pole_point_metadata() {
        let z = PolePoint::new(2.3, 2.0).unwrap();
        assert!((z.reduced().u() - 0.3).abs() < 1e-12);
        assert!((z.axis_margin() - 0.3).abs() < 1e-12);
        assert_eq!(z.x(), 2.3);
    }
}
