use super::lambda::{inverse_j_theta, j_theta};
use super::point::{PolePoint, UpperHalfPoint};
use super::theta::theta;
use crate::{Complex64, Error, Result};

/// Default relative pole guard δ_pole.
pub const DEFAULT_POLE_GUARD: f64 = 1e-8;

/// H_z(τ) = j_ϑ(z)ϑ(τ)/(j_ϑ(τ) − j_ϑ(z)).
pub fn h_z(z: &PolePoint, tau: UpperHalfPoint) -> Result<Complex64> {
    h_z_with_guard(z, tau, DEFAULT_POLE_GUARD)
}

/// [`h_z`] with an explicit guard: fails with `NearPole` unless
/// |j_ϑ(τ) − j_ϑ(z)| > δ(1 + |j_ϑ(z)|).
pub fn h_z_with_guard(z: &PolePoint, tau: UpperHalfPoint, delta: f64) -> Result<Complex64> {
    let big_j = j_theta(z.point())?;
    // Divide through by j_ϑ(τ) so that large j_ϑ(τ) near the cusps stays finite.
    let mu = inverse_j_theta(tau)?;
    let gap = Complex64::new(1.0, 0.0) - big_j * mu;
    if gap.norm() <= delta * (1.0 + big_j.norm()) * mu.norm() {
        return Err(Error::NearPole);
    }
    Ok(big_j * theta(tau) * mu / gap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular_forms::IntegerMatrix2x2;

    fn pt(u: f64, v: f64) -> UpperHalfPoint {
        UpperHalfPoint::new(u, v).unwrap()
    }

    #[test]
    fn weight_one_half() {
        let z = PolePoint::new(0.5, 2.0).unwrap();
        let tau = pt(0.3, 1.5);
        let a = h_z(&z, tau.invert()).unwrap();
        let b = (-Complex64::i() * tau.tau()).sqrt() * h_z(&z, tau).unwrap();
        assert!((a - b).norm() / b.norm() < 1e-9);
    }

    #[test]
    fn blows_up_along_approach() {
        let z = PolePoint::new(0.5, 2.0).unwrap();
        let mut last = 0.0;
        for k in 1..8 {
            let eps = libm::pow(10.0, -(k as f64));
            let m = h_z(&z, pt(0.5 + eps, 2.0)).unwrap().norm();
            assert!(m > last);
            last = m;
        }
        assert!(last > 1e6);
        assert_eq!(h_z(&z, pt(0.5, 2.0)), Err(Error::NearPole));
    }

    #[test]
    fn pole_orbit_detected() {
        let z = PolePoint::new(0.5, 2.0).unwrap();
        let image = IntegerMatrix2x2::S.act(z.point()).translate(4.0);
        assert_eq!(h_z(&z, image), Err(Error::NearPole));
    }

    #[test]
    fn tends_to_minus_theta_at_the_cusp() {
        // j_ϑ(z)/(j_ϑ(τ) − j_ϑ(z)) → −1 as Im z → ∞.
        let z = PolePoint::new(0.5, 60.0).unwrap();
        let tau = pt(0.3, 1.5);
        let h = h_z(&z, tau).unwrap();
        let t = theta(tau);
        assert!((h + t).norm() / t.norm() < 1e-12);
    }

    #[test]
    fn reduced_pole_gives_same_form() {
        let z = PolePoint::new(0.13, 0.21).unwrap();
        let r = z.reduced();
        let zr = PolePoint::new(r.u(), r.v()).unwrap();
        let tau = pt(-0.2, 0.9);
        let a = h_z(&z, tau).unwrap();
        let b = h_z(&zr, tau).unwrap();
        assert!((a - b).norm() / b.norm() < 1e-10);
    }
}
