use super::point::UpperHalfPoint;
use crate::{Complex64, Error, Result};

/// An element of SL₂(ℤ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegerMatrix2x2 {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl IntegerMatrix2x2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det != 1 {
            return Err(Error::NotUnimodular(
                det.clamp(i64::MIN as i128, i64::MAX as i128) as i64,
            ));
        }
        Ok(IntegerMatrix2x2 { a, b, c, d })
    }

    pub const IDENTITY: Self = IntegerMatrix2x2 {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };
    /// S: τ ↦ −1/τ.
    pub const S: Self = IntegerMatrix2x2 {
        a: 0,
        b: -1,
        c: 1,
        d: 0,
    };

    /// Tᵏ: τ ↦ τ + k.
    pub fn translation(k: i64) -> Self {
        IntegerMatrix2x2 {
            a: 1,
            b: k,
            c: 0,
            d: 1,
        }
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Matrix product `self · rhs`; `None` on i64 overflow.
    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        let dot = |x: i64, y: i64, z: i64, w: i64| x.checked_mul(y)?.checked_add(z.checked_mul(w)?);
        Some(IntegerMatrix2x2 {
            a: dot(self.a, rhs.a, self.b, rhs.c)?,
            b: dot(self.a, rhs.b, self.b, rhs.d)?,
            c: dot(self.c, rhs.a, self.d, rhs.c)?,
            d: dot(self.c, rhs.b, self.d, rhs.d)?,
        })
    }

    /// Möbius action (aτ + b)/(cτ + d).
    pub fn act(&self, tau: UpperHalfPoint) -> UpperHalfPoint {
        let t = tau.tau();
        let image = (t * self.a as f64 + self.b as f64) / (t * self.c as f64 + self.d as f64);
        UpperHalfPoint::from_complex(image).expect("SL₂(ℤ) preserves the upper half-plane")
    }

    /// The automorphy factor cτ + d.
    pub fn cocycle(&self, tau: Complex64) -> Complex64 {
        tau * self.c as f64 + self.d as f64
    }
}

/// Γ_ϑ membership: a ≡ d and b ≡ c (mod 2).
pub fn in_theta_group(m: &IntegerMatrix2x2) -> bool {
    (m.a - m.d).rem_euclid(2) == 0 && (m.b - m.c).rem_euclid(2) == 0
}

const MAX_REDUCTION_STEPS: usize = 10_000;
const UNIT_CIRCLE_TIE: f64 = 1e-14;

/// Maps z into {|Re| ≤ 1, |τ| ≥ 1} by T^{±2} shifts and S, returning the image
/// and the accumulated γ ∈ Γ_ϑ. Boundary ties resolve toward Re ≥ 0.
pub fn reduce_to_fundamental_domain(
    z: UpperHalfPoint,
) -> Result<(UpperHalfPoint, IntegerMatrix2x2)> {
    let mut w = z.tau();
    let mut gamma = IntegerMatrix2x2::IDENTITY;
    let compose = |left: IntegerMatrix2x2, g: IntegerMatrix2x2| {
        left.checked_mul(&g).ok_or(Error::ReductionStalled)
    };
    for _ in 0..MAX_REDUCTION_STEPS {
        // Shift by an even integer into (−1, 1].
        let mut k = 2.0 * libm::round(w.re / 2.0);
        if w.re - k <= -1.0 {
            k -= 2.0;
        }
        if k != 0.0 {
            if k.abs() > 1e15 {
                return Err(Error::ReductionStalled);
            }
            w.re -= k;
            gamma = compose(IntegerMatrix2x2::translation(-(k as i64)), gamma)?;
        }
        let r2 = w.norm_sqr();
        let on_circle = (r2 - 1.0).abs() <= UNIT_CIRCLE_TIE;
        if (r2 < 1.0 && !on_circle) || (on_circle && w.re < 0.0) {
            w = -Complex64::new(1.0, 0.0) / w;
            gamma = compose(IntegerMatrix2x2::S, gamma)?;
            continue;
        }
        let reduced = UpperHalfPoint::from_complex(w).map_err(|_| Error::ReductionStalled)?;
        return Ok((reduced, gamma));
    }
    Err(Error::ReductionStalled)
}

/// |Re z′| for the reduced representative z′ of z.
pub fn axis_margin(z: UpperHalfPoint) -> Result<f64> {
    Ok(reduce_to_fundamental_domain(z)?.0.u().abs())
}
