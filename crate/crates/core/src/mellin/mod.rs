//! The Mellin transform
//!
//! F_z(s) = s(1/2 − s) j_ϑ(z) ∫_0^∞ ϑ(it)/(j_ϑ(it) − j_ϑ(z)) t^{s−1} dt
//!
//! evaluated on the pieces [0, 1/y], [1/y, t₀], [t₀, y], [y, ∞).
//!
//! On the axis ϑ(i/u) = √u ϑ(iu) and j_ϑ(i/u) = j_ϑ(iu), so the piece of any
//! interval below t = 1 is mapped to u = 1/t, where it becomes the same
//! integrand against u^{(1/2−s)−1}. Every quadrature therefore runs on
//! [1, ∞), where the thetas are cheap real series.

mod tail;

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::modular_forms::{axis_inverse_j, axis_thetas, j_theta, PolePoint};
use crate::quadrature::{integrate, QuadratureOptions};
use crate::special_functions::SpectralParameter;
use crate::{Complex64, Error, Result};

/// How the integral over [T, ∞) is handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailMode {
    /// Truncate once an explicit majorant of the remainder is negligible.
    #[default]
    BoundTruncation,
    /// Expand in e^{−πt} and integrate termwise with incomplete Γ.
    TermwiseGamma,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Split point between the two middle pieces.
    pub t0: f64,
    pub max_subdivisions: usize,
    pub tail_mode: TailMode,
    /// Relative guard on |j_ϑ(it) − j_ϑ(z)| along the path.
    pub pole_guard: f64,
    /// Smallest admissible axis margin of z.
    pub axis_guard: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-10,
            rel_tol: 1e-9,
            t0: 1.0,
            max_subdivisions: 2000,
            tail_mode: TailMode::BoundTruncation,
            pole_guard: 1e-8,
            axis_guard: 1e-6,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::InvalidArgument("tolerances must be positive"));
        }
        if !(self.t0 > 0.0 && self.t0.is_finite()) {
            return Err(Error::InvalidArgument(
                "t0 must be a finite positive number",
            ));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::InvalidArgument("max_subdivisions must be positive"));
        }
        Ok(())
    }

    fn options(&self) -> QuadratureOptions {
        QuadratureOptions {
            abs_tol: self.abs_tol,
            rel_tol: self.rel_tol,
            max_subdivisions: self.max_subdivisions,
        }
    }
}

/// A piece of the integration range, in the t variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub t1: f64,
    /// May be `f64::INFINITY` for the tail.
    pub t2: f64,
    pub contribution: Complex64,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureResult {
    /// Sum of the segment contributions, in order.
    pub value: Complex64,
    pub err_estimate: f64,
    pub segments: Vec<Segment>,
}

impl QuadratureResult {
    fn from_segments(segments: Vec<Segment>) -> Self {
        let value = segments
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, s| acc + s.contribution);
        let err_estimate = segments.iter().map(|s| s.error).sum();
        QuadratureResult {
            value,
            err_estimate,
            segments,
        }
    }

    fn zero() -> Self {
        QuadratureResult {
            value: Complex64::new(0.0, 0.0),
            err_estimate: 0.0,
            segments: Vec::new(),
        }
    }
}

/// The pole data shared by every evaluation for one z.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Kernel {
    big_j: Complex64,
    guard: f64,
}

impl Kernel {
    pub(crate) fn new(z: &PolePoint, cfg: &QuadratureConfig) -> Result<Self> {
        if z.axis_margin() <= cfg.axis_guard {
            return Err(Error::AxisPole(z.axis_margin()));
        }
        let big_j = j_theta(z.reduced())?;
        Ok(Kernel {
            big_j,
            guard: cfg.pole_guard,
        })
    }

    pub(crate) fn big_j(&self) -> Complex64 {
        self.big_j
    }

    /// Where |j_ϑ(it)| ≈ |j_ϑ(z)|, i.e. 16|J| e^{−πt} = 1.
    pub(crate) fn crossing(&self) -> f64 {
        libm::log(16.0 * self.big_j.norm()) / PI
    }

    /// g(t) = Jϑ(it)/(j_ϑ(it) − J) for t > 0.
    pub(crate) fn g(&self, t: f64) -> Result<Complex64> {
        let mu = axis_inverse_j(t);
        let gap = Complex64::new(1.0, 0.0) - self.big_j * mu;
        if gap.norm() <= self.guard * (1.0 + self.big_j.norm()) * mu {
            return Err(Error::NearPoleOnPath(t));
        }
        Ok(self.big_j * (axis_thetas(t).theta3 * mu) / gap)
    }
}

fn power(t: f64, exponent: Complex64) -> Complex64 {
    (exponent * libm::log(t)).exp()
}

/// The integrand of F_z without the s(1/2 − s) prefactor:
/// j_ϑ(z)ϑ(it)/(j_ϑ(it) − j_ϑ(z)) t^{s−1}.
pub fn integrand(
    z: &PolePoint,
    s: SpectralParameter,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<Complex64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidArgument("t must be a finite positive number"));
    }
    let kernel = Kernel::new(z, cfg)?;
    Ok(kernel.g(t)? * power(t, s.s() - 1.0))
}

/// ∫_a^b g(u) u^{w−1} du for 1 ≤ a < b ≤ ∞, segments reported in u.
fn upper_integral(
    kernel: &Kernel,
    w: Complex64,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<Vec<Segment>> {
    let f = |u: f64| Ok(kernel.g(u)? * power(u, w - 1.0));
    let crossing = kernel.crossing();
    let (finite_end, tail) = if b.is_finite() {
        (b, None)
    } else {
        let cut = tail::cutoff(kernel, w, a, cfg)?;
        (cut.start, Some(cut))
    };
    let mut points = Vec::with_capacity(5);
    points.push(a);
    for p in [crossing - 1.0, crossing, crossing + 1.0] {
        if p > a && p < finite_end {
            points.push(p);
        }
    }
    points.push(finite_end);
    let mut segments = Vec::new();
    if finite_end > a {
        let body = integrate(f, &points, &cfg.options())?;
        segments.extend(body.intervals.iter().map(|l| Segment {
            t1: l.a,
            t2: l.b,
            contribution: l.value,
            error: l.error,
        }));
    }
    if let Some(cut) = tail {
        let (value, error) = match cfg.tail_mode {
            TailMode::BoundTruncation => (Complex64::new(0.0, 0.0), cut.bound),
            TailMode::TermwiseGamma => tail::termwise(kernel, w, cut.start)?,
        };
        segments.push(Segment {
            t1: cut.start,
            t2: f64::INFINITY,
            contribution: value,
            error,
        });
    }
    Ok(segments)
}

/// j_ϑ(z) ∫_{t1}^{t2} ϑ(it)/(j_ϑ(it) − j_ϑ(z)) t^{s−1} dt for 0 ≤ t1 ≤ t2 ≤ ∞.
pub fn f_z_segment(
    z: &PolePoint,
    s: SpectralParameter,
    t1: f64,
    t2: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult> {
    cfg.validate()?;
    if !(t1 >= 0.0 && t1.is_finite() && t2 >= t1) {
        return Err(Error::InvalidArgument(
            "segment needs 0 ≤ t1 ≤ t2 and finite t1",
        ));
    }
    let kernel = Kernel::new(z, cfg)?;
    segment_with_kernel(&kernel, s, t1, t2, cfg)
}

pub(crate) fn segment_with_kernel(
    kernel: &Kernel,
    s: SpectralParameter,
    t1: f64,
    t2: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult> {
    if t1 == t2 {
        return Ok(QuadratureResult::zero());
    }
    let mut segments = Vec::new();
    if t1 < 1.0 {
        // ∫_{t1}^{min(t2,1)} g(t) t^{s−1} dt = ∫_{1/min(t2,1)}^{1/t1} g(u) u^{(1/2−s)−1} du
        let lower = 1.0 / t2.min(1.0);
        let upper = if t1 == 0.0 { f64::INFINITY } else { 1.0 / t1 };
        let mut mapped = upper_integral(kernel, s.reflect().s(), lower, upper, cfg)?;
        mapped.reverse();
        segments.extend(mapped.into_iter().map(|seg| Segment {
            t1: if seg.t2.is_finite() {
                1.0 / seg.t2
            } else {
                0.0
            },
            t2: 1.0 / seg.t1,
            ..seg
        }));
    }
    if t2 > 1.0 {
        segments.extend(upper_integral(kernel, s.s(), t1.max(1.0), t2, cfg)?);
    }
    Ok(QuadratureResult::from_segments(segments))
}

/// F_z(s) = s(1/2 − s) × (the integral over [0, ∞)).
pub fn f_z(
    z: &PolePoint,
    s: SpectralParameter,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult> {
    cfg.validate()?;
    let kernel = Kernel::new(z, cfg)?;
    let prefactor = s.s() * s.reflect().s();
    if prefactor == Complex64::new(0.0, 0.0) {
        return Ok(QuadratureResult::zero());
    }
    let y = z.y();
    let mut cuts = [1.0 / y, cfg.t0, y];
    cuts.sort_by(f64::total_cmp);
    let bounds = [0.0, cuts[0], cuts[1], cuts[2], f64::INFINITY];
    let mut segments = Vec::with_capacity(4);
    for w in bounds.windows(2) {
        let piece = segment_with_kernel(&kernel, s, w[0], w[1], cfg)?;
        segments.push(Segment {
            t1: w[0],
            t2: w[1],
            contribution: prefactor * piece.value,
            error: prefactor.norm() * piece.err_estimate,
        });
    }
    Ok(QuadratureResult::from_segments(segments))
}

/// Ratio between the split points of the two sides of the residual.
pub const MIRROR_SPLIT_RATIO: f64 = 1.25;

/// |F_z(s) − F_z(1/2 − s)| / (1 + |F_z(s)|).
///
/// The mirror side is integrated with t₀ scaled by [`MIRROR_SPLIT_RATIO`]: with
/// a shared split the two sides reduce to the same set of integrals.
pub fn functional_equation_residual(
    z: &PolePoint,
    s: SpectralParameter,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let mirror = s.reflect();
    if mirror == s {
        Kernel::new(z, cfg)?;
        return Ok(0.0);
    }
    let a = f_z(z, s, cfg)?.value;
    let b = f_z(
        z,
        mirror,
        &QuadratureConfig {
            t0: cfg.t0 * MIRROR_SPLIT_RATIO,
            ..*cfg
        },
    )?
    .value;
    Ok((a - b).norm() / (1.0 + a.norm()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(x: f64, y: f64) -> PolePoint {
        PolePoint::new(x, y).unwrap()
    }

    #[test]
    fn empty_segment() {
        let cfg = QuadratureConfig::default();
        let r = f_z_segment(
            &z(0.5, 2.0),
            SpectralParameter::new(0.3, 1.0),
            1.0,
            1.0,
            &cfg,
        )
        .unwrap();
        assert_eq!(r.value, Complex64::new(0.0, 0.0));
        assert!(r.segments.is_empty());
    }

    #[test]
    fn prefactor_zeros_are_exact() {
        let cfg = QuadratureConfig::default();
        for s in [0.0, 0.5] {
            let r = f_z(&z(0.5, 2.0), SpectralParameter::new(s, 0.0), &cfg).unwrap();
            assert_eq!(r.value, Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn segments_sum_to_value() {
        let cfg = QuadratureConfig::default();
        let r = f_z(&z(0.5, 2.0), SpectralParameter::new(0.3, 1.2), &cfg).unwrap();
        let total = r
            .segments
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, s| acc + s.contribution);
        assert_eq!(total, r.value);
        assert_eq!(r.segments.len(), 4);
        assert!(r.err_estimate >= 0.0);
    }

    #[test]
    fn split_at_one_is_seamless() {
        let cfg = QuadratureConfig {
            abs_tol: 1e-13,
            rel_tol: 1e-12,
            ..Default::default()
        };
        let zz = z(0.4, 1.3);
        let s = SpectralParameter::new(0.8, -0.6);
        let whole = f_z_segment(&zz, s, 0.3, 3.0, &cfg).unwrap().value;
        let left = f_z_segment(&zz, s, 0.3, 1.7, &cfg).unwrap().value;
        let right = f_z_segment(&zz, s, 1.7, 3.0, &cfg).unwrap().value;
        assert!((whole - left - right).norm() < 1e-11);
    }

    #[test]
    fn functional_equation_holds() {
        let cfg = QuadratureConfig::default();
        let r = functional_equation_residual(&z(0.5, 2.0), SpectralParameter::new(0.8, 0.0), &cfg)
            .unwrap();
        assert!(r <= 1e-7, "{r}");
        let r = functional_equation_residual(&z(0.5, 2.0), SpectralParameter::new(0.25, 0.0), &cfg)
            .unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn axis_points_rejected() {
        let cfg = QuadratureConfig::default();
        let r = f_z(&z(0.0, 3.0), SpectralParameter::new(0.3, 0.0), &cfg);
        assert!(matches!(r, Err(Error::AxisPole(_))));
        let r = f_z(&z(2.0, 0.5), SpectralParameter::new(0.3, 0.0), &cfg);
        assert!(matches!(r, Err(Error::AxisPole(_))));
    }

    #[test]
    fn tail_modes_agree() {
        let zz = z(0.5, 3.0);
        let s = SpectralParameter::new(0.6, 0.0);
        let bound = QuadratureConfig::default();
        let termwise = QuadratureConfig {
            tail_mode: TailMode::TermwiseGamma,
            ..bound
        };
        let a = f_z_segment(&zz, s, 3.0, f64::INFINITY, &bound)
            .unwrap()
            .value;
        let b = f_z_segment(&zz, s, 3.0, f64::INFINITY, &termwise)
            .unwrap()
            .value;
        assert!((a - b).norm() < 1e-8, "{a} vs {b}");
    }
}
