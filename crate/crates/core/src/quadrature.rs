//! Globally adaptive 7/15-point Gauss–Kronrod quadrature for complex-valued
//! integrands on finite intervals.
//!
//! The interval with the largest local error estimate is bisected until the
//! summed estimate drops below `max(abs_tol, rel_tol·|I|)`. Local errors use
//! the QUADPACK rescaling of |K15 − G7|.

use alloc::vec::Vec;

use crate::{Complex64, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        QuadratureOptions {
            abs_tol: 1e-10,
            rel_tol: 1e-9,
            max_subdivisions: 2000,
        }
    }
}

/// One leaf of the final subdivision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Subinterval {
    pub a: f64,
    pub b: f64,
    pub value: Complex64,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Integral {
    pub value: Complex64,
    pub error: f64,
    /// Leaves ordered by their left endpoint.
    pub intervals: Vec<Subinterval>,
    pub evaluations: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the odd Kronrod nodes XGK[1], XGK[3], XGK[5] and the centre.
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err;
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = libm::pow(200.0 * scaled / res_asc, 1.5);
        scaled = if scale < 1.0 {
            res_asc * scale
        } else {
            res_asc
        };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let floor = 50.0 * f64::EPSILON * res_abs;
        if floor > scaled {
            scaled = floor;
        }
    }
    scaled
}

/// A single 15-point Kronrod estimate with its embedded 7-point Gauss error.
pub fn gauss_kronrod_15<F>(f: &mut F, a: f64, b: f64) -> Result<Subinterval>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center)?;
    let mut kronrod = f_center * WGK[7];
    let mut gauss = f_center * WG[3];
    let mut res_abs = WGK[7] * f_center.norm();
    let mut fv1 = [Complex64::new(0.0, 0.0); 7];
    let mut fv2 = [Complex64::new(0.0, 0.0); 7];
    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x)?;
        let f2 = f(center + x)?;
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += (f1 + f2) * WGK[j];
        res_abs += WGK[j] * (f1.norm() + f2.norm());
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
    }
    let mean = kronrod * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).norm();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).norm() + (fv2[j] - mean).norm());
    }
    let width = half.abs();
    let err = ((kronrod - gauss) * half).norm();
    let error = rescale_error(err, res_abs * width, res_asc * width);
    let value = kronrod * half;
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::NumericalDegeneracy("non-finite integrand value"));
    }
    Ok(Subinterval { a, b, value, error })
}

/// Integrates `f` over `[points[0], points[last]]`, starting from the
/// partition given by `points` (which must be finite and increasing).
pub fn integrate<F>(mut f: F, points: &[f64], opts: &QuadratureOptions) -> Result<Integral>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    if points.len() < 2 {
        return Err(Error::InvalidArgument(
            "quadrature needs at least two points",
        ));
    }
    if points.iter().any(|p| !p.is_finite()) || points.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidArgument(
            "quadrature points must be finite and non-decreasing",
        ));
    }
    if !(opts.abs_tol > 0.0 && opts.rel_tol > 0.0) || opts.max_subdivisions == 0 {
        return Err(Error::InvalidArgument(
            "quadrature tolerances must be positive",
        ));
    }

    let mut leaves: Vec<Subinterval> = Vec::new();
    for w in points.windows(2) {
        if w[1] > w[0] {
            leaves.push(gauss_kronrod_15(&mut f, w[0], w[1])?);
        }
    }
    let mut evaluations = 15 * leaves.len();

    loop {
        let total: Complex64 = leaves.iter().map(|l| l.value).sum();
        let error: f64 = leaves.iter().map(|l| l.error).sum();
        let target = opts.abs_tol.max(opts.rel_tol * total.norm());
        if error <= target {
            leaves.sort_by(|x, y| x.a.total_cmp(&y.a));
            return Ok(Integral {
                value: total,
                error,
                intervals: leaves,
                evaluations,
            });
        }
        if leaves.len() >= opts.max_subdivisions {
            return Err(Error::ToleranceNotMet {
                achieved: error,
                requested: target,
            });
        }
        let (worst, _) = leaves
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .expect("non-empty partition");
        let leaf = leaves.swap_remove(worst);
        let mid = 0.5 * (leaf.a + leaf.b);
        if !(mid > leaf.a && mid < leaf.b) {
            return Err(Error::ToleranceNotMet {
                achieved: error,
                requested: target,
            });
        }
        leaves.push(gauss_kronrod_15(&mut f, leaf.a, mid)?);
        leaves.push(gauss_kronrod_15(&mut f, mid, leaf.b)?);
        evaluations += 30;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_are_exact() {
        // K15 integrates degree ≤ 22 exactly, so x^10 on [0, 2] is one panel.
        let mut f = |x: f64| Ok(Complex64::new(libm::pow(x, 10.0), 0.0));
        let r = gauss_kronrod_15(&mut f, 0.0, 2.0).unwrap();
        assert!((r.value.re - 2048.0 / 11.0).abs() < 1e-11);
    }

    #[test]
    fn oscillatory_complex_integrand() {
        // ∫_0^{10} e^{i 7 x} dx = (e^{70i} − 1)/(7i)
        let opts = QuadratureOptions {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_subdivisions: 200,
        };
        let r = integrate(
            |x| Ok(Complex64::new(0.0, 7.0 * x).exp()),
            &[0.0, 10.0],
            &opts,
        )
        .unwrap();
        let exact = (Complex64::new(0.0, 70.0).exp() - 1.0) / Complex64::new(0.0, 7.0);
        assert!((r.value - exact).norm() < 1e-12);
        assert!(r.error <= 1e-12);
    }

    #[test]
    fn endpoint_singularity_converges() {
        // ∫_0^1 x^{-1/2} dx = 2
        let opts = QuadratureOptions {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_subdivisions: 500,
        };
        let r = integrate(
            |x| Ok(Complex64::new(1.0 / libm::sqrt(x), 0.0)),
            &[0.0, 1.0],
            &opts,
        )
        .unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-9);
        let sum: Complex64 = r.intervals.iter().map(|l| l.value).sum();
        assert_eq!(sum, r.value);
    }

    #[test]
    fn exhaustion_reports_tolerance() {
        let opts = QuadratureOptions {
            abs_tol: 1e-14,
            rel_tol: 1e-14,
            max_subdivisions: 3,
        };
        let r = integrate(
            |x| Ok(Complex64::new(libm::sin(1.0 / (x + 1e-3)), 0.0)),
            &[0.0, 1.0],
            &opts,
        );
        assert!(matches!(r, Err(Error::ToleranceNotMet { .. })));
    }

    #[test]
    fn integrand_errors_propagate() {
        let r = integrate(
            |_| Err(Error::NearPoleOnPath(0.5)),
            &[0.0, 1.0],
            &QuadratureOptions::default(),
        );
        assert_eq!(r, Err(Error::NearPoleOnPath(0.5)));
    }
}
