use core::f64::consts::PI;

use crate::{Complex64, Error, Result};

/// Distance from a non-positive integer below which Γ reports a pole.
pub const POLE_RADIUS: f64 = 1e-14;

const LANCZOS_G: f64 = 607.0 / 128.0;

// Godfrey's coefficients for g = 607/128, n = 15.
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 15] = [
    0.999_999_999_999_997_091_82,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_741_78;

/// A logarithm of Γ(s) for Re(s) ≥ 1/2 (not necessarily the principal
/// branch of log Γ, but `exp` of it is Γ(s)).
pub(crate) fn ln_gamma(s: Complex64) -> Complex64 {
    debug_assert!(s.re >= 0.5);
    let z = s - 1.0;
    let mut sum = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (k, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        sum += *c / (z + k as f64);
    }
    let t = z + (LANCZOS_G + 0.5);
    (z + 0.5) * t.ln() - t + sum.ln() + HALF_LN_TWO_PI
}

/// Γ(s) by the Lanczos approximation, with reflection for Re(s) < 1/2.
pub fn gamma_fn(s: Complex64) -> Result<Complex64> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::InvalidArgument("Γ argument must be finite"));
    }
    let nearest = libm::round(s.re);
    if nearest <= 0.0 && (s - nearest).norm() <= POLE_RADIUS {
        return Err(Error::PoleAtNonPositiveInteger(nearest));
    }
    if s.re >= 0.5 {
        return Ok(ln_gamma(s).exp());
    }
    let one = Complex64::new(1.0, 0.0);
    let sin = (s * PI).sin();
    Ok(PI / (sin * ln_gamma(one - s).exp()))
}
