//! The integral of g(u) u^{w−1} over [T, ∞).

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{Kernel, QuadratureConfig, TailMode};
use crate::modular_forms::{axis_inverse_j, axis_thetas};
use crate::special_functions::upper_incomplete_gamma_scaled;
use crate::{Complex64, Error, Result};

pub(super) struct Cutoff {
    pub start: f64,
    /// Majorant of the neglected remainder (bound truncation only).
    pub bound: f64,
}

const MAX_EXTENSIONS: usize = 2000;
const SERIES_LEN: usize = 48;

/// 2|J|ϑ(iT)μ(T)T^{Re w−1} / ((π − p/T)(1 − |Jμ(T)|)), p = max(Re w − 1, 0).
///
/// Past the crossing, |Jμ| decreases like e^{−πt} and t^{Re w−1} grows at most
/// like e^{p(t−T)/T}, which integrates to this majorant.
fn remainder_bound(kernel: &Kernel, w: Complex64, t: f64) -> Option<f64> {
    let p = (w.re - 1.0).max(0.0);
    let rate = PI - p / t;
    let mu = axis_inverse_j(t);
    let ratio = kernel.big_j().norm() * mu;
    if rate <= 0.0 || ratio >= 1.0 {
        return None;
    }
    let theta3 = axis_thetas(t).theta3;
    Some(
        2.0 * kernel.big_j().norm() * theta3 * mu * libm::pow(t, w.re - 1.0)
            / (rate * (1.0 - ratio)),
    )
}

pub(super) fn cutoff(
    kernel: &Kernel,
    w: Complex64,
    a: f64,
    cfg: &QuadratureConfig,
) -> Result<Cutoff> {
    let start = a.max(kernel.crossing() + 1.0).max(1.0);
    match cfg.tail_mode {
        TailMode::TermwiseGamma => Ok(Cutoff { start, bound: 0.0 }),
        TailMode::BoundTruncation => {
            let target = 0.01 * cfg.abs_tol;
            let mut t = start.max((w.re - 1.0).max(0.0) / PI + 1.0);
            for _ in 0..MAX_EXTENSIONS {
                if let Some(bound) = remainder_bound(kernel, w, t) {
                    if bound <= target {
                        return Ok(Cutoff { start: t, bound });
                    }
                }
                t += 1.0;
            }
            Err(Error::ToleranceNotMet {
                achieved: f64::INFINITY,
                requested: target,
            })
        }
    }
}

fn mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; SERIES_LEN];
    for (i, &x) in a.iter().enumerate() {
        if x == 0.0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(SERIES_LEN - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn reciprocal(a: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; SERIES_LEN];
    out[0] = 1.0 / a[0];
    for k in 1..SERIES_LEN {
        let acc: f64 = (1..=k).map(|j| a[j] * out[k - j]).sum();
        out[k] = -acc / a[0];
    }
    out
}

/// Power series in p = e^{−πt} of (ϑ, ν) with μ = p·ν.
fn axis_series() -> (Vec<f64>, Vec<f64>) {
    let mut theta3 = vec![0.0; SERIES_LEN];
    let mut theta4 = vec![0.0; SERIES_LEN];
    let mut a = vec![0.0; SERIES_LEN];
    for n in 0..SERIES_LEN {
        if n * n < SERIES_LEN {
            let weight = if n == 0 { 1.0 } else { 2.0 };
            theta3[n * n] += weight;
            theta4[n * n] += if n % 2 == 0 { weight } else { -weight };
        }
        if n * (n + 1) < SERIES_LEN {
            a[n * (n + 1)] += 1.0;
        }
    }
    // θ₂⁴ = 16p·A⁴ with A = Σ_{n≥0} p^{n(n+1)}.
    let a2 = mul(&a, &a);
    let t4_2 = mul(&theta4, &theta4);
    let t3_2 = mul(&theta3, &theta3);
    let t3_4 = mul(&t3_2, &t3_2);
    let numerator = mul(&mul(&a2, &a2), &mul(&t4_2, &t4_2));
    let nu: Vec<f64> = mul(&numerator, &reciprocal(&mul(&t3_4, &t3_4)))
        .iter()
        .map(|c| 16.0 * c)
        .collect();
    (theta3, nu)
}

/// ∫_T^∞ g(u) u^{w−1} du with g = Σ_{n≥1} Jⁿ ϑ μⁿ expanded in p = e^{−πu}:
/// each pᵐ integrates to (πm)^{−w} Γ(w, πmT).
pub(super) fn termwise(kernel: &Kernel, w: Complex64, start: f64) -> Result<(Complex64, f64)> {
    let (theta3, nu) = axis_series();
    let h0 = libm::exp(-PI * start);
    let rho = kernel.big_j() * h0;
    // q_n = ϑ·νⁿ, rescaled by h0^k in its k-th coefficient.
    let scaled = |series: &[f64]| -> Vec<f64> {
        let mut f = 1.0;
        series
            .iter()
            .map(|c| {
                let v = c * f;
                f *= h0;
                v
            })
            .collect()
    };
    let nu_h = scaled(&nu);
    let mut q = scaled(&theta3);
    let mut coeffs = vec![Complex64::new(0.0, 0.0); SERIES_LEN];
    let mut rho_n = Complex64::new(1.0, 0.0);
    for n in 1..SERIES_LEN {
        q = mul(&q, &nu_h);
        rho_n *= rho;
        for k in 0..SERIES_LEN - n {
            coeffs[n + k] += rho_n * q[k];
        }
    }
    let mut total = Complex64::new(0.0, 0.0);
    let mut last = 0.0;
    for (m, c) in coeffs.iter().enumerate().skip(1) {
        let rate = PI * m as f64;
        let term =
            *c * (-w * libm::log(rate)).exp() * upper_incomplete_gamma_scaled(w, rate * start)?;
        total += term;
        last = term.norm();
    }
    Ok((total, last + 1e-16 * total.norm()))
}
