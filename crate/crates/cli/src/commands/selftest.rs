//! Reduced-size versions of the library invariants.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thetaxi_core::asymptotics::{correction_c, correction_d};
use thetaxi_core::mellin::{f_z, functional_equation_residual, QuadratureConfig};
use thetaxi_core::modular_forms::theta::series;
use thetaxi_core::modular_forms::{
    h_z, in_theta_group, j_theta, lambda_modular, reduce_to_fundamental_domain, IntegerMatrix2x2,
    PolePoint, UpperHalfPoint,
};
use thetaxi_core::quadrature::{integrate, QuadratureOptions};
use thetaxi_core::special_functions::{
    gamma_fn, incomplete_gamma_asymptotic, polylog_unit_circle, upper_incomplete_gamma,
    xi_via_theta, zeta_euler_maclaurin, AsymptoticOrder, SpectralParameter,
};
use thetaxi_core::{Complex64, Result};

use super::Context;
use crate::error::CliError;
use crate::output::Field;

/// Largest observed deviation against the suite's tolerance.
struct Check {
    cases: usize,
    worst: f64,
    tolerance: f64,
}

type Suite = fn(&mut ChaCha8Rng, &QuadratureConfig) -> Result<Check>;

const SUITES: [(&str, Suite); 17] = [
    ("gamma_recurrence", gamma_recurrence),
    ("incomplete_gamma_complement", incomplete_gamma_complement),
    ("incomplete_gamma_decay", incomplete_gamma_decay),
    ("zeta_functional_equation", zeta_functional_equation),
    ("xi_symmetry", xi_symmetry),
    ("polylog_conjugation", polylog_conjugation),
    ("xi_theta_t0_invariance", xi_theta_t0_invariance),
    ("theta_inversion", theta_inversion),
    ("lambda_identities", lambda_identities),
    ("j_invariance", j_invariance),
    ("cusp_growth", cusp_growth),
    ("h_reduced_pole", h_reduced_pole),
    ("reduction", reduction),
    ("mellin_functional_equation", mellin_functional_equation),
    ("mellin_t0_invariance", mellin_t0_invariance),
    ("mellin_prefactor_zeros", mellin_prefactor_zeros),
    ("correction_identities", correction_identities),
];

const EXACT: f64 = f64::MIN_POSITIVE;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

fn random_tau(rng: &mut ChaCha8Rng) -> UpperHalfPoint {
    UpperHalfPoint::new(rng.gen_range(-1.0..=1.0), rng.gen_range(0.2..=5.0)).expect("v > 0")
}

fn gamma_recurrence(rng: &mut ChaCha8Rng, _: &QuadratureConfig) -> Result<Check> {
    let mut worst = 0.0_f64;
    let mut cases = 0;
    while cases < 100 {
        let s = c(rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0));
        let near_pole = s.re < 0.5 && (s - s.re.round()).norm() < 0.1;
        if s.norm() > 20.0 || near_pole {
            continue;
        }
        let next = gamma_fn(s + 1.0)?;
        worst = worst.max(rel(s * gamma_fn(s)?, next));
        cases += 1;
    }
    Ok(Check {
        cases,
        worst,
        tolerance: 1e-11,
    })
}

fn incomplete_gamma_complement(rng: &mut ChaCha8Rng, _: &QuadratureConfig) -> Result<Check> {
    let opts = QuadratureOptions {
        abs_tol: 1e-14,
        rel_tol: 1e-13,
        max_subdivisions: 4000,
    };
    let mut worst = 0.0_f64;
    for _ in 0..10 {
        let s = c(rng.gen_range(0.5..3.0), rng.gen_range(-2.0..2.0));
        let y: f64 = rng.gen_range(0.5..6.0);
        let sigma = s.re;
        // t = u^{1/σ} turns ∫_0^y t^{s−1}e^{−t} dt into a bounded integrand.
        let exponent = s / sigma - 1.0;
        let lower = integrate(
            |u: f64| {
                if u == 0.0 {
                    return Ok(c(0.0, 0.0));
                }
                Ok((exponent * u.ln()).exp() * ((-u.powf(1.0 / sigma)).exp() / sigma))
            },
            &[0.0, y.powf(sigma)],
            &opts,
        )?;
        let upper = upper_incomplete_gamma(s, y)?.value;
        worst = worst.max(rel(upper + lower.value, gamma_fn(s)?));
    }
    Ok(Check {
        cases: 10,
        worst,
        tolerance: 1e-10,
    })
}

fn incomplete_gamma_decay(_: &mut ChaCha8Rng, _: &QuadratureConfig) -> Result<Check> {
    let mut worst = 0.0_f64;
    for s in [c(0.3, 0.0), c(1.7, 0.5)] {
        for n in [2, 5] {
            let order = AsymptoticOrder::new(n)?;
            let mut fitted = Vec::new();
            for y in [20.0_f64, 40.0, 80.0, 160.0] {
                let exact = upper_incomplete_gamma(s, y)?.value;
                let approx = incomplete_gamma_asymptotic(s, y, order)?;
                let scale = y.powf(s.re - 1.0) * (-y).exp();
                fitted.push((exact - approx).norm() / scale * y.powi(n as i32));
            }
            let hi = fitted.iter().cloned().fold(f64::MIN, f64::max);
            let lo = fitted.iter().cloned().fold(f64::MAX, f64::min);
            worst = worst.max(hi / lo);
        }
    }
    Ok(Check {
        cases: 4,
        worst,
        tolerance: 10.0,
    })
}

fn random_strip(rng: &mut ChaCha8Rng) -> Complex64 {
    c(rng.gen_range(0.05..0.95), rng.gen_range(-30.0..30.0))
}

fn zeta_functional_equation(rng: &mut ChaCha8Rng, _: &QuadratureConfig) -> Result<Check> {
    let mut worst = 0.0_f64;
    for _ in 0..40 {
        let s = random_strip(rng);
        let lhs = zeta_euler_maclaurin(1.0 - s)?;
        let chi = 2.0 * (-s * (2.0 * PI).ln()).exp() * (s * (PI / 2.0)).cos() * gamma_fn(s)?;
        worst = worst.max(rel(chi * zeta_euler_maclaurin(s)?, lhs));
    }
    Ok(Check {
        cases: 40,
        worst,
        tolerance: 1e-10,
    })
}

/// ξ(s) = s(s−1)/2 · π^{−s/2} Γ(s/2) ζ(s), with no reflection anywhere.
fn xi_direct(s: Complex64) -> Result<Complex64> {
    Ok(s * (s - 1.0)
        * 0.5
        * (-s * 0.5 * PI.ln()).exp()
        * gamma_fn(s * 0.5)?
        * zeta_euler_maclaurin(s)?)
}

fn xi_symmetry(rng: &mut ChaCha8Rng, _: &QuadratureConfig) -> Result<Check> {
    let mut worst = 0.0_f64;
    for _ in 0..40 {
        let s = random_strip(rng);
        let a = xi_direct(s)?;
        worst = worst.max((xi_direct(1.0 - s)? - a).norm() / (1.0 + a.norm()));
    }
    Ok(Check {
        cases: 40,
        worst,
        tolerance: 1e-10,
    })
}

fn polylog_conjugation(rng: &mut ChaCha8Rng, _: &QuadratureConfig) -> Result<Check> {
    let mut worst = 0.0_f64;
    for _ in 0..30 {
        let ell = rng.gen_range(1..=6);
        let x = rng.gen_range(0.01..1.99);
        let diff = polylog_unit_circle(ell, -x)? - polylog_unit_circle(ell, x)?.conj();
        worst = worst.max(diff.norm());
    }
    Ok(Check {
        cases: 30,
        worst,
        tolerance: 1e-13,
    })
}

fn xi_theta_t0_invariance(rng: &mut ChaCha8Rng, _: &QuadratureConfig) -> Result<Check> {
    let mut worst = 0.0_f64;
    for _ in 0..5 {
        let s = c(rng.gen_range(0.3..1.0), rng.gen_range(-5.0..5.0));
        let values = [
            xi_via_theta(s, 0.5)?,
            xi_via_theta(s, 1.0)?,
            xi_via_theta(s, 2.0)?,
        ];
        for i in 0..3 {
            for j in i + 1..3 {
                worst = worst.max((values[i] - values[j]).norm());
            }
        }
    }
    Ok(Check {
        cases: 5,
        worst,
        tolerance: 1e-9,
    })
}

fn theta_inversion(rng: &mut ChaCha8Rng, _: &QuadratureConfig) -> Result<Check> {
    let mut worst = 0.0_f64;
    for _ in 0..50 {
        let tau = random_tau(rng);
        let direct = series::theta3(tau);
        let image = series::theta3(tau.invert()) / (-Complex64::i() * tau.tau()).sqrt();
        worst = worst.max(rel(image, direct));
    }
    Ok(Check {
        cases: 50,
        worst,
        tolerance: 1e-11,
    })
}

fn lambda_identities(rng: &mut ChaCha8Rng, _: &QuadratureConfig) -> Result<Check> {
    // λ = (θ₂/ϑ)⁴ and 1 − λ = (θ₄/ϑ)⁴ from the plain series.
    let lam = |tau: UpperHalfPoint| {
        let t = series::thetas(tau);
        (
            (t.theta2 / t.theta3).powi(4),
            (t.theta4 / t.theta3).powi(4),
            t,
        )
    };
    let mut worst = 0.0_f64;
    for _ in 0..50 {
        let tau = random_tau(rng);
        let (_, one_minus, t) = lam(tau);
        let (inv, _, _) = lam(tau.invert());
        worst = worst.max(rel(inv, one_minus));
        let (shifted, _, _) = lam(tau.translate(1.0));
        worst = worst.max(rel(shifted, -(t.theta2 / t.theta4).powi(4)));
        let w = UpperHalfPoint::from_complex(Complex64::new(1.0, 0.0) / (1.0 - tau.tau()))?;
        let (moved, _, _) = lam(w);
        worst = worst.max(rel(moved, (t.theta3 / t.theta4).powi(4)));
    }
    Ok(Check {
        cases: 50,
        worst,
        tolerance: 1e-10,
    })
}

fn j_invariance(rng: &mut ChaCha8Rng, _: &QuadratureConfig) -> Result<Check> {
    let s = IntegerMatrix2x2::S;
    let t2 = IntegerMatrix2x2::translation(2);
    let tm2 = IntegerMatrix2x2::translation(-2);
    let generators = [
        s,
        t2,
        tm2.checked_mul(&s).expect("small"),
        s.checked_mul(&t2).expect("small"),
    ];
    let mut worst = 0.0_f64;
    for _ in 0..50 {
        let tau = random_tau(rng);
        let base = j_theta(tau)?;
        for g in &generators {
            worst = worst.max(rel(j_theta(g.act(tau))?, base));
        }
    }
    Ok(Check {
        cases: 50,
        worst,
        tolerance: 1e-10,
    })
}

/// Near the cusp 1: 16λ(τ/(τ+1))e^{πiτ} → 1 and j_ϑ(τ/(τ+1)) + 256e^{2πiτ}
/// is O(e^{−3πv}); both bounds are checked with explicit constants.
fn cusp_growth(rng: &mut ChaCha8Rng, _: &QuadratureConfig) -> Result<Check> {
    let mut worst = 0.0_f64;
    for _ in 0..5 {
        let u = rng.gen_range(-1.0..1.0);
        for v in [3.0, 4.0, 5.0] {
            let tau = c(u, v);
            let image = UpperHalfPoint::from_complex(tau / (tau + 1.0))?;
            let q = (Complex64::i() * PI * tau).exp();
            let lam = lambda_modular(image)?;
            worst = worst.max((16.0 * lam * q - 1.0).norm() * (PI * v).exp() / 16.0);
            let j = j_theta(image)?;
            worst = worst.max((j + 256.0 * q * q).norm() * (3.0 * PI * v).exp() / 10.0);
        }
    }
    Ok(Check {
        cases: 15,
        worst,
        tolerance: 1.0,
    })
}

fn h_reduced_pole(rng: &mut ChaCha8Rng, _: &QuadratureConfig) -> Result<Check> {
    let mut worst = 0.0_f64;
    let mut cases = 0;
    while cases < 10 {
        let z = PolePoint::new(rng.gen_range(-3.0..3.0), rng.gen_range(0.3..2.0))?;
        let r = z.reduced();
        let zr = PolePoint::new(r.u(), r.v())?;
        let tau = random_tau(rng);
        let big_j = j_theta(r)?;
        if (j_theta(tau)? - big_j).norm() < 0.1 * big_j.norm() {
            continue;
        }
        worst = worst.max(rel(h_z(&z, tau)?, h_z(&zr, tau)?));
        cases += 1;
    }
    Ok(Check {
        cases,
        worst,
        tolerance: 1e-10,
    })
}

fn reduction(rng: &mut ChaCha8Rng, _: &QuadratureConfig) -> Result<Check> {
    let mut worst = 0.0_f64;
    for _ in 0..50 {
        let z = UpperHalfPoint::new(rng.gen_range(-10.0..10.0), rng.gen_range(0.01..3.0))?;
        let (w, g) = reduce_to_fundamental_domain(z)?;
        let in_domain = w.u().abs() <= 1.0 && w.tau().norm() >= 1.0 - 1e-14;
        let (again, h) = reduce_to_fundamental_domain(w)?;
        if !in_domain || !in_theta_group(&g) || again != w || h != IntegerMatrix2x2::IDENTITY {
            worst = f64::INFINITY;
        }
        worst = worst.max(rel(g.act(z).tau(), w.tau()));
    }
    Ok(Check {
        cases: 50,
        worst,
        tolerance: 1e-9,
    })
}

const MELLIN_POLES: [(f64, f64); 2] = [(0.5, 2.0), (-0.3, 1.1)];

fn mellin_functional_equation(rng: &mut ChaCha8Rng, cfg: &QuadratureConfig) -> Result<Check> {
    let mut worst = 0.0_f64;
    for &(x, y) in &MELLIN_POLES {
        let z = PolePoint::new(x, y)?;
        for _ in 0..2 {
            let s = SpectralParameter::new(rng.gen_range(-1.5..2.0), rng.gen_range(-5.0..5.0));
            worst = worst.max(functional_equation_residual(&z, s, cfg)?);
        }
    }
    Ok(Check {
        cases: 4,
        worst,
        tolerance: 1e-6,
    })
}

fn mellin_t0_invariance(rng: &mut ChaCha8Rng, cfg: &QuadratureConfig) -> Result<Check> {
    let mut worst = 0.0_f64;
    for &(x, y) in &MELLIN_POLES {
        let z = PolePoint::new(x, y)?;
        let s = SpectralParameter::new(rng.gen_range(-1.0..1.5), rng.gen_range(-4.0..4.0));
        let a = f_z(&z, s, &QuadratureConfig { t0: 0.5, ..*cfg })?;
        let b = f_z(&z, s, &QuadratureConfig { t0: 2.0, ..*cfg })?;
        let budget = (a.err_estimate + b.err_estimate).max(1e-14 * a.value.norm());
        worst = worst.max((a.value - b.value).norm() / budget);
    }
    Ok(Check {
        cases: 2,
        worst,
        tolerance: 3.0,
    })
}

fn mellin_prefactor_zeros(_: &mut ChaCha8Rng, cfg: &QuadratureConfig) -> Result<Check> {
    let mut worst = 0.0_f64;
    for &(x, y) in &MELLIN_POLES {
        let z = PolePoint::new(x, y)?;
        for s in [0.0, 0.5] {
            worst = worst.max(f_z(&z, SpectralParameter::new(s, 0.0), cfg)?.value.norm());
        }
    }
    Ok(Check {
        cases: 4,
        worst,
        tolerance: EXACT,
    })
}

fn correction_identities(rng: &mut ChaCha8Rng, _: &QuadratureConfig) -> Result<Check> {
    let mut violations = 0.0;
    for _ in 0..20 {
        let s = SpectralParameter::new(rng.gen_range(-3.0..3.0), rng.gen_range(-5.0..5.0));
        let x = rng.gen_range(0.05..0.95);
        if correction_c(1, s, x)? != c(0.0, 0.0) {
            violations += 1.0;
        }
        let ell = rng.gen_range(1..=5);
        if correction_d(ell, s, x)? != correction_c(ell, s.reflect(), x)? {
            violations += 1.0;
        }
    }
    Ok(Check {
        cases: 20,
        worst: violations,
        tolerance: EXACT,
    })
}

pub fn run(ctx: &Context, scale: f64) -> std::result::Result<u8, CliError> {
    if !(scale >= 0.0) {
        return Err(CliError::Usage(
            "tolerance scale must be non-negative".into(),
        ));
    }
    let cfg = &ctx.settings.quadrature;
    let mut report = ctx.report(&["suite", "cases", "worst", "tolerance", "pass", "status"])?;
    for (index, (name, suite)) in SUITES.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.settings.seed.wrapping_add(index as u64));
        let failure = match suite(&mut rng, cfg) {
            Ok(check) => {
                let tolerance = check.tolerance * scale;
                let pass = check.worst < tolerance;
                report.row(&[
                    (*name).into(),
                    (check.cases as i64).into(),
                    check.worst.into(),
                    tolerance.into(),
                    pass.into(),
                    "ok".into(),
                ])?;
                (!pass)
                    .then(|| format!("worst {:e} against tolerance {:e}", check.worst, tolerance))
            }
            Err(e) => {
                report.row(&[
                    (*name).into(),
                    Field::Missing,
                    Field::Missing,
                    Field::Missing,
                    false.into(),
                    e.name().into(),
                ])?;
                Some(format!("{}: {e}", e.name()))
            }
        };
        if let Some(reason) = failure {
            report.note(&format!("FAIL, {name}"))?;
            report.finish()?;
            eprintln!("SuiteFailed: {name}: {reason}");
            return Ok(1);
        }
    }
    report.note(&format!("PASS, {} suites", SUITES.len()))?;
    report.finish()?;
    Ok(0)
}
