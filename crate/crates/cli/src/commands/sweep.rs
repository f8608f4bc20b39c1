use thetaxi_core::mellin::functional_equation_residual;
use thetaxi_core::modular_forms::PolePoint;
use thetaxi_core::special_functions::SpectralParameter;
use thetaxi_core::{Complex64, Error};

use super::{complex_list, pole, Context};
use crate::error::{sweep_exit_code, CliError};
use crate::output::Field;
use crate::parse;

/// Reduced poles with axis margin at least 0.1.
pub const DEFAULT_POLES: [(f64, f64); 12] = [
    (0.1, 1.5),
    (0.25, 1.2),
    (0.5, 2.0),
    (0.75, 1.0),
    (-0.3, 1.1),
    (-0.5, 1.5),
    (0.9, 0.8),
    (-0.8, 0.9),
    (0.4, 3.0),
    (-0.2, 2.5),
    (0.6, 4.0),
    (-0.65, 1.25),
];

pub const DEFAULT_GRID: &str = "-1.5:2:9,-5:5:9";

pub fn run(
    ctx: &Context,
    z: &[String],
    s: &[String],
    grid: Option<&str>,
    threshold: f64,
) -> Result<u8, CliError> {
    if !(threshold >= 0.0) {
        return Err(CliError::Usage("threshold must be non-negative".into()));
    }
    let poles: Vec<PolePoint> = if z.is_empty() {
        DEFAULT_POLES
            .iter()
            .map(|&(x, y)| PolePoint::new(x, y))
            .collect::<Result<_, Error>>()?
    } else {
        z.iter().map(|t| pole(t)).collect::<Result<_, CliError>>()?
    };
    let spectral: Vec<Complex64> = if s.is_empty() {
        parse::grid(grid.unwrap_or(DEFAULT_GRID))?
    } else {
        complex_list(s)?
    };
    let tasks: Vec<(PolePoint, Complex64)> = poles
        .iter()
        .flat_map(|p| spectral.iter().map(move |&s| (*p, s)))
        .collect();
    let cfg = ctx.settings.quadrature;
    let results = ctx.par_map(&tasks, |(p, s)| {
        functional_equation_residual(p, SpectralParameter::from(*s), &cfg)
    })?;

    let mut report = ctx.report(&["x", "y", "re_s", "im_s", "residual", "pass", "status"])?;
    let mut errors = Vec::new();
    let mut failed = 0_i64;
    let mut max_residual = 0.0_f64;
    for ((p, s), result) in tasks.iter().zip(results) {
        let (residual, pass, status) = match result {
            Ok(r) => {
                max_residual = max_residual.max(r);
                (Field::Float(r), r <= threshold, "ok")
            }
            Err(e) => {
                let name = e.name();
                errors.push(e);
                (Field::Missing, false, name)
            }
        };
        if !pass {
            failed += 1;
        }
        report.row(&[
            p.x().into(),
            p.y().into(),
            s.re.into(),
            s.im.into(),
            residual,
            pass.into(),
            status.into(),
        ])?;
    }
    report.summary(&[
        ("rows", (tasks.len() as i64).into()),
        ("failed", failed.into()),
        ("errors", (errors.len() as i64).into()),
        ("max_residual", max_residual.into()),
        ("threshold", threshold.into()),
    ])?;
    report.finish()?;
    if let Some(first) = errors.first() {
        eprintln!("{}: {first}", first.name());
    }
    Ok(sweep_exit_code(&errors, failed > 0))
}
