use thetaxi_core::asymptotics::convergence_study;
use thetaxi_core::special_functions::SpectralParameter;
use thetaxi_core::Complex64;

use super::{complex_list, Context};
use crate::error::{sweep_exit_code, CliError};
use crate::output::Field;
use crate::parse;

pub const DEFAULT_S: [Complex64; 3] = [
    Complex64::new(0.3, 0.0),
    Complex64::new(0.75, 0.0),
    Complex64::new(0.6, 2.0),
];

pub fn run(
    ctx: &Context,
    x: &str,
    s: &[String],
    y_list: &str,
    threshold: f64,
) -> Result<u8, CliError> {
    let xs = parse::float_list(x)?;
    let ys = parse::float_list(y_list)?;
    let spectral = if s.is_empty() {
        DEFAULT_S.to_vec()
    } else {
        complex_list(s)?
    };
    if xs.is_empty() || ys.is_empty() {
        return Err(CliError::Usage("--x and --y-list must be non-empty".into()));
    }
    if ys.iter().any(|&y| !(y > 0.0)) {
        return Err(CliError::Usage("pole heights must be positive".into()));
    }
    let tasks: Vec<(f64, Complex64)> = xs
        .iter()
        .flat_map(|&x| spectral.iter().map(move |&s| (x, s)))
        .collect();
    let cfg = ctx.settings.quadrature;
    let studies = ctx.par_map(&tasks, |&(x, s)| {
        convergence_study(x, SpectralParameter::from(s), &ys, &cfg)
    })?;

    let mut report = ctx.report(&[
        "x", "re_s", "im_s", "y", "value", "error", "monotone", "status",
    ])?;
    let mut errors = Vec::new();
    let mut missed = 0_i64;
    let mut worst_final = 0.0_f64;
    for (&(x, s), study) in tasks.iter().zip(studies) {
        match study {
            Ok(study) => {
                let final_error = study.final_error();
                worst_final = worst_final.max(final_error);
                if !study.monotone || !(final_error <= threshold) {
                    missed += 1;
                }
                for row in &study.rows {
                    report.row(&[
                        x.into(),
                        s.re.into(),
                        s.im.into(),
                        row.y.into(),
                        row.value.into(),
                        row.error.into(),
                        study.monotone.into(),
                        "ok".into(),
                    ])?;
                }
            }
            Err(e) => {
                missed += 1;
                let name = e.name();
                report.row(&[
                    x.into(),
                    s.re.into(),
                    s.im.into(),
                    Field::Missing,
                    Field::Missing,
                    Field::Missing,
                    false.into(),
                    name.into(),
                ])?;
                errors.push(e);
            }
        }
    }
    report.summary(&[
        ("studies", (tasks.len() as i64).into()),
        ("missed", missed.into()),
        ("errors", (errors.len() as i64).into()),
        ("max_final_error", worst_final.into()),
        ("threshold", threshold.into()),
    ])?;
    report.finish()?;
    if let Some(first) = errors.first() {
        eprintln!("{}: {first}", first.name());
    }
    Ok(sweep_exit_code(&errors, missed > 0))
}
