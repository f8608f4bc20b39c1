use std::time::Instant;

use clap::ValueEnum;
use thetaxi_core::mellin::f_z;
use thetaxi_core::modular_forms::{h_z_with_guard, j_theta, lambda_modular, theta, UpperHalfPoint};
use thetaxi_core::special_functions::{xi_completed, xi_via_theta, SpectralParameter};
use thetaxi_core::Complex64;

use super::{pole, Context};
use crate::error::CliError;
use crate::parse;
use crate::Target;

fn required<'a>(value: Option<&'a str>, flag: &str) -> Result<&'a str, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("this target needs --{flag}")))
}

fn upper(text: &str) -> Result<UpperHalfPoint, CliError> {
    Ok(UpperHalfPoint::from_complex(parse::complex(text)?)?)
}

fn evaluate(
    ctx: &Context,
    target: Target,
    z: Option<&str>,
    s: Option<&str>,
    tau: Option<&str>,
) -> Result<(Complex64, Option<f64>), CliError> {
    let cfg = &ctx.settings.quadrature;
    let tau = || required(tau, "tau").and_then(upper);
    let z = || required(z, "z").and_then(pole);
    let s = || required(s, "s").and_then(parse::complex);
    Ok(match target {
        Target::Theta => (theta(tau()?), None),
        Target::Lambda => (lambda_modular(tau()?)?, None),
        Target::Jtheta => (j_theta(tau()?)?, None),
        Target::Hz => (h_z_with_guard(&z()?, tau()?, cfg.pole_guard)?, None),
        Target::F => {
            let result = f_z(&z()?, SpectralParameter::from(s()?), cfg)?;
            (result.value, Some(result.err_estimate))
        }
        Target::Xi => (xi_completed(s()?), None),
        Target::XiTheta => (xi_via_theta(s()?, cfg.t0)?, None),
    })
}

pub fn run(
    ctx: &Context,
    target: Target,
    z: Option<&str>,
    s: Option<&str>,
    tau: Option<&str>,
) -> Result<u8, CliError> {
    let start = Instant::now();
    let (value, err_estimate) = evaluate(ctx, target, z, s, tau)?;
    let elapsed = start.elapsed().as_secs_f64();
    let mut report = ctx.report(&["target", "value", "err_estimate", "time_s"])?;
    let name = target
        .to_possible_value()
        .map_or_else(String::new, |v| v.get_name().to_string());
    report.row(&[
        name.as_str().into(),
        value.into(),
        err_estimate.into(),
        elapsed.into(),
    ])?;
    report.finish()?;
    Ok(0)
}
