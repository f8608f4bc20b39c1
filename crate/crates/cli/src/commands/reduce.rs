use thetaxi_core::modular_forms::{reduce_to_fundamental_domain, UpperHalfPoint};

use super::Context;
use crate::error::CliError;
use crate::parse;

pub fn run(ctx: &Context, points: &[String]) -> Result<u8, CliError> {
    let mut rows = Vec::with_capacity(points.len());
    for text in points {
        let z = UpperHalfPoint::from_complex(parse::complex(text)?)?;
        let (reduced, gamma) = reduce_to_fundamental_domain(z)?;
        rows.push((z, reduced, gamma.entries()));
    }
    let mut report = ctx.report(&["z", "reduced", "a", "b", "c", "d", "axis_margin"])?;
    for (z, reduced, [a, b, c, d]) in rows {
        report.row(&[
            z.tau().into(),
            reduced.tau().into(),
            a.into(),
            b.into(),
            c.into(),
            d.into(),
            reduced.u().abs().into(),
        ])?;
    }
    report.finish()?;
    Ok(0)
}
