pub mod converge;
pub mod eval;
pub mod reduce;
pub mod selftest;
pub mod sweep;

use std::path::PathBuf;

use rayon::prelude::*;
use thetaxi_core::modular_forms::PolePoint;
use thetaxi_core::Complex64;

use crate::config::Settings;
use crate::error::CliError;
use crate::output::Report;
use crate::parse;

pub struct Context {
    pub settings: Settings,
    pub json: bool,
    pub out: Option<PathBuf>,
}

impl Context {
    pub fn report(&self, columns: &[&'static str]) -> Result<Report, CliError> {
        Report::new(columns, self.json, self.out.as_deref())
    }

    /// Maps `f` over `items` on `jobs` threads, keeping input order.
    pub fn par_map<T, R, F>(&self, items: &[T], f: F) -> Result<Vec<R>, CliError>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.settings.jobs)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
        Ok(pool.install(|| items.par_iter().map(f).collect()))
    }
}

pub fn pole(text: &str) -> Result<PolePoint, CliError> {
    let z = parse::complex(text)?;
    Ok(PolePoint::from_complex(z)?)
}

pub fn complex_list(values: &[String]) -> Result<Vec<Complex64>, CliError> {
    values.iter().map(|v| parse::complex(v)).collect()
}
