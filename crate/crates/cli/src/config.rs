//! Settings resolved from flags, then `THETAXI_*` environment variables, then
//! a `key = value` config file, then built-in defaults.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thetaxi_core::mellin::{QuadratureConfig, TailMode};

use crate::error::CliError;

pub const ENV_PREFIX: &str = "THETAXI_";

const KEYS: [&str; 7] = [
    "abs-tol",
    "rel-tol",
    "t0",
    "max-subdivisions",
    "tail-mode",
    "jobs",
    "seed",
];

/// Values given on the command line; `None` defers to the next source.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub abs_tol: Option<f64>,
    pub rel_tol: Option<f64>,
    pub t0: Option<f64>,
    pub max_subdivisions: Option<usize>,
    pub tail_mode: Option<String>,
    pub jobs: Option<usize>,
    pub seed: Option<u64>,
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub quadrature: QuadratureConfig,
    pub jobs: usize,
    pub seed: u64,
}

pub fn parse_tail_mode(text: &str) -> Result<TailMode, CliError> {
    match text.trim().to_ascii_lowercase().replace('-', "_").as_str() {
        "bound_truncation" | "bound" => Ok(TailMode::BoundTruncation),
        "termwise_gamma" | "termwise" => Ok(TailMode::TermwiseGamma),
        other => Err(CliError::Usage(format!("unknown tail mode '{other}'"))),
    }
}

fn env_name(key: &str) -> String {
    format!("{ENV_PREFIX}{}", key.to_ascii_uppercase().replace('-', "_"))
}

fn parse_config_file(path: &Path) -> Result<HashMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path)?;
    let mut values = HashMap::new();
    for (number, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!(
                "{}:{}: expected key = value",
                path.display(),
                number + 1
            ))
        })?;
        let key = key.trim().to_ascii_lowercase().replace('_', "-");
        if !KEYS.contains(&key.as_str()) {
            return Err(CliError::Usage(format!(
                "{}:{}: unknown key '{key}'",
                path.display(),
                number + 1
            )));
        }
        values.insert(key, value.trim().to_string());
    }
    Ok(values)
}

struct Sources<'a, E: Fn(&str) -> Option<String>> {
    env: &'a E,
    file: HashMap<String, String>,
}

impl<E: Fn(&str) -> Option<String>> Sources<'_, E> {
    fn lookup<T: FromStr>(&self, key: &str, flag: Option<T>) -> Result<Option<T>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        let (origin, raw) = match (self.env)(&env_name(key)) {
            Some(v) => (env_name(key), v),
            None => match self.file.get(key) {
                Some(v) => (format!("config key {key}"), v.clone()),
                None => return Ok(None),
            },
        };
        raw.trim()
            .parse::<T>()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{origin}: cannot parse '{raw}'")))
    }
}

/// Resolves settings with an injectable environment, for testing.
pub fn resolve_with_env<E: Fn(&str) -> Option<String>>(
    flags: &Overrides,
    env: &E,
) -> Result<Settings, CliError> {
    let config_path = flags
        .config
        .clone()
        .or_else(|| env(&format!("{ENV_PREFIX}CONFIG")).map(PathBuf::from));
    let file = match config_path {
        Some(path) => parse_config_file(&path)?,
        None => HashMap::new(),
    };
    let sources = Sources { env, file };
    let defaults = QuadratureConfig::default();
    let tail_mode = match sources.lookup("tail-mode", flags.tail_mode.clone())? {
        Some(text) => parse_tail_mode(&text)?,
        None => defaults.tail_mode,
    };
    let quadrature = QuadratureConfig {
        abs_tol: sources
            .lookup("abs-tol", flags.abs_tol)?
            .unwrap_or(defaults.abs_tol),
        rel_tol: sources
            .lookup("rel-tol", flags.rel_tol)?
            .unwrap_or(defaults.rel_tol),
        t0: sources.lookup("t0", flags.t0)?.unwrap_or(defaults.t0),
        max_subdivisions: sources
            .lookup("max-subdivisions", flags.max_subdivisions)?
            .unwrap_or(defaults.max_subdivisions),
        tail_mode,
        ..defaults
    };
    quadrature.validate()?;
    let jobs = sources.lookup("jobs", flags.jobs)?.unwrap_or(1).max(1);
    let seed = sources.lookup("seed", flags.seed)?.unwrap_or(0);
    Ok(Settings {
        quadrature,
        jobs,
        seed,
    })
}

pub fn resolve(flags: &Overrides) -> Result<Settings, CliError> {
    resolve_with_env(flags, &|name: &str| std::env::var(name).ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn precedence_order() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        writeln!(
            file,
            "# comment\nabs_tol = 1e-6\nrel-tol = 1e-5\nt0 = 0.5\njobs = 3"
        )
        .unwrap();
        let env = |name: &str| match name {
            "THETAXI_REL_TOL" => Some("1e-7".to_string()),
            "THETAXI_T0" => Some("0.8".to_string()),
            _ => None,
        };
        let flags = Overrides {
            t0: Some(2.0),
            config: Some(file.path().to_path_buf()),
            ..Default::default()
        };
        let s = resolve_with_env(&flags, &env).unwrap();
        assert_eq!(s.quadrature.t0, 2.0);
        assert_eq!(s.quadrature.rel_tol, 1e-7);
        assert_eq!(s.quadrature.abs_tol, 1e-6);
        assert_eq!(s.jobs, 3);
        assert_eq!(s.quadrature.max_subdivisions, 2000);
    }

    #[test]
    fn bad_values_are_usage_errors() {
        let env = |name: &str| (name == "THETAXI_ABS_TOL").then(|| "fast".to_string());
        assert!(matches!(
            resolve_with_env(&Overrides::default(), &env),
            Err(CliError::Usage(_))
        ));
        let env = |_: &str| None;
        let flags = Overrides {
            tail_mode: Some("nope".into()),
            ..Default::default()
        };
        assert!(matches!(
            resolve_with_env(&flags, &env),
            Err(CliError::Usage(_))
        ));
        let flags = Overrides {
            abs_tol: Some(-1.0),
            ..Default::default()
        };
        assert!(matches!(
            resolve_with_env(&flags, &env),
            Err(CliError::Core(_))
        ));
    }

    #[test]
    fn unknown_config_key() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        writeln!(file, "speed = 11").unwrap();
        let flags = Overrides {
            config: Some(file.path().to_path_buf()),
            ..Default::default()
        };
        assert!(matches!(
            resolve_with_env(&flags, &|_: &str| None),
            Err(CliError::Usage(_))
        ));
    }
}
