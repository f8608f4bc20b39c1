use std::fmt;

use thetaxi_core::{Error, ErrorKind};

/// Everything that can end a command, mapped onto the exit-code contract.
#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.name(),
            CliError::Usage(_) => "UsageError",
            CliError::Io(_) => "IoError",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e.kind() {
                ErrorKind::Domain => 2,
                ErrorKind::Tolerance => 3,
            },
            CliError::Usage(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Exit code for a sweep: any domain error gives 2, otherwise any tolerance
/// error gives 3, otherwise a missed threshold gives 1.
pub fn sweep_exit_code<'a>(
    errors: impl IntoIterator<Item = &'a Error>,
    threshold_missed: bool,
) -> u8 {
    let kinds: Vec<ErrorKind> = errors.into_iter().map(Error::kind).collect();
    if kinds.contains(&ErrorKind::Domain) {
        2
    } else if kinds.contains(&ErrorKind::Tolerance) {
        3
    } else if threshold_missed {
        1
    } else {
        0
    }
}
