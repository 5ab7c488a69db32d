use std::fmt;

/// Anything the front end can fail with.
#[derive(Debug)]
pub enum CliError {
    Core(knotstate::Error),
    Usage(String),
    Io { path: String, message: String },
    UnknownName(String),
    MissingColumn(String),
    UnknownFamily(String),
    Csv(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Usage(_) => "Usage",
            CliError::Io { .. } => "Io",
            CliError::UnknownName(_) => "UnknownName",
            CliError::MissingColumn(_) => "MissingColumn",
            CliError::UnknownFamily(_) => "UnknownFamily",
            CliError::Csv(_) => "Csv",
        }
    }

    /// 1 usage, 2 input, 3 hypothesis not met.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Core(e) if e.is_hypothesis_failure() => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io { path, message } => write!(f, "{path}: {message}"),
            CliError::UnknownName(n) => write!(f, "no fixture named `{n}`"),
            CliError::MissingColumn(c) => write!(f, "CSV has no `{c}` column"),
            CliError::UnknownFamily(n) => write!(f, "unknown corpus family `{n}`"),
            CliError::Csv(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<knotstate::Error> for CliError {
    fn from(e: knotstate::Error) -> Self {
        CliError::Core(e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
