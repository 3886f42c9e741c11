use std::fmt;

use addseq_core::Error;

#[derive(Debug)]
pub enum Failure {
    Verification(String),
    Usage(String),
    Io(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Self::Verification(_) => 1,
            Self::Usage(_) => 2,
            Self::Io(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Verification(m) => write!(f, "verification failed: {m}"),
            Self::Usage(m) => f.write_str(m),
            Self::Io(m) => write!(f, "i/o: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CheckFailed(m) => Self::Verification(m),
            other => Self::Usage(other.to_string()),
        }
    }
}

pub type CliResult<T = ()> = Result<T, Failure>;
