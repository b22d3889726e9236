use std::path::PathBuf;

/// Failures of the command-line tools, each mapped to a process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{context}: {message}")]
    Parse { context: String, message: String },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("snapshot format {found:?} is not supported (expected {expected:?})")]
    Version { found: String, expected: &'static str },
}

impl CliError {
    pub fn parse(context: impl Into<String>, message: impl ToString) -> Self {
        CliError::Parse {
            context: context.into(),
            message: message.to_string(),
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 2 for unreadable or malformed input, 3 for degenerate point sets,
    /// 4 for snapshots written in another format version.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => 2,
            CliError::Degenerate(_) => 3,
            CliError::Version { .. } => 4,
        }
    }
}
