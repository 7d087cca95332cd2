use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("bad input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] wedgeops::Error),
}

impl CliError {
    /// Every error is the caller's fault: malformed flags, files or symbols.
    pub fn exit_code(&self) -> u8 {
        2
    }
}
