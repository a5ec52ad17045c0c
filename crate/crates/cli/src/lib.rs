//! Command implementations behind the `tmcv` binary.

pub mod commands;
pub mod report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}
