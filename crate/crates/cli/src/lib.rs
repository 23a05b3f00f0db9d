//! Command-line front end: counting tables, path enumeration, the
//! substitution maps, generating-function expansion, verification suites,
//! and archive sequence comparison.

pub mod commands;
pub mod gf;
pub mod table;
pub mod verify;

pub use commands::{
    cmd_count, cmd_enumerate, cmd_gf, cmd_map, cmd_oeis, cmd_tables, parse_class, parse_target,
    CountOpts, Direction, EnumerateFormat, EnumerateOpts, GfOpts, MapOpts, OeisOpts, TablesOpts,
};
pub use gf::{GfArtifact, GfFormat};
pub use table::{parse_table_csv, ParsedTable, TableArtifact, TableFormat};
pub use verify::{run_suite, CheckResult, VerifyOptions, SUITES};

/// Failures split by exit convention: usage errors exit 2, verification
/// failures exit 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CliError {
    Usage(String),
    Check(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Check(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}
