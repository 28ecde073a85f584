//! Library side of the `seqlab` command: expression parsing, b-file
//! checking, command implementations and output rendering.

pub mod bfile;
pub mod commands;
pub mod expr;
pub mod output;

pub use commands::{BinetRequest, CliError, CliResult};
pub use output::{Format, OutputDocument, Payload};
