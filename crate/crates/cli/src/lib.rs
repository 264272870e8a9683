//! File format, reports and command dispatch for the `multiserial` binary.

pub mod commands;
pub mod document;
pub mod dot;
pub mod report;

pub use commands::{run, Artifact, Command, Fault, Options, Outcome};
pub use document::{parse, render_pair, Body, InputDocument, ParseError};
pub use report::Report;
