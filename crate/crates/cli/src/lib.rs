//! Library side of the `mixed-spectra` command-line tool: the `.mg` graph
//! format, the individual commands, and batch campaigns.

pub mod batch;
pub mod commands;
pub mod format;
