//! File formats and the command-line front end for `rackinv-core`.

pub mod commands;
pub mod formats;
