//! Text formats, DOT export, and the command implementations behind the
//! `pfs` binary.

pub mod commands;
pub mod dot;
pub mod format;
