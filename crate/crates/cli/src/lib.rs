//! Command-line front end for `autoseq`: configuration and command execution.

pub mod commands;
pub mod config;
