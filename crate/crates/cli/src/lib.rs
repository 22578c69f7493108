//! Command-line front end, text formats and benchmark harness for
//! `pauli-composer`.

pub mod bench;
pub mod commands;
pub mod io;
