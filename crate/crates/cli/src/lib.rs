//! Library side of the command-line front end: output emission, config-file
//! merging, and the named verification checks. The binary in `main.rs` is a
//! thin dispatcher over these.

pub mod config;
pub mod emit;
pub mod verify;
