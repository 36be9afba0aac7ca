//! Command-line surface for sympdec: homotopy table lookups, induced-map
//! matrices, lifting decisions and the batch verification suites.

pub mod commands;
pub mod verify;
