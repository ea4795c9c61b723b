//! Command-line front end for the Grassmann effective-action toolkit.
//!
//! The binary reads and writes exact action files in JSON, applies the
//! effective-action map by brute-force Berezin integration or by the
//! closed matrix forms, solves the rescaling equation for two, three, and
//! four generator pairs, and runs the identity, tower, and series check
//! suites under deterministic seeds. Everything is exact rational
//! arithmetic; a display flag can add floating-point renderings, which
//! never participate in comparisons.

pub mod actionfile;
pub mod cli;
pub mod report;
pub mod suites;
