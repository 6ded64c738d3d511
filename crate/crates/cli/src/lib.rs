//! Verification reports and data dumps for the `cayley` binary.

pub mod checks;
pub mod report;
