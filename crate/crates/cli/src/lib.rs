//! File formats, reports and the command-line front end for `hopf-deform-core`.

pub use hopf_deform_core as core;

pub mod commands;
pub mod datum;
pub mod exec;
pub mod fixtures;
pub mod pbw;
pub mod report;
