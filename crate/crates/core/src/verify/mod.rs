//! Range validation and per-cell verification reports.

mod bounds;
mod report;

pub use bounds::{bounds_table, render_bounds_table, Bounds, LanguageClass};
pub use report::{
    reports_to_csv, summary_line, verify_cell, verify_grid, NfaMinimality, VerificationReport, Witness, WitnessParams,
    WitnessSpec, EXHAUSTIVE_MINIMALITY_MAX_N,
};
