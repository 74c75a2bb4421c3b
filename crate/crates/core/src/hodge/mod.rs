//! Hurwitz-Hodge integrals on moduli of admissible covers with two fully
//! ramified points.
//!
//! The same table of raw integrals is produced two ways:
//!
//! * [`Engine`] evaluates the closed-form generating functions built from
//!   the initial condition `D_1(u) = ln(d sin(u/2) / sin(du/2))`;
//! * [`Localization`] runs the localization relations as dynamic programs
//!   seeded only with the coefficients of `D_1`.
//!
//! [`cross_check_report`] compares them value by value.

mod engine;
mod identities;
mod recursion;
mod report;
mod table;

pub use engine::{
    closed_keys, d1_series_to_order, raw_at_genus, total_via_exp, total_via_sine, Engine,
    EngineConfig, UpsilonTable,
};
pub use identities::{gf_identity_d_residual, gf_identity_v_residual};
pub use recursion::Localization;
pub use report::{all_positive, cross_check_report, CheckOutcome, CrossCheckReport};
pub use table::{Entry, Family, IntegralKey, IntegralTable, Path};

use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HodgeError {
    #[error("degree must be at least 2, got {0}")]
    DegreeTooSmall(u32),
    #[error("max genus must be at least 1, got {0}")]
    GenusTooSmall(u32),
    #[error("index {index} outside {min}..={max}")]
    IndexOutOfRange {
        index: usize,
        min: usize,
        max: usize,
    },
    #[error("closed-form routes disagree at u^{power}")]
    PathMismatch { power: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}
