//! Exact Hurwitz-Hodge integrals for degree-`d` covers of the line with two
//! points of full ramification.
//!
//! Everything is exact: coefficients are [`Rational`]s and generating
//! functions are truncated [`Series`] over them.
//!
//! ```
//! use hurwitz_hodge::{Engine, EngineConfig, Localization};
//! use hurwitz_hodge::hodge::raw_at_genus;
//!
//! let engine = Engine::new(EngineConfig::new(2, 3)?);
//! let d2 = engine.di_closed(2)?;
//! assert_eq!(raw_at_genus(&d2, 3).to_string(), "15/16");
//!
//! let mut loc = Localization::new(&engine);
//! assert_eq!(loc.di_recursive(2)?, d2);
//! # Ok::<(), hurwitz_hodge::HodgeError>(())
//! ```

pub mod hodge;
pub mod partitions;
pub mod rational;
pub mod series;

pub use hodge::{
    Engine, EngineConfig, Family, HodgeError, IntegralKey, IntegralTable, Localization, Path,
};
pub use partitions::{Partition, SplitPair};
pub use rational::Rational;
pub use series::{Series, SeriesError};
