//! Exact domination polynomials of small graphs.
//!
//! The crate counts dominating sets of every size by bit-parallel subset
//! enumeration, classifies subsets by the vertices they leave undominated, and
//! checks a family of counting identities and inequalities relating these
//! quantities. Exact rational arithmetic evaluates the related binomial
//! conditions for graphs far too large to enumerate, and a seeded Monte-Carlo
//! estimator covers the remaining middle ground.

pub mod analysis;
pub mod binomial;
pub mod checks;
pub mod enumerate;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod rng;
pub mod sampling;

/// Version of the enumeration engine, recorded in every run report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use analysis::{analyze, mode_bounds_check, ratio_sequence, AnalysisReport, RatioSequence};
pub use enumerate::{domination_polynomial, e_statistics, CoefficientVector, EStatistics, EnumOptions};
pub use error::{Error, Result};
pub use generate::{generate, Family, FamilyName};
pub use graph::{Graph, VertexSet};
pub use io::{parse_edgelist, parse_graph6, write_graph6};
