//! Circle numbers, dealternators and Kauffman brackets of link diagrams.
//!
//! The entry point is a PD-coded [`Diagram`]. From it the crate computes the
//! extreme-state circle counts `|s_A D|` and `|s_B D|` three ways: by direct
//! smoothing, through the region decomposition of the surgered surface, and
//! for dealternator connected diagrams from `n + 2 - 2k`. The Kauffman
//! bracket is evaluated by full state sum and checked against every span
//! bound that applies.

pub mod bracket;
pub mod catalog;
pub mod dealternator;
pub mod diagram;
mod error;
pub mod laurent;
pub mod pretzel;
pub mod regions;
pub mod report;
pub mod states;
mod unionfind;
pub mod verify;

pub use bracket::{kauffman_bracket, BoundsReport, BracketOptions, BracketReport};
pub use dealternator::{dealternator_info, DealternatorInfo};
pub use diagram::{parse_pd, Color, Crossing, Diagram, Smoothing};
pub use error::{Error, Result};
pub use laurent::LaurentPolynomial;
pub use pretzel::{pretzel, PretzelSpec};
pub use regions::{RegionDecomposition, SurfaceData};
pub use report::{analyze, AnalysisReport, AnalyzeOptions};
pub use states::{extreme_counts, State};
pub use unionfind::UnionFind;
