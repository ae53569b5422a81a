//! Exact geodesic axes and translation lengths of Anosov maps acting on the
//! Farey graph.
//!
//! A hyperbolic element of PSL(2,Z) stabilizes a unique bi-infinite ladder of
//! Farey triangles. This crate finds a rung of that ladder, cuts a fundamental
//! window out of it, and walks the window with the greedy transverse/pass rule
//! to obtain a geodesic axis and its integer translation length. Everything is
//! done in arbitrary-precision integer arithmetic.
//!
//! ```
//! use farey_axis::{MatrixPSL2Z, translation_length};
//!
//! let f = MatrixPSL2Z::from_entries(65, -56, 101, -87).unwrap();
//! let axis = translation_length(&f).unwrap();
//! assert_eq!(axis.length, 2);
//! ```

pub mod apps;
pub mod contfrac;
mod error;
pub mod farey;
pub mod geodesic;
pub mod ladder;
pub mod matrix;
pub mod oracle;
pub mod svg;

pub use apps::{
    census, class_count, enumerate_classes, minimal_word_experiment, ratio, Census, ClassRecord,
    MinimalWordTable,
};
pub use contfrac::{
    cf_of_rational, cf_of_surd, matrix_of_sequence, word_to_matrix, CFExpansion, QuadraticSurd,
};
pub use error::{Error, Result};
pub use farey::{ExtRational, FareyEdge};
pub use geodesic::{
    cyclic_translation_length, efficient_geodesic_finite, translation_length, AxisResult, Move, MoveSequence,
};
pub use ladder::{find_rung, generate_ladder, invariant_ladder_window, is_standard, Ladder};
pub use matrix::{AxisQuadratic, Classification, IntMatrix, MatrixPSL2Z};
