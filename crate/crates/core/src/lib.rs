//! Rectangles inscribed in configurations of four lines.
//!
//! A configuration is two pairs of lines `(A, C)` and `(B, D)`. Parallelograms
//! inscribed in the configuration scaled by `w` form a 3-dimensional inner
//! product space; its unit rectangles trace a closed curve `Φ` (and its
//! negation), from which every inscribed rectangle is recovered by scaling.
//!
//! All geometry is generic over [`Real`] (`f32` or `f64`); the `*64`
//! aliases below fix the usual choice.
//!
//! ```
//! use rectflow::{build_frame, sample_solution, Branch, CanonicalConfig};
//!
//! let cfg = CanonicalConfig::new(0.0f64, -1.0, 0.0, 1.0, -1.0).unwrap();
//! let frame = build_frame(&cfg, 1e-9).unwrap();
//! assert!((frame.lambda - 0.5).abs() < 1e-12);
//! for s in sample_solution(&frame, 8, Branch::Plus) {
//!     assert!((s.coords.norm() - 1.0).abs() < 1e-12);
//! }
//! ```

pub mod basis;
pub mod config;
pub mod error;
pub mod linalg;
pub mod models;
pub mod oracle;
pub mod parallelogram;
pub mod scalar;
pub mod solutions;

pub use basis::{build_frame, from_uvt, median_center_check, median_lines, uvt_of, Frame, MedianCenter, Uvt};
pub use config::{
    degenerate_by_diagonals, diagonals, normalize, CanonicalConfig, GeneralLine, InputConfiguration, Label,
    NormalizationRecord, Pair, ProjectiveLine,
};
pub use error::{Error, Result};
pub use linalg::{Mat3, Vec2, Vec3};
pub use models::{
    center_map, center_map_matrix, cone_surface, cross_section_area, cylinder_principal_axes, cylinder_surface,
    invert_center_map, locus, midpoint_matrix, projective_swap, CenterPoint, CenterPreimage, CylinderSurface,
    LocusKind, LocusReport, Quadric,
};
pub use oracle::{oracle_scan, set_distance, OracleHit};
pub use parallelogram::{extract_vectors, from_diagonals, inner, DiagonalPair, Parallelogram, SidePair};
pub use scalar::Real;
pub use solutions::{
    flow_step, phi, project_to_c, residuals, sample_at, sample_solution, samples_at_scales, solution_intersection,
    Branch, Projected, Residuals, SolutionSample,
};

/// Default tolerance for parallel and degeneracy tests.
pub const DEFAULT_TOL: f64 = 1e-9;

pub type Config64 = CanonicalConfig<f64>;
pub type Config32 = CanonicalConfig<f32>;
pub type Frame64 = Frame<f64>;
pub type Frame32 = Frame<f32>;
pub type Parallelogram64 = Parallelogram<f64>;
pub type Parallelogram32 = Parallelogram<f32>;
pub type Sample64 = SolutionSample<f64>;
pub type Line64 = GeneralLine<f64>;
pub type Input64 = InputConfiguration<f64>;
