//! Circular arcs in endpoint parameterization, polyarcs and G¹ arc splines.
//!
//! An arc is given by its two endpoints and its signed angular range `θ`;
//! radius and center are derived. Chaining arcs over a polygon gives a
//! polyarc, and requiring shared tangents at the joins leaves a
//! one-parameter family of arc splines, parameterized by the first arc's
//! angle. [`optimize::smooth`] picks the member of minimal length, areal
//! deviation or bending energy.
//!
//! ```
//! use arcspline::{Objective, GssConfig, SplineFamily, Vec2};
//!
//! let family = SplineFamily::new(
//!     vec![Vec2::new(0.0, 0.0), Vec2::new(10.0, 0.0), Vec2::new(15.0, 8.0), Vec2::new(25.0, 5.0)],
//!     false,
//! )?;
//! let best = arcspline::smooth(&family, Objective::Energy, &GssConfig::default(), 1.0)?;
//! assert!(best.spline.g1_defect()? < 1e-9);
//! # Ok::<(), arcspline::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arc;
pub mod cli;
mod error;
pub mod io;
pub mod optimize;
pub mod polycurve;
mod vec2;

pub use arc::{ArcSeg, CenterParams, DEFAULT_EI};
pub use error::{Error, Result};
pub use optimize::{gss, objective_value, scanned_gss, smooth, GssConfig, GssOutcome, Objective, Smoothed};
pub use polycurve::{exterior_angle, Metrics, Polyarc, SplineFamily};
pub use vec2::Vec2;
