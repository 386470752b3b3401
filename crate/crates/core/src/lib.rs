//! Numerical laboratory for sphere and circle characterizations through
//! circumscribing cones.
//!
//! The crate is organized bottom-up:
//!
//! - [`geom2d`]: points, oriented lines, reflections, bisectors and circles.
//! - [`body`]: planar convex bodies described by their support function.
//! - [`poncelet`]: Poncelet polygons between a circle and a convex body,
//!   rotation numbers, porism checks and the closure-radius solver.
//! - [`harness2d`]: bisector concurrency and equal-angle symmetry harnesses.
//! - [`cone3d`]: tangent cones of quadrics, their axes, concurrency of axes
//!   and the reduction of 3D questions to planar sections.
//! - [`io`] and [`svg`]: JSON body schemas and SVG scene output.

// `!(x > 0.0)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod body;
pub mod cone3d;
mod error;
pub mod geom2d;
pub mod harness2d;
pub mod io;
pub mod poncelet;
pub mod svg;

pub use error::{Error, Result};
