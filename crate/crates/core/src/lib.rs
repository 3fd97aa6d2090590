//! Box representations in three dimensions for graphs of maximum degree three.
//!
//! Every vertex receives an axis-parallel box with end points on a grid of
//! tenths. Two boxes intersect exactly when their vertices are adjacent, and
//! intersecting boxes share only boundary points.
//!
//! ```
//! use cubicbox::{build_representation, graph::named, verify};
//!
//! let g = named::petersen();
//! let rep = build_representation(&g).unwrap();
//! assert!(verify(&g, &rep.boxes).passed());
//! ```

pub mod document;
pub mod graph;
pub mod intervals;
pub mod partition;
pub mod pipeline;
pub mod special;
pub mod verify;

pub use document::{BoxDocument, Provenance};
pub use graph::{Format, Graph, GraphError};
pub use intervals::{Fixed, Interval, IntervalAssignment};
pub use partition::{Partition, VertexClass};
pub use pipeline::{build_representation, construct, PipelineError, Representation};
pub use verify::{verify, Box3, VerificationReport};
