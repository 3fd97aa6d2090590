//! End-to-end construction: completion, partition, intervals, boxes.

use crate::graph::{complete_to_cubic, CubicCompletion, Graph, GraphError};
use crate::intervals::{assign_intervals, check_box_edges, IntervalAssignment, IntervalError};
use crate::partition::{Partition, PartitionError};
use crate::verify::{assemble_boxes, restrict, verify, Box3, VerificationReport};

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error("constructed boxes failed verification")]
    Verification(Box<VerificationReport>),
}

#[derive(Debug, Clone)]
pub struct Representation {
    pub completion: CubicCompletion,
    pub partition: Partition,
    pub intervals: IntervalAssignment,
    /// Boxes of the input vertices only.
    pub boxes: Vec<Box3>,
}

impl Representation {
    /// Boxes of every vertex of the cubic completion.
    pub fn completed_boxes(&self) -> Vec<Box3> {
        assemble_boxes(&self.intervals)
    }
}

/// Builds the representation with all linear-time checks (partition
/// properties, interval ranges, per-edge intersection and touching) but
/// without the quadratic verification.
pub fn construct(h: &Graph) -> Result<Representation, PipelineError> {
    let completion = complete_to_cubic(h)?;
    let partition = Partition::build(&completion.graph)?;
    let intervals = assign_intervals(&completion.graph, &partition)?;
    let boxes = assemble_boxes(&intervals);
    check_box_edges(&completion.graph, &boxes)?;
    let boxes = restrict(boxes, completion.original_count).expect("completion keeps every input vertex");
    Ok(Representation { completion, partition, intervals, boxes })
}

/// [`construct`] followed by the full geometric verification on the input.
pub fn build_representation(h: &Graph) -> Result<Representation, PipelineError> {
    let rep = construct(h)?;
    let report = verify(h, &rep.boxes);
    if !report.passed() {
        return Err(PipelineError::Verification(Box::new(report)));
    }
    Ok(rep)
}
