//! On-disk box documents and mesh export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::intervals::Interval;
use crate::verify::Box3;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxRecord {
    pub id: usize,
    pub x: [i64; 2],
    pub y: [i64; 2],
    pub z: [i64; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    /// SHA-256 of the canonical edge list of the input graph.
    pub input_hash: String,
    pub seed: Option<u64>,
    pub tool_version: String,
}

/// Boxes of every input vertex, end points in tenths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxDocument {
    pub schema_version: u32,
    pub n: usize,
    pub boxes: Vec<BoxRecord>,
    pub provenance: Provenance,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("invalid box document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version {found} (expected {expected})")]
    SchemaVersion { found: u32, expected: u32 },
    #[error("document declares n = {declared} but lists {listed} boxes")]
    CountMismatch { declared: usize, listed: usize },
    #[error("box at position {position} has id {id}")]
    IdMismatch { position: usize, id: usize },
}

fn pair(iv: Interval) -> [i64; 2] {
    [iv.lo.0, iv.hi.0]
}

fn interval(p: [i64; 2]) -> Interval {
    Interval::from_tenths(p[0], p[1])
}

impl BoxDocument {
    pub fn new(boxes: &[Box3], provenance: Provenance) -> Self {
        let records = boxes
            .iter()
            .enumerate()
            .map(|(id, b)| BoxRecord { id, x: pair(b.x), y: pair(b.y), z: pair(b.z) })
            .collect();
        BoxDocument { schema_version: SCHEMA_VERSION, n: boxes.len(), boxes: records, provenance }
    }

    pub fn boxes(&self) -> Vec<Box3> {
        self.boxes.iter().map(|r| Box3 { x: interval(r.x), y: interval(r.y), z: interval(r.z) }).collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serialises");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        let doc: BoxDocument = serde_json::from_str(text)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::SchemaVersion { found: doc.schema_version, expected: SCHEMA_VERSION });
        }
        if doc.n != doc.boxes.len() {
            return Err(DocumentError::CountMismatch { declared: doc.n, listed: doc.boxes.len() });
        }
        if let Some((position, r)) = doc.boxes.iter().enumerate().find(|(i, r)| r.id != *i) {
            return Err(DocumentError::IdMismatch { position, id: r.id });
        }
        Ok(doc)
    }
}

/// Width given to degenerate axes in the mesh, in tenths.
const DISPLAY_THICKNESS: f64 = 0.2;

const FACES: [[usize; 3]; 12] = [
    [0, 2, 6],
    [0, 6, 4],
    [1, 5, 7],
    [1, 7, 3],
    [0, 4, 5],
    [0, 5, 1],
    [2, 3, 7],
    [2, 7, 6],
    [0, 1, 3],
    [0, 3, 2],
    [4, 6, 7],
    [4, 7, 5],
];

/// Wavefront OBJ with one closed 8-vertex, 12-triangle mesh per box.
/// Coordinates are in tenths. Zero-width axes are widened for display and
/// listed in the header.
pub fn to_obj(doc: &BoxDocument) -> String {
    let mut header = String::new();
    let mut body = String::new();
    let _ = writeln!(header, "# cubicbox mesh export");
    let _ = writeln!(header, "# units: tenths");
    let _ = writeln!(header, "# boxes: {}", doc.boxes.len());
    for (k, r) in doc.boxes.iter().enumerate() {
        let mut span = [[0f64; 2]; 3];
        for (axis, (name, p)) in [("x", r.x), ("y", r.y), ("z", r.z)].into_iter().enumerate() {
            let (lo, hi) = (p[0] as f64, p[1] as f64);
            span[axis] = if lo == hi {
                let _ = writeln!(header, "# thickened: box {} axis {name}", r.id);
                [lo - DISPLAY_THICKNESS / 2.0, hi + DISPLAY_THICKNESS / 2.0]
            } else {
                [lo, hi]
            };
        }
        let _ = writeln!(body, "o box{}", r.id);
        for corner in 0..8 {
            let c = |axis: usize| span[axis][(corner >> axis) & 1];
            let _ = writeln!(body, "v {:.1} {:.1} {:.1}", c(0), c(1), c(2));
        }
        for face in FACES {
            let base = 8 * k + 1;
            let _ = writeln!(body, "f {} {} {}", base + face[0], base + face[1], base + face[2]);
        }
    }
    header + &body
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc() -> BoxDocument {
        let b = Box3 {
            x: Interval::from_tenths(50, 50),
            y: Interval::from_tenths(10, 30),
            z: Interval::from_tenths(15, 50),
        };
        BoxDocument::new(&[b, b], Provenance { input_hash: "ab".into(), seed: Some(3), tool_version: "0.1.0".into() })
    }

    #[test]
    fn json_roundtrip_is_byte_identical() {
        let text = doc().to_json();
        let back = BoxDocument::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert_eq!(back.boxes()[0].y, Interval::from_tenths(10, 30));
    }

    #[test]
    fn schema_mismatch() {
        let text = doc().to_json().replace("\"schema_version\": 1", "\"schema_version\": 9");
        assert!(matches!(BoxDocument::from_json(&text), Err(DocumentError::SchemaVersion { found: 9, .. })));
        let text = doc().to_json().replace("\"n\": 2", "\"n\": 3");
        assert!(matches!(BoxDocument::from_json(&text), Err(DocumentError::CountMismatch { .. })));
    }

    #[test]
    fn obj_counts_and_thickening() {
        let obj = to_obj(&doc());
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 16);
        assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 24);
        assert_eq!(obj.lines().filter(|l| l.starts_with("# thickened")).count(), 2);
        assert!(obj.contains("v 49.9 10.0 15.0"));
        let empty = to_obj(&BoxDocument::new(&[], doc().provenance));
        assert!(empty.lines().all(|l| l.starts_with('#')));
    }
}
