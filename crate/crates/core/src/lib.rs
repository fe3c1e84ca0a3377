pub mod cli;
pub mod coherence;
pub mod decomposition;
pub mod detectors;
pub mod error;
pub mod formats;
pub mod graph;
pub mod harness;
pub mod narrowness;
pub mod report;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
