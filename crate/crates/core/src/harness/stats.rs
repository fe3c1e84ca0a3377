use serde::Serialize;

use crate::detectors::homogeneous_number;
use crate::error::{Error, Result};
use crate::formats::to_graph6;
use crate::graph::Graph;

use super::enumerate::{enumerate_graphs, EnumSpec, Filter};

pub const MAX_STATS_N: usize = 9;

#[derive(Clone, Debug, Serialize)]
pub struct EhStats {
    pub n: usize,
    pub graphs: usize,
    /// Least `max(ω, stability number)` over the class.
    pub min: usize,
    /// First graph in canonical order attaining the minimum, in graph6.
    pub argmin: String,
    /// `log(min) / log(n)`.
    pub exponent: f64,
    #[serde(skip)]
    pub argmin_graph: Graph,
}

pub fn eh_statistics(n: usize, filters: &[Filter]) -> Result<EhStats> {
    if !(2..=MAX_STATS_N).contains(&n) {
        return Err(Error::precondition(format!("statistics need 2 <= n <= {MAX_STATS_N}")));
    }
    let graphs = enumerate_graphs(&EnumSpec::new(n, filters))?;
    let best = graphs
        .iter()
        .map(|g| (homogeneous_number(g), g))
        .min_by_key(|(h, _)| *h)
        .ok_or_else(|| Error::precondition("class is empty at this size"))?;
    Ok(EhStats {
        n,
        graphs: graphs.len(),
        min: best.0,
        argmin: to_graph6(best.1),
        exponent: (best.0 as f64).ln() / (n as f64).ln(),
        argmin_graph: best.1.clone(),
    })
}
