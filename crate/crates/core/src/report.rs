//! Verification outcomes shared by the decomposition checks and the harness.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaId {
    Wiggly1,
    Wiggly2,
    Wiggly3,
    Wiggly4,
    Wiggly5,
    FractureProps,
    Crossing,
    SmallSide,
    HomogPartition,
    Bigcomp,
    Smalldeg,
    #[serde(rename = "strongEH")]
    StrongEH,
    HomogBound,
}

impl LemmaId {
    pub const ALL: [LemmaId; 13] = [
        LemmaId::Wiggly1,
        LemmaId::Wiggly2,
        LemmaId::Wiggly3,
        LemmaId::Wiggly4,
        LemmaId::Wiggly5,
        LemmaId::FractureProps,
        LemmaId::Crossing,
        LemmaId::SmallSide,
        LemmaId::HomogPartition,
        LemmaId::Bigcomp,
        LemmaId::Smalldeg,
        LemmaId::StrongEH,
        LemmaId::HomogBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Wiggly1 => "wiggly1",
            LemmaId::Wiggly2 => "wiggly2",
            LemmaId::Wiggly3 => "wiggly3",
            LemmaId::Wiggly4 => "wiggly4",
            LemmaId::Wiggly5 => "wiggly5",
            LemmaId::FractureProps => "fracture_props",
            LemmaId::Crossing => "crossing",
            LemmaId::SmallSide => "small_side",
            LemmaId::HomogPartition => "homog_partition",
            LemmaId::Bigcomp => "bigcomp",
            LemmaId::Smalldeg => "smalldeg",
            LemmaId::StrongEH => "strongEH",
            LemmaId::HomogBound => "homog_bound",
        }
    }

    /// Checks run against a restated hypothesis: a designated component
    /// passed explicitly instead of derived from weights, or (for the third
    /// lemma) `C` required to be anticonnected as well as connected.
    pub fn is_reformulated(self) -> bool {
        matches!(self, LemmaId::Wiggly3 | LemmaId::FractureProps | LemmaId::Crossing | LemmaId::SmallSide)
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::precondition(format!("unknown lemma id `{s}`")))
    }
}

/// One failing configuration: the graph and the named sets that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub graph: Graph,
    pub config: Vec<(&'static str, VertexSet)>,
}

impl Violation {
    pub fn new(graph: &Graph, config: &[(&'static str, VertexSet)]) -> Self {
        Violation { graph: graph.clone(), config: config.to_vec() }
    }

    /// The set stored under `name`.
    pub fn get(&self, name: &str) -> Option<VertexSet> {
        self.config.iter().find(|(k, _)| *k == name).map(|&(_, s)| s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub graphs_checked: u64,
    pub configs_checked: u64,
    /// Set when the check runs a weight-free version of a weighted statement.
    pub reformulated: bool,
    pub violations: Vec<Violation>,
}

impl LemmaReport {
    pub fn new(lemma: LemmaId) -> Self {
        LemmaReport {
            lemma,
            graphs_checked: 0,
            configs_checked: 0,
            reformulated: lemma.is_reformulated(),
            violations: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Adds the counts and violations of `other`, keeping `self`'s first.
    pub fn merge(&mut self, other: LemmaReport) {
        debug_assert_eq!(self.lemma, other.lemma);
        self.graphs_checked += other.graphs_checked;
        self.configs_checked += other.configs_checked;
        self.violations.extend(other.violations);
    }
}

impl Violation {
    /// `lemma graph6 name=0xmask ...`, one record per violation.
    pub fn line(&self, lemma: LemmaId) -> String {
        let mut out = format!("{lemma} {}", crate::formats::to_graph6(&self.graph));
        for (name, set) in &self.config {
            out.push_str(&format!(" {name}={set:#x}"));
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub lemma: LemmaId,
    pub graphs_checked: u64,
    pub configs_checked: u64,
    pub violations: usize,
    pub reformulated: bool,
    pub verified: bool,
    pub runtime_seconds: f64,
}

impl LemmaReport {
    pub fn lines(&self) -> impl Iterator<Item = String> + '_ {
        self.violations.iter().map(|v| v.line(self.lemma))
    }

    pub fn summary(&self, runtime: std::time::Duration) -> Summary {
        Summary {
            lemma: self.lemma,
            graphs_checked: self.graphs_checked,
            configs_checked: self.configs_checked,
            violations: self.violations.len(),
            reformulated: self.reformulated,
            verified: self.ok(),
            runtime_seconds: runtime.as_secs_f64(),
        }
    }
}
