//! End-to-end construction: decompose, tour, expand, orient, label, verify.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::euler::{euler_tour, EulerError};
use crate::expansion::{expand, select_anchor, ExpansionError};
use crate::graph::{
    decompose, ComponentDecomposition, Graph, GraphError, OrientationAndLabeling, SumReport,
};
use crate::labeling::{label_all, LabelError, LabeledCycle};
use crate::orientation::{orient, Parity};
use crate::verifier::{check_antimagic, check_construction, Diagnostics};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PipelineError {
    #[error("graph is not regular: vertex {0} has degree {1}, vertex {2} has degree {3}")]
    NotRegular(u32, usize, u32, usize),
    #[error("graph is {0}-regular; odd regular degrees are not handled by this construction")]
    OddDegree(usize),
    #[error("graph is {0}-regular; the construction needs degree 2d with d >= 2")]
    DegreeTooSmall(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Euler(#[from] EulerError),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error(transparent)]
    Label(#[from] LabelError),
}

#[derive(Debug)]
pub struct PipelineOutput {
    pub graph: Graph,
    pub decomposition: ComponentDecomposition,
    pub cycles: Vec<LabeledCycle>,
    pub ol: OrientationAndLabeling,
    pub report: SumReport,
    pub diagnostics: Diagnostics,
    /// Distinct vertex sums on the input graph.
    pub valid: bool,
    /// At least three odd components.
    pub proven_regime: bool,
    /// Half the common degree.
    pub d: usize,
}

/// Run the whole construction on a 2d-regular graph, d >= 2.
pub fn run_pipeline(graph: Graph) -> Result<PipelineOutput, PipelineError> {
    let degree = check_regular(&graph)?;
    let d = degree / 2;
    let decomposition = decompose(&graph);
    let s = decomposition.odd_count;
    let mut oriented = Vec::with_capacity(decomposition.component_count());
    for (i, comp) in decomposition.components.iter().enumerate() {
        let walk = euler_tour(&graph, &comp.vertices)?;
        let anchor = select_anchor(&walk)?;
        let ec = expand(&walk, anchor)?;
        let parity = if i < s { Parity::Odd } else { Parity::Even };
        oriented.push(orient(ec, parity));
    }
    let labeling = label_all(oriented, &decomposition, &graph)?;
    let report = check_antimagic(&graph, &labeling.ol)?;
    let mut diagnostics = check_construction(&graph, &decomposition, &labeling.cycles, &report, d);
    diagnostics.notes.extend(labeling.notes);
    Ok(PipelineOutput {
        valid: report.distinct,
        proven_regime: s >= 3,
        d,
        graph,
        decomposition,
        cycles: labeling.cycles,
        ol: labeling.ol,
        report,
        diagnostics,
    })
}

fn check_regular(g: &Graph) -> Result<usize, PipelineError> {
    if g.n() == 0 {
        return Err(PipelineError::DegreeTooSmall(0));
    }
    let deg0 = g.degree(0);
    for v in 1..g.n() as u32 {
        let d = g.degree(v);
        if d != deg0 {
            return Err(PipelineError::NotRegular(0, deg0, v, d));
        }
    }
    if !deg0.is_multiple_of(2) {
        return Err(PipelineError::OddDegree(deg0));
    }
    if deg0 < 4 {
        return Err(PipelineError::DegreeTooSmall(deg0));
    }
    Ok(deg0)
}

/// The JSON document emitted for each run. Array fields are indexed by
/// edge position in `edges`; `direction` 1 means the arc runs from the
/// stored smaller endpoint to the larger one.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ResultDocument {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
    pub direction: Vec<u8>,
    pub labels: Vec<u32>,
    pub vertex_sums: Vec<i64>,
    pub valid: bool,
    pub proven_regime: bool,
    pub diagnostics: Diagnostics,
    pub vertex_id_map: BTreeMap<String, u32>,
}

impl ResultDocument {
    pub fn from_output(out: &PipelineOutput, vertex_id_map: BTreeMap<String, u32>) -> Self {
        ResultDocument {
            n: out.graph.n(),
            edges: out.graph.edges().to_vec(),
            direction: out.ol.forward.iter().map(|&f| f as u8).collect(),
            labels: out.ol.label.clone(),
            vertex_sums: out.report.sums.clone(),
            valid: out.valid,
            proven_regime: out.proven_regime,
            diagnostics: out.diagnostics.clone(),
            vertex_id_map,
        }
    }

    pub fn orientation_and_labeling(&self) -> OrientationAndLabeling {
        OrientationAndLabeling {
            forward: self.direction.iter().map(|&b| b == 1).collect(),
            label: self.labels.clone(),
        }
    }
}
