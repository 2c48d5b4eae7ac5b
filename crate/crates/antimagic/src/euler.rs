//! Deterministic Euler tours via Hierholzer's method.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EulerError {
    #[error("vertex {0} has odd degree {1}")]
    OddDegree(u32, usize),
    #[error("component is disconnected: {0} edges unreachable from the start vertex")]
    Disconnected(usize),
    #[error("empty vertex set")]
    EmptyComponent,
}

/// Closed walk w_0, ..., w_m with w_0 = w_m; step k traverses
/// `edge_of_step[k]` between `visits[k]` and `visits[k + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWalk {
    pub visits: Vec<u32>,
    pub edge_of_step: Vec<usize>,
}

impl ClosedWalk {
    /// Number of edges traversed.
    pub fn len(&self) -> usize {
        self.edge_of_step.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_of_step.is_empty()
    }
}

/// Euler tour of the component containing `vertices`. Deterministic: starts
/// at the smallest vertex id, always extends along the smallest-indexed
/// unused incident edge, splices sub-tours at the earliest splice point.
pub fn euler_tour(g: &Graph, vertices: &[u32]) -> Result<ClosedWalk, EulerError> {
    let &start = vertices.iter().min().ok_or(EulerError::EmptyComponent)?;
    let mut comp_edges = 0usize;
    for &v in vertices {
        let deg = g.degree(v);
        if !deg.is_multiple_of(2) {
            return Err(EulerError::OddDegree(v, deg));
        }
        comp_edges += deg;
    }
    comp_edges /= 2;

    let mut used = vec![false; g.m()];
    // Per-vertex cursor into the (ascending) incident-edge list.
    let mut cursor = vec![0usize; g.n()];
    let next_unused = |v: u32, cursor: &mut [usize], used: &[bool]| -> Option<usize> {
        let inc = g.incident(v);
        let c = &mut cursor[v as usize];
        while *c < inc.len() && used[inc[*c]] {
            *c += 1;
        }
        if *c < inc.len() {
            Some(inc[*c])
        } else {
            None
        }
    };

    let mut visits = vec![start];
    let mut edge_of_step: Vec<usize> = Vec::with_capacity(comp_edges);
    // Earliest position on the tour with an unused incident edge.
    while let Some(pos) =
        (0..visits.len()).find(|&i| next_unused(visits[i], &mut cursor, &used).is_some())
    {
        let anchor = visits[pos];
        let mut sub_v = Vec::new();
        let mut sub_e = Vec::new();
        let mut cur = anchor;
        while let Some(e) = next_unused(cur, &mut cursor, &used) {
            used[e] = true;
            cur = g.other_endpoint(e, cur);
            sub_e.push(e);
            sub_v.push(cur);
        }
        debug_assert_eq!(cur, anchor, "even degrees force the sub-tour to close");
        visits.splice(pos + 1..pos + 1, sub_v);
        edge_of_step.splice(pos..pos, sub_e);
    }

    if edge_of_step.len() != comp_edges {
        return Err(EulerError::Disconnected(comp_edges - edge_of_step.len()));
    }
    Ok(ClosedWalk {
        visits,
        edge_of_step,
    })
}
