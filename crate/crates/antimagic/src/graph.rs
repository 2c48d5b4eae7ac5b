//! Undirected simple graphs, component decomposition, and vertex-sum
//! arithmetic on an oriented, labeled graph.

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("endpoint {0} out of range for {1} vertices")]
    EndpointOutOfRange(u32, usize),
    #[error("labels are not a bijection onto 1..=m")]
    NotABijection,
    #[error("orientation/labeling length does not match edge count")]
    LengthMismatch,
}

/// Undirected simple graph on vertices `0..n`. Edges are stored with the
/// smaller endpoint first; the adjacency lists hold edge indices sorted
/// ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edge_list(pairs: &[(u32, u32)], n: usize) -> Result<Graph, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        let mut seen = BTreeSet::new();
        for &(a, b) in pairs {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for &x in &[a, b] {
                if x as usize >= n {
                    return Err(GraphError::EndpointOutOfRange(x, n));
                }
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            edges.push(e);
        }
        let mut adjacency = vec![Vec::new(); n];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            adjacency[u as usize].push(idx);
            adjacency[v as usize].push(idx);
        }
        Ok(Graph {
            n,
            edges,
            adjacency,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> (u32, u32) {
        self.edges[idx]
    }

    /// Edge indices incident to `v`, ascending.
    pub fn incident(&self, v: u32) -> &[usize] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn other_endpoint(&self, edge: usize, v: u32) -> u32 {
        let (a, b) = self.edges[edge];
        if a == v {
            b
        } else {
            a
        }
    }
}

/// One connected component: its vertices and edge indices, both ascending.
#[derive(Debug, Clone)]
pub struct Component {
    pub vertices: Vec<u32>,
    pub edge_indices: Vec<usize>,
    /// Odd number of vertices.
    pub odd: bool,
}

/// Components in the order the construction consumes them: odd components
/// first, ascending vertex count, then even components ascending; ties by
/// smallest contained vertex id.
#[derive(Debug, Clone)]
pub struct ComponentDecomposition {
    pub components: Vec<Component>,
    /// Number of components with an odd vertex count; doc comments across
    /// the crate write this as `s`.
    pub odd_count: usize,
    /// Cumulative edge counts N_i over the fixed order; last entry is m.
    pub prefix_sums: Vec<usize>,
}

impl ComponentDecomposition {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Edge-count prefix before component `idx` (0-based), i.e. N_{idx}.
    pub fn edges_before(&self, idx: usize) -> usize {
        if idx == 0 {
            0
        } else {
            self.prefix_sums[idx - 1]
        }
    }
}

pub fn decompose(g: &Graph) -> ComponentDecomposition {
    let n = g.n();
    let mut comp_of = vec![usize::MAX; n];
    let mut components: Vec<Component> = Vec::new();
    for start in 0..n as u32 {
        if comp_of[start as usize] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut stack = vec![start];
        comp_of[start as usize] = id;
        let mut vertices = vec![start];
        while let Some(v) = stack.pop() {
            for &e in g.incident(v) {
                let w = g.other_endpoint(e, v);
                if comp_of[w as usize] == usize::MAX {
                    comp_of[w as usize] = id;
                    vertices.push(w);
                    stack.push(w);
                }
            }
        }
        vertices.sort_unstable();
        let odd = vertices.len() % 2 == 1;
        components.push(Component {
            vertices,
            edge_indices: Vec::new(),
            odd,
        });
    }
    for (idx, &(u, _)) in g.edges().iter().enumerate() {
        components[comp_of[u as usize]].edge_indices.push(idx);
    }
    // Odd components first, ascending size, ties by smallest vertex id.
    components.sort_by_key(|c| (!c.odd, c.vertices.len(), c.vertices.first().copied()));
    let odd_count = components.iter().filter(|c| c.odd).count();
    let mut prefix_sums = Vec::with_capacity(components.len());
    let mut acc = 0;
    for c in &components {
        acc += c.edge_indices.len();
        prefix_sums.push(acc);
    }
    ComponentDecomposition {
        components,
        odd_count,
        prefix_sums,
    }
}

/// An orientation of the stored edges plus a labeling. `forward[e]` means
/// the arc runs from the stored smaller endpoint to the larger one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationAndLabeling {
    pub forward: Vec<bool>,
    pub label: Vec<u32>,
}

impl OrientationAndLabeling {
    /// Tail and head of the arc on edge `idx`.
    pub fn arc(&self, g: &Graph, idx: usize) -> (u32, u32) {
        let (u, v) = g.edge(idx);
        if self.forward[idx] {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let m = g.m();
        if self.forward.len() != m || self.label.len() != m {
            return Err(GraphError::LengthMismatch);
        }
        let mut seen = vec![false; m];
        for &l in &self.label {
            if l == 0 || l as usize > m || seen[l as usize - 1] {
                return Err(GraphError::NotABijection);
            }
            seen[l as usize - 1] = true;
        }
        Ok(())
    }
}

/// Per-vertex sums for an oriented labeled graph.
#[derive(Debug, Clone)]
pub struct SumReport {
    /// S(u) = sum of labels entering u minus sum of labels leaving u.
    pub sums: Vec<i64>,
    pub distinct: bool,
    /// For construction-produced results: the ordered label pair (x, y),
    /// x < y, seen by the real copy of each vertex.
    pub seen_pairs: Option<Vec<(u32, u32)>>,
}

pub fn vertex_sums(g: &Graph, ol: &OrientationAndLabeling) -> Result<SumReport, GraphError> {
    ol.validate(g)?;
    let mut sums = vec![0i64; g.n()];
    for idx in 0..g.m() {
        let (tail, head) = ol.arc(g, idx);
        let l = ol.label[idx] as i64;
        sums[head as usize] += l;
        sums[tail as usize] -= l;
    }
    let mut sorted = sums.clone();
    sorted.sort_unstable();
    let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
    Ok(SumReport {
        sums,
        distinct,
        seen_pairs: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn triangle_from_edge_list() {
        let g = Graph::from_edge_list(&[(0, 1), (1, 2), (0, 2)], 3).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(
            Graph::from_edge_list(&[(0, 0)], 1),
            Err(GraphError::SelfLoop(0))
        );
    }

    #[test]
    fn rejects_duplicate_edge() {
        assert_eq!(
            Graph::from_edge_list(&[(0, 1), (1, 0)], 2),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn rejects_out_of_range_endpoint() {
        assert_eq!(
            Graph::from_edge_list(&[(0, 3)], 3),
            Err(GraphError::EndpointOutOfRange(3, 3))
        );
    }

    #[test]
    fn decompose_three_five_cycles() {
        let c5 = generators::circulant(5, &[1]).unwrap();
        let g = generators::disjoint_union(&[c5.clone(), c5.clone(), c5]);
        let d = decompose(&g);
        assert_eq!(d.odd_count, 3);
        assert_eq!(d.component_count(), 3);
        assert_eq!(d.prefix_sums, vec![5, 10, 15]);
    }

    #[test]
    fn decompose_odd_before_even() {
        let k5 = generators::complete(5).unwrap();
        let even = generators::circulant(6, &[1, 2]).unwrap();
        let g = generators::disjoint_union(&[even, k5]);
        let d = decompose(&g);
        assert_eq!(d.odd_count, 1);
        assert_eq!(d.component_count(), 2);
        // K_5 first despite appearing second in the union.
        assert_eq!(d.components[0].vertices.len(), 5);
        assert_eq!(d.prefix_sums, vec![10, 22]);
    }

    #[test]
    fn decompose_single_component() {
        let k5 = generators::complete(5).unwrap();
        let d = decompose(&k5);
        assert_eq!(d.odd_count, 1);
        assert_eq!(d.prefix_sums, vec![10]);
    }

    #[test]
    fn decompose_partitions_vertices_and_edges() {
        let g = generators::disjoint_union(&[
            generators::complete(5).unwrap(),
            generators::circulant(6, &[1, 2]).unwrap(),
            generators::circulant(7, &[1, 2]).unwrap(),
        ]);
        let d = decompose(&g);
        let total_v: usize = d.components.iter().map(|c| c.vertices.len()).sum();
        let total_e: usize = d.components.iter().map(|c| c.edge_indices.len()).sum();
        assert_eq!(total_v, g.n());
        assert_eq!(total_e, g.m());
        for c in &d.components {
            assert_eq!(c.odd, c.vertices.len() % 2 == 1);
        }
    }

    #[test]
    fn triangle_sums() {
        // Arcs: 0->1 label 1, 2->1 label 2, 2->0 label 3.
        let g = Graph::from_edge_list(&[(0, 1), (1, 2), (0, 2)], 3).unwrap();
        let ol = OrientationAndLabeling {
            forward: vec![true, false, false],
            label: vec![1, 2, 3],
        };
        let r = vertex_sums(&g, &ol).unwrap();
        assert_eq!(r.sums, vec![2, 3, -5]);
        assert!(r.distinct);
    }

    #[test]
    fn directed_triangle_not_distinct() {
        // 0->1 (1), 1->2 (2), 2->0 (3).
        let g = Graph::from_edge_list(&[(0, 1), (1, 2), (0, 2)], 3).unwrap();
        let ol = OrientationAndLabeling {
            forward: vec![true, true, false],
            label: vec![1, 2, 3],
        };
        let r = vertex_sums(&g, &ol).unwrap();
        assert_eq!(r.sums, vec![2, -1, -1]);
        assert!(!r.distinct);
    }

    #[test]
    fn rejects_non_bijection() {
        let g = Graph::from_edge_list(&[(0, 1), (1, 2), (0, 2)], 3).unwrap();
        let ol = OrientationAndLabeling {
            forward: vec![true, true, true],
            label: vec![1, 1, 3],
        };
        assert_eq!(vertex_sums(&g, &ol).unwrap_err(), GraphError::NotABijection);
    }
}
