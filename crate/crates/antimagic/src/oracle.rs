//! Brute-force reference for tiny instances: exhaustive search over
//! labelings (and optionally orientations) in lexicographic order, pruning
//! branches whose completed vertices already collide.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::Graph;

pub const DEFAULT_MAX_EDGES_LABELING: usize = 10;
pub const DEFAULT_MAX_EDGES_FULL: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {m} edges, above the cap of {cap}; pass force to override")]
    TooLarge { m: usize, cap: usize },
    #[error("orientation length does not match edge count")]
    LengthMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Lexicographically first antimagic labeling (label per edge index).
    Found(Vec<u32>),
    NotFound,
    /// The node limit was hit before the space was exhausted.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FullSearchOutcome {
    Found {
        forward: Vec<bool>,
        labels: Vec<u32>,
    },
    NotFound,
    Exhausted,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchLimits {
    /// Edge-count cap; refuse larger graphs unless `force`.
    pub max_edges: usize,
    pub force: bool,
    /// Maximum number of label placements tried; 0 means unlimited.
    pub node_limit: u64,
}

impl SearchLimits {
    pub fn labeling_default() -> SearchLimits {
        SearchLimits {
            max_edges: DEFAULT_MAX_EDGES_LABELING,
            force: false,
            node_limit: 0,
        }
    }

    pub fn full_default() -> SearchLimits {
        SearchLimits {
            max_edges: DEFAULT_MAX_EDGES_FULL,
            force: false,
            node_limit: 0,
        }
    }
}

struct Searcher<'a> {
    g: &'a Graph,
    forward: &'a [bool],
    labels: Vec<u32>,
    used: u64,
    sums: Vec<i64>,
    /// Unlabeled incident edges per vertex; a vertex's sum is final once
    /// this hits zero.
    remaining: Vec<usize>,
    completed: HashMap<i64, u32>,
    nodes: u64,
    node_limit: u64,
    exhausted: bool,
}

impl<'a> Searcher<'a> {
    fn run(mut self) -> SearchOutcome {
        // Isolated vertices are complete from the start.
        for v in 0..self.g.n() {
            if self.remaining[v] == 0 && !self.complete(0) {
                return SearchOutcome::NotFound;
            }
        }
        if self.place(0) {
            SearchOutcome::Found(self.labels)
        } else if self.exhausted {
            SearchOutcome::Exhausted
        } else {
            SearchOutcome::NotFound
        }
    }

    fn complete(&mut self, sum: i64) -> bool {
        let c = self.completed.entry(sum).or_insert(0);
        *c += 1;
        *c == 1
    }

    fn uncomplete(&mut self, sum: i64) {
        *self.completed.get_mut(&sum).unwrap() -= 1;
    }

    fn place(&mut self, edge: usize) -> bool {
        let m = self.g.m();
        if edge == m {
            return true;
        }
        let (u, v) = self.g.edge(edge);
        let (tail, head) = if self.forward[edge] { (u, v) } else { (v, u) };
        for l in 1..=m as u32 {
            if self.used & (1 << (l - 1)) != 0 {
                continue;
            }
            if self.node_limit > 0 && self.nodes >= self.node_limit {
                self.exhausted = true;
                return false;
            }
            self.nodes += 1;
            self.used |= 1 << (l - 1);
            self.labels[edge] = l;
            self.sums[head as usize] += l as i64;
            self.sums[tail as usize] -= l as i64;
            self.remaining[head as usize] -= 1;
            self.remaining[tail as usize] -= 1;

            let mut ok = true;
            let mut done = [false; 2];
            for (i, &x) in [head, tail].iter().enumerate() {
                if self.remaining[x as usize] == 0 {
                    done[i] = true;
                    if !self.complete(self.sums[x as usize]) {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && self.place(edge + 1) {
                return true;
            }
            for (i, &x) in [head, tail].iter().enumerate() {
                if done[i] {
                    self.uncomplete(self.sums[x as usize]);
                }
            }
            self.remaining[head as usize] += 1;
            self.remaining[tail as usize] += 1;
            self.sums[head as usize] -= l as i64;
            self.sums[tail as usize] += l as i64;
            self.used &= !(1 << (l - 1));
            if self.exhausted {
                return false;
            }
        }
        self.labels[edge] = 0;
        false
    }
}

/// First antimagic labeling of the given orientation in lexicographic
/// permutation order (edges take labels in index order).
pub fn search_labeling(
    g: &Graph,
    forward: &[bool],
    limits: SearchLimits,
) -> Result<SearchOutcome, OracleError> {
    let m = g.m();
    if forward.len() != m {
        return Err(OracleError::LengthMismatch);
    }
    if m > limits.max_edges && !limits.force {
        return Err(OracleError::TooLarge {
            m,
            cap: limits.max_edges,
        });
    }
    let searcher = Searcher {
        g,
        forward,
        labels: vec![0; m],
        used: 0,
        sums: vec![0; g.n()],
        remaining: (0..g.n() as u32).map(|v| g.degree(v)).collect(),
        completed: HashMap::new(),
        nodes: 0,
        node_limit: limits.node_limit,
        exhausted: false,
    };
    Ok(searcher.run())
}

/// First witness over all orientations and labelings. Orientations are
/// enumerated as bitmasks ascending, bit j clear meaning edge j keeps its
/// stored direction.
pub fn search_orientation_and_labeling(
    g: &Graph,
    limits: SearchLimits,
) -> Result<FullSearchOutcome, OracleError> {
    let m = g.m();
    if m > limits.max_edges && !limits.force {
        return Err(OracleError::TooLarge {
            m,
            cap: limits.max_edges,
        });
    }
    let inner = SearchLimits {
        max_edges: limits.max_edges,
        force: true,
        node_limit: limits.node_limit,
    };
    let mut hit_limit = false;
    for mask in 0u64..(1u64 << m) {
        let forward: Vec<bool> = (0..m).map(|j| mask >> j & 1 == 0).collect();
        match search_labeling(g, &forward, inner)? {
            SearchOutcome::Found(labels) => {
                return Ok(FullSearchOutcome::Found { forward, labels })
            }
            SearchOutcome::NotFound => {}
            SearchOutcome::Exhausted => hit_limit = true,
        }
    }
    Ok(if hit_limit {
        FullSearchOutcome::Exhausted
    } else {
        FullSearchOutcome::NotFound
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::{vertex_sums, Graph, OrientationAndLabeling};

    fn triangle() -> Graph {
        Graph::from_edge_list(&[(0, 1), (1, 2), (0, 2)], 3).unwrap()
    }

    #[test]
    fn triangle_with_good_orientation() {
        // Arcs 0->1, 2->1, 2->0.
        let g = triangle();
        let forward = vec![true, false, false];
        let out = search_labeling(&g, &forward, SearchLimits::labeling_default()).unwrap();
        let SearchOutcome::Found(labels) = out else {
            panic!("expected a witness");
        };
        let ol = OrientationAndLabeling {
            forward,
            label: labels,
        };
        assert!(vertex_sums(&g, &ol).unwrap().distinct);
    }

    #[test]
    fn directed_triangle_has_no_labeling() {
        // 0->1, 1->2, 2->0: every labeling repeats a sum.
        let g = triangle();
        let forward = vec![true, true, false];
        assert_eq!(
            search_labeling(&g, &forward, SearchLimits::labeling_default()).unwrap(),
            SearchOutcome::NotFound
        );
    }

    #[test]
    fn empty_graph_is_trivially_labeled() {
        let g = Graph::from_edge_list(&[], 0).unwrap();
        assert_eq!(
            search_labeling(&g, &[], SearchLimits::labeling_default()).unwrap(),
            SearchOutcome::Found(vec![])
        );
    }

    #[test]
    fn two_isolated_vertices_collide() {
        let g = Graph::from_edge_list(&[], 2).unwrap();
        assert_eq!(
            search_labeling(&g, &[], SearchLimits::labeling_default()).unwrap(),
            SearchOutcome::NotFound
        );
    }

    #[test]
    fn size_cap_enforced() {
        let g = generators::complete(6).unwrap();
        let forward = vec![true; g.m()];
        assert_eq!(
            search_labeling(&g, &forward, SearchLimits::labeling_default()).unwrap_err(),
            OracleError::TooLarge { m: 15, cap: 10 }
        );
        // A directed cycle never yields a witness, so a tiny node limit
        // halts enumeration early.
        let c3 = triangle();
        let mut limits = SearchLimits::labeling_default();
        limits.node_limit = 2;
        assert_eq!(
            search_labeling(&c3, &[true, true, false], limits).unwrap(),
            SearchOutcome::Exhausted
        );
    }

    #[test]
    fn small_graphs_admit_witnesses() {
        let single_edge = Graph::from_edge_list(&[(0, 1)], 2).unwrap();
        let c3 = generators::circulant(3, &[1]).unwrap();
        let c4 = generators::circulant(4, &[1]).unwrap();
        for g in [&single_edge, &c3, &c4] {
            let out = search_orientation_and_labeling(g, SearchLimits::full_default()).unwrap();
            let FullSearchOutcome::Found { forward, labels } = out else {
                panic!("expected a witness for m = {}", g.m());
            };
            let ol = OrientationAndLabeling {
                forward,
                label: labels,
            };
            assert!(vertex_sums(g, &ol).unwrap().distinct);
        }
    }
}
