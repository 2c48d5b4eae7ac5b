//! Edge-list text format and DOT export.
//!
//! Edge lists hold one edge per line, `u v`, whitespace separated; lines
//! starting with `#` are ignored. An optional `n <count>` header fixes the
//! vertex count, otherwise ids are compacted and the vertex count is the
//! number of distinct ids (max id + 1 when ids are already dense).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, GraphError, OrientationAndLabeling};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IoError {
    #[error("line {0}: expected two vertex ids, got {1:?}")]
    BadLine(usize, String),
    #[error("line {0}: bad integer {1:?}")]
    BadInteger(usize, String),
    #[error("line {0}: vertex id {1} not below declared count {2}")]
    IdAboveHeader(usize, u64, usize),
    #[error("duplicate header line {0}")]
    DuplicateHeader(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parse an edge list and build the graph, recording how input ids were
/// mapped onto dense ones.
pub fn load_graph(text: &str) -> Result<(Graph, BTreeMap<String, u32>), IoError> {
    let mut header: Option<usize> = None;
    let mut raw: Vec<(u64, u64)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if header.is_some() {
                return Err(IoError::DuplicateHeader(lineno));
            }
            if fields.len() != 2 {
                return Err(IoError::BadLine(lineno, line.to_string()));
            }
            header = Some(parse_int(fields[1], lineno)? as usize);
            continue;
        }
        if fields.len() != 2 {
            return Err(IoError::BadLine(lineno, line.to_string()));
        }
        let u = parse_int(fields[0], lineno)?;
        let v = parse_int(fields[1], lineno)?;
        if let Some(n) = header {
            for &x in &[u, v] {
                if x as usize >= n {
                    return Err(IoError::IdAboveHeader(lineno, x, n));
                }
            }
        }
        raw.push((u, v));
    }
    let (n, map) = match header {
        Some(n) => {
            // Declared count: ids are taken as already dense.
            let map = raw
                .iter()
                .flat_map(|&(u, v)| [u, v])
                .map(|x| (x.to_string(), x as u32))
                .collect();
            (n, map)
        }
        None => {
            let mut ids: Vec<u64> = raw.iter().flat_map(|&(u, v)| [u, v]).collect();
            ids.sort_unstable();
            ids.dedup();
            let map: BTreeMap<String, u32> = ids
                .iter()
                .enumerate()
                .map(|(i, &x)| (x.to_string(), i as u32))
                .collect();
            (ids.len(), map)
        }
    };
    let lookup = |x: u64| -> u32 {
        match header {
            Some(_) => x as u32,
            None => map[&x.to_string()],
        }
    };
    let pairs: Vec<(u32, u32)> = raw.iter().map(|&(u, v)| (lookup(u), lookup(v))).collect();
    let g = Graph::from_edge_list(&pairs, n)?;
    Ok((g, map))
}

fn parse_int(field: &str, lineno: usize) -> Result<u64, IoError> {
    field
        .parse()
        .map_err(|_| IoError::BadInteger(lineno, field.to_string()))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("n {}\n", g.n()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// DOT text for the oriented labeled graph: arcs carry labels, vertices
/// carry sums.
pub fn export_dot(g: &Graph, ol: &OrientationAndLabeling, sums: &[i64]) -> String {
    let mut out = String::from("digraph antimagic {\n");
    for (v, sum) in sums.iter().enumerate().take(g.n()) {
        out.push_str(&format!("  {v} [label=\"{v} (S={sum})\"];\n"));
    }
    for idx in 0..g.m() {
        let (tail, head) = ol.arc(g, idx);
        out.push_str(&format!(
            "  {tail} -> {head} [label=\"{}\"];\n",
            ol.label[idx]
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_header() {
        let text = "# triangle\nn 3\n0 1\n1 2\n0 2\n";
        let (g, map) = load_graph(text).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert_eq!(map.len(), 3);
    }

    #[test]
    fn remaps_sparse_ids() {
        let text = "100 200\n200 300\n100 300\n";
        let (g, map) = load_graph(text).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(map["100"], 0);
        assert_eq!(map["300"], 2);
    }

    #[test]
    fn header_bounds_ids() {
        let text = "n 2\n0 5\n";
        assert_eq!(
            load_graph(text).unwrap_err(),
            IoError::IdAboveHeader(2, 5, 2)
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(
            load_graph("0 x\n").unwrap_err(),
            IoError::BadInteger(1, _)
        ));
        assert!(matches!(
            load_graph("0 1 2\n").unwrap_err(),
            IoError::BadLine(1, _)
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = crate::generators::complete(5).unwrap();
        let (back, _) = load_graph(&write_edge_list(&g)).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.n(), g.n());
    }

    #[test]
    fn dot_single_arc() {
        let g = Graph::from_edge_list(&[(0, 1)], 2).unwrap();
        let ol = OrientationAndLabeling {
            forward: vec![true],
            label: vec![1],
        };
        let dot = export_dot(&g, &ol, &[-1, 1]);
        assert!(dot.contains("0 -> 1 [label=\"1\"];"));
    }

    #[test]
    fn dot_triangle_counts() {
        let g = Graph::from_edge_list(&[(0, 1), (1, 2), (0, 2)], 3).unwrap();
        let ol = OrientationAndLabeling {
            forward: vec![true, false, false],
            label: vec![1, 2, 3],
        };
        let dot = export_dot(&g, &ol, &[2, 3, -5]);
        assert_eq!(dot.matches(" -> ").count(), 3);
        assert_eq!(dot.matches("(S=").count(), 3);
    }

    #[test]
    fn dot_empty_graph() {
        let g = Graph::from_edge_list(&[], 0).unwrap();
        let ol = OrientationAndLabeling {
            forward: vec![],
            label: vec![],
        };
        assert_eq!(export_dot(&g, &ol, &[]), "digraph antimagic {\n}\n");
    }
}
