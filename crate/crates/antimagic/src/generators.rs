//! Test-instance generators: circulants, complete graphs, random regular
//! graphs (configuration model), and disjoint unions.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{decompose, Graph};

const DEFAULT_REJECTION_LIMIT: usize = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("circulant needs n >= 3, got {0}")]
    TooSmall(usize),
    #[error("offset {0} out of range 1..=n/2 for n = {1}")]
    OffsetOutOfRange(usize, usize),
    #[error("duplicate offset {0}")]
    DuplicateOffset(usize),
    #[error("no r-regular simple graph: need r < n, got r = {r}, n = {n}")]
    DegreeTooLarge { r: usize, n: usize },
    #[error("no r-regular graph on n vertices: n*r is odd (n = {n}, r = {r})")]
    ParityInfeasible { n: usize, r: usize },
    #[error("rejection limit of {0} attempts exceeded")]
    RejectionLimit(usize),
    #[error("size range {lo}..={hi} contains no feasible {parity} size above {min}")]
    EmptySizeRange {
        lo: usize,
        hi: usize,
        parity: &'static str,
        min: usize,
    },
    #[error("paper family needs d >= 2, got {0}")]
    DegreeHalfTooSmall(usize),
}

/// Circulant graph: vertex i adjacent to i +- o (mod n) for each offset.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::TooSmall(n));
    }
    let mut seen = BTreeSet::new();
    for &o in offsets {
        if o < 1 || o > n / 2 {
            return Err(GenError::OffsetOutOfRange(o, n));
        }
        if !seen.insert(o) {
            return Err(GenError::DuplicateOffset(o));
        }
    }
    let mut edges = BTreeSet::new();
    for i in 0..n {
        for &o in offsets {
            let j = (i + o) % n;
            let (a, b) = (i.min(j) as u32, i.max(j) as u32);
            edges.insert((a, b));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Ok(Graph::from_edge_list(&edges, n).expect("circulant edges are simple"))
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::TooSmall(n));
    }
    circulant(n, &(1..=n / 2).collect::<Vec<_>>())
}

/// Random r-regular simple graph via stub pairing: each round shuffles the
/// remaining stubs and keeps the legal pairs, re-queueing the rest; the
/// whole sample restarts when no legal pairing of the leftovers can exist.
/// Deterministic for a fixed seed.
pub fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_regular_with(n, r, &mut rng, DEFAULT_REJECTION_LIMIT)
}

pub fn random_regular_with(
    n: usize,
    r: usize,
    rng: &mut impl Rng,
    rejection_limit: usize,
) -> Result<Graph, GenError> {
    if r >= n {
        return Err(GenError::DegreeTooLarge { r, n });
    }
    if !(n * r).is_multiple_of(2) {
        return Err(GenError::ParityInfeasible { n, r });
    }
    for _ in 0..rejection_limit {
        if let Some(edges) = try_pairing(n, r, rng) {
            return Ok(Graph::from_edge_list(&edges, n).expect("pairing checked simple"));
        }
    }
    Err(GenError::RejectionLimit(rejection_limit))
}

fn try_pairing(n: usize, r: usize, rng: &mut impl Rng) -> Option<Vec<(u32, u32)>> {
    let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut stubs: Vec<u32> = (0..n as u32)
        .flat_map(|v| std::iter::repeat_n(v, r))
        .collect();
    while !stubs.is_empty() {
        stubs.shuffle(rng);
        let mut leftover = Vec::new();
        for pair in stubs.chunks_exact(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if a == b || !edges.insert((a, b)) {
                leftover.push(a);
                leftover.push(b);
            }
        }
        if leftover.len() == stubs.len() {
            // No progress; restart unless some legal pair still exists.
            let mut distinct = leftover.clone();
            distinct.sort_unstable();
            distinct.dedup();
            let feasible = distinct.iter().enumerate().any(|(i, &a)| {
                distinct[i + 1..]
                    .iter()
                    .any(|&b| !edges.contains(&(a.min(b), a.max(b))))
            });
            if !feasible {
                return None;
            }
        }
        stubs = leftover;
    }
    Some(edges.into_iter().collect())
}

/// Disjoint union; vertex ids of part k are shifted by the total size of the
/// earlier parts.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut edges = Vec::new();
    let mut offset = 0u32;
    for g in parts {
        for &(u, v) in g.edges() {
            edges.push((u + offset, v + offset));
        }
        offset += g.n() as u32;
    }
    Graph::from_edge_list(&edges, offset as usize).expect("shifted union stays simple")
}

/// Disjoint union of `odd` connected 2d-regular components on an odd number
/// of vertices and `even` components on an even number, sizes drawn from
/// `lo..=hi`. Matches the component structure the construction targets when
/// `odd >= 3`.
pub fn paper_family(
    odd: usize,
    even: usize,
    d: usize,
    (lo, hi): (usize, usize),
    seed: u64,
) -> Result<Graph, GenError> {
    if d < 2 {
        return Err(GenError::DegreeHalfTooSmall(d));
    }
    let r = 2 * d;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parts = Vec::with_capacity(odd + even);
    for i in 0..odd + even {
        let want_odd = i < odd;
        let parity = if want_odd { "odd" } else { "even" };
        let sizes: Vec<usize> = (lo.max(r + 1)..=hi)
            .filter(|&s| (s % 2 == 1) == want_odd)
            .collect();
        if sizes.is_empty() {
            return Err(GenError::EmptySizeRange {
                lo,
                hi,
                parity,
                min: r + 1,
            });
        }
        let size = sizes[rng.random_range(0..sizes.len())];
        parts.push(connected_regular(size, r, &mut rng)?);
    }
    Ok(disjoint_union(&parts))
}

fn connected_regular(n: usize, r: usize, rng: &mut impl Rng) -> Result<Graph, GenError> {
    for _ in 0..DEFAULT_REJECTION_LIMIT {
        let g = random_regular_with(n, r, rng, DEFAULT_REJECTION_LIMIT)?;
        if decompose(&g).component_count() == 1 {
            return Ok(g);
        }
    }
    Err(GenError::RejectionLimit(DEFAULT_REJECTION_LIMIT))
}
