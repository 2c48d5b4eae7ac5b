//! Expansion of an Euler tour into a cycle with one real copy per vertex,
//! an anchor of four consecutive positions (real, real, imaginary, real),
//! and the decomposition into good paths.

use thiserror::Error;

use crate::euler::ClosedWalk;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpansionError {
    #[error("component is {0}-regular; the expansion needs degree 2d with d >= 2")]
    UnsupportedDegree(usize),
    #[error("internal consistency failure: {0}")]
    Inconsistent(&'static str),
}

/// The Euler tour viewed as a cyclic sequence of length m. Position p
/// carries original vertex `vertex_at[p]`; arc k runs between positions
/// k and (k + 1) mod m and traverses graph edge `edge_at[k]`.
#[derive(Debug, Clone)]
pub struct ExpandedCycle {
    pub vertex_at: Vec<u32>,
    pub edge_at: Vec<usize>,
    /// Exactly one real position per original vertex.
    pub real: Vec<bool>,
    /// Four consecutive positions (pa, pb, pc, pd): pa, pb, pd real, pc
    /// imaginary.
    pub anchor: (usize, usize, usize, usize),
    /// Real positions in cyclic order starting at pb; entry l - 1 is the
    /// position of the l-th real vertex.
    pub real_order: Vec<usize>,
    /// Good paths between consecutive real vertices, one per l in
    /// 1..=n-1: (first arc index, arc count).
    pub paths: Vec<(usize, usize)>,
    /// Arc from the last real vertex back to the first (single arc).
    pub closing_arc: usize,
}

impl ExpandedCycle {
    /// Cycle length m (also the component's edge count).
    pub fn len(&self) -> usize {
        self.vertex_at.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_at.is_empty()
    }

    /// Number of real vertices (the component's vertex count).
    pub fn real_count(&self) -> usize {
        self.real_order.len()
    }

    /// Arc indices of good path `l` (1-based), in cycle-forward order.
    pub fn path_arcs(&self, l: usize) -> impl Iterator<Item = usize> + '_ {
        let (start, count) = self.paths[l - 1];
        let m = self.len();
        (0..count).map(move |k| (start + k) % m)
    }

    /// The two arcs meeting at position `p`: (entering along the cycle,
    /// leaving along the cycle).
    pub fn arcs_at(&self, p: usize) -> (usize, usize) {
        let m = self.len();
        ((p + m - 1) % m, p)
    }
}

/// Pick the anchor positions per the five-consecutive-vertices rule.
pub fn select_anchor(walk: &ClosedWalk) -> Result<(usize, usize, usize, usize), ExpansionError> {
    let m = walk.len();
    let distinct = {
        let mut vs: Vec<u32> = walk.visits[..m].to_vec();
        vs.sort_unstable();
        vs.dedup();
        vs.len()
    };
    if distinct == 0 {
        return Err(ExpansionError::UnsupportedDegree(0));
    }
    let d = m / distinct;
    if d < 2 {
        return Err(ExpansionError::UnsupportedDegree(2 * d));
    }
    let x = |i: usize| walk.visits[i % m];
    // Five consecutive vertices x1..x5 from the start of the tour. If
    // x1 != x4 the anchor is (x1, x2, x3, x4) with x3 imaginary; if
    // x1 = x4 (x1 x2 x3 is a triangle) it shifts one step.
    if x(0) != x(3) {
        Ok((0, 1, 2, 3))
    } else {
        Ok((1, 2, 3, 4))
    }
}

/// Choose real copies and derive naming and good paths. Real copies: the
/// anchor's a, b, d vertices at their anchor positions; every other vertex
/// at its first occurrence scanning cyclically forward from pb, skipping pc.
pub fn expand(
    walk: &ClosedWalk,
    anchor: (usize, usize, usize, usize),
) -> Result<ExpandedCycle, ExpansionError> {
    let m = walk.len();
    let vertex_at: Vec<u32> = walk.visits[..m].to_vec();
    let edge_at = walk.edge_of_step.clone();
    let (pa, pb, pc, pd) = anchor;
    let (va, vb, vc, vd) = (vertex_at[pa], vertex_at[pb], vertex_at[pc], vertex_at[pd]);
    if va == vb || va == vd || vb == vd || [va, vb, vd].contains(&vc) {
        return Err(ExpansionError::Inconsistent("anchor vertices not distinct"));
    }

    let n_total = vertex_at.iter().map(|&v| v as usize).max().unwrap_or(0) + 1;
    let mut has_real = vec![false; n_total];
    let mut real = vec![false; m];
    for (&p, &v) in [pa, pb, pd].iter().zip([va, vb, vd].iter()) {
        real[p] = true;
        has_real[v as usize] = true;
    }
    for off in 0..m {
        let p = (pb + off) % m;
        if p == pc {
            continue;
        }
        let v = vertex_at[p] as usize;
        if v == va as usize || v == vb as usize || v == vd as usize {
            continue;
        }
        if !has_real[v] {
            has_real[v] = true;
            real[p] = true;
        }
    }

    let real_order: Vec<usize> = (0..m)
        .map(|off| (pb + off) % m)
        .filter(|&p| real[p])
        .collect();
    let n = real_order.len();
    if real_order.first() != Some(&pb)
        || real_order.get(1) != Some(&pd)
        || real_order.last() != Some(&pa)
    {
        return Err(ExpansionError::Inconsistent("anchor naming out of order"));
    }
    let mut paths = Vec::with_capacity(n - 1);
    for l in 0..n - 1 {
        let start = real_order[l];
        let end = real_order[l + 1];
        let count = (end + m - start) % m;
        paths.push((start, count));
    }
    if paths[0].1 != 2 {
        return Err(ExpansionError::Inconsistent(
            "first good path must have 2 arcs",
        ));
    }
    let closing_arc = pa;
    if (pb + m - pa) % m != 1 {
        return Err(ExpansionError::Inconsistent(
            "closing edge must be a single arc",
        ));
    }
    Ok(ExpandedCycle {
        vertex_at,
        edge_at,
        real,
        anchor,
        real_order,
        paths,
        closing_arc,
    })
}

#[cfg(test)]
pub(crate) fn check_invariants(ec: &ExpandedCycle) {
    let m = ec.len();
    let n = ec.real_count();
    assert_eq!(ec.real.iter().filter(|&&r| r).count(), n);
    // One real position per original vertex.
    let mut seen = std::collections::BTreeMap::new();
    for p in 0..m {
        if ec.real[p] {
            assert!(seen.insert(ec.vertex_at[p], p).is_none());
        }
    }
    assert_eq!(seen.len(), n);
    let (pa, pb, pc, pd) = ec.anchor;
    assert!(ec.real[pa] && ec.real[pb] && ec.real[pd] && !ec.real[pc]);
    assert_eq!((pb + m - pa) % m, 1);
    assert_eq!((pc + m - pb) % m, 1);
    assert_eq!((pd + m - pc) % m, 1);
    // Arcs of good paths plus the closing arc partition the cycle.
    let total: usize = ec.paths.iter().map(|&(_, c)| c).sum();
    assert_eq!(total + 1, m);
    // Interior positions of every good path are imaginary.
    for l in 1..n {
        let (start, count) = ec.paths[l - 1];
        for k in 1..count {
            assert!(!ec.real[(start + k) % m]);
        }
    }
}
