//! Arc labeling of the oriented cycles: seed each component's closing edge
//! and first good path, then grow outward from the labeled edge of minimum
//! label, handing each good path a batch of consecutive values increasing
//! along its direction. Odd components share the pool 1..=N_s; even
//! components then consume N_s+1..=m one component at a time.

use thiserror::Error;

use crate::graph::{ComponentDecomposition, Graph, OrientationAndLabeling};
use crate::orientation::{OrientedCycle, Parity};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelError {
    #[error("cycle list does not match the decomposition (count or parity)")]
    Mismatch,
    #[error("label pool exhausted out of order")]
    PoolOverflow,
}

#[derive(Debug, Clone)]
pub struct LabeledCycle {
    pub oriented: OrientedCycle,
    /// Label per arc, 1-based.
    pub arc_label: Vec<u32>,
}

impl LabeledCycle {
    /// Labels seen at position `p`, ascending.
    pub fn pair_at(&self, p: usize) -> (u32, u32) {
        let (a, b) = self.oriented.expansion.arcs_at(p);
        let (x, y) = (self.arc_label[a], self.arc_label[b]);
        (x.min(y), x.max(y))
    }

    /// Vertex sum of position `p` in the oriented cycle: entering label
    /// minus leaving label.
    pub fn position_sum(&self, p: usize) -> i64 {
        let (arc_in, arc_out) = self.oriented.expansion.arcs_at(p);
        let mut s = 0i64;
        // arc_in enters p when directed along the cycle; arc_out enters p
        // when directed against it.
        for (arc, enters) in [
            (arc_in, self.oriented.arc_forward[arc_in]),
            (arc_out, !self.oriented.arc_forward[arc_out]),
        ] {
            let l = self.arc_label[arc] as i64;
            s += if enters { l } else { -l };
        }
        s
    }
}

#[derive(Debug)]
pub struct LabelingResult {
    pub cycles: Vec<LabeledCycle>,
    pub ol: OrientationAndLabeling,
    /// Diagnostics emitted during labeling (e.g. frontier tie-breaks).
    pub notes: Vec<String>,
}

struct Work {
    oriented: OrientedCycle,
    arc_label: Vec<u32>,
    /// Unit of each arc: 0 is the closing edge, l >= 1 is good path P_l.
    arc_unit: Vec<usize>,
    unit_labeled: Vec<bool>,
    /// Real-vertex name index (1-based l) per position, 0 for imaginary.
    name_at: Vec<usize>,
    unlabeled_arcs: usize,
}

impl Work {
    fn new(oriented: OrientedCycle) -> Work {
        let ec = &oriented.expansion;
        let m = ec.len();
        let n = ec.real_count();
        let mut arc_unit = vec![usize::MAX; m];
        arc_unit[ec.closing_arc] = 0;
        for l in 1..n {
            for k in ec.path_arcs(l) {
                arc_unit[k] = l;
            }
        }
        let mut name_at = vec![0usize; m];
        for (i, &p) in ec.real_order.iter().enumerate() {
            name_at[p] = i + 1;
        }
        Work {
            arc_label: vec![0; m],
            arc_unit,
            unit_labeled: vec![false; n],
            name_at,
            unlabeled_arcs: m,
            oriented,
        }
    }

    /// Arcs of a unit in the order its direction runs.
    fn unit_arcs_directed(&self, unit: usize) -> Vec<usize> {
        let ec = &self.oriented.expansion;
        if unit == 0 {
            return vec![ec.closing_arc];
        }
        let mut arcs: Vec<usize> = ec.path_arcs(unit).collect();
        if !self.oriented.arc_forward[arcs[0]] {
            arcs.reverse();
        }
        arcs
    }

    fn assign_unit(&mut self, unit: usize, cursor: &mut u32) {
        for k in self.unit_arcs_directed(unit) {
            debug_assert_eq!(self.arc_label[k], 0);
            self.arc_label[k] = *cursor;
            *cursor += 1;
            self.unlabeled_arcs -= 1;
        }
        self.unit_labeled[unit] = true;
    }
}

/// Run the labeling over all cycles, given in decomposition order.
pub fn label_all(
    cycles: Vec<OrientedCycle>,
    decomp: &ComponentDecomposition,
    g: &Graph,
) -> Result<LabelingResult, LabelError> {
    let t = decomp.component_count();
    if cycles.len() != t {
        return Err(LabelError::Mismatch);
    }
    let s = decomp.odd_count;
    for (i, c) in cycles.iter().enumerate() {
        let want = if i < s { Parity::Odd } else { Parity::Even };
        if c.parity != want {
            return Err(LabelError::Mismatch);
        }
    }
    let mut work: Vec<Work> = cycles.into_iter().map(Work::new).collect();
    let mut notes = Vec::new();

    // Seed the odd components: closing edge of component i gets i, the two
    // arcs of its first good path get s + 2i - 1 and s + 2i.
    for (idx, w) in work.iter_mut().enumerate().take(s) {
        let i = (idx + 1) as u32;
        let mut c = i;
        w.assign_unit(0, &mut c);
        let mut c = s as u32 + 2 * i - 1;
        w.assign_unit(1, &mut c);
    }
    let mut cursor = 3 * s as u32 + 1;
    propagate(&mut work[..s], 0, &mut cursor, &mut notes)?;
    if cursor != decomp.edges_before(s) as u32 + 1 {
        return Err(LabelError::PoolOverflow);
    }

    // Even components, one at a time, each consuming its own block.
    for idx in s..t {
        let base = decomp.edges_before(idx) as u32;
        let w = &mut work[idx];
        let mut c = base + 1;
        w.assign_unit(0, &mut c);
        w.assign_unit(1, &mut c);
        cursor = base + 4;
        propagate(&mut work[idx..idx + 1], idx, &mut cursor, &mut notes)?;
        if cursor != decomp.prefix_sums[idx] as u32 + 1 {
            return Err(LabelError::PoolOverflow);
        }
    }

    let labeled: Vec<LabeledCycle> = work
        .into_iter()
        .map(|w| LabeledCycle {
            oriented: w.oriented,
            arc_label: w.arc_label,
        })
        .collect();
    let ol = collect(&labeled, g);
    Ok(LabelingResult {
        cycles: labeled,
        ol,
        notes,
    })
}

/// Smallest frontier label, cycle index, and the directed arcs of the
/// bordering unlabeled path.
type Frontier = (u32, usize, Vec<(usize, usize)>);

/// Grow labeled regions within `set`: repeatedly take the labeled arc of
/// minimum label that borders an unlabeled arc and give the bordering good
/// path the next batch of consecutive values.
fn propagate(
    set: &mut [Work],
    first_index: usize,
    cursor: &mut u32,
    notes: &mut Vec<String>,
) -> Result<(), LabelError> {
    while set.iter().any(|w| w.unlabeled_arcs > 0) {
        let mut best: Option<Frontier> = None;
        for (ci, w) in set.iter().enumerate() {
            let m = w.oriented.expansion.len();
            for k in 0..m {
                let label = w.arc_label[k];
                if label == 0 {
                    continue;
                }
                // Unlabeled neighbours of arc k; the shared position is a
                // real vertex because units are labeled whole.
                let mut units: Vec<(usize, usize)> = Vec::new();
                for (nb, shared) in [((k + m - 1) % m, k), ((k + 1) % m, (k + 1) % m)] {
                    if w.arc_label[nb] == 0 {
                        debug_assert!(w.oriented.expansion.real[shared]);
                        units.push((w.arc_unit[nb], w.name_at[shared]));
                    }
                }
                if units.is_empty() {
                    continue;
                }
                if best.as_ref().is_none_or(|&(bl, _, _)| label < bl) {
                    best = Some((label, ci, units));
                }
            }
        }
        let (label, ci, mut units) = best.ok_or(LabelError::PoolOverflow)?;
        units.sort_by_key(|&(_, name)| name);
        units.dedup();
        if units.len() > 1 {
            notes.push(format!(
                "frontier tie at label {label}: edge borders {} unlabeled paths in component {}; \
                 took the one at the smallest-named real vertex",
                units.len(),
                first_index + ci + 1
            ));
        }
        let unit = units[0].0;
        set[ci].assign_unit(unit, cursor);
    }
    Ok(())
}

fn collect(cycles: &[LabeledCycle], g: &Graph) -> OrientationAndLabeling {
    let m = g.m();
    let mut forward = vec![false; m];
    let mut label = vec![0u32; m];
    for lc in cycles {
        let ec = &lc.oriented.expansion;
        for k in 0..ec.len() {
            let e = ec.edge_at[k];
            let (tail_pos, _) = lc.oriented.arc_endpoints(k);
            let tail = ec.vertex_at[tail_pos];
            forward[e] = tail == g.edge(e).0;
            label[e] = lc.arc_label[k];
        }
    }
    OrientationAndLabeling { forward, label }
}

/// The ordered label pair (x, y), x < y, seen by the real copy of each
/// graph vertex.
pub fn seen_pairs(cycles: &[LabeledCycle], n: usize) -> Vec<(u32, u32)> {
    let mut pairs = vec![(0u32, 0u32); n];
    for lc in cycles {
        let ec = &lc.oriented.expansion;
        for &p in &ec.real_order {
            pairs[ec.vertex_at[p] as usize] = lc.pair_at(p);
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::euler_tour;
    use crate::expansion::{expand, select_anchor};
    use crate::generators;
    use crate::graph::{decompose, vertex_sums};
    use crate::orientation::orient;

    fn run(g: &Graph) -> (LabelingResult, ComponentDecomposition) {
        let decomp = decompose(g);
        let mut cycles = Vec::new();
        for (i, c) in decomp.components.iter().enumerate() {
            let w = euler_tour(g, &c.vertices).unwrap();
            let ec = expand(&w, select_anchor(&w).unwrap()).unwrap();
            let parity = if i < decomp.odd_count {
                Parity::Odd
            } else {
                Parity::Even
            };
            cycles.push(orient(ec, parity));
        }
        (label_all(cycles, &decomp, g).unwrap(), decomp)
    }

    fn three_k5() -> Graph {
        let k5 = generators::complete(5).unwrap();
        generators::disjoint_union(&[k5.clone(), k5.clone(), k5])
    }

    #[test]
    fn odd_seed_labels() {
        let g = three_k5();
        let (res, _) = run(&g);
        let s = 3;
        for (idx, lc) in res.cycles.iter().enumerate() {
            let ec = &lc.oriented.expansion;
            assert_eq!(lc.arc_label[ec.closing_arc], (idx + 1) as u32);
            let mut p1: Vec<u32> = ec.path_arcs(1).map(|k| lc.arc_label[k]).collect();
            p1.sort_unstable();
            let i = (idx + 1) as u32;
            assert_eq!(p1, vec![s + 2 * i - 1, s + 2 * i]);
        }
    }

    #[test]
    fn first_propagation_batch_starts_after_seeds() {
        let g = three_k5();
        let (res, _) = run(&g);
        // The edge labeled 1 is the closing edge of component 1; the path
        // behind it (P_{n-1}) gets the batch starting at 3s + 1 = 10.
        let lc = &res.cycles[0];
        let n = lc.oriented.expansion.real_count();
        let last_path: Vec<u32> = lc
            .oriented
            .expansion
            .path_arcs(n - 1)
            .map(|k| lc.arc_label[k])
            .collect();
        assert_eq!(*last_path.iter().min().unwrap(), 10);
    }

    #[test]
    fn even_component_gets_its_block() {
        let k5 = generators::complete(5).unwrap();
        let even1 = generators::circulant(6, &[1, 2]).unwrap();
        let even2 = generators::circulant(8, &[1, 2]).unwrap();
        let g = generators::disjoint_union(&[k5.clone(), k5.clone(), k5, even1, even2]);
        let (res, decomp) = run(&g);
        assert_eq!(decomp.odd_count, 3);
        for idx in decomp.odd_count..decomp.component_count() {
            let lc = &res.cycles[idx];
            let lo = decomp.edges_before(idx) as u32 + 1;
            let hi = decomp.prefix_sums[idx] as u32;
            let mut labels: Vec<u32> = lc.arc_label.clone();
            labels.sort_unstable();
            assert_eq!(labels, (lo..=hi).collect::<Vec<_>>());
            // Closing edge leads the block, first path follows.
            let ec = &lc.oriented.expansion;
            assert_eq!(lc.arc_label[ec.closing_arc], lo);
            let mut p1: Vec<u32> = ec.path_arcs(1).map(|k| lc.arc_label[k]).collect();
            p1.sort_unstable();
            assert_eq!(p1, vec![lo + 1, lo + 2]);
        }
    }

    #[test]
    fn labels_form_bijection_and_sums_conserve() {
        let g = three_k5();
        let (res, _) = run(&g);
        let report = vertex_sums(&g, &res.ol).unwrap();
        assert_eq!(report.sums.iter().sum::<i64>(), 0);
        assert!(report.distinct);
    }

    #[test]
    fn first_real_vertex_sees_seed_pair() {
        let g = three_k5();
        let (res, decomp) = run(&g);
        let s = decomp.odd_count as u32;
        for (idx, lc) in res.cycles.iter().enumerate() {
            let i = (idx + 1) as u32;
            let p1 = lc.oriented.expansion.real_order[0];
            assert_eq!(lc.pair_at(p1), (i, s + 2 * i - 1));
        }
    }

    #[test]
    fn imaginary_positions_see_consecutive_labels() {
        let g = generators::disjoint_union(&[
            generators::complete(5).unwrap(),
            generators::circulant(7, &[1, 2]).unwrap(),
            generators::circulant(9, &[1, 3]).unwrap(),
        ]);
        let (res, _) = run(&g);
        for lc in &res.cycles {
            let ec = &lc.oriented.expansion;
            for p in 0..ec.len() {
                if !ec.real[p] {
                    let (x, y) = lc.pair_at(p);
                    assert_eq!(y, x + 1, "imaginary position {p}");
                }
            }
        }
    }

    #[test]
    fn every_label_appears_in_two_pairs() {
        let g = three_k5();
        let (res, _) = run(&g);
        let mut count = vec![0usize; g.m() + 1];
        for lc in &res.cycles {
            for p in 0..lc.oriented.expansion.len() {
                let (x, y) = lc.pair_at(p);
                count[x as usize] += 1;
                count[y as usize] += 1;
            }
        }
        assert!(count[1..].iter().all(|&c| c == 2));
    }
}
