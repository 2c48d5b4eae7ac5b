//! Orientation of an expanded cycle: the closing edge runs from the last
//! real vertex to the first, and good paths alternate direction with the
//! parity of their index so that real vertices get outdegree 0 or 2
//! (except the first real vertex of an odd component, which gets 1).

use crate::expansion::ExpandedCycle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// An expanded cycle together with per-arc directions; `arc_forward[k]`
/// means arc k runs from position k to position k + 1 along the cycle.
#[derive(Debug, Clone)]
pub struct OrientedCycle {
    pub expansion: ExpandedCycle,
    pub arc_forward: Vec<bool>,
    pub parity: Parity,
}

pub fn orient(expansion: ExpandedCycle, parity: Parity) -> OrientedCycle {
    let m = expansion.len();
    let n = expansion.real_count();
    let mut arc_forward = vec![false; m];
    // Closing edge: last real vertex -> first. Its position immediately
    // precedes pb, so forward along the cycle.
    arc_forward[expansion.closing_arc] = true;
    for l in 1..n {
        let along = match parity {
            Parity::Odd => l % 2 == 1,
            Parity::Even => l % 2 == 0,
        };
        for k in expansion.path_arcs(l) {
            arc_forward[k] = along;
        }
    }
    OrientedCycle {
        expansion,
        arc_forward,
        parity,
    }
}

impl OrientedCycle {
    /// Outdegree of position `p` within the cycle.
    pub fn outdegree(&self, p: usize) -> usize {
        let (arc_in, arc_out) = self.expansion.arcs_at(p);
        let mut out = 0;
        if !self.arc_forward[arc_in] {
            out += 1;
        }
        if self.arc_forward[arc_out] {
            out += 1;
        }
        out
    }

    /// Tail and head positions of arc `k`.
    pub fn arc_endpoints(&self, k: usize) -> (usize, usize) {
        let m = self.expansion.len();
        if self.arc_forward[k] {
            (k, (k + 1) % m)
        } else {
            ((k + 1) % m, k)
        }
    }
}
