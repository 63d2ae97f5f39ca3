//! Morningstar witnesses: a shortest cycle `v_1..v_k` with pairwise distinct
//! off-cycle neighbors `w_i ~ v_i`.
//!
//! Choosing the `w_i` is a bipartite matching from cycle positions to
//! off-cycle vertices; a perfect matching is exactly a witness. This covers
//! every way the candidate neighbors of different positions can collide.

use serde::{Deserialize, Serialize};

use super::{girth, is_cycle, maximum_matching};
use crate::bitset::bit;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorningstarWitness {
    pub cycle: Vec<usize>,
    pub spikes: Vec<usize>,
}

impl MorningstarWitness {
    /// Checks the witness against `g`: the cycle is a shortest cycle and the
    /// spikes are distinct, off the cycle and attached position by position.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let k = self.cycle.len();
        if !is_cycle(g, &self.cycle) || girth(g) != Some(k) || self.spikes.len() != k {
            return false;
        }
        let on_cycle = self.cycle.iter().fold(0u64, |m, &v| m | bit(v));
        let mut seen = 0u64;
        for (&v, &w) in self.cycle.iter().zip(&self.spikes) {
            if w >= g.n() || on_cycle & bit(w) != 0 || seen & bit(w) != 0 || !g.has_edge(v, w) {
                return false;
            }
            seen |= bit(w);
        }
        true
    }
}

/// Extends `cycle`, which must be a shortest cycle of `g`, to a morningstar
/// subgraph. `Ok(None)` means no distinct choice of spikes exists.
pub fn find_morningstar(g: &Graph, cycle: &[usize]) -> Result<Option<MorningstarWitness>> {
    if !is_cycle(g, cycle) {
        return Err(Error::InvalidArgument(format!("{cycle:?} is not a cycle of the graph")));
    }
    if girth(g) != Some(cycle.len()) {
        return Err(Error::InvalidArgument(format!(
            "cycle of length {} is not a shortest cycle",
            cycle.len()
        )));
    }
    let on_cycle = cycle.iter().fold(0u64, |m, &v| m | bit(v));
    let candidates: Vec<u64> = cycle.iter().map(|&v| g.neighbors(v) & !on_cycle).collect();
    let matched = maximum_matching(&candidates);
    let spikes: Option<Vec<usize>> = matched.into_iter().collect();
    Ok(spikes.map(|spikes| MorningstarWitness { cycle: cycle.to_vec(), spikes }))
}
