//! Degree-parity and pair-distinguishability predicates.
//!
//! A pair `{u, v}` is *reducible* when no third vertex is adjacent to exactly
//! one of them, i.e. `N(u) \ {u, v} == N(v) \ {u, v}`. A graph is
//! irreducibly odd (even) when every degree is odd (even) and no pair is
//! reducible. The empty graph satisfies both vacuously.

use serde::{Deserialize, Serialize};

use crate::bitset::{bit, bits};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairVerdict {
    pub u: usize,
    pub v: usize,
    /// Least vertex adjacent to exactly one of `u`, `v`.
    pub distinguisher: Option<usize>,
    pub reducible: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    #[inline]
    pub fn matches(self, degree: usize) -> bool {
        match self {
            Parity::Odd => degree % 2 == 1,
            Parity::Even => degree.is_multiple_of(2),
        }
    }
}

/// Mask of vertices adjacent to exactly one of `u`, `v`, excluding both.
#[inline]
fn distinguishers(g: &Graph, u: usize, v: usize) -> u64 {
    (g.neighbors(u) ^ g.neighbors(v)) & !(bit(u) | bit(v))
}

#[inline]
pub(crate) fn pair_reducible(g: &Graph, u: usize, v: usize) -> bool {
    distinguishers(g, u, v) == 0
}

pub fn is_odd(g: &Graph) -> bool {
    all_degrees(g, Parity::Odd)
}

pub fn is_even(g: &Graph) -> bool {
    all_degrees(g, Parity::Even)
}

fn all_degrees(g: &Graph, parity: Parity) -> bool {
    (0..g.n()).all(|v| parity.matches(g.degree(v)))
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::InvalidArgument(format!(
            "vertex {v} out of range for {} vertices",
            g.n()
        )));
    }
    Ok(())
}

pub fn check_pair(g: &Graph, u: usize, v: usize) -> Result<PairVerdict> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(Error::InvalidArgument(format!("pair ({u}, {v}) repeats a vertex")));
    }
    let d = distinguishers(g, u, v);
    Ok(PairVerdict {
        u,
        v,
        distinguisher: (d != 0).then(|| d.trailing_zeros() as usize),
        reducible: d == 0,
    })
}

/// True iff no pair of vertices is reducible.
pub fn is_irreducible(g: &Graph) -> bool {
    let n = g.n();
    (0..n).all(|u| (u + 1..n).all(|v| !pair_reducible(g, u, v)))
}

pub fn is_irreducibly_odd(g: &Graph) -> bool {
    is_odd(g) && is_irreducible(g)
}

pub fn is_irreducibly_even(g: &Graph) -> bool {
    is_even(g) && is_irreducible(g)
}

pub fn is_irreducible_with_parity(g: &Graph, parity: Parity) -> bool {
    all_degrees(g, parity) && is_irreducible(g)
}

/// Odd degree at `v` and every pair `{v, u}` distinguishable.
pub fn locally_irreducibly_odd(g: &Graph, v: usize) -> Result<bool> {
    check_vertex(g, v)?;
    Ok(g.degree(v) % 2 == 1 && (0..g.n()).all(|u| u == v || !pair_reducible(g, u, v)))
}

/// All reducible pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn reducible_pairs(g: &Graph) -> Vec<PairVerdict> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if pair_reducible(g, u, v) {
                out.push(PairVerdict { u, v, distinguisher: None, reducible: true });
            }
        }
    }
    out
}

/// True if some vertex is adjacent to two or more degree-1 vertices.
pub fn has_double_spike(g: &Graph) -> bool {
    let spikes = (0..g.n())
        .filter(|&v| g.degree(v) == 1)
        .fold(0u64, |acc, v| acc | bit(v));
    (0..g.n()).any(|v| (g.neighbors(v) & spikes).count_ones() >= 2)
}

/// Mask of vertices with even degree.
pub fn even_vertices(g: &Graph) -> u64 {
    (0..g.n()).filter(|&v| g.degree(v).is_multiple_of(2)).fold(0, |acc, v| acc | bit(v))
}

/// Degree-1 neighbors of `v`.
pub fn spikes_at(g: &Graph, v: usize) -> Vec<usize> {
    bits(g.neighbors(v)).filter(|&w| g.degree(w) == 1).collect()
}
