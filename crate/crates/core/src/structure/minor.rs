//! Minor containment by backtracking over branch sets.
//!
//! Pattern vertices are placed one at a time, each receiving a connected set
//! of unused host vertices. A placement must touch the set of every already
//! placed pattern neighbor, and must leave enough free boundary for the
//! neighbors still to come. Smaller branch sets are tried first.

use serde::{Deserialize, Serialize};

use crate::bitset::{bit, bits};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest pattern accepted by [`has_minor`].
pub const MAX_PATTERN: usize = 10;
/// Largest host accepted by [`has_minor`].
pub const MAX_HOST: usize = 16;

/// One host vertex set per pattern vertex, indexed by pattern vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub branch_sets: Vec<Vec<usize>>,
}

pub fn has_minor(g: &Graph, pattern: &Graph) -> Result<Option<MinorWitness>> {
    if pattern.n() > MAX_PATTERN || g.n() > MAX_HOST {
        return Err(Error::UnsupportedSize(format!(
            "minor search supports patterns up to {MAX_PATTERN} and hosts up to {MAX_HOST} \
             vertices, got {} and {}",
            pattern.n(),
            g.n()
        )));
    }
    if pattern.n() > g.n() || pattern.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let mut search = Search::new(g, pattern);
    if !search.place(0) {
        return Ok(None);
    }
    let witness = MinorWitness {
        branch_sets: search.sets.iter().map(|&s| bits(s).collect()).collect(),
    };
    debug_assert!(verify_minor_witness(g, pattern, &witness));
    Ok(Some(witness))
}

/// Independent check of a witness: nonempty disjoint connected sets, and a
/// host edge between the sets of every pattern edge.
pub fn verify_minor_witness(g: &Graph, pattern: &Graph, w: &MinorWitness) -> bool {
    if w.branch_sets.len() != pattern.n() {
        return false;
    }
    let mut used = vec![false; g.n()];
    for set in &w.branch_sets {
        if set.is_empty() {
            return false;
        }
        for &v in set {
            if v >= g.n() || used[v] {
                return false;
            }
            used[v] = true;
        }
        if !g.induced_subgraph(set).is_connected() {
            return false;
        }
    }
    pattern.edges().all(|(a, b)| {
        w.branch_sets[a]
            .iter()
            .any(|&x| w.branch_sets[b].iter().any(|&y| g.has_edge(x, y)))
    })
}

struct Search<'a> {
    g: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    sets: Vec<u64>,
    used: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, pattern: &'a Graph) -> Self {
        Search {
            g,
            pattern,
            order: placement_order(pattern),
            sets: vec![0; pattern.n()],
            used: 0,
        }
    }

    fn place(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let q = self.order[i];
        let placed: u64 = self.order[..i].iter().fold(0, |m, &p| m | bit(p));
        let earlier: Vec<usize> = bits(self.pattern.neighbors(q) & placed).collect();
        let later = (self.pattern.neighbors(q) & !placed).count_ones();
        let free = self.g.vertex_mask() & !self.used;
        let remaining = self.order.len() - i - 1;
        let max_size = free.count_ones() as usize - remaining;

        // host vertices adjacent to the first earlier neighbor's set
        let anchor = earlier.first().map(|&r| self.neighborhood(self.sets[r]));

        for size in 1..=max_size {
            let mut candidates = Vec::new();
            connected_subsets(self.g, free, size, &mut |set| {
                candidates.push(set);
            });
            for set in candidates {
                if anchor.is_some_and(|a| a & set == 0) {
                    continue;
                }
                let boundary = self.neighborhood(set);
                if !earlier.iter().all(|&r| boundary & self.sets[r] != 0) {
                    continue;
                }
                if (boundary & free & !set).count_ones() < later {
                    continue;
                }
                self.sets[q] = set;
                self.used |= set;
                if self.place(i + 1) {
                    return true;
                }
                self.used &= !set;
                self.sets[q] = 0;
            }
        }
        false
    }

    fn neighborhood(&self, set: u64) -> u64 {
        bits(set).fold(0, |m, v| m | self.g.neighbors(v)) & !set
    }
}

/// Highest remaining pattern degree first, preferring vertices attached to
/// those already placed so each new set is anchored.
fn placement_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let frontier = bits(placed).fold(0, |m, v| m | pattern.neighbors(v)) & !placed;
        let pool = if frontier != 0 { frontier } else { pattern.vertex_mask() & !placed };
        let next = bits(pool)
            .max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)))
            .expect("pool is nonempty");
        order.push(next);
        placed |= bit(next);
    }
    order
}

/// Every connected subset of `allowed` with `size` vertices, each exactly
/// once, grouped by least vertex in ascending order.
fn connected_subsets(g: &Graph, allowed: u64, size: usize, out: &mut impl FnMut(u64)) {
    for root in bits(allowed) {
        let above = allowed & !((bit(root) << 1).wrapping_sub(1));
        let ext = g.neighbors(root) & above;
        grow(g, bit(root), ext, above, size, out);
    }
}

fn grow(g: &Graph, set: u64, mut ext: u64, above: u64, size: usize, out: &mut impl FnMut(u64)) {
    if set.count_ones() as usize == size {
        out(set);
        return;
    }
    let closed = bits(set).fold(set, |m, v| m | g.neighbors(v));
    while ext != 0 {
        let w = ext.trailing_zeros() as usize;
        ext &= ext - 1;
        let exclusive = g.neighbors(w) & above & !closed;
        grow(g, set | bit(w), ext | exclusive, above, size, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete, cycle, morningstar, path, petersen, triskelion};

    fn count_subsets(g: &Graph, size: usize) -> usize {
        let mut c = 0;
        connected_subsets(g, g.vertex_mask(), size, &mut |_| c += 1);
        c
    }

    fn brute_connected_subsets(g: &Graph, size: usize) -> usize {
        (1u64..1 << g.n())
            .filter(|m| m.count_ones() as usize == size)
            .filter(|&m| g.induced_subgraph(&bits(m).collect::<Vec<_>>()).is_connected())
            .count()
    }

    #[test]
    fn subset_enumeration_matches_brute_force() {
        for g in [petersen(), triskelion(), cycle(7).unwrap(), complete(5).unwrap()] {
            for size in 1..=g.n() {
                assert_eq!(count_subsets(&g, size), brute_connected_subsets(&g, size));
            }
        }
    }

    #[test]
    fn morningstar_chain() {
        let t = triskelion();
        let m4 = morningstar(4).unwrap();
        let m5 = morningstar(5).unwrap();
        let m6 = morningstar(6).unwrap();
        for (host, pat) in [(&m4, &t), (&m5, &m4), (&m6, &m5), (&m6, &t)] {
            let w = has_minor(host, pat).unwrap().expect("minor exists");
            assert!(verify_minor_witness(host, pat, &w));
        }
    }

    #[test]
    fn too_small_hosts() {
        assert_eq!(has_minor(&complete(4).unwrap(), &triskelion()).unwrap(), None);
        // a path has no cycle, so no triangle minor
        assert_eq!(has_minor(&path(8).unwrap(), &cycle(3).unwrap()).unwrap(), None);
    }

    #[test]
    fn size_limits() {
        let big = Graph::new(17);
        assert!(matches!(has_minor(&big, &triskelion()), Err(Error::UnsupportedSize(_))));
        let m6 = morningstar(6).unwrap();
        assert!(matches!(has_minor(&m6, &m6), Err(Error::UnsupportedSize(_))));
    }

    #[test]
    fn petersen_has_k5_but_not_k6() {
        assert!(has_minor(&petersen(), &complete(5).unwrap()).unwrap().is_some());
        assert!(has_minor(&petersen(), &complete(6).unwrap()).unwrap().is_none());
    }

    #[test]
    fn empty_pattern() {
        let w = has_minor(&triskelion(), &Graph::new(0)).unwrap().unwrap();
        assert!(w.branch_sets.is_empty());
    }

    #[test]
    fn verifier_rejects_bad_witnesses() {
        let t = triskelion();
        let k2 = complete(2).unwrap();
        let ok = MinorWitness { branch_sets: vec![vec![0], vec![1]] };
        assert!(verify_minor_witness(&t, &k2, &ok));
        let overlap = MinorWitness { branch_sets: vec![vec![0], vec![0]] };
        assert!(!verify_minor_witness(&t, &k2, &overlap));
        let disconnected = MinorWitness { branch_sets: vec![vec![3, 4], vec![0]] };
        assert!(!verify_minor_witness(&t, &k2, &disconnected));
        let no_edge = MinorWitness { branch_sets: vec![vec![3], vec![4]] };
        assert!(!verify_minor_witness(&t, &k2, &no_edge));
        let empty = MinorWitness { branch_sets: vec![vec![], vec![0]] };
        assert!(!verify_minor_witness(&t, &k2, &empty));
    }
}
