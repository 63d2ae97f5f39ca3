//! Canonical labeling by equitable partition refinement and an
//! individualization search tree, with automorphism pruning.
//!
//! Leaves of the search tree are discrete ordered partitions; each gives a
//! relabeled adjacency, and the lexicographically largest one is canonical.
//! Refinement and cell selection depend only on the partition structure, so
//! the set of leaf graphs is a relabeling invariant.

use serde::{Deserialize, Serialize};

use super::{emit_graph6, Graph};
use crate::bitset::{bit, bits};

/// graph6 string of the canonically relabeled graph. Byte-equal iff the
/// source graphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(pub String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (canon, _) = canonical_labeling(g);
    CanonicalForm(emit_graph6(&canon))
}

/// Returns the canonical graph and the labeling `perm` with
/// `g.relabel(&perm) == canon`.
pub fn canonical_labeling(g: &Graph) -> (Graph, Vec<usize>) {
    let mut search = Search::new(g);
    search.run();
    let best = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; g.n()];
    for (pos, &v) in best.order.iter().enumerate() {
        perm[v] = pos;
    }
    let canon = Graph::from_rows(best.rows).expect("relabeling preserves validity");
    (canon, perm)
}

/// Size of the automorphism group, by orbit-stabilizer over the search tree.
///
/// Intended for small graphs; the count is exact but computed by exploring
/// every leaf whose graph equals the canonical one.
pub fn automorphism_count(g: &Graph) -> u64 {
    let mut search = Search::new(g);
    search.prune = false;
    search.run();
    search.best_hits
}

type Cells = Vec<u64>;

struct Leaf {
    rows: Vec<u64>,
    order: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<Leaf>,
    best_hits: u64,
    automorphisms: Vec<Vec<usize>>,
    prune: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search { g, best: None, best_hits: 0, automorphisms: Vec::new(), prune: true }
    }

    fn run(&mut self) {
        let n = self.g.n();
        if n == 0 {
            self.best = Some(Leaf { rows: Vec::new(), order: Vec::new() });
            self.best_hits = 1;
            return;
        }
        let mut cells: Cells = vec![self.g.vertex_mask()];
        refine(self.g, &mut cells);
        let mut path = Vec::new();
        self.descend(cells, &mut path);
    }

    fn descend(&mut self, cells: Cells, path: &mut Vec<usize>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i);
        let Some(target) = target else {
            self.leaf(&cells);
            return;
        };

        let mut tried: u64 = 0;
        for v in bits(cells[target]) {
            if self.prune && tried != 0 && self.equivalent_to_tried(v, tried, path) {
                continue;
            }
            tried |= bit(v);
            let mut next = cells.clone();
            next[target] &= !bit(v);
            next.insert(target, bit(v));
            refine(self.g, &mut next);
            path.push(v);
            self.descend(next, path);
            path.pop();
        }
    }

    /// True if some automorphism fixing `path` pointwise maps `v` into the
    /// orbit of an already tried vertex.
    fn equivalent_to_tried(&self, v: usize, tried: u64, path: &[usize]) -> bool {
        let n = self.g.n();
        let gens: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|a| path.iter().all(|&p| a[p] == p))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in &gens {
            for x in 0..n {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry);
                }
            }
        }
        let rv = find(&mut parent, v);
        bits(tried).any(|t| find(&mut parent, t) == rv)
    }

    fn leaf(&mut self, cells: &Cells) {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0usize; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| bits(self.g.neighbors(v)).fold(0u64, |acc, w| acc | bit(pos[w])))
            .collect();
        match &self.best {
            None => {
                self.best = Some(Leaf { rows, order });
                self.best_hits = 1;
            }
            Some(best) => match rows.cmp(&best.rows) {
                std::cmp::Ordering::Greater => {
                    self.best = Some(Leaf { rows, order });
                    self.best_hits = 1;
                }
                std::cmp::Ordering::Equal => {
                    let mut auto = vec![0; order.len()];
                    for (i, &v) in best.order.iter().enumerate() {
                        auto[v] = order[i];
                    }
                    self.best_hits += 1;
                    if self.prune {
                        self.automorphisms.push(auto);
                    }
                }
                std::cmp::Ordering::Less => {}
            },
        }
    }
}

/// Refines `cells` to the coarsest equitable partition finer than it.
/// Cells split by neighbor count into a splitter cell, smallest count first.
fn refine(g: &Graph, cells: &mut Cells) {
    let mut splitter = 0;
    while splitter < cells.len() {
        let s = cells[splitter];
        let mut split_any = false;
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell.count_ones() > 1 {
                let mut groups: Vec<(u32, u64)> = Vec::new();
                for v in bits(cell) {
                    let c = (g.neighbors(v) & s).count_ones();
                    match groups.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, m)) => *m |= bit(v),
                        None => groups.push((c, bit(v))),
                    }
                }
                if groups.len() > 1 {
                    groups.sort_unstable_by_key(|&(c, _)| c);
                    let k = groups.len();
                    cells.splice(i..=i, groups.into_iter().map(|(_, m)| m));
                    i += k;
                    split_any = true;
                    continue;
                }
            }
            i += 1;
        }
        splitter = if split_any { 0 } else { splitter + 1 };
    }
}
