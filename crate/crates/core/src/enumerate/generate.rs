//! Isomorph-free generation by one-vertex extension.
//!
//! Every graph on `n + 1` vertices in a class closed under vertex deletion is
//! some member on `n` vertices plus a new vertex joined to a subset `S`. Each
//! level is produced by extending every canonical parent with every admissible
//! `S`, relabeling the children canonically and deduplicating. Parents are
//! processed in parallel; the merged level is sorted, so output does not
//! depend on the worker count.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bitset::{bit, bits, low_mask};
use crate::graph::{canonical_labeling, Graph};

/// Canonical graphs, sorted by graph6 string.
pub type Level = Vec<Graph>;

/// Joins a new vertex `n` to the vertices in `set`.
pub fn extend_by(parent: &Graph, set: u64) -> Graph {
    let mut child = parent.clone();
    let v = child.add_vertex().expect("extension stays within 64 vertices");
    for u in bits(set) {
        child.add_edge(u, v);
    }
    child
}

/// Extends each parent by every set produced by `sets`, keeps children passing
/// `keep`, and returns the distinct canonical children.
pub fn extend_level<S, K>(parents: &[Graph], sets: S, keep: K) -> Level
where
    S: Fn(&Graph) -> Vec<u64> + Sync,
    K: Fn(&Graph) -> bool + Sync,
{
    let found: HashSet<Graph> = parents
        .par_iter()
        .fold(HashSet::new, |mut acc, parent| {
            for set in sets(parent) {
                let child = extend_by(parent, set);
                if keep(&child) {
                    acc.insert(canonical_labeling(&child).0);
                }
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    sorted_level(found)
}

fn sorted_level(found: HashSet<Graph>) -> Level {
    let mut keyed: Vec<(String, Graph)> =
        found.into_iter().map(|g| (crate::graph::emit_graph6(&g), g)).collect();
    keyed.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// All subsets of the parent's vertices.
pub fn all_subsets(parent: &Graph) -> Vec<u64> {
    (0..=low_mask(parent.n())).collect()
}

/// All graphs on `n` vertices up to isomorphism.
pub fn all_graphs(n: usize) -> Level {
    let mut level = vec![Graph::new(0)];
    for _ in 0..n {
        level = extend_level(&level, all_subsets, |_| true);
    }
    level
}

/// All graphs on `0..=n` vertices, one level per order.
pub fn all_graphs_up_to(n: usize) -> Vec<Level> {
    let mut levels = vec![vec![Graph::new(0)]];
    for i in 0..n {
        let next = extend_level(&levels[i], all_subsets, |_| true);
        levels.push(next);
    }
    levels
}

/// All trees on `n` vertices up to isomorphism, by attaching a leaf.
pub fn enumerate_trees(n: usize) -> Level {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::new(1)];
    for _ in 1..n {
        level = extend_level(&level, |p| (0..p.n()).map(bit).collect(), |_| true);
    }
    level
}

/// Neighbor sets whose vertices are pairwise at distance at least 3, i.e.
/// joining a new vertex to them creates no cycle shorter than 5.
pub fn girth5_sets(parent: &Graph) -> Vec<u64> {
    let n = parent.n();
    // vertices within distance 2 of each vertex, excluding itself
    let near: Vec<u64> = (0..n)
        .map(|v| {
            let n1 = parent.neighbors(v);
            let n2 = bits(n1).fold(n1, |m, u| m | parent.neighbors(u));
            n2 & !bit(v)
        })
        .collect();
    let mut out = Vec::new();
    fn rec(i: usize, n: usize, set: u64, blocked: u64, near: &[u64], out: &mut Vec<u64>) {
        if i == n {
            out.push(set);
            return;
        }
        rec(i + 1, n, set, blocked, near, out);
        if blocked & bit(i) == 0 {
            rec(i + 1, n, set | bit(i), blocked | near[i], near, out);
        }
    }
    rec(0, n, 0, 0, &near, &mut out);
    out
}

/// All graphs with girth at least 5 (forests included) on `0..=n` vertices.
pub fn girth5_graphs_up_to(n: usize) -> Vec<Level> {
    let mut levels = vec![vec![Graph::new(0)]];
    for i in 0..n {
        let next = extend_level(&levels[i], girth5_sets, |_| true);
        levels.push(next);
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;
    use crate::structure::girth;
    use std::collections::BTreeSet;

    #[test]
    fn graph_counts_match_labeled_brute_force() {
        // oracle: canonical dedup of every labeled graph
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> =
                (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            let mut forms = BTreeSet::new();
            for mask in 0u64..1 << pairs.len() {
                let mut g = Graph::new(n);
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        g.add_edge(i, j);
                    }
                }
                forms.insert(canonical_form(&g));
            }
            assert_eq!(all_graphs(n).len(), forms.len(), "n = {n}");
        }
    }

    #[test]
    fn graph_counts_through_seven() {
        let counts: Vec<usize> = all_graphs_up_to(7).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn level_is_sorted_and_canonical() {
        let level = all_graphs(5);
        let strings: Vec<String> = level.iter().map(crate::graph::emit_graph6).collect();
        let mut sorted = strings.clone();
        sorted.sort();
        assert_eq!(strings, sorted);
        for g in &level {
            assert_eq!(canonical_labeling(g).0, *g);
        }
    }

    #[test]
    fn tree_counts_match_pruefer_oracle() {
        // oracle: decode every Pruefer sequence and deduplicate canonically
        fn pruefer(seq: &[usize], n: usize) -> Graph {
            let mut degree = vec![1; n];
            for &s in seq {
                degree[s] += 1;
            }
            let mut g = Graph::new(n);
            for &s in seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                g.add_edge(leaf, s);
                degree[leaf] -= 1;
                degree[s] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            g.add_edge(rest[0], rest[1]);
            g
        }
        for n in 2..=8usize {
            let mut forms = BTreeSet::new();
            let total = n.pow((n - 2) as u32);
            for code in 0..total {
                let mut c = code;
                let seq: Vec<usize> = (0..n - 2)
                    .map(|_| {
                        let d = c % n;
                        c /= n;
                        d
                    })
                    .collect();
                forms.insert(canonical_form(&pruefer(&seq, n)));
            }
            let trees = enumerate_trees(n);
            assert_eq!(trees.len(), forms.len(), "n = {n}");
            assert!(trees.iter().all(Graph::is_tree));
        }
    }

    #[test]
    fn tree_counts_through_ten() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn girth5_levels_match_filtered_all_graphs() {
        let all = all_graphs_up_to(7);
        let g5 = girth5_graphs_up_to(7);
        for n in 0..=7 {
            let filtered: Vec<&Graph> =
                all[n].iter().filter(|g| girth(g).is_none_or(|k| k >= 5)).collect();
            assert_eq!(g5[n].len(), filtered.len(), "n = {n}");
            assert!(g5[n].iter().zip(filtered).all(|(a, b)| a == b));
        }
    }

    #[test]
    fn output_independent_of_worker_count() {
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| all_graphs(6))
        };
        assert_eq!(run(1), run(4));
    }
}
