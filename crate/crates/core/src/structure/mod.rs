//! Girth, shortest cycles, morningstar subgraph witnesses and minor search.

mod matching;
mod minor;
mod morningstar;

pub use matching::maximum_matching;
pub use minor::{has_minor, verify_minor_witness, MinorWitness, MAX_HOST, MAX_PATTERN};
pub use morningstar::{find_morningstar, MorningstarWitness};

use crate::bitset::{bit, bits, low_mask};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Length of a shortest cycle, `None` for forests.
///
/// BFS from every root; a non-tree edge `{x, y}` closes a closed walk of
/// length `d(x) + d(y) + 1` through the root, and the minimum over all roots
/// is attained by a true shortest cycle.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            if 2 * dist[x] >= best {
                break;
            }
            for y in bits(g.neighbors(x)) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// All cycles of length `girth(g)`, each once. A cycle starts at its least
/// vertex and runs toward the smaller of that vertex's two cycle
/// neighbors; the list is sorted.
pub fn shortest_cycles(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let k = girth(g).ok_or(Error::NoCycle)?;
    Ok(cycles_of_length(g, k))
}

/// All cycles of exactly `k` vertices, normalized as in [`shortest_cycles`].
pub fn cycles_of_length(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k < 3 {
        return out;
    }
    let mut path = Vec::with_capacity(k);
    for start in 0..g.n() {
        // only vertices above `start` may appear later in the cycle
        let allowed = !low_mask(start + 1);
        path.push(start);
        extend(g, k, allowed, bit(start), &mut path, &mut out);
        path.pop();
    }
    out.sort();
    out
}

fn extend(
    g: &Graph,
    k: usize,
    allowed: u64,
    used: u64,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().expect("path starts non-empty");
    let start = path[0];
    if path.len() == k {
        if g.has_edge(last, start) && path[1] < path[k - 1] {
            out.push(path.clone());
        }
        return;
    }
    for w in bits(g.neighbors(last) & allowed & !used) {
        path.push(w);
        extend(g, k, allowed, used | bit(w), path, out);
        path.pop();
    }
}

/// Checks that `cycle` lists distinct vertices, consecutively adjacent and
/// closing back to the start.
pub fn is_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mask = cycle.iter().fold(0u64, |m, &v| m | bit(v));
    mask.count_ones() as usize == k && (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
}
