//! Maximum bipartite matching by augmenting paths (Kuhn's algorithm).
//!
//! Left vertices are indices into `candidates`; right vertices are bit
//! positions in each candidate mask. Left vertices are tried in index order
//! and candidates in ascending order, so the result is deterministic.

use crate::bitset::bits;

/// Returns, for each left vertex, its matched right vertex.
pub fn maximum_matching(candidates: &[u64]) -> Vec<Option<usize>> {
    let mut owner: [Option<usize>; 64] = [None; 64];
    let mut matched = vec![None; candidates.len()];
    for left in 0..candidates.len() {
        let mut seen = 0u64;
        augment(left, candidates, &mut owner, &mut matched, &mut seen);
    }
    matched
}

fn augment(
    left: usize,
    candidates: &[u64],
    owner: &mut [Option<usize>; 64],
    matched: &mut [Option<usize>],
    seen: &mut u64,
) -> bool {
    for r in bits(candidates[left] & !*seen) {
        *seen |= 1 << r;
        let free = match owner[r] {
            None => true,
            Some(other) => augment(other, candidates, owner, matched, seen),
        };
        if free {
            owner[r] = Some(left);
            matched[left] = Some(r);
            return true;
        }
    }
    false
}
