use crate::construct::cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Edge-count range `(2k, C(2k,2) - 2k + 1)` of irreducibly odd graphs on
/// `2k` vertices.
pub fn edge_bounds(k: usize) -> Result<(usize, usize)> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("edge bounds need k >= 3, got {k}")));
    }
    let n = 2 * k;
    Ok((n, n * (n - 1) / 2 - n + 1))
}

/// Complement of `C_{2k-1} + K1`: an irreducibly odd graph on `2k` vertices
/// with the maximum number of edges.
pub fn extremal_max(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("extremal graph needs k >= 3, got {k}")));
    }
    if 2 * k > crate::graph::MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!("extremal_max({k}) exceeds 64 vertices")));
    }
    let mut g = cycle(2 * k - 1)?;
    g.add_vertex()?;
    Ok(g.complement())
}
