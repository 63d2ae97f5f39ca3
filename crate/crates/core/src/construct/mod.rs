//! Named graphs and augmentation to an irreducibly odd supergraph.

mod augment;

pub use augment::{augment, AugmentMode, AugmentStep, AugmentationTrace};

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};

/// Bull graph with vertex order `[mouth, b, c, a, d]`: triangle
/// `{mouth, b, c}` plus pendants `a–b` and `d–c`.
pub fn bull() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).expect("static graph")
}

/// `k`-cycle on `0..k` with spike `k + i` attached to cycle vertex `i`.
pub fn morningstar(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("morningstar needs k >= 3, got {k}")));
    }
    if 2 * k > crate::graph::MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!("morningstar({k}) exceeds 64 vertices")));
    }
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((0..k).map(|i| (i, k + i)));
    Graph::from_edges(2 * k, &edges)
}

pub fn triskelion() -> Graph {
    morningstar(3).expect("k = 3 is valid")
}

pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("cycle needs k >= 3, got {k}")));
    }
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::from_edges(k, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!("K{n} exceeds 64 vertices")));
    }
    Ok(Graph::new(n).complement())
}

/// `K_{1,k}` with the hub at vertex 0.
pub fn star(k: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Graph::from_edges(k + 1, &edges)
}

/// Outer 5-cycle `0..5`, spokes `i–i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// Resolves a built-in name: `triskelion`, `bull`, `petersen`,
/// `morningstar:k`, `cycle:k`, `path:n`, `complete:n`, `star:k`, `empty:n`,
/// or `g6:<graph6>`.
pub fn named_graph(name: &str) -> Result<Graph> {
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let num = |a: Option<&str>| -> Result<usize> {
        a.ok_or_else(|| Error::InvalidArgument(format!("{head} needs a size, e.g. {head}:5")))?
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad size in {name:?}")))
    };
    match head {
        "triskelion" if arg.is_none() => Ok(triskelion()),
        "bull" if arg.is_none() => Ok(bull()),
        "petersen" if arg.is_none() => Ok(petersen()),
        "morningstar" => morningstar(num(arg)?),
        "cycle" => cycle(num(arg)?),
        "path" => path(num(arg)?),
        "complete" => complete(num(arg)?),
        "star" => star(num(arg)?),
        "empty" => {
            let n = num(arg)?;
            if n > crate::graph::MAX_VERTICES {
                return Err(Error::UnsupportedSize(format!("{n} vertices exceeds 64")));
            }
            Ok(Graph::new(n))
        }
        "g6" => parse_graph6(arg.unwrap_or("")),
        _ => Err(Error::InvalidArgument(format!("unknown graph name {name:?}"))),
    }
}
