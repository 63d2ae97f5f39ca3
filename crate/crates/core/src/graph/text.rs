//! Edge-list text (`n m` header, then `u v` per line) and DOT export.

use super::{parse_graph6, Graph};
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::Format("edge list is empty".into()))?;
    let (n, m) = parse_pair(header, hline)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        edges.push(parse_pair(line, lineno)?);
    }
    if edges.len() != m {
        return Err(Error::Format(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    let g = Graph::from_edges(n, &edges)?;
    if g.edge_count() != m {
        return Err(Error::Format("edge list contains duplicate edges".into()));
    }
    Ok(g)
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::Format(format!("line {lineno}: expected two integers, got {line:?}"))),
    }
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn emit_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        s.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}

/// Accepts either format: a first content line of two integers is read as an
/// edge list, anything else as a single graph6 line.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::Format("no graph found in input".into()))?;
    if first.split_whitespace().count() == 2
        && first.split_whitespace().all(|t| t.parse::<usize>().is_ok())
    {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = emit_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(parse_graph_text(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert!(parse_edge_list("2 1\n0 2\n").is_err());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# path\n3 2\n\n0 1 # first\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn detects_graph6() {
        let g = parse_graph_text("A_\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn dot_output() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(emit_dot(&g), "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }
}
