//! Chord diagrams given as double occurrence words, their interlacement
//! graphs, realizability of a graph as a chord diagram, and minimality
//! certificates for free knot diagrams.

mod certify;
mod realize;

pub use certify::{certify_minimal, certify_diagram, MinimalityCertificate, Verdict};
pub use realize::{census_circle_flags, realize_as_chord_diagram, MAX_REALIZE};

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::bit;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// A double occurrence word on chords `1..=n`, read around the circle from a
/// base point.
///
/// Diagrams are unsigned and unoriented, so the stored word is the normal
/// form: over every rotation and both reading directions, relabel by first
/// appearance and keep the lexicographically least result.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChordDiagram {
    word: Vec<usize>,
}

impl ChordDiagram {
    /// Builds the normalized diagram of `word`, whose labels are arbitrary but
    /// must each occur exactly twice.
    pub fn from_word(word: &[usize]) -> Result<ChordDiagram> {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &l in word {
            *counts.entry(l).or_default() += 1;
        }
        if let Some(&l) = word.iter().find(|l| counts[*l] != 2) {
            return Err(Error::Format(format!(
                "label {l} appears {} times, expected 2",
                counts[&l]
            )));
        }
        check_chords(counts.len())?;
        Ok(ChordDiagram { word: normal_form(word) })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn chord_count(&self) -> usize {
        self.word.len() / 2
    }

    /// Space-separated labels, e.g. `1 2 1 2`.
    pub fn code(&self) -> String {
        let parts: Vec<String> = self.word.iter().map(|l| l.to_string()).collect();
        parts.join(" ")
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

fn check_chords(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "{n} chords exceeds the {MAX_VERTICES}-vertex graph limit"
        )));
    }
    Ok(())
}

/// Relabels `word` so labels are `1, 2, ...` in order of first appearance.
pub fn first_appearance(word: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut map: HashMap<usize, usize> = HashMap::new();
    word.into_iter()
        .map(|l| {
            let next = map.len() + 1;
            *map.entry(l).or_insert(next)
        })
        .collect()
}

fn normal_form(word: &[usize]) -> Vec<usize> {
    let len = word.len();
    let mut best: Option<Vec<usize>> = None;
    for r in 0..len.max(1) {
        let forward = first_appearance((0..len).map(|i| word[(r + i) % len]));
        let backward = first_appearance((0..len).map(|i| word[(r + len - i) % len]));
        for cand in [forward, backward] {
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Parses a Gauss code: labels separated by commas and/or whitespace, each
/// occurring exactly twice. Labels are arbitrary tokens.
pub fn parse_gauss_code(text: &str) -> Result<ChordDiagram> {
    let tokens: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(Error::Format("empty Gauss code".into()));
    }
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut counts: Vec<usize> = Vec::new();
    let word: Vec<usize> = tokens
        .iter()
        .map(|t| {
            let id = *ids.entry(t).or_insert_with(|| {
                counts.push(0);
                counts.len() - 1
            });
            counts[id] += 1;
            id
        })
        .collect();
    if let Some(bad) = tokens.iter().find(|t| counts[ids[*t]] != 2) {
        let k = counts[ids[bad]];
        let parity = if tokens.len() % 2 == 1 { " (odd length)" } else { "" };
        return Err(Error::Format(format!(
            "label {bad:?} appears {k} time{}, expected 2{parity}",
            if k == 1 { "" } else { "s" }
        )));
    }
    ChordDiagram::from_word(&word)
}

/// Chord `i` (label `i + 1`) becomes vertex `i`; two chords are adjacent iff
/// their endpoints alternate around the circle.
pub fn interlacement_graph(d: &ChordDiagram) -> Graph {
    let n = d.chord_count();
    let mut first = vec![usize::MAX; n];
    let mut second = vec![usize::MAX; n];
    for (pos, &l) in d.word.iter().enumerate() {
        let c = l - 1;
        if first[c] == usize::MAX {
            first[c] = pos;
        } else {
            second[c] = pos;
        }
    }
    let mut g = Graph::new(n);
    for a in 0..n {
        // chords with exactly one endpoint strictly inside chord a
        let mut inside = 0u64;
        for &l in &d.word[first[a] + 1..second[a]] {
            inside ^= bit(l - 1);
        }
        for b in crate::bitset::bits(inside) {
            g.add_edge(a, b);
        }
    }
    g
}
