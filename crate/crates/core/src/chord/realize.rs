//! Brute-force circle graph recognition.
//!
//! The word is built left to right. Each step either opens a new chord,
//! assigning it an unused vertex, or closes an open chord. Two chords that are
//! open at the same time interlace iff the earlier-opened one closes first, so
//! the adjacency among open chords fixes their closing order: a new vertex
//! must be adjacent to exactly a prefix of that order, and only the head of
//! the order may close next. Chords never open together must be
//! non-adjacent, so a closed vertex may not have unassigned neighbors.

use rayon::prelude::*;

use super::{interlacement_graph, ChordDiagram};
use crate::bitset::{bit, bits};
use crate::enumerate::CensusReport;
use crate::error::{Error, Result};
use crate::graph::{canonical_labeling, parse_graph6, Graph};

/// Largest graph accepted by [`realize_as_chord_diagram`].
pub const MAX_REALIZE: usize = 9;

/// A normalized diagram whose interlacement graph is isomorphic to `g`, or
/// `None` if `g` is not a circle graph.
///
/// The search runs on the canonical relabeling of `g`, so isomorphic inputs
/// get the same diagram. One task per position of the second occurrence of
/// chord 1; each task reports its first word in depth-first order and the
/// least of those is returned.
pub fn realize_as_chord_diagram(g: &Graph) -> Result<Option<ChordDiagram>> {
    let n = g.n();
    if n > MAX_REALIZE {
        return Err(Error::UnsupportedSize(format!(
            "chord realization is brute force and supports up to {MAX_REALIZE} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Some(ChordDiagram::from_word(&[])?));
    }
    let (canon, _) = canonical_labeling(g);
    let best = (1..2 * n)
        .into_par_iter()
        .filter_map(|close_first| {
            let mut s = Search::new(&canon, close_first);
            s.step().then_some(s.word)
        })
        .min();
    let Some(word) = best else { return Ok(None) };
    let d = ChordDiagram::from_word(&word)?;
    debug_assert_eq!(
        crate::graph::canonical_form(&interlacement_graph(&d)),
        crate::graph::canonical_form(g)
    );
    Ok(Some(d))
}

struct Search<'a> {
    g: &'a Graph,
    /// position at which chord 1 must close
    close_first: usize,
    word: Vec<usize>,
    /// open chords as (label, vertex), in closing order
    open: Vec<(usize, usize)>,
    assigned: u64,
    closed: u64,
    labels: usize,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, close_first: usize) -> Self {
        Search {
            g,
            close_first,
            word: Vec::with_capacity(2 * g.n()),
            open: Vec::new(),
            assigned: 0,
            closed: 0,
            labels: 0,
        }
    }

    /// Depth-first in lexicographic word order; leaves `word` holding the
    /// first complete realization.
    fn step(&mut self) -> bool {
        let n = self.g.n();
        let pos = self.word.len();
        if pos == 2 * n {
            return true;
        }
        // closing an existing label always sorts before opening the next one
        if let Some(&(label, v)) = self.open.first() {
            let allowed = if label == 1 { pos == self.close_first } else { pos != self.close_first };
            if allowed && self.g.neighbors(v) & !self.assigned == 0 {
                self.open.remove(0);
                self.closed |= bit(v);
                self.word.push(label);
                if self.step() {
                    return true;
                }
                self.word.pop();
                self.closed &= !bit(v);
                self.open.insert(0, (label, v));
            }
        }
        let unopened = n - self.labels;
        if unopened == 0 || pos == self.close_first {
            return false;
        }
        let prefix_masks: Vec<u64> = self
            .open
            .iter()
            .scan(0u64, |m, &(_, v)| {
                *m |= bit(v);
                Some(*m)
            })
            .collect();
        let open_mask = prefix_masks.last().copied().unwrap_or(0);
        let label = self.labels + 1;
        for v in bits(self.g.vertex_mask() & !self.assigned) {
            let nv = self.g.neighbors(v);
            if nv & self.closed != 0 {
                continue;
            }
            let t = (nv & open_mask).count_ones() as usize;
            if t > 0 && nv & open_mask != prefix_masks[t - 1] {
                continue;
            }
            self.open.insert(t, (label, v));
            self.assigned |= bit(v);
            self.labels += 1;
            self.word.push(label);
            if self.step() {
                return true;
            }
            self.word.pop();
            self.labels -= 1;
            self.assigned &= !bit(v);
            self.open.remove(t);
        }
        false
    }
}

/// Fills `is_circle_graph` for every census entry.
pub fn census_circle_flags(mut report: CensusReport) -> Result<CensusReport> {
    if report.n > MAX_REALIZE {
        return Err(Error::UnsupportedSize(format!(
            "circle flags need realization, which supports up to {MAX_REALIZE} vertices"
        )));
    }
    if report.count == 0 {
        return Ok(report);
    }
    let flags: Vec<bool> = report
        .canon_list
        .iter()
        .map(|s| Ok(realize_as_chord_diagram(&parse_graph6(s)?)?.is_some()))
        .collect::<Result<_>>()?;
    for (slot, f) in report.audit_slots().iter_mut().zip(flags) {
        slot.is_circle_graph = Some(f);
    }
    Ok(report)
}
