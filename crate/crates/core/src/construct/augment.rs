//! Augmentation of an arbitrary graph into an irreducibly odd graph that
//! contains it as the induced subgraph on its original vertex ids.
//!
//! Procedure, with violators handled in ascending vertex order:
//!
//! 1. A disconnected input first gets one hub vertex adjacent to the least
//!    vertex of every component.
//! 2. While some vertex is not locally irreducibly odd, take the least such
//!    vertex `v`:
//!    * even degree: attach a fresh spike to `v`. If `v` already carries a
//!      spike `s`, patch `s` first (a second spike at `v` would pair with it);
//!    * odd degree: attach a patch that adds exactly two neighbors to `v`,
//!      either a bull (mouth identified with `v`) or, when preserving girth
//!      `k`, a `k`-morningstar minus one spike with the de-spiked cycle
//!      vertex identified with `v`.
//!
//! Every patched vertex becomes locally irreducibly odd and stays so, which
//! bounds the loop by the original vertex count plus the hub.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oddness::{is_irreducibly_odd, locally_irreducibly_odd, spikes_at};
use crate::structure::girth;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AugmentMode {
    Bull,
    GirthPreserving,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AugmentStep {
    Hub { vertex: usize, attachments: Vec<usize> },
    Spike { at: usize, vertex: usize },
    /// New vertices `[a, b, c, d]` with edges `a–b, b–c, c–d, at–b, at–c`.
    Bull { at: usize, vertices: [usize; 4] },
    /// New cycle vertices `x_1..x_{k-1}` followed by their spikes
    /// `y_1..y_{k-1}`; the cycle is `at, x_1, ..., x_{k-1}`.
    MorningstarPatch { at: usize, vertices: Vec<usize> },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentationTrace {
    pub steps: Vec<AugmentStep>,
}

impl AugmentationTrace {
    pub fn added_vertices(&self) -> usize {
        self.steps
            .iter()
            .map(|s| match s {
                AugmentStep::Hub { .. } | AugmentStep::Spike { .. } => 1,
                AugmentStep::Bull { .. } => 4,
                AugmentStep::MorningstarPatch { vertices, .. } => vertices.len(),
            })
            .sum()
    }

    /// Re-applies every step to `g`, checking that new ids are allocated in
    /// sequence.
    pub fn replay(&self, g: &Graph) -> Result<Graph> {
        let mut h = g.clone();
        for step in &self.steps {
            apply(&mut h, step)?;
        }
        Ok(h)
    }
}

fn fresh(h: &mut Graph, expected: usize) -> Result<()> {
    let v = h.add_vertex()?;
    if v != expected {
        return Err(Error::InvalidArgument(format!(
            "trace expects new vertex {expected}, next id is {v}"
        )));
    }
    Ok(())
}

fn apply(h: &mut Graph, step: &AugmentStep) -> Result<()> {
    match step {
        AugmentStep::Hub { vertex, attachments } => {
            fresh(h, *vertex)?;
            for &a in attachments {
                h.add_edge(*vertex, a);
            }
        }
        AugmentStep::Spike { at, vertex } => {
            fresh(h, *vertex)?;
            h.add_edge(*at, *vertex);
        }
        AugmentStep::Bull { at, vertices } => {
            for &x in vertices {
                fresh(h, x)?;
            }
            let [a, b, c, d] = *vertices;
            for (x, y) in [(a, b), (b, c), (c, d), (*at, b), (*at, c)] {
                h.add_edge(x, y);
            }
        }
        AugmentStep::MorningstarPatch { at, vertices } => {
            for &x in vertices {
                fresh(h, x)?;
            }
            let m = vertices.len() / 2;
            let (cyc, spikes) = vertices.split_at(m);
            let ring: Vec<usize> = std::iter::once(*at).chain(cyc.iter().copied()).collect();
            for i in 0..ring.len() {
                h.add_edge(ring[i], ring[(i + 1) % ring.len()]);
            }
            for (&x, &y) in cyc.iter().zip(spikes) {
                h.add_edge(x, y);
            }
        }
    }
    Ok(())
}

/// Returns an irreducibly odd supergraph of `g` (induced on ids `0..g.n()`)
/// and the steps that build it.
pub fn augment(g: &Graph, mode: AugmentMode) -> Result<(Graph, AugmentationTrace)> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("augmentation needs at least one vertex".into()));
    }
    let cycle_len = match mode {
        AugmentMode::Bull => None,
        AugmentMode::GirthPreserving => match girth(g) {
            Some(k) => Some(k),
            None => {
                return Err(Error::UnsupportedInput(
                    "girth-preserving augmentation needs a graph with a cycle".into(),
                ))
            }
        },
    };

    let mut trace = AugmentationTrace::default();
    if is_irreducibly_odd(g) {
        return Ok((g.clone(), trace));
    }

    let mut h = g.clone();
    let components = g.connected_components();
    if components.len() > 1 {
        let step = AugmentStep::Hub {
            vertex: h.n(),
            attachments: components.iter().map(|c| c[0]).collect(),
        };
        apply(&mut h, &step)?;
        trace.steps.push(step);
    }

    let limit = g.n() + 1;
    let mut rounds = 0;
    while let Some(v) = least_violator(&h) {
        rounds += 1;
        if rounds > limit {
            return Err(Error::RoundLimit { limit });
        }
        let step = if h.degree(v).is_multiple_of(2) {
            match spikes_at(&h, v).first() {
                Some(&s) => patch(&h, s, cycle_len),
                None => AugmentStep::Spike { at: v, vertex: h.n() },
            }
        } else {
            patch(&h, v, cycle_len)
        };
        apply(&mut h, &step)?;
        trace.steps.push(step);
    }
    debug_assert!(is_irreducibly_odd(&h));
    Ok((h, trace))
}

fn least_violator(h: &Graph) -> Option<usize> {
    (0..h.n()).find(|&v| !locally_irreducibly_odd(h, v).expect("vertex in range"))
}

fn patch(h: &Graph, at: usize, cycle_len: Option<usize>) -> AugmentStep {
    let base = h.n();
    match cycle_len {
        None => AugmentStep::Bull { at, vertices: [base, base + 1, base + 2, base + 3] },
        Some(k) => AugmentStep::MorningstarPatch {
            at,
            vertices: (base..base + 2 * (k - 1)).collect(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cycle, morningstar, triskelion};
    use crate::graph::canonical_form;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
        let p: f64 = rng.gen_range(0.0..1.0);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn check_steps(input: &Graph, trace: &AugmentationTrace) {
        let mut h = input.clone();
        for step in &trace.steps {
            let before = h.clone();
            apply(&mut h, step).unwrap();
            match step {
                AugmentStep::Spike { at, .. } => {
                    assert_eq!(before.degree(*at) % 2, 0);
                    assert_eq!(h.degree(*at), before.degree(*at) + 1);
                }
                AugmentStep::Bull { at, .. } | AugmentStep::MorningstarPatch { at, .. } => {
                    assert_eq!(h.degree(*at), before.degree(*at) + 2);
                }
                AugmentStep::Hub { .. } => {}
            }
        }
    }

    #[test]
    fn c4_gets_four_spikes() {
        let c4 = cycle(4).unwrap();
        let (h, trace) = augment(&c4, AugmentMode::Bull).unwrap();
        assert_eq!(trace.steps.len(), 4);
        assert!(trace.steps.iter().all(|s| matches!(s, AugmentStep::Spike { .. })));
        assert_eq!(canonical_form(&h), canonical_form(&morningstar(4).unwrap()));
    }

    #[test]
    fn disconnected_input_starts_with_hub() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let g = k2.disjoint_union(&k2).unwrap();
        let (h, trace) = augment(&g, AugmentMode::Bull).unwrap();
        assert_eq!(
            trace.steps[0],
            AugmentStep::Hub { vertex: 4, attachments: vec![0, 2] }
        );
        assert!(is_irreducibly_odd(&h));
        assert!(h.induces_on_prefix(&g));
    }

    #[test]
    fn triskelion_is_fixed_point() {
        let (h, trace) = augment(&triskelion(), AugmentMode::Bull).unwrap();
        assert_eq!(h, triskelion());
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn single_vertex_becomes_triskelion() {
        let (h, trace) = augment(&Graph::new(1), AugmentMode::Bull).unwrap();
        assert_eq!(canonical_form(&h), canonical_form(&triskelion()));
        assert_eq!(trace.steps.len(), 2);
    }

    #[test]
    fn spike_collision_patches_existing_spike() {
        // path 0-1-2: vertex 1 is even and already carries spikes 0 and 2
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let (h, trace) = augment(&p3, AugmentMode::Bull).unwrap();
        assert!(is_irreducibly_odd(&h));
        assert!(h.induces_on_prefix(&p3));
        check_steps(&p3, &trace);
    }

    #[test]
    fn even_vertex_spike_is_locally_fixed() {
        let c4 = cycle(4).unwrap();
        let mut h = c4.clone();
        apply(&mut h, &AugmentStep::Spike { at: 0, vertex: 4 }).unwrap();
        assert!(locally_irreducibly_odd(&h, 0).unwrap());
        assert!(locally_irreducibly_odd(&h, 4).unwrap());
    }

    #[test]
    fn girth_mode_rejects_forests() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            augment(&p, AugmentMode::GirthPreserving),
            Err(Error::UnsupportedInput(_))
        ));
        assert!(augment(&Graph::new(0), AugmentMode::Bull).is_err());
    }

    #[test]
    fn four_isolated_vertices_need_eighteen() {
        // the hub gets four spikes and even degree: one more spike, then
        // four bulls to separate five spikes
        let (h, trace) = augment(&Graph::new(4), AugmentMode::Bull).unwrap();
        assert!(is_irreducibly_odd(&h));
        assert_eq!(trace.added_vertices(), 18);
    }

    #[test]
    fn random_bull_mode() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let n = rng.gen_range(1..=10);
            let g = random_graph(&mut rng, n);
            let (h, trace) = augment(&g, AugmentMode::Bull).unwrap();
            assert!(is_irreducibly_odd(&h), "{g:?}");
            assert!(h.induces_on_prefix(&g));
            assert_eq!(trace.replay(&g).unwrap(), h);
            assert_eq!(trace.added_vertices(), h.n() - g.n());
            // a hub counts as one more vertex that may need its own patch
            let budget = if g.is_connected() { 4 * g.n() + 1 } else { 4 * (g.n() + 1) + 1 };
            assert!(h.n() - g.n() <= budget, "{g:?} grew by {}", h.n() - g.n());
            check_steps(&g, &trace);
        }
    }

    #[test]
    fn random_girth_mode() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let mut done = 0;
        while done < 100 {
            let n = rng.gen_range(3..=10);
            let g = random_graph(&mut rng, n);
            let Some(k) = girth(&g) else { continue };
            // morningstar patches of length k must still fit in 64 vertices
            let (h, trace) = match augment(&g, AugmentMode::GirthPreserving) {
                Ok(r) => r,
                Err(Error::UnsupportedSize(_)) => continue,
                Err(e) => panic!("{e} on {g:?}"),
            };
            assert!(is_irreducibly_odd(&h), "{g:?}");
            assert!(h.induces_on_prefix(&g));
            assert_eq!(girth(&h), Some(k));
            assert_eq!(trace.replay(&g).unwrap(), h);
            check_steps(&g, &trace);
            done += 1;
        }
    }
}
