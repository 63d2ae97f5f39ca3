use serde::{Deserialize, Serialize};

use super::{interlacement_graph, parse_gauss_code, ChordDiagram};
use crate::error::Result;
use crate::graph::{emit_graph6, Graph};
use crate::oddness::is_irreducibly_odd;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    CertifiedMinimal { crossing_number: usize },
    /// The graph is not irreducibly odd; the rule is only sufficient.
    Inconclusive,
}

/// Outcome of the minimality rule: a diagram whose interlacement graph is
/// irreducibly odd has the fewest crossings among diagrams of its free knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityCertificate {
    pub source: ChordDiagram,
    pub interlacement: Graph,
    pub irreducibly_odd: bool,
    pub verdict: Verdict,
}

#[derive(Serialize)]
struct Record<'a> {
    code: String,
    n: usize,
    interlacement_g6: String,
    irreducibly_odd: bool,
    verdict: &'a Verdict,
}

impl MinimalityCertificate {
    /// `{code, n, interlacement_g6, irreducibly_odd, verdict}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(Record {
            code: self.source.code(),
            n: self.source.chord_count(),
            interlacement_g6: emit_graph6(&self.interlacement),
            irreducibly_odd: self.irreducibly_odd,
            verdict: &self.verdict,
        })
        .expect("certificate serializes")
    }
}

pub fn certify_diagram(d: &ChordDiagram) -> MinimalityCertificate {
    let interlacement = interlacement_graph(d);
    let irreducibly_odd = is_irreducibly_odd(&interlacement);
    let verdict = if irreducibly_odd {
        Verdict::CertifiedMinimal { crossing_number: d.chord_count() }
    } else {
        Verdict::Inconclusive
    };
    MinimalityCertificate { source: d.clone(), interlacement, irreducibly_odd, verdict }
}

pub fn certify_minimal(text: &str) -> Result<MinimalityCertificate> {
    Ok(certify_diagram(&parse_gauss_code(text)?))
}
