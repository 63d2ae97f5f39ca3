use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::bounds::edge_bounds;
use super::generate::{all_graphs, extend_level};
use crate::bitset::{bits, low_mask};
use crate::construct::triskelion;
use crate::error::{Error, Result};
use crate::graph::{emit_graph6, parse_graph6, Graph};
use crate::oddness::{is_irreducible_with_parity, is_irreducibly_even, Parity};
use crate::structure::{find_morningstar, has_minor, shortest_cycles, verify_minor_witness};

/// Largest order the census supports. Order 10 extends all 274668 graphs on 9
/// vertices, which are themselves built from 12346 graphs on 8 vertices times
/// 256 neighbor sets, about 3 * 10^6 canonical labelings. Order 12 would need
/// the 10^9 graphs on 11 vertices, built from about 10^10 labelings.
pub const MAX_CENSUS_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusKind {
    IrreduciblyOdd,
    IrreduciblyEven,
}

impl CensusKind {
    pub fn parity(self) -> Parity {
        match self {
            CensusKind::IrreduciblyOdd => Parity::Odd,
            CensusKind::IrreduciblyEven => Parity::Even,
        }
    }

    pub fn file_stem(self, n: usize) -> String {
        match self {
            CensusKind::IrreduciblyOdd => format!("irreducibly_odd_{n}"),
            CensusKind::IrreduciblyEven => format!("irreducibly_even_{n}"),
        }
    }
}

/// Audit results for one census graph; `None` means not computed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditFlags {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_bounds_ok: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub has_triskelion_minor: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morningstar_ok: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement_irr_even: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_circle_graph: Option<bool>,
}

impl AuditFlags {
    /// False if any computed audit other than circle realizability failed.
    pub fn passed(&self) -> bool {
        [self.edge_bounds_ok, self.has_triskelion_minor, self.morningstar_ok, self.complement_irr_even]
            .iter()
            .all(|f| f.unwrap_or(true))
    }
}

/// Which audits to run. `circle` is filled by `chord::census_circle_flags`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AuditSet {
    pub bounds: bool,
    pub minor: bool,
    pub morningstar: bool,
    pub duality: bool,
    pub circle: bool,
}

impl AuditSet {
    pub const NAMES: [&'static str; 5] = ["bounds", "minor", "morningstar", "duality", "circle"];

    pub fn all() -> AuditSet {
        AuditSet { bounds: true, minor: true, morningstar: true, duality: true, circle: true }
    }

    pub fn none() -> AuditSet {
        AuditSet::default()
    }

    /// `all`, `none`, or a comma-separated subset of [`AuditSet::NAMES`].
    pub fn parse(text: &str) -> Result<AuditSet> {
        match text.trim() {
            "all" => return Ok(AuditSet::all()),
            "none" | "" => return Ok(AuditSet::none()),
            _ => {}
        }
        let mut set = AuditSet::none();
        for name in text.split(',').map(str::trim) {
            match name {
                "bounds" => set.bounds = true,
                "minor" => set.minor = true,
                "morningstar" => set.morningstar = true,
                "duality" => set.duality = true,
                "circle" => set.circle = true,
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown audit {name:?}; expected all, none or some of {}",
                        AuditSet::NAMES.join(",")
                    )))
                }
            }
        }
        Ok(set)
    }

    pub fn any_core(&self) -> bool {
        self.bounds || self.minor || self.morningstar || self.duality
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub kind: CensusKind,
    pub n: usize,
    pub count: usize,
    pub canon_list: Vec<String>,
    /// Empty when no audit ran, otherwise parallel to `canon_list`.
    #[serde(default)]
    pub audits: Vec<AuditFlags>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CensusReport {
    fn from_graphs(kind: CensusKind, n: usize, graphs: &[Graph], note: Option<String>) -> Self {
        let canon_list: Vec<String> = graphs.iter().map(emit_graph6).collect();
        CensusReport { kind, n, count: canon_list.len(), canon_list, audits: Vec::new(), note }
    }

    pub fn graphs(&self) -> Result<Vec<Graph>> {
        self.canon_list.iter().map(|s| parse_graph6(s)).collect()
    }

    /// Sorted, duplicate-free, counted, and audits either absent or aligned.
    pub fn check_invariants(&self) -> Result<()> {
        if self.count != self.canon_list.len() {
            return Err(Error::Format(format!(
                "census count {} disagrees with {} listed graphs",
                self.count,
                self.canon_list.len()
            )));
        }
        if let Some(w) = self.canon_list.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::Format(format!("census list not strictly sorted at {:?}", w[1])));
        }
        if !self.audits.is_empty() && self.audits.len() != self.count {
            return Err(Error::Format("audit list does not match census size".into()));
        }
        for s in &self.canon_list {
            let g = parse_graph6(s)?;
            if g.n() != self.n {
                return Err(Error::Format(format!("{s:?} has {} vertices, expected {}", g.n(), self.n)));
            }
        }
        Ok(())
    }

    /// Indices of graphs whose computed audits failed.
    pub fn failed_audits(&self) -> Vec<usize> {
        (0..self.audits.len()).filter(|&i| !self.audits[i].passed()).collect()
    }

    /// Audit slots, allocated on first use.
    pub fn audit_slots(&mut self) -> &mut [AuditFlags] {
        if self.audits.is_empty() {
            self.audits = vec![AuditFlags::default(); self.count];
        }
        &mut self.audits
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("census order must be at least 1".into()));
    }
    if n > MAX_CENSUS_ORDER {
        return Err(Error::UnsupportedSize(format!(
            "census supports up to {MAX_CENSUS_ORDER} vertices, got {n}; order 12 would need \
             about 10^10 canonical labelings"
        )));
    }
    Ok(())
}

/// Every graph on `n` vertices with all degrees of `parity` and no reducible
/// pair, up to isomorphism.
///
/// Deleting the last vertex leaves an arbitrary graph `H` on `n - 1`
/// vertices, and the parity requirement forces the deleted vertex to be
/// adjacent to exactly the vertices of `H` whose degree has the wrong parity.
/// So each parent contributes at most one child.
fn census_graphs(n: usize, parity: Parity) -> Vec<Graph> {
    let parents = all_graphs(n - 1);
    let forced = |h: &Graph| -> Vec<u64> {
        let set = (0..h.n())
            .filter(|&v| !parity.matches(h.degree(v)))
            .fold(0u64, |m, v| m | crate::bitset::bit(v));
        if parity.matches(set.count_ones() as usize) {
            vec![set]
        } else {
            Vec::new()
        }
    };
    extend_level(&parents, forced, |g| is_irreducible_with_parity(g, parity))
}

/// All irreducibly odd graphs on `n` vertices up to isomorphism, sorted by
/// canonical graph6.
pub fn enumerate_irreducibly_odd(n: usize) -> Result<CensusReport> {
    check_order(n)?;
    let kind = CensusKind::IrreduciblyOdd;
    if n % 2 == 1 {
        return Ok(CensusReport::from_graphs(
            kind,
            n,
            &[],
            Some("parity: odd graphs have an even number of vertices".into()),
        ));
    }
    Ok(CensusReport::from_graphs(kind, n, &census_graphs(n, Parity::Odd), None))
}

/// All irreducibly even graphs on `n` vertices up to isomorphism.
pub fn enumerate_irreducibly_even(n: usize) -> Result<CensusReport> {
    check_order(n)?;
    Ok(CensusReport::from_graphs(
        CensusKind::IrreduciblyEven,
        n,
        &census_graphs(n, Parity::Even),
        None,
    ))
}

/// Runs the selected structural audits on an irreducibly odd census.
pub fn run_audits(report: &mut CensusReport, audits: AuditSet) -> Result<()> {
    if !audits.any_core() || report.count == 0 {
        return Ok(());
    }
    if report.kind != CensusKind::IrreduciblyOdd {
        return Err(Error::InvalidArgument("audits apply to irreducibly odd censuses only".into()));
    }
    let graphs = report.graphs()?;
    let bounds = if audits.bounds { Some(edge_bounds(report.n / 2)?) } else { None };
    let pattern = triskelion();
    let computed: Vec<AuditFlags> = graphs
        .par_iter()
        .map(|g| -> Result<AuditFlags> {
            let mut f = AuditFlags::default();
            if let Some((lo, hi)) = bounds {
                f.edge_bounds_ok = Some((lo..=hi).contains(&g.edge_count()));
            }
            if audits.minor {
                let w = has_minor(g, &pattern)?;
                f.has_triskelion_minor = Some(w.is_some_and(|w| verify_minor_witness(g, &pattern, &w)));
            }
            if audits.morningstar {
                f.morningstar_ok = Some(morningstar_audit(g)?);
            }
            if audits.duality {
                f.complement_irr_even = Some(is_irreducibly_even(&g.complement()));
            }
            Ok(f)
        })
        .collect::<Result<_>>()?;
    for (slot, f) in report.audit_slots().iter_mut().zip(computed) {
        slot.edge_bounds_ok = f.edge_bounds_ok.or(slot.edge_bounds_ok);
        slot.has_triskelion_minor = f.has_triskelion_minor.or(slot.has_triskelion_minor);
        slot.morningstar_ok = f.morningstar_ok.or(slot.morningstar_ok);
        slot.complement_irr_even = f.complement_irr_even.or(slot.complement_irr_even);
    }
    Ok(())
}

/// Every shortest cycle extends to a verified morningstar witness.
pub fn morningstar_audit(g: &Graph) -> Result<bool> {
    for c in shortest_cycles(g)? {
        match find_morningstar(g, &c)? {
            Some(w) if w.is_valid_for(g) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Contents of one census file: one canonical graph6 string per line.
pub fn census_g6_text(report: &CensusReport) -> String {
    report.canon_list.iter().map(|s| format!("{s}\n")).collect()
}

pub fn census_json_text(report: &CensusReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("census serializes");
    s.push('\n');
    s
}

/// Paths of the graph6 list and JSON sidecar for a census.
pub fn census_paths(dir: &Path, kind: CensusKind, n: usize) -> (PathBuf, PathBuf) {
    let stem = kind.file_stem(n);
    (dir.join(format!("{stem}.g6")), dir.join(format!("{stem}.json")))
}

/// Writes `<stem>.g6` and `<stem>.json` into `dir`, creating it if needed.
pub fn write_census(dir: &Path, report: &CensusReport) -> Result<(PathBuf, PathBuf)> {
    report.check_invariants()?;
    fs::create_dir_all(dir)?;
    let (g6, json) = census_paths(dir, report.kind, report.n);
    fs::write(&g6, census_g6_text(report))?;
    fs::write(&json, census_json_text(report))?;
    Ok((g6, json))
}

/// Reads a census written by [`write_census`] and checks that both files
/// agree. `Ok(None)` if either file is missing.
pub fn read_census(dir: &Path, kind: CensusKind, n: usize) -> Result<Option<CensusReport>> {
    let (g6, json) = census_paths(dir, kind, n);
    if !g6.exists() || !json.exists() {
        return Ok(None);
    }
    let report: CensusReport = serde_json::from_str(&fs::read_to_string(&json)?)
        .map_err(|e| Error::Format(format!("{}: {e}", json.display())))?;
    report.check_invariants()?;
    if report.kind != kind || report.n != n {
        return Err(Error::Format(format!("{} describes a different census", json.display())));
    }
    if fs::read_to_string(&g6)? != census_g6_text(&report) {
        return Err(Error::Format(format!(
            "{} does not match its sidecar {}",
            g6.display(),
            json.display()
        )));
    }
    Ok(Some(report))
}

/// Labeled brute force: every graph on `n` vertices, filtered and
/// deduplicated canonically. Practical for `n <= 6`.
pub fn brute_force_census(n: usize, parity: Parity) -> Vec<String> {
    assert!(n <= 7, "brute force over 2^C(n,2) labeled graphs");
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut found: Vec<String> = (0..=low_mask(pairs.len()))
        .into_par_iter()
        .filter_map(|mask| {
            let mut g = Graph::new(n);
            for k in bits(mask) {
                g.add_edge(pairs[k].0, pairs[k].1);
            }
            is_irreducible_with_parity(&g, parity)
                .then(|| crate::graph::canonical_form(&g).0)
        })
        .collect();
    found.par_sort_unstable();
    found.dedup();
    found
}
