//! Isomorph-free censuses of irreducibly odd and even graphs, edge-count
//! bounds, and the girth-5 sweep.

mod bounds;
mod census;
mod generate;
mod girth5;

pub use bounds::{edge_bounds, extremal_max};
pub use census::{
    brute_force_census, census_g6_text, census_json_text, census_paths, enumerate_irreducibly_even,
    enumerate_irreducibly_odd, morningstar_audit, read_census, run_audits, write_census,
    AuditFlags, AuditSet, CensusKind, CensusReport, MAX_CENSUS_ORDER,
};
pub use generate::{
    all_graphs, all_graphs_up_to, enumerate_trees, extend_by, extend_level, girth5_graphs_up_to,
    girth5_sets, Level,
};
pub use girth5::{
    check_girth5_sufficiency, has_isolated_edge, in_sweep, Girth5Report, Girth5Row,
    MAX_SWEEP_ORDER,
};
