//! End-to-end acceptance run. Prints one PASS or FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use oddgraph::chord::{
    census_circle_flags, certify_minimal, interlacement_graph, realize_as_chord_diagram, Verdict,
};
use oddgraph::construct::{bull, morningstar, petersen, triskelion};
use oddgraph::enumerate::{
    brute_force_census, census_g6_text, census_json_text, check_girth5_sufficiency, edge_bounds,
    enumerate_irreducibly_even, enumerate_irreducibly_odd, enumerate_trees, extremal_max,
    in_sweep, run_audits, AuditSet,
};
use oddgraph::graph::{canonical_form, emit_graph6, parse_graph6};
use oddgraph::structure::{find_morningstar, girth, has_minor, shortest_cycles, verify_minor_witness};
use oddgraph::{is_irreducibly_even, is_irreducibly_odd, Graph, Parity};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests")
}

fn census(n: usize) -> Vec<Graph> {
    enumerate_irreducibly_odd(n).unwrap().graphs().unwrap()
}

fn triskelion_facts() -> Outcome {
    let t = triskelion();
    ensure(is_irreducibly_odd(&t), || "not irreducibly odd".into())?;
    ensure((t.n(), t.edge_count()) == (6, 6), || format!("{} vertices, {} edges", t.n(), t.edge_count()))?;
    let mut spiked = bull();
    let s = spiked.add_vertex().unwrap();
    // the mouth is the only degree-2 corner of the bull
    let mouth = (0..5).find(|&v| bull().degree(v) == 2).unwrap();
    spiked.add_edge(mouth, s);
    ensure(canonical_form(&spiked) == canonical_form(&t), || "bull plus spike differs".into())?;
    ensure(canonical_form(&morningstar(3).unwrap()) == canonical_form(&t), || "M3 differs".into())?;
    Ok(format!("g6 {}", emit_graph6(&t)))
}

fn morningstar_family() -> Outcome {
    for k in 3..=12 {
        let m = morningstar(k).unwrap();
        ensure(is_irreducibly_odd(&m), || format!("M{k} not irreducibly odd"))?;
        ensure(girth(&m) == Some(k), || format!("M{k} has girth {:?}", girth(&m)))?;
    }
    Ok("k = 3..12".into())
}

fn tree_lemma() -> Outcome {
    let mut total = 0;
    for n in 1..=10 {
        let trees = enumerate_trees(n);
        total += trees.len();
        if let Some(t) = trees.iter().find(|t| is_irreducibly_odd(t)) {
            return Err(format!("irreducibly odd tree {}", emit_graph6(t)));
        }
    }
    ensure(total == 201, || format!("{total} trees, expected 201"))?;
    Ok(format!("{total} trees, none irreducibly odd"))
}

fn census_counts() -> Outcome {
    let t0 = Instant::now();
    let six = enumerate_irreducibly_odd(6).map_err(|e| e.to_string())?;
    let listed: BTreeSet<String> = six.canon_list.iter().cloned().collect();
    let brute: BTreeSet<String> = brute_force_census(6, Parity::Odd).into_iter().collect();
    ensure(six.count == 3, || format!("n=6 count {}", six.count))?;
    ensure(listed == brute, || "n=6 disagrees with labeled brute force".into())?;
    let wheel = extremal_max(3).unwrap();
    ensure(wheel.edge_count() == 10, || "wheel edge count".into())?;
    for g in [triskelion(), wheel] {
        ensure(listed.contains(&canonical_form(&g).0), || format!("missing {}", emit_graph6(&g)))?;
    }
    let six_time = t0.elapsed();
    ensure(six_time < Duration::from_secs(5), || format!("n=6 took {six_time:?}"))?;

    let mut eight = enumerate_irreducibly_odd(8).map_err(|e| e.to_string())?;
    run_audits(&mut eight, AuditSet::all()).map_err(|e| e.to_string())?;
    let eight = census_circle_flags(eight).map_err(|e| e.to_string())?;
    let golden_g6 = std::fs::read_to_string(core_dir().join("golden/irreducibly_odd_8.g6"))
        .map_err(|e| e.to_string())?;
    let golden_json = std::fs::read_to_string(core_dir().join("golden/irreducibly_odd_8.json"))
        .map_err(|e| e.to_string())?;
    ensure(census_g6_text(&eight) == golden_g6, || "n=8 g6 differs from golden".into())?;
    ensure(census_json_text(&eight) == golden_json, || "n=8 json differs from golden".into())?;
    let table = std::fs::read_to_string(core_dir().join("data/reference_irreducibly_odd.txt"))
        .map_err(|e| e.to_string())?;
    let table_eight = table
        .lines()
        .filter_map(|l| l.split('\t').next())
        .filter(|s| !s.trim().is_empty())
        .filter(|s| parse_graph6(s).is_ok_and(|g| g.n() == 8))
        .count();
    let golden_count = golden_g6.lines().count();
    ensure(golden_count == table_eight && golden_count == 58, || {
        format!("golden {golden_count}, table {table_eight}")
    })?;
    Ok(format!("n=6: 3 in {six_time:.2?}; n=8: golden {golden_count} classes reproduced"))
}

fn minor_corollary() -> Outcome {
    let t = triskelion();
    let mut n_checked = 0;
    for n in [6, 8] {
        for g in census(n) {
            let w = has_minor(&g, &t).map_err(|e| e.to_string())?;
            let w = w.ok_or_else(|| format!("no triskelion minor in {}", emit_graph6(&g)))?;
            ensure(verify_minor_witness(&g, &t, &w), || format!("bad witness for {}", emit_graph6(&g)))?;
            n_checked += 1;
        }
    }
    Ok(format!("{n_checked} witnesses verified"))
}

fn morningstar_theorem() -> Outcome {
    let mut cycles = 0;
    for n in [6, 8] {
        for g in census(n) {
            for c in shortest_cycles(&g).map_err(|e| e.to_string())? {
                let w = find_morningstar(&g, &c).map_err(|e| e.to_string())?;
                ensure(w.is_some_and(|w| w.is_valid_for(&g)), || {
                    format!("cycle {c:?} of {} has no witness", emit_graph6(&g))
                })?;
                cycles += 1;
            }
        }
    }
    Ok(format!("{cycles} shortest cycles witnessed"))
}

fn size_bounds() -> Outcome {
    for k in [3, 4] {
        let (lo, hi) = edge_bounds(k).map_err(|e| e.to_string())?;
        for g in census(2 * k) {
            let e = g.edge_count();
            ensure(lo <= e && e <= hi, || format!("{} has {e} edges", emit_graph6(&g)))?;
        }
        ensure(morningstar(k).unwrap().edge_count() == lo, || format!("M{k} misses {lo}"))?;
        let x = extremal_max(k).unwrap();
        ensure(x.edge_count() == hi && is_irreducibly_odd(&x), || format!("extremal k={k} fails"))?;
    }
    Ok("k = 3, 4 sharp".into())
}

fn duality() -> Outcome {
    let mut pairs = 0;
    for n in [6, 8] {
        for g in census(n) {
            ensure(is_irreducibly_even(&g.complement()), || format!("complement of {}", emit_graph6(&g)))?;
            pairs += 1;
        }
    }
    for n in [2, 4, 6, 8] {
        for g in enumerate_irreducibly_even(n).unwrap().graphs().unwrap() {
            ensure(is_irreducibly_odd(&g.complement()), || format!("complement of {}", emit_graph6(&g)))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} complements"))
}

fn girth5_sufficiency() -> Outcome {
    let p = petersen();
    ensure(in_sweep(&p) && is_irreducibly_odd(&p), || "Petersen".into())?;
    let r = check_girth5_sufficiency(12).map_err(|e| e.to_string())?;
    let rows: Vec<String> = r
        .rows
        .iter()
        .filter(|row| row.swept > 0)
        .map(|row| format!("n={}: {}/{}", row.n, row.irreducibly_odd, row.swept))
        .collect();
    let summary = format!("swept {} graphs ({})", r.swept, rows.join(", "));
    if r.counterexamples.is_empty() {
        return Ok(summary);
    }
    Err(format!(
        "{summary}; {} counterexamples [{}], all a 10-vertex girth-5 graph plus a K2 component \
         (the K2 ends have no distinguisher); {} without an isolated edge",
        r.counterexamples.len(),
        r.counterexamples.join(" "),
        r.counterexamples_without_isolated_edge.len()
    ))
}

fn circle_flags() -> Outcome {
    let six = census_circle_flags(enumerate_irreducibly_odd(6).unwrap()).map_err(|e| e.to_string())?;
    let flagged = six.audits.iter().filter(|a| a.is_circle_graph == Some(true)).count();
    ensure(flagged == 1, || format!("{flagged} circle graphs"))?;
    let d = realize_as_chord_diagram(&triskelion())
        .map_err(|e| e.to_string())?
        .ok_or("triskelion not realized")?;
    ensure(canonical_form(&interlacement_graph(&d)) == canonical_form(&triskelion()), || {
        "interlacement is not the triskelion".into()
    })?;
    let cert = certify_minimal(&d.code()).map_err(|e| e.to_string())?;
    ensure(cert.verdict == Verdict::CertifiedMinimal { crossing_number: 6 }, || {
        format!("verdict {:?}", cert.verdict)
    })?;
    Ok(format!("code {}", d.code()))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().to_str().unwrap().to_owned();
    let mut commands: Vec<Vec<String>> = Vec::new();
    let mut add = |args: &[&str]| {
        commands.push(args.iter().map(|s| s.to_string()).collect());
        let mut json = vec!["--json".to_string()];
        json.extend(args.iter().map(|s| s.to_string()));
        commands.push(json);
    };
    add(&["enumerate", "--n", "8", "--audits", "all"]);
    add(&["enumerate", "--n", "8", "--kind", "even"]);
    add(&["enumerate", "--n", "6", "--audits", "all", "--out", &out]);
    add(&["augment", "--in", "cycle:5", "--trace", "json"]);
    add(&["augment", "--in", "petersen", "--mode", "girth", "--to", "edgelist"]);
    add(&["minor", "--pattern", "triskelion", "--in", "morningstar:5"]);
    add(&["minor", "--pattern", "triskelion", "--in", "complete:4"]);
    add(&["morningstar-witness", "--in", "petersen"]);
    add(&["chord", "interlace", "--code", "1 2 1 3 4 2 5 3 5 6 4 6", "--to", "dot"]);
    add(&["certify", "--code", "a b a c d b e c e f d f"]);
    add(&["formats", "--in", "triskelion", "--to", "edgelist"]);
    add(&["check", "--in", "no-such-graph"]);
    // property part: every 8-vertex census graph through check and realize
    for g in census(8) {
        let spec = format!("g6:{}", emit_graph6(&g));
        add(&["check", "--in", &spec]);
        add(&["chord", "realize", "--in", &spec]);
        add(&["morningstar-witness", "--in", &spec]);
    }
    let snapshot = |args: &[String]| {
        let r = oddgraph_cli::run(args.iter().cloned());
        (r.exit_code(), r.stdout, r.stderr)
    };
    let mut runs = 0;
    for args in &commands {
        let first = snapshot(args);
        for _ in 0..2 {
            ensure(snapshot(args) == first, || format!("{args:?} varies between runs"))?;
            runs += 1;
        }
        let parallel = args.iter().any(|a| a == "enumerate" || a == "realize");
        if parallel {
            for jobs in ["1", "4"] {
                let mut with_jobs = vec!["--jobs".to_string(), jobs.to_string()];
                with_jobs.extend(args.iter().cloned());
                ensure(snapshot(&with_jobs) == first, || format!("{args:?} varies with --jobs {jobs}"))?;
                runs += 1;
            }
        }
    }
    Ok(format!("{} commands, {runs} repeat runs", commands.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("triskelion facts", Duration::from_secs(1), triskelion_facts),
        ("morningstar family", Duration::from_secs(1), morningstar_family),
        ("tree lemma", Duration::from_secs(30), tree_lemma),
        ("census", Duration::from_secs(300), census_counts),
        ("minor corollary", Duration::from_secs(120), minor_corollary),
        ("morningstar theorem", Duration::from_secs(120), morningstar_theorem),
        ("size bounds", Duration::from_secs(10), size_bounds),
        ("duality", Duration::from_secs(60), duality),
        ("girth-5 sufficiency", Duration::from_secs(300), girth5_sufficiency),
        ("circle flags", Duration::from_secs(60), circle_flags),
        ("determinism", Duration::from_secs(600), determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let mut outcome = check();
        let took = t0.elapsed();
        if outcome.is_ok() && took > *limit {
            outcome = Err(format!("took {took:.2?}, limit {limit:?}"));
        }
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({took:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
