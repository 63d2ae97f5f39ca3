//! Command-line front end. [`run`] does all the work and returns what the
//! binary should print, so tests can drive every subcommand in-process.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use oddgraph::chord::{
    certify_minimal, census_circle_flags, interlacement_graph, parse_gauss_code,
    realize_as_chord_diagram, Verdict, MAX_REALIZE,
};
use oddgraph::construct::{augment, named_graph, AugmentMode};
use oddgraph::enumerate::{
    enumerate_irreducibly_even, enumerate_irreducibly_odd, read_census, run_audits, write_census,
    AuditSet, CensusKind, CensusReport,
};
use oddgraph::graph::{emit_dot, emit_edge_list, emit_graph6, parse_graph_text, Graph};
use oddgraph::oddness::{
    has_double_spike, is_even, is_irreducibly_even, is_irreducibly_odd, is_odd, reducible_pairs,
};
use oddgraph::structure::{find_morningstar, girth, has_minor, shortest_cycles};
use oddgraph::Error;

/// Environment variable naming a directory of cached censuses.
pub const CENSUS_DIR_ENV: &str = "OODGRAPH_CENSUS_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    NotFound,
    Error,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    /// Everything destined for standard output.
    pub stdout: String,
    /// One-line diagnostic for standard error, if any.
    pub stderr: Option<String>,
}

impl CommandResult {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::NotFound => 1,
            Status::Error => 2,
        }
    }

    fn error(message: impl Into<String>) -> Self {
        let message: String = message.into();
        let line = message.lines().next().unwrap_or("").trim().to_owned();
        CommandResult {
            status: Status::Error,
            payload: json!({ "error": line }),
            stdout: String::new(),
            stderr: Some(format!("error: {line}")),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "oddgraph", version, about = "Irreducibly odd graphs and chord diagrams")]
struct Cli {
    /// Print the machine-readable payload instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for enumeration and realization (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Graph file (graph6 or edge list) or a built-in name such as
    /// triskelion, petersen, morningstar:5, cycle:4, complete:4.
    #[arg(long = "in", value_name = "GRAPH")]
    input: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parity and irreducibility report.
    Check(Input),
    /// Embed the graph as an induced subgraph of an irreducibly odd graph.
    Augment {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "bull")]
        mode: ModeArg,
        /// Print the patch trace in this format alongside the graph.
        #[arg(long, value_enum)]
        trace: Option<TraceFormat>,
        #[arg(long, value_enum, default_value = "g6")]
        to: Format,
    },
    /// Census of irreducibly odd (or even) graphs on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "odd")]
        kind: KindArg,
        /// all, none, or a comma list of bounds,minor,morningstar,duality,circle
        #[arg(long, default_value = "none")]
        audits: String,
        /// Directory receiving the .g6 list and .json sidecar.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a minor of the input isomorphic to a pattern.
    Minor {
        #[command(flatten)]
        input: Input,
        /// Pattern graph, as a file or built-in name.
        #[arg(long)]
        pattern: String,
    },
    /// Extend shortest cycles to morningstar subgraphs.
    MorningstarWitness {
        #[command(flatten)]
        input: Input,
        /// A specific shortest cycle, e.g. "0,1,2"; default is every one.
        #[arg(long)]
        cycle: Option<String>,
    },
    /// Chord diagram tools.
    #[command(subcommand)]
    Chord(ChordCommand),
    /// Minimality certificate for a free knot Gauss code.
    Certify {
        #[arg(long)]
        code: String,
        #[arg(long, value_enum)]
        out: Option<CertFormat>,
    },
    /// Convert between graph formats.
    Formats {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "g6")]
        to: Format,
    },
}

#[derive(Subcommand, Debug)]
enum ChordCommand {
    /// Interlacement graph of a Gauss code.
    Interlace {
        #[arg(long)]
        code: String,
        #[arg(long, value_enum, default_value = "g6")]
        to: Format,
    },
    /// Find a chord diagram whose interlacement graph is the input.
    Realize(Input),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Bull,
    Girth,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TraceFormat {
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CertFormat {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Odd,
    Even,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    G6,
    Edgelist,
    Dot,
}

fn render(g: &Graph, to: Format) -> String {
    match to {
        Format::G6 => format!("{}\n", emit_graph6(g)),
        Format::Edgelist => emit_edge_list(g),
        Format::Dot => emit_dot(g),
    }
}

/// Reads a graph file, falling back to a built-in name when no such file
/// exists.
pub fn load_graph(spec: &str) -> oddgraph::Result<Graph> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return parse_graph_text(&text)
            .map_err(|e| Error::Format(format!("{}: {e}", path.display())));
    }
    named_graph(spec).map_err(|e| match e {
        Error::InvalidArgument(_) => {
            Error::InvalidArgument(format!("{spec:?} is neither a readable file nor a built-in graph"))
        }
        other => other,
    })
}

fn ok(payload: Value, text: String, json_out: bool) -> CommandResult {
    finish(Status::Ok, payload, text, json_out, None)
}

fn finish(
    status: Status,
    payload: Value,
    text: String,
    json_out: bool,
    note: Option<String>,
) -> CommandResult {
    let stdout = if json_out {
        let mut s = serde_json::to_string_pretty(&payload).expect("payload serializes");
        s.push('\n');
        s
    } else {
        text
    };
    CommandResult { status, payload, stdout, stderr: note }
}

/// Parses `argv` (without the program name) and runs one subcommand.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("oddgraph"))
        .chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult {
                    status: Status::Ok,
                    payload: Value::Null,
                    stdout: e.to_string(),
                    stderr: None,
                },
                _ => CommandResult::error(e.to_string().trim_start_matches("error: ")),
            };
        }
    };
    let jobs = match cli.jobs {
        Some(0) => return CommandResult::error("--jobs must be at least 1"),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => return CommandResult::error(format!("cannot start {jobs} workers: {e}")),
    };
    let json_out = cli.json;
    pool.install(|| dispatch(cli.command, json_out)).unwrap_or_else(|e| CommandResult::error(e.to_string()))
}

fn dispatch(command: Command, json_out: bool) -> oddgraph::Result<CommandResult> {
    match command {
        Command::Check(input) => check(&load_graph(&input.input)?, json_out),
        Command::Augment { input, mode, trace, to } => {
            let g = load_graph(&input.input)?;
            let mode = match mode {
                ModeArg::Bull => AugmentMode::Bull,
                ModeArg::Girth => AugmentMode::GirthPreserving,
            };
            let (h, steps) = augment(&g, mode)?;
            let payload = json!({
                "input_n": g.n(),
                "output_n": h.n(),
                "added": h.n() - g.n(),
                "graph6": emit_graph6(&h),
                "irreducibly_odd": is_irreducibly_odd(&h),
                "trace": steps,
            });
            let mut text = render(&h, to);
            if trace.is_some() {
                text.push_str(&serde_json::to_string_pretty(&steps).expect("trace serializes"));
                text.push('\n');
            }
            Ok(ok(payload, text, json_out))
        }
        Command::Enumerate { n, kind, audits, out } => enumerate(n, kind, &audits, out, json_out),
        Command::Minor { input, pattern } => {
            let g = load_graph(&input.input)?;
            let p = load_graph(&pattern)?;
            Ok(match has_minor(&g, &p)? {
                Some(w) => {
                    let mut text = String::new();
                    for (q, set) in w.branch_sets.iter().enumerate() {
                        text.push_str(&format!("{q}: {}\n", join(set)));
                    }
                    ok(json!({ "found": true, "branch_sets": w.branch_sets }), text, json_out)
                }
                None => finish(
                    Status::NotFound,
                    json!({ "found": false }),
                    "no minor\n".into(),
                    json_out,
                    Some("not found: the pattern is not a minor of the input".into()),
                ),
            })
        }
        Command::MorningstarWitness { input, cycle } => {
            morningstar_witness(&load_graph(&input.input)?, cycle.as_deref(), json_out)
        }
        Command::Chord(ChordCommand::Interlace { code, to }) => {
            let d = parse_gauss_code(&code)?;
            let g = interlacement_graph(&d);
            let payload = json!({
                "code": d.code(),
                "n": g.n(),
                "edges": g.edge_count(),
                "graph6": emit_graph6(&g),
            });
            Ok(ok(payload, render(&g, to), json_out))
        }
        Command::Chord(ChordCommand::Realize(input)) => {
            let g = load_graph(&input.input)?;
            if g.n() > MAX_REALIZE {
                return Err(Error::UnsupportedSize(format!(
                    "realization supports up to {MAX_REALIZE} vertices, got {}",
                    g.n()
                )));
            }
            Ok(match realize_as_chord_diagram(&g)? {
                Some(d) => ok(json!({ "found": true, "code": d.code() }), format!("{d}\n"), json_out),
                None => finish(
                    Status::NotFound,
                    json!({ "found": false }),
                    "not a circle graph\n".into(),
                    json_out,
                    Some("not found: the graph is not a circle graph".into()),
                ),
            })
        }
        Command::Certify { code, out } => {
            let cert = certify_minimal(&code)?;
            let payload = cert.to_json();
            let text = match out {
                Some(CertFormat::Json) => {
                    let mut s = serde_json::to_string_pretty(&payload).expect("serializes");
                    s.push('\n');
                    s
                }
                _ => match cert.verdict {
                    Verdict::CertifiedMinimal { crossing_number } => {
                        format!("certified minimal: crossing number {crossing_number}\n")
                    }
                    Verdict::Inconclusive => {
                        "inconclusive: interlacement graph is not irreducibly odd\n".into()
                    }
                },
            };
            Ok(ok(payload, text, json_out))
        }
        Command::Formats { input, to } => {
            let g = load_graph(&input.input)?;
            let payload = json!({ "n": g.n(), "edges": g.edge_count(), "graph6": emit_graph6(&g) });
            Ok(ok(payload, render(&g, to), json_out))
        }
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn check(g: &Graph, json_out: bool) -> oddgraph::Result<CommandResult> {
    let pairs: Vec<[usize; 2]> = reducible_pairs(g).iter().map(|p| [p.u, p.v]).collect();
    let payload = json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "odd": is_odd(g),
        "even": is_even(g),
        "irreducibly_odd": is_irreducibly_odd(g),
        "irreducibly_even": is_irreducibly_even(g),
        "reducible_pairs": pairs,
        "double_spike": has_double_spike(g),
        "girth": girth(g),
    });
    let girth_text = girth(g).map_or("none".to_owned(), |k| k.to_string());
    let pair_text: Vec<String> = pairs.iter().map(|[u, v]| format!("{u}-{v}")).collect();
    let text = format!(
        "n: {}\nedges: {}\nodd: {}\neven: {}\nirreducibly_odd: {}\nirreducibly_even: {}\n\
         reducible_pairs: {}\ndouble_spike: {}\ngirth: {girth_text}\n",
        g.n(),
        g.edge_count(),
        is_odd(g),
        is_even(g),
        is_irreducibly_odd(g),
        is_irreducibly_even(g),
        if pair_text.is_empty() { "none".to_owned() } else { pair_text.join(" ") },
        has_double_spike(g),
    );
    Ok(ok(payload, text, json_out))
}

fn morningstar_witness(g: &Graph, cycle: Option<&str>, json_out: bool) -> oddgraph::Result<CommandResult> {
    let cycles = match cycle {
        Some(text) => {
            let c: Vec<usize> = text
                .split(|ch: char| ch == ',' || ch.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::InvalidArgument(format!("bad vertex {t:?} in --cycle")))
                })
                .collect::<oddgraph::Result<_>>()?;
            vec![c]
        }
        None => match shortest_cycles(g) {
            Ok(c) => c,
            Err(Error::NoCycle) => {
                return Ok(finish(
                    Status::NotFound,
                    json!({ "girth": null, "witnesses": [], "all_found": false }),
                    "no cycle\n".into(),
                    json_out,
                    Some("not found: the graph has no cycle".into()),
                ))
            }
            Err(e) => return Err(e),
        },
    };
    let mut witnesses = Vec::new();
    let mut text = String::new();
    let mut all_found = true;
    for c in &cycles {
        let w = find_morningstar(g, c)?;
        match &w {
            Some(w) => text.push_str(&format!("cycle {} spikes {}\n", join(&w.cycle), join(&w.spikes))),
            None => {
                all_found = false;
                text.push_str(&format!("cycle {} no witness\n", join(c)));
            }
        }
        witnesses.push(json!({ "cycle": c, "witness": w }));
    }
    let payload = json!({ "girth": girth(g), "witnesses": witnesses, "all_found": all_found });
    if all_found {
        return Ok(ok(payload, text, json_out));
    }
    Ok(finish(
        Status::NotFound,
        payload,
        text,
        json_out,
        Some("not found: some shortest cycle has no morningstar extension".into()),
    ))
}

fn enumerate(
    n: usize,
    kind: KindArg,
    audits: &str,
    out: Option<PathBuf>,
    json_out: bool,
) -> oddgraph::Result<CommandResult> {
    let audits = AuditSet::parse(audits)?;
    let kind = match kind {
        KindArg::Odd => CensusKind::IrreduciblyOdd,
        KindArg::Even => CensusKind::IrreduciblyEven,
    };
    let mut report = base_census(kind, n)?;
    if kind == CensusKind::IrreduciblyOdd {
        run_audits(&mut report, audits)?;
    } else if audits.any_core() {
        return Err(Error::InvalidArgument("audits apply to irreducibly odd censuses only".into()));
    }
    if audits.circle {
        if n <= MAX_REALIZE {
            report = census_circle_flags(report)?;
        } else {
            let note = format!("circle audit skipped: realization supports up to {MAX_REALIZE} vertices");
            report.note = Some(match report.note.take() {
                Some(prev) => format!("{prev}; {note}"),
                None => note,
            });
        }
    }
    if let Some(dir) = &out {
        write_census(dir, &report)?;
    }
    let payload = serde_json::to_value(&report).expect("census serializes");
    let mut text = format!("n: {}\ncount: {}\n", report.n, report.count);
    if let Some(note) = &report.note {
        text.push_str(&format!("note: {note}\n"));
    }
    let failed = report.failed_audits();
    if !report.audits.is_empty() {
        text.push_str(&format!("audit failures: {}\n", failed.len()));
        let circles = report.audits.iter().filter(|a| a.is_circle_graph == Some(true)).count();
        if report.audits.iter().any(|a| a.is_circle_graph.is_some()) {
            text.push_str(&format!("circle graphs: {circles}\n"));
        }
    }
    for s in &report.canon_list {
        text.push_str(s);
        text.push('\n');
    }
    Ok(ok(payload, text, json_out))
}

/// The census without audits, read from the cache directory when one is
/// configured and populated, computed (and cached) otherwise.
fn base_census(kind: CensusKind, n: usize) -> oddgraph::Result<CensusReport> {
    let cache = std::env::var_os(CENSUS_DIR_ENV).map(PathBuf::from);
    if let Some(dir) = &cache {
        if let Some(mut cached) = read_census(dir, kind, n)? {
            cached.audits.clear();
            return Ok(cached);
        }
    }
    let report = match kind {
        CensusKind::IrreduciblyOdd => enumerate_irreducibly_odd(n)?,
        CensusKind::IrreduciblyEven => enumerate_irreducibly_even(n)?,
    };
    if let Some(dir) = &cache {
        write_census(dir, &report)?;
    }
    Ok(report)
}
