//! Command-line front end. The `ecci` binary is a thin wrapper around
//! [`run`], which writes machine output to `stdout`, diagnostics to
//! `stderr`, and returns the process exit code.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::digraph::Digraph;
use crate::error::Error;
use crate::extremal::{
    enumerate_strong_digraphs, enumerate_tournaments, threads_from_env, verify_theorem,
    ExtremalReport, Objective, SearchOptions, TheoremId, VerificationReport, VerifyParams,
};
use crate::families::{Direction, FamilySpec};
use crate::index::index_report;
use crate::io::{
    parse_edge_list, serialize_edge_list, GeneratePayload, IndexPayload, JsonReport, ReportKind,
};
use crate::metrics::{all_pairs_distances, ecc_profile_with_workers, MATRIX_THRESHOLD};
use crate::random::random_strong_sparse;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_NOT_STRONG: i32 = 2;
pub const EXIT_BAD_PARAMS: i32 = 3;
pub const EXIT_COUNTEREXAMPLE: i32 = 4;
pub const EXIT_CAP: i32 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "ecci",
    version,
    about = "Eccentric connectivity index of strongly connected digraphs"
)]
struct Cli {
    /// Worker threads for exhaustive searches (default: $ECCI_THREADS)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Index, eccentricities and bounds for an edge-list file ("-" for stdin)
    Compute {
        file: PathBuf,
        #[arg(long, conflicts_with = "table")]
        json: bool,
        #[arg(long)]
        table: bool,
        /// Include the md matrix
        #[arg(long)]
        md_matrix: bool,
    },
    /// Emit the edge list of a named family or fixture
    Generate {
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        direction: Option<String>,
        /// Circulant connection set, comma separated
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run a theorem check
    Verify {
        theorem: String,
        #[arg(long, conflicts_with = "n_range")]
        n: Option<usize>,
        /// Inclusive range `A..B`
        #[arg(long)]
        n_range: Option<String>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive extremal search
    Enumerate {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        stat: StatArg,
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        json: bool,
    },
    /// Timing table on a seeded random strong digraph
    Bench {
        #[arg(long, default_value_t = 5000)]
        n: usize,
        /// Arc density; defaults to an average out-degree of 4
        #[arg(long)]
        density: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassArg {
    Tournaments,
    StrongDigraphs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StatArg {
    Min,
    Max,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

/// Maps a library error onto the exit-code contract. `parse_context` marks
/// errors raised while reading an input file.
fn classify(err: &Error, parse_context: bool) -> i32 {
    match err.root() {
        Error::NotStronglyConnected if !parse_context => EXIT_NOT_STRONG,
        Error::OrderCapExceeded { .. } => EXIT_CAP,
        Error::Syntax { .. }
        | Error::HeaderMismatch { .. }
        | Error::EmptyVertexSet
        | Error::LoopArc { .. }
        | Error::DuplicateArc { .. }
        | Error::VertexOutOfRange { .. }
            if parse_context =>
        {
            EXIT_PARSE
        }
        _ => EXIT_BAD_PARAMS,
    }
}

fn fail(err: Error, parse_context: bool) -> Failure {
    Failure::new(classify(&err, parse_context), err.to_string())
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_BAD_PARAMS
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let workers = cli
        .threads
        .filter(|&t| t > 0)
        .unwrap_or_else(threads_from_env);
    match dispatch(cli.command, workers, stdin) {
        Ok((out, code)) => {
            let _ = stdout.write_all(out.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(
    command: Command,
    workers: usize,
    stdin: &mut dyn Read,
) -> Result<(String, i32), Failure> {
    match command {
        Command::Compute {
            file,
            json,
            table: _,
            md_matrix,
        } => compute(&file, json, md_matrix, stdin).map(|s| (s, EXIT_OK)),
        Command::Generate {
            family,
            n,
            direction,
            set,
            output,
            json,
        } => generate(&family, n, direction, set, output, json).map(|s| (s, EXIT_OK)),
        Command::Verify {
            theorem,
            n,
            n_range,
            samples,
            seed,
            allow_large,
            json,
        } => {
            let theorem: TheoremId = theorem.parse().map_err(|e| fail(e, false))?;
            let n_range = match (n, n_range) {
                (Some(n), _) => Some((n, n)),
                (None, Some(r)) => Some(parse_range(&r)?),
                (None, None) => None,
            };
            let params = VerifyParams {
                n_range,
                samples,
                seed,
                search: SearchOptions {
                    workers,
                    allow_large,
                },
            };
            let report = verify_theorem(theorem, &params).map_err(|e| fail(e, false))?;
            let code = if report.pass {
                EXIT_OK
            } else {
                EXIT_COUNTEREXAMPLE
            };
            let out = if json {
                JsonReport::new(ReportKind::Verify, &report).to_json()
            } else {
                render_verification(&report)
            };
            Ok((out, code))
        }
        Command::Enumerate {
            class,
            n,
            stat,
            allow_large,
            json,
        } => {
            let objective = match stat {
                StatArg::Min => Objective::Min,
                StatArg::Max => Objective::Max,
            };
            let opts = SearchOptions {
                workers,
                allow_large,
            };
            let report = match class {
                ClassArg::Tournaments => enumerate_tournaments(n, objective, &opts),
                ClassArg::StrongDigraphs => enumerate_strong_digraphs(n, objective, &opts),
            }
            .map_err(|e| fail(e, false))?;
            let out = if json {
                JsonReport::new(ReportKind::Enumerate, &report).to_json()
            } else {
                render_extremal(&report)
            };
            Ok((out, EXIT_OK))
        }
        Command::Bench { n, density, seed } => bench(n, density, seed).map(|s| (s, EXIT_OK)),
    }
}

fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || {
        Failure::new(
            EXIT_BAD_PARAMS,
            format!("malformed range `{text}`, expected A..B"),
        )
    };
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok((a, b))
}

fn compute(
    file: &PathBuf,
    json: bool,
    md_matrix: bool,
    stdin: &mut dyn Read,
) -> Result<String, Failure> {
    let text = if file.as_os_str() == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(file)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("reading {}: {e}", file.display())))?
    };
    let d = parse_edge_list(&text).map_err(|e| fail(e, true))?;
    let profile = ecc_profile_with_workers(&d, 1).map_err(|e| fail(e, false))?;
    let distances = if md_matrix {
        if d.order() > MATRIX_THRESHOLD {
            return Err(fail(
                Error::MatrixTooLarge {
                    n: d.order(),
                    threshold: MATRIX_THRESHOLD,
                },
                false,
            ));
        }
        Some(all_pairs_distances(&d))
    } else {
        None
    };
    let report = index_report(&d, &profile);
    let payload = IndexPayload::new(&d, report, profile, distances.as_ref());
    Ok(if json {
        JsonReport::new(ReportKind::Index, &payload).to_json()
    } else {
        render_index(&d, &payload)
    })
}

fn generate(
    family: &str,
    n: Option<usize>,
    direction: Option<String>,
    set: Option<Vec<usize>>,
    output: Option<PathBuf>,
    json: bool,
) -> Result<String, Failure> {
    let direction = direction
        .map(|s| s.parse::<Direction>())
        .transpose()
        .map_err(|e| fail(e, false))?;
    let spec = FamilySpec::parse(family, n, direction, set).map_err(|e| fail(e, false))?;
    // Every generator failure, including a non-strong circulant, is a
    // parameter problem here.
    let d = spec
        .generate()
        .map_err(|e| Failure::new(EXIT_BAD_PARAMS, format!("{spec}: {e}")))?;
    let text = if json {
        JsonReport::new(ReportKind::Generate, &GeneratePayload::new(spec, &d)).to_json()
    } else {
        serialize_edge_list(&d)
    };
    match output {
        Some(path) => {
            std::fs::write(&path, text).map_err(|e| {
                Failure::new(EXIT_BAD_PARAMS, format!("writing {}: {e}", path.display()))
            })?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn bench(n: usize, density: Option<f64>, seed: u64) -> Result<String, Failure> {
    let degree = match density {
        Some(p) if !(p > 0.0 && p <= 1.0) => {
            return Err(Failure::new(
                EXIT_BAD_PARAMS,
                format!("density {p} outside (0, 1]"),
            ));
        }
        Some(p) => ((p * (n.saturating_sub(1)) as f64).round() as usize).max(1),
        None => 4,
    };
    let t = Instant::now();
    let d = random_strong_sparse(n, degree.min(n.saturating_sub(1)).max(1), seed)
        .map_err(|e| fail(e, false))?;
    let t_gen = t.elapsed();
    let t = Instant::now();
    let strong = d.is_strongly_connected();
    let t_strong = t.elapsed();
    let t = Instant::now();
    let profile = ecc_profile_with_workers(&d, 1).map_err(|e| fail(e, false))?;
    let t_profile = t.elapsed();
    let t = Instant::now();
    let report = index_report(&d, &profile);
    let t_index = t.elapsed();

    let mut out = String::new();
    writeln!(
        out,
        "n={} arcs={} seed={seed} strong={strong}",
        d.order(),
        d.arc_count()
    )
    .unwrap();
    writeln!(out, "{:<12} {:>12}", "phase", "millis").unwrap();
    for (name, dt) in [
        ("generate", t_gen),
        ("strong", t_strong),
        ("profile", t_profile),
        ("index", t_index),
    ] {
        writeln!(out, "{:<12} {:>12.3}", name, dt.as_secs_f64() * 1e3).unwrap();
    }
    writeln!(
        out,
        "xi={} mrad={} mdiam={}",
        report.xi, report.mrad, report.mdiam
    )
    .unwrap();
    Ok(out)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub(crate) fn render_index(d: &Digraph, p: &IndexPayload) -> String {
    let r = &p.index;
    let mut out = String::new();
    writeln!(out, "{:<14} {}", "n", p.n).unwrap();
    writeln!(out, "{:<14} {}", "arcs", r.arc_count).unwrap();
    writeln!(out, "{:<14} {} (doubled {})", "xi", r.xi, r.xi.doubled()).unwrap();
    writeln!(out, "{:<14} {}", "mrad", r.mrad).unwrap();
    writeln!(out, "{:<14} {}", "mdiam", r.mdiam).unwrap();
    writeln!(
        out,
        "{:<14} [{}, {}]",
        "bounds", r.lower_bound, r.upper_bound
    )
    .unwrap();
    writeln!(out, "{:<14} {}", "bounds hold", yes_no(r.bounds_hold)).unwrap();
    writeln!(out, "{:<14} {}", "bounds tight", yes_no(r.bounds_tight)).unwrap();
    writeln!(out, "{:<14} {}", "self-centered", yes_no(r.self_centered)).unwrap();
    writeln!(out).unwrap();
    writeln!(
        out,
        "{:>6} {:>6} {:>6} {:>6} {:>6} {:>6} {:>12}",
        "vertex", "d+", "d-", "ecc+", "ecc-", "mecc", "contribution"
    )
    .unwrap();
    for c in &r.per_vertex {
        let v = c.vertex;
        writeln!(
            out,
            "{:>6} {:>6} {:>6} {:>6} {:>6} {:>6} {:>12}",
            v,
            d.out_degree(v),
            d.in_degree(v),
            p.profile.ecc_out[v],
            p.profile.ecc_in[v],
            c.mecc,
            c.contribution
        )
        .unwrap();
    }
    if let Some(md) = &p.md_matrix {
        writeln!(out).unwrap();
        writeln!(out, "md matrix").unwrap();
        for row in md {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(out, "{}", cells.join(" ")).unwrap();
        }
    }
    out
}

fn render_verification(r: &VerificationReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{}: {} ({} instances, {})",
        r.theorem_id,
        if r.pass { "pass" } else { "FAIL" },
        r.instances_checked,
        r.parameter_range
    )
    .unwrap();
    if let (Some(seed), Some(samples)) = (r.seed, r.samples) {
        writeln!(out, "seed={seed} samples={samples}").unwrap();
    }
    for note in &r.notes {
        writeln!(out, "  {note}").unwrap();
    }
    if !r.delta_audit.is_empty() {
        writeln!(
            out,
            "{:>4} {:>10} {:>10} {:>12} {:>6}",
            "n", "engine", "tabulated", "closed-form", "match"
        )
        .unwrap();
        for row in &r.delta_audit {
            writeln!(
                out,
                "{:>4} {:>10} {:>10} {:>12} {:>6}",
                row.n,
                row.engine_delta.to_string(),
                row.tabulated_delta.to_string(),
                row.closed_form_value,
                yes_no(row.matches_closed_form)
            )
            .unwrap();
        }
    }
    for audit in &r.fixture_audit {
        writeln!(
            out,
            "  {:<5} computed {:>4}  recorded {:>4}  {}",
            audit.fixture,
            audit.computed.to_string(),
            audit
                .reference
                .map_or_else(|| "-".to_string(), |c| c.to_string()),
            if audit.discrepancy {
                "DISCREPANCY"
            } else {
                "ok"
            }
        )
        .unwrap();
    }
    for f in &r.failures {
        writeln!(out, "counterexample: {f}").unwrap();
    }
    out
}

fn render_extremal(r: &ExtremalReport) -> String {
    let mut out = String::new();
    let class = match r.search_class {
        crate::extremal::SearchClass::Tournaments => "tournaments",
        crate::extremal::SearchClass::StrongDigraphs => "strong-digraphs",
    };
    let stat = match r.objective {
        Objective::Min => "min",
        Objective::Max => "max",
    };
    writeln!(out, "class={class} n={} stat={stat}", r.n).unwrap();
    writeln!(
        out,
        "{stat}={}",
        r.extremal_value
            .map_or_else(|| "none".to_string(), |x| x.to_string())
    )
    .unwrap();
    writeln!(out, "labeled={} strong={}", r.labeled_count, r.strong_count).unwrap();
    writeln!(
        out,
        "witnesses: {} labeled, {} {}",
        r.witness_count_labeled,
        r.witnesses.len(),
        if r.dedup {
            "up to isomorphism"
        } else {
            "labeled (not deduplicated)"
        }
    )
    .unwrap();
    for w in &r.witnesses {
        writeln!(out, "  {w}").unwrap();
    }
    writeln!(out, "bound violations: {}", r.bound_violations).unwrap();
    out
}
