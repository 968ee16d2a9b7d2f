//! Command-line front end over graph6 line streams.
//!
//! Subcommands compose through pipes: `enumerate` writes graph6 lines;
//! `chi`, `canon` and `faces` read them from standard input or a file;
//! `verify` re-derives the headline claims; `catalog` prints built-in
//! graphs. Data goes to standard output, diagnostics and statistics to
//! standard error. Exit codes: 0 success (every requested claim passed),
//! 1 a verification claim failed, 2 usage or input error.

use clap::{Parser, Subcommand};
use defekt::{
    builtin, canonical_form, chi_k, emit_graph6, enumerate_triangle_free, face_profile,
    is_mk_colourable, names, parse_graph6, planar_embedding, ChiCmp, ChiFilter,
    ColouringAssignment, SearchConfig, SmallGraph, Verifier,
};
use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "defekt",
    version,
    about = "Exact toolkit for k-defective colouring and triangle-free graph search"
)]
struct Cli {
    /// Worker thread count; the DEFEKT_THREADS variable is the fallback,
    /// then all available cores.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate triangle-free graphs of one order, one graph6 line each.
    Enumerate {
        /// Number of vertices, 1..=12.
        #[arg(long)]
        order: usize,
        /// Keep planar graphs only.
        #[arg(long)]
        planar: bool,
        /// Keep maximal triangle-free planar graphs only (implies --planar).
        #[arg(long)]
        maximal: bool,
        /// Defect bound for the --chi-eq filter.
        #[arg(long = "chi-k")]
        chi_k: Option<usize>,
        /// Keep graphs whose k-defective chromatic number equals this value.
        #[arg(long = "chi-eq")]
        chi_eq: Option<usize>,
        /// Print search statistics to standard error as key=value lines.
        #[arg(long)]
        stats: bool,
    },
    /// Per input graph, the k-defective chromatic number or an m-class decision.
    Chi {
        /// Defect bound k.
        #[arg(long)]
        k: usize,
        /// Decision mode: report SAT/UNSAT for a colouring with m classes.
        #[arg(long)]
        m: Option<usize>,
        /// Read graph6 lines from this file instead of standard input.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Canonical graph6 form of each input graph.
    Canon {
        /// Read graph6 lines from this file instead of standard input.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Face census of each input graph: `n edges f4 f5 lengths...` or NONPLANAR.
    Faces {
        /// Read graph6 lines from this file instead of standard input.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Re-derive a named quantitative claim from scratch and report JSON.
    Verify {
        /// Claim id, e.g. F31P_EQ_11; see --all for the full battery.
        #[arg(long)]
        claim: Option<String>,
        /// Run every claim.
        #[arg(long)]
        all: bool,
        /// Emit one pretty-printed JSON array instead of one object per line.
        #[arg(long)]
        json: bool,
    },
    /// Print a built-in graph with its label map, or list all names.
    Catalog {
        /// Entry name, e.g. G5 or Gp1; omitted lists the available names.
        #[arg(long)]
        name: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("defekt: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let threads = thread_count(cli.threads)?;
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    let code = match cli.command {
        Command::Enumerate {
            order,
            planar,
            maximal,
            chi_k,
            chi_eq,
            stats,
        } => cmd_enumerate(&mut out, order, planar, maximal, chi_k, chi_eq, stats)?,
        Command::Chi { k, m, input } => cmd_chi(&mut out, k, m, &input)?,
        Command::Canon { input } => cmd_canon(&mut out, &input)?,
        Command::Faces { input } => cmd_faces(&mut out, &input)?,
        Command::Verify { claim, all, json } => cmd_verify(&mut out, claim, all, json)?,
        Command::Catalog { name } => cmd_catalog(&mut out, name)?,
    };
    out.flush().map_err(|e| e.to_string())?;
    Ok(code)
}

/// Resolve the worker count: flag, then DEFEKT_THREADS, then all cores.
fn thread_count(flag: Option<usize>) -> Result<usize, String> {
    if let Some(t) = flag {
        if t == 0 {
            return Err("--threads must be at least 1".to_string());
        }
        return Ok(t);
    }
    match std::env::var("DEFEKT_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t >= 1)
            .ok_or_else(|| format!("DEFEKT_THREADS must be a positive integer, got {v:?}")),
        Err(_) => Ok(std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)),
    }
}

/// Parse every graph6 line from the file or standard input, keeping the raw
/// token and its 1-based line number for diagnostics.
fn read_graphs(input: &Option<PathBuf>) -> Result<Vec<(usize, String, SmallGraph)>, String> {
    let text = match input {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("standard input: {e}"))?;
            buf
        }
    };
    let mut graphs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let token = raw.trim();
        if token.is_empty() {
            continue;
        }
        match parse_graph6(token) {
            Ok(g) => graphs.push((idx + 1, token.to_string(), g)),
            Err(e) => return Err(format!("line {}: {e}", idx + 1)),
        }
    }
    Ok(graphs)
}

fn cmd_enumerate(
    out: &mut impl Write,
    order: usize,
    planar: bool,
    maximal: bool,
    chi_k_flag: Option<usize>,
    chi_eq: Option<usize>,
    stats: bool,
) -> Result<ExitCode, String> {
    let chi_filter = match (chi_k_flag, chi_eq) {
        (Some(k), Some(value)) => Some(ChiFilter {
            k,
            cmp: ChiCmp::Eq,
            value,
        }),
        (None, None) => None,
        _ => return Err("--chi-k and --chi-eq must be given together".to_string()),
    };
    let cfg = SearchConfig {
        order,
        require_planar: planar || maximal,
        require_maximal_tfp: maximal,
        chi_filter,
    };
    let (graphs, search_stats) = enumerate_triangle_free(&cfg).map_err(|e| e.to_string())?;
    for g in &graphs {
        writeln!(out, "{}", emit_graph6(g)).map_err(|e| e.to_string())?;
    }
    if stats {
        eprintln!("generated={}", search_stats.generated);
        eprintln!("emitted={}", search_stats.emitted);
        eprintln!("pruned_nonplanar={}", search_stats.pruned_nonplanar);
        eprintln!("pruned_dup={}", search_stats.pruned_dup);
    }
    Ok(ExitCode::SUCCESS)
}

/// Colour classes of an assignment as space-separated groups of
/// comma-separated vertex labels, e.g. `0,2 1,3,4`.
fn class_list(a: &ColouringAssignment) -> String {
    let m = a.colours.iter().copied().max().unwrap_or(0);
    let mut classes = Vec::new();
    for colour in 1..=m {
        let members: Vec<String> = (0..a.colours.len())
            .filter(|&v| a.colours[v] == colour)
            .map(|v| v.to_string())
            .collect();
        if !members.is_empty() {
            classes.push(members.join(","));
        }
    }
    classes.join(" ")
}

fn cmd_chi(
    out: &mut impl Write,
    k: usize,
    m: Option<usize>,
    input: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    for (_, token, g) in read_graphs(input)? {
        let line = match m {
            None => {
                let chi = chi_k(&g, k);
                match is_mk_colourable(&g, chi, k) {
                    Some(a) if !a.colours.is_empty() => {
                        format!("{token} {chi} {}", class_list(&a))
                    }
                    _ => format!("{token} {chi}"),
                }
            }
            Some(m) => match is_mk_colourable(&g, m, k) {
                Some(a) if !a.colours.is_empty() => format!("{token} SAT {}", class_list(&a)),
                Some(_) => format!("{token} SAT"),
                None => format!("{token} UNSAT"),
            },
        };
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_canon(out: &mut impl Write, input: &Option<PathBuf>) -> Result<ExitCode, String> {
    for (_, _, g) in read_graphs(input)? {
        writeln!(out, "{}", canonical_form(&g).key).map_err(|e| e.to_string())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_faces(out: &mut impl Write, input: &Option<PathBuf>) -> Result<ExitCode, String> {
    for (line_no, _, g) in read_graphs(input)? {
        match planar_embedding(&g) {
            Err(e) => return Err(format!("line {line_no}: {e}")),
            Ok(None) => writeln!(out, "NONPLANAR").map_err(|e| e.to_string())?,
            Ok(Some(rot)) => {
                let profile = face_profile(&rot);
                let lengths: Vec<String> =
                    profile.lengths.iter().map(|l| l.to_string()).collect();
                let mut line = format!(
                    "{} {} {} {}",
                    g.order(),
                    g.edge_count(),
                    profile.f4,
                    profile.f5
                );
                if !lengths.is_empty() {
                    line.push(' ');
                    line.push_str(&lengths.join(" "));
                }
                writeln!(out, "{line}").map_err(|e| e.to_string())?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    out: &mut impl Write,
    claim: Option<String>,
    all: bool,
    json: bool,
) -> Result<ExitCode, String> {
    let mut verifier = Verifier::new();
    let reports = match (claim, all) {
        (Some(_), true) => return Err("--claim and --all are mutually exclusive".to_string()),
        (None, false) => return Err("pass --claim <id> or --all".to_string()),
        (None, true) => verifier.verify_all(),
        (Some(id), false) => vec![verifier.verify(&id).map_err(|e| e.to_string())?],
    };
    if json {
        let text = serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())?;
        writeln!(out, "{text}").map_err(|e| e.to_string())?;
    } else {
        for r in &reports {
            let text = serde_json::to_string(r).map_err(|e| e.to_string())?;
            writeln!(out, "{text}").map_err(|e| e.to_string())?;
        }
    }
    if reports.iter().all(|r| r.pass) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_catalog(out: &mut impl Write, name: Option<String>) -> Result<ExitCode, String> {
    match name {
        None => {
            for n in names() {
                writeln!(out, "{n}").map_err(|e| e.to_string())?;
            }
        }
        Some(id) => {
            let entry = builtin(&id).map_err(|e| e.to_string())?;
            writeln!(out, "{}", emit_graph6(&entry.graph)).map_err(|e| e.to_string())?;
            if let Some(labels) = &entry.labels {
                for (v, label) in labels.iter().enumerate() {
                    writeln!(out, "{v}={label}").map_err(|e| e.to_string())?;
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
