//! Thin command-line front end over the `cartan2` library.
//!
//! Exit codes: 0 = ran (and passed, for verification commands); 1 =
//! verification discrepancy; 2 = malformed input.

use std::collections::BTreeSet;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cartan2::diagram::{DiagramJson, Rank2Diagram};
use cartan2::reflection::{orbit, OrbitError, OrbitJson, DEFAULT_ORBIT_CAP};
use cartan2::sequences::{enumerate_aplus, find_window_pattern, is_aplus_by_reduction};
use cartan2::tables::{default_assignments, rows_for, search, verify_row};
use cartan2::units::UnitGroup;
use cartan2::FinitenessVerdict;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "cartan2",
    version,
    about = "Finiteness decisions for rank-2 diagonal braidings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide finiteness of one diagram.
    Classify(ClassifyArgs),
    /// Close a diagram under reflections and emit the exchange graph.
    Orbit(OrbitArgs),
    /// Check or enumerate triangulation sequences.
    Aplus(AplusArgs),
    /// Scan all torsion diagrams of the given moduli against the dataset.
    Search(SearchArgs),
    /// Re-derive the dataset's orbit data from the decision procedure.
    VerifyTables(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct DiagramInput {
    /// Diagram as a JSON file (see README for the schema).
    #[arg(long, conflicts_with_all = ["p", "torsion", "q11", "q22", "q0"])]
    input: Option<String>,
    /// Field characteristic (inline form).
    #[arg(long, requires_all = ["torsion", "q11", "q22", "q0"])]
    p: Option<u64>,
    /// Torsion modulus N (inline form).
    #[arg(long)]
    torsion: Option<u64>,
    /// Torsion exponent of the first vertex label.
    #[arg(long)]
    q11: Option<i64>,
    /// Torsion exponent of the second vertex label.
    #[arg(long)]
    q22: Option<i64>,
    /// Torsion exponent of the edge label q12·q21.
    #[arg(long)]
    q0: Option<i64>,
}

impl DiagramInput {
    fn load(&self) -> Result<Rank2Diagram, String> {
        if let Some(path) = &self.input {
            let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
            let parsed: DiagramJson =
                serde_json::from_str(&text).map_err(|e| format!("invalid diagram JSON: {e}"))?;
            return Rank2Diagram::try_from(&parsed).map_err(|e| e.to_string());
        }
        match (self.p, self.torsion, self.q11, self.q22, self.q0) {
            (Some(p), Some(n), Some(e11), Some(e22), Some(e0)) => {
                let group = UnitGroup::new(p, n, 0).map_err(|e| e.to_string())?;
                Rank2Diagram::new(
                    group.unit(&[], e11),
                    group.unit(&[], e22),
                    group.unit(&[], e0),
                )
                .map_err(|e| e.to_string())
            }
            _ => Err("provide either --input FILE or all of --p --torsion --q11 --q22 --q0".into()),
        }
    }
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    diagram: DiagramInput,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Orbit point cap before reporting an inconclusive verdict.
    #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
    cap: usize,
}

#[derive(Args)]
struct OrbitArgs {
    #[command(flatten)]
    diagram: DiagramInput,
    /// Write the exchange graph as Graphviz DOT to this path.
    #[arg(long)]
    dot: Option<String>,
    #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
    cap: usize,
}

#[derive(Args)]
struct AplusArgs {
    #[command(subcommand)]
    which: AplusCommand,
}

#[derive(Subcommand)]
enum AplusCommand {
    /// Decide membership of a comma-separated sequence, e.g. "2,1,2,1".
    Check { sequence: String },
    /// List all members of the given length.
    Enum { length: usize },
}

#[derive(Args)]
struct SearchArgs {
    /// Field characteristic.
    #[arg(long)]
    p: u64,
    /// Comma-separated torsion moduli to scan.
    #[arg(long, value_delimiter = ',')]
    orders: Vec<u64>,
    /// Worker threads for the scan.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
    cap: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Restrict to one characteristic.
    #[arg(long)]
    p: Option<u64>,
    /// Restrict to one row id, e.g. 17 or 13'.
    #[arg(long)]
    row: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify(args) => cmd_classify(args),
        Command::Orbit(args) => cmd_orbit(args),
        Command::Aplus(args) => cmd_aplus(args),
        Command::Search(args) => cmd_search(args),
        Command::VerifyTables(args) => cmd_verify_tables(args),
    }
}

fn input_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn cmd_classify(args: ClassifyArgs) -> ExitCode {
    let diagram = match args.diagram.load() {
        Ok(d) => d,
        Err(e) => return input_error(&e),
    };
    if args.cap == 0 {
        return input_error("--cap must be at least 1");
    }
    let verdict = cartan2::decide_finite(&diagram, args.cap);
    match args.format {
        Format::Json => {
            let mut value = serde_json::to_value(&verdict).expect("verdict serializes");
            value["schema_version"] = json!(SCHEMA_VERSION);
            println!("{}", serde_json::to_string(&value).expect("json prints"));
        }
        Format::Text => match &verdict {
            FinitenessVerdict::Finite {
                n,
                l,
                roots,
                sequence,
                positive_roots,
            } => {
                println!("finite: n={n} l={l} positive roots={roots}");
                println!(
                    "window: {}",
                    sequence
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                );
                let roots_text = positive_roots
                    .iter()
                    .map(|r| format!("{}a1+{}a2", r.0, r.1))
                    .collect::<Vec<_>>()
                    .join(", ");
                println!("roots: {roots_text}");
            }
            FinitenessVerdict::Infinite { reason, n, l } => {
                println!("infinite: reason={reason:?} n={n} l={l}");
            }
            FinitenessVerdict::NotAllReflections => println!("not all reflections defined"),
            FinitenessVerdict::Inconclusive { cap_hit } => {
                println!("inconclusive: orbit exceeded {cap_hit} points");
            }
        },
    }
    ExitCode::SUCCESS
}

fn cmd_orbit(args: OrbitArgs) -> ExitCode {
    let diagram = match args.diagram.load() {
        Ok(d) => d,
        Err(e) => return input_error(&e),
    };
    if args.cap == 0 {
        return input_error("--cap must be at least 1");
    }
    let graph = match orbit(&diagram, args.cap) {
        Ok(g) => g,
        Err(OrbitError::NotAllReflections) => {
            println!(
                "{}",
                json!({"schema_version": SCHEMA_VERSION, "error": "not_all_reflections"})
            );
            return ExitCode::SUCCESS;
        }
        Err(OrbitError::Diverged { cap }) => {
            println!(
                "{}",
                json!({"schema_version": SCHEMA_VERSION, "error": "diverged", "cap": cap})
            );
            return ExitCode::SUCCESS;
        }
    };
    if let Some(path) = &args.dot {
        if let Err(e) = fs::write(path, graph.to_dot()) {
            return input_error(&format!("cannot write {path}: {e}"));
        }
    }
    let mut value = serde_json::to_value(OrbitJson::from(&graph)).expect("orbit serializes");
    value["schema_version"] = json!(SCHEMA_VERSION);
    println!("{}", serde_json::to_string(&value).expect("json prints"));
    ExitCode::SUCCESS
}

fn cmd_aplus(args: AplusArgs) -> ExitCode {
    match args.which {
        AplusCommand::Check { sequence } => {
            let parsed: Result<Vec<i64>, _> = sequence
                .split(',')
                .map(|s| s.trim().parse::<i64>())
                .collect();
            let seq = match parsed {
                Ok(s) if !s.is_empty() => s,
                _ => return input_error("sequence must be comma-separated integers"),
            };
            let member = is_aplus_by_reduction(&seq);
            let pattern = find_window_pattern(&seq).map(
                |m| json!({"position": m.position, "pattern": m.pattern, "reversed": m.reversed}),
            );
            println!(
                "{}",
                json!({
                    "schema_version": SCHEMA_VERSION,
                    "sequence": seq,
                    "member": member,
                    "pattern": pattern,
                })
            );
            ExitCode::SUCCESS
        }
        AplusCommand::Enum { length } => {
            if length < 2 {
                return input_error("length must be at least 2");
            }
            match enumerate_aplus(length) {
                Ok(members) => {
                    println!(
                        "{}",
                        json!({
                            "schema_version": SCHEMA_VERSION,
                            "length": length,
                            "count": members.len(),
                            "members": members.iter().collect::<Vec<_>>(),
                        })
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => input_error(&e.to_string()),
            }
        }
    }
}

fn cmd_search(args: SearchArgs) -> ExitCode {
    if args.jobs == 0 {
        return input_error("--jobs must be at least 1");
    }
    if args.orders.is_empty() {
        return input_error("--orders must list at least one modulus");
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build();
    let pool = match pool {
        Ok(p) => p,
        Err(e) => return input_error(&format!("cannot build thread pool: {e}")),
    };
    let reports = pool.install(|| search(args.p, &args.orders, args.cap));
    let reports = match reports {
        Ok(r) => r,
        Err(e) => return input_error(&e.to_string()),
    };
    let clean = reports.iter().all(|r| r.is_clean());
    match args.format {
        Format::Json => {
            println!(
                "{}",
                json!({
                    "schema_version": SCHEMA_VERSION,
                    "p": args.p,
                    "clean": clean,
                    "reports": serde_json::to_value(&reports).expect("reports serialize"),
                })
            );
        }
        Format::Text => {
            for r in &reports {
                println!("{}", r.summary());
            }
            println!(
                "{}",
                if clean {
                    "clean"
                } else {
                    "DISCREPANCIES FOUND"
                }
            );
        }
    }
    if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_verify_tables(args: VerifyArgs) -> ExitCode {
    let ps: Vec<u64> = match args.p {
        Some(p) => vec![p],
        None => vec![2, 3, 5, 7, 11, 13],
    };
    let mut all_ok = true;
    let mut lines = Vec::new();
    let mut results = Vec::new();
    let mut row_seen = false;
    for p in &ps {
        for row in rows_for(*p) {
            if let Some(filter) = &args.row {
                if &row.id != filter {
                    continue;
                }
            }
            row_seen = true;
            for assignment in default_assignments(row, *p) {
                match verify_row(row, *p, &assignment) {
                    Ok(report) => {
                        let ok = report.ok();
                        all_ok &= ok;
                        lines.push(format!(
                            "row {:>4} p={:>2}: {}{}",
                            report.row,
                            p,
                            if ok { "ok" } else { "MISMATCH" },
                            if ok {
                                String::new()
                            } else {
                                format!(" ({})", report.mismatches.join("; "))
                            }
                        ));
                        results.push(report);
                    }
                    Err(e) => {
                        all_ok = false;
                        lines.push(format!(
                            "row {:>4} p={p:>2}: instantiation failed: {e}",
                            row.id
                        ));
                    }
                }
            }
        }
    }
    if !row_seen {
        return input_error("no matching rows for the given --p/--row filter");
    }
    match args.format {
        Format::Text => {
            let mut dedup: BTreeSet<String> = BTreeSet::new();
            for line in &lines {
                if dedup.insert(line.clone()) {
                    println!("{line}");
                }
            }
            println!(
                "{}",
                if all_ok {
                    "all rows verified"
                } else {
                    "VERIFICATION FAILED"
                }
            );
        }
        Format::Json => {
            println!(
                "{}",
                json!({
                    "schema_version": SCHEMA_VERSION,
                    "ok": all_ok,
                    "reports": serde_json::to_value(&results).expect("reports serialize"),
                })
            );
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
