//! Query and verification front end.
//!
//! Exit codes: 0 when everything requested passed, 1 when a verification
//! case failed, 2 on usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cmuni::chartab::{table_hardcoded, table_symmetric, table_wreath, CharacterTable, Hardcoded};
use cmuni::cmgeom::{
    cyclic_cm, g4_fixed_points, g4_surface_checks, mu_d_locus, singularity_report,
};
use cmuni::exact::{format_rational, parse_rational, Rational};
use cmuni::partitions::{k_l_sequences, Abacus, Partition};
use cmuni::unip::{classical_hc, d_series_a, g4_datum, generic_degree_a, ClassicalKind};
use cmuni_cli::{exit_code, render_text, run_check, Caps, ReportBundle, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "cmuni",
    version,
    about = "Exact partition, character-table, series and fixed-point computations with a verification harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Partition combinatorics: cores, quotients, abaci, core sequences.
    Part {
        #[command(subcommand)]
        command: PartCommand,
    },
    /// Generic unipotent data: degrees, series, the G4 datum, classical tables.
    Unip {
        #[command(subcommand)]
        command: UnipCommand,
    },
    /// Explicit fixed-point geometry: cyclic spaces and the G4 model.
    Cm {
        #[command(subcommand)]
        command: CmCommand,
    },
    /// Character tables.
    Chartab {
        #[command(subcommand)]
        command: ChartabCommand,
    },
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct JsonFlag {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum PartCommand {
    /// The d-core of a partition.
    Core {
        #[arg(short = 'd', long)]
        d: u32,
        partition: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// The d-quotient of a partition.
    Quotient {
        #[arg(short = 'd', long)]
        d: u32,
        partition: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// The normalized abacus of a partition.
    Abacus {
        #[arg(short = 'd', long)]
        d: u32,
        partition: String,
        /// Explicit bead count (must keep the normalization).
        #[arg(long)]
        beads: Option<u64>,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// The b, residue, k and l sequences of a d-core.
    Kseq {
        #[arg(short = 'd', long)]
        d: u32,
        partition: String,
        #[command(flatten)]
        json: JsonFlag,
    },
}

#[derive(Subcommand)]
enum UnipCommand {
    /// Type-A data.
    A {
        #[command(subcommand)]
        command: UnipACommand,
    },
    /// The G4 datum.
    G4 {
        #[command(subcommand)]
        command: UnipG4Command,
    },
    /// Classical-type principal tables.
    Classical {
        /// B, D+ or D-.
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        json: JsonFlag,
    },
}

#[derive(Subcommand)]
enum UnipACommand {
    /// The generic degree polynomial of a partition.
    Degree {
        partition: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// The d-series decomposition of the partitions of n.
    Series {
        #[arg(long)]
        n: u32,
        #[arg(short = 'd', long)]
        d: u32,
        #[command(flatten)]
        json: JsonFlag,
    },
}

#[derive(Subcommand)]
enum UnipG4Command {
    /// The ten unipotent data with degrees, families, and series columns.
    Table {
        #[command(flatten)]
        json: JsonFlag,
    },
}

#[derive(Subcommand)]
enum CmCommand {
    /// The cyclic space xy = prod (z - m k_j).
    Cyclic {
        #[arg(long)]
        m: u32,
        /// Comma-separated rational parameter entries.
        #[arg(long)]
        k: String,
        /// What to print: fixed | singular (default: both).
        what: Option<String>,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// The G4 model.
    G4 {
        #[command(subcommand)]
        command: CmG4Command,
    },
}

#[derive(Subcommand)]
enum CmG4Command {
    /// The four scaling-fixed points.
    Points {
        #[command(flatten)]
        json: JsonFlag,
    },
    /// The reduced equations of the mu_d-fixed locus.
    MuLocus {
        #[arg(short = 'd', long)]
        d: u32,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// The surface checks at d in {1, 4, 6}.
    Surfaces {
        #[arg(short = 'd', long)]
        d: u32,
        #[command(flatten)]
        json: JsonFlag,
    },
}

#[derive(Subcommand)]
enum ChartabCommand {
    /// Print a character table.
    Show {
        /// s<N>, wreath:<d>,<r>, b2, g2 or g4.
        #[arg(long)]
        group: String,
        #[command(flatten)]
        json: JsonFlag,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or "all".
    name: String,
    #[arg(long)]
    json: bool,
    /// Seed for the sampled checks (echoed in the report detail).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Optional key=value config file overriding the default caps.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Override: largest core size for k-eq-l.
    #[arg(long)]
    max_size: Option<u64>,
    /// Override: largest d for k-eq-l.
    #[arg(long)]
    max_d: Option<u32>,
    /// Override: n for single-instance suites.
    #[arg(long)]
    n: Option<u32>,
    /// Override: d for single-instance suites.
    #[arg(long)]
    d: Option<u32>,
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

fn parse_rationals(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',')
        .map(|tok| parse_rational(tok).map_err(|e| e.to_string()))
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(message) => usage_error(&message),
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Part { command } => part(command)?,
        Command::Unip { command } => unip(command)?,
        Command::Cm { command } => cm(command)?,
        Command::Chartab { command } => chartab(command)?,
        Command::Verify(args) => return verify(args),
    }
    Ok(ExitCode::SUCCESS)
}

fn part(command: PartCommand) -> Result<(), String> {
    match command {
        PartCommand::Core { d, partition, json } => {
            let p = parse_partition(&partition)?;
            let (core, _) = cmuni::partitions::core_quotient(&p, d);
            if json.json {
                println!("{}", serde_json::to_string(&core).unwrap());
            } else {
                println!("{core}");
            }
        }
        PartCommand::Quotient { d, partition, json } => {
            let p = parse_partition(&partition)?;
            let (_, quo) = cmuni::partitions::core_quotient(&p, d);
            if json.json {
                println!("{}", serde_json::to_string(&quo).unwrap());
            } else {
                println!("{quo}");
            }
        }
        PartCommand::Abacus {
            d,
            partition,
            beads,
            json,
        } => {
            let p = parse_partition(&partition)?;
            let abacus = match beads {
                Some(length) => {
                    Abacus::with_bead_count(&p, d, length).map_err(|e| e.to_string())?
                }
                None => Abacus::new(&p, d),
            };
            if json.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "beads": abacus.beads(),
                        "runners": abacus.runners(),
                        "b": abacus.b_sequence(),
                        "first_gap": abacus.first_gap(),
                    })
                );
            } else {
                println!("beads: {:?}", abacus.beads());
                println!("b: {:?}", abacus.b_sequence());
                println!("first gap: {}", abacus.first_gap());
            }
        }
        PartCommand::Kseq { d, partition, json } => {
            let p = parse_partition(&partition)?;
            let data = k_l_sequences(&p, d).map_err(|e| e.to_string())?;
            if json.json {
                println!("{}", serde_json::to_string(&data).unwrap());
            } else {
                println!("b: {:?}", data.b);
                println!("residues: {:?}", data.residues);
                println!("k: {:?}", data.kseq);
                println!("l: {:?}", data.lseq);
            }
        }
    }
    Ok(())
}

fn unip(command: UnipCommand) -> Result<(), String> {
    match command {
        UnipCommand::A { command } => match command {
            UnipACommand::Degree { partition, json } => {
                let p = parse_partition(&partition)?;
                let degree = generic_degree_a(&p);
                if json.json {
                    println!(
                        "{}",
                        serde_json::json!({ "partition": p, "degree": degree.to_string() })
                    );
                } else {
                    println!("{degree}");
                }
            }
            UnipACommand::Series { n, d, json } => {
                if n == 0 || d == 0 {
                    return Err("n and d must be positive".to_string());
                }
                let blocks = d_series_a(n, d);
                if json.json {
                    println!("{}", serde_json::to_string(&blocks).unwrap());
                } else {
                    for b in blocks {
                        let members: Vec<String> =
                            b.members.iter().map(|m| format!("[{m}]")).collect();
                        println!(
                            "core [{}]: relative {}, parameter {:?}, members {}",
                            b.core,
                            b.pair.relative,
                            b.pair
                                .parameter
                                .orbits
                                .iter()
                                .map(|o| o.iter().map(format_rational).collect::<Vec<_>>())
                                .collect::<Vec<_>>(),
                            members.join(" ")
                        );
                    }
                }
            }
        },
        UnipCommand::G4 { command } => match command {
            UnipG4Command::Table { json } => {
                let datum = g4_datum();
                let series_of = |label: &str, d: u32| -> String {
                    let (_, blocks) = datum.series.iter().find(|(dd, _)| *dd == d).unwrap();
                    let block = blocks
                        .iter()
                        .find(|b| b.members.iter().any(|m| m == label))
                        .unwrap();
                    if block.pair.parabolic == "G4" {
                        "cuspidal".to_string()
                    } else {
                        format!("({},{})", block.pair.parabolic, block.pair.cuspidal)
                    }
                };
                if json.json {
                    let rows: Vec<serde_json::Value> = datum
                        .unipotents
                        .iter()
                        .map(|u| {
                            serde_json::json!({
                                "label": u.label,
                                "degree": u.degree.to_string(),
                                "family": u.family,
                                "series4": series_of(&u.label, 4),
                                "series6": series_of(&u.label, 6),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::json!({ "unipotents": rows }));
                } else {
                    for u in &datum.unipotents {
                        println!(
                            "{:10} family {:8} d4 {:12} d6 {:12} degree {}",
                            u.label,
                            u.family,
                            series_of(&u.label, 4),
                            series_of(&u.label, 6),
                            u.degree
                        );
                    }
                }
            }
        },
        UnipCommand::Classical { kind, n, json } => {
            let kind = match kind.as_str() {
                "B" | "b" => ClassicalKind::B,
                "D+" | "d+" | "Dplus" => ClassicalKind::Dplus,
                "D-" | "d-" | "Dminus" => ClassicalKind::Dminus,
                other => return Err(format!("unknown classical type {other:?}")),
            };
            let tables = classical_hc(kind, n).map_err(|e| e.to_string())?;
            if json.json {
                println!("{}", serde_json::to_string(&tables).unwrap());
            } else {
                for row in &tables.hc {
                    println!(
                        "r = {}: relative {}, parameter {:?}, cuspidal {}",
                        row.r,
                        row.relative,
                        row.parameter
                            .orbits
                            .iter()
                            .map(|o| o.iter().map(format_rational).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                        row.cuspidal
                    );
                }
                let diff = tables.diff();
                if diff.is_empty() {
                    println!("both sides agree");
                } else {
                    for d in diff {
                        println!("MISMATCH: {d}");
                    }
                }
            }
        }
    }
    Ok(())
}

fn cm(command: CmCommand) -> Result<(), String> {
    match command {
        CmCommand::Cyclic { m, k, what, json } => {
            let ks = parse_rationals(&k)?;
            let space = cyclic_cm(m, &ks).map_err(|e| e.to_string())?;
            let report = singularity_report(&space);
            let what = what.unwrap_or_else(|| "both".to_string());
            if json.json {
                println!(
                    "{}",
                    serde_json::json!({ "space": space, "report": report })
                );
            } else {
                println!("roots: {:?}", space.roots);
                if what == "fixed" || what == "both" {
                    println!("fixed points at z in {:?}", report.fixed_points);
                }
                if what == "singular" || what == "both" {
                    if report.singular.is_empty() {
                        println!("smooth");
                    } else {
                        for (root, label) in &report.singular {
                            println!("singularity {label} at z = {root}");
                        }
                    }
                }
            }
        }
        CmCommand::G4 { command } => match command {
            CmG4Command::Points { json } => {
                let points = g4_fixed_points();
                if json.json {
                    println!("{}", serde_json::to_string(&points).unwrap());
                } else {
                    for p in points {
                        println!(
                            "{:8} family {:8} (c, e) = ({}, {})",
                            p.name,
                            p.family,
                            format_rational(p.c()),
                            format_rational(p.e())
                        );
                    }
                }
            }
            CmG4Command::MuLocus { d, json } => {
                if d != 4 && d != 6 {
                    return Err("mu-locus is tabulated for d in {4, 6}".to_string());
                }
                let locus = mu_d_locus(d);
                if json.json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "d": locus.d,
                            "survivors": locus.survivors,
                            "dropped": locus.dropped,
                            "equations": locus.equations.iter()
                                .map(|(i, eq)| serde_json::json!({"index": i, "equation": eq.to_string()}))
                                .collect::<Vec<_>>(),
                        })
                    );
                } else {
                    println!("survivors: {:?}", locus.survivors);
                    println!("identically zero: equations {:?}", locus.dropped);
                    for (i, eq) in &locus.equations {
                        println!("eq {i}: {eq} = 0");
                    }
                }
            }
            CmG4Command::Surfaces { d, json } => {
                if d != 1 && d != 4 && d != 6 {
                    return Err("surfaces are tabulated for d in {1, 4, 6}".to_string());
                }
                let report = g4_surface_checks(d);
                if json.json {
                    println!("{}", serde_json::to_string(&report).unwrap());
                } else {
                    for c in &report.checks {
                        println!(
                            "{} {}: {}",
                            if c.pass { "PASS" } else { "FAIL" },
                            c.id,
                            c.detail
                        );
                    }
                }
            }
        },
    }
    Ok(())
}

fn chartab(command: ChartabCommand) -> Result<(), String> {
    match command {
        ChartabCommand::Show { group, json } => {
            let table = parse_group(&group)?;
            if json.json {
                println!("{}", serde_json::to_string(&table.to_json()).unwrap());
            } else {
                print_table(&table);
            }
        }
    }
    Ok(())
}

fn parse_group(spec: &str) -> Result<CharacterTable, String> {
    let lower = spec.to_lowercase();
    if let Some(n) = lower.strip_prefix('s') {
        if let Ok(n) = n.parse::<u32>() {
            return table_symmetric(n).map_err(|e| e.to_string());
        }
    }
    if let Some(rest) = lower.strip_prefix("wreath:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() == 2 {
            let d = parts[0].trim().parse::<u32>().map_err(|e| e.to_string())?;
            let r = parts[1].trim().parse::<u32>().map_err(|e| e.to_string())?;
            return table_wreath(d, r).map_err(|e| e.to_string());
        }
    }
    match lower.as_str() {
        "b2" => Ok(table_hardcoded(Hardcoded::B2)),
        "g2" => Ok(table_hardcoded(Hardcoded::G2)),
        "g4" => Ok(table_hardcoded(Hardcoded::G4)),
        _ => Err(format!(
            "unknown group {spec:?}; use s<N>, wreath:<d>,<r>, b2, g2 or g4"
        )),
    }
}

fn print_table(table: &CharacterTable) {
    println!(
        "group {} of order {} ({} classes)",
        table.group,
        table.order(),
        table.num_classes()
    );
    let headers: Vec<String> = table.classes.iter().map(|c| c.label.to_string()).collect();
    println!("classes: {}", headers.join("  "));
    println!(
        "sizes:   {}",
        table
            .classes
            .iter()
            .map(|c| c.size.to_string())
            .collect::<Vec<_>>()
            .join("  ")
    );
    println!(
        "cod:     {}",
        table
            .classes
            .iter()
            .map(|c| c.cod.to_string())
            .collect::<Vec<_>>()
            .join("  ")
    );
    for (i, label) in table.irreducibles.iter().enumerate() {
        let row: Vec<String> = table.values[i].iter().map(|v| v.to_string()).collect();
        println!("{:16} {}", label.to_string(), row.join("  "));
    }
    for orbit in &table.reflection_orbits {
        println!(
            "reflection orbit {}: e = {}, size = {}",
            orbit.label, orbit.e, orbit.size
        );
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let caps = match &args.config {
        Some(path) => Caps::from_config(path)?,
        None => Caps::default(),
    };
    let opts = VerifyOptions {
        seed: args.seed,
        n: args.n,
        d: args.d,
        max_size: args.max_size,
        max_d: args.max_d,
    };
    let reports = run_check(&args.name, &caps, &opts)?;
    if args.json {
        if args.name == "all" {
            let bundle = ReportBundle::new(reports.clone());
            println!("{}", serde_json::to_string_pretty(&bundle).unwrap());
        } else {
            for r in &reports {
                println!("{}", serde_json::to_string_pretty(r).unwrap());
            }
        }
    } else {
        for r in &reports {
            print!("{}", render_text(r));
        }
    }
    Ok(ExitCode::from(exit_code(&reports) as u8))
}
