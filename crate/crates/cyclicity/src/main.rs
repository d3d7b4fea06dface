//! Command-line front end. Parses inputs, dispatches to the library, and
//! emits text or JSON. Matrix arguments are file paths; `-` reads from
//! standard input so subcommands compose through pipes.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cyclicity::{
    census, compute_table, crp_lower, crp_upper, lift3, CensusParams, Config, Error,
    LatticeSimplex, NamedSimplex, OutputFormat, Verdict,
};

#[derive(Parser)]
#[command(name = "cyclicity", version, about = "Exact computations with lattice simplices: \
quotient groups, emptiness, canonical forms, and censuses of empty p-power simplices")]
struct Cli {
    #[command(flatten)]
    overrides: ConfigOverrides,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConfigOverrides {
    /// Optional TOML config file (flags win over environment over file).
    #[arg(long, global = true)]
    config: Option<String>,
    /// Maximum quotient-group order an oracle call may enumerate.
    #[arg(long, global = true)]
    order_cap: Option<u64>,
    /// Maximum canonicalization search-space size d!*(d+1).
    #[arg(long, global = true)]
    perm_cap: Option<u64>,
    /// Maximum number of candidate subsets a census may enumerate.
    #[arg(long, global = true)]
    enumeration_cap: Option<u64>,
    /// Worker threads for censuses (0 = all available).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Output format: text or json.
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<OutputFormat>,
}

fn parse_format(raw: &str) -> Result<OutputFormat, String> {
    match raw {
        "text" => Ok(OutputFormat::Text),
        "json" => Ok(OutputFormat::Json),
        other => Err(format!("invalid format {other:?}, expected text or json")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Quotient-group divisors, cyclicity rank, and order of a simplex.
    Rank { matrix: String },
    /// Decide emptiness; exits 0 when empty, 1 with a witness otherwise.
    Empty { matrix: String },
    /// Decide hollowness (no interior lattice point).
    Hollow { matrix: String },
    /// Canonical form up to unimodular equivalence.
    Canon { matrix: String },
    /// Decide unimodular equivalence of two simplices.
    Equiv { m1: String, m2: String },
    /// Emit a named simplex in the shared matrix format.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Exhaustive census over p-power blocks at fixed dimension and rank.
    Census {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        rank: usize,
        /// Apply the sound necessary-condition subset prune.
        #[arg(long)]
        prune: bool,
        /// Partition empty survivors into unimodular equivalence classes.
        #[arg(long)]
        dedupe: bool,
        /// Write the JSON report to this file (refuses to overwrite).
        #[arg(long)]
        out: Option<String>,
    },
    /// Maximal rank of an empty p-power simplex: bounds and witness search.
    Crp {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        dim: usize,
    },
    /// Per-dimension lower/upper bounds and the resulting bracket.
    Table {
        #[arg(long)]
        max_dim: usize,
        /// Comma-separated list of primes, e.g. 2,3.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// White simplex T(p, q) with 1 <= p < q and gcd(p, q) = 1.
    White { p: u64, q: u64 },
    /// Reeve simplex conv{0, e1, e2, e1 + e2 + p*e3}.
    Reeve { p: u64 },
    /// Binary block: first ell weight->=2 vectors of {0,1}^k over prime p.
    Binary { p: u64, k: usize, l: usize },
    /// Dilated standard simplex c * S_d.
    Dilate { c: u64, d: usize },
    /// The empty 8-dimensional 3-power simplex of rank 5.
    Delta8,
    /// Its 9-dimensional zero-row extension, empty with rank 5.
    Delta9,
    /// Apply the 3-power lifting to delta8 `times` times (dim 17, 35, ...).
    Lift {
        #[arg(default_value_t = 1)]
        times: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match resolve_config(&cli.overrides) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    match run(cli.command, &config) {
        Ok(code) => code,
        Err(e) => fail(&e),
    }
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    let code = if err.is_cap_violation() {
        3
    } else if matches!(err, Error::Parse(_)) {
        2
    } else {
        1
    };
    ExitCode::from(code)
}

fn resolve_config(overrides: &ConfigOverrides) -> Result<Config, Error> {
    let mut config = Config::default();
    if let Some(path) = &overrides.config {
        let contents = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read config {path}: {e}")))?;
        config.apply_file(&contents)?;
    }
    config.apply_env(|key| std::env::var(key).ok())?;
    if let Some(v) = overrides.order_cap {
        config.order_cap = v;
    }
    if let Some(v) = overrides.perm_cap {
        config.perm_cap = v;
    }
    if let Some(v) = overrides.enumeration_cap {
        config.enumeration_cap = v;
    }
    if let Some(v) = overrides.workers {
        config.workers = v;
    }
    if let Some(v) = overrides.format {
        config.format = v;
    }
    config.validate()?;
    Ok(config)
}

fn read_input(arg: &str) -> Result<String, Error> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))
    }
}

fn read_simplex(arg: &str) -> Result<LatticeSimplex, Error> {
    LatticeSimplex::parse(&read_input(arg)?)
}

fn run(command: Command, config: &Config) -> Result<ExitCode, Error> {
    let json = config.format == OutputFormat::Json;
    match command {
        Command::Rank { matrix } => {
            let group = read_simplex(&matrix)?.quotient_group();
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "nontrivial_divisors": group.nontrivial_divisors.iter()
                            .map(|m| m.to_string()).collect::<Vec<_>>(),
                        "cyclicity_rank": group.cyclicity_rank,
                        "order": group.order.to_string(),
                        "group": group.to_string(),
                    })
                );
            } else {
                let divisors: Vec<String> =
                    group.nontrivial_divisors.iter().map(|m| m.to_string()).collect();
                println!("divisors: {}", if divisors.is_empty() { "none".into() } else { divisors.join(" ") });
                println!("rank: {}", group.cyclicity_rank);
                println!("order: {}", group.order);
                println!("group: {group}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Empty { matrix } => {
            let cert = read_simplex(&matrix)?.is_empty(config.order_cap)?;
            let witness: Option<Vec<String>> = cert
                .witness
                .as_ref()
                .map(|w| w.iter().map(|v| v.to_string()).collect());
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "verdict": if cert.is_empty() { "empty" } else { "non-empty" },
                        "group_order": cert.group_order.to_string(),
                        "cosets_checked": cert.cosets_checked,
                        "witness": witness,
                    })
                );
            } else if cert.is_empty() {
                println!("empty");
            } else {
                println!("non-empty");
                if let Some(w) = &witness {
                    println!("witness: {}", w.join(" "));
                }
            }
            Ok(if cert.verdict == Verdict::Empty {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Hollow { matrix } => {
            let hollow = read_simplex(&matrix)?.is_hollow(config.order_cap)?;
            if json {
                println!("{}", serde_json::json!({ "hollow": hollow }));
            } else {
                println!("{}", if hollow { "hollow" } else { "not hollow" });
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Canon { matrix } => {
            let canon = read_simplex(&matrix)?.canonical_form(config.perm_cap)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "dim": canon.matrix.rows(),
                        "rows": canon.matrix.to_string_rows(),
                    })
                );
            } else {
                print!("{}", canon.matrix.to_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Equiv { m1, m2 } => {
            let a = read_simplex(&m1)?;
            let b = read_simplex(&m2)?;
            let equivalent = a.is_equivalent_to(&b, config.perm_cap)?;
            if json {
                println!("{}", serde_json::json!({ "equivalent": equivalent }));
            } else {
                println!("{}", if equivalent { "equivalent" } else { "not equivalent" });
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { kind } => {
            let simplex = construct(kind)?;
            if json {
                println!("{}", simplex.to_json());
            } else {
                print!("{}", simplex.to_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { prime, dim, rank, prune, dedupe, out } => {
            let params = CensusParams { p: prime, dim, rank, prune, dedupe };
            let report = census(&params, config)?;
            if let Some(path) = &out {
                // census reports are append-only artifacts
                let mut file = std::fs::OpenOptions::new()
                    .write(true)
                    .create_new(true)
                    .open(path)
                    .map_err(|e| Error::InvalidParams(format!("cannot create {path}: {e}")))?;
                use std::io::Write;
                file.write_all(report.to_json().as_bytes())
                    .map_err(|e| Error::InvalidParams(format!("cannot write {path}: {e}")))?;
            }
            if json {
                println!("{}", report.to_json());
            } else {
                println!("pool: {} columns over {} rows (p = {})", report.pool.size, report.pool.k, prime);
                println!("candidates: {}", report.counts.candidates_enumerated);
                if prune {
                    println!("pruned: {}", report.counts.pruned);
                    println!("oracle checked: {}", report.counts.oracle_checked);
                }
                println!("empty: {}", report.counts.empty_found);
                if let Some(classes) = &report.classes {
                    println!("equivalence classes: {}", classes.len());
                    for (i, class) in classes.iter().enumerate() {
                        println!(
                            "  class {i}: {} survivors, representative #{}",
                            class.size, class.representative
                        );
                    }
                }
                if let Some(path) = &out {
                    println!("report written to {path}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Crp { prime, dim } => {
            let sheet = crp_upper(prime, dim);
            let result = crp_lower(prime, dim, config)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "p": prime,
                        "dim": dim,
                        "upper": sheet,
                        "lower": {
                            "rank": result.rank,
                            "exhaustive": result.exhaustive,
                            "witness_b": result.witness.b_rows_u64(),
                        },
                    })
                );
            } else {
                println!(
                    "upper bounds: log {}, pool {}, linear {}",
                    sheet.log_bound,
                    sheet.pool_bound,
                    sheet.linear_bound.map_or("-".into(), |v| v.to_string())
                );
                println!("combined upper: {}", sheet.combined);
                let kind = if result.exhaustive { "exact" } else { "lower bound only" };
                println!("cr_{prime}({dim}) = {} ({kind})", result.rank);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { max_dim, primes } => {
            let rows = compute_table(&primes, max_dim, config)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rows).expect("serializable"));
            } else {
                println!("{:>3} {:>7} {:>7} {:>8}", "d", "lower", "upper", "cr_e");
                for row in &rows {
                    println!(
                        "{:>3} {:>7} {:>7} {:>8}{}",
                        row.d,
                        row.lower,
                        row.upper,
                        row.bracket(),
                        if row.lower_exhaustive { "" } else { "  (lower not exhaustive)" }
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn construct(kind: ConstructKind) -> Result<LatticeSimplex, Error> {
    match kind {
        ConstructKind::White { p, q } => NamedSimplex::White { p, q }.construct(),
        ConstructKind::Reeve { p } => NamedSimplex::Reeve { p }.construct(),
        ConstructKind::Binary { p, k, l } => {
            Ok(cyclicity::binary_construction(p, k, l)?.to_simplex())
        }
        ConstructKind::Dilate { c, d } => NamedSimplex::Dilate { factor: c, dim: d }.construct(),
        ConstructKind::Delta8 => NamedSimplex::Delta8.construct(),
        ConstructKind::Delta9 => NamedSimplex::Delta9.construct(),
        ConstructKind::Lift { times } => {
            if times < 1 {
                return Err(Error::InvalidParams("lift requires times >= 1".into()));
            }
            let base = NamedSimplex::Delta8.construct()?;
            let mut form = base.p_power().expect("delta8 carries its form").clone();
            for _ in 0..times {
                form = lift3(&form)?;
            }
            Ok(form.to_simplex())
        }
    }
}
