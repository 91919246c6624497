//! Command-line interface: every computation of the library with
//! machine-readable output (text, json, or csv).

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use zeonperm::error::Error;
use zeonperm::exppoly;
use zeonperm::groups;
use zeonperm::johnson;
use zeonperm::jsonio::{self, TriangleKind as IoKind};
use zeonperm::matrix::ExactMatrix;
use zeonperm::permanent;
use zeonperm::subgraphs;
use zeonperm::verify;
use zeonperm::zeon;

#[derive(Parser)]
#[command(
    name = "zeonperm",
    about = "Exact zeon powers, permanents, Johnson expansions, and derangement triangles",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TriangleKind {
    Poly,
    Derangement,
    Arrangement,
}

impl From<TriangleKind> for IoKind {
    fn from(kind: TriangleKind) -> Self {
        match kind {
            TriangleKind::Poly => IoKind::Poly,
            TriangleKind::Derangement => IoKind::Derangement,
            TriangleKind::Arrangement => IoKind::Arrangement,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PowerMethod {
    /// Subpermanents of the given matrix.
    Perm,
    /// Expansion of (sI + tX)^(ell) from the zeon powers of X.
    Sum,
    /// Direct zeon-algebra multiplication.
    Zeon,
}

#[derive(Subcommand)]
enum Command {
    /// Permanent of a matrix file (integer or symbolic entries).
    Per {
        #[arg(long)]
        matrix: String,
    },
    /// The ell-th zeon power of a matrix file.
    ZeonPower {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = PowerMethod::Perm)]
        method: PowerMethod,
    },
    /// Johnson scheme matrices and eigenvalues.
    Johnson {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        k: usize,
        /// With alpha, print the eigenvalue instead of the matrix.
        #[arg(long)]
        alpha: Option<usize>,
    },
    /// Johnson-basis coefficients of (sI + tJ)^(ell).
    Expand {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
    },
    /// Spectrum of (sI + tJ)^(ell), optionally specialized at integers.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<i64>,
        /// Also print the characteristic polynomial (needs --s and --t).
        #[arg(long)]
        charpoly: bool,
    },
    /// Triangles: polynomial P, derangement D, or arrangement A.
    Triangle {
        #[arg(long, value_enum)]
        kind: TriangleKind,
        #[arg(long)]
        n: usize,
    },
    /// The exponential moment polynomial h_{n,m}(s,t).
    Hpoly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Elementary subgraphs of the marked complete graph.
    Subgraphs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        /// List every subgraph with its weight.
        #[arg(long)]
        list: bool,
    },
    /// Cycle index of the group generated by the given permutations.
    CycleIndex {
        /// Generators in cycle notation, e.g. "(1 2 3 4),(1 3)".
        #[arg(long)]
        gens: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = groups::DEFAULT_CLOSURE_CAP)]
        cap: usize,
    },
    /// Orbit counts of the generated group on ell-subsets.
    Orbits {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long, default_value_t = groups::DEFAULT_CLOSURE_CAP)]
        cap: usize,
    },
    /// The three orbit generating functions, which must coincide.
    Molien {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = groups::DEFAULT_CLOSURE_CAP)]
        cap: usize,
    },
    /// Run a named verification suite; exits 0 iff every check passes.
    Verify {
        /// One of the named suites, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0x5EED)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Per { matrix } => {
            let m = load_matrix(matrix)?;
            let per = permanent::permanent(&m);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"n": m.dim(), "permanent": per.to_string()})
                ),
                _ => println!("{per}"),
            }
        }
        Command::ZeonPower { matrix, ell, method } => {
            let m = load_matrix(matrix)?;
            let power = match method {
                PowerMethod::Perm => permanent::zeon_power_perm(&m, *ell)?,
                PowerMethod::Sum => permanent::zeon_power_sum(&m, *ell)?,
                PowerMethod::Zeon => zeon::induced_matrix_zeon(&m, *ell)?,
            };
            print_matrix(&power, cli.format);
        }
        Command::Johnson { n, ell, k, alpha } => match alpha {
            Some(alpha) => {
                let value = johnson::js_eigenvalue(*n, *ell, *k, *alpha)?;
                match cli.format {
                    Format::Json => println!(
                        "{}",
                        serde_json::json!({
                            "n": n, "ell": ell, "k": k, "alpha": alpha,
                            "eigenvalue": value.to_string(),
                            "multiplicity": johnson::js_multiplicity(*n, *alpha),
                        })
                    ),
                    _ => println!("{value}"),
                }
            }
            None => {
                let m = johnson::js_matrix(*n, *ell, *k)?;
                print_matrix(&m, cli.format);
            }
        },
        Command::Expand { n, ell } => {
            let doc = jsonio::expand_doc(*n, *ell)?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string(&doc)?),
                _ => {
                    for c in &doc.coeffs {
                        println!("k={}: {}", c.k, c.poly);
                    }
                }
            }
        }
        Command::Spectrum { n, ell, s, t, charpoly } => {
            let specialized = match (s, t) {
                (Some(s0), Some(t0)) => Some((BigInt::from(*s0), BigInt::from(*t0))),
                _ => None,
            };
            let doc = jsonio::spectrum_doc(
                *n,
                *ell,
                specialized.as_ref().map(|(s0, t0)| (s0, t0)),
                *charpoly,
            )?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string(&doc)?),
                _ => {
                    for e in &doc.spectrum {
                        println!(
                            "alpha={}: eigenvalue {} (multiplicity {})",
                            e.alpha, e.eigenvalue, e.multiplicity
                        );
                    }
                    if let Some(cp) = &doc.charpoly {
                        println!("charpoly: {cp}");
                    }
                }
            }
        }
        Command::Triangle { kind, n } => match cli.format {
            Format::Json => println!("{}", jsonio::triangle_json((*kind).into(), *n)?),
            Format::Csv => print!("{}", jsonio::triangle_csv((*kind).into(), *n)),
            Format::Text => {
                for (i, row) in jsonio::triangle_rows((*kind).into(), *n).iter().enumerate() {
                    println!("n={i}: {}", row.join("; "));
                }
            }
        },
        Command::Hpoly { n, m } => {
            let poly = exppoly::h_poly(*n, *m);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"n": n, "m": m, "poly": poly.to_string()})
                ),
                _ => println!("{poly}"),
            }
        }
        Command::Subgraphs { n, ell, list } => {
            let subs = subgraphs::enumerate_elementary(*n, *ell)?;
            let total = subgraphs::perm_via_subgraphs(*n, *ell)?;
            match cli.format {
                Format::Json => {
                    let items: Vec<serde_json::Value> = subs
                        .iter()
                        .map(|e| {
                            serde_json::json!({
                                "isolated_distinguished": e.isolated_distinguished,
                                "isolated_plain": e.isolated_plain,
                                "edges": e.matching_edges,
                                "cycles": e.cycles,
                                "cycle_count": e.cycle_count(),
                                "weight": e.weight().to_string(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "n": n, "ell": ell, "count": subs.len(),
                            "subgraphs": items,
                            "polynomial": total.to_string(),
                        })
                    );
                }
                _ => {
                    if *list {
                        for e in &subs {
                            let mut line = String::new();
                            write!(
                                line,
                                "d={} c={} weight={}",
                                e.isolated_distinguished,
                                e.cycle_count(),
                                e.weight()
                            )
                            .expect("write to string");
                            if !e.matching_edges.is_empty() {
                                write!(line, " edges={:?}", e.matching_edges)
                                    .expect("write to string");
                            }
                            if !e.cycles.is_empty() {
                                write!(line, " cycles={:?}", e.cycles).expect("write to string");
                            }
                            println!("{line}");
                        }
                    }
                    println!("count={} polynomial={}", subs.len(), total);
                }
            }
        }
        Command::CycleIndex { gens, n, cap } => {
            let group = closure_from_args(gens, *n, *cap)?;
            let zi = groups::cycle_index(&group);
            match cli.format {
                Format::Json => {
                    let terms: Vec<serde_json::Value> = zi
                        .terms
                        .iter()
                        .map(|(ct, count)| {
                            serde_json::json!({
                                "cycle_counts": ct[1..].to_vec(),
                                "elements": count,
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "n": group.n, "order": group.order(), "terms": terms
                        })
                    );
                }
                _ => println!("{zi}"),
            }
        }
        Command::Orbits { gens, n, ell, cap } => {
            let group = closure_from_args(gens, *n, *cap)?;
            let levels: Vec<usize> = match ell {
                Some(l) => vec![*l],
                None => (0..=group.n).collect(),
            };
            let mut counts = Vec::new();
            for l in &levels {
                counts.push(groups::orbit_count_ell_sets(&group, *l)?);
            }
            match cli.format {
                Format::Json => {
                    let items: Vec<serde_json::Value> = levels
                        .iter()
                        .zip(&counts)
                        .map(|(l, c)| serde_json::json!({"ell": l, "orbits": c.to_string()}))
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({"n": group.n, "order": group.order(), "counts": items})
                    );
                }
                _ => {
                    for (l, c) in levels.iter().zip(&counts) {
                        println!("ell={l}: {c}");
                    }
                }
            }
        }
        Command::Molien { gens, n, cap } => {
            let group = closure_from_args(gens, *n, *cap)?;
            let (by_permanent, by_cycle_index, by_orbits) = groups::molien_check(&group)?;
            let equal = by_permanent == by_cycle_index && by_cycle_index == by_orbits;
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "n": group.n,
                        "order": group.order(),
                        "permanent_avg": by_permanent.to_string_with("t"),
                        "cycle_index_subst": by_cycle_index.to_string_with("t"),
                        "orbit_series": by_orbits.to_string_with("t"),
                        "equal": equal,
                    })
                ),
                _ => {
                    println!("permanent average : {}", by_permanent.to_string_with("t"));
                    println!("cycle index subst : {}", by_cycle_index.to_string_with("t"));
                    println!("orbit series      : {}", by_orbits.to_string_with("t"));
                    println!("equal: {equal}");
                }
            }
            if !equal {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Verify { suite, seed } => {
            let results = verify::run_suite(suite, *seed)?;
            let mut failed = 0usize;
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                println!("{status} {} - {}", r.name, r.detail);
                if !r.passed {
                    failed += 1;
                }
            }
            println!(
                "{} checks, {} failed (suite `{suite}`, seed {seed})",
                results.len(),
                failed
            );
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_matrix(path: &str) -> Result<ExactMatrix, Error> {
    let text = std::fs::read_to_string(path)?;
    ExactMatrix::from_json_str(&text)
}

fn closure_from_args(
    gens: &str,
    n: Option<usize>,
    cap: usize,
) -> Result<groups::GroupClosure, Error> {
    let degree = match n {
        Some(n) => n,
        None => groups::max_point(gens)
            .ok_or_else(|| Error::Parse("cannot infer n from generators".into()))?,
    };
    let generators = groups::parse_generators(gens, degree)?;
    groups::group_closure(&generators, cap)
}

fn print_matrix(m: &ExactMatrix, format: Format) {
    match format {
        Format::Json => println!("{}", m.to_json_string()),
        Format::Csv => {
            for i in 0..m.dim() {
                let row: Vec<String> = (0..m.dim()).map(|j| m.get(i, j).to_string()).collect();
                println!("{}", row.join(","));
            }
        }
        Format::Text => {
            for i in 0..m.dim() {
                let row: Vec<String> = (0..m.dim()).map(|j| m.get(i, j).to_string()).collect();
                println!("[{}]", row.join(", "));
            }
        }
    }
}
