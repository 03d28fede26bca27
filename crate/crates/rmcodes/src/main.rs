use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rmcodes::bounds::{self, PlotkinBound};
use rmcodes::codes::{LinearCode, Verdict};
use rmcodes::gf2m::FieldTable;
use rmcodes::rm::{self, SubcodeFamily, SubcodeSpec};
use rmcodes::table1;

/// Construct Reed-Muller codes and their sub-code families, compute exact
/// weight distributions, and run the structural verifiers.
#[derive(Parser)]
#[command(name = "rmcodes", version, about)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for internally parallel computations (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Enumeration cap: refuse brute-force walks beyond 2^K codewords.
    #[arg(long, global = true, value_name = "K", default_value_t = 30)]
    budget_bits: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a code, write it as a code file and print `n k d_min`.
    Gen {
        /// Which construction to build.
        kind: GenKind,
        /// Number of Boolean variables / field degree.
        #[arg(long)]
        m: u32,
        /// Family parameter d (sub-code kinds only).
        #[arg(long)]
        d: Option<u32>,
        /// Output path for the code file.
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the weight distribution of a code file as CSV `weight,count`.
    Weights {
        /// Code file (`n k` header, then k generator rows of 0/1 characters).
        file: PathBuf,
        /// enumerate: Gray-code walk over all codewords;
        /// coset-rank: per-coset symplectic rank law (needs R(1,m) inside).
        #[arg(long, value_enum, default_value_t = WeightMethod::Enumerate)]
        method: WeightMethod,
        /// m for the coset-rank method (inferred from n = 2^m when omitted).
        #[arg(long)]
        m: Option<u32>,
    },
    /// Rebuild the bundled reference table of R(2,m) sub-codes and compare
    /// the computed parameters against it.
    Table1,
    /// Check a code file for equivalence to the first order Reed-Muller code.
    VerifyRm1 {
        /// Code file to verify.
        file: PathBuf,
    },
    /// List the additive group of full-rank symplectic matrices for even m.
    SymplecticGroup {
        #[arg(long)]
        m: u32,
    },
    /// Evaluate the Plotkin, Hamming and Grey-Rankin bounds for [n, k, d].
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        d: u64,
    },
    /// Verify the sub-code containment chain for a given m.
    Nesting {
        #[arg(long)]
        m: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Rm1,
    Rm2,
    Simplex,
    Orthogonal,
    SubcodeEven,
    SubcodeOdd1,
    SubcodeOdd2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WeightMethod {
    Enumerate,
    CosetRank,
}

/// Anything that should abort with a usage-style diagnostic (exit code 2).
struct Fail(String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("rmcodes: failed to configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(msg)) => {
            eprintln!("rmcodes: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Fail> {
    match &cli.command {
        Command::Gen { kind, m, d, out } => cmd_gen(cli, *kind, *m, *d, out),
        Command::Weights { file, method, m } => cmd_weights(cli, file, *method, *m),
        Command::Table1 => cmd_table1(cli),
        Command::VerifyRm1 { file } => cmd_verify_rm1(cli, file),
        Command::SymplecticGroup { m } => cmd_symplectic_group(cli, *m),
        Command::Bounds { n, k, d } => cmd_bounds(cli, *n, *k, *d),
        Command::Nesting { m } => cmd_nesting(cli, *m),
    }
}

fn subcode_spec(kind: GenKind, m: u32, d: Option<u32>) -> Result<SubcodeSpec, Fail> {
    let family = match kind {
        GenKind::SubcodeEven => SubcodeFamily::Even,
        GenKind::SubcodeOdd1 => SubcodeFamily::OddFirst,
        GenKind::SubcodeOdd2 => SubcodeFamily::OddSecond,
        _ => unreachable!(),
    };
    let d = d.ok_or_else(|| Fail(format!("--d is required for the {} family", family.name())))?;
    Ok(SubcodeSpec::new(m, d, family)?)
}

fn cmd_gen(cli: &Cli, kind: GenKind, m: u32, d: Option<u32>, out: &PathBuf) -> Result<u8, Fail> {
    let is_subcode = matches!(
        kind,
        GenKind::SubcodeEven | GenKind::SubcodeOdd1 | GenKind::SubcodeOdd2
    );
    if !is_subcode && d.is_some() {
        return Err(Fail("--d only applies to sub-code kinds".into()));
    }
    let code = match kind {
        GenKind::Rm1 => rm::rm1(m)?,
        GenKind::Rm2 => rm::rm2(m)?,
        GenKind::Simplex => rm::simplex(m)?,
        GenKind::Orthogonal => rm::orthogonal(m)?,
        _ => {
            let spec = subcode_spec(kind, m, d)?;
            let field = FieldTable::new(m)?;
            rm::subcode(&spec, &field)?
        }
    };
    // R(1,m)-containing quadratic codes get the coset-rank method; the rest
    // are small enough to enumerate.
    let d_min = match kind {
        GenKind::Simplex | GenKind::Orthogonal => {
            code.minimum_distance_with_budget(cli.budget_bits)?
        }
        _ => rm::minimum_distance_by_cosets(&code, m)?,
    };
    let file =
        File::create(out).map_err(|e| Fail(format!("cannot write {}: {e}", out.display())))?;
    let mut w = BufWriter::new(file);
    code.write_to(&mut w)?;
    w.flush()?;
    if cli.json {
        println!(
            "{}",
            json!({ "n": code.n(), "k": code.k(), "d_min": d_min, "out": out.display().to_string() })
        );
    } else {
        println!("{} {} {}", code.n(), code.k(), d_min);
    }
    Ok(0)
}

fn read_code(path: &PathBuf) -> Result<LinearCode, Fail> {
    let file =
        File::open(path).map_err(|e| Fail(format!("cannot open {}: {e}", path.display())))?;
    Ok(LinearCode::read_from(BufReader::new(file))?)
}

fn cmd_weights(
    cli: &Cli,
    file: &PathBuf,
    method: WeightMethod,
    m: Option<u32>,
) -> Result<u8, Fail> {
    let code = read_code(file)?;
    if code.k() == 0 {
        return Err(Fail(
            "zero-dimensional code has no weight distribution to report".into(),
        ));
    }
    let dist = match method {
        WeightMethod::Enumerate => code
            .weight_distribution_with_budget(cli.budget_bits)?
            .clone(),
        WeightMethod::CosetRank => {
            let m = match m {
                Some(m) => m,
                None if code.n().is_power_of_two() => code.n().trailing_zeros(),
                None => {
                    return Err(Fail(
                        "coset-rank needs --m (code length is not a power of two)".into(),
                    ))
                }
            };
            if code.n() != 1usize << m {
                return Err(Fail(format!(
                    "--m {m} does not match code length {}",
                    code.n()
                )));
            }
            rm::weight_distribution_by_cosets(&code, m)?
        }
    };
    if cli.json {
        let rows: Vec<_> = dist.iter().map(|(w, c)| json!([w, c])).collect();
        println!("{}", json!({ "weights": rows }));
    } else {
        dist.write_csv(io::stdout().lock())?;
    }
    Ok(0)
}

fn cmd_table1(cli: &Cli) -> Result<u8, Fail> {
    let results = table1::reproduce()?;
    let all_match = results.iter().all(|r| r.matches());
    if cli.json {
        let rows: Vec<_> = results
            .iter()
            .map(|r| {
                json!({
                    "m": r.row.m,
                    "family": r.row.family.name(),
                    "d": r.row.d,
                    "length": r.computed_length,
                    "dimension": r.computed_dimension,
                    "d_minus": r.row.d_minus,
                    "min_distance": r.computed_min_distance,
                    "d_plus": r.row.d_plus,
                    "matches_reference": r.matches(),
                })
            })
            .collect();
        println!("{}", json!({ "rows": rows, "all_match": all_match }));
    } else {
        println!(
            "sub-codes of R(2,m) (d-/d+ are shipped reference values from external code tables)"
        );
        println!("  m  family      d  length  dim   d-  min-dist   d+  status");
        for r in &results {
            println!(
                "{:>3}  {:<10}{:>3}{:>8}{:>5}{:>5}{:>10}{:>5}  {}",
                r.row.m,
                r.row.family.name(),
                r.row.d,
                r.computed_length,
                r.computed_dimension,
                r.row.d_minus,
                r.computed_min_distance,
                r.row.d_plus,
                if r.matches() { "ok" } else { "MISMATCH" }
            );
        }
        if all_match {
            println!("all {} rows match the reference parameters", results.len());
        } else {
            println!("some rows do NOT match the reference parameters");
        }
    }
    Ok(if all_match { 0 } else { 1 })
}

fn cmd_verify_rm1(cli: &Cli, file: &PathBuf) -> Result<u8, Fail> {
    let code = read_code(file)?;
    let cert = code.verify_first_order_rm();
    match &cert.verdict {
        Verdict::Accept => {
            let m = code.n().trailing_zeros();
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "verdict": "accept",
                        "m": m,
                        "column_permutation": cert.column_permutation,
                    })
                );
            } else {
                println!("accept: code is equivalent to R(1,{m})");
                let perm: Vec<String> = cert
                    .column_permutation
                    .iter()
                    .map(|p| p.to_string())
                    .collect();
                println!("column permutation: {}", perm.join(" "));
            }
            Ok(0)
        }
        Verdict::Reject(reason) => {
            if cli.json {
                println!(
                    "{}",
                    json!({ "verdict": "reject", "reason": reason.to_string() })
                );
            } else {
                println!("reject: {reason}");
            }
            Ok(1)
        }
    }
}

fn cmd_symplectic_group(cli: &Cli, m: u32) -> Result<u8, Fail> {
    let field = FieldTable::new(m)?;
    let group = rm::symplectic_group(m, &field)?;
    if cli.json {
        let elements: Vec<_> = group
            .elements()
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let rows: Vec<String> = (0..b.rows()).map(|r| b.row(r).to_string()).collect();
                json!({ "index": i, "rank": b.rank(), "rows": rows })
            })
            .collect();
        println!(
            "{}",
            json!({ "m": m, "cardinality": group.len(), "elements": elements })
        );
    } else {
        println!(
            "symplectic matrix group for m = {m}: {} elements",
            group.len()
        );
        for (i, b) in group.elements().iter().enumerate() {
            let rows: Vec<String> = (0..b.rows()).map(|r| b.row(r).to_string()).collect();
            println!("element {i}  rank {}  {}", b.rank(), rows.join("|"));
        }
    }
    Ok(0)
}

fn cmd_bounds(cli: &Cli, n: u64, k: u64, d: u64) -> Result<u8, Fail> {
    if d < 1 || k > n || d > n {
        return Err(Fail("need 1 <= d <= n and k <= n".into()));
    }
    let plotkin = bounds::plotkin_max(n, d);
    let hamming = bounds::hamming_feasible(n, k, d);
    let grey_rankin = bounds::grey_rankin_max(n, d);
    let cardinality: u128 = 1u128 << k.min(127);
    let plotkin_ok = match plotkin {
        PlotkinBound::Max(max) => cardinality <= max,
        PlotkinBound::NotApplicable => true,
    };
    let feasible = hamming.feasible && plotkin_ok;
    if cli.json {
        let plotkin_json = match plotkin {
            PlotkinBound::Max(max) => json!({ "applicable": true, "max_cardinality": max }),
            PlotkinBound::NotApplicable => json!({ "applicable": false }),
        };
        let gr_json = match &grey_rankin {
            Ok(max) => json!({ "in_region": true, "max_cardinality": max }),
            Err(_) => json!({ "in_region": false }),
        };
        println!(
            "{}",
            json!({
                "n": n, "k": k, "d": d,
                "plotkin": plotkin_json,
                "hamming": { "feasible": hamming.feasible, "tight": hamming.tight },
                "grey_rankin": gr_json,
                "feasible": feasible,
            })
        );
    } else {
        println!("bounds for [{n}, {k}, {d}]:");
        match plotkin {
            PlotkinBound::Max(max) => {
                println!("  Plotkin: at most {max} codewords (code has 2^{k})")
            }
            PlotkinBound::NotApplicable => println!("  Plotkin: not applicable (2d <= n)"),
        }
        if hamming.tight {
            println!("  Hamming: tight (perfect)");
        } else if hamming.feasible {
            println!("  Hamming: feasible");
        } else {
            println!("  Hamming: infeasible");
        }
        match grey_rankin {
            Ok(max) => println!("  Grey-Rankin (self-complementary codes only): at most {max}"),
            Err(_) => println!("  Grey-Rankin: out of validity region"),
        }
        println!(
            "  verdict: {}",
            if feasible { "feasible" } else { "infeasible" }
        );
    }
    Ok(if feasible { 0 } else { 1 })
}

fn cmd_nesting(cli: &Cli, m: u32) -> Result<u8, Fail> {
    let holds = rm::check_nesting(m)?;
    let dmax = if m % 2 == 0 { m / 2 } else { (m - 1) / 2 };
    if cli.json {
        println!("{}", json!({ "m": m, "d_max": dmax, "holds": holds }));
    } else {
        let chain: Vec<String> = (1..=dmax).rev().map(|d| format!("d={d}")).collect();
        println!(
            "containment chain for m = {m} ({}): {}",
            chain.join(" inside "),
            if holds { "holds" } else { "FAILS" }
        );
    }
    Ok(if holds { 0 } else { 1 })
}
