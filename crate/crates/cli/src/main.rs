//! `wigner`: command-line access to exact moments, free cumulants, the
//! brute-force oracle, enumerations and Monte Carlo estimates.

use std::collections::HashMap;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use wigner_moments::annular::{enumerate_nc2, enumerate_nc_permutations, AnnulusShape, NcClass};
use wigner_moments::formulas::{finite_n_expansion, free_cumulants, moment_oracle, moment_theorem1, DEFAULT_ORACLE_BOUND, MAX_CUMULANT_ORDER};
use wigner_moments::graph::{obstruction_set, LabeledDigraph};
use wigner_moments::montecarlo::{empirical_fluctuation, EntryLaw};
use wigner_moments::partitioned::enumerate_ps_nc2_loop_free;
use wigner_moments::poly::BetaPoly;
use wigner_moments::Error;

#[derive(Parser, Debug)]
#[command(name = "wigner", version, about = "Higher-order moments and free cumulants of Wigner matrices")]
struct Cli {
    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Connected non-crossing permutations of the annulus.
    Nc,
    /// Connected non-crossing pairings of the annulus.
    Nc2,
    /// Loop-free non-crossing partitioned pairings.
    Psnc2lf,
    /// The obstruction set of order `--n`.
    An,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact limiting moment as a polynomial in b2, b4, ...
    Moments {
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<usize>,
        /// Also write the graph T of the shape to this file.
        #[arg(long)]
        dump_graph: Option<PathBuf>,
    },
    /// Table of free cumulants.
    Cumulants {
        #[arg(long, default_value_t = MAX_CUMULANT_ORDER)]
        max_r: usize,
        #[arg(long, default_value_t = 8)]
        max_order: usize,
    },
    /// List a combinatorial family.
    Enumerate {
        family: Family,
        #[arg(long, value_delimiter = ',')]
        orders: Vec<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Compare the pseudo-cumulant formula with the brute-force expansion.
    Oracle {
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        oracle_bound: usize,
        #[arg(long)]
        dump_graph: Option<PathBuf>,
    },
    /// Monte Carlo estimate of a fluctuation moment.
    Mc {
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<usize>,
        #[arg(long, default_value_t = 64)]
        dim: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "gue")]
        law: String,
    },
    /// Exact value at a finite matrix size.
    FiniteN {
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<usize>,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        oracle_bound: usize,
    },
}

/// A failure with its exit status: 2 for unsupported or invalid requests, 1 otherwise.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capability(_) | Error::Domain(_) | Error::InvalidArgument(_) | Error::Parse(_) | Error::OutOfRange { .. } => 2,
            _ => 1,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self { code: 1, message: e.to_string() }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Self { code: 1, message: e.to_string() }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Self { code: 1, message: e.to_string() }
    }
}

#[derive(Serialize)]
struct MomentRecord {
    orders: Vec<usize>,
    alpha: BetaPoly,
}

#[derive(Serialize)]
struct CumulantRecord {
    indices: Vec<usize>,
    kappa: BetaPoly,
}

#[derive(Serialize)]
struct EnumerationRecord {
    family: String,
    count: usize,
    items: Vec<String>,
}

#[derive(Serialize)]
struct OracleRecord {
    orders: Vec<usize>,
    theorem1: BetaPoly,
    oracle: BetaPoly,
    agree: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct McRecord {
    orders: Vec<usize>,
    #[serde(rename = "N")]
    n: usize,
    samples: usize,
    estimate: f64,
    stderr: f64,
    #[serde(rename = "exactGUEorLawValue")]
    exact: f64,
    zscore: f64,
}

#[derive(Serialize)]
struct FiniteNRecord {
    orders: Vec<usize>,
    #[serde(rename = "N")]
    n: u64,
    alpha: BetaPoly,
}

fn orders_text(orders: &[usize]) -> String {
    orders.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")
}

fn emit_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

fn dump(graph: Option<&PathBuf>, shape: &AnnulusShape) -> Result<(), Failure> {
    if let Some(path) = graph {
        std::fs::write(path, LabeledDigraph::of_shape(shape).to_text())?;
    }
    Ok(())
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure { code: 1, message: e.to_string() })?;
    }
    let format = cli.format;
    match cli.command {
        Command::Moments { orders, dump_graph } => {
            let shape = AnnulusShape::new(orders.clone())?;
            dump(dump_graph.as_ref(), &shape)?;
            let alpha = moment_theorem1(&shape)?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&MomentRecord { orders, alpha })?)?,
                Format::Text => writeln!(out, "{alpha}")?,
                Format::Csv => emit_csv(out, &["orders", "alpha"], &[vec![orders_text(&orders), alpha.to_string()]])?,
            }
        }
        Command::Cumulants { max_r, max_order } => {
            let table = free_cumulants(max_r, max_order)?;
            let rows: Vec<CumulantRecord> = table.iter().map(|(k, v)| CumulantRecord { indices: k.clone(), kappa: v.clone() }).collect();
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&rows)?)?,
                Format::Text => {
                    for r in &rows {
                        writeln!(out, "kappa({}) = {}", orders_text(&r.indices), r.kappa)?;
                    }
                }
                Format::Csv => {
                    let rows: Vec<Vec<String>> = rows.iter().map(|r| vec![orders_text(&r.indices), r.kappa.to_string()]).collect();
                    emit_csv(out, &["indices", "kappa"], &rows)?
                }
            }
        }
        Command::Enumerate { family, orders, n } => {
            let items: Vec<String> = match family {
                Family::An => {
                    let n = n.ok_or_else(|| Error::InvalidArgument("--n is required for `an`".into()))?;
                    obstruction_set(n)?.iter().map(|t| t.to_string()).collect()
                }
                _ => {
                    let shape = AnnulusShape::new(orders)?;
                    match family {
                        Family::Nc => enumerate_nc_permutations(&shape, Some(NcClass::Connected)).map(|(p, _)| p.to_string()).collect(),
                        Family::Nc2 => enumerate_nc2(&shape).map(|p| p.to_string()).collect(),
                        _ => enumerate_ps_nc2_loop_free(&shape).map(|p| p.to_string()).collect(),
                    }
                }
            };
            let name = format!("{family:?}").to_lowercase();
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&EnumerationRecord { family: name, count: items.len(), items })?)?,
                Format::Text => {
                    for item in &items {
                        writeln!(out, "{item}")?;
                    }
                }
                Format::Csv => {
                    let rows: Vec<Vec<String>> = items.iter().enumerate().map(|(i, s)| vec![(i + 1).to_string(), s.clone()]).collect();
                    emit_csv(out, &["index", "item"], &rows)?
                }
            }
        }
        Command::Oracle { orders, oracle_bound, dump_graph } => {
            let shape = AnnulusShape::new(orders.clone())?;
            dump(dump_graph.as_ref(), &shape)?;
            let oracle = moment_oracle(&shape, oracle_bound)?;
            let theorem1 = moment_theorem1(&shape)?;
            let agree = oracle == theorem1;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&OracleRecord { orders, theorem1, oracle, agree })?)?,
                Format::Text => {
                    writeln!(out, "theorem1: {theorem1}")?;
                    writeln!(out, "oracle:   {oracle}")?;
                    writeln!(out, "{}", if agree { "PASS" } else { "FAIL" })?;
                }
                Format::Csv => emit_csv(
                    out,
                    &["orders", "theorem1", "oracle", "agree"],
                    &[vec![orders_text(&orders), theorem1.to_string(), oracle.to_string(), agree.to_string()]],
                )?,
            }
            if !agree {
                return Err(Failure { code: 1, message: "formula and oracle disagree".into() });
            }
        }
        Command::Mc { orders, dim, samples, seed, law } => {
            let law: EntryLaw = law.parse()?;
            let shape = AnnulusShape::new(orders.clone())?;
            let betas: HashMap<u32, f64> = law.betas();
            let exact = moment_theorem1(&shape)?.evaluate(&betas)?;
            let f = empirical_fluctuation(&law, dim, &orders, samples, seed)?;
            let rec = McRecord { orders, n: dim, samples, estimate: f.estimate, stderr: f.stderr, exact, zscore: (f.estimate - exact) / f.stderr };
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&rec)?)?,
                Format::Text => writeln!(
                    out,
                    "orders {} N {} samples {}: estimate {:.6} ± {:.6}, exact {:.6}, z {:.3}",
                    orders_text(&rec.orders),
                    rec.n,
                    rec.samples,
                    rec.estimate,
                    rec.stderr,
                    rec.exact,
                    rec.zscore
                )?,
                Format::Csv => emit_csv(
                    out,
                    &["orders", "N", "samples", "estimate", "stderr", "exactGUEorLawValue", "zscore"],
                    &[vec![
                        orders_text(&rec.orders),
                        rec.n.to_string(),
                        rec.samples.to_string(),
                        rec.estimate.to_string(),
                        rec.stderr.to_string(),
                        rec.exact.to_string(),
                        rec.zscore.to_string(),
                    ]],
                )?,
            }
        }
        Command::FiniteN { orders, n, oracle_bound } => {
            let shape = AnnulusShape::new(orders.clone())?;
            let alpha = finite_n_expansion(&shape, n, oracle_bound)?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&FiniteNRecord { orders, n, alpha })?)?,
                Format::Text => writeln!(out, "{alpha}")?,
                Format::Csv => emit_csv(out, &["orders", "N", "alpha"], &[vec![orders_text(&orders), n.to_string(), alpha.to_string()]])?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
