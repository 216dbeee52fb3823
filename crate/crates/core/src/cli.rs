//! Command-line front end. Every subcommand prints one JSON document.
//!
//! Exit codes: 0 on success, 2 for unreadable or malformed input, 3 when the
//! input is well formed but violates a mathematical precondition.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bases::{
    distinct_element_algorithm, elimination_standard_monomials, lex_basis, linear_power_basis_with,
    randomized_realization, separator_basis, separator_map_basis, Basis,
};
use crate::bm::buchberger_moller;
use crate::error::{Error, Result};
use crate::field::{count_ops, PrimeField};
use crate::grn::{reverse_engineer, BasisChoice, TimeSeries};
use crate::normalform::normal_form;
use crate::points::PointSet;
use crate::poly::{MonomialOrder, Polynomial};
use crate::preprocess::{build_point_trie, sigma_algorithm, sigma_algorithm_sorted, TupleSet};

#[derive(Debug, Parser)]
#[command(
    name = "pointbasis",
    version,
    about = "Bases of S/I(P) for finite point sets over prime fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Σ-levels, witness list and matrix, branching factor and comparison counts.
    Preprocess { points: PathBuf },
    /// Build a basis of S/I(P).
    Basis {
        points: PathBuf,
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        construction: ConstructionArgs,
        /// Include field-operation counts.
        #[arg(long)]
        counters: bool,
    },
    /// Normal form of a polynomial with respect to a basis.
    Nf {
        points: PathBuf,
        #[arg(long)]
        prime: u64,
        /// Basis JSON written by `basis`; otherwise the basis is built from the
        /// construction flags.
        #[arg(long)]
        basis: Option<PathBuf>,
        #[command(flatten)]
        construction: ConstructionArgs,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        counters: bool,
    },
    /// Reduced Gröbner basis and standard monomials (Buchberger–Möller).
    Groebner {
        points: PathBuf,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value = "lex")]
        order: String,
    },
    /// Transition polynomials from a time series.
    Reveng {
        series: PathBuf,
        #[arg(long)]
        prime: u64,
        /// The data is already discrete (integers in 0..p).
        #[arg(long)]
        no_discretize: bool,
        #[command(flatten)]
        construction: ConstructionArgs,
        #[arg(long)]
        counters: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Sep,
    Linear,
    Sepmap,
    Lex,
    Elim,
}

#[derive(Debug, Args)]
pub struct ConstructionArgs {
    #[arg(long, value_enum, default_value = "lex")]
    pub construction: Construction,
    /// linear: coefficients of the witness coordinates, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub coefficients: Option<Vec<u64>>,
    /// linear: draw coefficients at random instead.
    #[arg(long)]
    pub randomized: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub max_attempts: usize,
    /// linear: skip the field-size check.
    #[arg(long)]
    pub force: bool,
    /// sepmap: the distinct values of the map at the points.
    #[arg(long, value_delimiter = ',')]
    pub values: Option<Vec<u64>>,
    /// elim: the permutation, 1-based, comma separated; `y_i = x_{tau(i)}`.
    #[arg(long, value_delimiter = ',')]
    pub tau: Option<Vec<usize>>,
    /// elim: order on the witness variables.
    #[arg(long, default_value = "degrevlex")]
    pub order2: String,
}

/// Parses `args` (program name first), runs the command and writes its
/// output. Returns the exit code.
pub fn run<I, S>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(v) => {
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&v).expect("valid JSON")
            );
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_precondition() {
                3
            } else {
                2
            }
        }
    }
}

pub fn execute(command: &Command) -> Result<Value> {
    match command {
        Command::Preprocess { points } => cmd_preprocess(points),
        Command::Basis {
            points,
            prime,
            construction,
            counters,
        } => {
            let pts = load_points(points, *prime)?;
            let ((basis, extra), ops) = count_ops(|| build_basis(&pts, construction));
            let mut v = basis?.to_json();
            if let Some(extra) = extra {
                v["realization"] = extra;
            }
            if *counters {
                v["counters"] = json!({ "field_ops": ops });
            }
            Ok(v)
        }
        Command::Nf {
            points,
            prime,
            basis,
            construction,
            poly,
            counters,
        } => {
            let pts = load_points(points, *prime)?;
            let f = Polynomial::parse(pts.field(), pts.n(), poly)?;
            let basis = match basis {
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    let value: Value =
                        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
                    Basis::from_json(&value, pts)?
                }
                None => build_basis(&pts, construction).0?,
            };
            let (nf, ops) = count_ops(|| normal_form(&f, &basis));
            let mut v = nf?.to_json();
            v["basis"] = json!(basis
                .elements()
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>());
            if *counters {
                v["counters"] = json!({ "field_ops": ops });
            }
            Ok(v)
        }
        Command::Groebner {
            points,
            prime,
            order,
        } => {
            let pts = load_points(points, *prime)?;
            let order = MonomialOrder::parse(order, pts.n())?;
            Ok(buchberger_moller(&pts, &order)?.to_json())
        }
        Command::Reveng {
            series,
            prime,
            no_discretize,
            construction,
            counters,
        } => {
            let (labels, rows) = read_csv(series)?;
            let samples = rows
                .iter()
                .map(|r| r.iter().map(|s| parse_num::<f64>(s)).collect())
                .collect::<Result<Vec<Vec<f64>>>>()?;
            let ts = TimeSeries::new(samples, labels)?;
            let choice = basis_choice(construction, ts.n())?;
            let model = reverse_engineer(&ts, *prime, &choice, *no_discretize)?;
            Ok(model.to_json(*counters))
        }
    }
}

fn cmd_preprocess(path: &Path) -> Result<Value> {
    let (_, rows) = read_csv(path)?;
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_num::<i64>(s)).collect())
        .collect::<Result<Vec<Vec<i64>>>>()?;
    let tuples = TupleSet::new(rows)?;
    let w = sigma_algorithm(&tuples);
    let trie = build_point_trie(&tuples);
    let sorted = sigma_algorithm_sorted(&tuples, false);
    let one_based = |p: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        p.iter()
            .map(|c| c.iter().map(|i| i + 1).collect())
            .collect()
    };
    let levels: Vec<Vec<Vec<usize>>> = (0..=tuples.n()).map(|i| one_based(w.sigma(i))).collect();
    Ok(json!({
        "m": tuples.m(),
        "n": tuples.n(),
        "distinct": w.distinct,
        "partitions": levels,
        "stop_stage": w.stop_stage(),
        "witness_list": w.witness_list,
        "witness_matrix": w.matrix.to_rows(),
        "branching": w.branching,
        "comparisons": {
            "sigma": w.comparisons,
            "trie": trie.comparisons(),
            "sorted": sorted.witness.comparisons,
            "sorted_sort": sorted.sort_comparisons,
        },
    }))
}

/// Builds the basis selected by the flags. For a linear basis the second
/// value describes the realization that was used.
fn build_basis(points: &PointSet, args: &ConstructionArgs) -> (Result<Basis>, Option<Value>) {
    let linear = || -> Result<(Basis, Value)> {
        let witness = points.require_distinct()?;
        if args.randomized {
            let r = randomized_realization(points, args.seed, args.max_attempts)?;
            let b = linear_power_basis_with(points, &r.coordinates, &r.coefficients)?;
            return Ok((
                b,
                json!({ "method": "randomized", "seed": args.seed, "attempts": r.attempts }),
            ));
        }
        if let Some(c) = &args.coefficients {
            let coords = if witness.witness_list.is_empty() {
                vec![1]
            } else {
                witness.witness_list.clone()
            };
            let b = linear_power_basis_with(points, &coords, c)?;
            return Ok((b, json!({ "method": "given" })));
        }
        let d = distinct_element_algorithm(points, args.force)?;
        let b = linear_power_basis_with(points, &d.coordinates, &d.coefficients)?;
        let stages: Vec<Value> = d
            .stages
            .iter()
            .map(|s| {
                json!({
                    "coordinate": s.coordinate,
                    "pairs": s.pairs.iter().map(|&(j, k)| [j + 1, k + 1]).collect::<Vec<_>>(),
                    "forbidden": s.forbidden,
                    "coefficient": s.coefficient,
                    "realization": s.realization,
                })
            })
            .collect();
        Ok((
            b,
            json!({
                "method": "distinct_element",
                "stages": stages,
                "field_ops": d.field_ops,
                "order_comparisons": d.order_comparisons,
            }),
        ))
    };
    match args.construction {
        Construction::Linear => match linear() {
            Ok((b, extra)) => (Ok(b), Some(extra)),
            Err(e) => (Err(e), None),
        },
        Construction::Sep => (separator_basis(points), None),
        Construction::Sepmap => {
            let values = args
                .values
                .clone()
                .unwrap_or_else(|| (0..points.m() as u64).collect());
            (separator_map_basis(points, &values), None)
        }
        Construction::Lex => (lex_basis(points).map(|(b, _)| b), None),
        Construction::Elim => {
            let r = elim_params(args, points.n()).and_then(|(tau, order2)| {
                elimination_standard_monomials(points, &tau, &order2).map(|r| r.basis)
            });
            (r, None)
        }
    }
}

fn elim_params(args: &ConstructionArgs, n: usize) -> Result<(Vec<usize>, MonomialOrder)> {
    let tau = args
        .tau
        .as_ref()
        .ok_or_else(|| Error::Parse("--construction elim needs --tau".into()))?;
    if tau.contains(&0) {
        return Err(Error::InvalidOrder("--tau is 1-based".into()));
    }
    let tau = tau.iter().map(|t| t - 1).collect();
    Ok((tau, MonomialOrder::parse_partial(&args.order2, n)?))
}

fn basis_choice(args: &ConstructionArgs, n: usize) -> Result<BasisChoice> {
    if args.coefficients.is_some() || args.randomized {
        return Err(Error::Parse(
            "reveng picks linear coefficients itself; drop --coefficients/--randomized".into(),
        ));
    }
    Ok(match args.construction {
        Construction::Lex => BasisChoice::Lex,
        Construction::Sep => BasisChoice::Separator,
        Construction::Linear => BasisChoice::Linear { force: args.force },
        Construction::Sepmap => BasisChoice::SeparatorMap {
            values: args.values.clone(),
        },
        Construction::Elim => {
            let (tau, order2) = elim_params(args, n)?;
            BasisChoice::Elim { tau, order2 }
        }
    })
}

fn parse_num<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("not a number: {s:?}")))
}

/// Optional header and the data rows of a CSV file.
type CsvTable = (Option<Vec<String>>, Vec<Vec<String>>);

/// Reads a CSV file. A first row that does not parse as numbers is taken as
/// a header.
fn read_csv(path: &Path) -> Result<CsvTable> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(path)
        .map_err(|e| match e.into_kind() {
            csv::ErrorKind::Io(io) => Error::Io(format!("{}: {io}", path.display())),
            other => Error::Parse(format!("{other:?}")),
        })?;
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        if rec.iter().all(str::is_empty) {
            continue;
        }
        rows.push(rec.iter().map(str::to_string).collect::<Vec<_>>());
    }
    if rows.is_empty() {
        return Err(Error::Parse(format!("{}: no data rows", path.display())));
    }
    let header = rows[0].iter().any(|s| s.parse::<f64>().is_err());
    let labels = if header { Some(rows.remove(0)) } else { None };
    if rows.is_empty() {
        return Err(Error::Parse(format!("{}: no data rows", path.display())));
    }
    Ok((labels, rows))
}

fn load_points(path: &Path, prime: u64) -> Result<PointSet> {
    let field = PrimeField::new(prime)?;
    let (_, rows) = read_csv(path)?;
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_num::<i64>(s)).collect())
        .collect::<Result<Vec<Vec<i64>>>>()?;
    PointSet::new(field, rows)
}
