//! Command-line front end. [`run`] returns the exit code and the text for stdout.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::basis::{block_csv, block_latex, d_block, verify_basis, BasisReport};
use crate::billey::springer_schubert;
use crate::error::{Error, Result};
use crate::fixed_points::{fixed_points, fixed_points_bruteforce, HessenbergFunction};
use crate::matrix_forms::{
    adjacent_pair_matrix, circle_weights, conjugate, count_distinct_highest_forms, highest_form_fillings,
    jordan_matrix, rotated_english_sigma, NilMatrix,
};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::pinball::{betti_numbers, pinball_table, PinballRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "springer", version, about = "Fixed points, pinball rolldowns and Schubert restrictions for Springer varieties")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Reading permutation: rotated-english, identity, or a comma list
    #[arg(long, global = true, default_value = "rotated-english")]
    pub sigma: String,

    /// Hessenberg function: id or a comma list
    #[arg(long, global = true, default_value = "id")]
    pub h: String,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the highest-form fillings of a partition and count distinct highest forms
    HighestForms { partition: String },
    /// Fixed points, fillings, dimension pairs and rolldowns
    Pinball { partition: String },
    /// Fixed points of the circle action as permissible fillings
    FixedPoints {
        partition: String,
        /// Cross-check against exhaustive search over S_n
        #[arg(long)]
        brute_force: bool,
    },
    /// Betti numbers from dimension pairs
    Betti { partition: String },
    /// Build the restriction matrix and check that its columns are independent
    VerifyBasis { partition: String },
    /// Projected restriction p_v(u) of a Schubert class
    Restrict { partition: String, v: String, u: String },
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn invalid(msg: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_INVALID, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text, code)
            };
        }
    };
    match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => Outcome::invalid(e),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::HighestForms { partition } => highest_forms(&partition.parse()?, cli.format),
        Command::Pinball { partition } => {
            let lambda: Partition = partition.parse()?;
            if !parse_h(&cli.h, lambda.n())?.is_identity() {
                return Err(Error::InvalidHessenberg("dimension pairs are defined only for h = id".into()));
            }
            pinball(&lambda, &parse_sigma(&cli.sigma, &lambda)?, cli.format)
        }
        Command::FixedPoints { partition, brute_force } => {
            let lambda: Partition = partition.parse()?;
            let h = parse_h(&cli.h, lambda.n())?;
            let sigma = parse_sigma(&cli.sigma, &lambda)?;
            fixed_points_cmd(&lambda, &h, &sigma, *brute_force, cli.format)
        }
        Command::Betti { partition } => betti(&partition.parse()?, cli.format),
        Command::VerifyBasis { partition } => verify(&partition.parse()?, cli.format),
        Command::Restrict { partition, v, u } => {
            let lambda: Partition = partition.parse()?;
            let sigma = parse_sigma(&cli.sigma, &lambda)?;
            restrict(&lambda, &sigma, &v.parse()?, &u.parse()?, cli.format)
        }
    }
}

pub fn parse_sigma(s: &str, lambda: &Partition) -> Result<Permutation> {
    let sigma = match s.trim() {
        "rotated-english" => rotated_english_sigma(lambda),
        "identity" | "id" => Permutation::identity(lambda.n()),
        other => other.parse()?,
    };
    if sigma.n() != lambda.n() {
        return Err(Error::SizeMismatch { expected: lambda.n(), found: sigma.n() });
    }
    Ok(sigma)
}

pub fn parse_h(s: &str, n: usize) -> Result<HessenbergFunction> {
    let h = match s.trim() {
        "id" | "identity" => HessenbergFunction::identity(n),
        other => other.parse()?,
    };
    if h.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: h.n() });
    }
    Ok(h)
}

fn unsupported(cmd: &str, format: Format) -> Error {
    Error::Parse(format!("format {format:?} is not available for {cmd}").to_lowercase())
}

fn json_out(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn ones_text(m: &NilMatrix) -> String {
    let parts: Vec<String> = m.ones().iter().map(|(i, j)| format!("({i},{j})")).collect();
    format!("{{{}}}", parts.join(","))
}

fn highest_forms(lambda: &Partition, format: Format) -> Result<Outcome> {
    let fills = highest_form_fillings(lambda);
    let mats: Vec<NilMatrix> = fills.iter().map(adjacent_pair_matrix).collect();
    let mut distinct = mats.clone();
    distinct.sort();
    distinct.dedup();
    let formula = count_distinct_highest_forms(lambda)?;
    let code = if distinct.len() as u128 == formula { EXIT_OK } else { EXIT_FAILED };
    let out = match format {
        Format::Text => {
            let mut s = String::new();
            for (t, m) in fills.iter().zip(&mats) {
                writeln!(s, "{t}  {}", ones_text(m)).unwrap();
            }
            writeln!(s, "fillings: {}", fills.len()).unwrap();
            writeln!(s, "distinct matrices: {}", distinct.len()).unwrap();
            writeln!(s, "formula: {formula}").unwrap();
            s
        }
        Format::Json => json_out(&json!({
            "partition": lambda,
            "fillings": fills.iter().zip(&mats).map(|(t, m)| json!({"filling": t, "matrix": m})).collect::<Vec<_>>(),
            "distinct_matrices": distinct.len(),
            "formula": formula as u64,
        })),
        Format::Csv => {
            let mut s = String::from("filling,ones\n");
            for (t, m) in fills.iter().zip(&mats) {
                writeln!(s, "\"{t}\",\"{}\"", ones_text(m)).unwrap();
            }
            s
        }
        Format::Latex => return Err(unsupported("highest-forms", format)),
    };
    Ok(Outcome::ok(out, code))
}

fn dim_pairs_text(r: &PinballRow) -> String {
    let parts: Vec<String> = r.dim_pairs.iter().map(|[a, b]| format!("({a},{b})")).collect();
    format!("{{{}}}", parts.join(","))
}

/// Columns padded to their widest cell and separated by two spaces.
fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            line.push_str(cell);
            if c + 1 < r.len() {
                line.push_str(&" ".repeat(widths[c] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn pinball(lambda: &Partition, sigma: &Permutation, format: Format) -> Result<Outcome> {
    let table = pinball_table(lambda, sigma)?;
    let cells = |r: &PinballRow| {
        vec![
            r.w.to_string(),
            r.w_inv.to_string(),
            r.filling.to_string(),
            dim_pairs_text(r),
            r.deg.to_string(),
            r.omega.to_string(),
            r.roll.to_string(),
        ]
    };
    let header = ["w", "w^-1", "filling", "dim pairs", "deg", "omega", "roll"];
    let out = match format {
        Format::Text => {
            let mut rows = vec![header.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
            rows.extend(table.iter().map(cells));
            align(&rows)
        }
        Format::Json => json_out(&table),
        Format::Csv => {
            let mut s = header.join(",");
            s.push('\n');
            for r in &table {
                let row: Vec<String> = cells(r).into_iter().map(|c| format!("\"{c}\"")).collect();
                s.push_str(&row.join(","));
                s.push('\n');
            }
            s
        }
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{lllllll}\n");
            s.push_str("$w$ & $w^{-1}$ & filling & dimension pairs & deg & $\\omega(x)$ & roll$(w)$ \\\\\n\\hline\n");
            for r in &table {
                let c = cells(r);
                let dp = if r.dim_pairs.is_empty() { "$\\emptyset$".to_string() } else { format!("$\\{{{}\\}}$", &c[3][1..c[3].len() - 1]) };
                writeln!(s, "{} & {} & {} & {} & {} & {} & {} \\\\", c[0], c[1], c[2], dp, c[4], c[5], c[6]).unwrap();
            }
            s.push_str("\\end{tabular}\n");
            s
        }
    };
    Ok(Outcome::ok(out, EXIT_OK))
}

fn fixed_points_cmd(
    lambda: &Partition,
    h: &HessenbergFunction,
    sigma: &Permutation,
    brute_force: bool,
    format: Format,
) -> Result<Outcome> {
    let points = fixed_points(lambda, h, sigma)?;
    let agrees = if brute_force {
        let nil = conjugate(&jordan_matrix(lambda), sigma)?;
        let brute = fixed_points_bruteforce(&nil, h)?;
        Some(brute.iter().eq(points.iter().map(|(w, _)| w)))
    } else {
        None
    };
    let code = if agrees == Some(false) { EXIT_FAILED } else { EXIT_OK };
    let out = match format {
        Format::Text => {
            let rows: Vec<Vec<String>> = points.iter().map(|(w, t)| vec![w.to_string(), t.to_string()]).collect();
            let mut s = align(&rows);
            writeln!(s, "fixed points: {}", points.len()).unwrap();
            if let Some(a) = agrees {
                writeln!(s, "brute force agrees: {}", if a { "yes" } else { "no" }).unwrap();
            }
            s
        }
        Format::Json => json_out(&json!({
            "partition": lambda,
            "h": h,
            "sigma": sigma,
            "fixed_points": points.iter().map(|(w, t)| json!({"w": w, "filling": t})).collect::<Vec<_>>(),
            "brute_force_agrees": agrees,
        })),
        Format::Csv => {
            let mut s = String::from("w,filling\n");
            for (w, t) in &points {
                writeln!(s, "\"{w}\",\"{t}\"").unwrap();
            }
            s
        }
        Format::Latex => return Err(unsupported("fixed-points", format)),
    };
    Ok(Outcome::ok(out, code))
}

fn betti(lambda: &Partition, format: Format) -> Result<Outcome> {
    let b = betti_numbers(lambda)?;
    let total: usize = b.iter().sum();
    let out = match format {
        Format::Text => {
            let parts: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            format!("betti: ({})\ntotal: {total}\n", parts.join(","))
        }
        Format::Json => json_out(&json!({"partition": lambda, "betti": b, "total": total})),
        Format::Csv => {
            let mut s = String::from("k,b_k\n");
            for (k, x) in b.iter().enumerate() {
                writeln!(s, "{k},{x}").unwrap();
            }
            s
        }
        Format::Latex => return Err(unsupported("betti", format)),
    };
    Ok(Outcome::ok(out, EXIT_OK))
}

fn yes(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

fn verify(lambda: &Partition, format: Format) -> Result<Outcome> {
    let report = verify_basis(lambda)?;
    let code = if report.verified() { EXIT_OK } else { EXIT_FAILED };
    let out = match format {
        Format::Text => verify_text(&report),
        Format::Json => json_out(&report),
        Format::Csv => block_csv(&d_block(&report.matrix)?),
        Format::Latex => block_latex(&d_block(&report.matrix)?),
    };
    Ok(Outcome::ok(out, code))
}

fn verify_text(r: &BasisReport) -> String {
    let mut s = String::new();
    writeln!(s, "partition: {}", r.partition).unwrap();
    writeln!(s, "fixed points: {}", r.matrix.size()).unwrap();
    writeln!(s, "rank: {}/{}", r.rank.rank, r.rank.cols).unwrap();
    writeln!(s, "full column rank: {}", yes(r.rank.full_column_rank)).unwrap();
    writeln!(s, "full rank at t=1: {}", yes(r.rank.fast_path_full_rank)).unwrap();
    writeln!(s, "columns homogeneous: {}", yes(r.columns_homogeneous)).unwrap();
    writeln!(s, "rolldown injective: {}", yes(r.rolldown_injective)).unwrap();
    let v = r.upper_triangular.violations.len();
    if v == 0 {
        writeln!(s, "poset-upper-triangular: yes").unwrap();
    } else {
        writeln!(s, "poset-upper-triangular: no ({v} violating pairs)").unwrap();
    }
    if let Some(b) = &r.blocks {
        writeln!(s, "B block zero: {}", yes(b.b_block_zero)).unwrap();
        writeln!(s, "A block equals smaller matrix (equivariant): {}", yes(b.a_block_matches_smaller)).unwrap();
        writeln!(s, "A block full rank: {}", yes(b.a_block_full_rank)).unwrap();
        writeln!(s, "D matches closed form: {}", yes(b.d_block_matches_closed_form)).unwrap();
        writeln!(s, "change of basis lower-triangular: {}", yes(b.change_of_basis.ok())).unwrap();
    }
    writeln!(s, "verified: {}", yes(r.verified())).unwrap();
    s
}

fn restrict(lambda: &Partition, sigma: &Permutation, v: &Permutation, u: &Permutation, format: Format) -> Result<Outcome> {
    let wts = circle_weights(lambda, sigma)?;
    let p = springer_schubert(v, u, &wts)?;
    let out = match format {
        Format::Text => format!("{p}\n"),
        Format::Json => json_out(&p),
        _ => return Err(unsupported("restrict", format)),
    };
    Ok(Outcome::ok(out, EXIT_OK))
}
