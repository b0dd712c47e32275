//! Command-line front end.
//!
//! Seven subcommands expose the library: `table` (coefficient listings),
//! `gram` (exact Gram matrices), `kernel` (kernel slices and point values),
//! `extremal` (the constrained minimum), `composed` (numerically validated
//! Gram matrices of substituted families), `roots` (isolating intervals),
//! and `claims` (the audit report).
//!
//! Exact values are always serialized as `p/q` strings, never floats; the
//! only floating-point output is plot data and composed-system matrices,
//! which are quadrature approximations to begin with. Data goes to stdout,
//! diagnostics to stderr. Exit codes: 0 on success, 1 on usage errors,
//! 2 on computation errors such as a non-convergent quadrature.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::traits::ToPrimitive;
use num::traits::Zero;
use serde::Serialize;

use crate::claims::{render_report, run_claims, ReportFormat};
use crate::composed::{
    certify_monotone_bijection, composed_gram, pushforward_weight, Orientation, RationalMap,
};
use crate::extremal::solve_extremal;
use crate::families::{family_polynomial, FamilyKind};
use crate::kernels::{kernel_in_x, kernel_value, KernelSpec};
use crate::numeric::rational;
use crate::poly::isolate_roots;
use crate::quadrature::{digits_to_bits, gauss_legendre_rule_at, tanh_sinh_rule_at};
use crate::weighted_ip::{gram_matrix, natural_weight, GramEntry, WeightKind};
use crate::{BigRational, Interval, Polynomial};

#[derive(Parser)]
#[command(
    name = "polar-legendre",
    version,
    about = "Exact tables, Gram matrices, kernels, extremal solutions, and the claims audit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficient table of a family, one row per (n, k).
    Table(TableArgs),
    /// Exact Gram matrix of a family under a weight.
    Gram(GramArgs),
    /// Kernel slice at frozen y, or the kernel value at a rational point.
    Kernel(KernelArgs),
    /// Exact solution of the constrained minimization over an index set.
    Extremal(ExtremalArgs),
    /// Quadrature Gram matrix of a family composed with a rational map.
    Composed(ComposedArgs),
    /// Isolating intervals for the real roots in [-1, 1].
    Roots(RootsArgs),
    /// Run the claims audit and render the report.
    Claims(ClaimsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Legendre,
    Pipcir,
    Polar,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Legendre => FamilyKind::Legendre,
            FamilyArg::Pipcir => FamilyKind::Pipcir,
            FamilyArg::Polar => FamilyKind::Polar,
        }
    }
}

impl FamilyArg {
    fn letter(self) -> &'static str {
        match self {
            FamilyArg::Legendre => "L",
            FamilyArg::Pipcir => "Q",
            FamilyArg::Polar => "P",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WeightArg {
    /// Unweighted Lebesgue pairing.
    Plain,
    /// 1/(1 - x^2).
    Q,
    /// (1 - x)/(1 + x).
    P,
    /// x(1 - x)/(1 + x).
    KernelZero,
}

impl WeightArg {
    fn kind(self) -> Option<WeightKind> {
        match self {
            WeightArg::Plain => None,
            WeightArg::Q => Some(WeightKind::QWeight),
            WeightArg::P => Some(WeightKind::PWeight),
            WeightArg::KernelZero => Some(WeightKind::KernelZeroWeight),
        }
    }

    fn name(self) -> &'static str {
        match self {
            WeightArg::Plain => "plain",
            WeightArg::Q => "q",
            WeightArg::P => "p",
            WeightArg::KernelZero => "kernel-zero",
        }
    }

    fn from_kind(kind: Option<WeightKind>) -> Self {
        match kind {
            None => WeightArg::Plain,
            Some(WeightKind::QWeight) => WeightArg::Q,
            Some(WeightKind::PWeight) => WeightArg::P,
            Some(WeightKind::KernelZeroWeight) => WeightArg::KernelZero,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RuleArg {
    TanhSinh,
    Gauss,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Largest index to list.
    #[arg(long)]
    max: usize,
    #[arg(long, default_value = "text", value_parser = ReportFormat::from_str)]
    format: ReportFormat,
    /// Emit two-column plot samples instead of coefficients.
    #[arg(long)]
    plot: bool,
    /// Number of plot samples over [-1, 1].
    #[arg(long, default_value_t = 101)]
    grid: usize,
}

#[derive(Args)]
struct GramArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Defaults to the family's own weight.
    #[arg(long, value_enum)]
    weight: Option<WeightArg>,
    /// Contiguous indices from the family's first member up to this.
    #[arg(long)]
    max: Option<usize>,
    /// Explicit comma-separated index list (overrides --max).
    #[arg(long)]
    indices: Option<String>,
    #[arg(long, default_value = "text", value_parser = ReportFormat::from_str)]
    format: ReportFormat,
}

#[derive(Args)]
struct KernelArgs {
    /// Comma-separated kernel indices, all at least 1.
    #[arg(long)]
    indices: String,
    /// Evaluate K(x, y) at this rational x instead of printing the slice.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Frozen second argument, a rational.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    y: String,
    #[arg(long, default_value = "text", value_parser = ReportFormat::from_str)]
    format: ReportFormat,
    /// Emit two-column plot samples of the slice.
    #[arg(long)]
    plot: bool,
    #[arg(long, default_value_t = 101)]
    grid: usize,
}

#[derive(Args)]
struct ExtremalArgs {
    /// Comma-separated index set, all at least 1.
    #[arg(long)]
    indices: String,
    #[arg(long, default_value = "text", value_parser = ReportFormat::from_str)]
    format: ReportFormat,
    /// Emit two-column plot samples of the minimizer.
    #[arg(long)]
    plot: bool,
    #[arg(long, default_value_t = 101)]
    grid: usize,
}

#[derive(Args)]
struct ComposedArgs {
    /// `identity`, `cubic`, or `mobius:a,b,c,d` with integer entries.
    #[arg(long, default_value = "cubic")]
    map: String,
    #[arg(long, default_value = "as-orthogonality", value_parser = Orientation::from_str)]
    orientation: Orientation,
    /// Largest family index entering the Gram matrix.
    #[arg(long, default_value_t = 4)]
    max: usize,
    #[arg(long, value_enum, default_value_t = RuleArg::TanhSinh)]
    rule: RuleArg,
    /// Tanh-sinh level (node count roughly doubles per level).
    #[arg(long, default_value_t = 6)]
    level: usize,
    /// Gauss rule order.
    #[arg(long, default_value_t = 12)]
    order: usize,
    /// Working precision in decimal digits.
    #[arg(long, default_value_t = 50)]
    precision: usize,
    #[arg(long, default_value = "text", value_parser = ReportFormat::from_str)]
    format: ReportFormat,
}

#[derive(Args)]
struct RootsArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Largest index to isolate.
    #[arg(long)]
    max: usize,
    #[arg(long, default_value = "text", value_parser = ReportFormat::from_str)]
    format: ReportFormat,
}

#[derive(Args)]
struct ClaimsArgs {
    /// Largest index audited per claim; at least 4.
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    #[arg(long, default_value = "text", value_parser = ReportFormat::from_str)]
    format: ReportFormat,
}

/// Errors surfaced to the user, split by exit code.
#[derive(Debug)]
enum CliError {
    /// Exit code 1: arguments outside documented ranges.
    Usage(String),
    /// Exit code 2: a computation refused to produce a result.
    Computation(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Entry point wrapped by `main`; returns the process exit code.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Computation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Table(args) => table_command(args),
        Command::Gram(args) => gram_command(args),
        Command::Kernel(args) => kernel_command(args),
        Command::Extremal(args) => extremal_command(args),
        Command::Composed(args) => composed_command(args),
        Command::Roots(args) => roots_command(args),
        Command::Claims(args) => claims_command(args),
    }
}

// ---------------------------------------------------------------------------
// Shared parsing and rendering helpers.

fn parse_indices(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("cannot parse index list `{s}`")))
        })
        .collect()
}

fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    BigRational::from_str(s).map_err(|_| usage(format!("cannot parse rational `{s}`")))
}

fn check_grid(grid: usize) -> Result<(), CliError> {
    if grid < 2 {
        return Err(usage("--grid needs at least two points"));
    }
    Ok(())
}

fn json_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// Plot data.

/// What to sample for external plotting.
pub enum PlotRequest {
    /// Every family member from the family's first index up to `max`.
    FamilyCurves { kind: FamilyKind, max: usize },
    /// The kernel slice `K(x, 0)` for one index set.
    KernelSlice { indices: Vec<usize> },
    /// The minimizer of the constrained problem over one index set.
    Minimizer { indices: Vec<usize> },
}

/// Two-column `(x, y)` samples over [-1, 1] in double precision, one blank
/// line between curves so external plotters treat them as separate blocks.
/// Evaluation is exact; only the final rendering rounds.
pub fn emit_plot_data(request: &PlotRequest, grid: usize) -> String {
    assert!(
        grid >= 2,
        "emit_plot_data: grid must have at least two points"
    );
    let curves: Vec<Polynomial> = match request {
        PlotRequest::FamilyCurves { kind, max } => {
            assert!(
                *max >= kind.min_index(),
                "emit_plot_data: max below the family start"
            );
            (kind.min_index()..=*max)
                .map(|n| family_polynomial(*kind, n))
                .collect()
        }
        PlotRequest::KernelSlice { indices } => {
            vec![kernel_in_x(
                &KernelSpec::new(indices.clone()),
                &BigRational::zero(),
            )]
        }
        PlotRequest::Minimizer { indices } => vec![solve_extremal(indices).minimizer],
    };

    let mut out = String::new();
    for (i, curve) in curves.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for step in 0..grid {
            let x = rational(2 * step as i64, grid as i64 - 1) - rational(1, 1);
            let y = curve.evaluate(&x);
            let _ = writeln!(out, "{} {}", to_double(&x), to_double(&y));
        }
    }
    out
}

fn to_double(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

// ---------------------------------------------------------------------------
// table

#[derive(Serialize)]
struct TableRow {
    n: usize,
    k: usize,
    num: String,
    den: String,
}

fn table_command(args: TableArgs) -> Result<String, CliError> {
    let kind: FamilyKind = args.family.into();
    if args.max < kind.min_index() {
        return Err(usage(format!(
            "--max {} is below the family's first index {}",
            args.max,
            kind.min_index()
        )));
    }
    if args.plot {
        check_grid(args.grid)?;
        let request = PlotRequest::FamilyCurves {
            kind,
            max: args.max,
        };
        return Ok(emit_plot_data(&request, args.grid));
    }

    let mut rows = Vec::new();
    for n in kind.min_index()..=args.max {
        let p = family_polynomial(kind, n);
        for k in 0..=n {
            let c = p.coeff(k);
            rows.push(TableRow {
                n,
                k,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            });
        }
    }

    Ok(match args.format {
        ReportFormat::Json => json_pretty(&rows),
        ReportFormat::Csv => {
            let mut s = String::from("n,k,num,den\n");
            for r in rows {
                let _ = writeln!(s, "{},{},{},{}", r.n, r.k, r.num, r.den);
            }
            s
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for n in kind.min_index()..=args.max {
                let _ = writeln!(
                    s,
                    "{}_{} = {}",
                    args.family.letter(),
                    n,
                    family_polynomial(kind, n)
                );
            }
            s
        }
    })
}

// ---------------------------------------------------------------------------
// gram

#[derive(Serialize)]
struct GramView {
    family: String,
    weight: String,
    indices: Vec<usize>,
    entries: Vec<Vec<String>>,
}

fn gram_command(args: GramArgs) -> Result<String, CliError> {
    let kind: FamilyKind = args.family.into();
    let indices = match (&args.indices, args.max) {
        (Some(list), _) => parse_indices(list)?,
        (None, Some(max)) => {
            if max < kind.min_index() {
                return Err(usage(format!(
                    "--max {} is below the family's first index {}",
                    max,
                    kind.min_index()
                )));
            }
            (kind.min_index()..=max).collect()
        }
        (None, None) => return Err(usage("provide --max or --indices")),
    };
    if indices.iter().any(|&n| n < kind.min_index()) {
        return Err(usage(format!(
            "indices must be at least the family's first index {}",
            kind.min_index()
        )));
    }

    let weight = args
        .weight
        .unwrap_or_else(|| WeightArg::from_kind(natural_weight(kind)));
    let entries: Vec<Vec<String>> = match weight.kind() {
        Some(w) => gram_matrix(kind, w, &indices)
            .into_iter()
            .map(|row| row.into_iter().map(|e| entry_string(&e)).collect())
            .collect(),
        // Unweighted pairing: every entry is a plain polynomial integral.
        None => indices
            .iter()
            .map(|&n| {
                indices
                    .iter()
                    .map(|&m| {
                        (&family_polynomial(kind, n) * &family_polynomial(kind, m))
                            .definite_integral(&Interval::unit_symmetric())
                            .to_string()
                    })
                    .collect()
            })
            .collect(),
    };

    Ok(match args.format {
        ReportFormat::Json => json_pretty(&GramView {
            family: args.family.letter().to_string(),
            weight: weight.name().to_string(),
            indices,
            entries,
        }),
        ReportFormat::Csv => {
            let mut s = String::from("n,m,value\n");
            for (i, row) in entries.iter().enumerate() {
                for (j, value) in row.iter().enumerate() {
                    let _ = writeln!(s, "{},{},{}", indices[i], indices[j], csv_quote(value));
                }
            }
            s
        }
        ReportFormat::Text => {
            let mut s = format!(
                "{}-family Gram, weight {}, indices {:?}\n",
                args.family.letter(),
                weight.name(),
                indices
            );
            for row in &entries {
                let _ = writeln!(s, "{}", row.join("  "));
            }
            s
        }
    })
}

fn entry_string(e: &GramEntry) -> String {
    match e {
        GramEntry::Value(v) => v.to_string(),
        GramEntry::Divergent => "divergent".to_string(),
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

// ---------------------------------------------------------------------------
// kernel

#[derive(Serialize)]
struct KernelValueView {
    indices: Vec<usize>,
    x: String,
    y: String,
    value: String,
}

#[derive(Serialize)]
struct KernelSliceView {
    indices: Vec<usize>,
    y: String,
    coefficients: Vec<TableRow>,
}

fn kernel_command(args: KernelArgs) -> Result<String, CliError> {
    let indices = parse_indices(&args.indices)?;
    if indices.contains(&0) {
        return Err(usage("kernel index 0 has a divergent norm"));
    }
    if indices.is_empty() {
        return Err(usage("the kernel index set is empty"));
    }
    let y = parse_rational(&args.y)?;
    let spec = KernelSpec::new(indices.clone());

    if args.plot {
        check_grid(args.grid)?;
        return Ok(emit_plot_data(
            &PlotRequest::KernelSlice { indices },
            args.grid,
        ));
    }

    if let Some(x) = &args.x {
        let x = parse_rational(x)?;
        let value = kernel_value(&spec, &x, &y);
        return Ok(match args.format {
            ReportFormat::Json => json_pretty(&KernelValueView {
                indices,
                x: x.to_string(),
                y: y.to_string(),
                value: value.to_string(),
            }),
            ReportFormat::Csv => format!("x,y,value\n{},{},{}\n", x, y, value),
            ReportFormat::Text => format!("K({}, {}) = {}\n", x, y, value),
        });
    }

    let slice = kernel_in_x(&spec, &y);
    let coefficients: Vec<TableRow> = (0..=slice.degree().unwrap_or(0))
        .map(|k| {
            let c = slice.coeff(k);
            TableRow {
                n: *indices.last().expect("nonempty"),
                k,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            }
        })
        .collect();

    Ok(match args.format {
        ReportFormat::Json => json_pretty(&KernelSliceView {
            indices,
            y: y.to_string(),
            coefficients,
        }),
        ReportFormat::Csv => {
            let mut s = String::from("k,num,den\n");
            for r in coefficients {
                let _ = writeln!(s, "{},{},{}", r.k, r.num, r.den);
            }
            s
        }
        ReportFormat::Text => format!("K(x, {}) over {:?} = {}\n", y, indices, slice),
    })
}

// ---------------------------------------------------------------------------
// extremal

#[derive(Serialize)]
struct ExtremalView {
    #[serde(rename = "M")]
    minimum: String,
    coefficients: BTreeMap<usize, String>,
}

fn extremal_command(args: ExtremalArgs) -> Result<String, CliError> {
    let indices = parse_indices(&args.indices)?;
    if indices.contains(&0) {
        return Err(usage(
            "index 0 has a divergent norm and cannot enter the span",
        ));
    }
    if indices.is_empty() {
        return Err(usage("the index set is empty"));
    }

    if args.plot {
        check_grid(args.grid)?;
        return Ok(emit_plot_data(
            &PlotRequest::Minimizer { indices },
            args.grid,
        ));
    }

    let solution = solve_extremal(&indices);
    let coefficients: BTreeMap<usize, String> = solution
        .coefficients
        .iter()
        .map(|(k, v)| (*k, v.to_string()))
        .collect();

    Ok(match args.format {
        ReportFormat::Json => json_pretty(&ExtremalView {
            minimum: solution.minimum.to_string(),
            coefficients,
        }),
        ReportFormat::Csv => {
            let mut s = String::from("key,value\n");
            let _ = writeln!(s, "M,{}", solution.minimum);
            for (k, v) in &coefficients {
                let _ = writeln!(s, "{},{}", k, v);
            }
            s
        }
        ReportFormat::Text => {
            let mut s = format!("M = {}\n", solution.minimum);
            for (k, v) in &coefficients {
                let _ = writeln!(s, "a_{} = {}", k, v);
            }
            let _ = writeln!(s, "minimizer = {}", solution.minimizer);
            s
        }
    })
}

// ---------------------------------------------------------------------------
// composed

#[derive(Serialize)]
struct ComposedView {
    map: String,
    orientation: String,
    weight_numerator: String,
    weight_denominator: String,
    gram: Vec<Vec<f64>>,
}

fn parse_map(s: &str) -> Result<RationalMap, CliError> {
    match s {
        "identity" => Ok(RationalMap::identity()),
        "cubic" => Ok(RationalMap::cubic()),
        other => {
            let rest = other.strip_prefix("mobius:").ok_or_else(|| {
                usage(format!(
                    "unknown map `{other}`; use identity, cubic, or mobius:a,b,c,d"
                ))
            })?;
            let parts: Vec<i64> = rest
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| usage(format!("cannot parse mobius entries `{rest}`")))
                })
                .collect::<Result<_, _>>()?;
            let [a, b, c, d] = parts[..] else {
                return Err(usage("mobius needs exactly four integers a,b,c,d"));
            };
            if a * d == b * c {
                return Err(usage("mobius map is degenerate: ad = bc"));
            }
            if c != 0 && d.abs() <= c.abs() {
                return Err(usage("mobius pole -d/c lies inside [-1, 1]"));
            }
            Ok(RationalMap::mobius(a, b, c, d))
        }
    }
}

fn composed_command(args: ComposedArgs) -> Result<String, CliError> {
    if args.max < 1 {
        return Err(usage("--max must be at least 1"));
    }
    if !(10..=500).contains(&args.precision) {
        return Err(usage("--precision must lie in 10..=500 digits"));
    }
    let map = parse_map(&args.map)?;
    certify_monotone_bijection(&map, &Interval::unit_symmetric())
        .map_err(|e| CliError::Computation(format!("map rejected: {e}")))?;

    let bits = digits_to_bits(args.precision);
    let rule = match args.rule {
        RuleArg::TanhSinh => {
            if args.level < 1 {
                return Err(usage("--level must be at least 1"));
            }
            tanh_sinh_rule_at(args.level, bits)
        }
        RuleArg::Gauss => {
            if args.order < 1 {
                return Err(usage("--order must be at least 1"));
            }
            gauss_legendre_rule_at(args.order, bits)
        }
    };

    let weight = pushforward_weight(&map, args.orientation);
    let gram = composed_gram(&map, args.orientation, args.max, &rule)
        .map_err(|e| CliError::Computation(e.to_string()))?;

    Ok(match args.format {
        ReportFormat::Json => json_pretty(&ComposedView {
            map: format!("({}) / ({})", map.numerator(), map.denominator()),
            orientation: args.orientation.to_string(),
            weight_numerator: weight.numerator().to_string(),
            weight_denominator: weight.denominator().to_string(),
            gram,
        }),
        ReportFormat::Csv => {
            let mut s = String::from("n,m,value\n");
            for (i, row) in gram.iter().enumerate() {
                for (j, value) in row.iter().enumerate() {
                    let _ = writeln!(s, "{},{},{}", i + 1, j + 1, value);
                }
            }
            s
        }
        ReportFormat::Text => {
            let mut s = format!(
                "map ({}) / ({}), orientation {}\nweight ({}) / ({})\n",
                map.numerator(),
                map.denominator(),
                args.orientation,
                weight.numerator(),
                weight.denominator()
            );
            for row in &gram {
                let rendered: Vec<String> = row.iter().map(|v| format!("{v:.3e}")).collect();
                let _ = writeln!(s, "{}", rendered.join("  "));
            }
            s
        }
    })
}

// ---------------------------------------------------------------------------
// roots

#[derive(Serialize)]
struct RootRow {
    n: usize,
    lo: String,
    hi: String,
}

fn roots_command(args: RootsArgs) -> Result<String, CliError> {
    let kind: FamilyKind = args.family.into();
    if args.max < kind.min_index() {
        return Err(usage(format!(
            "--max {} is below the family's first index {}",
            args.max,
            kind.min_index()
        )));
    }
    let width = rational(1, 64);
    let mut rows = Vec::new();
    for n in kind.min_index()..=args.max {
        let p = family_polynomial(kind, n);
        if p.degree().unwrap_or(0) == 0 {
            continue;
        }
        for iv in isolate_roots(&p, &Interval::unit_symmetric(), &width) {
            rows.push(RootRow {
                n,
                lo: iv.lo().to_string(),
                hi: iv.hi().to_string(),
            });
        }
    }

    Ok(match args.format {
        ReportFormat::Json => json_pretty(&rows),
        ReportFormat::Csv => {
            let mut s = String::from("n,lo,hi\n");
            for r in rows {
                let _ = writeln!(s, "{},{},{}", r.n, r.lo, r.hi);
            }
            s
        }
        ReportFormat::Text => {
            let mut s = String::new();
            let mut current = usize::MAX;
            for r in rows {
                if r.n != current {
                    if current != usize::MAX {
                        s.push('\n');
                    }
                    let _ = write!(s, "{}_{}:", args.family.letter(), r.n);
                    current = r.n;
                }
                let _ = write!(s, " ({}, {}]", r.lo, r.hi);
            }
            if current != usize::MAX {
                s.push('\n');
            }
            s
        }
    })
}

// ---------------------------------------------------------------------------
// claims

fn claims_command(args: ClaimsArgs) -> Result<String, CliError> {
    if args.max_n < 4 {
        return Err(usage("--max-n must be at least 4"));
    }
    Ok(render_report(&run_claims(args.max_n), args.format))
}
