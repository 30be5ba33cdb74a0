//! The `mvlab` command line: axiom suites, surfaces, deviation tables and the
//! star probe. Every command returns its exit code; `main` only maps errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mvlab_core::chang::{ChangAlgebra, ChangVariant};
use mvlab_core::hole::{
    DiskHole, DiskHoleAlgebra, HoleProfile, SquareHole, SquareHoleAlgebra, TruncatedAlgebra,
};
use mvlab_core::interval::{IntervalI0, IntervalI1, Lukasiewicz, Rectangle, StarAlgebra, StarZero};
use mvlab_core::powerset::{PowersetAlgebra, EXHAUSTIVE_LIMIT};
use mvlab_core::rational::{format_sig, parse_rational, ratio_to_f64};
use mvlab_core::{run_suite, Algebra, AxiomId, CheckReport, Domain, Error, SamplingStrategy};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

/// Exit code when every requested axiom holds.
pub const EXIT_OK: i32 = 0;
/// Exit code for usage and parameter errors.
pub const EXIT_USAGE: i32 = 1;
/// Exit code when at least one axiom fails.
pub const EXIT_FAILS: i32 = 2;

/// Grid resolution used for continuous carriers when no strategy is given.
pub const DEFAULT_GRID: u64 = 20;

#[derive(Debug, Parser)]
#[command(name = "mvlab", version, about = "Check MV-algebra axioms on concrete models")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the axiom suite on a model
    Check(CheckArgs),
    /// Export the ⊕ surface of a model on the unit square
    Surface(SurfaceArgs),
    /// Distance from the Łukasiewicz sum for a family of hole sizes
    Deviation(DeviationArgs),
    /// Run the suite on the star algebra under both candidate zeros
    StarProbe(StarProbeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Model {
    #[value(name = "lukasiewicz")]
    Lukasiewicz,
    #[value(name = "interval-i0")]
    IntervalI0,
    #[value(name = "interval-i0-odot")]
    IntervalI0Odot,
    #[value(name = "interval-i1")]
    IntervalI1,
    #[value(name = "rectangle")]
    Rectangle,
    #[value(name = "rectangle-odot")]
    RectangleOdot,
    #[value(name = "chang")]
    Chang,
    #[value(name = "truncated")]
    Truncated,
    #[value(name = "square-hole")]
    SquareHole,
    #[value(name = "disk-hole")]
    DiskHole,
    #[value(name = "powerset")]
    Powerset,
    #[value(name = "star")]
    Star,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

/// Which form of the fourth axiom to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AxiomFour {
    /// `¬(¬x⊕y)⊕y = ¬(¬y⊕x)⊕x`
    Standard,
    /// `¬(¬x⊕y)⊕y = ¬(¬y⊕¬x)⊕x`
    Printed,
    Both,
}

#[derive(Debug, Args)]
pub struct StrategyArgs {
    /// Evaluate on the grid i/q, 0 <= i <= q
    #[arg(long, value_name = "Q", conflicts_with_all = ["exhaustive", "samples"])]
    pub grid: Option<u64>,
    /// Enumerate a finite carrier completely
    #[arg(long, conflicts_with = "samples")]
    pub exhaustive: bool,
    /// Draw this many random tuples per axiom
    #[arg(long, value_name = "COUNT")]
    pub samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest denominator for random rationals
    #[arg(long, value_name = "D", default_value_t = 1000)]
    pub denominator: u64,
}

impl StrategyArgs {
    fn resolve(&self, finite: bool) -> anyhow::Result<SamplingStrategy> {
        if let Some(count) = self.samples {
            if count == 0 || self.denominator == 0 {
                bail!("--samples and --denominator must be positive");
            }
            return Ok(SamplingStrategy::Random {
                seed: self.seed,
                count,
                denominator_bound: self.denominator,
            });
        }
        if let Some(q) = self.grid {
            return Ok(SamplingStrategy::Grid { q });
        }
        if self.exhaustive || finite {
            return Ok(SamplingStrategy::Exhaustive);
        }
        Ok(SamplingStrategy::Grid { q: DEFAULT_GRID })
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub model: Model,
    /// chang: as-printed | standard; star: lower-zero | upper-zero
    #[arg(long)]
    pub variant: Option<String>,
    /// chang: largest atom index
    #[arg(long, default_value_t = 8)]
    pub max_index: u64,
    /// square-hole side, or truncated with mass 1 - k²
    #[arg(long)]
    pub k: Option<String>,
    /// truncated: top element M
    #[arg(long)]
    pub mass: Option<String>,
    /// disk-hole radius
    #[arg(long)]
    pub r: Option<f64>,
    /// powerset: universe size
    #[arg(long)]
    pub n: Option<usize>,
    /// disk-hole: comparison tolerance
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(long = "axiom4", value_enum, default_value_t = AxiomFour::Standard)]
    pub axiom4: AxiomFour,
    #[command(flatten)]
    pub strategy: StrategyArgs,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SurfaceModel {
    #[value(name = "lukasiewicz")]
    Lukasiewicz,
    #[value(name = "square-hole")]
    SquareHole,
    #[value(name = "disk-hole")]
    DiskHole,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SurfaceFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    pub model: SurfaceModel,
    #[arg(long)]
    pub k: Option<String>,
    #[arg(long)]
    pub r: Option<f64>,
    /// Points i/n for 0 <= i <= n on each axis
    #[arg(long, value_name = "N", default_value_t = 20)]
    pub grid: u64,
    #[arg(long, value_enum, default_value_t = SurfaceFormat::Csv)]
    pub format: SurfaceFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HoleShape {
    Square,
    Disk,
}

#[derive(Debug, Args)]
pub struct DeviationArgs {
    #[arg(long, value_enum)]
    pub hole: HoleShape,
    /// Side lengths or radii; 0 means no hole
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<String>,
    #[arg(long, value_name = "N", default_value_t = 50)]
    pub grid: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StarProbeArgs {
    #[arg(long, value_name = "Q", default_value_t = 10)]
    pub grid: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}

pub fn run(cli: &Cli) -> anyhow::Result<i32> {
    match &cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Surface(args) => cmd_surface(args),
        Command::Deviation(args) => cmd_deviation(args),
        Command::StarProbe(args) => cmd_star_probe(args),
    }
}

fn axioms(form: AxiomFour) -> Vec<AxiomId> {
    let mut out: Vec<AxiomId> = AxiomId::MV.to_vec();
    match form {
        AxiomFour::Standard => {}
        AxiomFour::Printed => {
            out.retain(|&a| a != AxiomId::Lukasiewicz4);
            out.push(AxiomId::Lukasiewicz4Printed);
        }
        AxiomFour::Both => out.push(AxiomId::Lukasiewicz4Printed),
    }
    out
}

fn suite<A: Algebra>(alg: &A, args: &CheckArgs) -> anyhow::Result<CheckReport> {
    let finite = matches!(alg.domain(), Domain::Finite(_));
    let strategy = args.strategy.resolve(finite)?;
    Ok(run_suite(alg, &strategy, &axioms(args.axiom4))?)
}

fn required<'a, T>(value: &'a Option<T>, flag: &str, model: &str) -> anyhow::Result<&'a T> {
    value
        .as_ref()
        .with_context(|| format!("{model} needs --{flag}"))
}

fn exact(text: &str) -> anyhow::Result<BigRational> {
    Ok(parse_rational(text)?)
}

pub fn build_report(args: &CheckArgs) -> anyhow::Result<CheckReport> {
    let variant = args.variant.as_deref();
    if variant.is_some() && !matches!(args.model, Model::Chang | Model::Star) {
        bail!("--variant applies to chang and star only");
    }
    match args.model {
        Model::Lukasiewicz => suite(&Lukasiewicz, args),
        Model::IntervalI0 => suite(&IntervalI0 { dual: false }, args),
        Model::IntervalI0Odot => suite(&IntervalI0 { dual: true }, args),
        Model::IntervalI1 => suite(&IntervalI1, args),
        Model::Rectangle => suite(&Rectangle { dual: false }, args),
        Model::RectangleOdot => suite(&Rectangle { dual: true }, args),
        Model::Chang => {
            let variant = match variant.unwrap_or("standard") {
                "standard" => ChangVariant::Standard,
                "as-printed" => ChangVariant::AsPrinted,
                other => bail!("unknown chang variant `{other}` (as-printed, standard)"),
            };
            if args.max_index == 0 {
                bail!("--max-index must be at least 1");
            }
            suite(
                &ChangAlgebra {
                    variant,
                    max_index: args.max_index,
                },
                args,
            )
        }
        Model::Truncated => {
            let mass = match (&args.mass, &args.k) {
                (Some(_), Some(_)) => bail!("give either --mass or --k"),
                (Some(m), None) => exact(m)?,
                (None, Some(k)) => SquareHole::new(exact(k)?)?.mass(),
                (None, None) => BigRational::one(),
            };
            suite(&TruncatedAlgebra::new(mass)?, args)
        }
        Model::SquareHole => {
            let k = exact(required(&args.k, "k", "square-hole")?)?;
            suite(&SquareHoleAlgebra { hole: SquareHole::new(k)? }, args)
        }
        Model::DiskHole => {
            let mut alg = DiskHoleAlgebra::new(DiskHole::new(*required(&args.r, "r", "disk-hole")?)?);
            if let Some(t) = args.tolerance {
                if !(t > 0.0 && t.is_finite()) {
                    bail!("--tolerance must be positive");
                }
                alg.tolerance = t;
            }
            suite(&alg, args)
        }
        Model::Powerset => {
            let n = *required(&args.n, "n", "powerset")?;
            let alg = PowersetAlgebra::letters(n)?;
            if n > EXHAUSTIVE_LIMIT && args.strategy.samples.is_none() {
                return Err(Error::SizeLimit {
                    n,
                    limit: EXHAUSTIVE_LIMIT,
                }
                .into());
            }
            suite(&alg, args)
        }
        Model::Star => {
            let zero = match variant.unwrap_or("lower-zero") {
                "lower-zero" => StarZero::Lower,
                "upper-zero" => StarZero::Upper,
                other => bail!("unknown star variant `{other}` (lower-zero, upper-zero)"),
            };
            suite(&StarAlgebra { zero }, args)
        }
    }
}

fn cmd_check(args: &CheckArgs) -> anyhow::Result<i32> {
    let report = build_report(args)?;
    let body = match args.format {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Json => report.to_json() + "\n",
    };
    emit(args.out.as_deref(), &body)?;
    Ok(if report.all_hold() { EXIT_OK } else { EXIT_FAILS })
}

/// Writes to `path` through a temporary file in the same directory, or to
/// stdout when no path is given.
pub fn emit(path: Option<&Path>, body: &str) -> anyhow::Result<()> {
    match path {
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()?;
        }
        Some(path) => write_atomic(path, body)?,
    }
    Ok(())
}

pub fn write_atomic(path: &Path, body: &str) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot write to {}", dir.display()))?;
    tmp.write_all(body.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

/// One surface value, exact where the model allows it.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Exact(BigRational),
    Float(f64),
}

impl Cell {
    pub fn to_f64(&self) -> f64 {
        match self {
            Cell::Exact(q) => ratio_to_f64(q),
            Cell::Float(x) => *x,
        }
    }
}

/// `values[i][j] = (i/n) ⊕ (j/n)`.
#[derive(Clone, Debug)]
pub struct SurfaceGrid {
    pub model: String,
    pub params: serde_json::Map<String, serde_json::Value>,
    pub n: u64,
    pub values: Vec<Vec<Cell>>,
}

impl SurfaceGrid {
    pub fn is_symmetric(&self) -> bool {
        let n = self.values.len();
        (0..n).all(|i| (0..n).all(|j| self.values[i][j] == self.values[j][i]))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,b,value\n");
        let n = self.n as f64;
        for (i, row) in self.values.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                out.push_str(&format!(
                    "{},{},{}\n",
                    format_sig(i as f64 / n, 12),
                    format_sig(j as f64 / n, 12),
                    format_sig(cell.to_f64(), 12)
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let exact = self.values.iter().all(|r| r.iter().all(|c| matches!(c, Cell::Exact(_))));
        let decimal: Vec<Vec<f64>> = self
            .values
            .iter()
            .map(|r| r.iter().map(Cell::to_f64).collect())
            .collect();
        let mut doc = json!({
            "model": self.model,
            "params": self.params,
            "n": self.n,
            "values": decimal,
        });
        if exact {
            let fractions: Vec<Vec<String>> = self
                .values
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|c| match c {
                            Cell::Exact(q) => q.to_string(),
                            Cell::Float(_) => unreachable!(),
                        })
                        .collect()
                })
                .collect();
            doc["exact"] = json!(fractions);
        }
        serde_json::to_string_pretty(&doc).expect("surface serialises") + "\n"
    }
}

pub fn build_surface(args: &SurfaceArgs) -> anyhow::Result<SurfaceGrid> {
    let n = args.grid;
    if n == 0 {
        bail!("--grid must be positive");
    }
    let point = |i: u64| BigRational::new(i.into(), n.into());
    let mut params = serde_json::Map::new();
    let op: Box<dyn Fn(u64, u64) -> anyhow::Result<Cell>> = match args.model {
        SurfaceModel::Lukasiewicz => Box::new(move |i, j| {
            let s = point(i) + point(j);
            Ok(Cell::Exact(if s > BigRational::one() { BigRational::one() } else { s }))
        }),
        SurfaceModel::SquareHole => {
            let k = exact(required(&args.k, "k", "square-hole")?)?;
            params.insert("k".into(), json!(k.to_string()));
            let hole = SquareHole::new(k)?;
            Box::new(move |i, j| Ok(Cell::Exact(hole.induced_oplus(&point(i), &point(j))?)))
        }
        SurfaceModel::DiskHole => {
            let r = *required(&args.r, "r", "disk-hole")?;
            let hole = DiskHole::new(r)?;
            params.insert("r".into(), json!(r));
            Box::new(move |i, j| Ok(Cell::Float(hole.induced_oplus(i as f64 / n as f64, j as f64 / n as f64)?)))
        }
    };
    let mut values = Vec::with_capacity(n as usize + 1);
    for i in 0..=n {
        let row = (0..=n).map(|j| op(i, j)).collect::<anyhow::Result<Vec<_>>>()?;
        values.push(row);
    }
    Ok(SurfaceGrid {
        model: match args.model {
            SurfaceModel::Lukasiewicz => "lukasiewicz",
            SurfaceModel::SquareHole => "square-hole",
            SurfaceModel::DiskHole => "disk-hole",
        }
        .into(),
        params,
        n,
        values,
    })
}

/// Reads back a surface CSV as `(a, b, value)` rows.
pub fn read_surface_csv(path: &Path) -> anyhow::Result<Vec<(f64, f64, f64)>> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let mut lines = text.lines();
    if lines.next() != Some("a,b,value") {
        bail!("{}: missing a,b,value header", path.display());
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let fields: Vec<f64> = line
                .split(',')
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .with_context(|| format!("row {}: bad number", i + 1))?;
            match fields[..] {
                [a, b, v] => Ok((a, b, v)),
                _ => bail!("row {}: expected three columns", i + 1),
            }
        })
        .collect()
}

/// Whether the rows of a `(n+1)²` row-major surface satisfy `v(a,b) = v(b,a)`.
pub fn csv_rows_symmetric(rows: &[(f64, f64, f64)]) -> bool {
    let side = (rows.len() as f64).sqrt() as usize;
    if side * side != rows.len() {
        return false;
    }
    (0..side).all(|i| (0..side).all(|j| rows[i * side + j].2 == rows[j * side + i].2))
}

fn cmd_surface(args: &SurfaceArgs) -> anyhow::Result<i32> {
    let grid = build_surface(args)?;
    let body = match args.format {
        SurfaceFormat::Csv => grid.to_csv(),
        SurfaceFormat::Json => grid.to_json(),
    };
    emit(args.out.as_deref(), &body)?;
    if let (Some(path), SurfaceFormat::Csv) = (&args.out, args.format) {
        if !csv_rows_symmetric(&read_surface_csv(path)?) {
            bail!("{}: surface is not symmetric", path.display());
        }
    }
    Ok(EXIT_OK)
}

/// One row of the deviation table.
#[derive(Clone, Debug)]
pub struct DeviationRow {
    pub size: String,
    pub size_value: f64,
    pub deviation: f64,
    /// Exact deviation for square holes.
    pub exact: Option<BigRational>,
}

pub fn deviation_table(args: &DeviationArgs) -> anyhow::Result<Vec<DeviationRow>> {
    if args.grid == 0 {
        bail!("--grid must be positive");
    }
    let mut rows = Vec::new();
    for text in &args.sizes {
        let size = exact(text)?;
        let size_value = ratio_to_f64(&size);
        let (profile, exact_dev) = if size.is_zero() {
            (HoleProfile::Null, Some(BigRational::zero()))
        } else {
            match args.hole {
                HoleShape::Square => {
                    let hole = SquareHole::new(size.clone())?;
                    let d = hole.sup_deviation(args.grid);
                    (HoleProfile::Square(hole), Some(d))
                }
                HoleShape::Disk => (HoleProfile::Disk(DiskHole::new(size_value)?), None),
            }
        };
        let deviation = match &exact_dev {
            Some(d) => ratio_to_f64(d),
            None => profile.sup_deviation(args.grid)?,
        };
        rows.push(DeviationRow {
            size: size.to_string(),
            size_value,
            deviation,
            exact: exact_dev.filter(|_| args.hole == HoleShape::Square),
        });
    }
    rows.sort_by(|a, b| b.size_value.total_cmp(&a.size_value));
    Ok(rows)
}

fn cmd_deviation(args: &DeviationArgs) -> anyhow::Result<i32> {
    let rows = deviation_table(args)?;
    let hole = match args.hole {
        HoleShape::Square => "square",
        HoleShape::Disk => "disk",
    };
    let body = match args.format {
        ReportFormat::Text => {
            let mut out = format!("hole: {hole}, grid: {}\n{:<14} {}\n", args.grid, "size", "deviation");
            for r in &rows {
                out.push_str(&format!("{:<14} {}\n", format_sig(r.size_value, 12), format_sig(r.deviation, 12)));
            }
            out
        }
        ReportFormat::Json => {
            let table: Vec<_> = rows
                .iter()
                .map(|r| {
                    let mut row = json!({
                        "size": r.size,
                        "deviation": format_sig(r.deviation, 12),
                    });
                    if let Some(q) = &r.exact {
                        row["exact"] = json!(q.to_string());
                    }
                    row
                })
                .collect();
            let doc = json!({"hole": hole, "grid": args.grid, "rows": table});
            serde_json::to_string_pretty(&doc).expect("table serialises") + "\n"
        }
    };
    emit(args.out.as_deref(), &body)?;
    Ok(EXIT_OK)
}

/// Suite reports for both zero candidates and the axioms failing under both.
pub struct StarProbe {
    pub grid: u64,
    pub lower: CheckReport,
    pub upper: CheckReport,
    pub failing_under_both: Vec<AxiomId>,
}

pub fn star_probe(q: u64) -> anyhow::Result<StarProbe> {
    if q < 2 {
        bail!("--grid must be at least 2");
    }
    let strategy = SamplingStrategy::Grid { q };
    let lower = run_suite(&StarAlgebra { zero: StarZero::Lower }, &strategy, &AxiomId::MV)?;
    let upper = run_suite(&StarAlgebra { zero: StarZero::Upper }, &strategy, &AxiomId::MV)?;
    let failing_under_both = AxiomId::MV
        .into_iter()
        .filter(|&a| {
            let fails = |r: &CheckReport| r.verdict(a).is_some_and(|v| !v.holds);
            fails(&lower) && fails(&upper)
        })
        .collect();
    Ok(StarProbe {
        grid: q,
        lower,
        upper,
        failing_under_both,
    })
}

impl StarProbe {
    pub fn to_json(&self) -> String {
        let doc = json!({
            "grid": self.grid,
            "candidates": [
                {"zero": "lower", "report": self.lower},
                {"zero": "upper", "report": self.upper},
            ],
            "failing_under_both": self.failing_under_both.iter().map(|a| a.as_str()).collect::<Vec<_>>(),
        });
        serde_json::to_string_pretty(&doc).expect("probe serialises") + "\n"
    }

    pub fn to_text(&self) -> String {
        let names: Vec<_> = self.failing_under_both.iter().map(|a| a.as_str()).collect();
        format!(
            "zero = 0^0\n{}\nzero = 0^1\n{}\nfailing under both: {}\n",
            self.lower.to_text(),
            self.upper.to_text(),
            if names.is_empty() { "none".to_string() } else { names.join(", ") }
        )
    }
}

fn cmd_star_probe(args: &StarProbeArgs) -> anyhow::Result<i32> {
    let probe = star_probe(args.grid)?;
    let body = match args.format {
        ReportFormat::Text => probe.to_text(),
        ReportFormat::Json => probe.to_json(),
    };
    emit(args.out.as_deref(), &body)?;
    Ok(if probe.failing_under_both.is_empty() { EXIT_OK } else { EXIT_FAILS })
}
