//! Command-line front end: `basis`, `features`, `verify` and `volume`.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on bad input.
//! Feature extraction runs one series per worker thread; the pool size
//! follows `RAYON_NUM_THREADS`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::geometry::{signed_volume, signed_volume_determinant_sum};
use crate::invariants::{
    augmented_basis, gl_basis, perm_basis, so_basis, verify, BaseFamily, Generator, Group,
    InvariantDescriptor,
};
use crate::path::PiecewisePath;
use crate::poly::Polynomial;
use crate::word::Alphabet;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "siginv",
    version,
    about = "Invariant signature features of time series"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a linear basis of invariants.
    Basis(BasisArgs),
    /// Pair the signatures of CSV series against an invariant basis.
    Features(FeaturesArgs),
    /// Check invariance of a generated or stored basis on random trials.
    Verify(VerifyArgs),
    /// Signed volume of the path in a CSV file.
    Volume(VolumeArgs),
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// gl, so or perm.
    #[arg(long)]
    pub group: Option<Group>,
    /// Spatial dimension d.
    #[arg(long)]
    pub dim: Option<usize>,
    /// GL weight w (homogeneity w*d).
    #[arg(long)]
    pub weight: Option<usize>,
    /// Homogeneity of the invariants (total level when time-augmented).
    #[arg(long)]
    pub level: Option<usize>,
    /// Work over the alphabet {0..d} with a time channel fixed by the group.
    #[arg(long)]
    pub time_augment: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FeaturesArgs {
    /// CSV files, one series per file.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(long)]
    pub group: Group,
    /// Expected spatial dimension; inferred from the columns when omitted.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Use every invariant of level 1..=LEVEL.
    #[arg(long)]
    pub level: usize,
    /// Signature truncation; defaults to LEVEL.
    #[arg(long)]
    pub truncation: Option<usize>,
    /// Prepend the normalized row index as a time channel.
    #[arg(long)]
    pub time_augment: bool,
    /// Use this column (0-based index or header name) as the time channel.
    #[arg(long)]
    pub time_column: Option<String>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Verify the polynomials stored in a JSON file written by `basis`.
    #[arg(long)]
    pub basis: Option<PathBuf>,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Pairing,
    Determinant,
    Both,
}

#[derive(Debug, Args)]
pub struct VolumeArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Pairing)]
    pub method: Method,
}

/// Failure modes mapped to exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Library(#[from] crate::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("verification failed")]
    VerificationFailed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerificationFailed => 1,
            _ => 2,
        }
    }
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

/// Header of a serialized basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisMeta {
    pub group: Group,
    pub dim: usize,
    pub level: usize,
    pub weight: Option<usize>,
    pub time_augmented: bool,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub index: usize,
    pub level: usize,
    pub weight: Option<usize>,
    pub generator: Generator,
    pub description: String,
    pub polynomial: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisFile {
    pub meta: BasisMeta,
    pub basis: Vec<BasisEntry>,
}

/// One (series, invariant) feature value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureRecord {
    pub series: String,
    pub group: Group,
    pub dim: usize,
    pub level: usize,
    pub weight: Option<usize>,
    pub generator: Generator,
    pub description: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureMeta {
    pub group: Group,
    pub dim: usize,
    pub level: usize,
    pub truncation: usize,
    pub time_augmented: bool,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureFile {
    pub meta: FeatureMeta,
    pub features: Vec<FeatureRecord>,
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli.command, stdout) {
        Ok(()) => 0,
        Err(e) => {
            if !matches!(e, CliError::VerificationFailed) {
                let _ = writeln!(stderr, "error: {e}");
            }
            e.exit_code()
        }
    }
}

pub fn execute(command: &Command, stdout: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Basis(a) => cmd_basis(a, stdout),
        Command::Features(a) => cmd_features(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout),
        Command::Volume(a) => cmd_volume(a, stdout),
    }
}

struct Family {
    group: Group,
    dim: usize,
    level: usize,
    weight: Option<usize>,
    time: bool,
}

fn resolve_family(args: &FamilyArgs) -> Result<Family, CliError> {
    let group = args.group.ok_or_else(|| input("--group is required"))?;
    let dim = args.dim.ok_or_else(|| input("--dim is required"))?;
    if dim == 0 {
        return Err(input("--dim must be at least 1"));
    }
    let time = args.time_augment;
    match group {
        Group::Gl => {
            let weight = match (args.weight, args.level, time) {
                (Some(w), _, true) => w,
                (None, _, true) => {
                    return Err(input("time-augmented gl needs --weight"));
                }
                (Some(w), Some(l), false) if l != w * dim => {
                    return Err(input(format!(
                        "gl level {l} does not equal weight {w} times dimension {dim}"
                    )))
                }
                (Some(w), _, false) => w,
                (None, Some(l), false) if l > 0 && l % dim == 0 => l / dim,
                (None, Some(l), false) => {
                    return Err(input(format!(
                        "gl level {l} is not a positive multiple of the dimension {dim}"
                    )))
                }
                (None, None, false) => return Err(input("gl needs --weight or --level")),
            };
            if weight == 0 {
                return Err(input("--weight must be at least 1"));
            }
            let level = args.level.unwrap_or(weight * dim);
            if level < weight * dim {
                return Err(input(format!(
                    "level {level} is below the base level {} of weight {weight}",
                    weight * dim
                )));
            }
            Ok(Family {
                group,
                dim,
                level,
                weight: Some(weight),
                time,
            })
        }
        Group::So | Group::Perm => {
            if args.weight.is_some() {
                return Err(input(format!("--weight applies to gl only, not {group}")));
            }
            let level = args
                .level
                .ok_or_else(|| input(format!("{group} needs --level")))?;
            Ok(Family {
                group,
                dim,
                level,
                weight: None,
                time,
            })
        }
    }
}

fn base_family(group: Group, weight: Option<usize>) -> BaseFamily {
    match group {
        Group::Gl => BaseFamily::Gl {
            weight: weight.unwrap_or(1),
        },
        Group::So => BaseFamily::So,
        Group::Perm => BaseFamily::Perm,
    }
}

fn build_family(f: &Family) -> Vec<InvariantDescriptor> {
    if f.time {
        return augmented_basis(base_family(f.group, f.weight), f.dim, f.level);
    }
    match f.group {
        Group::Gl => gl_basis(f.dim, f.weight.expect("gl families carry a weight")),
        Group::So => so_basis(f.dim, f.level),
        Group::Perm => perm_basis(f.dim, f.level),
    }
}

fn write_output(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn basis_file(f: &Family, basis: &[InvariantDescriptor]) -> BasisFile {
    BasisFile {
        meta: BasisMeta {
            group: f.group,
            dim: f.dim,
            level: f.level,
            weight: f.weight,
            time_augmented: f.time,
            version: VERSION.into(),
        },
        basis: basis
            .iter()
            .enumerate()
            .map(|(index, d)| BasisEntry {
                index,
                level: d.level,
                weight: d.weight,
                generator: d.generator.clone(),
                description: d.generator.to_string(),
                polynomial: d.polynomial.to_string(),
                notes: d.notes.clone(),
            })
            .collect(),
    }
}

fn cmd_basis(args: &BasisArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let family = resolve_family(&args.family)?;
    let basis = build_family(&family);
    let text = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&basis_file(&family, &basis))
                .expect("basis serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (i, d) in basis.iter().enumerate() {
                s.push_str(&format!("# {i}: {}\n{}\n", d.generator, d.polynomial));
                for note in &d.notes {
                    s.push_str(&format!("# note: {note}\n"));
                }
            }
            s
        }
    };
    write_output(args.output.as_deref(), &text, stdout)
}

/// A numeric table read from CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Option<Vec<String>>,
    pub rows: Vec<Vec<f64>>,
}

/// Reads a CSV of numbers. The first row is taken as a header when any of
/// its fields is not a number. Every row must have the same width.
pub fn read_table(path: &Path) -> Result<Table, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_table(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

pub fn parse_table(text: &str) -> Result<Table, String> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut header = None;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width = None;
    for (i, record) in reader.records().enumerate() {
        let line = i + 1;
        let record = record.map_err(|e| format!("line {line}: {e}"))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed: Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        let values = match parsed {
            Ok(v) => v,
            Err(_) if i == 0 => {
                header = Some(record.iter().map(str::to_string).collect::<Vec<_>>());
                width = Some(record.len());
                continue;
            }
            Err(_) => {
                let bad = record
                    .iter()
                    .find(|f| f.parse::<f64>().is_err())
                    .unwrap_or("");
                return Err(format!("line {line}: `{bad}` is not a number"));
            }
        };
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(format!("line {line}: non-finite value {bad}"));
        }
        match width {
            Some(w) if w != values.len() => {
                return Err(format!(
                    "line {line}: expected {w} columns, found {}",
                    values.len()
                ))
            }
            _ => width = Some(values.len()),
        }
        rows.push(values);
    }
    if rows.is_empty() {
        return Err("no data rows".into());
    }
    Ok(Table { header, rows })
}

fn time_column_index(table: &Table, column: &str) -> Result<usize, String> {
    let width = table.rows[0].len();
    let idx = match column.parse::<usize>() {
        Ok(i) => i,
        Err(_) => table
            .header
            .as_ref()
            .and_then(|h| h.iter().position(|c| c == column))
            .ok_or_else(|| format!("no column named `{column}`"))?,
    };
    if idx >= width {
        return Err(format!(
            "time column {idx} out of range for {width} columns"
        ));
    }
    Ok(idx)
}

/// Builds the path for one table, with the requested time handling.
pub fn table_to_path(
    table: &Table,
    time_augment: bool,
    time_column: Option<&str>,
) -> Result<PiecewisePath, String> {
    match time_column {
        Some(column) => {
            let t = time_column_index(table, column)?;
            let pts = table
                .rows
                .iter()
                .map(|r| {
                    let mut p = vec![r[t]];
                    p.extend(
                        r.iter()
                            .enumerate()
                            .filter(|&(i, _)| i != t)
                            .map(|(_, &x)| x),
                    );
                    p
                })
                .collect();
            PiecewisePath::new_time_augmented(pts).map_err(|e| e.to_string())
        }
        None => {
            let path = PiecewisePath::new(table.rows.clone()).map_err(|e| e.to_string())?;
            if time_augment {
                path.time_augment().map_err(|e| e.to_string())
            } else {
                Ok(path)
            }
        }
    }
}

/// Every invariant of level `1..=budget` for the group.
pub fn feature_basis(
    group: Group,
    dim: usize,
    budget: usize,
    time: bool,
) -> Vec<InvariantDescriptor> {
    let mut out = Vec::new();
    match group {
        Group::Gl => {
            let mut w = 1;
            while w * dim <= budget {
                if time {
                    for m in w * dim..=budget {
                        out.extend(augmented_basis(BaseFamily::Gl { weight: w }, dim, m));
                    }
                } else {
                    out.extend(gl_basis(dim, w));
                }
                w += 1;
            }
        }
        Group::So | Group::Perm => {
            for n in 1..=budget {
                out.extend(match (group, time) {
                    (_, true) => augmented_basis(base_family(group, None), dim, n),
                    (Group::So, false) => so_basis(dim, n),
                    _ => perm_basis(dim, n),
                });
            }
        }
    }
    out
}

fn cmd_features(args: &FeaturesArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let truncation = args.truncation.unwrap_or(args.level);
    if args.level > truncation {
        return Err(input(format!(
            "level budget {} exceeds signature truncation {truncation}",
            args.level
        )));
    }
    if args.level == 0 {
        return Err(input("--level must be at least 1"));
    }
    let time = args.time_augment || args.time_column.is_some();

    let paths: Vec<PiecewisePath> = args
        .inputs
        .iter()
        .map(|p| {
            let table = read_table(p)?;
            table_to_path(&table, args.time_augment, args.time_column.as_deref())
                .map_err(|e| input(format!("{}: {e}", p.display())))
        })
        .collect::<Result<_, _>>()?;

    let dim = paths[0].alphabet().dim();
    if let Some(expected) = args.dim {
        if expected != dim {
            return Err(input(format!(
                "{}: expected {expected} spatial columns, found {dim}",
                args.inputs[0].display()
            )));
        }
    }
    for (p, path) in args.inputs.iter().zip(&paths) {
        if path.alphabet().dim() != dim {
            return Err(input(format!(
                "{}: expected {dim} spatial columns, found {}",
                p.display(),
                path.alphabet().dim()
            )));
        }
    }

    let basis = feature_basis(args.group, dim, args.level, time);
    let per_series: Vec<Vec<FeatureRecord>> = args
        .inputs
        .par_iter()
        .zip(paths.par_iter())
        .map(|(name, path)| {
            let sig = path.signature(truncation);
            basis
                .iter()
                .map(|d| FeatureRecord {
                    series: name.display().to_string(),
                    group: d.group,
                    dim: d.dim,
                    level: d.level,
                    weight: d.weight,
                    generator: d.generator.clone(),
                    description: d.generator.to_string(),
                    value: sig
                        .pair(&d.polynomial)
                        .expect("basis matches the path alphabet"),
                })
                .collect()
        })
        .collect();

    let file = FeatureFile {
        meta: FeatureMeta {
            group: args.group,
            dim,
            level: args.level,
            truncation,
            time_augmented: time,
            version: VERSION.into(),
        },
        features: per_series.into_iter().flatten().collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("features serialize");
    text.push('\n');
    write_output(args.output.as_deref(), &text, stdout)
}

fn load_basis(path: &Path) -> Result<Vec<InvariantDescriptor>, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let file: BasisFile =
        serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let m = &file.meta;
    let alphabet = if m.time_augmented {
        Alphabet::with_time(m.dim)
    } else {
        Alphabet::new(m.dim)
    };
    file.basis
        .iter()
        .map(|e| {
            let polynomial = Polynomial::parse(&e.polynomial, alphabet)
                .map_err(|err| input(format!("{}: entry {}: {err}", path.display(), e.index)))?;
            Ok(InvariantDescriptor {
                group: m.group,
                time_augmented: m.time_augmented,
                dim: m.dim,
                level: e.level,
                weight: e.weight,
                generator: e.generator.clone(),
                polynomial,
                notes: e.notes.clone(),
            })
        })
        .collect()
}

fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let basis = match &args.basis {
        Some(p) => load_basis(p)?,
        None => build_family(&resolve_family(&args.family)?),
    };
    let reports: Vec<_> = basis
        .par_iter()
        .enumerate()
        .map(|(i, d)| verify(d, args.trials, args.seed.wrapping_add(i as u64)))
        .collect();
    let mut text = String::new();
    let mut failed = 0;
    for (i, (d, r)) in basis.iter().zip(&reports).enumerate() {
        if !r.passed() {
            failed += 1;
        }
        text.push_str(&format!("[{i}] {}: {r}\n", d.generator));
    }
    text.push_str(&if failed == 0 {
        format!("all {} invariants passed\n", basis.len())
    } else {
        format!("{failed} of {} invariants failed\n", basis.len())
    });
    write_output(None, &text, stdout)?;
    if failed > 0 {
        Err(CliError::VerificationFailed)
    } else {
        Ok(())
    }
}

fn cmd_volume(args: &VolumeArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let table = read_table(&args.input)?;
    let path = table_to_path(&table, false, None)
        .map_err(|e| input(format!("{}: {e}", args.input.display())))?;
    let d = path.dim();
    let fact: f64 = (1..=d).map(|k| k as f64).product();
    let determinant = || -> Result<f64, CliError> {
        if path.points().len() < d + 1 {
            return Err(input(format!(
                "{}: the determinant method needs at least {} points in dimension {d}",
                args.input.display(),
                d + 1
            )));
        }
        Ok(signed_volume_determinant_sum(path.points())? / fact)
    };
    let text = match args.method {
        Method::Pairing => format!("{}\n", signed_volume(&path)?),
        Method::Determinant => format!("{}\n", determinant()?),
        Method::Both => {
            let p = signed_volume(&path)?;
            let q = determinant()?;
            format!(
                "pairing: {p}\ndeterminant: {q}\ndifference: {}\n",
                (p - q).abs()
            )
        }
    };
    write_output(None, &text, stdout)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("siginv").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn basis_text_examples() {
        let (code, out, _) =
            run_capture(&["basis", "--group", "gl", "--dim", "2", "--weight", "1"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "+1*[1,2] -1*[2,1]"));

        let (code, out, _) =
            run_capture(&["basis", "--group", "perm", "--dim", "3", "--level", "1"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "+1*[1] +1*[2] +1*[3]"));

        let (code, out, _) = run_capture(&["basis", "--group", "so", "--dim", "2", "--level", "3"]);
        assert_eq!(code, 0);
        assert!(out.is_empty());
    }

    #[test]
    fn basis_rejects_bad_combinations() {
        let (code, _, err) = run_capture(&["basis", "--group", "gl", "--dim", "2", "--level", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("multiple"));
        assert_eq!(run_capture(&["basis", "--group", "so", "--dim", "2"]).0, 2);
        assert_eq!(
            run_capture(&["basis", "--group", "nope", "--dim", "2"]).0,
            2
        );
    }

    #[test]
    fn json_basis_round_trips() {
        let (code, out, _) = run_capture(&[
            "basis", "--group", "gl", "--dim", "2", "--weight", "2", "--format", "json",
        ]);
        assert_eq!(code, 0);
        let file: BasisFile = serde_json::from_str(&out).unwrap();
        assert_eq!(file.basis.len(), 2);
        for e in &file.basis {
            let p = Polynomial::parse(&e.polynomial, Alphabet::new(2)).unwrap();
            assert_eq!(e.generator.build(2).unwrap(), p);
        }
    }

    #[test]
    fn table_parsing() {
        let t = parse_table("x,y\n0,0\n1,0\n1,1\n").unwrap();
        assert_eq!(t.header, Some(vec!["x".into(), "y".into()]));
        assert_eq!(t.rows.len(), 3);
        let t = parse_table("0,0\n1,2\n").unwrap();
        assert!(t.header.is_none());
        let e = parse_table("0,0\n1,2,3\n").unwrap_err();
        assert!(e.contains("line 2"), "{e}");
        let e = parse_table("x,y\n0,0\n1,a\n").unwrap_err();
        assert!(e.contains("line 3"), "{e}");
        assert!(parse_table("x,y\n").is_err());
    }

    #[test]
    fn time_column_by_name() {
        let t = parse_table("t,x,y\n0,0,0\n0.5,1,0\n2,1,1\n").unwrap();
        let p = table_to_path(&t, false, Some("t")).unwrap();
        assert!(p.is_time_augmented());
        assert_eq!(p.points()[2], vec![2.0, 1.0, 1.0]);
        let p = table_to_path(&t, false, Some("2")).unwrap();
        assert_eq!(p.points()[1], vec![0.0, 0.5, 1.0]);
        assert!(table_to_path(&t, false, Some("z")).is_err());
    }

    #[test]
    fn feature_basis_sizes() {
        assert_eq!(feature_basis(Group::Gl, 2, 4, false).len(), 3);
        assert_eq!(feature_basis(Group::Perm, 2, 2, false).len(), 3);
        assert_eq!(feature_basis(Group::Gl, 2, 3, true).len(), 4);
    }
}
