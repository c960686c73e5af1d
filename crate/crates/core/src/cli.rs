//! Command line: `verify`, `table` and `spectrum`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{structure_constants, StructureTable};
use crate::chiral::compose_chiral_pair;
use crate::error::{Error, Result};
use crate::fock::{multiplicities, spectrum, FockOperator, FockSpace};
use crate::generators::Label;
use crate::jordan::sp2n_basis;
use crate::lie_matrix::sp4_generators;
use crate::matrix::format_complex;
use crate::quantization::{dirac_representation, su11_matrices};
use crate::report::VerificationReport;
use crate::suites::{self, Suite, SuiteConfig};
use crate::symplectic::{form_from_field, LinearField};
use crate::{c64, ComplexMatrix};

#[derive(Parser, Debug)]
#[command(name = "desitter", version, about = "Verify the oscillator representation of the 3+2 de Sitter algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Generators,
    Structure,
    Polynomials,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Per-mode occupation cutoff for Fock-space checks.
        #[arg(long, default_value_t = 8)]
        cutoff: usize,
        /// Number of oscillator pairs for the sp(2n) checks.
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        /// Same as `--format json`.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print generator matrices, structure constants or quadratic polynomials.
    Table {
        #[arg(value_enum)]
        what: TableKind,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Eigenvalues with multiplicities of a two-mode operator, as CSV.
    Spectrum {
        /// H, L3, J (chiral pair) or any of the ten generator labels.
        operator: String,
        #[arg(long, default_value_t = 8)]
        cutoff: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Parse `args`, run, and return the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return e.exit_code();
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Argument(_) | Error::CutoffTooSmall { .. } | Error::DimensionMismatch { .. } => 2,
                _ => 1,
            }
        }
    }
}

fn emit(text: &str, output: Option<&PathBuf>, out: &mut dyn Write) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Error::arg(format!("cannot write {}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Error::arg(format!("cannot write output: {e}"))),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Verify { suite, cutoff, n, format, json: as_json, output } => {
            let cfg = SuiteConfig { cutoff, n };
            if suite.uses_fock() && cutoff < suites::MIN_FOCK_CUTOFF {
                return Err(Error::arg(format!(
                    "suite '{suite}' needs --cutoff of at least {}, got {cutoff}",
                    suites::MIN_FOCK_CUTOFF
                )));
            }
            let report = suites::run(suite, &cfg)?;
            let format = if as_json { Format::Json } else { format };
            let text = render_report(&report, format);
            emit(&text, output.as_ref(), out)?;
            if output.is_some() {
                let _ = writeln!(out, "{}: {} passed, {} failed", report.suite, report.passed, report.failed);
            }
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Table { what, n, format, json: as_json, output } => {
            let format = if as_json { Format::Json } else { format };
            let text = render_table(what, n, format)?;
            emit(&text, output.as_ref(), out)?;
            Ok(0)
        }
        Command::Spectrum { operator, cutoff, output } => {
            let space = FockSpace::new(2, cutoff)?;
            let op = named_operator(&operator, space)?;
            emit(&spectrum_csv(&op)?, output.as_ref(), out)?;
            Ok(0)
        }
    }
}

pub fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Pretty => format!("{report}\n"),
        Format::Json => json(report),
        Format::Csv => {
            let mut s = String::from("label,residual,tolerance,pass\n");
            for c in &report.checks {
                s.push_str(&format!("{},{:e},{:e},{}\n", csv_field(&c.label), c.residual, c.tolerance, c.pass));
            }
            s
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// The labelled matrix basis used by `table` for a given `n`: the named
/// `S₁, S₂, S₃` for `n = 1`, the ten Sp(4) generators for `n = 2`, and the
/// enumerated sp(2n) basis `G1, G2, …` otherwise.
pub fn table_basis(n: usize) -> Result<Vec<(String, ComplexMatrix)>> {
    Ok(match n {
        0 => return Err(Error::arg("--n must be at least 1")),
        1 => su11_matrices().into_iter().enumerate().map(|(k, m)| (format!("S{}", k + 1), m)).collect(),
        2 => sp4_generators().iter().map(|(l, m)| (l.to_string(), m.clone())).collect(),
        _ => sp2n_basis(n)?.into_iter().enumerate().map(|(k, m)| (format!("G{}", k + 1), m)).collect(),
    })
}

#[derive(Serialize)]
struct LabelledMatrix<'a> {
    label: &'a str,
    matrix: &'a ComplexMatrix,
}

#[derive(Serialize)]
struct StructureExport<'a> {
    labels: &'a [String],
    /// `[i][j][k] = [re, im]` of `c_ijk` in `[Gᵢ, Gⱼ] = Σₖ c_ijk Gₖ`.
    constants: Vec<Vec<Vec<[f64; 2]>>>,
    residual: f64,
}

#[derive(Serialize)]
struct PolynomialExport<'a> {
    label: &'a str,
    polynomial: String,
    form: &'a ComplexMatrix,
}

fn bracket_text(t: &StructureTable, i: usize, j: usize) -> String {
    let labels = t.labels();
    let terms: Vec<String> = t
        .bracket(i, j)
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() >= 1e-12)
        .map(|(k, c)| match format_complex(*c).as_str() {
            "1" => labels[k].clone(),
            "-1" => format!("-{}", labels[k]),
            s if s.contains(['+', '-']) && !s.starts_with('-') || s[1..].contains(['+', '-']) => format!("({s}){}", labels[k]),
            s => format!("{s}{}", labels[k]),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

pub fn render_table(what: TableKind, n: usize, format: Format) -> Result<String> {
    let basis = table_basis(n)?;
    let labels: Vec<String> = basis.iter().map(|(l, _)| l.clone()).collect();
    match what {
        TableKind::Generators => Ok(match format {
            Format::Json => json(&basis.iter().map(|(l, m)| LabelledMatrix { label: l, matrix: m }).collect::<Vec<_>>()),
            Format::Csv => {
                let mut s = String::from("label,row,col,re,im\n");
                for (l, m) in &basis {
                    for r in 0..m.dim() {
                        for c in 0..m.dim() {
                            let z = m.get(r, c);
                            s.push_str(&format!("{l},{r},{c},{:?},{:?}\n", z.re, z.im));
                        }
                    }
                }
                s
            }
            Format::Pretty => basis.iter().map(|(l, m)| format!("{l} ={m}\n")).collect(),
        }),
        TableKind::Structure => {
            let t = structure_constants(&labels, &basis.iter().map(|(_, m)| m).collect::<Vec<_>>())?;
            Ok(match format {
                Format::Json => json(&StructureExport { labels: &labels, constants: t.tensor(), residual: t.max_residual() }),
                Format::Csv => {
                    let mut s = String::from("i,j,k,re,im\n");
                    for (i, j, k, c) in t.nonzero(1e-12) {
                        s.push_str(&format!("{},{},{},{:?},{:?}\n", labels[i], labels[j], labels[k], c.re, c.im));
                    }
                    s
                }
                Format::Pretty => {
                    let mut s = String::new();
                    for i in 0..labels.len() {
                        for j in i + 1..labels.len() {
                            s.push_str(&format!("[{},{}] = {}\n", labels[i], labels[j], bracket_text(&t, i, j)));
                        }
                    }
                    s
                }
            })
        }
        TableKind::Polynomials => {
            // −i times the form, so the printed polynomials are real
            let forms = basis
                .iter()
                .map(|(l, m)| Ok((l.clone(), form_from_field(&LinearField::new(m.clone())?)?.scale(c64(0.0, -1.0)))))
                .collect::<Result<Vec<_>>>()?;
            Ok(match format {
                Format::Json => json(
                    &forms
                        .iter()
                        .map(|(l, f)| PolynomialExport { label: l, polynomial: f.to_string(), form: f.matrix() })
                        .collect::<Vec<_>>(),
                ),
                Format::Csv => {
                    let mut s = String::from("label,polynomial\n");
                    for (l, f) in &forms {
                        s.push_str(&format!("{l},{}\n", csv_field(&f.to_string())));
                    }
                    s
                }
                Format::Pretty => forms.iter().map(|(l, f)| format!("-i {l} = {f}\n")).collect(),
            })
        }
    }
}

/// `H`, `L3`, `J` (the composed chiral pair) or any generator label.
pub fn named_operator(name: &str, space: FockSpace) -> Result<FockOperator> {
    if name.eq_ignore_ascii_case("j") {
        return Ok(compose_chiral_pair(space)?.1);
    }
    let label: Label = name.parse()?;
    Ok(dirac_representation(space)?[label].clone())
}

fn display_value(x: f64) -> String {
    let r = (x * 1e9).round() / 1e9;
    if r == 0.0 {
        "0".to_string()
    } else {
        format!("{r}")
    }
}

pub fn spectrum_csv(op: &FockOperator) -> Result<String> {
    let mut s = String::from("eigenvalue,multiplicity\n");
    for (v, m) in multiplicities(&spectrum(op)?, 1e-8) {
        s.push_str(&format!("{},{m}\n", display_value(v)));
    }
    Ok(s)
}
