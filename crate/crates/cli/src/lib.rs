//! Command dispatch for the `rtorsion` binary. Output is one `key: value`
//! pair per line; every failure is a single `error:` line and exit code 2.

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rtorsion::algebra::{Field, LaurentPoly};
use rtorsion::catalog::{self, ExampleCatalogEntry};
use rtorsion::group::{parse_presentation, GroupError, Presentation};
use rtorsion::rep::{
    find_representations, parse_representation, write_representation, RepError, Representation, SearchOptions,
};
use rtorsion::torsion::{
    check_column_independence, classical_alexander, fibered_obstruction, reidemeister_torsion, symmetry_check,
    Symmetry, TorsionError, TorsionResult, Verdict,
};

#[derive(Parser, Debug)]
#[command(name = "rtorsion", version, about = "Twisted Alexander polynomials and the fiberedness obstruction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Torsion of a presentation twisted by a representation.
    Torsion {
        pres: PathBuf,
        rep: PathBuf,
        /// Generator whose block column is removed.
        #[arg(long)]
        column: Option<String>,
    },
    /// Classical Alexander polynomial.
    Alexander { pres: PathBuf },
    /// Torsion plus the monic obstruction verdict.
    FiberCheck { pres: PathBuf, rep: PathBuf },
    /// Enumerate SL(2, F_p) representations.
    FindReps {
        pres: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        limit: Option<usize>,
        /// Only images of trace 2 other than the identity.
        #[arg(long)]
        parabolic: bool,
        /// Only images of this trace.
        #[arg(long)]
        trace: Option<u64>,
    },
    /// Print a builtin presentation, or one of its representations.
    Example {
        name: String,
        /// Representation name or 1-based index.
        #[arg(long)]
        rep: Option<String>,
    },
    /// Column independence and symmetry diagnostics.
    Check { pres: PathBuf, rep: PathBuf },
}

#[derive(Debug)]
enum CliError {
    Io(PathBuf, io::Error),
    Group(PathBuf, GroupError),
    Rep(PathBuf, RepError),
    Torsion(TorsionError),
    Other(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Group(path, e) => write!(f, "{}:{e}", path.display()),
            CliError::Rep(path, e) => write!(f, "{}:{e}", path.display()),
            CliError::Torsion(e) => write!(f, "{e}"),
            CliError::Other(msg) => f.write_str(msg),
        }
    }
}

impl From<TorsionError> for CliError {
    fn from(e: TorsionError) -> Self {
        CliError::Torsion(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Other(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Runs one command; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            // clap's first paragraph, flattened onto one line
            let text = e.to_string();
            let summary: Vec<&str> = text.lines().take_while(|l| !l.trim().is_empty()).map(str::trim).collect();
            let _ = writeln!(err, "error: {}", summary.join(" ").trim_start_matches("error: "));
            return 2;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let line = e.to_string().replace('\n', " ");
            let _ = writeln!(err, "error: {line}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Torsion { pres, rep, column } => {
            let p = read_presentation(&pres)?;
            let rho = read_representation(&rep, &p)?;
            let column = column
                .map(|name| {
                    p.generator_index(&name).ok_or_else(|| CliError::Other(format!("UnknownGenerator: `{name}`")))
                })
                .transpose()?;
            let r = reidemeister_torsion(&p, &rho, column)?;
            write_torsion(out, &p, &r)
        }
        Command::Alexander { pres } => {
            let p = read_presentation(&pres)?;
            write_alexander(out, &p)
        }
        Command::FiberCheck { pres, rep } => {
            let p = read_presentation(&pres)?;
            let rho = read_representation(&rep, &p)?;
            let r = reidemeister_torsion(&p, &rho, None)?;
            write_torsion(out, &p, &r)?;
            let report = fibered_obstruction(&r);
            writeln!(out, "leading_ratio: {}", report.leading_ratio)?;
            writeln!(out, "trailing_ratio: {}", report.trailing_ratio)?;
            writeln!(out, "within_hypothesis: {}", report.within_hypothesis)?;
            match report.verdict {
                Verdict::Obstructed(reason) => {
                    writeln!(out, "verdict: NOT FIBERED")?;
                    writeln!(out, "reason: {reason}")?;
                }
                Verdict::Passes => writeln!(out, "verdict: no obstruction")?,
            }
            Ok(())
        }
        Command::FindReps { pres, p: prime, limit, parabolic, trace } => {
            let p = read_presentation(&pres)?;
            let mut options = SearchOptions::new(prime);
            options.limit = limit;
            options.parabolic = parabolic;
            options.trace = trace;
            let found = find_representations(&p, &options).map_err(|e| CliError::Other(e.to_string()))?;
            writeln!(out, "# total: {}", found.total)?;
            if found.truncated {
                writeln!(out, "# truncated: showing {}", found.representations.len())?;
            }
            for (i, rho) in found.representations.iter().enumerate() {
                writeln!(out)?;
                writeln!(out, "# representation {}", i + 1)?;
                write!(out, "{}", write_representation(rho, &p).map_err(|e| CliError::Other(e.to_string()))?)?;
            }
            Ok(())
        }
        Command::Example { name, rep } => {
            let entry = catalog::example(&name).ok_or_else(|| {
                CliError::Other(format!("unknown example `{name}` (known: {})", catalog::names().join(", ")))
            })?;
            match rep {
                None => {
                    writeln!(out, "# {}", entry.description)?;
                    let text = entry.presentation.to_text().map_err(|e| CliError::Other(e.to_string()))?;
                    write!(out, "{text}")?;
                }
                Some(key) => {
                    let rho = select_representation(&entry, &key)?;
                    let text =
                        write_representation(rho, &entry.presentation).map_err(|e| CliError::Other(e.to_string()))?;
                    write!(out, "{text}")?;
                }
            }
            Ok(())
        }
        Command::Check { pres, rep } => {
            let p = read_presentation(&pres)?;
            let rho = read_representation(&rep, &p)?;
            let names = p.generators();
            let report = check_column_independence(&p, &rho)?;
            let usable: Vec<&str> = report.usable.iter().map(|&j| names[j].as_str()).collect();
            writeln!(out, "usable_columns: {}", usable.join(" "))?;
            for pair in &report.pairs {
                writeln!(
                    out,
                    "pair: {} {} sign={:+} shift={}",
                    names[pair.first], names[pair.second], pair.sign, pair.shift
                )?;
            }
            writeln!(out, "within_unit_group: {}", report.within_unit_group())?;
            let r = reidemeister_torsion(&p, &rho, None)?;
            let sym = symmetry_check(&r);
            match sym.symmetry {
                Symmetry::Symmetric { sign, shift } => {
                    writeln!(out, "symmetry: symmetric sign={sign:+} shift={shift}")?
                }
                Symmetry::Asymmetric => writeln!(out, "symmetry: asymmetric")?,
            }
            writeln!(out, "symmetry_within_hypothesis: {}", sym.within_hypothesis)?;
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_owned(), e))
}

fn read_presentation(path: &Path) -> Result<Presentation> {
    parse_presentation(&read(path)?).map_err(|e| CliError::Group(path.to_owned(), e))
}

fn read_representation(path: &Path, p: &Presentation) -> Result<Representation> {
    parse_representation(&read(path)?, p).map_err(|e| CliError::Rep(path.to_owned(), e))
}

fn select_representation<'a>(entry: &'a ExampleCatalogEntry, key: &str) -> Result<&'a Representation> {
    if let Some(rho) = entry.representation(key) {
        return Ok(rho);
    }
    key.parse::<usize>()
        .ok()
        .and_then(|k| k.checked_sub(1))
        .and_then(|k| entry.representations.get(k))
        .map(|(_, rho)| rho)
        .ok_or_else(|| {
            let known: Vec<&str> = entry.representations.iter().map(|(n, _)| *n).collect();
            CliError::Other(format!("unknown representation `{key}` for {} (known: {})", entry.name, known.join(", ")))
        })
}

fn write_torsion(out: &mut dyn Write, p: &Presentation, r: &TorsionResult) -> Result<()> {
    writeln!(out, "column: {}", p.generators()[r.column()])?;
    writeln!(out, "numerator: {}", r.numerator())?;
    writeln!(out, "denominator: {}", r.denominator())?;
    writeln!(out, "reduced: {}", r.reduced())?;
    writeln!(out, "shift: {}", r.shift())?;
    writeln!(out, "is_polynomial: {}", r.is_polynomial())?;
    writeln!(out, "unit_group: {}", r.unit_group())?;
    Ok(())
}

fn write_alexander(out: &mut dyn Write, p: &Presentation) -> Result<()> {
    let r = classical_alexander(p)?;
    writeln!(out, "torsion: {}", r.reduced())?;
    // Δ = τ · (t - 1)
    let q = Field::rationals();
    let scaled = r.reduced().numerator() * &LaurentPoly::from_ints(&q, 0, &[-1, 1]);
    if let Ok(Some(delta)) = scaled.exact_div(r.reduced().denominator()) {
        writeln!(out, "alexander: {delta}")?;
        if let Ok(v) = delta.eval(&q.one()) {
            writeln!(out, "alexander_at_one: {v}")?;
        }
    }
    Ok(())
}
