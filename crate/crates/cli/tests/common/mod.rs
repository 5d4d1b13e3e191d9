#![allow(dead_code)]

use std::path::{Path, PathBuf};

use rtorsion::catalog;
use tempfile::TempDir;

pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("rtorsion").chain(args.iter().copied());
    let code = rtorsion_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Every builtin presentation and representation, written to disk through
/// the `example` command.
pub struct Workspace {
    pub dir: TempDir,
}

impl Workspace {
    pub fn new() -> Self {
        let dir = tempfile::tempdir().unwrap();
        for entry in catalog::catalog() {
            let (code, text, _) = run_cli(&["example", entry.name]);
            assert_eq!(code, 0);
            std::fs::write(dir.path().join(format!("{}.pres", entry.name)), text).unwrap();
            for (rep, _) in &entry.representations {
                let (code, text, _) = run_cli(&["example", entry.name, "--rep", rep]);
                assert_eq!(code, 0);
                std::fs::write(dir.path().join(format!("{}.{rep}.rep", entry.name)), text).unwrap();
            }
        }
        Workspace { dir }
    }

    pub fn path(&self, file: &str) -> PathBuf {
        self.dir.path().join(file)
    }

    /// `@knot` is the presentation file, `@knot/rep` a representation file.
    pub fn resolve(&self, arg: &str) -> String {
        match arg.strip_prefix('@') {
            Some(spec) => {
                let file = match spec.split_once('/') {
                    Some((knot, rep)) => format!("{knot}.{rep}.rep"),
                    None => format!("{spec}.pres"),
                };
                self.path(&file).to_str().unwrap().to_string()
            }
            None => arg.to_string(),
        }
    }

    pub fn run(&self, args: &[&str]) -> (i32, String, String) {
        let resolved: Vec<String> = args.iter().map(|a| self.resolve(a)).collect();
        let refs: Vec<&str> = resolved.iter().map(String::as_str).collect();
        run_cli(&refs)
    }
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Golden cases: file stem and arguments.
pub fn golden_cases() -> Vec<(String, Vec<String>)> {
    let mut cases = Vec::new();
    let mut add = |stem: String, args: &[&str]| cases.push((stem, args.iter().map(|s| s.to_string()).collect()));
    for entry in catalog::catalog() {
        let n = entry.name;
        add(format!("example-{n}"), &["example", n]);
        add(format!("alexander-{n}"), &["alexander", &format!("@{n}")]);
        for (r, _) in &entry.representations {
            let (pres, rep) = (format!("@{n}"), format!("@{n}/{r}"));
            add(format!("example-{n}-{r}"), &["example", n, "--rep", r]);
            add(format!("torsion-{n}-{r}"), &["torsion", &pres, &rep]);
            add(format!("fiber-check-{n}-{r}"), &["fiber-check", &pres, &rep]);
            add(format!("check-{n}-{r}"), &["check", &pres, &rep]);
        }
    }
    add(
        "torsion-figure-eight-omega-column-y".into(),
        &["torsion", "@figure-eight", "@figure-eight/omega", "--column", "y"],
    );
    add(
        "torsion-kinoshita-terasaka-f5-column-x4".into(),
        &["torsion", "@kinoshita-terasaka", "@kinoshita-terasaka/f5", "--column", "x4"],
    );
    add(
        "torsion-monic-nonfibered-f5-column-x7".into(),
        &["torsion", "@monic-nonfibered", "@monic-nonfibered/f5", "--column", "x7"],
    );
    add(
        "find-reps-figure-eight-p7-parabolic".into(),
        &["find-reps", "@figure-eight", "--p", "7", "--parabolic", "--limit", "4"],
    );
    add("find-reps-trefoil-p3".into(), &["find-reps", "@trefoil", "--p", "3"]);
    cases
}

/// Lines whose value is a polynomial or a quotient of two.
pub const POLY_KEYS: &[&str] = &["numerator", "denominator", "reduced", "torsion", "alexander"];

/// Splits at top-level ` + ` / ` - ` joiners, keeping parenthesised
/// coefficients intact. Returns (negative, term) pairs.
fn split_terms(s: &str) -> Option<Vec<(bool, &str)>> {
    let bytes = s.as_bytes();
    let (mut depth, mut start, mut negative) = (0i32, 0usize, false);
    if s.starts_with('-') {
        negative = true;
        start = 1;
    }
    let mut out = Vec::new();
    let mut i = start;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b' ' if depth == 0 => {
                let joiner = s.get(i..i + 3)?;
                if joiner != " + " && joiner != " - " {
                    return None;
                }
                out.push((negative, &s[start..i]));
                negative = joiner == " - ";
                i += 3;
                start = i;
                continue;
            }
            _ => {}
        }
        i += 1;
    }
    out.push((negative, &s[start..]));
    Some(out)
}

fn is_number(s: &str) -> bool {
    let digits = |d: &str| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) && (d == "0" || !d.starts_with('0'));
    match s.split_once('/') {
        Some((a, b)) => digits(a) && digits(b) && b != "1" && b != "0",
        None => digits(s),
    }
}

/// `w`, `w^k` or `c*w^k` for an extension generator `w` other than `t`.
fn is_generator_power(s: &str) -> bool {
    let (c, rest) = s.split_once('*').unwrap_or(("1", s));
    let (name, exp) = rest.split_once('^').unwrap_or((rest, "2"));
    let ident = name != "t"
        && name.chars().next().is_some_and(|ch| ch.is_ascii_alphabetic())
        && name.chars().all(|ch| ch.is_ascii_alphanumeric() || ch == '_');
    is_number(c) && ident && exp.parse::<u32>().is_ok_and(|k| k >= 2)
}

/// Degree of `t` or `t^k`.
fn monomial_degree(s: &str) -> Option<i64> {
    match s {
        "t" => Some(1),
        _ => {
            let k: i64 = s.strip_prefix("t^")?.parse().ok()?;
            (k != 0 && k != 1).then_some(k)
        }
    }
}

/// Checks the polynomial grammar: strictly decreasing degrees, `c*t^k`
/// with `c` omitted when 1, bare constants, and over `F_p` only residues
/// `0..p` with no minus signs.
pub fn check_polynomial(s: &str, prime: Option<u64>) -> Result<(), String> {
    if s == "0" {
        return Ok(());
    }
    let terms = split_terms(s).ok_or_else(|| format!("bad joiner in `{s}`"))?;
    let mut last: Option<i64> = None;
    for (negative, term) in terms {
        if negative && prime.is_some() {
            return Err(format!("minus sign over F_p in `{s}`"));
        }
        let (coeff, degree) = if let Some(d) = monomial_degree(term) {
            (None, d)
        } else if let Some((c, m)) = term.rsplit_once('*') {
            (Some(c), monomial_degree(m).ok_or_else(|| format!("bad monomial `{m}` in `{s}`"))?)
        } else {
            (Some(term), 0)
        };
        if let Some(c) = coeff {
            let compound = c.starts_with('(') && c.ends_with(')');
            if !compound && !is_number(c) && !is_generator_power(c) {
                return Err(format!("bad coefficient `{c}` in `{s}`"));
            }
            if c == "0" || (c == "1" && degree != 0) {
                return Err(format!("redundant coefficient `{c}` in `{s}`"));
            }
            if let Some(p) = prime {
                let v: u64 = c.parse().map_err(|_| format!("non-residue `{c}` in `{s}`"))?;
                if v >= p {
                    return Err(format!("residue {v} out of range in `{s}`"));
                }
            }
        }
        if last.is_some_and(|l| degree >= l) {
            return Err(format!("degrees not decreasing in `{s}`"));
        }
        last = Some(degree);
    }
    Ok(())
}

/// A polynomial, or `(num) / (den)`.
pub fn check_value(s: &str, prime: Option<u64>) -> Result<(), String> {
    match s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).and_then(|r| r.split_once(") / (")) {
        Some((num, den)) => {
            check_polynomial(num, prime)?;
            check_polynomial(den, prime)
        }
        None => check_polynomial(s, prime),
    }
}

/// Checks every polynomial-valued line of command output.
pub fn check_output(text: &str, prime: Option<u64>) -> Result<usize, String> {
    let mut checked = 0;
    for line in text.lines() {
        if let Some((key, value)) = line.split_once(": ") {
            if POLY_KEYS.contains(&key) {
                check_value(value, prime)?;
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Field characteristic of a builtin representation, if prime.
pub fn prime_of(knot: &str, rep: &str) -> Option<u64> {
    let e = catalog::example(knot)?;
    let c = e.representation(rep)?.field().characteristic();
    (c != 0).then_some(c)
}
