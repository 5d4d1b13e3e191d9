//! Representation file format.
//!
//! ```text
//! field p=0
//! ext w^2 = -w - 1
//! dim 2
//! mat x = [[1, 1], [0, 1]]
//! mat y = [[1, 0], [-w, 1]]
//! ```
//!
//! `field` comes first, then the optional `ext`, then `dim`, then one `mat`
//! per generator in any order. Entries are integers, fractions `a/b` (only in
//! characteristic 0) or expressions in the extension generator built from
//! `+ - * ^` and parentheses.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{ExtensionSpec, Field, FieldMatrix, FieldSpec, LaurentPoly};
use crate::group::Presentation;

use super::{RepError, Representation};

fn syntax(line: usize, column: usize, message: impl Into<String>) -> RepError {
    RepError::Syntax { line, column, message: message.into() }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Dense polynomial in the extension generator, lowest degree first.
type Poly = Vec<BigRational>;

fn poly_trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_add(a: &Poly, b: &Poly, sign: i64) -> Poly {
    let n = a.len().max(b.len());
    let s = BigRational::from_integer(BigInt::from(sign));
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x + y * &s
        })
        .collect();
    poly_trim(out)
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(out)
}

/// Recursive-descent parser for one scalar expression.
struct ExprParser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    /// Column of `chars[0]`.
    origin: usize,
    var: Option<&'a str>,
    fractions: bool,
}

impl<'a> ExprParser<'a> {
    fn new(text: &str, line: usize, origin: usize, var: Option<&'a str>, fractions: bool) -> Self {
        ExprParser { chars: text.chars().collect(), pos: 0, line, origin, var, fractions }
    }

    fn column(&self) -> usize {
        self.origin + self.pos
    }

    fn err(&self, message: impl Into<String>) -> RepError {
        syntax(self.line, self.column(), message)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<Poly, RepError> {
        if self.peek().is_none() {
            return Err(self.err("empty expression"));
        }
        let p = self.expr()?;
        match self.peek() {
            None => Ok(p),
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
        }
    }

    fn expr(&mut self) -> Result<Poly, RepError> {
        let mut sign = 1;
        match self.peek() {
            Some('-') => {
                sign = -1;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let mut acc = poly_add(&Vec::new(), &self.term()?, sign);
        loop {
            let sign = match self.peek() {
                Some('+') => 1,
                Some('-') => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
            acc = poly_add(&acc, &self.term()?, sign);
        }
    }

    fn term(&mut self) -> Result<Poly, RepError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = poly_mul(&acc, &self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, RepError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let k = self.natural()?;
        let k: u32 = k.try_into().map_err(|_| self.err("exponent too large"))?;
        Ok((0..k).fold(vec![BigRational::one()], |acc, _| poly_mul(&acc, &base)))
    }

    fn natural(&mut self) -> Result<BigInt, RepError> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<Poly, RepError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.natural()?;
                if self.peek() != Some('/') {
                    return Ok(poly_trim(vec![BigRational::from_integer(num)]));
                }
                if !self.fractions {
                    return Err(self.err("fractions are only allowed in characteristic 0"));
                }
                self.pos += 1;
                self.skip_ws();
                let den = self.natural()?;
                if den.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                Ok(poly_trim(vec![BigRational::new(num, den)]))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                if Some(name.as_str()) != self.var {
                    self.pos = start;
                    return Err(self.err(format!("unknown symbol `{name}`")));
                }
                Ok(vec![BigRational::zero(), BigRational::one()])
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

/// Splits `[[a, b], [c, d]]` into entry texts with their columns.
fn split_matrix(text: &str, line: usize, origin: usize) -> Result<Vec<Vec<(String, usize)>>, RepError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let skip = |pos: &mut usize| {
        while chars.get(*pos).is_some_and(|c| c.is_whitespace()) {
            *pos += 1;
        }
    };
    let expect = |pos: &mut usize, want: char| -> Result<(), RepError> {
        skip(pos);
        if chars.get(*pos) == Some(&want) {
            *pos += 1;
            Ok(())
        } else {
            Err(syntax(line, origin + *pos, format!("expected `{want}`")))
        }
    };
    expect(&mut pos, '[')?;
    let mut rows = Vec::new();
    loop {
        expect(&mut pos, '[')?;
        let mut row = Vec::new();
        loop {
            let start = pos;
            while chars.get(pos).is_some_and(|c| !matches!(c, ',' | ']' | '[')) {
                pos += 1;
            }
            row.push((chars[start..pos].iter().collect::<String>(), origin + start));
            match chars.get(pos) {
                Some(',') => pos += 1,
                Some(']') => {
                    pos += 1;
                    break;
                }
                _ => return Err(syntax(line, origin + pos, "expected `,` or `]`")),
            }
        }
        rows.push(row);
        skip(&mut pos);
        match chars.get(pos) {
            Some(',') => pos += 1,
            Some(']') => {
                pos += 1;
                break;
            }
            _ => return Err(syntax(line, origin + pos, "expected `,` or `]`")),
        }
    }
    skip(&mut pos);
    if pos < chars.len() {
        return Err(syntax(line, origin + pos, "trailing text after matrix"));
    }
    Ok(rows)
}

/// Byte offset and 1-based column of the first non-blank character at or
/// after byte `from`.
fn next_content(line: &str, from: usize) -> (usize, usize) {
    let rest = &line[from..];
    let skipped = rest.len() - rest.trim_start().len();
    let byte = from + skipped;
    (byte, line[..byte].chars().count() + 1)
}

pub fn parse_representation(text: &str, p: &Presentation) -> Result<Representation, RepError> {
    let mut characteristic: Option<u64> = None;
    let mut extension: Option<ExtensionSpec> = None;
    let mut field: Option<Field> = None;
    let mut dim: Option<usize> = None;
    let mut images: Vec<Option<FieldMatrix>> = vec![None; p.rank()];
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let (start, head_col) = next_content(content, 0);
        let head_end = content[start..].find(char::is_whitespace).map_or(content.len(), |i| start + i);
        let head = &content[start..head_end];
        let (rest_byte, rest_col) = next_content(content, head_end);
        let rest = content[rest_byte..].trim_end();

        // Builds the field lazily once `ext` can no longer appear.
        let ensure_field = |characteristic: Option<u64>,
                            extension: &mut Option<ExtensionSpec>,
                            field: &mut Option<Field>|
         -> Result<Field, RepError> {
            if let Some(f) = field {
                return Ok(f.clone());
            }
            let Some(c) = characteristic else {
                return Err(syntax(line, head_col, format!("`{head}` before `field`")));
            };
            let f = Field::new(FieldSpec { characteristic: c, extension: extension.take() })
                .map_err(|e| syntax(line, head_col, e.to_string()))?;
            *field = Some(f.clone());
            Ok(f)
        };

        match head {
            "field" => {
                if characteristic.is_some() {
                    return Err(syntax(line, head_col, "duplicate `field` line"));
                }
                let value = rest.strip_prefix("p=").ok_or_else(|| syntax(line, rest_col, "expected `p=<int>`"))?;
                if value.is_empty() || !value.chars().all(|c| c.is_ascii_digit()) {
                    return Err(syntax(line, rest_col + 2, format!("bad characteristic `{value}`")));
                }
                let c: u64 = value.parse().map_err(|_| syntax(line, rest_col + 2, "characteristic out of range"))?;
                // validate now so the error points at this line
                Field::new(FieldSpec { characteristic: c, extension: None })
                    .map_err(|e| syntax(line, rest_col + 2, e.to_string()))?;
                characteristic = Some(c);
            }
            "ext" => {
                let Some(c) = characteristic else {
                    return Err(syntax(line, head_col, "`ext` before `field`"));
                };
                if extension.is_some() || field.is_some() {
                    return Err(syntax(line, head_col, "`ext` must directly follow `field`, once"));
                }
                let eq = rest.find('=').ok_or_else(|| syntax(line, rest_col, "expected `<name>^<k> = ...`"))?;
                let lhs = rest[..eq].trim_end();
                let (name, k_text) =
                    lhs.split_once('^').ok_or_else(|| syntax(line, rest_col, "expected `<name>^<k>`"))?;
                if !is_identifier(name) {
                    return Err(syntax(line, rest_col, format!("bad generator name `{name}`")));
                }
                let k_col = rest_col + name.chars().count() + 1;
                let k: usize = match k_text.parse() {
                    Ok(k) if k >= 2 && k_text.chars().all(|c| c.is_ascii_digit()) => k,
                    _ => return Err(syntax(line, k_col, "extension degree must be an integer at least 2")),
                };
                let rhs_text = &rest[eq + 1..];
                let rhs_col = rest_col + rest[..eq + 1].chars().count();
                let rhs = ExprParser::new(rhs_text, line, rhs_col, Some(name), c == 0).parse_all()?;
                if rhs.len() > k {
                    return Err(syntax(line, rhs_col, "right side must have degree below the extension degree"));
                }
                let mut modulus: Vec<BigRational> =
                    (0..k).map(|i| -rhs.get(i).cloned().unwrap_or_else(BigRational::zero)).collect();
                modulus.push(BigRational::one());
                let spec = ExtensionSpec { generator: name.to_string(), modulus };
                Field::new(FieldSpec { characteristic: c, extension: Some(spec.clone()) })
                    .map_err(|e| syntax(line, head_col, e.to_string()))?;
                extension = Some(spec);
            }
            "dim" => {
                ensure_field(characteristic, &mut extension, &mut field)?;
                if dim.is_some() {
                    return Err(syntax(line, head_col, "duplicate `dim` line"));
                }
                match rest.parse::<usize>() {
                    Ok(n) if n > 0 && rest.chars().all(|c| c.is_ascii_digit()) => dim = Some(n),
                    _ => return Err(syntax(line, rest_col, format!("bad dimension `{rest}`"))),
                }
            }
            "mat" => {
                let f = ensure_field(characteristic, &mut extension, &mut field)?;
                let Some(n) = dim else {
                    return Err(syntax(line, head_col, "`mat` before `dim`"));
                };
                let eq = rest.find('=').ok_or_else(|| syntax(line, rest_col, "expected `<generator> = [[...]]`"))?;
                let name = rest[..eq].trim_end();
                if !is_identifier(name) {
                    return Err(syntax(line, rest_col, format!("bad generator name `{name}`")));
                }
                let g = p.generator_index(name).ok_or_else(|| RepError::UnknownGenerator {
                    name: name.to_string(),
                    line,
                    column: rest_col,
                })?;
                if images[g].is_some() {
                    return Err(RepError::DuplicateMatrix { name: name.to_string(), line, column: rest_col });
                }
                let after = &rest[eq + 1..];
                let body = after.trim_start();
                let body_col = rest_col + rest[..eq + 1].chars().count() + (after.len() - body.len());
                let rows = split_matrix(body, line, body_col)?;
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(syntax(line, body_col, format!("matrix must be {n}x{n}")));
                }
                let var = f.generator_name();
                let mut entries = Vec::with_capacity(n * n);
                for (text, col) in rows.into_iter().flatten() {
                    let value = ExprParser::new(&text, line, col, var, f.characteristic() == 0).parse_all()?;
                    let e =
                        f.from_residue(&value).map_err(|e| syntax(line, col, format!("entry does not embed: {e}")))?;
                    entries.push(e);
                }
                images[g] = Some(FieldMatrix::new(&f, n, n, entries)?);
            }
            other => return Err(syntax(line, head_col, format!("unknown directive `{other}`"))),
        }
    }

    let end = last_line.max(1);
    let field = match field {
        Some(f) => f,
        None if characteristic.is_none() => return Err(syntax(end, 1, "missing `field` line")),
        None => return Err(syntax(end, 1, "missing `dim` line")),
    };
    let dim = dim.ok_or_else(|| syntax(end, 1, "missing `dim` line"))?;
    let images = images
        .into_iter()
        .enumerate()
        .map(|(g, m)| m.ok_or_else(|| RepError::MissingMatrix { name: p.generators()[g].clone() }))
        .collect::<Result<Vec<_>, _>>()?;
    Representation::new(&field, dim, images)
}

/// Canonical text form; `parse_representation` reads it back exactly.
pub fn write_representation(rep: &Representation, p: &Presentation) -> Result<String, RepError> {
    if rep.rank() != p.rank() {
        return Err(RepError::DimensionMismatch(format!("{} images for {} generators", rep.rank(), p.rank())));
    }
    let f = rep.field();
    let mut out = String::new();
    writeln!(out, "field p={}", f.characteristic()).expect("string write");
    if let Some(ext) = &f.spec().extension {
        let base = f.base_field();
        let k = ext.modulus.len() - 1;
        // w^k = -(m_{k-1} w^{k-1} + ... + m_0)
        let rhs: Vec<BigRational> = ext.modulus[..k].iter().map(|c| -c.clone()).collect();
        let rhs = base_poly_text(&base, &rhs, &ext.generator);
        writeln!(out, "ext {}^{k} = {rhs}", ext.generator).expect("string write");
    }
    writeln!(out, "dim {}", rep.dim()).expect("string write");
    for (g, m) in rep.images().iter().enumerate() {
        let rows: Vec<String> = (0..m.rows())
            .map(|i| {
                let cells: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        writeln!(out, "mat {} = [{}]", p.generators()[g], rows.join(", ")).expect("string write");
    }
    Ok(out)
}

fn base_poly_text(base: &Field, coeffs: &[BigRational], var: &str) -> String {
    let p = LaurentPoly::from_terms(
        base,
        coeffs.iter().enumerate().map(|(i, c)| (i as i64, base.from_rational(c).expect("modulus coefficient embeds"))),
    );
    p.render(var)
}
