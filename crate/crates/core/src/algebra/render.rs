//! Text rendering shared by field elements and Laurent polynomials.
//!
//! Terms are written in the order given (callers pass decreasing degree) as
//! `c*t^k`, with `c` omitted when it is 1, `t^0` written as the bare
//! coefficient and `t^1` as `t`. Signs join terms as ` + ` / ` - `.

/// How one coefficient prints inside a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct CoeffText {
    /// Coefficient carries a minus sign that is pulled out to the joiner.
    pub negative: bool,
    /// Absolute value text, or a parenthesised compound value.
    pub body: String,
    /// Absolute value is 1 (omitted in front of a power of the variable).
    pub unit: bool,
    /// Body is a parenthesised sum; never carries a sign.
    pub compound: bool,
}

impl CoeffText {
    pub(crate) fn plain(negative: bool, body: String, unit: bool) -> Self {
        CoeffText { negative, body, unit, compound: false }
    }
}

fn monomial(degree: i64, var: &str) -> String {
    match degree {
        1 => var.to_string(),
        k => format!("{var}^{k}"),
    }
}

pub(crate) fn render_terms(terms: impl Iterator<Item = (i64, CoeffText)>, var: &str) -> String {
    let mut out = String::new();
    for (i, (degree, c)) in terms.enumerate() {
        let term = match (degree, c.unit) {
            (0, true) => "1".to_string(),
            (0, false) => c.body.clone(),
            (_, true) => monomial(degree, var),
            (_, false) => format!("{}*{}", c.body, monomial(degree, var)),
        };
        match (i, c.negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
