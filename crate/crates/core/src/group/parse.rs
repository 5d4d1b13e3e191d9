//! Presentation file parser.
//!
//! ```text
//! # comment
//! gens x y
//! rel x^-1 y x y^-1 = y x^-1 y x y^-1 x^-1
//! rel x y x^-1 y^-1          # a relator
//! ```
//!
//! `gens` appears exactly once, before any `rel`. Word tokens are `name`,
//! `name^-1` or `name^k` for a nonzero decimal `k`.

use super::presentation::{is_identifier, Presentation, Relation, SourceTag};
use super::word::Word;
use super::GroupError;

/// A whitespace-delimited token with its 1-based column.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub column: usize,
}

/// Splits a line into tokens, dropping everything from `#` on.
pub(crate) fn tokenize(line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut tokens = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in content.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((byte, col + 1)),
            (true, Some((b, c))) => {
                tokens.push(Token { text: &content[b..byte], column: c });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((b, c)) = start {
        tokens.push(Token { text: &content[b..], column: c });
    }
    tokens
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> GroupError {
    GroupError::Syntax { line, column, message: message.into() }
}

fn parse_letter_token(tok: Token<'_>, line: usize, names: &[String]) -> Result<(usize, i64), GroupError> {
    let (name, exp) = match tok.text.split_once('^') {
        None => (tok.text, 1),
        Some((name, k)) => {
            let digits = k.strip_prefix('-').unwrap_or(k);
            if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                return Err(syntax(line, tok.column + name.len() + 1, format!("bad exponent `{k}`")));
            }
            let exp: i64 = k
                .parse()
                .map_err(|_| syntax(line, tok.column + name.len() + 1, format!("exponent `{k}` out of range")))?;
            if exp == 0 {
                return Err(syntax(line, tok.column + name.len() + 1, "exponent must be nonzero"));
            }
            (name, exp)
        }
    };
    if !is_identifier(name) {
        return Err(syntax(line, tok.column, format!("bad generator token `{}`", tok.text)));
    }
    let g = names.iter().position(|n| n == name).ok_or_else(|| GroupError::UnknownGenerator {
        name: name.to_string(),
        line,
        column: tok.column,
    })?;
    Ok((g, exp))
}

fn parse_word(tokens: &[Token<'_>], line: usize, names: &[String]) -> Result<Word, GroupError> {
    let powers = tokens.iter().map(|&t| parse_letter_token(t, line, names)).collect::<Result<Vec<_>, _>>()?;
    Ok(Word::from_powers(&powers))
}

pub fn parse_presentation(text: &str) -> Result<Presentation, GroupError> {
    let mut names: Option<Vec<String>> = None;
    let mut relations = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let tokens = tokenize(raw);
        let Some((head, rest)) = tokens.split_first() else { continue };
        match head.text {
            "gens" => {
                if names.is_some() {
                    return Err(syntax(line, head.column, "duplicate `gens` line"));
                }
                if rest.is_empty() {
                    return Err(syntax(line, head.column + 4, "`gens` needs at least one name"));
                }
                let mut list: Vec<String> = Vec::new();
                for tok in rest {
                    if !is_identifier(tok.text) {
                        return Err(syntax(line, tok.column, format!("bad generator name `{}`", tok.text)));
                    }
                    if list.iter().any(|n| n == tok.text) {
                        return Err(GroupError::DuplicateGenerator {
                            name: tok.text.to_string(),
                            line,
                            column: tok.column,
                        });
                    }
                    list.push(tok.text.to_string());
                }
                names = Some(list);
            }
            "rel" => {
                let Some(names) = names.as_ref() else {
                    return Err(syntax(line, head.column, "`rel` before `gens`"));
                };
                let eqs: Vec<usize> = rest.iter().enumerate().filter(|(_, t)| t.text == "=").map(|(i, _)| i).collect();
                let relation = match eqs.as_slice() {
                    [] => {
                        if rest.is_empty() {
                            return Err(syntax(line, head.column + 3, "empty relation"));
                        }
                        Relation::relator(parse_word(rest, line, names)?)
                    }
                    [i] => {
                        let (lhs, rhs) = (&rest[..*i], &rest[i + 1..]);
                        if lhs.is_empty() {
                            return Err(syntax(line, rest[*i].column, "missing word before `=`"));
                        }
                        if rhs.is_empty() {
                            return Err(syntax(line, rest[*i].column + 1, "missing word after `=`"));
                        }
                        Relation::new(parse_word(lhs, line, names)?, parse_word(rhs, line, names)?)
                    }
                    [_, second, ..] => return Err(syntax(line, rest[*second].column, "more than one `=`")),
                };
                relations.push(relation);
            }
            other => return Err(syntax(line, head.column, format!("unknown directive `{other}`"))),
        }
    }
    let names = names.ok_or_else(|| syntax(last_line.max(1), 1, "missing `gens` line"))?;
    Presentation::new(names, relations, SourceTag::Generic)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_eight_file() {
        let p = parse_presentation(
            "# figure-eight\ngens x y\nrel x^-1 y x y^-1 x^-1 x = y x^-1 y x y^-1 x^-1   # zx = yz\n",
        )
        .unwrap();
        assert_eq!(p.rank(), 2);
        assert_eq!(p.relations().len(), 1);
        // x^-1 x cancels on the left side
        assert_eq!(p.relations()[0].lhs, Word::from_powers(&[(0, -1), (1, 1), (0, 1), (1, -1)]));
    }

    #[test]
    fn group_of_z() {
        let p = parse_presentation("gens x\n").unwrap();
        assert_eq!(p.rank(), 1);
        assert!(p.relations().is_empty());
    }

    #[test]
    fn powers_expand() {
        let p = parse_presentation("gens a b\nrel a^3 b^-2\n").unwrap();
        assert_eq!(p.relations()[0].lhs, Word::from_powers(&[(0, 3), (1, -2)]));
    }

    #[test]
    fn error_positions() {
        assert_eq!(
            parse_presentation("gens x y\nrel x z\n"),
            Err(GroupError::UnknownGenerator { name: "z".into(), line: 2, column: 7 })
        );
        assert_eq!(
            parse_presentation("gens x x\n"),
            Err(GroupError::DuplicateGenerator { name: "x".into(), line: 1, column: 8 })
        );
        let cases = [
            ("gens x\nrel x^0\n", 2, 7),
            ("gens x\nrel x^a\n", 2, 7),
            ("gens x\nrel x^\n", 2, 7),
            ("gens x\nrel x = \n", 2, 8),
            ("gens x\nrel = x\n", 2, 5),
            ("gens x\nrel x = x = x\n", 2, 11),
            ("rel x\n", 1, 1),
            ("gens x\ngens y\n", 2, 1),
            ("gens x\nrelation x\n", 2, 1),
            ("gens 1x\n", 1, 6),
            ("gens x\nrel x^+2\n", 2, 7),
            ("gens x\nrel x=x\n", 2, 5),
            ("# nothing\n", 1, 1),
        ];
        for (text, line, column) in cases {
            match parse_presentation(text) {
                Err(GroupError::Syntax { line: l, column: c, .. }) => {
                    assert_eq!((l, c), (line, column), "{text:?}")
                }
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let text = "gens x1 x2 h\nrel h x1 h^-1 = x1 x2\nrel h x2 h^-1 = x2 x1 x2\nrel x1^2 x2^-3\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.to_text().unwrap(), text);
    }
}
