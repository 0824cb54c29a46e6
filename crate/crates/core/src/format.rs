//! The `.gsg` plain-text format.
//!
//! ```text
//! gsg 1
//! dim 2
//! lower 0 0
//! conductor 4 4
//! 0 0
//! 2 2
//! 3 3
//! 4 4
//! ```
//!
//! Four header lines (magic and version, dimension, lower bound, conductor)
//! are followed by the members inside `[lower, conductor]`, one per line,
//! coordinates separated by single spaces, sorted lexicographically without
//! duplicates. The conductor row must be present. Lines starting with `#` and
//! blank lines are ignored on input and never written. Every line, including
//! the last, ends with `\n`.
//!
//! For a product semigroup the coordinates of each factor occupy its support
//! axes in increasing order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lattice::Point;
use crate::set::TruncatedSet;

pub const MAGIC: &str = "gsg";
pub const VERSION: u32 = 1;

/// Canonical text of a set.
pub fn serialize(t: &TruncatedSet) -> String {
    let mut out = String::new();
    writeln!(out, "{MAGIC} {VERSION}").unwrap();
    writeln!(out, "dim {}", t.dim()).unwrap();
    writeln!(out, "lower {}", join(t.lower())).unwrap();
    writeln!(out, "conductor {}", join(t.conductor())).unwrap();
    for p in t.small() {
        writeln!(out, "{}", join(p)).unwrap();
    }
    out
}

fn join(p: &Point) -> String {
    p.coords()
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    /// Whitespace-separated tokens with their 1-based columns.
    fn tokens(&self) -> Vec<(usize, &str)> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, ch) in self.text.char_indices() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    out.push((s + 1, &self.text[s..i]));
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            out.push((s + 1, &self.text[s..]));
        }
        out
    }

    fn integers(&self, tokens: &[(usize, &str)], dim: usize) -> Result<Point> {
        if tokens.len() != dim {
            let col = tokens.get(dim).map_or(self.text.len() + 1, |t| t.0);
            return Err(self.err(
                col,
                format!("expected {dim} coordinates, found {}", tokens.len()),
            ));
        }
        tokens
            .iter()
            .map(|(col, tok)| {
                tok.parse::<i64>()
                    .map_err(|_| self.err(*col, format!("invalid integer `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Point::from)
    }

    fn keyed(&self, key: &str, dim: usize) -> Result<Point> {
        let toks = self.tokens();
        match toks.first() {
            Some((_, k)) if *k == key => self.integers(&toks[1..], dim),
            Some((col, k)) => Err(self.err(*col, format!("expected `{key}`, found `{k}`"))),
            None => Err(self.err(1, format!("expected `{key}`"))),
        }
    }
}

pub fn parse(text: &str) -> Result<TruncatedSet> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, text)| Line {
            number: i + 1,
            text,
        })
        .filter(|l| {
            let t = l.text.trim();
            !t.is_empty() && !t.starts_with('#')
        });
    let eof = |what: &str| Error::Parse {
        line: text.lines().count() + 1,
        column: 1,
        message: format!("unexpected end of input, expected {what}"),
    };

    let magic = lines.next().ok_or_else(|| eof("header"))?;
    let toks = magic.tokens();
    match toks.as_slice() {
        [(_, m), (col, v)] if *m == MAGIC => {
            if v.parse::<u32>().ok() != Some(VERSION) {
                return Err(magic.err(*col, format!("unsupported version `{v}`")));
            }
        }
        _ => return Err(magic.err(1, format!("expected `{MAGIC} {VERSION}`"))),
    }

    let dim_line = lines.next().ok_or_else(|| eof("`dim`"))?;
    let toks = dim_line.tokens();
    let dim = match toks.as_slice() {
        [(_, "dim"), (col, d)] => match d.parse::<usize>() {
            Ok(d) if d >= 1 => d,
            _ => return Err(dim_line.err(*col, format!("invalid dimension `{d}`"))),
        },
        _ => return Err(dim_line.err(1, "expected `dim <h>`")),
    };

    let lower_line = lines.next().ok_or_else(|| eof("`lower`"))?;
    let lower = lower_line.keyed("lower", dim)?;
    let cond_line = lines.next().ok_or_else(|| eof("`conductor`"))?;
    let conductor = cond_line.keyed("conductor", dim)?;
    if !lower.le(&conductor) {
        return Err(cond_line.err(1, format!("conductor {conductor} not above lower {lower}")));
    }

    let mut small: Vec<Point> = Vec::new();
    for line in lines {
        let p = line.integers(&line.tokens(), dim)?;
        if !(p.ge(&lower) && p.le(&conductor)) {
            return Err(line.err(
                1,
                format!("element {p} outside window [{lower}, {conductor}]"),
            ));
        }
        if let Some(prev) = small.last() {
            if prev == &p {
                return Err(line.err(1, format!("duplicate element {p}")));
            }
            if prev > &p {
                return Err(line.err(1, format!("element {p} out of order after {prev}")));
            }
        }
        small.push(p);
    }
    if small.last() != Some(&conductor) {
        return Err(Error::Parse {
            line: text.lines().count() + 1,
            column: 1,
            message: "conductor element absent".into(),
        });
    }
    TruncatedSet::new(lower, conductor, small)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn med_fixture_parses() {
        let t = parse(fixtures::MED_SOURCE).unwrap();
        let expected: Vec<Point> = vec![[0, 0].into(), [2, 2].into(), [3, 3].into(), [4, 4].into()];
        assert_eq!(t.small(), expected.as_slice());
        assert_eq!(serialize(&t), fixtures::MED_SOURCE);
    }

    #[test]
    fn missing_conductor_row() {
        let err = parse("gsg 1\ndim 2\nlower 0 0\nconductor 4 4\n0 0\n2 2\n").unwrap_err();
        match err {
            Error::Parse { message, .. } => assert_eq!(message, "conductor element absent"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn line_numbered_errors() {
        let cases = [
            ("gsg 2\ndim 1\nlower 0\nconductor 0\n0\n", 1, 5),
            (
                "gsg 1\ndim 2\nlower 0 0\nconductor 2 2\n1 1\n0 0\n2 2\n",
                6,
                1,
            ),
            (
                "gsg 1\ndim 2\nlower 0 0\nconductor 2 2\n1 1\n1 1\n2 2\n",
                6,
                1,
            ),
            ("gsg 1\ndim 2\nlower 0 0\nconductor 2 2\n3 1\n2 2\n", 5, 1),
            ("gsg 1\ndim 2\nlower 0 0\nconductor 2 2\n1 x\n2 2\n", 5, 3),
            ("gsg 1\ndim 2\nlower 0 0\nconductor 2 2\n1 1 1\n2 2\n", 5, 5),
            ("gsg 1\ndim 2\nlowr 0 0\n", 3, 1),
        ];
        for (text, line, column) in cases {
            match parse(text) {
                Err(Error::Parse {
                    line: l, column: c, ..
                }) => {
                    assert_eq!((l, c), (line, column), "{text:?}")
                }
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let t = parse("# a comment\ngsg 1\n\ndim 1\nlower 0\nconductor 3\n0\n3\n").unwrap();
        assert_eq!(serialize(&t), "gsg 1\ndim 1\nlower 0\nconductor 3\n0\n3\n");
    }
}
