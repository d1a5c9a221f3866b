//! Point files: a `<kind> <dim>` header followed by one point per line.
//!
//! Coordinates are whitespace-separated rationals (`p` or `p/q`). Text after
//! `#` and blank lines are ignored.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;
use zonoracle::{Rational, RationalPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Generators,
    Vertices,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Generators => "generators",
            Kind::Vertices => "vertices",
        })
    }
}

impl FromStr for Kind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "generators" => Ok(Kind::Generators),
            "vertices" => Ok(Kind::Vertices),
            _ => Err(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub kind: Kind,
    pub dim: usize,
    pub rows: Vec<RationalPoint>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input: expected a `<kind> <dim>` header")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line { line, message: message.into() }
}

impl Document {
    pub fn new(kind: Kind, dim: usize, rows: Vec<RationalPoint>) -> Self {
        Document { kind, dim, rows }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [kind, dim] = fields[..] else {
            return Err(at(line, format!("expected `<kind> <dim>`, found `{header}`")));
        };
        let kind: Kind = kind
            .parse()
            .map_err(|_| at(line, format!("unknown kind `{kind}` (expected generators or vertices)")))?;
        let dim: usize = dim
            .parse()
            .map_err(|_| at(line, format!("invalid dimension `{dim}`")))?;

        let mut rows = Vec::new();
        for (line, text) in lines {
            let coords = text
                .split_whitespace()
                .map(|t| t.parse::<Rational>().map_err(|e| at(line, e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            if coords.len() != dim {
                return Err(at(line, format!("expected {dim} coordinates, found {}", coords.len())));
            }
            rows.push(RationalPoint::new(coords));
        }
        Ok(Document { kind, dim, rows })
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.kind, self.dim)?;
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let text = "generators 2\n1 0\n1/2 -3\n";
        let doc = Document::parse(text).unwrap();
        assert_eq!(doc.kind, Kind::Generators);
        assert_eq!(doc.rows[1], RationalPoint::new(vec![Rational::new(1, 2), Rational::from(-3)]));
        assert_eq!(doc.to_string(), text);
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let doc = Document::parse("# hexagon\n\nvertices 1\n  3 # first\n\n-1\n").unwrap();
        assert_eq!(doc.rows.len(), 2);
    }

    #[test]
    fn reports_line_numbers() {
        let err = Document::parse("vertices 2\n1 2\n\n1 x\n").unwrap_err();
        assert_eq!(err, at(4, "invalid rational literal `x`"));
        let err = Document::parse("vertices 2\n1 2 3\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: expected 2 coordinates, found 3");
        assert!(matches!(Document::parse("points 2\n"), Err(ParseError::Line { line: 1, .. })));
        assert_eq!(Document::parse("# nothing\n"), Err(ParseError::MissingHeader));
    }
}
