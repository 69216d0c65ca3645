//! The line-oriented polytope spec format.
//!
//! ```text
//! dim 2
//! sqrt 5
//! facet 1 0 | 0
//! facet 0 1 | 0
//! facet -1 -1/2-1/2s | -1
//! qgen 1/2 0
//! ```
//!
//! `#` starts a comment and blank lines are ignored. Facet order fixes the
//! indices `1..d`; `qgen` lines may only follow the facets.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactnum::{FieldSpec, NumError, Scalar};

use super::{Halfspace, PolytopeSpec};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: s + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: s + 1,
        });
    }
    out
}

fn scalar(tok: &Token<'_>, line: usize, field: FieldSpec) -> Result<Scalar> {
    Scalar::parse(tok.text, field).map_err(|e| match e {
        NumError::Syntax { pos, msg } => Error::parse(line, tok.column + pos, msg),
        NumError::SqrtInRationalField { pos } => Error::parse(
            line,
            tok.column + pos,
            "sqrt term used without a 'sqrt <d>' declaration",
        ),
        other => Error::parse(line, tok.column, other.to_string()),
    })
}

fn vector(
    toks: &[Token<'_>],
    n: usize,
    line: usize,
    field: FieldSpec,
    what: &str,
) -> Result<Vec<Scalar>> {
    if toks.len() != n {
        let column = toks.first().map_or(1, |t| t.column);
        return Err(Error::parse(
            line,
            column,
            format!("{what} needs {n} entries, found {}", toks.len()),
        ));
    }
    toks.iter().map(|t| scalar(t, line, field)).collect()
}

pub fn parse_spec(text: &str) -> Result<PolytopeSpec> {
    let mut n: Option<usize> = None;
    let mut field = FieldSpec::RATIONAL;
    let mut facets = Vec::new();
    let mut extra = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(head) = toks.first() else {
            continue;
        };
        match (head.text, n) {
            ("dim", None) => {
                let [_, value] = toks.as_slice() else {
                    return Err(Error::parse(line_no, head.column, "expected 'dim <n>'"));
                };
                let dim: usize = value.text.parse().ok().filter(|&d| d >= 1).ok_or_else(|| {
                    Error::parse(
                        line_no,
                        value.column,
                        "dimension must be a positive integer",
                    )
                })?;
                n = Some(dim);
            }
            (_, None) => {
                return Err(Error::parse(
                    line_no,
                    head.column,
                    "first line must be 'dim <n>'",
                ));
            }
            ("sqrt", Some(_)) if facets.is_empty() && field.is_rational() => {
                let [_, value] = toks.as_slice() else {
                    return Err(Error::parse(line_no, head.column, "expected 'sqrt <d>'"));
                };
                let d: u64 = value.text.parse().map_err(|_| {
                    Error::parse(line_no, value.column, "radicand must be an integer")
                })?;
                field = FieldSpec::sqrt(d)
                    .map_err(|e| Error::parse(line_no, value.column, e.to_string()))?;
            }
            ("facet", Some(dim)) if extra.is_empty() => {
                let bar = toks.iter().position(|t| t.text == "|").ok_or_else(|| {
                    Error::parse(
                        line_no,
                        head.column,
                        "facet line needs '|' before the offset",
                    )
                })?;
                let normal = vector(&toks[1..bar], dim, line_no, field, "facet normal")?;
                let offset = vector(&toks[bar + 1..], 1, line_no, field, "facet offset")?;
                facets.push(Halfspace {
                    normal,
                    offset: offset.into_iter().next().expect("one offset"),
                });
            }
            ("qgen", Some(dim)) if !facets.is_empty() => {
                extra.push(vector(&toks[1..], dim, line_no, field, "qgen")?);
            }
            (other, Some(_)) => {
                let msg = match other {
                    "dim" => "duplicate 'dim' line".to_string(),
                    "sqrt" => "'sqrt' must directly follow 'dim' and appear once".to_string(),
                    "facet" => "facets must precede qgen lines".to_string(),
                    "qgen" => "qgen lines must follow the facets".to_string(),
                    _ => format!("unknown keyword {other:?}"),
                };
                return Err(Error::parse(line_no, head.column, msg));
            }
        }
    }

    let n = n.ok_or_else(|| Error::parse(1, 1, "missing 'dim <n>' line"))?;
    Ok(PolytopeSpec {
        n,
        field,
        facets,
        extra_generators: extra,
        name: None,
    })
}

pub fn format_spec(spec: &PolytopeSpec) -> String {
    let mut out = String::new();
    if let Some(name) = &spec.name {
        writeln!(out, "# {name}").unwrap();
    }
    writeln!(out, "dim {}", spec.n).unwrap();
    if let Some(d) = spec.field.radicand() {
        writeln!(out, "sqrt {d}").unwrap();
    }
    for h in &spec.facets {
        out.push_str("facet");
        for x in &h.normal {
            write!(out, " {x}").unwrap();
        }
        writeln!(out, " | {}", h.offset).unwrap();
    }
    for g in &spec.extra_generators {
        out.push_str("qgen");
        for x in g {
            write!(out, " {x}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOLDEN: &str = "\
# golden triangle
dim 2
sqrt 5

facet 1 0 | 0      # x >= 0
facet 0 1 | 0
facet -1 -1/2-1/2s | -1
qgen 1/2 0
";

    #[test]
    fn parses_and_formats() {
        let spec = parse_spec(GOLDEN).unwrap();
        assert_eq!(spec.n, 2);
        assert_eq!(spec.field.radicand(), Some(5));
        assert_eq!(spec.facets.len(), 3);
        assert_eq!(spec.facets[2].normal[1].to_string(), "-1/2-1/2s");
        assert_eq!(spec.extra_generators.len(), 1);
        let text = format_spec(&spec);
        assert_eq!(parse_spec(&text).unwrap(), spec);
    }

    fn err(text: &str) -> (usize, usize, String) {
        match parse_spec(text).unwrap_err() {
            Error::Parse { line, column, msg } => (line, column, msg),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn reports_positions() {
        assert_eq!(err("facet 1 | 0").0, 1);
        let (line, column, _) = err("dim 2\nfacet 1 2/0 | 0\n");
        assert_eq!((line, column), (2, 11));
        let (line, column, msg) = err("dim 2\nfacet 1 1+1s | 0\n");
        assert_eq!((line, column), (2, 10));
        assert!(msg.contains("sqrt"));
        assert_eq!(err("dim 2\nfacet 1 0 0 | 0").1, 7);
        assert_eq!(err("dim 2\nfacet 1 0 0").0, 2);
        assert_eq!(err("dim 2\nsqrt 4\n").1, 6);
        assert!(err("dim 2\nfacet 1 0 | 0\nsqrt 5\n").2.contains("sqrt"));
        assert!(err("dim 2\nqgen 1 0\n").2.contains("qgen"));
        assert!(err("dim 2\nfacet 1 0 | 0\nqgen 1 0\nfacet 0 1 | 0\n")
            .2
            .contains("precede"));
        assert!(err("dim 0\n").2.contains("positive"));
        assert!(err("# only a comment\n").2.contains("dim"));
        assert!(err("dim 2\nvertex 1 1\n").2.contains("unknown"));
    }
}
