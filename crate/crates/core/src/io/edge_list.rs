//! Plain-text edge lists.
//!
//! ```text
//! # optional comment lines
//! 3 5        <- header: order, arc count
//! 0 1        <- one arc per line, 0-based ids
//! ...
//! ```
//! Blank lines and lines starting with `#` are ignored anywhere.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

fn at(line: usize, source: Error) -> Error {
    Error::AtLine {
        line,
        source: Box::new(source),
    }
}

fn two_numbers(text: &str, line: usize, what: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize> {
        let tok = tok.ok_or_else(|| Error::Syntax {
            line,
            message: format!("expected {what}"),
        })?;
        tok.parse().map_err(|_| Error::Syntax {
            line,
            message: format!("`{tok}` is not a non-negative integer"),
        })
    };
    let a = parse(it.next())?;
    let b = parse(it.next())?;
    if let Some(extra) = it.next() {
        return Err(Error::Syntax {
            line,
            message: format!("unexpected token `{extra}` after {what}"),
        });
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Digraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Syntax {
        line: text.lines().count().max(1),
        message: "missing `n m` header".into(),
    })?;
    let (n, m) = two_numbers(header, header_line, "`n m` header")?;
    if n == 0 {
        return Err(at(header_line, Error::EmptyVertexSet));
    }

    let mut arcs = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (line, text) in lines {
        let (u, v) = two_numbers(text, line, "`u v` arc")?;
        for x in [u, v] {
            if x >= n {
                return Err(at(line, Error::VertexOutOfRange { vertex: x, n }));
            }
        }
        if u == v {
            return Err(at(line, Error::LoopArc { vertex: u }));
        }
        if !seen.insert((u, v)) {
            return Err(at(line, Error::DuplicateArc { tail: u, head: v }));
        }
        arcs.push((u, v));
    }
    if arcs.len() != m {
        return Err(Error::HeaderMismatch {
            declared: m,
            found: arcs.len(),
        });
    }
    Digraph::new(n, arcs)
}

/// Canonical text: header, then arcs sorted by `(tail, head)`.
pub fn serialize_edge_list(d: &Digraph) -> String {
    let mut out = String::with_capacity(8 * (d.arc_count() + 1));
    writeln!(out, "{} {}", d.order(), d.arc_count()).unwrap();
    for (u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
