//! Line-oriented text format for graphs.
//!
//! ```text
//! # comment
//! g <n> <m-declared>
//! v <id> [label]
//! arc <from> <to> <weight>
//! edge <u> <v> <weight>
//! ```
//!
//! `m-declared` counts `arc`/`edge` lines. An `edge` line becomes two roads,
//! `u -> v` then `v -> u`. Road keys follow the expanded order.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{GraphError, ParseError, ParseErrorKind};
use crate::graph::{Graph, GraphBuilder};

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut builder: Option<GraphBuilder> = None;
    let mut seen: Vec<bool> = Vec::new();
    let mut road_lines = 0usize;
    let mut last_line = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        let err = |kind| ParseError { line, kind };

        match (tag, builder.as_mut()) {
            ("g", None) => {
                let n: usize = number(tokens.next(), "vertex count").map_err(err)?;
                let m: usize = number(tokens.next(), "road count").map_err(err)?;
                no_trailing(tokens.next()).map_err(err)?;
                header = Some((n, m));
                builder = Some(GraphBuilder::new(n));
                seen = vec![false; n];
            }
            ("g", Some(_)) => {
                return Err(err(ParseErrorKind::Syntax("repeated header".into())));
            }
            (_, None) => return Err(err(ParseErrorKind::MissingHeader)),
            ("v", Some(b)) => {
                let id: usize = number(tokens.next(), "vertex id").map_err(err)?;
                if id >= seen.len() {
                    return Err(err(ParseErrorKind::VertexOutOfRange(id)));
                }
                if seen[id] {
                    return Err(err(ParseErrorKind::DuplicateVertex(id)));
                }
                seen[id] = true;
                let label: Vec<&str> = tokens.collect();
                if !label.is_empty() {
                    b.label(id, label.join(" "))
                        .map_err(|_| err(ParseErrorKind::VertexOutOfRange(id)))?;
                }
            }
            ("arc" | "edge", Some(b)) => {
                let from: usize = number(tokens.next(), "road endpoint").map_err(err)?;
                let to: usize = number(tokens.next(), "road endpoint").map_err(err)?;
                let weight: f64 = number(tokens.next(), "weight").map_err(err)?;
                no_trailing(tokens.next()).map_err(err)?;
                let added = if tag == "arc" {
                    b.arc(from, to, weight).map(|_| ())
                } else {
                    b.edge(from, to, weight).map(|_| ())
                };
                added.map_err(|e| {
                    err(match e {
                        GraphError::SelfLoop(_) => ParseErrorKind::SelfLoop,
                        GraphError::NonFiniteWeight(_) => ParseErrorKind::NonFiniteWeight,
                        _ => ParseErrorKind::EndpointOutOfRange,
                    })
                })?;
                road_lines += 1;
            }
            (other, Some(_)) => {
                return Err(err(ParseErrorKind::Syntax(format!("unknown line tag `{other}`"))));
            }
        }
    }

    let Some((n, declared)) = header else {
        return Err(ParseError {
            line: last_line.max(1),
            kind: ParseErrorKind::MissingHeader,
        });
    };
    let found = seen.iter().filter(|&&s| s).count();
    if found != n {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::VertexCount { expected: n, found },
        });
    }
    if road_lines != declared {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::RoadCount {
                declared,
                found: road_lines,
            },
        });
    }
    Ok(builder.expect("header seen").build())
}

fn number<T: FromStr>(token: Option<&str>, what: &str) -> Result<T, ParseErrorKind> {
    let token = token.ok_or_else(|| ParseErrorKind::Syntax(format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| ParseErrorKind::Syntax(format!("bad {what} `{token}`")))
}

fn no_trailing(token: Option<&str>) -> Result<(), ParseErrorKind> {
    match token {
        None => Ok(()),
        Some(t) => Err(ParseErrorKind::Syntax(format!("unexpected token `{t}`"))),
    }
}

/// Writes `g` in the text format, one `arc` line per road in key order.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "g {} {}", g.n(), g.m()).unwrap();
    for v in g.vertices() {
        match &v.label {
            Some(label) => writeln!(out, "v {} {}", v.id, label).unwrap(),
            None => writeln!(out, "v {}", v.id).unwrap(),
        }
    }
    for r in g.roads() {
        writeln!(out, "arc {} {} {}", r.from, r.to, r.weight).unwrap();
    }
    out
}
