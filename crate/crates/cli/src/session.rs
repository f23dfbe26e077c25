//! Session files: one ring, named ideals and named graphs, one statement per line.
//!
//! ```text
//! # comment
//! ring x,y,z weights 1,1,2
//! ideal I = x*z, y*z
//! graph G = "c5.graph"
//! graph H = cycle 5
//! ```

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use golod_core::monomial::Graph;
use golod_core::{Error as CoreError, GradingSpec, Ideal, Polynomial, Ring};

use crate::graph_file::read_graph;

#[derive(Debug, thiserror::Error)]
pub enum SessionError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> SessionError {
    SessionError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Clone, Debug, Default)]
pub struct Session {
    pub ring: Option<Ring>,
    pub ideals: BTreeMap<String, Ideal>,
    pub graphs: BTreeMap<String, Graph>,
}

impl Session {
    pub fn ring(&self) -> Option<&Ring> {
        self.ring.as_ref()
    }
}

pub fn read_session(path: &Path) -> Result<Session, SessionError> {
    let text = std::fs::read_to_string(path).map_err(|source| SessionError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_session(&text, path.parent())
}

/// Graph paths are resolved against `base_dir` when relative.
pub fn parse_session(text: &str, base_dir: Option<&Path>) -> Result<Session, SessionError> {
    let mut session = Session::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw);
        let trimmed = body.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = body.len() - trimmed.len();
        let (keyword, rest) = split_word(trimmed);
        let rest_col = indent + (trimmed.len() - rest.len()) + 1;
        match keyword {
            "ring" => {
                if session.ring.is_some() {
                    return Err(syntax(line, indent + 1, "only one ring per session"));
                }
                session.ring = Some(parse_ring(rest, line, rest_col)?);
            }
            "ideal" => {
                let ring = session
                    .ring
                    .clone()
                    .ok_or_else(|| syntax(line, indent + 1, "ideal declared before the ring"))?;
                let (name, body, body_col) = parse_binding(rest, line, rest_col)?;
                if session.ideals.contains_key(name) || session.graphs.contains_key(name) {
                    return Err(syntax(line, rest_col, format!("duplicate name `{name}`")));
                }
                let ideal = parse_ideal(&ring, body, line, body_col)?;
                session.ideals.insert(name.to_string(), ideal);
            }
            "graph" => {
                let (name, body, body_col) = parse_binding(rest, line, rest_col)?;
                if session.ideals.contains_key(name) || session.graphs.contains_key(name) {
                    return Err(syntax(line, rest_col, format!("duplicate name `{name}`")));
                }
                let graph = parse_graph_source(body, base_dir, line, body_col)?;
                session.graphs.insert(name.to_string(), graph);
            }
            other => {
                return Err(syntax(
                    line,
                    indent + 1,
                    format!("unknown statement `{other}`"),
                ))
            }
        }
    }
    Ok(session)
}

fn strip_comment(line: &str) -> &str {
    let mut quoted = false;
    for (i, c) in line.char_indices() {
        match c {
            '"' => quoted = !quoted,
            '#' if !quoted => return &line[..i],
            _ => {}
        }
    }
    line
}

fn split_word(s: &str) -> (&str, &str) {
    match s.find(char::is_whitespace) {
        Some(i) => (&s[..i], s[i..].trim_start()),
        None => (s, ""),
    }
}

fn parse_ring(rest: &str, line: usize, col: usize) -> Result<Ring, SessionError> {
    let (vars, weights) = match rest.find(" weights ") {
        Some(i) => (&rest[..i], Some((&rest[i + 9..], col + i + 9))),
        None => (rest, None),
    };
    let names: Vec<String> = vars.split(',').map(|v| v.trim().to_string()).collect();
    let weights = match weights {
        None => vec![1; names.len()],
        Some((w, wcol)) => w
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| syntax(line, wcol, format!("invalid weight `{}`", x.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?,
    };
    GradingSpec::from_parts(names, weights).map_err(|e| syntax(line, col, e.to_string()))
}

/// `NAME = body`, returning the body and its column.
fn parse_binding(rest: &str, line: usize, col: usize) -> Result<(&str, &str, usize), SessionError> {
    let eq = rest
        .find('=')
        .ok_or_else(|| syntax(line, col, "expected `NAME = ...`"))?;
    let name = rest[..eq].trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(syntax(line, col, format!("invalid name `{name}`")));
    }
    let after = &rest[eq + 1..];
    let body = after.trim_start();
    Ok((
        name,
        body.trim_end(),
        col + eq + 1 + (after.len() - body.len()),
    ))
}

fn parse_ideal(ring: &Ring, body: &str, line: usize, col: usize) -> Result<Ideal, SessionError> {
    let mut gens = Vec::new();
    let mut offset = 0;
    for piece in body.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let start = col + offset + lead;
        let text = piece.trim();
        if text.is_empty() {
            return Err(syntax(line, start, "empty generator"));
        }
        let p = Polynomial::parse(ring, text).map_err(|e| match e {
            CoreError::Parse { pos, msg } => syntax(line, start + pos, msg),
            other => syntax(line, start, other.to_string()),
        })?;
        if let Err(e) = p.homogeneous_degree() {
            return Err(syntax(line, start, e.to_string()));
        }
        gens.push(p);
        offset += piece.len() + 1;
    }
    Ideal::new(ring, gens).map_err(|e| syntax(line, col, e.to_string()))
}

fn parse_graph_source(
    body: &str,
    base_dir: Option<&Path>,
    line: usize,
    col: usize,
) -> Result<Graph, SessionError> {
    if let Some(path) = body.strip_prefix('"') {
        let path = path
            .strip_suffix('"')
            .ok_or_else(|| syntax(line, col, "unterminated path"))?;
        let mut full = PathBuf::from(path);
        if full.is_relative() {
            if let Some(dir) = base_dir {
                full = dir.join(full);
            }
        }
        return read_graph(&full).map_err(|e| syntax(line, col, e.to_string()));
    }
    let (kind, n) = split_word(body);
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| syntax(line, col, format!("expected a vertex count after `{kind}`")))?;
    let g = match kind {
        "cycle" => Graph::cycle(n),
        "path" => Graph::path(n),
        "complete" => Graph::complete(n),
        _ => {
            return Err(syntax(
                line,
                col,
                format!("expected a quoted path or cycle/path/complete, got `{kind}`"),
            ))
        }
    };
    g.map_err(|e| syntax(line, col, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_ideal() {
        let s = parse_session("ring x,y weights 1,1\nideal I = x^2, x*y, y^2\n", None).unwrap();
        assert_eq!(s.ideals.len(), 1);
        assert_eq!(s.ideals["I"].generators().len(), 3);
    }

    #[test]
    fn comments_and_defaults() {
        let s = parse_session(
            "# header\nring x,y,z   # unit weights\n\nideal J = x*z, y*z\ngraph G = cycle 5\n",
            None,
        )
        .unwrap();
        assert_eq!(s.ring().unwrap().weights(), &[1, 1, 1]);
        assert_eq!(s.graphs["G"].vertex_count(), 5);
    }

    #[test]
    fn homogeneity_error_names_the_term() {
        let err = parse_session("ring x,y weights 1,1\nideal I = x^2, x + y^2\n", None)
            .unwrap_err()
            .to_string();
        assert!(err.starts_with("line 2, column 16"), "{err}");
        assert!(err.contains("term `x`"), "{err}");
    }

    #[test]
    fn weighted_homogeneity() {
        let s = parse_session("ring x,y weights 1,2\nideal I = x^2 + y\n", None).unwrap();
        assert!(s.ideals["I"].is_homogeneous());
    }

    #[test]
    fn zero_weight_is_rejected() {
        let err = parse_session("ring x,y weights 1,0\n", None)
            .unwrap_err()
            .to_string();
        assert!(err.contains("positive"), "{err}");
    }

    #[test]
    fn unknown_variable_has_a_position() {
        let err = parse_session("ring x,y\nideal I = x*w\n", None)
            .unwrap_err()
            .to_string();
        assert!(err.starts_with("line 2, column"), "{err}");
        assert!(err.contains('w'), "{err}");
    }

    #[test]
    fn duplicate_names() {
        let err = parse_session("ring x,y\nideal I = x\nideal I = y\n", None)
            .unwrap_err()
            .to_string();
        assert!(err.contains("duplicate name `I`"), "{err}");
        let err = parse_session("ring x,y\nring a,b\n", None)
            .unwrap_err()
            .to_string();
        assert!(err.contains("one ring"), "{err}");
    }

    #[test]
    fn ideal_before_ring() {
        assert!(parse_session("ideal I = x\n", None).is_err());
    }
}
