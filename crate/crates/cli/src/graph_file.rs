//! Graph files: `n <count>` on the first line, then one 1-based edge `i j` per line.
//! `#` starts a comment.

use std::path::Path;

use golod_core::monomial::Graph;

#[derive(Debug, thiserror::Error)]
pub enum GraphFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn syntax(line: usize, message: impl Into<String>) -> GraphFileError {
    GraphFileError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, GraphFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| GraphFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&text)
}

pub fn parse_graph(text: &str) -> Result<Graph, GraphFileError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let Some(count) = n else {
            match fields.as_slice() {
                ["n", c] => {
                    n = Some(
                        c.parse()
                            .map_err(|_| syntax(line, format!("invalid vertex count `{c}`")))?,
                    );
                    continue;
                }
                _ => return Err(syntax(line, "expected `n <count>` first")),
            }
        };
        let [a, b] = fields.as_slice() else {
            return Err(syntax(line, "expected an edge `i j`"));
        };
        let vertex = |s: &str| -> Result<usize, GraphFileError> {
            let v: usize = s
                .parse()
                .map_err(|_| syntax(line, format!("invalid vertex `{s}`")))?;
            if v == 0 || v > count {
                return Err(syntax(line, format!("vertex {v} outside 1..={count}")));
            }
            Ok(v - 1)
        };
        edges.push((vertex(a)?, vertex(b)?));
    }
    let n = n.ok_or_else(|| syntax(1, "missing `n <count>` header"))?;
    Graph::new(n, &edges).map_err(|e| syntax(0, e.to_string()))
}

/// The inverse of [`parse_graph`].
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (a, b) in g.edges() {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}
