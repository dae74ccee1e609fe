//! Edge-list text format: first line `n m`, then `m` lines `i j` with
//! 1-based endpoints; `#` starts a comment.

use super::{Graph, GraphError};

pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut fields = content.split_whitespace();
        let parse_num = |tok: Option<&str>, what: &str| -> Result<usize, GraphError> {
            let tok = tok.ok_or_else(|| GraphError::Parse {
                line,
                msg: format!("missing {what}"),
            })?;
            tok.parse().map_err(|_| GraphError::Parse {
                line,
                msg: format!("invalid {what}: {tok:?}"),
            })
        };
        match header {
            None => {
                let n = parse_num(fields.next(), "vertex count")?;
                let m = parse_num(fields.next(), "edge count")?;
                if fields.next().is_some() {
                    return Err(GraphError::Parse {
                        line,
                        msg: "header must be exactly \"n m\"".into(),
                    });
                }
                if n == 0 {
                    return Err(GraphError::Parse {
                        line,
                        msg: "order must be at least 1".into(),
                    });
                }
                header = Some((n, m));
            }
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(GraphError::Parse {
                        line,
                        msg: format!("more than the declared {m} edges"),
                    });
                }
                let i = parse_num(fields.next(), "endpoint")?;
                let j = parse_num(fields.next(), "endpoint")?;
                if fields.next().is_some() {
                    return Err(GraphError::Parse {
                        line,
                        msg: "edge line must be exactly \"i j\"".into(),
                    });
                }
                for v in [i, j] {
                    if v < 1 || v > n {
                        return Err(GraphError::Parse {
                            line,
                            msg: format!("endpoint {v} out of range 1..={n}"),
                        });
                    }
                }
                if i == j {
                    return Err(GraphError::Parse {
                        line,
                        msg: format!("self-loop at vertex {i}"),
                    });
                }
                let e = (i.min(j) - 1, i.max(j) - 1);
                if edges.contains(&e) {
                    return Err(GraphError::Parse {
                        line,
                        msg: format!("duplicate edge {} {}", e.0 + 1, e.1 + 1),
                    });
                }
                edges.push(e);
            }
        }
    }

    let (n, m) = header.ok_or(GraphError::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: text.lines().count(),
            msg: format!("declared {m} edges but found {}", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

/// Canonical emission: edges sorted lexicographically by (min, max), 1-based.
pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(i, j) in g.edges() {
        out.push_str(&format!("{} {}\n", i + 1, j + 1));
    }
    out
}
