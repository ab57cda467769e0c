use super::{GraphError, LooseGraph};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Reject `edge`/`loose` lines naming a vertex without a prior `vertex` line.
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. } | ParseError::Graph { line, .. } => *line,
        }
    }
}

/// Parses `.lg` text with auto-declaration of vertices.
pub fn parse(text: &str) -> Result<LooseGraph, ParseError> {
    parse_with(text, ParseOptions::default())
}

pub fn parse_with(text: &str, opts: ParseOptions) -> Result<LooseGraph, ParseError> {
    let mut g = LooseGraph::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        let syntax = |message: String| ParseError::Syntax { line, message };
        for name in &words[1..] {
            if !valid_name(name) {
                return Err(syntax(format!("invalid vertex name {name:?}")));
            }
        }
        let graph = |source| ParseError::Graph { line, source };
        let declare = |g: &mut LooseGraph, v: &str| -> Result<(), ParseError> {
            if g.has_vertex(v) {
                Ok(())
            } else if opts.strict {
                Err(graph(GraphError::UnknownVertex(v.to_string())))
            } else {
                g.add_vertex(v);
                Ok(())
            }
        };
        match words.as_slice() {
            ["vertex", v] => {
                g.add_vertex(*v);
            }
            ["edge", a, b] => {
                if a == b {
                    return Err(graph(GraphError::Loop(a.to_string())));
                }
                declare(&mut g, a)?;
                declare(&mut g, b)?;
                g.add_edge(a, b).map_err(graph)?;
            }
            ["loose", v] => {
                declare(&mut g, v)?;
                g.add_loose(v, 1).map_err(graph)?;
            }
            ["free"] => g.add_free(1),
            [kw @ ("vertex" | "edge" | "loose" | "free"), ..] => {
                return Err(syntax(format!("wrong number of arguments for {kw:?}")));
            }
            [kw, ..] => return Err(syntax(format!("unknown directive {kw:?}"))),
            [] => unreachable!("blank lines skipped"),
        }
    }
    Ok(g)
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}
