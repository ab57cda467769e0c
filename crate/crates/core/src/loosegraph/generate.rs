use std::fmt;

use super::{GraphError, LooseGraph};

/// Built-in loose graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    /// Centre of degree `n` with `k` real endpoints and `n - k` loose edges.
    Star(usize, usize),
    /// Path on `n` vertices.
    Path(usize),
    Cycle(usize),
    /// One vertex with `n` loose edges.
    Affine(usize),
    /// Complete graph on `n + 1` vertices.
    Projective(usize),
    /// Johnson graph on the `k`-subsets of an `n`-set.
    Johnson(usize, usize),
    /// The cube graph.
    Hexahedron,
}

impl Family {
    /// Parses a family name and its integer parameters.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Self, GraphError> {
        let arity = |want: usize| -> Result<(), GraphError> {
            if params.len() == want {
                Ok(())
            } else {
                Err(invalid(name, format!("expected {want} parameter(s), got {}", params.len())))
            }
        };
        let fam = match name {
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "star" => {
                arity(2)?;
                Family::Star(params[0], params[1])
            }
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(params[0])
            }
            "affine" => {
                arity(1)?;
                Family::Affine(params[0])
            }
            "projective" => {
                arity(1)?;
                Family::Projective(params[0])
            }
            "johnson" => {
                arity(2)?;
                Family::Johnson(params[0], params[1])
            }
            "hexahedron" | "cube" => {
                arity(0)?;
                Family::Hexahedron
            }
            other => return Err(GraphError::UnknownFamily(other.to_string())),
        };
        Ok(fam)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete {n}"),
            Family::Star(n, k) => write!(f, "star {n} {k}"),
            Family::Path(n) => write!(f, "path {n}"),
            Family::Cycle(n) => write!(f, "cycle {n}"),
            Family::Affine(n) => write!(f, "affine {n}"),
            Family::Projective(n) => write!(f, "projective {n}"),
            Family::Johnson(n, k) => write!(f, "johnson {n} {k}"),
            Family::Hexahedron => write!(f, "hexahedron"),
        }
    }
}

fn invalid(family: &str, reason: String) -> GraphError {
    GraphError::InvalidParameters {
        family: family.to_string(),
        reason,
    }
}

/// Labels `v0..v{n-1}`, zero-padded so label order is numeric order.
fn labels(n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("v{i:0width$}")).collect()
}

fn with_vertices(names: &[String]) -> LooseGraph {
    let mut g = LooseGraph::new();
    for v in names {
        g.add_vertex(v.clone());
    }
    g
}

fn complete(n: usize) -> LooseGraph {
    let vs = labels(n);
    let mut g = with_vertices(&vs);
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(&vs[i], &vs[j]).expect("fresh edge");
        }
    }
    g
}

pub fn generate(family: Family) -> Result<LooseGraph, GraphError> {
    let g = match family {
        Family::Complete(n) => {
            if n == 0 {
                return Err(invalid("complete", "n must be at least 1".into()));
            }
            complete(n)
        }
        Family::Projective(n) => complete(n + 1),
        Family::Star(n, k) => {
            if n == 0 {
                return Err(invalid("star", "n must be at least 1".into()));
            }
            if k > n {
                return Err(invalid("star", format!("k = {k} exceeds n = {n}")));
            }
            let vs = labels(k + 1);
            let mut g = with_vertices(&vs);
            for v in &vs[1..] {
                g.add_edge(&vs[0], v).expect("fresh edge");
            }
            g.add_loose(&vs[0], n - k).expect("centre exists");
            g
        }
        Family::Path(n) => {
            if n == 0 {
                return Err(invalid("path", "n must be at least 1".into()));
            }
            let vs = labels(n);
            let mut g = with_vertices(&vs);
            for w in vs.windows(2) {
                g.add_edge(&w[0], &w[1]).expect("fresh edge");
            }
            g
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(invalid("cycle", "n must be at least 3".into()));
            }
            let vs = labels(n);
            let mut g = with_vertices(&vs);
            for i in 0..n {
                g.add_edge(&vs[i], &vs[(i + 1) % n]).expect("fresh edge");
            }
            g
        }
        Family::Affine(n) => {
            let mut g = LooseGraph::new();
            g.add_vertex("v0");
            g.add_loose("v0", n).expect("vertex exists");
            g
        }
        Family::Johnson(n, k) => {
            if k == 0 || k >= n {
                return Err(invalid("johnson", format!("need 0 < k < n, got n = {n}, k = {k}")));
            }
            let subsets = k_subsets(n, k);
            let name = |s: &[usize]| {
                let parts: Vec<String> = s.iter().map(ToString::to_string).collect();
                format!("s{}", parts.join("_"))
            };
            let names: Vec<String> = subsets.iter().map(|s| name(s)).collect();
            let mut g = with_vertices(&names);
            for i in 0..subsets.len() {
                for j in i + 1..subsets.len() {
                    let common = subsets[i].iter().filter(|x| subsets[j].contains(x)).count();
                    if common + 1 == k {
                        g.add_edge(&names[i], &names[j]).expect("fresh edge");
                    }
                }
            }
            g
        }
        Family::Hexahedron => {
            let names: Vec<String> = (0..8u8).map(|i| format!("v{i:03b}")).collect();
            let mut g = with_vertices(&names);
            for i in 0..8usize {
                for bit in [1usize, 2, 4] {
                    let j = i ^ bit;
                    if i < j {
                        g.add_edge(&names[i], &names[j]).expect("fresh edge");
                    }
                }
            }
            g
        }
    };
    Ok(g)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
