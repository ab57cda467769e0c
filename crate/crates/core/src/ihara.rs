//! Inverse Ihara zeta functions of finite graphs.

use crate::loosegraph::LooseGraph;
use crate::polyring::{IntPolynomial, MatrixError, PolyMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IharaError {
    #[error("the Ihara zeta function is defined for graphs only; found loose or free edges")]
    LooseEdges,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is a tree (rank 0); its Ihara zeta function is trivial")]
    Tree,
    #[error("vertex {0:?} has degree 1")]
    DegreeOne(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Validated input: connected, no loose edges, rank at least 1 and minimum
/// degree at least 2.
#[derive(Debug, Clone)]
pub struct IharaInput<'a> {
    graph: &'a LooseGraph,
    names: Vec<&'a str>,
    rank: usize,
}

impl<'a> IharaInput<'a> {
    pub fn new(graph: &'a LooseGraph) -> Result<Self, IharaError> {
        if !graph.is_reduced() {
            return Err(IharaError::LooseEdges);
        }
        if !graph.is_connected() {
            return Err(IharaError::Disconnected);
        }
        let (v, e) = (graph.vertex_count(), graph.edge_count());
        if e + 1 == v {
            return Err(IharaError::Tree);
        }
        if let Some(leaf) = graph.vertices().find(|v| graph.degree(v) == 1) {
            return Err(IharaError::DegreeOne(leaf.to_string()));
        }
        Ok(Self {
            graph,
            names: graph.vertices().collect(),
            rank: e + 1 - v,
        })
    }

    pub fn graph(&self) -> &LooseGraph {
        self.graph
    }

    /// `|E| - |V| + 1`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    fn index(&self, v: &str) -> usize {
        self.names.binary_search(&v).expect("vertex of the graph")
    }
}

/// Bass–Hashimoto: `(1 - u^2)^(r-1) det(I - A u + Q u^2)` with `Q = D - I`.
pub fn ihara_inverse(g: &LooseGraph) -> Result<IntPolynomial, IharaError> {
    let input = IharaInput::new(g)?;
    let n = input.names.len();
    let mut m = PolyMatrix::zeros(n);
    for (i, v) in input.names.iter().enumerate() {
        let q = g.degree(v) as i64 - 1;
        m.set(i, i, IntPolynomial::from_i64s(&[1, 0, q]));
        for w in g.neighbors(v) {
            m.set(i, input.index(w), IntPolynomial::from_i64s(&[0, -1]));
        }
    }
    let factor = IntPolynomial::from_i64s(&[1, 0, -1]).pow((input.rank - 1) as u32);
    Ok(factor * m.det()?)
}

/// `det(I - u W)` with `W` the oriented-edge adjacency matrix: edge `i` and
/// edge `i + |E|` are the two orientations of one undirected edge, and
/// `W[i][j] = 1` when `i` ends where `j` starts and `j` is not `i` reversed.
pub fn edge_matrix_inverse(g: &LooseGraph) -> Result<IntPolynomial, IharaError> {
    let input = IharaInput::new(g)?;
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|e| (input.index(e.a()), input.index(e.b())))
        .collect();
    let m = edges.len();
    let oriented: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .chain(edges.iter().map(|&(a, b)| (b, a)))
        .collect();
    let reverse = |i: usize| if i < m { i + m } else { i - m };
    let mut w = PolyMatrix::identity(2 * m);
    for (i, &(_, head)) in oriented.iter().enumerate() {
        for (j, &(tail, _)) in oriented.iter().enumerate() {
            if head == tail && j != reverse(i) {
                w.set(i, j, IntPolynomial::from_i64s(&[0, -1]));
            }
        }
    }
    Ok(w.det()?)
}
