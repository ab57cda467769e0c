use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use super::{Edge, GraphError, LooseGraph};
use crate::polyring::IntPolynomial;

/// Strips loose and free edges. The correction satisfies
/// `class(g) = class(reduced) + correction`.
pub fn reduce(g: &LooseGraph) -> (LooseGraph, IntPolynomial) {
    let red = g.reduced();
    let mut corr = IntPolynomial::monomial(g.free_count() as i64, 1)
        - IntPolynomial::constant(g.free_count() as i64);
    for (v, _) in g.loose_edges() {
        corr += IntPolynomial::x_pow(g.degree(v)) - IntPolynomial::x_pow(red.degree(v));
    }
    (red, corr)
}

/// Replaces the edge by one loose edge at each former endpoint.
pub fn resolve(g: &LooseGraph, e: &Edge) -> Result<LooseGraph, GraphError> {
    let mut out = g.clone();
    out.remove_edge(e.a(), e.b())?;
    out.add_loose(e.a(), 1)?;
    out.add_loose(e.b(), 1)?;
    Ok(out)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum TreeChoice {
    /// Breadth-first from the smallest label, neighbours in label order.
    #[default]
    Bfs,
    /// A random spanning tree drawn from the given seed.
    Shuffled(u64),
}

/// Deterministic spanning tree; see [`spanning_tree_with`].
pub fn spanning_tree(g: &LooseGraph) -> Result<(LooseGraph, Vec<Edge>), GraphError> {
    spanning_tree_with(g, TreeChoice::Bfs)
}

/// Spanning tree keeping every loose edge, plus the fundamental (non-tree)
/// edges in label order.
pub fn spanning_tree_with(
    g: &LooseGraph,
    choice: TreeChoice,
) -> Result<(LooseGraph, Vec<Edge>), GraphError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::Empty);
    }
    if !g.is_connected() || g.free_count() > 0 {
        return Err(GraphError::Disconnected);
    }
    let tree_edges = match choice {
        TreeChoice::Bfs => bfs_tree(g),
        TreeChoice::Shuffled(seed) => random_tree(g, seed),
    };
    let fundamental: Vec<Edge> = g.edges().filter(|e| !tree_edges.contains(e)).collect();
    let mut tree = g.clone();
    for e in &fundamental {
        tree.remove_edge(e.a(), e.b())?;
    }
    Ok((tree, fundamental))
}

fn bfs_tree(g: &LooseGraph) -> BTreeSet<Edge> {
    let root = g.vertices().next().expect("non-empty").to_string();
    let mut seen = BTreeSet::from([root.clone()]);
    let mut queue = VecDeque::from([root]);
    let mut tree = BTreeSet::new();
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(&v) {
            if seen.insert(w.clone()) {
                tree.insert(Edge::new(v.clone(), w.clone()).expect("no loops"));
                queue.push_back(w.clone());
            }
        }
    }
    tree
}

/// Kruskal over a shuffled edge list.
fn random_tree(g: &LooseGraph, seed: u64) -> BTreeSet<Edge> {
    let mut edges: Vec<Edge> = g.edges().collect();
    edges.shuffle(&mut StdRng::seed_from_u64(seed));
    let mut parent: BTreeMap<String, String> =
        g.vertices().map(|v| (v.to_string(), v.to_string())).collect();
    fn find(parent: &mut BTreeMap<String, String>, v: &str) -> String {
        let p = parent[v].clone();
        if p == v {
            return p;
        }
        let root = find(parent, &p);
        parent.insert(v.to_string(), root.clone());
        root
    }
    let mut tree = BTreeSet::new();
    for e in edges {
        let (ra, rb) = (find(&mut parent, e.a()), find(&mut parent, e.b()));
        if ra != rb {
            parent.insert(ra, rb);
            tree.insert(e);
        }
    }
    tree
}

/// Joins every vertex of `base` to every vertex of `apex`. Loose edges of
/// both parts are kept; free edges are added up.
pub fn cone(base: &LooseGraph, apex: &LooseGraph) -> Result<LooseGraph, GraphError> {
    let mut g = base.disjoint_union(apex)?;
    for b in base.vertices() {
        for a in apex.vertices() {
            g.add_edge(b, a)?;
        }
    }
    Ok(g)
}

/// Cone over `h` with a complete graph on the new vertices `apex`.
pub fn cone_over(h: &LooseGraph, apex: &[&str]) -> Result<LooseGraph, GraphError> {
    let mut top = LooseGraph::new();
    for &z in apex {
        if !top.add_vertex(z) {
            return Err(GraphError::OverlappingLabels(z.to_string()));
        }
    }
    for (i, a) in apex.iter().enumerate() {
        for b in &apex[i + 1..] {
            top.add_edge(a, b)?;
        }
    }
    cone(h, &top)
}
