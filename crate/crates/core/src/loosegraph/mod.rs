//! Loose graphs: graphs whose edges may have two, one or zero endpoints.

mod generate;
mod neighborhood;
mod ops;
mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use generate::{generate, Family};
pub use neighborhood::{neighborhood, EmbeddedGraph, NeighborhoodData};
pub use ops::{cone, cone_over, reduce, resolve, spanning_tree, spanning_tree_with, TreeChoice};
pub use parse::{parse, parse_with, ParseError, ParseOptions};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("loop at vertex {0:?}")]
    Loop(String),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("{0} {1} is not an edge with two endpoints")]
    NotAnEdge(String, String),
    #[error("vertex labels overlap: {0:?}")]
    OverlappingLabels(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is empty")]
    Empty,
    #[error("graph carries loose or free edges; a reduced graph is required")]
    NotReduced,
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: String, reason: String },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

/// An undirected edge with two distinct endpoints, stored in label order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(String, String);

impl Edge {
    pub fn new(a: impl Into<String>, b: impl Into<String>) -> Result<Self, GraphError> {
        let (a, b) = (a.into(), b.into());
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge(a, b)),
            std::cmp::Ordering::Greater => Ok(Edge(b, a)),
            std::cmp::Ordering::Equal => Err(GraphError::Loop(a)),
        }
    }

    pub fn a(&self) -> &str {
        &self.0
    }

    pub fn b(&self) -> &str {
        &self.1
    }

    pub fn contains(&self, v: &str) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Vertices, two-endpoint edges, loose edges (counted per vertex) and free
/// edges (a single count). Loose and free edges are interchangeable, so only
/// their multiplicities are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LooseGraph {
    adj: BTreeMap<String, BTreeSet<String>>,
    loose: BTreeMap<String, usize>,
    free: usize,
}

impl LooseGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from vertex labels and edge pairs; endpoints must be
    /// among `vertices`.
    pub fn from_parts<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String)>,
    {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (a, b) in edges {
            g.add_edge(&a, &b)?;
        }
        Ok(g)
    }

    /// Adds a vertex; returns false if it already existed.
    pub fn add_vertex(&mut self, v: impl Into<String>) -> bool {
        let v = v.into();
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeSet::new());
        true
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<(), GraphError> {
        let e = Edge::new(a, b)?;
        for v in [e.a(), e.b()] {
            if !self.adj.contains_key(v) {
                return Err(GraphError::UnknownVertex(v.to_string()));
            }
        }
        if !self.adj.get_mut(a).expect("checked").insert(b.to_string()) {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        self.adj.get_mut(b).expect("checked").insert(a.to_string());
        Ok(())
    }

    pub fn remove_edge(&mut self, a: &str, b: &str) -> Result<(), GraphError> {
        let removed = self.adj.get_mut(a).is_some_and(|s| s.remove(b));
        if !removed {
            return Err(GraphError::NotAnEdge(a.to_string(), b.to_string()));
        }
        self.adj.get_mut(b).expect("symmetric").remove(a);
        Ok(())
    }

    pub fn add_loose(&mut self, v: &str, count: usize) -> Result<(), GraphError> {
        if !self.adj.contains_key(v) {
            return Err(GraphError::UnknownVertex(v.to_string()));
        }
        if count > 0 {
            *self.loose.entry(v.to_string()).or_default() += count;
        }
        Ok(())
    }

    pub fn add_free(&mut self, count: usize) {
        self.free += count;
    }

    /// Removes `v` with its incident two-endpoint edges and its loose edges.
    pub fn remove_vertex(&mut self, v: &str) -> Result<(), GraphError> {
        let nbrs = self
            .adj
            .remove(v)
            .ok_or_else(|| GraphError::UnknownVertex(v.to_string()))?;
        for w in nbrs {
            self.adj.get_mut(&w).expect("symmetric").remove(v);
        }
        self.loose.remove(v);
        Ok(())
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> + '_ {
        self.adj.keys().map(String::as_str)
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.adj.contains_key(v)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Two-endpoint edges in label order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().flat_map(|(a, ns)| {
            ns.range::<String, _>((std::ops::Bound::Excluded(a), std::ops::Bound::Unbounded))
                .map(move |b| Edge(a.clone(), b.clone()))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        self.adj.get(a).is_some_and(|s| s.contains(b))
    }

    pub fn neighbors(&self, v: &str) -> &BTreeSet<String> {
        static EMPTY: BTreeSet<String> = BTreeSet::new();
        self.adj.get(v).unwrap_or(&EMPTY)
    }

    pub fn loose_at(&self, v: &str) -> usize {
        self.loose.get(v).copied().unwrap_or(0)
    }

    /// Vertices carrying at least one loose edge, with their counts.
    pub fn loose_edges(&self) -> impl Iterator<Item = (&str, usize)> + '_ {
        self.loose.iter().map(|(v, &c)| (v.as_str(), c))
    }

    pub fn loose_count(&self) -> usize {
        self.loose.values().sum()
    }

    pub fn free_count(&self) -> usize {
        self.free
    }

    pub fn degree(&self, v: &str) -> usize {
        self.neighbors(v).len() + self.loose_at(v)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty() && self.free == 0
    }

    /// No loose and no free edges.
    pub fn is_reduced(&self) -> bool {
        self.loose.is_empty() && self.free == 0
    }

    /// Copy without loose and free edges.
    pub fn reduced(&self) -> LooseGraph {
        LooseGraph {
            adj: self.adj.clone(),
            loose: BTreeMap::new(),
            free: 0,
        }
    }

    /// Subgraph induced on `keep`, with the loose edges of kept vertices.
    /// Free edges are dropped.
    pub fn induced<'a, I>(&self, keep: I) -> LooseGraph
    where
        I: IntoIterator<Item = &'a str>,
    {
        let keep: BTreeSet<&str> = keep.into_iter().filter(|v| self.has_vertex(v)).collect();
        let adj = keep
            .iter()
            .map(|&v| {
                let ns = self.adj[v]
                    .iter()
                    .filter(|w| keep.contains(w.as_str()))
                    .cloned()
                    .collect();
                (v.to_string(), ns)
            })
            .collect();
        let loose = self
            .loose
            .iter()
            .filter(|(v, _)| keep.contains(v.as_str()))
            .map(|(v, &c)| (v.clone(), c))
            .collect();
        LooseGraph { adj, loose, free: 0 }
    }

    /// Number of connected pieces among the vertices (free edges excluded).
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.adj.keys().next() else {
            return false;
        };
        self.component_of(start).len() == self.adj.len()
    }

    pub(crate) fn component_of(&self, start: &str) -> BTreeSet<String> {
        let mut seen = BTreeSet::from([start.to_string()]);
        let mut stack = vec![start.to_string()];
        while let Some(v) = stack.pop() {
            for w in &self.adj[&v] {
                if seen.insert(w.clone()) {
                    stack.push(w.clone());
                }
            }
        }
        seen
    }

    /// Connected components. Every free edge is a component of its own.
    pub fn components(&self) -> Vec<LooseGraph> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.adj.keys() {
            if seen.contains(v) {
                continue;
            }
            let comp = self.component_of(v);
            out.push(self.induced(comp.iter().map(String::as_str)));
            seen.extend(comp);
        }
        for _ in 0..self.free {
            let mut f = LooseGraph::new();
            f.add_free(1);
            out.push(f);
        }
        out
    }

    /// Connected with no cycle in the reduced graph (loose edges allowed,
    /// free edges not).
    pub fn is_loose_tree(&self) -> bool {
        self.free == 0 && self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    /// Ambient coordinates: one per vertex, one phantom per loose edge, two
    /// per free edge.
    pub fn ambient_dimension(&self) -> usize {
        (self.vertex_count() + self.loose_count() + 2 * self.free).saturating_sub(1)
    }

    /// Serializes to `.lg` text: vertices sorted, then edges sorted, then
    /// loose and free edges.
    pub fn to_lg(&self) -> String {
        let mut out = String::new();
        for v in self.vertices() {
            out.push_str("vertex ");
            out.push_str(v);
            out.push('\n');
        }
        for e in self.edges() {
            out.push_str(&format!("edge {} {}\n", e.a(), e.b()));
        }
        for (v, c) in self.loose_edges() {
            for _ in 0..c {
                out.push_str(&format!("loose {v}\n"));
            }
        }
        for _ in 0..self.free {
            out.push_str("free\n");
        }
        out
    }

    /// Renames every vertex through `f`, which must be injective.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> LooseGraph {
        let adj = self
            .adj
            .iter()
            .map(|(v, ns)| (f(v), ns.iter().map(|w| f(w)).collect()))
            .collect();
        let loose = self.loose.iter().map(|(v, &c)| (f(v), c)).collect();
        LooseGraph {
            adj,
            loose,
            free: self.free,
        }
    }

    /// Disjoint union; fails if labels overlap.
    pub fn disjoint_union(&self, other: &LooseGraph) -> Result<LooseGraph, GraphError> {
        if let Some(v) = other.vertices().find(|v| self.has_vertex(v)) {
            return Err(GraphError::OverlappingLabels(v.to_string()));
        }
        let mut g = self.clone();
        g.adj.extend(other.adj.clone());
        g.loose.extend(other.loose.clone());
        g.free += other.free;
        Ok(g)
    }
}

impl fmt::Display for LooseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_lg())
    }
}
