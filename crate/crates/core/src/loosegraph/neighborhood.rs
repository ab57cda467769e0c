use std::collections::{BTreeMap, BTreeSet};

use super::{Edge, GraphError, LooseGraph};

/// A loose graph living inside a larger ambient graph.
///
/// Each centre vertex keeps the coordinates of its star. An outer coordinate
/// used by a single centre is recorded as a loose edge; one shared by two or
/// more centres is kept as a *ghost* vertex (with its original label) so that
/// the points those centres have in common are not counted twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    pub graph: LooseGraph,
    pub ghosts: Vec<String>,
}

impl EmbeddedGraph {
    /// Builds from `centre -> star coordinates`; coordinates that are not
    /// centres are outer.
    pub fn from_stars(stars: &BTreeMap<String, BTreeSet<String>>) -> Self {
        let mut graph = LooseGraph::new();
        for c in stars.keys() {
            graph.add_vertex(c.clone());
        }
        let mut users: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for (c, star) in stars {
            for o in star {
                if stars.contains_key(o) {
                    if c < o {
                        graph.add_edge(c, o).expect("centres are vertices");
                    }
                } else {
                    users.entry(o).or_default().push(c);
                }
            }
        }
        let mut ghosts = Vec::new();
        for (o, us) in users {
            if let [only] = us.as_slice() {
                graph.add_loose(only, 1).expect("centre exists");
            } else {
                graph.add_vertex(o);
                for u in us {
                    graph.add_edge(o, u).expect("fresh edge");
                }
                ghosts.push(o.to_string());
            }
        }
        EmbeddedGraph { graph, ghosts }
    }

    /// Vertices that are not ghosts.
    pub fn centres(&self) -> impl Iterator<Item = &str> + '_ {
        self.graph.vertices().filter(|v| !self.ghosts.iter().any(|g| g == v))
    }
}

/// One connected piece of the common-neighbour graph with its three
/// embedded versions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodComponent {
    pub vertices: BTreeSet<String>,
    pub gl: EmbeddedGraph,
    pub glx: EmbeddedGraph,
    pub gly: EmbeddedGraph,
}

/// Auxiliary graphs around an edge `xy` of a reduced graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodData {
    pub edge: Edge,
    /// Induced graph on the neighbours of `x` and `y`, excluding both.
    pub delta: LooseGraph,
    /// Induced graph on the common neighbours.
    pub g: LooseGraph,
    /// Common neighbours with their edges towards the rest of `delta`.
    pub gl: EmbeddedGraph,
    /// As `gl`, outer edges restricted to neighbours of `x` only.
    pub glx: EmbeddedGraph,
    /// As `gl`, outer edges restricted to neighbours of `y` only.
    pub gly: EmbeddedGraph,
    pub cone_gl_xy: EmbeddedGraph,
    pub cone_glx_xy: EmbeddedGraph,
    pub cone_glx_y: EmbeddedGraph,
    pub cone_gly_xy: EmbeddedGraph,
    pub cone_gly_x: EmbeddedGraph,
    pub components: Vec<NeighborhoodComponent>,
    pub x_only: BTreeSet<String>,
    pub y_only: BTreeSet<String>,
}

type Stars = BTreeMap<String, BTreeSet<String>>;

fn restrict(stars: &Stars, keep: &BTreeSet<String>) -> Stars {
    stars
        .iter()
        .filter(|(c, _)| keep.contains(*c))
        .map(|(c, s)| (c.clone(), s.clone()))
        .collect()
}

fn coned(stars: &Stars, common: &BTreeSet<String>, apex: &[&str]) -> EmbeddedGraph {
    let mut out: Stars = stars
        .iter()
        .map(|(c, s)| {
            let mut s = s.clone();
            s.extend(apex.iter().map(|z| z.to_string()));
            (c.clone(), s)
        })
        .collect();
    for z in apex {
        let mut s = common.clone();
        s.extend(apex.iter().filter(|w| *w != z).map(|w| w.to_string()));
        out.insert(z.to_string(), s);
    }
    EmbeddedGraph::from_stars(&out)
}

pub fn neighborhood(g: &LooseGraph, e: &Edge) -> Result<NeighborhoodData, GraphError> {
    if !g.is_reduced() {
        return Err(GraphError::NotReduced);
    }
    let (x, y) = (e.a(), e.b());
    if !g.has_edge(x, y) {
        return Err(GraphError::NotAnEdge(x.to_string(), y.to_string()));
    }
    let nx = g.neighbors(x);
    let ny = g.neighbors(y);
    let common: BTreeSet<String> = nx.intersection(ny).cloned().collect();
    let outside = |v: &String| v != x && v != y;
    let d: BTreeSet<String> = nx.union(ny).filter(|v| outside(v)).cloned().collect();
    let x_only: BTreeSet<String> = nx.iter().filter(|v| outside(v) && !common.contains(*v)).cloned().collect();
    let y_only: BTreeSet<String> = ny.iter().filter(|v| outside(v) && !common.contains(*v)).cloned().collect();
    let d_outer: BTreeSet<String> = d.difference(&common).cloned().collect();

    let stars_towards = |outer: &BTreeSet<String>| -> Stars {
        common
            .iter()
            .map(|u| {
                let s = g
                    .neighbors(u)
                    .iter()
                    .filter(|w| common.contains(*w) || outer.contains(*w))
                    .cloned()
                    .collect();
                (u.clone(), s)
            })
            .collect()
    };
    let st_l = stars_towards(&d_outer);
    let st_x = stars_towards(&x_only);
    let st_y = stars_towards(&y_only);

    let delta = g.induced(d.iter().map(String::as_str));
    let gg = g.induced(common.iter().map(String::as_str));
    let components = gg
        .components()
        .into_iter()
        .map(|c| {
            let vertices: BTreeSet<String> = c.vertices().map(str::to_string).collect();
            NeighborhoodComponent {
                gl: EmbeddedGraph::from_stars(&restrict(&st_l, &vertices)),
                glx: EmbeddedGraph::from_stars(&restrict(&st_x, &vertices)),
                gly: EmbeddedGraph::from_stars(&restrict(&st_y, &vertices)),
                vertices,
            }
        })
        .collect();

    Ok(NeighborhoodData {
        edge: e.clone(),
        delta,
        gl: EmbeddedGraph::from_stars(&st_l),
        glx: EmbeddedGraph::from_stars(&st_x),
        gly: EmbeddedGraph::from_stars(&st_y),
        cone_gl_xy: coned(&st_l, &common, &[x, y]),
        cone_glx_xy: coned(&st_x, &common, &[x, y]),
        cone_glx_y: coned(&st_x, &common, &[y]),
        cone_gly_xy: coned(&st_y, &common, &[x, y]),
        cone_gly_x: coned(&st_y, &common, &[x]),
        g: gg,
        components,
        x_only,
        y_only,
    })
}
