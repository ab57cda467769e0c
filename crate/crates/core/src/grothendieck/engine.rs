use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};
use std::sync::RwLock;

use super::tree::tree_class;
use super::ClassError;
use crate::loosegraph::{
    neighborhood, reduce, resolve, spanning_tree_with, EmbeddedGraph, Edge, LooseGraph,
    NeighborhoodData, TreeChoice,
};
use crate::polyring::IntPolynomial;

/// Strictly decreasing along every recursive call.
type Measure = (usize, usize, usize);

fn measure(g: &LooseGraph) -> Measure {
    (g.vertex_count(), g.edge_count(), g.loose_count() + g.free_count())
}

/// Recursive class computation with a shared memo table.
///
/// Results do not depend on the tree choice; it only changes which edge is
/// resolved at each surgery step.
#[derive(Debug, Default)]
pub struct ClassEngine {
    choice: TreeChoice,
    memo: RwLock<HashMap<String, IntPolynomial>>,
}

impl ClassEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_tree_choice(choice: TreeChoice) -> Self {
        Self {
            choice,
            memo: RwLock::default(),
        }
    }

    pub fn tree_choice(&self) -> TreeChoice {
        self.choice
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().map(|m| m.len()).unwrap_or(0)
    }

    pub fn class(&self, g: &LooseGraph) -> Result<IntPolynomial, ClassError> {
        let key = canonical_key(g);
        if let Some(p) = self.memo.read().ok().and_then(|m| m.get(&key).cloned()) {
            return Ok(p);
        }
        let p = self.compute(g, &key)?;
        if let Ok(mut m) = self.memo.write() {
            m.insert(key, p.clone());
        }
        Ok(p)
    }

    fn sub(&self, parent: Measure, g: &LooseGraph) -> Result<IntPolynomial, ClassError> {
        let m = measure(g);
        if m >= parent {
            return Err(ClassError::NonDecreasing { parent, child: m });
        }
        self.class(g)
    }

    fn compute(&self, g: &LooseGraph, key: &str) -> Result<IntPolynomial, ClassError> {
        let m = measure(g);
        if g.vertex_count() == 0 {
            return Ok(IntPolynomial::constant(g.free_count() as i64)
                * IntPolynomial::x_minus_one());
        }
        let comps = g.components();
        if comps.len() > 1 {
            let mut acc = IntPolynomial::zero();
            for c in &comps {
                acc += self.sub(m, c)?;
            }
            return Ok(acc);
        }
        if g.is_loose_tree() {
            return tree_class(g);
        }
        if !g.is_reduced() {
            let (red, corr) = reduce(g);
            return Ok(corr + self.sub(m, &red)?);
        }
        let n = g.vertex_count();
        if let Some(v) = g.vertices().find(|v| g.neighbors(v).len() + 1 == n) {
            let mut rest = g.clone();
            rest.remove_vertex(v)?;
            return Ok(IntPolynomial::x_pow(g.degree(v)) + self.sub(m, &rest)?);
        }
        let e = self.surgery_edge(g, key)?;
        let resolved = resolve(g, &e)?;
        let after = self.sub(m, &resolved)?;
        let delta = self.difference_bounded(g, &e, Some(m))?;
        Ok(after - delta)
    }

    /// First fundamental edge of the chosen spanning tree.
    pub fn surgery_edge(&self, g: &LooseGraph, key: &str) -> Result<Edge, ClassError> {
        let choice = match self.choice {
            TreeChoice::Bfs => TreeChoice::Bfs,
            TreeChoice::Shuffled(seed) => {
                let mut h = DefaultHasher::new();
                key.hash(&mut h);
                TreeChoice::Shuffled(h.finish() ^ seed)
            }
        };
        let (_, fundamental) = spanning_tree_with(&g.reduced(), choice)?;
        fundamental
            .into_iter()
            .next()
            .ok_or(ClassError::NotATree("expected a cycle"))
    }

    /// `class(resolve(g, e)) - class(g)`. Loose and free edges of `g` are
    /// irrelevant and stripped first.
    pub fn resolution_difference(&self, g: &LooseGraph, e: &Edge) -> Result<IntPolynomial, ClassError> {
        self.difference_bounded(g, e, None)
    }

    fn difference_bounded(
        &self,
        g: &LooseGraph,
        e: &Edge,
        bound: Option<Measure>,
    ) -> Result<IntPolynomial, ClassError> {
        let nd = neighborhood(&g.reduced(), e)?;
        let cls = |h: &EmbeddedGraph| -> Result<IntPolynomial, ClassError> {
            if let Some(parent) = bound {
                let m = measure(&h.graph);
                if m >= parent {
                    return Err(ClassError::NonDecreasing { parent, child: m });
                }
            }
            self.embedded_class(h)
        };
        difference_from(&nd, cls)
    }

    /// Class of an embedded graph: the class of its carrier graph minus the
    /// points centred at ghost vertices that no real vertex sees.
    pub fn embedded_class(&self, h: &EmbeddedGraph) -> Result<IntPolynomial, ClassError> {
        let mut p = self.class(&h.graph)?;
        for o in &h.ghosts {
            p -= uncovered(&h.graph, o);
        }
        Ok(p)
    }
}

/// Resolution difference assembled from the auxiliary graphs.
pub(crate) fn difference_from<F>(nd: &NeighborhoodData, mut cls: F) -> Result<IntPolynomial, ClassError>
where
    F: FnMut(&EmbeddedGraph) -> Result<IntPolynomial, ClassError>,
{
    let l2 = IntPolynomial::x_pow(2);
    let lm1 = IntPolynomial::x_minus_one();
    let mut total = IntPolynomial::zero();
    for c in &nd.components {
        total += &l2 * cls(&c.gl)? - &lm1 * cls(&c.glx)? - &lm1 * cls(&c.gly)?;
    }
    total -= cls(&nd.cone_gl_xy)?;
    total += cls(&nd.cone_glx_xy)?;
    total -= cls(&nd.cone_glx_y)?;
    total += cls(&nd.cone_gly_xy)?;
    total -= cls(&nd.cone_gly_x)?;
    Ok(total)
}

/// Sum of `(L-1)^|T|` over subsets `T` of the ghost's neighbours such that
/// no member of `T` is adjacent to all the others.
fn uncovered(h: &LooseGraph, ghost: &str) -> IntPolynomial {
    let nbrs: Vec<&str> = h.neighbors(ghost).iter().map(String::as_str).collect();
    let k = nbrs.len();
    let mut counts = vec![0i64; k + 1];
    for mask in 0u64..(1u64 << k) {
        let members: Vec<&str> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| nbrs[i]).collect();
        let covered = members
            .iter()
            .any(|c| members.iter().all(|w| w == c || h.has_edge(c, w)));
        if !covered {
            counts[members.len()] += 1;
        }
    }
    let lm1 = IntPolynomial::x_minus_one();
    counts
        .iter()
        .enumerate()
        .filter(|(_, &n)| n != 0)
        .map(|(r, &n)| IntPolynomial::constant(n) * lm1.pow(r as u32))
        .sum()
}

/// Relabels vertices by two rounds of degree refinement (ties broken by
/// label) and serializes. Equal keys imply isomorphic graphs.
pub(crate) fn canonical_key(g: &LooseGraph) -> String {
    let mut colour: BTreeMap<&str, String> = g
        .vertices()
        .map(|v| (v, format!("{}.{}", g.degree(v), g.loose_at(v))))
        .collect();
    for _ in 0..2 {
        colour = g
            .vertices()
            .map(|v| {
                let mut ns: Vec<&str> = g.neighbors(v).iter().map(|w| colour[w.as_str()].as_str()).collect();
                ns.sort_unstable();
                (v, format!("{}[{}]", colour[v], ns.join(",")))
            })
            .collect();
    }
    let mut order: Vec<&str> = g.vertices().collect();
    order.sort_by(|a, b| colour[a].cmp(&colour[b]).then(a.cmp(b)));
    let index: HashMap<&str, usize> = order.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .map(|e| {
            let (i, j) = (index[e.a()], index[e.b()]);
            (i.min(j), i.max(j))
        })
        .collect();
    edges.sort_unstable();
    let loose: Vec<usize> = order.iter().map(|v| g.loose_at(v)).collect();
    format!("{}|{:?}|{:?}|{}", order.len(), edges, loose, g.free_count())
}
