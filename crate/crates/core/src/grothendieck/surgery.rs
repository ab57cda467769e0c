use serde::{Deserialize, Serialize};

use super::tree::tree_class;
use super::{ClassEngine, ClassError};
use crate::loosegraph::{parse, spanning_tree, Edge, GraphError, LooseGraph};
use crate::polyring::IntPolynomial;

/// One unresolve step: `graph` still contains `resolved_edge`, `delta` is
/// the change in class when that edge is resolved, and `running` is the
/// class of `graph`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryStep {
    pub graph: LooseGraph,
    pub resolved_edge: Edge,
    pub delta: IntPolynomial,
    pub running: IntPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryTrace {
    /// Steps in unresolve order; the last one carries the input graph.
    pub steps: Vec<SurgeryStep>,
    pub final_tree: LooseGraph,
    pub final_tree_class: IntPolynomial,
}

impl SurgeryTrace {
    /// Class of the traced graph.
    pub fn result(&self) -> &IntPolynomial {
        self.steps.last().map_or(&self.final_tree_class, |s| &s.running)
    }

    pub fn to_json_steps(&self) -> Vec<StepJson> {
        self.steps
            .iter()
            .map(|s| StepJson {
                graph: s.graph.to_lg(),
                resolved_edge: [s.resolved_edge.a().to_string(), s.resolved_edge.b().to_string()],
                delta: s.delta.clone(),
                running: s.running.clone(),
            })
            .collect()
    }
}

/// Serialized form of a [`SurgeryStep`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StepJson {
    pub graph: String,
    pub resolved_edge: [String; 2],
    pub delta: IntPolynomial,
    pub running: IntPolynomial,
}

impl StepJson {
    pub fn to_step(&self) -> Result<SurgeryStep, ClassError> {
        let graph = parse(&self.graph).map_err(|e| ClassError::Malformed(e.to_string()))?;
        let [a, b] = &self.resolved_edge;
        Ok(SurgeryStep {
            graph,
            resolved_edge: Edge::new(a.clone(), b.clone())?,
            delta: self.delta.clone(),
            running: self.running.clone(),
        })
    }
}

/// Resolves the fundamental edges of the deterministic spanning tree in
/// label order, then walks back, recording each difference.
pub fn surgery_trace(engine: &ClassEngine, g: &LooseGraph) -> Result<SurgeryTrace, ClassError> {
    if g.free_count() > 0 || !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let (_, fundamental) = spanning_tree(g)?;
    let mut tree = g.clone();
    for e in &fundamental {
        tree.remove_edge(e.a(), e.b())?;
        tree.add_loose(e.a(), 1)?;
        tree.add_loose(e.b(), 1)?;
    }
    let final_tree_class = tree_class(&tree)?;
    let mut running = final_tree_class.clone();
    let mut cur = tree.clone();
    let mut steps = Vec::with_capacity(fundamental.len());
    for e in fundamental.iter().rev() {
        let before = unresolve(&cur, e)?;
        let delta = engine.resolution_difference(&before, e)?;
        running -= &delta;
        steps.push(SurgeryStep {
            graph: before.clone(),
            resolved_edge: e.clone(),
            delta,
            running: running.clone(),
        });
        cur = before;
    }
    Ok(SurgeryTrace {
        steps,
        final_tree: tree,
        final_tree_class,
    })
}

fn unresolve(g: &LooseGraph, e: &Edge) -> Result<LooseGraph, GraphError> {
    if g.loose_at(e.a()) == 0 || g.loose_at(e.b()) == 0 {
        return Err(GraphError::NotAnEdge(e.a().into(), e.b().into()));
    }
    let mut out = g.reduced();
    out.add_edge(e.a(), e.b())?;
    for (v, c) in g.loose_edges() {
        out.add_loose(v, c - usize::from(e.contains(v)))?;
    }
    out.add_free(g.free_count());
    Ok(out)
}
