//! Grothendieck-ring classes of loose graphs.
//!
//! The engine works recursively: components add up, loose trees have a
//! closed form, loose edges are split off by a correction term, a vertex
//! joined to everything splits off as a cone, and everything else goes
//! through edge surgery.

mod cone;
mod engine;
mod local;
mod surgery;
mod tree;

use std::sync::OnceLock;

pub use cone::cone_class;
pub use engine::ClassEngine;
pub use local::{is_local_formula_exact, local_after, local_ball, local_before, local_difference};
pub use surgery::{surgery_trace, StepJson, SurgeryStep, SurgeryTrace};
pub use tree::{star_class, tree_class, TreeProfile};

use crate::loosegraph::{Edge, GraphError, LooseGraph};
use crate::polyring::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("not a loose tree: {0}")]
    NotATree(&'static str),
    #[error("free edges are not allowed here")]
    FreeEdges,
    #[error("invalid star parameters n = {n}, k = {k}")]
    InvalidStar { n: usize, k: usize },
    #[error("internal error: recursion did not shrink the graph ({parent:?} -> {child:?})")]
    NonDecreasing {
        parent: (usize, usize, usize),
        child: (usize, usize, usize),
    },
    #[error("malformed trace entry: {0}")]
    Malformed(String),
}

fn shared_engine() -> &'static ClassEngine {
    static ENGINE: OnceLock<ClassEngine> = OnceLock::new();
    ENGINE.get_or_init(ClassEngine::new)
}

/// Class polynomial in `L` of any loose graph.
pub fn class_polynomial(g: &LooseGraph) -> Result<IntPolynomial, ClassError> {
    shared_engine().class(g)
}

/// `class(resolve(g, e)) - class(g)`.
pub fn resolution_difference(g: &LooseGraph, e: &Edge) -> Result<IntPolynomial, ClassError> {
    shared_engine().resolution_difference(g, e)
}

/// Surgery trace using the shared engine.
pub fn trace(g: &LooseGraph) -> Result<SurgeryTrace, ClassError> {
    surgery_trace(shared_engine(), g)
}
