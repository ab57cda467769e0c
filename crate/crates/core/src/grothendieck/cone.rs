use super::{ClassEngine, ClassError};
use crate::loosegraph::{reduce, GraphError, LooseGraph};
use crate::polyring::IntPolynomial;

/// Class of the cone joining every vertex of `g1` to every vertex of `g2`,
/// from the classes of the two reduced parts and their degree corrections.
pub fn cone_class(engine: &ClassEngine, g1: &LooseGraph, g2: &LooseGraph) -> Result<IntPolynomial, ClassError> {
    if g1.free_count() > 0 || g2.free_count() > 0 {
        return Err(ClassError::FreeEdges);
    }
    if let Some(v) = g1.vertices().find(|v| g2.has_vertex(v)) {
        return Err(GraphError::OverlappingLabels(v.to_string()).into());
    }
    let (r1, c1) = reduce(g1);
    let (r2, c2) = reduce(g2);
    let (p1, p2) = (engine.class(&r1)?, engine.class(&r2)?);
    let (lm1, lm2) = (
        IntPolynomial::x_pow(g1.vertex_count()),
        IntPolynomial::x_pow(g2.vertex_count()),
    );
    Ok(&p1 * &lm2 + &p2 * &lm1 - &p1 * &p2 * IntPolynomial::x_minus_one() + &lm2 * &c1 + &lm1 * &c2)
}
