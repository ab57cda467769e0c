use std::collections::BTreeSet;

use super::engine::difference_from;
use super::{ClassEngine, ClassError};
use crate::loosegraph::{neighborhood, Edge, GraphError, LooseGraph, NeighborhoodData};
use crate::polyring::IntPolynomial;

/// The reduced graph induced on the closed unit balls around both
/// endpoints of `e`.
pub fn local_ball(g: &LooseGraph, e: &Edge) -> Result<LooseGraph, GraphError> {
    if !g.has_edge(e.a(), e.b()) {
        return Err(GraphError::NotAnEdge(e.a().into(), e.b().into()));
    }
    let mut ball: BTreeSet<&str> = [e.a(), e.b()].into();
    ball.extend(g.neighbors(e.a()).iter().map(String::as_str));
    ball.extend(g.neighbors(e.b()).iter().map(String::as_str));
    Ok(g.reduced().induced(ball))
}

struct Local {
    nd: NeighborhoodData,
    base: IntPolynomial,
}

fn local(engine: &ClassEngine, g: &LooseGraph, e: &Edge) -> Result<Local, ClassError> {
    let ball = local_ball(g, e)?;
    let nd = neighborhood(&ball, e)?;
    let base = IntPolynomial::x_pow(ball.degree(e.a()))
        + IntPolynomial::x_pow(ball.degree(e.b()))
        + engine.class(&nd.delta)?;
    Ok(Local { nd, base })
}

/// Class of the local ball before resolving `e`, assembled from the
/// auxiliary graphs. Exact whenever no edge joins a neighbour of only one
/// endpoint to a neighbour of only the other; see [`is_local_formula_exact`].
pub fn local_before(engine: &ClassEngine, g: &LooseGraph, e: &Edge) -> Result<IntPolynomial, ClassError> {
    let Local { nd, base, .. } = local(engine, g, e)?;
    let c = |h| engine.embedded_class(h);
    Ok(base + c(&nd.cone_gl_xy)? - c(&nd.gl)?
        - (c(&nd.cone_glx_xy)? - c(&nd.cone_glx_y)?)
        - (c(&nd.cone_gly_xy)? - c(&nd.cone_gly_x)?))
}

/// Class of the local ball after resolving `e`, summed over components of
/// the common-neighbour graph. Same exactness condition as [`local_before`].
pub fn local_after(engine: &ClassEngine, g: &LooseGraph, e: &Edge) -> Result<IntPolynomial, ClassError> {
    let Local { nd, base, .. } = local(engine, g, e)?;
    let l2m1 = IntPolynomial::from_i64s(&[-1, 0, 1]);
    let lm1 = IntPolynomial::x_minus_one();
    let mut total = base;
    for comp in &nd.components {
        total += &l2m1 * engine.embedded_class(&comp.gl)?
            - &lm1 * engine.embedded_class(&comp.glx)?
            - &lm1 * engine.embedded_class(&comp.gly)?;
    }
    Ok(total)
}

/// True when the ball has no edge between the two one-sided neighbourhoods.
pub fn is_local_formula_exact(g: &LooseGraph, e: &Edge) -> Result<bool, GraphError> {
    let ball = local_ball(g, e)?;
    let nd = neighborhood(&ball, e)?;
    Ok(!nd
        .x_only
        .iter()
        .any(|a| ball.neighbors(a).iter().any(|b| nd.y_only.contains(b))))
}

/// Difference computed on the ball alone, for comparison with the global one.
pub fn local_difference(engine: &ClassEngine, g: &LooseGraph, e: &Edge) -> Result<IntPolynomial, ClassError> {
    let Local { nd, .. } = local(engine, g, e)?;
    difference_from(&nd, |h| engine.embedded_class(h))
}
