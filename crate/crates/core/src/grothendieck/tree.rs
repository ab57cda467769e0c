use std::collections::BTreeMap;

use super::ClassError;
use crate::loosegraph::LooseGraph;
use crate::polyring::IntPolynomial;

/// Degree data of a loose tree: `n_i` vertices of each degree `d_i > 1`,
/// `I = sum n_i - 1` and `E` = number of degree-one vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeProfile {
    pub degree_counts: BTreeMap<usize, usize>,
    pub inner: i64,
    pub ends: usize,
}

impl TreeProfile {
    pub fn of(t: &LooseGraph) -> Result<Self, ClassError> {
        if t.free_count() > 0 {
            return Err(ClassError::FreeEdges);
        }
        if !t.is_connected() {
            return Err(ClassError::NotATree("graph is not connected"));
        }
        if !t.is_loose_tree() {
            return Err(ClassError::NotATree("graph has a cycle"));
        }
        let mut degree_counts = BTreeMap::new();
        let mut ends = 0;
        for v in t.vertices() {
            match t.degree(v) {
                0 => {}
                1 => ends += 1,
                d => *degree_counts.entry(d).or_insert(0) += 1,
            }
        }
        let inner = degree_counts.values().sum::<usize>() as i64 - 1;
        Ok(Self { degree_counts, inner, ends })
    }

    /// `sum n_i L^{d_i} - I L + I + E`.
    pub fn class(&self) -> IntPolynomial {
        let mut p = IntPolynomial::monomial(-self.inner, 1)
            + IntPolynomial::constant(self.inner + self.ends as i64);
        for (&d, &n) in &self.degree_counts {
            p += IntPolynomial::monomial(n as i64, d);
        }
        p
    }
}

/// Class of a connected loose tree. An isolated vertex is a single point.
pub fn tree_class(t: &LooseGraph) -> Result<IntPolynomial, ClassError> {
    let profile = TreeProfile::of(t)?;
    if t.vertex_count() == 1 && t.max_degree() == 0 {
        return Ok(IntPolynomial::one());
    }
    Ok(profile.class())
}

/// Loose star with `k` real endpoints and `n - k` loose edges: `L^n + k`.
pub fn star_class(n: usize, k: usize) -> Result<IntPolynomial, ClassError> {
    if n == 0 || k > n {
        return Err(ClassError::InvalidStar { n, k });
    }
    Ok(IntPolynomial::x_pow(n) + IntPolynomial::constant(k as i64))
}
