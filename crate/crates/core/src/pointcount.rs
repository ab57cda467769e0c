//! Brute-force point counts over prime fields.
//!
//! The points of a loose graph over `F_p` live in a projective space with
//! one coordinate per vertex, one per loose edge and two per free edge. A
//! vertex `v` contributes the affine chart of points with `x_v != 0` whose
//! support lies in the star of `v`; each free edge contributes a torus. The
//! count is the size of the union, enumerated chart by chart.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::grothendieck::{class_polynomial, ClassError};
use crate::loosegraph::LooseGraph;
use crate::zeta::euler_characteristic;

pub const DEFAULT_PRIME_BOUND: u64 = 13;
pub const DEFAULT_BUDGET: u64 = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CountError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} exceeds the configured bound {bound}")]
    PrimeTooLarge { p: u64, bound: u64 },
    #[error("estimated work {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error(transparent)]
    Class(#[from] ClassError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountOptions {
    pub prime_bound: u64,
    pub budget: u64,
}

impl Default for CountOptions {
    fn default() -> Self {
        Self {
            prime_bound: DEFAULT_PRIME_BOUND,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64, bound: u64) -> Result<Self, CountError> {
        if !is_prime(p) {
            return Err(CountError::NotPrime(p));
        }
        if p > bound {
            return Err(CountError::PrimeTooLarge { p, bound });
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        // Fermat; p is small
        let mut r = 1;
        let mut b = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        r
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `sum_v p^deg(v) + free * (p - 1)`, saturating.
pub fn estimated_work(g: &LooseGraph, p: u64) -> u64 {
    let charts = g
        .vertices()
        .map(|v| p.checked_pow(g.degree(v) as u32).unwrap_or(u64::MAX))
        .fold(0u64, u64::saturating_add);
    charts.saturating_add((g.free_count() as u64).saturating_mul(p - 1))
}

/// Index layout of the ambient coordinates for one graph.
struct Ambient {
    /// For each vertex: its own coordinate followed by its star directions.
    charts: Vec<Vec<usize>>,
    /// For each vertex: the vertex coordinates adjacent to it.
    neighbours: Vec<Vec<usize>>,
}

impl Ambient {
    fn new(g: &LooseGraph) -> Self {
        let names: Vec<&str> = g.vertices().collect();
        let index = |v: &str| names.binary_search(&v).expect("vertex");
        let mut next_phantom = names.len();
        let mut charts = Vec::with_capacity(names.len());
        let mut neighbours = Vec::with_capacity(names.len());
        for (i, v) in names.iter().enumerate() {
            let ns: Vec<usize> = g.neighbors(v).iter().map(|w| index(w)).collect();
            let mut chart = vec![i];
            chart.extend(&ns);
            for _ in 0..g.loose_at(v) {
                chart.push(next_phantom);
                next_phantom += 1;
            }
            charts.push(chart);
            neighbours.push(ns);
        }
        Self { charts, neighbours }
    }

    /// Whether a support set (sorted coordinate indices) lies in the chart
    /// of vertex `w` with `x_w` nonzero.
    fn in_chart(&self, w: usize, support: &[usize]) -> bool {
        let chart = &self.charts[w];
        support.binary_search(&w).is_ok() && support.iter().all(|c| chart.contains(c))
    }
}

/// Walks every point of every chart. `visit(v, point)` receives the chart
/// index and the sparse point `(coordinate, value)` with `x_v = 1`.
fn for_each_chart_point(g: &LooseGraph, field: PrimeField, mut visit: impl FnMut(&Ambient, usize, &[(usize, u64)])) {
    let amb = Ambient::new(g);
    let p = field.p();
    for v in 0..amb.charts.len() {
        let dirs = &amb.charts[v][1..];
        let mut values = vec![0u64; dirs.len()];
        let mut point = Vec::with_capacity(dirs.len() + 1);
        loop {
            point.clear();
            point.push((v, 1));
            point.extend(dirs.iter().zip(&values).filter(|(_, &x)| x != 0).map(|(&c, &x)| (c, x)));
            point.sort_unstable();
            visit(&amb, v, &point);
            // odometer
            let mut i = 0;
            while i < values.len() {
                values[i] += 1;
                if values[i] < p {
                    break;
                }
                values[i] = 0;
                i += 1;
            }
            if i == values.len() {
                break;
            }
        }
    }
}

fn check(g: &LooseGraph, p: u64, opts: CountOptions) -> Result<PrimeField, CountError> {
    let field = PrimeField::new(p, opts.prime_bound)?;
    let needed = estimated_work(g, p);
    if needed > opts.budget {
        return Err(CountError::BudgetExceeded { needed, budget: opts.budget });
    }
    Ok(field)
}

pub fn count_points(g: &LooseGraph, p: u64) -> Result<u64, CountError> {
    count_points_with(g, p, CountOptions::default())
}

/// Number of `F_p`-points. A chart point is counted once, in the first chart
/// (by vertex order) that contains it.
pub fn count_points_with(g: &LooseGraph, p: u64, opts: CountOptions) -> Result<u64, CountError> {
    let field = check(g, p, opts)?;
    let mut total = g.free_count() as u64 * (p - 1);
    let mut support = Vec::new();
    for_each_chart_point(g, field, |amb, v, point| {
        support.clear();
        support.extend(point.iter().map(|&(c, _)| c));
        let seen_earlier = amb.neighbours[v]
            .iter()
            .any(|&w| w < v && amb.in_chart(w, &support));
        if !seen_earlier {
            total += 1;
        }
    });
    Ok(total)
}

/// Canonical projective point: nonzero coordinates in ambient order, the
/// first one scaled to 1.
pub type ProjectivePoint = Vec<(usize, u64)>;

/// Every point of the vertex charts, deduplicated through a hash set. Same
/// cardinality as [`count_points_with`] minus the torus points of free
/// edges; meant for small inputs and cross-checks.
pub fn collect_points(g: &LooseGraph, p: u64, opts: CountOptions) -> Result<HashSet<ProjectivePoint>, CountError> {
    let field = check(g, p, opts)?;
    let mut set = HashSet::new();
    for_each_chart_point(g, field, |_, _, point| {
        let lead = field.inv(point[0].1);
        set.insert(point.iter().map(|&(c, x)| (c, x * lead % p)).collect());
    });
    Ok(set)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeCheck {
    pub prime: u64,
    pub expected: i128,
    pub counted: u64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCheck {
    pub expected: u64,
    pub got: i128,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub primes: Vec<PrimeCheck>,
    pub euler: EulerCheck,
    pub ok: bool,
}

/// Compares the class polynomial with brute-force counts at each prime and
/// its value at 1 with the number of vertices.
pub fn verify(g: &LooseGraph, primes: &[u64], opts: CountOptions) -> Result<VerifyReport, CountError> {
    let class = class_polynomial(g)?;
    let to_i128 = |b: num_bigint::BigInt| i128::try_from(b).unwrap_or(i128::MAX);
    let mut checks = Vec::with_capacity(primes.len());
    for &p in primes {
        let counted = count_points_with(g, p, opts)?;
        let expected = to_i128(class.eval_i64(p as i64));
        checks.push(PrimeCheck {
            prime: p,
            expected,
            counted,
            ok: expected == counted as i128,
        });
    }
    let got = to_i128(euler_characteristic(&class));
    let expected = g.vertex_count() as u64;
    let euler = EulerCheck {
        expected,
        got,
        ok: got == expected as i128,
    };
    let ok = euler.ok && checks.iter().all(|c| c.ok);
    Ok(VerifyReport { primes: checks, euler, ok })
}
