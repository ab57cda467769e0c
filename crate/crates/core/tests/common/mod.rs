//! Test-only oracles, independent of the engine.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use lgz_core::loosegraph::{Family, LooseGraph};
use lgz_core::polyring::{IntPolynomial, PolyMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

pub fn l(k: usize) -> IntPolynomial {
    IntPolynomial::x_pow(k)
}

pub fn c(k: i64) -> IntPolynomial {
    IntPolynomial::constant(k)
}

pub fn gen(f: Family) -> LooseGraph {
    lgz_core::loosegraph::generate(f).unwrap()
}

pub fn lg(text: &str) -> LooseGraph {
    lgz_core::loosegraph::parse(text).unwrap()
}

/// Class by support census: a point's support is a set of coordinates; it
/// lies on the scheme iff some vertex in the support sees the whole support.
/// A support of size `s` carries `(L-1)^(s-1)` points.
pub fn census_class(g: &LooseGraph) -> IntPolynomial {
    let names: Vec<&str> = g.vertices().collect();
    let idx = |v: &str| names.iter().position(|w| *w == v).unwrap();
    let mut phantom = names.len();
    let mut supports: HashSet<BTreeSet<usize>> = HashSet::new();
    for (i, v) in names.iter().enumerate() {
        let mut dirs: Vec<usize> = g.neighbors(v).iter().map(|w| idx(w)).collect();
        for _ in 0..g.loose_at(v) {
            dirs.push(phantom);
            phantom += 1;
        }
        for mask in 0u32..(1 << dirs.len()) {
            let mut s = BTreeSet::from([i]);
            s.extend((0..dirs.len()).filter(|b| mask >> b & 1 == 1).map(|b| dirs[b]));
            supports.insert(s);
        }
    }
    let lm1 = IntPolynomial::x_minus_one();
    let mut total = IntPolynomial::constant(g.free_count() as i64) * &lm1;
    for s in supports {
        total += lm1.pow(s.len() as u32 - 1);
    }
    total
}

/// Random loose graph within the given limits; vertices `n0..`.
pub fn random_loose_graph(
    rng: &mut StdRng,
    max_vertices: usize,
    max_edges: usize,
    max_loose: usize,
    max_degree: usize,
    with_free: bool,
) -> LooseGraph {
    loop {
        let n = rng.gen_range(1..=max_vertices);
        let names: Vec<String> = (0..n).map(|i| format!("n{i}")).collect();
        let mut g = LooseGraph::new();
        for v in &names {
            g.add_vertex(v.clone());
        }
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        pairs.shuffle(rng);
        let m = rng.gen_range(0..=max_edges.min(pairs.len()));
        for &(a, b) in &pairs[..m] {
            g.add_edge(&names[a], &names[b]).unwrap();
        }
        for _ in 0..rng.gen_range(0..=max_loose) {
            let v = &names[rng.gen_range(0..n)];
            g.add_loose(v, 1).unwrap();
        }
        if with_free && rng.gen_bool(0.2) {
            g.add_free(1);
        }
        if g.max_degree() <= max_degree {
            return g;
        }
    }
}

/// Random loose tree on `n` vertices with up to `max_loose` loose edges.
pub fn random_loose_tree(rng: &mut StdRng, n: usize, max_loose: usize) -> LooseGraph {
    let names: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
    let mut g = LooseGraph::new();
    for v in &names {
        g.add_vertex(v.clone());
    }
    for i in 1..n {
        let parent = rng.gen_range(0..i);
        g.add_edge(&names[parent], &names[i]).unwrap();
    }
    for _ in 0..rng.gen_range(0..=max_loose) {
        g.add_loose(&names[rng.gen_range(0..n)], 1).unwrap();
    }
    g
}

/// Connected graph with minimum degree 2 and at least one cycle.
pub fn random_ihara_graph(rng: &mut StdRng, max_vertices: usize) -> LooseGraph {
    loop {
        let g = random_loose_graph(rng, max_vertices, 16, 0, usize::MAX, false);
        if g.vertex_count() >= 3
            && g.is_connected()
            && g.vertices().all(|v| g.degree(v) >= 2)
            && g.edge_count() >= g.vertex_count()
        {
            return g;
        }
    }
}

fn rational(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Integer determinant by Gaussian elimination over the rationals.
pub fn int_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(rational).collect()).collect();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            a.swap(piv, k);
            det = -det;
        }
        det *= &a[k][k];
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let f = &row[k] / &pivot_row[k];
            for (x, p) in row[k..].iter_mut().zip(&pivot_row[k..]) {
                *x -= &f * p;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// Newton interpolation through `(x_i, y_i)`, asserting integer coefficients.
pub fn interpolate(xs: &[i64], ys: &[BigInt]) -> IntPolynomial {
    let n = xs.len();
    let mut coef: Vec<BigRational> = ys.iter().map(rational).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let d = BigRational::from_integer(BigInt::from(xs[i] - xs[i - j]));
            coef[i] = (&coef[i] - &coef[i - 1]) / d;
        }
    }
    // expand the Newton form
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // acc = acc * (X - x_i) + coef[i]
        let mut next = vec![BigRational::zero(); n];
        for k in 0..n {
            if k + 1 < n {
                next[k + 1] += &acc[k];
            }
            next[k] -= &acc[k] * BigRational::from_integer(BigInt::from(xs[i]));
        }
        next[0] += &coef[i];
        acc = next;
    }
    IntPolynomial::new(
        acc.into_iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integer interpolated coefficient");
                c.to_integer()
            })
            .collect(),
    )
}

/// Determinant by evaluation at `bound + 1` integer points and interpolation.
pub fn det_by_interpolation(m: &PolyMatrix) -> IntPolynomial {
    let bound: usize = m
        .rows()
        .iter()
        .map(|r| r.iter().filter_map(IntPolynomial::degree).max().unwrap_or(0))
        .sum();
    let xs: Vec<i64> = (0..=bound as i64).collect();
    let ys: Vec<BigInt> = xs.iter().map(|&x| int_det(&m.eval(&BigInt::from(x)))).collect();
    interpolate(&xs, &ys)
}

/// Matrix `I - A u + Q u^2` of a graph, built independently of the library.
pub fn bass_hashimoto_matrix(g: &LooseGraph) -> PolyMatrix {
    let names: Vec<&str> = g.vertices().collect();
    let rows = names
        .iter()
        .map(|v| {
            names
                .iter()
                .map(|w| {
                    if v == w {
                        p(&[1, 0, g.degree(v) as i64 - 1])
                    } else if g.has_edge(v, w) {
                        p(&[0, -1])
                    } else {
                        IntPolynomial::zero()
                    }
                })
                .collect()
        })
        .collect();
    PolyMatrix::new(rows).unwrap()
}

/// Ihara inverse through the interpolation determinant.
pub fn ihara_by_interpolation(g: &LooseGraph) -> IntPolynomial {
    let r = g.edge_count() + 1 - g.vertex_count();
    p(&[1, 0, -1]).pow(r as u32 - 1) * det_by_interpolation(&bass_hashimoto_matrix(g))
}

/// `u`, `v` adjacent, `m` common neighbours `c0..`, `a` loose edges at `u`,
/// `b` at `v`, and edges among the common neighbours given by index pairs.
pub fn family(m: usize, a: usize, b: usize, uv: bool, common_edges: &[(usize, usize)]) -> LooseGraph {
    let mut g = LooseGraph::new();
    g.add_vertex("u");
    g.add_vertex("v");
    if uv {
        g.add_edge("u", "v").unwrap();
    }
    for i in 0..m {
        let w = format!("c{i}");
        g.add_vertex(w.clone());
        g.add_edge("u", &w).unwrap();
        g.add_edge("v", &w).unwrap();
    }
    for &(i, j) in common_edges {
        g.add_edge(&format!("c{i}"), &format!("c{j}")).unwrap();
    }
    g.add_loose("u", a).unwrap();
    g.add_loose("v", b).unwrap();
    g
}

pub type Structure = (&'static str, Vec<(usize, usize)>, IntPolynomial);

/// Graphs on the common neighbours with their classes, for `m` vertices.
/// Classes are written out by hand: isolated points count 1 each.
pub fn common_structures(m: usize) -> Vec<Structure> {
    let mut out = vec![("empty", vec![], c(m as i64))];
    if m >= 2 {
        out.push(("line", vec![(0, 1)], p(&[1, 1]) + c(m as i64 - 2)));
    }
    if m >= 3 {
        out.push(("path3", vec![(0, 1), (1, 2)], p(&[2, 0, 1]) + c(m as i64 - 3)));
    }
    out
}

pub mod corpus;

/// Every named and extra corpus graph.
pub fn corpus_graphs() -> Vec<(String, LooseGraph)> {
    corpus::references()
        .into_iter()
        .map(|r| (r.name.to_string(), r.graph))
        .chain(corpus::extra_graphs().into_iter().map(|(n, g)| (n.to_string(), g)))
        .collect()
}

pub fn seeded(seed: u64) -> StdRng {
    use rand::SeedableRng;
    StdRng::seed_from_u64(seed)
}
