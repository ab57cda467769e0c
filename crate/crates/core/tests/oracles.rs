//! Engine output against independent oracles.

mod common;

use common::{
    c, census_class, corpus_graphs, det_by_interpolation, family, gen, ihara_by_interpolation, l, lg, p,
    random_ihara_graph, random_loose_graph, random_loose_tree, seeded, bass_hashimoto_matrix,
};
use lgz_core::grothendieck::{
    class_polynomial, cone_class, is_local_formula_exact, local_after, local_ball, local_before,
    local_difference, resolution_difference, tree_class, ClassEngine,
};
use lgz_core::ihara::{edge_matrix_inverse, ihara_inverse};
use lgz_core::loosegraph::{cone, resolve, Edge, Family, LooseGraph, TreeChoice};
use lgz_core::pointcount::{collect_points, count_points, CountOptions};
use lgz_core::polyring::IntPolynomial;
use lgz_core::zeta::{f1_zeta, tree_zeta_closed_form};
use num_bigint::BigInt;

#[test]
fn engine_matches_census_on_corpus() {
    for (name, g) in corpus_graphs() {
        assert_eq!(class_polynomial(&g).unwrap(), census_class(&g), "{name}");
    }
}

#[test]
fn engine_matches_census_on_random_graphs() {
    let mut rng = seeded(7);
    for i in 0..400 {
        let g = random_loose_graph(&mut rng, 8, 12, 3, 6, true);
        assert_eq!(class_polynomial(&g).unwrap(), census_class(&g), "case {i}\n{g}");
    }
}

#[test]
fn census_matches_hash_set_enumeration() {
    let mut rng = seeded(8);
    for _ in 0..40 {
        let mut g = random_loose_graph(&mut rng, 6, 8, 2, 5, false);
        let census = census_class(&g);
        for q in [2u64, 3] {
            let set = collect_points(&g, q, CountOptions::default()).unwrap();
            assert_eq!(BigInt::from(set.len()), census.eval_i64(q as i64), "{g}");
        }
        g.add_free(2);
        assert_eq!(BigInt::from(count_points(&g, 3).unwrap()), census_class(&g).eval_i64(3));
    }
}

#[test]
fn differences_match_census() {
    let mut rng = seeded(9);
    let mut checked = 0;
    while checked < 300 {
        let g = random_loose_graph(&mut rng, 8, 12, 2, 6, false);
        let first = g.edges().next();
        let Some(e) = first else { continue };
        let after = census_class(&resolve(&g, &e).unwrap());
        let before = census_class(&g);
        assert_eq!(resolution_difference(&g, &e).unwrap(), after - before, "{g}edge {e}");
        checked += 1;
    }
}

#[test]
fn shared_outer_neighbour_difference() {
    // two adjacent common neighbours of the resolved edge share an outer vertex
    let g = lg("edge v0 v1\nedge v1 v2\nedge v1 v5\nedge v0 v3\nedge v2 v3\n\
                edge v0 v2\nedge v0 v5\nedge v1 v3\nedge v3 v5\nedge v2 v4");
    let e = Edge::new("v1", "v2").unwrap();
    let want = census_class(&resolve(&g, &e).unwrap()) - census_class(&g);
    assert_eq!(want, p(&[0, 1, -2, 0, 1]));
    assert_eq!(resolution_difference(&g, &e).unwrap(), want);
}

#[test]
fn components_remark_graph() {
    let g = lg("edge x u\nedge x v\nedge y u\nedge y v\nedge y w\nedge w u\nedge w v");
    assert_eq!(class_polynomial(&g).unwrap(), census_class(&g));
    for e in g.edges() {
        let want = census_class(&resolve(&g, &e).unwrap()) - census_class(&g);
        assert_eq!(resolution_difference(&g, &e).unwrap(), want, "{e}");
    }
}

#[test]
fn point_counts_match_classes() {
    let mut rng = seeded(10);
    let mut graphs: Vec<LooseGraph> = corpus_graphs().into_iter().map(|(_, g)| g).collect();
    graphs.extend((0..60).map(|_| random_loose_graph(&mut rng, 8, 12, 3, 6, true)));
    for g in graphs {
        let class = class_polynomial(&g).unwrap();
        for q in [2u64, 3, 5] {
            assert_eq!(BigInt::from(count_points(&g, q).unwrap()), class.eval_i64(q as i64), "{g}q={q}");
        }
    }
}

#[test]
fn counts_add_over_disjoint_unions() {
    let a = gen(Family::Complete(4));
    let b = lg("edge x y\nloose y\nfree");
    let u = a.disjoint_union(&b).unwrap();
    for q in [2, 3, 5] {
        assert_eq!(count_points(&u, q).unwrap(), count_points(&a, q).unwrap() + count_points(&b, q).unwrap());
    }
}

#[test]
fn loose_family_grid() {
    for m in 0..=4usize {
        for a in 0..=3usize {
            for b in 0..=3usize {
                for (name, edges, pg) in common::common_structures(m) {
                    let joined = family(m, a, b, true, &edges);
                    let want = l(a + m + 1) + l(b + m + 1) - l(m + 1) + l(m) + pg.clone();
                    assert_eq!(class_polynomial(&joined).unwrap(), want, "joined m={m} a={a} b={b} {name}");
                    let split = family(m, a, b, false, &edges);
                    let lm1 = IntPolynomial::x_minus_one();
                    let want = l(a + m) + l(b + m) + &pg * &lm1 * &lm1 + pg.clone();
                    assert_eq!(class_polynomial(&split).unwrap(), want, "split m={m} a={a} b={b} {name}");
                }
            }
        }
    }
}

#[test]
fn plain_family_formulas() {
    for m in 0..=4usize {
        let mi = m as i64;
        assert_eq!(class_polynomial(&family(m, 0, 0, true, &[])).unwrap(), l(m + 1) + l(m) + c(mi));
        let resolved = family(m, 1, 1, false, &[]);
        let want = l(m + 1) * c(2) + IntPolynomial::monomial(mi, 2) - c(2 * mi) * IntPolynomial::x_minus_one();
        assert_eq!(class_polynomial(&resolved).unwrap(), want);
    }
}

fn cone_parts(tag: &str) -> Vec<(String, LooseGraph)> {
    let rn = |g: LooseGraph| g.relabel(|v| format!("{tag}{v}"));
    vec![
        ("vertex".into(), rn(lg("vertex a"))),
        ("line".into(), rn(lg("edge a b"))),
        ("triangle".into(), rn(gen(Family::Complete(3)))),
        ("affine plane".into(), rn(gen(Family::Affine(2)))),
        ("path3".into(), rn(gen(Family::Path(3)))),
        ("loose line".into(), rn(lg("edge a b\nloose a"))),
        ("loose path3".into(), rn(lg("edge a b\nedge b c\nloose a\nloose b"))),
    ]
}

#[test]
fn cone_formula_pairs() {
    let e = ClassEngine::new();
    for (n1, g1) in cone_parts("p") {
        for (n2, g2) in cone_parts("q") {
            let joined = cone(&g1, &g2).unwrap();
            let want = census_class(&joined);
            assert_eq!(cone_class(&e, &g1, &g2).unwrap(), want, "{n1} / {n2}");
            assert_eq!(e.class(&joined).unwrap(), want, "{n1} / {n2}");
        }
    }
}

#[test]
fn local_formulas() {
    let e = ClassEngine::new();
    let mut rng = seeded(11);
    let mut pairs: Vec<(LooseGraph, Edge)> = corpus_graphs()
        .into_iter()
        .flat_map(|(_, g)| {
            let edges: Vec<Edge> = g.edges().collect();
            edges.into_iter().map(move |x| (g.clone(), x))
        })
        .collect();
    for _ in 0..200 {
        let g = random_loose_graph(&mut rng, 8, 14, 0, 8, false);
        let first = g.edges().next();
        if let Some(x) = first {
            pairs.push((g, x));
        }
    }
    let mut exact_cases = 0;
    for (g, x) in pairs {
        let before = local_before(&e, &g, &x).unwrap();
        let after = local_after(&e, &g, &x).unwrap();
        assert_eq!(&after - &before, resolution_difference(&g, &x).unwrap(), "{g}{x}");
        assert_eq!(local_difference(&e, &g, &x).unwrap(), &after - &before);
        if is_local_formula_exact(&g, &x).unwrap() {
            let ball = local_ball(&g, &x).unwrap();
            assert_eq!(before, census_class(&ball), "{g}{x}");
            assert_eq!(after, census_class(&resolve(&ball, &x).unwrap()), "{g}{x}");
            exact_cases += 1;
        }
    }
    assert!(exact_cases > 50);
}

#[test]
fn tree_choice_does_not_matter() {
    let mut graphs: Vec<LooseGraph> = corpus_graphs().into_iter().map(|(_, g)| g).collect();
    let mut rng = seeded(12);
    graphs.extend((0..20).map(|_| random_loose_graph(&mut rng, 8, 12, 3, 6, false)));
    for g in graphs {
        let base = ClassEngine::new().class(&g).unwrap();
        for seed in 1..=6 {
            let e = ClassEngine::with_tree_choice(TreeChoice::Shuffled(seed));
            assert_eq!(e.class(&g).unwrap(), base, "{g}seed {seed}");
        }
    }
}

#[test]
fn random_trees() {
    let mut rng = seeded(13);
    for _ in 0..200 {
        let n = 1 + (rand::Rng::gen_range(&mut rng, 0..10));
        let t = random_loose_tree(&mut rng, n, 4);
        let class = tree_class(&t).unwrap();
        assert_eq!(class, census_class(&t), "{t}");
        if t.max_degree() > 0 {
            assert_eq!(tree_zeta_closed_form(&t).unwrap(), f1_zeta(&class), "{t}");
        }
    }
}

#[test]
fn ihara_routes_agree() {
    let mut graphs: Vec<LooseGraph> = common::corpus::references().into_iter().map(|r| r.graph).collect();
    graphs.extend([gen(Family::Cycle(5)), lg("edge a x\nedge a y\nedge a z\nedge b x\nedge b y\nedge b z\nedge c x\nedge c y\nedge c z")]);
    let mut rng = seeded(14);
    graphs.extend((0..20).map(|_| random_ihara_graph(&mut rng, 8)));
    for g in graphs {
        let bh = ihara_inverse(&g).unwrap();
        assert_eq!(bh, edge_matrix_inverse(&g).unwrap(), "{g}");
        assert_eq!(bh, ihara_by_interpolation(&g), "{g}");
        assert_eq!(bh.degree(), Some(2 * g.edge_count()));
        assert_eq!(bh.coeff(0), BigInt::from(1));
    }
}

#[test]
fn bareiss_matches_interpolation() {
    for r in common::corpus::references() {
        let m = bass_hashimoto_matrix(&r.graph);
        assert_eq!(m.det().unwrap(), det_by_interpolation(&m), "{}", r.name);
    }
}
