//! Published reference values for small named graphs.

use lgz_core::loosegraph::{Family, LooseGraph};
use lgz_core::polyring::IntPolynomial;

use super::gen;

pub struct Reference {
    pub name: &'static str,
    pub graph: LooseGraph,
    pub class: IntPolynomial,
    pub zeta_inverse: &'static str,
    pub ihara_inverse: IntPolynomial,
}

fn poly(text: &str, symbol: &str) -> IntPolynomial {
    IntPolynomial::parse_with(text, symbol).unwrap()
}

pub fn k4_minus_edge() -> LooseGraph {
    let mut g = gen(Family::Complete(4));
    g.remove_edge("v0", "v1").unwrap();
    g
}

pub fn references() -> Vec<Reference> {
    vec![
        Reference {
            name: "K4",
            graph: gen(Family::Complete(4)),
            class: poly("L^3 + L^2 + L + 1", "L"),
            zeta_inverse: "t*(t-1)*(t-2)*(t-3)",
            ihara_inverse: poly("16u^12 - 24u^10 - 16u^9 - 3u^8 + 24u^7 + 16u^6 - 6u^4 - 8u^3 + 1", "u"),
        },
        Reference {
            name: "K4 minus an edge",
            graph: k4_minus_edge(),
            class: poly("L^3 + L^2 + 2", "L"),
            zeta_inverse: "t^2*(t-2)*(t-3)",
            ihara_inverse: poly("-4u^10 + u^8 + 4u^7 + 4u^6 - 2u^4 - 4u^3 + 1", "u"),
        },
        Reference {
            name: "K5",
            graph: gen(Family::Complete(5)),
            class: poly("L^4 + L^3 + L^2 + L + 1", "L"),
            zeta_inverse: "t*(t-1)*(t-2)*(t-3)*(t-4)",
            ihara_inverse: poly(
                "-243u^20 + 1080u^18 + 180u^17 - 1710u^16 - 776u^15 + 870u^14 + 1200u^13 \
                 + 505u^12 - 660u^11 - 708u^10 - 140u^9 + 165u^8 + 240u^7 + 70u^6 - 24u^5 \
                 - 30u^4 - 20u^3 + 1",
                "u",
            ),
        },
        Reference {
            name: "J(4,2)",
            graph: gen(Family::Johnson(4, 2)),
            class: poly("6L^4 - 12L^3 + 20L^2 - 16L + 8", "L"),
            zeta_inverse: "t^8*(t-2)^20*(t-4)^6/((t-1)^16*(t-3)^12)",
            ihara_inverse: poly(
                "729u^24 - 3888u^22 - 432u^21 + 7938u^20 + 2160u^19 - 6912u^18 - 4032u^17 \
                 + 639u^16 + 3008u^15 + 2976u^14 + 96u^13 - 1412u^12 - 1248u^11 - 384u^10 \
                 + 320u^9 + 327u^8 + 192u^7 + 16u^6 - 48u^5 - 30u^4 - 16u^3 + 1",
                "u",
            ),
        },
        Reference {
            name: "hexahedron",
            graph: gen(Family::Hexahedron),
            class: poly("8L^3 - 12L + 12", "L"),
            zeta_inverse: "t^12*(t-3)^8/(t-1)^12",
            ihara_inverse: poly(
                "256u^24 - 768u^22 + 480u^20 + 400u^18 - 183u^16 - 384u^14 \
                 + 68u^12 + 144u^10 + 30u^8 - 32u^6 - 12u^4 + 1",
                "u",
            ),
        },
    ]
}

/// The surgery table for K5: tree class, then `(delta, running)` per
/// unresolve step.
pub fn k5_table() -> (IntPolynomial, Vec<(IntPolynomial, IntPolynomial)>) {
    let rows = [
        ("2L^2 - 3L + 1", "5L^4 - 2L^2 - L + 3"),
        ("L^3 - L^2", "5L^4 - L^3 - L^2 - L + 3"),
        ("2L^3 - 2L^2 - L + 1", "5L^4 - 3L^3 + L^2 + 2"),
        ("L^4 - 2L^3 + 2L^2 - L", "4L^4 - L^3 - L^2 + L + 2"),
        ("L^4 - 2L^2 + L", "3L^4 - L^3 + L^2 + 2"),
        ("2L^4 - 2L^3 - L + 1", "L^4 + L^3 + L^2 + L + 1"),
    ];
    (
        poly("5L^4 - 4L + 4", "L"),
        rows.iter().map(|(d, r)| (poly(d, "L"), poly(r, "L"))).collect(),
    )
}

/// Graphs used for cross-checks beyond the named references.
pub fn extra_graphs() -> Vec<(&'static str, LooseGraph)> {
    vec![
        ("triangle", gen(Family::Cycle(3))),
        ("square", gen(Family::Cycle(4))),
        ("pentagon", gen(Family::Cycle(5))),
        ("plane", gen(Family::Projective(2))),
        ("star 4 2", gen(Family::Star(4, 2))),
        ("affine 3", gen(Family::Affine(3))),
        ("path 4", gen(Family::Path(4))),
        ("K3,3", super::lg("edge a x\nedge a y\nedge a z\nedge b x\nedge b y\nedge b z\nedge c x\nedge c y\nedge c z")),
        ("house with loose edges", super::lg("edge a b\nedge b c\nedge c d\nedge d a\nedge a e\nedge b e\nloose c\nloose e\nloose e")),
        ("two components and a torus", super::lg("edge a b\nedge b c\nedge c a\nedge x y\nloose y\nfree")),
    ]
}
