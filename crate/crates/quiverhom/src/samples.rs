//! Ready-made algebras used by the examples, the test suites, and the
//! `reproduce` scenarios.

use crate::algebra::{build_quotient, FDAlgebra, DEFAULT_IDEAL_CAP};
use crate::field::FieldSpec;
use crate::quiver::{Path, PathExpr, Quiver};

/// The ground field as a one-vertex algebra.
pub fn ground_field_algebra(field: FieldSpec) -> FDAlgebra {
    let q = Quiver::new(vec!["1".into()], vec![]).unwrap();
    build_quotient(&q, &[], 2, field).unwrap()
}

/// k[x]/(x²): one vertex, one loop, relation x².
pub fn dual_numbers(field: FieldSpec) -> FDAlgebra {
    let q = Quiver::new(vec!["1".into()], vec![("x".into(), 0, 0)]).unwrap();
    let x2 = Path::from_labels(&q, &["x", "x"]).unwrap();
    build_quotient(&q, &[PathExpr::monomial(x2, &field)], 8, field).unwrap()
}

/// k[x]/(x^n).
pub fn truncated_polynomials(field: FieldSpec, n: usize) -> FDAlgebra {
    assert!(n >= 2);
    let q = Quiver::new(vec!["1".into()], vec![("x".into(), 0, 0)]).unwrap();
    let xn = Path {
        source: 0,
        arrows: vec![0; n],
    };
    build_quotient(&q, &[PathExpr::monomial(xn, &field)], n + 4, field).unwrap()
}

/// k[x,y]/(x², y²): one vertex, loops x and y, relations x², y², xy − yx.
pub fn commutative_square(field: FieldSpec) -> FDAlgebra {
    let q = Quiver::new(
        vec!["1".into()],
        vec![("x".into(), 0, 0), ("y".into(), 0, 0)],
    )
    .unwrap();
    let term = |labels: &[&str]| Path::from_labels(&q, labels).unwrap();
    let rels = vec![
        PathExpr::monomial(term(&["x", "x"]), &field),
        PathExpr::monomial(term(&["y", "y"]), &field),
        PathExpr::from_terms(vec![
            (field.one(), term(&["x", "y"])),
            (field.from_integer(-1), term(&["y", "x"])),
        ]),
    ];
    build_quotient(&q, &rels, 8, field).unwrap()
}

/// The cyclic quiver 1 → 2 → 3 → 1 with arrows a, b, c.
pub fn example_four_quiver() -> Quiver {
    Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![
            ("a".into(), 0, 1),
            ("b".into(), 1, 2),
            ("c".into(), 2, 0),
        ],
    )
    .unwrap()
}

/// Relations ρ = {bacba, cbac} in function order, i.e. the traversal words
/// a b c a b and c a b c.
pub fn example_four_relations(q: &Quiver, field: &FieldSpec) -> Vec<PathExpr> {
    vec![
        PathExpr::monomial(Path::from_labels(q, &["a", "b", "c", "a", "b"]).unwrap(), field),
        PathExpr::monomial(Path::from_labels(q, &["c", "a", "b", "c"]).unwrap(), field),
    ]
}

/// The 14-dimensional Nakayama algebra kQ/⟨bacba, cbac⟩.
pub fn example_four(field: FieldSpec) -> FDAlgebra {
    let q = example_four_quiver();
    let rels = example_four_relations(&q, &field);
    build_quotient(&q, &rels, DEFAULT_IDEAL_CAP, field).unwrap()
}

/// Path algebra of the linear quiver A_n (1 → 2 → … → n), no relations.
pub fn linear_quiver_algebra(field: FieldSpec, n: usize) -> FDAlgebra {
    assert!(n >= 1);
    let vertices = (1..=n).map(|i| i.to_string()).collect();
    let arrows = (1..n)
        .map(|i| (format!("a{i}"), i - 1, i))
        .collect();
    let q = Quiver::new(vertices, arrows).unwrap();
    build_quotient(&q, &[], n + 2, field).unwrap()
}

/// Semisimple k × k: two vertices, no arrows.
pub fn two_points(field: FieldSpec) -> FDAlgebra {
    let q = Quiver::new(vec!["1".into(), "2".into()], vec![]).unwrap();
    build_quotient(&q, &[], 2, field).unwrap()
}

/// A connected non-Gorenstein Nakayama algebra: the 2-cycle with the single
/// relation uvu, Kupisch series (3, 4), dimension 7. The simple at vertex 1
/// has a periodic syzygy, so its projective dimension is certified infinite,
/// and the regular module has infinite injective dimension.
pub fn non_gorenstein_nakayama(field: FieldSpec) -> FDAlgebra {
    let q = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![("u".into(), 0, 1), ("v".into(), 1, 0)],
    )
    .unwrap();
    let uvu = Path::from_labels(&q, &["u", "v", "u"]).unwrap();
    build_quotient(&q, &[PathExpr::monomial(uvu, &field)], 8, field).unwrap()
}

/// The endomorphism algebra of the running example's tilting module,
/// presented by hand: arrows g: 1→2, d: 2→1, h: 2→3, t: 3→1 with relations
/// gdg, hg, dgd − th, gt (function order).
pub fn worked_endo_presentation(field: FieldSpec) -> FDAlgebra {
    let q = Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![
            ("g".into(), 0, 1),
            ("d".into(), 1, 0),
            ("h".into(), 1, 2),
            ("t".into(), 2, 0),
        ],
    )
    .unwrap();
    let walk = |labels: &[&str]| Path::from_labels(&q, labels).unwrap();
    let rels = vec![
        PathExpr::monomial(walk(&["g", "d", "g"]), &field),
        PathExpr::monomial(walk(&["g", "h"]), &field),
        PathExpr::from_terms(vec![
            (field.one(), walk(&["d", "g", "d"])),
            (field.from_integer(-1), walk(&["h", "t"])),
        ]),
        PathExpr::monomial(walk(&["t", "g"]), &field),
    ];
    build_quotient(&q, &rels, DEFAULT_IDEAL_CAP, field).unwrap()
}

/// Graded dimensions of k[s,t,u]/(s², t², su, st) with deg s = 0, t = 1,
/// u = 2, counted by direct monomial enumeration. The product t·u^k
/// survives in every odd degree.
pub fn hh_dual_numbers_presentation_dims(cap: usize) -> Vec<usize> {
    let mut dims = vec![0usize; cap + 1];
    for a in 0..=1usize {
        for b in 0..=1usize {
            for c in 0..=(cap / 2) {
                if a == 1 && c >= 1 {
                    continue; // su = 0
                }
                if a == 1 && b == 1 {
                    continue; // st = 0
                }
                let deg = b + 2 * c;
                if deg <= cap {
                    dims[deg] += 1;
                }
            }
        }
    }
    dims
}
