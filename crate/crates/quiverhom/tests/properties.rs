//! Randomized, seeded property suites. Every generator is driven by a
//! fixed-seed ChaCha stream (or proptest with its default deterministic
//! config), so failures are reproducible; all assertions are exact.

use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quiverhom::algebra::FDAlgebra;
use quiverhom::derived::{
    assoc_check, hyper_hom_dims, proj_replacement, BddComplex, BimoduleComplex,
};
use quiverhom::field::{FieldSpec, Scalar};
use quiverhom::hochschild::{phi_action, HochschildRing};
use quiverhom::homology::{
    ext_computation, ext_dims, min_proj_resolution, yoneda_compose, ProjTerm,
};
use quiverhom::matrix::ExactMatrix;
use quiverhom::module::{hom_basis, simple, FDModule, ModuleMap};
use quiverhom::samples;
use quiverhom::tilting::left_add_approximation;

fn rational_matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-9i64..10, c), r)
            .prop_map(move |rows| ExactMatrix::from_i64(FieldSpec::Rationals, rows))
    })
}

proptest! {
    #[test]
    fn rank_nullity_over_q(m in rational_matrix()) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        for v in m.kernel_basis() {
            let out = m.apply(&v).unwrap();
            prop_assert!(out.iter().all(|x| FieldSpec::Rationals.is_zero(x)));
        }
    }

    #[test]
    fn solve_right_round_trips(m in rational_matrix(), b in proptest::collection::vec(-9i64..10, 1..5)) {
        let f = FieldSpec::Rationals;
        if b.len() != m.rows() {
            return Ok(());
        }
        let rhs: Vec<Scalar> = b.iter().map(|&x| f.from_integer(x)).collect();
        if let Some(x) = m.solve_right(&rhs).unwrap() {
            prop_assert_eq!(m.apply(&x).unwrap(), rhs);
        }
    }
}

#[test]
fn rank_nullity_over_prime_fields() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..60 {
        let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
        let f = FieldSpec::prime(p).unwrap();
        let rows = rng.gen_range(1..6);
        let cols = rng.gen_range(1..6);
        let m = ExactMatrix::from_fn(f, rows, cols, |_, _| {
            f.from_integer(rng.gen_range(0..p) as i64)
        });
        assert_eq!(m.rank() + m.kernel_basis().len(), cols);
    }
    println!("property rank-nullity over F_p: pass");
}

// ---------------------------------------------------------------------------
// Random module machinery.
// ---------------------------------------------------------------------------

fn random_scalar(f: &FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    f.from_integer(rng.gen_range(-2i64..=2))
}

/// A random finite-dimensional module: the cokernel of a random map between
/// random projectives (every module arises this way).
fn random_module(a: &Arc<FDAlgebra>, rng: &mut ChaCha8Rng, max_gens: usize) -> FDModule {
    let nv = a.num_vertices();
    let gens = |rng: &mut ChaCha8Rng| -> Vec<usize> {
        let count = rng.gen_range(1..=max_gens);
        (0..count).map(|_| rng.gen_range(0..nv)).collect()
    };
    let src = ProjTerm::new(a, gens(rng));
    let tgt = ProjTerm::new(a, gens(rng));
    let homs = hom_basis(&src.module, &tgt.module).unwrap();
    let mut map = ModuleMap::zero(src.module.clone(), tgt.module.clone());
    for h in &homs {
        map = map.add(&h.scale(&random_scalar(&a.field, rng))).unwrap();
    }
    map.cokernel().0
}

#[test]
fn resolutions_are_exact_and_minimal() {
    let algebras = [
        Arc::new(samples::example_four(FieldSpec::Rationals)),
        Arc::new(samples::commutative_square(FieldSpec::Rationals)),
        Arc::new(samples::non_gorenstein_nakayama(FieldSpec::Rationals)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let mut count = 0;
    for a in &algebras {
        for _ in 0..6 {
            let m = random_module(a, &mut rng, 2);
            if m.is_zero() {
                continue;
            }
            let res = min_proj_resolution(&m, 4);
            res.verify_exactness().unwrap();
            res.verify_minimality().unwrap();
            count += 1;
        }
    }
    println!("property resolution exactness/minimality: pass ({count} instances)");
}

#[test]
fn ext_is_additive_in_both_arguments() {
    let a = Arc::new(samples::example_four(FieldSpec::Rationals));
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for _ in 0..8 {
        let m1 = random_module(&a, &mut rng, 2);
        let m2 = random_module(&a, &mut rng, 2);
        let n = random_module(&a, &mut rng, 2);
        let sum = FDModule::direct_sum(&[&m1, &m2]).unwrap();
        let lhs = ext_dims(&sum, &n, 3).unwrap();
        let r1 = ext_dims(&m1, &n, 3).unwrap();
        let r2 = ext_dims(&m2, &n, 3).unwrap();
        for i in 0..=3 {
            assert_eq!(lhs.0[i], r1.0[i] + r2.0[i], "first-argument additivity");
        }
        let rhs = ext_dims(&n, &sum, 3).unwrap();
        let s1 = ext_dims(&n, &m1, 3).unwrap();
        let s2 = ext_dims(&n, &m2, 3).unwrap();
        for i in 0..=3 {
            assert_eq!(rhs.0[i], s1.0[i] + s2.0[i], "second-argument additivity");
        }
    }
    println!("property Ext additivity: pass");
}

#[test]
fn yoneda_composition_is_associative() {
    // Ext*(S, S) over k[x]/(x²) is one-dimensional in every degree, but the
    // associativity check runs through genuinely different chain lifts.
    let a = Arc::new(samples::dual_numbers(FieldSpec::Rationals));
    let s = simple(&a, 0);
    let ext = ext_computation(&s, &s, 6).unwrap();
    let f = a.field;
    for p in 1..=2usize {
        for q in 1..=2usize {
            for r in 1..=2usize {
                let e1 = ext.rep_map(p, 0);
                let e2 = ext.rep_map(q, 0);
                let e3 = ext.rep_map(r, 0);
                // (e3 ∘ e2) ∘ e1
                let e32 = yoneda_compose(&ext.res, &ext.res, &e2, q, &e3, r).unwrap();
                let left = yoneda_compose(&ext.res, &ext.res, &e1, p, &e32, q + r).unwrap();
                // e3 ∘ (e2 ∘ e1)
                let e21 = yoneda_compose(&ext.res, &ext.res, &e1, p, &e2, q).unwrap();
                let right = yoneda_compose(&ext.res, &ext.res, &e21, p + q, &e3, r).unwrap();
                let lc = ext
                    .class_coords(p + q + r, &ext.map_to_coords(p + q + r, &left))
                    .unwrap();
                let rc = ext
                    .class_coords(p + q + r, &ext.map_to_coords(p + q + r, &right))
                    .unwrap();
                assert_eq!(lc, rc, "associativity at degrees ({p},{q},{r})");
                assert!(!f.is_zero(&lc[0]), "products of periodicity classes survive");
            }
        }
    }
    println!("property Yoneda associativity: pass");
}

#[test]
fn approximations_satisfy_factorization() {
    let a = Arc::new(samples::example_four(FieldSpec::Rationals));
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut checked = 0;
    for _ in 0..6 {
        let x = random_module(&a, &mut rng, 2);
        let m = random_module(&a, &mut rng, 2);
        if x.is_zero() || m.is_zero() {
            continue;
        }
        let fmap = left_add_approximation(&x, &m, 505).unwrap();
        // every map x → m factors through fmap
        let flat = |h: &ModuleMap| -> Vec<Scalar> {
            let mut out = Vec::new();
            for b in &h.vertex_maps {
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        out.push(b.at(i, j).clone());
                    }
                }
            }
            out
        };
        for g in hom_basis(&x, &m).unwrap() {
            let hs = hom_basis(&fmap.target, &m).unwrap();
            let cols: Vec<Vec<Scalar>> = hs
                .iter()
                .map(|h| flat(&h.compose(&fmap).unwrap()))
                .collect();
            let rhs = flat(&g);
            if rhs.iter().all(|c| a.field.is_zero(c)) {
                continue;
            }
            let mat = ExactMatrix::from_fn(a.field, rhs.len(), cols.len(), |i, j| {
                cols[j][i].clone()
            });
            assert!(
                mat.solve_right(&rhs).unwrap().is_some(),
                "factorization failed"
            );
            checked += 1;
        }
    }
    assert!(checked > 0);
    println!("property approximation factorization: pass ({checked} factorizations)");
}

#[test]
fn cup_products_are_graded_commutative_up_to_coboundary() {
    let f = FieldSpec::Rationals;
    for alg in [samples::dual_numbers(f), samples::commutative_square(f)] {
        let a = Arc::new(alg);
        let hh = HochschildRing::compute(&a, 4).unwrap();
        for p in 0..=2usize {
            for q in 0..=2usize {
                for i in 0..hh.dim(p) {
                    for j in 0..hh.dim(q) {
                        let mut x = vec![f.zero(); hh.dim(p)];
                        x[i] = f.one();
                        let mut y = vec![f.zero(); hh.dim(q)];
                        y[j] = f.one();
                        let xy = hh.cup(p, &x, q, &y).unwrap();
                        let yx = hh.cup(q, &y, p, &x).unwrap();
                        let sign = if p * q % 2 == 0 { 1 } else { -1 };
                        // class coordinates are canonical, so equality of
                        // classes is exactly "difference is a coboundary"
                        for (k, v) in xy.iter().enumerate() {
                            let expect = f.mul(&f.from_integer(sign), &yx[k]);
                            assert_eq!(
                                *v, expect,
                                "graded commutativity fails at degrees ({p},{q})"
                            );
                        }
                    }
                }
            }
        }
    }
    println!("property graded commutativity of cup: pass");
}

#[test]
fn phi_is_multiplicative_and_unital() {
    let f = FieldSpec::Rationals;
    let a = Arc::new(samples::dual_numbers(f));
    let hh = HochschildRing::compute(&a, 4).unwrap();
    let s = simple(&a, 0);
    let ext = ext_computation(&s, &s, 4).unwrap();

    // unital: the unit class acts as the identity on Ext^j(S, S)
    let unit = hh.cocycle(0, 0);
    let u = phi_action(&hh, &s, &ext, &unit, 0).unwrap();
    assert_eq!(u.len(), 1);
    // scale-normalize: φ(1) = λ id with λ = 1 because the unit cocycle is
    // the augmentation itself
    assert!(f.is_one(&u[0]), "φ(1) = id");

    // multiplicative: φ(e1 ⌣ e2) = φ(e1) ∘ φ(e2) for the stored generators
    for p in 1..=2usize {
        for q in 1..=2usize {
            let e1 = hh.cocycle(p, 0);
            let e2 = hh.cocycle(q, 0);
            let one_p = vec![f.one(); 1];
            let one_q = vec![f.one(); 1];
            let cup = hh.cup(p, &one_p, q, &one_q).unwrap();
            // left side: φ of the cup class
            let mut left = vec![f.zero(); ext.dim(p + q)];
            if !cup.is_empty() && !f.is_zero(&cup[0]) {
                let rep = hh.cocycle(p + q, 0);
                let act = phi_action(&hh, &s, &ext, &rep, p + q).unwrap();
                for (k, v) in act.iter().enumerate() {
                    left[k] = f.mul(&cup[0], v);
                }
            }
            // right side: compose the φ images
            let phi1 = phi_action(&hh, &s, &ext, &e1, p).unwrap();
            let phi2 = phi_action(&hh, &s, &ext, &e2, q).unwrap();
            let mut right = vec![f.zero(); ext.dim(p + q)];
            if !f.is_zero(&phi1[0]) && !f.is_zero(&phi2[0]) {
                let m1 = ext.rep_map(p, 0);
                let m2 = ext.rep_map(q, 0);
                let comp = yoneda_compose(&ext.res, &ext.res, &m2, q, &m1, p).unwrap();
                let cls = ext
                    .class_coords(p + q, &ext.map_to_coords(p + q, &comp))
                    .unwrap();
                for (k, v) in cls.iter().enumerate() {
                    right[k] = f.mul(&f.mul(&phi1[0], &phi2[0]), v);
                }
            }
            assert_eq!(left, right, "φ multiplicativity at degrees ({p},{q})");
        }
    }
    println!("property φ ring homomorphism: pass");
}

#[test]
fn derived_tensor_is_associative_on_random_instances() {
    let f = FieldSpec::Rationals;
    let a = Arc::new(samples::dual_numbers(f));
    let (env_alg, layout) = a.enveloping().unwrap();
    let env = Arc::new(env_alg);
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let mut instances = 0;
    while instances < 50 {
        let m1 = random_module(&env, &mut rng, 2);
        let m2 = random_module(&env, &mut rng, 2);
        let m3 = random_module(&env, &mut rng, 2);
        if m1.is_zero() || m2.is_zero() || m3.is_zero() {
            continue;
        }
        let mk = |m: FDModule, deg: i64| {
            BimoduleComplex::stalk(a.clone(), a.clone(), env.clone(), layout.clone(), m, deg)
        };
        let shift = rng.gen_range(-1..=1);
        let l = mk(m1, 0);
        let m = mk(m2, shift);
        let n = mk(m3, 0);
        let (ok, left, right) = assoc_check(&l, &m, &n, -2, 1).unwrap();
        assert!(ok, "associativity failed: {left:?} vs {right:?}");
        instances += 1;
    }
    println!("property derived-tensor associativity: pass ({instances} instances)");
}

#[test]
fn hyper_hom_invariant_under_quasi_isomorphism() {
    let a = Arc::new(samples::example_four(FieldSpec::Rationals));
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let mut count = 0;
    for _ in 0..6 {
        let m = random_module(&a, &mut rng, 2);
        let n = random_module(&a, &mut rng, 2);
        if m.is_zero() || n.is_zero() {
            continue;
        }
        let x = BddComplex::stalk(m, 0);
        let y = BddComplex::stalk(n, 0);
        let direct = hyper_hom_dims(&x, &y, -1, 2).unwrap();
        // replace x by an explicit quasi-isomorphic complex of projectives
        let px = proj_replacement(&x, -4).unwrap();
        let via_replacement = hyper_hom_dims(&px.as_complex(&a), &y, -1, 2).unwrap();
        assert_eq!(direct, via_replacement, "hyper-Hom changed under quasi-isomorphism");
        count += 1;
    }
    println!("property hyper-Hom quasi-isomorphism invariance: pass ({count} instances)");
}

#[test]
fn krull_schmidt_recovers_random_direct_sums() {
    use quiverhom::module::{decompose, is_isomorphic, projective};
    let a = Arc::new(samples::example_four(FieldSpec::Rationals));
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    let pool: Vec<FDModule> = (0..3)
        .map(|v| projective(&a, v))
        .chain((0..3).map(|v| simple(&a, v)))
        .collect();
    for _ in 0..8 {
        let count = rng.gen_range(2..5);
        let mut expected = vec![0usize; pool.len()];
        let mut parts: Vec<&FDModule> = Vec::new();
        for _ in 0..count {
            let k = rng.gen_range(0..pool.len());
            expected[k] += 1;
            parts.push(&pool[k]);
        }
        let sum = FDModule::direct_sum(&parts).unwrap();
        let decomposed = decompose(&sum, 910).unwrap();
        let mut recovered = vec![0usize; pool.len()];
        for (piece, mult) in &decomposed {
            let k = pool
                .iter()
                .position(|cand| is_isomorphic(piece, cand, 911).unwrap())
                .expect("summand matches the pool");
            recovered[k] += mult;
        }
        assert_eq!(recovered, expected, "multiset of indecomposables");
    }
    println!("property Krull–Schmidt recovery: pass");
}

#[test]
fn euler_characteristic_is_conserved_by_the_tilting_functor() {
    use quiverhom::endo::{endomorphism_algebra, EndoConvention};
    use quiverhom::module::projective;
    use quiverhom::tilting::check_tilting;
    let a = Arc::new(samples::example_four(FieldSpec::Rationals));
    let t = FDModule::direct_sum(&[
        &projective(&a, 0),
        &projective(&a, 1),
        &simple(&a, 1),
    ])
    .unwrap();
    let report = check_tilting(&t, 20, 808).unwrap();
    let endo = endomorphism_algebra(&t, EndoConvention::ActOnLeft, 14, 808).unwrap();
    for v in 0..3 {
        let m = BddComplex::stalk(simple(&a, v), 0);
        let fm = quiverhom::derived::rhom_tilting(&endo, &report, &m, 4).unwrap();
        // the image complex vanishes outside the window (guard), so the
        // alternating sums of term dims and homology dims agree
        let mut chi_terms = 0i64;
        let mut chi_hom = 0i64;
        for deg in fm.min_deg..=fm.max_deg() {
            let sign = if deg.rem_euclid(2) == 0 { 1 } else { -1 };
            chi_terms += sign * fm.module_at(deg).map_or(0, |mm| mm.total_dim() as i64);
            chi_hom += sign * fm.homology_dim(deg) as i64;
        }
        assert_eq!(chi_terms, chi_hom, "Euler characteristic of F(S_{})", v + 1);
    }
    println!("property Euler characteristic conservation: pass");
}

#[test]
fn ext_vanishes_above_finite_projective_dimension() {
    use quiverhom::homology::{projdim, ProjDimResult};
    let a = Arc::new(samples::example_four(FieldSpec::Rationals));
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    let mut checked = 0;
    for _ in 0..10 {
        let m = random_module(&a, &mut rng, 2);
        if m.is_zero() {
            continue;
        }
        if let ProjDimResult::Finite(d) = projdim(&m, 8, 1011) {
            let n = random_module(&a, &mut rng, 2);
            let cap = d + 3;
            let table = ext_dims(&m, &n, cap).unwrap();
            for i in (d + 1)..=cap {
                assert_eq!(table.0[i], 0, "Ext^{i} must vanish above pd = {d}");
            }
            checked += 1;
        }
    }
    assert!(checked > 0);
    println!("property Ext vanishing above pd: pass ({checked} instances)");
}

#[test]
fn phi_image_acts_centrally_on_ext() {
    // the Hochschild action graded-commutes with Yoneda multiplication:
    // φ(h) ∘ ξ = (−1)^{dj} ξ ∘ φ(h) as classes on Ext*(S, S)
    let a = Arc::new(samples::dual_numbers(FieldSpec::Rationals));
    let f = a.field;
    let hh = HochschildRing::compute(&a, 4).unwrap();
    let s = simple(&a, 0);
    let ext = ext_computation(&s, &s, 4).unwrap();
    for d in 1..=2usize {
        let eta = hh.cocycle(d, 0);
        let phi = phi_action(&hh, &s, &ext, &eta, d).unwrap();
        if f.is_zero(&phi[0]) {
            continue;
        }
        let phi_map = ext.rep_map(d, 0);
        for j in 1..=2usize {
            let xi = ext.rep_map(j, 0);
            let left = yoneda_compose(&ext.res, &ext.res, &xi, j, &phi_map, d).unwrap();
            let right = yoneda_compose(&ext.res, &ext.res, &phi_map, d, &xi, j).unwrap();
            let lc = ext.class_coords(d + j, &ext.map_to_coords(d + j, &left)).unwrap();
            let rc = ext.class_coords(d + j, &ext.map_to_coords(d + j, &right)).unwrap();
            let sign = if (d * j) % 2 == 0 { 1 } else { -1 };
            for (k, v) in lc.iter().enumerate() {
                let expect = f.mul(&f.from_integer(sign), &rc[k]);
                // scale by the φ coefficient on the left side only: both
                // sides already use the same representative, so compare
                // directly up to the graded sign
                assert_eq!(*v, expect, "central action fails at (d={d}, j={j})");
            }
        }
    }
    println!("property central φ-action: pass");
}
