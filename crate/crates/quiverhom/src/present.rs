//! Quiver-with-relations presentations of abstract split basic algebras,
//! and the corner / idempotent-quotient constructions built on them.
//!
//! Input is a structure-constant algebra with a complete set of primitive
//! orthogonal idempotents and a radical basis. Arrows lift a basis of
//! rad/rad² between idempotent classes; relations are minimal generators of
//! the kernel of the induced surjection from the path algebra, found
//! lengthwise. The result is an `FDAlgebra` (path basis) together with the
//! change of basis to the input coordinates.

use std::collections::BTreeMap;

use crate::algebra::{build_quotient, FDAlgebra};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::ExactMatrix;
use crate::quiver::{PathExpr, Quiver};
use crate::span::{Echelon, PathRegistry};

/// An algebra given by raw structure constants, with enough split-basic
/// structure to present it by quiver and relations.
pub struct RawAlgebra {
    pub field: FieldSpec,
    pub dim: usize,
    /// Dense product of basis elements: mul[i][j] = b_i · b_j (j acts first).
    pub mul: Vec<Vec<Vec<Scalar>>>,
    /// Complete set of primitive orthogonal idempotents.
    pub idempotents: Vec<Vec<Scalar>>,
    /// Basis of the Jacobson radical.
    pub radical: Vec<Vec<Scalar>>,
}

impl RawAlgebra {
    pub fn mul_elem(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, t) in self.mul[i][j].iter().enumerate() {
                    if !f.is_zero(t) {
                        out[k] = f.add(&out[k], &f.mul(&c, t));
                    }
                }
            }
        }
        out
    }
}

/// A presented copy of a raw algebra: the quiver-quotient `FDAlgebra` plus
/// the data of the isomorphism back to raw coordinates.
pub struct PresentedAlgebra {
    pub algebra: FDAlgebra,
    /// Raw coordinates of each arrow's image.
    pub arrow_images: Vec<Vec<Scalar>>,
    /// Columns express the presented basis paths in raw coordinates.
    pub basis_in_raw: ExactMatrix,
    /// Inverse change of basis: raw coordinates to path-basis coordinates.
    pub raw_in_basis: ExactMatrix,
}

impl PresentedAlgebra {
    /// Transports a raw element into path-basis coordinates.
    pub fn to_presented(&self, raw: &[Scalar]) -> Vec<Scalar> {
        self.raw_in_basis.apply(raw).expect("dimensions agree")
    }

    /// Transports a presented element back to raw coordinates.
    pub fn to_raw(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.basis_in_raw.apply(v).expect("dimensions agree")
    }
}

const PRESENT_PATH_BUDGET: usize = 200_000;

/// Presents a raw split basic algebra by quiver and relations.
pub fn present_raw(raw: &RawAlgebra, cap: usize) -> Result<PresentedAlgebra> {
    let f = raw.field;
    let n_idem = raw.idempotents.len();

    // rad² spanning set.
    let rad2: Vec<Vec<Scalar>> = raw
        .radical
        .iter()
        .flat_map(|r| raw.radical.iter().map(|s| raw.mul_elem(r, s)))
        .collect();

    // Arrows i → j lift a basis of e_j (rad/rad²) e_i.
    let mut arrow_specs: Vec<(usize, usize)> = Vec::new();
    let mut arrow_images: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n_idem {
        for j in 0..n_idem {
            let sandwich = |v: &Vec<Scalar>| {
                raw.mul_elem(&raw.idempotents[j], &raw.mul_elem(v, &raw.idempotents[i]))
            };
            let r2: Vec<Vec<Scalar>> = rad2.iter().map(&sandwich).collect();
            let r1: Vec<Vec<Scalar>> = raw.radical.iter().map(&sandwich).collect();
            let cols: Vec<Vec<Scalar>> = r2.iter().chain(r1.iter()).cloned().collect();
            if cols.is_empty() {
                continue;
            }
            let m = ExactMatrix::from_fn(f, raw.dim, cols.len(), |r, c| cols[c][r].clone());
            for c in m.independent_columns() {
                if c >= r2.len() {
                    arrow_specs.push((i, j));
                    arrow_images.push(cols[c].clone());
                }
            }
        }
    }

    let quiver = Quiver::new(
        (1..=n_idem).map(|v| v.to_string()).collect(),
        arrow_specs
            .iter()
            .enumerate()
            .map(|(k, &(i, j))| (format!("a{}", k + 1), i, j))
            .collect(),
    )?;

    // Lengthwise kernel of the surjection π: kQ' → raw.
    let mut reg = PathRegistry::new(&quiver);
    let mut images: Vec<Vec<Scalar>> = (0..n_idem).map(|v| raw.idempotents[v].clone()).collect();
    let mut relations: Vec<PathExpr> = Vec::new();
    let mut ideal = Echelon::new(f);
    let mut certified = None;

    for len in 1..=cap {
        reg.grow(&quiver, PRESENT_PATH_BUDGET)?;
        // incremental π images: extend by one arrow on the left
        for id in reg.layer(len) {
            let p = &reg.paths[id];
            let mut shorter = p.clone();
            let last = shorter.arrows.pop().unwrap();
            let prev = reg.index[&shorter];
            let img = raw.mul_elem(&arrow_images[last], &images[prev]);
            images.push(img);
        }
        // pad existing relations: products with frame exactly `len`
        for rel_idx in 0..relations.len() {
            let rel = relations[rel_idx].clone();
            let (src, tgt) = rel.validate(&quiver, &f)?;
            let m = rel.max_len();
            if m > len {
                continue;
            }
            for left_len in 0..=(len - m) {
                let right_len = len - m - left_len;
                let lefts = reg.ids_in_layer(left_len, Some(tgt), None, &quiver);
                let rights = reg.ids_in_layer(right_len, None, Some(src), &quiver);
                for &lp in &lefts {
                    for &rp in &rights {
                        let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
                        for (c, mono) in &rel.terms {
                            let mid = mono
                                .compose_after(&quiver, &reg.paths[rp])
                                .expect("endpoints checked");
                            let full = reg.paths[lp]
                                .compose_after(&quiver, &mid)
                                .expect("endpoints checked");
                            let idx = reg.index[&full];
                            crate::span::merge(&f, &mut map, idx, c.clone());
                        }
                        let vec: Vec<(usize, Scalar)> = map.into_iter().collect();
                        ideal.insert(&vec);
                    }
                }
            }
        }
        // new kernel generators at this layer
        let upto = reg.layer(len).end;
        let pi = ExactMatrix::from_fn(f, raw.dim, upto, |r, c| images[c][r].clone());
        for k in pi.kernel_basis() {
            let sv: Vec<(usize, Scalar)> = k
                .iter()
                .enumerate()
                .filter(|(_, c)| !f.is_zero(c))
                .map(|(i, c)| (i, c.clone()))
                .collect();
            if ideal.reduce(&sv).is_empty() {
                continue;
            }
            let expr = PathExpr::from_terms(
                sv.iter()
                    .map(|(i, c)| (c.clone(), reg.paths[*i].clone()))
                    .collect(),
            );
            debug_assert!(expr.min_len() >= 2, "kernel generators are admissible");
            relations.push(expr);
            ideal.insert(&sv);
        }
        // certification: this layer entirely inside the ideal
        if reg.layer(len).all(|id| ideal.reduces_to_zero(id)) {
            certified = Some(len);
            break;
        }
    }

    if certified.is_none() {
        return Err(Error::CapTooSmall(cap));
    }

    let algebra = build_quotient(&quiver, &relations, cap, f)?;
    if algebra.dim() != raw.dim {
        return Err(Error::CapTooSmall(cap));
    }

    // Change of basis: π images of the surviving basis paths.
    let basis_in_raw = ExactMatrix::from_fn(f, raw.dim, raw.dim, |r, c| {
        let id = reg.index[&algebra.basis[c]];
        images[id][r].clone()
    });
    let raw_in_basis = basis_in_raw
        .inverse()
        .ok_or_else(|| Error::Invalid("presentation map is not bijective".into()))?;

    Ok(PresentedAlgebra {
        algebra,
        arrow_images,
        basis_in_raw,
        raw_in_basis,
    })
}

/// Re-presents an existing quiver algebra through the generic machinery.
/// Mostly a self-check: dimensions and Cartan data must survive the trip.
pub fn present_by_quiver(a: &FDAlgebra, cap: usize) -> Result<PresentedAlgebra> {
    let raw = raw_from_algebra(a);
    present_raw(&raw, cap)
}

pub fn raw_from_algebra(a: &FDAlgebra) -> RawAlgebra {
    let f = a.field;
    let d = a.dim();
    let mul: Vec<Vec<Vec<Scalar>>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let mut v = vec![f.zero(); d];
                    for (k, c) in a.mul_basis(i, j) {
                        v[*k] = c.clone();
                    }
                    v
                })
                .collect()
        })
        .collect();
    let idempotents = a
        .vertex_idempotent
        .iter()
        .map(|&i| a.basis_elem(i))
        .collect();
    let radical = a
        .radical_basis_ids()
        .into_iter()
        .map(|i| a.basis_elem(i))
        .collect();
    RawAlgebra {
        field: f,
        dim: d,
        mul,
        idempotents,
        radical,
    }
}

/// The corner algebra eAe for e a sum of distinct vertex idempotents,
/// presented by quiver and relations. Also returns the algebra basis ids
/// spanning the corner inside A.
pub fn corner(a: &FDAlgebra, e: &[Scalar], cap: usize) -> Result<(PresentedAlgebra, Vec<usize>)> {
    let verts = a.as_vertex_idempotent_sum(e)?;
    corner_at_vertices(a, &verts, cap)
}

pub fn corner_at_vertices(
    a: &FDAlgebra,
    verts: &[usize],
    cap: usize,
) -> Result<(PresentedAlgebra, Vec<usize>)> {
    let f = a.field;
    let in_set = |v: usize| verts.contains(&v);
    let ids: Vec<usize> = (0..a.dim())
        .filter(|&i| in_set(a.source_of(i)) && in_set(a.target_of(i)))
        .collect();
    if ids.is_empty() {
        return Err(Error::Invalid("corner at the zero idempotent".into()));
    }
    let pos: std::collections::HashMap<usize, usize> =
        ids.iter().enumerate().map(|(n, &g)| (g, n)).collect();
    let d = ids.len();
    let mul: Vec<Vec<Vec<Scalar>>> = ids
        .iter()
        .map(|&i| {
            ids.iter()
                .map(|&j| {
                    let mut v = vec![f.zero(); d];
                    for (k, c) in a.mul_basis(i, j) {
                        let p = pos
                            .get(k)
                            .expect("corner closed under multiplication");
                        v[*p] = c.clone();
                    }
                    v
                })
                .collect()
        })
        .collect();
    let idempotents: Vec<Vec<Scalar>> = verts
        .iter()
        .map(|&v| {
            let mut x = vec![f.zero(); d];
            x[pos[&a.vertex_idempotent[v]]] = f.one();
            x
        })
        .collect();
    let radical: Vec<Vec<Scalar>> = ids
        .iter()
        .enumerate()
        .filter(|(_, &g)| !a.basis[g].is_empty())
        .map(|(n, _)| {
            let mut x = vec![f.zero(); d];
            x[n] = f.one();
            x
        })
        .collect();
    let raw = RawAlgebra {
        field: f,
        dim: d,
        mul,
        idempotents,
        radical,
    };
    Ok((present_raw(&raw, cap)?, ids))
}

/// Quotient A/⟨e⟩ by the two-sided ideal generated by a sum of distinct
/// vertex idempotents, presented by quiver and relations. Returns the
/// presented quotient and, for bookkeeping, the surviving vertices of A.
pub fn quotient_by_idempotent(
    a: &FDAlgebra,
    e: &[Scalar],
    cap: usize,
) -> Result<(PresentedAlgebra, Vec<usize>)> {
    let verts = a.as_vertex_idempotent_sum(e)?;
    if verts.is_empty() {
        let pres = present_by_quiver(a, cap)?;
        return Ok((pres, (0..a.num_vertices()).collect()));
    }
    if verts.len() == a.num_vertices() {
        return Err(Error::ZeroQuotient);
    }
    let f = a.field;
    let d = a.dim();
    // Ideal span AeA = span{ b_i · b_j : the shared endpoint lies in e }.
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for &v in &verts {
        let ev = a.vertex_idempotent[v];
        for i in 0..d {
            if a.source_of(i) != v {
                continue;
            }
            for j in 0..d {
                if a.target_of(j) != v {
                    continue;
                }
                let mut row = vec![f.zero(); d];
                for (k, c) in a.mul_basis(i, j) {
                    row[*k] = f.add(&row[*k], c);
                }
                rows.push(row);
            }
        }
        let mut row = vec![f.zero(); d];
        row[ev] = f.one();
        rows.push(row);
    }
    let w = ExactMatrix::from_rows(f, rows);
    let (rref, pivots) = w.rref();
    if pivots.len() == d {
        return Err(Error::ZeroQuotient);
    }
    let survivors: Vec<usize> = (0..d).filter(|i| !pivots.contains(i)).collect();
    let spos: std::collections::HashMap<usize, usize> =
        survivors.iter().enumerate().map(|(n, &g)| (g, n)).collect();
    // reduction of a basis element modulo the ideal, in survivor coords
    let reduce = |idx: usize| -> Vec<Scalar> {
        let mut out = vec![f.zero(); survivors.len()];
        if let Some(p) = spos.get(&idx) {
            out[*p] = f.one();
            return out;
        }
        let row = pivots.iter().position(|&c| c == idx).unwrap();
        for (n, &g) in survivors.iter().enumerate() {
            out[n] = f.neg(rref.at(row, g));
        }
        out
    };
    let qd = survivors.len();
    let mul: Vec<Vec<Vec<Scalar>>> = survivors
        .iter()
        .map(|&i| {
            survivors
                .iter()
                .map(|&j| {
                    let mut v = vec![f.zero(); qd];
                    for (k, c) in a.mul_basis(i, j) {
                        let red = reduce(*k);
                        for (n, r) in red.iter().enumerate() {
                            if !f.is_zero(r) {
                                v[n] = f.add(&v[n], &f.mul(c, r));
                            }
                        }
                    }
                    v
                })
                .collect()
        })
        .collect();
    let mut kept_vertices = Vec::new();
    let mut idempotents = Vec::new();
    for v in 0..a.num_vertices() {
        if verts.contains(&v) {
            continue;
        }
        let img = reduce(a.vertex_idempotent[v]);
        if img.iter().any(|c| !f.is_zero(c)) {
            kept_vertices.push(v);
            idempotents.push(img);
        }
    }
    let radical: Vec<Vec<Scalar>> = {
        // image of rad A spans the radical of the quotient
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        for g in a.radical_basis_ids() {
            if spos.contains_key(&g) || pivots.contains(&g) {
                cols.push(reduce(g));
            }
        }
        let m = ExactMatrix::from_fn(f, qd, cols.len(), |r, c| cols[c][r].clone());
        m.independent_columns()
            .into_iter()
            .map(|c| cols[c].clone())
            .collect()
    };
    let raw = RawAlgebra {
        field: f,
        dim: qd,
        mul,
        idempotents,
        radical,
    };
    Ok((present_raw(&raw, cap)?, kept_vertices))
}

/// Dense idempotent element from a vertex subset.
pub fn vertex_sum_idempotent(a: &FDAlgebra, verts: &[usize]) -> Vec<Scalar> {
    let mut e = vec![a.field.zero(); a.dim()];
    for &v in verts {
        e[a.vertex_idempotent[v]] = a.field.one();
    }
    e
}

/// Radical of an abstract algebra over a field of characteristic zero (or
/// characteristic above the dimension): the kernel of the trace form of the
/// regular representation, certified nilpotent.
pub fn radical_of_raw(field: FieldSpec, dim: usize, mul: &dyn Fn(usize, usize) -> Vec<Scalar>) -> Result<Vec<Vec<Scalar>>> {
    let p = field.characteristic();
    if p != 0 && (p as usize) <= dim {
        return Err(Error::SmallCharacteristic(format!(
            "trace-form radical needs characteristic 0 or > {dim}"
        )));
    }
    // Left regular representation trace: tr(L_{b_i b_j}).
    let mut left_trace = vec![field.zero(); dim];
    // trace of L_{b_k} = Σ_i coefficient of b_i in b_k · b_i
    for k in 0..dim {
        let mut t = field.zero();
        for i in 0..dim {
            let prod = mul(k, i);
            t = field.add(&t, &prod[i]);
        }
        left_trace[k] = t;
    }
    let gram = ExactMatrix::from_fn(field, dim, dim, |i, j| {
        let prod = mul(i, j);
        let mut t = field.zero();
        for (k, c) in prod.iter().enumerate() {
            if !field.is_zero(c) {
                t = field.add(&t, &field.mul(c, &left_trace[k]));
            }
        }
        t
    });
    Ok(gram.kernel_basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn representing_example_four_round_trips() {
        let a = samples::example_four(FieldSpec::Rationals);
        let pres = present_by_quiver(&a, 12).unwrap();
        assert_eq!(pres.algebra.dim(), 14);
        assert_eq!(pres.algebra.cartan_matrix(), a.cartan_matrix());
        assert_eq!(pres.algebra.quiver.arrows.len(), 3);
        pres.algebra.verify_associativity().unwrap();
    }


    #[test]
    fn ground_field_presents_as_a_bare_vertex() {
        let k = samples::ground_field_algebra(FieldSpec::Rationals);
        let pres = present_by_quiver(&k, 4).unwrap();
        assert_eq!(pres.algebra.dim(), 1);
        assert!(pres.algebra.quiver.arrows.is_empty());
        assert!(pres.algebra.relations.is_empty());
    }

    #[test]
    fn corner_at_full_identity_is_whole_algebra() {
        let a = samples::example_four(FieldSpec::Rationals);
        let e = a.one();
        let (pres, ids) = corner(&a, &e, 12).unwrap();
        assert_eq!(ids.len(), 14);
        assert_eq!(pres.algebra.dim(), 14);
    }

    #[test]
    fn corner_at_vertex_one_counts_returning_paths() {
        let a = samples::example_four(FieldSpec::Rationals);
        let e = vertex_sum_idempotent(&a, &[0]);
        let (pres, ids) = corner(&a, &e, 12).unwrap();
        // paths 1 → 1 surviving ρ: e_1 and cba
        assert_eq!(ids.len(), 2);
        assert_eq!(pres.algebra.dim(), 2);
        // one vertex, one loop, loop² = 0
        assert_eq!(pres.algebra.quiver.arrows.len(), 1);
    }

    #[test]
    fn corner_at_two_vertices() {
        let a = samples::example_four(FieldSpec::Rationals);
        let e = vertex_sum_idempotent(&a, &[0, 1]);
        let (pres, ids) = corner(&a, &e, 12).unwrap();
        // surviving paths with both endpoints in {1, 2}:
        // e1, a, cba, acba, e2, cb, acb
        assert_eq!(ids.len(), 7);
        assert_eq!(pres.algebra.dim(), 7);
        pres.algebra.verify_associativity().unwrap();
    }

    #[test]
    fn corner_rejects_non_idempotent() {
        let a = samples::example_four(FieldSpec::Rationals);
        let mut e = a.one();
        e[3] = a.field.one(); // add an arrow component: no longer idempotent
        assert!(matches!(corner(&a, &e, 12), Err(Error::NotIdempotent)));
    }

    #[test]
    fn quotient_by_zero_and_one() {
        let a = samples::example_four(FieldSpec::Rationals);
        let zero = vec![a.field.zero(); a.dim()];
        let (pres, kept) = quotient_by_idempotent(&a, &zero, 12).unwrap();
        assert_eq!(pres.algebra.dim(), a.dim());
        assert_eq!(kept.len(), 3);
        assert!(matches!(
            quotient_by_idempotent(&a, &a.one(), 12),
            Err(Error::ZeroQuotient)
        ));
    }

    #[test]
    fn quotient_of_a2_by_sink_vertex() {
        let a = samples::linear_quiver_algebra(FieldSpec::Rationals, 2);
        let e = vertex_sum_idempotent(&a, &[1]);
        let (pres, kept) = quotient_by_idempotent(&a, &e, 8).unwrap();
        assert_eq!(pres.algebra.dim(), 1);
        assert_eq!(kept, vec![0]);
    }

    #[test]
    fn corner_dim_split_inequality() {
        // dim eAe + dim (1-e)A(1-e) ≤ dim A, equality iff no cross paths.
        let a = samples::example_four(FieldSpec::Rationals);
        let (p1, _) = corner_at_vertices(&a, &[0], 12).unwrap();
        let (p2, _) = corner_at_vertices(&a, &[1, 2], 12).unwrap();
        assert!(p1.algebra.dim() + p2.algebra.dim() <= a.dim());

        let s = samples::two_points(FieldSpec::Rationals);
        let (q1, _) = corner_at_vertices(&s, &[0], 4).unwrap();
        let (q2, _) = corner_at_vertices(&s, &[1], 4).unwrap();
        assert_eq!(q1.algebra.dim() + q2.algebra.dim(), s.dim());
    }

    #[test]
    fn presented_basis_change_is_multiplicative() {
        let a = samples::example_four(FieldSpec::Rationals);
        let pres = present_by_quiver(&a, 12).unwrap();
        // π(x · y) = π(x) · π(y) on a few basis pairs
        let b = &pres.algebra;
        for i in [0usize, 3, 5] {
            for j in [1usize, 4, 6] {
                let lhs = pres.to_raw(&{
                    let mut v = vec![a.field.zero(); b.dim()];
                    for (k, c) in b.mul_basis(i, j) {
                        v[*k] = c.clone();
                    }
                    v
                });
                let rhs = raw_from_algebra(&a)
                    .mul_elem(&pres.to_raw(&b.basis_elem(i)), &pres.to_raw(&b.basis_elem(j)));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
