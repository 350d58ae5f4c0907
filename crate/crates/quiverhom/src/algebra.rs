//! Finite-dimensional algebras presented as admissible quotients of path
//! algebras.
//!
//! Every `FDAlgebra` carries a quiver presentation: the basis is a set of
//! surviving paths, multiplication is path concatenation reduced modulo the
//! relation ideal, and the trivial paths are a complete set of primitive
//! orthogonal idempotents. Derived constructions (opposite, tensor, corner,
//! idempotent quotients, presented endomorphism algebras) all return the
//! same shape, so modules are always quiver representations.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::quiver::{Path, PathExpr, Quiver};
use crate::span::{merge, Echelon, PathRegistry};

pub type SparseVec = Vec<(usize, Scalar)>;

/// Hard bound on enumerated paths; hitting it means the input is almost
/// certainly not an admissible presentation of a finite-dimensional algebra.
const PATH_BUDGET: usize = 400_000;

pub const DEFAULT_IDEAL_CAP: usize = 30;

#[derive(Clone)]
pub struct FDAlgebra {
    pub field: FieldSpec,
    pub quiver: Quiver,
    pub relations: Vec<PathExpr>,
    /// Surviving paths; index order is (length, discovery order).
    pub basis: Vec<Path>,
    /// `mul[i * dim + j]` expands basis_i · basis_j (function order: j acts
    /// first) over the basis.
    mul: Vec<SparseVec>,
    /// Basis index of the trivial path at each vertex.
    pub vertex_idempotent: Vec<usize>,
}

impl FDAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mul[i * self.dim() + j]
    }

    /// Dense product of two dense coefficient vectors.
    pub fn mul_elem(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, t) in self.mul_basis(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(&c, t));
                }
            }
        }
        out
    }

    pub fn one(&self) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        for &i in &self.vertex_idempotent {
            v[i] = self.field.one();
        }
        v
    }

    pub fn basis_elem(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn source_of(&self, basis_idx: usize) -> usize {
        self.basis[basis_idx].source
    }

    pub fn target_of(&self, basis_idx: usize) -> usize {
        self.basis[basis_idx].target(&self.quiver)
    }

    /// Basis ids of paths starting at `v`, in basis order (spans Ae_v).
    pub fn paths_from(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.source_of(i) == v).collect()
    }

    /// Basis ids of paths ending at `v`, in basis order (spans e_vA).
    pub fn paths_into(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.target_of(i) == v).collect()
    }

    /// Basis index of the length-one path of an arrow.
    pub fn arrow_basis_index(&self, arrow: usize) -> usize {
        let p = Path::of_arrow(&self.quiver, arrow);
        self.basis
            .iter()
            .position(|b| *b == p)
            .expect("arrows always survive an admissible quotient")
    }

    /// Basis ids of positive-length paths: a basis of the Jacobson radical.
    pub fn radical_basis_ids(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.basis[i].is_empty()).collect()
    }

    /// Cartan matrix: entry (i, j) counts basis paths from vertex j to
    /// vertex i, i.e. dim e_i A e_j.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut c = vec![vec![0usize; n]; n];
        for b in &self.basis {
            c[b.target(&self.quiver)][b.source] += 1;
        }
        c
    }

    /// Exact associativity check over all basis triples.
    pub fn verify_associativity(&self) -> Result<()> {
        let f = &self.field;
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_basis(i, j).clone();
                for k in 0..d {
                    let jk = self.mul_basis(j, k);
                    let mut left: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (t, c) in &ij {
                        for (m, e) in self.mul_basis(*t, k) {
                            let v = f.mul(c, e);
                            merge(f, &mut left, *m, v);
                        }
                    }
                    let mut right: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (t, c) in jk {
                        for (m, e) in self.mul_basis(i, *t) {
                            let v = f.mul(c, e);
                            merge(f, &mut right, *m, v);
                        }
                    }
                    if left != right {
                        return Err(Error::Invalid(format!(
                            "associativity fails on basis triple ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks e·e = e for a dense element.
    pub fn is_idempotent_elem(&self, e: &[Scalar]) -> bool {
        self.mul_elem(e, e) == e
    }

    /// Interprets a dense element as a sum of distinct vertex idempotents;
    /// returns the vertex set.
    pub fn as_vertex_idempotent_sum(&self, e: &[Scalar]) -> Result<Vec<usize>> {
        if !self.is_idempotent_elem(e) {
            return Err(Error::NotIdempotent);
        }
        let f = &self.field;
        let mut verts = Vec::new();
        for (i, c) in e.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let v = self
                .vertex_idempotent
                .iter()
                .position(|&idx| idx == i)
                .ok_or(Error::UnsupportedIdempotent)?;
            if !f.is_one(c) {
                return Err(Error::UnsupportedIdempotent);
            }
            verts.push(v);
        }
        Ok(verts)
    }

    /// The opposite algebra: same labels, reversed arrows, reversed basis
    /// paths in the same index order. Applying it twice restores the
    /// original entry for entry.
    pub fn opposite(&self) -> FDAlgebra {
        let rq = self.quiver.reversed();
        let basis: Vec<Path> = self.basis.iter().map(|p| p.reversed(&self.quiver)).collect();
        let d = self.dim();
        let mut mul = vec![SparseVec::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                // x ·_op y = y · x, and reversal keeps basis indices.
                mul[i * d + j] = self.mul_basis(j, i).clone();
            }
        }
        FDAlgebra {
            field: self.field,
            quiver: rq,
            relations: self
                .relations
                .iter()
                .map(|r| r.reversed(&self.quiver))
                .collect(),
            basis,
            mul,
            vertex_idempotent: self.vertex_idempotent.clone(),
        }
    }

    pub fn tensor(&self, other: &FDAlgebra) -> Result<(FDAlgebra, TensorLayout)> {
        tensor(self, other)
    }

    /// The enveloping algebra A ⊗ A^op together with its layout.
    pub fn enveloping(&self) -> Result<(FDAlgebra, TensorLayout)> {
        tensor(self, &self.opposite())
    }

    pub fn render_basis(&self) -> Vec<String> {
        self.basis.iter().map(|p| p.display(&self.quiver)).collect()
    }
}

// ---------------------------------------------------------------------------
// Quotient construction.
// ---------------------------------------------------------------------------

/// Builds kQ/⟨rels⟩ as an `FDAlgebra`.
///
/// The ideal span is accumulated lengthwise. At each length ℓ the products
/// p·r·q whose frame (|p| + max monomial length + |q|) is exactly ℓ are
/// inserted — these are genuine ideal elements, no truncation involved — and
/// the construction stops at the first layer whose paths all reduce to zero.
/// That certifies J^ℓ ⊆ ⟨rels⟩, after which the quotient is completed inside
/// the truncated path algebra. If no layer dies by `cap`, the quotient is not
/// certified finite-dimensional and an error is returned.
pub fn build_quotient(q: &Quiver, rels: &[PathExpr], cap: usize, field: FieldSpec) -> Result<FDAlgebra> {
    let mut endpoints = Vec::new();
    for r in rels {
        let e = r.validate(q, &field)?;
        if r.min_len() < 2 {
            return Err(Error::NotAdmissible(format!(
                "relation `{}` has a component of length < 2",
                r.display(q)
            )));
        }
        if r.max_len() > cap {
            return Err(Error::NotAdmissible(format!(
                "relation `{}` is longer than the cap {}",
                r.display(q),
                cap
            )));
        }
        endpoints.push(e);
    }

    let mut reg = PathRegistry::new(q);
    let mut ech = Echelon::new(field);
    let mut certified_at = None;

    for len in 1..=cap {
        reg.grow(q, PATH_BUDGET)?;
        // Insert products of frame exactly `len`.
        for (r, &(src, tgt)) in rels.iter().zip(&endpoints) {
            let m = r.max_len();
            if m > len {
                continue;
            }
            for left_len in 0..=(len - m) {
                let right_len = len - m - left_len;
                let lefts = reg.ids_in_layer(left_len, Some(tgt), None, q);
                let rights = reg.ids_in_layer(right_len, None, Some(src), q);
                for &lp in &lefts {
                    for &rp in &rights {
                        let vec = product_vector(&reg, q, &reg.paths[lp].clone(), r, &reg.paths[rp].clone(), None, &field);
                        ech.insert(&vec);
                    }
                }
            }
        }
        let layer = reg.layer(len);
        let mut dead = true;
        for id in layer {
            if !ech.reduces_to_zero(id) {
                dead = false;
                break;
            }
        }
        if dead {
            certified_at = Some(len);
            break;
        }
    }

    let nil_len = certified_at.ok_or_else(|| {
        Error::NotFiniteDimensional(format!(
            "paths of length {cap} do not all lie in the relation ideal; \
             not admissible or cap too small"
        ))
    })?;

    assemble_quotient(q, rels, &endpoints, reg, nil_len, field)
}

/// Builds the vector of p · r · q over global path ids, dropping monomials
/// whose total length exceeds `max_len` when given.
fn product_vector(
    reg: &PathRegistry,
    q: &Quiver,
    left: &Path,
    rel: &PathExpr,
    right: &Path,
    max_len: Option<usize>,
    field: &FieldSpec,
) -> SparseVec {
    let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (c, mono) in &rel.terms {
        let total = left.len() + mono.len() + right.len();
        if let Some(m) = max_len {
            if total > m {
                continue;
            }
        }
        let mid = mono.compose_after(q, right).expect("endpoints checked");
        let full = left.compose_after(q, &mid).expect("endpoints checked");
        let id = *reg.index.get(&full).expect("registered");
        merge(field, &mut map, id, c.clone());
    }
    map.into_iter().collect()
}

fn assemble_quotient(
    q: &Quiver,
    rels: &[PathExpr],
    endpoints: &[(usize, usize)],
    reg: PathRegistry,
    nil_len: usize,
    field: FieldSpec,
) -> Result<FDAlgebra> {
    // Complete the ideal span inside the truncated path algebra kQ/J^nil_len:
    // every product p·r·q, keeping only monomials of length < nil_len.
    let mut ech = Echelon::new(field);
    for (r, &(src, tgt)) in rels.iter().zip(endpoints) {
        let min = r.min_len();
        for left_len in 0..nil_len {
            if left_len + min >= nil_len {
                break;
            }
            for right_len in 0..(nil_len - left_len - min) {
                let lefts = reg.ids_in_layer(left_len, Some(tgt), None, q);
                let rights = reg.ids_in_layer(right_len, None, Some(src), q);
                for &lp in &lefts {
                    for &rp in &rights {
                        let vec = product_vector(
                            &reg,
                            q,
                            &reg.paths[lp].clone(),
                            r,
                            &reg.paths[rp].clone(),
                            Some(nil_len - 1),
                            &field,
                        );
                        if !vec.is_empty() {
                            ech.insert(&vec);
                        }
                    }
                }
            }
        }
    }

    let living: Vec<usize> = (0..reg.layer(nil_len - 1).end)
        .filter(|&id| !ech.is_pivot(id))
        .collect();
    let global_to_new: HashMap<usize, usize> =
        living.iter().enumerate().map(|(n, &g)| (g, n)).collect();
    let basis: Vec<Path> = living.iter().map(|&g| reg.paths[g].clone()).collect();
    let dim = basis.len();

    // Reduction of a global path id to quotient-basis coordinates.
    let mut reduction_cache: HashMap<usize, SparseVec> = HashMap::new();
    let mut reduce_global = |g: usize, ech: &Echelon| -> SparseVec {
        if let Some(v) = reduction_cache.get(&g) {
            return v.clone();
        }
        let red = ech.reduce(&vec![(g, field.one())]);
        let out: SparseVec = red
            .into_iter()
            .map(|(idx, c)| (global_to_new[&idx], c))
            .collect();
        reduction_cache.insert(g, out.clone());
        out
    };

    let mut mul = vec![SparseVec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let Some(concat) = basis[i].compose_after(q, &basis[j]) else {
                continue;
            };
            if concat.len() >= nil_len {
                continue; // certified zero
            }
            let g = *reg.index.get(&concat).expect("registered");
            mul[i * dim + j] = reduce_global(g, &ech);
        }
    }

    let vertex_idempotent: Vec<usize> = (0..q.vertices.len())
        .map(|v| {
            basis
                .iter()
                .position(|p| p.is_empty() && p.source == v)
                .expect("vertex idempotents survive admissible quotients")
        })
        .collect();

    Ok(FDAlgebra {
        field,
        quiver: q.clone(),
        relations: rels.to_vec(),
        basis,
        mul,
        vertex_idempotent,
    })
}

// ---------------------------------------------------------------------------
// Tensor products.
// ---------------------------------------------------------------------------

/// Index bookkeeping for A ⊗ B: how vertices, arrows, and basis elements of
/// the factors embed into the product data.
#[derive(Clone, Debug)]
pub struct TensorLayout {
    pub dim_a: usize,
    pub dim_b: usize,
    pub verts_a: usize,
    pub verts_b: usize,
    pub arrows_a: usize,
    pub arrows_b: usize,
}

impl TensorLayout {
    pub fn vertex(&self, u: usize, v: usize) -> usize {
        u * self.verts_b + v
    }

    pub fn decode_vertex(&self, k: usize) -> (usize, usize) {
        (k / self.verts_b, k % self.verts_b)
    }

    /// Product-quiver arrow index of (a-arrow ia at b-vertex v).
    pub fn arrow_a(&self, ia: usize, v: usize) -> usize {
        ia * self.verts_b + v
    }

    /// Product-quiver arrow index of (a-vertex u, b-arrow ib).
    pub fn arrow_b(&self, u: usize, ib: usize) -> usize {
        self.arrows_a * self.verts_b + u * self.arrows_b + ib
    }

    pub fn basis(&self, i: usize, j: usize) -> usize {
        i * self.dim_b + j
    }

    pub fn decode_basis(&self, k: usize) -> (usize, usize) {
        (k / self.dim_b, k % self.dim_b)
    }
}

pub fn tensor(a: &FDAlgebra, b: &FDAlgebra) -> Result<(FDAlgebra, TensorLayout)> {
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    let field = a.field;
    let (na, nb) = (a.num_vertices(), b.num_vertices());
    let layout = TensorLayout {
        dim_a: a.dim(),
        dim_b: b.dim(),
        verts_a: na,
        verts_b: nb,
        arrows_a: a.quiver.arrows.len(),
        arrows_b: b.quiver.arrows.len(),
    };

    let mut vertices = Vec::new();
    for u in 0..na {
        for v in 0..nb {
            vertices.push(format!("{}.{}", a.quiver.vertices[u], b.quiver.vertices[v]));
        }
    }
    let mut arrows = Vec::new();
    for (ia, arr) in a.quiver.arrows.iter().enumerate() {
        for v in 0..nb {
            debug_assert_eq!(arrows.len(), layout.arrow_a(ia, v));
            arrows.push((
                format!("{}.{}", arr.label, b.quiver.vertices[v]),
                layout.vertex(arr.source, v),
                layout.vertex(arr.target, v),
            ));
        }
    }
    for u in 0..na {
        for (ib, arr) in b.quiver.arrows.iter().enumerate() {
            debug_assert_eq!(arrows.len(), layout.arrow_b(u, ib));
            arrows.push((
                format!("{}.{}", a.quiver.vertices[u], arr.label),
                layout.vertex(u, arr.source),
                layout.vertex(u, arr.target),
            ));
        }
    }
    let quiver = Quiver::new(vertices, arrows)?;

    // Canonical basis path of p ⊗ q: walk the a-part at b-position s(q),
    // then the b-part at a-position t(p).
    let lift_pair = |p: &Path, qq: &Path| -> Path {
        let mut arrs = Vec::with_capacity(p.len() + qq.len());
        for &ia in &p.arrows {
            arrs.push(layout.arrow_a(ia, qq.source));
        }
        let pt = p.target(&a.quiver);
        for &ib in &qq.arrows {
            arrs.push(layout.arrow_b(pt, ib));
        }
        Path {
            source: layout.vertex(p.source, qq.source),
            arrows: arrs,
        }
    };

    let dim = a.dim() * b.dim();
    let mut basis = Vec::with_capacity(dim);
    for i in 0..a.dim() {
        for j in 0..b.dim() {
            basis.push(lift_pair(&a.basis[i], &b.basis[j]));
        }
    }

    let mut mul = vec![SparseVec::new(); dim * dim];
    for i1 in 0..a.dim() {
        for j1 in 0..b.dim() {
            let row = layout.basis(i1, j1);
            for i2 in 0..a.dim() {
                let pa = a.mul_basis(i1, i2);
                if pa.is_empty() {
                    continue;
                }
                for j2 in 0..b.dim() {
                    let pb = b.mul_basis(j1, j2);
                    if pb.is_empty() {
                        continue;
                    }
                    let col = layout.basis(i2, j2);
                    let mut entry = SparseVec::new();
                    for (r, cr) in pa {
                        for (s, cs) in pb {
                            entry.push((layout.basis(*r, *s), field.mul(cr, cs)));
                        }
                    }
                    entry.sort_by_key(|(k, _)| *k);
                    mul[row * dim + col] = entry;
                }
            }
        }
    }

    // Presentation relations: lifted relations of both factors plus the
    // commutation squares.
    let mut relations = Vec::new();
    for r in &a.relations {
        for v in 0..nb {
            relations.push(PathExpr::from_terms(
                r.terms
                    .iter()
                    .map(|(c, p)| (c.clone(), lift_pair(p, &Path::trivial(v))))
                    .collect(),
            ));
        }
    }
    for r in &b.relations {
        for u in 0..na {
            relations.push(PathExpr::from_terms(
                r.terms
                    .iter()
                    .map(|(c, p)| (c.clone(), lift_pair(&Path::trivial(u), p)))
                    .collect(),
            ));
        }
    }
    for (ia, arr_a) in a.quiver.arrows.iter().enumerate() {
        for (ib, arr_b) in b.quiver.arrows.iter().enumerate() {
            let start = layout.vertex(arr_a.source, arr_b.source);
            let b_first = Path {
                source: start,
                arrows: vec![
                    layout.arrow_b(arr_a.source, ib),
                    layout.arrow_a(ia, arr_b.target),
                ],
            };
            let a_first = Path {
                source: start,
                arrows: vec![
                    layout.arrow_a(ia, arr_b.source),
                    layout.arrow_b(arr_a.target, ib),
                ],
            };
            relations.push(PathExpr::from_terms(vec![
                (field.one(), b_first),
                (field.from_integer(-1), a_first),
            ]));
        }
    }

    let vertex_idempotent: Vec<usize> = (0..na * nb)
        .map(|k| {
            let (u, v) = layout.decode_vertex(k);
            layout.basis(a.vertex_idempotent[u], b.vertex_idempotent[v])
        })
        .collect();

    // vertex_idempotent indexes into `basis`, which is ordered by pairs, and
    // trivial-path pairs are trivial paths of the product quiver.
    debug_assert!(vertex_idempotent
        .iter()
        .all(|&i| basis[i].is_empty()));

    Ok((
        FDAlgebra {
            field,
            quiver,
            relations,
            basis,
            mul,
            vertex_idempotent,
        },
        layout,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn dual_numbers() {
        let a = samples::dual_numbers(FieldSpec::Rationals);
        assert_eq!(a.dim(), 2);
        a.verify_associativity().unwrap();
    }

    #[test]
    fn commutative_square_dim_four() {
        let a = samples::commutative_square(FieldSpec::Rationals);
        assert_eq!(a.dim(), 4);
        a.verify_associativity().unwrap();
        // basis 1, x, y, xy is forced
        assert_eq!(a.render_basis(), vec!["e_1", "x", "y", "yx"]);
    }

    #[test]
    fn example_four_dim_fourteen() {
        let a = samples::example_four(FieldSpec::Rationals);
        assert_eq!(a.dim(), 14);
        a.verify_associativity().unwrap();
        let c = a.cartan_matrix();
        // columns (2,2,1), (1,2,2), (1,1,2)
        assert_eq!(
            c,
            vec![vec![2, 1, 1], vec![2, 2, 1], vec![1, 2, 2]]
        );
    }

    #[test]
    fn vertex_idempotents_are_complete_and_orthogonal() {
        for alg in [
            samples::example_four(FieldSpec::Rationals),
            samples::commutative_square(FieldSpec::Rationals),
            samples::two_points(FieldSpec::Rationals),
        ] {
            let f = &alg.field;
            let one = alg.one();
            let mut sum = vec![f.zero(); alg.dim()];
            for (i, &ei) in alg.vertex_idempotent.iter().enumerate() {
                let e = alg.basis_elem(ei);
                assert_eq!(alg.mul_elem(&e, &e), e, "e_{i} idempotent");
                for &ej in alg.vertex_idempotent.iter().skip(i + 1) {
                    let e2 = alg.basis_elem(ej);
                    let prod = alg.mul_elem(&e, &e2);
                    assert!(prod.iter().all(|c| f.is_zero(c)), "orthogonality");
                }
                for (k, c) in e.iter().enumerate() {
                    sum[k] = f.add(&sum[k], c);
                }
            }
            assert_eq!(sum, one, "idempotents sum to the identity");
        }
    }

    #[test]
    fn quotient_dim_independent_of_relation_order() {
        let q = samples::example_four_quiver();
        let f = FieldSpec::Rationals;
        let r1 = samples::example_four_relations(&q, &f);
        let mut r2 = r1.clone();
        r2.reverse();
        let a1 = build_quotient(&q, &r1, DEFAULT_IDEAL_CAP, f).unwrap();
        let a2 = build_quotient(&q, &r2, DEFAULT_IDEAL_CAP, f).unwrap();
        assert_eq!(a1.dim(), a2.dim());
    }

    #[test]
    fn opposite_is_involutive() {
        let a = samples::example_four(FieldSpec::Rationals);
        let op = a.opposite();
        op.verify_associativity().unwrap();
        let back = op.opposite();
        assert_eq!(back.basis, a.basis);
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(back.mul_basis(i, j), a.mul_basis(i, j));
            }
        }
    }

    #[test]
    fn opposite_of_commutative_is_same_table() {
        let a = samples::commutative_square(FieldSpec::Rationals);
        let op = a.opposite();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(op.mul_basis(i, j), a.mul_basis(i, j));
            }
        }
    }

    #[test]
    fn tensor_dims_multiply() {
        let f = FieldSpec::Rationals;
        let a = samples::dual_numbers(f);
        let (t, _) = tensor(&a, &a).unwrap();
        assert_eq!(t.dim(), 4);
        t.verify_associativity().unwrap();

        let ex4 = samples::example_four(f);
        let (env, _) = ex4.enveloping().unwrap();
        assert_eq!(env.dim(), 196);
    }

    #[test]
    fn tensor_with_ground_field_is_identity_on_dims() {
        let f = FieldSpec::Rationals;
        let a = samples::example_four(f);
        let k = samples::ground_field_algebra(f);
        let (t, _) = tensor(&a, &k).unwrap();
        assert_eq!(t.dim(), a.dim());
        assert_eq!(t.cartan_matrix(), a.cartan_matrix());
    }

    #[test]
    fn tensor_relations_present_the_same_algebra() {
        // Rebuilding the tensor algebra from its stored presentation gives
        // the same dimension.
        let f = FieldSpec::Rationals;
        let a = samples::dual_numbers(f);
        let (t, _) = tensor(&a, &a).unwrap();
        let rebuilt = build_quotient(&t.quiver, &t.relations, DEFAULT_IDEAL_CAP, f).unwrap();
        assert_eq!(rebuilt.dim(), t.dim());
    }

    #[test]
    fn non_admissible_relation_rejected() {
        let q = Quiver::new(
            vec!["1".into()],
            vec![("x".into(), 0, 0)],
        )
        .unwrap();
        let f = FieldSpec::Rationals;
        let x = Path::from_labels(&q, &["x"]).unwrap();
        let rel = PathExpr::monomial(x, &f);
        assert!(matches!(
            build_quotient(&q, &[rel], 10, f),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn infinite_dimensional_rejected() {
        let q = Quiver::new(vec!["1".into()], vec![("x".into(), 0, 0)]).unwrap();
        let f = FieldSpec::Rationals;
        assert!(matches!(
            build_quotient(&q, &[], 8, f),
            Err(Error::NotFiniteDimensional(_))
        ));
    }

    #[test]
    fn mixed_length_ideal_certification_is_sound() {
        // x^2 - x^3 generates a non-admissible ideal (x^2 survives in the
        // quotient, which is infinite-dimensional as an admissible datum);
        // the construction must refuse rather than silently truncate.
        let q = Quiver::new(vec!["1".into()], vec![("x".into(), 0, 0)]).unwrap();
        let f = FieldSpec::Rationals;
        let x2 = Path::from_labels(&q, &["x", "x"]).unwrap();
        let x3 = Path::from_labels(&q, &["x", "x", "x"]).unwrap();
        let rel = PathExpr::from_terms(vec![
            (f.one(), x2),
            (f.from_integer(-1), x3),
        ]);
        assert!(matches!(
            build_quotient(&q, &[rel], 12, f),
            Err(Error::NotFiniteDimensional(_))
        ));
    }
}
