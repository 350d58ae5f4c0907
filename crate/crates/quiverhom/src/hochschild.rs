//! Hochschild cohomology via minimal bimodule resolutions over the
//! enveloping algebra, cup products, the φ action on one-sided Ext, and the
//! even subalgebra selector.
//!
//! HH*(A) is computed as Ext over A^e of A by the generic resolution
//! machinery — no bar complex anywhere on the main path. The φ action
//! tensors the bimodule resolution with a one-sided module and transports
//! classes along a comparison map to its minimal resolution; the tensored
//! complex is again projective because k is a field.

use std::sync::Arc;

use crate::algebra::{FDAlgebra, TensorLayout};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::ExactMatrix;
use crate::homology::{
    ext_over_resolution, min_proj_resolution, ExtComputation, GradedDims, ProjTerm,
};
use crate::module::{FDModule, ModuleMap};

/// Degree filter for the (Fg) subalgebra H: the full ring or its even part
/// (all degrees in characteristic 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HSelector {
    Full,
    Even,
}

impl HSelector {
    pub fn includes(&self, field: &FieldSpec, degree: usize) -> bool {
        match self {
            HSelector::Full => true,
            HSelector::Even => field.characteristic() == 2 || degree.is_multiple_of(2),
        }
    }
}

pub struct HochschildRing {
    pub algebra: Arc<FDAlgebra>,
    pub env: Arc<FDAlgebra>,
    pub layout: TensorLayout,
    /// A as a left A^e-module.
    pub bimodule: FDModule,
    pub ext: ExtComputation,
    pub cap: usize,
}

impl HochschildRing {
    pub fn compute(a: &Arc<FDAlgebra>, cap: usize) -> Result<HochschildRing> {
        let (env_alg, layout) = a.enveloping()?;
        let env = Arc::new(env_alg);
        let bimodule = regular_bimodule(a, &env, &layout);
        bimodule.validate()?;
        let res = min_proj_resolution(&bimodule, cap + 1);
        let ext = ext_over_resolution(res, &bimodule, cap)?;
        Ok(HochschildRing {
            algebra: a.clone(),
            env,
            layout,
            bimodule,
            ext,
            cap,
        })
    }

    pub fn dims(&self) -> GradedDims {
        self.ext.dims()
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.ext.dim(degree)
    }

    /// Dimension of the center of A, solved independently of any
    /// resolution; must equal dim HH^0.
    pub fn center_dim(&self) -> usize {
        center_dim(&self.algebra)
    }

    /// Representative of a basis class as a bimodule map P_deg → A.
    pub fn cocycle(&self, degree: usize, idx: usize) -> ModuleMap {
        self.ext.rep_map(degree, idx)
    }

    /// Cup product of two classes given in basis coordinates; returns basis
    /// coordinates in degree p + q. Realized as Yoneda composition over the
    /// bimodule resolution.
    pub fn cup(
        &self,
        p: usize,
        x: &[Scalar],
        q: usize,
        y: &[Scalar],
    ) -> Result<Vec<Scalar>> {
        if p + q > self.cap {
            return Err(Error::DegreeOverflow {
                degree: p + q,
                cap: self.cap,
            });
        }
        let f = self.algebra.field;
        let out_dim = self.ext.dim(p + q);
        let mut out = vec![f.zero(); out_dim];
        for (i, ci) in x.iter().enumerate() {
            if f.is_zero(ci) {
                continue;
            }
            for (j, cj) in y.iter().enumerate() {
                if f.is_zero(cj) {
                    continue;
                }
                let e1 = self.cocycle(p, i);
                let e2 = self.cocycle(q, j);
                let comp = crate::homology::yoneda_compose(
                    &self.ext.res,
                    &self.ext.res,
                    &e2,
                    q,
                    &e1,
                    p,
                )?;
                let coords = self.ext.map_to_coords(p + q, &comp);
                let class = self.ext.class_coords(p + q, &coords)?;
                let c = f.mul(ci, cj);
                for (k, v) in class.iter().enumerate() {
                    out[k] = f.add(&out[k], &f.mul(&c, v));
                }
            }
        }
        Ok(out)
    }

    /// Unit class: coordinates of the identity cocycle in degree 0.
    pub fn unit_class(&self) -> Result<Vec<Scalar>> {
        // The augmentation P_0 → A is the identity's representative.
        let aug = self.ext.res.maps[0].clone();
        let coords = self.ext.map_to_coords(0, &aug);
        self.ext.class_coords(0, &coords)
    }

    /// Number of new algebra generators of the selected part of HH* in each
    /// degree: the codimension of the span of products of positive
    /// lower-degree classes.
    pub fn generator_profile(&self, selector: HSelector) -> Result<Vec<usize>> {
        let f = self.algebra.field;
        let dim_sel = |d: usize| {
            if selector.includes(&f, d) {
                self.dim(d)
            } else {
                0
            }
        };
        let mut profile = vec![0usize; self.cap + 1];
        for d in 0..=self.cap {
            let hd = dim_sel(d);
            if hd == 0 {
                continue;
            }
            if d == 0 {
                profile[0] = hd;
                continue;
            }
            let mut products: Vec<Vec<Scalar>> = Vec::new();
            for p in 1..d {
                if dim_sel(p) == 0 || dim_sel(d - p) == 0 {
                    continue;
                }
                for i in 0..self.dim(p) {
                    let mut x = vec![f.zero(); self.dim(p)];
                    x[i] = f.one();
                    for j in 0..self.dim(d - p) {
                        let mut y = vec![f.zero(); self.dim(d - p)];
                        y[j] = f.one();
                        products.push(self.cup(p, &x, d - p, &y)?);
                    }
                }
            }
            let span = if products.is_empty() {
                0
            } else {
                crate::matrix::ExactMatrix::from_fn(f, hd, products.len(), |i, j| {
                    products[j][i].clone()
                })
                .rank()
            };
            profile[d] = hd - span;
        }
        Ok(profile)
    }
}

/// A as a left module over A ⊗ A^op: vertex (i, j) carries e_i A e_j, the
/// a-side arrows act by left multiplication, the op-side by right
/// multiplication.
pub fn regular_bimodule(
    a: &Arc<FDAlgebra>,
    env: &Arc<FDAlgebra>,
    layout: &TensorLayout,
) -> FDModule {
    let f = a.field;
    let nv = a.num_vertices();
    // block contents: basis ids of A grouped by (target, source)
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); nv * nv];
    for id in 0..a.dim() {
        let (i, j) = (a.target_of(id), a.source_of(id));
        blocks[layout.vertex(i, j)].push(id);
    }
    let dims: Vec<usize> = blocks.iter().map(Vec::len).collect();
    let pos = |v: usize, id: usize| blocks[v].iter().position(|&x| x == id).unwrap();
    let mut actions = Vec::with_capacity(env.quiver.arrows.len());
    // a-side arrows: (α at op-vertex v): left multiplication by α
    for ia in 0..layout.arrows_a {
        for v in 0..nv {
            let arrow_idx = layout.arrow_a(ia, v);
            let arr = &env.quiver.arrows[arrow_idx];
            debug_assert_eq!(actions.len(), arrow_idx);
            let alpha = a.arrow_basis_index(ia);
            let mut m = ExactMatrix::zeros(f, dims[arr.target], dims[arr.source]);
            for (col, &id) in blocks[arr.source].iter().enumerate() {
                for (k, c) in a.mul_basis(alpha, id) {
                    m.set(pos(arr.target, *k), col, c.clone());
                }
            }
            actions.push(m);
        }
    }
    // op-side arrows: (vertex u, β reversed): right multiplication by β
    for u in 0..nv {
        for ib in 0..layout.arrows_b {
            let arrow_idx = layout.arrow_b(u, ib);
            let arr = &env.quiver.arrows[arrow_idx];
            debug_assert_eq!(actions.len(), arrow_idx);
            let beta = a.arrow_basis_index(ib);
            let mut m = ExactMatrix::zeros(f, dims[arr.target], dims[arr.source]);
            for (col, &id) in blocks[arr.source].iter().enumerate() {
                for (k, c) in a.mul_basis(id, beta) {
                    m.set(pos(arr.target, *k), col, c.clone());
                }
            }
            actions.push(m);
        }
    }
    FDModule::new_unchecked(env.clone(), dims, actions)
}

pub fn center_dim(a: &FDAlgebra) -> usize {
    let f = a.field;
    let d = a.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..d {
        // z·b_i − b_i·z = 0, coordinates over the basis
        for k in 0..d {
            let mut row = vec![f.zero(); d];
            for j in 0..d {
                let mut c = f.zero();
                for (t, v) in a.mul_basis(j, i) {
                    if *t == k {
                        c = f.add(&c, v);
                    }
                }
                for (t, v) in a.mul_basis(i, j) {
                    if *t == k {
                        c = f.sub(&c, v);
                    }
                }
                row[j] = c;
            }
            if row.iter().any(|x| !f.is_zero(x)) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return d;
    }
    ExactMatrix::from_rows(f, rows).kernel_basis().len()
}

// ---------------------------------------------------------------------------
// The functor − ⊗_A m applied to the bimodule resolution, and φ.
// ---------------------------------------------------------------------------

/// The bimodule resolution tensored with a left module m: a complex of
/// projective A-modules quasi-isomorphic to m.
pub struct TensoredResolution {
    pub terms: Vec<ProjTerm>,
    /// maps[0]: T_0 → m (the tensored augmentation); maps[n]: T_n → T_{n-1}.
    pub maps: Vec<ModuleMap>,
}

impl TensoredResolution {
    /// Builds P_• ⊗_A m up to `depth` (inclusive).
    pub fn new(hh: &HochschildRing, m: &FDModule, depth: usize) -> Result<TensoredResolution> {
        let a = &hh.algebra;
        if m.algebra.quiver != a.quiver || m.algebra.basis != a.basis {
            return Err(Error::AlgebraMismatch);
        }
        let res = &hh.ext.res;
        if depth + 1 > res.terms.len() && !res.complete {
            return Err(Error::DegreeOverflow {
                degree: depth,
                cap: res.terms.len().saturating_sub(1),
            });
        }
        let mut terms: Vec<ProjTerm> = Vec::new();
        let mut bases: Vec<Vec<usize>> = Vec::new();
        let upto = depth.min(res.terms.len().saturating_sub(1));
        for n in 0..=upto {
            let bterm = &res.terms[n];
            let mut gens = Vec::new();
            let mut base = Vec::with_capacity(bterm.rank());
            for &pv in &bterm.gen_vertices {
                let (i, j) = hh.layout.decode_vertex(pv);
                base.push(gens.len());
                for _ in 0..m.vertex_dims[j] {
                    gens.push(i);
                }
            }
            terms.push(ProjTerm::new(a, gens));
            bases.push(base);
        }
        // Differentials and augmentation.
        let mut maps = Vec::with_capacity(terms.len());
        maps.push(tensor_bimodule_map(hh, m, &res.terms[0], &res.maps[0], None, &terms[0])?);
        for n in 1..terms.len() {
            maps.push(tensor_bimodule_map(
                hh,
                m,
                &res.terms[n],
                &res.maps[n],
                Some((&res.terms[n - 1], &terms[n - 1], &bases[n - 1])),
                &terms[n],
            )?);
        }
        Ok(TensoredResolution { terms, maps })
    }

    /// η ⊗ m for a cocycle η: P_n → A: the induced map T_n → m.
    pub fn tensor_cocycle(
        &self,
        hh: &HochschildRing,
        m: &FDModule,
        eta: &ModuleMap,
        n: usize,
    ) -> Result<ModuleMap> {
        tensor_bimodule_map(hh, m, &hh.ext.res.terms[n], eta, None, &self.terms[n])
    }
}

/// Tensors a bimodule map out of P_k with m. With `target` = None the map
/// goes into A itself (augmentation or cocycle) and the result lands in m;
/// otherwise it is a differential into the previous bimodule term and the
/// result lands in the previous tensored term.
fn tensor_bimodule_map(
    hh: &HochschildRing,
    m: &FDModule,
    source_bterm: &ProjTerm,
    bmap: &ModuleMap,
    target: Option<(&ProjTerm, &ProjTerm, &Vec<usize>)>,
    source_tterm: &ProjTerm,
) -> Result<ModuleMap> {
    let a = &hh.algebra;
    let f = a.field;
    let mut images: Vec<Vec<Scalar>> = Vec::new();
    for s in 0..source_bterm.rank() {
        let pv = source_bterm.gen_vertices[s];
        let (i, j) = hh.layout.decode_vertex(pv);
        let (_, img) = source_bterm.generator_image(bmap, s);
        for w in 0..m.vertex_dims[j] {
            // image of the tensored generator (s, w), as a vector in the
            // target's block at vertex i
            let img_vec = match target {
                None => {
                    // bmap lands in the regular bimodule; its (i, j)-block
                    // is spanned by basis ids with target i, source j.
                    let ids: Vec<usize> = (0..a.dim())
                        .filter(|&id| a.target_of(id) == i && a.source_of(id) == j)
                        .collect();
                    let mut out = vec![f.zero(); m.vertex_dims[i]];
                    for (coord, &id) in ids.iter().enumerate() {
                        let c = &img[coord];
                        if f.is_zero(c) {
                            continue;
                        }
                        let act = m.path_action(&a.basis[id]); // m_j → m_i
                        for r in 0..act.rows() {
                            let v = act.at(r, w);
                            if !f.is_zero(v) {
                                out[r] = f.add(&out[r], &f.mul(c, v));
                            }
                        }
                    }
                    out
                }
                Some((prev_bterm, prev_tterm, prev_base)) => {
                    let mut out =
                        vec![f.zero(); prev_tterm.module.vertex_dims[i]];
                    // img is a block vector at the product vertex (i, j) of
                    // the previous bimodule term; expand its coordinates.
                    let block = &prev_bterm.layout[pv];
                    for (coord, &(s2, g)) in block.iter().enumerate() {
                        let c = &img[coord];
                        if f.is_zero(c) {
                            continue;
                        }
                        let (p_id, q_id) = hh.layout.decode_basis(g);
                        // q: j → j' right-multiplies; push w through it
                        let qact = m.path_action(&a.basis[q_id]);
                        let jp = a.target_of(q_id);
                        for wp in 0..m.vertex_dims[jp] {
                            let d = qact.at(wp, w);
                            if f.is_zero(d) {
                                continue;
                            }
                            let t_summand = prev_base[s2] + wp;
                            // coefficient lands on coordinate (t_summand, p)
                            let col = prev_tterm.layout[i]
                                .iter()
                                .position(|&(ss, id)| ss == t_summand && id == p_id)
                                .expect("tensored layout contains the path");
                            out[col] = f.add(&out[col], &f.mul(c, d));
                        }
                    }
                    out
                }
            };
            images.push(img_vec);
        }
    }
    let target_module = match target {
        None => m,
        Some((_, prev_tterm, _)) => &prev_tterm.module,
    };
    Ok(source_tterm.map_from_generator_images(target_module, &images))
}

/// φ_m: transports a Hochschild class of degree n to Ext^n(m, m) through the
/// comparison map between the minimal resolution of m and P_• ⊗_A m.
/// Returns coordinates in the Ext basis of `ext_mm`.
pub fn phi_action(
    hh: &HochschildRing,
    m: &FDModule,
    ext_mm: &ExtComputation,
    eta: &ModuleMap,
    n: usize,
) -> Result<Vec<Scalar>> {
    if hh.ext.res.terms.len() <= n {
        return Ok(vec![m.field().zero(); ext_mm.dim(n)]);
    }
    let tensored = TensoredResolution::new(hh, m, n)?;
    let lifts = compare_resolutions(&ext_mm.res, &tensored, n)?;
    if lifts.len() <= n {
        // the minimal resolution of m ended before degree n: the class acts
        // as zero
        return Ok(vec![m.field().zero(); ext_mm.dim(n)]);
    }
    let eta_m = tensored.tensor_cocycle(hh, m, eta, n)?;
    let composite = eta_m.compose(&lifts[n])?;
    let coords = ext_mm.map_to_coords(n, &composite);
    ext_mm.class_coords(n, &coords)
}

/// Chain map from the minimal resolution of m into the tensored resolution
/// lifting the identity of m.
fn compare_resolutions(
    res_m: &crate::homology::ProjResolution,
    tensored: &TensoredResolution,
    depth: usize,
) -> Result<Vec<ModuleMap>> {
    let mut lifts: Vec<ModuleMap> = Vec::new();
    for k in 0..=depth {
        let Some(source_term) = res_m.terms.get(k) else {
            break;
        };
        let target_term = &tensored.terms[k];
        let through = &tensored.maps[k];
        let mut images = Vec::with_capacity(source_term.rank());
        for s in 0..source_term.rank() {
            let v = source_term.gen_vertices[s];
            let rhs: Vec<Scalar> = if k == 0 {
                res_m.maps[0].vertex_maps[v].column(source_term.gen_coords[s].1)
            } else {
                let prev = &lifts[k - 1];
                let composed = prev.compose(&res_m.maps[k])?;
                composed.vertex_maps[v].column(source_term.gen_coords[s].1)
            };
            let sol = through.vertex_maps[v]
                .solve_right(&rhs)?
                .ok_or_else(|| Error::Invalid("comparison lifting failed".into()))?;
            images.push(sol);
        }
        lifts.push(source_term.map_from_generator_images(&target_term.module, &images));
    }
    Ok(lifts)
}

/// Degreewise Künneth check: dim HH^n(a ⊗ b) = Σ dim HH^p(a)·HH^q(b).
pub fn kunneth_check(
    a: &Arc<FDAlgebra>,
    b: &Arc<FDAlgebra>,
    cap: usize,
) -> Result<(bool, GradedDims, GradedDims)> {
    let (t, _) = a.tensor(b)?;
    let t = Arc::new(t);
    let hh_a = HochschildRing::compute(a, cap)?;
    let hh_b = HochschildRing::compute(b, cap)?;
    let hh_t = HochschildRing::compute(&t, cap)?;
    let conv: Vec<usize> = (0..=cap)
        .map(|n| (0..=n).map(|p| hh_a.dim(p) * hh_b.dim(n - p)).sum())
        .collect();
    let expected = GradedDims(conv);
    let actual = hh_t.dims();
    Ok((expected == actual, expected, actual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::simple;
    use crate::samples;

    #[test]
    fn semisimple_hochschild_vanishes_positively() {
        let a = Arc::new(samples::two_points(FieldSpec::Rationals));
        let hh = HochschildRing::compute(&a, 3).unwrap();
        assert_eq!(hh.dims().0, vec![2, 0, 0, 0]);
        assert_eq!(hh.center_dim(), 2);
    }

    #[test]
    fn dual_numbers_hochschild_table() {
        let a = Arc::new(samples::dual_numbers(FieldSpec::Rationals));
        let hh = HochschildRing::compute(&a, 5).unwrap();
        assert_eq!(hh.dims().0, vec![2, 1, 1, 1, 1, 1]);
        assert_eq!(hh.center_dim(), 2);
    }

    #[test]
    fn commutative_square_center_is_whole_algebra() {
        let a = Arc::new(samples::commutative_square(FieldSpec::Rationals));
        let hh = HochschildRing::compute(&a, 2).unwrap();
        assert_eq!(hh.dim(0), 4);
        assert_eq!(hh.center_dim(), 4);
    }

    #[test]
    fn hochschild_invariant_under_opposite() {
        let a = Arc::new(samples::example_four(FieldSpec::Rationals));
        let op = Arc::new(a.opposite());
        let hh = HochschildRing::compute(&a, 3).unwrap();
        let hh_op = HochschildRing::compute(&op, 3).unwrap();
        assert_eq!(hh.dims(), hh_op.dims());
    }

    #[test]
    fn cup_with_unit_is_identity() {
        let a = Arc::new(samples::dual_numbers(FieldSpec::Rationals));
        let hh = HochschildRing::compute(&a, 4).unwrap();
        let unit = hh.unit_class().unwrap();
        for deg in 0..=3 {
            for idx in 0..hh.dim(deg) {
                let mut x = vec![a.field.zero(); hh.dim(deg)];
                x[idx] = a.field.one();
                let cup = hh.cup(0, &unit, deg, &x).unwrap();
                assert_eq!(cup, x, "1 ⌣ e = e in degree {deg}");
                let cup2 = hh.cup(deg, &x, 0, &unit).unwrap();
                assert_eq!(cup2, x, "e ⌣ 1 = e in degree {deg}");
            }
        }
    }

    #[test]
    fn cup_overflow_errors() {
        let a = Arc::new(samples::dual_numbers(FieldSpec::Rationals));
        let hh = HochschildRing::compute(&a, 2).unwrap();
        let one = vec![a.field.one()];
        assert!(matches!(
            hh.cup(2, &one, 1, &one),
            Err(Error::DegreeOverflow { .. })
        ));
    }

    #[test]
    fn graded_commutativity_on_dual_numbers() {
        // odd·odd: xy + yx must be a coboundary (here: equal classes up to
        // sign means the symmetrized product class vanishes)
        let a = Arc::new(samples::dual_numbers(FieldSpec::Rationals));
        let hh = HochschildRing::compute(&a, 4).unwrap();
        let f = a.field;
        let one = vec![f.one()];
        let xy = hh.cup(1, &one, 1, &one).unwrap();
        // (e1 ⌣ e1) + (e1 ⌣ e1) with the sign (−1)^{1·1}: the graded
        // commutator of a class with itself is 2(e⌣e) for odd degree, so
        // e ⌣ e must be 2-torsion = 0 over ℚ… unless char 2. Check the
        // class is killed by the commutator rule:
        let mut comm = vec![f.zero(); xy.len()];
        for (k, v) in xy.iter().enumerate() {
            comm[k] = f.add(v, v); // e⌣e − (−1) e⌣e = 2 e⌣e
        }
        for v in &comm {
            let double_is_zero = f.is_zero(v);
            let class_is_zero = f.is_zero(&xy[0]);
            assert_eq!(double_is_zero, class_is_zero);
        }
        // and indeed the square of the odd generator vanishes over ℚ
        assert!(f.is_zero(&xy[0]));
    }

    #[test]
    fn phi_of_unit_is_identity_on_ext() {
        let a = Arc::new(samples::dual_numbers(FieldSpec::Rationals));
        let hh = HochschildRing::compute(&a, 4).unwrap();
        let s = simple(&a, 0);
        let ext = crate::homology::ext_computation(&s, &s, 4).unwrap();
        let unit_rep = hh.cocycle(0, 0);
        let act = phi_action(&hh, &s, &ext, &unit_rep, 0).unwrap();
        // φ(unit-ish class) in degree 0 is a nonzero multiple of the
        // identity of End(s)
        assert_eq!(act.len(), 1);
        assert!(!a.field.is_zero(&act[0]));
    }

    #[test]
    fn phi_of_degree_two_generator_is_periodicity_operator() {
        let a = Arc::new(samples::dual_numbers(FieldSpec::Rationals));
        let hh = HochschildRing::compute(&a, 4).unwrap();
        let s = simple(&a, 0);
        let ext = crate::homology::ext_computation(&s, &s, 4).unwrap();
        let gen2 = hh.cocycle(2, 0);
        let act = phi_action(&hh, &s, &ext, &gen2, 2).unwrap();
        assert_eq!(act.len(), 1);
        assert!(
            !a.field.is_zero(&act[0]),
            "degree-2 Hochschild generator acts nontrivially on Ext(S, S)"
        );
    }

    #[test]
    fn kunneth_for_dual_numbers() {
        let f = FieldSpec::Rationals;
        let a = Arc::new(samples::dual_numbers(f));
        let (ok, expected, actual) = kunneth_check(&a, &a, 4).unwrap();
        assert!(ok, "expected {expected}, got {actual}");
        // and the product is the commutative square algebra
        assert_eq!(expected.0, vec![4, 4, 5, 6, 7]);
    }

    #[test]
    fn kunneth_with_ground_field() {
        let f = FieldSpec::Rationals;
        let a = Arc::new(samples::dual_numbers(f));
        let k = Arc::new(samples::ground_field_algebra(f));
        let (ok, _, actual) = kunneth_check(&a, &k, 3).unwrap();
        assert!(ok);
        assert_eq!(actual.0, vec![2, 1, 1, 1]);
    }

    #[test]
    fn even_selector_respects_characteristic() {
        let q = FieldSpec::Rationals;
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(HSelector::Even.includes(&q, 2));
        assert!(!HSelector::Even.includes(&q, 3));
        assert!(HSelector::Even.includes(&f2, 3));
        assert!(HSelector::Full.includes(&q, 3));
    }
}
