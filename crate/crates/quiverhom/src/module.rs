//! Finite-dimensional left modules as quiver representations.
//!
//! A module stores one exact vector space per vertex and one matrix per
//! arrow (target block × source block). The action of a path multiplies the
//! arrow matrices in traversal order, so basis elements of the algebra act
//! through their path expressions.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::field::{rational_roots, FieldSpec, Scalar};
use crate::matrix::ExactMatrix;
use crate::quiver::Path;

#[derive(Clone)]
pub struct FDModule {
    pub algebra: Arc<FDAlgebra>,
    pub vertex_dims: Vec<usize>,
    /// One matrix per arrow, shaped target-block × source-block.
    pub arrow_actions: Vec<ExactMatrix>,
}

impl FDModule {
    pub fn new(
        algebra: Arc<FDAlgebra>,
        vertex_dims: Vec<usize>,
        arrow_actions: Vec<ExactMatrix>,
    ) -> Result<FDModule> {
        let m = FDModule {
            algebra,
            vertex_dims,
            arrow_actions,
        };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        algebra: Arc<FDAlgebra>,
        vertex_dims: Vec<usize>,
        arrow_actions: Vec<ExactMatrix>,
    ) -> FDModule {
        FDModule {
            algebra,
            vertex_dims,
            arrow_actions,
        }
    }

    /// Checks matrix shapes and that every relation acts as zero.
    pub fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        if self.vertex_dims.len() != a.num_vertices()
            || self.arrow_actions.len() != a.quiver.arrows.len()
        {
            return Err(Error::DimensionMismatch(
                "module data does not match the quiver".into(),
            ));
        }
        for (i, arr) in a.quiver.arrows.iter().enumerate() {
            let m = &self.arrow_actions[i];
            if m.rows() != self.vertex_dims[arr.target] || m.cols() != self.vertex_dims[arr.source]
            {
                return Err(Error::DimensionMismatch(format!(
                    "action of arrow `{}` has the wrong shape",
                    arr.label
                )));
            }
            if m.field != a.field {
                return Err(Error::FieldMismatch);
            }
        }
        for rel in &a.relations {
            let (src, tgt) = rel.validate(&a.quiver, &a.field)?;
            let mut acc = ExactMatrix::zeros(a.field, self.vertex_dims[tgt], self.vertex_dims[src]);
            for (c, p) in &rel.terms {
                let m = self.path_action(p);
                acc = acc.add(&m.scale(c))?;
            }
            if !acc.is_zero() {
                return Err(Error::Invalid(format!(
                    "relation `{}` does not act as zero",
                    rel.display(&a.quiver)
                )));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field
    }

    pub fn total_dim(&self) -> usize {
        self.vertex_dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.vertex_dims.len() + 1);
        let mut acc = 0;
        for &d in &self.vertex_dims {
            out.push(acc);
            acc += d;
        }
        out.push(acc);
        out
    }

    /// Matrix of a path action from its source block to its target block.
    pub fn path_action(&self, p: &Path) -> ExactMatrix {
        let q = &self.algebra.quiver;
        let mut at = p.source;
        let mut m = ExactMatrix::identity(self.field(), self.vertex_dims[at]);
        for &a in &p.arrows {
            debug_assert_eq!(q.arrows[a].source, at);
            m = self.arrow_actions[a].mul(&m).expect("path shapes align");
            at = q.arrows[a].target;
        }
        m
    }

    /// Action of an algebra basis element on the total space.
    pub fn basis_action_total(&self, idx: usize) -> ExactMatrix {
        let p = &self.algebra.basis[idx];
        let block = self.path_action(p);
        let off = self.offsets();
        let (src, tgt) = (p.source, p.target(&self.algebra.quiver));
        let n = self.total_dim();
        let mut m = ExactMatrix::zeros(self.field(), n, n);
        for i in 0..block.rows() {
            for j in 0..block.cols() {
                m.set(off[tgt] + i, off[src] + j, block.at(i, j).clone());
            }
        }
        m
    }

    pub fn direct_sum(parts: &[&FDModule]) -> Result<FDModule> {
        let first = parts.first().ok_or_else(|| {
            Error::Invalid("direct sum needs at least one summand".into())
        })?;
        let a = first.algebra.clone();
        for p in parts {
            if !same_algebra(first, p) {
                return Err(Error::AlgebraMismatch);
            }
        }
        let nv = a.num_vertices();
        let dims: Vec<usize> = (0..nv)
            .map(|v| parts.iter().map(|m| m.vertex_dims[v]).sum())
            .collect();
        let field = a.field;
        let actions: Vec<ExactMatrix> = a
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(i, arr)| {
                let mut m = ExactMatrix::zeros(field, dims[arr.target], dims[arr.source]);
                let mut ro = 0;
                let mut co = 0;
                for part in parts {
                    let b = &part.arrow_actions[i];
                    for r in 0..b.rows() {
                        for c in 0..b.cols() {
                            m.set(ro + r, co + c, b.at(r, c).clone());
                        }
                    }
                    ro += part.vertex_dims[arr.target];
                    co += part.vertex_dims[arr.source];
                }
                m
            })
            .collect();
        Ok(FDModule::new_unchecked(a, dims, actions))
    }

    /// The dual module over the opposite algebra. `opposite` must be the
    /// algebra produced by `self.algebra.opposite()` (checked structurally).
    pub fn dual(&self, opposite: Arc<FDAlgebra>) -> FDModule {
        debug_assert_eq!(opposite.quiver, self.algebra.quiver.reversed());
        let actions = self
            .arrow_actions
            .iter()
            .map(ExactMatrix::transpose)
            .collect();
        FDModule::new_unchecked(opposite, self.vertex_dims.clone(), actions)
    }

    pub fn eq_presentation(&self, other: &FDModule) -> bool {
        same_algebra(self, other)
            && self.vertex_dims == other.vertex_dims
            && self.arrow_actions == other.arrow_actions
    }
}

pub fn same_algebra(m: &FDModule, n: &FDModule) -> bool {
    Arc::ptr_eq(&m.algebra, &n.algebra)
        || (m.algebra.quiver == n.algebra.quiver && m.algebra.basis == n.algebra.basis)
}

/// The zero module.
pub fn zero_module(a: &Arc<FDAlgebra>) -> FDModule {
    let f = a.field;
    let dims = vec![0usize; a.num_vertices()];
    let actions = a
        .quiver
        .arrows
        .iter()
        .map(|_| ExactMatrix::zeros(f, 0, 0))
        .collect();
    FDModule::new_unchecked(a.clone(), dims, actions)
}

/// Simple module at a vertex.
pub fn simple(a: &Arc<FDAlgebra>, v: usize) -> FDModule {
    let field = a.field;
    let dims: Vec<usize> = (0..a.num_vertices()).map(|u| usize::from(u == v)).collect();
    let actions = a
        .quiver
        .arrows
        .iter()
        .map(|arr| ExactMatrix::zeros(field, dims[arr.target], dims[arr.source]))
        .collect();
    FDModule::new_unchecked(a.clone(), dims, actions)
}

/// Left module spanned by a left-multiplication-closed set of algebra basis
/// elements. Returns the module and, per vertex, the basis ids backing each
/// block coordinate.
pub fn module_from_basis_ids(a: &Arc<FDAlgebra>, ids: &[usize]) -> (FDModule, Vec<Vec<usize>>) {
    let field = a.field;
    let nv = a.num_vertices();
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for &i in ids {
        blocks[a.target_of(i)].push(i);
    }
    let dims: Vec<usize> = blocks.iter().map(Vec::len).collect();
    let pos = |v: usize, id: usize| blocks[v].iter().position(|&x| x == id);
    let actions: Vec<ExactMatrix> = a
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, arr)| {
            let arrow_idx = a.arrow_basis_index(ai);
            let mut m = ExactMatrix::zeros(field, dims[arr.target], dims[arr.source]);
            for (col, &id) in blocks[arr.source].iter().enumerate() {
                for (k, c) in a.mul_basis(arrow_idx, id) {
                    let row = pos(arr.target, *k)
                        .expect("spanning set closed under left multiplication");
                    m.set(row, col, c.clone());
                }
            }
            m
        })
        .collect();
    (FDModule::new_unchecked(a.clone(), dims, actions), blocks)
}

/// Indecomposable projective P_v = A e_v.
pub fn projective(a: &Arc<FDAlgebra>, v: usize) -> FDModule {
    module_from_basis_ids(a, &a.paths_from(v)).0
}

/// The regular module A.
pub fn regular(a: &Arc<FDAlgebra>) -> FDModule {
    module_from_basis_ids(a, &(0..a.dim()).collect::<Vec<_>>()).0
}

/// Indecomposable injective I_v, via duality from the opposite projective.
pub fn injective(a: &Arc<FDAlgebra>, v: usize) -> FDModule {
    let op = Arc::new(a.opposite());
    let p = projective(&op, v);
    // dual over op(op) = original algebra
    p.dual(a.clone())
}

#[derive(Clone)]
pub struct ModuleMap {
    pub source: FDModule,
    pub target: FDModule,
    pub vertex_maps: Vec<ExactMatrix>,
}

impl ModuleMap {
    pub fn new(source: FDModule, target: FDModule, vertex_maps: Vec<ExactMatrix>) -> Result<ModuleMap> {
        let m = ModuleMap {
            source,
            target,
            vertex_maps,
        };
        m.verify()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        source: FDModule,
        target: FDModule,
        vertex_maps: Vec<ExactMatrix>,
    ) -> ModuleMap {
        ModuleMap {
            source,
            target,
            vertex_maps,
        }
    }

    /// Exact commuting check against every arrow action.
    pub fn verify(&self) -> Result<()> {
        if !same_algebra(&self.source, &self.target) {
            return Err(Error::AlgebraMismatch);
        }
        let q = &self.source.algebra.quiver;
        for (i, arr) in q.arrows.iter().enumerate() {
            let lhs = self.vertex_maps[arr.target].mul(&self.source.arrow_actions[i])?;
            let rhs = self.target.arrow_actions[i].mul(&self.vertex_maps[arr.source])?;
            if lhs != rhs {
                return Err(Error::Invalid(format!(
                    "map does not commute with arrow `{}`",
                    arr.label
                )));
            }
        }
        Ok(())
    }

    pub fn zero(source: FDModule, target: FDModule) -> ModuleMap {
        let f = source.field();
        let maps = (0..source.vertex_dims.len())
            .map(|v| ExactMatrix::zeros(f, target.vertex_dims[v], source.vertex_dims[v]))
            .collect();
        ModuleMap::new_unchecked(source, target, maps)
    }

    pub fn identity(m: &FDModule) -> ModuleMap {
        let f = m.field();
        let maps = m
            .vertex_dims
            .iter()
            .map(|&d| ExactMatrix::identity(f, d))
            .collect();
        ModuleMap::new_unchecked(m.clone(), m.clone(), maps)
    }

    /// self ∘ other (other applied first).
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap> {
        let maps = self
            .vertex_maps
            .iter()
            .zip(&other.vertex_maps)
            .map(|(a, b)| a.mul(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleMap::new_unchecked(
            other.source.clone(),
            self.target.clone(),
            maps,
        ))
    }

    pub fn add(&self, other: &ModuleMap) -> Result<ModuleMap> {
        let maps = self
            .vertex_maps
            .iter()
            .zip(&other.vertex_maps)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleMap::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            maps,
        ))
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        ModuleMap::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            self.vertex_maps.iter().map(|m| m.scale(c)).collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.vertex_maps.iter().map(ExactMatrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.vertex_maps.iter().all(ExactMatrix::is_zero)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.total_dim() == self.target.total_dim() && self.rank() == self.source.total_dim()
    }

    /// Block-diagonal matrix on total coordinates.
    pub fn total_matrix(&self) -> ExactMatrix {
        let f = self.source.field();
        let so = self.source.offsets();
        let to = self.target.offsets();
        let mut m = ExactMatrix::zeros(f, self.target.total_dim(), self.source.total_dim());
        for (v, block) in self.vertex_maps.iter().enumerate() {
            for i in 0..block.rows() {
                for j in 0..block.cols() {
                    m.set(to[v] + i, so[v] + j, block.at(i, j).clone());
                }
            }
        }
        m
    }

    /// Kernel submodule with its inclusion.
    pub fn kernel(&self) -> (FDModule, ModuleMap) {
        let f = self.source.field();
        let bases: Vec<ExactMatrix> = self
            .vertex_maps
            .iter()
            .map(|m| columns_matrix(f, m.cols(), m.kernel_basis()))
            .collect();
        submodule_from_bases(&self.source, bases)
    }

    /// Image submodule with its inclusion into the target.
    pub fn image(&self) -> (FDModule, ModuleMap) {
        let f = self.source.field();
        let bases: Vec<ExactMatrix> = self
            .vertex_maps
            .iter()
            .map(|m| {
                let idx = m.independent_columns();
                columns_matrix(f, m.rows(), idx.into_iter().map(|j| m.column(j)).collect())
            })
            .collect();
        submodule_from_bases(&self.target, bases)
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (FDModule, ModuleMap) {
        let (_, incl) = self.image();
        quotient_by_submodule(&self.target, &incl)
    }
}

fn columns_matrix(f: FieldSpec, height: usize, cols: Vec<Vec<Scalar>>) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(f, height, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    m
}

/// Builds the submodule spanned by the (independent) columns of `bases`,
/// which must be closed under the arrow actions. Returns it with the
/// inclusion map.
pub fn submodule_from_bases(parent: &FDModule, bases: Vec<ExactMatrix>) -> (FDModule, ModuleMap) {
    let a = &parent.algebra;
    let dims: Vec<usize> = bases.iter().map(ExactMatrix::cols).collect();
    let actions: Vec<ExactMatrix> = a
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(i, arr)| {
            let mapped = parent.arrow_actions[i]
                .mul(&bases[arr.source])
                .expect("shapes align");
            bases[arr.target]
                .solve_matrix(&mapped)
                .expect("shapes align")
                .expect("spanning columns closed under the action")
        })
        .collect();
    let sub = FDModule::new_unchecked(a.clone(), dims, actions);
    let incl = ModuleMap::new_unchecked(sub.clone(), parent.clone(), bases);
    (sub, incl)
}

/// Quotient of `parent` by the submodule given via its inclusion; returns
/// the quotient and the projection map.
pub fn quotient_by_submodule(parent: &FDModule, incl: &ModuleMap) -> (FDModule, ModuleMap) {
    let f = parent.field();
    let a = &parent.algebra;
    let nv = a.num_vertices();
    let mut proj = Vec::with_capacity(nv);
    let mut sect = Vec::with_capacity(nv);
    for v in 0..nv {
        let b = &incl.vertex_maps[v]; // n_v × r_v, independent columns
        let n = parent.vertex_dims[v];
        let id = ExactMatrix::identity(f, n);
        let full = b.hstack(&id).expect("same height");
        let picks: Vec<usize> = full
            .independent_columns()
            .into_iter()
            .filter(|&c| c >= b.cols())
            .map(|c| c - b.cols())
            .collect();
        let sel = columns_matrix(f, n, picks.iter().map(|&c| id.column(c)).collect());
        let basis = b.hstack(&sel).expect("same height");
        let inv = basis.inverse().expect("completed basis is invertible");
        // bottom rows of the inverse: coordinates along the complement
        let rows = picks.len();
        let mut p = ExactMatrix::zeros(f, rows, n);
        for i in 0..rows {
            for j in 0..n {
                p.set(i, j, inv.at(b.cols() + i, j).clone());
            }
        }
        proj.push(p);
        sect.push(sel);
    }
    let dims: Vec<usize> = proj.iter().map(ExactMatrix::rows).collect();
    let actions: Vec<ExactMatrix> = a
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(i, arr)| {
            proj[arr.target]
                .mul(&parent.arrow_actions[i])
                .and_then(|m| m.mul(&sect[arr.source]))
                .expect("shapes align")
        })
        .collect();
    let quot = FDModule::new_unchecked(a.clone(), dims, actions);
    let projection = ModuleMap::new_unchecked(parent.clone(), quot.clone(), proj);
    (quot, projection)
}

/// Radical submodule rad M = Σ im(arrow action), with inclusion.
pub fn radical(m: &FDModule) -> (FDModule, ModuleMap) {
    let f = m.field();
    let a = &m.algebra;
    let bases: Vec<ExactMatrix> = (0..a.num_vertices())
        .map(|v| {
            let mut cols: Vec<Vec<Scalar>> = Vec::new();
            for ai in a.quiver.arrows_into(v) {
                let act = &m.arrow_actions[ai];
                for j in 0..act.cols() {
                    cols.push(act.column(j));
                }
            }
            let span = columns_matrix(f, m.vertex_dims[v], cols);
            let idx = span.independent_columns();
            columns_matrix(
                f,
                m.vertex_dims[v],
                idx.into_iter().map(|j| span.column(j)).collect(),
            )
        })
        .collect();
    submodule_from_bases(m, bases)
}

/// Top of a module, M / rad M, with the projection.
pub fn top(m: &FDModule) -> (FDModule, ModuleMap) {
    let (_, incl) = radical(m);
    quotient_by_submodule(m, &incl)
}

/// Socle: the largest submodule killed by every arrow.
pub fn socle(m: &FDModule) -> (FDModule, ModuleMap) {
    let f = m.field();
    let a = &m.algebra;
    let bases: Vec<ExactMatrix> = (0..a.num_vertices())
        .map(|v| {
            let mut stacked = ExactMatrix::zeros(f, 0, m.vertex_dims[v]);
            for ai in a.quiver.arrows_from(v) {
                stacked = stacked.vstack(&m.arrow_actions[ai]).expect("same width");
            }
            columns_matrix(f, m.vertex_dims[v], stacked.kernel_basis())
        })
        .collect();
    submodule_from_bases(m, bases)
}

/// Dimension vectors of the radical layers rad^k M / rad^{k+1} M, top first.
pub fn loewy_layers(m: &FDModule) -> Vec<Vec<usize>> {
    let mut layers = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        let (rad, _) = radical(&cur);
        let layer: Vec<usize> = cur
            .vertex_dims
            .iter()
            .zip(&rad.vertex_dims)
            .map(|(a, b)| a - b)
            .collect();
        layers.push(layer);
        cur = rad;
    }
    layers
}

/// For a uniserial module, the vertex of each radical layer from top to
/// socle; None when some layer is not one-dimensional.
pub fn uniserial_vertex_sequence(m: &FDModule) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    for layer in loewy_layers(m) {
        if layer.iter().sum::<usize>() != 1 {
            return None;
        }
        out.push(layer.iter().position(|&d| d == 1).unwrap());
    }
    Some(out)
}

/// Basis of Hom_A(m, n) as module maps, from the exact solution space of
/// the commuting equations.
pub fn hom_basis(m: &FDModule, n: &FDModule) -> Result<Vec<ModuleMap>> {
    if !same_algebra(m, n) {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.field();
    let a = &m.algebra;
    let nv = a.num_vertices();
    // Unknown layout: per vertex v, an n_v × m_v matrix, row-major.
    let mut unknown_offset = vec![0usize; nv + 1];
    for v in 0..nv {
        unknown_offset[v + 1] = unknown_offset[v] + n.vertex_dims[v] * m.vertex_dims[v];
    }
    let total = unknown_offset[nv];
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (ai, arr) in a.quiver.arrows.iter().enumerate() {
        let (u, w) = (arr.source, arr.target);
        let ma = &m.arrow_actions[ai];
        let na = &n.arrow_actions[ai];
        // Equation f_w ∘ M_a = N_a ∘ f_u, entry (i, l):
        //   Σ_j f_w[i][j] M_a[j][l] − Σ_j N_a[i][j] f_u[j][l] = 0
        for i in 0..n.vertex_dims[w] {
            for l in 0..m.vertex_dims[u] {
                let mut row = vec![f.zero(); total];
                for j in 0..m.vertex_dims[w] {
                    let c = ma.at(j, l);
                    if f.is_zero(c) {
                        continue;
                    }
                    let idx = unknown_offset[w] + i * m.vertex_dims[w] + j;
                    row[idx] = f.add(&row[idx], c);
                }
                for j in 0..n.vertex_dims[u] {
                    let c = na.at(i, j);
                    if f.is_zero(c) {
                        continue;
                    }
                    let idx = unknown_offset[u] + j * m.vertex_dims[u] + l;
                    row[idx] = f.sub(&row[idx], c);
                }
                if row.iter().any(|x| !f.is_zero(x)) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = if rows.is_empty() {
        ExactMatrix::zeros(f, 0, total)
    } else {
        ExactMatrix::from_rows(f, rows)
    };
    let maps = sys
        .kernel_basis()
        .into_iter()
        .map(|sol| {
            let vertex_maps = (0..nv)
                .map(|v| {
                    ExactMatrix::from_fn(f, n.vertex_dims[v], m.vertex_dims[v], |i, j| {
                        sol[unknown_offset[v] + i * m.vertex_dims[v] + j].clone()
                    })
                })
                .collect();
            ModuleMap::new_unchecked(m.clone(), n.clone(), vertex_maps)
        })
        .collect();
    Ok(maps)
}

pub fn hom_dim(m: &FDModule, n: &FDModule) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

// ---------------------------------------------------------------------------
// Isomorphism testing and Krull–Schmidt decomposition.
// ---------------------------------------------------------------------------

const ISO_SEARCH_TRIES: usize = 60;

/// Searches for an invertible element of Hom(m, n): basis maps first, then
/// seeded random combinations with small coefficients. A returned map is an
/// exact isomorphism; `None` means none was found within the budget.
pub fn find_isomorphism(m: &FDModule, n: &FDModule, seed: u64) -> Result<Option<ModuleMap>> {
    if m.vertex_dims != n.vertex_dims {
        return Ok(None);
    }
    if m.total_dim() == 0 {
        return Ok(Some(ModuleMap::zero(m.clone(), n.clone())));
    }
    let homs = hom_basis(m, n)?;
    if homs.is_empty() {
        return Ok(None);
    }
    for h in &homs {
        if h.is_isomorphism() {
            return Ok(Some(h.clone()));
        }
    }
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_SEARCH_TRIES {
        let mut cand = ModuleMap::zero(m.clone(), n.clone());
        for h in &homs {
            let c = random_scalar(&f, &mut rng);
            cand = cand.add(&h.scale(&c))?;
        }
        if cand.is_isomorphism() {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

pub fn is_isomorphic(m: &FDModule, n: &FDModule, seed: u64) -> Result<bool> {
    Ok(find_isomorphism(m, n, seed)?.is_some())
}

fn random_scalar(f: &FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match f {
        FieldSpec::Rationals => f.from_integer(rng.gen_range(-4i64..=4)),
        FieldSpec::PrimeField(p) => f.from_integer(rng.gen_range(0..*p) as i64),
    }
}

const SPLIT_RANDOM_TRIES: usize = 40;

/// Krull–Schmidt decomposition into indecomposables with multiplicities.
///
/// Splitting endomorphisms are found by Fitting's lemma: for a candidate
/// φ ∈ End(M) and each eigenvalue λ of φ in the ground field, the stabilized
/// power of (φ − λ) splits M unless it is zero or invertible. A piece is
/// certified indecomposable when End/rad is one-dimensional (radical via the
/// trace form, valid in characteristic 0 or above the module dimension).
pub fn decompose(m: &FDModule, seed: u64) -> Result<Vec<(FDModule, usize)>> {
    let pieces = decompose_raw(m, seed)?;
    let mut grouped: Vec<(FDModule, usize)> = Vec::new();
    'outer: for p in pieces {
        for (rep, mult) in grouped.iter_mut() {
            if is_isomorphic(&p, rep, seed)? {
                *mult += 1;
                continue 'outer;
            }
        }
        grouped.push((p, 1));
    }
    Ok(grouped)
}

fn decompose_raw(m: &FDModule, seed: u64) -> Result<Vec<FDModule>> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    if let Some((a, b)) = try_split(m, seed)? {
        let mut out = decompose_raw(&a, seed)?;
        out.extend(decompose_raw(&b, seed)?);
        return Ok(out);
    }
    certify_indecomposable(m)?;
    Ok(vec![m.clone()])
}

fn try_split(m: &FDModule, seed: u64) -> Result<Option<(FDModule, FDModule)>> {
    let n = m.total_dim();
    if n <= 1 {
        return Ok(None);
    }
    let homs = hom_basis(m, m)?;
    if homs.len() <= 1 {
        return Ok(None); // End = k: indecomposable
    }
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x51ab));
    let mut candidates: Vec<ModuleMap> = homs.clone();
    for _ in 0..SPLIT_RANDOM_TRIES {
        let mut cand = ModuleMap::zero(m.clone(), m.clone());
        for h in &homs {
            cand = cand.add(&h.scale(&random_scalar(&f, &mut rng)))?;
        }
        candidates.push(cand);
    }
    for phi in &candidates {
        if let Some(split) = fitting_split(m, phi)? {
            return Ok(Some(split));
        }
    }
    Ok(None)
}

fn fitting_split(m: &FDModule, phi: &ModuleMap) -> Result<Option<(FDModule, FDModule)>> {
    let f = m.field();
    let n = m.total_dim();
    let total = phi.total_matrix();
    let minpoly = minimal_polynomial(&total);
    for lambda in rational_roots(&f, &minpoly) {
        let shifted = phi.add(&ModuleMap::identity(m).scale(&f.neg(&lambda)))?;
        // Stabilize: (φ − λ)^(2^k) with 2^k ≥ n.
        let mut power = shifted;
        let mut e = 1usize;
        while e < n {
            power = power.compose(&power)?;
            e *= 2;
        }
        let r = power.rank();
        if r == 0 || r == n {
            continue;
        }
        let (ker, _) = power.kernel();
        let (im, _) = power.image();
        debug_assert_eq!(ker.total_dim() + im.total_dim(), n);
        return Ok(Some((ker, im)));
    }
    Ok(None)
}

/// Coefficients of the minimal polynomial of a square matrix, constant term
/// first, monic.
pub fn minimal_polynomial(m: &ExactMatrix) -> Vec<Scalar> {
    let f = m.field;
    let n = m.rows();
    let mut powers: Vec<ExactMatrix> = vec![ExactMatrix::identity(f, n)];
    loop {
        // Express the latest power in terms of the previous ones.
        let k = powers.len();
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        for p in &powers {
            let mut col = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    col.push(p.at(i, j).clone());
                }
            }
            cols.push(col);
        }
        let next = powers.last().unwrap().mul(m).expect("square");
        let mut rhs = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                rhs.push(next.at(i, j).clone());
            }
        }
        let sys = ExactMatrix::from_rows(f, transpose_cols(&cols, n * n));
        if let Some(sol) = sys.solve_right(&rhs).expect("shapes align") {
            // x^k − Σ sol_i x^i
            let mut coeffs: Vec<Scalar> = sol.iter().map(|c| f.neg(c)).collect();
            coeffs.push(f.one());
            return coeffs;
        }
        powers.push(next);
        debug_assert!(k <= n, "minimal polynomial degree exceeds dimension");
    }
}

fn transpose_cols(cols: &[Vec<Scalar>], height: usize) -> Vec<Vec<Scalar>> {
    (0..height)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect()
}

/// Certifies End(m)/rad End(m) = k via the trace form on the representation.
fn certify_indecomposable(m: &FDModule) -> Result<()> {
    let f = m.field();
    let n = m.total_dim();
    let p = f.characteristic();
    if p != 0 && (p as usize) <= n {
        return Err(Error::FieldTooSmall(format!(
            "cannot certify indecomposability over F_{p} for a module of dimension {n}"
        )));
    }
    let homs = hom_basis(m, m)?;
    let totals: Vec<ExactMatrix> = homs.iter().map(ModuleMap::total_matrix).collect();
    // Radical of End(m) = kernel of the trace form tr(xy) on the faithful
    // representation (char 0 or char > dim).
    let d = totals.len();
    let gram = ExactMatrix::from_fn(f, d, d, |i, j| {
        let prod = totals[i].mul(&totals[j]).expect("square");
        trace(&prod)
    });
    let rad_dim = d - gram.rank();
    if d - rad_dim == 1 {
        Ok(())
    } else {
        Err(Error::FieldTooSmall(format!(
            "End/rad has dimension {}; a splitting idempotent needs a field extension",
            d - rad_dim
        )))
    }
}

fn trace(m: &ExactMatrix) -> Scalar {
    let f = m.field;
    let mut t = f.zero();
    for i in 0..m.rows() {
        t = f.add(&t, m.at(i, i));
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn ex4() -> Arc<FDAlgebra> {
        Arc::new(samples::example_four(FieldSpec::Rationals))
    }

    #[test]
    fn simples_have_delta_dims() {
        let a = ex4();
        for v in 0..3 {
            let s = simple(&a, v);
            assert_eq!(s.total_dim(), 1);
            assert_eq!(s.vertex_dims[v], 1);
            s.validate().unwrap();
        }
    }

    #[test]
    fn projectives_match_displayed_loewy_series() {
        let a = ex4();
        let p1 = projective(&a, 0);
        let p2 = projective(&a, 1);
        let p3 = projective(&a, 2);
        p1.validate().unwrap();
        assert_eq!(p1.total_dim(), 5);
        assert_eq!(p2.total_dim(), 5);
        assert_eq!(p3.total_dim(), 4);
        assert_eq!(uniserial_vertex_sequence(&p1), Some(vec![0, 1, 2, 0, 1]));
        assert_eq!(uniserial_vertex_sequence(&p2), Some(vec![1, 2, 0, 1, 2]));
        assert_eq!(uniserial_vertex_sequence(&p3), Some(vec![2, 0, 1, 2]));
    }

    #[test]
    fn hom_from_projective_counts_vertex_dim() {
        let a = ex4();
        for v in 0..3 {
            let p = projective(&a, v);
            for w in 0..3 {
                let q = projective(&a, w);
                assert_eq!(hom_dim(&p, &q).unwrap(), q.vertex_dims[v]);
            }
        }
    }

    #[test]
    fn endomorphisms_of_the_running_tilting_module_have_dim_ten() {
        let a = ex4();
        let t = FDModule::direct_sum(&[
            &projective(&a, 0),
            &projective(&a, 1),
            &simple(&a, 1),
        ])
        .unwrap();
        assert_eq!(hom_dim(&t, &t).unwrap(), 10);
    }

    #[test]
    fn hom_between_distinct_simples_vanishes() {
        let a = ex4();
        assert_eq!(hom_dim(&simple(&a, 0), &simple(&a, 1)).unwrap(), 0);
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let a = ex4();
        let p = projective(&a, 0);
        let id = ModuleMap::identity(&p);
        assert_eq!(id.kernel().0.total_dim(), 0);
        let z = ModuleMap::zero(p.clone(), p.clone());
        assert_eq!(z.kernel().0.total_dim(), p.total_dim());
        assert_eq!(z.cokernel().0.total_dim(), p.total_dim());
    }

    #[test]
    fn inclusion_p3_into_p2_has_simple_cokernel() {
        let a = ex4();
        let p3 = projective(&a, 2);
        let p2 = projective(&a, 1);
        let maps = hom_basis(&p3, &p2).unwrap();
        let mono = maps.iter().find(|h| h.is_injective()).expect("inclusion exists");
        let (coker, _) = mono.cokernel();
        assert_eq!(coker.total_dim(), 1);
        assert_eq!(coker.vertex_dims, vec![0, 1, 0]);
        assert!(is_isomorphic(&coker, &simple(&a, 1), 7).unwrap());
    }

    #[test]
    fn rank_nullity_on_module_maps() {
        let a = ex4();
        let p1 = projective(&a, 0);
        let p2 = projective(&a, 1);
        for h in hom_basis(&p1, &p2).unwrap() {
            let (k, _) = h.kernel();
            let (im, _) = h.image();
            assert_eq!(k.total_dim() + im.total_dim(), p1.total_dim());
            let (c, _) = h.cokernel();
            assert_eq!(im.total_dim() + c.total_dim(), p2.total_dim());
        }
    }

    #[test]
    fn tops_and_socles() {
        let a = ex4();
        let p3 = projective(&a, 2);
        let (t, _) = top(&p3);
        assert_eq!(t.vertex_dims, vec![0, 0, 1]);
        let (s, _) = socle(&p3);
        assert_eq!(s.vertex_dims, vec![0, 0, 1]); // bottom layer of P_3 is vertex 3
        let ss = simple(&a, 0);
        let (r, _) = radical(&ss);
        assert_eq!(r.total_dim(), 0);
    }

    #[test]
    fn duality_involutive_on_dimensions() {
        let a = ex4();
        let p1 = projective(&a, 0);
        let op = Arc::new(a.opposite());
        let d = p1.dual(op.clone());
        d.validate().unwrap();
        assert_eq!(d.total_dim(), p1.total_dim());
        let dd = d.dual(Arc::new(op.opposite()));
        assert_eq!(dd.vertex_dims, p1.vertex_dims);
    }

    #[test]
    fn injective_over_selfinjective_is_projective() {
        let a = Arc::new(samples::dual_numbers(FieldSpec::Rationals));
        let p = projective(&a, 0);
        let i = injective(&a, 0);
        i.validate().unwrap();
        assert!(is_isomorphic(&p, &i, 3).unwrap());
    }

    #[test]
    fn regular_module_decomposes_into_projectives() {
        let a = ex4();
        let reg = regular(&a);
        let parts = decompose(&reg, 11).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|(_, mult)| *mult == 1));
        let mut dims: Vec<usize> = parts.iter().map(|(m, _)| m.total_dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![4, 5, 5]);
        for (piece, _) in &parts {
            let found = (0..3).any(|v| {
                is_isomorphic(piece, &projective(&a, v), 13).unwrap()
            });
            assert!(found);
        }
    }

    #[test]
    fn repeated_summand_multiplicity() {
        let a = ex4();
        let s = simple(&a, 0);
        let m = FDModule::direct_sum(&[&s, &s]).unwrap();
        let parts = decompose(&m, 5).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].1, 2);
    }

    #[test]
    fn hom_additivity_over_direct_sums() {
        let a = ex4();
        let p1 = projective(&a, 0);
        let s2 = simple(&a, 1);
        let sum = FDModule::direct_sum(&[&p1, &s2]).unwrap();
        let target = projective(&a, 1);
        assert_eq!(
            hom_dim(&sum, &target).unwrap(),
            hom_dim(&p1, &target).unwrap() + hom_dim(&s2, &target).unwrap()
        );
    }
}
