//! Minimal projective resolutions, Ext groups with Yoneda products, and
//! homological dimensions with periodicity certificates.
//!
//! Resolutions are built by iterated projective covers, so minimality is
//! automatic: every differential lands in the radical. Infinite projective
//! dimension is only ever reported together with an exact isomorphism
//! between two syzygies; otherwise the honest answer is `AtLeast(cap)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::ExactMatrix;
use crate::module::{self, is_isomorphic, module_from_basis_ids, radical, FDModule, ModuleMap};

/// A finite direct sum of indecomposable projectives with generator
/// bookkeeping: which algebra basis path backs each coordinate.
#[derive(Clone)]
pub struct ProjTerm {
    pub gen_vertices: Vec<usize>,
    pub module: FDModule,
    /// Per vertex block, the (summand, algebra basis id) behind each
    /// coordinate.
    pub layout: Vec<Vec<(usize, usize)>>,
    /// Per summand, (vertex, position inside that block) of its generator.
    pub gen_coords: Vec<(usize, usize)>,
}

impl ProjTerm {
    pub fn new(a: &Arc<FDAlgebra>, gen_vertices: Vec<usize>) -> ProjTerm {
        let nv = a.num_vertices();
        let mut layout: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
        for (s, &v) in gen_vertices.iter().enumerate() {
            for id in a.paths_from(v) {
                layout[a.target_of(id)].push((s, id));
            }
        }
        let dims: Vec<usize> = layout.iter().map(Vec::len).collect();
        let pos: Vec<HashMap<(usize, usize), usize>> = layout
            .iter()
            .map(|block| {
                block
                    .iter()
                    .enumerate()
                    .map(|(i, &key)| (key, i))
                    .collect()
            })
            .collect();
        let field = a.field;
        let actions: Vec<ExactMatrix> = a
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, arr)| {
                let arrow_idx = a.arrow_basis_index(ai);
                let mut m = ExactMatrix::zeros(field, dims[arr.target], dims[arr.source]);
                for (col, &(s, id)) in layout[arr.source].iter().enumerate() {
                    for (k, c) in a.mul_basis(arrow_idx, id) {
                        let row = pos[arr.target][&(s, *k)];
                        m.set(row, col, c.clone());
                    }
                }
                m
            })
            .collect();
        let module = FDModule::new_unchecked(a.clone(), dims, actions);
        let gen_coords: Vec<(usize, usize)> = gen_vertices
            .iter()
            .enumerate()
            .map(|(s, &v)| {
                let e = a.vertex_idempotent[v];
                (v, pos[v][&(s, e)])
            })
            .collect();
        ProjTerm {
            gen_vertices,
            module,
            layout,
            gen_coords,
        }
    }

    pub fn rank(&self) -> usize {
        self.gen_vertices.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gen_vertices.is_empty()
    }

    /// The module map determined freely by images of the generators; each
    /// image is a vector in the target's block at that generator's vertex.
    pub fn map_from_generator_images(
        &self,
        target: &FDModule,
        images: &[Vec<Scalar>],
    ) -> ModuleMap {
        let a = &self.module.algebra;
        let f = a.field;
        let maps: Vec<ExactMatrix> = (0..a.num_vertices())
            .map(|w| {
                let mut m = ExactMatrix::zeros(
                    f,
                    target.vertex_dims[w],
                    self.module.vertex_dims[w],
                );
                for (col, &(s, id)) in self.layout[w].iter().enumerate() {
                    let p = &a.basis[id];
                    let act = target.path_action(p);
                    let img = act.apply(&images[s]).expect("image lies in the generator block");
                    for (row, v) in img.iter().enumerate() {
                        m.set(row, col, v.clone());
                    }
                }
                m
            })
            .collect();
        ModuleMap::new_unchecked(self.module.clone(), target.clone(), maps)
    }

    /// Image of one generator under a map out of this term.
    pub fn generator_image(&self, map: &ModuleMap, s: usize) -> (usize, Vec<Scalar>) {
        let (v, pos) = self.gen_coords[s];
        (v, map.vertex_maps[v].column(pos))
    }
}

/// Projective cover of a module: generators lift a basis of the top.
pub fn cover(m: &FDModule) -> (ProjTerm, ModuleMap) {
    let a = &m.algebra;
    let f = a.field;
    let (_, rad_incl) = radical(m);
    let mut gen_vertices = Vec::new();
    let mut images = Vec::new();
    for v in 0..a.num_vertices() {
        let b = &rad_incl.vertex_maps[v];
        let id = ExactMatrix::identity(f, m.vertex_dims[v]);
        let full = b.hstack(&id).expect("same height");
        for c in full.independent_columns() {
            if c >= b.cols() {
                gen_vertices.push(v);
                images.push(id.column(c - b.cols()));
            }
        }
    }
    let term = ProjTerm::new(a, gen_vertices);
    let map = term.map_from_generator_images(m, &images);
    debug_assert!(map.is_surjective(), "cover must be surjective");
    (term, map)
}

pub struct ProjResolution {
    pub module: FDModule,
    pub terms: Vec<ProjTerm>,
    /// maps[0]: P_0 → M is the augmentation; maps[n]: P_n → P_{n-1}.
    pub maps: Vec<ModuleMap>,
    /// syzygies[n] = Ω^{n+1}, the kernel at stage n, as an abstract module.
    pub syzygies: Vec<FDModule>,
    pub complete: bool,
}

impl ProjResolution {
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// Differentials compose to zero, and kernel = image degreewise.
    pub fn verify_exactness(&self) -> Result<()> {
        for n in 1..self.maps.len() {
            let comp = self.maps[n - 1].compose(&self.maps[n])?;
            if !comp.is_zero() {
                return Err(Error::Invalid(format!("d∘d nonzero at stage {n}")));
            }
            let expected_kernel = self.terms[n - 1].module.total_dim() - self.maps[n - 1].rank();
            if self.maps[n].rank() != expected_kernel {
                return Err(Error::Invalid(format!("homology nonzero at stage {n}")));
            }
        }
        if self.complete {
            if let (Some(last), Some(term)) = (self.maps.last(), self.terms.last()) {
                if last.rank() != term.module.total_dim() {
                    return Err(Error::Invalid("final differential not injective".into()));
                }
            }
        }
        Ok(())
    }

    /// Every differential lands in the radical of its target.
    pub fn verify_minimality(&self) -> Result<()> {
        for n in 1..self.maps.len() {
            let (_, proj) = module::top(&self.terms[n - 1].module);
            if !proj.compose(&self.maps[n])?.is_zero() {
                return Err(Error::Invalid(format!(
                    "differential {n} does not land in the radical"
                )));
            }
        }
        Ok(())
    }
}

/// Minimal projective resolution up to P_cap (or shorter when the module
/// has finite projective dimension below the cap).
pub fn min_proj_resolution(m: &FDModule, cap: usize) -> ProjResolution {
    let mut terms = Vec::new();
    let mut maps = Vec::new();
    let mut syzygies = Vec::new();
    let mut complete = false;
    let mut current = m.clone();
    // Inclusion of the current syzygy into the previous term.
    let mut prev_incl: Option<ModuleMap> = None;
    for _ in 0..=cap {
        let (term, cover_map) = cover(&current);
        if term.is_zero() {
            complete = true;
            break;
        }
        let d = match &prev_incl {
            None => cover_map.clone(),
            Some(incl) => incl.compose(&cover_map).expect("algebra shared"),
        };
        let (ker, ker_incl) = cover_map.kernel();
        terms.push(term);
        maps.push(d);
        if ker.total_dim() == 0 {
            complete = true;
            break;
        }
        syzygies.push(ker.clone());
        current = ker;
        prev_incl = Some(ker_incl);
    }
    ProjResolution {
        module: m.clone(),
        terms,
        maps,
        syzygies,
        complete,
    }
}

/// Degree-indexed Ext dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims(pub Vec<usize>);

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", strs.join(", "))
    }
}

/// Ext^*(M, N) up to a degree cap, with stored cocycle representatives in
/// generator coordinates.
pub struct ExtComputation {
    pub res: ProjResolution,
    pub target: FDModule,
    pub cap: usize,
    /// dim Hom(P_n, N) per degree.
    hom_dims: Vec<usize>,
    /// Coordinate offsets of each summand block inside Hom(P_n, N).
    offsets: Vec<Vec<usize>>,
    /// Coboundary D_n: Hom(P_n, N) → Hom(P_{n+1}, N).
    cobound: Vec<ExactMatrix>,
    /// Per degree: chosen representatives of a basis of Ext^n.
    pub reps: Vec<Vec<Vec<Scalar>>>,
}

impl ExtComputation {
    pub fn dims(&self) -> GradedDims {
        GradedDims(self.reps.iter().map(Vec::len).collect())
    }

    pub fn dim(&self, n: usize) -> usize {
        self.reps.get(n).map_or(0, Vec::len)
    }

    /// Turns hom-coordinates at degree n into an honest module map
    /// P_n → N.
    pub fn coords_to_map(&self, n: usize, coords: &[Scalar]) -> ModuleMap {
        let term = &self.res.terms[n];
        let f = self.target.field();
        let images: Vec<Vec<Scalar>> = (0..term.rank())
            .map(|s| {
                let v = term.gen_vertices[s];
                let d = self.target.vertex_dims[v];
                let off = self.offsets[n][s];
                (0..d).map(|i| coords[off + i].clone()).collect()
            })
            .collect();
        let _ = f;
        term.map_from_generator_images(&self.target, &images)
    }

    /// Reads a map P_n → N back into hom-coordinates.
    pub fn map_to_coords(&self, n: usize, map: &ModuleMap) -> Vec<Scalar> {
        let term = &self.res.terms[n];
        let mut out = vec![self.target.field().zero(); self.hom_dims[n]];
        for s in 0..term.rank() {
            let (_, img) = term.generator_image(map, s);
            let off = self.offsets[n][s];
            for (i, v) in img.into_iter().enumerate() {
                out[off + i] = v;
            }
        }
        out
    }

    /// Expresses a cocycle (in hom-coordinates) in the chosen Ext basis at
    /// degree n; errors if the vector is not a cocycle.
    pub fn class_coords(&self, n: usize, cocycle: &[Scalar]) -> Result<Vec<Scalar>> {
        let f = self.target.field();
        if self.dim(n) == 0 {
            // must be a coboundary; nothing to express
            return Ok(Vec::new());
        }
        let im_cols = self.image_columns(n);
        let rep_cols: Vec<Vec<Scalar>> = self.reps[n].clone();
        let mut cols = im_cols;
        let im_count = cols.len();
        cols.extend(rep_cols);
        let h = self.hom_dims[n];
        let m = ExactMatrix::from_fn(f, h, cols.len(), |i, j| cols[j][i].clone());
        let sol = m
            .solve_right(cocycle)?
            .ok_or_else(|| Error::Invalid("vector is not a cocycle class member".into()))?;
        Ok(sol[im_count..].to_vec())
    }

    fn image_columns(&self, n: usize) -> Vec<Vec<Scalar>> {
        if n == 0 {
            return Vec::new();
        }
        let d = &self.cobound[n - 1];
        d.independent_columns()
            .into_iter()
            .map(|j| {
                let mut col = Vec::with_capacity(d.rows());
                for i in 0..d.rows() {
                    col.push(d.at(i, j).clone());
                }
                col
            })
            .collect()
    }

    /// Representative of the n-th basis class as a module map.
    pub fn rep_map(&self, n: usize, idx: usize) -> ModuleMap {
        self.coords_to_map(n, &self.reps[n][idx])
    }
}

/// Computes Ext^*(m, n) for 0 ≤ degree ≤ cap.
pub fn ext_computation(m: &FDModule, n: &FDModule, cap: usize) -> Result<ExtComputation> {
    if !module::same_algebra(m, n) {
        return Err(Error::AlgebraMismatch);
    }
    let res = min_proj_resolution(m, cap + 1);
    ext_over_resolution(res, n, cap)
}

/// Same, but over a resolution the caller already has (shared resolutions
/// make the Hochschild tables affordable).
pub fn ext_over_resolution(
    res: ProjResolution,
    target: &FDModule,
    cap: usize,
) -> Result<ExtComputation> {
    let f = target.field();
    let built = res.terms.len();
    let mut hom_dims = Vec::new();
    let mut offsets = Vec::new();
    for term in &res.terms {
        let mut offs = Vec::with_capacity(term.rank());
        let mut acc = 0usize;
        for &v in &term.gen_vertices {
            offs.push(acc);
            acc += target.vertex_dims[v];
        }
        offsets.push(offs);
        hom_dims.push(acc);
    }
    // Coboundaries D_n for 0 ≤ n < built (D_{built-1} maps into the next,
    // possibly missing, term: treat absent terms as zero).
    let mut cobound = Vec::new();
    for nn in 0..built {
        let d = if nn + 1 < built {
            precompose_matrix(&res.maps[nn + 1], &res.terms[nn], &res.terms[nn + 1], target)
        } else {
            ExactMatrix::zeros(f, 0, hom_dims[nn])
        };
        cobound.push(d);
    }
    // Representatives: kernel of D_n modulo the image of D_{n-1}.
    let mut reps = Vec::new();
    for nn in 0..=cap {
        if nn >= built {
            reps.push(Vec::new());
            continue;
        }
        let kernel = cobound[nn].kernel_basis();
        let image: Vec<Vec<Scalar>> = if nn == 0 {
            Vec::new()
        } else {
            cobound[nn - 1]
                .independent_columns()
                .into_iter()
                .map(|j| cobound[nn - 1].column(j))
                .collect()
        };
        let h = hom_dims[nn];
        let total_cols: Vec<Vec<Scalar>> = image.iter().cloned().chain(kernel.iter().cloned()).collect();
        let m = ExactMatrix::from_fn(f, h, total_cols.len(), |i, j| total_cols[j][i].clone());
        let chosen: Vec<Vec<Scalar>> = m
            .independent_columns()
            .into_iter()
            .filter(|&j| j >= image.len())
            .map(|j| total_cols[j].clone())
            .collect();
        reps.push(chosen);
    }
    Ok(ExtComputation {
        res,
        target: target.clone(),
        cap,
        hom_dims,
        offsets,
        cobound,
        reps,
    })
}


/// Matrix of precomposition with d: Q → P on generator coordinates:
/// Hom(P, N) → Hom(Q, N), f ↦ f ∘ d.
pub fn precompose_matrix(
    d: &ModuleMap,
    p_term: &ProjTerm,
    q_term: &ProjTerm,
    target: &FDModule,
) -> ExactMatrix {
    let f = target.field();
    let p_offsets = hom_offsets(p_term, target);
    let q_offsets = hom_offsets(q_term, target);
    let rows = *q_offsets.last().unwrap_or(&0);
    let cols = *p_offsets.last().unwrap_or(&0);
    let mut m = ExactMatrix::zeros(f, rows, cols);
    for s_q in 0..q_term.rank() {
        let (v, dvec) = q_term.generator_image(d, s_q);
        for (col_idx, &(s, id)) in p_term.layout[v].iter().enumerate() {
            let c = &dvec[col_idx];
            if f.is_zero(c) {
                continue;
            }
            let act = target.path_action(&p_term.module.algebra.basis[id]); // N_{v_s} → N_v
            for i2 in 0..act.rows() {
                for i in 0..act.cols() {
                    let val = act.at(i2, i);
                    if f.is_zero(val) {
                        continue;
                    }
                    let r = q_offsets[s_q] + i2;
                    let cidx = p_offsets[s] + i;
                    let cur = m.at(r, cidx).clone();
                    m.set(r, cidx, f.add(&cur, &f.mul(c, val)));
                }
            }
        }
    }
    m
}

/// Matrix of postcomposition with g: N → N' on generator coordinates:
/// Hom(P, N) → Hom(P, N').
pub fn postcompose_matrix(term: &ProjTerm, g: &ModuleMap) -> ExactMatrix {
    let f = g.source.field();
    let src_off = hom_offsets(term, &g.source);
    let tgt_off = hom_offsets(term, &g.target);
    let mut m = ExactMatrix::zeros(
        f,
        *tgt_off.last().unwrap_or(&0),
        *src_off.last().unwrap_or(&0),
    );
    for s in 0..term.rank() {
        let v = term.gen_vertices[s];
        let block = &g.vertex_maps[v];
        for i in 0..block.rows() {
            for j in 0..block.cols() {
                m.set(tgt_off[s] + i, src_off[s] + j, block.at(i, j).clone());
            }
        }
    }
    m
}

/// Generator-coordinate offsets of Hom(term, target): one block of size
/// dim target_{v_s} per summand, plus the total length at the end.
pub fn hom_offsets(term: &ProjTerm, target: &FDModule) -> Vec<usize> {
    let mut offs = Vec::with_capacity(term.rank() + 1);
    let mut acc = 0usize;
    for &v in &term.gen_vertices {
        offs.push(acc);
        acc += target.vertex_dims[v];
    }
    offs.push(acc);
    offs
}

/// Ext dimension table: dims of Ext^0..Ext^cap.
pub fn ext_dims(m: &FDModule, n: &FDModule, cap: usize) -> Result<GradedDims> {
    Ok(ext_computation(m, n, cap)?.dims())
}

/// Lifts a degree-p cocycle P^M_p → N to a chain map over the resolution of
/// N, to the requested depth: returns f_0, …, f_depth with
/// f_i: P^M_{p+i} → P^N_i.
pub fn lift_cocycle(
    res_m: &ProjResolution,
    res_n: &ProjResolution,
    cocycle: &ModuleMap,
    p: usize,
    depth: usize,
) -> Result<Vec<ModuleMap>> {
    if p + depth + 1 > res_m.terms.len() && !res_m.complete {
        return Err(Error::DegreeOverflow {
            degree: p + depth,
            cap: res_m.terms.len().saturating_sub(1),
        });
    }
    let mut lifts: Vec<ModuleMap> = Vec::new();
    for i in 0..=depth {
        let Some(source_term) = res_m.terms.get(p + i) else {
            // resolution ended: remaining lifts are zero maps
            break;
        };
        let target_term = res_n
            .terms
            .get(i)
            .ok_or(Error::DegreeOverflow { degree: i, cap: res_n.terms.len() })?;
        let through = if i == 0 {
            &res_n.maps[0]
        } else {
            &res_n.maps[i]
        };
        let mut images = Vec::with_capacity(source_term.rank());
        for s in 0..source_term.rank() {
            let v = source_term.gen_vertices[s];
            let rhs: Vec<Scalar> = if i == 0 {
                cocycle.vertex_maps[v].column(source_term.gen_coords[s].1)
            } else {
                let prev = &lifts[i - 1];
                let dmap = &res_m.maps[p + i];
                let composed = prev.compose(dmap)?;
                composed.vertex_maps[v].column(source_term.gen_coords[s].1)
            };
            let sol = through.vertex_maps[v]
                .solve_right(&rhs)?
                .ok_or_else(|| Error::Invalid("chain lifting failed: rhs not in image".into()))?;
            images.push(sol);
        }
        lifts.push(source_term.map_from_generator_images(&target_term.module, &images));
    }
    Ok(lifts)
}

/// Yoneda composite of e1 ∈ Ext^p(M, N) and e2 ∈ Ext^q(N, L): the class of
/// e2 ∘ (lift of e1)_q in Ext^{p+q}(M, L).
pub fn yoneda_compose(
    res_m: &ProjResolution,
    res_n: &ProjResolution,
    e1: &ModuleMap,
    p: usize,
    e2: &ModuleMap,
    q: usize,
) -> Result<ModuleMap> {
    if res_m.terms.get(p + q).is_none() {
        if res_m.complete {
            // Ext^{p+q} = 0; represent by the zero map from a zero term —
            // callers treat a missing term as the zero class.
            return Err(Error::DegreeOverflow {
                degree: p + q,
                cap: res_m.terms.len().saturating_sub(1),
            });
        }
        return Err(Error::DegreeOverflow {
            degree: p + q,
            cap: res_m.terms.len().saturating_sub(1),
        });
    }
    let lifts = lift_cocycle(res_m, res_n, e1, p, q)?;
    if lifts.len() <= q {
        // source resolution ended before depth q: composite is zero
        let term = &res_m.terms[p + q];
        return Ok(ModuleMap::zero(term.module.clone(), e2.target.clone()));
    }
    e2.compose(&lifts[q])
}

// ---------------------------------------------------------------------------
// Projective and injective dimension.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjDimResult {
    Finite(usize),
    AtLeast(usize),
    /// Certified by an exact isomorphism Ω^offset ≅ Ω^{offset+period}.
    InfinitePeriodic {
        period: usize,
        offset: usize,
    },
}

impl ProjDimResult {
    pub fn is_finite(&self) -> bool {
        matches!(self, ProjDimResult::Finite(_))
    }

    pub fn is_certified_infinite(&self) -> bool {
        matches!(self, ProjDimResult::InfinitePeriodic { .. })
    }
}

impl fmt::Display for ProjDimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjDimResult::Finite(n) => write!(f, "{n}"),
            ProjDimResult::AtLeast(n) => write!(f, ">= {n} (cap reached)"),
            ProjDimResult::InfinitePeriodic { period, offset } => {
                write!(f, "infinite (syzygy period {period} from Ω^{offset})")
            }
        }
    }
}

/// Projective dimension up to `cap`, certifying infinity via syzygy
/// periodicity (Ω^i ≅ Ω^j exactly, i < j).
pub fn projdim(m: &FDModule, cap: usize, seed: u64) -> ProjDimResult {
    if m.is_zero() {
        return ProjDimResult::Finite(0);
    }
    // syzygy list starting at Ω^0 = m
    let mut syzygies: Vec<FDModule> = vec![m.clone()];
    let mut current = m.clone();
    for n in 0..=cap {
        let (term, map) = cover(&current);
        let _ = term;
        let (ker, _) = map.kernel();
        if ker.total_dim() == 0 {
            return ProjDimResult::Finite(n);
        }
        for (i, old) in syzygies.iter().enumerate() {
            if old.vertex_dims == ker.vertex_dims {
                if let Ok(true) = is_isomorphic(old, &ker, seed) {
                    return ProjDimResult::InfinitePeriodic {
                        period: n + 1 - i,
                        offset: i,
                    };
                }
            }
        }
        syzygies.push(ker.clone());
        current = ker;
    }
    ProjDimResult::AtLeast(cap)
}

/// Injective dimension of m = projective dimension of its dual over the
/// opposite algebra.
pub fn injdim(m: &FDModule, cap: usize, seed: u64) -> ProjDimResult {
    let op = Arc::new(m.algebra.opposite());
    projdim(&m.dual(op), cap, seed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GorensteinVerdict {
    Yes,
    No,
    Unknown(usize),
}

impl fmt::Display for GorensteinVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GorensteinVerdict::Yes => write!(f, "yes"),
            GorensteinVerdict::No => write!(f, "no"),
            GorensteinVerdict::Unknown(cap) => write!(f, "unknown at cap {cap}"),
        }
    }
}

pub struct GorensteinReport {
    pub left: ProjDimResult,
    pub right: ProjDimResult,
    pub verdict: GorensteinVerdict,
}

/// Iwanaga–Gorenstein test: finite injective dimension of the regular
/// module on both sides.
pub fn is_gorenstein(a: &Arc<FDAlgebra>, cap: usize, seed: u64) -> GorensteinReport {
    let left = injdim(&module::regular(a), cap, seed);
    let op = Arc::new(a.opposite());
    let right = injdim(&module::regular(&op), cap, seed);
    let verdict = match (&left, &right) {
        (ProjDimResult::Finite(_), ProjDimResult::Finite(_)) => GorensteinVerdict::Yes,
        (ProjDimResult::InfinitePeriodic { .. }, _)
        | (_, ProjDimResult::InfinitePeriodic { .. }) => GorensteinVerdict::No,
        _ => GorensteinVerdict::Unknown(cap),
    };
    GorensteinReport {
        left,
        right,
        verdict,
    }
}

/// The regular module of the algebra (kept here so resolution callers can
/// avoid re-deriving the closure of basis ids).
pub fn regular_module(a: &Arc<FDAlgebra>) -> FDModule {
    module_from_basis_ids(a, &(0..a.dim()).collect::<Vec<_>>()).0
}
