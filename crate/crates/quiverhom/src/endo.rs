//! Endomorphism algebras of modules, presented by quiver and relations.
//!
//! The module is decomposed and reduced to one copy per isomorphism class
//! (basicization); the endomorphism algebra is assembled blockwise from
//! Hom spaces between the summands, with composition as multiplication, and
//! then run through the generic presentation extractor. Summands are ordered
//! by descending dimension data so vertex numbering is reproducible.

use std::fmt;

use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::ExactMatrix;
use crate::module::{decompose, hom_basis, FDModule, ModuleMap};
use crate::present::{present_raw, PresentedAlgebra, RawAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndoConvention {
    /// Multiplication is composition: (f · g) = f ∘ g, g applied first.
    ActOnLeft,
    /// The opposite ring End(T)^op.
    Opposite,
}

pub struct EndoAlgebra {
    /// Basic list of indecomposable summands, deterministically ordered;
    /// vertex v of the presented quiver corresponds to summands[v].
    pub summands: Vec<FDModule>,
    pub multiplicities: Vec<usize>,
    pub convention: EndoConvention,
    pub presented: PresentedAlgebra,
    /// blocks[i][j]: basis of Hom(summands[i], summands[j]).
    blocks: Vec<Vec<Vec<ModuleMap>>>,
    /// Raw coordinate offset of each block.
    block_offsets: Vec<Vec<usize>>,
}

impl EndoAlgebra {
    pub fn algebra(&self) -> &FDAlgebra {
        &self.presented.algebra
    }

    pub fn dim(&self) -> usize {
        self.presented.algebra.dim()
    }

    /// Decodes a presented arrow into the block map it lifts: returns
    /// (source summand, target summand, map between them).
    pub fn arrow_map(&self, arrow: usize) -> (usize, usize, ModuleMap) {
        let arr = &self.presented.algebra.quiver.arrows[arrow];
        let raw = &self.presented.arrow_images[arrow];
        let (i, j) = match self.convention {
            EndoConvention::ActOnLeft => (arr.source, arr.target),
            // in the opposite algebra an arrow u → v lifts a map T_v → T_u
            EndoConvention::Opposite => (arr.target, arr.source),
        };
        let f = self.summands[i].field();
        let mut map = ModuleMap::zero(self.summands[i].clone(), self.summands[j].clone());
        let off = self.block_offsets[i][j];
        for (k, h) in self.blocks[i][j].iter().enumerate() {
            let c = &raw[off + k];
            if !f.is_zero(c) {
                map = map.add(&h.scale(c)).expect("same block");
            }
        }
        map
            .verify()
            .expect("arrow images are genuine module maps");
        (i, j, map)
    }
}

impl fmt::Display for EndoAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "endomorphism algebra of dimension {} ({} summand classes)",
            self.dim(),
            self.summands.len()
        )?;
        for arr in &self.presented.algebra.quiver.arrows {
            writeln!(f, "  arrow {}: {} -> {}", arr.label, arr.source + 1, arr.target + 1)?;
        }
        Ok(())
    }
}

/// Builds End_A(t) (or its opposite) as a presented algebra.
pub fn endomorphism_algebra(
    t: &FDModule,
    convention: EndoConvention,
    cap: usize,
    seed: u64,
) -> Result<EndoAlgebra> {
    let parts = decompose(t, seed)?;
    let mut parts: Vec<(FDModule, usize)> = parts;
    parts.sort_by(|(a, _), (b, _)| {
        b.total_dim()
            .cmp(&a.total_dim())
            .then_with(|| b.vertex_dims.cmp(&a.vertex_dims))
    });
    let summands: Vec<FDModule> = parts.iter().map(|(m, _)| m.clone()).collect();
    let multiplicities: Vec<usize> = parts.iter().map(|(_, k)| *k).collect();
    let n = summands.len();
    let field = t.field();

    let mut blocks: Vec<Vec<Vec<ModuleMap>>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(hom_basis(&summands[i], &summands[j])?);
        }
        blocks.push(row);
    }
    let mut block_offsets = vec![vec![0usize; n]; n];
    let mut dim = 0usize;
    for (i, row) in blocks.iter().enumerate() {
        for (j, b) in row.iter().enumerate() {
            block_offsets[i][j] = dim;
            dim += b.len();
        }
    }

    // Express a map T_i → T_j in raw coordinates.
    let express = |i: usize, j: usize, map: &ModuleMap| -> Result<Vec<Scalar>> {
        let basis = &blocks[i][j];
        let mut out = vec![field.zero(); dim];
        if basis.is_empty() {
            if map.is_zero() {
                return Ok(out);
            }
            return Err(Error::Invalid("map outside its hom block".into()));
        }
        let cols: Vec<Vec<Scalar>> = basis.iter().map(flatten).collect();
        let rhs = flatten(map);
        let m = ExactMatrix::from_fn(field, rhs.len(), cols.len(), |r, c| cols[c][r].clone());
        let sol = m
            .solve_right(&rhs)?
            .ok_or_else(|| Error::Invalid("map outside its hom block".into()))?;
        for (k, c) in sol.into_iter().enumerate() {
            out[block_offsets[i][j] + k] = c;
        }
        Ok(out)
    };

    // Multiplication table in composition order, then flipped if the
    // opposite convention was requested.
    let mut mul: Vec<Vec<Vec<Scalar>>> = vec![vec![vec![field.zero(); dim]; dim]; dim];
    for i in 0..n {
        for j in 0..n {
            for (x, fx) in blocks[i][j].iter().enumerate() {
                let xi = block_offsets[i][j] + x;
                for k in 0..n {
                    for (y, gy) in blocks[k][i].iter().enumerate() {
                        let yi = block_offsets[k][i] + y;
                        // f: T_i → T_j after g: T_k → T_i gives T_k → T_j
                        let comp = fx.compose(gy)?;
                        mul[xi][yi] = express(k, j, &comp)?;
                    }
                }
            }
        }
    }
    if convention == EndoConvention::Opposite {
        let d = dim;
        let mut flipped = vec![vec![vec![field.zero(); d]; d]; d];
        for (i, row) in mul.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                flipped[j][i] = v.clone();
            }
        }
        mul = flipped;
    }

    let idempotents: Vec<Vec<Scalar>> = (0..n)
        .map(|i| express(i, i, &ModuleMap::identity(&summands[i])))
        .collect::<Result<_>>()?;

    // Radical: all off-diagonal blocks, plus the traceless part of each
    // local diagonal block (φ − (tr φ / dim) id is nilpotent there).
    let mut radical: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for (k, _) in blocks[i][j].iter().enumerate() {
                let mut v = vec![field.zero(); dim];
                v[block_offsets[i][j] + k] = field.one();
                radical.push(v);
            }
        }
    }
    for i in 0..n {
        let d_i = summands[i].total_dim();
        let p = field.characteristic();
        if p != 0 && d_i.is_multiple_of(p as usize) {
            return Err(Error::SmallCharacteristic(format!(
                "summand dimension {d_i} vanishes in characteristic {p}"
            )));
        }
        let inv_d = field.inv(&field.from_integer(d_i as i64))?;
        let mut traceless: Vec<Vec<Scalar>> = Vec::new();
        for h in &blocks[i][i] {
            let total = h.total_matrix();
            let mut tr = field.zero();
            for r in 0..total.rows() {
                tr = field.add(&tr, total.at(r, r));
            }
            let lambda = field.mul(&tr, &inv_d);
            let nil = h.add(&ModuleMap::identity(&summands[i]).scale(&field.neg(&lambda)))?;
            traceless.push(express(i, i, &nil)?);
        }
        let m = ExactMatrix::from_fn(field, dim, traceless.len(), |r, c| traceless[c][r].clone());
        for c in m.independent_columns() {
            radical.push(traceless[c].clone());
        }
    }

    let raw = RawAlgebra {
        field,
        dim,
        mul,
        idempotents,
        radical,
    };
    let presented = present_raw(&raw, cap)?;
    Ok(EndoAlgebra {
        summands,
        multiplicities,
        convention,
        presented,
        blocks,
        block_offsets,
    })
}

fn flatten(h: &ModuleMap) -> Vec<Scalar> {
    let mut out = Vec::new();
    for b in &h.vertex_maps {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out.push(b.at(i, j).clone());
            }
        }
    }
    out
}
