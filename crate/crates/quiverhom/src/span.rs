//! Crate-internal sparse span machinery shared by the quotient constructor
//! and the presentation extractor: a path registry enumerated by length and
//! a sparse echelon whose pivots sit on the largest index of each row.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::quiver::{Path, Quiver};

pub(crate) type SparseVec = Vec<(usize, Scalar)>;

pub(crate) fn merge(f: &FieldSpec, map: &mut BTreeMap<usize, Scalar>, k: usize, v: Scalar) {
    if f.is_zero(&v) {
        return;
    }
    let entry = map.entry(k).or_insert_with(|| f.zero());
    *entry = f.add(entry, &v);
    if f.is_zero(entry) {
        map.remove(&k);
    }
}

pub(crate) struct PathRegistry {
    pub paths: Vec<Path>,
    pub index: HashMap<Path, usize>,
    pub layers: Vec<std::ops::Range<usize>>,
}

impl PathRegistry {
    pub fn new(q: &Quiver) -> PathRegistry {
        let mut reg = PathRegistry {
            paths: Vec::new(),
            index: HashMap::new(),
            layers: Vec::new(),
        };
        for v in 0..q.vertices.len() {
            reg.push(Path::trivial(v));
        }
        reg.layers.push(0..reg.paths.len());
        reg
    }

    pub fn push(&mut self, p: Path) -> usize {
        let id = self.paths.len();
        self.index.insert(p.clone(), id);
        self.paths.push(p);
        id
    }

    /// Adds the next length layer; errors when `budget` would be exceeded.
    pub fn grow(&mut self, q: &Quiver, budget: usize) -> Result<()> {
        let prev = self.layers.last().unwrap().clone();
        let start = self.paths.len();
        let mut new_paths = Vec::new();
        for id in prev {
            let tail = self.paths[id].clone();
            let at = tail.target(q);
            for a in q.arrows_from(at) {
                let mut arrows = tail.arrows.clone();
                arrows.push(a);
                new_paths.push(Path {
                    source: tail.source,
                    arrows,
                });
                if start + new_paths.len() > budget {
                    return Err(Error::NotFiniteDimensional(format!(
                        "more than {budget} paths enumerated; \
                         raise the cap only if the quotient really is finite-dimensional"
                    )));
                }
            }
        }
        for p in new_paths {
            self.push(p);
        }
        self.layers.push(start..self.paths.len());
        Ok(())
    }

    pub fn layer(&self, len: usize) -> std::ops::Range<usize> {
        self.layers.get(len).cloned().unwrap_or(0..0)
    }

    pub fn ids_in_layer(
        &self,
        len: usize,
        source: Option<usize>,
        target: Option<usize>,
        q: &Quiver,
    ) -> Vec<usize> {
        self.layer(len)
            .filter(|&id| {
                let p = &self.paths[id];
                source.is_none_or(|s| p.source == s)
                    && target.is_none_or(|t| p.target(q) == t)
            })
            .collect()
    }
}

/// Sparse echelon over path ids, pivoting on the largest index of each row
/// so longer paths get eliminated in favor of shorter ones.
pub(crate) struct Echelon {
    field: FieldSpec,
    rows: HashMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(field: FieldSpec) -> Echelon {
        Echelon {
            field,
            rows: HashMap::new(),
        }
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let f = &self.field;
        let mut work: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in v {
            merge(f, &mut work, *i, c.clone());
        }
        let mut out: Vec<(usize, Scalar)> = Vec::new();
        while let Some((&idx, _)) = work.iter().next_back() {
            let c = work.remove(&idx).unwrap();
            if f.is_zero(&c) {
                continue;
            }
            if let Some(row) = self.rows.get(&idx) {
                for (j, a) in row {
                    if *j == idx {
                        continue;
                    }
                    merge(f, &mut work, *j, f.neg(&f.mul(&c, a)));
                }
            } else {
                out.push((idx, c));
            }
        }
        out.reverse();
        out
    }

    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let f = self.field;
        let mut red = self.reduce(v);
        if red.is_empty() {
            return false;
        }
        let (pivot, c) = red.last().unwrap().clone();
        let inv = f.inv(&c).expect("pivot nonzero");
        for (_, x) in red.iter_mut() {
            *x = f.mul(x, &inv);
        }
        self.rows.insert(pivot, red);
        true
    }

    pub fn is_pivot(&self, idx: usize) -> bool {
        self.rows.contains_key(&idx)
    }

    pub fn reduces_to_zero(&self, idx: usize) -> bool {
        self.reduce(&vec![(idx, self.field.one())]).is_empty()
    }
}
