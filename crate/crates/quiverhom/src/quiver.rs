//! Quivers, paths, and formal linear combinations of paths.
//!
//! Paths are stored in traversal order (`arrows[0]` is walked first).
//! Written multiplicatively we use function order — in a product the
//! rightmost factor is applied first — so the displayed name of the path
//! `[a, b, c]` is `cba`. Parsers and printers translate between the two.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, usize, usize)>) -> Result<Quiver> {
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate vertex label `{v}`")));
            }
        }
        let n = vertices.len();
        let mut labels = HashMap::new();
        let arrows = arrows
            .into_iter()
            .map(|(label, source, target)| {
                if source >= n || target >= n {
                    return Err(Error::Invalid(format!(
                        "arrow `{label}` references a missing vertex"
                    )));
                }
                if labels.insert(label.clone(), ()).is_some() {
                    return Err(Error::Invalid(format!("duplicate arrow label `{label}`")));
                }
                Ok(Arrow {
                    label,
                    source,
                    target,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Quiver { vertices, arrows })
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == v)
            .map(|(i, _)| i)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == v)
            .map(|(i, _)| i)
    }

    /// Reverses every arrow; vertex set and labels are kept.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    label: a.label.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A composable sequence of arrows. `arrows` is in traversal order;
/// the empty sequence is the trivial path at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            source: v,
            arrows: Vec::new(),
        }
    }

    pub fn of_arrow(q: &Quiver, a: usize) -> Path {
        Path {
            source: q.arrows[a].source,
            arrows: vec![a],
        }
    }

    /// Builds a path from arrow labels in traversal order.
    pub fn from_labels(q: &Quiver, labels: &[&str]) -> Result<Path> {
        let idx: Vec<usize> = labels
            .iter()
            .map(|l| {
                q.arrow_index(l)
                    .ok_or_else(|| Error::Invalid(format!("unknown arrow `{l}`")))
            })
            .collect::<Result<_>>()?;
        if idx.is_empty() {
            return Err(Error::Invalid("empty path needs a vertex".into()));
        }
        let path = Path {
            source: q.arrows[idx[0]].source,
            arrows: idx,
        };
        if !path.is_composable(q) {
            return Err(Error::Invalid(format!(
                "arrows {} do not compose",
                labels.join("*")
            )));
        }
        Ok(path)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.source, |&a| q.arrows[a].target)
    }

    pub fn is_composable(&self, q: &Quiver) -> bool {
        let mut at = self.source;
        for &a in &self.arrows {
            if q.arrows[a].source != at {
                return false;
            }
            at = q.arrows[a].target;
        }
        true
    }

    /// `self` after `other` (function order): traverse `other` first.
    /// None when the endpoints do not match.
    pub fn compose_after(&self, q: &Quiver, other: &Path) -> Option<Path> {
        if other.target(q) != self.source {
            return None;
        }
        let mut arrows = other.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path {
            source: other.source,
            arrows,
        })
    }

    /// The same walk in the reversed quiver.
    pub fn reversed(&self, q: &Quiver) -> Path {
        Path {
            source: self.target(q),
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    /// Function-order name: rightmost arrow is traversed first.
    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertices[self.source])
        } else {
            self.arrows
                .iter()
                .rev()
                .map(|&a| q.arrows[a].label.clone())
                .collect::<Vec<_>>()
                .join("")
        }
    }

    /// Traversal-order name with explicit separators, as used in the
    /// algebra file format.
    pub fn display_traversal(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertices[self.source])
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows[a].label.clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A formal linear combination of paths with common source and target
/// (a uniform relation element).
#[derive(Clone, Debug, PartialEq)]
pub struct PathExpr {
    pub terms: Vec<(Scalar, Path)>,
}

impl PathExpr {
    pub fn monomial(path: Path, field: &FieldSpec) -> PathExpr {
        PathExpr {
            terms: vec![(field.one(), path)],
        }
    }

    pub fn from_terms(terms: Vec<(Scalar, Path)>) -> PathExpr {
        PathExpr { terms }
    }

    /// Validates composability and source/target uniformity; returns
    /// (source, target) of the expression.
    pub fn validate(&self, q: &Quiver, field: &FieldSpec) -> Result<(usize, usize)> {
        let mut endpoints = None;
        for (c, p) in &self.terms {
            if field.is_zero(c) {
                continue;
            }
            if !p.is_composable(q) {
                return Err(Error::Invalid(format!(
                    "relation monomial `{}` is not composable",
                    p.display_traversal(q)
                )));
            }
            let e = (p.source, p.target(q));
            match endpoints {
                None => endpoints = Some(e),
                Some(prev) if prev != e => {
                    return Err(Error::Invalid(
                        "relation monomials must share source and target".into(),
                    ))
                }
                _ => {}
            }
        }
        endpoints.ok_or_else(|| Error::Invalid("empty relation".into()))
    }

    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).max().unwrap_or(0)
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }

    pub fn reversed(&self, q: &Quiver) -> PathExpr {
        PathExpr {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.reversed(q)))
                .collect(),
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, p)| format!("{} {}", c.render(), p.display_traversal(q)))
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} -> {}", self.label, self.source, self.target)
    }
}
