//! Nakayama detection, Kupisch (admissible) sequences, and the
//! (Fg) ⇔ Gorenstein certificate for Nakayama algebras.

use std::fmt;
use std::sync::Arc;

use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::homology::{is_gorenstein, GorensteinReport, GorensteinVerdict};
use crate::module::{loewy_layers, projective};

/// Loewy lengths of the indecomposable projectives in cyclic order,
/// normalized to the lexicographically smallest rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KupischSeries {
    pub lengths: Vec<usize>,
    pub cyclic: bool,
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lengths.iter().map(usize::to_string).collect();
        write!(
            f,
            "({}){}",
            parts.join(", "),
            if self.cyclic { "" } else { " [linear]" }
        )
    }
}

/// True when every vertex has at most one outgoing and one incoming arrow,
/// so components are lines or single cycles.
pub fn is_nakayama(a: &FDAlgebra) -> bool {
    let q = &a.quiver;
    (0..q.vertices.len()).all(|v| q.arrows_from(v).count() <= 1 && q.arrows_into(v).count() <= 1)
}

/// Kupisch series of a connected Nakayama algebra: Loewy lengths of the
/// projectives ordered along the arrows, normalized (cyclic case) to the
/// lexicographically smallest rotation.
pub fn admissible_sequence(a: &Arc<FDAlgebra>) -> Result<KupischSeries> {
    if !is_nakayama(a) {
        return Err(Error::NotNakayama);
    }
    let q = &a.quiver;
    let n = q.vertices.len();
    // Each component is a line (walked from its source) or a cycle
    // (normalized to the lexicographically smallest rotation). Components
    // are emitted in order of their smallest vertex.
    let mut seen = vec![false; n];
    let mut lengths = Vec::with_capacity(n);
    let mut single_cycle = false;
    for v0 in 0..n {
        if seen[v0] {
            continue;
        }
        // Rewind to the component's start: follow incoming arrows until a
        // source or a loop back to v0.
        let mut start = v0;
        loop {
            let Some(arr) = q.arrows_into(start).next() else {
                break;
            };
            let prev = q.arrows[arr].source;
            if prev == v0 || seen[prev] {
                break;
            }
            start = prev;
            if start == v0 {
                break;
            }
        }
        let mut order = Vec::new();
        let mut at = start;
        let mut cyclic = false;
        loop {
            order.push(at);
            seen[at] = true;
            match q.arrows_from(at).next() {
                Some(arr) => {
                    at = q.arrows[arr].target;
                    if order.contains(&at) {
                        cyclic = true;
                        break;
                    }
                }
                None => break,
            }
        }
        let mut comp: Vec<usize> = order
            .iter()
            .map(|&v| loewy_layers(&projective(a, v)).len())
            .collect();
        if cyclic {
            comp = minimal_rotation(&comp);
            if order.len() == n {
                single_cycle = true;
            }
        }
        lengths.extend(comp);
    }
    Ok(KupischSeries {
        lengths,
        cyclic: single_cycle,
    })
}

fn minimal_rotation(xs: &[usize]) -> Vec<usize> {
    let n = xs.len();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        let rot: Vec<usize> = (0..n).map(|i| xs[(s + i) % n]).collect();
        if best.as_ref().is_none_or(|b| rot < *b) {
            best = Some(rot);
        }
    }
    best.unwrap_or_default()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FgVerdict {
    CertifiedYes,
    CertifiedNo,
    Unknown(usize),
}

impl fmt::Display for FgVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FgVerdict::CertifiedYes => write!(f, "certified yes"),
            FgVerdict::CertifiedNo => write!(f, "certified no"),
            FgVerdict::Unknown(cap) => write!(f, "unknown at cap {cap}"),
        }
    }
}

pub struct NakayamaFgCertificate {
    pub gorenstein: GorensteinReport,
    pub verdict: FgVerdict,
}

/// (Fg) certificate for Nakayama algebras: (Fg) holds exactly when the
/// algebra is Gorenstein, so the Gorenstein computation is the certificate.
pub fn fg_certificate_nakayama(
    a: &Arc<FDAlgebra>,
    cap: usize,
    seed: u64,
) -> Result<NakayamaFgCertificate> {
    if !is_nakayama(a) {
        return Err(Error::NotNakayama);
    }
    let gorenstein = is_gorenstein(a, cap, seed);
    let verdict = match gorenstein.verdict {
        GorensteinVerdict::Yes => FgVerdict::CertifiedYes,
        GorensteinVerdict::No => FgVerdict::CertifiedNo,
        GorensteinVerdict::Unknown(c) => FgVerdict::Unknown(c),
    };
    Ok(NakayamaFgCertificate {
        gorenstein,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::samples;

    #[test]
    fn example_four_is_nakayama_with_series_455() {
        let a = Arc::new(samples::example_four(FieldSpec::Rationals));
        assert!(is_nakayama(&a));
        let s = admissible_sequence(&a).unwrap();
        assert_eq!(s.lengths, vec![4, 5, 5]);
        assert!(s.cyclic);
    }

    #[test]
    fn two_loops_is_not_nakayama() {
        let a = samples::commutative_square(FieldSpec::Rationals);
        assert!(!is_nakayama(&a));
    }

    #[test]
    fn linear_quivers_are_nakayama() {
        let a = Arc::new(samples::linear_quiver_algebra(FieldSpec::Rationals, 2));
        assert!(is_nakayama(&a));
        let s = admissible_sequence(&a).unwrap();
        assert_eq!(s.lengths, vec![2, 1]);
        assert!(!s.cyclic);
    }

    #[test]
    fn truncated_polynomial_series() {
        let a = Arc::new(samples::truncated_polynomials(FieldSpec::Rationals, 3));
        let s = admissible_sequence(&a).unwrap();
        assert_eq!(s.lengths, vec![3]);
    }

    #[test]
    fn semisimple_series_all_ones() {
        let a = Arc::new(samples::two_points(FieldSpec::Rationals));
        let s = admissible_sequence(&a).unwrap();
        assert_eq!(s.lengths, vec![1, 1]);
    }

    #[test]
    fn kupisch_entries_sum_to_dimension() {
        for alg in [
            samples::example_four(FieldSpec::Rationals),
            samples::non_gorenstein_nakayama(FieldSpec::Rationals),
            samples::truncated_polynomials(FieldSpec::Rationals, 4),
        ] {
            let a = Arc::new(alg);
            let s = admissible_sequence(&a).unwrap();
            assert_eq!(s.lengths.iter().sum::<usize>(), a.dim());
        }
    }

    #[test]
    fn normalization_is_rotation_invariant() {
        // Relabel the cycle so the walk starts elsewhere; the normalized
        // series must not change.
        let a = Arc::new(samples::example_four(FieldSpec::Rationals));
        let s1 = admissible_sequence(&a).unwrap();
        let q2 = crate::quiver::Quiver::new(
            vec!["3".into(), "1".into(), "2".into()],
            vec![
                ("c".into(), 0, 1),
                ("a".into(), 1, 2),
                ("b".into(), 2, 0),
            ],
        )
        .unwrap();
        let f = FieldSpec::Rationals;
        let rels = vec![
            crate::quiver::PathExpr::monomial(
                crate::quiver::Path::from_labels(&q2, &["a", "b", "c", "a", "b"]).unwrap(),
                &f,
            ),
            crate::quiver::PathExpr::monomial(
                crate::quiver::Path::from_labels(&q2, &["c", "a", "b", "c"]).unwrap(),
                &f,
            ),
        ];
        let b = Arc::new(crate::algebra::build_quotient(&q2, &rels, 30, f).unwrap());
        let s2 = admissible_sequence(&b).unwrap();
        assert_eq!(s1.lengths, s2.lengths);
    }

    #[test]
    fn fg_certificates() {
        let seed = 1;
        let ex4 = Arc::new(samples::example_four(FieldSpec::Rationals));
        assert_eq!(
            fg_certificate_nakayama(&ex4, 20, seed).unwrap().verdict,
            FgVerdict::CertifiedYes
        );
        let dual = Arc::new(samples::dual_numbers(FieldSpec::Rationals));
        assert_eq!(
            fg_certificate_nakayama(&dual, 10, seed).unwrap().verdict,
            FgVerdict::CertifiedYes
        );
        let a3 = Arc::new(samples::linear_quiver_algebra(FieldSpec::Rationals, 3));
        assert_eq!(
            fg_certificate_nakayama(&a3, 10, seed).unwrap().verdict,
            FgVerdict::CertifiedYes
        );
        let bad = Arc::new(samples::non_gorenstein_nakayama(FieldSpec::Rationals));
        assert_eq!(
            fg_certificate_nakayama(&bad, 20, seed).unwrap().verdict,
            FgVerdict::CertifiedNo
        );
        let not_nak = Arc::new(samples::commutative_square(FieldSpec::Rationals));
        assert!(fg_certificate_nakayama(&not_nak, 10, seed).is_err());
    }
}
