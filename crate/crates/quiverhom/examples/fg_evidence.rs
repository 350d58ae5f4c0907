//! The (Fg) verdict taxonomy on three algebras — certified yes, certified
//! no, and degree-bounded evidence — plus an eAe idempotent reduction.
//!
//! ```bash
//! cargo run --example fg_evidence
//! ```

use std::sync::Arc;

use quiverhom::fg::{eae_reduction, fg_evidence, support_fingerprint};
use quiverhom::field::FieldSpec;
use quiverhom::hochschild::HSelector;
use quiverhom::module::simple;
use quiverhom::present::vertex_sum_idempotent;
use quiverhom::samples;

fn main() {
    let f = FieldSpec::Rationals;
    let seed = 1;

    println!("== Gorenstein Nakayama (certified route)");
    let a = Arc::new(samples::example_four(f));
    let ev = fg_evidence(&a, HSelector::Even, 4, seed).unwrap();
    println!("{ev}\n");

    println!("== non-Gorenstein Nakayama (certified route)");
    let bad = Arc::new(samples::non_gorenstein_nakayama(f));
    let ev = fg_evidence(&bad, HSelector::Even, 4, seed).unwrap();
    println!("verdict         = {}\n", ev.verdict);

    println!("== k[x,y]/(x², y²): generic degree-bounded evidence");
    let square = Arc::new(samples::commutative_square(f));
    let ev = fg_evidence(&square, HSelector::Even, 6, seed).unwrap();
    println!("{ev}\n");

    println!("== support fingerprint of (S, S) over k[x]/(x²)");
    let dual = Arc::new(samples::dual_numbers(f));
    let s = simple(&dual, 0);
    let fp = support_fingerprint(&dual, &s, &s, HSelector::Even, 4, seed).unwrap();
    print!("{fp}");

    println!("\n== eAe reduction on the A_2 path algebra at vertex 1");
    let a2 = Arc::new(samples::linear_quiver_algebra(f, 2));
    let e = vertex_sum_idempotent(&a2, &[0]);
    let rep = eae_reduction(&a2, &e, 10, seed).unwrap();
    println!(
        "hypotheses: pd(B/rad B) = {}, pd(Ae over (eAe)^op) = {} → applicable = {}",
        rep.quotient_simples_pd, rep.corner_module_pd, rep.applicable
    );
    if let Some(corner) = rep.corner {
        println!("corner algebra dim = {}", corner.algebra.dim());
    }
}
