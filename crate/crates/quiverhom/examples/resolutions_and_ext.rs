//! Minimal projective resolutions, Ext tables, and homological dimensions
//! with periodicity certificates.
//!
//! ```bash
//! cargo run --example resolutions_and_ext
//! ```

use std::sync::Arc;

use quiverhom::field::FieldSpec;
use quiverhom::homology::{ext_dims, is_gorenstein, min_proj_resolution, projdim};
use quiverhom::module::simple;
use quiverhom::samples;

fn main() {
    let a = Arc::new(samples::example_four(FieldSpec::Rationals));

    for v in 0..3 {
        let s = simple(&a, v);
        let res = min_proj_resolution(&s, 8);
        let terms: Vec<String> = res
            .terms
            .iter()
            .map(|t| format!("P({})", t.gen_vertices.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join("+")))
            .collect();
        println!(
            "S_{}: {} {}",
            v + 1,
            terms.join(" ← "),
            if res.complete { "(complete)" } else { "…" }
        );
        println!("  pd = {}", projdim(&s, 20, 1));
    }

    println!("\nExt tables between simples (degrees 0..4):");
    for i in 0..3 {
        for j in 0..3 {
            let e = ext_dims(&simple(&a, i), &simple(&a, j), 4).unwrap();
            println!("  Ext(S_{}, S_{}) = {}", i + 1, j + 1, e);
        }
    }

    let gor = is_gorenstein(&a, 20, 1);
    println!(
        "\nGorenstein: {} (injdim A = {}, injdim A^op = {})",
        gor.verdict, gor.left, gor.right
    );

    // a certified-infinite projective dimension: the simple over k[x]/(x²)
    let dual = Arc::new(samples::dual_numbers(FieldSpec::Rationals));
    let s = simple(&dual, 0);
    println!("\nover k[x]/(x²): pd S = {}", projdim(&s, 10, 1));
}
