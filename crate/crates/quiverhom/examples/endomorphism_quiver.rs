//! Endomorphism algebras presented by quiver and relations: the dim-10
//! algebra End(P₁ ⊕ P₂ ⊕ S₂) with its four arrows, emitted in the algebra
//! file format so it round-trips through the CLI.
//!
//! ```bash
//! cargo run --example endomorphism_quiver
//! ```

use std::sync::Arc;

use quiverhom::endo::{endomorphism_algebra, EndoConvention};
use quiverhom::field::FieldSpec;
use quiverhom::module::{projective, simple, FDModule};
use quiverhom::parse::render_algebra_file;
use quiverhom::samples;

fn main() {
    let seed = 1;
    let a = Arc::new(samples::example_four(FieldSpec::Rationals));
    let t = FDModule::direct_sum(&[
        &projective(&a, 0),
        &projective(&a, 1),
        &simple(&a, 1),
    ])
    .unwrap();

    let e = endomorphism_algebra(&t, EndoConvention::ActOnLeft, 14, seed).unwrap();
    println!("End(P1 ⊕ P2 ⊕ S2): dim = {}", e.dim());
    println!("summand dims: {:?}", e.summands.iter().map(|m| m.total_dim()).collect::<Vec<_>>());
    for (k, arr) in e.algebra().quiver.arrows.iter().enumerate() {
        let (i, j, map) = e.arrow_map(k);
        println!(
            "arrow {}: vertex {} -> vertex {} lifts a map T_{} → T_{} of rank {}",
            arr.label,
            arr.source + 1,
            arr.target + 1,
            i + 1,
            j + 1,
            map.rank()
        );
    }
    println!("\nfile-format presentation:\n{}", render_algebra_file(e.algebra()));

    // the by-hand presentation with relations gdg, hg, dgd − th, gt has the
    // same dimension and Cartan data
    let byhand = samples::worked_endo_presentation(FieldSpec::Rationals);
    println!("by-hand presentation: dim = {}, cartan = {:?}", byhand.dim(), byhand.cartan_matrix());
    println!("extracted:      dim = {}, cartan = {:?}", e.dim(), e.algebra().cartan_matrix());
}
