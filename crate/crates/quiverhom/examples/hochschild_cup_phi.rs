//! Hochschild cohomology from minimal bimodule resolutions: dimension
//! tables, cup products, the φ action on one-sided Ext, and the Künneth
//! comparison for a tensor square.
//!
//! ```bash
//! cargo run --example hochschild_cup_phi
//! ```

use std::sync::Arc;

use quiverhom::field::FieldSpec;
use quiverhom::hochschild::{kunneth_check, phi_action, HochschildRing};
use quiverhom::homology::ext_computation;
use quiverhom::module::simple;
use quiverhom::samples;

fn main() {
    let f = FieldSpec::Rationals;
    let dual = Arc::new(samples::dual_numbers(f));
    let hh = HochschildRing::compute(&dual, 5).unwrap();
    println!("HH*(k[x]/x²) degrees 0..5 = {}", hh.dims());
    println!("center dim = {} (must match HH^0)", hh.center_dim());

    // cup products: the degree-2 periodicity class is a polynomial
    // generator, the odd generator squares to zero over ℚ
    let one = vec![f.one()];
    let u2 = hh.cup(2, &one, 2, &one).unwrap();
    let t2 = hh.cup(1, &one, 1, &one).unwrap();
    println!("u ⌣ u nonzero in HH^4: {}", !f.is_zero(&u2[0]));
    println!("t ⌣ t vanishes in HH^2: {}", f.is_zero(&t2[0]));

    // φ sends the degree-2 generator to the periodicity operator on the
    // simple module's Ext algebra
    let s = simple(&dual, 0);
    let ext = ext_computation(&s, &s, 4).unwrap();
    let act = phi_action(&hh, &s, &ext, &hh.cocycle(2, 0), 2).unwrap();
    println!("φ(degree-2 generator) acts on Ext²(S,S) as {:?} (nonzero)", act[0].render());

    let (ok, expected, actual) = kunneth_check(&dual, &dual, 4).unwrap();
    println!("\nKünneth for k[x]/x² ⊗ k[x]/x²:");
    println!("  convolution of factors = {expected}");
    println!("  direct computation     = {actual}");
    println!("  equal: {ok}");

    let ex4 = Arc::new(samples::example_four(f));
    let hh4 = HochschildRing::compute(&ex4, 4).unwrap();
    println!("\nHH*(running Nakayama example) degrees 0..4 = {}", hh4.dims());
}
