//! Nakayama detection, Kupisch series, and the (Fg) ⇔ Gorenstein
//! certificate, including a non-Gorenstein certified-no case.
//!
//! ```bash
//! cargo run --example nakayama_gorenstein
//! ```

use std::sync::Arc;

use quiverhom::field::FieldSpec;
use quiverhom::nakayama::{admissible_sequence, fg_certificate_nakayama, is_nakayama};
use quiverhom::samples;

fn main() {
    let f = FieldSpec::Rationals;
    let algebras = [
        ("cyclic Nakayama kQ/<bacba, cbac>", samples::example_four(f)),
        ("k[x]/(x²)", samples::dual_numbers(f)),
        ("linear A_3 path algebra", samples::linear_quiver_algebra(f, 3)),
        ("2-cycle with relation uvu", samples::non_gorenstein_nakayama(f)),
        ("k[x,y]/(x², y²)", samples::commutative_square(f)),
    ];
    for (name, alg) in algebras {
        let a = Arc::new(alg);
        print!("{name}: ");
        if !is_nakayama(&a) {
            println!("not Nakayama");
            continue;
        }
        let seq = admissible_sequence(&a).unwrap();
        let cert = fg_certificate_nakayama(&a, 20, 1).unwrap();
        println!(
            "Kupisch series {}, injdim = ({}, {}), (Fg) {}",
            seq, cert.gorenstein.left, cert.gorenstein.right, cert.verdict
        );
    }
}
