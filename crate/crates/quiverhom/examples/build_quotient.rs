//! Construct finite-dimensional algebras as admissible path-algebra
//! quotients: the cyclic Nakayama algebra kQ/⟨bacba, cbac⟩, a commutative
//! quotient encoded as a one-vertex quiver, and the tensor construction.
//!
//! ```bash
//! cargo run --example build_quotient
//! ```

use quiverhom::field::FieldSpec;
use quiverhom::samples;

fn main() {
    let f = FieldSpec::Rationals;

    let a = samples::example_four(f);
    println!("kQ/<bacba, cbac> over {f}:");
    println!("  dim = {}", a.dim());
    println!("  basis = {}", a.render_basis().join(", "));
    println!("  cartan = {:?}", a.cartan_matrix());
    a.verify_associativity().expect("structure constants associate");

    let square = samples::commutative_square(f);
    println!("\nk[x,y]/(x², y²) as a one-vertex quiver with loops:");
    println!("  dim = {} with basis {}", square.dim(), square.render_basis().join(", "));

    let (env, _) = a.enveloping().expect("same field");
    println!("\nenveloping algebra A ⊗ A^op:");
    println!("  dim = {} ({}²)", env.dim(), a.dim());
    println!("  vertices = {}", env.num_vertices());

    let op = a.opposite();
    println!("\nopposite algebra: dim = {}, arrows reversed:", op.dim());
    for arr in &op.quiver.arrows {
        println!("  {} : {} -> {}", arr.label, op.quiver.vertices[arr.source], op.quiver.vertices[arr.target]);
    }
}
