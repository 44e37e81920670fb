//! Graded dimensions of the enveloping vertex algebra and of its primitive
//! elements, which recover the vertex Lie algebra itself.

use vertexkernel::coalgebra::primitive_subspace;
use vertexkernel::vla::{builtin_abelian, builtin_heisenberg, builtin_virasoro};
use vertexkernel::Enveloping;

fn table(name: &str, e: &Enveloping, max_weight: i64, k: usize) {
    println!("{name} (at most {k} central factors)");
    println!("weight  dim  primitive");
    for d in 0..=max_weight {
        println!("{d:>6}  {:>3}  {:>9}", e.graded_dimension(d, k), primitive_subspace(e, d, k).len());
    }
}

fn main() -> vertexkernel::Result<()> {
    table("virasoro", &Enveloping::new(builtin_virasoro()), 8, 0);
    table("virasoro", &Enveloping::new(builtin_virasoro()), 4, 1);
    table("heisenberg(2)", &Enveloping::new(builtin_heisenberg(2)?), 5, 0);
    table("abelian(1)", &Enveloping::new(builtin_abelian(1)?), 6, 0);
    Ok(())
}
