//! Morphisms out of B_L fixed by data on ℂ[L], and vertex algebra
//! morphisms induced by an embedding of the vertex Lie algebra.

use vertexkernel::constructions::morphism::{extend_universal_morphism, induced_vertex_morphism};
use vertexkernel::constructions::{SemigroupL, BL};
use vertexkernel::text::parse_state;
use vertexkernel::vla::builtin_abelian;
use vertexkernel::{Enveloping, Rational, VertexAlgebra, Window};

fn main() -> vertexkernel::Result<()> {
    let b = BL::new(SemigroupL::new(1, true))?;
    let two = b.h(0, 1).scale(&Rational::from_int(2));

    // e^α ↦ e^{2α}, h ↦ 2h(-1) respects ∂e^α = ᾱ(-1)e^α
    let f = extend_universal_morphism(&b, &b, |a| b.e(&a.scale(2)), vec![two.clone()], 2)?;
    let x = b.parse("h(-2)·e^{(1)}")?;
    println!("f({}) = {}", b.format(&x), b.format(&f.apply(&x)));
    print!("{}", f.verify(3, 1));

    // e^α ↦ e^α with h ↦ 2h(-1) does not
    match extend_universal_morphism(&b, &b, |a| b.e(a), vec![two], 2) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    let env = Enveloping::new(builtin_abelian(1)?);
    let psi = induced_vertex_morphism(&env, &b, vec![b.h(0, 1)])?;
    let v = parse_state(&env, "h(-2)h(-1)h(-1)|0⟩")?;
    println!("Ψ({}) = {}", env.format(&v), b.format(&psi.apply(&v)));
    print!("{}", psi.verify(3, 0, Window::symmetric(3)));
    Ok(())
}
