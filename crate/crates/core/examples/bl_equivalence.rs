//! The differential bialgebra B_L and its description as a twisted tensor
//! product of the abelian enveloping algebra with ℂ[L].

use vertexkernel::constructions::bl::{check_bl_bialgebra, check_bl_equals_tensor_phi};
use vertexkernel::constructions::{Alpha, SemigroupL, BL};
use vertexkernel::{Coalgebra, VertexAlgebra, Window};

fn main() -> vertexkernel::Result<()> {
    let b = BL::new(SemigroupL::new(1, true))?;
    let x = b.parse("h(-2)^2·e^{(1)}")?;
    println!("∂({}) = {}", b.format(&x), b.format(&b.partial(&x)));
    let e2 = b.e(&Alpha(vec![2]));
    println!("∂(e^(2)) = {}", b.format(&b.partial(&e2)));
    println!("(e^(1))_(-2) e^(1) = {}", b.format(&b.mode(&b.e(&Alpha(vec![1])), -2, &b.e(&Alpha(vec![1])))));
    let d = b.delta(&b.parse("h(-1)·e^{(1)}")?);
    println!("Δ(h(-1)·e^(1)) has {} terms", d.len());

    print!("{}", check_bl_equals_tensor_phi(&b, 3, 2, Window::new(-4, 4)));
    print!("{}", check_bl_bialgebra(&b, 3, 2));

    let n2 = BL::new(SemigroupL::new(2, false))?;
    println!("B over ℕ^2: {}", n2.format(&n2.partial(&n2.e(&Alpha(vec![1, 2])))));
    Ok(())
}
