//! The coproduct of the enveloping vertex algebra and the identities it
//! satisfies.

use vertexkernel::coalgebra::{
    check_coassociativity, check_cocommutativity, check_delta_morphism, counit_state, delta_state,
};
use vertexkernel::text::{format_tensor, parse_state};
use vertexkernel::vla::builtin_virasoro;
use vertexkernel::{Enveloping, VertexAlgebra};

fn main() -> vertexkernel::Result<()> {
    let e = Enveloping::new(builtin_virasoro());
    let p = e.presentation();
    for s in ["L(-1)|0⟩", "L(-2)L(-1)|0⟩", "c(-1)L(-1)|0⟩"] {
        let v = parse_state(&e, s)?;
        println!("Δ({s}) = {}", format_tensor(p, &delta_state(&e, &v)));
        println!("ε({s}) = {}", counit_state(&e, &v));
    }

    let keys: Vec<_> = e.basis_states(5, 1).iter().map(|s| s.as_basis().unwrap().clone()).collect();
    println!("{:?}", check_coassociativity(&e, &keys));
    println!("{:?}", check_cocommutativity(&e, &keys));

    let u = parse_state(&e, "L(-1)|0⟩")?;
    let v = parse_state(&e, "L(-2)|0⟩")?;
    for n in -2..=3 {
        let r = check_delta_morphism(&e, &u, n, &v);
        println!("Δ(u_{n} v) = Δ(u)_{n} Δ(v): {} (u_{n} v = {})", r.passed, e.format(&e.state_mode(&u, n, &v)));
    }
    Ok(())
}
