//! Twisting a vertex algebra by a lattice: the E⁻ exponential, group-like
//! elements e^α, and rejection of a non-central φ.

use vertexkernel::constructions::grouplike::{check_group_like_semigroup, scan_tensor_phi_group_likes};
use vertexkernel::constructions::tensor_phi::{check_eminus_conjugation, eminus_apply};
use vertexkernel::constructions::{Alpha, PhiMap, SemigroupL, TensorPhi};
use vertexkernel::text::parse_state;
use vertexkernel::vla::{builtin_abelian, builtin_heisenberg};
use vertexkernel::{Enveloping, VertexAlgebra, Window};

fn main() -> vertexkernel::Result<()> {
    let env = Enveloping::new(builtin_abelian(1)?);
    let h = parse_state(&env, "h(-1)|0⟩")?;
    for (k, x) in eminus_apply(&env, &h, &env.vacuum(), 4).iter().enumerate() {
        println!("E_{k} = {}", env.format(x));
    }
    let w = parse_state(&env, "h(-2)|0⟩")?;
    println!("{:?}", check_eminus_conjugation(&env, &h, &w, &env.basis_states(2, 0), 3, Window::symmetric(3)));

    let p = builtin_abelian(1)?;
    let phi = PhiMap::new(vec![p.gen_element(p.gen_id("h").unwrap())]);
    let tp = TensorPhi::new(Enveloping::new(p), SemigroupL::new(1, true), phi)?;
    let g = tp.group_like(&Alpha(vec![1]));
    let x = tp.lift(&parse_state(tp.envelope(), "h(-1)|0⟩")?, &Alpha(vec![2]));
    for n in -2..=1 {
        println!("(e^(1))_{n} {} = {}", tp.format(&x), tp.format(&tp.mode(&g, n, &x)));
    }
    let gs: Vec<_> = tp.semigroup().elements(2).iter().map(|a| tp.group_like(a)).collect();
    print!("{}", check_group_like_semigroup(&tp, &gs, 4, &[x], Window::new(-2, 1)));
    let found = scan_tensor_phi_group_likes(&tp, 0, 0, 2)?;
    println!("group-likes among 𝟙⊗e^α, |α| ≤ 2: {}", found.iter().map(|g| tp.format(g)).collect::<Vec<_>>().join(", "));

    let heis = builtin_heisenberg(1)?;
    let phi = PhiMap::new(vec![heis.gen_element(heis.gen_id("h").unwrap())]);
    match TensorPhi::new(Enveloping::new(heis), SemigroupL::new(1, true), phi) {
        Err(e) => println!("heisenberg with φ(e1) = h: {e}"),
        Ok(_) => unreachable!("h_1 h = c, so h is not central"),
    }
    Ok(())
}
