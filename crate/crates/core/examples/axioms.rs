//! Build a presentation by hand, validate it, and see how a broken table
//! is reported.

use vertexkernel::vla::builtin_virasoro;
use vertexkernel::{Presentation, Rational};

fn main() -> vertexkernel::Result<()> {
    // Virasoro at central charge c: L_0L = 𝒟L, L_1L = 2L, L_3L = c/2
    let vir = Presentation::builder()
        .generator("L", 2, false)
        .generator("c", 0, true)
        .product("L", "L", 0, &[(Rational::one(), 1, "L")])
        .product("L", "L", 1, &[(Rational::from_int(2), 0, "L")])
        .product("L", "L", 3, &[(Rational::new(1, 2), 0, "c")])
        .build()?;
    assert_eq!(vir, builtin_virasoro());
    print!("{}", vir.validate());

    let l = vir.gen_id("L").unwrap();
    let broken = vir.with_product(l, l, 1, vir.gen_element(l).scale(&Rational::from_int(3)));
    let rep = broken.validate();
    let fail = rep.first_failure().expect("L_1L = 3L breaks skew-symmetry");
    println!("\nwith L_1L = 3L: {} fails, witness {}", fail.id, fail.witness.as_deref().unwrap_or(""));
    Ok(())
}
