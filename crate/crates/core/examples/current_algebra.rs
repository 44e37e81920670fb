//! Brackets in the current Lie algebra of Virasoro and Heisenberg.

use vertexkernel::current::{bracket, check_lie_axioms};
use vertexkernel::text::{format_modes, parse_mode};
use vertexkernel::vla::{builtin_heisenberg, builtin_virasoro};

fn main() -> vertexkernel::Result<()> {
    let vir = builtin_virasoro();
    for (a, b) in [("L(3)", "L(-1)"), ("L(1)", "L(0)"), ("L(2)", "L(-2)"), ("c(-1)", "L(4)")] {
        let x = bracket(&vir, &parse_mode(&vir, a)?, &parse_mode(&vir, b)?);
        println!("[{a}, {b}] = {}", format_modes(&vir, &x));
    }
    let heis = builtin_heisenberg(1)?;
    let x = bracket(&heis, &parse_mode(&heis, "h(2)")?, &parse_mode(&heis, "h(-2)")?);
    println!("[h(2), h(-2)] = {}", format_modes(&heis, &x));
    print!("{}", check_lie_axioms(&vir, 3));
    Ok(())
}
