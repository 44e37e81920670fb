//! Divided powers: the bialgebra ℬ(U) and its coalgebra map into U(𝔤).

use vertexkernel::divided::{
    check_dp_bialgebra, check_psi_coalgebra_morphism, dp_delta, dp_product, dp_primitives, psi_g, DividedPowerBasis,
    LieAlgebra,
};

fn main() -> vertexkernel::Result<()> {
    let f = DividedPowerBasis::from_exponents([(0, 2), (1, 1)]);
    let g = DividedPowerBasis::from_exponents([(0, 1)]);
    let (c, fg) = dp_product(&f, &g);
    println!("{f:?} · {g:?} = {c}·{fg:?}");
    println!("Δ({f:?}) has {} terms", dp_delta(&f).len());
    println!("primitives of degree ≤ 3: {}", dp_primitives(2, 3).len());
    print!("{}", check_dp_bialgebra(2, 4));

    let aff = LieAlgebra::affine_line();
    let image: Vec<String> = psi_g(&f, &aff)?
        .iter()
        .map(|(w, c)| format!("{c}·{}", w.0.iter().map(|&i| aff.name(i)).collect::<Vec<_>>().join("")))
        .collect();
    println!("Ψ({f:?}) = {} in U of the affine line", image.join(" + "));
    print!("{}", check_psi_coalgebra_morphism(&aff, 4));
    print!("{}", check_psi_coalgebra_morphism(&LieAlgebra::abelian(2), 4));
    Ok(())
}
