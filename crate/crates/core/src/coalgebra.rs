//! Coproduct, counit, primitive and group-like elements, and the checks
//! that tie the coalgebra structure to the vertex operations.

use crate::enveloping::{Enveloping, PbwWord, State};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::linalg::{kernel, Matrix};
use crate::report::{CheckResult, Tally};
use crate::scalar::Rational;
use crate::vertex::Coalgebra;

/// An element of `𝒱_C ⊗ 𝒱_C`.
pub type TensorState = LinComb<(PbwWord, PbwWord)>;

/// Largest subspace on which [`group_like_scan`] runs.
pub const GROUP_LIKE_SCAN_MAX_DIM: usize = 6;

pub fn delta_state(e: &Enveloping, v: &State) -> TensorState {
    e.delta(v)
}

pub fn counit_state(e: &Enveloping, v: &State) -> Rational {
    e.counit(v)
}

/// `Δv - v⊗𝟙 - 𝟙⊗v`
pub fn primitive_defect<C: Coalgebra>(c: &C, v: &LinComb<C::Key>) -> LinComb<(C::Key, C::Key)> {
    let vac = c.vacuum();
    c.delta(v) - LinComb::tensor(v, &vac) - LinComb::tensor(&vac, v)
}

pub fn is_primitive<C: Coalgebra>(c: &C, v: &LinComb<C::Key>) -> bool {
    primitive_defect(c, v).is_zero()
}

/// `Δg = g⊗g` and `ε(g) = 1`.
pub fn is_group_like<C: Coalgebra>(c: &C, g: &LinComb<C::Key>) -> bool {
    c.counit(g).is_one() && c.delta(g) == LinComb::tensor(g, g)
}

/// Basis of the primitive elements inside the span of `basis`, in reduced
/// echelon form with respect to the given order.
pub fn primitive_kernel<C: Coalgebra>(c: &C, basis: &[C::Key]) -> Vec<LinComb<C::Key>> {
    let cols: Vec<_> = basis.iter().map(|k| primitive_defect(c, &LinComb::basis(k.clone()))).collect();
    kernel(&cols)
        .into_iter()
        .map(|v| v.map_keys(|&i| basis[i].clone()))
        .collect()
}

/// Primitive elements of the weight-`d` piece with at most `k` torsion factors.
pub fn primitive_subspace(e: &Enveloping, d: i64, k: usize) -> Vec<State> {
    primitive_kernel(e, &e.basis_words(d, k))
}

/// All group-like elements with rational coordinates in the span of
/// `basis`, found by exhaustive search over eigenvalue tuples.
///
/// A group-like `u = Σ c_i b_i` satisfies `(id⊗b_j*)Δu = c_j u`, so each
/// coordinate `c_j` is an eigenvalue of the operator `(id⊗b_j*)Δ`. Every
/// tuple of rational eigenvalues is tried and verified exactly.
pub fn group_like_scan<C: Coalgebra>(c: &C, basis: &[C::Key]) -> Result<Vec<LinComb<C::Key>>> {
    let n = basis.len();
    if n > GROUP_LIKE_SCAN_MAX_DIM {
        return Err(Error::Unsupported(format!(
            "group-like scan limited to dimension {GROUP_LIKE_SCAN_MAX_DIM}, got {n}"
        )));
    }
    let index = |k: &C::Key| basis.iter().position(|b| b == k);
    let mut ops: Vec<Matrix> = (0..n).map(|_| Matrix::zeros(n)).collect();
    for (i, b) in basis.iter().enumerate() {
        for ((left, right), coeff) in &c.delta_basis(b) {
            let (Some(li), Some(ri)) = (index(left), index(right)) else {
                return Err(Error::Unsupported(format!(
                    "span is not a subcoalgebra: Δ({}) leaves it",
                    c.format_key(b)
                )));
            };
            let v = ops[ri].get(li, i) + coeff;
            ops[ri].set(li, i, v);
        }
    }
    let spectra: Vec<Vec<Rational>> = ops.iter().map(|m| m.rational_eigenvalues()).collect::<Result<_>>()?;
    let mut found = Vec::new();
    let mut idx = vec![0usize; n];
    if spectra.iter().any(|s| s.is_empty()) {
        return Ok(found);
    }
    loop {
        let cand: LinComb<C::Key> = (0..n).map(|j| (basis[j].clone(), spectra[j][idx[j]].clone())).collect();
        if !cand.is_zero() && is_group_like(c, &cand) && !found.contains(&cand) {
            found.push(cand);
        }
        let mut j = 0;
        loop {
            if j == n {
                found.sort();
                return Ok(found);
            }
            idx[j] += 1;
            if idx[j] < spectra[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

type Pair<K> = LinComb<(K, K)>;

fn apply_left<C: Coalgebra>(c: &C, t: &Pair<C::Key>, f: impl Fn(&C::Key) -> LinComb<C::Key>) -> Pair<C::Key> {
    let mut out = LinComb::zero();
    for ((a, b), x) in t {
        out.add_scaled(&LinComb::tensor(&f(a), &LinComb::basis(b.clone())), x);
    }
    let _ = c;
    out
}

fn apply_right<C: Coalgebra>(c: &C, t: &Pair<C::Key>, f: impl Fn(&C::Key) -> LinComb<C::Key>) -> Pair<C::Key> {
    let mut out = LinComb::zero();
    for ((a, b), x) in t {
        out.add_scaled(&LinComb::tensor(&LinComb::basis(a.clone()), &f(b)), x);
    }
    let _ = c;
    out
}

/// `(Δ⊗id)Δ = (id⊗Δ)Δ` on each basis element.
pub fn check_coassociativity<C: Coalgebra>(c: &C, basis: &[C::Key]) -> CheckResult {
    let mut t = Tally::new("coassociativity");
    for b in basis {
        let d = c.delta_basis(b);
        let mut left: LinComb<(C::Key, C::Key, C::Key)> = LinComb::zero();
        let mut right: LinComb<(C::Key, C::Key, C::Key)> = LinComb::zero();
        for ((x, y), coeff) in &d {
            for ((x1, x2), cx) in &c.delta_basis(x) {
                left.add_term((x1.clone(), x2.clone(), y.clone()), coeff * cx);
            }
            for ((y1, y2), cy) in &c.delta_basis(y) {
                right.add_term((x.clone(), y1.clone(), y2.clone()), coeff * cy);
            }
        }
        t.record(left == right, || format!("coassociativity fails on {}", c.format_key(b)));
    }
    t.finish()
}

/// `(ε⊗id)Δ = id = (id⊗ε)Δ`.
pub fn check_counit_law<C: Coalgebra>(c: &C, basis: &[C::Key]) -> CheckResult {
    let mut t = Tally::new("counit-law");
    for b in basis {
        let d = c.delta_basis(b);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((x, y), coeff) in &d {
            left.add_term(y.clone(), c.counit_basis(x) * coeff);
            right.add_term(x.clone(), c.counit_basis(y) * coeff);
        }
        let v = LinComb::basis(b.clone());
        t.record(left == v && right == v, || format!("counit law fails on {}", c.format_key(b)));
    }
    t.finish()
}

/// `τ∘Δ = Δ` with `τ` the flip.
pub fn check_cocommutativity<C: Coalgebra>(c: &C, basis: &[C::Key]) -> CheckResult {
    let mut t = Tally::new("cocommutativity");
    for b in basis {
        let d = c.delta_basis(b);
        let flipped = d.map_keys(|(x, y)| (y.clone(), x.clone()));
        t.record(d == flipped, || format!("Δ not cocommutative on {}", c.format_key(b)));
    }
    t.finish()
}

/// `Δ𝒟 = (𝒟⊗1 + 1⊗𝒟)Δ` and `ε𝒟 = 0`.
pub fn check_delta_derivation<C: Coalgebra>(c: &C, basis: &[C::Key]) -> CheckResult {
    let mut t = Tally::new("delta-derivation");
    for b in basis {
        let v = LinComb::basis(b.clone());
        let dv = c.derivation(&v);
        let lhs = c.delta(&dv);
        let d = c.delta(&v);
        let rhs = apply_left(c, &d, |k| c.derivation_basis(k)) + apply_right(c, &d, |k| c.derivation_basis(k));
        t.record(lhs == rhs, || format!("Δ𝒟 ≠ (𝒟⊗1+1⊗𝒟)Δ on {}", c.format_key(b)));
        let e = c.counit(&dv);
        t.record(e.is_zero(), || format!("ε(𝒟 {}) = {e}", c.format_key(b)));
    }
    t.finish()
}

/// `Σ_m (u')_m v' ⊗ (u'')_{n-m-1} v''` over Sweedler components of `u`, `v`.
pub fn tensor_mode<C: Coalgebra>(c: &C, du: &Pair<C::Key>, n: i64, dv: &Pair<C::Key>) -> Pair<C::Key> {
    let mut out = LinComb::zero();
    for ((u1, u2), cu) in du {
        for ((v1, v2), cv) in dv {
            let top1 = c.truncation_bound(u1, v1);
            let top2 = c.truncation_bound(u2, v2);
            let lo = n - 1 - top2;
            let coeff = cu * cv;
            for m in lo..=top1 {
                let left = c.mode_basis(u1, m, v1);
                if left.is_zero() {
                    continue;
                }
                let right = c.mode_basis(u2, n - m - 1, v2);
                if right.is_zero() {
                    continue;
                }
                out.add_scaled(&LinComb::tensor(&left, &right), &coeff);
            }
        }
    }
    out
}

pub fn delta_morphism_tally<C: Coalgebra>(c: &C, u: &LinComb<C::Key>, n: i64, v: &LinComb<C::Key>, t: &mut Tally) {
    let prod = c.mode(u, n, v);
    let lhs = c.delta(&prod);
    let rhs = tensor_mode(c, &c.delta(u), n, &c.delta(v));
    t.record(lhs == rhs, || {
        format!("u={} n={n} v={}: Δ(u_n v) differs from Σ u'_m v' ⊗ u''_(n-m-1) v''", c.format(u), c.format(v))
    });
    let eps = c.counit(&prod);
    let want = if n == -1 { c.counit(u) * c.counit(v) } else { Rational::zero() };
    t.record(eps == want, || format!("u={} n={n} v={}: ε(u_n v) = {eps}, expected {want}", c.format(u), c.format(v)));
}

/// `Δ(u_n v) = Σ_m u'_m v' ⊗ u''_{n-m-1} v''` and `ε(u_n v) = δ_{n,-1} ε(u)ε(v)`.
pub fn check_delta_morphism<C: Coalgebra>(c: &C, u: &LinComb<C::Key>, n: i64, v: &LinComb<C::Key>) -> CheckResult {
    let mut t = Tally::new("delta-vertex-morphism");
    delta_morphism_tally(c, u, n, v, &mut t);
    t.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::current::Mode;
    use crate::text::parse_state;
    use crate::vla::{builtin_abelian, builtin_virasoro};

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn delta_examples() {
        let e = Enveloping::new(builtin_virasoro());
        let vac = e.vacuum_state();
        assert_eq!(delta_state(&e, &vac), LinComb::tensor(&vac, &vac));
        let l = parse_state(&e, "L(-1)|0⟩").unwrap();
        assert_eq!(delta_state(&e, &l), LinComb::tensor(&l, &vac) + LinComb::tensor(&vac, &l));

        let a = Enveloping::new(builtin_abelian(1).unwrap());
        let hh = parse_state(&a, "h(-1)h(-1)|0⟩").unwrap();
        let h = parse_state(&a, "h(-1)|0⟩").unwrap();
        let va = a.vacuum_state();
        let want = LinComb::tensor(&hh, &va) + LinComb::tensor(&h, &h).scale(&r(2)) + LinComb::tensor(&va, &hh);
        assert_eq!(delta_state(&a, &hh), want);
    }

    #[test]
    fn counit_examples() {
        let e = Enveloping::new(builtin_virasoro());
        assert_eq!(counit_state(&e, &e.vacuum_state()), r(1));
        assert_eq!(counit_state(&e, &parse_state(&e, "L(-1)|0⟩").unwrap()), r(0));
        assert_eq!(counit_state(&e, &parse_state(&e, "3·|0⟩ + L(-2)|0⟩").unwrap()), r(3));
    }

    #[test]
    fn primitive_examples() {
        let e = Enveloping::new(builtin_virasoro());
        let l = e.presentation().gen_id("L").unwrap();
        let c = e.presentation().gen_id("c").unwrap();
        let p4 = primitive_subspace(&e, 4, 0);
        assert_eq!(p4, vec![e.straighten(&[Mode::new(l, -3)])]);
        let p0 = primitive_subspace(&e, 0, 2);
        assert_eq!(p0, vec![e.straighten(&[Mode::new(c, -1)])]);

        let a = Enveloping::new(builtin_abelian(1).unwrap());
        let h = a.presentation().gen_id("h").unwrap();
        assert_eq!(primitive_subspace(&a, 2, 0), vec![a.straighten(&[Mode::new(h, -2)])]);
    }

    #[test]
    fn group_like_examples() {
        let a = Enveloping::new(builtin_abelian(1).unwrap());
        assert!(is_group_like(&a, &a.vacuum_state()));
        assert!(!is_group_like(&a, &parse_state(&a, "h(-1)|0⟩").unwrap()));
        assert!(!is_group_like(&a, &parse_state(&a, "|0⟩ + h(-1)|0⟩").unwrap()));
        // the only group-like in the span of {𝟙, h(-1)𝟙, h(-1)²𝟙} is 𝟙
        let span = [a.basis_words(0, 0), a.basis_words(1, 0), vec![a.basis_words(2, 0)[1].clone()]].concat();
        let found = group_like_scan(&a, &span).unwrap();
        assert_eq!(found, vec![a.vacuum_state()]);
    }

    #[test]
    fn coalgebra_laws_on_virasoro() {
        let e = Enveloping::new(builtin_virasoro());
        let basis: Vec<PbwWord> = (0..=5).flat_map(|d| e.basis_words(d, 1)).collect();
        assert!(check_coassociativity(&e, &basis).passed);
        assert!(check_counit_law(&e, &basis).passed);
        assert!(check_cocommutativity(&e, &basis).passed);
        assert!(check_delta_derivation(&e, &basis).passed);
    }

    #[test]
    fn delta_morphism_examples() {
        let e = Enveloping::new(builtin_virasoro());
        let l = parse_state(&e, "L(-1)|0⟩").unwrap();
        assert!(check_delta_morphism(&e, &l, 1, &l).passed);
        let v = parse_state(&e, "L(-2)L(-1)|0⟩").unwrap();
        assert!(check_delta_morphism(&e, &e.vacuum_state(), -1, &v).passed);
        assert!(check_delta_morphism(&e, &l, -2, &e.vacuum_state()).passed);
    }
}
