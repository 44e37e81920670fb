//! Group-like elements of the constructions: the semigroup they form under
//! `gh = g_{-1}h`, the component decomposition `V = ⊕_α V_α`, and scans
//! for group-like and primitive elements.

use super::bl::BL;
use super::semigroup::Alpha;
use super::tensor_phi::{TensorPhi, TensorPhiKey, TensorPhiState};
use crate::coalgebra::{group_like_scan, is_group_like, primitive_kernel};
use crate::error::Result;
use crate::lincomb::LinComb;
use crate::report::{Tally, ValidationReport};
use crate::vertex::{Coalgebra, Window};

/// A coalgebra whose basis keys carry a group-like tag `α`.
pub trait Components: Coalgebra {
    fn component_of(&self, k: &Self::Key) -> Alpha;
}

impl Components for TensorPhi {
    fn component_of(&self, k: &TensorPhiKey) -> Alpha {
        k.1.clone()
    }
}

impl Components for BL {
    fn component_of(&self, k: &super::bl::BlKey) -> Alpha {
        k.1.clone()
    }
}

pub fn component_of<C: Components>(c: &C, k: &C::Key) -> Alpha {
    c.component_of(k)
}

/// For group-likes `g, h`: `g_n h = 0` for `0 ≤ n ≤ vanish_top`, `g_{-1}h`
/// group-like, the product `g_{-1}h` associative and commutative, and
/// `g_m h_n s = h_n g_m s` on each sample state.
pub fn check_group_like_semigroup<C: Coalgebra>(
    c: &C,
    group_likes: &[LinComb<C::Key>],
    vanish_top: i64,
    samples: &[LinComb<C::Key>],
    modes: Window,
) -> ValidationReport {
    let mut vanish = Tally::new("group-like-vanishing");
    let mut closed = Tally::new("group-like-closure");
    let mut comm = Tally::new("semigroup-commutativity");
    let mut assoc = Tally::new("semigroup-associativity");
    let mut commute = Tally::new("group-like-commutation");
    for g in group_likes {
        for h in group_likes {
            for n in 0..=vanish_top {
                let x = c.mode(g, n, h);
                vanish.record(x.is_zero(), || format!("{}_{n} {} = {}", c.format(g), c.format(h), c.format(&x)));
            }
            let gh = c.mode(g, -1, h);
            closed.record(is_group_like(c, &gh), || format!("{}_(-1) {} = {} is not group-like", c.format(g), c.format(h), c.format(&gh)));
            let hg = c.mode(h, -1, g);
            comm.record(gh == hg, || format!("gh ≠ hg for g={} h={}", c.format(g), c.format(h)));
            for k in group_likes {
                let l = c.mode(&gh, -1, k);
                let r = c.mode(g, -1, &c.mode(h, -1, k));
                assoc.record(l == r, || format!("(gh)k ≠ g(hk) for g={} h={} k={}", c.format(g), c.format(h), c.format(k)));
            }
            for s in samples {
                for m in modes.iter() {
                    for n in modes.iter() {
                        let l = c.mode(g, m, &c.mode(h, n, s));
                        let r = c.mode(h, n, &c.mode(g, m, s));
                        commute.record(l == r, || {
                            format!("[{}_({m}), {}_({n})] {} ≠ 0", c.format(g), c.format(h), c.format(s))
                        });
                    }
                }
            }
        }
    }
    let mut rep = ValidationReport::new();
    for t in [vanish, closed, comm, assoc, commute] {
        rep.push(t.finish());
    }
    rep
}

/// Checks of the decomposition `V = ⊕_α V_α` on `basis`:
/// `Δ V_α ⊆ V_α⊗V_α`, modes of `V_0` preserve each `V_α`, and for each
/// supplied group-like `e^γ`, `(e^γ)_{-1}` maps `V_α` to `V_{γ+α}` as a
/// coalgebra morphism.
pub fn check_components<C: Components>(
    c: &C,
    basis: &[C::Key],
    shifts: &[(Alpha, LinComb<C::Key>)],
    modes: Window,
) -> ValidationReport {
    let mut coideal = Tally::new("component-coideal");
    let mut module = Tally::new("component-module");
    let mut shift = Tally::new("component-shift");
    let mut coalg = Tally::new("component-shift-coalgebra");
    let tagged = |x: &LinComb<C::Key>, a: &Alpha| x.keys().all(|k| &c.component_of(k) == a);
    for b in basis {
        let a = c.component_of(b);
        let d = c.delta_basis(b);
        coideal.record(d.keys().all(|(x, y)| c.component_of(x) == a && c.component_of(y) == a), || {
            format!("Δ({}) leaves the {a} component", c.format_key(b))
        });
        let vb = LinComb::basis(b.clone());
        for u in basis.iter().filter(|u| c.component_of(u).is_zero()) {
            for n in modes.iter() {
                let x = c.mode(&LinComb::basis(u.clone()), n, &vb);
                module.record(tagged(&x, &a), || format!("{}_({n}) {} leaves the {a} component", c.format_key(u), c.format_key(b)));
            }
        }
        for (gamma, g) in shifts {
            let target = gamma + &a;
            let x = c.mode(g, -1, &vb);
            shift.record(tagged(&x, &target), || format!("(e^{gamma})_(-1) {} is not in the {target} component", c.format_key(b)));
            let lhs = c.delta(&x);
            let rhs = d.flat_map(|(p, q)| {
                let l = c.mode(g, -1, &LinComb::basis(p.clone()));
                let r = c.mode(g, -1, &LinComb::basis(q.clone()));
                LinComb::tensor(&l, &r)
            });
            coalg.record(lhs == rhs, || format!("Δ((e^{gamma})_(-1) {}) ≠ (g⊗g)Δ", c.format_key(b)));
        }
    }
    let mut rep = ValidationReport::new();
    for t in [coideal, module, shift, coalg] {
        rep.push(t.finish());
    }
    rep
}

/// Runs the exhaustive group-like scan on the span of
/// `{w⊗e^α : wt(w) ≤ max_weight, |α_i| ≤ alpha_bound}` (at most six keys).
pub fn scan_tensor_phi_group_likes(
    tp: &TensorPhi,
    max_weight: i64,
    torsion: usize,
    alpha_bound: i64,
) -> Result<Vec<TensorPhiState>> {
    group_like_scan(tp, &tp.basis(max_weight, torsion, alpha_bound))
}

/// Primitive elements of `𝒱_C ⊗_φ ℂ[L]` in the bounded span.
pub fn scan_tensor_phi_primitives(tp: &TensorPhi, max_weight: i64, torsion: usize, alpha_bound: i64) -> Vec<TensorPhiState> {
    primitive_kernel(tp, &tp.basis(max_weight, torsion, alpha_bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::semigroup::SemigroupL;
    use crate::constructions::tensor_phi::PhiMap;
    use crate::enveloping::Enveloping;
    use crate::text::parse_state;
    use crate::vertex::VertexAlgebra;
    use crate::vla::builtin_abelian;

    fn abelian_z() -> TensorPhi {
        let p = builtin_abelian(1).unwrap();
        let h = p.gen_element(p.gen_id("h").unwrap());
        TensorPhi::new(Enveloping::new(p), SemigroupL::new(1, true), PhiMap::new(vec![h])).unwrap()
    }

    #[test]
    fn semigroup_of_group_likes() {
        let tp = abelian_z();
        let gs: Vec<_> = tp.semigroup().elements(2).iter().map(|a| tp.group_like(a)).collect();
        let samples = vec![tp.lift(&parse_state(tp.envelope(), "h(-1)|0⟩").unwrap(), &Alpha(vec![1]))];
        let rep = check_group_like_semigroup(&tp, &gs, 4, &samples, Window::new(-2, 1));
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn component_examples() {
        let tp = abelian_z();
        let h = parse_state(tp.envelope(), "h(-1)|0⟩").unwrap();
        let hh = parse_state(tp.envelope(), "h(-1)h(-1)|0⟩").unwrap();
        let a = Alpha(vec![2]);
        let x = tp.lift(&hh, &a);
        assert_eq!(component_of(&tp, x.as_basis().unwrap()), a);
        let g = Alpha(vec![-1]);
        let y = tp.mode(&tp.group_like(&g), -1, &tp.lift(&h, &a));
        assert!(y.keys().all(|k| k.1 == Alpha(vec![1])));
        let basis = tp.basis(2, 0, 1);
        let shifts = vec![(g.clone(), tp.group_like(&g))];
        assert!(check_components(&tp, &basis, &shifts, Window::new(-2, 1)).passed());
    }

    #[test]
    fn scans() {
        let tp = abelian_z();
        let found = scan_tensor_phi_group_likes(&tp, 0, 0, 2).unwrap();
        let want: Vec<_> = tp.semigroup().elements(2).iter().map(|a| tp.group_like(a)).collect();
        assert_eq!(found.len(), 5);
        for w in &want {
            assert!(found.contains(w));
        }
        let found = scan_tensor_phi_group_likes(&tp, 1, 0, 1).unwrap();
        assert_eq!(found.len(), 3);
        let prims = scan_tensor_phi_primitives(&tp, 3, 0, 1);
        assert_eq!(prims.len(), 3);
        assert!(prims.iter().all(|v| v.keys().all(|k| k.1.is_zero() && k.0.len() == 1)));
    }
}
