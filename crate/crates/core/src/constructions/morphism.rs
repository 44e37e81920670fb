//! Morphisms out of `B_L` determined by data on `ℂ[L]` and `𝔥`, and
//! vertex algebra morphisms out of `𝒱_C` induced by an embedding of `C`.

use dashmap::DashMap;

use super::bl::{BlKey, DiffElement, BL};
use super::semigroup::Alpha;
use super::tensor_phi::TensorPhi;
use crate::coalgebra::is_group_like;
use crate::enveloping::{Enveloping, PbwWord, State};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::report::{Tally, ValidationReport};
use crate::scalar::{factorial, Rational};
use crate::vertex::{Coalgebra, VertexAlgebra, Window};
use crate::vla::VlaElement;

/// A commutative algebra with a derivation and a compatible coalgebra;
/// the derivation is the vertex algebra `𝒟`.
pub trait DifferentialBialgebra: Coalgebra {
    fn multiply_basis(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;

    fn unit(&self) -> LinComb<Self::Key> {
        self.vacuum()
    }

    fn multiply(&self, x: &LinComb<Self::Key>, y: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        let mut out = LinComb::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                out.add_scaled(&self.multiply_basis(a, b), &(ca * cb));
            }
        }
        out
    }
}

impl DifferentialBialgebra for BL {
    fn multiply_basis(&self, a: &BlKey, b: &BlKey) -> DiffElement {
        LinComb::basis(BL::multiply_basis(self, a, b))
    }
}

/// `a·b = a_{-1}b`, a commutative product when the algebra is.
impl DifferentialBialgebra for Enveloping {
    fn multiply_basis(&self, a: &PbwWord, b: &PbwWord) -> State {
        self.mode_basis(a, -1, b)
    }
}

impl DifferentialBialgebra for TensorPhi {
    fn multiply_basis(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key> {
        self.mode_basis(a, -1, b)
    }
}

type PsiFn<'a, K> = Box<dyn Fn(&Alpha) -> LinComb<K> + Sync + 'a>;

/// The differential bialgebra morphism `f: B_L → B` with
/// `f(X⊗e^α) = φ̃_B(X) ψ(e^α)`.
pub struct UniversalMorphism<'a, T: DifferentialBialgebra> {
    source: &'a BL,
    target: &'a T,
    psi: PsiFn<'a, T::Key>,
    phi_b: Vec<LinComb<T::Key>>,
}

impl<'a, T: DifferentialBialgebra> UniversalMorphism<'a, T> {
    /// `φ̃_B(h_i(-n)) = ∂^{n-1} φ_B(e_i) / (n-1)!`
    fn phi_tilde_factor(&self, i: usize, n: u32) -> LinComb<T::Key> {
        let d = self.target.derivation_times(&self.phi_b[i], n - 1);
        d.scale(&factorial((n - 1) as u64).recip().expect("nonzero"))
    }

    pub fn apply_basis(&self, k: &BlKey) -> LinComb<T::Key> {
        let mut acc = (self.psi)(&k.1);
        for ((i, n), e) in k.0.factors() {
            let f = self.phi_tilde_factor(i, n);
            for _ in 0..e {
                acc = self.target.multiply(&f, &acc);
            }
        }
        acc
    }

    pub fn apply(&self, x: &DiffElement) -> LinComb<T::Key> {
        let mut out = LinComb::zero();
        for (k, c) in x {
            out.add_scaled(&self.apply_basis(k), c);
        }
        out
    }

    /// Algebra, derivation, coproduct and counit compatibility on the
    /// bounded basis, plus the restrictions to `ℂ[L]` and `𝔥`.
    pub fn verify(&self, max_weight: u32, alpha_bound: i64) -> ValidationReport {
        let src = self.source;
        let tgt = self.target;
        let basis = src.basis(max_weight, alpha_bound);
        let images: Vec<LinComb<T::Key>> = basis.iter().map(|k| self.apply_basis(k)).collect();
        let mut alg = Tally::new("morphism-algebra");
        let mut der = Tally::new("morphism-derivation");
        let mut del = Tally::new("morphism-delta");
        let mut eps = Tally::new("morphism-counit");
        let mut res = Tally::new("morphism-restriction");
        alg.record(self.apply(&src.one()) == tgt.unit(), || "f(1) ≠ 1".into());
        for (a, fa) in basis.iter().zip(&images) {
            let va = LinComb::basis(a.clone());
            for (b, fb) in basis.iter().zip(&images) {
                if a.0.weight() + b.0.weight() > max_weight {
                    continue;
                }
                let l = self.apply(&src.multiply(&va, &LinComb::basis(b.clone())));
                let r = tgt.multiply(fa, fb);
                alg.record(l == r, || format!("f({}·{}) ≠ f·f", src.format_key(a), src.format_key(b)));
            }
            let l = self.apply(&src.partial(&va));
            let r = tgt.derivation(fa);
            der.record(l == r, || format!("f(∂{}) = {} but ∂f = {}", src.format_key(a), tgt.format(&l), tgt.format(&r)));
            let l = tgt.delta(fa);
            let mut r = LinComb::zero();
            for ((x, y), c) in &src.delta_basis(a) {
                r.add_scaled(&LinComb::tensor(&self.apply_basis(x), &self.apply_basis(y)), c);
            }
            del.record(l == r, || format!("Δf({}) ≠ (f⊗f)Δ", src.format_key(a)));
            let e = tgt.counit(fa);
            eps.record(e == src.counit_basis(a), || format!("εf({}) = {e}", src.format_key(a)));
        }
        for a in src.semigroup().elements(alpha_bound) {
            res.record(self.apply(&src.e(&a)) == (self.psi)(&a), || format!("f(e^{{{a}}}) ≠ ψ(e^{{{a}}})"));
        }
        for i in 0..src.rank() {
            res.record(self.apply(&src.h(i, 1)) == self.phi_b[i], || format!("f({}(-1)) ≠ φ_B", src.generator_name(i)));
        }
        let mut rep = ValidationReport::new();
        for t in [alg, der, del, eps, res] {
            rep.push(t.finish());
        }
        rep
    }
}

/// Extends a bialgebra map `ψ: ℂ[L] → B` and a linear `φ_B: 𝔥 → P(B)`
/// (given on the standard basis) to `B_L`, after checking
/// `∂ψ(e^α) = φ_B(ᾱ)ψ(e^α)` for `|α_i| ≤ alpha_bound`.
pub fn extend_universal_morphism<'a, T: DifferentialBialgebra>(
    source: &'a BL,
    target: &'a T,
    psi: impl Fn(&Alpha) -> LinComb<T::Key> + Sync + 'a,
    phi_b: Vec<LinComb<T::Key>>,
    alpha_bound: i64,
) -> Result<UniversalMorphism<'a, T>> {
    if phi_b.len() != source.rank() {
        return Err(Error::InvalidArgument(format!("φ_B needs {} images, got {}", source.rank(), phi_b.len())));
    }
    let vac = target.vacuum();
    for (i, x) in phi_b.iter().enumerate() {
        let prim = target.delta(x) == LinComb::tensor(x, &vac) + LinComb::tensor(&vac, x);
        if !prim {
            return Err(Error::Incompatible(format!("φ_B(e{}) = {} is not primitive", i + 1, target.format(x))));
        }
    }
    for a in source.semigroup().elements(alpha_bound) {
        let g = psi(&a);
        if !is_group_like(target, &g) {
            return Err(Error::Incompatible(format!("α={a}: ψ(e^α) = {} is not group-like", target.format(&g))));
        }
        let mut bar = LinComb::zero();
        for (x, &k) in phi_b.iter().zip(&a.0) {
            bar.add_scaled(x, &Rational::from_int(k));
        }
        let lhs = target.derivation(&g);
        let rhs = target.multiply(&bar, &g);
        if lhs != rhs {
            return Err(Error::Incompatible(format!(
                "α={a}: ∂ψ(e^α) = {} but φ_B(ᾱ)ψ(e^α) = {}",
                target.format(&lhs),
                target.format(&rhs)
            )));
        }
    }
    Ok(UniversalMorphism { source, target, psi: Box::new(psi), phi_b })
}

/// The vertex algebra morphism `Ψ: 𝒱_C → V` with `Ψ(g_1(n_1)⋯g_k(n_k)𝟙) =
/// ι(g_1)_{n_1} ⋯ ι(g_k)_{n_k} 𝟙`.
pub struct InducedMorphism<'a, T: Coalgebra> {
    source: &'a Enveloping,
    target: &'a T,
    images: Vec<LinComb<T::Key>>,
    memo: DashMap<PbwWord, LinComb<T::Key>>,
}

fn embed_element<T: VertexAlgebra>(target: &T, images: &[LinComb<T::Key>], u: &VlaElement) -> LinComb<T::Key> {
    let mut out = LinComb::zero();
    for (k, c) in u {
        out.add_scaled(&target.derivation_times(&images[k.gen.index()], k.d), c);
    }
    out
}

/// Builds `Ψ` from the images `ι(g)` of the generators of `C`, in
/// presentation order, after checking that `ι` preserves every `n`-th
/// product with `n ≥ 0` and kills `𝒟` of torsion generators.
pub fn induced_vertex_morphism<'a, T: Coalgebra>(
    source: &'a Enveloping,
    target: &'a T,
    images: Vec<LinComb<T::Key>>,
) -> Result<InducedMorphism<'a, T>> {
    let p = source.presentation();
    if images.len() != p.generators().len() {
        return Err(Error::InvalidArgument(format!(
            "expected {} generator images, got {}",
            p.generators().len(),
            images.len()
        )));
    }
    for g in p.gen_ids() {
        if p.is_torsion(g) {
            let d = target.derivation(&images[g.index()]);
            if !d.is_zero() {
                return Err(Error::Incompatible(format!("𝒟ι({}) = {} ≠ 0", p.name(g), target.format(&d))));
            }
        }
    }
    for a in p.gen_ids() {
        for b in p.gen_ids() {
            let (ia, ib) = (&images[a.index()], &images[b.index()]);
            let top = target.bound(ia, ib).max(p.product_bound(&p.gen_element(a), &p.gen_element(b)));
            for n in 0..=top {
                let got = target.mode(ia, n, ib);
                let want = embed_element(target, &images, &p.nth_product(&p.gen_element(a), n, &p.gen_element(b)));
                if got != want {
                    return Err(Error::Incompatible(format!(
                        "({}, {n}, {}): target gives {}, expected {}",
                        p.name(a),
                        p.name(b),
                        target.format(&got),
                        target.format(&want)
                    )));
                }
            }
        }
    }
    Ok(InducedMorphism { source, target, images, memo: DashMap::new() })
}

impl<'a, T: Coalgebra> InducedMorphism<'a, T> {
    pub fn apply_word(&self, w: &PbwWord) -> LinComb<T::Key> {
        let Some(first) = w.modes().first() else {
            return self.target.vacuum();
        };
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let rest = PbwWord::from_sorted(w.modes()[1..].to_vec());
        let inner = self.apply_word(&rest);
        let out = self.target.mode(&self.images[first.gen.index()], first.n, &inner);
        self.memo.insert(w.clone(), out.clone());
        out
    }

    pub fn apply(&self, v: &State) -> LinComb<T::Key> {
        let mut out = LinComb::zero();
        for (w, c) in v {
            out.add_scaled(&self.apply_word(w), c);
        }
        out
    }

    /// `Ψ(u_n v) = Ψ(u)_n Ψ(v)`, `ΔΨ = (Ψ⊗Ψ)Δ` and `εΨ = ε` on basis
    /// words of weight `≤ max_weight` with at most `torsion` torsion factors.
    pub fn verify(&self, max_weight: i64, torsion: usize, window: Window) -> ValidationReport {
        use rayon::prelude::*;
        let src = self.source;
        let tgt = self.target;
        let basis: Vec<PbwWord> = (0..=max_weight).flat_map(|d| src.basis_words(d, torsion)).collect();
        let modes = basis
            .par_iter()
            .map(|u| {
                let mut t = Tally::new("morphism-modes");
                let pu = self.apply_word(u);
                for v in &basis {
                    let pv = self.apply_word(v);
                    for n in window.iter() {
                        let l = self.apply(&src.mode_basis(u, n, v));
                        let r = tgt.mode(&pu, n, &pv);
                        t.record(l == r, || {
                            format!("Ψ({}_({n}) {}) = {} but Ψ·Ψ = {}", src.fmt_word(u), src.fmt_word(v), tgt.format(&l), tgt.format(&r))
                        });
                    }
                }
                t
            })
            .reduce(|| Tally::new("morphism-modes"), |mut a, b| {
                a.absorb(b);
                a
            });
        let mut del = Tally::new("morphism-delta");
        let mut eps = Tally::new("morphism-counit");
        for u in &basis {
            let pu = self.apply_word(u);
            let l = tgt.delta(&pu);
            let mut r = LinComb::zero();
            for ((x, y), c) in &src.delta_basis(u) {
                r.add_scaled(&LinComb::tensor(&self.apply_word(x), &self.apply_word(y)), c);
            }
            del.record(l == r, || format!("ΔΨ({}) ≠ (Ψ⊗Ψ)Δ", src.fmt_word(u)));
            let e = tgt.counit(&pu);
            eps.record(e == src.counit_basis(u), || format!("εΨ({}) = {e}", src.fmt_word(u)));
        }
        let mut rep = ValidationReport::new();
        rep.push(modes.finish());
        rep.push(del.finish());
        rep.push(eps.finish());
        rep
    }
}
