//! The half-exponential `E⁻(a, x)` and the twisted tensor product
//! `𝒱_C ⊗_φ ℂ[L]` with `Y(v⊗e^α, x) = E⁻(φ(α), x) Y(v, x) ⊗ e^α`.

use dashmap::DashMap;

use super::semigroup::{Alpha, SemigroupL};
use crate::current::mode_normalize;
use crate::enveloping::{Enveloping, PbwWord, State};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::report::{CheckResult, Tally, ValidationReport};
use crate::scalar::{binom_general, Rational};
use crate::vertex::{Coalgebra, VertexAlgebra, Window};
use crate::vla::{Presentation, VlaElement};

/// An additive map `L → C`, given by the images of the standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMap {
    targets: Vec<VlaElement>,
}

impl PhiMap {
    pub fn new(targets: Vec<VlaElement>) -> Self {
        PhiMap { targets }
    }

    pub fn rank(&self) -> usize {
        self.targets.len()
    }

    pub fn targets(&self) -> &[VlaElement] {
        &self.targets
    }

    /// `φ(α) = Σ α_i φ(e_i)`
    pub fn apply(&self, a: &Alpha) -> VlaElement {
        let mut out = VlaElement::zero();
        for (t, &k) in self.targets.iter().zip(&a.0) {
            if k != 0 {
                out.add_scaled(t, &Rational::from_int(k));
            }
        }
        out
    }
}

/// `φ(e_i)_n b = 0` for every direction `i`, generator `b` and `n ≥ 0`.
pub fn check_phi_central(p: &Presentation, phi: &PhiMap) -> ValidationReport {
    let mut t = Tally::new("phi-central");
    for (i, target) in phi.targets().iter().enumerate() {
        for b in p.gen_ids() {
            let be = p.gen_element(b);
            for n in 0..=p.product_bound(target, &be) {
                let prod = p.nth_product(target, n, &be);
                t.record(prod.is_zero(), || {
                    format!("φ(e{}) = {}: ({}, {n}, {}) = {}", i + 1, p.fmt_element(target), p.fmt_element(target), p.name(b), p.fmt_element(&prod))
                });
            }
        }
    }
    let mut rep = ValidationReport::new();
    rep.push(t.finish());
    rep
}

/// `[E_0 v, ..., E_N v]` where `E⁻(a, x) = Σ_k E_k x^k`, using
/// `k E_k = Σ_{n=1}^{k} a_{-n} E_{k-n}`.
pub fn eminus_apply<V: VertexAlgebra>(
    va: &V,
    a: &LinComb<V::Key>,
    v: &LinComb<V::Key>,
    order: usize,
) -> Vec<LinComb<V::Key>> {
    let mut out = vec![v.clone()];
    for k in 1..=order {
        let mut acc = LinComb::zero();
        for n in 1..=k {
            acc = acc + va.mode(a, -(n as i64), &out[k - n]);
        }
        out.push(acc.scale(&Rational::new(1, k as i64)));
    }
    out
}

/// Coefficient-wise check of
/// `Y(E⁻(a,x₀)w, x₂) = E⁻(a, x₂+x₀) E⁻(-a, x₂) Y(w, x₂)`
/// at `x₀^i x₂^{-n-1}` applied to each test state.
pub fn check_eminus_conjugation<V: VertexAlgebra>(
    va: &V,
    a: &LinComb<V::Key>,
    w: &LinComb<V::Key>,
    tests: &[LinComb<V::Key>],
    max_order: usize,
    window: Window,
) -> CheckResult {
    let mut t = Tally::new("eminus-conjugation");
    let neg_a = -a.clone();
    let ew = eminus_apply(va, a, w, max_order);
    for target in tests {
        let top = va.bound(w, target);
        for i in 0..=max_order {
            for n in window.iter() {
                let lhs = va.mode(&ew[i], n, target);
                let mut rhs = LinComb::zero();
                // N - i + M ≤ top - n
                let span = top - n;
                if top != i64::MIN && span >= 0 {
                    for extra in 0..=span as usize {
                        let inner = va.mode(w, n + extra as i64, target);
                        if inner.is_zero() {
                            continue;
                        }
                        let f = eminus_apply(va, &neg_a, &inner, extra);
                        for m in 0..=extra {
                            let big_n = i + extra - m;
                            let c = binom_general(big_n as i64, i as u64);
                            let e = eminus_apply(va, a, &f[m], big_n);
                            rhs.add_scaled(&e[big_n], &c);
                        }
                    }
                }
                t.record(lhs == rhs, || {
                    format!(
                        "a={} w={} test={} at x0^{i} x2^{}: lhs {} rhs {}",
                        va.format(a),
                        va.format(w),
                        va.format(target),
                        -n - 1,
                        va.format(&lhs),
                        va.format(&rhs)
                    )
                });
            }
        }
    }
    t.finish()
}

pub type TensorPhiKey = (PbwWord, Alpha);
pub type TensorPhiState = LinComb<TensorPhiKey>;

/// `𝒱_C ⊗_φ ℂ[L]` for a central additive `φ: L → C`.
pub struct TensorPhi {
    env: Enveloping,
    semigroup: SemigroupL,
    phi: PhiMap,
    eminus: DashMap<(Alpha, PbwWord), Vec<State>>,
}

impl std::fmt::Debug for TensorPhi {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TensorPhi").field("semigroup", &self.semigroup).field("phi", &self.phi).finish()
    }
}

impl TensorPhi {
    /// Fails when `φ` is not central, its rank differs from `L`, or some
    /// `φ(e_i)` has mixed weight.
    pub fn new(env: Enveloping, semigroup: SemigroupL, phi: PhiMap) -> Result<Self> {
        let p = env.presentation();
        if phi.rank() != semigroup.rank {
            return Err(Error::InvalidArgument(format!(
                "phi has {} targets but the semigroup has rank {}",
                phi.rank(),
                semigroup.rank
            )));
        }
        for (i, t) in phi.targets().iter().enumerate() {
            if !t.is_zero() && p.element_weight(t).is_none() {
                return Err(Error::Unsupported(format!(
                    "φ(e{}) = {} is not weight-homogeneous",
                    i + 1,
                    p.fmt_element(t)
                )));
            }
        }
        let rep = check_phi_central(p, &phi);
        if let Some(bad) = rep.first_failure() {
            return Err(Error::NotCentral(bad.witness.clone().unwrap_or_default()));
        }
        Ok(TensorPhi { env, semigroup, phi, eminus: DashMap::new() })
    }

    pub fn envelope(&self) -> &Enveloping {
        &self.env
    }

    pub fn semigroup(&self) -> SemigroupL {
        self.semigroup
    }

    pub fn phi(&self) -> &PhiMap {
        &self.phi
    }

    /// `v ⊗ e^α`
    pub fn lift(&self, v: &State, a: &Alpha) -> TensorPhiState {
        v.map_keys(|w| (w.clone(), a.clone()))
    }

    /// `𝟙 ⊗ e^α`
    pub fn group_like(&self, a: &Alpha) -> TensorPhiState {
        LinComb::basis((PbwWord::vacuum(), a.clone()))
    }

    /// `E_k(φ(α)) w` for `k = 0..=order`, memoized per word.
    fn eminus_word(&self, a: &Alpha, w: &PbwWord, order: usize) -> Vec<State> {
        let key = (a.clone(), w.clone());
        if let Some(v) = self.eminus.get(&key) {
            if v.len() > order {
                return v[..=order].to_vec();
            }
        }
        let p = self.env.presentation();
        let target = self.phi.apply(a);
        let mut out = vec![State::basis(w.clone())];
        for k in 1..=order {
            let mut acc = State::zero();
            if !target.is_zero() {
                for n in 1..=k {
                    let modes = mode_normalize(p, &target, -(n as i64));
                    acc = acc + self.env.combo_apply(&modes, &out[k - n]);
                }
            }
            out.push(acc.scale(&Rational::new(1, k as i64)));
        }
        self.eminus.insert(key, out.clone());
        out
    }

    /// `E_k(φ(α)) v` for `k = 0..=order`.
    pub fn eminus_state(&self, a: &Alpha, v: &State, order: usize) -> Vec<State> {
        let mut out = vec![State::zero(); order + 1];
        for (w, c) in v {
            for (k, s) in self.eminus_word(a, w, order).into_iter().enumerate() {
                out[k].add_scaled(&s, c);
            }
        }
        out
    }

    /// Basis keys `w ⊗ e^α` with `wt(w) ≤ max_weight`, at most `torsion`
    /// torsion factors, and `|α_i| ≤ alpha_bound`.
    pub fn basis(&self, max_weight: i64, torsion: usize, alpha_bound: i64) -> Vec<TensorPhiKey> {
        let words: Vec<PbwWord> = (0..=max_weight).flat_map(|d| self.env.basis_words(d, torsion)).collect();
        let mut out = Vec::new();
        for a in self.semigroup.elements(alpha_bound) {
            for w in &words {
                out.push((w.clone(), a.clone()));
            }
        }
        out
    }

    pub fn clear_caches(&self) {
        self.eminus.clear();
        self.env.clear_caches();
    }
}

impl VertexAlgebra for TensorPhi {
    type Key = TensorPhiKey;

    fn vacuum_key(&self) -> TensorPhiKey {
        (PbwWord::vacuum(), self.semigroup.identity())
    }

    /// `(u⊗e^α)_m (w⊗e^β) = Σ_{j=0}^{K-m} E_j(φ(α)) (u_{m+j} w) ⊗ e^{α+β}`
    /// with `K` the truncation bound of `(u, w)`.
    fn mode_basis(&self, u: &TensorPhiKey, m: i64, w: &TensorPhiKey) -> TensorPhiState {
        let top = self.env.truncation_bound(&u.0, &w.0);
        if m > top {
            return LinComb::zero();
        }
        let sum = &u.1 + &w.1;
        let mut out = State::zero();
        for j in 0..=(top - m) as usize {
            let prod = self.env.mode_basis(&u.0, m + j as i64, &w.0);
            if prod.is_zero() {
                continue;
            }
            let e = self.eminus_state(&u.1, &prod, j);
            out.add_scaled(&e[j], &Rational::one());
        }
        self.lift(&out, &sum)
    }

    fn truncation_bound(&self, u: &TensorPhiKey, w: &TensorPhiKey) -> i64 {
        self.env.truncation_bound(&u.0, &w.0)
    }

    fn format_key(&self, k: &TensorPhiKey) -> String {
        format!("{}⊗e^{{{}}}", self.env.fmt_word(&k.0), k.1)
    }
}

impl Coalgebra for TensorPhi {
    fn delta_basis(&self, k: &TensorPhiKey) -> LinComb<(TensorPhiKey, TensorPhiKey)> {
        self.env
            .delta_basis(&k.0)
            .map_keys(|(a, b)| ((a.clone(), k.1.clone()), (b.clone(), k.1.clone())))
    }

    fn counit_basis(&self, k: &TensorPhiKey) -> Rational {
        self.env.counit_basis(&k.0)
    }
}
