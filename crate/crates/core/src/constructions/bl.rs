//! The differential bialgebra `B_L = S(ĥ⁻) ⊗ ℂ[L]` with
//! `∂e^α = ᾱ(-1)e^α` and `∂h(-n) = n·h(-n-1)`, and its vertex algebra
//! structure from the Borcherds construction `Y(a, x)b = (e^{x∂}a)b`.

use std::collections::BTreeMap;
use std::fmt;

use super::semigroup::{Alpha, SemigroupL};
use super::tensor_phi::{PhiMap, TensorPhi, TensorPhiKey, TensorPhiState};
use crate::coalgebra::{check_coassociativity, check_cocommutativity, check_counit_law, check_delta_derivation};
use crate::current::Mode;
use crate::enveloping::Enveloping;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::report::{Tally, ValidationReport};
use crate::scalar::{binom_general, factorial, Rational};
use crate::text::split_terms;
use crate::vertex::{Coalgebra, VertexAlgebra, Window};
use crate::vla::{builtin_abelian, rank_names};

/// A monomial `Π h_i(-n)^k` in `S(ĥ⁻)`, keyed by `(i, n)`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<(usize, u32), u32>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// `h_i(-n)^k`
    pub fn power(i: usize, n: u32, k: u32) -> Self {
        let mut m = BTreeMap::new();
        if k > 0 {
            m.insert((i, n), k);
        }
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = ((usize, u32), u32)> + '_ {
        self.0.iter().map(|(&k, &e)| (k, e))
    }

    /// `Σ n·k` over factors `h_i(-n)^k`.
    pub fn weight(&self) -> u32 {
        self.factors().map(|((_, n), k)| n * k).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0.clone();
        for (k, e) in other.factors() {
            *m.entry(k).or_insert(0) += e;
        }
        Monomial(m)
    }

    fn with_change(&self, key: (usize, u32), delta: i64) -> Monomial {
        let mut m = self.0.clone();
        let e = m.get(&key).copied().unwrap_or(0) as i64 + delta;
        if e == 0 {
            m.remove(&key);
        } else {
            m.insert(key, e as u32);
        }
        Monomial(m)
    }

    /// All `(a, b, coeff)` with `a·b = self`, the coefficient counting how
    /// many ways the factors split.
    fn splittings(&self) -> Vec<(Monomial, Monomial, Rational)> {
        let mut out = vec![(Monomial::one(), Monomial::one(), Rational::one())];
        for (key, e) in self.factors() {
            let mut next = Vec::new();
            for (a, b, c) in &out {
                for j in 0..=e {
                    let a2 = a.mul(&Monomial::power(key.0, key.1, j));
                    let b2 = b.mul(&Monomial::power(key.0, key.1, e - j));
                    next.push((a2, b2, c * binom_general(e as i64, j as u64)));
                }
            }
            out = next;
        }
        out
    }
}

pub type BlKey = (Monomial, Alpha);
pub type DiffElement = LinComb<BlKey>;

/// `B_L` for a free (semi)group `L = ℤ^r` or `ℕ^r`, with `ĥ = ℚ^r`.
#[derive(Clone, Debug)]
pub struct BL {
    semigroup: SemigroupL,
    names: Vec<String>,
}

impl BL {
    pub fn new(semigroup: SemigroupL) -> Result<Self> {
        if semigroup.rank == 0 {
            return Err(Error::InvalidArgument("B_L needs rank at least 1".into()));
        }
        Ok(BL { semigroup, names: rank_names("h", semigroup.rank) })
    }

    pub fn semigroup(&self) -> SemigroupL {
        self.semigroup
    }

    pub fn rank(&self) -> usize {
        self.semigroup.rank
    }

    pub fn generator_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn one(&self) -> DiffElement {
        LinComb::basis((Monomial::one(), self.semigroup.identity()))
    }

    /// `h_i(-n)`
    pub fn h(&self, i: usize, n: u32) -> DiffElement {
        LinComb::basis((Monomial::power(i, n, 1), self.semigroup.identity()))
    }

    /// `e^α`
    pub fn e(&self, a: &Alpha) -> DiffElement {
        LinComb::basis((Monomial::one(), a.clone()))
    }

    /// `ᾱ(-1) = Σ α_i h_i(-1)`
    pub fn alpha_bar(&self, a: &Alpha) -> DiffElement {
        let mut out = LinComb::zero();
        for (i, &k) in a.0.iter().enumerate() {
            if k != 0 {
                out.add_scaled(&self.h(i, 1), &Rational::from_int(k));
            }
        }
        out
    }

    pub fn multiply_basis(&self, a: &BlKey, b: &BlKey) -> BlKey {
        (a.0.mul(&b.0), &a.1 + &b.1)
    }

    pub fn multiply(&self, x: &DiffElement, y: &DiffElement) -> DiffElement {
        let mut out = LinComb::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                out.add_term(self.multiply_basis(a, b), ca * cb);
            }
        }
        out
    }

    /// `∂` on a basis element, by the Leibniz rule.
    pub fn partial_basis(&self, k: &BlKey) -> DiffElement {
        let (m, a) = k;
        let mut out = LinComb::zero();
        for ((i, n), e) in m.factors() {
            let lowered = m.with_change((i, n), -1).with_change((i, n + 1), 1);
            out.add_term((lowered, a.clone()), Rational::from_int((n * e) as i64));
        }
        for (i, &x) in a.0.iter().enumerate() {
            if x != 0 {
                out.add_term((m.with_change((i, 1), 1), a.clone()), Rational::from_int(x));
            }
        }
        out
    }

    pub fn partial(&self, x: &DiffElement) -> DiffElement {
        x.flat_map(|k| self.partial_basis(k))
    }

    /// `φ(g) = g⁻¹ ∂g` for a group-like `g = e^α`.
    pub fn bl_phi(&self, g: &DiffElement) -> Result<DiffElement> {
        let a = match g.as_basis() {
            Some((m, a)) if m.is_one() && self.semigroup.contains(a) => a.clone(),
            _ => {
                return Err(Error::InvalidArgument(format!("{} is not a group-like e^α", self.format(g))));
            }
        };
        let inv = self
            .semigroup
            .inverse(&a)
            .ok_or_else(|| Error::NotInvertible(format!("e^{{{a}}} has no inverse in {}", self.semigroup)))?;
        Ok(self.multiply(&self.e(&inv), &self.partial(g)))
    }

    /// Basis keys with monomial weight `≤ max_weight` and `|α_i| ≤ alpha_bound`.
    pub fn basis(&self, max_weight: u32, alpha_bound: i64) -> Vec<BlKey> {
        let mut monos = Vec::new();
        self.monomials(max_weight, &mut monos);
        monos.sort_by_key(|m| (m.weight(), m.clone()));
        let mut out = Vec::new();
        for a in self.semigroup.elements(alpha_bound) {
            for m in &monos {
                out.push((m.clone(), a.clone()));
            }
        }
        out
    }

    fn monomials(&self, max_weight: u32, out: &mut Vec<Monomial>) {
        fn go(vars: &[(usize, u32)], start: usize, left: u32, cur: Monomial, out: &mut Vec<Monomial>) {
            out.push(cur.clone());
            for (j, &(i, n)) in vars.iter().enumerate().skip(start) {
                if n <= left {
                    go(vars, j, left - n, cur.mul(&Monomial::power(i, n, 1)), out);
                }
            }
        }
        let vars: Vec<(usize, u32)> = (0..self.rank()).flat_map(|i| (1..=max_weight).map(move |n| (i, n))).collect();
        go(&vars, 0, max_weight, Monomial::one(), out);
    }

    pub fn format_key(&self, k: &BlKey) -> String {
        let mut parts: Vec<String> = Vec::new();
        for ((i, n), e) in k.0.factors() {
            let base = format!("{}(-{n})", self.names[i]);
            parts.push(if e == 1 { base } else { format!("{base}^{e}") });
        }
        if !k.1.is_zero() {
            parts.push(format!("e^{{{}}}", k.1));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("·")
        }
    }

    /// Parses sums of terms like `2·h1(-2)^2·e^{(3)}`.
    pub fn parse(&self, s: &str) -> Result<DiffElement> {
        let s = s.trim();
        let mut out = LinComb::zero();
        if s == "0" {
            return Ok(out);
        }
        for (neg, term) in split_terms(s)? {
            let mut coeff = if neg { -Rational::one() } else { Rational::one() };
            let mut mono = Monomial::one();
            let mut alpha = self.semigroup.identity();
            for factor in term.split(['·', '*']).map(str::trim) {
                if let Ok(c) = factor.parse::<Rational>() {
                    coeff = coeff * c;
                } else if let Some(rest) = factor.strip_prefix("e^{") {
                    let inner = rest
                        .strip_suffix('}')
                        .and_then(|x| x.strip_prefix('('))
                        .and_then(|x| x.strip_suffix(')'))
                        .ok_or_else(|| Error::Parse(format!("bad group-like factor `{factor}`")))?;
                    let v: Vec<i64> = inner
                        .split(',')
                        .map(|x| x.trim().parse::<i64>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| Error::Parse(format!("bad lattice vector in `{factor}`")))?;
                    let a = Alpha(v);
                    self.semigroup.check(&a).map_err(|e| Error::Parse(e.to_string()))?;
                    alpha = &alpha + &a;
                } else {
                    mono = mono.mul(&self.parse_factor(factor)?);
                }
            }
            out.add_term((mono, alpha), coeff);
        }
        Ok(out)
    }

    fn parse_factor(&self, f: &str) -> Result<Monomial> {
        let (base, exp) = match f.rsplit_once('^') {
            Some((b, e)) => (b, e.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?),
            None => (f, 1),
        };
        let open = base.find('(').ok_or_else(|| Error::Parse(format!("expected `h(-n)`, got `{f}`")))?;
        let name = &base[..open];
        let i = self
            .names
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        let n: i64 = base[open + 1..]
            .strip_suffix(')')
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad mode in `{f}`")))?;
        if n >= 0 {
            return Err(Error::Parse(format!("B_L only contains negative modes, got `{f}`")));
        }
        Ok(Monomial::power(i, (-n) as u32, exp))
    }

    /// The vertex algebra `𝒱_abelian(r) ⊗_φ ℂ[L]` with `φ(α) = ᾱ(-1)`,
    /// which `B_L` is identified with.
    pub fn tensor_phi(&self) -> TensorPhi {
        let p = builtin_abelian(self.rank()).expect("rank ≥ 1");
        let targets = (0..self.rank()).map(|i| p.gen_element(p.gen_id(&self.names[i]).expect("name"))).collect();
        TensorPhi::new(Enveloping::new(p), self.semigroup, PhiMap::new(targets)).expect("abelian φ is central")
    }

    /// `Π h_i(-n)^k e^α ↦ Π h_i(-n)^k 𝟙 ⊗ e^α`.
    pub fn to_tensor_phi(&self, tp: &TensorPhi, k: &BlKey) -> TensorPhiKey {
        let p = tp.envelope().presentation();
        let mut modes = Vec::new();
        for ((i, n), e) in k.0.factors() {
            let g = p.gen_id(&self.names[i]).expect("matching presentation");
            modes.extend(std::iter::repeat(Mode::new(g, -(n as i64))).take(e as usize));
        }
        let state = tp.envelope().straighten(&modes);
        let word = state.as_basis().expect("abelian words straighten to a single word").clone();
        debug_assert!(state.coeff(&word).is_one());
        (word, k.1.clone())
    }

    pub fn from_tensor_phi(&self, tp: &TensorPhi, k: &TensorPhiKey) -> BlKey {
        let p = tp.envelope().presentation();
        let mut mono = Monomial::one();
        for m in k.0.modes() {
            let i = self.names.iter().position(|x| x == p.name(m.gen)).expect("matching presentation");
            mono = mono.mul(&Monomial::power(i, (-m.n) as u32, 1));
        }
        (mono, k.1.clone())
    }

    pub fn from_tensor_phi_state(&self, tp: &TensorPhi, v: &TensorPhiState) -> DiffElement {
        v.map_keys(|k| self.from_tensor_phi(tp, k))
    }
}

impl VertexAlgebra for BL {
    type Key = BlKey;

    fn vacuum_key(&self) -> BlKey {
        (Monomial::one(), self.semigroup.identity())
    }

    /// `a_n b = 0` for `n ≥ 0` and `a_{-k-1} b = (1/k!)(∂^k a) b`.
    fn mode_basis(&self, a: &BlKey, n: i64, b: &BlKey) -> DiffElement {
        if n >= 0 {
            return LinComb::zero();
        }
        let k = (-n - 1) as u32;
        let da = self.derivation_times(&LinComb::basis(a.clone()), k);
        let bb = LinComb::basis(b.clone());
        self.multiply(&da, &bb).scale(&factorial(k as u64).recip().expect("nonzero"))
    }

    fn truncation_bound(&self, _: &BlKey, _: &BlKey) -> i64 {
        -1
    }

    fn derivation_basis(&self, k: &BlKey) -> DiffElement {
        self.partial_basis(k)
    }

    fn format_key(&self, k: &BlKey) -> String {
        BL::format_key(self, k)
    }
}

impl Coalgebra for BL {
    /// `h_i(-n)` primitive, `e^α` group-like, extended multiplicatively.
    fn delta_basis(&self, k: &BlKey) -> LinComb<(BlKey, BlKey)> {
        let mut out = LinComb::zero();
        for (a, b, c) in k.0.splittings() {
            out.add_term(((a, k.1.clone()), (b, k.1.clone())), c);
        }
        out
    }

    fn counit_basis(&self, k: &BlKey) -> Rational {
        if k.0.is_one() {
            Rational::one()
        } else {
            Rational::zero()
        }
    }
}

/// `φ(α+β) = φ(α) + φ(β)` for `bl_phi` over all `|α_i|, |β_i| ≤ bound`.
pub fn check_bl_phi_additivity(bl: &BL, bound: i64) -> ValidationReport {
    let mut t = Tally::new("phi-additivity");
    let elems = bl.semigroup().elements(bound);
    for a in &elems {
        for b in &elems {
            let (Ok(pa), Ok(pb), Ok(pab)) = (bl.bl_phi(&bl.e(a)), bl.bl_phi(&bl.e(b)), bl.bl_phi(&bl.e(&(a + b)))) else {
                continue;
            };
            t.record(pab == &pa + &pb, || format!("φ({}) ≠ φ({a}) + φ({b})", a + b));
            t.record(pa == bl.alpha_bar(a), || format!("φ(e^{{{a}}}) = {}", bl.format(&pa)));
        }
    }
    let mut rep = ValidationReport::new();
    rep.push(t.finish());
    rep
}

/// Bialgebra and differential axioms on the bounded basis of `B_L`.
pub fn check_bl_bialgebra(bl: &BL, max_weight: u32, alpha_bound: i64) -> ValidationReport {
    let basis = bl.basis(max_weight, alpha_bound);
    let mut rep = ValidationReport::new();
    rep.push(check_coassociativity(bl, &basis));
    rep.push(check_counit_law(bl, &basis));
    rep.push(check_cocommutativity(bl, &basis));
    rep.push(check_delta_derivation(bl, &basis));
    let mut mult = Tally::new("delta-multiplicative");
    let mut eps = Tally::new("counit-multiplicative");
    let mut leib = Tally::new("partial-leibniz");
    for a in &basis {
        for b in &basis {
            if a.0.weight() + b.0.weight() > max_weight {
                continue;
            }
            let ab = LinComb::basis(bl.multiply_basis(a, b));
            let lhs = bl.delta(&ab);
            let da = bl.delta_basis(a);
            let db = bl.delta_basis(b);
            let mut rhs = LinComb::zero();
            for ((a1, a2), c) in &da {
                for ((b1, b2), d) in &db {
                    rhs.add_term((bl.multiply_basis(a1, b1), bl.multiply_basis(a2, b2)), c * d);
                }
            }
            mult.record(lhs == rhs, || format!("Δ({}·{}) ≠ Δ·Δ", bl.format_key(a), bl.format_key(b)));
            eps.record(bl.counit(&ab) == bl.counit_basis(a) * bl.counit_basis(b), || {
                format!("ε({}·{}) ≠ ε·ε", bl.format_key(a), bl.format_key(b))
            });
            let (va, vb) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()));
            let l = bl.partial(&ab);
            let r = bl.multiply(&bl.partial(&va), &vb) + bl.multiply(&va, &bl.partial(&vb));
            leib.record(l == r, || format!("∂({}·{}) fails Leibniz", bl.format_key(a), bl.format_key(b)));
        }
    }
    rep.push(mult.finish());
    rep.push(eps.finish());
    rep.push(leib.finish());
    rep
}

/// Compares `B_L` with `𝒱_abelian ⊗_φ ℂ[L]` under the basis identification:
/// every mode in `window`, `∂`, `Δ` and `ε` on bounded basis elements.
pub fn check_bl_equals_tensor_phi(bl: &BL, max_weight: u32, alpha_bound: i64, window: Window) -> ValidationReport {
    use rayon::prelude::*;
    let tp = bl.tensor_phi();
    let basis = bl.basis(max_weight, alpha_bound);
    let tally_modes = basis
        .par_iter()
        .map(|a| {
            let mut t = Tally::new("bl-modes");
            let ta = LinComb::basis(bl.to_tensor_phi(&tp, a));
            for b in &basis {
                let tb = LinComb::basis(bl.to_tensor_phi(&tp, b));
                for n in window.iter() {
                    let lhs = bl.mode_basis(a, n, b);
                    let rhs = bl.from_tensor_phi_state(&tp, &tp.mode(&ta, n, &tb));
                    t.record(lhs == rhs, || {
                        format!(
                            "{}_({n}) {}: Borcherds {} vs twisted {}",
                            bl.format_key(a),
                            bl.format_key(b),
                            bl.format(&lhs),
                            bl.format(&rhs)
                        )
                    });
                }
            }
            t
        })
        .reduce(|| Tally::new("bl-modes"), |mut x, y| {
            x.absorb(y);
            x
        });
    let mut d = Tally::new("bl-derivation");
    let mut delta = Tally::new("bl-delta");
    let mut eps = Tally::new("bl-counit");
    for a in &basis {
        let ta = LinComb::basis(bl.to_tensor_phi(&tp, a));
        let lhs = bl.partial_basis(a);
        let rhs = bl.from_tensor_phi_state(&tp, &tp.derivation(&ta));
        d.record(lhs == rhs, || format!("∂{} = {} vs 𝒟 = {}", bl.format_key(a), bl.format(&lhs), bl.format(&rhs)));
        let dl = bl.delta_basis(a);
        let dr = tp.delta(&ta).map_keys(|(x, y)| (bl.from_tensor_phi(&tp, x), bl.from_tensor_phi(&tp, y)));
        delta.record(dl == dr, || format!("Δ differs on {}", bl.format_key(a)));
        eps.record(bl.counit_basis(a) == tp.counit(&ta), || format!("ε differs on {}", bl.format_key(a)));
    }
    let mut rep = ValidationReport::new();
    rep.push(tally_modes.finish());
    rep.push(d.finish());
    rep.push(delta.finish());
    rep.push(eps.finish());
    rep
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (j, ((i, n), e)) in self.factors().enumerate() {
            if j > 0 {
                write!(f, "·")?;
            }
            write!(f, "h{i}(-{n})^{e}")?;
        }
        Ok(())
    }
}
