//! The divided-power bialgebra `ℬ(U)` on a vector space with a fixed
//! basis, finite-dimensional Lie algebras with their enveloping algebras,
//! and the coalgebra map `Ψ_𝔤: ℬ(𝔤) → U(𝔤)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::linalg::kernel;
use crate::report::{Tally, ValidationReport};
use crate::scalar::{binom_general, factorial, Rational};

/// A finitely supported exponent function `f`, naming the basis element `v_(f)`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DividedPowerBasis(BTreeMap<usize, u32>);

impl DividedPowerBasis {
    pub fn one() -> Self {
        Self::default()
    }

    /// `k·δ_i`
    pub fn single(i: usize, k: u32) -> Self {
        Self::from_exponents([(i, k)])
    }

    pub fn from_exponents(entries: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut m = BTreeMap::new();
        for (i, k) in entries {
            if k > 0 {
                *m.entry(i).or_insert(0) += k;
            }
        }
        DividedPowerBasis(m)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|(&i, &k)| (i, k))
    }

    /// `|f| = Σ f(λ)`
    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    fn add(&self, other: &Self) -> Self {
        Self::from_exponents(self.exponents().chain(other.exponents()))
    }

    /// All `(g, h)` with `g + h = self`.
    pub fn splittings(&self) -> Vec<(Self, Self)> {
        let mut out = vec![(Self::one(), Self::one())];
        for (i, k) in self.exponents() {
            let mut next = Vec::with_capacity(out.len() * (k as usize + 1));
            for (g, h) in &out {
                for a in 0..=k {
                    let mut g2 = g.clone();
                    let mut h2 = h.clone();
                    if a > 0 {
                        g2.0.insert(i, a);
                    }
                    if a < k {
                        h2.0.insert(i, k - a);
                    }
                    next.push((g2, h2));
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Debug for DividedPowerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, (i, k)) in self.exponents().enumerate() {
            if n > 0 {
                write!(f, "·")?;
            }
            write!(f, "v{i}^({k})")?;
        }
        Ok(())
    }
}

/// `v_(f) v_(g) = Π_λ binom(f(λ)+g(λ), g(λ)) · v_(f+g)`.
pub fn dp_product(f: &DividedPowerBasis, g: &DividedPowerBasis) -> (Rational, DividedPowerBasis) {
    let mut c = Rational::one();
    for (i, b) in g.exponents() {
        let a = f.exponent(i);
        c = c * binom_general((a + b) as i64, b as u64);
    }
    (c, f.add(g))
}

/// `Δ v_(f) = Σ_{g+h=f} v_(g) ⊗ v_(h)`.
pub fn dp_delta(f: &DividedPowerBasis) -> LinComb<(DividedPowerBasis, DividedPowerBasis)> {
    f.splittings().into_iter().map(|gh| (gh, Rational::one())).collect()
}

/// `ε v_(f) = δ_{f,0}`.
pub fn dp_counit(f: &DividedPowerBasis) -> Rational {
    if f.0.is_empty() {
        Rational::one()
    } else {
        Rational::zero()
    }
}

pub type DividedPowerElement = LinComb<DividedPowerBasis>;

pub fn dp_multiply(x: &DividedPowerElement, y: &DividedPowerElement) -> DividedPowerElement {
    let mut out = LinComb::zero();
    for (f, a) in x {
        for (g, b) in y {
            let (c, h) = dp_product(f, g);
            out.add_term(h, c * a * b);
        }
    }
    out
}

/// Basis of `ℬ(U)` for `dim U = dim` in total degree `≤ max_degree`.
pub fn dp_basis(dim: usize, max_degree: u32) -> Vec<DividedPowerBasis> {
    fn go(i: usize, dim: usize, left: u32, cur: &mut Vec<(usize, u32)>, out: &mut Vec<DividedPowerBasis>) {
        if i == dim {
            out.push(DividedPowerBasis::from_exponents(cur.iter().copied()));
            return;
        }
        for k in 0..=left {
            cur.push((i, k));
            go(i + 1, dim, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, dim, max_degree, &mut Vec::new(), &mut out);
    out.sort_by_key(|f| (f.degree(), f.clone()));
    out
}

type DpPair = LinComb<(DividedPowerBasis, DividedPowerBasis)>;

fn pair_product(x: &DpPair, y: &DpPair) -> DpPair {
    let mut out = LinComb::zero();
    for ((a1, a2), c) in x {
        for ((b1, b2), d) in y {
            let (c1, k1) = dp_product(a1, b1);
            let (c2, k2) = dp_product(a2, b2);
            out.add_term((k1, k2), c1 * c2 * c * d);
        }
    }
    out
}

/// Associativity, unit, coassociativity, counit, cocommutativity and the
/// compatibility of `Δ`, `ε` with the product on `ℬ(U)`.
pub fn check_dp_bialgebra(dim: usize, max_degree: u32) -> ValidationReport {
    let basis = dp_basis(dim, max_degree);
    let one = DividedPowerBasis::one();
    let mut assoc = Tally::new("dp-associativity");
    let mut unit = Tally::new("dp-unit");
    let mut comm = Tally::new("dp-commutativity");
    let mut coassoc = Tally::new("dp-coassociativity");
    let mut counit = Tally::new("dp-counit");
    let mut cocomm = Tally::new("dp-cocommutativity");
    let mut mult = Tally::new("dp-delta-multiplicative");
    let mut eps = Tally::new("dp-counit-multiplicative");

    for f in &basis {
        let vf = LinComb::basis(f.clone());
        unit.record(dp_product(&one, f) == (Rational::one(), f.clone()) && dp_product(f, &one).1 == *f, || {
            format!("1·{f:?} ≠ {f:?}")
        });
        let d = dp_delta(f);
        let mut left: LinComb<(DividedPowerBasis, DividedPowerBasis, DividedPowerBasis)> = LinComb::zero();
        let mut right = LinComb::zero();
        let mut eps_left = LinComb::zero();
        let mut eps_right = LinComb::zero();
        for ((g, h), c) in &d {
            for ((g1, g2), c1) in &dp_delta(g) {
                left.add_term((g1.clone(), g2.clone(), h.clone()), c * c1);
            }
            for ((h1, h2), c2) in &dp_delta(h) {
                right.add_term((g.clone(), h1.clone(), h2.clone()), c * c2);
            }
            eps_left.add_term(h.clone(), dp_counit(g) * c);
            eps_right.add_term(g.clone(), dp_counit(h) * c);
        }
        coassoc.record(left == right, || format!("coassociativity fails on {f:?}"));
        counit.record(eps_left == vf && eps_right == vf, || format!("counit law fails on {f:?}"));
        cocomm.record(d == d.map_keys(|(a, b)| (b.clone(), a.clone())), || format!("Δ not cocommutative on {f:?}"));

        for g in &basis {
            if f.degree() + g.degree() > max_degree {
                continue;
            }
            let (c, fg) = dp_product(f, g);
            comm.record(dp_product(g, f) == (c.clone(), fg.clone()), || format!("{f:?}·{g:?} ≠ {g:?}·{f:?}"));
            let lhs = dp_delta(&fg).scale(&c);
            let rhs = pair_product(&d, &dp_delta(g));
            mult.record(lhs == rhs, || format!("Δ({f:?}·{g:?}) ≠ Δ({f:?})Δ({g:?})"));
            eps.record(dp_counit(&fg) * &c == dp_counit(f) * dp_counit(g), || format!("ε({f:?}·{g:?}) ≠ ε·ε"));
            for h in &basis {
                if fg.degree() + h.degree() > max_degree {
                    continue;
                }
                let vg = LinComb::basis(g.clone());
                let vh = LinComb::basis(h.clone());
                let l = dp_multiply(&dp_multiply(&vf, &vg), &vh);
                let r = dp_multiply(&vf, &dp_multiply(&vg, &vh));
                assoc.record(l == r, || format!("({f:?}·{g:?})·{h:?} ≠ {f:?}·({g:?}·{h:?})"));
            }
        }
    }
    let mut rep = ValidationReport::new();
    for t in [assoc, unit, comm, coassoc, counit, cocomm, mult, eps] {
        rep.push(t.finish());
    }
    rep
}

/// Primitive elements of `ℬ(U)` up to `max_degree`: spanned by the `v_(δ_λ)`.
pub fn dp_primitives(dim: usize, max_degree: u32) -> Vec<DividedPowerElement> {
    let basis = dp_basis(dim, max_degree);
    let one = DividedPowerBasis::one();
    let cols: Vec<DpPair> = basis
        .iter()
        .map(|f| {
            dp_delta(f)
                - LinComb::term((f.clone(), one.clone()), Rational::one())
                - LinComb::term((one.clone(), f.clone()), Rational::one())
        })
        .collect();
    kernel(&cols).into_iter().map(|v| v.map_keys(|&i| basis[i].clone())).collect()
}

/// A finite-dimensional Lie algebra given by structure constants on an
/// ordered basis `x_0, x_1, ...`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    names: Vec<String>,
    brackets: BTreeMap<(usize, usize), LinComb<usize>>,
}

impl LieAlgebra {
    /// Builds from `[x_i, x_j]` for `i < j`; the other brackets follow by
    /// antisymmetry. Fails if an index is out of range or Jacobi fails.
    pub fn new(names: Vec<String>, brackets: &[(usize, usize, LinComb<usize>)]) -> Result<Self> {
        let n = names.len();
        let mut table = BTreeMap::new();
        for (i, j, v) in brackets {
            if *i >= n || *j >= n || v.keys().any(|&k| k >= n) {
                return Err(Error::InvalidArgument(format!("unknown basis index in bracket [{i},{j}]")));
            }
            if i == j {
                if !v.is_zero() {
                    return Err(Error::InvalidArgument(format!("[x{i},x{i}] must vanish")));
                }
                continue;
            }
            if table.insert((*i, *j), v.clone()).is_some() || table.insert((*j, *i), -v.clone()).is_some() {
                return Err(Error::InvalidArgument(format!("bracket [{i},{j}] given twice")));
            }
        }
        let lie = LieAlgebra { names, brackets: table };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let total = lie.bracket_elems(&lie.bracket(a, b), &LinComb::basis(c))
                        + lie.bracket_elems(&lie.bracket(b, c), &LinComb::basis(a))
                        + lie.bracket_elems(&lie.bracket(c, a), &LinComb::basis(b));
                    if !total.is_zero() {
                        return Err(Error::InvalidArgument(format!("Jacobi identity fails on x{a}, x{b}, x{c}")));
                    }
                }
            }
        }
        Ok(lie)
    }

    pub fn abelian(dim: usize) -> Self {
        let names = (0..dim).map(|i| format!("x{i}")).collect();
        LieAlgebra { names, brackets: BTreeMap::new() }
    }

    /// The two-dimensional algebra with `[x, y] = y`.
    pub fn affine_line() -> Self {
        Self::new(vec!["x".into(), "y".into()], &[(0, 1, LinComb::basis(1))]).expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn bracket(&self, i: usize, j: usize) -> LinComb<usize> {
        self.brackets.get(&(i, j)).cloned().unwrap_or_default()
    }

    fn bracket_elems(&self, x: &LinComb<usize>, y: &LinComb<usize>) -> LinComb<usize> {
        let mut out = LinComb::zero();
        for (i, a) in x {
            for (j, b) in y {
                out.add_scaled(&self.bracket(*i, *j), &(a * b));
            }
        }
        out
    }

    /// Rewrites a word in the `x_i` into the PBW basis of nondecreasing words.
    pub fn straighten(&self, word: &[usize]) -> UElement {
        let Some(i) = word.windows(2).position(|w| w[0] > w[1]) else {
            return LinComb::basis(UWord(word.to_vec()));
        };
        let (a, b) = (word[i], word[i + 1]);
        let mut swapped = word.to_vec();
        swapped.swap(i, i + 1);
        let mut out = self.straighten(&swapped);
        for (k, c) in &self.bracket(a, b) {
            let mut w = word[..i].to_vec();
            w.push(*k);
            w.extend_from_slice(&word[i + 2..]);
            out.add_scaled(&self.straighten(&w), c);
        }
        out
    }

    pub fn u_multiply(&self, x: &UElement, y: &UElement) -> UElement {
        let mut out = LinComb::zero();
        for (u, a) in x {
            for (v, b) in y {
                let w: Vec<usize> = u.0.iter().chain(&v.0).copied().collect();
                out.add_scaled(&self.straighten(&w), &(a * b));
            }
        }
        out
    }

    /// Coproduct of `U(𝔤)` by subset splitting of PBW words.
    pub fn u_delta(&self, x: &UElement) -> LinComb<(UWord, UWord)> {
        let mut out = LinComb::zero();
        for (w, c) in x {
            let k = w.0.len();
            for mask in 0u64..(1u64 << k) {
                let (mut l, mut r) = (Vec::new(), Vec::new());
                for (i, g) in w.0.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        l.push(*g);
                    } else {
                        r.push(*g);
                    }
                }
                out.add_term((UWord(l), UWord(r)), c.clone());
            }
        }
        out
    }

    pub fn u_counit(&self, x: &UElement) -> Rational {
        x.coeff(&UWord(Vec::new()))
    }
}

/// A nondecreasing word in the basis of `𝔤`, standing for a PBW monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UWord(pub Vec<usize>);

pub type UElement = LinComb<UWord>;

/// `Ψ_𝔤(v_(f)) = Π_λ x_λ^{f(λ)} / f(λ)!` in PBW order.
pub fn psi_g(f: &DividedPowerBasis, lie: &LieAlgebra) -> Result<UElement> {
    if let Some(i) = f.max_index().filter(|&i| i >= lie.dim()) {
        return Err(Error::InvalidArgument(format!("unknown basis index {i} for a Lie algebra of dimension {}", lie.dim())));
    }
    let mut word = Vec::new();
    let mut denom = Rational::one();
    for (i, k) in f.exponents() {
        word.extend(std::iter::repeat(i).take(k as usize));
        denom = denom * factorial(k as u64);
    }
    Ok(LinComb::term(UWord(word), denom.recip().expect("factorials are nonzero")))
}

/// `(Ψ⊗Ψ)∘Δ = Δ∘Ψ` and `ε∘Ψ = ε` on `ℬ(𝔤)` up to `max_degree`.
pub fn check_psi_coalgebra_morphism(lie: &LieAlgebra, max_degree: u32) -> ValidationReport {
    let mut delta = Tally::new("psi-delta");
    let mut eps = Tally::new("psi-counit");
    for f in dp_basis(lie.dim(), max_degree) {
        let psi = psi_g(&f, lie).expect("basis within range");
        let lhs = lie.u_delta(&psi);
        let mut rhs = LinComb::zero();
        for ((g, h), c) in &dp_delta(&f) {
            let pg = psi_g(g, lie).expect("in range");
            let ph = psi_g(h, lie).expect("in range");
            rhs.add_scaled(&LinComb::tensor(&pg, &ph), c);
        }
        delta.record(lhs == rhs, || format!("Δ Ψ({f:?}) ≠ (Ψ⊗Ψ) Δ({f:?})"));
        let e = lie.u_counit(&psi);
        eps.record(e == dp_counit(&f), || format!("ε Ψ({f:?}) = {e}"));
    }
    let mut rep = ValidationReport::new();
    rep.push(delta.finish());
    rep.push(eps.finish());
    rep
}
