//! A minimal interface shared by every vertex algebra in the crate, and
//! window-bounded checkers for the vertex-algebra identities that work on
//! any implementation.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::lincomb::LinComb;
use crate::report::{CheckResult, Tally};
use crate::scalar::{binom_general, factorial, Rational};

/// A vertex algebra with a distinguished basis.
pub trait VertexAlgebra: Sync {
    type Key: Clone + Ord + Hash + Debug + Send + Sync;

    fn vacuum_key(&self) -> Self::Key;

    /// `u_n v` on basis elements.
    fn mode_basis(&self, u: &Self::Key, n: i64, v: &Self::Key) -> LinComb<Self::Key>;

    /// Some `N` with `u_n v = 0` for all `n > N`.
    fn truncation_bound(&self, u: &Self::Key, v: &Self::Key) -> i64;

    /// `𝒟v`; the default uses `𝒟v = v_{-2} 𝟙`.
    fn derivation_basis(&self, v: &Self::Key) -> LinComb<Self::Key> {
        self.mode_basis(v, -2, &self.vacuum_key())
    }

    fn format_key(&self, k: &Self::Key) -> String;

    fn vacuum(&self) -> LinComb<Self::Key> {
        LinComb::basis(self.vacuum_key())
    }

    fn mode(&self, u: &LinComb<Self::Key>, n: i64, v: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        let mut out = LinComb::zero();
        for (a, ca) in u {
            for (b, cb) in v {
                if n > self.truncation_bound(a, b) {
                    continue;
                }
                out.add_scaled(&self.mode_basis(a, n, b), &(ca * cb));
            }
        }
        out
    }

    /// Truncation bound for combinations; `i64::MIN` if either side is zero.
    fn bound(&self, u: &LinComb<Self::Key>, v: &LinComb<Self::Key>) -> i64 {
        let mut best = i64::MIN;
        for a in u.keys() {
            for b in v.keys() {
                best = best.max(self.truncation_bound(a, b));
            }
        }
        best
    }

    fn derivation(&self, v: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        v.flat_map(|k| self.derivation_basis(k))
    }

    fn derivation_times(&self, v: &LinComb<Self::Key>, times: u32) -> LinComb<Self::Key> {
        (0..times).fold(v.clone(), |acc, _| self.derivation(&acc))
    }

    fn format(&self, x: &LinComb<Self::Key>) -> String {
        let mut s = String::new();
        if x.is_zero() {
            return "0".into();
        }
        for (i, (k, c)) in x.iter().enumerate() {
            let (neg, mag) = (c.is_negative(), c.abs());
            if i > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            if !mag.is_one() {
                s.push_str(&format!("{mag}·"));
            }
            s.push_str(&self.format_key(k));
        }
        s
    }
}

/// A vertex algebra carrying a coalgebra structure on its basis.
pub trait Coalgebra: VertexAlgebra {
    fn delta_basis(&self, k: &Self::Key) -> LinComb<(Self::Key, Self::Key)>;
    fn counit_basis(&self, k: &Self::Key) -> Rational;

    fn delta(&self, v: &LinComb<Self::Key>) -> LinComb<(Self::Key, Self::Key)> {
        v.flat_map(|k| self.delta_basis(k))
    }

    fn counit(&self, v: &LinComb<Self::Key>) -> Rational {
        v.iter().map(|(k, c)| self.counit_basis(k) * c).sum()
    }
}

/// An inclusive integer range used as a checking window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Self {
        Window { lo, hi }
    }

    pub fn symmetric(n: i64) -> Self {
        Window { lo: -n, hi: n }
    }

    pub fn iter(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

/// Right side of skew-symmetry `Σ_j (-1)^{n+j+1} (1/j!) 𝒟^j (v_{n+j} u)`.
pub fn skew_rhs<V: VertexAlgebra>(va: &V, u: &LinComb<V::Key>, n: i64, v: &LinComb<V::Key>) -> LinComb<V::Key> {
    let mut out = LinComb::zero();
    let top = va.bound(v, u);
    if top == i64::MIN {
        return out;
    }
    for j in 0..=(top - n).max(-1) {
        let prod = va.mode(v, n + j, u);
        if prod.is_zero() {
            continue;
        }
        let c = Rational::sign(n + j + 1) / factorial(j as u64);
        out.add_scaled(&va.derivation_times(&prod, j as u32), &c);
    }
    out
}

pub fn skew_tally<V: VertexAlgebra>(va: &V, u: &LinComb<V::Key>, v: &LinComb<V::Key>, window: Window) -> Tally {
    let mut t = Tally::new("skew-symmetry");
    for n in window.iter() {
        let lhs = va.mode(u, n, v);
        let rhs = skew_rhs(va, u, n, v);
        t.record(lhs == rhs, || {
            format!(
                "u={} v={} n={n}: u_n v = {} but skew side = {}",
                va.format(u),
                va.format(v),
                va.format(&lhs),
                va.format(&rhs)
            )
        });
    }
    t
}

/// `u_n v = Σ_j (-1)^{n+j+1} (1/j!) 𝒟^j (v_{n+j} u)` for every `n` in the window.
pub fn check_skew_symmetry<V: VertexAlgebra>(
    va: &V,
    u: &LinComb<V::Key>,
    v: &LinComb<V::Key>,
    window: Window,
) -> CheckResult {
    skew_tally(va, u, v, window).finish()
}

pub fn commutator_tally<V: VertexAlgebra>(
    va: &V,
    u: &LinComb<V::Key>,
    v: &LinComb<V::Key>,
    w: &LinComb<V::Key>,
    ms: Window,
    ns: Window,
) -> Tally {
    let mut t = Tally::new("borcherds-commutator");
    let uv_top = va.bound(u, v);
    let uv: Vec<LinComb<V::Key>> = if uv_top == i64::MIN {
        Vec::new()
    } else {
        (0..=uv_top.max(-1)).map(|j| va.mode(u, j, v)).collect()
    };
    let vw: HashMap<i64, LinComb<V::Key>> = ns.iter().map(|n| (n, va.mode(v, n, w))).collect();
    let mut terms: HashMap<(usize, i64), LinComb<V::Key>> = HashMap::new();
    for m in ms.iter() {
        let uw = va.mode(u, m, w);
        for n in ns.iter() {
            let lhs = va.mode(u, m, &vw[&n]) - va.mode(v, n, &uw);
            let mut rhs = LinComb::zero();
            for (j, p) in uv.iter().enumerate() {
                let c = binom_general(m, j as u64);
                if c.is_zero() || p.is_zero() {
                    continue;
                }
                let k = m + n - j as i64;
                let term = terms.entry((j, k)).or_insert_with(|| va.mode(p, k, w));
                rhs.add_scaled(term, &c);
            }
            t.record(lhs == rhs, || {
                format!(
                    "u={} v={} w={} m={m} n={n}: [u_m,v_n]w = {} but formula gives {}",
                    va.format(u),
                    va.format(v),
                    va.format(w),
                    va.format(&lhs),
                    va.format(&rhs)
                )
            });
        }
    }
    t
}

/// `[u_m, v_n] w = Σ_{j≥0} binom(m, j) (u_j v)_{m+n-j} w` over the windows.
pub fn check_commutator_formula<V: VertexAlgebra>(
    va: &V,
    u: &LinComb<V::Key>,
    v: &LinComb<V::Key>,
    w: &LinComb<V::Key>,
    ms: Window,
    ns: Window,
) -> CheckResult {
    commutator_tally(va, u, v, w, ms, ns).finish()
}

/// Memoized iterated modes for one triple `(u, v, w)`; the Jacobi sums
/// for nearby exponents share most of their terms.
struct JacobiCache<'a, V: VertexAlgebra> {
    va: &'a V,
    u: &'a LinComb<V::Key>,
    v: &'a LinComb<V::Key>,
    w: &'a LinComb<V::Key>,
    inner: [HashMap<i64, LinComb<V::Key>>; 3],
    outer: [HashMap<(i64, i64), LinComb<V::Key>>; 3],
}

impl<'a, V: VertexAlgebra> JacobiCache<'a, V> {
    fn new(va: &'a V, u: &'a LinComb<V::Key>, v: &'a LinComb<V::Key>, w: &'a LinComb<V::Key>) -> Self {
        JacobiCache { va, u, v, w, inner: Default::default(), outer: Default::default() }
    }

    /// `v_b w`, `u_b w` or `u_b v` for `slot` 0, 1, 2.
    fn inner(&mut self, slot: usize, b: i64) -> LinComb<V::Key> {
        let (x, y) = match slot {
            0 => (self.v, self.w),
            1 => (self.u, self.w),
            _ => (self.u, self.v),
        };
        let va = self.va;
        self.inner[slot].entry(b).or_insert_with(|| va.mode(x, b, y)).clone()
    }

    /// `u_a (v_b w)`, `v_a (u_b w)` or `(u_b v)_a w` for `slot` 0, 1, 2.
    fn outer(&mut self, slot: usize, a: i64, b: i64) -> LinComb<V::Key> {
        if let Some(x) = self.outer[slot].get(&(a, b)) {
            return x.clone();
        }
        let mid = self.inner(slot, b);
        let x = match slot {
            0 => self.va.mode(self.u, a, &mid),
            1 => self.va.mode(self.v, a, &mid),
            _ => self.va.mode(&mid, a, self.w),
        };
        self.outer[slot].insert((a, b), x.clone());
        x
    }

    fn terms(&mut self, l: i64, m: i64, n: i64) -> (LinComb<V::Key>, LinComb<V::Key>, LinComb<V::Key>) {
        let va = self.va;
        // Σ_i (-1)^i binom(l,i) u_{l+m-i} v_{n+i} w
        let mut first = LinComb::zero();
        let top = va.bound(self.v, self.w);
        if top != i64::MIN {
            for i in 0..=(top - n).max(-1) {
                let c = Rational::sign(i) * binom_general(l, i as u64);
                if !c.is_zero() {
                    first.add_scaled(&self.outer(0, l + m - i, n + i), &c);
                }
            }
        }
        // (-1)^l Σ_i (-1)^i binom(l,i) v_{l+n-i} u_{m+i} w
        let mut second = LinComb::zero();
        let top = va.bound(self.u, self.w);
        if top != i64::MIN {
            for i in 0..=(top - m).max(-1) {
                let c = Rational::sign(l + i) * binom_general(l, i as u64);
                if !c.is_zero() {
                    second.add_scaled(&self.outer(1, l + n - i, m + i), &c);
                }
            }
        }
        // Σ_i binom(m,i) (u_{l+i} v)_{m+n-i} w
        let mut third = LinComb::zero();
        let top = va.bound(self.u, self.v);
        if top != i64::MIN {
            for i in 0..=(top - l).max(-1) {
                let c = binom_general(m, i as u64);
                if !c.is_zero() {
                    third.add_scaled(&self.outer(2, m + n - i, l + i), &c);
                }
            }
        }
        (first, second, third)
    }
}

/// The three sides of the Jacobi identity at the coefficient of
/// `x0^{-l-1} x1^{-m-1} x2^{-n-1}`, applied to `w`.
pub fn jacobi_terms<V: VertexAlgebra>(
    va: &V,
    u: &LinComb<V::Key>,
    v: &LinComb<V::Key>,
    w: &LinComb<V::Key>,
    l: i64,
    m: i64,
    n: i64,
) -> (LinComb<V::Key>, LinComb<V::Key>, LinComb<V::Key>) {
    JacobiCache::new(va, u, v, w).terms(l, m, n)
}

pub fn jacobi_tally<V: VertexAlgebra>(
    va: &V,
    u: &LinComb<V::Key>,
    v: &LinComb<V::Key>,
    w: &LinComb<V::Key>,
    window: Window,
) -> Tally {
    let mut t = Tally::new("jacobi");
    let mut cache = JacobiCache::new(va, u, v, w);
    for p in window.iter() {
        for q in window.iter() {
            for r in window.iter() {
                let (l, m, n) = (-p - 1, -q - 1, -r - 1);
                let (a, b, c) = cache.terms(l, m, n);
                let lhs = &a - &b;
                t.record(lhs == c, || {
                    format!(
                        "u={} v={} w={} coefficient x0^{p} x1^{q} x2^{r}: lhs = {} rhs = {}",
                        va.format(u),
                        va.format(v),
                        va.format(w),
                        va.format(&lhs),
                        va.format(&c)
                    )
                });
            }
        }
    }
    t
}

/// Coefficient-wise Jacobi identity for exponents `p, q, r` of `x0, x1, x2`
/// in the window.
pub fn check_jacobi<V: VertexAlgebra>(
    va: &V,
    u: &LinComb<V::Key>,
    v: &LinComb<V::Key>,
    w: &LinComb<V::Key>,
    window: Window,
) -> CheckResult {
    jacobi_tally(va, u, v, w, window).finish()
}

/// Vacuum and creation: `𝟙_n v = δ_{n,-1} v`, `u_n 𝟙 = 0` for `n ≥ 0`,
/// `u_{-1} 𝟙 = u`.
pub fn check_vacuum_creation<V: VertexAlgebra>(va: &V, states: &[LinComb<V::Key>], window: Window) -> CheckResult {
    let mut t = Tally::new("vacuum-creation");
    let vac = va.vacuum();
    for u in states {
        for n in window.iter() {
            let got = va.mode(&vac, n, u);
            let want = if n == -1 { u.clone() } else { LinComb::zero() };
            t.record(got == want, || format!("vacuum_{n} {} = {}", va.format(u), va.format(&got)));
            if n >= 0 {
                let c = va.mode(u, n, &vac);
                t.record(c.is_zero(), || format!("{}_{n} vacuum = {}", va.format(u), va.format(&c)));
            }
        }
        let back = va.mode(u, -1, &vac);
        t.record(&back == u, || format!("{}_(-1) vacuum = {}", va.format(u), va.format(&back)));
    }
    t.finish()
}

/// `(𝒟u)_n v = -n u_{n-1} v`.
pub fn check_derivation_bracket<V: VertexAlgebra>(
    va: &V,
    u: &LinComb<V::Key>,
    v: &LinComb<V::Key>,
    window: Window,
) -> CheckResult {
    let mut t = Tally::new("derivation-bracket");
    let du = va.derivation(u);
    for n in window.iter() {
        let lhs = va.mode(&du, n, v);
        let rhs = va.mode(u, n - 1, v).scale(&Rational::from_int(-n));
        t.record(lhs == rhs, || {
            format!("u={} v={} n={n}: (𝒟u)_n v = {} vs {}", va.format(u), va.format(v), va.format(&lhs), va.format(&rhs))
        });
    }
    t.finish()
}
