//! Sparse linear combinations over an ordered basis.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::scalar::Rational;

/// A finite formal sum `Σ c_k · k` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += s · other`
    pub fn add_scaled(&mut self, other: &LinComb<K>, s: &Rational) {
        if s.is_zero() {
            return;
        }
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c * s);
        }
    }

    /// `a + s · b`
    pub fn combine(a: &LinComb<K>, b: &LinComb<K>, s: &Rational) -> LinComb<K> {
        let mut out = a.clone();
        out.add_scaled(b, s);
        out
    }

    pub fn scale(&self, s: &Rational) -> LinComb<K> {
        if s.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    /// Linear extension of `f` from basis keys to combinations.
    pub fn flat_map<M: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<M>) -> LinComb<M> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn map_keys<M: Ord + Clone>(&self, mut f: impl FnMut(&K) -> M) -> LinComb<M> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Bilinear product on paired keys.
    pub fn tensor<M: Ord + Clone>(a: &LinComb<K>, b: &LinComb<M>) -> LinComb<(K, M)> {
        let mut out = LinComb::zero();
        for (k, c) in a.iter() {
            for (m, d) in b.iter() {
                out.add_term((k.clone(), m.clone()), c * d);
            }
        }
        out
    }

    /// The unique key, if this is a single basis element with coefficient 1.
    pub fn as_basis(&self) -> Option<&K> {
        match self.terms.iter().next() {
            Some((k, c)) if self.terms.len() == 1 && c.is_one() => Some(k),
            _ => None,
        }
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Rational);
    type IntoIter = btree_map::Iter<'a, K, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        LinComb::combine(self, rhs, &Rational::one())
    }
}

impl<K: Ord + Clone> Sub<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        LinComb::combine(self, rhs, &Rational::from_int(-1))
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self.add_scaled(&rhs, &Rational::one());
        self
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self.add_scaled(&rhs, &Rational::from_int(-1));
        self
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&Rational::from_int(-1))
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, c)| (k, c))).finish()
    }
}
