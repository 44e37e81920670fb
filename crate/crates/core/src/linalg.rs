//! Exact linear algebra over the rationals: sparse kernels, characteristic
//! polynomials and rational eigenvalues of small dense matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Rational;

/// A vector in `ℚ^n` stored sparsely by coordinate index.
pub type SparseVec = LinComb<usize>;

/// Kernel of the linear map sending the `j`-th standard basis vector to
/// `columns[j]`. The returned basis is in reduced row-echelon form: each
/// vector has a leading coordinate equal to 1 that vanishes in all others.
pub fn kernel<R: Ord + Clone>(columns: &[LinComb<R>]) -> Vec<SparseVec> {
    // pivots: (row key, reduced column, coordinate tag)
    let mut pivots: Vec<(R, LinComb<R>, SparseVec)> = Vec::new();
    let mut null: Vec<SparseVec> = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        let mut tag = SparseVec::basis(j);
        for (key, pv, ptag) in &pivots {
            let c = v.coeff(key);
            if !c.is_zero() {
                let s = -c;
                v.add_scaled(pv, &s);
                tag.add_scaled(ptag, &s);
            }
        }
        match v.iter().next() {
            None => null.push(tag),
            Some((key, c)) => {
                let key = key.clone();
                let inv = c.recip().expect("nonzero pivot");
                pivots.push((key, v.scale(&inv), tag.scale(&inv)));
            }
        }
    }
    rref(null)
}

/// Reduced row-echelon form of a family of sparse vectors, dropping zeros.
pub fn rref(vectors: Vec<SparseVec>) -> Vec<SparseVec> {
    let mut rows: Vec<SparseVec> = Vec::new();
    for mut v in vectors {
        for row in &rows {
            let lead = *row.keys().next().expect("nonzero row");
            let c = v.coeff(&lead);
            if !c.is_zero() {
                v.add_scaled(row, &-c);
            }
        }
        let Some((&lead, c)) = v.iter().next() else { continue };
        let v = v.scale(&c.recip().expect("nonzero"));
        for row in rows.iter_mut() {
            let c = row.coeff(&lead);
            if !c.is_zero() {
                row.add_scaled(&v, &-c);
            }
        }
        rows.push(v);
    }
    rows.sort_by_key(|r| *r.keys().next().expect("nonzero row"));
    rows
}

/// Rank of a family of vectors.
pub fn rank<R: Ord + Clone>(columns: &[LinComb<R>]) -> usize {
    columns.len() - kernel(columns).len()
}

/// Dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    /// Coefficients `c_0..c_n` of `det(λI - A)` (monic), by Faddeev–LeVerrier.
    pub fn charpoly(&self) -> Vec<Rational> {
        let n = self.n;
        let mut c = vec![Rational::zero(); n + 1];
        c[n] = Rational::one();
        let mut m = Matrix::zeros(n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self.mul(&m);
            for i in 0..n {
                let v = next.get(i, i) + &c[n - k + 1];
                next.set(i, i, v);
            }
            let am = self.mul(&next);
            c[n - k] = -(am.trace() / Rational::from_int(k as i64));
            m = next;
        }
        c
    }

    /// Distinct rational eigenvalues, in increasing order.
    pub fn rational_eigenvalues(&self) -> Result<Vec<Rational>> {
        rational_roots(&self.charpoly())
    }
}

fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Result<Vec<u64>> {
    let n = n.abs().to_u64().filter(|&v| v <= DIVISOR_LIMIT).ok_or_else(|| {
        Error::Unsupported(format!("rational root search on coefficient {n} exceeds divisor limit"))
    })?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Ok(out)
}

/// Distinct rational roots of `Σ coeffs[i] x^i`, in increasing order.
pub fn rational_roots(coeffs: &[Rational]) -> Result<Vec<Rational>> {
    let mut coeffs: Vec<Rational> = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return Ok(Vec::new());
    }
    let mut roots = Vec::new();
    let shift = coeffs.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(Rational::zero());
        coeffs.drain(..shift);
    }
    if coeffs.len() > 1 {
        let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let lead = ints.last().expect("nonempty");
        let constant = &ints[0];
        for p in divisors(constant)? {
            for q in divisors(lead)? {
                for sign in [1i64, -1] {
                    let cand = Rational::new(BigInt::from(p) * sign, BigInt::from(q));
                    if !roots.contains(&cand) && eval_poly(&coeffs, &cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn kernel_of_rank_one_map() {
        // e0 -> a, e1 -> 2a, e2 -> b
        let cols = vec![
            LinComb::basis('a'),
            LinComb::term('a', r(2)),
            LinComb::basis('b'),
        ];
        let k = kernel(&cols);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].coeff(&0), r(1));
        assert_eq!(k[0].coeff(&1), Rational::new(-1, 2));
        assert_eq!(rank(&cols), 2);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let cols: Vec<LinComb<char>> = vec![LinComb::zero(), LinComb::zero()];
        let k = kernel(&cols);
        assert_eq!(k, vec![SparseVec::basis(0), SparseVec::basis(1)]);
    }

    #[test]
    fn charpoly_and_eigenvalues() {
        // [[2,1],[0,3]] -> λ^2 - 5λ + 6
        let mut m = Matrix::zeros(2);
        m.set(0, 0, r(2));
        m.set(0, 1, r(1));
        m.set(1, 1, r(3));
        assert_eq!(m.charpoly(), vec![r(6), r(-5), r(1)]);
        assert_eq!(m.rational_eigenvalues().unwrap(), vec![r(2), r(3)]);

        let z = Matrix::zeros(3);
        assert_eq!(z.rational_eigenvalues().unwrap(), vec![r(0)]);
    }

    #[test]
    fn irrational_roots_are_skipped() {
        // x^2 - 2
        assert!(rational_roots(&[r(-2), r(0), r(1)]).unwrap().is_empty());
        // 2x^2 - x = x(2x - 1)
        assert_eq!(
            rational_roots(&[r(0), r(-1), r(2)]).unwrap(),
            vec![r(0), Rational::new(1, 2)]
        );
    }
}
