//! Free abelian (semi)groups `ℤ^r` and `ℕ^r`.

use std::fmt;
use std::ops::{Add, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element `α` of `ℤ^r` or `ℕ^r`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Alpha(pub Vec<i64>);

impl Alpha {
    pub fn zero(rank: usize) -> Self {
        Alpha(vec![0; rank])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Alpha(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `max_i |α_i|`
    pub fn norm(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    pub fn scale(&self, k: i64) -> Alpha {
        Alpha(self.0.iter().map(|x| x * k).collect())
    }
}

impl Add for &Alpha {
    type Output = Alpha;
    fn add(self, other: &Alpha) -> Alpha {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        Alpha(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Neg for &Alpha {
    type Output = Alpha;
    fn neg(self) -> Alpha {
        Alpha(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `ℤ^r` when `group` is set, `ℕ^r` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupL {
    pub rank: usize,
    pub group: bool,
}

impl SemigroupL {
    pub fn new(rank: usize, group: bool) -> Self {
        SemigroupL { rank, group }
    }

    pub fn contains(&self, a: &Alpha) -> bool {
        a.rank() == self.rank && (self.group || a.0.iter().all(|&x| x >= 0))
    }

    pub fn check(&self, a: &Alpha) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("{a} is not an element of {self}")))
        }
    }

    pub fn identity(&self) -> Alpha {
        Alpha::zero(self.rank)
    }

    pub fn inverse(&self, a: &Alpha) -> Option<Alpha> {
        (self.group || a.is_zero()).then(|| -a)
    }

    /// All elements with `|α_i| ≤ bound`, in lexicographic order.
    pub fn elements(&self, bound: i64) -> Vec<Alpha> {
        let lo = if self.group { -bound } else { 0 };
        let mut out = vec![Vec::new()];
        for _ in 0..self.rank {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (lo..=bound).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(Alpha).collect()
    }
}

impl fmt::Display for SemigroupL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = if self.group { "ℤ" } else { "ℕ" };
        if self.rank == 1 {
            write!(f, "{base}")
        } else {
            write!(f, "{base}^{}", self.rank)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements_and_inverses() {
        let z = SemigroupL::new(1, true);
        assert_eq!(z.elements(2).len(), 5);
        let n2 = SemigroupL::new(2, false);
        assert_eq!(n2.elements(1).len(), 4);
        assert!(n2.inverse(&Alpha(vec![1, 0])).is_none());
        assert_eq!(n2.inverse(&Alpha(vec![0, 0])), Some(Alpha(vec![0, 0])));
        assert_eq!(z.inverse(&Alpha(vec![3])), Some(Alpha(vec![-3])));
        assert!(!n2.contains(&Alpha(vec![-1, 0])));
        assert_eq!(&Alpha(vec![1, 2]) + &Alpha(vec![3, -4]), Alpha(vec![4, -2]));
        assert_eq!(Alpha(vec![1, -2]).to_string(), "(1,-2)");
    }
}
