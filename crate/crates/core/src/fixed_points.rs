//! Hessenberg functions, permissible fillings and the fixed points of the circle action.

use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filling::Filling;
use crate::matrix_forms::{conjugate, NilMatrix};
use crate::partition::Partition;
use crate::perm::Permutation;

/// Largest `n` for which `n!` candidates are enumerated.
pub const ENUMERATION_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct HessenbergFunction(Vec<usize>);

impl HessenbergFunction {
    pub fn new(h: Vec<usize>) -> Result<Self> {
        let n = h.len();
        if n == 0 {
            return Err(Error::InvalidHessenberg("empty".into()));
        }
        for (i, &v) in h.iter().enumerate() {
            if v < i + 1 || v > n {
                return Err(Error::InvalidHessenberg(format!("h({}) = {v} not in {}..={n}", i + 1, i + 1)));
            }
            if i > 0 && v < h[i - 1] {
                return Err(Error::InvalidHessenberg(format!("h decreases at {}", i + 1)));
            }
        }
        Ok(HessenbergFunction(h))
    }

    pub fn identity(n: usize) -> Self {
        HessenbergFunction((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `h(j)` for `1 <= j <= n`.
    pub fn at(&self, j: usize) -> usize {
        self.0[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Whether the entry `(i, j)` is allowed to be nonzero.
    pub fn allows(&self, i: usize, j: usize) -> bool {
        i <= self.at(j)
    }
}

impl TryFrom<Vec<usize>> for HessenbergFunction {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        HessenbergFunction::new(v)
    }
}

impl From<HessenbergFunction> for Vec<usize> {
    fn from(h: HessenbergFunction) -> Self {
        h.0
    }
}

impl FromStr for HessenbergFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let vals = s
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad Hessenberg function '{s}'")))?;
        HessenbergFunction::new(vals)
    }
}

/// Every entry below the Hessenberg staircase vanishes.
pub fn in_hessenberg_space(x: &[Vec<BigRational>], h: &HessenbergFunction) -> Result<bool> {
    let n = h.n();
    if x.len() != n {
        return Err(Error::SizeMismatch { expected: n, found: x.len() });
    }
    for (i, row) in x.iter().enumerate() {
        if row.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: row.len() });
        }
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() && !h.allows(i + 1, j + 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Hessenberg membership for a 0/1 nilpotent matrix.
pub fn nil_in_hessenberg_space(x: &NilMatrix, h: &HessenbergFunction) -> Result<bool> {
    if x.n() != h.n() {
        return Err(Error::SizeMismatch { expected: h.n(), found: x.n() });
    }
    Ok(x.ones().iter().all(|&(i, j)| h.allows(i, j)))
}

/// Every horizontal adjacency `k | j` has `k <= h(j)`.
pub fn is_permissible(t: &Filling, h: &HessenbergFunction) -> Result<bool> {
    if t.n() != h.n() {
        return Err(Error::SizeMismatch { expected: h.n(), found: t.n() });
    }
    Ok(t.adjacencies().all(|(k, j)| h.allows(k, j)))
}

/// Permissible fillings, ordered by English reading word.
pub fn permissible_fillings(lambda: &Partition, h: &HessenbergFunction) -> Result<Vec<Filling>> {
    let n = lambda.n();
    if h.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: h.n() });
    }
    let mut out = if h.is_identity() {
        Filling::row_strict(lambda)
    } else {
        if n > ENUMERATION_LIMIT {
            return Err(Error::TooLarge { n, limit: ENUMERATION_LIMIT });
        }
        Filling::all(lambda)
            .into_par_iter()
            .filter(|t| t.adjacencies().all(|(k, j)| h.allows(k, j)))
            .collect()
    };
    out.sort_by_key(Filling::english_read);
    Ok(out)
}

/// `{w : w^{-1} N w in H}` by exhaustive search, sorted by one-line notation.
pub fn fixed_points_bruteforce(nil: &NilMatrix, h: &HessenbergFunction) -> Result<Vec<Permutation>> {
    let n = nil.n();
    if h.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: h.n() });
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge { n, limit: ENUMERATION_LIMIT });
    }
    let mut out: Vec<Permutation> = Permutation::all(n)
        .into_par_iter()
        .filter(|w| {
            let c = conjugate(nil, &w.inverse()).expect("sizes agree");
            c.ones().iter().all(|&(i, j)| h.allows(i, j))
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `w = sigma_read(T, sigma)^{-1}`.
pub fn fixed_point_of_filling(t: &Filling, sigma: &Permutation) -> Result<Permutation> {
    Ok(t.sigma_read(sigma)?.inverse())
}

/// The filling attached to the fixed point `w`: the `T` with `sigma_read(T, sigma) = w^{-1}`.
pub fn filling_of_fixed_point(w: &Permutation, lambda: &Partition, sigma: &Permutation) -> Result<Filling> {
    Filling::from_sigma_word(lambda, &w.inverse(), sigma)
}

/// Fixed points paired with their fillings, sorted by one-line notation of `w`.
pub fn fixed_points(
    lambda: &Partition,
    h: &HessenbergFunction,
    sigma: &Permutation,
) -> Result<Vec<(Permutation, Filling)>> {
    let mut out = permissible_fillings(lambda, h)?
        .into_iter()
        .map(|t| Ok((fixed_point_of_filling(&t, sigma)?, t)))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}
