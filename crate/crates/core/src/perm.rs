//! Permutations in one-line notation, Bruhat order and reduced words.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` stored in one-line notation.
///
/// Composition is right-to-left: `(u * v)(i) = u(v(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(oneline: Vec<usize>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} outside 1..={n}")));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation(oneline))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The simple transposition `s_i` in `S_n`, swapping `i` and `i + 1`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidPermutation(format!("s_{i} is not in S_{n}")));
        }
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(i - 1, i);
        Ok(Permutation(v))
    }

    /// Product `s_{i_1} s_{i_2} ... s_{i_k}` in `S_n`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut v: Vec<usize> = (1..=n).collect();
        // right multiplication by s_i swaps positions i and i + 1
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::InvalidPermutation(format!("s_{i} is not in S_{n}")));
            }
            v.swap(i - 1, i);
        }
        Ok(Permutation(v))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn oneline(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (pos, &v) in self.0.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        Permutation(inv)
    }

    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: other.n() });
        }
        Ok(Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect()))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(p, &v)| v == p + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut len = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.0[i] > self.0[j] {
                    len += 1;
                }
            }
        }
        len
    }

    /// Canonical reduced word: `self = s_{w_1} s_{w_2} ... s_{w_k}` with `k = length()`.
    ///
    /// Built by repeatedly sliding the largest misplaced value one step to the right.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        let mut rev = Vec::with_capacity(self.length());
        for m in (1..=v.len()).rev() {
            let mut p = v.iter().position(|&x| x == m).unwrap() + 1;
            while p < m {
                // v(p) = m > v(p + 1), so v = (v s_p) s_p with v s_p shorter
                v.swap(p - 1, p);
                rev.push(p);
                p += 1;
            }
        }
        rev.reverse();
        rev
    }

    /// Bruhat order test via the rank-matrix criterion.
    pub fn bruhat_le(&self, other: &Permutation) -> Result<bool> {
        let n = self.n();
        if n != other.n() {
            return Err(Error::SizeMismatch { expected: n, found: other.n() });
        }
        // r[j] = #{a <= i : w(a) >= j}, updated row by row
        let mut rv = vec![0usize; n + 2];
        let mut rw = vec![0usize; n + 2];
        for i in 0..n {
            let (a, b) = (self.0[i], other.0[i]);
            for j in 1..=n {
                if a >= j {
                    rv[j] += 1;
                }
                if b >= j {
                    rw[j] += 1;
                }
                if rv[j] > rw[j] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Left descents: `i` with `w^{-1}(i) > w^{-1}(i + 1)`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        let p = self.0.iter().position(|&x| x == i).unwrap();
        let q = self.0.iter().position(|&x| x == i + 1).unwrap();
        p > q
    }

    /// Embeds into `S_m`, `m >= n`, fixing `n + 1, ..., m`.
    pub fn extend(&self, m: usize) -> Self {
        let mut v = self.0.clone();
        v.extend(self.n() + 1..=m.max(self.n()));
        Permutation(v)
    }

    /// All permutations of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

/// Advances to the next permutation in lexicographic order; false at the last one.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("permutation sizes differ")
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"2413"` (single digits) or `"2,4,1,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let vals: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|x| x.trim().parse::<usize>().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let vals = vals.ok_or_else(|| Error::Parse(format!("bad permutation '{s}'")))?;
        Permutation::new(vals)
    }
}
