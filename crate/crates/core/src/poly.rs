//! Exact polynomials: linear forms in `t_1..t_n`, their products, and univariate polynomials in `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `sum c_i t_i` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinForm(Vec<BigRational>);

impl LinForm {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        LinForm(coeffs)
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut c = vec![BigRational::zero(); n];
        c[i - 1] = BigRational::one();
        LinForm(c)
    }

    /// `t_i - t_j`.
    pub fn root(n: usize, i: usize, j: usize) -> Self {
        let mut c = vec![BigRational::zero(); n];
        c[i - 1] += BigRational::one();
        c[j - 1] -= BigRational::one();
        LinForm(c)
    }

    /// The simple root `alpha_i = t_i - t_{i+1}`.
    pub fn simple_root(n: usize, i: usize) -> Self {
        LinForm::root(n, i, i + 1)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    /// `w . (sum c_i t_i) = sum c_i t_{w(i)}`.
    pub fn act(&self, w: &Permutation) -> Self {
        let mut c = vec![BigRational::zero(); self.n()];
        for (i, v) in self.0.iter().enumerate() {
            c[w.apply(i + 1) - 1] = v.clone();
        }
        LinForm(c)
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        self.0.iter().zip(point).map(|(a, b)| a * b).sum()
    }
}

/// A polynomial in `t_1..t_n` as a sparse map from exponent vectors to rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; n], BigRational::one());
        MultiPoly { n, terms }
    }

    pub fn from_linform(l: &LinForm) -> Self {
        let n = l.n();
        let mut terms = BTreeMap::new();
        for (i, c) in l.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                terms.insert(e, c.clone());
            }
        }
        MultiPoly { n, terms }
    }

    pub fn product_of(n: usize, factors: &[LinForm]) -> Self {
        factors.iter().fold(MultiPoly::one(n), |acc, f| acc.mul_linform(f))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    /// `None` for the zero polynomial or a non-homogeneous one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    pub fn mul_linform(&self, l: &LinForm) -> Self {
        let mut terms: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (e, c) in &self.terms {
            for (i, a) in l.coeffs().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let mut e2 = e.clone();
                e2[i] += 1;
                *terms.entry(e2).or_insert_with(BigRational::zero) += c * a;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { n: self.n, terms }
    }

    pub fn add_assign(&mut self, other: &MultiPoly) {
        for (e, c) in &other.terms {
            let slot = self.terms.entry(e.clone()).or_insert_with(BigRational::zero);
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    /// The same polynomial in `t_1..t_m`, `m >= n`.
    pub fn embed(&self, m: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(m.max(self.n), 0);
                (e, c.clone())
            })
            .collect();
        MultiPoly { n: m.max(self.n), terms }
    }

    pub fn mul(&self, other: &MultiPoly) -> Self {
        let mut terms: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { n: self.n, terms }
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize))
            })
            .sum()
    }
}

/// A polynomial in one variable `t`; `coeffs[k]` multiplies `t^k`. Zero has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct UniPoly(Vec<BigRational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn one() -> Self {
        UniPoly(vec![BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c t^k` for integer `c`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = q(c);
        UniPoly::new(v)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.0.last()
    }

    pub fn evaluate(&self, t: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        UniPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut r = self.0.clone();
        let mut quot = vec![BigRational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lead;
            for (i, a) in d.0.iter().enumerate() {
                r[k + i] -= &c * a;
            }
            quot[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(r))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => UniPoly::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Integer coefficients scaled by the lcm of the denominators, with that lcm.
    pub fn clear_denominators(&self) -> (Vec<BigInt>, BigInt) {
        let l = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self.0.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
        (ints, l)
    }

    pub fn from_ints(v: &[BigInt]) -> Self {
        UniPoly::new(v.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.0.len().max(rhs.0.len());
        let zero = BigRational::zero();
        UniPoly::new(
            (0..len).map(|k| self.0.get(k).unwrap_or(&zero) + rhs.0.get(k).unwrap_or(&zero)).collect(),
        )
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![BigRational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }
}

impl TryFrom<Vec<String>> for UniPoly {
    type Error = Error;

    fn try_from(v: Vec<String>) -> Result<Self> {
        let coeffs = v
            .iter()
            .map(|s| BigRational::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad rational '{s}'"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::new(coeffs))
    }
}

impl From<UniPoly> for Vec<String> {
    fn from(p: UniPoly) -> Self {
        p.0.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for UniPoly {
    /// Human form such as `-2t`, `8t^2`, `t^2 - 3/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coeff = if mag.is_one() && k > 0 { String::new() } else { mag.to_string() };
            match k {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}t")?,
                _ => write!(f, "{coeff}t^{k}")?,
            }
        }
        Ok(())
    }
}

/// `t_i -> c_i t`.
pub fn project_s1(p: &MultiPoly, weights: &[i64]) -> Result<UniPoly> {
    if weights.len() != p.n() {
        return Err(Error::SizeMismatch { expected: p.n(), found: weights.len() });
    }
    let mut coeffs: Vec<BigRational> = Vec::new();
    for (e, c) in p.terms() {
        let deg: u32 = e.iter().sum();
        let mut val = BigInt::one();
        for (i, &k) in e.iter().enumerate() {
            val *= num_traits::pow(BigInt::from(weights[i]), k as usize);
        }
        if coeffs.len() <= deg as usize {
            coeffs.resize(deg as usize + 1, BigRational::zero());
        }
        coeffs[deg as usize] += c * BigRational::from_integer(val);
    }
    Ok(UniPoly::new(coeffs))
}
