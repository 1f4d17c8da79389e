//! Reference implementations used only by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use springer_core::{Filling, Partition, Permutation};

pub fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn lam(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// Every partition with at most `max` boxes.
pub fn partitions_up_to(max: usize) -> Vec<Partition> {
    (1..=max).flat_map(Partition::all).collect()
}

pub type Dense = Vec<Vec<i64>>;

/// Permutation matrix whose `i`-th column is `e_{w(i)}`.
pub fn perm_matrix(w: &Permutation) -> Dense {
    let n = w.n();
    let mut m = vec![vec![0; n]; n];
    for i in 1..=n {
        m[w.apply(i) - 1][i - 1] = 1;
    }
    m
}

pub fn transpose(a: &Dense) -> Dense {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// `w X w^{-1}` by matrix products.
pub fn conj_dense(x: &Dense, w: &Permutation) -> Dense {
    let p = perm_matrix(w);
    matmul(&matmul(&p, x), &transpose(&p))
}

/// Jordan form with blocks of sizes `lambda`, written out entry by entry.
pub fn jordan_dense(lambda: &Partition) -> Dense {
    let n = lambda.n();
    let mut m = vec![vec![0; n]; n];
    let mut start = 0;
    for &len in lambda.rows() {
        for i in start..start + len - 1 {
            m[i][i + 1] = 1;
        }
        start += len;
    }
    m
}

/// 0/1 matrix of horizontally adjacent entries, read directly from the rows.
pub fn adjacency_dense(t: &Filling) -> Dense {
    let n = t.n();
    let mut m = vec![vec![0; n]; n];
    for row in t.rows() {
        for pair in row.windows(2) {
            m[pair[0] - 1][pair[1] - 1] = 1;
        }
    }
    m
}

/// Strictly upper triangular with weakly increasing pivot rows (0 for an empty column).
pub fn is_highest_dense(x: &Dense) -> bool {
    let n = x.len();
    if x.iter().enumerate().any(|(i, row)| row[..=i].iter().any(|&v| v != 0)) {
        return false;
    }
    let mut pivots = Vec::new();
    for k in 0..n {
        let r = match (0..n).rev().find(|&i| x[i][k] != 0) {
            Some(i) if (0..k).all(|c| x[i][c] == 0) => i + 1,
            _ => 0,
        };
        pivots.push(r);
    }
    pivots.windows(2).all(|w| w[0] <= w[1])
}

pub fn simple(n: usize, i: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.swap(i - 1, i);
    Permutation::new(v).unwrap()
}

pub fn product(n: usize, word: &[usize]) -> Permutation {
    word.iter().fold(Permutation::identity(n), |acc, &i| &acc * &simple(n, i))
}

pub fn inversions(w: &Permutation) -> usize {
    let v = w.oneline();
    (0..v.len()).flat_map(|i| (i + 1..v.len()).map(move |j| (i, j))).filter(|&(i, j)| v[i] > v[j]).count()
}

/// A reduced word for `w`, peeling a random right descent each step.
pub fn random_reduced_word<R: Rng>(w: &Permutation, rng: &mut R) -> Vec<usize> {
    let n = w.n();
    let mut cur = w.oneline().to_vec();
    let mut rev = Vec::new();
    loop {
        let descents: Vec<usize> = (1..n).filter(|&i| cur[i - 1] > cur[i]).collect();
        let Some(&i) = descents.choose(rng) else { break };
        cur.swap(i - 1, i);
        rev.push(i);
    }
    rev.reverse();
    rev
}

/// Bruhat order by the subword property: `v <= w` iff a reduced word of `v` sits inside one of `w`.
pub fn bruhat_subword(v: &Permutation, w: &Permutation) -> bool {
    let n = w.n();
    let mut rng = rand::rngs::mock::StepRng::new(0, 1);
    let word = random_reduced_word(w, &mut rng);
    let target = inversions(v);
    (0u32..1 << word.len()).any(|mask| {
        if mask.count_ones() as usize != target {
            return false;
        }
        let sub: Vec<usize> = (0..word.len()).filter(|&j| mask >> j & 1 == 1).map(|j| word[j]).collect();
        let p = product(n, &sub);
        inversions(&p) == target && &p == v
    })
}

pub fn random_perm<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::new(v).unwrap()
}

/// Billey's sum evaluated at `point`, enumerating every subword of `word`.
pub fn billey_bruteforce(v: &Permutation, word: &[usize], point: &[BigRational]) -> BigRational {
    let n = v.n();
    let len = inversions(v);
    let mut roots = Vec::new();
    let mut prefix = Permutation::identity(n);
    for &i in word {
        let (a, b) = (prefix.apply(i), prefix.apply(i + 1));
        roots.push(&point[a - 1] - &point[b - 1]);
        prefix = &prefix * &simple(n, i);
    }
    let mut total = BigRational::zero();
    for mask in 0u32..1 << word.len() {
        if mask.count_ones() as usize != len {
            continue;
        }
        let chosen: Vec<usize> = (0..word.len()).filter(|&j| mask >> j & 1 == 1).collect();
        let letters: Vec<usize> = chosen.iter().map(|&j| word[j]).collect();
        if &product(n, &letters) == v {
            total += chosen.iter().fold(BigRational::one(), |acc, &j| acc * &roots[j]);
        }
    }
    total
}

/// Product of `t_a - t_b` over `a < b` with `w^{-1}(a) > w^{-1}(b)`.
pub fn diagonal_oracle(w: &Permutation, point: &[BigRational]) -> BigRational {
    let inv = w.inverse();
    let n = w.n();
    let mut out = BigRational::one();
    for a in 1..=n {
        for b in a + 1..=n {
            if inv.apply(a) > inv.apply(b) {
                out *= &point[a - 1] - &point[b - 1];
            }
        }
    }
    out
}

/// Rank by plain Gaussian elimination.
pub fn rank_oracle(mut a: Vec<Vec<BigRational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                let pivot = a[r].clone();
                for (x, y) in a[i][c..].iter_mut().zip(&pivot[c..]) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Determinant by the Leibniz formula.
pub fn det_oracle(a: &[Vec<BigRational>]) -> BigRational {
    let n = a.len();
    let mut total = BigRational::zero();
    for p in Permutation::all(n) {
        let sign = if inversions(&p).is_multiple_of(2) { 1 } else { -1 };
        let term = (0..n).fold(q(sign), |acc, i| acc * &a[i][p.apply(i + 1) - 1]);
        total += term;
    }
    total
}

pub fn distinct<T: Ord>(it: impl IntoIterator<Item = T>) -> BTreeSet<T> {
    it.into_iter().collect()
}
