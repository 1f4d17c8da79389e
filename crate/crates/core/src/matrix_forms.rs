//! Nilpotent 0/1 matrices, pivots, highest forms and the circle weight projection.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filling::Filling;
use crate::partition::Partition;
use crate::perm::{next_permutation, Permutation};

/// An `n x n` matrix whose nonzero entries are 1s, at most one per row and per column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "NilMatrixRepr", into = "NilMatrixRepr")]
pub struct NilMatrix {
    n: usize,
    ones: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct NilMatrixRepr {
    n: usize,
    ones: Vec<[usize; 2]>,
}

impl NilMatrix {
    pub fn new(n: usize, ones: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let ones: BTreeSet<(usize, usize)> = ones.into_iter().collect();
        let mut row = vec![false; n + 1];
        let mut col = vec![false; n + 1];
        for &(i, j) in &ones {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::InvalidPermutation(format!("entry ({i},{j}) outside {n}x{n}")));
            }
            if row[i] || col[j] {
                return Err(Error::InvalidPermutation(format!("two 1s share a row or column at ({i},{j})")));
            }
            row[i] = true;
            col[j] = true;
        }
        Ok(NilMatrix { n, ones })
    }

    pub fn zero(n: usize) -> Self {
        NilMatrix { n, ones: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ones(&self) -> &BTreeSet<(usize, usize)> {
        &self.ones
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.ones.contains(&(i, j))
    }

    /// Dense 0/1 rows, 0-based.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.n]; self.n];
        for &(i, j) in &self.ones {
            m[i - 1][j - 1] = 1;
        }
        m
    }

    pub fn is_strictly_upper(&self) -> bool {
        self.ones.iter().all(|&(i, j)| i < j)
    }
}

impl TryFrom<NilMatrixRepr> for NilMatrix {
    type Error = Error;

    fn try_from(r: NilMatrixRepr) -> Result<Self> {
        NilMatrix::new(r.n, r.ones.into_iter().map(|[i, j]| (i, j)))
    }
}

impl From<NilMatrix> for NilMatrixRepr {
    fn from(m: NilMatrix) -> Self {
        NilMatrixRepr { n: m.n, ones: m.ones.into_iter().map(|(i, j)| [i, j]).collect() }
    }
}

/// Integer weights `c_i`, meaning `t_i -> c_i t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct WeightAssignment(Vec<i64>);

impl WeightAssignment {
    /// Weights must be a permutation of `1..=n`.
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        let n = weights.len();
        let mut seen = vec![false; n + 1];
        for &c in &weights {
            if c < 1 || c as usize > n || seen[c as usize] {
                return Err(Error::InvalidWeights(format!("{weights:?} is not a permutation of 1..={n}")));
            }
            seen[c as usize] = true;
        }
        Ok(WeightAssignment(weights))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.0
    }

    /// `c_i` for `1 <= i <= n`.
    pub fn weight(&self, i: usize) -> i64 {
        self.0[i - 1]
    }
}

impl TryFrom<Vec<i64>> for WeightAssignment {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        WeightAssignment::new(v)
    }
}

impl From<WeightAssignment> for Vec<i64> {
    fn from(w: WeightAssignment) -> Self {
        w.0
    }
}

/// Block-diagonal nilpotent Jordan matrix with blocks of sizes `lambda`.
pub fn jordan_matrix(lambda: &Partition) -> NilMatrix {
    let mut ones = BTreeSet::new();
    let mut start = 1;
    for &len in lambda.rows() {
        for i in start..start + len - 1 {
            ones.insert((i, i + 1));
        }
        start += len;
    }
    NilMatrix { n: lambda.n(), ones }
}

/// `(i, j)` is a 1 exactly when `i` sits directly left of `j` in `t`.
pub fn adjacent_pair_matrix(t: &Filling) -> NilMatrix {
    NilMatrix { n: t.n(), ones: t.adjacencies().collect() }
}

/// `r_j` is the row of the pivot in column `j`, or 0.
pub fn pivots(x: &NilMatrix) -> Vec<usize> {
    let mut r = vec![0; x.n];
    for &(i, j) in &x.ones {
        r[j - 1] = i;
    }
    r
}

/// Pivots of a general matrix: the lowest nonzero entry of column `k` is a pivot when
/// everything to its left in the same row vanishes.
pub fn pivots_general(x: &[Vec<BigRational>]) -> Vec<usize> {
    let n = x.len();
    (0..x.first().map_or(0, Vec::len))
        .map(|k| match (0..n).rev().find(|&i| !x[i][k].is_zero()) {
            Some(i) if x[i][..k].iter().all(Zero::is_zero) => i + 1,
            _ => 0,
        })
        .collect()
}

pub fn is_highest_form(x: &NilMatrix) -> bool {
    x.is_strictly_upper() && pivots(x).windows(2).all(|w| w[0] <= w[1])
}

/// `sigma X sigma^{-1}`, where `sigma` has `e_{sigma(i)}` as its `i`-th column.
pub fn conjugate(x: &NilMatrix, sigma: &Permutation) -> Result<NilMatrix> {
    if sigma.n() != x.n {
        return Err(Error::SizeMismatch { expected: x.n, found: sigma.n() });
    }
    let ones = x.ones.iter().map(|&(i, j)| (sigma.apply(i), sigma.apply(j))).collect();
    Ok(NilMatrix { n: x.n, ones })
}

/// One filling per ordering of `1..=mu_1` down the first column.
///
/// Column `s` receives the next `mu_s` integers, placed in the row order fixed by the first column.
pub fn highest_form_filling(lambda: &Partition, first_column: &[usize]) -> Result<Filling> {
    let mu = lambda.conjugate();
    let mu = mu.rows();
    if first_column.len() != mu[0] {
        return Err(Error::SizeMismatch { expected: mu[0], found: first_column.len() });
    }
    let mut order: Vec<usize> = (0..mu[0]).collect();
    order.sort_by_key(|&r| first_column[r]);
    let mut rows: Vec<Vec<usize>> = lambda.rows().iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut next = 1;
    for &height in mu {
        for &r in order.iter().filter(|&&r| r < height) {
            rows[r].push(next);
            next += 1;
        }
    }
    Filling::with_shape(lambda, rows)
}

/// All `mu_1!` fillings produced by [`highest_form_filling`].
pub fn highest_form_fillings(lambda: &Partition) -> Vec<Filling> {
    let mut col: Vec<usize> = (1..=lambda.num_rows()).collect();
    let mut out = Vec::new();
    loop {
        out.push(highest_form_filling(lambda, &col).expect("column has the right length"));
        if !next_permutation(&mut col) {
            break;
        }
    }
    out
}

/// `l! / (d_1! ... d_k!)`, the number of distinct highest forms of the Jordan matrix.
pub fn count_distinct_highest_forms(lambda: &Partition) -> Result<u128> {
    let mut count: u128 = 1;
    let mut placed: u128 = 0;
    // multinomial built up one block of equal rows at a time
    for d in lambda.multiplicities() {
        for k in 1..=d as u128 {
            placed += 1;
            count = count.checked_mul(placed).ok_or(Error::Overflow)? / k;
        }
    }
    Ok(count)
}

/// `c_i = n + 1 - sigma^{-1}(i)`: the weights of `diag(t^n, ..., t)` after conjugation by `sigma`.
pub fn circle_weights(lambda: &Partition, sigma: &Permutation) -> Result<WeightAssignment> {
    let n = lambda.n();
    if sigma.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: sigma.n() });
    }
    let inv = sigma.inverse();
    Ok(WeightAssignment((1..=n).map(|i| (n + 1 - inv.apply(i)) as i64).collect()))
}

/// English reading of the rotated English filling: the default `sigma`.
pub fn rotated_english_sigma(lambda: &Partition) -> Permutation {
    Filling::rotated_english(lambda).english_read()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn lam(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn ones(m: &NilMatrix) -> Vec<(usize, usize)> {
        m.ones().iter().copied().collect()
    }

    #[test]
    fn jordan_examples() {
        assert_eq!(ones(&jordan_matrix(&lam(&[3, 2]))), vec![(1, 2), (2, 3), (4, 5)]);
        assert!(jordan_matrix(&lam(&[1, 1, 1])).ones().is_empty());
        assert_eq!(ones(&jordan_matrix(&lam(&[4, 2]))), vec![(1, 2), (2, 3), (3, 4), (5, 6)]);
    }

    #[test]
    fn adjacent_pair_examples() {
        let t: Filling = "[3 2 4 | 1 5 | 6]".parse().unwrap();
        assert_eq!(ones(&adjacent_pair_matrix(&t)), vec![(1, 5), (2, 4), (3, 2)]);
        let e = Filling::from_english_word(&lam(&[3, 2, 1]), &Permutation::identity(6)).unwrap();
        assert_eq!(ones(&adjacent_pair_matrix(&e)), vec![(1, 2), (2, 3), (4, 5)]);
        let col: Filling = "[2 | 3 | 1]".parse().unwrap();
        assert!(adjacent_pair_matrix(&col).ones().is_empty());
    }

    #[test]
    fn pivot_examples() {
        let q = |v: i64| BigRational::from_integer(BigInt::from(v));
        let x: Vec<Vec<BigRational>> = [[0, 1, 1, 0], [0, 0, 5, 0], [0, 1, 0, 0], [0, 0, 0, 3]]
            .iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect();
        assert_eq!(pivots_general(&x), vec![0, 3, 2, 4]);
        let m = NilMatrix::new(6, [(2, 4), (3, 5), (5, 6)]).unwrap();
        assert_eq!(pivots(&m), vec![0, 0, 0, 2, 3, 5]);
        assert!(is_highest_form(&m));
        assert_eq!(pivots(&NilMatrix::zero(3)), vec![0, 0, 0]);
        assert!(is_highest_form(&NilMatrix::zero(3)));
        assert_eq!(pivots(&jordan_matrix(&lam(&[3, 2]))), vec![0, 1, 2, 0, 4]);
        assert!(!is_highest_form(&jordan_matrix(&lam(&[3, 2]))));
    }

    #[test]
    fn nil_matrix_invariants() {
        assert!(NilMatrix::new(3, [(1, 2), (1, 3)]).is_err());
        assert!(NilMatrix::new(3, [(1, 3), (2, 3)]).is_err());
        assert!(NilMatrix::new(3, [(1, 4)]).is_err());
        let m = NilMatrix::new(3, [(2, 1)]).unwrap();
        assert!(!is_highest_form(&m));
        let js = serde_json::to_string(&m).unwrap();
        assert_eq!(js, r#"{"n":3,"ones":[[2,1]]}"#);
        assert_eq!(serde_json::from_str::<NilMatrix>(&js).unwrap(), m);
    }

    #[test]
    fn highest_form_algorithm_example() {
        let l = lam(&[5, 4, 4, 2, 1]);
        let t = highest_form_filling(&l, &[5, 1, 4, 3, 2]).unwrap();
        assert_eq!(
            t.rows(),
            &[vec![5, 9, 12, 15, 16], vec![1, 6, 10, 13], vec![4, 8, 11, 14], vec![3, 7], vec![2]]
        );
        assert!(is_highest_form(&adjacent_pair_matrix(&t)));
    }

    #[test]
    fn highest_form_small_cases() {
        let single = highest_form_fillings(&lam(&[4]));
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].rows(), &[vec![1, 2, 3, 4]]);
        let two = highest_form_fillings(&lam(&[2, 2]));
        assert_eq!(two.len(), 2);
        assert_eq!(adjacent_pair_matrix(&two[0]), adjacent_pair_matrix(&two[1]));
        assert_eq!(count_distinct_highest_forms(&lam(&[2, 2])).unwrap(), 1);
        assert_eq!(count_distinct_highest_forms(&lam(&[3, 2, 1])).unwrap(), 6);
        assert_eq!(count_distinct_highest_forms(&lam(&[7])).unwrap(), 1);
        assert_eq!(count_distinct_highest_forms(&lam(&[3, 3, 1, 1, 1])).unwrap(), 10);
    }

    #[test]
    fn conjugation_examples() {
        let j = jordan_matrix(&lam(&[3, 2, 1]));
        assert!(is_highest_form(&conjugate(&j, &perm("356241")).unwrap()));
        assert_eq!(conjugate(&j, &Permutation::identity(6)).unwrap(), j);
        let c = conjugate(&j, &perm("324156")).unwrap();
        assert_eq!(ones(&c), vec![(1, 5), (2, 4), (3, 2)]);
        assert!(conjugate(&j, &perm("1234")).is_err());
    }

    #[test]
    fn circle_weight_examples() {
        let l = lam(&[4, 2]);
        let w = circle_weights(&l, &perm("245613")).unwrap();
        assert_eq!(w.weights(), &[2, 6, 1, 5, 4, 3]);
        assert_eq!(rotated_english_sigma(&l), perm("245613"));
        let id = circle_weights(&l, &Permutation::identity(6)).unwrap();
        assert_eq!(id.weights(), &[6, 5, 4, 3, 2, 1]);
        for n in 4..=9 {
            let l = Partition::two_row(n).unwrap();
            let w = circle_weights(&l, &rotated_english_sigma(&l)).unwrap();
            let mut expect = vec![2, n as i64, 1];
            expect.extend((3..=(n as i64 - 1)).rev());
            assert_eq!(w.weights(), expect.as_slice());
        }
        assert!(WeightAssignment::new(vec![1, 1]).is_err());
    }
}
