//! Dimension pairs and the rolldown map of the poset-pinball algorithm (Springer case).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::filling::Filling;
use crate::fixed_points::{filling_of_fixed_point, fixed_point_of_filling, permissible_fillings, HessenbergFunction};
use crate::partition::Partition;
use crate::perm::Permutation;

/// Dimension pairs `(a, b)` of a row-strict filling, sorted.
pub type DimPairSet = BTreeSet<(usize, usize)>;

/// Pairs `(a, b)` with `b > a`, `b` below `a` in its column or anywhere in a column to the left,
/// and `b <= c` whenever `c` is the right neighbour of `a`.
pub fn dimension_pairs(t: &Filling) -> Result<DimPairSet> {
    if !t.is_row_strict() {
        return Err(Error::NotRowStrict);
    }
    let pos = t.positions();
    let mut out = BTreeSet::new();
    for a in 1..=t.n() {
        let (ra, ca) = pos[a];
        let bound = t.get(ra, ca + 1).unwrap_or(usize::MAX);
        for (b, &(rb, cb)) in pos.iter().enumerate().take(t.n().min(bound) + 1).skip(a + 1) {
            if cb < ca || (cb == ca && rb > ra) {
                out.insert((a, b));
            }
        }
    }
    Ok(out)
}

/// `x_l` = number of pairs with top part `l`; entry `l - 2` of the result holds `x_l`, `2 <= l <= n`.
pub fn top_parts(pairs: &DimPairSet, n: usize) -> Vec<usize> {
    let mut x = vec![0; n.saturating_sub(1)];
    for &(_, b) in pairs {
        x[b - 2] += 1;
    }
    for (k, &v) in x.iter().enumerate() {
        assert!(v < k + 2, "top part x_{} = {v} exceeds {}", k + 2, k + 1);
    }
    x
}

/// `omega(x) = u_2 u_3 ... u_n` with `u_l = s_{l-1} s_{l-2} ... s_{l-x_l}`.
pub fn omega(x: &[usize]) -> Result<Permutation> {
    let n = x.len() + 1;
    let mut word = Vec::new();
    for (k, &xl) in x.iter().enumerate() {
        let l = k + 2;
        if xl > l - 1 {
            return Err(Error::TopPartOutOfRange { index: l, value: xl, bound: l - 1 });
        }
        word.extend((l - xl..l).rev());
    }
    Permutation::from_word(n, &word)
}

/// `roll(w) = omega(x)^{-1}` for the top parts of the filling attached to `w`.
pub fn rolldown(w: &Permutation, lambda: &Partition, sigma: &Permutation) -> Result<Permutation> {
    let t = filling_of_fixed_point(w, lambda, sigma)?;
    if !t.is_row_strict() {
        return Err(Error::NotFixedPoint(w.to_string()));
    }
    let d = dimension_pairs(&t)?;
    Ok(omega(&top_parts(&d, lambda.n()))?.inverse())
}

/// One row of a pinball table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PinballRow {
    pub w: Permutation,
    #[serde(skip)]
    pub w_inv: Permutation,
    pub filling: Filling,
    pub dim_pairs: Vec<[usize; 2]>,
    pub deg: usize,
    pub omega: Permutation,
    pub roll: Permutation,
}

impl PinballRow {
    pub fn new(t: Filling, sigma: &Permutation) -> Result<Self> {
        let w = fixed_point_of_filling(&t, sigma)?;
        let d = dimension_pairs(&t)?;
        let om = omega(&top_parts(&d, t.n()))?;
        Ok(PinballRow {
            w_inv: w.inverse(),
            w,
            deg: d.len(),
            dim_pairs: d.into_iter().map(|(a, b)| [a, b]).collect(),
            roll: om.inverse(),
            omega: om,
            filling: t,
        })
    }
}

/// Row-strict fillings in the standard order.
///
/// For `(n-2, 2)` with `n >= 5`: fillings with `n` in the top row first, ordered recursively as
/// for `(n-3, 2)`, then those with bottom row `[k, n]` by increasing `k`. Otherwise by degree,
/// then dimension pairs, then reading word.
pub fn standard_fillings(lambda: &Partition) -> Result<Vec<Filling>> {
    let n = lambda.n();
    if let Some(m) = lambda.as_two_row().filter(|&m| m >= 5) {
        let smaller = Partition::two_row(m - 1)?;
        let mut out: Vec<Filling> = standard_fillings(&smaller)?
            .into_iter()
            .map(|t| {
                let mut rows = t.rows().to_vec();
                rows[0].push(n);
                Filling::with_shape(lambda, rows)
            })
            .collect::<Result<_>>()?;
        for k in 1..n {
            let top: Vec<usize> = (1..n).filter(|&v| v != k).collect();
            out.push(Filling::with_shape(lambda, vec![top, vec![k, n]])?);
        }
        return Ok(out);
    }
    let mut keyed = permissible_fillings(lambda, &HessenbergFunction::identity(n))?
        .into_iter()
        .map(|t| {
            let d = dimension_pairs(&t)?;
            Ok(((d.len(), d, t.english_read()), t))
        })
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

/// The pinball table of `lambda` under `sigma`, in the standard order.
pub fn pinball_table(lambda: &Partition, sigma: &Permutation) -> Result<Vec<PinballRow>> {
    if sigma.n() != lambda.n() {
        return Err(Error::SizeMismatch { expected: lambda.n(), found: sigma.n() });
    }
    standard_fillings(lambda)?.into_iter().map(|t| PinballRow::new(t, sigma)).collect()
}

/// `b_k` = number of fixed points whose filling has `k` dimension pairs.
pub fn betti_numbers(lambda: &Partition) -> Result<Vec<usize>> {
    let mut b = vec![0usize];
    for t in permissible_fillings(lambda, &HessenbergFunction::identity(lambda.n()))? {
        let k = dimension_pairs(&t)?.len();
        if k >= b.len() {
            b.resize(k + 1, 0);
        }
        b[k] += 1;
    }
    Ok(b)
}
