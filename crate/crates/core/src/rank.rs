//! Exact rank of matrices over `Q(t)` by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::poly::UniPoly;

/// Integer polynomial, `c[k]` multiplies `t^k`, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        IntPoly(c)
    }

    fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly(Vec::new());
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }

    fn sub(&self, o: &IntPoly) -> IntPoly {
        let len = self.0.len().max(o.0.len());
        let zero = BigInt::zero();
        IntPoly::new((0..len).map(|k| self.0.get(k).unwrap_or(&zero) - o.0.get(k).unwrap_or(&zero)).collect())
    }

    /// Exact quotient; panics if `d` does not divide `self` in `Z[t]`.
    fn div_exact(&self, d: &IntPoly) -> IntPoly {
        if d.0.len() == 1 {
            return IntPoly::new(self.0.iter().map(|c| exact(c, &d.0[0])).collect());
        }
        let dd = d.0.len() - 1;
        let lead = &d.0[dd];
        let mut r = self.0.clone();
        if r.len() <= dd {
            assert!(self.is_zero(), "inexact polynomial division");
            return IntPoly(Vec::new());
        }
        let mut quot = vec![BigInt::zero(); r.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = exact(&r[k + dd], lead);
            for (i, a) in d.0.iter().enumerate() {
                r[k + i] -= &c * a;
            }
            quot[k] = c;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        IntPoly::new(quot)
    }

    fn to_unipoly(&self) -> UniPoly {
        UniPoly::from_ints(&self.0)
    }
}

fn exact(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "inexact division in elimination");
    q
}

/// Evidence for the computed rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RankCertificate {
    /// A nonzero maximal minor, on the listed rows (0-based, ascending) and all columns.
    FullRank { rows: Vec<usize>, minor: UniPoly },
    /// A nonzero `x` with `M x = 0`, first nonzero entry monic.
    Dependence { vector: Vec<UniPoly> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub full_column_rank: bool,
    /// Whether `M(1)` already has full column rank over `Q`.
    pub fast_path_full_rank: bool,
    pub certificate: RankCertificate,
}

/// Rank over `Q(t)` with a certificate. `m` is a list of rows.
pub fn rank(m: &[Vec<UniPoly>]) -> RankReport {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let fast = rank_at(m, &BigRational::one()) == cols;

    // scale each column to integer coefficients
    let mut scale = vec![BigInt::one(); cols];
    for (j, s) in scale.iter_mut().enumerate() {
        for row in m {
            *s = s.lcm(&row[j].clear_denominators().1);
        }
    }
    let mut a: Vec<Vec<IntPoly>> = m
        .iter()
        .map(|row| {
            row.iter()
                .zip(&scale)
                .map(|(p, s)| {
                    let sp = p.scale(&BigRational::from_integer(s.clone()));
                    IntPoly::new(sp.clear_denominators().0)
                })
                .collect()
        })
        .collect();
    let mut label: Vec<usize> = (0..rows).collect();
    let mut pivot_cols = Vec::new();
    let mut prev = IntPoly::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        label.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = a[r][c].mul(&a[i][j]).sub(&a[i][c].mul(&a[r][j]));
                a[i][j] = v.div_exact(&prev);
            }
            a[i][c] = IntPoly(Vec::new());
        }
        prev = a[r][c].clone();
        pivot_cols.push(c);
        r += 1;
    }

    let certificate = if r == cols {
        let mut chosen: Vec<usize> = label[..r].to_vec();
        let sign = permutation_sign(&chosen);
        chosen.sort_unstable();
        let total_scale: BigInt = scale.iter().product();
        let last = if r == 0 { IntPoly::one() } else { prev };
        let mut minor = last.to_unipoly().scale(&BigRational::new(BigInt::one(), total_scale));
        if sign < 0 {
            minor = -&minor;
        }
        RankCertificate::FullRank { rows: chosen, minor }
    } else {
        RankCertificate::Dependence { vector: dependence(m, &a, &pivot_cols, &scale) }
    };
    RankReport { rows, cols, rank: r, full_column_rank: r == cols, fast_path_full_rank: fast, certificate }
}

fn permutation_sign(v: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 { 1 } else { -1 }
}

/// Kernel vector from the echelon form, supported on the pivot columns and the first free column.
fn dependence(m: &[Vec<UniPoly>], u: &[Vec<IntPoly>], pivots: &[usize], scale: &[BigInt]) -> Vec<UniPoly> {
    let cols = scale.len();
    let f = (0..cols).find(|c| !pivots.contains(c)).expect("rank deficient");
    let up = |i: usize, j: usize| u[i][j].to_unipoly();
    let d = pivots.iter().enumerate().fold(UniPoly::one(), |acc, (i, &p)| &acc * &up(i, p));
    let mut x = vec![UniPoly::zero(); cols];
    x[f] = d;
    for (i, &p) in pivots.iter().enumerate().rev() {
        let mut s = &up(i, f) * &x[f];
        for &q in &pivots[i + 1..] {
            s = &s + &(&up(i, q) * &x[q]);
        }
        let (quot, rem) = (-&s).div_rem(&up(i, p));
        debug_assert!(rem.is_zero());
        x[p] = quot;
    }
    for (xj, s) in x.iter_mut().zip(scale) {
        *xj = xj.scale(&BigRational::from_integer(s.clone()));
    }
    let g = x.iter().fold(UniPoly::zero(), |acc, p| acc.gcd(p));
    let mut x: Vec<UniPoly> = x.iter().map(|p| p.div_rem(&g).0).collect();
    let first = x.iter().find(|p| !p.is_zero()).and_then(|p| p.leading().cloned()).unwrap();
    x = x.iter().map(|p| p.scale(&first.recip())).collect();
    debug_assert!(m.iter().all(|row| {
        row.iter().zip(&x).fold(UniPoly::zero(), |acc, (a, b)| &acc + &(a * b)).is_zero()
    }));
    x
}

/// Rank over `Q` of the matrix evaluated at `t`.
pub fn rank_at(m: &[Vec<UniPoly>], t: &BigRational) -> usize {
    let mut a: Vec<Vec<BigRational>> = m.iter().map(|row| row.iter().map(|p| p.evaluate(t)).collect()).collect();
    rational_rank(&mut a)
}

/// Gaussian elimination rank; destroys its input.
pub fn rational_rank(a: &mut [Vec<BigRational>]) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            let (top, rest) = a.split_at_mut(i);
            for (x, y) in rest[0][c..].iter_mut().zip(&top[r][c..]) {
                *x -= &f * y;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> UniPoly {
        UniPoly::constant(BigRational::from_integer(BigInt::from(v)))
    }

    fn t(k: usize) -> UniPoly {
        UniPoly::monomial(1, k)
    }

    #[test]
    fn identity_is_full_rank() {
        let m = vec![vec![c(1), c(0)], vec![c(0), c(1)]];
        let r = rank(&m);
        assert!(r.full_column_rank);
        assert_eq!(r.certificate, RankCertificate::FullRank { rows: vec![0, 1], minor: c(1) });
    }

    #[test]
    fn swapped_rows_give_signed_minor() {
        let m = vec![vec![c(0), c(1)], vec![c(1), c(0)]];
        let r = rank(&m);
        assert_eq!(r.certificate, RankCertificate::FullRank { rows: vec![0, 1], minor: c(-1) });
    }

    #[test]
    fn duplicated_column_dependence() {
        let m = vec![
            vec![t(1), t(1), c(0)],
            vec![c(2), c(2), t(2)],
            vec![c(0), c(0), c(1)],
        ];
        let r = rank(&m);
        assert_eq!(r.rank, 2);
        assert!(!r.full_column_rank);
        assert_eq!(r.certificate, RankCertificate::Dependence { vector: vec![c(1), c(-1), c(0)] });
    }

    #[test]
    fn specialization_can_undercount() {
        // [[t, 1], [1, t]] has det t^2 - 1, which vanishes at t = 1
        let m = vec![vec![t(1), c(1)], vec![c(1), t(1)]];
        let r = rank(&m);
        assert!(r.full_column_rank);
        assert!(!r.fast_path_full_rank);
        let RankCertificate::FullRank { minor, .. } = r.certificate else { panic!() };
        assert_eq!(minor, &t(2) - &c(1));
    }

    #[test]
    fn rational_entries_and_tall_matrices() {
        let half = UniPoly::constant(BigRational::new(BigInt::from(1), BigInt::from(2)));
        let m = vec![vec![half.clone()], vec![t(1)], vec![c(3)]];
        let r = rank(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.certificate, RankCertificate::FullRank { rows: vec![0], minor: half });
        let z = vec![vec![c(0), c(0)]];
        assert_eq!(rank(&z).rank, 0);
    }
}
