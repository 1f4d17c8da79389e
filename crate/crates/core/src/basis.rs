//! The matrix of projected Schubert restrictions at the fixed points and its basis checks.

use rayon::prelude::*;
use serde::Serialize;

use crate::billey::{schubert_restrict, springer_schubert};
use crate::error::{Error, Result};
use crate::filling::Filling;
use crate::matrix_forms::{circle_weights, rotated_english_sigma, WeightAssignment};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::pinball::{pinball_table, PinballRow};
use crate::poly::{MultiPoly, UniPoly};
use crate::rank::{rank, RankReport};

/// Entries `p_{roll(w)}(u)`: rows are `u`, columns are `w`, both in `order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictionMatrix {
    pub order: Vec<Permutation>,
    pub entries: Vec<Vec<UniPoly>>,
    #[serde(skip)]
    pub lambda: Partition,
    #[serde(skip)]
    pub fillings: Vec<Filling>,
    #[serde(skip)]
    pub rolls: Vec<Permutation>,
    #[serde(skip)]
    pub weights: WeightAssignment,
}

impl RestrictionMatrix {
    pub fn size(&self) -> usize {
        self.order.len()
    }

    /// Sub-block on the given row and column index ranges.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Vec<Vec<UniPoly>> {
        self.entries[rows].iter().map(|r| r[cols.clone()].to_vec()).collect()
    }

    /// Every nonzero entry of column `w` has degree `length(roll(w))`.
    pub fn columns_homogeneous(&self) -> bool {
        (0..self.size()).all(|j| {
            let d = self.rolls[j].length();
            self.entries.iter().all(|row| row[j].is_zero() || row[j].degree() == Some(d))
        })
    }

    pub fn rolldown_injective(&self) -> bool {
        let mut r = self.rolls.clone();
        r.sort();
        r.dedup();
        r.len() == self.rolls.len()
    }
}

/// The restriction matrix under the rotated English `sigma`.
pub fn build_matrix(lambda: &Partition) -> Result<RestrictionMatrix> {
    build_matrix_with(lambda, &rotated_english_sigma(lambda))
}

pub fn build_matrix_with(lambda: &Partition, sigma: &Permutation) -> Result<RestrictionMatrix> {
    let table = pinball_table(lambda, sigma)?;
    let weights = circle_weights(lambda, sigma)?;
    let entries = table
        .par_iter()
        .map(|u| {
            table
                .iter()
                .map(|w| springer_schubert(&w.roll, &u.w, &weights))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let (order, fillings, rolls) = table.into_iter().fold(
        (Vec::new(), Vec::new(), Vec::new()),
        |(mut o, mut f, mut r), PinballRow { w, filling, roll, .. }| {
            o.push(w);
            f.push(filling);
            r.push(roll);
            (o, f, r)
        },
    );
    Ok(RestrictionMatrix { order, entries, lambda: lambda.clone(), fillings, rolls, weights })
}

/// Unprojected restrictions `sigma_{roll(w)}(u)` for `u` in `rows` and `w` in `cols`.
pub fn equivariant_block(
    m: &RestrictionMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Result<Vec<Vec<MultiPoly>>> {
    m.order[rows]
        .par_iter()
        .map(|u| m.rolls[cols.clone()].iter().map(|r| schubert_restrict(r, u)).collect())
        .collect()
}

pub fn is_full_column_rank(m: &RestrictionMatrix) -> RankReport {
    rank(&m.entries)
}

/// A column of the D block after adding a multiple of its first column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjustedColumn {
    /// Index of the column within the D block; it carries `roll = s_{n-1} s_k`.
    pub k: usize,
    /// The column becomes `col_k - multiplier * col_0`.
    pub multiplier: UniPoly,
    /// Common value of the entries below the first `k` zeros.
    pub tail: Option<UniPoly>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChangeOfBasis {
    pub columns: Vec<AdjustedColumn>,
    /// The adjusted D block is lower triangular with nonzero diagonal.
    pub lower_triangular: bool,
}

impl ChangeOfBasis {
    pub fn ok(&self) -> bool {
        self.lower_triangular && self.columns.iter().all(|c| c.ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperTriangularReport {
    /// Pairs `(w, u)` where `roll(w) <= u` and `w <= u` disagree.
    pub violations: Vec<(Permutation, Permutation)>,
    pub change_of_basis: Option<ChangeOfBasis>,
}

impl UpperTriangularReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_upper_triangular(lambda: &Partition) -> Result<UpperTriangularReport> {
    let m = build_matrix(lambda)?;
    check_upper_triangular_matrix(&m)
}

pub fn check_upper_triangular_matrix(m: &RestrictionMatrix) -> Result<UpperTriangularReport> {
    let mut violations = Vec::new();
    for (w, roll) in m.order.iter().zip(&m.rolls) {
        for u in &m.order {
            if roll.bruhat_le(u)? != w.bruhat_le(u)? {
                violations.push((w.clone(), u.clone()));
            }
        }
    }
    let change_of_basis = match m.lambda.as_two_row() {
        Some(n) if n >= 6 => Some(change_of_basis(&d_block(m)?)),
        _ => None,
    };
    Ok(UpperTriangularReport { violations, change_of_basis })
}

/// Index ranges of the top-row and bottom-row fixed points of `(n-2, 2)`.
pub fn block_split(lambda: &Partition) -> Result<(usize, usize)> {
    match lambda.as_two_row() {
        Some(n) if n >= 6 => Ok(((n - 1) * (n - 2) / 2, n - 1)),
        _ => Err(Error::NotTwoRowShape { shape: lambda.to_string(), min: 6 }),
    }
}

/// Bottom-right block: rows and columns for the fixed points with `n` in the bottom row.
pub fn d_block(m: &RestrictionMatrix) -> Result<Vec<Vec<UniPoly>>> {
    let (top, bottom) = block_split(&m.lambda)?;
    Ok(m.block(top..top + bottom, top..top + bottom))
}

fn change_of_basis(d: &[Vec<UniPoly>]) -> ChangeOfBasis {
    let size = d.len();
    let mut adjusted: Vec<Vec<UniPoly>> = d.to_vec();
    let mut columns = Vec::new();
    for k in 3..size.saturating_sub(1) {
        let (mult, rem) = d[0][k].div_rem(&d[0][0]);
        let col: Vec<UniPoly> = (0..size).map(|i| &d[i][k] - &(&mult * &d[i][0])).collect();
        let zeros = rem.is_zero() && col[..k].iter().all(UniPoly::is_zero);
        let tail = col.get(k).cloned();
        let same = col[k..].iter().all(|p| Some(p) == tail.as_ref());
        let ok = zeros && same && tail.as_ref().is_some_and(|p| !p.is_zero());
        for (i, v) in col.into_iter().enumerate() {
            adjusted[i][k] = v;
        }
        columns.push(AdjustedColumn { k, multiplier: mult, tail, ok });
    }
    let lower_triangular = (0..size).all(|j| {
        !adjusted[j][j].is_zero() && (0..j).all(|i| adjusted[i][j].is_zero())
    });
    ChangeOfBasis { columns, lower_triangular }
}

/// Expected D block for `(n-2, 2)`, `n >= 6`, as rows.
///
/// Column 0 is `-2t`; column 1 is `0` then `2(n-2)t^2`; column 2 is two zeros then `2(n-3)t^2`;
/// column `k` for `3 <= k <= n-3` has `k` entries `2(n-k+1)t^2` then `4(n-k)t^2`;
/// the last column is zero except `2t^2` at the bottom.
pub fn d_block_closed_form(n: usize) -> Result<Vec<Vec<UniPoly>>> {
    if n < 6 {
        return Err(Error::NotTwoRowShape { shape: format!("({},2)", n as isize - 2), min: 6 });
    }
    let size = n - 1;
    let ni = n as i64;
    let column = |k: usize| -> Vec<UniPoly> {
        let ki = k as i64;
        (0..size)
            .map(|i| match k {
                0 => UniPoly::monomial(-2, 1),
                1 | 2 if i < k => UniPoly::zero(),
                1 | 2 => UniPoly::monomial(2 * (ni - 1 - ki), 2),
                _ if k == n - 2 => {
                    if i + 1 == size { UniPoly::monomial(2, 2) } else { UniPoly::zero() }
                }
                _ if i < k => UniPoly::monomial(2 * (ni - ki + 1), 2),
                _ => UniPoly::monomial(4 * (ni - ki), 2),
            })
            .collect()
    };
    let cols: Vec<Vec<UniPoly>> = (0..size).map(column).collect();
    Ok((0..size).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
}

/// Comma-separated rows of human-readable entries.
pub fn block_csv(block: &[Vec<UniPoly>]) -> String {
    let mut s = String::new();
    for row in block {
        let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

/// A `bmatrix` environment.
pub fn block_latex(block: &[Vec<UniPoly>]) -> String {
    let mut s = String::from("\\begin{bmatrix}\n");
    let rows: Vec<String> = block
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|p| p.to_string().replace('t', " t").trim().to_string()).collect();
            format!("  {}", cells.join(" & "))
        })
        .collect();
    s.push_str(&rows.join(" \\\\\n"));
    s.push_str("\n\\end{bmatrix}\n");
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub b_block_zero: bool,
    /// Equivariant restrictions on the A block agree with those of `(n-3, 2)`.
    pub a_block_matches_smaller: bool,
    /// The projected A block agrees with the projected `(n-3, 2)` matrix; the circle weights
    /// differ between the two sizes, so this is informational.
    pub a_block_projected_matches_smaller: bool,
    pub a_block_full_rank: bool,
    pub d_block_matches_closed_form: bool,
    pub change_of_basis: ChangeOfBasis,
}

impl BlockReport {
    pub fn ok(&self) -> bool {
        self.b_block_zero
            && self.a_block_matches_smaller
            && self.a_block_full_rank
            && self.d_block_matches_closed_form
            && self.change_of_basis.ok()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BasisReport {
    pub partition: Partition,
    pub matrix: RestrictionMatrix,
    pub rank: RankReport,
    pub columns_homogeneous: bool,
    pub rolldown_injective: bool,
    pub upper_triangular: UpperTriangularReport,
    pub blocks: Option<BlockReport>,
}

impl BasisReport {
    pub fn verified(&self) -> bool {
        self.rank.full_column_rank
            && self.columns_homogeneous
            && self.rolldown_injective
            && self.blocks.as_ref().is_none_or(BlockReport::ok)
    }
}

/// Builds the matrix and runs every check that applies to `lambda`.
pub fn verify_basis(lambda: &Partition) -> Result<BasisReport> {
    let matrix = build_matrix(lambda)?;
    let rank_report = is_full_column_rank(&matrix);
    let upper_triangular = check_upper_triangular_matrix(&matrix)?;
    let blocks = match lambda.as_two_row() {
        Some(n) if n >= 6 => {
            let (top, bottom) = block_split(lambda)?;
            let b = matrix.block(0..top, top..top + bottom);
            let smaller = build_matrix(&Partition::two_row(n - 1)?)?;
            let a = matrix.block(0..top, 0..top);
            let same_order = smaller.order.iter().zip(&matrix.order).all(|(s, w)| &s.extend(n) == w)
                && smaller.rolls.iter().zip(&matrix.rolls).all(|(s, r)| &s.extend(n) == r);
            let big_eq = equivariant_block(&matrix, 0..top, 0..top)?;
            let small_eq = equivariant_block(&smaller, 0..top, 0..top)?;
            let eq_match = big_eq.iter().flatten().zip(small_eq.iter().flatten()).all(|(b, s)| b == &s.embed(n));
            Some(BlockReport {
                b_block_zero: b.iter().flatten().all(UniPoly::is_zero),
                a_block_matches_smaller: same_order && eq_match,
                a_block_projected_matches_smaller: same_order && smaller.entries == a,
                a_block_full_rank: rank(&a).full_column_rank,
                d_block_matches_closed_form: d_block(&matrix)? == d_block_closed_form(n)?,
                change_of_basis: upper_triangular.change_of_basis.clone().expect("n >= 6"),
            })
        }
        _ => None,
    };
    Ok(BasisReport {
        partition: lambda.clone(),
        columns_homogeneous: matrix.columns_homogeneous(),
        rolldown_injective: matrix.rolldown_injective(),
        matrix,
        rank: rank_report,
        upper_triangular,
        blocks,
    })
}
