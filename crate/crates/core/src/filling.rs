//! Fillings of Young diagrams and the readings that identify them with permutations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{next_permutation, Permutation};

/// A bijective filling of a Young diagram by `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Filling {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Filling {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidFilling(e.to_string()))?;
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidFilling(format!("entries are not a bijection onto 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(Filling { shape, rows })
    }

    pub fn with_shape(shape: &Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let f = Filling::new(rows)?;
        if &f.shape != shape {
            return Err(Error::InvalidFilling(format!("shape {} differs from {}", f.shape, shape)));
        }
        Ok(f)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// Entry in box `(row, col)`, 1-based.
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    /// Box `(row, col)` containing `value`, 1-based.
    pub fn position(&self, value: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&x| x == value).map(|c| (r + 1, c + 1))
        })
    }

    /// Positions of all values: `pos[v] = (row, col)`, with `pos[0]` unused.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.n() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                pos[v] = (r + 1, c + 1);
            }
        }
        pos
    }

    /// Row-by-row, left-to-right reading word.
    pub fn english_read(&self) -> Permutation {
        Permutation::new(self.rows.iter().flatten().copied().collect()).expect("filling is bijective")
    }

    /// Inverse of [`Filling::english_read`].
    pub fn from_english_word(shape: &Partition, word: &Permutation) -> Result<Self> {
        if word.n() != shape.n() {
            return Err(Error::SizeMismatch { expected: shape.n(), found: word.n() });
        }
        let mut it = word.oneline().iter().copied();
        let rows = shape.rows().iter().map(|&len| it.by_ref().take(len).collect()).collect();
        Ok(Filling { shape: shape.clone(), rows })
    }

    /// Fills columns left to right, each from bottom to top.
    pub fn rotated_english(shape: &Partition) -> Self {
        let mut rows: Vec<Vec<usize>> = shape.rows().iter().map(|&len| vec![0; len]).collect();
        let mut next = 1;
        for (c, &height) in shape.conjugate().rows().iter().enumerate() {
            for r in (0..height).rev() {
                rows[r][c] = next;
                next += 1;
            }
        }
        Filling { shape: shape.clone(), rows }
    }

    /// Reads the filling in the box order given by the `sigma`-labelling of the diagram.
    ///
    /// Satisfies `sigma_read(T, sigma) * sigma == english_read(T)`.
    pub fn sigma_read(&self, sigma: &Permutation) -> Result<Permutation> {
        let e = self.english_read();
        e.compose(&sigma.inverse())
    }

    /// The unique filling `T` of `shape` with `T.sigma_read(sigma) == word`.
    pub fn from_sigma_word(shape: &Partition, word: &Permutation, sigma: &Permutation) -> Result<Self> {
        if sigma.n() != shape.n() {
            return Err(Error::SizeMismatch { expected: shape.n(), found: sigma.n() });
        }
        if word.n() != shape.n() {
            return Err(Error::SizeMismatch { expected: shape.n(), found: word.n() });
        }
        Filling::from_english_word(shape, &(word * sigma))
    }

    /// Entries increase along every row.
    pub fn is_row_strict(&self) -> bool {
        self.rows.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]))
    }

    /// Pairs `(k, j)` with `k` immediately left of `j` in some row.
    pub fn adjacencies(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().flat_map(|row| row.windows(2).map(|w| (w[0], w[1])))
    }

    /// Every filling of `shape`, ordered by English reading word.
    pub fn all(shape: &Partition) -> Vec<Filling> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=shape.n()).collect();
        loop {
            let w = Permutation::new(word.clone()).unwrap();
            out.push(Filling::from_english_word(shape, &w).unwrap());
            if !next_permutation(&mut word) {
                break;
            }
        }
        out
    }

    /// Every row-strict filling of `shape`.
    pub fn row_strict(shape: &Partition) -> Vec<Filling> {
        fn rec(v: usize, n: usize, shape: &Partition, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Filling>) {
            if v > n {
                out.push(Filling { shape: shape.clone(), rows: rows.clone() });
                return;
            }
            for r in 0..rows.len() {
                if rows[r].len() < shape.rows()[r] {
                    rows[r].push(v);
                    rec(v + 1, n, shape, rows, out);
                    rows[r].pop();
                }
            }
        }
        let mut out = Vec::new();
        let mut rows = vec![Vec::new(); shape.num_rows()];
        rec(1, shape.n(), shape, &mut rows, &mut out);
        out
    }
}

impl TryFrom<Vec<Vec<usize>>> for Filling {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Filling::new(rows)
    }
}

impl From<Filling> for Vec<Vec<usize>> {
    fn from(f: Filling) -> Self {
        f.rows
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" | "))
    }
}

impl FromStr for Filling {
    type Err = Error;

    /// Parses `"[2 4 | 1 3]"` or `"2 4 | 1 3"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let rows = t
            .split('|')
            .map(|row| row.split_whitespace().map(str::parse::<usize>).collect::<std::result::Result<Vec<_>, _>>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad filling '{s}'")))?;
        Filling::new(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn english_reading() {
        let t = Filling::new(vec![vec![4, 1, 6], vec![2, 3], vec![5]]).unwrap();
        assert_eq!(t.english_read(), perm("416235"));
        let back = Filling::from_english_word(t.shape(), &perm("416235")).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn sigma_reading_example() {
        let t = Filling::new(vec![vec![4, 1, 6], vec![2, 3], vec![5]]).unwrap();
        let sigma = perm("253416");
        let tau = t.sigma_read(&sigma).unwrap();
        assert_eq!(tau, perm("346215"));
        assert_eq!(Filling::from_sigma_word(t.shape(), &tau, &sigma).unwrap(), t);
    }

    #[test]
    fn rotated_english_fillings() {
        let s22 = Partition::new(vec![2, 2]).unwrap();
        assert_eq!(Filling::rotated_english(&s22).to_string(), "[2 4 | 1 3]");
        let s321 = Partition::new(vec![3, 2, 1]).unwrap();
        assert_eq!(Filling::rotated_english(&s321).english_read(), perm("356241"));
        let s42 = Partition::new(vec![4, 2]).unwrap();
        assert_eq!(Filling::rotated_english(&s42).english_read(), perm("245613"));
    }

    #[test]
    fn rejects_bad_fillings() {
        assert!(Filling::new(vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(Filling::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Filling::new(vec![vec![1, 5], vec![2, 3]]).is_err());
        let s = Partition::new(vec![2, 1]).unwrap();
        assert!(Filling::from_english_word(&s, &perm("1234")).is_err());
    }

    #[test]
    fn display_and_parse() {
        let t: Filling = "[1 2 5 | 3 4]".parse().unwrap();
        assert_eq!(t.rows(), &[vec![1, 2, 5], vec![3, 4]]);
        assert_eq!(t.to_string(), "[1 2 5 | 3 4]");
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[1,2,5],[3,4]]");
    }

    #[test]
    fn row_strict_count_is_multinomial() {
        let s = Partition::new(vec![3, 2, 1]).unwrap();
        let fs = Filling::row_strict(&s);
        assert_eq!(fs.len(), 60);
        assert!(fs.iter().all(Filling::is_row_strict));
        assert_eq!(Filling::all(&s).len(), 720);
    }

    #[test]
    fn positions_and_adjacencies() {
        let t: Filling = "[3 2 4 | 1 5 | 6]".parse().unwrap();
        assert_eq!(t.position(5), Some((2, 2)));
        assert_eq!(t.get(3, 1), Some(6));
        assert_eq!(t.get(3, 2), None);
        let adj: Vec<_> = t.adjacencies().collect();
        assert_eq!(adj, vec![(3, 2), (2, 4), (1, 5)]);
    }
}
