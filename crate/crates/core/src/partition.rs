use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored as its nonincreasing list of row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidPartition("no rows".into()));
        }
        if rows.contains(&0) {
            return Err(Error::InvalidPartition("row of length zero".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{rows:?} is not nonincreasing")));
        }
        Ok(Partition(rows))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn num_cols(&self) -> usize {
        self.0[0]
    }

    /// Number of boxes.
    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// Column lengths `mu_1 >= mu_2 >= ...`.
    pub fn conjugate(&self) -> Partition {
        let cols = (1..=self.num_cols())
            .map(|c| self.0.iter().filter(|&&r| r >= c).count())
            .collect();
        Partition(cols)
    }

    /// Multiplicities `d_i` of the distinct row lengths, longest first.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 && self.0[i - 1] == *r {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
            }
        }
        out
    }

    /// Boxes `(row, col)`, 1-based, in English reading order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
            .collect()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && row <= self.num_rows() && col <= self.0[row - 1]
    }

    /// The two-row shape `(n - 2, 2)`.
    pub fn two_row(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidPartition(format!("({}, 2) needs n >= 4", n as isize - 2)));
        }
        Partition::new(vec![n - 2, 2])
    }

    /// `Some(n)` when the shape is `(n - 2, 2)` with `n >= 4`.
    pub fn as_two_row(&self) -> Option<usize> {
        match self.0.as_slice() {
            [a, 2] if *a >= 2 => Some(a + 2),
            _ => None,
        }
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for part in (1..=rem.min(max)).rev() {
                cur.push(part);
                rec(rem - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"4,2"`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let rows = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad partition '{s}'")))?;
        Partition::new(rows)
    }
}
