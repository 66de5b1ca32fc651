//! Exact permutation algebra: one-line maps, 0/1 permutation matrices,
//! group operations, cycle order and full enumeration at desk scale.

use std::fmt;

use itertools::Itertools;
use num_integer::Integer;
use thiserror::Error;

/// Degrees above this are rejected by [`enumerate_permutations`] (8! = 40320).
pub const MAX_ENUMERATION_DEGREE: usize = 8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PermError {
    #[error("matrix entry ({row},{col}) = {value} is not 0 or 1")]
    NotZeroOne { row: usize, col: usize, value: f64 },
    #[error("matrix is not a permutation matrix: {reason}")]
    NotBijective { reason: String },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree {degree} exceeds enumeration cap {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("invalid one-line map: {0}")]
    InvalidMap(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
}

/// A permutation of `{1..n}`, stored as 0-based images.
///
/// The one-line notation used by [`Permutation::from_one_line`] and
/// [`fmt::Display`] is 1-based: `3,2,4,1` sends 1 to 3, 2 to 2, 3 to 4
/// and 4 to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 0-based images (`images[i]` is the image of `i`).
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(PermError::InvalidMap(format!(
                    "image {} out of range for degree {n}",
                    v + 1
                )));
            }
            if seen[v] {
                return Err(PermError::InvalidMap(format!(
                    "image {} appears twice",
                    v + 1
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from a 1-based one-line map such as `[3,2,4,1]`.
    pub fn from_one_line(values: &[usize]) -> Result<Self, PermError> {
        let n = values.len();
        let mut images = Vec::with_capacity(n);
        for &v in values {
            if v == 0 || v > n {
                return Err(PermError::InvalidMap(format!(
                    "value {v} out of range 1..={n}"
                )));
            }
            images.push(v - 1);
        }
        Self::from_images(images)
    }

    /// Parses comma-separated one-line notation, e.g. `"3,2,4,1"`.
    pub fn parse_one_line(text: &str) -> Result<Self, PermError> {
        let values = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| PermError::InvalidMap(format!("bad integer {:?}", tok.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if values.is_empty() {
            return Err(PermError::InvalidMap("empty map".into()));
        }
        Self::from_one_line(&values)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// The 1-based one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// `p.compose(&q)` applies `p` first, then `q`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// `self` composed with itself `exp` times; `pow(0)` is the identity.
    pub fn pow(&self, exp: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..exp {
            acc = acc.compose(self).expect("same degree");
        }
        acc
    }

    /// Disjoint cycles, each starting at its least point, ordered by least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Least `m >= 1` with `p^m` the identity: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |acc, len| acc.lcm(&len))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// The 0/1 matrix form: entry `(i,j)` is 1 iff `i` maps to `j`.
    pub fn matrix(&self) -> SquareMatrix {
        let n = self.degree();
        let mut entries = vec![0.0; n * n];
        for (i, &j) in self.images.iter().enumerate() {
            entries[i * n + j] = 1.0;
        }
        SquareMatrix { n, entries }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line().iter().join(","))
    }
}

/// Dense square matrix with real entries, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl SquareMatrix {
    pub fn new(n: usize, entries: Vec<f64>) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::InvalidMatrix("dimension must be >= 1".into()));
        }
        if entries.len() != n * n {
            return Err(PermError::InvalidMatrix(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|v| !v.is_finite()) {
            return Err(PermError::InvalidMatrix(format!("non-finite entry {bad}")));
        }
        Ok(SquareMatrix { n, entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, PermError> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(PermError::InvalidMatrix(format!(
                    "row of length {} in a {n}x{n} matrix",
                    row.len()
                )));
            }
        }
        Self::new(n, rows.concat())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.n + col]
    }

    pub fn transpose(&self) -> SquareMatrix {
        let n = self.n;
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        SquareMatrix { n, entries }
    }

    /// Parses the matrix text format: first line the dimension, then one
    /// whitespace-separated line per row.
    pub fn parse(text: &str) -> Result<Self, PermError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| PermError::InvalidMatrix("empty input".into()))?
            .trim()
            .parse()
            .map_err(|_| PermError::InvalidMatrix("first line must be the dimension".into()))?;
        let mut entries = Vec::with_capacity(n * n);
        for _ in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| PermError::InvalidMatrix(format!("expected {n} rows")))?;
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<f64>()
                        .map_err(|_| PermError::InvalidMatrix(format!("bad entry {tok:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != n {
                return Err(PermError::InvalidMatrix(format!(
                    "row has {} entries, expected {n}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        if lines.next().is_some() {
            return Err(PermError::InvalidMatrix("trailing rows".into()));
        }
        Self::new(n, entries)
    }

    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for i in 0..self.n {
            let row = (0..self.n).map(|j| self.get(i, j).to_string()).join(" ");
            out.push_str(&row);
            out.push('\n');
        }
        out
    }
}

/// Reads a permutation off a 0/1 matrix: entry `(i,j) = 1` means `i` maps to `j`.
pub fn perm_from_matrix(m: &SquareMatrix) -> Result<Permutation, PermError> {
    let n = m.n();
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j);
            if v != 0.0 && v != 1.0 {
                return Err(PermError::NotZeroOne {
                    row: i + 1,
                    col: j + 1,
                    value: v,
                });
            }
        }
    }
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let ones: Vec<usize> = (0..n).filter(|&j| m.get(i, j) == 1.0).collect();
        if ones.len() != 1 {
            return Err(PermError::NotBijective {
                reason: format!("row {} sums to {}", i + 1, ones.len()),
            });
        }
        images.push(ones[0]);
    }
    for j in 0..n {
        let sum: usize = (0..n).filter(|&i| m.get(i, j) == 1.0).count();
        if sum != 1 {
            return Err(PermError::NotBijective {
                reason: format!("column {} sums to {sum}", j + 1),
            });
        }
    }
    Ok(Permutation { images })
}

/// All permutations of degree `n` in lexicographic one-line order.
pub fn enumerate_permutations(n: usize) -> Result<Vec<Permutation>, PermError> {
    if n == 0 || n > MAX_ENUMERATION_DEGREE {
        return Err(PermError::DegreeTooLarge {
            degree: n,
            max: MAX_ENUMERATION_DEGREE,
        });
    }
    Ok((0..n)
        .permutations(n)
        .map(|images| Permutation { images })
        .collect())
}

/// True iff all entries are `>= -tol` and every row and column sums to 1
/// within `tol`.
pub fn is_doubly_stochastic(m: &SquareMatrix, tol: f64) -> bool {
    let n = m.n();
    for i in 0..n {
        for j in 0..n {
            if m.get(i, j) < -tol {
                return false;
            }
        }
    }
    for i in 0..n {
        let row: f64 = (0..n).map(|j| m.get(i, j)).sum();
        if (row - 1.0).abs() > tol {
            return false;
        }
    }
    for j in 0..n {
        let col: f64 = (0..n).map(|i| m.get(i, j)).sum();
        if (col - 1.0).abs() > tol {
            return false;
        }
    }
    true
}
