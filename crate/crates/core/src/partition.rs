//! Partitions as weakly decreasing sequences and as Young diagrams.
//!
//! Boxes are indexed by the coordinates `(x, y)` of their upper right corner:
//! `x` is the column and `y` the row, with row 1 at the bottom. Row `j` of a
//! partition holds the boxes `(1, j), …, (λ_j, j)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A box of the grid, `x` the column and `y` the row (both start at 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(u32, u32)", into = "(u32, u32)")]
pub struct Cell {
    pub x: u32,
    pub y: u32,
}

impl Cell {
    /// Panics on a zero coordinate.
    pub fn new(x: u32, y: u32) -> Cell {
        assert!(x >= 1 && y >= 1, "cell coordinates start at 1, got ({x},{y})");
        Cell { x, y }
    }

    pub fn north(self) -> Cell {
        Cell { x: self.x, y: self.y + 1 }
    }

    pub fn east(self) -> Cell {
        Cell { x: self.x + 1, y: self.y }
    }

    pub fn north_east(self) -> Cell {
        Cell { x: self.x + 1, y: self.y + 1 }
    }

    /// `None` in column 1.
    pub fn west(self) -> Option<Cell> {
        (self.x > 1).then(|| Cell { x: self.x - 1, y: self.y })
    }

    /// `None` in row 1.
    pub fn south(self) -> Option<Cell> {
        (self.y > 1).then(|| Cell { x: self.x, y: self.y - 1 })
    }

    /// The three boxes directly N, E and NE.
    pub fn upper_neighbors(self) -> [Cell; 3] {
        [self.north(), self.east(), self.north_east()]
    }

    /// Antidiagonal index `x + y`.
    pub fn diagonal(self) -> u32 {
        self.x + self.y
    }
}

impl TryFrom<(u32, u32)> for Cell {
    type Error = String;

    fn try_from((x, y): (u32, u32)) -> Result<Self, Self::Error> {
        if x == 0 || y == 0 {
            return Err(format!("cell coordinates start at 1, got ({x},{y})"));
        }
        Ok(Cell { x, y })
    }
}

impl From<Cell> for (u32, u32) {
    fn from(c: Cell) -> Self {
        (c.x, c.y)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A partition with trailing zeros stripped.
///
/// The derived `Ord` is lexicographic on the parts and only serves as a
/// canonical ordering; the containment order is [`Partition::leq`].
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from a weakly decreasing sequence; trailing zeros are dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Partition, Error> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(Partition { parts })
    }

    /// Panicking constructor for literals in tests and examples.
    pub fn from_parts(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts, `l(λ)`.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `row`-th part (1-based), zero past the end.
    pub fn part(&self, row: u32) -> u32 {
        if row == 0 {
            return 0;
        }
        self.parts.get(row as usize - 1).copied().unwrap_or(0)
    }

    /// Length of column `col` of the diagram (the conjugate part).
    pub fn column_height(&self, col: u32) -> u32 {
        self.parts.iter().take_while(|&&p| p >= col).count() as u32
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.x <= self.part(cell.y)
    }

    /// Componentwise comparison, missing parts read as zero.
    pub fn leq(&self, other: &Partition) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Boxes `(λ_j, j)` with `λ_j > λ_{j+1}`.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.length() as u32)
            .filter(|&j| self.part(j) > self.part(j + 1))
            .map(|j| Cell::new(self.part(j), j))
            .collect()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(j, &len)| (1..=len).map(move |x| Cell::new(x, j as u32 + 1)))
    }

    pub fn boxes(&self) -> BTreeSet<Cell> {
        self.cells().collect()
    }

    /// Inverse of [`Partition::boxes`].
    pub fn from_boxes<'a, I>(cells: I) -> Result<Partition, Error>
    where
        I: IntoIterator<Item = &'a Cell>,
    {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for c in cells {
            let y = c.y as usize;
            if rows.len() < y {
                rows.resize(y, Vec::new());
            }
            rows[y - 1].push(c.x);
        }
        let mut parts = Vec::with_capacity(rows.len());
        for (j, row) in rows.iter_mut().enumerate() {
            row.sort_unstable();
            row.dedup();
            if row.iter().enumerate().any(|(i, &x)| x != i as u32 + 1) {
                return Err(Error::NotAPartition(format!(
                    "row {} is not left-justified and contiguous",
                    j + 1
                )));
            }
            parts.push(row.len() as u32);
        }
        Partition::new(parts).map_err(|_| {
            Error::NotAPartition("row lengths increase going up".to_string())
        })
    }

    /// Componentwise maximum, i.e. the union of diagrams.
    pub fn union(&self, other: &Partition) -> Partition {
        let len = self.parts.len().max(other.parts.len());
        let parts = (1..=len as u32)
            .map(|j| self.part(j).max(other.part(j)))
            .collect::<Vec<_>>();
        Partition { parts }
    }

    /// Dimension of the Schur module `S_λ ℂ^k`, by the hook-content formula.
    pub fn schur_dim(&self, k: u32) -> BigUint {
        if self.length() > k as usize {
            return BigUint::zero();
        }
        let mut acc = BigRational::one();
        for c in self.cells() {
            let content = i64::from(c.x) - i64::from(c.y);
            let arm = self.part(c.y) - c.x;
            let leg = self.column_height(c.x) - c.y;
            let hook = arm + leg + 1;
            acc *= BigRational::new(BigInt::from(i64::from(k) + content), BigInt::from(hook));
        }
        assert!(acc.is_integer(), "hook-content product {acc} is not integral");
        let value = acc.to_integer();
        debug_assert!(!value.is_negative());
        value.to_biguint().expect("nonnegative dimension")
    }

    /// Adds a box at the end of `row`; fails when the result is not a partition.
    pub fn with_box_in_row(&self, row: u32) -> Option<Partition> {
        if row == 0 || row as usize > self.length() + 1 {
            return None;
        }
        if row > 1 && self.part(row) + 1 > self.part(row - 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row as usize > parts.len() {
            parts.push(1);
        } else {
            parts[row as usize - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// All partitions of `size` with at most `max_rows` rows, in reverse
    /// lexicographic order.
    pub fn all_of_size(size: u32, max_rows: usize) -> Vec<Partition> {
        fn go(rem: u32, max: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if rows == 0 {
                return;
            }
            for part in (1..=max.min(rem)).rev() {
                cur.push(part);
                go(rem - part, part, rows - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, max_rows, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"(4,3,1,1)"`, `"(3^3,1^2)"`, `"()"`; the parentheses are optional.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: String| Error::InvalidPartition(format!("{msg} in {s:?}"));
        let trimmed = s.trim();
        let inner = match (trimmed.strip_prefix('('), trimmed.strip_suffix(')')) {
            (Some(_), Some(_)) => &trimmed[1..trimmed.len() - 1],
            (None, None) => trimmed,
            _ => return Err(bad("unbalanced parentheses".into())),
        };
        let mut parts = Vec::new();
        for token in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (value, count) = match token.split_once('^') {
                Some((v, e)) => (v.trim(), e.trim()),
                None => (token, "1"),
            };
            let value: u32 = value.parse().map_err(|_| bad(format!("bad part {value:?}")))?;
            let count: usize = count.parse().map_err(|_| bad(format!("bad exponent {count:?}")))?;
            parts.extend(std::iter::repeat(value).take(count));
        }
        if parts.iter().rev().skip_while(|&&p| p == 0).any(|&p| p == 0) {
            return Err(bad("zero part before a positive part".into()));
        }
        Partition::new(parts)
    }
}
