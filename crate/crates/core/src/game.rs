//! Payoff matrices for scalar games and the two multicriteria classes.
//!
//! Player I picks rows and minimizes, player II picks columns and maximizes.
//! [`MultiGameD1`] shares one column strategy across all criteria while
//! [`MultiGameD2`] lets player II play a separate strategy per criterion, so
//! criteria may have different column counts.

use std::fmt;

use num_traits::Zero;

use crate::error::{GameError, Result};
use crate::rational::{dot, int, max_abs, Rational};

/// A dense `m x n` payoff matrix, `m, n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarGame {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ScalarGame {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(GameError::Dimension("a matrix needs at least one row".into()));
        }
        let n = rows[0].len();
        if n == 0 {
            return Err(GameError::Dimension("a matrix needs at least one column".into()));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(GameError::Dimension(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        Ok(ScalarGame {
            rows: m,
            cols: n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(GameError::Dimension(format!("empty {rows}x{cols} matrix")));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Ok(ScalarGame { rows, cols, entries })
    }

    /// Integer matrix shorthand, mostly for fixtures.
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &Rational> {
        self.entries.iter()
    }

    pub fn max_abs_entry(&self) -> Rational {
        max_abs(&self.entries)
    }

    pub fn transpose(&self) -> ScalarGame {
        ScalarGame::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone()).expect("non-empty")
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> ScalarGame {
        ScalarGame {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scaled(&self, factor: &Rational) -> ScalarGame {
        self.map(|v| v * factor)
    }

    pub fn try_add(&self, other: &ScalarGame) -> Result<ScalarGame> {
        self.check_same_shape(other)?;
        Ok(ScalarGame {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    /// True when every entry of `self` is `<=` the matching entry of `other`.
    pub fn entrywise_le(&self, other: &ScalarGame) -> Result<bool> {
        self.check_same_shape(other)?;
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b))
    }

    fn check_same_shape(&self, other: &ScalarGame) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(GameError::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Appends `column` after the last column.
    pub fn with_column(&self, column: &[Rational]) -> Result<ScalarGame> {
        if column.len() != self.rows {
            return Err(GameError::Dimension(format!(
                "new column has {} entries, matrix has {} rows",
                column.len(),
                self.rows
            )));
        }
        ScalarGame::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { column[i].clone() }
        })
    }

    /// Appends `row` below the last row.
    pub fn with_row(&self, row: &[Rational]) -> Result<ScalarGame> {
        if row.len() != self.cols {
            return Err(GameError::Dimension(format!(
                "new row has {} entries, matrix has {} columns",
                row.len(),
                self.cols
            )));
        }
        ScalarGame::from_fn(self.rows + 1, self.cols, |i, j| {
            if i < self.rows { self.get(i, j).clone() } else { row[j].clone() }
        })
    }

    pub fn without_column(&self, col: usize) -> Result<ScalarGame> {
        if col >= self.cols || self.cols == 1 {
            return Err(GameError::Dimension(format!(
                "cannot remove column {} of a matrix with {} columns",
                col + 1,
                self.cols
            )));
        }
        ScalarGame::from_fn(self.rows, self.cols - 1, |i, j| {
            self.get(i, if j < col { j } else { j + 1 }).clone()
        })
    }

    pub fn without_row(&self, row: usize) -> Result<ScalarGame> {
        if row >= self.rows || self.rows == 1 {
            return Err(GameError::Dimension(format!(
                "cannot remove row {} of a matrix with {} rows",
                row + 1,
                self.rows
            )));
        }
        ScalarGame::from_fn(self.rows - 1, self.cols, |i, j| {
            self.get(if i < row { i } else { i + 1 }, j).clone()
        })
    }

    /// The row vector `x^T A`.
    pub fn left_mul(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.rows {
            return Err(GameError::Dimension(format!(
                "row strategy has length {}, matrix has {} rows",
                x.len(),
                self.rows
            )));
        }
        let mut out = vec![Rational::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o += xi * a;
            }
        }
        Ok(out)
    }

    /// The column vector `A y`.
    pub fn right_mul(&self, y: &[Rational]) -> Result<Vec<Rational>> {
        if y.len() != self.cols {
            return Err(GameError::Dimension(format!(
                "column strategy has length {}, matrix has {} columns",
                y.len(),
                self.cols
            )));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), y)).collect())
    }

    /// `x^T A y`.
    pub fn bilinear(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        let xa = self.left_mul(x)?;
        if y.len() != self.cols {
            return Err(GameError::Dimension(format!(
                "column strategy has length {}, matrix has {} columns",
                y.len(),
                self.cols
            )));
        }
        Ok(dot(&xa, y))
    }
}

impl fmt::Debug for ScalarGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

fn check_criteria_nonempty(matrices: &[ScalarGame]) -> Result<()> {
    if matrices.is_empty() {
        return Err(GameError::Dimension("a game needs at least one criterion".into()));
    }
    Ok(())
}

/// Multicriteria game where player II plays one strategy against all criteria.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGameD1 {
    matrices: Vec<ScalarGame>,
}

impl MultiGameD1 {
    pub fn new(matrices: Vec<ScalarGame>) -> Result<Self> {
        check_criteria_nonempty(&matrices)?;
        let (m, n) = (matrices[0].rows(), matrices[0].cols());
        for (l, a) in matrices.iter().enumerate() {
            if a.rows() != m || a.cols() != n {
                return Err(GameError::Dimension(format!(
                    "criterion {} is {}x{}, expected {m}x{n}",
                    l + 1,
                    a.rows(),
                    a.cols()
                )));
            }
        }
        Ok(MultiGameD1 { matrices })
    }

    pub fn rows(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn cols(&self) -> usize {
        self.matrices[0].cols()
    }

    pub fn criteria(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrix(&self, criterion: usize) -> &ScalarGame {
        &self.matrices[criterion]
    }

    pub fn matrices(&self) -> &[ScalarGame] {
        &self.matrices
    }

    pub fn max_abs_entry(&self) -> Rational {
        self.matrices.iter().map(ScalarGame::max_abs_entry).max().unwrap_or_else(Rational::zero)
    }

    /// `sum_l weights[l] * A(l)`.
    pub fn weighted_sum(&self, weights: &[Rational]) -> Result<ScalarGame> {
        weighted_sum(&self.matrices, weights)
    }

    pub fn entrywise_le(&self, other: &MultiGameD1) -> Result<bool> {
        entrywise_le(&self.matrices, &other.matrices)
    }
}

/// Multicriteria game where player II may play a different strategy per criterion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGameD2 {
    matrices: Vec<ScalarGame>,
}

impl MultiGameD2 {
    pub fn new(matrices: Vec<ScalarGame>) -> Result<Self> {
        check_criteria_nonempty(&matrices)?;
        let m = matrices[0].rows();
        for (l, a) in matrices.iter().enumerate() {
            if a.rows() != m {
                return Err(GameError::Dimension(format!(
                    "criterion {} has {} rows, expected {m}",
                    l + 1,
                    a.rows()
                )));
            }
        }
        Ok(MultiGameD2 { matrices })
    }

    pub fn rows(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn criteria(&self) -> usize {
        self.matrices.len()
    }

    /// Column counts `(n_1, ..., n_k)`.
    pub fn column_counts(&self) -> Vec<usize> {
        self.matrices.iter().map(ScalarGame::cols).collect()
    }

    pub fn matrix(&self, criterion: usize) -> &ScalarGame {
        &self.matrices[criterion]
    }

    pub fn matrices(&self) -> &[ScalarGame] {
        &self.matrices
    }

    pub fn max_abs_entry(&self) -> Rational {
        self.matrices.iter().map(ScalarGame::max_abs_entry).max().unwrap_or_else(Rational::zero)
    }

    pub fn entrywise_le(&self, other: &MultiGameD2) -> Result<bool> {
        entrywise_le(&self.matrices, &other.matrices)
    }
}

fn entrywise_le(lhs: &[ScalarGame], rhs: &[ScalarGame]) -> Result<bool> {
    if lhs.len() != rhs.len() {
        return Err(GameError::Dimension(format!("{} vs {} criteria", lhs.len(), rhs.len())));
    }
    for (a, b) in lhs.iter().zip(rhs) {
        if !a.entrywise_le(b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn weighted_sum(matrices: &[ScalarGame], weights: &[Rational]) -> Result<ScalarGame> {
    if weights.len() != matrices.len() {
        return Err(GameError::Dimension(format!(
            "{} weights for {} criteria",
            weights.len(),
            matrices.len()
        )));
    }
    let first = &matrices[0];
    let mut acc = first.map(|_| Rational::zero());
    for (a, w) in matrices.iter().zip(weights) {
        acc = acc.try_add(&a.scaled(w))?;
    }
    Ok(acc)
}
