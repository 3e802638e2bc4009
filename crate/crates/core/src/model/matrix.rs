use std::fmt;

use super::{dot, int, MixedStrategy, Permutation, Rational};
use crate::{Error, Result};

/// Payoff matrix of one player: rows are the player's own pure strategies,
/// columns the opponent's. Entry `(j, i)` is the payoff of playing `j`
/// against `i`.
///
/// The `symmetric` flag marks the row player's matrix of a symmetric game,
/// where the opponent's payoff matrix (in own-strategy-row orientation) is
/// the same matrix. It requires a square shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
    symmetric: bool,
}

impl GameMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if n == 0 || m == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != m) {
            return Err(Error::RaggedMatrix {
                row,
                expected: m,
                found: r.len(),
            });
        }
        Ok(Self {
            rows: n,
            cols: m,
            entries: rows.into_iter().flatten().collect(),
            symmetric: false,
        })
    }

    /// Square matrix flagged as a symmetric game.
    pub fn symmetric(rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(rows)?.into_symmetric()
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    pub fn symmetric_from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_ints(rows)?.into_symmetric()
    }

    pub fn into_symmetric(mut self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::WrongShape {
                expected: "square",
                rows: self.rows,
                cols: self.cols,
            });
        }
        self.symmetric = true;
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Transpose; drops the symmetric flag.
    pub fn transpose(&self) -> GameMatrix {
        let rows = (0..self.cols).map(|c| self.column(c)).collect();
        GameMatrix::new(rows).expect("transpose of a valid matrix")
    }

    /// Applies `f` to every entry, keeping shape and flag.
    pub fn map(&self, f: impl Fn(usize, usize, &Rational) -> Rational) -> GameMatrix {
        let entries = (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .map(|(r, c)| f(r, c, self.get(r, c)))
            .collect();
        GameMatrix {
            entries,
            ..self.clone()
        }
    }

    /// `A·v` for an arbitrary vector of length `cols`.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), v)).collect())
    }
}

impl fmt::Display for GameMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (c, v) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Expected payoff of each pure strategy against the opponent mix `x`.
pub fn mat_vec(a: &GameMatrix, x: &MixedStrategy) -> Result<Vec<Rational>> {
    a.apply(x.weights())
}

/// Relabels the strategies of a symmetric game: old strategy `i` becomes
/// `σ(i)`, so `B[σ(i)][σ(j)] = A[i][j]`.
pub fn relabel(a: &GameMatrix, sigma: &Permutation) -> Result<GameMatrix> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if sigma.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "permutation of size {} for a {}x{} game",
            sigma.len(),
            a.rows(),
            a.cols()
        )));
    }
    let inv = sigma.inverse();
    Ok(a.map(|r, c, _| a.get(inv.apply(r), inv.apply(c)).clone()))
}
