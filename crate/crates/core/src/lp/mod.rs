//! Exact rational linear feasibility and optimization.
//!
//! Systems are `M·x = rhs` with a per-variable sign constraint (`x_j ≥ 0` or
//! free). Every answer carries something that can be re-checked by direct
//! arithmetic: a primal point, a Farkas certificate `y` with `yᵀM ≤ 0` on
//! sign-constrained columns, `yᵀM = 0` on free columns and `yᵀrhs > 0`, or an
//! optimal dual vector.

mod simplex;

use num_traits::{One, Signed, Zero};

use crate::model::{dot, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    matrix: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    nonneg: Vec<bool>,
}

impl LinearSystem {
    pub fn new(matrix: Vec<Vec<Rational>>, rhs: Vec<Rational>, nonneg: Vec<bool>) -> Result<Self> {
        if matrix.len() != rhs.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} rows but {} right-hand sides",
                matrix.len(),
                rhs.len()
            )));
        }
        if let Some((i, row)) = matrix
            .iter()
            .enumerate()
            .find(|(_, r)| r.len() != nonneg.len())
        {
            return Err(Error::DimensionMismatch(format!(
                "row {i} has {} coefficients for {} variables",
                row.len(),
                nonneg.len()
            )));
        }
        Ok(Self {
            matrix,
            rhs,
            nonneg,
        })
    }

    /// All variables sign-constrained.
    pub fn nonnegative(matrix: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> Result<Self> {
        let cols = matrix.first().map_or(0, Vec::len);
        Self::new(matrix, rhs, vec![true; cols])
    }

    pub fn rows(&self) -> usize {
        self.rhs.len()
    }

    pub fn cols(&self) -> usize {
        self.nonneg.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    pub fn is_nonneg(&self, col: usize) -> bool {
        self.nonneg[col]
    }

    /// `yᵀ·M`, one entry per column.
    fn row_combination(&self, y: &[Rational]) -> Vec<Rational> {
        (0..self.cols())
            .map(|j| {
                self.matrix
                    .iter()
                    .zip(y)
                    .map(|(row, yi)| &row[j] * yi)
                    .sum()
            })
            .collect()
    }

    /// The Farkas alternative in variables `y` (free) plus one slack per
    /// sign-constrained column: `yᵀM_j ≤ 0` (or `= 0` for free columns) and
    /// `yᵀrhs = 1`. It is feasible exactly when `self` is not.
    pub fn alternative(&self) -> LinearSystem {
        let slack_cols: Vec<usize> = (0..self.cols()).filter(|&j| self.nonneg[j]).collect();
        let width = self.rows() + slack_cols.len();
        let mut matrix = Vec::with_capacity(self.cols() + 1);
        for j in 0..self.cols() {
            let mut row: Vec<Rational> = self.matrix.iter().map(|r| r[j].clone()).collect();
            row.resize(width, Rational::zero());
            if let Some(k) = slack_cols.iter().position(|&c| c == j) {
                row[self.rows() + k] = Rational::one();
            }
            matrix.push(row);
        }
        let mut last = self.rhs.clone();
        last.resize(width, Rational::zero());
        matrix.push(last);
        let mut rhs = vec![Rational::zero(); self.cols()];
        rhs.push(Rational::one());
        let mut nonneg = vec![false; self.rows()];
        nonneg.resize(width, true);
        LinearSystem::new(matrix, rhs, nonneg).expect("alternative system is well formed")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeasibilityOutcome {
    /// `basis` lists the original variables that are basic in the final tableau.
    Feasible {
        x: Vec<Rational>,
        basis: Vec<usize>,
    },
    Infeasible {
        certificate: Vec<Rational>,
    },
}

impl FeasibilityOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityOutcome::Feasible { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OptimizationOutcome {
    /// `dual` satisfies `dualᵀM_j ≥ c_j` on sign-constrained columns,
    /// equality on free ones, and `dualᵀrhs = value`.
    Optimal {
        x: Vec<Rational>,
        value: Rational,
        dual: Vec<Rational>,
    },
    Unbounded,
    Infeasible {
        certificate: Vec<Rational>,
    },
}

/// Decides `M·x = rhs` under the sign constraints.
pub fn solve_feasibility(sys: &LinearSystem) -> FeasibilityOutcome {
    match simplex::run(sys, None) {
        simplex::Outcome::Optimal { x, basis, .. } => FeasibilityOutcome::Feasible { x, basis },
        simplex::Outcome::Infeasible { certificate } => {
            FeasibilityOutcome::Infeasible { certificate }
        }
        simplex::Outcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
    }
}

/// Maximizes `objectiveᵀx` over the system.
pub fn maximize(objective: &[Rational], sys: &LinearSystem) -> Result<OptimizationOutcome> {
    if objective.len() != sys.cols() {
        return Err(Error::DimensionMismatch(format!(
            "objective of length {} for {} variables",
            objective.len(),
            sys.cols()
        )));
    }
    Ok(match simplex::run(sys, Some(objective)) {
        simplex::Outcome::Optimal { x, value, dual, .. } => {
            OptimizationOutcome::Optimal { x, value, dual }
        }
        simplex::Outcome::Unbounded => OptimizationOutcome::Unbounded,
        simplex::Outcome::Infeasible { certificate } => {
            OptimizationOutcome::Infeasible { certificate }
        }
    })
}

/// Re-checks either arm by direct arithmetic on the original system.
pub fn verify_certificate(sys: &LinearSystem, out: &FeasibilityOutcome) -> bool {
    match out {
        FeasibilityOutcome::Feasible { x, .. } => is_feasible_point(sys, x),
        FeasibilityOutcome::Infeasible { certificate } => is_farkas_certificate(sys, certificate),
    }
}

pub fn is_feasible_point(sys: &LinearSystem, x: &[Rational]) -> bool {
    x.len() == sys.cols()
        && (0..sys.cols()).all(|j| !sys.nonneg[j] || !x[j].is_negative())
        && sys
            .matrix
            .iter()
            .zip(&sys.rhs)
            .all(|(row, b)| &dot(row, x) == b)
}

pub fn is_farkas_certificate(sys: &LinearSystem, y: &[Rational]) -> bool {
    if y.len() != sys.rows() || !dot(y, &sys.rhs).is_positive() {
        return false;
    }
    sys.row_combination(y).iter().enumerate().all(|(j, v)| {
        if sys.nonneg[j] {
            !v.is_positive()
        } else {
            v.is_zero()
        }
    })
}

/// Checks an `Optimal` outcome through weak duality: primal feasibility,
/// dual feasibility and equal objective values.
pub fn verify_optimal(
    objective: &[Rational],
    sys: &LinearSystem,
    out: &OptimizationOutcome,
) -> bool {
    match out {
        OptimizationOutcome::Optimal { x, value, dual } => {
            let reduced = sys.row_combination(dual);
            is_feasible_point(sys, x)
                && dual.len() == sys.rows()
                && &dot(objective, x) == value
                && &dot(dual, &sys.rhs) == value
                && (0..sys.cols()).all(|j| {
                    if sys.nonneg[j] {
                        reduced[j] >= objective[j]
                    } else {
                        reduced[j] == objective[j]
                    }
                })
        }
        OptimizationOutcome::Infeasible { certificate } => is_farkas_certificate(sys, certificate),
        OptimizationOutcome::Unbounded => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{int, rat};

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn identity_system_is_feasible() {
        let sys =
            LinearSystem::nonnegative(ints(&[&[1, 0], &[0, 1]]), vec![int(1), int(1)]).unwrap();
        let out = solve_feasibility(&sys);
        match &out {
            FeasibilityOutcome::Feasible { x, .. } => assert_eq!(x, &vec![int(1), int(1)]),
            other => panic!("expected feasible, got {other:?}"),
        }
        assert!(verify_certificate(&sys, &out));
        let bogus = FeasibilityOutcome::Infeasible {
            certificate: vec![int(1), int(1)],
        };
        assert!(!verify_certificate(&sys, &bogus));
    }

    #[test]
    fn sign_contradiction_is_infeasible() {
        let sys = LinearSystem::nonnegative(ints(&[&[1]]), vec![int(-1)]).unwrap();
        let out = solve_feasibility(&sys);
        assert_eq!(
            out,
            FeasibilityOutcome::Infeasible {
                certificate: vec![int(-1)]
            }
        );
        assert!(verify_certificate(&sys, &out));
    }

    #[test]
    fn equal_payoff_system_of_a_coordination_game() {
        // rows (2,-1) and (1,1) come from [[2,0],[0,1]]
        let sys =
            LinearSystem::nonnegative(ints(&[&[2, -1], &[1, 1]]), vec![int(0), int(1)]).unwrap();
        match solve_feasibility(&sys) {
            FeasibilityOutcome::Feasible { x, .. } => assert_eq!(x, vec![rat(1, 3), rat(2, 3)]),
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn free_variables_and_certificates() {
        // x free, x = -5 is fine
        let sys = LinearSystem::new(ints(&[&[1]]), vec![int(-5)], vec![false]).unwrap();
        let out = solve_feasibility(&sys);
        assert_eq!(
            out,
            FeasibilityOutcome::Feasible {
                x: vec![int(-5)],
                basis: vec![0]
            }
        );
        // x + y = 1, x + y = 2 with y free: infeasible, certificate must vanish on the free column
        let sys = LinearSystem::new(
            ints(&[&[1, 1], &[1, 1]]),
            vec![int(1), int(2)],
            vec![true, false],
        )
        .unwrap();
        let out = solve_feasibility(&sys);
        assert!(!out.is_feasible());
        assert!(verify_certificate(&sys, &out));
    }

    #[test]
    fn redundant_rows_are_tolerated() {
        let sys = LinearSystem::nonnegative(
            ints(&[&[1, 1, 0], &[2, 2, 0], &[0, 1, 1]]),
            vec![int(1), int(2), int(1)],
        )
        .unwrap();
        let out = solve_feasibility(&sys);
        assert!(out.is_feasible());
        assert!(verify_certificate(&sys, &out));
    }

    #[test]
    fn maximize_examples() {
        // variables x1, x2, t (free), s1, s2: x1 - t - s1 = 0, x2 - t - s2 = 0, x1 + x2 = 1, x1 - x2 = 0
        let sys = LinearSystem::new(
            ints(&[
                &[1, 0, -1, -1, 0],
                &[0, 1, -1, 0, -1],
                &[1, 1, 0, 0, 0],
                &[1, -1, 0, 0, 0],
            ]),
            vec![int(0), int(0), int(1), int(0)],
            vec![true, true, false, true, true],
        )
        .unwrap();
        let c = vec![int(0), int(0), int(1), int(0), int(0)];
        let out = maximize(&c, &sys).unwrap();
        match &out {
            OptimizationOutcome::Optimal { value, .. } => assert_eq!(value, &rat(1, 2)),
            other => panic!("expected optimum, got {other:?}"),
        }
        assert!(verify_optimal(&c, &sys, &out));

        // empty feasible set: x = -1, x ≥ 0
        let sys = LinearSystem::new(ints(&[&[1, 0]]), vec![int(-1)], vec![true, false]).unwrap();
        let out = maximize(&[int(0), int(1)], &sys).unwrap();
        assert!(matches!(out, OptimizationOutcome::Infeasible { .. }));
        assert!(verify_optimal(&[int(0), int(1)], &sys, &out));

        // x1 ≥ 0 only: x1 - s = 0
        let sys = LinearSystem::nonnegative(ints(&[&[1, -1]]), vec![int(0)]).unwrap();
        assert_eq!(
            maximize(&[int(1), int(0)], &sys).unwrap(),
            OptimizationOutcome::Unbounded
        );
    }

    #[test]
    fn malformed_inputs() {
        assert!(
            LinearSystem::new(ints(&[&[1, 2]]), vec![int(1), int(2)], vec![true, true]).is_err()
        );
        assert!(LinearSystem::new(ints(&[&[1, 2]]), vec![int(1)], vec![true]).is_err());
        let sys = LinearSystem::nonnegative(ints(&[&[1, 2]]), vec![int(1)]).unwrap();
        assert!(maximize(&[int(1)], &sys).is_err());
    }

    #[test]
    fn alternative_is_exclusive() {
        let sys =
            LinearSystem::nonnegative(ints(&[&[1, 0], &[0, 1]]), vec![int(1), int(1)]).unwrap();
        assert!(!solve_feasibility(&sys.alternative()).is_feasible());
        let sys = LinearSystem::nonnegative(ints(&[&[1]]), vec![int(-1)]).unwrap();
        assert!(solve_feasibility(&sys.alternative()).is_feasible());
    }

    #[test]
    fn degenerate_problem_terminates() {
        // A classic cycling example under the largest-coefficient rule (Beale).
        let m = vec![
            vec![rat(1, 4), int(-8), int(-1), int(9), int(1), int(0), int(0)],
            vec![
                rat(1, 2),
                int(-12),
                rat(-1, 2),
                int(3),
                int(0),
                int(1),
                int(0),
            ],
            vec![int(0), int(0), int(1), int(0), int(0), int(0), int(1)],
        ];
        let sys = LinearSystem::nonnegative(m, vec![int(0), int(0), int(1)]).unwrap();
        let c = vec![
            rat(3, 4),
            int(-20),
            rat(1, 2),
            int(-6),
            int(0),
            int(0),
            int(0),
        ];
        let out = maximize(&c, &sys).unwrap();
        match &out {
            OptimizationOutcome::Optimal { value, .. } => assert_eq!(value, &rat(5, 4)),
            other => panic!("expected optimum, got {other:?}"),
        }
        assert!(verify_optimal(&c, &sys, &out));
    }
}
