//! Payoff-difference matrices, the equal-payoff system and the half-space
//! cover test.
//!
//! For an `n × m` payoff matrix `A`, row `k` of the difference matrix `D` is
//! row `k` minus row `k+1` of `A`. An opponent mix `x` leaves the player
//! indifferent between all pure strategies iff `D̄x = b, x ≥ 0`, where `D̄` is
//! `D` with a row of ones appended and `b = (0, …, 0, 1)`. That system is
//! feasible iff no `w` has `wᵀD > 0`, i.e. iff the half spaces
//! `{v : vᵀd ≤ 0}` of the columns `d` of `D` cover the whole space. Both
//! sides are decided here by separate linear programs so they can be checked
//! against each other.
//!
//! A zero column of `D` lies in every half space and needs no special case.

use num_traits::{One, Signed, Zero};

use crate::lp::{self, FeasibilityOutcome, LinearSystem, OptimizationOutcome};
use crate::model::{dot, GameMatrix, MixedStrategy, Rational};
use crate::oracle;
use crate::{Error, Result};

/// Consecutive-row payoff differences, `(n-1) × m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceMatrix {
    rows: Vec<Vec<Rational>>,
    cols: usize,
}

impl DifferenceMatrix {
    /// Builds from explicit rows; zero rows are allowed (single-strategy player).
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        if cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::RaggedMatrix {
                row,
                expected: cols,
                found: r.len(),
            });
        }
        Ok(Self { rows, cols })
    }

    /// The difference matrix of a single-strategy player: no rows.
    pub fn empty(cols: usize) -> Result<Self> {
        Self::from_rows(Vec::new(), cols)
    }

    /// `n - 1`.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    /// `wᵀD`.
    pub fn left_apply(&self, w: &[Rational]) -> Vec<Rational> {
        (0..self.cols).map(|j| dot(w, &self.column(j))).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedSystem {
    pub dbar: Vec<Vec<Rational>>,
    pub b: Vec<Rational>,
}

impl AugmentedSystem {
    pub fn to_linear_system(&self) -> LinearSystem {
        LinearSystem::nonnegative(self.dbar.clone(), self.b.clone())
            .expect("augmented system is rectangular")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndifferenceOutcome {
    /// `A·x = (c, …, c)`.
    Indifferent { x: MixedStrategy, c: Rational },
    /// `wᵀD > 0` componentwise.
    NotPossible { w: Vec<Rational> },
}

impl IndifferenceOutcome {
    pub fn is_indifferent(&self) -> bool {
        matches!(self, IndifferenceOutcome::Indifferent { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub covered: bool,
    /// Present exactly when `covered` is false; `wᵀd > 0` for every column `d`.
    pub witness: Option<Vec<Rational>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NecessaryCondition {
    pub player1: bool,
    pub player2: bool,
}

pub fn difference_matrix(a: &GameMatrix) -> Result<DifferenceMatrix> {
    if a.rows() < 2 {
        return Err(Error::TooFewStrategies {
            needed: 2,
            found: a.rows(),
        });
    }
    let rows = (0..a.rows() - 1)
        .map(|k| {
            a.row(k)
                .iter()
                .zip(a.row(k + 1))
                .map(|(u, v)| u - v)
                .collect()
        })
        .collect();
    DifferenceMatrix::from_rows(rows, a.cols())
}

/// Difference matrix that degrades to the empty one for a single-row game.
fn differences_of(a: &GameMatrix) -> DifferenceMatrix {
    if a.rows() < 2 {
        DifferenceMatrix::empty(a.cols()).expect("matrix has columns")
    } else {
        difference_matrix(a).expect("matrix has two rows")
    }
}

pub fn augment(d: &DifferenceMatrix) -> AugmentedSystem {
    let mut dbar = d.rows.clone();
    dbar.push(vec![Rational::one(); d.cols]);
    let mut b = vec![Rational::zero(); d.dim()];
    b.push(Rational::one());
    AugmentedSystem { dbar, b }
}

/// Scales `w` by a positive factor so its first nonzero entry is `±1`.
fn normalize_witness(w: Vec<Rational>) -> Vec<Rational> {
    match w.iter().find(|v| !v.is_zero()) {
        Some(lead) => {
            let scale = lead.abs();
            w.iter().map(|v| v / &scale).collect()
        }
        None => w,
    }
}

/// Decides whether the player can be made indifferent between all pure
/// strategies. A single-strategy player is always indifferent.
pub fn solve_indifference(a: &GameMatrix) -> IndifferenceOutcome {
    let d = differences_of(a);
    let sys = augment(&d).to_linear_system();
    let out = lp::solve_feasibility(&sys);
    debug_assert!(lp::verify_certificate(&sys, &out));
    match out {
        FeasibilityOutcome::Feasible { x, .. } => {
            let payoffs = a.apply(&x).expect("x has one weight per column");
            let c = payoffs[0].clone();
            assert!(
                payoffs.iter().all(|p| *p == c),
                "equal-payoff solution is not indifferent"
            );
            let x = MixedStrategy::new(x).expect("feasible point is a mixed strategy");
            IndifferenceOutcome::Indifferent { x, c }
        }
        FeasibilityOutcome::Infeasible { certificate } => {
            // certificate v has vᵀD̄ ≤ 0 and v_n > 0, so its first n-1
            // entries satisfy wᵀD ≤ -v_n < 0; negate for wᵀD > 0.
            let w: Vec<Rational> = certificate[..d.dim()].iter().map(|v| -v).collect();
            let w = normalize_witness(w);
            assert!(
                d.left_apply(&w).iter().all(|v| v.is_positive()),
                "Farkas witness does not separate"
            );
            IndifferenceOutcome::NotPossible { w }
        }
    }
}

/// Decides whether the half spaces of the columns of `D` cover the space by
/// searching for `w` with `wᵀd ≥ 1` for every column `d`.
pub fn half_space_cover(d: &DifferenceMatrix) -> CoverReport {
    let k = d.dim();
    let m = d.cols();
    // variables: w (free, k), s (≥ 0, m); rows: wᵀd_j - s_j = 1
    let matrix = (0..m)
        .map(|j| {
            let mut row = d.column(j);
            row.resize(k + m, Rational::zero());
            row[k + j] = -Rational::one();
            row
        })
        .collect();
    let mut nonneg = vec![false; k];
    nonneg.resize(k + m, true);
    let sys = LinearSystem::new(matrix, vec![Rational::one(); m], nonneg)
        .expect("cover system is rectangular");
    match lp::solve_feasibility(&sys) {
        FeasibilityOutcome::Feasible { x, .. } => {
            let w = normalize_witness(x[..k].to_vec());
            assert!(d.left_apply(&w).iter().all(|v| v.is_positive()));
            CoverReport {
                covered: false,
                witness: Some(w),
            }
        }
        FeasibilityOutcome::Infeasible { .. } => CoverReport {
            covered: true,
            witness: None,
        },
    }
}

/// Finds an indifference-inducing opponent mix maximizing its smallest
/// weight `t`. Returns `None` unless the optimum `t*` is strictly positive.
pub fn positive_indifference(a: &GameMatrix) -> Option<(MixedStrategy, Rational)> {
    let d = differences_of(a);
    let k = d.dim();
    let m = a.cols();
    // variables: x (≥ 0, m), t (free), s (≥ 0, m)
    let width = 2 * m + 1;
    let mut matrix = Vec::with_capacity(k + 1 + m);
    for row in d.rows() {
        let mut r = row.clone();
        r.resize(width, Rational::zero());
        matrix.push(r);
    }
    let mut ones = vec![Rational::one(); m];
    ones.resize(width, Rational::zero());
    matrix.push(ones);
    for i in 0..m {
        let mut r = vec![Rational::zero(); width];
        r[i] = Rational::one();
        r[m] = -Rational::one();
        r[m + 1 + i] = -Rational::one();
        matrix.push(r);
    }
    let mut rhs = vec![Rational::zero(); k];
    rhs.push(Rational::one());
    rhs.resize(k + 1 + m, Rational::zero());
    let mut nonneg = vec![true; width];
    nonneg[m] = false;
    let sys = LinearSystem::new(matrix, rhs, nonneg).expect("positivity system is rectangular");
    let mut objective = vec![Rational::zero(); width];
    objective[m] = Rational::one();

    match lp::maximize(&objective, &sys).expect("objective matches system") {
        OptimizationOutcome::Optimal { x, value, .. } if value.is_positive() => {
            let x =
                MixedStrategy::new(x[..m].to_vec()).expect("feasible point is a mixed strategy");
            debug_assert!(x.is_completely_mixed());
            Some((x, value))
        }
        OptimizationOutcome::Unbounded => unreachable!("t is bounded by 1/m"),
        _ => None,
    }
}

fn check_bimatrix_dims(a1: &GameMatrix, a2: &GameMatrix) -> Result<()> {
    if a1.rows() != a2.cols() || a1.cols() != a2.rows() {
        return Err(Error::DimensionMismatch(format!(
            "player 1 is {}x{} but player 2 is {}x{}; expected {}x{}",
            a1.rows(),
            a1.cols(),
            a2.rows(),
            a2.cols(),
            a1.cols(),
            a1.rows()
        )));
    }
    Ok(())
}

/// Cover flags for both players. `a1` is `n1 × n2`, `a2` is `n2 × n1` with
/// player 2's own strategies as rows.
pub fn necessary_condition(a1: &GameMatrix, a2: &GameMatrix) -> Result<NecessaryCondition> {
    check_bimatrix_dims(a1, a2)?;
    Ok(NecessaryCondition {
        player1: half_space_cover(&differences_of(a1)).covered,
        player2: half_space_cover(&differences_of(a2)).covered,
    })
}

/// A completely mixed Nash equilibrium `(x, y)`, with `x` player 1's mix, if
/// one exists. Each player's mix comes from making the other strictly
/// positively indifferent.
pub fn completely_mixed_equilibrium(
    a1: &GameMatrix,
    a2: &GameMatrix,
) -> Result<Option<(MixedStrategy, MixedStrategy)>> {
    check_bimatrix_dims(a1, a2)?;
    let Some((y, _)) = positive_indifference(a1) else {
        return Ok(None);
    };
    let Some((x, _)) = positive_indifference(a2) else {
        return Ok(None);
    };
    assert!(
        oracle::best_reply_check(a1, a2, &x, &y)?,
        "completely mixed profile failed the best-reply check"
    );
    Ok(Some((x, y)))
}
