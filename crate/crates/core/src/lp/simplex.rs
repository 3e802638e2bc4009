//! Dense two-phase tableau simplex over exact rationals with Bland's rule.
//!
//! Free variables are split into a positive and a negative part. Rows with a
//! negative right-hand side are negated so the origin of the artificial
//! variables is a feasible start. Every row that already owns a unit column
//! uses it as its initial basic variable; only the remaining rows get an
//! artificial. The initial basis is the identity, so the columns of those
//! initial basic variables carry `B⁻¹` at every step, which is where both
//! the Farkas certificate and the optimal dual are read from.

use num_traits::{One, Signed, Zero};

use super::LinearSystem;
use crate::model::Rational;

pub(super) enum Outcome {
    Optimal {
        x: Vec<Rational>,
        basis: Vec<usize>,
        value: Rational,
        dual: Vec<Rational>,
    },
    Unbounded,
    Infeasible {
        certificate: Vec<Rational>,
    },
}

/// A structural tableau column: which original variable, and whether it is
/// the negative half of a split free variable.
#[derive(Clone, Copy)]
struct Source {
    var: usize,
    negated: bool,
}

struct Tableau {
    /// `rows × (width + 1)`; the last entry of each row is the right-hand side.
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    initial_basis: Vec<usize>,
    structural: usize,
    flipped: Vec<bool>,
}

enum Step {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn build(sys: &LinearSystem, sources: &[Source]) -> Tableau {
        let rows = sys.rows();
        let structural = sources.len();
        let flipped: Vec<bool> = sys.rhs().iter().map(|b| b.is_negative()).collect();
        let coeff = |i: usize, s: &Source| {
            let v = &sys.matrix()[i][s.var];
            if s.negated != flipped[i] {
                -v
            } else {
                v.clone()
            }
        };
        let is_unit_in = |k: usize, i: usize| {
            (0..rows).all(|r| {
                let v = coeff(r, &sources[k]);
                if r == i {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
        };

        let mut basis = Vec::with_capacity(rows);
        let mut artificials = 0;
        for i in 0..rows {
            match (0..structural).find(|&k| !basis.contains(&k) && is_unit_in(k, i)) {
                Some(k) => basis.push(k),
                None => {
                    basis.push(structural + artificials);
                    artificials += 1;
                }
            }
        }

        let width = structural + artificials;
        let t = (0..rows)
            .map(|i| {
                let mut row: Vec<Rational> = sources.iter().map(|s| coeff(i, s)).collect();
                row.resize(width, Rational::zero());
                if basis[i] >= structural {
                    row[basis[i]] = Rational::one();
                }
                let b = &sys.rhs()[i];
                row.push(if flipped[i] { -b } else { b.clone() });
                row
            })
            .collect();

        Tableau {
            t,
            initial_basis: basis.clone(),
            basis,
            structural,
            flipped,
        }
    }

    fn width(&self) -> usize {
        self.t.first().map_or(self.structural, |r| r.len() - 1)
    }

    fn has_artificials(&self) -> bool {
        self.width() > self.structural
    }

    fn objective(&self, cost: &[Rational]) -> Rational {
        self.t
            .iter()
            .zip(&self.basis)
            .map(|(row, &b)| &cost[b] * row.last().unwrap())
            .sum()
    }

    /// `c_Bᵀ B⁻¹` in the sign convention of the original (unflipped) rows.
    fn multipliers(&self, cost: &[Rational]) -> Vec<Rational> {
        self.initial_basis
            .iter()
            .zip(&self.flipped)
            .map(|(&col, &flip)| {
                let y: Rational = self
                    .t
                    .iter()
                    .zip(&self.basis)
                    .map(|(row, &b)| &cost[b] * &row[col])
                    .sum();
                if flip {
                    -y
                } else {
                    y
                }
            })
            .collect()
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.t[row][col].clone();
        for v in self.t[row].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.t[row].clone();
        for (r, other) in self.t.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (v, pv) in other.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Minimizes `costᵀx` over structural entering columns, Bland's rule.
    fn minimize(&mut self, cost: &[Rational]) -> Step {
        loop {
            let entering = (0..self.structural).find(|&k| {
                if self.basis.contains(&k) {
                    return false;
                }
                let reduced: Rational = &cost[k]
                    - self
                        .t
                        .iter()
                        .zip(&self.basis)
                        .map(|(row, &b)| &cost[b] * &row[k])
                        .sum::<Rational>();
                reduced.is_negative()
            });
            let Some(k) = entering else {
                return Step::Optimal;
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for (i, row) in self.t.iter().enumerate() {
                if !row[k].is_positive() {
                    continue;
                }
                let ratio = row.last().unwrap() / &row[k];
                let better = match &leaving {
                    None => true,
                    Some((j, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*j])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((i, _)) = leaving else {
                return Step::Unbounded;
            };
            self.pivot(i, k);
        }
    }

    /// After a zero-cost phase I, pivots artificials out of the basis where a
    /// structural column allows it. Rows where none does are redundant and
    /// keep their artificial at zero.
    fn expel_artificials(&mut self) {
        for i in 0..self.t.len() {
            if self.basis[i] < self.structural {
                continue;
            }
            if let Some(k) = (0..self.structural).find(|&k| !self.t[i][k].is_zero()) {
                self.pivot(i, k);
            }
        }
    }

    fn expanded_solution(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.width()];
        for (row, &b) in self.t.iter().zip(&self.basis) {
            x[b] = row.last().unwrap().clone();
        }
        x
    }
}

pub(super) fn run(sys: &LinearSystem, objective: Option<&[Rational]>) -> Outcome {
    let mut sources = Vec::with_capacity(sys.cols() * 2);
    for var in 0..sys.cols() {
        sources.push(Source {
            var,
            negated: false,
        });
        if !sys.is_nonneg(var) {
            sources.push(Source { var, negated: true });
        }
    }
    let mut tab = Tableau::build(sys, &sources);

    if tab.has_artificials() {
        let phase1: Vec<Rational> = (0..tab.width())
            .map(|k| {
                if k >= tab.structural {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        match tab.minimize(&phase1) {
            Step::Optimal => {}
            Step::Unbounded => unreachable!("phase I objective is bounded below by zero"),
        }
        if tab.objective(&phase1).is_positive() {
            return Outcome::Infeasible {
                certificate: tab.multipliers(&phase1),
            };
        }
        tab.expel_artificials();
    }

    // phase II minimizes the negated objective
    let cost: Vec<Rational> = (0..tab.width())
        .map(|k| match (objective, sources.get(k)) {
            (Some(c), Some(s)) if s.negated => c[s.var].clone(),
            (Some(c), Some(s)) => -&c[s.var],
            _ => Rational::zero(),
        })
        .collect();
    if objective.is_some() {
        if let Step::Unbounded = tab.minimize(&cost) {
            return Outcome::Unbounded;
        }
    }

    let expanded = tab.expanded_solution();
    let mut x = vec![Rational::zero(); sys.cols()];
    for (s, v) in sources.iter().zip(&expanded) {
        if s.negated {
            x[s.var] -= v;
        } else {
            x[s.var] += v;
        }
    }
    let mut basis: Vec<usize> = tab
        .basis
        .iter()
        .filter(|&&b| b < tab.structural)
        .map(|&b| sources[b].var)
        .collect();
    basis.dedup();
    let value = -tab.objective(&cost);
    let dual = tab.multipliers(&cost).into_iter().map(|y| -y).collect();
    Outcome::Optimal {
        x,
        basis,
        value,
        dual,
    }
}
