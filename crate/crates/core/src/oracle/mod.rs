//! Brute-force ground truth for small games: strict dominance by mixtures and
//! Nash equilibria by support enumeration.
//!
//! Within a support the equal-payoff equations are solved directly by exact
//! Gaussian elimination, not through the simplex path the rest of the crate
//! relies on. Only singular support systems fall back to a linear program to
//! pick a representative of the solution set.
//!
//! Degenerate games are flagged, not resolved: a singular support system, an
//! off-support best reply tied with the support payoff, or (for bimatrix
//! games) an equilibrium whose two supports differ in size all set
//! `degenerate`, and uniqueness claims should not be read off such a set.

mod linsolve;

use num_traits::{One, Signed, Zero};

use crate::lp::{self, LinearSystem, OptimizationOutcome};
use crate::model::{dot, GameMatrix, MixedStrategy, Rational};
use crate::{Error, Result};
use linsolve::Solution;

/// Largest strategy count the support enumeration accepts.
pub const ENUMERATION_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceResult {
    pub dominated: usize,
    /// Mixture over the other strategies; weight zero on `dominated`.
    pub dominator: MixedStrategy,
    /// The dominator beats `dominated` by at least this much against every
    /// opponent pure strategy.
    pub margin: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equilibrium {
    /// One support per listed strategy, ascending indices.
    pub supports: Vec<Vec<usize>>,
    /// `[x]` for a symmetric equilibrium, `[x, y]` for a bimatrix one.
    pub profile: Vec<MixedStrategy>,
    pub completely_mixed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EquilibriumSet {
    pub equilibria: Vec<Equilibrium>,
    pub degenerate: bool,
}

impl EquilibriumSet {
    pub fn len(&self) -> usize {
        self.equilibria.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equilibria.is_empty()
    }

    pub fn completely_mixed(&self) -> impl Iterator<Item = &Equilibrium> {
        self.equilibria.iter().filter(|e| e.completely_mixed)
    }

    /// Exactly one equilibrium and it is completely mixed.
    pub fn unique_completely_mixed(&self) -> bool {
        self.len() == 1 && self.equilibria[0].completely_mixed
    }
}

/// Searches for a mixture of the other rows that beats row `i` against every
/// column, maximizing the worst-case margin.
pub fn strictly_dominated(a: &GameMatrix, i: usize) -> Result<Option<DominanceResult>> {
    let n = a.rows();
    let m = a.cols();
    if n < 2 {
        return Err(Error::TooFewStrategies {
            needed: 2,
            found: n,
        });
    }
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, count: n });
    }
    let others: Vec<usize> = (0..n).filter(|&k| k != i).collect();
    // variables: p (≥ 0, n-1), margin (free), s (≥ 0, m)
    let width = others.len() + 1 + m;
    let margin_col = others.len();
    let mut matrix = Vec::with_capacity(m + 1);
    let mut rhs = Vec::with_capacity(m + 1);
    for j in 0..m {
        let mut row: Vec<Rational> = others.iter().map(|&k| a.get(k, j).clone()).collect();
        row.push(-Rational::one());
        row.resize(width, Rational::zero());
        row[margin_col + 1 + j] = -Rational::one();
        matrix.push(row);
        rhs.push(a.get(i, j).clone());
    }
    let mut sum = vec![Rational::one(); others.len()];
    sum.resize(width, Rational::zero());
    matrix.push(sum);
    rhs.push(Rational::one());
    let mut nonneg = vec![true; width];
    nonneg[margin_col] = false;
    let sys = LinearSystem::new(matrix, rhs, nonneg).expect("dominance system is rectangular");
    let mut objective = vec![Rational::zero(); width];
    objective[margin_col] = Rational::one();

    match lp::maximize(&objective, &sys)? {
        OptimizationOutcome::Optimal { x, value, .. } if value.is_positive() => {
            let mut weights = vec![Rational::zero(); n];
            for (w, &k) in x.iter().zip(&others) {
                weights[k] = w.clone();
            }
            let dominator = MixedStrategy::new(weights).expect("feasible mixture");
            for j in 0..m {
                let mixed: Rational = (0..n).map(|k| &dominator.weights()[k] * a.get(k, j)).sum();
                assert!(
                    mixed - a.get(i, j) >= value,
                    "dominance margin does not hold"
                );
            }
            Ok(Some(DominanceResult {
                dominated: i,
                dominator,
                margin: value,
            }))
        }
        OptimizationOutcome::Unbounded => unreachable!("margin is bounded by payoff range"),
        _ => Ok(None),
    }
}

/// No pure deviation improves either player's payoff. `a1` is `n1 × n2`,
/// `a2` is `n2 × n1`; `x` is player 1's mix, `y` player 2's.
pub fn best_reply_check(
    a1: &GameMatrix,
    a2: &GameMatrix,
    x: &MixedStrategy,
    y: &MixedStrategy,
) -> Result<bool> {
    if a1.rows() != a2.cols() || a1.cols() != a2.rows() {
        return Err(Error::DimensionMismatch(format!(
            "payoff matrices {}x{} and {}x{} are not transposed shapes",
            a1.rows(),
            a1.cols(),
            a2.rows(),
            a2.cols()
        )));
    }
    if x.len() != a1.rows() || y.len() != a1.cols() {
        return Err(Error::DimensionMismatch(format!(
            "profile lengths ({}, {}) for a {}x{} game",
            x.len(),
            y.len(),
            a1.rows(),
            a1.cols()
        )));
    }
    let no_better = |a: &GameMatrix, own: &MixedStrategy, other: &MixedStrategy| {
        let payoffs = a.apply(other.weights()).expect("dimensions checked");
        let value = dot(own.weights(), &payoffs);
        payoffs.iter().all(|p| *p <= value)
    };
    Ok(no_better(a1, x, y) && no_better(a2, y, x))
}

/// Non-empty subsets of `0..n`, by size then lexicographically.
fn supports(n: usize) -> Vec<Vec<usize>> {
    fn extend(
        start: usize,
        n: usize,
        k: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            extend(i + 1, n, k, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    for k in 1..=n {
        extend(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// The mixing player's side of a support pair.
enum Side {
    Empty,
    Point {
        weights: Vec<Rational>,
        tie: bool,
    },
    /// Singular system; `weights` is a representative maximizing the smallest weight.
    Continuum {
        weights: Option<Vec<Rational>>,
    },
}

/// Finds a mix over columns `mix` that makes the row player (matrix `a`)
/// indifferent over rows `own`, with no row outside `own` doing strictly
/// better. Weights are indexed like `mix` and must all be positive.
fn solve_side(a: &GameMatrix, own: &[usize], mix: &[usize]) -> Side {
    let k = mix.len();
    // unknowns: weights (k), value
    let mut matrix = Vec::with_capacity(own.len() + 1);
    for &i in own {
        let mut row: Vec<Rational> = mix.iter().map(|&j| a.get(i, j).clone()).collect();
        row.push(-Rational::one());
        matrix.push(row);
    }
    let mut sum = vec![Rational::one(); k];
    sum.push(Rational::zero());
    matrix.push(sum);
    let mut rhs = vec![Rational::zero(); own.len()];
    rhs.push(Rational::one());

    let off: Vec<usize> = (0..a.rows()).filter(|i| !own.contains(i)).collect();
    let off_payoff = |i: usize, w: &[Rational]| -> Rational {
        mix.iter().zip(w).map(|(&j, wj)| a.get(i, j) * wj).sum()
    };

    match linsolve::solve(matrix, rhs) {
        Solution::Inconsistent => Side::Empty,
        Solution::Unique(z) => {
            let (weights, value) = z.split_at(k);
            let value = &value[0];
            if weights.iter().any(|w| !w.is_positive()) {
                return Side::Empty;
            }
            let mut tie = false;
            for &i in &off {
                let p = off_payoff(i, weights);
                if &p > value {
                    return Side::Empty;
                }
                tie |= &p == value;
            }
            Side::Point {
                weights: weights.to_vec(),
                tie,
            }
        }
        Solution::Multiple => Side::Continuum {
            weights: max_min_weight(a, own, mix, &off),
        },
    }
}

/// Linear-programming fallback for singular support systems.
fn max_min_weight(
    a: &GameMatrix,
    own: &[usize],
    mix: &[usize],
    off: &[usize],
) -> Option<Vec<Rational>> {
    let k = mix.len();
    // variables: w (≥ 0, k), value (free), t (free), s (≥ 0, k), r (≥ 0, |off|)
    let value_col = k;
    let t_col = k + 1;
    let width = 2 * k + 2 + off.len();
    let mut matrix = Vec::new();
    let mut rhs = Vec::new();
    for &i in own {
        let mut row: Vec<Rational> = mix.iter().map(|&j| a.get(i, j).clone()).collect();
        row.resize(width, Rational::zero());
        row[value_col] = -Rational::one();
        matrix.push(row);
        rhs.push(Rational::zero());
    }
    let mut sum = vec![Rational::one(); k];
    sum.resize(width, Rational::zero());
    matrix.push(sum);
    rhs.push(Rational::one());
    for q in 0..k {
        let mut row = vec![Rational::zero(); width];
        row[q] = Rational::one();
        row[t_col] = -Rational::one();
        row[t_col + 1 + q] = -Rational::one();
        matrix.push(row);
        rhs.push(Rational::zero());
    }
    for (q, &i) in off.iter().enumerate() {
        let mut row: Vec<Rational> = mix.iter().map(|&j| a.get(i, j).clone()).collect();
        row.resize(width, Rational::zero());
        row[value_col] = -Rational::one();
        row[2 * k + 2 + q] = Rational::one();
        matrix.push(row);
        rhs.push(Rational::zero());
    }
    let mut nonneg = vec![true; width];
    nonneg[value_col] = false;
    nonneg[t_col] = false;
    let sys = LinearSystem::new(matrix, rhs, nonneg).expect("support system is rectangular");
    let mut objective = vec![Rational::zero(); width];
    objective[t_col] = Rational::one();
    match lp::maximize(&objective, &sys).expect("objective matches system") {
        OptimizationOutcome::Optimal { x, value, .. } if value.is_positive() => {
            Some(x[..k].to_vec())
        }
        _ => None,
    }
}

fn spread(n: usize, support: &[usize], weights: &[Rational]) -> MixedStrategy {
    let mut full = vec![Rational::zero(); n];
    for (&i, w) in support.iter().zip(weights) {
        full[i] = w.clone();
    }
    MixedStrategy::new(full).expect("support weights form a mixed strategy")
}

fn check_cap(count: usize) -> Result<()> {
    if count > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            count,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}

/// All symmetric equilibria `(x, x)` of a symmetric game.
pub fn symmetric_equilibria(a: &GameMatrix) -> Result<EquilibriumSet> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = a.rows();
    check_cap(n)?;
    let mut set = EquilibriumSet::default();
    for support in supports(n) {
        let weights = match solve_side(a, &support, &support) {
            Side::Empty => continue,
            Side::Point { weights, tie } => {
                set.degenerate |= tie;
                weights
            }
            Side::Continuum { weights } => {
                set.degenerate = true;
                match weights {
                    Some(w) => w,
                    None => continue,
                }
            }
        };
        let x = spread(n, &support, &weights);
        debug_assert!(best_reply_check(a, a, &x, &x).unwrap());
        set.equilibria.push(Equilibrium {
            completely_mixed: support.len() == n,
            supports: vec![support],
            profile: vec![x],
        });
    }
    Ok(set)
}

/// All equilibria of a bimatrix game found by support-pair enumeration.
/// `a1` is `n1 × n2`; `a2` is `n2 × n1` with player 2's strategies as rows.
pub fn bimatrix_equilibria(a1: &GameMatrix, a2: &GameMatrix) -> Result<EquilibriumSet> {
    if a1.rows() != a2.cols() || a1.cols() != a2.rows() {
        return Err(Error::DimensionMismatch(format!(
            "player 1 is {}x{} but player 2 is {}x{}",
            a1.rows(),
            a1.cols(),
            a2.rows(),
            a2.cols()
        )));
    }
    let (n1, n2) = (a1.rows(), a1.cols());
    check_cap(n1)?;
    check_cap(n2)?;
    let mut set = EquilibriumSet::default();
    let supports1 = supports(n1);
    let supports2 = supports(n2);
    for s1 in &supports1 {
        for s2 in &supports2 {
            // y on s2 keeps player 1 indifferent on s1, and vice versa
            let y_side = solve_side(a1, s1, s2);
            if matches!(y_side, Side::Empty) {
                continue;
            }
            let x_side = solve_side(a2, s2, s1);
            let mut degenerate = s1.len() != s2.len();
            let mut pick = |side: Side| match side {
                Side::Empty => None,
                Side::Point { weights, tie } => {
                    degenerate |= tie;
                    Some(weights)
                }
                Side::Continuum { weights } => {
                    degenerate = true;
                    weights
                }
            };
            let (Some(xw), Some(yw)) = (pick(x_side), pick(y_side)) else {
                continue;
            };
            set.degenerate |= degenerate;
            let x = spread(n1, s1, &xw);
            let y = spread(n2, s2, &yw);
            debug_assert!(best_reply_check(a1, a2, &x, &y).unwrap());
            set.equilibria.push(Equilibrium {
                completely_mixed: s1.len() == n1 && s2.len() == n2,
                supports: vec![s1.clone(), s2.clone()],
                profile: vec![x, y],
            });
        }
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{int, rat};

    fn ints(rows: &[&[i64]]) -> GameMatrix {
        GameMatrix::from_ints(rows).unwrap()
    }

    fn sym(rows: Vec<Vec<Rational>>) -> GameMatrix {
        GameMatrix::symmetric(rows).unwrap()
    }

    fn rps() -> GameMatrix {
        GameMatrix::symmetric_from_ints(&[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]]).unwrap()
    }

    fn pennies() -> (GameMatrix, GameMatrix) {
        let a1 = ints(&[&[1, -1], &[-1, 1]]);
        let a2 = a1.transpose().map(|_, _, v| -v);
        (a1, a2)
    }

    fn strategy(w: &[Rational]) -> MixedStrategy {
        MixedStrategy::new(w.to_vec()).unwrap()
    }

    #[test]
    fn support_order() {
        let s = supports(3);
        assert_eq!(
            s,
            vec![
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 1, 2]
            ]
        );
        assert_eq!(supports(4).len(), 15);
    }

    #[test]
    fn pure_dominance() {
        let d = strictly_dominated(&ints(&[&[1, 1], &[0, 0]]), 1)
            .unwrap()
            .unwrap();
        assert_eq!(d.dominated, 1);
        assert_eq!(d.dominator.weights(), &[int(1), int(0)]);
        assert_eq!(d.margin, int(1));
        assert_eq!(
            strictly_dominated(&ints(&[&[1, 1], &[0, 0]]), 0).unwrap(),
            None
        );
    }

    #[test]
    fn mixture_dominance_in_a2_pattern() {
        // a1 + a3 < 1: strategy 2 is beaten by a mix of 1 and 3
        let (a1, a2, a3) = (rat(1, 4), rat(1, 2), rat(1, 4));
        let a = sym(vec![
            vec![int(0), int(1), int(1)],
            vec![a1, int(0), a3],
            vec![int(1), a2, int(0)],
        ]);
        let d = strictly_dominated(&a, 1).unwrap().unwrap();
        assert_eq!(d.dominator.support(), vec![0, 2]);
        assert!(d.margin.is_positive());
        for i in 0..3 {
            if i != 1 {
                assert_eq!(strictly_dominated(&a, i).unwrap(), None);
            }
        }
    }

    #[test]
    fn nothing_dominated_in_rps() {
        for i in 0..3 {
            assert_eq!(strictly_dominated(&rps(), i).unwrap(), None);
        }
    }

    #[test]
    fn dominance_errors() {
        assert!(matches!(
            strictly_dominated(&ints(&[&[1, 2]]), 0),
            Err(Error::TooFewStrategies { .. })
        ));
        assert!(matches!(
            strictly_dominated(&rps(), 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn best_reply_examples() {
        let (a1, a2) = pennies();
        let half = strategy(&[rat(1, 2), rat(1, 2)]);
        assert!(best_reply_check(&a1, &a2, &half, &half).unwrap());
        let first = MixedStrategy::pure(2, 0).unwrap();
        assert!(!best_reply_check(&a1, &a2, &first, &first).unwrap());
        let third = MixedStrategy::uniform(3).unwrap();
        assert!(best_reply_check(&rps(), &rps(), &third, &third).unwrap());
        assert!(best_reply_check(&a1, &a2, &third, &half).is_err());
    }

    #[test]
    fn rps_has_one_symmetric_equilibrium() {
        let set = symmetric_equilibria(&rps()).unwrap();
        assert!(!set.degenerate);
        assert!(set.unique_completely_mixed());
        assert_eq!(
            set.equilibria[0].profile[0].weights(),
            &[rat(1, 3), rat(1, 3), rat(1, 3)]
        );
    }

    #[test]
    fn coordination_has_three_symmetric_equilibria() {
        let a = GameMatrix::symmetric_from_ints(&[&[1, 0], &[0, 1]]).unwrap();
        let set = symmetric_equilibria(&a).unwrap();
        let profiles: Vec<_> = set
            .equilibria
            .iter()
            .map(|e| e.profile[0].weights().to_vec())
            .collect();
        assert_eq!(
            profiles,
            vec![
                vec![int(1), int(0)],
                vec![int(0), int(1)],
                vec![rat(1, 2), rat(1, 2)]
            ]
        );
        assert!(!set.degenerate);
    }

    #[test]
    fn a4_pattern_has_unique_mixed_equilibrium() {
        // hand enumeration: pure candidates fail (each diagonal is below its
        // column max), {1,2} mix loses to 3 since a1 + a2 > 1, {1,3} needs
        // a1 + a3 ≥ 1, {2,3} is never indifferent with 1 better.
        let a = sym(vec![
            vec![int(0), int(1), int(1)],
            vec![int(1), int(0), int(0)],
            vec![rat(1, 2), rat(3, 4), rat(1, 4)],
        ]);
        let set = symmetric_equilibria(&a).unwrap();
        assert!(set.unique_completely_mixed(), "{set:?}");
        // rows 1 and 2 give x1 = x2 + x3 = 1/2; row 3 then gives 3·x2 + x3 = 1
        assert_eq!(
            set.equilibria[0].profile[0].weights(),
            &[rat(1, 2), rat(1, 4), rat(1, 4)]
        );
    }

    #[test]
    fn symmetric_requires_flag_and_cap() {
        assert_eq!(
            symmetric_equilibria(&ints(&[&[1, 0], &[0, 1]])),
            Err(Error::NotSymmetric)
        );
        let big = GameMatrix::symmetric(vec![vec![int(0); 5]; 5]).unwrap();
        assert!(matches!(
            symmetric_equilibria(&big),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn all_tied_game_is_degenerate() {
        let a = GameMatrix::symmetric_from_ints(&[&[1, 1], &[1, 1]]).unwrap();
        let set = symmetric_equilibria(&a).unwrap();
        assert!(set.degenerate);
        assert!(set.len() >= 3);
    }

    #[test]
    fn pennies_bimatrix() {
        let (a1, a2) = pennies();
        let set = bimatrix_equilibria(&a1, &a2).unwrap();
        assert_eq!(set.len(), 1);
        assert!(set.equilibria[0].completely_mixed);
        let half = vec![rat(1, 2), rat(1, 2)];
        assert_eq!(set.equilibria[0].profile[0].weights(), half.as_slice());
        assert_eq!(set.equilibria[0].profile[1].weights(), half.as_slice());
    }

    #[test]
    fn dominance_solvable_bimatrix() {
        let pd = ints(&[&[3, 0], &[5, 1]]);
        let set = bimatrix_equilibria(&pd, &pd).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(set.equilibria[0].supports, vec![vec![1], vec![1]]);
        assert!(!set.degenerate);
    }

    #[test]
    fn battle_of_the_sexes() {
        let a1 = ints(&[&[2, 0], &[0, 1]]);
        let a2 = ints(&[&[1, 0], &[0, 2]]);
        let set = bimatrix_equilibria(&a1, &a2).unwrap();
        assert!(!set.degenerate);
        assert_eq!(set.len(), 3);
        let mixed: Vec<_> = set.completely_mixed().collect();
        assert_eq!(mixed.len(), 1);
        assert_eq!(mixed[0].profile[0].weights(), &[rat(2, 3), rat(1, 3)]);
        assert_eq!(mixed[0].profile[1].weights(), &[rat(1, 3), rat(2, 3)]);
        let pure: Vec<_> = set
            .equilibria
            .iter()
            .filter(|e| !e.completely_mixed)
            .map(|e| e.supports.clone())
            .collect();
        assert_eq!(pure, vec![vec![vec![0], vec![0]], vec![vec![1], vec![1]]]);
    }

    #[test]
    fn bimatrix_dimension_errors() {
        let a = ints(&[&[1, 2, 3]]);
        assert!(bimatrix_equilibria(&a, &a).is_err());
        let big = ints(&[&[0, 0, 0, 0, 0]]);
        assert!(matches!(
            bimatrix_equilibria(&big, &big.transpose()),
            Err(Error::TooLarge { .. })
        ));
    }
}
