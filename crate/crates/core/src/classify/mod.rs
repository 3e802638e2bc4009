//! Classification of generic symmetric 3×3 games into the six classes that
//! have a unique symmetric equilibrium which is completely mixed.
//!
//! A game is first normalized column by column so every column has minimum 0
//! and maximum 1. Per-column positive affine maps change neither best replies
//! nor the directions of the payoff-difference columns. The normalized
//! matrix is then matched against each class pattern under all six
//! relabelings.

mod adjacency;
mod patterns;

pub use adjacency::{adjacency, AdjacencyEdge, AdjacencyGraph};
pub use patterns::{class_of_pattern, in_closure, pattern_matches, ClassId, Membership};

use num_traits::One;

use crate::model::{GameMatrix, Permutation, Rational};
use crate::oracle::{self, DominanceResult};
use crate::{Error, Result};

/// Column `j` of the source maps to `(e - shift) / scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnTransform {
    pub shift: Rational,
    pub scale: Rational,
}

impl ColumnTransform {
    pub fn is_identity(&self) -> bool {
        use num_traits::Zero;
        self.shift.is_zero() && self.scale.is_one()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedMatrix {
    pub matrix: GameMatrix,
    pub transforms: Vec<ColumnTransform>,
}

impl NormalizedMatrix {
    /// Maps the normalized entries back through the recorded transforms.
    pub fn lift(&self) -> GameMatrix {
        self.matrix
            .map(|_, c, v| v * &self.transforms[c].scale + &self.transforms[c].shift)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    /// Columns (0-based) with a repeated entry.
    NonGeneric {
        columns: Vec<usize>,
    },
    /// Strategies whose diagonal entry is their column maximum: each is a
    /// symmetric pure equilibrium.
    PureSymmetricEquilibrium {
        strategies: Vec<usize>,
    },
    DominatedStrategy(DominanceResult),
    /// The pattern of each listed class matched but its inequality failed.
    ConditionViolated {
        candidates: Vec<ClassId>,
    },
    /// No class pattern matches under any relabeling and nothing is strictly
    /// dominated.
    NoClassPattern,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Classified {
        class: ClassId,
        permutation: Permutation,
        params: [Rational; 3],
    },
    Rejected(RejectReason),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    /// Absent only for non-generic input.
    pub normalized: Option<NormalizedMatrix>,
    pub outcome: Classification,
}

impl ClassificationReport {
    pub fn class(&self) -> Option<ClassId> {
        match &self.outcome {
            Classification::Classified { class, .. } => Some(*class),
            Classification::Rejected(_) => None,
        }
    }

    pub fn is_rejected(&self) -> bool {
        matches!(self.outcome, Classification::Rejected(_))
    }
}

fn require_symmetric_3x3(a: &GameMatrix) -> Result<()> {
    if a.rows() != 3 || a.cols() != 3 {
        return Err(Error::WrongShape {
            expected: "3x3",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(())
}

/// Columns (0-based) in which two entries coincide.
pub fn non_generic_columns(a: &GameMatrix) -> Vec<usize> {
    (0..a.cols())
        .filter(|&c| {
            let col = a.column(c);
            (0..col.len()).any(|i| (i + 1..col.len()).any(|j| col[i] == col[j]))
        })
        .collect()
}

/// Within every column all three entries are pairwise distinct.
pub fn check_generic(a: &GameMatrix) -> Result<bool> {
    require_symmetric_3x3(a)?;
    Ok(non_generic_columns(a).is_empty())
}

/// Maps every column affinely onto `[0, 1]`. Works for any shape with at
/// least two rows; every column needs pairwise distinct entries.
pub fn normalize(a: &GameMatrix) -> Result<NormalizedMatrix> {
    let bad = non_generic_columns(a);
    if !bad.is_empty() || a.rows() < 2 {
        return Err(Error::NonGeneric { columns: bad });
    }
    let transforms: Vec<ColumnTransform> = (0..a.cols())
        .map(|c| {
            let col = a.column(c);
            let lo = col.iter().min().unwrap().clone();
            let hi = col.iter().max().unwrap().clone();
            ColumnTransform {
                scale: hi - &lo,
                shift: lo,
            }
        })
        .collect();
    let matrix = a.map(|_, c, v| (v - &transforms[c].shift) / &transforms[c].scale);
    Ok(NormalizedMatrix { matrix, transforms })
}

/// Classifies a symmetric 3×3 game.
///
/// Screening order: non-generic columns, a diagonal entry at its column
/// maximum, a class pattern with its inequality, a class pattern whose
/// inequality fails, a strictly dominated strategy, and finally no pattern.
/// Among classifying matches the lowest class wins, then the
/// lexicographically smallest permutation.
pub fn classify(a: &GameMatrix) -> Result<ClassificationReport> {
    require_symmetric_3x3(a)?;
    let columns = non_generic_columns(a);
    if !columns.is_empty() {
        return Ok(ClassificationReport {
            normalized: None,
            outcome: Classification::Rejected(RejectReason::NonGeneric { columns }),
        });
    }
    let normalized = normalize(a)?;
    let n = &normalized.matrix;
    let rejected = |reason| ClassificationReport {
        normalized: Some(normalized.clone()),
        outcome: Classification::Rejected(reason),
    };

    let pure: Vec<usize> = (0..3).filter(|&i| n.get(i, i).is_one()).collect();
    if !pure.is_empty() {
        return Ok(rejected(RejectReason::PureSymmetricEquilibrium {
            strategies: pure,
        }));
    }

    if let Some(m) = class_of_pattern(n) {
        return Ok(ClassificationReport {
            normalized: Some(normalized),
            outcome: Classification::Classified {
                class: m.class,
                permutation: m.permutation,
                params: m.params,
            },
        });
    }

    let candidates: Vec<ClassId> = ClassId::ALL
        .into_iter()
        .filter(|&c| !pattern_matches(n, c, false).is_empty())
        .collect();
    if !candidates.is_empty() {
        return Ok(rejected(RejectReason::ConditionViolated { candidates }));
    }

    for i in 0..3 {
        if let Some(d) = oracle::strictly_dominated(n, i)? {
            return Ok(rejected(RejectReason::DominatedStrategy(d)));
        }
    }
    Ok(rejected(RejectReason::NoClassPattern))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{int, rat, relabel};
    use ClassId::*;

    fn rps() -> GameMatrix {
        GameMatrix::symmetric_from_ints(&[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]]).unwrap()
    }

    fn params(a: (i64, i64, i64), d: i64) -> [Rational; 3] {
        [rat(a.0, d), rat(a.1, d), rat(a.2, d)]
    }

    #[test]
    fn genericity() {
        assert!(check_generic(&rps()).unwrap());
        let rep = GameMatrix::symmetric_from_ints(&[&[0, 1, 2], &[0, 2, 3], &[1, 0, 4]]).unwrap();
        assert!(!check_generic(&rep).unwrap());
        assert_eq!(non_generic_columns(&rep), vec![0]);
        assert!(check_generic(&A1.matrix(&params((1, 2, 3), 5))).unwrap());
        assert!(matches!(
            check_generic(&GameMatrix::from_ints(&[&[1, 2], &[3, 4]]).unwrap()),
            Err(Error::WrongShape { .. })
        ));
        assert_eq!(
            check_generic(&GameMatrix::from_ints(&[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]).unwrap()),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn normalize_examples() {
        let a = GameMatrix::from_ints(&[&[2, 0], &[0, 1]]).unwrap();
        let n = normalize(&a).unwrap();
        assert_eq!(
            n.matrix,
            GameMatrix::from_ints(&[&[1, 0], &[0, 1]]).unwrap()
        );
        assert_eq!(n.lift(), a);

        // (e + 1) / 2 in every column
        let n = normalize(&rps()).unwrap();
        let h = rat(1, 2);
        assert_eq!(
            n.matrix.to_rows(),
            vec![
                vec![h.clone(), int(0), int(1)],
                vec![int(1), h.clone(), int(0)],
                vec![int(0), int(1), h.clone()],
            ]
        );
        assert!(n
            .transforms
            .iter()
            .all(|t| t.shift == int(-1) && t.scale == int(2)));

        let a3 = A3.matrix(&params((1, 2, 3), 4));
        let n = normalize(&a3).unwrap();
        assert_eq!(n.matrix, a3);
        assert!(n.transforms.iter().all(ColumnTransform::is_identity));

        assert!(matches!(
            normalize(&GameMatrix::from_ints(&[&[1, 2], &[1, 3]]).unwrap()),
            Err(Error::NonGeneric { columns }) if columns == vec![0]
        ));
    }

    #[test]
    fn rps_is_a3_with_halves() {
        let report = classify(&rps()).unwrap();
        match report.outcome {
            Classification::Classified {
                class,
                permutation,
                params: a,
            } => {
                assert_eq!(class, A3);
                assert_eq!(a, params((1, 1, 1), 2));
                assert_eq!(permutation, Permutation::swap(3, 1, 2).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn a2_with_small_sum_violates_condition() {
        let report = classify(&A2.matrix(&params((1, 2, 1), 4))).unwrap();
        assert_eq!(
            report.outcome,
            Classification::Rejected(RejectReason::ConditionViolated {
                candidates: vec![A2]
            })
        );
    }

    #[test]
    fn case_with_dominated_strategy() {
        // [[0,a2,1],[a1,0,0],[1,1,a3]]: strategy 3 beats strategy 2 outright
        let (a1, a2, a3) = (rat(1, 3), rat(1, 2), rat(1, 4));
        let m = GameMatrix::symmetric(vec![
            vec![int(0), a2, int(1)],
            vec![a1, int(0), int(0)],
            vec![int(1), int(1), a3],
        ])
        .unwrap();
        match classify(&m).unwrap().outcome {
            Classification::Rejected(RejectReason::DominatedStrategy(d)) => {
                assert_eq!(d.dominated, 1);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn diagonal_max_is_pure_equilibrium() {
        let m = GameMatrix::symmetric_from_ints(&[&[5, 0, 1], &[1, 2, 3], &[0, 4, 2]]).unwrap();
        assert_eq!(
            classify(&m).unwrap().outcome,
            Classification::Rejected(RejectReason::PureSymmetricEquilibrium {
                strategies: vec![0]
            })
        );
    }

    #[test]
    fn uncovered_pattern_without_dominance() {
        // [[0,1,1],[a1,a2,0],[1,0,a3]] with a1 + a2 > 1 has a {1,3} equilibrium
        // and no dominated strategy
        let m = GameMatrix::symmetric(vec![
            vec![int(0), int(1), int(1)],
            vec![rat(9, 10), rat(9, 10), int(0)],
            vec![int(1), int(0), rat(1, 2)],
        ])
        .unwrap();
        assert_eq!(
            classify(&m).unwrap().outcome,
            Classification::Rejected(RejectReason::NoClassPattern)
        );
    }

    #[test]
    fn non_generic_is_rejected_with_columns() {
        let m = GameMatrix::symmetric_from_ints(&[&[0, 1, 2], &[0, 2, 2], &[1, 0, 4]]).unwrap();
        let report = classify(&m).unwrap();
        assert_eq!(report.normalized, None);
        assert_eq!(
            report.outcome,
            Classification::Rejected(RejectReason::NonGeneric {
                columns: vec![0, 2]
            })
        );
    }

    #[test]
    fn relabeled_pattern_recovers_class_and_parameters() {
        let a = params((1, 3, 1), 4);
        let m = A5.matrix(&a);
        for sigma in Permutation::all(3) {
            let r = relabel(&m, &sigma).unwrap();
            let report = classify(&r).unwrap();
            assert_eq!(report.class(), Some(A5), "σ = {sigma}");
        }
    }
}
