//! The six canonical normalized payoff patterns and their parameter conditions.
//!
//! Every pattern column `i` holds one literal `0`, one literal `1` and the
//! parameter `a_i`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::model::{int, relabel, GameMatrix, Permutation, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
}

impl ClassId {
    pub const ALL: [ClassId; 6] = [
        ClassId::A1,
        ClassId::A2,
        ClassId::A3,
        ClassId::A4,
        ClassId::A5,
        ClassId::A6,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Whether the class carries an inequality on its parameters.
    pub fn is_conditioned(self) -> bool {
        !matches!(self, ClassId::A1 | ClassId::A3)
    }

    /// The class inequality, strict or with every `<` relaxed to `≤`.
    pub fn condition(self, a: &[Rational; 3], strict: bool) -> bool {
        let one = Rational::one();
        let lt = |x: &Rational, y: &Rational| if strict { x < y } else { x <= y };
        let [a1, a2, a3] = a;
        match self {
            ClassId::A1 | ClassId::A3 => true,
            ClassId::A2 => lt(&one, &(a1 + a3)),
            ClassId::A4 => {
                let gap = &one - a1;
                lt(a3, &gap) && lt(&gap, a2)
            }
            ClassId::A5 => lt(&(a1 + a3), &one),
            ClassId::A6 => lt(&(a1 + a2), &one),
        }
    }

    /// The pattern matrix with parameters `a`, flagged symmetric.
    pub fn matrix(self, a: &[Rational; 3]) -> GameMatrix {
        let rows = PATTERNS[self.index()]
            .iter()
            .map(|row| row.iter().map(|cell| cell.value(a)).collect())
            .collect();
        GameMatrix::symmetric(rows).expect("pattern is 3x3")
    }

    /// Reads the parameters off `m` if it has this pattern literally: the
    /// `0`/`1` cells exact, parameter cells in `(0,1)`, or `[0,1]` when
    /// `closed`. No relabeling.
    pub fn match_literal(self, m: &GameMatrix, closed: bool) -> Option<[Rational; 3]> {
        if m.rows() != 3 || m.cols() != 3 {
            return None;
        }
        let mut params: [Option<Rational>; 3] = Default::default();
        for (r, row) in PATTERNS[self.index()].iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                let v = m.get(r, c);
                match cell {
                    Cell::Zero if !v.is_zero() => return None,
                    Cell::One if !v.is_one() => return None,
                    Cell::Param(k) => {
                        let inside = if closed {
                            !v.is_negative() && *v <= Rational::one()
                        } else {
                            v.is_positive() && *v < Rational::one()
                        };
                        if !inside {
                            return None;
                        }
                        params[*k] = Some(v.clone());
                    }
                    _ => {}
                }
            }
        }
        let [a1, a2, a3] = params;
        Some([a1?, a2?, a3?])
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", self.index() + 1)
    }
}

#[derive(Debug, Clone, Copy)]
enum Cell {
    Zero,
    One,
    Param(usize),
}

impl Cell {
    fn value(self, a: &[Rational; 3]) -> Rational {
        match self {
            Cell::Zero => int(0),
            Cell::One => int(1),
            Cell::Param(k) => a[k].clone(),
        }
    }
}

use Cell::{One as I, Param as P, Zero as O};

const PATTERNS: [[[Cell; 3]; 3]; 6] = [
    // A1
    [[O, I, P(2)], [P(0), O, I], [I, P(1), O]],
    // A2
    [[O, I, I], [P(0), O, P(2)], [I, P(1), O]],
    // A3
    [[P(0), I, O], [O, P(1), I], [I, O, P(2)]],
    // A4
    [[O, I, I], [I, O, O], [P(0), P(1), P(2)]],
    // A5
    [[O, P(1), I], [I, O, O], [P(0), I, P(2)]],
    // A6
    [[O, I, O], [P(0), P(1), I], [I, O, P(2)]],
];

/// A relabeling `σ` with `relabel(m, σ)` in the class, and its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub class: ClassId,
    pub permutation: Permutation,
    pub params: [Rational; 3],
}

/// Every `(σ, a)` under which `m` has the class pattern, permutations in
/// lexicographic order. `closed` relaxes parameters to `[0,1]`; the class
/// inequality is checked separately.
pub fn pattern_matches(m: &GameMatrix, class: ClassId, closed: bool) -> Vec<Membership> {
    if !m.is_symmetric() || m.rows() != 3 {
        return Vec::new();
    }
    Permutation::all(3)
        .into_iter()
        .filter_map(|sigma| {
            let r = relabel(m, &sigma).expect("3x3 symmetric");
            class.match_literal(&r, closed).map(|params| Membership {
                class,
                permutation: sigma,
                params,
            })
        })
        .collect()
}

/// First relabeling placing `m` in the closure of the class: parameters in
/// `[0,1]` and the non-strict inequality.
pub fn in_closure(m: &GameMatrix, class: ClassId) -> Option<Membership> {
    pattern_matches(m, class, true)
        .into_iter()
        .find(|mem| class.condition(&mem.params, false))
}

/// Literal class membership of an already-normalized matrix: the lowest
/// class, then the lexicographically smallest permutation, whose pattern and
/// strict inequality hold.
pub fn class_of_pattern(m: &GameMatrix) -> Option<Membership> {
    ClassId::ALL.iter().find_map(|&class| {
        pattern_matches(m, class, false)
            .into_iter()
            .find(|mem| class.condition(&mem.params, true))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::rat;

    fn params(a: (i64, i64, i64), d: i64) -> [Rational; 3] {
        [rat(a.0, d), rat(a.1, d), rat(a.2, d)]
    }

    #[test]
    fn parameters_live_in_their_column() {
        for class in ClassId::ALL {
            let a = params((1, 2, 3), 7);
            let m = class.matrix(&a);
            for (c, ac) in a.iter().enumerate() {
                let col = m.column(c);
                assert!(
                    col.contains(ac),
                    "{class}: a{} not in column {}",
                    c + 1,
                    c + 1
                );
                assert!(col.contains(&int(0)) && col.contains(&int(1)));
            }
            assert_eq!(class.match_literal(&m, false), Some(a));
        }
    }

    #[test]
    fn conditions() {
        use ClassId::*;
        assert!(A2.condition(&params((3, 1, 3), 4), true));
        assert!(!A2.condition(&params((1, 2, 1), 4), true));
        assert!(A2.condition(&params((2, 1, 2), 4), false));
        assert!(!A2.condition(&params((2, 1, 2), 4), true));
        // a3 < 1 - a1 < a2
        assert!(A4.condition(&params((2, 3, 1), 4), true));
        assert!(!A4.condition(&params((2, 1, 3), 4), true));
        assert!(A5.condition(&params((1, 3, 1), 4), true));
        assert!(!A5.condition(&params((3, 1, 3), 4), true));
        assert!(A6.condition(&params((1, 1, 3), 4), true));
        assert!(!A6.condition(&params((2, 3, 1), 4), true));
        assert!(A1.condition(&params((3, 3, 3), 4), true));
        assert!(!A1.is_conditioned() && !A3.is_conditioned() && A4.is_conditioned());
    }

    #[test]
    fn interior_point_is_in_its_own_closure() {
        let m = ClassId::A1.matrix(&params((1, 1, 1), 3));
        let mem = in_closure(&m, ClassId::A1).unwrap();
        assert!(mem.permutation.is_identity());
    }

    #[test]
    fn display() {
        assert_eq!(ClassId::A4.to_string(), "A4");
    }
}
