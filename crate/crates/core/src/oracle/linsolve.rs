use num_traits::Zero;

use crate::model::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) enum Solution {
    Unique(Vec<Rational>),
    /// Consistent with a positive-dimensional solution set.
    Multiple,
    Inconsistent,
}

/// Solves `a·z = b` exactly by Gauss–Jordan elimination. `a` may be rectangular.
pub(super) fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Solution {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let lead = a[r][c].clone();
        for v in a[r].iter_mut() {
            *v /= &lead;
        }
        b[r] /= &lead;
        let pivot_row = a[r].clone();
        let pivot_rhs = b[r].clone();
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for (v, p) in a[i][c..].iter_mut().zip(&pivot_row[c..]) {
                *v -= &f * p;
            }
            b[i] -= &f * &pivot_rhs;
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if b[r..].iter().any(|v| !v.is_zero()) {
        return Solution::Inconsistent;
    }
    if pivots.len() < cols {
        return Solution::Multiple;
    }
    let mut z = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        z[c] = b[i].clone();
    }
    Solution::Unique(z)
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
    fn unique_multiple_inconsistent() {
        assert_eq!(
            solve(ints(&[&[2, 1], &[1, 3]]), vec![int(3), int(5)]),
            Solution::Unique(vec![rat(4, 5), rat(7, 5)])
        );
        assert_eq!(
            solve(ints(&[&[1, 1], &[2, 2]]), vec![int(1), int(2)]),
            Solution::Multiple
        );
        assert_eq!(
            solve(ints(&[&[1, 1], &[2, 2]]), vec![int(1), int(3)]),
            Solution::Inconsistent
        );
        // overdetermined but consistent
        assert_eq!(
            solve(ints(&[&[1], &[2], &[3]]), vec![int(2), int(4), int(6)]),
            Solution::Unique(vec![int(2)])
        );
        assert_eq!(solve(ints(&[&[0, 1]]), vec![int(1)]), Solution::Multiple);
    }
}
