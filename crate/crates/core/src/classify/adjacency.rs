//! Which class closures touch, searched on a rational parameter grid.

use num_traits::{One, Signed, Zero};

use super::patterns::{in_closure, ClassId, Membership};
use crate::model::Rational;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyEdge {
    /// Lower class first.
    pub classes: (ClassId, ClassId),
    /// A normalized matrix lying in both closures.
    pub witness: crate::model::GameMatrix,
    pub memberships: (Membership, Membership),
}

impl AdjacencyEdge {
    /// Re-checks that the witness lies in both closures under the recorded
    /// relabelings.
    pub fn verify(&self) -> bool {
        let check = |class: ClassId, mem: &Membership| {
            let r = crate::model::relabel(&self.witness, &mem.permutation);
            matches!(r, Ok(r) if class.match_literal(&r, true).as_ref() == Some(&mem.params))
                && class.condition(&mem.params, false)
        };
        check(self.classes.0, &self.memberships.0) && check(self.classes.1, &self.memberships.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyGraph {
    pub resolution: Rational,
    pub edges: Vec<AdjacencyEdge>,
}

impl AdjacencyGraph {
    pub fn has_edge(&self, a: ClassId, b: ClassId) -> bool {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.edges.iter().any(|e| e.classes == key)
    }

    /// 1-based class index pairs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .map(|e| (e.classes.0.index() + 1, e.classes.1.index() + 1))
            .collect()
    }
}

fn grid(resolution: &Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut v = Rational::zero();
    while v < Rational::one() {
        out.push(v.clone());
        v += resolution;
    }
    out.push(Rational::one());
    out
}

/// Two classes are adjacent when some normalized matrix lies in both
/// closures: parameters in `[0,1]` and every class inequality relaxed to
/// `≤`. The parameters of the first class range over multiples of
/// `resolution` in `[0,1]` (and 1 itself); the second class is matched under
/// all relabelings. The first witness found is kept for each pair.
pub fn adjacency(resolution: &Rational) -> Result<AdjacencyGraph> {
    if !resolution.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "resolution must be positive, got {resolution}"
        )));
    }
    let values = grid(resolution);
    let mut edges = Vec::new();
    for (i, &first) in ClassId::ALL.iter().enumerate() {
        for &second in &ClassId::ALL[i + 1..] {
            if let Some(edge) = find_edge(first, second, &values) {
                edges.push(edge);
            }
        }
    }
    Ok(AdjacencyGraph {
        resolution: resolution.clone(),
        edges,
    })
}

fn find_edge(first: ClassId, second: ClassId, values: &[Rational]) -> Option<AdjacencyEdge> {
    for a1 in values {
        for a2 in values {
            for a3 in values {
                let params = [a1.clone(), a2.clone(), a3.clone()];
                if !first.condition(&params, false) {
                    continue;
                }
                let witness = first.matrix(&params);
                if let Some(mem) = in_closure(&witness, second) {
                    let own = Membership {
                        class: first,
                        permutation: crate::model::Permutation::identity(3),
                        params,
                    };
                    return Some(AdjacencyEdge {
                        classes: (first, second),
                        witness,
                        memberships: (own, mem),
                    });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{int, rat};

    #[test]
    fn grid_includes_one() {
        assert_eq!(grid(&rat(1, 2)), vec![int(0), rat(1, 2), int(1)]);
        assert_eq!(grid(&rat(2, 3)), vec![int(0), rat(2, 3), int(1)]);
        assert_eq!(grid(&rat(1, 8)).len(), 9);
    }

    #[test]
    fn rejects_nonpositive_resolution() {
        assert!(adjacency(&int(0)).is_err());
        assert!(adjacency(&rat(-1, 4)).is_err());
    }

    #[test]
    fn witnesses_verify() {
        let g = adjacency(&rat(1, 2)).unwrap();
        assert!(!g.edges.is_empty());
        for e in &g.edges {
            assert!(e.verify(), "{:?}", e.classes);
        }
    }
}
