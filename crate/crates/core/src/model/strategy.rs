use num_traits::{One, Signed, Zero};

use super::{Permutation, Rational};
use crate::{Error, Result};

/// A probability vector over pure strategies: nonnegative, summing to exactly one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedStrategy {
    weights: Vec<Rational>,
}

impl MixedStrategy {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidStrategy("no weights".into()));
        }
        if let Some(w) = weights.iter().find(|w| w.is_negative()) {
            return Err(Error::InvalidStrategy(format!("negative weight {w}")));
        }
        let total: Rational = weights.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidStrategy(format!(
                "weights sum to {total}, not 1"
            )));
        }
        Ok(Self { weights })
    }

    pub fn pure(k: usize, i: usize) -> Result<Self> {
        if i >= k {
            return Err(Error::IndexOutOfRange { index: i, count: k });
        }
        let mut weights = vec![Rational::zero(); k];
        weights[i] = Rational::one();
        Ok(Self { weights })
    }

    pub fn uniform(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidStrategy("no weights".into()));
        }
        let w = Rational::new(1.into(), (k as i64).into());
        Ok(Self {
            weights: vec![w; k],
        })
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Indices with positive weight, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.weights[i].is_positive())
            .collect()
    }

    pub fn is_completely_mixed(&self) -> bool {
        self.weights.iter().all(|w| w.is_positive())
    }

    pub fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.len() != self.len() {
            return Err(Error::DimensionMismatch(format!(
                "permutation of size {} applied to strategy of length {}",
                sigma.len(),
                self.len()
            )));
        }
        Ok(Self {
            weights: sigma.permute(&self.weights),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::rat;

    #[test]
    fn validates_weights() {
        assert!(MixedStrategy::new(vec![rat(1, 3), rat(2, 3)]).is_ok());
        assert!(MixedStrategy::new(vec![rat(1, 2), rat(1, 3)]).is_err());
        assert!(MixedStrategy::new(vec![rat(3, 2), rat(-1, 2)]).is_err());
        assert!(MixedStrategy::new(vec![]).is_err());
    }

    #[test]
    fn support_and_mixing() {
        let x = MixedStrategy::new(vec![rat(0, 1), rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(x.support(), vec![1, 2]);
        assert!(!x.is_completely_mixed());
        assert!(MixedStrategy::uniform(3).unwrap().is_completely_mixed());
        assert_eq!(MixedStrategy::pure(2, 1).unwrap().support(), vec![1]);
        assert!(MixedStrategy::pure(2, 2).is_err());
    }
}
