use std::fmt;

use crate::{Error, Result};

/// A bijection on `{0, …, k-1}`, stored as its image vector.
///
/// `images[i]` is the new label of old strategy `i`. Ordering is
/// lexicographic on the image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Self {
            images: (0..k).collect(),
        }
    }

    /// Builds from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds from 1-based images, e.g. `[2, 3, 1]` for `1→2, 2→3, 3→1`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{images:?} contains 0")));
        }
        Self::from_images(images.iter().map(|i| i - 1).collect())
    }

    /// Transposition of two 0-based labels.
    pub fn swap(k: usize, a: usize, b: usize) -> Result<Self> {
        if a >= k || b >= k {
            return Err(Error::InvalidPermutation(format!(
                "swap({a}, {b}) out of range for size {k}"
            )));
        }
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(a, b);
        Ok(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(format!(
                "composing permutations of sizes {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Moves entry `i` of `values` to position `σ(i)`.
    pub fn permute<T: Clone>(&self, values: &[T]) -> Vec<T> {
        assert_eq!(values.len(), self.len(), "permutation size mismatch");
        let mut out = values.to_vec();
        for (i, v) in values.iter().enumerate() {
            out[self.images[i]] = v.clone();
        }
        out
    }

    /// All permutations of size `k` in lexicographic order of their images.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..k).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// 1-based image list, `[2, 3, 1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (n, i) in self.images.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_is_lexicographic_and_complete() {
        let perms = Permutation::all(3);
        assert_eq!(perms.len(), 6);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert!(perms[0].is_identity());
        assert_eq!(Permutation::all(1).len(), 1);
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn compose_and_inverse() {
        let s = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        let t = Permutation::swap(3, 0, 1).unwrap();
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
        // (s∘t)(0) = s(t(0)) = s(1) = 2
        assert_eq!(s.compose(&t).unwrap().apply(0), 2);
        assert_eq!(s.to_string(), "[2, 3, 1]");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
        assert!(Permutation::swap(2, 0, 2).is_err());
    }

    #[test]
    fn permute_moves_entries() {
        let s = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        assert_eq!(s.permute(&['a', 'b', 'c']), vec!['c', 'a', 'b']);
    }
}
