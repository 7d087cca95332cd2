use itertools::Itertools;

use crate::error::{Error, Result};

/// Element of the symmetric group on `{0, …, p−1}`.
///
/// Composition follows function composition: `sigma.compose(&tau)` is
/// `σ∘τ`, i.e. apply `τ` first, then `σ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Zero-based images; `images[i] = σ(i)`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::Invalid(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// One-based images, as permutations are usually written.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Invalid("one-based images cannot contain 0".into()));
        }
        Self::new(images.iter().map(|i| i - 1).collect())
    }

    pub fn identity(size: usize) -> Self {
        Self {
            images: (0..size).collect(),
        }
    }

    /// Transposition exchanging the zero-based positions `i` and `j`.
    pub fn transposition(size: usize, i: usize, j: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..size).collect();
        if i >= size || j >= size {
            return Err(Error::Invalid(format!("({i} {j}) outside 0..{size}")));
        }
        images.swap(i, j);
        Ok(Self { images })
    }

    /// All `p!` permutations in lexicographic order of their image lists.
    pub fn all(size: usize) -> impl Iterator<Item = Permutation> {
        (0..size)
            .permutations(size)
            .map(|images| Permutation { images })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `±1` from the parity of the inversion count.
    pub fn signature(&self) -> i32 {
        let inversions = self
            .images
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `σ∘τ` where `self = σ` and `first = τ`.
    pub fn compose(&self, first: &Permutation) -> Result<Permutation> {
        if self.size() != first.size() {
            return Err(Error::Dimension(format!(
                "cannot compose permutations of sizes {} and {}",
                self.size(),
                first.size()
            )));
        }
        Ok(Permutation {
            images: first.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (i, &s) in self.images.iter().enumerate() {
            images[s] = i;
        }
        Permutation { images }
    }
}
