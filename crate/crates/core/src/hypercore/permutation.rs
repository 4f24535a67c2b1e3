use std::fmt;

use super::subset::KSubset;
use crate::error::{Error, Result};

/// A bijection on the vertex indices `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(Error::NotPermutation(format!(
                    "image {v} out of range for n = {n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotPermutation(format!("image {v} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// `self` followed by `other`: `v -> other(self(v))`.
    pub fn then(&self, other: &Permutation) -> Result<Self> {
        self.check_len(other.len())?;
        Ok(Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        })
    }

    /// Image of a subset, re-sorted ascending.
    pub fn apply(&self, s: &KSubset) -> Result<KSubset> {
        if let Some(&v) = s.vertices().iter().find(|&&v| v >= self.len()) {
            return Err(Error::LengthMismatch {
                expected: v + 1,
                actual: self.len(),
            });
        }
        let mut img: Vec<usize> = s.vertices().iter().map(|&v| self.images[v]).collect();
        img.sort_unstable();
        Ok(KSubset::from_sorted_unchecked(img))
    }

    /// Writes the sorted image of `src` into `dst` without allocating.
    #[inline]
    pub(crate) fn apply_into(&self, src: &[usize], dst: &mut [usize]) {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = self.images[s];
        }
        dst.sort_unstable();
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: self.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
