//! Permutations acting on the right.
//!
//! `(a)π` is the image of `a`; products compose left to right, so
//! `(a)(στ) = ((a)σ)τ` and `(1,2,3)(2,3) = (1,3)`.

use std::fmt;

use crate::{Error, Result};

/// Permutation of `{0, .., n-1}` in one-line notation: `images[a] = (a)π`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// One-line notation with values `1..=n`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Parse("one-based permutation contains 0".into()));
        }
        Self::from_images(images.iter().map(|i| i - 1).collect())
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    /// The simple transposition swapping `i` and `i+1`, for `1 ≤ i < n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::OutOfRange(format!("s_{i} in S_{n}")));
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// Cycle `(c_1, .., c_k)` on one-based points: `c_1 ↦ c_2 ↦ .. ↦ c_1`.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        let mut p = Self::identity(n);
        for (k, &a) in points.iter().enumerate() {
            let b = points[(k + 1) % points.len()];
            if a == 0 || a > n || b == 0 || b > n {
                return Err(Error::OutOfRange(format!("cycle point outside 1..{n}")));
            }
            p.images[a - 1] = b - 1;
        }
        Self::from_images(p.images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(a)π`
    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    /// The product `self · other`: apply `self` first.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "permutation degree mismatch");
        Perm {
            images: self.images.iter().map(|&a| other.images[a]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (a, &b) in self.images.iter().enumerate() {
            inv[b] = a;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(a, &b)| a == b)
    }

    /// Number of inversions, the Coxeter length.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// A reduced word `[i_1, .., i_k]` (one-based) with `π = s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        // π = s_i · π' where π' swaps positions i, i+1 of the one-line form;
        // peeling descents off the left is bubble sort.
        let mut arr = self.images.clone();
        let mut word = Vec::with_capacity(self.length());
        loop {
            match (0..arr.len().saturating_sub(1)).find(|&i| arr[i] > arr[i + 1]) {
                Some(i) => {
                    word.push(i + 1);
                    arr.swap(i, i + 1);
                }
                None => return word,
            }
        }
    }

    /// Moves only points of `{0, .., k-1}`.
    pub fn fixes_beyond(&self, k: usize) -> bool {
        self.images.iter().enumerate().skip(k).all(|(a, &b)| a == b)
    }

    /// All of S_n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                return out;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.to_one_based())
    }
}
