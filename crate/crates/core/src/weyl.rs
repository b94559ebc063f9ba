//! The symmetric group `S_{n+1}` as the Weyl group of `A_n`.

use alloc::vec::Vec;

/// A permutation of `{1, …, n+1}` stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation { images: (1..=size).collect() }
    }

    /// Panics unless `images` is a permutation of `1..=len`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = alloc::vec![false; images.len()];
        for &x in &images {
            assert!(x >= 1 && x <= images.len() && !seen[x - 1], "not a permutation");
            seen[x - 1] = true;
        }
        Permutation { images }
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple(size: usize, i: usize) -> Self {
        assert!(i >= 1 && i < size, "s_{i} is not a simple reflection of S_{size}");
        let mut p = Self::identity(size);
        p.images.swap(i - 1, i);
        p
    }

    /// The longest element `m ↦ size + 1 − m`.
    pub fn longest(size: usize) -> Self {
        Permutation { images: (1..=size).rev().collect() }
    }

    /// Product `s_{i_1} ⋯ s_{i_k}` of simple reflections.
    pub fn from_word(size: usize, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(size), |acc, &i| acc.compose(&Self::simple(size, i)))
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, m: usize) -> usize {
        self.images[m - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation { images: other.images.iter().map(|&m| self.apply(m)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.size()];
        for (k, &m) in self.images.iter().enumerate() {
            inv[m - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let n = self.size();
        (0..n).map(|a| ((a + 1)..n).filter(|&b| self.images[a] > self.images[b]).count()).sum()
    }

    /// A reduced word, obtained by bubble-sorting the image list.
    pub fn reduced_word(&self) -> Vec<usize> {
        // Sorting w by adjacent swaps on positions gives w·s_{j_1}⋯s_{j_k} = e,
        // hence w = s_{j_k}⋯s_{j_1}.
        let mut a = self.images.clone();
        let mut swaps = Vec::new();
        let n = a.len();
        for pass in 0..n {
            for k in 0..n.saturating_sub(pass + 1) {
                if a[k] > a[k + 1] {
                    a.swap(k, k + 1);
                    swaps.push(k + 1);
                }
            }
        }
        swaps.reverse();
        swaps
    }

    /// The sorted image of `{1, …, j}`, i.e. the index set of `w·Λ_j`.
    pub fn image_of_initial(&self, j: usize) -> Vec<usize> {
        let mut s: Vec<usize> = (1..=j).map(|m| self.apply(m)).collect();
        s.sort_unstable();
        s
    }
}

/// The reduced word `1, 2, …, n, 1, 2, …, n−1, …, 1, 2, 1` for `w_0`.
pub fn longest_word_i0(n: usize) -> Vec<usize> {
    (1..=n).flat_map(|j| 1..=(n - j + 1)).collect()
}

/// Whether `word` is reduced.
pub fn is_reduced(size: usize, word: &[usize]) -> bool {
    Permutation::from_word(size, word).length() == word.len()
}

/// Whether `word` is a reduced expression of `w_0` in `S_size`.
pub fn is_longest_word(size: usize, word: &[usize]) -> bool {
    word.len() == size * (size - 1) / 2 && Permutation::from_word(size, word) == Permutation::longest(size)
}
