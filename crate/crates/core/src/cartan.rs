//! Root data of type `A_n`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

/// The Cartan matrix of `A_n`; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanA {
    n: usize,
}

impl CartanA {
    /// Panics when `n = 0`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "rank must be at least 1");
        CartanA { n }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `⟨h_i, α_j⟩`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        debug_assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        if i == j {
            2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    }

    pub fn indices(&self) -> core::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// `α_i` in the fundamental-weight basis.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new((1..=self.n).map(|j| self.a(j, i)).collect())
    }

    /// Dimension of `V(λ)` by the Weyl dimension formula
    /// `∏_{i≤j} (λ_i + ⋯ + λ_j + j − i + 1) / (j − i + 1)`.
    pub fn weyl_dim(&self, lambda: &Weight) -> BigUint {
        assert_eq!(lambda.rank(), self.n, "weight has the wrong rank");
        assert!(lambda.is_dominant(), "weight must be dominant");
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for i in 1..=self.n {
            for j in i..=self.n {
                let s: i64 = (i..=j).map(|k| lambda.get(k)).sum();
                num *= BigUint::from((s + (j - i + 1) as i64) as u64);
                den *= BigUint::from((j - i + 1) as u64);
            }
        }
        let (q, r) = num.div_rem(&den);
        debug_assert!(r == BigUint::from(0u8));
        q
    }
}

/// An integral weight in the basis of fundamental weights `Λ_1..Λ_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coeffs: Vec<i64>,
}

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Weight { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Weight { coeffs: vec![0; n] }
    }

    /// `Λ_i` of rank `n`.
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        w.coeffs[i - 1] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `⟨h_i, λ⟩` (1-based).
    pub fn get(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight::new(self.coeffs.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}
