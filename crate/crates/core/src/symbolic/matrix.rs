use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use super::{LaurentFraction, LaurentPoly, VarId};
use crate::error::{Error, Result};
use crate::Rational;

/// A dense square matrix over Laurent fractions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    size: usize,
    entries: Vec<LaurentFraction>,
}

impl SquareMatrix {
    pub fn zero(size: usize) -> Self {
        assert!(size > 0);
        SquareMatrix { size, entries: alloc::vec![LaurentFraction::zero(); size * size] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size);
        for i in 0..size {
            m.set(i, i, LaurentFraction::one());
        }
        m
    }

    pub fn diagonal(diag: Vec<LaurentFraction>) -> Self {
        let mut m = Self::zero(diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Panics unless `rows` is square and nonempty.
    pub fn from_rows(rows: Vec<Vec<LaurentFraction>>) -> Self {
        let size = rows.len();
        assert!(size > 0 && rows.iter().all(|r| r.len() == size), "not a square matrix");
        SquareMatrix { size, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| LaurentFraction::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Zero-based entry access.
    pub fn get(&self, r: usize, c: usize) -> &LaurentFraction {
        &self.entries[r * self.size + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: LaurentFraction) {
        self.entries[r * self.size + c] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.size);
        for r in 0..self.size {
            for c in 0..self.size {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = LaurentFraction::zero();
                for k in 0..n {
                    let (a, b) = (self.get(r, k), other.get(k, c));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// Submatrix on the given zero-based rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SquareMatrix {
        assert_eq!(rows.len(), cols.len());
        SquareMatrix::from_rows(
            rows.iter()
                .map(|&r| cols.iter().map(|&c| self.get(r, c).clone()).collect())
                .collect(),
        )
    }

    /// Minor on the given zero-based rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> LaurentFraction {
        self.submatrix(rows, cols).det_fraction_free()
    }

    /// Top-left `k×k` minor.
    pub fn leading_minor(&self, k: usize) -> LaurentFraction {
        let idx: Vec<usize> = (0..k).collect();
        self.minor(&idx, &idx)
    }

    /// Exact determinant by Bareiss elimination.
    ///
    /// Each row is first multiplied by the product of its distinct
    /// denominators, the resulting Laurent-polynomial matrix is reduced with
    /// exact divisions by the previous pivot, and the row scalings are
    /// divided back out at the end.
    pub fn det_fraction_free(&self) -> LaurentFraction {
        let n = self.size;
        let mut scale = LaurentPoly::one();
        let mut rows: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
        for r in 0..n {
            let mut dens: Vec<&LaurentPoly> = Vec::new();
            for c in 0..n {
                let d = self.get(r, c).den();
                if !d.is_one() && !dens.contains(&d) {
                    dens.push(d);
                }
            }
            let row_scale = dens.iter().fold(LaurentPoly::one(), |acc, d| &acc * *d);
            rows.push(
                (0..n)
                    .map(|c| {
                        let e = self.get(r, c);
                        let cof = row_scale.div_exact(e.den()).expect("denominator divides row scale");
                        e.num() * &cof
                    })
                    .collect(),
            );
            scale = &scale * &row_scale;
        }
        let det = bareiss(rows);
        LaurentFraction::new(det, scale).expect("nonzero row scale")
    }

    /// Gauss decomposition `self = lower · diag · upper` with unipotent
    /// triangular factors (Doolittle elimination, no pivoting).
    pub fn gauss_decompose(&self) -> Result<(SquareMatrix, SquareMatrix, SquareMatrix)> {
        let n = self.size;
        let mut lower = Self::identity(n);
        let mut upper = Self::zero(n);
        for k in 0..n {
            for j in k..n {
                let mut s = self.get(k, j).clone();
                for m in 0..k {
                    let (a, b) = (lower.get(k, m), upper.get(m, j));
                    if !a.is_zero() && !b.is_zero() {
                        s = &s - &(a * b);
                    }
                }
                upper.set(k, j, s);
            }
            let pivot = upper.get(k, k).clone();
            if pivot.is_zero() {
                return Err(Error::Cell(k + 1));
            }
            for i in (k + 1)..n {
                let mut s = self.get(i, k).clone();
                for m in 0..k {
                    let (a, b) = (lower.get(i, m), upper.get(m, k));
                    if !a.is_zero() && !b.is_zero() {
                        s = &s - &(a * b);
                    }
                }
                lower.set(i, k, &s / &pivot);
            }
        }
        let mut diag = Self::zero(n);
        let mut unip = Self::identity(n);
        for k in 0..n {
            let p = upper.get(k, k).clone();
            for j in (k + 1)..n {
                unip.set(k, j, upper.get(k, j) / &p);
            }
            diag.set(k, k, p);
        }
        Ok((lower, diag, unip))
    }

    pub fn evaluate(&self, point: &BTreeMap<VarId, Rational>) -> Result<SquareMatrix> {
        let mut out = Self::zero(self.size);
        for r in 0..self.size {
            for c in 0..self.size {
                out.set(r, c, self.get(r, c).substitute(point)?);
            }
        }
        Ok(out)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.size).all(|r| ((r + 1)..self.size).all(|c| self.get(r, c).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.transpose().is_lower_triangular()
    }
}

fn bareiss(mut a: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = a.len();
    let mut sign_flip = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match ((k + 1)..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -&det
    } else {
        det
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.size {
            f.write_str("[")?;
            for c in 0..self.size {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
