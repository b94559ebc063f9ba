use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::VarId;
use crate::error::{Error, Result};
use crate::Rational;

/// A Laurent monomial: sorted `(variable, exponent)` pairs with no zero
/// exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(VarId, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Monomial(alloc::vec![(v, 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (VarId, i32)>>(pairs: I) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: VarId) -> i32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(VarId, i32)> {
        self.0.iter()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        if ea + eb != 0 {
                            out.push((va, ea + eb));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    out.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    out.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial(out)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Componentwise minimum of exponents, absent variables counting as 0.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut vars: Vec<VarId> = self.0.iter().chain(other.0.iter()).map(|p| p.0).collect();
        vars.sort();
        vars.dedup();
        Monomial::from_pairs(
            vars.into_iter()
                .map(|v| (v, self.exponent(v).min(other.exponent(v)))),
        )
    }

    /// Substitutes variables by renaming.
    pub fn rename(&self, f: impl Fn(VarId) -> VarId) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }

    fn divides_poly(&self, other: &Monomial) -> bool {
        // both non-negative: self | other
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// Lexicographic comparison of exponent vectors in variable order.
    /// This is a monomial order, unlike the derived `Ord` on the sparse form.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            let (ea, eb) = match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        a.next();
                        (ea, 0)
                    }
                    Ordering::Greater => {
                        b.next();
                        (0, eb)
                    }
                    Ordering::Equal => {
                        a.next();
                        b.next();
                        (ea, eb)
                    }
                },
                (Some(&&(_, ea)), None) => {
                    a.next();
                    (ea, 0)
                }
                (None, Some(&&(_, eb))) => {
                    b.next();
                    (0, eb)
                }
            };
            match ea.cmp(&eb) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
    }

    pub fn evaluate(&self, point: &BTreeMap<VarId, Rational>) -> Result<Rational> {
        let mut acc = Rational::one();
        for &(v, e) in &self.0 {
            let x = point.get(&v).ok_or(Error::MissingAssignment(v))?;
            if e < 0 && x.is_zero() {
                return Err(Error::Eval(alloc::format!("{v} = 0 under a negative power")));
            }
            acc *= pow_rational(x, e);
        }
        Ok(acc)
    }
}

pub(crate) fn pow_rational(x: &Rational, e: i32) -> Rational {
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut k = e.unsigned_abs();
    let mut acc = Rational::one();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        k >>= 1;
    }
    acc
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A Laurent polynomial with rational coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by monomial, so two equal
/// polynomials are structurally equal. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::var(v), Rational::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The single term if this is `c · m`.
    pub fn as_term(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        self.as_term().filter(|(m, _)| m.is_one()).map(|(_, c)| c.clone())
    }

    /// First term in canonical order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next()
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_gcd(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(first.clone(), |g, m| g.gcd(m)),
        }
    }

    /// Positive rational `g` with `self / g` having coprime integer
    /// coefficients.
    pub fn content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            Rational::one()
        } else {
            Rational::new(num, den)
        }
    }

    pub fn rename(&self, f: impl Fn(VarId) -> VarId + Copy) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (m.rename(f), c.clone())))
    }

    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self.terms.keys().flat_map(|m| m.iter().map(|p| p.0)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn evaluate(&self, point: &BTreeMap<VarId, Rational>) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += m.evaluate(point)? * c;
        }
        Ok(acc)
    }

    /// Exact quotient `self / d` in the Laurent ring, if it exists.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if let Some((m, c)) = d.as_term() {
            return Some(self.mul_monomial(&m.inv()).scale(&c.recip()));
        }
        // shift to genuine polynomials; d has no monomial factor afterwards,
        // so it divides in the Laurent ring iff it divides as a polynomial
        let sm = self.monomial_gcd();
        let dm = d.monomial_gcd();
        let mut rem = self.mul_monomial(&sm.inv());
        let div = d.mul_monomial(&dm.inv());
        let (lead_m, lead_c) = div
            .terms
            .iter()
            .max_by(|a, b| a.0.lex_cmp(b.0))
            .map(|(m, c)| (m.clone(), c.clone()))?;
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem
                .terms
                .iter()
                .max_by(|a, b| a.0.lex_cmp(b.0))
                .map(|(m, c)| (m.clone(), c.clone()))?;
            if !lead_m.divides_poly(&rm) {
                return None;
            }
            let qm = rm.mul(&lead_m.inv());
            let qc = rc / &lead_c;
            rem = &rem - &div.mul_monomial(&qm).scale(&qc);
            quot.add_term(qm, qc);
        }
        Some(quot.mul_monomial(&sm.mul(&dm.inv())))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident, $t:ty) => {
        impl $tr for $t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add, LaurentPoly);
forward_owned!(Sub, sub, LaurentPoly);
forward_owned!(Mul, mul, LaurentPoly);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn c(j: i32, i: i32) -> LaurentPoly {
        LaurentPoly::var(VarId::c(j, i))
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = &c(1, 1) - &c(1, 1);
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn exact_division_of_product() {
        let a = &c(1, 1) + &c(1, 2);
        let b = &(&c(2, 1) * &c(2, 1)) - &LaurentPoly::from_int(3);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
    }

    #[test]
    fn exact_division_with_negative_exponents() {
        let a = &c(1, 1) + &LaurentPoly::monomial(Monomial::var(VarId::c(1, 2)).inv());
        let b = &c(2, 1) + &LaurentPoly::one();
        assert_eq!((&a * &b).div_exact(&a), Some(b));
    }

    #[test]
    fn lex_order_is_multiplicative() {
        let x = Monomial::var(VarId::c(1, 1));
        let y = Monomial::var(VarId::c(1, 2));
        assert_eq!(x.lex_cmp(&y.pow(5)), Ordering::Greater);
        assert_eq!(x.mul(&y).lex_cmp(&y.pow(5).mul(&y)), Ordering::Greater);
    }

    #[test]
    fn display_is_canonical() {
        let p = &(&c(1, 2) + &c(1, 1)) + &LaurentPoly::from_int(2);
        assert_eq!(p.to_string(), "2 + c[1,1] + c[1,2]");
    }
}
