use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{LaurentPoly, Monomial, VarId};
use crate::error::{Error, Result};
use crate::Rational;

/// A quotient of Laurent polynomials in canonical form.
///
/// Canonical form: the denominator carries no monomial factor (monomials are
/// units and move to the numerator), its first term in canonical order has
/// coefficient 1, and a numerator divisible by the denominator is divided
/// out. Whenever the value is a Laurent polynomial the denominator is
/// therefore exactly `1`. No polynomial gcd beyond that is attempted, so
/// `PartialEq` compares by cross-multiplication.
#[derive(Clone, Debug)]
pub struct LaurentFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentFraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = den.monomial_gcd().inv();
        let (mut num, mut den) = (num.mul_monomial(&shift), den.mul_monomial(&shift));
        let lead = den.leading().map(|(_, c)| c.clone()).expect("nonzero");
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        if !den.is_one() {
            if let Some(q) = num.div_exact(&den) {
                return LaurentFraction { num: q, den: LaurentPoly::one() };
            }
        }
        LaurentFraction { num, den }
    }

    pub fn zero() -> Self {
        LaurentFraction { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        LaurentFraction { num: p, den: LaurentPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    pub fn var(v: VarId) -> Self {
        Self::from_poly(LaurentPoly::var(v))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_poly(LaurentPoly::monomial(m))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when the denominator is `1`, i.e. this is a Laurent polynomial.
    pub fn is_laurent_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Coefficient-wise positivity of numerator and denominator.
    pub fn is_positive(&self) -> bool {
        self.num.all_coefficients_nonnegative() && self.den.all_coefficients_nonnegative()
    }

    pub fn recip(&self) -> Result<Self> {
        LaurentFraction::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut acc = LaurentFraction::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn evaluate(&self, point: &BTreeMap<VarId, Rational>) -> Result<Rational> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(Error::Eval(alloc::string::String::from("denominator vanishes")));
        }
        Ok(self.num.evaluate(point)? / d)
    }

    /// Substitutes constants for some variables, leaving the rest symbolic.
    pub fn substitute(&self, point: &BTreeMap<VarId, Rational>) -> Result<Self> {
        let sub = |p: &LaurentPoly| -> Result<LaurentPoly> {
            let mut out = LaurentPoly::zero();
            for (m, c) in p.terms() {
                let mut coeff = c.clone();
                let mut rest = alloc::vec::Vec::new();
                for &(v, e) in m.iter() {
                    match point.get(&v) {
                        Some(x) => {
                            if e < 0 && x.is_zero() {
                                return Err(Error::Eval(alloc::format!("{v} = 0 under a negative power")));
                            }
                            coeff *= super::poly::pow_rational(x, e)
                        }
                        None => rest.push((v, e)),
                    }
                }
                out = &out + &LaurentPoly::term(Monomial::from_pairs(rest), coeff);
            }
            Ok(out)
        };
        LaurentFraction::new(sub(&self.num)?, sub(&self.den)?)
            .map_err(|_| Error::Eval(alloc::string::String::from("denominator vanishes")))
    }

    pub fn rename(&self, f: impl Fn(VarId) -> VarId + Copy) -> Self {
        Self::reduced(self.num.rename(f), self.den.rename(f))
    }
}

impl Default for LaurentFraction {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for LaurentFraction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for LaurentFraction {}

impl From<LaurentPoly> for LaurentFraction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &LaurentFraction {
    type Output = LaurentFraction;
    fn add(self, rhs: &LaurentFraction) -> LaurentFraction {
        if self.den == rhs.den {
            return LaurentFraction::reduced(&self.num + &rhs.num, self.den.clone());
        }
        if rhs.den.is_one() {
            return LaurentFraction::reduced(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        if self.den.is_one() {
            return LaurentFraction::reduced(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        LaurentFraction::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Neg for &LaurentFraction {
    type Output = LaurentFraction;
    fn neg(self) -> LaurentFraction {
        LaurentFraction { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &LaurentFraction {
    type Output = LaurentFraction;
    fn sub(self, rhs: &LaurentFraction) -> LaurentFraction {
        self + &(-rhs)
    }
}

impl Mul for &LaurentFraction {
    type Output = LaurentFraction;
    fn mul(self, rhs: &LaurentFraction) -> LaurentFraction {
        if self.is_zero() || rhs.is_zero() {
            return LaurentFraction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return LaurentFraction { num: &self.num * &rhs.num, den: LaurentPoly::one() };
        }
        // cancel across before multiplying out
        let (mut a, mut b) = (self.num.clone(), rhs.den.clone());
        if !b.is_one() {
            if let Some(q) = a.div_exact(&b) {
                a = q;
                b = LaurentPoly::one();
            }
        }
        let (mut c, mut d) = (rhs.num.clone(), self.den.clone());
        if !d.is_one() {
            if let Some(q) = c.div_exact(&d) {
                c = q;
                d = LaurentPoly::one();
            }
        }
        LaurentFraction::reduced(&a * &c, &d * &b)
    }
}

impl Div for &LaurentFraction {
    type Output = LaurentFraction;
    /// Panics on division by zero; see [`LaurentFraction::checked_div`].
    fn div(self, rhs: &LaurentFraction) -> LaurentFraction {
        self.checked_div(rhs).expect("division by zero fraction")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentFraction {
            type Output = LaurentFraction;
            fn $f(self, rhs: LaurentFraction) -> LaurentFraction {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for LaurentFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Zero for LaurentFraction {
    fn zero() -> Self {
        LaurentFraction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for LaurentFraction {
    fn one() -> Self {
        LaurentFraction::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn c(i: i32) -> LaurentFraction {
        LaurentFraction::var(VarId::c(1, i))
    }

    #[test]
    fn cancellation_to_one() {
        let x = &c(1) * &c(1).recip().unwrap();
        assert!(x.is_one());
        assert_eq!(x.to_string(), "1");
    }

    #[test]
    fn monomial_denominators_become_laurent() {
        let x = &(&c(1) + &c(2)) / &c(3);
        assert!(x.is_laurent_poly());
        assert!(x.is_positive());
    }

    #[test]
    fn positivity_examples() {
        let pos = LaurentFraction::new(
            (&c(1) + &c(2)).num().clone(),
            LaurentPoly::var(VarId::c(1, 3)),
        )
        .unwrap();
        assert!(pos.is_positive());
        let neg = &(&c(1) - &c(2)) / &c(3);
        assert!(!neg.is_positive());
        let five_thirds = LaurentFraction::constant(Rational::new(5.into(), 3.into()));
        assert!(five_thirds.is_positive());
    }

    #[test]
    fn polynomial_denominator_cancels_when_divisible() {
        let s = &c(1) + &c(2);
        let sq = &s * &s;
        let q = &sq / &s;
        assert!(q.is_laurent_poly());
        assert_eq!(q, s);
    }

    #[test]
    fn denominator_is_normalized() {
        let s = &(&c(1) + &c(2)).num().scale(&Rational::from_integer(3.into())) * &LaurentPoly::var(VarId::c(2, 1));
        let f = LaurentFraction::new(LaurentPoly::one(), s).unwrap();
        let (m, lead) = f.den().leading().unwrap();
        assert!(lead.is_one());
        assert!(m.iter().all(|&(_, e)| e >= 0));
    }

    #[test]
    fn evaluate_examples() {
        let mut pt = BTreeMap::new();
        pt.insert(VarId::c(1, 1), Rational::from_integer(3.into()));
        pt.insert(VarId::c(1, 2), Rational::from_integer(2.into()));
        let q = &c(1) / &c(2);
        assert_eq!(q.evaluate(&pt).unwrap(), Rational::new(3.into(), 2.into()));
        let mut ones = BTreeMap::new();
        ones.insert(VarId::c(1, 1), Rational::one());
        ones.insert(VarId::c(1, 2), Rational::one());
        assert_eq!((&c(1) + &c(2)).evaluate(&ones).unwrap(), Rational::from_integer(2.into()));
        let mut z = BTreeMap::new();
        z.insert(VarId::c(1, 1), Rational::zero());
        assert!(matches!(c(1).recip().unwrap().evaluate(&z), Err(Error::Eval(_))));
        assert!(matches!(c(2).evaluate(&z), Err(Error::MissingAssignment(_))));
    }
}
