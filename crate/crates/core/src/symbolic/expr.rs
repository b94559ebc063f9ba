use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::{LaurentFraction, VarId};
use crate::error::{Error, Result};
use crate::Rational;

/// A subtraction-free rational expression tree.
///
/// There is no negation node and constants are strictly positive, so every
/// expression built through the constructors is positive in the sense of
/// tropicalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalExpr {
    Var(VarId),
    Const(Rational),
    Add(Vec<RationalExpr>),
    Mul(Vec<RationalExpr>),
    Div(Box<RationalExpr>, Box<RationalExpr>),
}

impl RationalExpr {
    pub fn var(v: VarId) -> Self {
        RationalExpr::Var(v)
    }

    /// Panics unless `c > 0`.
    pub fn constant(c: Rational) -> Self {
        assert!(c.is_positive(), "constants in a subtraction-free expression must be positive");
        RationalExpr::Const(c)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// Panics on an empty list.
    pub fn sum(terms: Vec<RationalExpr>) -> Self {
        assert!(!terms.is_empty(), "empty sum");
        RationalExpr::Add(terms)
    }

    /// Panics on an empty list.
    pub fn product(factors: Vec<RationalExpr>) -> Self {
        assert!(!factors.is_empty(), "empty product");
        RationalExpr::Mul(factors)
    }

    pub fn ratio(a: RationalExpr, b: RationalExpr) -> Self {
        RationalExpr::Div(Box::new(a), Box::new(b))
    }

    /// Expands into a canonical [`LaurentFraction`].
    pub fn normalize(&self) -> Result<LaurentFraction> {
        Ok(match self {
            RationalExpr::Var(v) => LaurentFraction::var(*v),
            RationalExpr::Const(c) => LaurentFraction::constant(c.clone()),
            RationalExpr::Add(ts) => {
                let mut acc = LaurentFraction::zero();
                for t in ts {
                    acc = &acc + &t.normalize()?;
                }
                acc
            }
            RationalExpr::Mul(fs) => {
                let mut acc = LaurentFraction::one();
                for f in fs {
                    acc = &acc * &f.normalize()?;
                }
                acc
            }
            RationalExpr::Div(a, b) => a.normalize()?.checked_div(&b.normalize()?)?,
        })
    }

    /// Direct recursive evaluation, independent of [`normalize`](Self::normalize).
    pub fn evaluate(&self, point: &BTreeMap<VarId, Rational>) -> Result<Rational> {
        Ok(match self {
            RationalExpr::Var(v) => point.get(v).cloned().ok_or(Error::MissingAssignment(*v))?,
            RationalExpr::Const(c) => c.clone(),
            RationalExpr::Add(ts) => {
                let mut acc = Rational::zero();
                for t in ts {
                    acc += t.evaluate(point)?;
                }
                acc
            }
            RationalExpr::Mul(fs) => {
                let mut acc = Rational::one();
                for f in fs {
                    acc *= f.evaluate(point)?;
                }
                acc
            }
            RationalExpr::Div(a, b) => {
                let d = b.evaluate(point)?;
                if d.is_zero() {
                    return Err(Error::Eval(alloc::string::String::from("division by zero")));
                }
                a.evaluate(point)? / d
            }
        })
    }

    pub fn variables(&self) -> Vec<VarId> {
        fn walk(e: &RationalExpr, out: &mut Vec<VarId>) {
            match e {
                RationalExpr::Var(v) => out.push(*v),
                RationalExpr::Const(_) => {}
                RationalExpr::Add(xs) | RationalExpr::Mul(xs) => xs.iter().for_each(|x| walk(x, out)),
                RationalExpr::Div(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, xs: &[RationalExpr], sep: &str| -> fmt::Result {
            f.write_str("(")?;
            for (k, x) in xs.iter().enumerate() {
                if k > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")
        };
        match self {
            RationalExpr::Var(v) => write!(f, "{v}"),
            RationalExpr::Const(c) => write!(f, "{c}"),
            RationalExpr::Add(xs) => join(f, xs, " + "),
            RationalExpr::Mul(xs) => join(f, xs, " * "),
            RationalExpr::Div(a, b) => write!(f, "({a} / {b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::LaurentPoly;

    fn c(i: i32) -> RationalExpr {
        RationalExpr::var(VarId::c(1, i))
    }

    #[test]
    fn variable_normalizes_to_itself() {
        let f = c(1).normalize().unwrap();
        assert_eq!(f.num(), &LaurentPoly::var(VarId::c(1, 1)));
        assert!(f.den().is_one());
    }

    #[test]
    fn quotient_of_sum_by_variable() {
        let e = RationalExpr::ratio(RationalExpr::sum(alloc::vec![c(1), c(2)]), c(3));
        let f = e.normalize().unwrap();
        assert!(f.is_positive());
        let expect = &(&LaurentFraction::var(VarId::c(1, 1)) + &LaurentFraction::var(VarId::c(1, 2)))
            / &LaurentFraction::var(VarId::c(1, 3));
        assert_eq!(f, expect);
    }

    #[test]
    fn self_cancellation() {
        let e = RationalExpr::product(alloc::vec![c(1), RationalExpr::ratio(RationalExpr::int(1), c(1))]);
        assert!(e.normalize().unwrap().is_one());
    }

    #[test]
    #[should_panic]
    fn nonpositive_constant_rejected() {
        RationalExpr::int(0);
    }
}
