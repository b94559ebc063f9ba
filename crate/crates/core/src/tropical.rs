//! Ultra-discretization: subtraction-free rational functions become exact
//! min-plus piecewise-linear functions.
//!
//! The variable `c_v` maps to the coordinate `x_v`, a positive constant maps
//! to `0`, sums become `min`, products become `+`, quotients become `-`, and
//! the torus value `α_i(t)` becomes the symbol `λ_i`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::symbolic::{LaurentFraction, LaurentPoly, Monomial, RationalExpr, VarId};

/// Keys an [`AffineForm`] can carry.
pub trait FormKey: Ord + Clone + fmt::Debug {
    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl FormKey for VarId {
    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::C(j, i) => write!(f, "x[{j},{i}]"),
            VarId::T(i) => write!(f, "L{i}"),
            VarId::Y(m, i) => write!(f, "y[{m},{i}]"),
        }
    }
}

impl FormKey for usize {
    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{self}]")
    }
}

/// `constant + Σ lambda[i]·λ_{i+1} + Σ coeffs[k]·x_k` with integer coefficients.
///
/// Zero coefficients are never stored and trailing zero `λ` coefficients are
/// trimmed, so the derived equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineForm<K: FormKey = VarId> {
    constant: i64,
    lambda: Vec<i64>,
    coeffs: BTreeMap<K, i64>,
}

impl<K: FormKey> Default for AffineForm<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: FormKey> AffineForm<K> {
    pub fn zero() -> Self {
        AffineForm { constant: 0, lambda: Vec::new(), coeffs: BTreeMap::new() }
    }

    pub fn constant(c: i64) -> Self {
        AffineForm { constant: c, ..Self::zero() }
    }

    pub fn var(k: K) -> Self {
        Self::zero().with_coeff(k, 1)
    }

    /// The symbol `λ_i` (1-based).
    pub fn lambda(i: usize) -> Self {
        Self::zero().with_lambda(i, 1)
    }

    /// Adds `c` to the coefficient of `x_k`.
    pub fn with_coeff(mut self, k: K, c: i64) -> Self {
        let e = self.coeffs.entry(k.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&k);
        }
        self
    }

    /// Adds `c` to the coefficient of `λ_i` (1-based).
    pub fn with_lambda(mut self, i: usize, c: i64) -> Self {
        assert!(i >= 1, "λ indices start at 1");
        if self.lambda.len() < i {
            self.lambda.resize(i, 0);
        }
        self.lambda[i - 1] += c;
        self.trim();
        self
    }

    pub fn with_constant(mut self, c: i64) -> Self {
        self.constant += c;
        self
    }

    fn trim(&mut self) {
        while self.lambda.last() == Some(&0) {
            self.lambda.pop();
        }
    }

    pub fn constant_term(&self) -> i64 {
        self.constant
    }

    pub fn coeff(&self, k: &K) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn lambda_coeff(&self, i: usize) -> i64 {
        self.lambda.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn lambda_coeffs(&self) -> &[i64] {
        &self.lambda
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&K, i64)> {
        self.coeffs.iter().map(|(k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.constant == 0 && self.lambda.is_empty() && self.coeffs.is_empty()
    }

    /// True when no `x` coefficient is present.
    pub fn is_x_free(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, -1)
    }

    /// `self + s·other`.
    pub fn add_scaled(&self, other: &Self, s: i64) -> Self {
        let mut out = self.clone();
        out.constant += s * other.constant;
        if out.lambda.len() < other.lambda.len() {
            out.lambda.resize(other.lambda.len(), 0);
        }
        for (i, c) in other.lambda.iter().enumerate() {
            out.lambda[i] += s * c;
        }
        out.trim();
        for (k, c) in &other.coeffs {
            out = out.with_coeff(k.clone(), s * c);
        }
        out
    }

    pub fn scale(&self, s: i64) -> Self {
        Self::zero().add_scaled(self, s)
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Value at `x`, `λ`; `None` when a variable or `λ` entry is missing.
    pub fn evaluate(&self, x: impl Fn(&K) -> Option<i64>, lambda: &[i64]) -> Option<i64> {
        let mut v = self.constant;
        for (i, c) in self.lambda.iter().enumerate() {
            v += c * lambda.get(i)?;
        }
        for (k, c) in &self.coeffs {
            v += c * x(k)?;
        }
        Some(v)
    }

    /// Maximum of the form over the box `lo ≤ x ≤ hi` at fixed `λ`.
    ///
    /// Keys missing from `bounds` make the result `None`.
    pub fn max_on_box(&self, bounds: &BTreeMap<K, (i64, i64)>, lambda: &[i64]) -> Option<i64> {
        let mut v = self.constant;
        for (i, c) in self.lambda.iter().enumerate() {
            v += c * lambda.get(i)?;
        }
        for (k, &c) in &self.coeffs {
            let &(lo, hi) = bounds.get(k)?;
            v += (c * lo).max(c * hi);
        }
        Some(v)
    }

    pub fn map_keys<K2: FormKey>(&self, f: impl Fn(&K) -> K2) -> AffineForm<K2> {
        let mut out = AffineForm::<K2> { constant: self.constant, lambda: self.lambda.clone(), coeffs: BTreeMap::new() };
        for (k, &c) in &self.coeffs {
            out = out.with_coeff(f(k), c);
        }
        out
    }
}

impl<K: FormKey> fmt::Display for AffineForm<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, c: i64, name: &dyn Fn(&mut fmt::Formatter<'_>) -> fmt::Result| {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            name(f)
        };
        for (i, &c) in self.lambda.iter().enumerate() {
            if c != 0 {
                term(f, c, &|f| write!(f, "L{}", i + 1))?;
            }
        }
        for (k, &c) in &self.coeffs {
            term(f, c, &|f| k.fmt_key(f))?;
        }
        if self.constant != 0 || first {
            if first {
                write!(f, "{}", self.constant)?;
            } else if self.constant < 0 {
                write!(f, " - {}", -self.constant)?;
            } else {
                write!(f, " + {}", self.constant)?;
            }
        }
        Ok(())
    }
}

/// A minimum of finitely many affine forms, duplicates removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinCombination<K: FormKey = VarId> {
    forms: Vec<AffineForm<K>>,
}

impl<K: FormKey> MinCombination<K> {
    /// Panics on an empty list.
    pub fn new(mut forms: Vec<AffineForm<K>>) -> Self {
        assert!(!forms.is_empty(), "a minimum needs at least one form");
        forms.sort();
        forms.dedup();
        MinCombination { forms }
    }

    pub fn forms(&self) -> &[AffineForm<K>] {
        &self.forms
    }

    pub fn evaluate(&self, x: impl Fn(&K) -> Option<i64> + Copy, lambda: &[i64]) -> Option<i64> {
        let mut best: Option<i64> = None;
        for form in &self.forms {
            let v = form.evaluate(x, lambda)?;
            best = Some(best.map_or(v, |b| b.min(v)));
        }
        best
    }

    /// Drops every form `F` for which a kept form `G` satisfies `G ≤ F` on
    /// the whole box, which leaves the minimum unchanged there.
    pub fn prune_on_box(&mut self, bounds: &BTreeMap<K, (i64, i64)>, lambda: &[i64]) {
        let mut kept: Vec<AffineForm<K>> = Vec::new();
        for f in core::mem::take(&mut self.forms) {
            if kept.iter().any(|g| g.sub(&f).max_on_box(bounds, lambda).is_some_and(|m| m <= 0)) {
                continue;
            }
            kept.retain(|g| !f.sub(g).max_on_box(bounds, lambda).is_some_and(|m| m <= 0));
            kept.push(f);
        }
        kept.sort();
        self.forms = kept;
    }
}

/// A min-plus expression tree over [`AffineForm`]s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TropExpr {
    Form(AffineForm),
    Min(Vec<TropExpr>),
    Plus(Vec<TropExpr>),
    Minus(alloc::boxed::Box<TropExpr>, alloc::boxed::Box<TropExpr>),
}

impl TropExpr {
    pub fn min_of(children: Vec<TropExpr>) -> Self {
        assert!(!children.is_empty(), "empty min");
        if children.len() == 1 {
            return children.into_iter().next().unwrap();
        }
        TropExpr::Min(children)
    }

    pub fn plus_of(children: Vec<TropExpr>) -> Self {
        assert!(!children.is_empty(), "empty sum");
        if children.len() == 1 {
            return children.into_iter().next().unwrap();
        }
        TropExpr::Plus(children)
    }

    pub fn minus(a: TropExpr, b: TropExpr) -> Self {
        TropExpr::Minus(alloc::boxed::Box::new(a), alloc::boxed::Box::new(b))
    }

    pub fn from_min(m: MinCombination) -> Self {
        Self::min_of(m.forms.into_iter().map(TropExpr::Form).collect())
    }

    pub fn variables(&self) -> Vec<VarId> {
        fn walk(e: &TropExpr, out: &mut Vec<VarId>) {
            match e {
                TropExpr::Form(f) => out.extend(f.coeffs().map(|(k, _)| *k)),
                TropExpr::Min(xs) | TropExpr::Plus(xs) => xs.iter().for_each(|x| walk(x, out)),
                TropExpr::Minus(a, b) => {
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

    /// All affine forms appearing at the leaves.
    pub fn leaves(&self) -> Vec<&AffineForm> {
        let mut out = Vec::new();
        fn walk<'a>(e: &'a TropExpr, out: &mut Vec<&'a AffineForm>) {
            match e {
                TropExpr::Form(f) => out.push(f),
                TropExpr::Min(xs) | TropExpr::Plus(xs) => xs.iter().for_each(|x| walk(x, out)),
                TropExpr::Minus(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        walk(self, &mut out);
        out
    }
}

impl fmt::Display for TropExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, xs: &[TropExpr], sep: &str| -> fmt::Result {
            for (k, x) in xs.iter().enumerate() {
                if k > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{x}")?;
            }
            Ok(())
        };
        match self {
            TropExpr::Form(a) => write!(f, "{a}"),
            TropExpr::Min(xs) => {
                f.write_str("min(")?;
                list(f, xs, ", ")?;
                f.write_str(")")
            }
            TropExpr::Plus(xs) => {
                f.write_str("(")?;
                list(f, xs, " + ")?;
                f.write_str(")")
            }
            TropExpr::Minus(a, b) => write!(f, "({a} - {b})"),
        }
    }
}

/// Tropicalization of a single Laurent monomial: `T_i` goes to `λ_i`.
pub fn tropicalize_monomial(m: &Monomial) -> AffineForm {
    let mut out = AffineForm::zero();
    for &(v, e) in m.iter() {
        out = match v {
            VarId::T(i) => out.with_lambda(i as usize, e as i64),
            _ => out.with_coeff(v, e as i64),
        };
    }
    out
}

/// Tropicalization of a Laurent polynomial with positive coefficients.
pub fn tropicalize_poly(p: &LaurentPoly) -> Result<MinCombination> {
    if p.is_zero() {
        return Err(Error::Positivity(String::from("the zero function has no tropicalization")));
    }
    if !p.all_coefficients_nonnegative() {
        return Err(Error::Positivity(alloc::format!("negative coefficient in {p}")));
    }
    Ok(MinCombination::new(p.terms().map(|(m, _)| tropicalize_monomial(m)).collect()))
}

/// Tropicalization of a positive fraction:
/// `min(num monomials) - min(den monomials)`, the subtraction omitted when
/// the denominator is `1`.
pub fn tropicalize(f: &LaurentFraction) -> Result<TropExpr> {
    if !f.is_positive() {
        return Err(Error::Positivity(alloc::format!("{f}")));
    }
    let num = TropExpr::from_min(tropicalize_poly(f.num())?);
    if f.den().is_one() {
        return Ok(num);
    }
    Ok(TropExpr::minus(num, TropExpr::from_min(tropicalize_poly(f.den())?)))
}

/// Structural tropicalization of an expression tree, bypassing
/// normalization.
pub fn tropicalize_expr(e: &RationalExpr) -> TropExpr {
    match e {
        RationalExpr::Var(v) => TropExpr::Form(tropicalize_monomial(&Monomial::var(*v))),
        RationalExpr::Const(_) => TropExpr::Form(AffineForm::zero()),
        RationalExpr::Add(xs) => TropExpr::min_of(xs.iter().map(tropicalize_expr).collect()),
        RationalExpr::Mul(xs) => TropExpr::plus_of(xs.iter().map(tropicalize_expr).collect()),
        RationalExpr::Div(a, b) => TropExpr::minus(tropicalize_expr(a), tropicalize_expr(b)),
    }
}

/// Exact min/+/− evaluation.
pub fn trop_eval(e: &TropExpr, x: &BTreeMap<VarId, i64>, lambda: &[i64]) -> Result<i64> {
    Ok(match e {
        TropExpr::Form(f) => match f.evaluate(|k| x.get(k).copied(), lambda) {
            Some(v) => v,
            None => {
                let missing = f.coeffs().map(|(k, _)| *k).find(|k| !x.contains_key(k));
                return Err(match missing {
                    Some(k) => Error::MissingAssignment(k),
                    None => Error::Invalid(alloc::format!("λ has {} entries, form needs more", lambda.len())),
                });
            }
        },
        TropExpr::Min(xs) => {
            let mut best = i64::MAX;
            for c in xs {
                best = best.min(trop_eval(c, x, lambda)?);
            }
            best
        }
        TropExpr::Plus(xs) => {
            let mut acc = 0;
            for c in xs {
                acc += trop_eval(c, x, lambda)?;
            }
            acc
        }
        TropExpr::Minus(a, b) => trop_eval(a, x, lambda)? - trop_eval(b, x, lambda)?,
    })
}

/// How [`trop_equal_on_box`] visits the box.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxCheck {
    /// Boxes with at most this many integer points are scanned exhaustively.
    pub exhaustive_limit: u64,
    /// Number of sampled points above the limit.
    pub samples: u64,
    pub seed: u64,
}

impl Default for BoxCheck {
    fn default() -> Self {
        BoxCheck { exhaustive_limit: 200_000, samples: 20_000, seed: 0x5eed }
    }
}

/// Every integer point of the box, in lexicographic order of the keys.
pub fn box_points<K: Ord + Clone>(bounds: &BTreeMap<K, (i64, i64)>) -> impl Iterator<Item = BTreeMap<K, i64>> + '_ {
    let keys: Vec<&K> = bounds.keys().collect();
    let ranges: Vec<(i64, i64)> = bounds.values().copied().collect();
    let empty = ranges.iter().any(|&(lo, hi)| lo > hi);
    let mut cur: Option<Vec<i64>> = if empty { None } else { Some(ranges.iter().map(|r| r.0).collect()) };
    core::iter::from_fn(move || {
        let point = cur.clone()?;
        let out = keys.iter().zip(&point).map(|(k, &v)| ((*k).clone(), v)).collect();
        let mut next = point;
        let mut i = next.len();
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if next[i] < ranges[i].1 {
                next[i] += 1;
                for j in (i + 1)..next.len() {
                    next[j] = ranges[j].0;
                }
                cur = Some(next);
                break;
            }
        }
        Some(out)
    })
}

/// Number of integer points in the box, saturating.
pub fn box_size<K>(bounds: &BTreeMap<K, (i64, i64)>) -> u64 {
    bounds
        .values()
        .map(|&(lo, hi)| if hi < lo { 0 } else { (hi - lo + 1) as u64 })
        .fold(1u64, |acc, s| acc.saturating_mul(s))
}

/// Whether `a` and `b` agree at every integer point of the box (or at every
/// sampled point when the box exceeds `check.exhaustive_limit`). A point where
/// either side fails to evaluate counts as a disagreement.
pub fn trop_equal_on_box(a: &TropExpr, b: &TropExpr, bounds: &BTreeMap<VarId, (i64, i64)>, lambda: &[i64], check: BoxCheck) -> bool {
    let agree = |p: &BTreeMap<VarId, i64>| match (trop_eval(a, p, lambda), trop_eval(b, p, lambda)) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    };
    if box_size(bounds) <= check.exhaustive_limit {
        return box_points(bounds).all(|p| agree(&p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(check.seed);
    (0..check.samples).all(|_| {
        let p: BTreeMap<VarId, i64> = bounds.iter().map(|(k, &(lo, hi))| (*k, rng.gen_range(lo..=hi))).collect();
        agree(&p)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn c(i: i32) -> VarId {
        VarId::c(1, i)
    }

    fn point(vals: &[(VarId, i64)]) -> BTreeMap<VarId, i64> {
        vals.iter().copied().collect()
    }

    fn cube(vars: &[VarId], lo: i64, hi: i64) -> BTreeMap<VarId, (i64, i64)> {
        vars.iter().map(|&v| (v, (lo, hi))).collect()
    }

    #[test]
    fn sum_with_quotient() {
        let f = &LaurentFraction::var(c(1)) + &(&LaurentFraction::var(c(2)) / &LaurentFraction::var(c(3)));
        let t = tropicalize(&f).unwrap();
        let expect = TropExpr::Min(vec![
            TropExpr::Form(AffineForm::var(c(1))),
            TropExpr::Form(AffineForm::var(c(2)).with_coeff(c(3), -1)),
        ]);
        assert!(trop_equal_on_box(&t, &expect, &cube(&[c(1), c(2), c(3)], -2, 2), &[], BoxCheck::default()));
        assert_eq!(t.to_string(), "min(x[1,1], x[1,2] - x[1,3])");
    }

    #[test]
    fn constants_go_to_zero() {
        let t = tropicalize(&LaurentFraction::from_int(7)).unwrap();
        assert_eq!(t, TropExpr::Form(AffineForm::zero()));
    }

    #[test]
    fn quotient_rule() {
        let f = &(&LaurentFraction::var(c(1)) + &LaurentFraction::var(c(2))) / &LaurentFraction::var(c(3));
        let t = tropicalize(&f).unwrap();
        let expect = TropExpr::minus(
            TropExpr::Min(vec![TropExpr::Form(AffineForm::var(c(1))), TropExpr::Form(AffineForm::var(c(2)))]),
            TropExpr::Form(AffineForm::var(c(3))),
        );
        assert!(trop_equal_on_box(&t, &expect, &cube(&[c(1), c(2), c(3)], -2, 2), &[], BoxCheck::default()));
    }

    #[test]
    fn negative_coefficients_are_rejected() {
        let f = &LaurentFraction::var(c(1)) - &LaurentFraction::var(c(2));
        assert!(matches!(tropicalize(&f), Err(Error::Positivity(_))));
    }

    #[test]
    fn torus_values_become_lambda() {
        let f = &LaurentFraction::var(VarId::t(1)) / &LaurentFraction::var(c(1));
        let t = tropicalize(&f).unwrap();
        assert_eq!(t, TropExpr::Form(AffineForm::lambda(1).with_coeff(c(1), -1)));
        assert_eq!(t.to_string(), "L1 - x[1,1]");
    }

    #[test]
    fn evaluation_examples() {
        let m = TropExpr::Min(vec![
            TropExpr::Form(AffineForm::var(c(1))),
            TropExpr::Form(AffineForm::var(c(2)).with_coeff(c(3), -1)),
        ]);
        assert_eq!(trop_eval(&m, &point(&[(c(1), 1), (c(2), 0), (c(3), 0)]), &[]).unwrap(), 0);
        let f = TropExpr::Form(AffineForm::lambda(1).with_coeff(c(1), -1));
        assert_eq!(trop_eval(&f, &point(&[(c(1), 2)]), &[1]).unwrap(), -1);
        let p = TropExpr::Plus(vec![TropExpr::Form(AffineForm::var(c(1))), TropExpr::Form(AffineForm::var(c(1)))]);
        assert_eq!(trop_eval(&p, &point(&[(c(1), 3)]), &[]).unwrap(), 6);
        assert_eq!(trop_eval(&p, &point(&[]), &[]), Err(Error::MissingAssignment(c(1))));
    }

    #[test]
    fn box_equality_examples() {
        let x1 = TropExpr::Form(AffineForm::var(c(1)));
        let x2 = TropExpr::Form(AffineForm::var(c(2)));
        let sq = cube(&[c(1), c(2)], -2, 2);
        assert!(trop_equal_on_box(&x1, &x1, &sq, &[], BoxCheck::default()));
        let a = TropExpr::Min(vec![x1.clone(), x2.clone()]);
        let b = TropExpr::Min(vec![x2, x1.clone()]);
        assert!(trop_equal_on_box(&a, &b, &sq, &[], BoxCheck::default()));
        let shifted = TropExpr::Min(vec![x1.clone(), TropExpr::Form(AffineForm::var(c(1)).with_constant(-1))]);
        assert!(!trop_equal_on_box(&x1, &shifted, &cube(&[c(1)], 0, 1), &[], BoxCheck::default()));
    }

    #[test]
    fn sampling_above_the_limit_is_deterministic() {
        let x1 = TropExpr::Form(AffineForm::var(c(1)));
        let y = TropExpr::Min(vec![x1.clone(), TropExpr::Form(AffineForm::var(c(1)).with_constant(1))]);
        let check = BoxCheck { exhaustive_limit: 1, samples: 50, seed: 7 };
        assert!(trop_equal_on_box(&x1, &y, &cube(&[c(1), c(2)], -5, 5), &[], check));
    }

    #[test]
    fn pruning_keeps_the_minimum() {
        let mut m = MinCombination::new(vec![
            AffineForm::<usize>::var(1),
            AffineForm::var(1).with_constant(2),
            AffineForm::var(2),
        ]);
        let bounds: BTreeMap<usize, (i64, i64)> = [(1, (0, 3)), (2, (0, 3))].into_iter().collect();
        m.prune_on_box(&bounds, &[]);
        assert_eq!(m.forms(), &[AffineForm::var(1), AffineForm::var(2)]);
    }

    #[test]
    fn box_points_enumerates_in_order() {
        let b: BTreeMap<usize, (i64, i64)> = [(1, (0, 1)), (2, (5, 6))].into_iter().collect();
        let pts: Vec<Vec<i64>> = box_points(&b).map(|p| p.values().copied().collect()).collect();
        assert_eq!(pts, vec![vec![0, 5], vec![0, 6], vec![1, 5], vec![1, 6]]);
        assert_eq!(box_size(&b), 4);
    }

    #[test]
    fn form_display() {
        let f = AffineForm::lambda(2).with_coeff(c(2), -1).with_coeff(c(1), 1);
        assert_eq!(f.to_string(), "L2 + x[1,1] - x[1,2]");
        assert_eq!(AffineForm::<VarId>::zero().to_string(), "0");
        assert_eq!(AffineForm::<usize>::var(3).scale(2).with_constant(-1).to_string(), "2*x[3] - 1");
    }
}
