#![allow(dead_code)]

use std::collections::BTreeMap;

use dgcrystal::symbolic::{LaurentFraction, RationalExpr, VarId};
use dgcrystal::{Rational, Weight};
use proptest::prelude::*;

pub fn rat(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

pub fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=7).prop_map(|(a, b)| rat(a, b))
}

pub const VARS: [VarId; 3] = [VarId::C(1, 1), VarId::C(1, 2), VarId::C(2, 1)];

/// Small subtraction-free expression trees over three variables.
pub fn expr() -> impl Strategy<Value = RationalExpr> {
    let leaf = prop_oneof![
        (0usize..3).prop_map(|k| RationalExpr::var(VARS[k])),
        (1i64..=3, 1i64..=3).prop_map(|(a, b)| RationalExpr::constant(rat(a, b))),
    ];
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..=3).prop_map(RationalExpr::sum),
            prop::collection::vec(inner.clone(), 1..=3).prop_map(RationalExpr::product),
            (inner.clone(), inner).prop_map(|(a, b)| RationalExpr::ratio(a, b)),
        ]
    })
}

pub fn point() -> impl Strategy<Value = BTreeMap<VarId, Rational>> {
    prop::collection::vec(positive_rational(), 3).prop_map(|v| VARS.iter().copied().zip(v).collect())
}

pub fn var(v: VarId) -> LaurentFraction {
    LaurentFraction::var(v)
}

/// All dominant weights of rank `n` with entries at most `max`.
pub fn dominant_weights(n: usize, max: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w: Vec<i64>| (0..=max).map(move |a| [w.clone(), vec![a]].concat())).collect();
    }
    out.into_iter().map(Weight::new).collect()
}

/// The `weyl_dim` formula recomputed as a product over positive roots
/// `Π_{a≤b} (Σ_{a..=b} (λ_k+1)) / (b−a+1)`.
pub fn dim_oracle(lambda: &Weight) -> u64 {
    let l = lambda.coeffs();
    let n = l.len();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for a in 0..n {
        for b in a..n {
            num *= l[a..=b].iter().map(|&x| (x + 1) as u128).sum::<u128>();
            den *= (b - a + 1) as u128;
        }
    }
    (num / den) as u64
}
