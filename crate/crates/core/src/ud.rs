//! The tropicalized crystal `B_{f_B,Θ⁻}(λ)` on `ℤ^N`.
//!
//! Coordinates follow `i0`: position `m` carries color `i_m` and the
//! variable `c_{j,i}` of block `j`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cartan::{CartanA, Weight};
use crate::crystal::{generate_graph, isomorphic, Crystal, CrystalGraph};
use crate::error::Result;
use crate::geometric::{c_vars, f_b, FbRoute, TorusElement};
use crate::polyhedral::{enumerate_sigma, payload_of, PolyhedralCrystal, ZInfElement};
use crate::symbolic::{LaurentFraction, VarId};
use crate::tropical::{trop_eval, tropicalize, AffineForm, TropExpr};
use crate::weyl::longest_word_i0;

/// Which partial sums drive `ẽ_i` and `f̃_i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum XmConvention {
    /// `P_m = Σ_{k<m} a_{i_k,i} x_k + x_m`, the tropicalization of the
    /// monomials in the geometric action.
    #[default]
    Corrected,
    /// `X_m = Σ_{k≤m} a_{i_k,i} x_k`.
    Printed,
}

/// A point of `ℤ^N`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BElement {
    pub coords: Vec<i64>,
}

impl BElement {
    pub fn new(coords: Vec<i64>) -> Self {
        BElement { coords }
    }

    pub fn zero(n: usize) -> Self {
        BElement { coords: alloc::vec![0; n * (n + 1) / 2] }
    }
}

/// `B_{f_B,Θ⁻}(λ)` for `SL_{n+1}` with the word `i0`.
#[derive(Clone, Debug)]
pub struct UdCrystal {
    pub n: usize,
    pub lambda: Weight,
    pub convention: XmConvention,
    word: Vec<usize>,
    /// `(j, i)` of each position.
    index: Vec<(usize, usize)>,
    decoration: TropExpr,
}

impl UdCrystal {
    pub fn new(lambda: Weight) -> Self {
        Self::with_convention(lambda, XmConvention::Corrected)
    }

    pub fn with_convention(lambda: Weight, convention: XmConvention) -> Self {
        let n = lambda.rank();
        let cs: Vec<LaurentFraction> = c_vars(n).into_iter().map(LaurentFraction::var).collect();
        let fb = f_b(n, &TorusElement::symbolic(n), &cs, FbRoute::Closed).expect("symbolic input");
        let decoration = tropicalize(&fb).expect("f_B is a positive Laurent polynomial");
        let index = c_vars(n)
            .into_iter()
            .map(|v| match v {
                VarId::C(j, i) => (j as usize, i as usize),
                _ => unreachable!(),
            })
            .collect();
        UdCrystal { n, lambda, convention, word: longest_word_i0(n), index, decoration }
    }

    pub fn cartan(&self) -> CartanA {
        CartanA::new(self.n)
    }

    /// `UD(f_B)`, with `α_j(t)` read as `λ_j`.
    pub fn decoration(&self) -> &TropExpr {
        &self.decoration
    }

    fn coord(&self, x: &BElement, j: usize, i: usize) -> i64 {
        if i == 0 {
            return 0;
        }
        let m = self.index.iter().position(|&p| p == (j, i)).expect("(j,i) inside the staircase");
        x.coords[m]
    }

    /// The closed system: `x_{1,i} ≥ x_{2,i−1} ≥ ⋯ ≥ x_{i,1} ≥ 0` and
    /// `λ_i ≥ x_{j,i−j+1} − x_{j,i−j}` for `1 ≤ j ≤ i ≤ n`.
    pub fn member_closed(&self, x: &BElement) -> bool {
        let n = self.n;
        for i in 1..=n {
            for j in 1..i {
                if self.coord(x, j, i - j + 1) < self.coord(x, j + 1, i - j) {
                    return false;
                }
            }
            if self.coord(x, i, 1) < 0 {
                return false;
            }
            for j in 1..=i {
                if self.lambda.get(i) < self.coord(x, j, i - j + 1) - self.coord(x, j, i - j) {
                    return false;
                }
            }
        }
        true
    }

    /// `UD(f_B)(x) ≥ 0`.
    pub fn member_trop(&self, x: &BElement) -> bool {
        let point: BTreeMap<VarId, i64> =
            self.index.iter().zip(&x.coords).map(|(&(j, i), &v)| (VarId::c(j as i32, i as i32), v)).collect();
        trop_eval(&self.decoration, &point, self.lambda.coeffs()).expect("every variable assigned") >= 0
    }

    fn a(&self, m: usize, i: usize) -> i64 {
        self.cartan().a(self.word[m - 1], i)
    }

    pub fn ud_wt(&self, x: &BElement) -> Weight {
        Weight::new(
            (1..=self.n)
                .map(|i| self.lambda.get(i) - (1..=x.coords.len()).map(|k| self.a(k, i) * x.coords[k - 1]).sum::<i64>())
                .collect(),
        )
    }

    /// `max_{i_m = i} (x_m + Σ_{k>m} a_{i_k,i} x_k)`.
    pub fn ud_eps(&self, x: &BElement, i: usize) -> i64 {
        let big_n = x.coords.len();
        (1..=big_n)
            .filter(|&m| self.word[m - 1] == i)
            .map(|m| x.coords[m - 1] + ((m + 1)..=big_n).map(|k| self.a(k, i) * x.coords[k - 1]).sum::<i64>())
            .max()
            .expect("every color occurs in i0")
    }

    /// The partial sums at the positions of color `i`.
    pub fn partial_sums(&self, x: &BElement, i: usize) -> Vec<(usize, i64)> {
        let big_n = x.coords.len();
        (1..=big_n)
            .filter(|&m| self.word[m - 1] == i)
            .map(|m| {
                let head: i64 = (1..m).map(|k| self.a(k, i) * x.coords[k - 1]).sum();
                let own = match self.convention {
                    XmConvention::Corrected => x.coords[m - 1],
                    XmConvention::Printed => self.a(m, i) * x.coords[m - 1],
                };
                (m, head + own)
            })
            .collect()
    }

    /// `(min M, max M)` for the argmin set `M` of the partial sums.
    fn argmin_ends(&self, x: &BElement, i: usize) -> (usize, usize) {
        let sums = self.partial_sums(x, i);
        let low = sums.iter().map(|&(_, v)| v).min().expect("nonempty");
        let hits: Vec<usize> = sums.iter().filter(|&&(_, v)| v == low).map(|&(m, _)| m).collect();
        (hits[0], *hits.last().expect("nonempty"))
    }

    fn shifted(&self, x: &BElement, m: usize, by: i64) -> Option<BElement> {
        let mut y = x.clone();
        y.coords[m - 1] += by;
        self.member_trop(&y).then_some(y)
    }

    pub fn ud_e(&self, x: &BElement, i: usize) -> Option<BElement> {
        let (_, me) = self.argmin_ends(x, i);
        self.shifted(x, me, -1)
    }

    pub fn ud_f(&self, x: &BElement, i: usize) -> Option<BElement> {
        let (mf, _) = self.argmin_ends(x, i);
        self.shifted(x, mf, 1)
    }

    /// The closed form of `ẽ_i^r` obtained by tropicalizing the geometric
    /// action, with the partial sums of the current convention:
    /// `x'_j = x_j + min(min_{m<j}(r + P_m), min_{m≥j} P_m)
    ///           − min(min_{m≤j}(r + P_m), min_{m>j} P_m)`.
    ///
    /// No membership check is applied.
    pub fn e_power_closed(&self, x: &BElement, i: usize, r: i64) -> BElement {
        let sums = self.partial_sums(x, i);
        let coords = (1..=x.coords.len())
            .map(|j| {
                let first = sums.iter().map(|&(m, p)| if m < j { r + p } else { p }).min().expect("nonempty");
                let second = sums.iter().map(|&(m, p)| if m <= j { r + p } else { p }).min().expect("nonempty");
                x.coords[j - 1] + first - second
            })
            .collect();
        BElement { coords }
    }

    /// `ẽ_i^r` by iterating single steps; negative `r` applies `f̃_i`.
    pub fn e_power_iterated(&self, x: &BElement, i: usize, r: i64) -> Option<BElement> {
        let mut y = x.clone();
        for _ in 0..r.unsigned_abs() {
            y = if r > 0 { self.ud_e(&y, i)? } else { self.ud_f(&y, i)? };
        }
        Some(y)
    }
}

impl Crystal for UdCrystal {
    type Elem = BElement;

    fn cartan(&self) -> CartanA {
        CartanA::new(self.n)
    }
    fn e(&self, b: &BElement, i: usize) -> Option<BElement> {
        self.ud_e(b, i)
    }
    fn f(&self, b: &BElement, i: usize) -> Option<BElement> {
        self.ud_f(b, i)
    }
    fn wt(&self, b: &BElement) -> Weight {
        self.ud_wt(b)
    }
    fn eps(&self, b: &BElement, i: usize) -> i64 {
        self.ud_eps(b, i)
    }
    fn payload(&self, b: &BElement) -> String {
        payload_of(&ZInfElement::from_coords(self.n, &b.coords), self.n)
    }
}

/// The system checked by [`UdCrystal::member_closed`] as affine forms
/// `≥ 0` in `x_{j,i}` and `λ`.
pub fn closed_inequalities(n: usize) -> Vec<AffineForm> {
    let x = |j: usize, i: usize| AffineForm::var(VarId::c(j as i32, i as i32));
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..i {
            out.push(x(j, i - j + 1).sub(&x(j + 1, i - j)));
        }
        out.push(x(i, 1));
        for j in 1..=i {
            let below = if i == j { AffineForm::zero() } else { x(j, i - j) };
            out.push(AffineForm::lambda(i).sub(&x(j, i - j + 1)).add(&below));
        }
    }
    out
}

/// The crystal graph generated from `0` by the `f̃_i`.
pub fn generate_b(lambda: &Weight, cap: usize) -> Result<CrystalGraph> {
    let c = UdCrystal::new(lambda.clone());
    generate_graph(&c, &BElement::zero(lambda.rank()), cap)
}

/// Outcome of [`compare_with_polyhedral`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub lambda: Weight,
    pub size_b: usize,
    pub size_sigma: usize,
    pub sets_equal: bool,
    pub operators_equal: bool,
    pub isomorphic: bool,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.sets_equal && self.operators_equal && self.isomorphic
    }
}

/// Compares `B_{f_B,Θ⁻}(λ)` with `Σ_ι[λ]` under `(j,i) ↔ (j;i)`: element
/// sets, `ẽ_i`, `f̃_i`, `wt`, `ε_i` pointwise, and the two graphs.
pub fn compare_with_polyhedral(lambda: &Weight, cap: usize) -> Result<Comparison> {
    let n = lambda.rank();
    let ud = UdCrystal::new(lambda.clone());
    let poly = PolyhedralCrystal::a_n(lambda.clone());
    let gb = generate_graph(&ud, &BElement::zero(n), cap)?;
    let gs = generate_graph(&poly, &ZInfElement::zero(), cap)?;

    let mut from_b: Vec<&str> = gb.payloads();
    from_b.sort_unstable();
    let sigma = enumerate_sigma(n, lambda);
    let mut from_sigma: Vec<String> = sigma.iter().map(|x| payload_of(x, n)).collect();
    from_sigma.sort_unstable();
    let sets_equal = from_b.len() == from_sigma.len() && from_b.iter().zip(&from_sigma).all(|(a, b)| *a == b.as_str());

    let to_b = |z: &ZInfElement| z.to_coords(n).map(BElement::new);
    let mut operators_equal = true;
    for z in &sigma {
        let Some(x) = to_b(z) else {
            operators_equal = false;
            break;
        };
        for i in 1..=n {
            let same_e = ud.ud_e(&x, i) == poly.e(z, i).and_then(|y| to_b(&y));
            let same_f = ud.ud_f(&x, i) == poly.f(z, i).and_then(|y| to_b(&y));
            if !same_e || !same_f || ud.ud_eps(&x, i) != poly.eps(z, i) {
                operators_equal = false;
            }
        }
        if ud.ud_wt(&x) != poly.wt(z) {
            operators_equal = false;
        }
    }
    Ok(Comparison {
        lambda: lambda.clone(),
        size_b: gb.len(),
        size_sigma: sigma.len(),
        sets_equal,
        operators_equal,
        isomorphic: isomorphic(&gb, &gs)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{check_axioms, check_normality};
    use alloc::string::ToString;
    use alloc::vec;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    fn b(c: &[i64]) -> BElement {
        BElement::new(c.to_vec())
    }

    #[test]
    fn membership_examples() {
        let u = UdCrystal::new(w(&[1, 0]));
        assert!(u.member_closed(&b(&[1, 1, 0])));
        assert!(!u.member_closed(&b(&[0, 1, 0])));
        assert!(u.member_closed(&b(&[0, 0, 0])));
        let r1 = UdCrystal::new(w(&[2]));
        assert!(r1.member_trop(&b(&[2])));
        assert!(!r1.member_trop(&b(&[3])));
        assert_eq!(r1.decoration().to_string(), "min(x[1,1], L1 - x[1,1])");
    }

    #[test]
    fn membership_routes_agree_on_a_box() {
        let u = UdCrystal::new(w(&[1, 0]));
        for p in 0..216 {
            let x = b(&[p % 6 - 2, (p / 6) % 6 - 2, p / 36 - 2]);
            assert_eq!(u.member_closed(&x), u.member_trop(&x), "{x:?}");
        }
    }

    #[test]
    fn weight_and_eps_examples() {
        let u = UdCrystal::new(w(&[1, 0]));
        let x = b(&[1, 0, 0]);
        assert_eq!(u.ud_wt(&x), w(&[-1, 1]));
        assert_eq!((u.ud_eps(&x, 1), u.ud_eps(&x, 2)), (1, 0));
        assert_eq!(u.ud_wt(&BElement::zero(2)), w(&[1, 0]));
    }

    #[test]
    fn operator_examples() {
        let u = UdCrystal::new(w(&[1, 0]));
        assert_eq!(u.ud_f(&BElement::zero(2), 1), Some(b(&[1, 0, 0])));
        assert_eq!(u.ud_f(&b(&[1, 0, 0]), 2), Some(b(&[1, 1, 0])));
        assert_eq!(u.ud_e(&b(&[1, 0, 0]), 1), Some(BElement::zero(2)));
        for i in 1..=2 {
            assert_eq!(u.ud_e(&BElement::zero(2), i), None);
        }
    }

    #[test]
    fn closed_power_matches_iteration() {
        let u = UdCrystal::new(w(&[2, 1]));
        let g = generate_graph(&u, &BElement::zero(2), 100).unwrap();
        let members: Vec<BElement> = g.payloads().iter().map(|p| parse(p)).collect();
        for x in &members {
            for i in 1..=2 {
                for r in -2..=2 {
                    let closed = u.e_power_closed(x, i, r);
                    match u.e_power_iterated(x, i, r) {
                        Some(y) => assert_eq!(closed, y),
                        None => assert!(!u.member_closed(&closed)),
                    }
                }
            }
        }
    }

    fn parse(p: &str) -> BElement {
        BElement::new(p.trim_matches(|c| c == '(' || c == ')').split(',').map(|s| s.parse().unwrap()).collect())
    }

    #[test]
    fn generated_graph_sizes() {
        assert_eq!(generate_b(&w(&[1, 0]), 100).unwrap().len(), 3);
        assert_eq!(generate_b(&w(&[1, 1]), 100).unwrap().len(), 8);
        assert_eq!(generate_b(&w(&[0, 1, 0]), 100).unwrap().len(), 6);
        let g = generate_b(&w(&[1, 1]), 100).unwrap();
        assert!(check_axioms(&g, &CartanA::new(2)).is_empty());
        assert!(check_normality(&g).is_empty());
    }

    #[test]
    fn agrees_with_polyhedral() {
        for lam in [vec![1, 0], vec![1, 1], vec![0, 2]] {
            let c = compare_with_polyhedral(&w(&lam), 1000).unwrap();
            assert!(c.agrees(), "{c:?}");
        }
    }

    #[test]
    fn closed_system_as_forms() {
        let got: Vec<String> = closed_inequalities(2).iter().map(|f| f.to_string()).collect();
        assert_eq!(got, ["x[1,1]", "L1 - x[1,1]", "x[1,2] - x[2,1]", "x[2,1]", "L2 + x[1,1] - x[1,2]", "L2 - x[2,1]"]);
        let u = UdCrystal::new(w(&[1, 2, 0]));
        let forms = closed_inequalities(3);
        let vars = c_vars(3);
        for p in crate::tropical::box_points(&vars.iter().map(|&v| (v, (-1, 2))).collect()) {
            let x = BElement::new(vars.iter().map(|v| p[v]).collect());
            let by_forms = forms.iter().all(|f| f.evaluate(|k| p.get(k).copied(), u.lambda.coeffs()).unwrap() >= 0);
            assert_eq!(by_forms, u.member_closed(&x));
        }
    }

    #[test]
    fn printed_partial_sums_break_inverse_operators() {
        let u = UdCrystal::with_convention(w(&[1, 0]), XmConvention::Printed);
        let x = BElement::zero(2);
        let broken = (1..=2).any(|i| match u.ud_f(&x, i) {
            Some(y) => u.ud_e(&y, i) != Some(x.clone()),
            None => false,
        }) || {
            let y = b(&[1, 0, 0]);
            (1..=2).any(|i| u.ud_f(&y, i).is_some_and(|z| u.ud_e(&z, i) != Some(y.clone())))
        };
        assert!(broken);
    }
}
