//! Nakajima monomials `𝒴(p)`, the monomial expansion of the minors of
//! `Θ⁻(c)`, a checker for Demazure-crystal decompositions and the refined
//! polyhedral realization.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cartan::{CartanA, Weight};
use crate::crystal::{generate, generate_graph, Closure, Crystal, CrystalGraph};
use crate::error::{Error, Result};
use crate::geometric::{c_vars, generalized_minor, matrix_of, theta_minus_word, w0_sj_word};
use crate::polyhedral::payload_of;
use crate::polyhedral::ZInfElement;
use crate::symbolic::{LaurentFraction, LaurentPoly, Monomial, VarId};
use crate::tropical::{tropicalize_monomial, AffineForm};
use crate::ud::{BElement, UdCrystal};
use crate::weyl::{longest_word_i0, Permutation};
use crate::Rational;

/// `p = (p_{i,j})_{i≠j}` with `p_{i,j} + p_{j,i} = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PChoice {
    n: usize,
    /// `upper[i][j]` for `i < j` is `p_{i,j}`; `p_{j,i} = 1 − p_{i,j}`.
    upper: BTreeMap<(usize, usize), u8>,
}

impl PChoice {
    /// `p_{i,j} = 1` iff `i < j`, the cyclic order `(1 2 ⋯ n)`.
    pub fn standard(n: usize) -> Self {
        PChoice { n, upper: Self::pairs(n).map(|k| (k, 1)).collect() }
    }

    /// `p_{i,j} = 1` iff `i > j`.
    pub fn reversed(n: usize) -> Self {
        PChoice { n, upper: Self::pairs(n).map(|k| (k, 0)).collect() }
    }

    /// The choice attached to a cyclic order: `p_{i_a,i_b} = 1` iff `a < b`.
    pub fn from_cyclic_order(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let mut seen = order.to_vec();
        seen.sort_unstable();
        if seen != (1..=n).collect::<Vec<_>>() {
            return Err(Error::Invalid(String::from("a cyclic order lists every index once")));
        }
        let pos = |i: usize| order.iter().position(|&x| x == i).expect("checked");
        Ok(PChoice { n, upper: Self::pairs(n).map(|(i, j)| ((i, j), u8::from(pos(i) < pos(j)))).collect() })
    }

    fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
        (1..=n).flat_map(move |i| ((i + 1)..=n).map(move |j| (i, j)))
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn p(&self, i: usize, j: usize) -> i64 {
        assert_ne!(i, j);
        if i < j {
            self.upper[&(i, j)] as i64
        } else {
            1 - self.upper[&(j, i)] as i64
        }
    }
}

/// A Laurent monomial `∏ Y_{m,i}^{l_{m,i}}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NakMonomial {
    exps: BTreeMap<(i64, usize), i64>,
}

impl NakMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// `Y_{m,i}^e`.
    pub fn y(m: i64, i: usize, e: i64) -> Self {
        Self::one().times(m, i, e)
    }

    /// Multiplies by `Y_{m,i}^e`.
    pub fn times(mut self, m: i64, i: usize, e: i64) -> Self {
        let v = self.exps.entry((m, i)).or_insert(0);
        *v += e;
        if *v == 0 {
            self.exps.remove(&(m, i));
        }
        self
    }

    pub fn mul(&self, other: &NakMonomial) -> NakMonomial {
        other.exps.iter().fold(self.clone(), |acc, (&(m, i), &e)| acc.times(m, i, e))
    }

    pub fn inv(&self) -> NakMonomial {
        NakMonomial { exps: self.exps.iter().map(|(&k, &e)| (k, -e)).collect() }
    }

    pub fn exponent(&self, m: i64, i: usize) -> i64 {
        self.exps.get(&(m, i)).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> impl Iterator<Item = ((i64, usize), i64)> + '_ {
        self.exps.iter().map(|(&k, &e)| (k, e))
    }

    /// The monomial in `c_{m,l}` obtained by renaming `Y_{m,l}`.
    pub fn to_c(&self) -> Result<Monomial> {
        let mut pairs = Vec::new();
        for ((m, i), e) in self.exps() {
            if m < 1 {
                return Err(Error::Invalid(alloc::format!("Y[{m},{i}] has no c-counterpart")));
            }
            pairs.push((VarId::c(m as i32, i as i32), e as i32));
        }
        Ok(Monomial::from_pairs(pairs))
    }

    /// The inverse renaming; `None` if a non-`c` variable occurs.
    pub fn from_c(m: &Monomial) -> Option<NakMonomial> {
        m.iter().try_fold(NakMonomial::one(), |acc, &(v, e)| match v {
            VarId::C(j, i) => Some(acc.times(j as i64, i as usize, e as i64)),
            _ => None,
        })
    }
}

impl fmt::Display for NakMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (k, ((m, i), e)) in self.exps().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "Y[{m},{i}]")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// `𝒴(p)` of type `A_n`.
#[derive(Clone, Debug)]
pub struct MonomialCrystal {
    pub p: PChoice,
}

impl MonomialCrystal {
    pub fn new(p: PChoice) -> Self {
        MonomialCrystal { p }
    }

    pub fn standard(n: usize) -> Self {
        Self::new(PChoice::standard(n))
    }

    fn n(&self) -> usize {
        self.p.rank()
    }

    /// `A_{m,i} = Y_{m,i} Y_{m+1,i} ∏_{j≠i} Y_{m+p_{j,i},j}^{a_{j,i}}`.
    pub fn a_monomial(&self, m: i64, i: usize) -> NakMonomial {
        let cartan = CartanA::new(self.n());
        let mut a = NakMonomial::y(m, i, 1).times(m + 1, i, 1);
        for j in cartan.indices().filter(|&j| j != i) {
            let e = cartan.a(j, i);
            if e != 0 {
                a = a.times(m + self.p.p(j, i), j, e);
            }
        }
        a
    }

    /// Partial sums `Σ_{m≤k} l_{m,i}` at the support points of color `i`.
    fn partial_sums(y: &NakMonomial, i: usize) -> Vec<(i64, i64)> {
        let mut acc = 0;
        y.exps()
            .filter(|&((_, c), _)| c == i)
            .map(|((m, _), e)| {
                acc += e;
                (m, acc)
            })
            .collect()
    }

    pub fn mono_wt(&self, y: &NakMonomial) -> Weight {
        let mut w = vec![0; self.n()];
        for ((_, i), e) in y.exps() {
            w[i - 1] += e;
        }
        Weight::new(w)
    }

    /// `φ_i = max_k Σ_{m≤k} l_{m,i}`; the empty sum counts, so `φ_i ≥ 0`.
    pub fn mono_phi(&self, y: &NakMonomial, i: usize) -> i64 {
        Self::partial_sums(y, i).iter().map(|&(_, s)| s).max().unwrap_or(0).max(0)
    }

    pub fn mono_eps(&self, y: &NakMonomial, i: usize) -> i64 {
        self.mono_phi(y, i) - self.mono_wt(y).get(i)
    }

    /// `(wt, ε, φ)`.
    pub fn mono_wt_eps_phi(&self, y: &NakMonomial) -> (Weight, Vec<i64>, Vec<i64>) {
        let idx = 1..=self.n();
        (self.mono_wt(y), idx.clone().map(|i| self.mono_eps(y, i)).collect(), idx.map(|i| self.mono_phi(y, i)).collect())
    }

    /// `f̃_i Y = A_{n_f,i}⁻¹ Y` with `n_f` the smallest maximizer.
    pub fn mono_f(&self, y: &NakMonomial, i: usize) -> Option<NakMonomial> {
        let phi = self.mono_phi(y, i);
        if phi <= 0 {
            return None;
        }
        let nf = Self::partial_sums(y, i).into_iter().find(|&(_, s)| s == phi).map(|(m, _)| m).expect("φ > 0 is attained");
        Some(y.mul(&self.a_monomial(nf, i).inv()))
    }

    /// `ẽ_i Y = A_{n_e,i} Y` with `n_e` the largest maximizer.
    pub fn mono_e(&self, y: &NakMonomial, i: usize) -> Option<NakMonomial> {
        if self.mono_eps(y, i) <= 0 {
            return None;
        }
        let phi = self.mono_phi(y, i);
        let sums = Self::partial_sums(y, i);
        // The partial sum is constant between support points and equals the
        // total (< φ since ε > 0) beyond the last one.
        let mut ne = if phi == 0 { sums[0].0 - 1 } else { i64::MIN };
        for w in sums.windows(2) {
            if w[0].1 == phi {
                ne = w[1].0 - 1;
            }
        }
        Some(y.mul(&self.a_monomial(ne, i)))
    }
}

impl Crystal for MonomialCrystal {
    type Elem = NakMonomial;

    fn cartan(&self) -> CartanA {
        CartanA::new(self.n())
    }
    fn e(&self, b: &NakMonomial, i: usize) -> Option<NakMonomial> {
        self.mono_e(b, i)
    }
    fn f(&self, b: &NakMonomial, i: usize) -> Option<NakMonomial> {
        self.mono_f(b, i)
    }
    fn wt(&self, b: &NakMonomial) -> Weight {
        self.mono_wt(b)
    }
    fn eps(&self, b: &NakMonomial, i: usize) -> i64 {
        self.mono_eps(b, i)
    }
    fn phi(&self, b: &NakMonomial, i: usize) -> i64 {
        self.mono_phi(b, i)
    }
    fn payload(&self, b: &NakMonomial) -> String {
        alloc::format!("{b}")
    }
}

/// The connected component of `y0`.
pub fn component(c: &MonomialCrystal, y0: &NakMonomial, cap: usize) -> Result<CrystalGraph> {
    generate(c, y0, cap, Closure::Component)
}

/// `Y_{m,k}` with `Y_{m,0} = Y_{m,n+1} = 1`.
fn y_clamped(n: usize, m: i64, k: usize, e: i64) -> NakMonomial {
    if k == 0 || k > n {
        NakMonomial::one()
    } else {
        NakMonomial::y(m, k, e)
    }
}

/// `f̃_k⋯f̃_1(Y_{n−i+1,1})` for `k = 0..=n`.
pub fn lowering_chain(c: &MonomialCrystal, i: usize) -> Vec<Option<NakMonomial>> {
    let n = c.n();
    let mut cur = Some(NakMonomial::y((n - i + 1) as i64, 1, 1));
    let mut out = vec![cur.clone()];
    for k in 1..=n {
        cur = cur.and_then(|y| c.mono_f(&y, k));
        out.push(cur.clone());
    }
    out
}

/// `ẽ_k⋯ẽ_1(Y_{i,1}⁻¹)` for `k = 0..=n`.
pub fn raising_chain(c: &MonomialCrystal, i: usize) -> Vec<Option<NakMonomial>> {
    let n = c.n();
    let mut cur = Some(NakMonomial::y(i as i64, 1, -1));
    let mut out = vec![cur.clone()];
    for k in 1..=n {
        cur = cur.and_then(|y| c.mono_e(&y, k));
        out.push(cur.clone());
    }
    out
}

/// The closed forms `Y_{n−i+1,k+1}/Y_{n−i+2,k}` of the lowering chain.
pub fn lowering_chain_closed(n: usize, i: usize, k: usize) -> NakMonomial {
    if k == 0 {
        return NakMonomial::y((n - i + 1) as i64, 1, 1);
    }
    y_clamped(n, (n - i + 1) as i64, k + 1, 1).mul(&y_clamped(n, (n - i + 2) as i64, k, -1))
}

/// The closed forms `Y_{i−k,k}/Y_{i−k,k+1}` of the raising chain.
pub fn raising_chain_closed(n: usize, i: usize, k: usize) -> NakMonomial {
    if k == 0 {
        return NakMonomial::y(i as i64, 1, -1);
    }
    let m = i as i64 - k as i64;
    y_clamped(n, m, k, 1).mul(&y_clamped(n, m, k + 1, -1))
}

fn monomial_sum(ms: impl IntoIterator<Item = NakMonomial>) -> Result<LaurentFraction> {
    let mut p = LaurentPoly::zero();
    for m in ms {
        p = &p + &LaurentPoly::monomial(m.to_c()?);
    }
    Ok(LaurentFraction::from_poly(p))
}

/// The two monomial sums for index `j`: `Σ_{k<j} f̃_k⋯f̃_1(Y_{n−j+1,1})` and
/// `Σ_{k<j} ẽ_k⋯ẽ_1(Y_{j,1}⁻¹)`, renamed to `c`.
pub fn chain_sums(n: usize, j: usize) -> Result<(LaurentFraction, LaurentFraction)> {
    let c = MonomialCrystal::standard(n);
    let low = lowering_chain(&c, j);
    let high = raising_chain(&c, j);
    let take = |v: Vec<Option<NakMonomial>>| -> Result<Vec<NakMonomial>> {
        v.into_iter().take(j).map(|m| m.ok_or_else(|| Error::Structure(String::from("chain ended early")))).collect()
    };
    Ok((monomial_sum(take(low)?)?, monomial_sum(take(high)?)?))
}

/// Whether both chain sums for `j` equal [`crate::geometric::closed_minors`].
pub fn minor_as_monomials(n: usize, j: usize) -> Result<bool> {
    let (a, b) = chain_sums(n, j)?;
    let (ca, cb) = crate::geometric::closed_minors(n, j);
    Ok(a == ca && b == cb)
}

/// Which minor a conjecture entry describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorSide {
    /// `Δ_{w0Λ_i, s_iΛ_i}(Θ⁻)`, expected to be a Demazure crystal.
    Lower,
    /// `Δ_{w0s_iΛ_i, Λ_i}(Θ⁻)`, expected to be an opposite Demazure crystal.
    Upper,
}

/// One monomial of a minor with the crystal element it was matched to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatch {
    pub exps: NakMonomial,
    pub coeff: Rational,
    /// The operator path from the extremal element, e.g. `f2 f1 Y[2,1]`.
    pub matched_element: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureEntry {
    pub i: usize,
    pub side: MinorSide,
    pub minor: LaurentFraction,
    pub monomials: Vec<MonomialMatch>,
    /// Highest weight of the component holding the monomials.
    pub component_weight: Option<Weight>,
    /// A Weyl group element `w` whose (opposite) Demazure crystal is exactly
    /// the monomial set, as a reduced word.
    pub demazure_word: Option<Vec<usize>>,
    pub positive_integer_coefficients: bool,
    pub demazure_closed: bool,
}

impl ConjectureEntry {
    pub fn holds(&self) -> bool {
        self.positive_integer_coefficients && self.demazure_closed && self.monomials.iter().all(|m| m.matched_element.is_some())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n: usize,
    pub word: Vec<usize>,
    pub entries: Vec<ConjectureEntry>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(ConjectureEntry::holds)
    }
}

/// Checks whether each minor of `Θ⁻_{word}(c)` is a positive integral sum of
/// monomials forming a Demazure crystal (lower side) or an opposite
/// Demazure crystal (upper side) inside one connected component of `𝒴(p)`.
pub fn conjecture_check(n: usize, word: &[usize], p: &PChoice, cap: usize) -> Result<ConjectureReport> {
    if !crate::weyl::is_longest_word(n + 1, word) {
        return Err(Error::Invalid(String::from("not a reduced word of the longest element")));
    }
    let c = MonomialCrystal::new(p.clone());
    let vars: Vec<LaurentFraction> = c_vars(n).into_iter().map(LaurentFraction::var).collect();
    let g = matrix_of(n, &theta_minus_word(word, &vars)?);
    let w0 = longest_word_i0(n);
    let mut entries = Vec::new();
    for i in 1..=n {
        let lower = generalized_minor(n, &w0, &[i], i, &g);
        let upper = generalized_minor(n, &w0_sj_word(n, i), &[], i, &g);
        entries.push(check_side(&c, i, MinorSide::Lower, lower, cap)?);
        entries.push(check_side(&c, i, MinorSide::Upper, upper, cap)?);
    }
    Ok(ConjectureReport { n, word: word.to_vec(), entries })
}

fn check_side(c: &MonomialCrystal, i: usize, side: MinorSide, minor: LaurentFraction, cap: usize) -> Result<ConjectureEntry> {
    let mut entry = ConjectureEntry {
        i,
        side,
        minor: minor.clone(),
        monomials: Vec::new(),
        component_weight: None,
        demazure_word: None,
        positive_integer_coefficients: false,
        demazure_closed: false,
    };
    if !minor.is_laurent_poly() || minor.is_zero() {
        return Ok(entry);
    }
    let mut set = BTreeSet::new();
    let mut positive = true;
    for (m, coeff) in minor.num().terms() {
        let exps = NakMonomial::from_c(m).ok_or_else(|| Error::Invalid(String::from("minor contains torus variables")))?;
        positive &= coeff.is_integer() && *coeff > Rational::from_integer(0.into());
        set.insert(exps.clone());
        entry.monomials.push(MonomialMatch { exps, coeff: coeff.clone(), matched_element: None });
    }
    entry.positive_integer_coefficients = positive;

    // The extremal element: climb with ẽ (lower side) or descend with f̃.
    let extremal = |y: &NakMonomial| -> NakMonomial {
        let mut cur = y.clone();
        loop {
            let step = (1..=c.n()).find_map(|k| match side {
                MinorSide::Lower => c.mono_e(&cur, k),
                MinorSide::Upper => c.mono_f(&cur, k),
            });
            match step {
                Some(next) => cur = next,
                None => return cur,
            }
        }
    };
    let tops: BTreeSet<NakMonomial> = set.iter().map(extremal).collect();
    if tops.len() != 1 {
        return Ok(entry);
    }
    let top = tops.into_iter().next().expect("one element");
    let graph = component(c, &top, cap)?;
    let highest = match side {
        MinorSide::Lower => top.clone(),
        MinorSide::Upper => {
            let src = graph.sources();
            let [h] = src.as_slice() else { return Ok(entry) };
            let payload = &graph.vertices[*h].payload;
            let Some(y) = graph_elements(c, &top, cap)?.into_iter().find(|y| &c.payload(y) == payload) else {
                return Ok(entry);
            };
            y
        }
    };
    entry.component_weight = Some(c.mono_wt(&highest));

    let paths = operator_paths(c, &top, side, cap)?;
    for m in &mut entry.monomials {
        m.matched_element = paths.get(&m.exps).cloned();
    }

    for w in weyl_words(c.n()) {
        let d = demazure(c, &top, &w, side, cap)?;
        if d == set {
            entry.demazure_word = Some(w);
            entry.demazure_closed = true;
            break;
        }
    }
    Ok(entry)
}

fn graph_elements(c: &MonomialCrystal, start: &NakMonomial, cap: usize) -> Result<Vec<NakMonomial>> {
    let mut seen = BTreeSet::from([start.clone()]);
    let mut stack = vec![start.clone()];
    while let Some(y) = stack.pop() {
        for k in 1..=c.n() {
            for z in [c.mono_e(&y, k), c.mono_f(&y, k)].into_iter().flatten() {
                if seen.insert(z.clone()) {
                    if seen.len() > cap {
                        return Err(Error::BudgetExceeded(cap));
                    }
                    stack.push(z);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Shortest operator paths (`f` from the highest element on the lower side,
/// `e` from the lowest element on the upper side), written right to left.
fn operator_paths(c: &MonomialCrystal, top: &NakMonomial, side: MinorSide, cap: usize) -> Result<BTreeMap<NakMonomial, String>> {
    let letter = match side {
        MinorSide::Lower => 'f',
        MinorSide::Upper => 'e',
    };
    let mut out = BTreeMap::from([(top.clone(), alloc::format!("{top}"))]);
    let mut queue = alloc::collections::VecDeque::from([top.clone()]);
    while let Some(y) = queue.pop_front() {
        for k in 1..=c.n() {
            let next = match side {
                MinorSide::Lower => c.mono_f(&y, k),
                MinorSide::Upper => c.mono_e(&y, k),
            };
            if let Some(z) = next {
                if !out.contains_key(&z) {
                    if out.len() >= cap {
                        return Err(Error::BudgetExceeded(cap));
                    }
                    let path = alloc::format!("{letter}{k} {}", out[&y]);
                    out.insert(z.clone(), path);
                    queue.push_back(z);
                }
            }
        }
    }
    Ok(out)
}

/// `B_w = D_{i_1}⋯D_{i_k}{top}` with `D_i X = {f̃_i^r x}` (lower side) or
/// `{ẽ_i^r x}` (upper side).
fn demazure(c: &MonomialCrystal, top: &NakMonomial, word: &[usize], side: MinorSide, cap: usize) -> Result<BTreeSet<NakMonomial>> {
    let mut set = BTreeSet::from([top.clone()]);
    for &i in word.iter().rev() {
        let mut next = set.clone();
        for y in &set {
            let mut cur = y.clone();
            loop {
                let step = match side {
                    MinorSide::Lower => c.mono_f(&cur, i),
                    MinorSide::Upper => c.mono_e(&cur, i),
                };
                let Some(z) = step else { break };
                next.insert(z.clone());
                if next.len() > cap {
                    return Err(Error::BudgetExceeded(cap));
                }
                cur = z;
            }
        }
        set = next;
    }
    Ok(set)
}

/// One reduced word for every element of `S_{n+1}`.
fn weyl_words(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let size = n + 1;
    let mut perm: Vec<usize> = (1..=size).collect();
    loop {
        out.push(Permutation::from_images(perm.clone()).reduced_word());
        // Next permutation in lexicographic order.
        let Some(k) = (0..size - 1).rev().find(|&k| perm[k] < perm[k + 1]) else { break };
        let l = (k + 1..size).rev().find(|&l| perm[k] < perm[l]).expect("exists");
        perm.swap(k, l);
        perm[k + 1..].reverse();
    }
    out.sort_by_key(|w| w.len());
    out
}

/// The refined realization: `UD(m_b)(x) ≥ 0` for the monomials of the
/// lowering chains and `λ_j + UD(m_{b'})(x) ≥ 0` for those of the raising
/// chains, in the coordinates `x_{m,l}` of `c_{m,l}`.
pub fn refined_inequalities(n: usize) -> Result<Vec<AffineForm>> {
    let c = MonomialCrystal::standard(n);
    let mut out = Vec::new();
    for j in 1..=n {
        for y in lowering_chain(&c, j).into_iter().take(j).flatten() {
            out.push(tropicalize_monomial(&y.to_c()?));
        }
        for y in raising_chain(&c, j).into_iter().take(j).flatten() {
            out.push(tropicalize_monomial(&y.to_c()?).with_lambda(j, 1));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The refined realization as a crystal: the tropical operators of `B_{f_B}`
/// restricted to the refined inequality system.
#[derive(Clone, Debug)]
pub struct RefinedCrystal {
    pub forms: Vec<AffineForm>,
    ud: UdCrystal,
    vars: Vec<VarId>,
}

impl RefinedCrystal {
    pub fn new(lambda: Weight) -> Result<Self> {
        let n = lambda.rank();
        Ok(RefinedCrystal { forms: refined_inequalities(n)?, ud: UdCrystal::new(lambda), vars: c_vars(n) })
    }

    pub fn member(&self, x: &BElement) -> bool {
        let point: BTreeMap<VarId, i64> = self.vars.iter().copied().zip(x.coords.iter().copied()).collect();
        self.forms.iter().all(|f| f.evaluate(|k| point.get(k).copied(), self.ud.lambda.coeffs()).expect("assigned") >= 0)
    }

    fn step(&self, x: &BElement, i: usize, up: bool) -> Option<BElement> {
        let sums = self.ud.partial_sums(x, i);
        let low = sums.iter().map(|&(_, v)| v).min()?;
        let hits: Vec<usize> = sums.iter().filter(|&&(_, v)| v == low).map(|&(m, _)| m).collect();
        let m = if up { *hits.last()? } else { hits[0] };
        let mut y = x.clone();
        y.coords[m - 1] += if up { -1 } else { 1 };
        self.member(&y).then_some(y)
    }
}

impl Crystal for RefinedCrystal {
    type Elem = BElement;

    fn cartan(&self) -> CartanA {
        self.ud.cartan()
    }
    fn e(&self, b: &BElement, i: usize) -> Option<BElement> {
        self.step(b, i, true)
    }
    fn f(&self, b: &BElement, i: usize) -> Option<BElement> {
        self.step(b, i, false)
    }
    fn wt(&self, b: &BElement) -> Weight {
        self.ud.ud_wt(b)
    }
    fn eps(&self, b: &BElement, i: usize) -> i64 {
        self.ud.ud_eps(b, i)
    }
    fn payload(&self, b: &BElement) -> String {
        payload_of(&ZInfElement::from_coords(self.ud.n, &b.coords), self.ud.n)
    }
}

/// The refined inequalities with the crystal graph they generate from `0`.
pub fn refined_realization(lambda: &Weight, cap: usize) -> Result<(Vec<AffineForm>, CrystalGraph)> {
    let c = RefinedCrystal::new(lambda.clone())?;
    let g = generate_graph(&c, &BElement::zero(lambda.rank()), cap)?;
    Ok((c.forms, g))
}
