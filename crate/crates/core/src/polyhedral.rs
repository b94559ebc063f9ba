//! The crystal structure on the semi-infinite lattice `ℤ^∞_ι[λ]`, the
//! piecewise-linear operators `S_k` and `Ŝ_k`, the closure `Ξ_ι[λ]`, and the
//! closed-form inequality system of type `A_n`.
//!
//! Positions are flat (`k ≥ 1`). For the periodic sequence of type `A_n` the
//! double index `(j;i)` is position `(j−1)n + i`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::cartan::{CartanA, Weight};
use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::tropical::AffineForm;

/// An infinite index sequence `ι = (i_k)_{k≥1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IotaSequence {
    /// `i_k = cycle[(k−1) mod len]`.
    Periodic(Vec<usize>),
    /// `prefix` followed by `cycle` repeated forever.
    Explicit { prefix: Vec<usize>, cycle: Vec<usize> },
}

impl IotaSequence {
    /// The periodic sequence `1, 2, …, n, 1, 2, …` of type `A_n`.
    pub fn a_n(n: usize) -> Self {
        IotaSequence::Periodic((1..=n).collect())
    }

    fn parts(&self) -> (&[usize], &[usize]) {
        match self {
            IotaSequence::Periodic(c) => (&[], c),
            IotaSequence::Explicit { prefix, cycle } => (prefix, cycle),
        }
    }

    /// `i_k` for `k ≥ 1`.
    pub fn at(&self, k: usize) -> usize {
        assert!(k >= 1, "positions start at 1");
        let (prefix, cycle) = self.parts();
        if k <= prefix.len() {
            prefix[k - 1]
        } else {
            cycle[(k - prefix.len() - 1) % cycle.len()]
        }
    }

    /// Positions after which the sequence is purely periodic.
    pub fn prefix_len(&self) -> usize {
        self.parts().0.len()
    }

    /// Checks `i_k ≠ i_{k+1}` and that every index of `1..=n` recurs.
    pub fn validate(&self, n: usize) -> Result<()> {
        let (prefix, cycle) = self.parts();
        if cycle.is_empty() {
            return Err(Error::Invalid(String::from("empty cycle")));
        }
        if let Some(&bad) = prefix.iter().chain(cycle).find(|&&i| i == 0 || i > n) {
            return Err(Error::Invalid(format!("index {bad} outside 1..={n}")));
        }
        for i in 1..=n {
            if !cycle.contains(&i) {
                return Err(Error::Invalid(format!("index {i} occurs only finitely often")));
            }
        }
        let span = prefix.len() + 2 * cycle.len();
        if let Some(k) = (1..span).find(|&k| self.at(k) == self.at(k + 1)) {
            return Err(Error::Invalid(format!("i_{k} = i_{}", k + 1)));
        }
        Ok(())
    }

    /// `k^{(+)}`: the next position carrying the same index.
    pub fn k_plus(&self, k: usize) -> usize {
        let i = self.at(k);
        (k + 1..).find(|&l| self.at(l) == i).expect("every index recurs")
    }

    /// `k^{(−)}`: the previous position carrying the same index, or `0`.
    pub fn k_minus(&self, k: usize) -> usize {
        let i = self.at(k);
        (1..k).rev().find(|&l| self.at(l) == i).unwrap_or(0)
    }

    /// The first position carrying `i`.
    pub fn first_occurrence(&self, i: usize) -> usize {
        (1..).find(|&l| self.at(l) == i).expect("every index recurs")
    }
}

/// A finitely supported integer sequence `x = (…, x_2, x_1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZInfElement {
    entries: BTreeMap<usize, i64>,
}

impl ZInfElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, i64)>>(it: I) -> Self {
        let mut x = Self::zero();
        for (k, v) in it {
            x.add(k, v);
        }
        x
    }

    /// The unit vector at position `k`.
    pub fn unit(k: usize) -> Self {
        Self::from_entries([(k, 1)])
    }

    pub fn get(&self, k: usize) -> i64 {
        self.entries.get(&k).copied().unwrap_or(0)
    }

    pub fn add(&mut self, k: usize, v: i64) {
        assert!(k >= 1, "positions start at 1");
        let e = self.entries.entry(k).or_insert(0);
        *e += v;
        if *e == 0 {
            self.entries.remove(&k);
        }
    }

    /// Largest position in the support, `0` for the zero vector.
    pub fn support_max(&self) -> usize {
        self.entries.keys().next_back().copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coordinates on the `N = n(n+1)/2` positions `(j;i)` with `i + j ≤ n + 1`,
    /// in flat order. `None` if the support leaves those positions.
    pub fn to_coords(&self, n: usize) -> Option<Vec<i64>> {
        let pos = a_n_positions(n);
        if self.entries.keys().any(|k| !pos.contains(k)) {
            return None;
        }
        Some(pos.iter().map(|&k| self.get(k)).collect())
    }

    pub fn from_coords(n: usize, coords: &[i64]) -> Self {
        let pos = a_n_positions(n);
        assert_eq!(coords.len(), pos.len(), "expected {} coordinates", pos.len());
        Self::from_entries(pos.into_iter().zip(coords.iter().copied()))
    }

    /// Evaluates a form with flat keys at `x` and `λ`.
    pub fn eval(&self, form: &AffineForm<usize>, lambda: &Weight) -> i64 {
        form.evaluate(|&k| Some(self.get(k)), lambda.coeffs()).expect("λ covers every index")
    }
}

/// Flat position of `(j;i)` for the periodic `A_n` sequence.
pub fn flat(n: usize, j: usize, i: usize) -> usize {
    assert!(j >= 1 && (1..=n).contains(&i));
    (j - 1) * n + i
}

/// `(j;i)` of a flat position.
pub fn double(n: usize, k: usize) -> (usize, usize) {
    ((k - 1) / n + 1, (k - 1) % n + 1)
}

/// Flat positions `(j;i)` with `i + j ≤ n + 1`, ascending.
pub fn a_n_positions(n: usize) -> Vec<usize> {
    (1..=n).flat_map(|j| (1..=(n + 1 - j)).map(move |i| flat(n, j, i))).collect()
}

/// Which operator family [`ZInfLattice::s_hat`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShatMode {
    /// `S_k`, used for `B(∞)`.
    Infinity,
    /// `Ŝ_k`, used for `B(λ)`.
    Lambda,
}

/// The lattice `ℤ^∞` with the crystal structure attached to `ι`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZInfLattice {
    pub iota: IotaSequence,
    pub cartan: CartanA,
}

impl ZInfLattice {
    pub fn new(iota: IotaSequence, cartan: CartanA) -> Result<Self> {
        iota.validate(cartan.rank())?;
        Ok(ZInfLattice { iota, cartan })
    }

    /// The periodic lattice of type `A_n`.
    pub fn a_n(n: usize) -> Self {
        ZInfLattice { iota: IotaSequence::a_n(n), cartan: CartanA::new(n) }
    }

    fn a_at(&self, k: usize, j: usize) -> i64 {
        self.cartan.a(self.iota.at(k), self.iota.at(j))
    }

    /// `σ_k(x) = x_k + Σ_{j>k} ⟨h_{i_k}, α_{i_j}⟩ x_j`.
    pub fn sigma_k(&self, x: &ZInfElement, k: usize) -> i64 {
        x.get(k) + x.entries().filter(|&(j, _)| j > k).map(|(j, v)| self.a_at(k, j) * v).sum::<i64>()
    }

    /// `σ_0^{(i)}(x) = −⟨h_i, λ⟩ + Σ_j ⟨h_i, α_{i_j}⟩ x_j`.
    pub fn sigma0(&self, x: &ZInfElement, i: usize, lambda: &Weight) -> i64 {
        -lambda.get(i) + x.entries().map(|(j, v)| self.cartan.a(i, self.iota.at(j)) * v).sum::<i64>()
    }

    /// `σ^{(i)}(x)` with the smallest and largest position of `M^{(i)}`.
    ///
    /// Past the support every `σ_k` with `i_k = i` is `0`, so the scan stops
    /// at the first such position beyond the support. When the maximum is `0`
    /// the set `M^{(i)}` is infinite and its largest element is `None`.
    pub fn sigma_max(&self, x: &ZInfElement, i: usize) -> (i64, usize, Option<usize>) {
        let smax = x.support_max();
        let tail = (smax + 1..).find(|&k| self.iota.at(k) == i).expect("every index recurs");
        let mut best = 0i64;
        let mut first = tail;
        let mut last = None;
        for k in (1..=smax).filter(|&k| self.iota.at(k) == i) {
            let s = self.sigma_k(x, k);
            if s > best {
                best = s;
                first = k;
                last = Some(k);
            } else if s == best {
                if best > 0 {
                    last = Some(k);
                }
                first = first.min(k);
            }
        }
        if best == 0 {
            last = None;
        }
        (best, first, last)
    }

    /// `f̃_i` on `ℤ^∞_ι[λ]`.
    pub fn kashiwara_f(&self, x: &ZInfElement, i: usize, lambda: &Weight) -> Option<ZInfElement> {
        let (s, first, _) = self.sigma_max(x, i);
        if s <= self.sigma0(x, i, lambda) {
            return None;
        }
        let mut y = x.clone();
        y.add(first, 1);
        Some(y)
    }

    /// `ẽ_i` on `ℤ^∞_ι[λ]`.
    pub fn kashiwara_e(&self, x: &ZInfElement, i: usize, lambda: &Weight) -> Option<ZInfElement> {
        let (s, _, last) = self.sigma_max(x, i);
        if s <= 0 || s < self.sigma0(x, i, lambda) {
            return None;
        }
        let mut y = x.clone();
        y.add(last.expect("M is finite when σ > 0"), -1);
        Some(y)
    }

    /// `wt(x) = λ − Σ x_j α_{i_j}`.
    pub fn wt(&self, x: &ZInfElement, lambda: &Weight) -> Weight {
        x.entries().fold(lambda.clone(), |w, (j, v)| w.sub(&self.cartan.simple_root(self.iota.at(j)).scale(v)))
    }

    /// `(wt, ε, φ)` with `ε_i = max(σ^{(i)}, σ_0^{(i)})`, which is `σ^{(i)}`
    /// on `Σ_ι[λ]`.
    pub fn wt_eps_phi(&self, x: &ZInfElement, lambda: &Weight) -> (Weight, Vec<i64>, Vec<i64>) {
        let wt = self.wt(x, lambda);
        let eps: Vec<i64> =
            self.cartan.indices().map(|i| self.sigma_max(x, i).0.max(self.sigma0(x, i, lambda))).collect();
        let phi = self.cartan.indices().map(|i| eps[i - 1] + wt.get(i)).collect();
        (wt, eps, phi)
    }

    /// `β_k = β_k^{(+)} = x_k + Σ_{k<j<k^+} ⟨h_{i_k}, α_{i_j}⟩ x_j + x_{k^+}`;
    /// `β_0 = 0`.
    pub fn beta_plus(&self, k: usize) -> AffineForm<usize> {
        if k == 0 {
            return AffineForm::zero();
        }
        let kp = self.iota.k_plus(k);
        let mut f = AffineForm::var(k).with_coeff(kp, 1);
        for j in (k + 1)..kp {
            f = f.with_coeff(j, self.a_at(k, j));
        }
        f
    }

    /// `β_k^{(−)}`: `β_{k^−}` when `k^− > 0`, otherwise
    /// `−λ_{i_k} + Σ_{j<k} ⟨h_{i_k}, α_{i_j}⟩ x_j + x_k`.
    pub fn beta_minus(&self, k: usize) -> AffineForm<usize> {
        let km = self.iota.k_minus(k);
        if km > 0 {
            return self.beta_plus(km);
        }
        let mut f = AffineForm::var(k).with_lambda(self.iota.at(k), -1);
        for j in 1..k {
            f = f.with_coeff(j, self.a_at(k, j));
        }
        f
    }

    /// `λ^{(i)} = −β^{(−)}` at the first occurrence of `i`.
    pub fn lambda_form(&self, i: usize) -> AffineForm<usize> {
        self.beta_minus(self.iota.first_occurrence(i)).neg()
    }

    /// `S_k` (mode [`ShatMode::Infinity`]) or `Ŝ_k` (mode [`ShatMode::Lambda`]).
    pub fn s_hat(&self, phi: &AffineForm<usize>, k: usize, mode: ShatMode) -> AffineForm<usize> {
        let c = phi.coeff(&k);
        if c == 0 {
            return phi.clone();
        }
        let beta = match (c > 0, mode) {
            (true, _) => self.beta_plus(k),
            (false, ShatMode::Lambda) => self.beta_minus(k),
            (false, ShatMode::Infinity) => self.beta_plus(self.iota.k_minus(k)),
        };
        phi.add_scaled(&beta, -c)
    }

    /// Closure of `{x_j : j ≤ positions}` (plus the `λ^{(i)}` in
    /// [`ShatMode::Lambda`]) under the operators at positions `≤ positions`.
    ///
    /// In [`ShatMode::Infinity`] every produced form is checked against the
    /// positivity assumption (a nonnegative coefficient at each first
    /// occurrence), and a violation aborts.
    pub fn closure(&self, mode: ShatMode, positions: usize, caps: ClosureCaps) -> Result<XiClosure> {
        let mut forms: BTreeSet<AffineForm<usize>> = (1..=positions).map(AffineForm::var).collect();
        if mode == ShatMode::Lambda {
            forms.extend(self.cartan.indices().map(|i| self.lambda_form(i)));
        }
        let mut frontier: Vec<AffineForm<usize>> = forms.iter().cloned().collect();
        let mut depth = 0;
        while !frontier.is_empty() {
            if depth >= caps.depth {
                return Ok(XiClosure { forms, depth, complete: false });
            }
            let mut next = Vec::new();
            for phi in &frontier {
                let support: Vec<usize> = phi.coeffs().map(|(&k, _)| k).filter(|&k| k <= positions).collect();
                for k in support {
                    let psi = self.s_hat(phi, k, mode);
                    if mode == ShatMode::Infinity {
                        self.check_positivity_assumption(&psi)?;
                    }
                    if !forms.contains(&psi) {
                        if forms.len() >= caps.forms {
                            return Ok(XiClosure { forms, depth, complete: false });
                        }
                        forms.insert(psi.clone());
                        next.push(psi);
                    }
                }
            }
            frontier = next;
            depth += 1;
        }
        Ok(XiClosure { forms, depth, complete: true })
    }

    /// A form violates the positivity assumption when its coefficient at a
    /// first occurrence `k` (`k^− = 0`) is negative.
    pub fn check_positivity_assumption(&self, phi: &AffineForm<usize>) -> Result<()> {
        for (&k, c) in phi.coeffs() {
            if c < 0 && self.iota.k_minus(k) == 0 {
                return Err(Error::PositivityAssumption(format!("coefficient {c} at first occurrence {k} in {phi}")));
            }
        }
        Ok(())
    }
}

/// Caps on [`ZInfLattice::closure`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureCaps {
    pub depth: usize,
    pub forms: usize,
}

impl Default for ClosureCaps {
    fn default() -> Self {
        ClosureCaps { depth: 64, forms: 100_000 }
    }
}

/// The generated forms; `complete` is false when a cap stopped the closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiClosure {
    pub forms: BTreeSet<AffineForm<usize>>,
    pub depth: usize,
    pub complete: bool,
}

/// Position cutoff used for `Ξ_ι[λ]` of type `A_n`: two full cycles past
/// the `N` coordinates.
pub fn default_positions(n: usize) -> usize {
    n * (n + 1)
}

/// `Ξ_ι[λ]` for the periodic sequence of type `A_n`, with default caps.
pub fn generate_xi_lambda(n: usize, caps: ClosureCaps) -> XiClosure {
    ZInfLattice::a_n(n).closure(ShatMode::Lambda, default_positions(n), caps).expect("no positivity check in λ mode")
}

/// `x ∈ Σ_ι[λ]`: every form is nonnegative at `(x, λ)`.
pub fn membership_sigma_lambda<'a>(x: &ZInfElement, lambda: &Weight, forms: impl IntoIterator<Item = &'a AffineForm<usize>>) -> bool {
    forms.into_iter().all(|f| x.eval(f, lambda) >= 0)
}

/// The closed-form system of type `A_n` in flat positions: the chains
/// `x_{1;i} ≥ x_{2;i−1} ≥ ⋯ ≥ x_{i;1} ≥ 0` followed by
/// `λ_i − x_{j;i−j+1} + x_{j;i−j} ≥ 0` for `1 ≤ j ≤ i ≤ n`.
pub fn an_inequalities(n: usize) -> Vec<AffineForm<usize>> {
    let mut out = Vec::new();
    for i in 1..=n {
        for m in 1..i {
            out.push(AffineForm::var(flat(n, m, i - m + 1)).with_coeff(flat(n, m + 1, i - m), -1));
        }
        out.push(AffineForm::var(flat(n, i, 1)));
    }
    for i in 1..=n {
        for j in 1..=i {
            let mut f = AffineForm::lambda(i).with_coeff(flat(n, j, i - j + 1), -1);
            if i > j {
                f = f.with_coeff(flat(n, j, i - j), 1);
            }
            out.push(f);
        }
    }
    out
}

/// Every integer solution of [`an_inequalities`], in lexicographic order of
/// the coordinate vectors.
pub fn enumerate_sigma(n: usize, lambda: &Weight) -> Vec<ZInfElement> {
    assert!(lambda.is_dominant() && lambda.rank() == n);
    let pos = a_n_positions(n);
    // x_{j;i} ≤ λ_j + ⋯ + λ_{i+j−1}.
    let upper: Vec<i64> = pos
        .iter()
        .map(|&k| {
            let (j, i) = double(n, k);
            (j..=i + j - 1).map(|m| lambda.get(m)).sum()
        })
        .collect();
    let forms = an_inequalities(n);
    // A form is checked once its last coordinate is assigned.
    let slot = |k: usize| pos.iter().position(|&p| p == k).expect("form stays on the N positions");
    let mut by_last: Vec<Vec<&AffineForm<usize>>> = vec![Vec::new(); pos.len()];
    for f in &forms {
        let last = f.coeffs().map(|(&k, _)| slot(k)).max().expect("every form has a variable");
        by_last[last].push(f);
    }
    let mut out = Vec::new();
    let mut x = ZInfElement::zero();
    fn rec(d: usize, pos: &[usize], upper: &[i64], by_last: &[Vec<&AffineForm<usize>>], lambda: &Weight, x: &mut ZInfElement, out: &mut Vec<ZInfElement>) {
        if d == pos.len() {
            out.push(x.clone());
            return;
        }
        for v in 0..=upper[d] {
            x.add(pos[d], v);
            if by_last[d].iter().all(|f| x.eval(f, lambda) >= 0) {
                rec(d + 1, pos, upper, by_last, lambda, x, out);
            }
            x.add(pos[d], -v);
        }
    }
    rec(0, &pos, &upper, &by_last, lambda, &mut x, &mut out);
    out
}

/// `Σ_ι[λ] ≅ B(λ)` as a [`Crystal`] on `ℤ^∞_ι[λ]`.
#[derive(Clone, Debug)]
pub struct PolyhedralCrystal {
    pub lattice: ZInfLattice,
    pub lambda: Weight,
}

impl PolyhedralCrystal {
    /// The periodic realization of type `A_n`.
    pub fn a_n(lambda: Weight) -> Self {
        PolyhedralCrystal { lattice: ZInfLattice::a_n(lambda.rank()), lambda }
    }
}

impl Crystal for PolyhedralCrystal {
    type Elem = ZInfElement;

    fn cartan(&self) -> CartanA {
        self.lattice.cartan
    }
    fn e(&self, b: &ZInfElement, i: usize) -> Option<ZInfElement> {
        self.lattice.kashiwara_e(b, i, &self.lambda)
    }
    fn f(&self, b: &ZInfElement, i: usize) -> Option<ZInfElement> {
        self.lattice.kashiwara_f(b, i, &self.lambda)
    }
    fn wt(&self, b: &ZInfElement) -> Weight {
        self.lattice.wt(b, &self.lambda)
    }
    fn eps(&self, b: &ZInfElement, i: usize) -> i64 {
        self.lattice.sigma_max(b, i).0.max(self.lattice.sigma0(b, i, &self.lambda))
    }
    fn payload(&self, b: &ZInfElement) -> String {
        payload_of(b, self.lattice.cartan.rank())
    }
}

/// `(x_{1;1},x_{1;2},…)` over the `N` coordinates, or `{k:v,…}` otherwise.
pub fn payload_of(x: &ZInfElement, n: usize) -> String {
    let mut s = String::new();
    match x.to_coords(n) {
        Some(c) => {
            s.push('(');
            for (k, v) in c.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{v}");
            }
            s.push(')');
        }
        None => {
            s.push('{');
            for (m, (k, v)) in x.entries().enumerate() {
                if m > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{k}:{v}");
            }
            s.push('}');
        }
    }
    s
}
