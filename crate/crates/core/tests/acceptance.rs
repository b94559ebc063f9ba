//! One line per acceptance criterion. Exits non-zero if any criterion fails
//! in a way that is not the recorded, analyzed labelling conflict of
//! criterion 2.

mod common;

use std::time::Instant;

use common::*;
use dgcrystal::cartan::CartanA;
use dgcrystal::crystal::{check_axioms, check_normality, generate, generate_graph, Closure, Crystal, CrystalGraph};
use dgcrystal::geometric::{
    c_vars, closed_minors, decoration_check, f_b, generalized_minor, matrix_of, theta_minus, verma_check, w0_sj_word, x_matrix, xi_coefficients,
    xi_from_matrix, FbRoute, GeomPoint, TorusElement, VermaVariant,
};
use dgcrystal::monomial::{
    conjecture_check, lowering_chain, lowering_chain_closed, minor_as_monomials, raising_chain, raising_chain_closed, refined_realization, MonomialCrystal,
    NakMonomial, PChoice, RefinedCrystal,
};
use dgcrystal::polyhedral::{enumerate_sigma, PolyhedralCrystal, ZInfElement};
use dgcrystal::ud::{compare_with_polyhedral, generate_b, BElement, UdCrystal, XmConvention};
use dgcrystal::weyl::longest_word_i0;
use dgcrystal::{LaurentFraction, Rational, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CAP: usize = 100_000;

type Criterion = (&'static str, fn() -> Outcome);

enum Outcome {
    Pass(String),
    Fail(String),
    /// Fails as literally stated; the analyzed replacement holds.
    KnownFail(String),
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(1..=20), rng.gen_range(1..=20))
}

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> GeomPoint {
    let alpha = (0..n).map(|_| random_rational(rng)).collect();
    let c = (0..n * (n + 1) / 2).map(|_| random_rational(rng)).collect();
    GeomPoint::new(n, alpha, c).expect("positive coordinates")
}

fn all_weights() -> Vec<Weight> {
    (1..=3).flat_map(|n| dominant_weights(n, 2)).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut count = 0;
    for lambda in all_weights() {
        let n = lambda.rank();
        let dim = CartanA::new(n).weyl_dim(&lambda);
        let sizes = [
            enumerate_sigma(n, &lambda).len(),
            generate_b(&lambda, CAP).map_or(0, |g| g.len()),
            refined_realization(&lambda, CAP).map_or(0, |(_, g)| g.len()),
        ];
        let oracle = dim_oracle(&lambda);
        if dim != oracle.into() || sizes.iter().any(|&s| s as u64 != oracle) {
            bad.push(format!("{:?}: {sizes:?} vs {oracle}", lambda.coeffs()));
        }
        count += 1;
    }
    let secs = start.elapsed().as_secs_f64();
    if bad.is_empty() && secs < 30.0 {
        Outcome::Pass(format!("{count} weights, |Σ| = |B| = |refined| = dim, {secs:.2}s"))
    } else {
        Outcome::Fail(format!("{bad:?}, {secs:.2}s"))
    }
}

fn criterion_2() -> Outcome {
    let mut literal_mismatch = Vec::new();
    let mut other = Vec::new();
    for n in 1..=4 {
        let g = matrix_of(n, &theta_minus(n));
        let w0 = longest_word_i0(n);
        for j in 1..=n {
            let (lower, upper) = closed_minors(n, j);
            if generalized_minor(n, &w0, &[j], j, &g) != lower {
                other.push(format!("Δ(w0Λ,sΛ) n={n} j={j}"));
            }
            if generalized_minor(n, &w0_sj_word(n, j), &[], j, &g) != upper {
                literal_mismatch.push((n, j));
            }
            // The relation that does hold: the closed form labelled j is the
            // minor for the index n+1−j.
            let d = n + 1 - j;
            if generalized_minor(n, &w0_sj_word(n, d), &[], d, &g) != upper {
                other.push(format!("dual Δ(w0sΛ,Λ) n={n} j={j}"));
            }
        }
    }
    let expected: Vec<(usize, usize)> = (1..=4).flat_map(|n| (1..=n).filter(move |&j| 2 * j != n + 1).map(move |j| (n, j))).collect();
    if !other.is_empty() {
        return Outcome::Fail(format!("{other:?}"));
    }
    if literal_mismatch.is_empty() {
        return Outcome::Pass(String::from("both minors equal the closed forms for n ≤ 4"));
    }
    if literal_mismatch == expected {
        Outcome::KnownFail(format!(
            "Δ(w0Λj,sjΛj) matches for all j, n ≤ 4; Δ(w0sjΛj,Λj) differs from the closed form labelled j at {literal_mismatch:?} \
             and equals the one labelled n+1−j at every (n, j)"
        ))
    } else {
        Outcome::Fail(format!("unexpected mismatch pattern {literal_mismatch:?}"))
    }
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    for lambda in all_weights() {
        match compare_with_polyhedral(&lambda, CAP) {
            Ok(c) if c.agrees() => {}
            other => bad.push(format!("{:?}: {other:?}", lambda.coeffs())),
        }
    }
    if bad.is_empty() {
        Outcome::Pass(format!("{} weights: sets, operators and graphs agree", all_weights().len()))
    } else {
        Outcome::Fail(format!("{bad:?}"))
    }
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let scalars = [rat(2, 1), rat(1, 3), rat(5, 7)];
    let mut checks = 0;
    for n in 1..=3 {
        for _ in 0..100 {
            let x = random_point(&mut rng, n);
            for i in 1..=n {
                for s in &scalars {
                    if !decoration_check(&x, i, s, FbRoute::Closed).unwrap_or(false) {
                        return Outcome::Fail(format!("n={n} i={i} s={s} at {x:?}"));
                    }
                    checks += 1;
                }
            }
        }
    }
    Outcome::Pass(format!("{checks} exact identities at 300 points"))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut checks, mut controls, mut caught) = (0, 0, 0);
    let mut cases = [0usize; 2];
    for n in 2..=3 {
        for _ in 0..100 {
            let x = random_point(&mut rng, n);
            let s1 = random_rational(&mut rng);
            let mut s2 = random_rational(&mut rng);
            // Swapping the exponents is invisible when s1 = s2 or s1·s2 = 1.
            while s2 == s1 || &s1 * &s2 == rat(1, 1) {
                s2 = random_rational(&mut rng);
            }
            for i in 1..=n {
                for j in (1..=n).filter(|&j| j != i) {
                    if !verma_check(&x, i, j, &s1, &s2, VermaVariant::Faithful) {
                        return Outcome::Fail(format!("n={n} i={i} j={j} at {x:?}"));
                    }
                    checks += 1;
                    cases[usize::from(CartanA::new(n).a(i, j) == 0)] += 1;
                    controls += 1;
                    if !verma_check(&x, i, j, &s1, &s2, VermaVariant::PermutedExponents) {
                        caught += 1;
                    }
                }
            }
        }
    }
    if caught == controls && cases.iter().all(|&c| c > 0) {
        Outcome::Pass(format!("{checks} relations ({} with a = −1, {} with a = 0); {caught}/{controls} negative controls fail", cases[0], cases[1]))
    } else {
        Outcome::Fail(format!("negative controls caught {caught}/{controls}, cases {cases:?}"))
    }
}

fn criterion_6() -> Outcome {
    for n in 1..=3 {
        let t = TorusElement::symbolic(n);
        let c: Vec<LaurentFraction> = c_vars(n).into_iter().map(LaurentFraction::var).collect();
        let d = f_b(n, &t, &c, FbRoute::Definition);
        let m = f_b(n, &t, &c, FbRoute::Minors);
        let k = f_b(n, &t, &c, FbRoute::Closed);
        match (d, m, k) {
            (Ok(d), Ok(m), Ok(k)) if d == m && m == k => {}
            other => return Outcome::Fail(format!("symbolic n={n}: {other:?}")),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let x = random_point(&mut rng, 4);
        let vals: Vec<_> = [FbRoute::Definition, FbRoute::Minors, FbRoute::Closed].into_iter().map(|r| x.f_b(r)).collect();
        match (&vals[0], &vals[1], &vals[2]) {
            (Ok(a), Ok(b), Ok(c)) if a == b && b == c => {}
            _ => return Outcome::Fail(format!("numeric n=4: {vals:?}")),
        }
    }
    Outcome::Pass(String::from("three routes equal symbolically for n ≤ 3 and at 50 points for n = 4"))
}

fn criterion_7() -> Outcome {
    let mut points = 0u64;
    for lambda in all_weights() {
        let n = lambda.rank();
        let hi = lambda.coeffs().iter().copied().max().unwrap_or(0) + 1;
        let c = UdCrystal::new(lambda.clone());
        let len = n * (n + 1) / 2;
        let mut x = vec![-2i64; len];
        loop {
            let b = BElement::new(x.clone());
            if c.member_closed(&b) != c.member_trop(&b) {
                return Outcome::Fail(format!("λ={:?} x={x:?}", lambda.coeffs()));
            }
            points += 1;
            let Some(k) = (0..len).rev().find(|&k| x[k] < hi) else { break };
            x[k] += 1;
            x[k + 1..].iter_mut().for_each(|v| *v = -2);
        }
    }
    Outcome::Pass(format!("{points} box points, both membership tests agree"))
}

fn criterion_8() -> Outcome {
    for n in 1..=4 {
        let c = MonomialCrystal::standard(n);
        for i in 1..=n {
            let (low, high) = (lowering_chain(&c, i), raising_chain(&c, i));
            for k in 0..=n {
                if low[k] != Some(lowering_chain_closed(n, i, k)) || high[k] != Some(raising_chain_closed(n, i, k)) {
                    return Outcome::Fail(format!("chain n={n} i={i} k={k}"));
                }
            }
            if minor_as_monomials(n, i) != Ok(true) {
                return Outcome::Fail(format!("minor_as_monomials n={n} j={i}"));
            }
        }
    }
    for n in 1..=3 {
        match conjecture_check(n, &longest_word_i0(n), &PChoice::standard(n), CAP) {
            Ok(r) if r.holds() => {}
            other => return Outcome::Fail(format!("conjecture n={n}: {other:?}")),
        }
    }
    Outcome::Pass(String::from("chains and minor sums for n ≤ 4; Demazure decomposition for n ≤ 3"))
}

fn hygiene(g: &CrystalGraph, cartan: &CartanA) -> usize {
    check_axioms(g, cartan).len() + check_normality(g).len()
}

fn inverse_failures<C: Crystal>(c: &C, members: &[C::Elem]) -> usize {
    let mut bad = 0;
    for x in members {
        for i in c.cartan().indices() {
            if c.f(x, i).is_some_and(|y| c.e(&y, i).as_ref() != Some(x)) || c.e(x, i).is_some_and(|y| c.f(&y, i).as_ref() != Some(x)) {
                bad += 1;
            }
        }
    }
    bad
}

fn criterion_9() -> Outcome {
    let (mut graphs, mut violations) = (0, 0);
    for lambda in all_weights() {
        let n = lambda.rank();
        let cartan = CartanA::new(n);
        let sigma = enumerate_sigma(n, &lambda);
        let coords: Vec<BElement> = sigma.iter().map(|x| BElement::new(x.to_coords(n).expect("inside the N positions"))).collect();

        let pc = PolyhedralCrystal::a_n(lambda.clone());
        let uc = UdCrystal::new(lambda.clone());
        let rc = RefinedCrystal::new(lambda.clone()).expect("valid rank");
        let gs = [
            generate_graph(&pc, &ZInfElement::zero(), CAP),
            generate_graph(&uc, &BElement::zero(n), CAP),
            generate_graph(&rc, &BElement::zero(n), CAP),
        ];
        for g in gs {
            match g {
                Ok(g) => violations += hygiene(&g, &cartan),
                Err(_) => violations += 1,
            }
            graphs += 1;
        }
        violations += inverse_failures(&pc, &sigma) + inverse_failures(&uc, &coords) + inverse_failures(&rc, &coords);
    }
    for n in 1..=3 {
        let mc = MonomialCrystal::standard(n);
        for i in 1..=n {
            for seed in [NakMonomial::y((n - i + 1) as i64, 1, 1), NakMonomial::y(i as i64, 1, -1)] {
                match generate(&mc, &seed, CAP, Closure::Component) {
                    Ok(g) => violations += hygiene(&g, &mc.cartan()),
                    Err(_) => violations += 1,
                }
                graphs += 1;
            }
        }
    }

    // The printed partial sums X_m on n = 2, λ = Λ1.
    let lambda = Weight::new(vec![1, 0]);
    let printed = UdCrystal::with_convention(lambda.clone(), XmConvention::Printed);
    let members: Vec<BElement> = enumerate_sigma(2, &lambda).iter().map(|x| BElement::new(x.to_coords(2).expect("inside"))).collect();
    let broken = inverse_failures(&printed, &members)
        + generate_graph(&printed, &BElement::zero(2), CAP).map_or(1, |g| hygiene(&g, &printed.cartan()) + usize::from(g.len() != 3));

    if violations == 0 && broken > 0 {
        Outcome::Pass(format!("{graphs} graphs clean, operators invert on all members; printed X_m convention breaks n=2, Λ1 ({broken} violations)"))
    } else {
        Outcome::Fail(format!("{violations} violations; printed convention violations {broken}"))
    }
}

fn criterion_10() -> Outcome {
    let mut count = 0;
    for n in 1..=4 {
        let x = x_matrix(n);
        for i in 1..=n {
            for k in 1..=i {
                if xi_coefficients(n, i, k) != xi_from_matrix(n, i, k) || xi_from_matrix(n, i, k) != *x.get(k - 1, i - 1) {
                    return Outcome::Fail(format!("n={n} i={i} k={k}"));
                }
                count += 1;
            }
        }
    }
    Outcome::Pass(format!("{count} coefficients equal the matrix entries"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("dimension agreement", criterion_1),
        ("closed forms of the minors", criterion_2),
        ("UD crystal equals the polyhedral crystal", criterion_3),
        ("decoration identity", criterion_4),
        ("Verma relations", criterion_5),
        ("three routes to f_B", criterion_6),
        ("closed vs tropical membership", criterion_7),
        ("monomial chains and minors", criterion_8),
        ("crystal hygiene", criterion_9),
        ("ξ coefficients", criterion_10),
    ];
    let mut hard_failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (tag, detail) = match run() {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Fail(d) => {
                hard_failures += 1;
                ("FAIL", d)
            }
            Outcome::KnownFail(d) => ("FAIL (as stated; analyzed relation holds)", d),
        };
        println!("criterion {:>2} {tag}: {name}: {detail} [{:.2}s]", k + 1, start.elapsed().as_secs_f64());
    }
    if hard_failures > 0 {
        std::process::exit(1);
    }
}
