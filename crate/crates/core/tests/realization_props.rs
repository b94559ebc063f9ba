mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use common::*;
use dgcrystal::cartan::CartanA;
use dgcrystal::crystal::{check_normality, Crystal};
use dgcrystal::monomial::{component, MonomialCrystal, NakMonomial, RefinedCrystal};
use dgcrystal::polyhedral::{an_inequalities, enumerate_sigma, generate_xi_lambda, membership_sigma_lambda, ClosureCaps, PolyhedralCrystal, XiClosure, ZInfElement};
use dgcrystal::ud::{BElement, UdCrystal};
use dgcrystal::Weight;
use proptest::prelude::*;

fn small_weight() -> impl Strategy<Value = Weight> {
    (1usize..=3).prop_flat_map(|n| prop::collection::vec(0i64..=2, n)).prop_map(Weight::new)
}

fn weight_and_point(lo: i64, hi: i64) -> impl Strategy<Value = (Weight, Vec<i64>)> {
    small_weight().prop_flat_map(move |w| {
        let n = w.rank();
        (Just(w), prop::collection::vec(lo..=hi, n * (n + 1) / 2))
    })
}

fn xi_closure(n: usize) -> &'static XiClosure {
    static CACHE: [OnceLock<XiClosure>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CACHE[n - 1].get_or_init(|| generate_xi_lambda(n, ClosureCaps::default()))
}

/// `ẽ_i`/`f̃_i` invert each other and `ε_i`, `φ_i` are the string lengths.
fn check_element<C: Crystal>(c: &C, x: &C::Elem) -> Result<(), TestCaseError>
where
    C::Elem: PartialEq + std::fmt::Debug,
{
    let cartan = c.cartan();
    for i in cartan.indices() {
        if let Some(y) = c.f(x, i) {
            prop_assert!(c.e(&y, i).as_ref() == Some(x));
            prop_assert_eq!(c.wt(&y), c.wt(x).sub(&cartan.simple_root(i)));
        }
        if let Some(y) = c.e(x, i) {
            prop_assert!(c.f(&y, i).as_ref() == Some(x));
        }
        prop_assert_eq!(c.phi(x, i) - c.eps(x, i), c.wt(x).get(i));
    }
    Ok(())
}

fn string_lengths<C: Crystal>(c: &C, x: &C::Elem, i: usize) -> (i64, i64) {
    let walk = |step: &dyn Fn(&C::Elem) -> Option<C::Elem>| {
        let (mut cur, mut k) = (x.clone(), 0);
        while let Some(y) = step(&cur) {
            cur = y;
            k += 1;
        }
        k
    };
    (walk(&|y| c.e(y, i)), walk(&|y| c.f(y, i)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polyhedral_operators_invert_and_stay_inside(lambda in small_weight(), pick in any::<prop::sample::Index>()) {
        let n = lambda.rank();
        let set = enumerate_sigma(n, &lambda);
        let forms = an_inequalities(n);
        let x = &set[pick.index(set.len())];
        let c = PolyhedralCrystal::a_n(lambda.clone());
        check_element(&c, x)?;
        for i in 1..=n {
            for y in [c.e(x, i), c.f(x, i)].into_iter().flatten() {
                prop_assert!(membership_sigma_lambda(&y, &lambda, &forms));
            }
            prop_assert_eq!(string_lengths(&c, x, i), (c.eps(x, i), c.phi(x, i)));
        }
    }

    #[test]
    fn closure_region_is_the_closed_form_region((lambda, x) in weight_and_point(0, 4)) {
        let n = lambda.rank();
        let p = ZInfElement::from_coords(n, &x);
        prop_assert_eq!(
            membership_sigma_lambda(&p, &lambda, &xi_closure(n).forms),
            membership_sigma_lambda(&p, &lambda, &an_inequalities(n))
        );
    }

    #[test]
    fn ud_membership_routes_agree((lambda, x) in weight_and_point(-2, 3)) {
        let c = UdCrystal::new(lambda);
        let x = BElement::new(x);
        prop_assert_eq!(c.member_closed(&x), c.member_trop(&x));
    }

    #[test]
    fn ud_members_are_normal((lambda, x) in weight_and_point(0, 4)) {
        let c = UdCrystal::new(lambda);
        let x = BElement::new(x);
        prop_assume!(c.member_closed(&x));
        check_element(&c, &x)?;
        for i in 1..=c.n {
            prop_assert_eq!(string_lengths(&c, &x, i), (c.eps(&x, i), c.phi(&x, i)));
            if let Some(y) = c.ud_f(&x, i) {
                prop_assert_eq!(c.ud_wt(&y), c.ud_wt(&x).sub(&CartanA::new(c.n).simple_root(i)));
            }
        }
    }

    #[test]
    fn refined_and_ud_regions_agree((lambda, x) in weight_and_point(-2, 4)) {
        let r = RefinedCrystal::new(lambda.clone()).unwrap();
        let c = UdCrystal::new(lambda);
        let x = BElement::new(x);
        prop_assert_eq!(r.member(&x), c.member_closed(&x));
    }

    #[test]
    fn monomial_operators_invert(
        n in 1usize..=3,
        terms in prop::collection::vec((-2i64..=3, 1usize..=3, -2i64..=2), 0..5),
    ) {
        let y = terms.iter().filter(|t| t.1 <= n).fold(NakMonomial::one(), |acc, &(m, i, e)| acc.times(m, i, e));
        let c = MonomialCrystal::standard(n);
        check_element(&c, &y)?;
    }
}

#[test]
fn sigma_is_closed_and_has_weyl_dimension() {
    for n in 1..=3 {
        for lambda in dominant_weights(n, 2) {
            let set: BTreeSet<ZInfElement> = enumerate_sigma(n, &lambda).into_iter().collect();
            assert_eq!(set.len() as u64, dim_oracle(&lambda), "λ={lambda:?}");
            let c = PolyhedralCrystal::a_n(lambda.clone());
            for x in &set {
                for i in 1..=n {
                    for y in [c.e(x, i), c.f(x, i)].into_iter().flatten() {
                        assert!(set.contains(&y), "λ={lambda:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn monomial_components_are_normal_crystals() {
    for n in 1..=3 {
        let c = MonomialCrystal::standard(n);
        for m in 0..=2 {
            for i in 1..=n {
                let mut top = NakMonomial::y(m, i, 1).mul(&NakMonomial::y(m + 1, 1, 1));
                while let Some(up) = (1..=n).find_map(|k| c.mono_e(&top, k)) {
                    top = up;
                }
                let g = component(&c, &top, 2000).unwrap();
                assert!(check_normality(&g).is_empty());
                assert_eq!(g.sources().len(), 1);
                let w = g.vertices[g.sources()[0]].wt.clone();
                assert_eq!(g.len() as u64, dim_oracle(&w));
            }
        }
    }
}

fn graph_shape(g: &dgcrystal::CrystalGraph, lambda: &Weight) {
    assert_eq!(g.len() as u64, dim_oracle(lambda));
    let tops: Vec<usize> = (0..g.len()).filter(|&v| g.vertices[v].eps.iter().all(|&e| e == 0)).collect();
    assert_eq!(tops.len(), 1);
    assert_eq!(&g.vertices[tops[0]].wt, lambda);
    // Every vertex is reached from the top and no single-color string closes up.
    let mut seen = vec![false; g.len()];
    let mut stack = vec![tops[0]];
    seen[tops[0]] = true;
    while let Some(u) = stack.pop() {
        for &(a, _, b) in &g.edges {
            if a == u && !seen[b] {
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    assert!(seen.iter().all(|&s| s));
    for i in 1..=g.rank {
        for start in 0..g.len() {
            let mut cur = start;
            for _ in 0..=g.len() {
                match g.f_target(cur, i) {
                    Some(next) => {
                        assert_ne!(next, start);
                        cur = next;
                    }
                    None => break,
                }
            }
        }
    }
}

#[test]
fn generated_graphs_are_highest_weight_crystals() {
    for n in 1..=3 {
        for lambda in dominant_weights(n, 2) {
            let pc = PolyhedralCrystal::a_n(lambda.clone());
            graph_shape(&dgcrystal::crystal::generate_graph(&pc, &ZInfElement::zero(), 10_000).unwrap(), &lambda);
            graph_shape(&dgcrystal::ud::generate_b(&lambda, 10_000).unwrap(), &lambda);
            graph_shape(&dgcrystal::monomial::refined_realization(&lambda, 10_000).unwrap().1, &lambda);
        }
    }
}
