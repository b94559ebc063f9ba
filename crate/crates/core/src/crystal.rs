//! The abstract crystal interface, crystal graphs and the checks run on them.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{CartanA, Weight};
use crate::error::{Error, Result};

/// A realization of a crystal of type `A_n`. Colors are 1-based.
pub trait Crystal {
    type Elem: Clone + Ord;

    fn cartan(&self) -> CartanA;
    fn e(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn f(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn wt(&self, b: &Self::Elem) -> Weight;
    fn eps(&self, b: &Self::Elem, i: usize) -> i64;

    fn phi(&self, b: &Self::Elem, i: usize) -> i64 {
        self.eps(b, i) + self.wt(b).get(i)
    }

    /// Canonical text form of an element.
    fn payload(&self, b: &Self::Elem) -> String;
}

/// A vertex with its cached crystal data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub payload: String,
    pub wt: Weight,
    pub eps: Vec<i64>,
    pub phi: Vec<i64>,
}

/// A finite crystal graph.
///
/// `edges` holds `(u, i, v)` with `f̃_i(u) = v`. `e_edges` holds `(v, i, u)`
/// with `ẽ_i(v) = u` as computed by the realization itself, and `escapes`
/// lists `(v, i)` where `ẽ_i(v)` is nonzero but outside the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub rank: usize,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(usize, usize, usize)>,
    pub e_edges: Vec<(usize, usize, usize)>,
    pub escapes: Vec<(usize, usize)>,
}

impl CrystalGraph {
    /// A graph given by its `f̃` edges only; the `ẽ` edges are taken to be
    /// their reversal.
    pub fn from_parts(rank: usize, vertices: Vec<Vertex>, edges: Vec<(usize, usize, usize)>) -> Self {
        let e_edges = edges.iter().map(|&(u, i, v)| (v, i, u)).collect();
        CrystalGraph { rank, vertices, edges, e_edges, escapes: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `f̃_i` on vertex indices.
    pub fn f_target(&self, u: usize, i: usize) -> Option<usize> {
        self.edges.iter().find(|&&(a, c, _)| a == u && c == i).map(|e| e.2)
    }

    /// `ẽ_i` on vertex indices, read off the `f̃` edges.
    pub fn e_target(&self, v: usize, i: usize) -> Option<usize> {
        self.edges.iter().find(|&&(_, c, b)| b == v && c == i).map(|e| e.0)
    }

    /// Vertices without incoming edges.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.len()];
        for &(_, _, v) in &self.edges {
            has_in[v] = true;
        }
        (0..self.len()).filter(|&v| !has_in[v]).collect()
    }

    pub fn payloads(&self) -> Vec<&str> {
        self.vertices.iter().map(|v| v.payload.as_str()).collect()
    }
}

/// How graph generation explores.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    /// Closure under `f̃_i` from a highest-weight element.
    Lowering,
    /// Closure under both `ẽ_i` and `f̃_i`: the connected component.
    Component,
}

/// Breadth-first closure of `start` under `f̃_i` (colors ascending), with at
/// most `cap` vertices.
pub fn generate_graph<C: Crystal>(c: &C, highest: &C::Elem, cap: usize) -> Result<CrystalGraph> {
    for i in c.cartan().indices() {
        if c.e(highest, i).is_some() {
            return Err(Error::Invalid(format!("ẽ_{i} does not vanish on {}", c.payload(highest))));
        }
    }
    generate(c, highest, cap, Closure::Lowering)
}

/// Breadth-first closure of `start`, vertices numbered in discovery order.
pub fn generate<C: Crystal>(c: &C, start: &C::Elem, cap: usize, mode: Closure) -> Result<CrystalGraph> {
    let n = c.cartan().rank();
    let mut index: BTreeMap<C::Elem, usize> = BTreeMap::new();
    let mut elems: Vec<C::Elem> = Vec::new();
    let mut queue = VecDeque::new();
    let push = |b: C::Elem, index: &mut BTreeMap<C::Elem, usize>, elems: &mut Vec<C::Elem>, queue: &mut VecDeque<usize>| -> Result<usize> {
        if let Some(&k) = index.get(&b) {
            return Ok(k);
        }
        if elems.len() >= cap {
            return Err(Error::BudgetExceeded(cap));
        }
        let k = elems.len();
        index.insert(b.clone(), k);
        elems.push(b);
        queue.push_back(k);
        Ok(k)
    };
    push(start.clone(), &mut index, &mut elems, &mut queue)?;
    let mut edges = Vec::new();
    while let Some(u) = queue.pop_front() {
        for i in 1..=n {
            let b = elems[u].clone();
            if let Some(t) = c.f(&b, i) {
                let v = push(t, &mut index, &mut elems, &mut queue)?;
                edges.push((u, i, v));
            }
            if mode == Closure::Component {
                if let Some(s) = c.e(&b, i) {
                    push(s, &mut index, &mut elems, &mut queue)?;
                }
            }
        }
    }
    let mut e_edges = Vec::new();
    let mut escapes = Vec::new();
    for (v, b) in elems.iter().enumerate() {
        for i in 1..=n {
            if let Some(s) = c.e(b, i) {
                match index.get(&s) {
                    Some(&u) => e_edges.push((v, i, u)),
                    None => escapes.push((v, i)),
                }
            }
        }
    }
    let vertices = elems
        .iter()
        .map(|b| Vertex {
            payload: c.payload(b),
            wt: c.wt(b),
            eps: (1..=n).map(|i| c.eps(b, i)).collect(),
            phi: (1..=n).map(|i| c.phi(b, i)).collect(),
        })
        .collect();
    Ok(CrystalGraph { rank: n, vertices, edges, e_edges, escapes })
}

/// One failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: usize,
    pub color: usize,
    pub message: String,
}

fn violation(vertex: usize, color: usize, message: String) -> Violation {
    Violation { vertex, color, message }
}

/// Checks the crystal axioms on a finite graph: each `f̃_i` edge lowers the
/// weight by `α_i`, raises `ε_i` by one and lowers `φ_i` by one;
/// `φ_i = ε_i + ⟨h_i, wt⟩` at every vertex; edges are functional in both
/// directions; and the realization's `ẽ_i` inverts its `f̃_i`.
pub fn check_axioms(g: &CrystalGraph, cartan: &CartanA) -> Vec<Violation> {
    let mut out = Vec::new();
    for (v, x) in g.vertices.iter().enumerate() {
        for i in 1..=g.rank {
            if x.phi[i - 1] != x.eps[i - 1] + x.wt.get(i) {
                out.push(violation(v, i, format!("φ_{i} ≠ ε_{i} + ⟨h_{i}, wt⟩")));
            }
        }
    }
    let mut out_deg: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut in_deg: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(u, i, v) in &g.edges {
        *out_deg.entry((u, i)).or_default() += 1;
        *in_deg.entry((v, i)).or_default() += 1;
        let (a, b) = (&g.vertices[u], &g.vertices[v]);
        let mut bad = Vec::new();
        if b.wt != a.wt.sub(&cartan.simple_root(i)) {
            bad.push("wt");
        }
        if b.eps[i - 1] != a.eps[i - 1] + 1 {
            bad.push("ε");
        }
        if b.phi[i - 1] != a.phi[i - 1] - 1 {
            bad.push("φ");
        }
        if !bad.is_empty() {
            out.push(violation(u, i, format!("edge {u} -{i}-> {v} breaks {}", bad.join(", "))));
        }
    }
    for (&(u, i), &d) in &out_deg {
        if d > 1 {
            out.push(violation(u, i, format!("{d} outgoing {i}-edges")));
        }
    }
    for (&(v, i), &d) in &in_deg {
        if d > 1 {
            out.push(violation(v, i, format!("{d} incoming {i}-edges")));
        }
    }
    let mut reversed: Vec<(usize, usize, usize)> = g.edges.iter().map(|&(u, i, v)| (v, i, u)).collect();
    reversed.sort_unstable();
    let mut e_sorted = g.e_edges.clone();
    e_sorted.sort_unstable();
    for e in &reversed {
        if e_sorted.binary_search(e).is_err() {
            out.push(violation(e.0, e.1, format!("ẽ_{} f̃_{} ≠ id at {}", e.1, e.1, e.2)));
        }
    }
    for e in &e_sorted {
        if reversed.binary_search(e).is_err() {
            out.push(violation(e.0, e.1, format!("f̃_{} ẽ_{} ≠ id at {}", e.1, e.1, e.0)));
        }
    }
    for &(v, i) in &g.escapes {
        out.push(violation(v, i, format!("ẽ_{i} leaves the vertex set")));
    }
    out
}

/// Checks `ε_i = max{k : ẽ_i^k b ≠ 0}` and `φ_i = max{k : f̃_i^k b ≠ 0}`
/// along the graph's own edges.
pub fn check_normality(g: &CrystalGraph) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut f_map: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut e_map: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(u, i, v) in &g.edges {
        f_map.insert((u, i), v);
        e_map.insert((v, i), u);
    }
    let string_len = |map: &BTreeMap<(usize, usize), usize>, mut v: usize, i: usize| -> i64 {
        let mut k = 0;
        while let Some(&w) = map.get(&(v, i)) {
            v = w;
            k += 1;
            if k > g.len() as i64 {
                break;
            }
        }
        k
    };
    for (v, x) in g.vertices.iter().enumerate() {
        for i in 1..=g.rank {
            let (up, down) = (string_len(&e_map, v, i), string_len(&f_map, v, i));
            if x.eps[i - 1] != up {
                out.push(violation(v, i, format!("ε_{i} = {} but the ẽ-string has length {up}", x.eps[i - 1])));
            }
            if x.phi[i - 1] != down {
                out.push(violation(v, i, format!("φ_{i} = {} but the f̃-string has length {down}", x.phi[i - 1])));
            }
        }
    }
    out
}

fn unique_source(g: &CrystalGraph) -> Result<usize> {
    match g.sources().as_slice() {
        [s] => Ok(*s),
        s => Err(Error::Structure(format!("expected one source vertex, found {}", s.len()))),
    }
}

/// Whether two connected highest-weight graphs are isomorphic as colored
/// graphs with matching `wt`, `ε_i`, `φ_i`, by lockstep traversal from their
/// sources. Payloads are ignored.
pub fn isomorphic(g1: &CrystalGraph, g2: &CrystalGraph) -> Result<bool> {
    let (h1, h2) = (unique_source(g1)?, unique_source(g2)?);
    if g1.rank != g2.rank || g1.len() != g2.len() || g1.edges.len() != g2.edges.len() {
        return Ok(false);
    }
    let mut f1: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut f2: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(u, i, v) in &g1.edges {
        f1.insert((u, i), v);
    }
    for &(u, i, v) in &g2.edges {
        f2.insert((u, i), v);
    }
    let mut fwd = vec![usize::MAX; g1.len()];
    let mut bwd = vec![usize::MAX; g2.len()];
    fwd[h1] = h2;
    bwd[h2] = h1;
    let mut queue = VecDeque::from([(h1, h2)]);
    while let Some((a, b)) = queue.pop_front() {
        let (x, y) = (&g1.vertices[a], &g2.vertices[b]);
        if x.wt != y.wt || x.eps != y.eps || x.phi != y.phi {
            return Ok(false);
        }
        for i in 1..=g1.rank {
            match (f1.get(&(a, i)), f2.get(&(b, i))) {
                (None, None) => {}
                (Some(&p), Some(&q)) => {
                    if fwd[p] == usize::MAX && bwd[q] == usize::MAX {
                        fwd[p] = q;
                        bwd[q] = p;
                        queue.push_back((p, q));
                    } else if fwd[p] != q || bwd[q] != p {
                        return Ok(false);
                    }
                }
                _ => return Ok(false),
            }
        }
    }
    Ok(fwd.iter().all(|&m| m != usize::MAX))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The `sl_2` string `0 → 1 → ⋯ → m`.
    struct Sl2String(i64);

    impl Crystal for Sl2String {
        type Elem = i64;
        fn cartan(&self) -> CartanA {
            CartanA::new(1)
        }
        fn e(&self, b: &i64, _: usize) -> Option<i64> {
            (*b > 0).then(|| b - 1)
        }
        fn f(&self, b: &i64, _: usize) -> Option<i64> {
            (*b < self.0).then(|| b + 1)
        }
        fn wt(&self, b: &i64) -> Weight {
            Weight::new(vec![self.0 - 2 * b])
        }
        fn eps(&self, b: &i64, _: usize) -> i64 {
            *b
        }
        fn payload(&self, b: &i64) -> String {
            format!("{b}")
        }
    }

    /// The standard crystal of `A_2`: `1 -1-> 2 -2-> 3`.
    fn standard_a2() -> CrystalGraph {
        let v = |wt: [i64; 2], eps: [i64; 2], phi: [i64; 2], p: &str| Vertex {
            payload: String::from(p),
            wt: Weight::new(wt.to_vec()),
            eps: eps.to_vec(),
            phi: phi.to_vec(),
        };
        CrystalGraph::from_parts(
            2,
            vec![v([1, 0], [0, 0], [1, 0], "1"), v([-1, 1], [1, 0], [0, 1], "2"), v([0, -1], [0, 1], [0, 0], "3")],
            vec![(0, 1, 1), (1, 2, 2)],
        )
    }

    #[test]
    fn sl2_string_is_a_path() {
        let g = generate_graph(&Sl2String(2), &0, 10).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.edges, vec![(0, 1, 1), (1, 1, 2)]);
        assert!(check_axioms(&g, &CartanA::new(1)).is_empty());
        assert!(check_normality(&g).is_empty());
        assert_eq!((g.vertices[1].eps[0], g.vertices[1].phi[0]), (1, 1));
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(generate_graph(&Sl2String(2), &0, 1), Err(Error::BudgetExceeded(1)));
    }

    #[test]
    fn non_highest_start_is_rejected() {
        assert!(matches!(generate_graph(&Sl2String(2), &1, 10), Err(Error::Invalid(_))));
        assert_eq!(generate(&Sl2String(2), &1, 10, Closure::Component).unwrap().len(), 3);
    }

    #[test]
    fn standard_crystal_passes() {
        let g = standard_a2();
        assert!(check_axioms(&g, &CartanA::new(2)).is_empty());
        assert!(check_normality(&g).is_empty());
    }

    #[test]
    fn forged_edge_is_reported() {
        let mut g = standard_a2();
        g.vertices[1].wt = Weight::new(vec![-3, 2]);
        g.vertices[1].phi = vec![-2, 2];
        let bad = check_axioms(&g, &CartanA::new(2));
        assert_eq!(bad.len(), 2, "{bad:?}");
        let h = CrystalGraph::from_parts(2, standard_a2().vertices[..2].to_vec(), vec![(0, 2, 1)]);
        assert_eq!(check_axioms(&h, &CartanA::new(2)).len(), 1);
    }

    #[test]
    fn single_vertex_is_clean() {
        let g = CrystalGraph::from_parts(
            2,
            vec![Vertex { payload: String::from("0"), wt: Weight::zero(2), eps: vec![0, 0], phi: vec![0, 0] }],
            vec![],
        );
        assert!(check_axioms(&g, &CartanA::new(2)).is_empty());
        assert!(check_normality(&g).is_empty());
    }

    #[test]
    fn oversized_epsilon_is_reported() {
        let mut g = standard_a2();
        g.vertices[0].eps[0] = 1;
        assert_eq!(check_normality(&g).len(), 1);
    }

    #[test]
    fn isomorphism_examples() {
        let g = standard_a2();
        assert!(isomorphic(&g, &g).unwrap());
        // B(Λ2): 1 -2-> 2 -1-> 3 with different weights.
        let v = |wt: [i64; 2], eps: [i64; 2], phi: [i64; 2]| Vertex {
            payload: String::new(),
            wt: Weight::new(wt.to_vec()),
            eps: eps.to_vec(),
            phi: phi.to_vec(),
        };
        let dual = CrystalGraph::from_parts(
            2,
            vec![v([0, 1], [0, 0], [0, 1]), v([1, -1], [0, 1], [1, 0]), v([-1, 0], [1, 0], [0, 0])],
            vec![(0, 2, 1), (1, 1, 2)],
        );
        assert!(!isomorphic(&g, &dual).unwrap());
        let mut two_sources = g.clone();
        two_sources.edges.pop();
        assert!(matches!(isomorphic(&two_sources, &g), Err(Error::Structure(_))));
    }
}
