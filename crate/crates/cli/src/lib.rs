//! Command-line driver for `dgcrystal`: argument parsing, dispatch and the
//! JSON / DOT / text renderings.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use dgcrystal::cartan::CartanA;
use dgcrystal::crystal::{check_axioms, check_normality, generate_graph, CrystalGraph};
use dgcrystal::geometric::{
    c_vars, closed_minors, decoration_check, f_b, generalized_minor, matrix_of, theta_minus, verma_check, w0_sj_word, FbRoute, GeomPoint, TorusElement,
    VermaVariant,
};
use dgcrystal::monomial::{conjecture_check, refined_inequalities, refined_realization, ConjectureReport, MinorSide, MonomialCrystal, NakMonomial, PChoice};
use dgcrystal::polyhedral::{an_inequalities, double, generate_xi_lambda, ClosureCaps, PolyhedralCrystal, ZInfElement};
use dgcrystal::tropical::FormKey;
use dgcrystal::ud::{compare_with_polyhedral, closed_inequalities, BElement, Comparison, UdCrystal, XmConvention};
use dgcrystal::weyl::{is_longest_word, longest_word_i0};
use dgcrystal::{AffineForm, LaurentFraction, Rational, VarId, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Definition,
    Minors,
    Closed,
}

impl From<Route> for FbRoute {
    fn from(r: Route) -> Self {
        match r {
            Route::Definition => FbRoute::Definition,
            Route::Minors => FbRoute::Minors,
            Route::Closed => FbRoute::Closed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum XmArg {
    Corrected,
    Printed,
}

impl From<XmArg> for XmConvention {
    fn from(x: XmArg) -> Self {
        match x {
            XmArg::Corrected => XmConvention::Corrected,
            XmArg::Printed => XmConvention::Printed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Realization {
    Polyhedral,
    Ud,
    Monomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum System {
    /// The closed-form system on the semi-infinite lattice.
    #[value(name = "thm27")]
    Polyhedral,
    /// The staircase system of `B_{f_B}(λ)` in the coordinates `x_{j,i}`.
    #[value(name = "lemma51")]
    Closed,
    /// Tropicalized monomials of the minors.
    Refined,
    /// The `Ŝ_k` closure.
    XiClosure,
}

#[derive(Debug, Parser)]
#[command(name = "dgcrystal", version, about = "Type A crystals B(λ) from polyhedral, tropical and monomial realizations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Seed for the randomized exact checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 100_000)]
    pub cap_vertices: usize,
    /// Depth cap for the Ŝ_k closure.
    #[arg(long, global = true, default_value_t = 64)]
    pub cap_depth: usize,
    #[arg(long, global = true, value_enum, default_value = "closed")]
    pub route: Route,
    /// Partial sums used by the UD operators.
    #[arg(long, global = true, value_enum, default_value = "corrected")]
    pub xm_convention: XmArg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weyl dimension of V(λ).
    Dim { n: usize, lambda: Vec<i64> },
    /// The crystal graph of B(λ) in one realization.
    Graph {
        #[arg(value_enum)]
        realization: Realization,
        n: usize,
        lambda: Vec<i64>,
    },
    /// An inequality system; with λ given, λ is substituted.
    Inequalities {
        #[arg(value_enum)]
        system: System,
        n: usize,
        lambda: Vec<i64>,
    },
    /// The minors of Θ⁻(c) against their closed forms, and the f_B routes.
    Minors { n: usize },
    /// f_B(tΘ⁻(c)) by the route chosen with --route.
    #[command(name = "fB")]
    FB { n: usize },
    /// B_{f_B}(λ) against Σ(λ): sets, operators and graphs.
    Compare { n: usize, lambda: Vec<i64> },
    /// Crystal axioms and normality on every realization.
    CheckAxioms {
        n: usize,
        /// A single weight; all weights with entries ≤ --max-lambda otherwise.
        lambda: Vec<i64>,
        #[arg(long, default_value_t = 2)]
        max_lambda: i64,
    },
    /// Demazure decomposition of the minors into Nakajima monomials.
    CheckConjecture {
        n: usize,
        /// Reduced word of the longest element, comma separated (default i0).
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<usize>>,
        /// Cyclic order defining p, comma separated (default 1,2,…,n).
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
    },
    /// Decoration identity and Verma relations at seeded random points.
    CheckGeometric {
        n: usize,
        #[arg(long, default_value_t = 100)]
        points: usize,
    },
}

/// What a run prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: 0 }
    }

    fn verdict(stdout: String, ok: bool) -> Self {
        Outcome { stdout, stderr: String::new(), code: if ok { 0 } else { 1 } }
    }

    fn usage(msg: String) -> Self {
        Outcome { stdout: String::new(), stderr: msg, code: 2 }
    }

    fn failure(msg: String) -> Self {
        Outcome { stdout: String::new(), stderr: msg, code: 1 }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome::usage(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Graph { .. }) {
        return Outcome::usage(String::from("error: --format dot is only available for `graph`\n"));
    }
    let result = match &cli.command {
        Command::Dim { n, lambda } => weight(*n, lambda).map(|w| cmd_dim(cli, &w)),
        Command::Graph { realization, n, lambda } => weight(*n, lambda).map(|w| cmd_graph(cli, *realization, &w)),
        Command::Inequalities { system, n, lambda } => {
            let w = if lambda.is_empty() { rank(*n).map(|_| None) } else { weight(*n, lambda).map(Some) };
            w.map(|w| cmd_inequalities(cli, *system, *n, w.as_ref()))
        }
        Command::Minors { n } => rank(*n).map(|_| cmd_minors(cli, *n)),
        Command::FB { n } => rank(*n).map(|_| cmd_fb(cli, *n)),
        Command::Compare { n, lambda } => weight(*n, lambda).map(|w| cmd_compare(cli, &w)),
        Command::CheckAxioms { n, lambda, max_lambda } => {
            let ws = if lambda.is_empty() {
                if *max_lambda < 0 {
                    Err(String::from("--max-lambda must be nonnegative"))
                } else {
                    rank(*n).map(|_| dominant_weights(*n, *max_lambda))
                }
            } else {
                weight(*n, lambda).map(|w| vec![w])
            };
            ws.map(|ws| cmd_check_axioms(cli, &ws))
        }
        Command::CheckConjecture { n, word, order } => rank(*n).and_then(|_| {
            let word = word.clone().unwrap_or_else(|| longest_word_i0(*n));
            if !is_longest_word(n + 1, &word) {
                return Err(format!("{word:?} is not a reduced word of the longest element of S_{}", n + 1));
            }
            let p = match order {
                Some(o) if o.len() != *n => return Err(format!("--order needs {n} entries")),
                Some(o) => PChoice::from_cyclic_order(o).map_err(|e| e.to_string())?,
                None => PChoice::standard(*n),
            };
            Ok(cmd_check_conjecture(cli, *n, &word, &p))
        }),
        Command::CheckGeometric { n, points } => rank(*n).map(|_| cmd_check_geometric(cli, *n, *points)),
    };
    result.unwrap_or_else(|msg| Outcome::usage(format!("error: {msg}\n")))
}

fn rank(n: usize) -> Result<(), String> {
    if n == 0 {
        Err(String::from("the rank n must be at least 1"))
    } else {
        Ok(())
    }
}

fn weight(n: usize, lambda: &[i64]) -> Result<Weight, String> {
    rank(n)?;
    if lambda.len() != n {
        return Err(format!("λ needs {n} entries, got {}", lambda.len()));
    }
    if lambda.iter().any(|&l| l < 0) {
        return Err(String::from("λ must be dominant (entries ≥ 0)"));
    }
    Ok(Weight::new(lambda.to_vec()))
}

/// All dominant weights of rank `n` with entries at most `max`, in
/// lexicographic order.
pub fn dominant_weights(n: usize, max: i64) -> Vec<Weight> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| (0..=max).map(move |a| [w.clone(), vec![a]].concat())).collect();
    }
    out.into_iter().map(Weight::new).collect()
}

fn render(cli: &Cli, value: &Value, text: impl FnOnce() -> String) -> String {
    match cli.format {
        Format::Text => text(),
        _ => {
            let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
            s.push('\n');
            s
        }
    }
}

fn cmd_dim(cli: &Cli, w: &Weight) -> Outcome {
    let d = CartanA::new(w.rank()).weyl_dim(w).to_string();
    let value: Value = serde_json::from_str(&d).expect("a decimal integer");
    Outcome::ok(render(cli, &value, || format!("{d}\n")))
}

fn build_graph(cli: &Cli, realization: Realization, w: &Weight) -> dgcrystal::error::Result<CrystalGraph> {
    let n = w.rank();
    let cap = cli.cap_vertices;
    match realization {
        Realization::Polyhedral => generate_graph(&PolyhedralCrystal::a_n(w.clone()), &ZInfElement::zero(), cap),
        Realization::Ud => generate_graph(&UdCrystal::with_convention(w.clone(), cli.xm_convention.into()), &BElement::zero(n), cap),
        Realization::Monomial => {
            let top = (1..=n).fold(NakMonomial::one(), |y, i| y.times(1, i, w.get(i)));
            generate_graph(&MonomialCrystal::standard(n), &top, cap)
        }
    }
}

fn cmd_graph(cli: &Cli, realization: Realization, w: &Weight) -> Outcome {
    match build_graph(cli, realization, w) {
        Ok(g) => Outcome::ok(match cli.format {
            Format::Dot => graph_dot(&g),
            Format::Json => render(cli, &graph_json(&g), String::new),
            Format::Text => graph_text(&g),
        }),
        Err(e) => Outcome::failure(format!("{e}\n")),
    }
}

/// `{vertices: [{id, payload, wt, eps, phi}], edges: [[src, i, dst]]}`.
pub fn graph_json(g: &CrystalGraph) -> Value {
    let vertices: Vec<Value> = g
        .vertices
        .iter()
        .enumerate()
        .map(|(id, v)| json!({"id": id, "payload": v.payload, "wt": v.wt.coeffs(), "eps": v.eps, "phi": v.phi}))
        .collect();
    let edges: Vec<Value> = g.edges.iter().map(|&(u, i, v)| json!([u, i, v])).collect();
    json!({"vertices": vertices, "edges": edges})
}

pub fn graph_dot(g: &CrystalGraph) -> String {
    let mut s = String::from("digraph crystal {\n");
    for (id, v) in g.vertices.iter().enumerate() {
        let _ = writeln!(s, "  {id} [label=\"{}\\nwt={}\"];", v.payload.replace('"', "\\\""), v.wt);
    }
    for &(u, i, v) in &g.edges {
        let _ = writeln!(s, "  {u} -> {v} [label=\"{i}\"];");
    }
    s.push_str("}\n");
    s
}

pub fn graph_text(g: &CrystalGraph) -> String {
    let mut s = String::new();
    for (id, v) in g.vertices.iter().enumerate() {
        let _ = writeln!(s, "{id} {} wt={} eps={:?} phi={:?}", v.payload, v.wt, v.eps, v.phi);
    }
    for &(u, i, v) in &g.edges {
        let _ = writeln!(s, "{u} -f{i}-> {v}");
    }
    s
}

/// `{const, lambda, coeffs: {"j,i": c}}`; with `λ` given, the `λ` part is
/// folded into the constant.
pub fn form_json<K: FormKey>(f: &AffineForm<K>, n: usize, key: impl Fn(&K) -> (usize, usize), lambda: Option<&Weight>) -> Value {
    let mut coeffs = Map::new();
    for (k, c) in f.coeffs() {
        let (j, i) = key(k);
        coeffs.insert(format!("{j},{i}"), json!(c));
    }
    let (constant, lam) = specialize(f, n, lambda);
    json!({"const": constant, "lambda": lam, "coeffs": coeffs})
}

/// The constant and the `λ` coefficients (length `n`) after substituting `λ`.
fn specialize<K: FormKey>(f: &AffineForm<K>, n: usize, lambda: Option<&Weight>) -> (i64, Vec<i64>) {
    match lambda {
        Some(w) => {
            let shift: i64 = (1..=n).map(|i| f.lambda_coeff(i) * w.get(i)).sum();
            (f.constant_term() + shift, vec![0; n])
        }
        None => (f.constant_term(), (1..=n).map(|i| f.lambda_coeff(i)).collect()),
    }
}

fn form_text<K: FormKey>(f: &AffineForm<K>, lambda: Option<&Weight>) -> String
where
    AffineForm<K>: std::fmt::Display,
{
    match lambda {
        None => format!("{f} >= 0"),
        Some(w) => {
            let (c, _) = specialize(f, w.rank(), Some(w));
            let mut g = f.clone();
            for i in 1..=w.rank() {
                g = g.with_lambda(i, -f.lambda_coeff(i));
            }
            g = g.with_constant(c - f.constant_term());
            format!("{g} >= 0")
        }
    }
}

fn var_key(v: &VarId) -> (usize, usize) {
    match *v {
        VarId::C(j, i) => (j as usize, i as usize),
        other => panic!("inequalities are stated in the c-coordinates, found {other}"),
    }
}

fn cmd_inequalities(cli: &Cli, system: System, n: usize, lambda: Option<&Weight>) -> Outcome {
    let (items, texts): (Vec<Value>, Vec<String>) = match system {
        System::Polyhedral => an_inequalities(n).iter().map(|f| (form_json(f, n, |&k| double(n, k), lambda), form_text(f, lambda))).unzip(),
        System::XiClosure => {
            let caps = ClosureCaps { depth: cli.cap_depth, ..ClosureCaps::default() };
            let xi = generate_xi_lambda(n, caps);
            if !xi.complete {
                return Outcome::failure(format!("the closure did not stabilize within depth {}\n", cli.cap_depth));
            }
            xi.forms.iter().map(|f| (form_json(f, n, |&k| double(n, k), lambda), form_text(f, lambda))).unzip()
        }
        System::Closed => closed_inequalities(n).iter().map(|f| (form_json(f, n, var_key, lambda), form_text(f, lambda))).unzip(),
        System::Refined => match refined_inequalities(n) {
            Ok(fs) => fs.iter().map(|f| (form_json(f, n, var_key, lambda), form_text(f, lambda))).unzip(),
            Err(e) => return Outcome::failure(format!("{e}\n")),
        },
    };
    let value = Value::Array(items);
    Outcome::ok(render(cli, &value, || texts.iter().map(|t| format!("{t}\n")).collect()))
}

fn symbols(n: usize) -> (TorusElement, Vec<LaurentFraction>) {
    (TorusElement::symbolic(n), c_vars(n).into_iter().map(LaurentFraction::var).collect())
}

fn cmd_minors(cli: &Cli, n: usize) -> Outcome {
    let g = matrix_of(n, &theta_minus(n));
    let w0 = longest_word_i0(n);
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut ok = true;
    for j in 1..=n {
        let (closed_lower, closed_upper) = closed_minors(n, j);
        let lower = generalized_minor(n, &w0, &[j], j, &g);
        let upper = generalized_minor(n, &w0_sj_word(n, j), &[], j, &g);
        let d = n + 1 - j;
        let dual = generalized_minor(n, &w0_sj_word(n, d), &[], d, &g);
        ok &= lower == closed_lower && dual == closed_upper;
        rows.push(json!({
            "j": j,
            "lower": lower.to_string(),
            "upper": upper.to_string(),
            "closed_lower": closed_lower.to_string(),
            "closed_upper": closed_upper.to_string(),
            "lower_matches": lower == closed_lower,
            "upper_matches": upper == closed_upper,
            "upper_matches_dual_index": dual == closed_upper,
        }));
        let _ = writeln!(text, "j={j}");
        let _ = writeln!(text, "  D(w0 L{j}, s{j} L{j}) = {lower}  [closed form {}]", if lower == closed_lower { "matches" } else { "differs" });
        let _ = writeln!(
            text,
            "  D(w0 s{j} L{j}, L{j}) = {upper}  [closed form labelled {j} {}; labelled {d} {}]",
            if upper == closed_upper { "matches" } else { "differs" },
            if upper == closed_minors(n, d).1 { "matches" } else { "differs" }
        );
    }
    let (t, c) = symbols(n);
    let routes: Vec<_> = [FbRoute::Definition, FbRoute::Minors, FbRoute::Closed].into_iter().map(|r| f_b(n, &t, &c, r)).collect();
    let routes_agree = match (&routes[0], &routes[1], &routes[2]) {
        (Ok(a), Ok(b), Ok(c)) => a == b && b == c,
        _ => false,
    };
    ok &= routes_agree;
    let _ = writeln!(text, "f_B routes agree: {routes_agree}");
    let value = json!({"n": n, "minors": rows, "routes_agree": routes_agree});
    Outcome::verdict(render(cli, &value, || text), ok)
}

fn cmd_fb(cli: &Cli, n: usize) -> Outcome {
    let (t, c) = symbols(n);
    match f_b(n, &t, &c, cli.route.into()) {
        Ok(f) => {
            let route = format!("{:?}", cli.route).to_lowercase();
            let value = json!({"n": n, "route": route, "f_b": f.to_string()});
            Outcome::ok(render(cli, &value, || format!("{f}\n")))
        }
        Err(e) => Outcome::failure(format!("{e}\n")),
    }
}

pub fn comparison_json(c: &Comparison) -> Value {
    json!({
        "lambda": c.lambda.coeffs(),
        "size_b": c.size_b,
        "size_sigma": c.size_sigma,
        "sets_equal": c.sets_equal,
        "operators_equal": c.operators_equal,
        "isomorphic": c.isomorphic,
    })
}

fn cmd_compare(cli: &Cli, w: &Weight) -> Outcome {
    match compare_with_polyhedral(w, cli.cap_vertices) {
        Ok(c) => {
            let text = format!(
                "lambda={} |B|={} |Sigma|={} sets_equal={} operators_equal={} isomorphic={}\n",
                c.lambda, c.size_b, c.size_sigma, c.sets_equal, c.operators_equal, c.isomorphic
            );
            Outcome::verdict(render(cli, &comparison_json(&c), || text), c.agrees())
        }
        Err(e) => Outcome::failure(format!("{e}\n")),
    }
}

fn cmd_check_axioms(cli: &Cli, weights: &[Weight]) -> Outcome {
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut ok = true;
    for w in weights {
        let cartan = CartanA::new(w.rank());
        let dim = cartan.weyl_dim(w).to_string();
        for r in [Realization::Polyhedral, Realization::Ud, Realization::Monomial] {
            let name = format!("{r:?}").to_lowercase();
            let row = match build_graph(cli, r, w) {
                Ok(g) => {
                    let axioms = check_axioms(&g, &cartan).len();
                    let normality = check_normality(&g).len();
                    let size_ok = g.len().to_string() == dim;
                    ok &= axioms == 0 && normality == 0 && size_ok;
                    let _ = writeln!(text, "{} {name}: {} vertices (dim {dim}), {axioms} axiom and {normality} normality violations", w, g.len());
                    json!({"lambda": w.coeffs(), "realization": name, "vertices": g.len(), "dim": dim, "axiom_violations": axioms, "normality_violations": normality})
                }
                Err(e) => {
                    ok = false;
                    let _ = writeln!(text, "{} {name}: {e}", w);
                    json!({"lambda": w.coeffs(), "realization": name, "error": e.to_string()})
                }
            };
            rows.push(row);
        }
        match refined_realization(w, cli.cap_vertices) {
            Ok((_, g)) => {
                let axioms = check_axioms(&g, &cartan).len();
                let normality = check_normality(&g).len();
                ok &= axioms == 0 && normality == 0 && g.len().to_string() == dim;
                let _ = writeln!(text, "{} refined: {} vertices (dim {dim}), {axioms} axiom and {normality} normality violations", w, g.len());
                rows.push(json!({"lambda": w.coeffs(), "realization": "refined", "vertices": g.len(), "dim": dim, "axiom_violations": axioms, "normality_violations": normality}));
            }
            Err(e) => {
                ok = false;
                rows.push(json!({"lambda": w.coeffs(), "realization": "refined", "error": e.to_string()}));
            }
        }
    }
    let value = json!({"results": rows, "ok": ok});
    Outcome::verdict(render(cli, &value, || text), ok)
}

/// Per minor: `{i, side, minor, monomials: [{exps, coeff, matched_element}],
/// demazure_closed, ...}`.
pub fn conjecture_json(r: &ConjectureReport) -> Value {
    let entries: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            let monomials: Vec<Value> = e
                .monomials
                .iter()
                .map(|m| {
                    let exps: Vec<Value> = m.exps.exps().map(|((slot, i), k)| json!([slot, i, k])).collect();
                    json!({"exps": exps, "coeff": m.coeff.to_string(), "matched_element": m.matched_element})
                })
                .collect();
            json!({
                "i": e.i,
                "side": match e.side { MinorSide::Lower => "lower", MinorSide::Upper => "upper" },
                "minor": e.minor.to_string(),
                "monomials": monomials,
                "component_weight": e.component_weight.as_ref().map(|w| w.coeffs().to_vec()),
                "demazure_word": e.demazure_word,
                "positive_integer_coefficients": e.positive_integer_coefficients,
                "demazure_closed": e.demazure_closed,
            })
        })
        .collect();
    json!({"n": r.n, "word": r.word, "entries": entries, "holds": r.holds()})
}

fn cmd_check_conjecture(cli: &Cli, n: usize, word: &[usize], p: &PChoice) -> Outcome {
    match conjecture_check(n, word, p, cli.cap_vertices) {
        Ok(r) => {
            let mut text = String::new();
            for e in &r.entries {
                let side = match e.side {
                    MinorSide::Lower => "D(w0 Li, si Li)",
                    MinorSide::Upper => "D(w0 si Li, Li)",
                };
                let _ = writeln!(
                    text,
                    "i={} {side}: {} monomials, positive integral {}, Demazure {} {:?}",
                    e.i,
                    e.monomials.len(),
                    e.positive_integer_coefficients,
                    e.demazure_closed,
                    e.demazure_word.as_deref().unwrap_or(&[])
                );
            }
            let _ = writeln!(text, "holds: {}", r.holds());
            Outcome::verdict(render(cli, &conjecture_json(&r), || text), r.holds())
        }
        Err(e) => Outcome::failure(format!("{e}\n")),
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(1..=20i64).into(), rng.gen_range(1..=20i64).into())
}

fn cmd_check_geometric(cli: &Cli, n: usize, points: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let scalars = [Rational::from_integer(2.into()), Rational::new(1.into(), 3.into()), Rational::new(5.into(), 7.into())];
    let (mut decoration, mut verma, mut controls_caught, mut controls) = (0usize, 0usize, 0usize, 0usize);
    let mut failures = Vec::new();
    for _ in 0..points {
        let alpha = (0..n).map(|_| random_rational(&mut rng)).collect();
        let c = (0..n * (n + 1) / 2).map(|_| random_rational(&mut rng)).collect();
        let x = GeomPoint::new(n, alpha, c).expect("positive coordinates");
        for i in 1..=n {
            for s in &scalars {
                match decoration_check(&x, i, s, cli.route.into()) {
                    Ok(true) => decoration += 1,
                    other => failures.push(format!("decoration i={i} s={s}: {other:?}")),
                }
            }
        }
        let s1 = random_rational(&mut rng);
        let s2 = random_rational(&mut rng);
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                if verma_check(&x, i, j, &s1, &s2, VermaVariant::Faithful) {
                    verma += 1;
                } else {
                    failures.push(format!("verma i={i} j={j}"));
                }
                if s1 != s2 && &s1 * &s2 != Rational::from_integer(1.into()) {
                    controls += 1;
                    if !verma_check(&x, i, j, &s1, &s2, VermaVariant::PermutedExponents) {
                        controls_caught += 1;
                    }
                }
            }
        }
    }
    let ok = failures.is_empty() && controls_caught == controls;
    let value = json!({
        "n": n, "seed": cli.seed, "points": points,
        "decoration_checks": decoration, "verma_checks": verma,
        "negative_controls": controls, "negative_controls_failing": controls_caught,
        "failures": failures, "ok": ok,
    });
    let text = format!(
        "decoration {decoration} ok, verma {verma} ok, negative controls {controls_caught}/{controls} fail, {} failures\n",
        failures.len()
    );
    Outcome::verdict(render(cli, &value, || text), ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_are_listed_lexicographically() {
        let ws: Vec<Vec<i64>> = dominant_weights(2, 1).iter().map(|w| w.coeffs().to_vec()).collect();
        assert_eq!(ws, [[0, 0], [0, 1], [1, 0], [1, 1]]);
    }

    #[test]
    fn forms_render_with_double_indices() {
        let f = AffineForm::<usize>::lambda(2).with_coeff(1, 1).with_coeff(2, -1);
        assert_eq!(form_json(&f, 2, |&k| double(2, k), None), json!({"const": 0, "lambda": [0, 1], "coeffs": {"1,1": 1, "1,2": -1}}));
        let w = Weight::new(vec![3, 4]);
        assert_eq!(form_json(&f, 2, |&k| double(2, k), Some(&w))["const"], 4);
        assert_eq!(form_text(&f, Some(&w)), "x[1] - x[2] + 4 >= 0");
    }

    #[test]
    fn dot_escapes_quotes() {
        let g = CrystalGraph::from_parts(
            1,
            vec![dgcrystal::crystal::Vertex { payload: String::from("a\"b"), wt: Weight::new(vec![0]), eps: vec![0], phi: vec![0] }],
            Vec::new(),
        );
        assert_eq!(graph_dot(&g), "digraph crystal {\n  0 [label=\"a\\\"b\\nwt=(0)\"];\n}\n");
    }
}
