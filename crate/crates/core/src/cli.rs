//! The `vertexkernel` command line: validate presentations, compute
//! products, run check suites and print dimension tables.
//!
//! Exit codes: 0 when every check passes, 1 when some check fails, 2 on
//! malformed input.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coalgebra::{
    check_coassociativity, check_cocommutativity, check_counit_law, check_delta_derivation, delta_morphism_tally,
    delta_state, primitive_subspace,
};
use crate::constructions::grouplike::{check_components, check_group_like_semigroup, scan_tensor_phi_group_likes};
use crate::constructions::morphism::{extend_universal_morphism, induced_vertex_morphism};
use crate::constructions::tensor_phi::{check_eminus_conjugation, check_phi_central};
use crate::constructions::{bl, TensorPhi, BL};
use crate::current::{bracket, check_lie_axioms};
use crate::enveloping::{Enveloping, State};
use crate::error::{Error, Result};
use crate::json::{self, Construction};
use crate::lincomb::LinComb;
use crate::report::{CheckResult, Tally, ValidationReport};
use crate::text;
use crate::vertex::{
    check_derivation_bracket, check_vacuum_creation, commutator_tally, jacobi_tally, skew_tally, Coalgebra,
    Window,
};
use crate::vla::Presentation;

/// Triples drawn per sampled suite when `--seed` is given.
pub const SAMPLE_SIZE: usize = 64;
/// Highest `E_k` used by the conjugation check.
const EMINUS_ORDER: usize = 3;

#[derive(Parser, Debug)]
#[command(name = "vertexkernel", version, about = "Exact computations with vertex Lie algebras and vertex bialgebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Largest weight of basis states used by checks and tables.
    #[arg(long, global = true, default_value_t = 5)]
    pub max_weight: i64,
    /// Modes `n` range over `[-w, w]`.
    #[arg(long, global = true, default_value_t = 4)]
    pub mode_window: i64,
    /// Maximum number of torsion factors in basis words.
    #[arg(long, global = true, default_value_t = 1)]
    pub torsion_bound: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Sample triples at random (each of weight up to the bound) instead of
    /// sweeping all triples of total weight up to the bound.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the vertex Lie algebra axioms of a presentation.
    Validate {
        #[arg(long)]
        input: PathBuf,
    },
    /// Evaluate one expression exactly.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(value_enum)]
        expression: Expression,
        /// `product U N V`, `bracket A B`, `delta S`, `mode U N V`.
        #[arg(allow_negative_numbers = true)]
        operands: Vec<String>,
    },
    /// Run a check suite on a presentation or construction spec.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Graded dimensions of the enveloping algebra and of its primitives.
    Dims {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Expression {
    Product,
    Bracket,
    Delta,
    Mode,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Jacobi,
    Skew,
    Commutator,
    Coalgebra,
    TensorPhi,
    Bl,
    Morphism,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Jacobi => "jacobi",
            Suite::Skew => "skew",
            Suite::Commutator => "commutator",
            Suite::Coalgebra => "coalgebra",
            Suite::TensorPhi => "tensor-phi",
            Suite::Bl => "bl",
            Suite::Morphism => "morphism",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub id: String,
    pub suite: String,
    pub passed: bool,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimRow {
    pub weight: i64,
    pub dim: usize,
    pub primitive_dim: usize,
}

/// Everything a command reports. Timings only appear in text output so
/// that JSON is reproducible byte for byte.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Outcome {
    pub command: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Entry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<DimRow>>,
    #[serde(skip)]
    pub timings: Vec<(String, f64)>,
}

impl Outcome {
    fn new(command: &str) -> Self {
        Outcome { command: command.into(), passed: true, ..Default::default() }
    }

    fn add(&mut self, suite: &str, rep: ValidationReport) {
        for c in rep.checks {
            self.passed &= c.passed;
            self.checks.push(Entry {
                id: c.id,
                suite: suite.into(),
                passed: c.passed,
                cases: c.cases,
                witness: c.witness,
                note: c.note,
            });
        }
    }

    fn timed(&mut self, suite: &str, f: impl FnOnce() -> Result<ValidationReport>) -> Result<()> {
        let start = Instant::now();
        let rep = f()?;
        self.timings.push((suite.into(), start.elapsed().as_secs_f64()));
        self.add(suite, rep);
        Ok(())
    }

    fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| (&a.id, &a.suite).cmp(&(&b.id, &b.suite)));
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("outcome serializes") + "\n",
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut s = String::new();
        if let Some(t) = &self.text {
            s.push_str(t);
            s.push('\n');
        }
        if let Some(rows) = &self.table {
            s.push_str("weight  dim  primitive\n");
            for r in rows {
                s.push_str(&format!("{:>6}  {:>3}  {:>9}\n", r.weight, r.dim, r.primitive_dim));
            }
        }
        for c in &self.checks {
            s.push_str(&format!(
                "[{}] {} ({}, {} cases)",
                if c.passed { "PASS" } else { "FAIL" },
                c.id,
                c.suite,
                c.cases
            ));
            if let Some(w) = &c.witness {
                s.push_str(&format!("\n    witness: {w}"));
            }
            if let Some(n) = &c.note {
                s.push_str(&format!("\n    note: {n}"));
            }
            s.push('\n');
        }
        for (suite, secs) in &self.timings {
            s.push_str(&format!("{suite}: {secs:.3}s\n"));
        }
        if !self.checks.is_empty() {
            s.push_str(if self.passed { "overall: PASS\n" } else { "overall: FAIL\n" });
        }
        s
    }
}

enum Input {
    Presentation(Presentation),
    Construction(Construction),
}

fn read_input(path: &Path) -> Result<Input> {
    let text = std::fs::read_to_string(path)?;
    let v: Value = serde_json::from_str(&text)?;
    if v.get("semigroup").is_some() {
        Ok(Input::Construction(json::construction_from_json(&serde_json::from_value(v)?)?))
    } else {
        Ok(Input::Presentation(json::presentation_from_json(&serde_json::from_value(v)?)?))
    }
}

fn read_presentation(path: &Path) -> Result<Presentation> {
    match read_input(path)? {
        Input::Presentation(p) => Ok(p),
        Input::Construction(c) => Ok(c.presentation),
    }
}

impl Options {
    fn window(&self) -> Window {
        Window::symmetric(self.mode_window)
    }

    fn check_bounds(&self) -> Result<()> {
        if self.max_weight < 0 || self.mode_window < 0 {
            return Err(Error::InvalidArgument("bounds must be nonnegative".into()));
        }
        Ok(())
    }
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let opts = &cli.opts;
    opts.check_bounds()?;
    let out = match &cli.command {
        Command::Validate { input } => {
            let p = read_presentation(input)?;
            let mut out = Outcome::new("validate");
            out.timed("validate", || Ok(validate_suite(&p, opts)))?;
            out
        }
        Command::Compute { input, expression, operands } => compute(&read_presentation(input)?, *expression, operands)?,
        Command::Check { input, suite } => check(read_input(input)?, *suite, opts)?,
        Command::Dims { input } => dims(&read_presentation(input)?, opts),
    };
    Ok(out.finish())
}

/// Parses `args`, runs the command and writes the report; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn std::io::Write, stderr: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    configure_threads();
    match execute(&cli) {
        Ok(out) => {
            let _ = stdout.write_all(out.render(cli.opts.format).as_bytes());
            out.exit_code()
        }
        Err(e) => {
            if cli.opts.format == Format::Json {
                let _ = writeln!(stdout, "{}", json!({ "error": e.to_string() }));
            }
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

/// Honors `VERTEXKERNEL_THREADS` for the global rayon pool.
fn configure_threads() {
    if let Some(n) = std::env::var("VERTEXKERNEL_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn need(operands: &[String], n: usize, usage: &str) -> Result<()> {
    if operands.len() != n {
        return Err(Error::InvalidArgument(format!("expected {usage}")));
    }
    Ok(())
}

fn parse_int(s: &str) -> Result<i64> {
    s.trim().parse().map_err(|_| Error::Parse(format!("invalid integer `{s}`")))
}

/// A state, or an element of `C` read as `u_{-1}𝟙`.
fn parse_state_or_element(e: &Enveloping, s: &str) -> Result<State> {
    match text::parse_state(e, s) {
        Ok(v) => Ok(v),
        Err(first) => text::parse_vla(e.presentation(), s).map(|u| e.embed(&u)).map_err(|_| first),
    }
}

fn compute(p: &Presentation, expr: Expression, ops: &[String]) -> Result<Outcome> {
    let mut out = Outcome::new("compute");
    match expr {
        Expression::Product => {
            need(ops, 3, "product U N V")?;
            let u = text::parse_vla(p, &ops[0])?;
            let n = parse_int(&ops[1])?;
            let v = text::parse_vla(p, &ops[2])?;
            if n < 0 {
                return Err(Error::InvalidArgument(format!("n-th products need n ≥ 0, got {n}")));
            }
            let r = p.nth_product(&u, n, &v);
            out.text = Some(text::format_vla(p, &r));
            let terms: Vec<Value> =
                r.iter().map(|(k, c)| json!({"coeff": c, "d": k.d, "gen": p.name(k.gen)})).collect();
            out.value = Some(Value::Array(terms));
        }
        Expression::Bracket => {
            need(ops, 2, "bracket A B")?;
            let a = text::parse_mode(p, &ops[0])?;
            let b = text::parse_mode(p, &ops[1])?;
            let r = bracket(p, &a, &b);
            out.text = Some(text::format_modes(p, &r));
            let terms: Vec<Value> =
                r.iter().map(|(m, c)| json!({"coeff": c, "mode": json::mode_json(p, m)})).collect();
            out.value = Some(Value::Array(terms));
        }
        Expression::Delta => {
            need(ops, 1, "delta S")?;
            let e = Enveloping::new(p.clone());
            let v = parse_state_or_element(&e, &ops[0])?;
            let r = delta_state(&e, &v);
            out.text = Some(text::format_tensor(p, &r));
            out.value = Some(serde_json::to_value(json::tensor_to_json(&e, &r))?);
        }
        Expression::Mode => {
            need(ops, 3, "mode U N V")?;
            let e = Enveloping::new(p.clone());
            let u = parse_state_or_element(&e, &ops[0])?;
            let n = parse_int(&ops[1])?;
            let v = parse_state_or_element(&e, &ops[2])?;
            let r = e.state_mode(&u, n, &v);
            out.text = Some(text::format_state(p, &r));
            out.value = Some(serde_json::to_value(json::state_to_json(&e, &r))?);
        }
    }
    Ok(out)
}

fn dims(p: &Presentation, opts: &Options) -> Outcome {
    let e = Enveloping::new(p.clone());
    let k = opts.torsion_bound;
    let rows = (0..=opts.max_weight)
        .map(|d| DimRow { weight: d, dim: e.graded_dimension(d, k), primitive_dim: primitive_subspace(&e, d, k).len() })
        .collect();
    let mut out = Outcome::new("dims");
    out.table = Some(rows);
    out
}

fn validate_suite(p: &Presentation, opts: &Options) -> ValidationReport {
    let mut rep = p.validate();
    rep.merge(check_lie_axioms(p, opts.mode_window));
    rep
}

/// Basis states paired with their weights.
fn weighted_basis(e: &Enveloping, opts: &Options) -> Vec<(i64, State)> {
    (0..=opts.max_weight)
        .flat_map(|d| e.basis_words(d, opts.torsion_bound).into_iter().map(move |w| (d, State::basis(w))))
        .collect()
}

fn pairs(basis: &[(i64, State)], max: i64) -> Vec<(State, State)> {
    let mut out = Vec::new();
    for (a, u) in basis {
        for (b, v) in basis {
            if a + b <= max {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

/// All triples of total weight `≤ max`, or a seeded sample of triples of
/// arbitrary weights from the basis.
fn triples(basis: &[(i64, State)], opts: &Options) -> Vec<(State, State, State)> {
    if let Some(seed) = opts.seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        return (0..SAMPLE_SIZE)
            .map(|_| {
                let mut pick = || basis.choose(&mut rng).expect("nonempty basis").1.clone();
                (pick(), pick(), pick())
            })
            .collect();
    }
    let mut out = Vec::new();
    for (a, u) in basis {
        for (b, v) in basis {
            for (c, w) in basis {
                if a + b + c <= opts.max_weight {
                    out.push((u.clone(), v.clone(), w.clone()));
                }
            }
        }
    }
    out
}

fn par_tally<T: Sync>(id: &str, items: &[T], f: impl Fn(&T) -> Tally + Sync + Send) -> CheckResult {
    items
        .par_iter()
        .map(f)
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::new(id), |mut acc, t| {
            acc.absorb(t);
            acc
        })
        .finish()
}

fn single(c: CheckResult) -> ValidationReport {
    let mut rep = ValidationReport::new();
    rep.push(c);
    rep
}

fn jacobi_suite(e: &Enveloping, opts: &Options) -> ValidationReport {
    let b = weighted_basis(e, opts);
    let w = opts.window();
    single(par_tally("jacobi", &triples(&b, opts), |(u, v, x)| jacobi_tally(e, u, v, x, w)))
}

fn skew_suite(e: &Enveloping, opts: &Options) -> ValidationReport {
    let b = weighted_basis(e, opts);
    let w = opts.window();
    let ps = pairs(&b, opts.max_weight);
    let mut rep = single(par_tally("skew-symmetry", &ps, |(u, v)| skew_tally(e, u, v, w)));
    let states: Vec<State> = b.iter().map(|x| x.1.clone()).collect();
    rep.push(check_vacuum_creation(e, &states, w));
    let mut der = Tally::new("derivation-bracket");
    for (u, v) in &ps {
        der.absorb_check(check_derivation_bracket(e, u, v, w));
    }
    rep.push(der.finish());
    rep
}

fn commutator_suite(e: &Enveloping, opts: &Options) -> ValidationReport {
    let b = weighted_basis(e, opts);
    let w = opts.window();
    single(par_tally("borcherds-commutator", &triples(&b, opts), |(u, v, x)| commutator_tally(e, u, v, x, w, w)))
}

fn coalgebra_laws<C: Coalgebra>(c: &C, keys: &[C::Key]) -> ValidationReport {
    let mut rep = ValidationReport::new();
    rep.push(check_coassociativity(c, keys));
    rep.push(check_counit_law(c, keys));
    rep.push(check_cocommutativity(c, keys));
    rep.push(check_delta_derivation(c, keys));
    rep
}

fn coalgebra_suite(e: &Enveloping, opts: &Options) -> ValidationReport {
    let b = weighted_basis(e, opts);
    let keys: Vec<_> = b.iter().map(|(_, s)| s.as_basis().expect("basis state").clone()).collect();
    let mut rep = coalgebra_laws(e, &keys);
    let w = opts.window();
    rep.push(par_tally("delta-vertex-morphism", &pairs(&b, opts.max_weight), |(u, v)| {
        let mut t = Tally::new("delta-vertex-morphism");
        for n in w.iter() {
            delta_morphism_tally(e, u, n, v, &mut t);
        }
        t
    }));
    rep
}

fn identity_morphism_suite(e: &Enveloping, opts: &Options) -> Result<ValidationReport> {
    let images = e.presentation().gen_ids().map(|g| e.gen_state(g)).collect();
    let m = induced_vertex_morphism(e, e, images)?;
    Ok(m.verify(opts.max_weight, opts.torsion_bound, opts.window()))
}

fn check(input: Input, suite: Suite, opts: &Options) -> Result<Outcome> {
    let mut out = Outcome::new("check");
    match input {
        Input::Presentation(p) => {
            let e = Enveloping::new(p.clone());
            let run_all = suite == Suite::All;
            if run_all {
                out.timed("validate", || Ok(validate_suite(&p, opts)))?;
            }
            if run_all || suite == Suite::Jacobi {
                out.timed("jacobi", || Ok(jacobi_suite(&e, opts)))?;
            }
            if run_all || suite == Suite::Skew {
                out.timed("skew", || Ok(skew_suite(&e, opts)))?;
            }
            if run_all || suite == Suite::Commutator {
                out.timed("commutator", || Ok(commutator_suite(&e, opts)))?;
            }
            if run_all || suite == Suite::Coalgebra {
                out.timed("coalgebra", || Ok(coalgebra_suite(&e, opts)))?;
            }
            if run_all || suite == Suite::Morphism {
                out.timed("morphism", || identity_morphism_suite(&e, opts))?;
            }
            if matches!(suite, Suite::TensorPhi | Suite::Bl) {
                return Err(Error::InvalidArgument(format!(
                    "suite `{}` needs a construction spec with a semigroup",
                    suite.name()
                )));
            }
        }
        Input::Construction(c) => {
            let run_all = suite == Suite::All;
            if run_all || suite == Suite::TensorPhi {
                out.timed("tensor-phi", || tensor_phi_suite(&c, opts))?;
            }
            if run_all || suite == Suite::Bl {
                out.timed("bl", || bl_suite(&c, opts))?;
            }
            if run_all || suite == Suite::Morphism {
                out.timed("morphism/universal", || universal_morphism_suite(&c, opts))?;
                out.timed("morphism/induced", || induced_morphism_suite(&c, opts))?;
            }
            if !run_all && !matches!(suite, Suite::TensorPhi | Suite::Bl | Suite::Morphism) {
                let e = Enveloping::new(c.presentation.clone());
                let name = suite.name();
                out.timed(name, || {
                    Ok(match suite {
                        Suite::Jacobi => jacobi_suite(&e, opts),
                        Suite::Skew => skew_suite(&e, opts),
                        Suite::Commutator => commutator_suite(&e, opts),
                        _ => coalgebra_suite(&e, opts),
                    })
                })?;
            }
        }
    }
    Ok(out)
}

fn tensor_phi_suite(c: &Construction, opts: &Options) -> Result<ValidationReport> {
    let central = check_phi_central(&c.presentation, &c.phi);
    if !central.passed() || c.phi.rank() != c.semigroup.rank {
        let mut rep = central;
        if c.phi.rank() != c.semigroup.rank {
            let mut t = Tally::new("phi-rank");
            t.record(false, || format!("φ has {} images but L has rank {}", c.phi.rank(), c.semigroup.rank));
            rep.push(t.finish());
        }
        return Ok(rep);
    }
    let tp = TensorPhi::new(Enveloping::new(c.presentation.clone()), c.semigroup, c.phi.clone())?;
    let env = tp.envelope();
    let w = opts.window();
    let k = opts.torsion_bound;
    let small = opts.max_weight.min(3);
    let mut rep = central;

    let states = env.basis_states(small, k);
    let mut conj = Tally::new("eminus-conjugation");
    for target in c.phi.targets() {
        let a = env.embed(target);
        for x in &states {
            conj.absorb_check(check_eminus_conjugation(env, &a, x, &states, EMINUS_ORDER, w));
        }
    }
    rep.push(conj.finish());

    let alphas = c.semigroup.elements(1);
    let gs: Vec<_> = alphas.iter().map(|a| tp.group_like(a)).collect();
    let samples: Vec<_> = env
        .basis_states(1, k)
        .iter()
        .flat_map(|s| alphas.iter().map(|a| tp.lift(s, a)).collect::<Vec<_>>())
        .collect();
    rep.merge(check_group_like_semigroup(&tp, &gs, 4, &samples, Window::new(-2, 1)));

    let keys = tp.basis(small, k, 1);
    let shifts: Vec<_> = alphas.iter().map(|a| (a.clone(), tp.group_like(a))).collect();
    rep.merge(check_components(&tp, &keys, &shifts, Window::new(-2, 1)));
    rep.merge(coalgebra_laws(&tp, &keys));

    let lifted: Vec<_> = tp.basis(opts.max_weight.min(1), k, 1).into_iter().map(LinComb::basis).collect();
    let mut pairs_tp = Vec::new();
    for u in &lifted {
        for v in &lifted {
            pairs_tp.push((u.clone(), v.clone()));
        }
    }
    rep.push(par_tally("skew-symmetry", &pairs_tp, |(u, v)| skew_tally(&tp, u, v, w)));
    rep.push(par_tally("delta-vertex-morphism", &pairs_tp, |(u, v)| {
        let mut t = Tally::new("delta-vertex-morphism");
        for n in w.iter() {
            delta_morphism_tally(&tp, u, n, v, &mut t);
        }
        t
    }));

    let scan_keys = tp.basis(0, 0, 1);
    let mut scan = Tally::new("group-like-scan");
    match scan_tensor_phi_group_likes(&tp, 0, 0, 1) {
        Ok(found) => {
            let want: Vec<_> = alphas.iter().map(|a| tp.group_like(a)).collect();
            let same = found.len() == want.len() && want.iter().all(|g| found.contains(g));
            scan.record(same, || format!("scan of {} keys found {} group-likes, expected {}", scan_keys.len(), found.len(), want.len()));
        }
        Err(Error::Unsupported(msg)) => scan.note(format!("skipped: {msg}")),
        Err(e) => return Err(e),
    }
    rep.push(scan.finish());
    Ok(rep)
}

fn bl_suite(c: &Construction, opts: &Options) -> Result<ValidationReport> {
    let b = BL::new(c.semigroup)?;
    let mw = opts.max_weight.min(4) as u32;
    let w = opts.window();
    let alpha_bound = if b.rank() == 1 { 2 } else { 1 };
    let mut rep = bl::check_bl_phi_additivity(&b, 2);
    rep.merge(bl::check_bl_bialgebra(&b, mw, alpha_bound));
    rep.merge(bl::check_bl_equals_tensor_phi(&b, mw.min(3), alpha_bound, w));
    let alphas = c.semigroup.elements(1);
    let gs: Vec<_> = alphas.iter().map(|a| b.e(a)).collect();
    let samples: Vec<_> = b.basis(1, 1).into_iter().map(LinComb::basis).collect();
    rep.merge(check_group_like_semigroup(&b, &gs, 4, &samples, Window::new(-2, 1)));
    let shifts: Vec<_> = alphas.iter().map(|a| (a.clone(), b.e(a))).collect();
    rep.merge(check_components(&b, &b.basis(mw.min(2), 1), &shifts, Window::new(-2, 1)));
    Ok(rep)
}

/// The identity of `B_L` rebuilt from `ψ(e^α) = e^α` and `φ_B(e_i) = h_i(-1)`.
fn universal_morphism_suite(c: &Construction, opts: &Options) -> Result<ValidationReport> {
    let b = BL::new(c.semigroup)?;
    let phi_b: Vec<_> = (0..b.rank()).map(|i| b.h(i, 1)).collect();
    let id = extend_universal_morphism(&b, &b, |a| b.e(a), phi_b, 2)?;
    Ok(id.verify(opts.max_weight.min(4) as u32, 2))
}

/// The inclusion of the abelian `𝒱_C` of rank `r` into `B_L`, `h_i ↦ h_i(-1)`.
fn induced_morphism_suite(c: &Construction, opts: &Options) -> Result<ValidationReport> {
    let b = BL::new(c.semigroup)?;
    let images: Vec<_> = (0..b.rank()).map(|i| b.h(i, 1)).collect();
    let env = Enveloping::new(crate::vla::builtin_abelian(b.rank())?);
    let m = induced_vertex_morphism(&env, &b, images)?;
    Ok(m.verify(opts.max_weight.min(4), 0, opts.window()))
}
