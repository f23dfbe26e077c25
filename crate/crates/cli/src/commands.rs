//! Command-line surface and dispatch. Each command maps onto one core operation.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use golod_core::calculus::{
    self, add_prime_power, check_colon_condition, describe_witness, power, saturated_power,
    strongly_golod, symbolic_power, SymbolicMode, SymbolicPowerSpec,
};
use golod_core::corpus::{random_homogeneous_ideal, CORPUS_SEED};
use golod_core::koszul::{koszul_homology, trivial_multiplication_check, KoszulBounds};
use golod_core::monomial::graph::graph_search;
use golod_core::monomial::{
    integral_closure, minimal_primary_components, odd_cycle_suite, Graph, MonomialIdeal,
};
use golod_core::order::MonomialOrder;
use golod_core::poincare::{golod_verdict, GolodStatus, GolodVerdict, SeriesBounds};
use golod_core::resolution::minimal_free_resolution;
use golod_core::{Error as CoreError, GradingSpec, Ideal, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::graph_file::write_graph;
use crate::report::{BettiJson, HomologyJson, IdealJson, Outcome, Report, SeriesJson};
use crate::session::{parse_session, read_session, Session, SessionError};
use crate::suite;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Session(#[from] SessionError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("no ideal named `{0}` in the session")]
    UnknownIdeal(String),
    #[error("no graph named `{0}` in the session")]
    UnknownGraph(String),
    #[error("missing flag --{0}")]
    MissingFlag(&'static str),
    #[error("invalid --order `{0}`; expected `grevlex` or `elim:K`")]
    InvalidOrder(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "golod",
    version,
    about = "Strongly Golod ideals, Koszul homology and Poincaré series over Q"
)]
pub struct Cli {
    #[command(flatten)]
    pub flags: Flags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Session file declaring the ring, ideals and graphs.
    #[arg(long, global = true)]
    pub session: Option<PathBuf>,
    /// Session text given inline; `;` separates statements.
    #[arg(long, global = true)]
    pub inline: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print ideal results as a reduced Gröbner basis in this order (`grevlex` or `elim:K`).
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Homological bound (Koszul exterior degree, Poincaré series length).
    #[arg(long, global = true)]
    pub homological: Option<usize>,
    /// Internal degree bound.
    #[arg(long, global = true)]
    pub internal: Option<u32>,
    /// Exponent for powers.
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// Auxiliary ideal for symbolic powers, by name.
    #[arg(long = "L", global = true)]
    pub l: Option<String>,
    /// Seed for randomized commands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Test ∂(I)² ⊆ I, with a witness on failure.
    CheckStronglyGolod { ideal: String },
    /// Ideal generated by the partial derivatives of the generators.
    DerivativeIdeal { ideal: String },
    /// I^k.
    Power { ideal: String },
    /// I^k : L^∞ with L from --L; squarefree monomial ideals use their minimal primes.
    SymbolicPower { ideal: String },
    /// I^k : m^∞.
    SaturatedPower { ideal: String },
    /// I : J, and whether I : J = I : J².
    Colon { left: String, right: String },
    /// I ∩ J.
    Intersect { left: String, right: String },
    /// I + J.
    Sum { left: String, right: String },
    /// I·J.
    Product { left: String, right: String },
    /// I + P^k for a prime P ⊇ I.
    AddPrimePower { ideal: String, prime: String },
    /// Cover ideal of a graph in x1..xn (or the session ring, if it has n variables).
    VertexCoverIdeal { graph: String },
    /// Symbolic-power checks on the cover ideal of odd cycles (default 3, 5, 7).
    OddCycleSuite { n: Vec<usize> },
    /// Intersection of P^k over the minimal primes of a squarefree monomial ideal.
    SquarefreeSymbolic { ideal: String },
    /// Integral closure of a monomial ideal.
    IntegralClosure { ideal: String },
    /// Minimal primary components of a monomial ideal.
    PrimaryComponents { ideal: String },
    /// Graded Betti numbers of S/I.
    Betti { ideal: String },
    /// Bigraded Koszul homology of S/I.
    KoszulHomology { ideal: String },
    /// Whether products of Koszul homology classes vanish.
    TrivialMultiplication { ideal: String },
    /// Serre bound and actual Poincaré series, with the verdict.
    Poincare { ideal: String },
    /// Golod verdict from the two series.
    GolodVerdict { ideal: String },
    /// Built-in example suite.
    Examples,
    /// Check (I^(2))² ⊆ I³ for cover ideals of small non-bipartite graphs.
    GraphSearch {
        #[arg(default_value_t = 5)]
        max_vertices: usize,
    },
    /// Golod verdicts for products of seeded random ideals.
    ProductSearch {
        #[arg(default_value_t = 5)]
        count: usize,
    },
}

/// The session file, extended by `--inline` statements. Inline ideals use the file's ring
/// when the file declares one.
pub fn load_session(flags: &Flags) -> Result<Session, CliError> {
    let base = match &flags.session {
        Some(path) => read_session(path)?,
        None => Session::default(),
    };
    let Some(text) = &flags.inline else {
        return Ok(base);
    };
    let mut text = text.replace(';', "\n");
    if let Some(ring) = &base.ring {
        let weights: Vec<String> = ring.weights().iter().map(|w| w.to_string()).collect();
        text = format!(
            "ring {} weights {}\n{text}",
            ring.names().join(","),
            weights.join(",")
        );
    }
    merge(base, parse_session(&text, None)?)
}

fn merge(mut base: Session, extra: Session) -> Result<Session, CliError> {
    if base.ring.is_none() {
        base.ring = extra.ring;
    }
    for (name, ideal) in extra.ideals {
        if base.ideals.contains_key(&name) || base.graphs.contains_key(&name) {
            return Err(SessionError::Syntax {
                line: 1,
                column: 1,
                message: format!("duplicate name `{name}`"),
            }
            .into());
        }
        base.ideals.insert(name, ideal);
    }
    for (name, graph) in extra.graphs {
        if base.ideals.contains_key(&name) || base.graphs.contains_key(&name) {
            return Err(SessionError::Syntax {
                line: 1,
                column: 1,
                message: format!("duplicate name `{name}`"),
            }
            .into());
        }
        base.graphs.insert(name, graph);
    }
    Ok(base)
}

struct Ctx<'a> {
    session: &'a Session,
    flags: &'a Flags,
}

impl Ctx<'_> {
    fn ideal(&self, name: &str) -> Result<&Ideal, CliError> {
        self.session
            .ideals
            .get(name)
            .ok_or_else(|| CliError::UnknownIdeal(name.to_string()))
    }

    fn graph(&self, name: &str) -> Result<&Graph, CliError> {
        self.session
            .graphs
            .get(name)
            .ok_or_else(|| CliError::UnknownGraph(name.to_string()))
    }

    fn k(&self) -> Result<usize, CliError> {
        self.flags.k.ok_or(CliError::MissingFlag("k"))
    }

    fn order(&self, ring: &Ring) -> Result<Option<MonomialOrder>, CliError> {
        let Some(o) = &self.flags.order else {
            return Ok(None);
        };
        if o == "grevlex" {
            return Ok(Some(MonomialOrder::grevlex(ring)));
        }
        let k = o
            .strip_prefix("elim:")
            .and_then(|k| k.parse::<usize>().ok())
            .ok_or_else(|| CliError::InvalidOrder(o.clone()))?;
        if k > ring.nvars() {
            return Err(CliError::InvalidOrder(o.clone()));
        }
        Ok(Some(MonomialOrder::elimination(ring, k)))
    }

    /// Ideal-valued result: minimal generators, or a reduced basis under `--order`.
    fn ideal_report(
        &self,
        title: &str,
        ideal: &Ideal,
        extra: serde_json::Value,
    ) -> Result<Report, CliError> {
        let shown = match self.order(ideal.ring())? {
            Some(ord) => Ideal::new(ideal.ring(), ideal.reduced_groebner(&ord)?)?,
            None if ideal.is_homogeneous() && !ideal.is_unit() => {
                Ideal::new(ideal.ring(), ideal.minimal_generators()?)?
            }
            None => ideal.with_basis_generators(),
        };
        let mut json = json!({ "result": IdealJson::from(&shown) });
        if let serde_json::Value::Object(map) = extra {
            json.as_object_mut().unwrap().extend(map);
        }
        Ok(Report::new(
            format!("{title} = {shown}"),
            json,
            Outcome::Success,
        ))
    }

    fn series_bounds(&self, ideal: &Ideal) -> Result<SeriesBounds, CliError> {
        let default = SeriesBounds::default_for(ideal)?;
        Ok(SeriesBounds {
            i_max: self.flags.homological.unwrap_or(default.i_max),
            d_max: self.flags.internal.unwrap_or(default.d_max),
        })
    }

    fn koszul_bounds(&self, ideal: &Ideal) -> Result<Option<KoszulBounds>, CliError> {
        if self.flags.homological.is_none() && self.flags.internal.is_none() {
            return Ok(None);
        }
        let default = KoszulBounds::default_for(ideal)?;
        Ok(Some(KoszulBounds {
            l_max: self.flags.homological.unwrap_or(default.l_max),
            d_max: self.flags.internal.unwrap_or(default.d_max),
        }))
    }
}

#[derive(Serialize)]
struct PartialJson {
    generator: String,
    variable: String,
    derivative: String,
}

#[derive(Serialize)]
struct WitnessJson {
    left: PartialJson,
    right: PartialJson,
    product: String,
    normal_form: String,
}

#[derive(Serialize)]
struct StronglyGolodJson {
    ideal: IdealJson,
    strongly_golod: bool,
    witness: Option<WitnessJson>,
}

#[derive(Serialize)]
struct VerdictJson {
    ideal: IdealJson,
    status: &'static str,
    first_discrepancy: Option<DiscrepancyJson>,
    first_total_discrepancy: Option<DiscrepancyJson>,
    bound: SeriesJson,
    actual: SeriesJson,
    truncated: bool,
}

#[derive(Serialize)]
struct DiscrepancyJson {
    i: usize,
    d: Option<u32>,
    bound: u64,
    actual: u64,
}

fn verdict_json(ideal: &Ideal, v: &GolodVerdict) -> VerdictJson {
    VerdictJson {
        ideal: ideal.into(),
        status: v.status.label(),
        first_discrepancy: v.first_discrepancy.map(|d| DiscrepancyJson {
            i: d.i,
            d: Some(d.d),
            bound: d.bound,
            actual: d.actual,
        }),
        first_total_discrepancy: v.first_total_discrepancy.map(|(i, bound, actual)| {
            DiscrepancyJson {
                i,
                d: None,
                bound,
                actual,
            }
        }),
        bound: (&v.bound).into(),
        actual: (&v.actual).into(),
        truncated: v.truncated,
    }
}

fn verdict_text(v: &GolodVerdict) -> String {
    let mut t = String::new();
    writeln!(t, "verdict: {}", v.status.label()).unwrap();
    if let Some(d) = v.first_discrepancy {
        writeln!(
            t,
            "first discrepancy at t^{} u^{}: bound {}, actual {}",
            d.i, d.d, d.bound, d.actual
        )
        .unwrap();
    }
    if let Some((i, b, a)) = v.first_total_discrepancy {
        writeln!(t, "first total discrepancy at t^{i}: bound {b}, actual {a}").unwrap();
    }
    if v.truncated {
        writeln!(t, "note: nonzero coefficients at the internal degree bound").unwrap();
    }
    t.trim_end().to_string()
}

fn verdict_outcome(v: &GolodVerdict) -> Outcome {
    Outcome::from_verdict(v.status != GolodStatus::NotGolod)
}

fn monomial(ideal: &Ideal) -> Result<MonomialIdeal, CliError> {
    Ok(MonomialIdeal::from_ideal(ideal)?)
}

pub fn run(session: &Session, command: &Command, flags: &Flags) -> Result<Report, CliError> {
    let ctx = Ctx { session, flags };
    if let Some(ring) = session.ring() {
        ctx.order(ring)?;
    } else if let Some(o) = &flags.order {
        if o != "grevlex"
            && !o
                .strip_prefix("elim:")
                .is_some_and(|k| k.parse::<usize>().is_ok())
        {
            return Err(CliError::InvalidOrder(o.clone()));
        }
    }
    match command {
        Command::CheckStronglyGolod { ideal } => {
            let i = ctx.ideal(ideal)?;
            let rep = strongly_golod(i)?;
            let names = i.ring().names();
            let gens = i.generators();
            let partial = |p: &calculus::Partial| PartialJson {
                generator: gens[p.generator].to_string(),
                variable: names[p.var].clone(),
                derivative: p.value.to_string(),
            };
            let witness = rep.witness.as_ref().map(|w| WitnessJson {
                left: partial(&w.left),
                right: partial(&w.right),
                product: w.product.to_string(),
                normal_form: w.normal_form.to_string(),
            });
            let mut text = format!(
                "{ideal} = {i}\nstrongly Golod: {}",
                if rep.verdict { "yes" } else { "no" }
            );
            if let Some(w) = &rep.witness {
                write!(text, "\nwitness: {}", describe_witness(i, w)).unwrap();
            }
            let json = StronglyGolodJson {
                ideal: i.into(),
                strongly_golod: rep.verdict,
                witness,
            };
            Ok(Report::new(text, json, Outcome::from_verdict(rep.verdict)))
        }
        Command::DerivativeIdeal { ideal } => {
            let d = calculus::derivative_ideal(ctx.ideal(ideal)?)?;
            ctx.ideal_report(&format!("∂({ideal})"), &d, json!({}))
        }
        Command::Power { ideal } => {
            let k = ctx.k()?;
            ctx.ideal_report(
                &format!("{ideal}^{k}"),
                &power(ctx.ideal(ideal)?, k)?,
                json!({ "k": k }),
            )
        }
        Command::SymbolicPower { ideal } => {
            let i = ctx.ideal(ideal)?;
            let k = ctx.k()?;
            let (mode, label) = match &flags.l {
                Some(l) => (
                    SymbolicMode::Auxiliary(ctx.ideal(l)?.clone()),
                    format!("saturation by {l}"),
                ),
                None if MonomialIdeal::from_ideal(i).is_ok_and(|m| m.is_squarefree()) => (
                    SymbolicMode::MonomialSquarefree,
                    "minimal primes".to_string(),
                ),
                None => (
                    SymbolicMode::Saturated,
                    "saturation by the maximal ideal".to_string(),
                ),
            };
            let s = symbolic_power(i, &SymbolicPowerSpec { k, mode })?;
            let mut r = ctx.ideal_report(
                &format!("{ideal}^({k})"),
                &s.ideal,
                json!({ "k": k, "mode": label, "stabilization": s.stabilization }),
            )?;
            write!(r.text, "\nmode: {label}").unwrap();
            if let Some(t) = s.stabilization {
                write!(r.text, ", stabilized after {t} colon steps").unwrap();
            }
            Ok(r)
        }
        Command::SaturatedPower { ideal } => {
            let k = ctx.k()?;
            let s = saturated_power(ctx.ideal(ideal)?, k)?;
            let mut r = ctx.ideal_report(
                &format!("sat({ideal}^{k})"),
                &s.ideal,
                json!({ "k": k, "stabilization": s.stabilization }),
            )?;
            if let Some(t) = s.stabilization {
                write!(r.text, "\nstabilized after {t} colon steps").unwrap();
            }
            Ok(r)
        }
        Command::Colon { left, right } => {
            let (i, j) = (ctx.ideal(left)?, ctx.ideal(right)?);
            let c = i.colon(j)?;
            let condition = check_colon_condition(i, j)?;
            let mut r = ctx.ideal_report(
                &format!("{left} : {right}"),
                &c,
                json!({ "colon_condition": condition }),
            )?;
            write!(
                r.text,
                "\n{left} : {right} = {left} : {right}^2: {}",
                if condition { "yes" } else { "no" }
            )
            .unwrap();
            Ok(r)
        }
        Command::Intersect { left, right } => {
            let c = ctx.ideal(left)?.intersect(ctx.ideal(right)?)?;
            ctx.ideal_report(&format!("{left} ∩ {right}"), &c, json!({}))
        }
        Command::Sum { left, right } => {
            let c = ctx.ideal(left)?.sum(ctx.ideal(right)?)?;
            ctx.ideal_report(&format!("{left} + {right}"), &c, json!({}))
        }
        Command::Product { left, right } => {
            let c = ctx.ideal(left)?.product(ctx.ideal(right)?)?;
            ctx.ideal_report(&format!("{left}·{right}"), &c, json!({}))
        }
        Command::AddPrimePower { ideal, prime } => {
            let k = ctx.k()?;
            let s = add_prime_power(ctx.ideal(ideal)?, ctx.ideal(prime)?, k)?;
            let mut r = ctx.ideal_report(
                &format!("{ideal} + {prime}^{k}"),
                &s.ideal,
                json!({ "k": k, "derivative_in_prime": s.derivative_in_prime }),
            )?;
            if let Some(b) = s.derivative_in_prime {
                write!(
                    r.text,
                    "\n∂({ideal}) ⊆ {prime}: {}",
                    if b { "yes" } else { "no" }
                )
                .unwrap();
            }
            Ok(r)
        }
        Command::VertexCoverIdeal { graph } => {
            let g = ctx.graph(graph)?;
            let ring = match session.ring() {
                Some(r) if r.nvars() == g.vertex_count() => r.clone(),
                _ => GradingSpec::indexed(g.vertex_count()),
            };
            let j = g.vertex_cover_ideal(&ring)?;
            let covers = g.minimal_vertex_covers().len();
            let mut r = ctx.ideal_report(
                &format!("J({graph})"),
                &j.to_ideal(),
                json!({ "graph": write_graph(g), "minimal_covers": covers }),
            )?;
            write!(r.text, "\n{covers} minimal vertex covers").unwrap();
            Ok(r)
        }
        Command::OddCycleSuite { n } => {
            let ns = if n.is_empty() {
                vec![3, 5, 7]
            } else {
                n.clone()
            };
            let mut text = String::new();
            let mut rows = Vec::new();
            let mut ok = true;
            for &n in &ns {
                let rep = odd_cycle_suite(n)?;
                ok &= rep.all_pass();
                let yn = |b: bool| if b { "yes" } else { "no" };
                writeln!(
                    text,
                    "C{n}: {} generators; covers = edge intersection: {}; I^(2) = I^2 + (x1⋯x{n}): {}; (I^(2))^2 ⊆ I^3: {}; I^(4) ⊆ I^2: {}",
                    rep.generator_count,
                    yn(rep.cover_matches_edge_intersection),
                    yn(rep.symbolic_square_formula),
                    yn(rep.square_containment),
                    yn(rep.els_containment),
                )
                .unwrap();
                for (k, holds) in &rep.power_containments {
                    writeln!(text, "  (I^({}))^2 ⊆ I^{k}: {}", k - 1, yn(*holds)).unwrap();
                }
                rows.push(json!({
                    "n": n,
                    "generator_count": rep.generator_count,
                    "cover_matches_edge_intersection": rep.cover_matches_edge_intersection,
                    "rotations_are_generators": rep.rotations_are_generators,
                    "symbolic_square_formula": rep.symbolic_square_formula,
                    "square_containment": rep.square_containment,
                    "power_containments": rep.power_containments.iter().map(|(k, b)| json!({ "k": k, "holds": b })).collect::<Vec<_>>(),
                    "els_containment": rep.els_containment,
                    "pass": rep.all_pass(),
                }));
            }
            Ok(Report::new(
                text.trim_end().to_string(),
                json!({ "cycles": rows, "pass": ok }),
                Outcome::from_verdict(ok),
            ))
        }
        Command::SquarefreeSymbolic { ideal } => {
            let k = ctx.k()?;
            let s = monomial(ctx.ideal(ideal)?)?.squarefree_symbolic_power(k)?;
            ctx.ideal_report(&format!("{ideal}^({k})"), &s.to_ideal(), json!({ "k": k }))
        }
        Command::IntegralClosure { ideal } => {
            let c = integral_closure(&monomial(ctx.ideal(ideal)?)?)?;
            let ring = c.ideal.ring().clone();
            let witnesses: Vec<_> = c
                .generators
                .iter()
                .map(|g| json!({ "monomial": g.monomial.display(&ring).to_string(), "witness_power": g.witness_power }))
                .collect();
            let mut r = ctx.ideal_report(
                &format!("closure({ideal})"),
                &c.ideal.to_ideal(),
                json!({ "witnesses": witnesses }),
            )?;
            for g in &c.generators {
                match g.witness_power {
                    Some(p) => {
                        write!(r.text, "\n  {}: u^{p} ∈ I^{p}", g.monomial.display(&ring)).unwrap()
                    }
                    None => write!(
                        r.text,
                        "\n  {}: no power witness within the cap",
                        g.monomial.display(&ring)
                    )
                    .unwrap(),
                }
            }
            Ok(r)
        }
        Command::PrimaryComponents { ideal } => {
            let m = monomial(ctx.ideal(ideal)?)?;
            let comps = minimal_primary_components(&m)?;
            let names = m.ring().names();
            let mut text = format!("{} minimal primary components of {ideal}", comps.len());
            let mut rows = Vec::new();
            for c in &comps {
                let prime: Vec<String> = c.prime.iter().map(|&v| names[v].clone()).collect();
                writeln!(text).unwrap();
                write!(text, "  ({}): {}", prime.join(", "), c.ideal).unwrap();
                rows.push(json!({ "prime": prime, "component": IdealJson::from(&c.ideal) }));
            }
            Ok(Report::new(
                text,
                json!({ "ideal": IdealJson::from(&m), "components": rows }),
                Outcome::Success,
            ))
        }
        Command::Betti { ideal } => {
            let i = ctx.ideal(ideal)?;
            let res = minimal_free_resolution(i)?;
            let table = res.betti_table();
            let text = format!("{table}").trim_end().to_string();
            Ok(Report::new(
                text,
                json!({ "ideal": IdealJson::from(i), "betti": BettiJson::from(&table) }),
                Outcome::Success,
            ))
        }
        Command::KoszulHomology { ideal } => {
            let i = ctx.ideal(ideal)?;
            let h = koszul_homology(i, ctx.koszul_bounds(i)?)?;
            let mut text = format!(
                "H(x; S/{ideal}) for l ≤ {}, d ≤ {}",
                h.bounds.l_max, h.bounds.d_max
            );
            for ((l, d), dim) in h.dims() {
                write!(text, "\n  H_{l},{d}: {dim}").unwrap();
            }
            if h.truncated {
                text.push_str("\nnote: nonzero homology at the internal degree bound");
            }
            Ok(Report::new(
                text,
                json!({ "ideal": IdealJson::from(i), "homology": HomologyJson::from(&h) }),
                Outcome::Success,
            ))
        }
        Command::TrivialMultiplication { ideal } => {
            let i = ctx.ideal(ideal)?;
            let t = trivial_multiplication_check(i, ctx.koszul_bounds(i)?)?;
            let mut text = format!(
                "trivial multiplication: {} ({} products checked)",
                if t.verdict { "yes" } else { "no" },
                t.products_checked
            );
            if let Some(p) = &t.failing_pair {
                write!(
                    text,
                    "\nnonzero product: class {} of H_{},{} times class {} of H_{},{}",
                    p.left.2, p.left.0, p.left.1, p.right.2, p.right.0, p.right.1
                )
                .unwrap();
            }
            if t.truncated {
                text.push_str("\nnote: nonzero homology at the internal degree bound");
            }
            let pair = t.failing_pair.as_ref().map(|p| {
                json!({
                    "left": { "l": p.left.0, "d": p.left.1, "index": p.left.2 },
                    "right": { "l": p.right.0, "d": p.right.1, "index": p.right.2 },
                })
            });
            let json = json!({
                "ideal": IdealJson::from(i),
                "trivial_multiplication": t.verdict,
                "failing_pair": pair,
                "products_checked": t.products_checked,
                "truncated": t.truncated,
            });
            Ok(Report::new(text, json, Outcome::from_verdict(t.verdict)))
        }
        Command::Poincare { ideal } => {
            let i = ctx.ideal(ideal)?;
            let v = golod_verdict(i, Some(ctx.series_bounds(i)?))?;
            let text = format!(
                "window: i ≤ {}, d ≤ {}\nSerre bound: {}\nactual:      {}\n{}",
                v.bound.bounds.i_max,
                v.bound.bounds.d_max,
                v.bound,
                v.actual,
                verdict_text(&v)
            );
            Ok(Report::new(text, verdict_json(i, &v), verdict_outcome(&v)))
        }
        Command::GolodVerdict { ideal } => {
            let i = ctx.ideal(ideal)?;
            let v = golod_verdict(i, Some(ctx.series_bounds(i)?))?;
            let totals = |s: &golod_core::poincare::BigradedSeries| {
                s.totals()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let text = format!(
                "bound totals:  {}\nactual totals: {}\n{}",
                totals(&v.bound),
                totals(&v.actual),
                verdict_text(&v)
            );
            Ok(Report::new(text, verdict_json(i, &v), verdict_outcome(&v)))
        }
        Command::Examples => {
            let checks = suite::run_suite(flags.seed.unwrap_or(CORPUS_SEED))?;
            let passed = checks.iter().filter(|c| c.passed).count();
            let mut text = String::new();
            for c in &checks {
                writeln!(
                    text,
                    "{} {:<28} {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.anchor,
                    c.detail
                )
                .unwrap();
            }
            write!(text, "{passed}/{} checks passed", checks.len()).unwrap();
            let ok = passed == checks.len();
            Ok(Report::new(
                text,
                json!({ "checks": checks, "passed": passed, "total": checks.len() }),
                Outcome::from_verdict(ok),
            ))
        }
        Command::GraphSearch { max_vertices } => {
            let rep = graph_search(*max_vertices)?;
            let failures: Vec<String> =
                rep.failures.iter().map(|f| write_graph(&f.graph)).collect();
            let text = format!(
                "{} non-bipartite graphs on at most {max_vertices} vertices checked; (I^(2))^2 ⊄ I^3 for {}",
                rep.graphs_checked,
                rep.failures.len()
            );
            Ok(Report::new(
                text,
                json!({ "graphs_checked": rep.graphs_checked, "failures": failures }),
                Outcome::Success,
            ))
        }
        Command::ProductSearch { count } => product_search(&ctx, *count),
    }
}

/// Products of pairs of seeded random proper ideals; reports each verdict.
fn product_search(ctx: &Ctx<'_>, count: usize) -> Result<Report, CliError> {
    let ring = ctx
        .session
        .ring()
        .cloned()
        .unwrap_or_else(|| GradingSpec::standard(&["x", "y", "z"]));
    let seed = ctx.flags.seed.unwrap_or(CORPUS_SEED);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut text = String::new();
    let mut rows = Vec::new();
    let w = ring.max_weight();
    for _ in 0..count {
        let draw = |rng: &mut ChaCha8Rng| loop {
            let ngens = rng.gen_range(1..=2);
            let degrees: Vec<u32> = (0..ngens).map(|_| rng.gen_range(w..=2 * w)).collect();
            let i = random_homogeneous_ideal(&ring, &degrees, 3, rng.gen());
            if !i.is_unit() && !i.is_zero() {
                break i;
            }
        };
        let (i, j) = (draw(&mut rng), draw(&mut rng));
        let p = i.product(&j)?;
        let bounds = SeriesBounds {
            i_max: ctx.flags.homological.unwrap_or(3),
            d_max: ctx
                .flags
                .internal
                .unwrap_or(SeriesBounds::default_for(&p)?.d_max),
        };
        let v = golod_verdict(&p, Some(bounds))?;
        writeln!(text, "{i} · {j}: {}", v.status.label()).unwrap();
        rows.push(json!({ "left": IdealJson::from(&i), "right": IdealJson::from(&j), "status": v.status.label() }));
    }
    Ok(Report::new(
        text.trim_end().to_string(),
        json!({ "seed": seed, "products": rows }),
        Outcome::Success,
    ))
}
