use std::fmt;

use clap::ValueEnum;
use multiserial::cycle_algebra::CycleAlgebra;
use multiserial::defining_pair::{generate_relations, nilpotency_bound, validate};
use multiserial::oracle::{oracle_dimension, Generators, OracleOptions, DEFAULT_MAX_PATHS};
use multiserial::presentation::{
    check_condition_m, check_lemma_properties, check_nilpotency, format_successor, maximal_paths, orbit_data,
    simple_cycles, OrbitData, SuccessorTables,
};
use multiserial::report::Check;
use multiserial::symmetrize::{
    build_qstar, check_arrow_classes, dimension_comparison, symmetrization, verify_quotient, STAR_PREFIX,
};
use multiserial::{DefiningPair, FieldSpec, Presentation, PrimeField, Quiver, Rationals};
use serde_json::{json, Value};

use crate::document::{render_pair, Body, InputDocument};
use crate::dot::export_dot;
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Validate,
    SigmaTau,
    Symmetrize,
    Relations,
    Basis,
    Gram,
    Cartan,
    VerifyQuotient,
    Oracle,
    Dot,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::SigmaTau => "sigma-tau",
            Command::Symmetrize => "symmetrize",
            Command::Relations => "relations",
            Command::Basis => "basis",
            Command::Gram => "gram",
            Command::Cartan => "cartan",
            Command::VerifyQuotient => "verify-quotient",
            Command::Oracle => "oracle",
            Command::Dot => "dot",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub field: FieldSpec,
    pub max_paths: usize,
    /// For `dot` on a presentation: draw `Q*` instead of `Q`.
    pub qstar: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { field: FieldSpec::Rational, max_paths: DEFAULT_MAX_PATHS, qstar: false }
    }
}

impl Options {
    fn oracle(&self) -> OracleOptions {
        OracleOptions { max_paths: self.max_paths, ..OracleOptions::default() }
    }
}

/// A condition that stops a command from producing a report at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fault(pub String);

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Fault {}

impl From<multiserial::Error> for Fault {
    fn from(e: multiserial::Error) -> Self {
        Fault(e.to_string())
    }
}

/// A file-shaped result: the pair file of `symmetrize` or the DOT text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    /// Results key under which the text is reported when not written to a file.
    pub key: &'static str,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub report: Report,
    pub artifact: Option<Artifact>,
}

macro_rules! with_field {
    ($spec:expr, $f:ident => $body:expr) => {
        match $spec {
            FieldSpec::Rational => {
                let $f = &Rationals;
                $body
            }
            FieldSpec::Prime(p) => {
                let $f = &PrimeField::new(p)?;
                $body
            }
        }
    };
}

fn paths(q: &Quiver, ps: impl IntoIterator<Item = multiserial::Path>) -> Value {
    ps.into_iter().map(|p| q.format_path(&p)).collect()
}

fn needs_presentation(cmd: Command, doc: &InputDocument) -> Result<&Presentation, Fault> {
    match &doc.body {
        Body::Presentation(p) => Ok(p),
        Body::Pair(_) => Err(Fault(format!("`{}` needs a [presentation] document", cmd.name()))),
    }
}

/// The document's pair, symmetrizing a presentation first.
fn pair_of(doc: &InputDocument, report: &mut Report) -> Result<DefiningPair, Fault> {
    match &doc.body {
        Body::Pair(d) => Ok(d.clone()),
        Body::Presentation(p) => {
            report.set("source", "symmetrization of the presentation");
            Ok(symmetrization(p)?.pair)
        }
    }
}

fn structural_warnings(q: &Quiver, report: &mut Report) {
    for v in q.isolated_vertices() {
        report.warn(format!("vertex {} has no incident arrows", q.vertex_name(v)));
    }
    let parts = q.components().len();
    if parts > 1 {
        report.warn(format!("the quiver has {parts} connected components"));
    }
}

pub fn run(cmd: Command, doc: &InputDocument, opts: &Options) -> Result<Outcome, Fault> {
    let mut report = Report::new(cmd.name());
    let artifact = match cmd {
        Command::Validate => {
            validate_cmd(doc, opts, &mut report)?;
            None
        }
        Command::SigmaTau => {
            sigma_tau(needs_presentation(cmd, doc)?, &mut report)?;
            None
        }
        Command::Symmetrize => Some(symmetrize_cmd(needs_presentation(cmd, doc)?, &mut report)?),
        Command::Relations => {
            relations(doc, &mut report)?;
            None
        }
        Command::Basis => {
            basis(doc, &mut report)?;
            None
        }
        Command::Gram => {
            gram(doc, opts, &mut report)?;
            None
        }
        Command::Cartan => {
            cartan(doc, &mut report)?;
            None
        }
        Command::VerifyQuotient => {
            verify(needs_presentation(cmd, doc)?, opts, &mut report)?;
            None
        }
        Command::Oracle => {
            oracle(doc, opts, &mut report)?;
            None
        }
        Command::Dot => Some(dot(doc, opts, &mut report)?),
    };
    Ok(Outcome { report, artifact })
}

fn validate_cmd(doc: &InputDocument, opts: &Options, report: &mut Report) -> Result<(), Fault> {
    let q = doc.quiver();
    report.set("vertices", q.vertex_count());
    report.set("arrows", q.arrow_count());
    structural_warnings(q, report);
    match &doc.body {
        Body::Pair(pair) => {
            report.verdicts(validate(pair).checks);
            report.set("rotation_classes", pair.representatives().len());
            report.set("cycles", pair.len());
            report.set("nilpotency_bound", nilpotency_bound(pair));
            if pair.is_empty() {
                report.warn("the pair has no cycles");
            }
        }
        Body::Presentation(p) => {
            report.set("nilpotency", p.nilpotency());
            report.set("monomial", p.is_monomial());
            let m = check_condition_m(p);
            report.verdict(m.to_check(q));
            if !m.passed() {
                return Ok(());
            }
            let tables = multiserial::derive_successors(p)?;
            let (b1, b2) = tables.check_inverse_properties(q);
            report.verdicts([b1, b2]);
            report.verdicts(check_lemma_properties(q, &tables)?.items);
            if let Some(n) = check_nilpotency(p, opts.max_paths)? {
                report.set("minimal_nilpotency", n.minimal);
                let mut witnesses = Vec::new();
                if n.declared < n.minimal {
                    witnesses.push(format!("nonzero paths of length {} remain", n.declared));
                }
                report.verdict(Check::from_witnesses(
                    format!("every path of length {} lies in I", n.declared),
                    witnesses,
                ));
                if n.declared > n.minimal {
                    report.warn(format!("declared nilpotency {} exceeds the minimal value {}", n.declared, n.minimal));
                }
            }
        }
    }
    Ok(())
}

fn orbit_text(o: &OrbitData) -> String {
    match o {
        OrbitData::Stops { forward, backward } => format!("stops (forward {forward}, backward {backward})"),
        OrbitData::Periodic { period } => format!("periodic ({period})"),
    }
}

fn tables_results(q: &Quiver, t: &SuccessorTables, report: &mut Report) -> Result<(), Fault> {
    let orbits = orbit_data(q, t)?;
    let mut sigma = Vec::new();
    let mut tau = Vec::new();
    let mut orbit = Vec::new();
    for a in q.arrow_ids() {
        let name = q.arrow_name(a);
        sigma.push(format!("{name} -> {}", format_successor(q, t.sigma(a))));
        tau.push(format!("{name} -> {}", format_successor(q, t.tau(a))));
        orbit.push(format!("{name}: {}", orbit_text(&orbits[a.0])));
    }
    report.set("sigma", sigma);
    report.set("tau", tau);
    report.set("orbits", orbit);
    report.set("maximal_paths", paths(q, maximal_paths(q, t)?));
    report.set("cycles", paths(q, simple_cycles(q, t)?.into_iter().map(|c| c.path().clone())));
    Ok(())
}

fn sigma_tau(p: &Presentation, report: &mut Report) -> Result<(), Fault> {
    let q = p.quiver();
    let m = check_condition_m(p);
    report.verdict(m.to_check(q));
    if !m.passed() {
        return Ok(());
    }
    let t = multiserial::derive_successors(p)?;
    let (b1, b2) = t.check_inverse_properties(q);
    report.verdicts([b1, b2]);
    tables_results(q, &t, report)
}

fn symmetrize_cmd(p: &Presentation, report: &mut Report) -> Result<Artifact, Fault> {
    let sym = symmetrization(p)?;
    let q = sym.star.quiver();
    report.verdicts(validate(&sym.pair).checks);
    report.verdict(Check::from_witnesses("arrows partition into rotation classes", check_arrow_classes(&sym)));
    let stars: Vec<String> = sym
        .star
        .star_arrows()
        .iter()
        .map(|(m, a)| {
            format!(
                "{}: {} -> {} closes {}",
                q.arrow_name(*a),
                q.vertex_name(q.source(*a)),
                q.vertex_name(q.target(*a)),
                p.quiver().format_path(m)
            )
        })
        .collect();
    report.set("star_arrows", stars);
    report.set("rotation_classes", sym.pair.representatives().len());
    report.set("multiplicity", p.nilpotency());
    Ok(Artifact { key: "pair_file", text: render_pair(&sym.pair) })
}

fn relations(doc: &InputDocument, report: &mut Report) -> Result<(), Fault> {
    let pair = pair_of(doc, report)?;
    let q = pair.quiver();
    let rels = generate_relations(&pair);
    let type1: Vec<String> = rels
        .type1
        .iter()
        .map(|(l, r)| format!("{} = {}", q.format_path(l), q.format_path(r)))
        .collect();
    report.set("counts", json!({"type1": rels.type1.len(), "type2": rels.type2.len(), "type3": rels.type3.len()}));
    report.set("type1", type1);
    report.set("type2", paths(q, rels.type2.iter().cloned()));
    report.set("type3", paths(q, rels.type3.iter().cloned()));
    report.set("nilpotency_bound", nilpotency_bound(&pair));
    Ok(())
}

fn basis(doc: &InputDocument, report: &mut Report) -> Result<(), Fault> {
    let pair = pair_of(doc, report)?;
    let alg = CycleAlgebra::new(&pair)?;
    let q = pair.quiver();
    let b: Vec<String> = alg.basis().iter().map(|x| x.display(q).to_string()).collect();
    report.set("dimension", alg.dimension());
    report.set("basis", b);
    Ok(())
}

fn gram(doc: &InputDocument, opts: &Options, report: &mut Report) -> Result<(), Fault> {
    let pair = pair_of(doc, report)?;
    let alg = CycleAlgebra::new(&pair)?;
    let q = pair.quiver();
    let g = with_field!(opts.field, f => alg.gram_matrix(f));
    report.set("field", opts.field.to_string());
    report.set("basis", g.basis.iter().map(|x| x.display(q).to_string()).collect::<Vec<_>>());
    report.set("matrix", json!(g.entries));
    report.set("dimension", g.dimension());
    report.set("rank", g.rank);
    report.set("verdict", if g.is_nondegenerate() { "NONDEGENERATE" } else { "DEGENERATE" });
    let blocks: Vec<&str> = g.degenerate_vertices.iter().map(|&v| q.vertex_name(v)).collect();
    for v in &blocks {
        report.warn(format!(
            "vertex {v} has no incident arrows; the form vanishes on e_{v}, so its block is DEGENERATE"
        ));
    }
    if !blocks.is_empty() {
        report.set("degenerate_blocks", blocks.clone());
    }
    report.verdict(alg.check_trace_symmetry());
    let mut witnesses = Vec::new();
    if g.rank + blocks.len() != g.dimension() {
        witnesses.push(format!("rank {} of {}", g.rank, g.dimension()));
    }
    let name = if blocks.is_empty() {
        "bilinear form is nondegenerate"
    } else {
        "bilinear form is nondegenerate away from arrowless vertices"
    };
    report.verdict(Check::from_witnesses(name, witnesses));
    Ok(())
}

fn cartan(doc: &InputDocument, report: &mut Report) -> Result<(), Fault> {
    let pair = pair_of(doc, report)?;
    let alg = CycleAlgebra::new(&pair)?;
    let q = pair.quiver();
    let c = alg.cartan_matrix();
    let mut witnesses = Vec::new();
    for (u, row) in c.iter().enumerate() {
        for (v, &x) in row.iter().enumerate().skip(u + 1) {
            if x != c[v][u] {
                witnesses.push(format!("({}, {})", q.vertex_names()[u], q.vertex_names()[v]));
            }
        }
    }
    report.set("vertices", q.vertex_names().to_vec());
    report.set("matrix", json!(c));
    report.verdict(Check::from_witnesses("Cartan matrix is symmetric", witnesses));
    Ok(())
}

fn verify(p: &Presentation, opts: &Options, report: &mut Report) -> Result<(), Fault> {
    let cert = verify_quotient(p)?;
    let entries: Vec<Value> = cert
        .entries
        .iter()
        .map(|e| {
            json!({
                "type": e.kind.to_string(),
                "generator": e.generator,
                "justification": e.justification.to_string(),
                "certified": e.justification.is_complete(),
            })
        })
        .collect();
    report.set("certificate", entries);
    report.verdict(Check::from_witnesses(
        "every generator of I* maps into I",
        cert.failures().map(|e| format!("{} ({})", e.generator, e.justification)).collect(),
    ));
    let cmp = with_field!(opts.field, f => dimension_comparison(f, p, opts.oracle())?);
    report.set("dim_a", cmp.algebra);
    report.set("dim_a_star", cmp.symmetric);
    let mut witnesses = Vec::new();
    if !cmp.holds() {
        witnesses.push(format!("{} > {}", cmp.algebra, cmp.symmetric));
    }
    report.verdict(Check::from_witnesses("dim A <= dim A*", witnesses));
    Ok(())
}

fn oracle(doc: &InputDocument, opts: &Options, report: &mut Report) -> Result<(), Fault> {
    report.set("field", opts.field.to_string());
    let (q, gens, bound, closed) = match &doc.body {
        Body::Presentation(p) => (p.quiver().clone(), Generators::from(p), p.nilpotency(), None),
        Body::Pair(pair) => {
            let closed = CycleAlgebra::new(pair)?.dimension();
            (pair.quiver().clone(), Generators::from(&generate_relations(pair)), nilpotency_bound(pair), Some(closed))
        }
    };
    let r = with_field!(opts.field, f => oracle_dimension(f, &q, &gens, bound, opts.oracle())?);
    report.set("dimension", r.dimension);
    report.set("enumerated_paths", r.enumerated);
    report.set("ideal_rank", r.ideal_rank);
    report.set("truncation", bound);
    if let Some(closed) = closed {
        report.set("closed_form_dimension", closed);
        let mut witnesses = Vec::new();
        if closed != r.dimension {
            witnesses.push(format!("closed form {closed}, oracle {}", r.dimension));
        }
        report.verdict(Check::from_witnesses("closed form agrees with the oracle", witnesses));
    }
    Ok(())
}

fn dot(doc: &InputDocument, opts: &Options, report: &mut Report) -> Result<Artifact, Fault> {
    let text = match &doc.body {
        Body::Presentation(p) if opts.qstar => {
            let star = build_qstar(p)?;
            export_dot(star.quiver(), |a| star.is_star(a))
        }
        Body::Presentation(p) => export_dot(p.quiver(), |_| false),
        Body::Pair(pair) => {
            let q = pair.quiver();
            export_dot(q, |a| q.arrow_name(a).starts_with(STAR_PREFIX))
        }
    };
    let edges = text.lines().filter(|l| l.contains(" -> ")).count();
    report.set("nodes", doc.quiver().vertex_count());
    report.set("edges", edges);
    report.set("dashed_edges", text.matches("style=dashed").count());
    Ok(Artifact { key: "dot", text })
}
