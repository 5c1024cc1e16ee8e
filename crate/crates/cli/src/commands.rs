use std::fmt::Write as _;
use std::sync::Arc;

use nichols_core::braiding::BraidingMatrix;
use nichols_core::catalog::{self, Admissibility, Mode, Report, VerifyOptions, ROOT_ORDER};
use nichols_core::hopf::{skew_defect, DeltaAlgebra};
use nichols_core::lyndon::{lyndon_words, Word};
use nichols_core::pbw::{orient, span_dimension_oracle, Relation, RewriteSystem};
use nichols_core::scalars::Coefficient;
use nichols_core::smash::{Expr, GroupSpec, GroupWord, SmashAlgebra, SmashElement, Term};
use nichols_core::{Cyclo, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{matrix_syntax, RealizationSection, SessionConfig};
use crate::{Cli, CliError, Command, Format, ModeArg};

pub const SCHEMA: &str = "nichols-report/1";

pub struct Output {
    pub text: String,
    pub json: Value,
    pub failed: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, failed: false }
    }

    pub fn render(&self, format: Format, cmd: &Command) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let v = json!({ "schema": SCHEMA, "command": command_name(cmd), "ok": !self.failed, "result": self.json });
                format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Cartan => "cartan",
        Command::Reflect { .. } => "reflect",
        Command::Dynkin => "dynkin",
        Command::WeylOrbit { .. } => "weyl-orbit",
        Command::Lyndon { .. } => "lyndon",
        Command::ExpandSuperletter { .. } => "expand-superletter",
        Command::Coproduct { .. } => "coproduct",
        Command::SkewDefect { .. } => "skew-defect",
        Command::Reduce { .. } => "reduce",
        Command::Nichols { .. } => "nichols",
        Command::Lifting { .. } => "lifting",
        Command::Verify { .. } => "verify",
        Command::OracleDim { .. } => "oracle-dim",
        Command::RootSerre { .. } => "root-serre",
        Command::Roundtrip { .. } => "roundtrip",
        Command::Cases => "cases",
    }
}

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::Failed(e.to_string())
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

struct Session {
    cfg: SessionConfig,
}

impl Session {
    fn algebra(&self) -> Result<SmashAlgebra<Scalar>, CliError> {
        let q = self.cfg.braiding()?;
        Ok(match self.cfg.realization_for(&q)? {
            Some(g) => SmashAlgebra::with_group(q, g),
            None => SmashAlgebra::new(q),
        })
    }

    fn numeric(&self) -> Result<BraidingMatrix<Cyclo>, CliError> {
        self.cfg.braiding()?.to_numeric().map_err(usage)
    }

    fn element(&self, alg: &SmashAlgebra<Scalar>, src: &str) -> Result<SmashElement<Scalar>, CliError> {
        self.cfg.parse_element(src)?.eval(alg).map_err(usage)
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let cfg = match &cli.config {
        Some(p) => SessionConfig::load(p)?,
        None => SessionConfig::default(),
    };
    let s = Session { cfg };
    let n = s.cfg.order;
    match &cli.command {
        Command::Cartan => {
            let a = s.numeric()?.cartan_matrix().map_err(failed)?;
            Ok(Output::ok(format!("{a}\n"), json!({ "cartan": a.0 })))
        }
        Command::Reflect { vertex } => {
            let q = s.numeric()?;
            if *vertex == 0 || *vertex > q.rank() {
                return Err(usage(format!("vertex {vertex} out of range 1..={}", q.rank())));
            }
            let r = q.reflect(vertex - 1).map_err(failed)?;
            let m = matrix_syntax(&r, n);
            Ok(Output::ok(format!("{m}\n{}\n", r.dynkin().to_syntax(n)), json!({ "braiding": m, "dynkin": r.dynkin().to_syntax(n) })))
        }
        Command::Dynkin => {
            let d = s.numeric()?.dynkin().to_syntax(n);
            Ok(Output::ok(format!("{d}\n"), json!({ "dynkin": d })))
        }
        Command::WeylOrbit { cap } => {
            let orbit = s.numeric()?.weyl_orbit(*cap).map_err(failed)?;
            let ds: Vec<String> = orbit.iter().map(|d| d.to_syntax(n)).collect();
            let mut text = String::new();
            for d in &ds {
                writeln!(text, "{d}").unwrap();
            }
            Ok(Output::ok(text, json!({ "diagrams": ds })))
        }
        Command::Lyndon { max_len } => {
            let ws: Vec<String> = lyndon_words(s.cfg.theta() as u8, *max_len).iter().map(|w| w.to_string()).collect();
            Ok(Output::ok(ws.iter().map(|w| format!("{w}\n")).collect(), json!({ "words": ws })))
        }
        Command::ExpandSuperletter { word } => {
            let w: Word = word.parse().map_err(usage)?;
            let alg = s.algebra()?;
            let e = alg.super_letter(&w).map_err(usage)?.to_syntax(n);
            Ok(Output::ok(format!("{e}\n"), json!({ "word": w.to_string(), "expansion": e })))
        }
        Command::Coproduct { expr } => {
            let alg = s.algebra()?;
            let e = s.cfg.parse_element(expr)?;
            let d = e.eval(&DeltaAlgebra::new(&alg, None)).map_err(failed)?.to_syntax(n);
            Ok(Output::ok(format!("{d}\n"), json!({ "coproduct": d })))
        }
        Command::SkewDefect { expr, group } => {
            let alg = s.algebra()?;
            let a = s.element(&alg, expr)?;
            let g = group_of(&s.element(&alg, group)?).ok_or_else(|| usage(format!("`{group}` is not a group element")))?;
            let d = skew_defect(&alg, &a, &g);
            let text = if d.is_zero() { format!("0\n(1, {g})-skew-primitive: yes\n") } else { format!("{}\n", d.to_syntax(n)) };
            Ok(Output { text, json: json!({ "defect": d.to_syntax(n), "skew_primitive": d.is_zero() }), failed: !d.is_zero() })
        }
        Command::Reduce { expr, case, lifting, relations, bound } => reduce(&s, expr, case.as_deref(), *lifting, relations.as_deref(), *bound),
        Command::Nichols { id } => presentation(id, false),
        Command::Lifting { id } => presentation(id, true),
        Command::Verify { id, all, realization, mode, degree_bound, bounded } => {
            verify(id.as_deref(), *all, realization.as_deref(), *mode, *degree_bound, *bounded)
        }
        Command::OracleDim { case, bound } => {
            let p = catalog::nichols_presentation(case)?;
            let alg = SmashAlgebra::new(p.case.braiding());
            let rels = p.relations.iter().map(|r| r.expand(&alg)).collect::<Result<Vec<_>, _>>().map_err(failed)?;
            match span_dimension_oracle(2, &rels, *bound) {
                Ok(o) => {
                    let ok = o.total == p.case.dim;
                    let text = format!("graded dimensions {:?}\ntotal {} (expected {})\n", o.dims, o.total, p.case.dim);
                    Ok(Output { text, json: json!({ "dims": o.dims, "total": o.total, "expected": p.case.dim }), failed: !ok })
                }
                Err(e) => Err(failed(e)),
            }
        }
        Command::RootSerre { id } => {
            let checks = catalog::lift_root_serre(id)?;
            let mut text = String::new();
            for c in &checks {
                writeln!(text, "{} {}", if c.passed { "ok  " } else { "FAIL" }, c.label).unwrap();
            }
            let bad = checks.iter().any(|c| !c.passed);
            Ok(Output { text, json: serde_json::to_value(&checks).expect("json"), failed: bad })
        }
        Command::Roundtrip { trials } => roundtrip(&s, *trials, cli.seed),
        Command::Cases => {
            let ids = catalog::case_ids();
            Ok(Output::ok(ids.iter().map(|i| format!("{i}\n")).collect(), json!({ "cases": ids })))
        }
    }
}

fn group_of(e: &SmashElement<Scalar>) -> Option<GroupWord> {
    let mut it = e.terms();
    let (t, c) = it.next()?;
    (it.next().is_none() && t.word.is_empty() && c.is_one()).then(|| t.group.clone())
}

fn reduce(
    s: &Session,
    expr: &str,
    case: Option<&str>,
    lifting: bool,
    relations: Option<&std::path::Path>,
    bound: Option<usize>,
) -> Result<Output, CliError> {
    let n = s.cfg.order;
    let (alg, rels, input, default_bound) = match (case, relations) {
        (Some(id), _) => {
            let p = if lifting { catalog::lifting_ideal(id)? } else { catalog::nichols_presentation(id)? };
            let alg = Arc::new(SmashAlgebra::new(p.case.braiding()));
            let qv = p.case.q_values();
            let e = s.cfg.parse_element(expr)?.try_map_scalars(&|c: &Scalar| c.substitute(&qv)).map_err(usage)?;
            let input = e.eval(alg.as_ref()).map_err(usage)?;
            (alg, p.relations, input, 2 * (p.case.top_degree() + 1))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let alg = Arc::new(s.algebra()?);
            let mut rels = Vec::new();
            for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
                rels.push(Relation::from_generator(&s.cfg.parse_element(line)?).map_err(usage)?);
            }
            let input = s.element(&alg, expr)?;
            let maxdeg = rels.iter().map(|r: &Relation<Scalar>| r.head.degree()).max().unwrap_or(1);
            (alg, rels, input, 2 * maxdeg + 2)
        }
        (None, None) => return Err(usage("one of --case or --relations is required")),
    };
    let bound = bound.unwrap_or(default_bound);
    let mut sys: RewriteSystem<Scalar> = orient(alg, &rels, None).map_err(failed)?;
    let report = sys.complete(bound).map_err(failed)?;
    let nf = sys.to_pbw(&input).map_err(failed)?;
    let text = format!(
        "{}\n(completion bound {}, {} rules, {})\n",
        nf.to_syntax(n),
        bound,
        report.rules,
        if report.is_confluent() { "confluent" } else { "not confirmed confluent" }
    );
    Ok(Output::ok(
        text,
        json!({ "normal_form": nf.to_syntax(n), "bound": bound, "rules": report.rules, "confluent": report.is_confluent() }),
    ))
}

fn presentation(id: &str, lifting: bool) -> Result<Output, CliError> {
    let c = catalog::case(id)?;
    let sources = catalog::relation_sources(id, lifting)?;
    let q = matrix_syntax(&c.braiding(), ROOT_ORDER);
    let lset: Vec<String> = c.lset.iter().map(|w| format!("[{w}]")).collect();
    let heights: Vec<String> = c.heights.iter().map(|(u, h)| format!("[{u}]: {h}")).collect();
    let mut text = String::new();
    writeln!(text, "case {} ({})", c.id, c.family).unwrap();
    writeln!(text, "braiding {q}").unwrap();
    writeln!(text, "conditions {}", c.conditions).unwrap();
    writeln!(text, "L = {{{}}}", lset.join(", ")).unwrap();
    writeln!(text, "heights {}", heights.join(", ")).unwrap();
    writeln!(text, "relations:").unwrap();
    for r in &sources {
        writeln!(text, "  {r}").unwrap();
    }
    let mut j = json!({
        "case": c.id, "family": c.family, "braiding": q, "conditions": c.conditions,
        "lset": lset, "heights": heights, "relations": sources, "dim": c.dim,
    });
    if lifting {
        let params = catalog::admissible_parameters(id, &GroupSpec::free(&c.braiding()))?;
        writeln!(text, "parameters:").unwrap();
        for p in &params {
            let status = match &p.admissibility {
                Admissibility::Free => "free".to_string(),
                Admissibility::ForcedZero(r) => format!("0 ({r})"),
            };
            writeln!(text, "  {} for {}: {}", p.name, p.head, status).unwrap();
        }
        if let Some((name, head)) = c.unknown {
            writeln!(text, "open: {head} - {name}, {name} UNKNOWN").unwrap();
        }
        writeln!(text, "dim {}·|Γ|", c.dim).unwrap();
        j["parameters"] = serde_json::to_value(&params).expect("json");
    } else {
        writeln!(text, "dim {}", c.dim).unwrap();
    }
    Ok(Output::ok(text, j))
}

fn report_text(r: &Report) -> String {
    let mut text = String::new();
    writeln!(text, "{} {} ({} group, degree bound {})", r.case, r.mode, r.group, r.degree_bound).unwrap();
    for c in &r.checks {
        writeln!(text, "  {} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail).unwrap();
    }
    for w in &r.warnings {
        writeln!(text, "warning: {w}").unwrap();
    }
    writeln!(text, "{}: {}", r.case, r.summary()).unwrap();
    text
}

fn report_json(r: &Report) -> Value {
    let mut v = serde_json::to_value(r).expect("json");
    let ok = r.checks.iter().filter(|c| c.passed).count();
    v["passed"] = json!(r.passed());
    v["summary"] = json!(format!("{}/{} checks passed", ok, r.checks.len()));
    v
}

fn verify(
    id: Option<&str>,
    all: bool,
    realization: Option<&str>,
    mode: Option<ModeArg>,
    degree_bound: Option<usize>,
    bounded: bool,
) -> Result<Output, CliError> {
    let ids: Vec<&str> = if all {
        catalog::case_ids()
    } else {
        vec![id.ok_or_else(|| usage("missing case id"))?]
    };
    let file = match realization {
        Some("standard") | None => None,
        Some(path) => Some(RealizationSection::load(std::path::Path::new(path))?),
    };
    let mut jobs = Vec::new();
    for id in ids {
        let c = catalog::case(id)?;
        let m = match mode {
            Some(ModeArg::Nichols) => Mode::Nichols,
            Some(ModeArg::Lifting) if !c.has_lifting && all => continue,
            Some(ModeArg::Lifting) => Mode::Lifting,
            None if c.has_lifting => Mode::Lifting,
            None => Mode::Nichols,
        };
        let group = match (realization, &file) {
            (Some("standard"), _) => Some(c.standard_realization()),
            (_, Some(f)) => Some(f.build(&c.braiding(), ROOT_ORDER)?),
            _ => None,
        };
        let opts = VerifyOptions { mode: m, realization: group, degree_bound, full_confluence: !bounded, ..Default::default() };
        jobs.push((id, opts));
    }
    let results: Vec<Result<Report, catalog::CatalogError>> = jobs.par_iter().map(|(id, o)| catalog::verify_case(id, o)).collect();
    let mut reports = Vec::new();
    for r in results {
        reports.push(r?);
    }
    let failed = reports.iter().any(|r| !r.passed());
    let text: String = reports.iter().map(report_text).collect::<Vec<_>>().join("\n");
    let json = if all {
        Value::Array(reports.iter().map(report_json).collect())
    } else {
        report_json(&reports[0])
    };
    Ok(Output { text, json, failed })
}

fn random_element(rng: &mut ChaCha8Rng, theta: usize, n: u32) -> SmashElement<Scalar> {
    let params = ["mu1", "lambda12", "q12"];
    let mut e = SmashElement::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let len = rng.gen_range(0..=4);
        let word = Word::new((0..len).map(|_| rng.gen_range(0..theta) as u8).collect());
        let group = GroupWord::new((0..theta).map(|_| rng.gen_range(-2..=2)).collect());
        let mut c = Scalar::constant(Cyclo::zeta(n, rng.gen_range(0..n as i64))).times(&Scalar::from_i64(rng.gen_range(1..=5)));
        if rng.gen_bool(0.5) {
            c = c.plus(&Scalar::param(params[rng.gen_range(0..params.len())]));
        }
        e.add_term(Term::new(word, group), c);
    }
    e
}

fn roundtrip(s: &Session, trials: usize, seed: u64) -> Result<Output, CliError> {
    let alg = s.algebra()?;
    let n = s.cfg.order;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut sample = Vec::new();
    for k in 0..trials {
        let e = random_element(&mut rng, alg.theta(), n);
        let text = e.to_syntax(n);
        let back = nichols_core::syntax::parse_expr(&text, n).ok().and_then(|x: Expr<Scalar>| x.eval(&alg).ok());
        if back.as_ref() != Some(&e) {
            failures.push(text.clone());
        }
        if k < 3 {
            sample.push(text);
        }
    }
    let text = format!("{}/{} elements round-tripped (seed {seed})\n", trials - failures.len(), trials);
    Ok(Output {
        text,
        json: json!({ "trials": trials, "seed": seed, "failures": failures, "sample": sample }),
        failed: !failures.is_empty(),
    })
}
