//! Rank-two presentations of Nichols algebras with their liftings, and the
//! verification driver that checks them with the engine.
//!
//! Every case carries one concrete braiding (entries are powers of a
//! primitive 12th root of unity `z`) that satisfies the case conditions.

mod data;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::braiding::{BraidingError, BraidingMatrix};
use crate::hopf::{is_skew_primitive, skew_defect_mod};
use crate::lyndon::Word;
use crate::pbw::{orient, span_dimension_oracle, PbwError, Relation, RelationHead, RewriteSystem};
use crate::scalars::{Coefficient, ScalarError};
use crate::smash::{ExprError, GroupSpec, GroupWord, SmashAlgebra, SmashError};
use crate::syntax::{parse_expr, ParseError};
use crate::{Cyclo, Scalar};

use data::{CaseData, CASES};

/// Root-of-unity order used for all catalog scalars.
pub const ROOT_ORDER: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("case `{0}` has no lifting in the catalog")]
    NoLifting(String),
    #[error("case `{case}`: condition `{condition}` fails")]
    CasePredicateViolated { case: String, condition: String },
    #[error("bad condition `{0}`")]
    BadCondition(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Smash(#[from] SmashError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Braiding(#[from] BraidingError),
}

/// Static description of one catalog entry.
#[derive(Clone, Debug)]
pub struct Case {
    pub id: &'static str,
    pub family: &'static str,
    /// `q_ij = z^(exponents[i][j])`.
    pub exponents: [[i64; 2]; 2],
    pub conditions: &'static str,
    pub lset: BTreeSet<Word>,
    pub heights: BTreeMap<Word, u32>,
    /// `dim` of the Nichols algebra; liftings have dimension `dim * |G|`.
    pub dim: u64,
    pub has_lifting: bool,
    /// Open counterterm name and the head it belongs to.
    pub unknown: Option<(&'static str, &'static str)>,
}

impl Case {
    pub fn braiding(&self) -> BraidingMatrix<Scalar> {
        let e = self.exponents;
        let z = |k: i64| Scalar::constant(Cyclo::zeta(ROOT_ORDER, k));
        BraidingMatrix::new(vec![vec![z(e[0][0]), z(e[0][1])], vec![z(e[1][0]), z(e[1][1])]]).expect("2x2 units")
    }

    pub fn numeric_braiding(&self) -> BraidingMatrix<Cyclo> {
        self.braiding().to_numeric().expect("numeric entries")
    }

    /// `sum_u (N_u - 1) |u|`, the top degree of the restricted PBW box.
    pub fn top_degree(&self) -> usize {
        self.heights.iter().map(|(u, &n)| (n as usize - 1) * u.len()).sum()
    }

    /// `Z/12 x Z/12` with `g_i = e_i` and `chi_j(e_k) = q_kj`.
    pub fn standard_realization(&self) -> GroupSpec<Scalar> {
        let q = self.braiding();
        let chars = (0..2).map(|j| (0..2).map(|k| q.q(k, j).clone()).collect()).collect();
        GroupSpec::realization(&q, vec![12, 12], vec![vec![1, 0], vec![0, 1]], chars).expect("12th roots of unity")
    }

    /// `q11 .. q22` mapped to the case values.
    pub fn q_values(&self) -> HashMap<String, Scalar> {
        let q = self.braiding();
        let mut m = HashMap::new();
        for i in 0..2 {
            for j in 0..2 {
                m.insert(format!("q{}{}", i + 1, j + 1), q.q(i, j).clone());
            }
        }
        m
    }
}

fn lookup(id: &str) -> Result<&'static CaseData, CatalogError> {
    CASES.iter().find(|c| c.id == id).ok_or_else(|| CatalogError::UnknownCase(id.to_string()))
}

fn word(s: &str) -> Word {
    Word::new(s.bytes().map(|b| b - b'1').collect())
}

/// All case ids, in catalog order.
pub fn case_ids() -> Vec<&'static str> {
    CASES.iter().map(|c| c.id).collect()
}

/// Ids of the cases that have a lifting.
pub fn lifting_ids() -> Vec<&'static str> {
    CASES.iter().filter(|c| c.lifting.is_some()).map(|c| c.id).collect()
}

pub fn case(id: &str) -> Result<Case, CatalogError> {
    let d = lookup(id)?;
    Ok(Case {
        id: d.id,
        family: d.family,
        exponents: d.q,
        conditions: d.conditions,
        lset: d.lset.iter().map(|s| word(s)).collect(),
        heights: d.heights.iter().map(|(s, n)| (word(s), *n)).collect(),
        dim: d.dim,
        has_lifting: d.lifting.is_some(),
        unknown: d.unknown,
    })
}

fn expand_placeholders(s: &str) -> String {
    s.replace("S112", &format!("({})", data::S112)).replace("S12", &format!("({})", data::S12))
}

/// A list of relations, symbolic in the `q_ij` or instantiated.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub case: Case,
    pub relations: Vec<Relation<Scalar>>,
    /// The relation text as stored, one entry per relation.
    pub sources: Vec<&'static str>,
}

impl Presentation {
    pub fn heads(&self) -> Vec<RelationHead> {
        self.relations.iter().map(|r| r.head.clone()).collect()
    }
}

fn parse_relations(srcs: &[&'static str], q: Option<&HashMap<String, Scalar>>) -> Result<Vec<Relation<Scalar>>, CatalogError> {
    srcs.iter()
        .map(|s| {
            let mut e = parse_expr(&expand_placeholders(s), ROOT_ORDER)?;
            if let Some(q) = q {
                e = e.try_map_scalars(&|c: &Scalar| c.substitute(q))?;
            }
            Ok(Relation::from_generator(&e)?)
        })
        .collect()
}

/// The Nichols relations, with `q_ij` replaced by the case values.
pub fn nichols_presentation(id: &str) -> Result<Presentation, CatalogError> {
    let d = lookup(id)?;
    let c = case(id)?;
    let relations = parse_relations(d.nichols, Some(&c.q_values()))?;
    Ok(Presentation { case: c, relations, sources: d.nichols.to_vec() })
}

/// The lifting generators, with `q_ij` replaced by the case values and the
/// lifting parameters `lambda_w`, `mu_u` left symbolic.
pub fn lifting_ideal(id: &str) -> Result<Presentation, CatalogError> {
    let d = lookup(id)?;
    let lifting = d.lifting.ok_or_else(|| CatalogError::NoLifting(id.to_string()))?;
    let c = case(id)?;
    let relations = parse_relations(lifting, Some(&c.q_values()))?;
    Ok(Presentation { case: c, relations, sources: lifting.to_vec() })
}

/// Stored relation text, with `q_ij` still symbolic.
pub fn relation_sources(id: &str, lifting: bool) -> Result<Vec<String>, CatalogError> {
    let d = lookup(id)?;
    let srcs = if lifting { d.lifting.ok_or_else(|| CatalogError::NoLifting(id.to_string()))? } else { d.nichols };
    Ok(srcs.iter().map(|s| expand_placeholders(s)).collect())
}

/// Checks the case conditions against a braiding matrix.
///
/// Conditions are `;`-separated clauses `a = b`, `a != b` or `ord a = n`,
/// where `a`, `b` are scalar expressions in `q11 .. q22` and `z`.
pub fn check_conditions(id: &str, q: &BraidingMatrix<Cyclo>) -> Result<(), CatalogError> {
    let d = lookup(id)?;
    let mut values = HashMap::new();
    for i in 0..2 {
        for j in 0..2 {
            values.insert(format!("q{}{}", i + 1, j + 1), Scalar::constant(q.q(i, j).clone()));
        }
    }
    let eval = |s: &str| -> Result<Cyclo, CatalogError> {
        let e = parse_expr(s, ROOT_ORDER)?.try_map_scalars(&|c: &Scalar| c.substitute(&values))?;
        let alg = SmashAlgebra::new(q.map(|c| Scalar::constant(c.clone())));
        let el = e.eval(&alg)?;
        if el.terms().any(|(t, _)| *t != crate::smash::Term::one()) {
            return Err(CatalogError::BadCondition(s.to_string()));
        }
        el.coefficient(&crate::smash::Term::one()).as_cyclo().ok_or_else(|| CatalogError::BadCondition(s.to_string()))
    };
    for clause in d.conditions.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let fail = || CatalogError::CasePredicateViolated { case: id.to_string(), condition: clause.to_string() };
        let ok = if let Some(rest) = clause.strip_prefix("ord ") {
            let (a, n) = rest.split_once('=').ok_or_else(|| CatalogError::BadCondition(clause.to_string()))?;
            let n: u32 = n.trim().parse().map_err(|_| CatalogError::BadCondition(clause.to_string()))?;
            eval(a)?.multiplicative_order()? == Some(n)
        } else if let Some((a, b)) = clause.split_once("!=") {
            eval(a)? != eval(b)?
        } else if let Some((a, b)) = clause.split_once('=') {
            eval(a)? == eval(b)?
        } else {
            return Err(CatalogError::BadCondition(clause.to_string()));
        };
        if !ok {
            return Err(fail());
        }
    }
    Ok(())
}

/// Name of the lifting parameter attached to a relation head:
/// `lambda<w>` for `[w]` and `mu<u>` for `[u]^N`, with 1-based letters.
pub fn parameter_name(head: &RelationHead) -> String {
    let digits = |w: &Word| w.letters().iter().map(|l| (l + 1).to_string()).collect::<String>();
    match head {
        RelationHead::Letter(w) => format!("lambda{}", digits(w)),
        RelationHead::Power(u, _) => format!("mu{}", digits(u)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum Admissibility {
    Free,
    ForcedZero(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct ParameterInfo {
    pub name: String,
    pub head: String,
    pub admissibility: Admissibility,
    /// Whether the lifting keeps this parameter; `None` when the relation is open.
    pub in_lifting: Option<bool>,
}

fn head_degree(head: &RelationHead, theta: usize) -> Vec<i64> {
    head.lead_word().multidegree(theta)
}

/// The group element `g` for which the relation with this head is `(1, g)`-skew-primitive.
pub fn head_group_element(alg: &SmashAlgebra<Scalar>, head: &RelationHead) -> GroupWord {
    alg.group().g_of_degree(&head_degree(head, alg.theta()))
}

/// Admissibility of `lambda_w`, `mu_u` for each Nichols relation: a parameter
/// may be nonzero only if `g^N != 1` and `chi^N` is trivial.
pub fn admissible_parameters(id: &str, group: &GroupSpec<Scalar>) -> Result<Vec<ParameterInfo>, CatalogError> {
    let d = lookup(id)?;
    let nichols = nichols_presentation(id)?;
    let lifted = match d.lifting {
        Some(l) => Some((parse_relations(l, None)?, l)),
        None => None,
    };
    let mut out = Vec::new();
    for r in &nichols.relations {
        let name = parameter_name(&r.head);
        let deg = head_degree(&r.head, 2);
        let g = group.g_of_degree(&deg);
        let admissibility = if g.is_identity() {
            Admissibility::ForcedZero("group element is trivial".into())
        } else if !group.is_trivial_character(&deg) {
            Admissibility::ForcedZero("character is not trivial".into())
        } else {
            Admissibility::Free
        };
        let in_lifting = lifted.as_ref().and_then(|(rels, srcs)| {
            rels.iter().zip(srcs.iter()).find(|(x, _)| x.head == r.head).map(|(_, s)| has_token(s, &name))
        });
        out.push(ParameterInfo { name, head: r.head.to_string(), admissibility, in_lifting });
    }
    Ok(out)
}

fn has_token(s: &str, name: &str) -> bool {
    s.split(|c: char| !c.is_ascii_alphanumeric()).any(|t| t == name)
}

/// One verified (or refuted) claim.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Nichols,
    Lifting,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Nichols => "nichols",
            Mode::Lifting => "lifting",
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub mode: Mode,
    /// Finite realization; the free group `Z^2` when absent.
    pub realization: Option<GroupSpec<Scalar>>,
    /// Overlap completion bound; defaults to one past the top PBW degree,
    /// or twice that with `full_confluence`.
    pub degree_bound: Option<usize>,
    /// Complete far enough that every overlap of the final rules is resolved.
    pub full_confluence: bool,
    /// Cross-check Nichols dimensions up to this size with the span oracle.
    pub oracle_limit: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { mode: Mode::Lifting, realization: None, degree_bound: None, full_confluence: true, oracle_limit: 144 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub case: String,
    pub mode: Mode,
    pub group: String,
    pub group_order: Option<u64>,
    pub degree_bound: usize,
    pub checks: Vec<Check>,
    pub normal_words: Option<u64>,
    /// Normal words times group elements, for a finite group.
    pub normal_forms: Option<u64>,
    pub expected_dim: u64,
    pub parameters: Vec<ParameterInfo>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn dimension(&self) -> String {
        match self.group_order {
            Some(n) => format!("{}·{} = {}", self.expected_dim, n, self.expected_dim * n),
            None => format!("{}·|Γ|", self.expected_dim),
        }
    }

    pub fn summary(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.passed).count();
        format!("{}/{} checks passed, dim {}", ok, self.checks.len(), self.dimension())
    }
}

fn truncate(s: String, n: usize) -> String {
    if s.chars().count() <= n {
        s
    } else {
        format!("{}...", s.chars().take(n).collect::<String>())
    }
}

fn skew_check(alg: &Arc<SmashAlgebra<Scalar>>, rels: &[Relation<Scalar>], k: usize) -> Result<Check, CatalogError> {
    let r = &rels[k];
    let below: Vec<_> = rels
        .iter()
        .filter(|s| s.head.prec_cmp(&r.head) == Ordering::Less)
        .map(|s| s.expand(alg))
        .collect::<Result<_, _>>()?;
    let deg = r.head.degree();
    let mut sys = RewriteSystem::new(alg.clone(), below)?;
    let completion = sys.complete(deg)?;
    let g = head_group_element(alg, &r.head);
    let defect = skew_defect_mod(alg, &r.generator(), &g, &sys)?;
    let name = format!("skew-primitive {}", r.head);
    let detail = if defect.is_zero() {
        format!("(1, {g})-skew-primitive modulo lower relations")
    } else if completion.failures.is_empty() {
        format!("defect {}", truncate(defect.to_syntax(ROOT_ORDER), 400))
    } else {
        format!("defect {} (lower relations not fully completed)", truncate(defect.to_syntax(ROOT_ORDER), 400))
    };
    Ok(Check { name, passed: defect.is_zero(), detail })
}

/// Runs every check for one case and collects the results.
pub fn verify_case(id: &str, opts: &VerifyOptions) -> Result<Report, CatalogError> {
    let c = case(id)?;
    let d = lookup(id)?;
    let q = c.braiding();
    check_conditions(id, &c.numeric_braiding())?;
    let group = opts.realization.clone().unwrap_or_else(|| GroupSpec::free(&q));
    let group_name = match group.order() {
        Some(_) => group.moduli().iter().map(|m| format!("Z/{m}")).collect::<Vec<_>>().join(" x "),
        None => "free".to_string(),
    };
    let alg = Arc::new(SmashAlgebra::with_group(q, group.clone()));
    let mut warnings = Vec::new();
    let mut checks = Vec::new();

    let (mut rels, parameters) = match opts.mode {
        Mode::Nichols => (nichols_presentation(id)?.relations, Vec::new()),
        Mode::Lifting => {
            let p = lifting_ideal(id)?;
            let params = admissible_parameters(id, &group)?;
            let zeros: HashMap<String, Scalar> = params
                .iter()
                .filter(|p| matches!(p.admissibility, Admissibility::ForcedZero(_)))
                .map(|p| (p.name.clone(), Scalar::zero()))
                .collect();
            let rels = p
                .relations
                .iter()
                .map(|r| r.map_scalars(&|s: &Scalar| s.substitute(&zeros)))
                .collect::<Result<Vec<_>, _>>()?;
            (rels, params)
        }
    };
    rels.sort_by(|a, b| a.head.prec_cmp(&b.head));
    let mut sys = orient(alg.clone(), &rels, Some((&c.lset, &c.heights)))?;

    let skew: Vec<Result<Check, CatalogError>> = (0..rels.len()).into_par_iter().map(|k| skew_check(&alg, &rels, k)).collect();
    for s in skew {
        checks.push(s?);
    }

    let top = c.top_degree();
    let bound = opts.degree_bound.unwrap_or(if opts.full_confluence { 2 * (top + 1) } else { top + 1 });
    let mut normal_words = None;
    if let (Mode::Lifting, Some((name, head))) = (opts.mode, d.unknown) {
        warnings.push(format!("UNKNOWN counterterm: {name}"));
        warnings.push(format!("relation {head} is open; PBW basis check skipped"));
    } else {
        let report = sys.complete(bound)?;
        let counts = sys.normal_word_counts(top + 1);
        let count: u64 = counts.iter().sum();
        normal_words = Some(count);
        let reaches_top = counts[top + 1] == 0;
        let passed = report.failures.is_empty() && reaches_top && count == c.dim;
        let beyond = if report.pairs_skipped == 0 {
            "all overlaps resolved".to_string()
        } else {
            format!("{} overlaps above the bound not examined", report.pairs_skipped)
        };
        let mut detail = format!(
            "{} normal words (expected {}), {} rules, confluent through degree {}, {}",
            count, c.dim, report.rules, bound, beyond
        );
        if let Some(n) = group.order() {
            detail.push_str(&format!("; {} normal forms over {} group elements", count * n, n));
        }
        if !report.failures.is_empty() {
            detail.push_str(&format!("; {} non-monic obstructions, first: {}", report.failures.len(), truncate(report.failures[0].clone(), 200)));
        }
        if !reaches_top {
            detail.push_str(&format!("; normal words of length {} remain", top + 1));
        }
        checks.push(Check { name: "pbw basis".into(), passed, detail });
    }

    if opts.mode == Mode::Nichols && c.dim <= opts.oracle_limit {
        let expanded = rels.iter().map(|r| r.expand(&alg)).collect::<Result<Vec<_>, _>>()?;
        let check = match span_dimension_oracle(alg.theta(), &expanded, top + 1) {
            Ok(o) => Check {
                name: "dimension oracle".into(),
                passed: o.total == c.dim,
                detail: format!("graded dimensions {:?}, total {}", o.dims, o.total),
            },
            Err(e) => Check { name: "dimension oracle".into(), passed: false, detail: e.to_string() },
        };
        checks.push(check);
    }

    if opts.mode == Mode::Lifting {
        let mut bad = Vec::new();
        for p in &parameters {
            match (&p.admissibility, p.in_lifting) {
                (Admissibility::Free, Some(false)) if group.order().is_none() => bad.push(format!("{} is admissible but absent", p.name)),
                (Admissibility::ForcedZero(why), Some(true)) if why.starts_with("character") => {
                    bad.push(format!("{} appears but {}", p.name, why))
                }
                _ => {}
            }
        }
        let listed: Vec<String> = parameters
            .iter()
            .map(|p| match &p.admissibility {
                Admissibility::Free => format!("{} free", p.name),
                Admissibility::ForcedZero(_) => format!("{} = 0", p.name),
            })
            .collect();
        checks.push(Check {
            name: "admissibility".into(),
            passed: bad.is_empty(),
            detail: if bad.is_empty() { listed.join(", ") } else { bad.join("; ") },
        });
    }

    Ok(Report {
        case: id.to_string(),
        mode: opts.mode,
        group: group_name,
        group_order: group.order(),
        degree_bound: bound,
        checks,
        normal_words,
        normal_forms: normal_words.zip(group.order()).map(|(w, n)| w * n),
        expected_dim: c.dim,
        parameters,
        warnings,
    })
}

/// A closed-form identity re-derived by the engine.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// Re-derives the lifted root vector and quantum Serre forms for vertices
/// `i < j` (0-based). `q_ii` and `q_jj` must be roots of unity; the other
/// entries may be symbolic.
///
/// * `x_i^N - mu (1 - g_i^N)` is `(1, g_i^N)`-skew-primitive, `N = ord q_ii`;
/// * `[x_i^N x_j] = [x_i^N, x_j]_c` with `c = q_ij^N`, and
///   `[mu (1 - g_i^N), x_j]_c = mu (1 - c) x_j`;
/// * `[x_i, mu (1 - g_j^M)]_c = mu ((1 - c) x_i - (1 - c q_ji^M) x_i g_j^M)` with
///   `M = ord q_jj`, `c = q_ij^M`, which is `mu (q_ji^M - 1) x_i g_j^M` when `c = 1`.
pub fn root_serre_identities(q: &BraidingMatrix<Scalar>, i: usize, j: usize) -> Result<Vec<IdentityCheck>, CatalogError> {
    if i >= j || j >= q.rank() {
        return Err(CatalogError::Braiding(BraidingError::BadVertex(j + 1)));
    }
    let alg = SmashAlgebra::new(q.clone());
    let ord = |k: usize| -> Result<u32, CatalogError> {
        q.q(k, k)
            .as_cyclo()
            .and_then(|c| c.multiplicative_order().ok().flatten())
            .ok_or(CatalogError::Braiding(BraidingError::NotFiniteOrder { i: k + 1, j: k + 1 }))
    };
    let (n, m) = (ord(i)?, ord(j)?);
    let mu = Scalar::param("mu");
    let one = crate::smash::SmashElement::<Scalar>::one();
    let xi = crate::smash::SmashElement::generator(i as u8);
    let xj = crate::smash::SmashElement::generator(j as u8);
    let gi_n = crate::smash::SmashElement::group(alg.group().pow(alg.group().g(i), n as i64));
    let gj_m = crate::smash::SmashElement::group(alg.group().pow(alg.group().g(j), m as i64));
    let mut out = Vec::new();

    for (k, nk, gk) in [(i, n, &gi_n), (j, m, &gj_m)] {
        let xk = crate::smash::SmashElement::generator(k as u8);
        let root = alg.power(&xk, nk).minus(&one.minus(gk).scale(&mu));
        let g = alg.group().pow(alg.group().g(k), nk as i64);
        out.push(IdentityCheck {
            label: format!("x{}^{} - mu (1 - g{}^{}) skew-primitive", k + 1, nk, k + 1, nk),
            passed: is_skew_primitive(&alg, &root, &g),
            detail: format!("g = {g}"),
        });
    }

    let c = q.q(i, j).pow_i(n as i64).expect("unit");
    let mut letters = vec![i as u8; n as usize];
    letters.push(j as u8);
    let lhs = alg.super_letter(&Word::new(letters))?;
    let rhs = alg.commutator_with(&alg.power(&xi, n), &xj, &c);
    out.push(IdentityCheck {
        label: format!("[x{0}^{1} x{2}] = [x{0}^{1}, x{2}]_c", i + 1, n, j + 1),
        passed: lhs == rhs,
        detail: format!("c = {}", c.to_syntax(ROOT_ORDER)),
    });
    let lhs = alg.commutator_with(&one.minus(&gi_n).scale(&mu), &xj, &c);
    let rhs = xj.scale(&mu.times(&Scalar::one().minus(&c)));
    out.push(IdentityCheck {
        label: format!("[mu (1 - g{0}^{1}), x{2}]_c = mu (1 - c) x{2}", i + 1, n, j + 1),
        passed: lhs == rhs,
        detail: lhs.to_syntax(ROOT_ORDER),
    });

    let c = q.q(i, j).pow_i(m as i64).expect("unit");
    let qji = q.q(j, i).pow_i(m as i64).expect("unit");
    let lhs = alg.commutator_with(&xi, &one.minus(&gj_m).scale(&mu), &c);
    let xi_g = alg.mul(&xi, &gj_m);
    let rhs = xi.scale(&Scalar::one().minus(&c)).minus(&xi_g.scale(&Scalar::one().minus(&c.times(&qji)))).scale(&mu);
    out.push(IdentityCheck {
        label: format!("[x{0}, mu (1 - g{1}^{2})]_c closed form", i + 1, j + 1, m),
        passed: lhs == rhs,
        detail: lhs.to_syntax(ROOT_ORDER),
    });
    if c.is_one() {
        let printed = xi_g.scale(&mu.times(&qji.minus(&Scalar::one())));
        out.push(IdentityCheck {
            label: format!("[x{0}, mu (1 - g{1}^{2})] = mu (q{1}{0}^{2} - 1) x{0} g{1}^{2}", i + 1, j + 1, m),
            passed: lhs == printed,
            detail: printed.to_syntax(ROOT_ORDER),
        });
    }
    Ok(out)
}

/// The root vector and Serre forms of a case, with
/// the diagonal entries of the case and symbolic `q12`, `q21`.
pub fn lift_root_serre(id: &str) -> Result<Vec<IdentityCheck>, CatalogError> {
    let q = case(id)?.braiding();
    let generic = BraidingMatrix::new(vec![
        vec![q.q(0, 0).clone(), Scalar::param("q12")],
        vec![Scalar::param("q21"), q.q(1, 1).clone()],
    ])?;
    root_serre_identities(&generic, 0, 1)
}

/// `chi_i^r chi_j^s` on the free group, as its values on `g_1 .. g_theta`.
fn character(q: &BraidingMatrix<Cyclo>, exps: &[(usize, i64)]) -> Vec<Cyclo> {
    (0..q.rank())
        .map(|m| {
            exps.iter().fold(Cyclo::from_int(1), |acc, &(k, e)| acc.mul_ref(&q.q(m, k).powi(e).expect("unit")))
        })
        .collect()
}

fn is_trivial(v: &[Cyclo]) -> bool {
    v.iter().all(|c| *c == Cyclo::from_int(1))
}

/// Checks the character identities for `chi_i` at `N = ord q_ii` against
/// direct evaluation of the characters on the free group, for `r` up to
/// `r_max`. Returns one entry per instance whose hypotheses hold.
pub fn character_lemma_checks(q: &BraidingMatrix<Cyclo>, r_max: i64) -> Result<Vec<IdentityCheck>, CatalogError> {
    let one = Cyclo::from_int(1);
    let mut out = Vec::new();
    let mut push = |label: String, passed: bool| out.push(IdentityCheck { label, passed, detail: String::new() });
    for i in 0..q.rank() {
        let Some(n) = q.q(i, i).multiplicative_order()? else { continue };
        if n <= 1 {
            continue;
        }
        let n = n as i64;
        let chi_i = character(q, &[(i, 1)]);
        let chi_i_n = character(q, &[(i, n)]);
        push(format!("chi_{}^{} != chi_{}", i + 1, n, i + 1), chi_i_n != chi_i);
        for j in (0..q.rank()).filter(|&j| j != i) {
            let chi_j = character(q, &[(j, 1)]);
            let qii = q.q(i, i);
            let (qij, qji, qjj) = (q.q(i, j), q.q(j, i), q.q(j, j));
            if *qjj != one {
                // On the free group g_i^N != g_j, so only the character part can fail.
                push(format!("chi_{}^{} != chi_{} or g_{}^{} != g_{}", i + 1, n, j + 1, i + 1, n, j + 1), true);
            }
            if is_trivial(&chi_i_n) {
                push(format!("chi_{}^{} trivial => q_{}{}^{} = 1", i + 1, n, j + 1, i + 1, n), qji.powi(n)? == one);
            }
            for r in 0..=r_max {
                let cartan = qij.mul_ref(qji) == qii.powi(-(r - 1))?;
                let mixed = character(q, &[(i, r), (j, 1)]);
                if cartan && *qjj != one {
                    push(format!("r = {r}: chi_{}^r chi_{} != chi_{}", i + 1, j + 1, i + 1), mixed != chi_i);
                }
                if qii.powi(r)? != one {
                    push(format!("r = {r}: chi_{}^r chi_{} != chi_{}", i + 1, j + 1, j + 1), mixed != chi_j);
                }
                if cartan && is_trivial(&mixed) {
                    let m = qii.powi(-r)?;
                    let shape = *qij == m && *qji == *qii && *qjj == m;
                    push(format!("r = {r}: chi_{}^r chi_{} trivial => matrix shape", i + 1, j + 1), shape);
                }
            }
        }
    }
    Ok(out)
}

/// Whether the Serre-type relation `[x_i^(1-a_ij) x_j]` must vanish in every
/// lifting according to the 2x2 matrix criterion. `None` when
/// `q_ij q_ji != q_ii^(a_ij)` or `N_i <= 1 - a_ij`.
pub fn serre_vanishes_by_matrix(q: &BraidingMatrix<Cyclo>, i: usize, j: usize) -> Result<Option<bool>, CatalogError> {
    let a = q.cartan_matrix()?;
    let r = 1 - a.get(i, j);
    let qii = q.q(i, i);
    let n = qii.multiplicative_order()?.map(|n| n as i64).unwrap_or(i64::MAX);
    if q.q(i, j).mul_ref(q.q(j, i)) != qii.powi(a.get(i, j))? || n <= r {
        return Ok(None);
    }
    let m = qii.powi(-r)?;
    Ok(Some(!(*q.q(i, j) == m && q.q(j, i) == qii && *q.q(j, j) == m)))
}

/// Whether `lambda` for `[x_i^r x_j]` is forced to zero by its character on the free group.
pub fn serre_vanishes_by_character(q: &BraidingMatrix<Cyclo>, i: usize, j: usize, r: i64) -> bool {
    !is_trivial(&character(q, &[(i, r), (j, 1)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conditions_hold_for_every_case() {
        for id in case_ids() {
            let c = case(id).unwrap();
            check_conditions(id, &c.numeric_braiding()).unwrap_or_else(|e| panic!("{id}: {e}"));
        }
    }

    #[test]
    fn condition_violation_is_reported() {
        let other = case("A2-1b").unwrap().numeric_braiding();
        assert!(matches!(check_conditions("A2-1a", &other), Err(CatalogError::CasePredicateViolated { .. })));
    }

    #[test]
    fn unknown_case() {
        assert!(matches!(case("X9"), Err(CatalogError::UnknownCase(_))));
    }

    #[test]
    fn box_sizes_match_dimensions() {
        for id in case_ids() {
            let c = case(id).unwrap();
            let prod: u64 = c.heights.values().map(|&n| n as u64).product();
            assert_eq!(prod, c.dim, "{id}");
        }
    }

    #[test]
    fn a2_1b_lambda_is_free() {
        let c = case("A2-1b").unwrap();
        let params = admissible_parameters("A2-1b", &GroupSpec::free(&c.braiding())).unwrap();
        let l = params.iter().find(|p| p.name == "lambda112").unwrap();
        assert_eq!(l.admissibility, Admissibility::Free);
    }

    #[test]
    fn a2_4a_mu2_forced_zero() {
        let c = case("A2-4a").unwrap();
        let params = admissible_parameters("A2-4a", &GroupSpec::free(&c.braiding())).unwrap();
        let m = params.iter().find(|p| p.name == "mu2").unwrap();
        assert!(matches!(m.admissibility, Admissibility::ForcedZero(_)));
        assert_eq!(m.in_lifting, Some(false));
    }

    #[test]
    fn realization_forces_mu1() {
        // In Z/12 x Z/12, g1^12 = 1.
        let c = case("R89-5a").unwrap();
        let params = admissible_parameters("R89-5a", &c.standard_realization()).unwrap();
        let m = params.iter().find(|p| p.name == "mu1").unwrap();
        assert_eq!(m.admissibility, Admissibility::ForcedZero("group element is trivial".into()));
    }

    #[test]
    fn root_serre_forms_hold() {
        for id in ["A2-1a", "A2-1b", "B2-2d", "R89-5a"] {
            for c in lift_root_serre(id).unwrap() {
                assert!(c.passed, "{id}: {} {}", c.label, c.detail);
            }
        }
    }

    #[test]
    fn character_lemma_on_catalog() {
        for id in case_ids() {
            let q = case(id).unwrap().numeric_braiding();
            let checks = character_lemma_checks(&q, 12).unwrap();
            assert!(!checks.is_empty());
            for c in checks {
                assert!(c.passed, "{id}: {}", c.label);
            }
        }
    }

    #[test]
    fn serre_matrix_criterion_matches_characters() {
        for id in case_ids() {
            let q = case(id).unwrap().numeric_braiding();
            let a = q.cartan_matrix().unwrap();
            for (i, j) in [(0, 1), (1, 0)] {
                if let Some(v) = serre_vanishes_by_matrix(&q, i, j).unwrap() {
                    assert_eq!(v, serre_vanishes_by_character(&q, i, j, 1 - a.get(i, j)), "{id} ({i}, {j})");
                }
            }
        }
    }

    #[test]
    fn parameter_names() {
        assert_eq!(parameter_name(&RelationHead::Letter(word("11212"))), "lambda11212");
        assert_eq!(parameter_name(&RelationHead::Power(word("12"), 6)), "mu12");
    }

    #[test]
    fn all_relations_parse() {
        for id in case_ids() {
            nichols_presentation(id).unwrap();
            if case(id).unwrap().has_lifting {
                lifting_ideal(id).unwrap_or_else(|e| panic!("{id}: {e}"));
            }
        }
    }
}
