//! Rewriting to PBW normal form, completion, basis counts and an independent
//! dimension oracle.
//!
//! Words are ordered by `<`: shorter first, and at equal length the
//! lexicographically larger word is smaller. The leading word of a super
//! letter `[u]` is `u`, and of a super word the concatenation of its factors,
//! so a relation `[w] - rhs` is turned into the rule `w -> ...` and reduction
//! works on plain words with group elements carried on the right.

mod oracle;
mod rewrite;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::lyndon::{prec, SuperWord, Word};
use crate::scalars::Coefficient;
use crate::smash::{Expr, ExprError, SmashAlgebra, SmashElement};

pub use oracle::{span_dimension_oracle, OracleResult};
pub use rewrite::{CompletionReport, ConfluenceReport, PbwElement, RewriteSystem, Rule, DEFAULT_STEP_CAP};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PbwError {
    #[error("reduction exceeded {0} rewrite steps")]
    ReductionDiverged(usize),
    #[error("relation `{relation}`: term `{term}` is not below the head")]
    NotPrecL { relation: String, term: String },
    #[error("relation `{relation}`: term `{term}` has a different character")]
    NotCharacterHomogeneous { relation: String, term: String },
    #[error("relation head `{0}` is not of the form [w] with w in C(L) or [u]^N with u in D(L)")]
    InvalidHead(String),
    #[error("completion produced a polynomial with non-invertible leading coefficient: {0}")]
    NotMonic(String),
    #[error("quotient still nonzero in degree {bound}; raise the degree bound")]
    DegreeBoundTooSmall { bound: usize },
    #[error("infinite dimension: {0}")]
    InfiniteDimension(String),
    #[error("the dimension oracle needs numeric, group-free relations")]
    NotNumeric,
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// Word order for rewriting: length, then reverse lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PrecKey(pub Word);

impl Ord for PrecKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for PrecKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The leading super word of a relation: `[w]` or `[u]^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RelationHead {
    Letter(Word),
    Power(Word, u32),
}

impl RelationHead {
    pub fn super_word(&self) -> SuperWord {
        match self {
            RelationHead::Letter(w) => SuperWord(vec![w.clone()]),
            RelationHead::Power(u, n) => SuperWord(vec![u.clone(); *n as usize]),
        }
    }

    pub fn lead_word(&self) -> Word {
        self.super_word().flatten()
    }

    pub fn degree(&self) -> usize {
        self.super_word().len()
    }

    pub fn expr<C: Coefficient>(&self) -> Expr<C> {
        match self {
            RelationHead::Letter(w) => Expr::SuperLetter(w.clone()),
            RelationHead::Power(u, n) => Expr::pow(Expr::SuperLetter(u.clone()), *n),
        }
    }

    /// Recognizes `[w]`, `x_i`, `[u]^N` and `x_i^N`.
    pub fn from_expr<C: Coefficient>(e: &Expr<C>) -> Option<Self> {
        match e {
            Expr::SuperLetter(w) => Some(RelationHead::Letter(w.clone())),
            Expr::Gen(i) => Some(RelationHead::Letter(Word::letter(*i))),
            Expr::Power(b, n) => match RelationHead::from_expr(b)? {
                RelationHead::Letter(u) => Some(RelationHead::Power(u, *n)),
                RelationHead::Power(..) => None,
            },
            _ => None,
        }
    }

    /// `<` on heads through their super words.
    pub fn prec_cmp(&self, other: &Self) -> Ordering {
        prec(&self.super_word(), &other.super_word())
    }
}

impl fmt::Display for RelationHead {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = |w: &Word| if w.len() == 1 { w.to_string() } else { format!("[{w}]") };
        match self {
            RelationHead::Letter(w) => f.write_str(&base(w)),
            RelationHead::Power(u, n) => write!(f, "{}^{}", base(u), n),
        }
    }
}

/// A defining relation `head + rest = 0`, i.e. `head = rhs` with `rhs = -rest`.
#[derive(Clone, Debug)]
pub struct Relation<C> {
    pub head: RelationHead,
    pub rest: Expr<C>,
}

impl<C: Coefficient> Relation<C> {
    pub fn new(head: RelationHead, rest: Expr<C>) -> Self {
        Relation { head, rest }
    }

    /// Splits a parsed generator at its first summand.
    pub fn from_generator(e: &Expr<C>) -> Result<Self, PbwError> {
        let (h, rest) = e.split_head();
        let head = RelationHead::from_expr(&h).ok_or_else(|| PbwError::InvalidHead(h.to_string()))?;
        Ok(Relation { head, rest })
    }

    /// The whole generator `head + rest`.
    pub fn generator(&self) -> Expr<C> {
        match &self.rest {
            Expr::Sum(items) if items.is_empty() => self.head.expr(),
            rest => Expr::Sum(vec![self.head.expr(), rest.clone()]),
        }
    }

    pub fn expand(&self, alg: &SmashAlgebra<C>) -> Result<SmashElement<C>, PbwError> {
        Ok(self.generator().eval(alg)?)
    }

    pub fn map_scalars<D: Coefficient, E>(&self, f: &impl Fn(&C) -> Result<D, E>) -> Result<Relation<D>, E> {
        Ok(Relation { head: self.head.clone(), rest: self.rest.try_map_scalars(f)? })
    }
}

/// Validates relations against the `<_L` shape and character homogeneity, and
/// builds the (uncompleted) rewrite system.
pub fn orient<C: Coefficient>(
    alg: std::sync::Arc<SmashAlgebra<C>>,
    relations: &[Relation<C>],
    l: Option<(&BTreeSet<Word>, &BTreeMap<Word, u32>)>,
) -> Result<RewriteSystem<C>, PbwError> {
    let theta = alg.theta();
    let free = RewriteSystem::new(alg.clone(), Vec::new())?;
    let mut gens = Vec::new();
    for r in relations {
        let label = r.head.to_string();
        if let Some((lset, heights)) = l {
            let ok = match &r.head {
                RelationHead::Letter(w) => crate::lyndon::c_set(lset, theta as u8).map(|c| c.contains(w)).unwrap_or(false),
                RelationHead::Power(u, n) => lset.contains(u) && heights.get(u) == Some(n),
            };
            if !ok {
                return Err(PbwError::InvalidHead(label));
            }
        }
        let head_sw = r.head.super_word();
        let rhs = r.rest.eval(alg.as_ref())?.negated();
        let head_chars = alg.group().character_values(&r.head.lead_word().multidegree(theta));
        for (t, _) in rhs.terms() {
            if alg.group().character_values(&t.word.multidegree(theta)) != head_chars {
                return Err(PbwError::NotCharacterHomogeneous { relation: label, term: t.to_string() });
            }
        }
        for (sw, g, _) in free.to_pbw(&rhs)?.terms() {
            let below = match sw.len().cmp(&head_sw.len()) {
                Ordering::Less => true,
                Ordering::Equal => g.is_identity() && prec(sw, &head_sw) == Ordering::Less,
                Ordering::Greater => false,
            };
            if !below {
                return Err(PbwError::NotPrecL { relation: label, term: format!("{sw} {g}") });
            }
        }
        gens.push(r.expand(&alg)?);
    }
    RewriteSystem::new(alg, gens)
}

/// Size of the restricted PBW box `prod_u N_u`, times `|G|` when given.
pub fn enumerate_pbw_basis(
    l: &BTreeSet<Word>,
    heights: &BTreeMap<Word, u32>,
    group_order: Option<u64>,
) -> Result<(Vec<SuperWord>, u64), PbwError> {
    // Decreasing super-letter order: letters sorted descending.
    let letters: Vec<&Word> = l.iter().rev().collect();
    for u in &letters {
        if !heights.contains_key(*u) {
            return Err(PbwError::InfiniteDimension(format!("no finite height for [{u}]")));
        }
    }
    let mut out = vec![Vec::<Word>::new()];
    for u in &letters {
        let n = heights[*u];
        let mut next = Vec::with_capacity(out.len() * n as usize);
        for m in &out {
            for e in 0..n {
                let mut v = m.clone();
                v.extend(std::iter::repeat((*u).clone()).take(e as usize));
                next.push(v);
            }
        }
        out = next;
    }
    let count = out.len() as u64 * group_order.unwrap_or(1);
    Ok((out.into_iter().map(SuperWord).collect(), count))
}
