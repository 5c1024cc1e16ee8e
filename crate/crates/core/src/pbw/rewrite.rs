use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use super::{PbwError, PrecKey};
use crate::hopf::LegReducer;
use crate::lyndon::{SuperWord, Word};
use crate::scalars::Coefficient;
use crate::smash::{coefficient_text, ExprError, GroupWord, SmashAlgebra, SmashElement, Term};

pub const DEFAULT_STEP_CAP: usize = 1_000_000;

/// `lead -> tail`, with every word of `tail` below `lead`.
#[derive(Clone, Debug)]
pub struct Rule<C> {
    pub lead: Word,
    pub tail: SmashElement<C>,
}

/// Outcome of overlap completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionReport {
    pub degree_bound: usize,
    pub rules: usize,
    pub pairs_processed: usize,
    /// Overlaps longer than the bound that were not examined.
    pub pairs_skipped: usize,
    /// Polynomials that could not be oriented and were left out.
    pub failures: Vec<String>,
}

impl CompletionReport {
    /// True when every overlap was resolved, so normal forms are unique.
    pub fn is_confluent(&self) -> bool {
        self.failures.is_empty() && self.pairs_skipped == 0
    }
}

/// Overlaps whose two reductions disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub degree_bound: usize,
    pub pairs_checked: usize,
    pub failures: Vec<(Word, String)>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A linear combination of super words times group elements.
#[derive(Clone, Debug, PartialEq)]
pub struct PbwElement<C> {
    terms: Vec<(SuperWord, GroupWord, C)>,
}

impl<C: Coefficient> PbwElement<C> {
    pub fn terms(&self) -> impl Iterator<Item = (&SuperWord, &GroupWord, &C)> {
        self.terms.iter().map(|(s, g, c)| (s, g, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_syntax(&self, n: u32) -> String {
        let mut out = String::new();
        for (sw, g, c) in &self.terms {
            let (neg, body) = coefficient_text(c, n);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut parts = Vec::new();
            if !body.is_empty() {
                parts.push(body);
            }
            if !sw.is_empty() {
                parts.push(sw.to_string());
            }
            if !g.is_identity() {
                parts.push(g.to_string());
            }
            if parts.is_empty() {
                parts.push("1".into());
            }
            out.push_str(&parts.join(" "));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<C: Coefficient> fmt::Display for PbwElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.terms.iter().fold(1u32, |acc, (_, _, c)| num_integer::lcm(acc, c.root_order()));
        f.write_str(&self.to_syntax(n))
    }
}

/// A word rewriting system on `k<X> # k[G]` modulo a two-sided ideal.
pub struct RewriteSystem<C: Coefficient> {
    alg: Arc<SmashAlgebra<C>>,
    rules: Vec<Option<Rule<C>>>,
    index: HashMap<Vec<u8>, usize>,
    lead_lengths: BTreeSet<usize>,
    cache: RwLock<HashMap<Word, SmashElement<C>>>,
    step_cap: usize,
    completion: Option<CompletionReport>,
}

type Pending<C> = BTreeMap<(PrecKey, GroupWord), C>;

impl<C: Coefficient> RewriteSystem<C> {
    /// Orients each generator at its leading word; no completion is done.
    pub fn new(alg: Arc<SmashAlgebra<C>>, generators: Vec<SmashElement<C>>) -> Result<Self, PbwError> {
        let mut sys = RewriteSystem {
            alg,
            rules: Vec::new(),
            index: HashMap::new(),
            lead_lengths: BTreeSet::new(),
            cache: RwLock::new(HashMap::new()),
            step_cap: DEFAULT_STEP_CAP,
            completion: None,
        };
        for g in generators {
            if let Some(f) = sys.add_polynomial(g)?.into_iter().next() {
                return Err(PbwError::NotMonic(f));
            }
        }
        Ok(sys)
    }

    pub fn with_step_cap(mut self, cap: usize) -> Self {
        self.step_cap = cap;
        self
    }

    pub fn algebra(&self) -> &Arc<SmashAlgebra<C>> {
        &self.alg
    }

    pub fn rules(&self) -> impl Iterator<Item = &Rule<C>> {
        self.rules.iter().flatten()
    }

    pub fn completion(&self) -> Option<&CompletionReport> {
        self.completion.as_ref()
    }

    fn clear_cache(&self) {
        self.cache.write().expect("normal form cache").clear();
    }

    fn find_lead(&self, w: &[u8]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            for &l in &self.lead_lengths {
                if start + l > w.len() {
                    break;
                }
                if let Some(&i) = self.index.get(&w[start..start + l]) {
                    return Some((start, i));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_lead(w.letters()).is_none()
    }

    /// `u * e * v` for words `u`, `v`.
    fn sandwich(&self, u: &[u8], e: &SmashElement<C>, v: &[u8]) -> Vec<(Term, C)> {
        let dv = Word::new(v.to_vec()).multidegree(self.alg.theta());
        e.terms()
            .map(|(t, c)| {
                let mut w = Vec::with_capacity(u.len() + t.word.len() + v.len());
                w.extend_from_slice(u);
                w.extend_from_slice(t.word.letters());
                w.extend_from_slice(v);
                (Term::new(Word::new(w), t.group.clone()), c.times(&self.alg.twist(&t.group, &dv)))
            })
            .collect()
    }

    fn push(&self, pending: &mut Pending<C>, word: Word, g: GroupWord, c: C) {
        use std::collections::btree_map::Entry;
        match pending.entry((PrecKey(word), g)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().plus(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Normal form of a bare word.
    pub fn normal_form_word(&self, w: &Word) -> Result<SmashElement<C>, PbwError> {
        if let Some(e) = self.cache.read().expect("normal form cache").get(w) {
            return Ok(e.clone());
        }
        let group = self.alg.group();
        let mut pending: Pending<C> = BTreeMap::new();
        pending.insert((PrecKey(w.clone()), GroupWord::identity()), C::one());
        let mut out = SmashElement::zero();
        let mut steps = 0usize;
        while let Some(((PrecKey(word), g), c)) = pending.pop_last() {
            if &word != w {
                if let Some(e) = self.cache.read().expect("normal form cache").get(&word) {
                    for (t, d) in e.terms() {
                        out.add_term(Term::new(t.word.clone(), group.mul(&t.group, &g)), d.times(&c));
                    }
                    continue;
                }
            }
            match self.find_lead(word.letters()) {
                None => out.add_term(Term::new(word, g), c),
                Some((start, i)) => {
                    steps += 1;
                    if steps > self.step_cap {
                        return Err(PbwError::ReductionDiverged(self.step_cap));
                    }
                    let rule = self.rules[i].as_ref().expect("indexed rule is active");
                    let l = rule.lead.len();
                    let ls = word.letters();
                    for (t, d) in self.sandwich(&ls[..start], &rule.tail, &ls[start + l..]) {
                        let gg = group.mul(&t.group, &g);
                        self.push(&mut pending, t.word, gg, d.times(&c));
                    }
                }
            }
        }
        self.cache.write().expect("normal form cache").insert(w.clone(), out.clone());
        Ok(out)
    }

    /// Normal form of an element.
    pub fn reduce(&self, a: &SmashElement<C>) -> Result<SmashElement<C>, PbwError> {
        let group = self.alg.group();
        let mut out = SmashElement::zero();
        for (t, c) in a.terms() {
            let nf = self.normal_form_word(&t.word)?;
            for (s, d) in nf.terms() {
                out.add_term(Term::new(s.word.clone(), group.mul(&s.group, &t.group)), d.times(c));
            }
        }
        Ok(out)
    }

    /// Rewrites a normal form in super words: repeatedly take the largest
    /// word, read off its Lyndon factorization and subtract that super word.
    pub fn to_pbw(&self, a: &SmashElement<C>) -> Result<PbwElement<C>, PbwError> {
        let group = self.alg.group();
        let mut rest: Pending<C> = BTreeMap::new();
        for (t, c) in self.reduce(a)?.into_terms() {
            self.push(&mut rest, t.word, t.group, c);
        }
        let mut terms = Vec::new();
        let mut expansions: HashMap<Word, SmashElement<C>> = HashMap::new();
        while let Some(((PrecKey(w), g), c)) = rest.pop_last() {
            let sw = SuperWord::of_word(&w);
            if !expansions.contains_key(&w) {
                let e = self.alg.super_word(&sw.0).map_err(ExprError::from)?;
                expansions.insert(w.clone(), self.reduce(&e)?);
            }
            let e = &expansions[&w];
            for (t, d) in e.terms() {
                if t.word == w && t.group.is_identity() {
                    continue;
                }
                let gg = group.mul(&t.group, &g);
                self.push(&mut rest, t.word.clone(), gg, d.times(&c).negated());
            }
            terms.push((sw, g, c));
        }
        Ok(PbwElement { terms })
    }

    /// Reduces `f` and adds it as a rule. Polynomials that cannot be made
    /// monic are returned and left out.
    fn add_polynomial(&mut self, f: SmashElement<C>) -> Result<Vec<String>, PbwError> {
        let mut queue = vec![f];
        let mut failed = Vec::new();
        while let Some(f) = queue.pop() {
            let f = self.reduce(&f)?;
            if f.is_zero() {
                continue;
            }
            let rule = match self.monic(&f) {
                Ok(r) => r,
                Err(PbwError::NotMonic(m)) => {
                    failed.push(m);
                    continue;
                }
                Err(e) => return Err(e),
            };
            let lead = rule.lead.clone();
            // Retire rules whose lead contains the new one.
            for i in 0..self.rules.len() {
                let contains = match &self.rules[i] {
                    Some(r) => r.lead.letters().windows(lead.len()).any(|s| s == lead.letters()),
                    None => false,
                };
                if contains {
                    let r = self.rules[i].take().expect("active rule");
                    self.index.remove(r.lead.letters());
                    let mut poly = SmashElement::word(r.lead.clone());
                    poly.add_scaled(&r.tail, &C::one().negated());
                    queue.push(poly);
                }
            }
            self.index.insert(lead.letters().to_vec(), self.rules.len());
            self.rules.push(Some(rule));
            self.lead_lengths = self.index.keys().map(|k| k.len()).collect();
            self.clear_cache();
        }
        Ok(failed)
    }

    /// `W -> tail` from a reduced nonzero `f`, normalizing its leading coefficient.
    fn monic(&self, f: &SmashElement<C>) -> Result<Rule<C>, PbwError> {
        let lead = f.terms().map(|(t, _)| PrecKey(t.word.clone())).max().expect("nonzero").0;
        let leading: Vec<(&Term, &C)> = f.terms().filter(|(t, _)| t.word == lead).collect();
        let fail = || PbwError::NotMonic(f.to_string());
        if leading.len() != 1 {
            return Err(fail());
        }
        let (t, c) = leading[0];
        let inv = c.inverse().ok_or_else(fail)?;
        let group = self.alg.group();
        let g_inv = group.pow(&t.group, -1);
        let mut tail = SmashElement::zero();
        for (s, d) in f.terms() {
            if s.word != lead {
                tail.add_term(Term::new(s.word.clone(), group.mul(&s.group, &g_inv)), d.times(&inv).negated());
            }
        }
        Ok(Rule { lead, tail })
    }

    /// Overlaps `a = pb`, `b = ...` between two leads: `(word, i, j, k)` with `k` shared letters.
    fn overlaps(&self, i: usize, j: usize) -> Vec<(Word, usize, usize, usize)> {
        let (Some(a), Some(b)) = (&self.rules[i], &self.rules[j]) else {
            return Vec::new();
        };
        let (a, b) = (a.lead.letters(), b.lead.letters());
        let mut out = Vec::new();
        for k in 1..a.len().min(b.len()) {
            if a[a.len() - k..] == b[..k] {
                let mut w = a.to_vec();
                w.extend_from_slice(&b[k..]);
                out.push((Word::new(w), i, j, k));
            }
        }
        out
    }

    /// The two one-step reductions of an overlap word, subtracted.
    fn s_polynomial(&self, i: usize, j: usize, k: usize) -> SmashElement<C> {
        let ra = self.rules[i].as_ref().expect("active");
        let rb = self.rules[j].as_ref().expect("active");
        let a = ra.lead.letters();
        let b = rb.lead.letters();
        let mut s = SmashElement::zero();
        for (t, c) in self.sandwich(&[], &ra.tail, &b[k..]) {
            s.add_term(t, c);
        }
        for (t, c) in self.sandwich(&a[..a.len() - k], &rb.tail, &[]) {
            s.add_term(t, c.negated());
        }
        s
    }

    /// Checks every overlap up to `bound` without adding rules.
    pub fn check_local_confluence(&self, bound: usize) -> Result<ConfluenceReport, PbwError> {
        let n = self.rules.len();
        let mut checked = 0;
        let mut failures = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (w, i, j, k) in self.overlaps(i, j) {
                    if w.len() > bound {
                        continue;
                    }
                    checked += 1;
                    let r = self.reduce(&self.s_polynomial(i, j, k))?;
                    if !r.is_zero() {
                        failures.push((w, r.to_string()));
                    }
                }
            }
        }
        Ok(ConfluenceReport { degree_bound: bound, pairs_checked: checked, failures })
    }

    /// Overlap completion, processing overlap words in order of length up to `bound`.
    pub fn complete(&mut self, bound: usize) -> Result<CompletionReport, PbwError> {
        let mut heap: BinaryHeap<Reverse<(usize, usize, usize, usize)>> = BinaryHeap::new();
        let mut seen_rules = 0usize;
        let mut processed = 0usize;
        let mut skipped = 0usize;
        let mut failures = Vec::new();
        loop {
            // Queue overlaps involving rules added since the last round.
            let total = self.rules.len();
            for j in seen_rules..total {
                for i in 0..=j {
                    for (w, a, b, k) in self.overlaps(i, j).into_iter().chain(if i != j { self.overlaps(j, i) } else { Vec::new() }) {
                        heap.push(Reverse((w.len(), a, b, k)));
                    }
                }
            }
            seen_rules = total;
            let Some(Reverse((len, i, j, k))) = heap.pop() else {
                break;
            };
            if self.rules[i].is_none() || self.rules[j].is_none() {
                continue;
            }
            if len > bound {
                skipped = 1 + heap.iter().filter(|Reverse((_, a, b, _))| self.rules[*a].is_some() && self.rules[*b].is_some()).count();
                break;
            }
            processed += 1;
            let s = self.s_polynomial(i, j, k);
            failures.extend(self.add_polynomial(s)?);
        }
        self.normalize_tails()?;
        let report = CompletionReport {
            degree_bound: bound,
            rules: self.rules().count(),
            pairs_processed: processed,
            pairs_skipped: skipped,
            failures,
        };
        self.completion = Some(report.clone());
        Ok(report)
    }

    fn normalize_tails(&mut self) -> Result<(), PbwError> {
        for i in 0..self.rules.len() {
            if let Some(r) = &self.rules[i] {
                let t = self.reduce(&r.tail)?;
                self.rules[i].as_mut().expect("active").tail = t;
            }
        }
        Ok(())
    }

    /// Normal words counted by length, up to `max_len`.
    pub fn normal_word_counts(&self, max_len: usize) -> Vec<u64> {
        let theta = self.alg.theta() as u8;
        let mut counts = vec![0u64; max_len + 1];
        let mut stack: Vec<Vec<u8>> = vec![Vec::new()];
        while let Some(w) = stack.pop() {
            counts[w.len()] += 1;
            if w.len() == max_len {
                continue;
            }
            for l in 0..theta {
                let mut v = w.clone();
                v.push(l);
                let reducible = self
                    .lead_lengths
                    .iter()
                    .take_while(|&&k| k <= v.len())
                    .any(|&k| self.index.contains_key(&v[v.len() - k..]));
                if !reducible {
                    stack.push(v);
                }
            }
        }
        counts
    }

    /// All normal words, provided none has length `max_len`.
    pub fn normal_words(&self, max_len: usize) -> Result<Vec<Word>, PbwError> {
        let counts = self.normal_word_counts(max_len);
        if counts[max_len] > 0 {
            return Err(PbwError::DegreeBoundTooSmall { bound: max_len });
        }
        let theta = self.alg.theta() as u8;
        let mut out = Vec::new();
        let mut stack: Vec<Vec<u8>> = vec![Vec::new()];
        while let Some(w) = stack.pop() {
            for l in (0..theta).rev() {
                let mut v = w.clone();
                v.push(l);
                let reducible = self
                    .lead_lengths
                    .iter()
                    .take_while(|&&k| k <= v.len())
                    .any(|&k| self.index.contains_key(&v[v.len() - k..]));
                if !reducible {
                    stack.push(v);
                }
            }
            out.push(Word::new(w));
        }
        out.sort_by(|a, b| PrecKey(a.clone()).cmp(&PrecKey(b.clone())));
        Ok(out)
    }

    /// Number of normal words; errors if words of length `max_len` remain.
    pub fn count_normal_words(&self, max_len: usize) -> Result<u64, PbwError> {
        let counts = self.normal_word_counts(max_len);
        if counts[max_len] > 0 {
            return Err(PbwError::DegreeBoundTooSmall { bound: max_len });
        }
        Ok(counts.iter().sum())
    }
}

impl<C: Coefficient> LegReducer<C> for RewriteSystem<C> {
    fn reduce_leg(&self, a: &SmashElement<C>) -> Result<SmashElement<C>, ExprError> {
        self.reduce(a).map_err(|e| ExprError::Algebra(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::BraidingMatrix;
    use crate::syntax::parse_expr;
    use crate::{Cyclo, Scalar};

    fn sys(q: [[i64; 2]; 2], rels: &[&str]) -> RewriteSystem<Scalar> {
        let z = |k: i64| Scalar::constant(Cyclo::zeta(12, k));
        let b = BraidingMatrix::new(vec![vec![z(q[0][0]), z(q[0][1])], vec![z(q[1][0]), z(q[1][1])]]).unwrap();
        let alg = Arc::new(SmashAlgebra::new(b));
        let gens = rels.iter().map(|s| parse_expr(s, 12).unwrap().eval(alg.as_ref()).unwrap()).collect();
        RewriteSystem::new(alg, gens).unwrap()
    }

    #[test]
    fn a2_nichols_dimension_8() {
        let mut s = sys([[6, 0], [6, 6]], &["x1^2", "[x1 x2]^2", "x2^2"]);
        let rep = s.complete(12).unwrap();
        assert!(rep.is_confluent(), "{rep:?}");
        assert_eq!(s.count_normal_words(12).unwrap(), 8);
    }

    #[test]
    fn reduce_to_pbw() {
        let s = sys([[6, 0], [6, 6]], &["x1^2", "[x1 x2]^2", "x2^2"]);
        let alg = s.algebra().clone();
        let e = parse_expr("x1 x2 x1", 12).unwrap().eval(alg.as_ref()).unwrap();
        let p = s.to_pbw(&e).unwrap();
        assert_eq!(p.to_syntax(12), "[x1 x2] x1");
        let e = parse_expr("x1 x2", 12).unwrap().eval(alg.as_ref()).unwrap();
        assert_eq!(s.to_pbw(&e).unwrap().to_syntax(12), "[x1 x2] + x2 x1");
    }

    #[test]
    fn empty_system_is_confluent() {
        let s = sys([[6, 0], [6, 6]], &[]);
        assert!(s.check_local_confluence(6).unwrap().is_confluent());
    }
}
