//! The smash product `k<X> # k[G]` with `g x_i = chi_i(g) x_i g`.

mod expr;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use crate::braiding::BraidingMatrix;
use crate::lyndon::{LyndonError, Word};
use crate::scalars::Coefficient;

pub use expr::{default_super_letter, Expr, ExprAlgebra, ExprError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SmashError {
    #[error("element is not Z^theta-homogeneous")]
    NotHomogeneous,
    #[error(transparent)]
    Lyndon(#[from] LyndonError),
    #[error("invalid realization: {0}")]
    InvalidRealization(String),
}

/// A group element, stored as exponents in the generators of the group.
///
/// Trailing zero exponents are dropped, so the identity is the empty vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct GroupWord(Vec<i64>);

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord(Vec::new())
    }

    pub fn new(mut e: Vec<i64>) -> Self {
        while e.last() == Some(&0) {
            e.pop();
        }
        GroupWord(e)
    }

    pub fn exponent(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(k, &e)| if e == 1 { format!("g{}", k + 1) } else { format!("g{}^{}", k + 1, e) })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// The abelian group acting on the letters.
///
/// `Gamma = prod_k Z/m_k` (with `m_k = 0` meaning `Z`); `gens[i]` is the image
/// of `g_i` and `chars[j][k] = chi_j(e_k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupSpec<C> {
    moduli: Vec<u32>,
    gens: Vec<GroupWord>,
    chars: Vec<Vec<C>>,
}

impl<C: Coefficient> GroupSpec<C> {
    /// `Gamma = Z^theta` with `g_i = e_i` and `chi_j(g_i) = q_ij`.
    pub fn free(q: &BraidingMatrix<C>) -> Self {
        let n = q.rank();
        GroupSpec {
            moduli: vec![0; n],
            gens: (0..n).map(|i| unit(i, 1)).collect(),
            chars: (0..n).map(|j| (0..n).map(|k| q.q(k, j).clone()).collect()).collect(),
        }
    }

    /// A general realization, validated against `chi_j(g_i) = q_ij`.
    pub fn realization(
        q: &BraidingMatrix<C>,
        moduli: Vec<u32>,
        gens: Vec<Vec<i64>>,
        chars: Vec<Vec<C>>,
    ) -> Result<Self, SmashError> {
        let n = q.rank();
        let r = moduli.len();
        let bad = |m: String| Err(SmashError::InvalidRealization(m));
        if gens.len() != n || chars.len() != n || chars.iter().any(|c| c.len() != r) || gens.iter().any(|g| g.len() > r) {
            return bad("dimension mismatch".into());
        }
        for (j, row) in chars.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                if c.inverse().is_none() {
                    return bad(format!("chi_{}(e_{}) is not a unit", j + 1, k + 1));
                }
                if moduli[k] > 0 && !c.pow_i(moduli[k] as i64).expect("unit").is_one() {
                    return bad(format!("chi_{}(e_{}) has order not dividing {}", j + 1, k + 1, moduli[k]));
                }
            }
        }
        let mut spec = GroupSpec { moduli, gens: Vec::new(), chars };
        spec.gens = gens.into_iter().map(|g| spec.canonical(g)).collect();
        for i in 0..n {
            for j in 0..n {
                if spec.chi(j, &spec.gens[i]) != *q.q(i, j) {
                    return bad(format!("chi_{}(g_{}) != q_{}{}", j + 1, i + 1, i + 1, j + 1));
                }
            }
        }
        Ok(spec)
    }

    pub fn is_finite(&self) -> bool {
        self.moduli.iter().all(|&m| m > 0)
    }

    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.moduli.iter().map(|&m| m as u64).product())
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn canonical(&self, mut e: Vec<i64>) -> GroupWord {
        for (k, x) in e.iter_mut().enumerate() {
            let m = self.moduli.get(k).copied().unwrap_or(0);
            if m > 0 {
                *x = x.rem_euclid(m as i64);
            }
        }
        GroupWord::new(e)
    }

    pub fn mul(&self, a: &GroupWord, b: &GroupWord) -> GroupWord {
        let n = a.0.len().max(b.0.len());
        self.canonical((0..n).map(|k| a.exponent(k) + b.exponent(k)).collect())
    }

    pub fn pow(&self, a: &GroupWord, e: i64) -> GroupWord {
        self.canonical(a.0.iter().map(|x| x * e).collect())
    }

    /// Image of `g_i`.
    pub fn g(&self, i: usize) -> &GroupWord {
        &self.gens[i]
    }

    /// `g^d = prod_i g_i^(d_i)`.
    pub fn g_of_degree(&self, d: &[i64]) -> GroupWord {
        let mut acc = GroupWord::identity();
        for (i, &e) in d.iter().enumerate() {
            if e != 0 {
                acc = self.mul(&acc, &self.pow(&self.gens[i], e));
            }
        }
        acc
    }

    /// `chi_j(g)`.
    pub fn chi(&self, j: usize, g: &GroupWord) -> C {
        let mut acc = C::one();
        for (k, &e) in g.0.iter().enumerate() {
            if e != 0 {
                acc = acc.times(&self.chars[j][k].pow_i(e).expect("unit"));
            }
        }
        acc
    }

    /// `chi^d(g) = prod_j chi_j(g)^(d_j)`.
    pub fn chi_degree(&self, d: &[i64], g: &GroupWord) -> C {
        let mut acc = C::one();
        for (j, &e) in d.iter().enumerate() {
            if e != 0 {
                acc = acc.times(&self.chi(j, g).pow_i(e).expect("unit"));
            }
        }
        acc
    }

    /// Values of `chi^d` on the group generators; equal vectors mean equal characters.
    pub fn character_values(&self, d: &[i64]) -> Vec<C> {
        (0..self.moduli.len()).map(|k| self.chi_degree(d, &unit(k, 1))).collect()
    }

    pub fn is_trivial_character(&self, d: &[i64]) -> bool {
        self.character_values(d).iter().all(|c| c.is_one())
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> GroupSpec<D> {
        GroupSpec {
            moduli: self.moduli.clone(),
            gens: self.gens.clone(),
            chars: self.chars.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }
}

fn unit(k: usize, e: i64) -> GroupWord {
    let mut v = vec![0; k + 1];
    v[k] = e;
    GroupWord::new(v)
}

/// A normal-form monomial `w g`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Term {
    pub word: Word,
    pub group: GroupWord,
}

impl Term {
    pub fn new(word: Word, group: GroupWord) -> Self {
        Term { word, group }
    }

    pub fn one() -> Self {
        Term::default()
    }
}

impl Ord for Term {
    /// Graded lexicographic on the word, then the group exponents.
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.group.cmp(&other.group))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.word.is_empty(), self.group.is_identity()) {
            (true, true) => f.write_str("1"),
            (false, true) => write!(f, "{}", self.word),
            (true, false) => write!(f, "{}", self.group),
            (false, false) => write!(f, "{} {}", self.word, self.group),
        }
    }
}

/// An element of `k<X> # k[G]` as a sum of `c * w g`.
#[derive(Clone, PartialEq, Debug)]
pub struct SmashElement<C> {
    terms: BTreeMap<Term, C>,
}

impl<C: Coefficient> Default for SmashElement<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> SmashElement<C> {
    pub fn zero() -> Self {
        SmashElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Term::one(), C::one())
    }

    pub fn scalar(c: C) -> Self {
        Self::monomial(Term::one(), c)
    }

    pub fn monomial(t: Term, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(t, c);
        }
        SmashElement { terms }
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(Term::new(w, GroupWord::identity()), C::one())
    }

    /// `x_(i+1)` for 0-based `i`.
    pub fn generator(i: u8) -> Self {
        Self::word(Word::letter(i))
    }

    pub fn group(g: GroupWord) -> Self {
        Self::monomial(Term::new(Word::default(), g), C::one())
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Term, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Term, C)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, t: &Term) -> C {
        self.terms.get(t).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, t: Term, c: C) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
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

    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        if c.is_zero() {
            return;
        }
        for (t, x) in &other.terms {
            self.add_term(t.clone(), x.times(c));
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.negated());
        }
        out
    }

    pub fn negated(&self) -> Self {
        SmashElement { terms: self.terms.iter().map(|(t, c)| (t.clone(), c.negated())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (t, x) in &self.terms {
            out.add_term(t.clone(), x.times(c));
        }
        out
    }

    /// Multiplies every group part on the right by `g` (no twisting needed).
    pub fn times_group(&self, g: &GroupWord, group: &GroupSpec<C>) -> Self {
        let mut out = Self::zero();
        for (t, c) in &self.terms {
            out.add_term(Term::new(t.word.clone(), group.mul(&t.group, g)), c.clone());
        }
        out
    }

    /// The common letter multidegree, `None` if terms disagree; zero has none.
    pub fn multidegree(&self, theta: usize) -> Option<Vec<i64>> {
        let mut it = self.terms.keys().map(|t| t.word.multidegree(theta));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> SmashElement<D> {
        let mut out = SmashElement::zero();
        for (t, c) in &self.terms {
            out.add_term(t.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coefficient, E>(&self, f: impl Fn(&C) -> Result<D, E>) -> Result<SmashElement<D>, E> {
        let mut out = SmashElement::zero();
        for (t, c) in &self.terms {
            out.add_term(t.clone(), f(c)?);
        }
        Ok(out)
    }

    /// The largest word length occurring.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|t| t.word.len()).max().unwrap_or(0)
    }

    /// Text form in the element grammar, `z` of order `n`.
    pub fn to_syntax(&self, n: u32) -> String {
        let mut out = String::new();
        for (t, c) in &self.terms {
            let (neg, body) = coefficient_text(c, n);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let tt = t.to_string();
            match (body.is_empty(), tt == "1") {
                (true, _) => out.push_str(&tt),
                (false, true) => out.push_str(&body),
                (false, false) => {
                    out.push_str(&body);
                    out.push(' ');
                    out.push_str(&tt);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Sign and body of a coefficient; an empty body means unit magnitude.
pub(crate) fn coefficient_text<C: Coefficient>(c: &C, n: u32) -> (bool, String) {
    let s = c.to_syntax(n);
    let single = !s[1..].contains(" + ") && !s[1..].contains(" - ");
    if single {
        let (neg, mag) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, s),
        };
        if mag == "1" {
            (neg, String::new())
        } else {
            (neg, mag)
        }
    } else {
        (false, format!("({s})"))
    }
}

impl<C: Coefficient> fmt::Display for SmashElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.terms.values().fold(1u32, |acc, c| num_integer::lcm(acc, c.root_order()));
        f.write_str(&self.to_syntax(n))
    }
}

/// The smash product for a fixed braiding and group.
pub struct SmashAlgebra<C: Coefficient> {
    braiding: BraidingMatrix<C>,
    group: GroupSpec<C>,
    twist_cache: RwLock<HashMap<(GroupWord, Vec<i64>), C>>,
    letter_cache: RwLock<HashMap<Word, SmashElement<C>>>,
}

impl<C: Coefficient> SmashAlgebra<C> {
    /// Over the free group `Z^theta`.
    pub fn new(braiding: BraidingMatrix<C>) -> Self {
        let group = GroupSpec::free(&braiding);
        Self::with_group(braiding, group)
    }

    pub fn with_group(braiding: BraidingMatrix<C>, group: GroupSpec<C>) -> Self {
        SmashAlgebra {
            braiding,
            group,
            twist_cache: RwLock::new(HashMap::new()),
            letter_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn braiding(&self) -> &BraidingMatrix<C> {
        &self.braiding
    }

    pub fn group(&self) -> &GroupSpec<C> {
        &self.group
    }

    pub fn theta(&self) -> usize {
        self.braiding.rank()
    }

    /// `chi_w(g)` for a word of multidegree `d`.
    pub fn twist(&self, g: &GroupWord, d: &[i64]) -> C {
        if g.is_identity() || d.iter().all(|&e| e == 0) {
            return C::one();
        }
        let key = (g.clone(), d.to_vec());
        if let Some(c) = self.twist_cache.read().expect("twist cache").get(&key) {
            return c.clone();
        }
        let c = self.group.chi_degree(d, g);
        self.twist_cache.write().expect("twist cache").insert(key, c.clone());
        c
    }

    /// `(w1 g1)(w2 g2) = chi_(w2)(g1) w1 w2 g1 g2`.
    pub fn mul_terms(&self, a: &Term, b: &Term) -> (Term, C) {
        let c = self.twist(&a.group, &b.word.multidegree(self.theta()));
        (Term::new(a.word.concat(&b.word), self.group.mul(&a.group, &b.group)), c)
    }

    pub fn mul(&self, a: &SmashElement<C>, b: &SmashElement<C>) -> SmashElement<C> {
        let mut out = SmashElement::zero();
        for (ta, ca) in &a.terms {
            for (tb, cb) in &b.terms {
                let (t, c) = self.mul_terms(ta, tb);
                out.add_term(t, ca.times(cb).times(&c));
            }
        }
        out
    }

    pub fn power(&self, a: &SmashElement<C>, n: u32) -> SmashElement<C> {
        (0..n).fold(SmashElement::one(), |acc, _| self.mul(&acc, a))
    }

    /// `q_(a,b)` on letter multidegrees.
    pub fn bicharacter(&self, a: &[i64], b: &[i64]) -> C {
        self.braiding.bicharacter(a, b)
    }

    /// `[a, b] = ab - q_(a,b) ba` for homogeneous `a`, `b`.
    pub fn commutator(&self, a: &SmashElement<C>, b: &SmashElement<C>) -> Result<SmashElement<C>, SmashError> {
        if a.is_zero() || b.is_zero() {
            return Ok(SmashElement::zero());
        }
        let n = self.theta();
        let da = a.multidegree(n).ok_or(SmashError::NotHomogeneous)?;
        let db = b.multidegree(n).ok_or(SmashError::NotHomogeneous)?;
        Ok(self.commutator_with(a, b, &self.bicharacter(&da, &db)))
    }

    /// `ab - q ba` with an explicit `q`.
    pub fn commutator_with(&self, a: &SmashElement<C>, b: &SmashElement<C>, q: &C) -> SmashElement<C> {
        let mut out = self.mul(a, b);
        out.add_scaled(&self.mul(b, a), &q.negated());
        out
    }

    /// The super letter `[u]`, expanded recursively through Shirshov decompositions.
    pub fn super_letter(&self, u: &Word) -> Result<SmashElement<C>, SmashError> {
        if !u.is_lyndon()? {
            return Err(LyndonError::NotLyndon(u.clone()).into());
        }
        if u.len() == 1 {
            return Ok(SmashElement::word(u.clone()));
        }
        if let Some(e) = self.letter_cache.read().expect("letter cache").get(u) {
            return Ok(e.clone());
        }
        let (v, w) = u.shirshov()?;
        let e = self.commutator(&self.super_letter(&v)?, &self.super_letter(&w)?)?;
        self.letter_cache.write().expect("letter cache").insert(u.clone(), e.clone());
        Ok(e)
    }

    /// Product of super letters.
    pub fn super_word(&self, factors: &[Word]) -> Result<SmashElement<C>, SmashError> {
        let mut acc = SmashElement::one();
        for f in factors {
            acc = self.mul(&acc, &self.super_letter(f)?);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    fn generic() -> SmashAlgebra<Scalar> {
        let p = Scalar::param;
        SmashAlgebra::new(BraidingMatrix::new(vec![vec![p("q11"), p("q12")], vec![p("q21"), p("q22")]]).unwrap())
    }

    #[test]
    fn group_moves_right() {
        let a = generic();
        let g1 = SmashElement::group(GroupWord::new(vec![1]));
        let x2 = SmashElement::generator(1);
        let expected = SmashElement::monomial(Term::new(Word::letter(1), GroupWord::new(vec![1])), Scalar::param("q12"));
        assert_eq!(a.mul(&g1, &x2), expected);
    }

    #[test]
    fn super_letter_x1x2() {
        let a = generic();
        let e = a.super_letter(&"12".parse().unwrap()).unwrap();
        let mut expected = SmashElement::word("12".parse().unwrap());
        expected.add_term(Term::new("21".parse().unwrap(), GroupWord::identity()), Scalar::param("q12").negated());
        assert_eq!(e, expected);
        assert_eq!(a.super_letter(&"11212".parse().unwrap()).unwrap().multidegree(2), Some(vec![3, 2]));
    }

    #[test]
    fn commutator_with_one_vanishes() {
        let a = generic();
        let x1 = SmashElement::generator(0);
        assert!(a.commutator(&x1, &SmashElement::one()).unwrap().is_zero());
        let mixed = x1.plus(&SmashElement::generator(1));
        assert_eq!(a.commutator(&mixed, &x1), Err(SmashError::NotHomogeneous));
    }
}
