//! Coproducts in the smash product and skew-primitivity tests.
//!
//! `Delta(x_i) = x_i (x) 1 + g_i (x) x_i` and `Delta(g) = g (x) g`. The tensor
//! square is multiplied leg by leg.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use crate::lyndon::Word;
use crate::scalars::Coefficient;
use crate::smash::{coefficient_text, ExprAlgebra, ExprError, GroupWord, SmashAlgebra, SmashElement, Term};

/// Anything that maps smash elements to normal forms modulo an ideal.
pub trait LegReducer<C: Coefficient>: Sync {
    fn reduce_leg(&self, a: &SmashElement<C>) -> Result<SmashElement<C>, ExprError>;
}

/// An element of `A (x) A`.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorElement<C> {
    terms: BTreeMap<(Term, Term), C>,
}

impl<C: Coefficient> Default for TensorElement<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> TensorElement<C> {
    pub fn zero() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::pure(Term::one(), Term::one(), C::one())
    }

    pub fn pure(a: Term, b: Term, c: C) -> Self {
        let mut t = Self::zero();
        t.add_term(a, b, c);
        t
    }

    /// `a (x) b` for elements.
    pub fn tensor(a: &SmashElement<C>, b: &SmashElement<C>) -> Self {
        let mut t = Self::zero();
        for (ta, ca) in a.terms() {
            for (tb, cb) in b.terms() {
                t.add_term(ta.clone(), tb.clone(), ca.times(cb));
            }
        }
        t
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

    pub fn terms(&self) -> impl Iterator<Item = (&(Term, Term), &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, a: &Term, b: &Term) -> C {
        self.terms.get(&(a.clone(), b.clone())).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, a: Term, b: Term, c: C) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
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

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.negated());
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for ((a, b), x) in &self.terms {
            out.add_term(a.clone(), b.clone(), x.times(c));
        }
        out
    }

    /// Leg-wise product without braiding.
    pub fn mul(&self, other: &Self, alg: &SmashAlgebra<C>) -> Self {
        let mut out = Self::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let (a, ca) = alg.mul_terms(a1, a2);
                let (b, cb) = alg.mul_terms(b1, b2);
                out.add_term(a, b, c1.times(c2).times(&ca).times(&cb));
            }
        }
        out
    }

    /// Applies a linear map to the right legs and then to the left legs.
    pub fn map_legs(
        &self,
        f: &dyn Fn(&SmashElement<C>) -> Result<SmashElement<C>, ExprError>,
    ) -> Result<Self, ExprError> {
        let mut by_left: BTreeMap<Term, SmashElement<C>> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            by_left.entry(a.clone()).or_default().add_term(b.clone(), c.clone());
        }
        let mut by_right: BTreeMap<Term, SmashElement<C>> = BTreeMap::new();
        for (a, right) in by_left {
            for (b, c) in f(&right)?.into_terms() {
                by_right.entry(b).or_default().add_term(a.clone(), c);
            }
        }
        let mut out = Self::zero();
        for (b, left) in by_right {
            for (a, c) in f(&left)?.into_terms() {
                out.add_term(a, b.clone(), c);
            }
        }
        Ok(out)
    }

    pub fn reduce_legs(&self, r: &dyn LegReducer<C>) -> Result<Self, ExprError> {
        self.map_legs(&|e| r.reduce_leg(e))
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> TensorElement<D> {
        let mut out = TensorElement::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(a.clone(), b.clone(), f(c));
        }
        out
    }

    /// Text form, legs joined by `(x)`.
    pub fn to_syntax(&self, n: u32) -> String {
        let mut out = String::new();
        for ((a, b), c) in &self.terms {
            let (neg, body) = coefficient_text(c, n);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !body.is_empty() {
                out.push_str(&body);
                out.push(' ');
            }
            out.push_str(&format!("{a} (x) {b}"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<C: Coefficient> fmt::Display for TensorElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.terms.values().fold(1u32, |acc, c| num_integer::lcm(acc, c.root_order()));
        f.write_str(&self.to_syntax(n))
    }
}

/// `Delta(x_i)`.
pub fn coproduct_generator<C: Coefficient>(alg: &SmashAlgebra<C>, i: u8) -> TensorElement<C> {
    let x = Term::new(Word::letter(i), GroupWord::identity());
    let g = Term::new(Word::default(), alg.group().g(i as usize).clone());
    let mut t = TensorElement::pure(x.clone(), Term::one(), C::one());
    t.add_term(g, x, C::one());
    t
}

/// `Delta(g) = g (x) g`.
pub fn coproduct_group<C: Coefficient>(g: &GroupWord) -> TensorElement<C> {
    let t = Term::new(Word::default(), g.clone());
    TensorElement::pure(t.clone(), t, C::one())
}

/// The coproduct of an expanded element.
pub fn coproduct<C: Coefficient>(alg: &SmashAlgebra<C>, a: &SmashElement<C>) -> TensorElement<C> {
    let mut cache: HashMap<Word, TensorElement<C>> = HashMap::new();
    let mut out = TensorElement::zero();
    for (t, c) in a.terms() {
        let dw = word_coproduct(alg, &t.word, &mut cache);
        let dt = dw.mul(&coproduct_group(&t.group), alg);
        out = out.plus(&dt.scale(c));
    }
    out
}

fn word_coproduct<C: Coefficient>(
    alg: &SmashAlgebra<C>,
    w: &Word,
    cache: &mut HashMap<Word, TensorElement<C>>,
) -> TensorElement<C> {
    if w.is_empty() {
        return TensorElement::one();
    }
    if let Some(t) = cache.get(w) {
        return t.clone();
    }
    let letters = w.letters();
    let prefix = Word::new(letters[..letters.len() - 1].to_vec());
    let head = word_coproduct(alg, &prefix, cache);
    let t = head.mul(&coproduct_generator(alg, letters[letters.len() - 1]), alg);
    cache.insert(w.clone(), t.clone());
    t
}

/// `Delta(a) - a (x) 1 - g (x) a`.
pub fn skew_defect<C: Coefficient>(alg: &SmashAlgebra<C>, a: &SmashElement<C>, g: &GroupWord) -> TensorElement<C> {
    coproduct(alg, a)
        .minus(&TensorElement::tensor(a, &SmashElement::one()))
        .minus(&TensorElement::tensor(&SmashElement::group(g.clone()), a))
}

pub fn is_skew_primitive<C: Coefficient>(alg: &SmashAlgebra<C>, a: &SmashElement<C>, g: &GroupWord) -> bool {
    skew_defect(alg, a, g).is_zero()
}

/// `Delta(e) - e (x) 1 - g (x) e` with both legs reduced by `r`. A zero result
/// shows `e` is `(1, g)`-skew-primitive modulo the ideal behind `r`.
pub fn skew_defect_mod<C: Coefficient>(
    alg: &SmashAlgebra<C>,
    e: &crate::smash::Expr<C>,
    g: &GroupWord,
    r: &dyn LegReducer<C>,
) -> Result<TensorElement<C>, ExprError> {
    let delta = e.eval(&DeltaAlgebra::new(alg, Some(r)))?;
    let a = r.reduce_leg(&e.eval(alg)?)?;
    let g = alg.group().canonical(g.exponents().to_vec());
    delta
        .minus(&TensorElement::tensor(&a, &SmashElement::one()))
        .minus(&TensorElement::tensor(&SmashElement::group(g), &a))
        .reduce_legs(r)
}

/// Evaluates expressions directly in `A (x) A`, optionally reducing both legs
/// after every product. Super letters are memoized.
pub struct DeltaAlgebra<'a, C: Coefficient> {
    alg: &'a SmashAlgebra<C>,
    reducer: Option<&'a dyn LegReducer<C>>,
    letters: RwLock<HashMap<Word, TensorElement<C>>>,
}

impl<'a, C: Coefficient> DeltaAlgebra<'a, C> {
    pub fn new(alg: &'a SmashAlgebra<C>, reducer: Option<&'a dyn LegReducer<C>>) -> Self {
        DeltaAlgebra { alg, reducer, letters: RwLock::new(HashMap::new()) }
    }

    fn reduce(&self, t: TensorElement<C>) -> Result<TensorElement<C>, ExprError> {
        match self.reducer {
            Some(r) => t.reduce_legs(r),
            None => Ok(t),
        }
    }
}

impl<C: Coefficient> ExprAlgebra<C> for DeltaAlgebra<'_, C> {
    type Elem = TensorElement<C>;

    fn theta(&self) -> usize {
        self.alg.theta()
    }
    fn scalar(&self, c: &C) -> Self::Elem {
        TensorElement::pure(Term::one(), Term::one(), c.clone())
    }
    fn generator(&self, i: u8) -> Self::Elem {
        coproduct_generator(self.alg, i)
    }
    fn group_element(&self, g: &GroupWord) -> Self::Elem {
        coproduct_group(&self.alg.group().canonical(g.exponents().to_vec()))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.plus(b)
    }
    fn scale(&self, a: &Self::Elem, c: &C) -> Self::Elem {
        a.scale(c)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ExprError> {
        self.reduce(a.mul(b, self.alg))
    }
    fn bicharacter(&self, a: &[i64], b: &[i64]) -> C {
        self.alg.bicharacter(a, b)
    }
    fn super_letter(&self, u: &Word) -> Result<Self::Elem, ExprError> {
        if let Some(t) = self.letters.read().expect("letter cache").get(u) {
            return Ok(t.clone());
        }
        let t = crate::smash::default_super_letter(self, u)?;
        self.letters.write().expect("letter cache").insert(u.clone(), t.clone());
        Ok(t)
    }
    fn power(&self, a: &Self::Elem, n: u32) -> Result<Self::Elem, ExprError> {
        // Square-and-multiply keeps intermediate legs reduced.
        let mut acc = self.scalar(&C::one());
        let mut base = a.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::BraidingMatrix;
    use crate::syntax::parse_expr;
    use crate::Scalar;

    fn alg() -> SmashAlgebra<Scalar> {
        let p = Scalar::param;
        SmashAlgebra::new(BraidingMatrix::new(vec![vec![p("q11"), p("q12")], vec![p("q21"), p("q22")]]).unwrap())
    }

    fn el(a: &SmashAlgebra<Scalar>, s: &str) -> SmashElement<Scalar> {
        parse_expr(s, 12).unwrap().eval(a).unwrap()
    }

    #[test]
    fn coproduct_of_x1x2_commutator() {
        let a = alg();
        let x = el(&a, "[x1 x2]");
        let d = coproduct(&a, &x);
        let mut expected = TensorElement::tensor(&x, &SmashElement::one());
        expected = expected.plus(&TensorElement::tensor(&el(&a, "(1 - q12 q21) x1 g2"), &el(&a, "x2")));
        expected = expected.plus(&TensorElement::tensor(&el(&a, "g1 g2"), &x));
        assert_eq!(d, expected);
    }

    #[test]
    fn structural_matches_expanded() {
        let a = alg();
        for s in ["[x1 x1 x2]", "[x1 x2]^2 x1", "[x1 x1 x2 x1 x2]"] {
            let e = parse_expr(s, 12).unwrap();
            let direct = coproduct(&a, &e.eval(&a).unwrap());
            let structural = e.eval(&DeltaAlgebra::new(&a, None)).unwrap();
            assert_eq!(direct, structural, "{s}");
        }
    }

    #[test]
    fn group_likes() {
        let a = alg();
        let g = GroupWord::new(vec![2, -1]);
        assert_eq!(coproduct(&a, &SmashElement::group(g.clone())), coproduct_group(&g));
        assert!(is_skew_primitive(&a, &SmashElement::generator(0), &GroupWord::new(vec![1])));
    }
}
