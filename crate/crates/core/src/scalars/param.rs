use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use super::cyclotomic::term_text;
use super::{Coefficient, CycloNumber, RationalScalar, ScalarError};

/// A named formal parameter.
///
/// Invertible parameters (braiding entries such as `q12`) may carry negative
/// exponents; plain ones (`lam112`, `mu1`) may not.
#[derive(Clone, Debug)]
pub struct Param {
    name: Arc<str>,
    invertible: bool,
}

impl Param {
    /// Parameters named `q...` are invertible, all others are plain.
    pub fn new(name: &str) -> Self {
        Param { name: name.into(), invertible: name.starts_with('q') }
    }

    pub fn with_kind(name: &str, invertible: bool) -> Self {
        Param { name: name.into(), invertible }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_invertible(&self) -> bool {
        self.invertible
    }
}

impl PartialEq for Param {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}
impl Eq for Param {}
impl PartialOrd for Param {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Param {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.name.cmp(&other.name)
    }
}

/// A product of parameter powers, sorted by name, no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(Param, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(p: Param, e: i32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(p, e)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Param, i32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (&self.0[i], &other.0[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a.1 + b.1;
                    if e != 0 {
                        out.push((a.0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    fn pow(&self, e: i32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(p, k)| (p.clone(), k * e)).collect())
    }

    fn is_unit(&self) -> bool {
        self.0.iter().all(|(p, _)| p.invertible)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(p, e)| if *e == 1 { p.name.to_string() } else { format!("{}^{}", p.name, e) })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// A Laurent polynomial in named parameters with cyclotomic coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamScalar<Q: RationalScalar> {
    terms: BTreeMap<Monomial, CycloNumber<Q>>,
}

impl<Q: RationalScalar> ParamScalar<Q> {
    pub fn zero() -> Self {
        ParamScalar { terms: BTreeMap::new() }
    }

    pub fn constant(c: CycloNumber<Q>) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: CycloNumber<Q>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ParamScalar { terms }
    }

    /// The parameter `name`, invertible iff the name starts with `q`.
    pub fn param(name: &str) -> Self {
        Self::term(Monomial::var(Param::new(name), 1), CycloNumber::from_int(1))
    }

    pub fn param_of(p: Param) -> Self {
        Self::term(Monomial::var(p, 1), CycloNumber::from_int(1))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycloNumber<Q>)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn params(&self) -> BTreeSet<Param> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|(p, _)| p.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(&mut self, m: Monomial, c: CycloNumber<Q>) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> Self {
        ParamScalar { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg_ref())).collect() }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.neg_ref());
        }
        out
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_add(m1.mul(m2), c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &CycloNumber<Q>) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamScalar { terms: self.terms.iter().map(|(m, x)| (m.clone(), x.mul_ref(c))).collect() }
    }

    /// Inverse of a single term built from nonzero constants and invertible parameters.
    pub fn inverse_unit(&self) -> Result<Self, ScalarError> {
        let err = || ScalarError::InversionOfNonUnit(self.to_string());
        if self.terms.len() != 1 {
            return Err(err());
        }
        let (m, c) = self.terms.iter().next().expect("one term");
        if !m.is_unit() {
            return Err(err());
        }
        Ok(Self::term(m.pow(-1), c.inverse().map_err(|_| err())?))
    }

    pub fn powi(&self, e: i64) -> Result<Self, ScalarError> {
        <Self as Coefficient>::pow_i(self, e).ok_or_else(|| ScalarError::InversionOfNonUnit(self.to_string()))
    }

    /// Evaluates with every parameter assigned a number.
    pub fn instantiate(&self, values: &HashMap<String, CycloNumber<Q>>) -> Result<CycloNumber<Q>, ScalarError> {
        let mut acc = CycloNumber::from_int(0);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (p, e) in &m.0 {
                let v = values.get(p.name()).ok_or_else(|| ScalarError::MissingParameter(p.name().to_string()))?;
                if p.invertible && v.is_zero() {
                    return Err(ScalarError::ZeroForInvertible(p.name().to_string()));
                }
                t = t.mul_ref(&v.powi(*e as i64)?);
            }
            acc = acc.add_ref(&t);
        }
        Ok(acc)
    }

    /// Replaces the listed parameters by scalars, leaving the others symbolic.
    pub fn substitute(&self, values: &HashMap<String, ParamScalar<Q>>) -> Result<Self, ScalarError> {
        if values.is_empty() {
            return Ok(self.clone());
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut t = Self::constant(c.clone());
            for (p, e) in &m.0 {
                match values.get(p.name()) {
                    Some(v) => {
                        if *e < 0 && p.invertible && v.is_zero() {
                            return Err(ScalarError::ZeroForInvertible(p.name().to_string()));
                        }
                        t = t.mul_ref(&v.powi(*e as i64)?);
                    }
                    None => kept = kept.mul(&Monomial::var(p.clone(), *e)),
                }
            }
            for (m2, c2) in t.terms {
                out.insert_add(kept.mul(&m2), c2);
            }
        }
        Ok(out)
    }

    /// The least order into which every coefficient embeds.
    pub fn root_order(&self) -> u32 {
        self.terms.values().fold(1u32, |acc, c| acc.lcm(&c.order()))
    }

    /// Canonical text with `z` standing for `z_n`.
    pub fn to_syntax(&self, n: u32) -> String {
        let mut out = String::new();
        for (m, c) in &self.terms {
            let rest = m.to_string();
            for (k, coeff) in c.embed_coeffs(n).into_iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let negative = coeff.is_negative();
                if out.is_empty() {
                    if negative {
                        out.push('-');
                    }
                } else {
                    out.push_str(if negative { " - " } else { " + " });
                }
                out.push_str(&term_text(&coeff.abs(), k as u32, &rest));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<Q: RationalScalar> fmt::Display for ParamScalar<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_syntax(self.root_order()))
    }
}

impl<Q: RationalScalar> From<CycloNumber<Q>> for ParamScalar<Q> {
    fn from(c: CycloNumber<Q>) -> Self {
        Self::constant(c)
    }
}

impl<Q: RationalScalar> Coefficient for ParamScalar<Q> {
    type Rational = Q;

    fn zero() -> Self {
        ParamScalar::zero()
    }
    fn one() -> Self {
        Self::constant(CycloNumber::from_int(1))
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(CycloNumber::from_int(v))
    }
    fn from_cyclo(c: CycloNumber<Q>) -> Self {
        Self::constant(c)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub_ref(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn negated(&self) -> Self {
        self.neg_ref()
    }
    fn inverse(&self) -> Option<Self> {
        self.inverse_unit().ok()
    }
    fn as_cyclo(&self) -> Option<CycloNumber<Q>> {
        match self.terms.len() {
            0 => Some(CycloNumber::from_int(0)),
            1 => {
                let (m, c) = self.terms.iter().next().expect("one term");
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }
    fn to_syntax(&self, n: u32) -> String {
        ParamScalar::to_syntax(self, n)
    }
    fn root_order(&self) -> u32 {
        ParamScalar::root_order(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = ParamScalar<BigRational>;
    type C = CycloNumber<BigRational>;

    #[test]
    fn unit_inversion() {
        let x = P::constant(-C::zeta(12, 3)).mul_ref(&P::param("q12"));
        let inv = x.inverse_unit().unwrap();
        assert_eq!(inv, P::constant(-C::zeta(12, -3)).mul_ref(&P::param("q12").powi(-1).unwrap()));
        assert!(x.mul_ref(&inv).is_one());
    }

    #[test]
    fn plain_params_are_not_units() {
        assert!(P::param("mu1").inverse_unit().is_err());
        assert!(P::param("q12").add_ref(&P::one()).inverse_unit().is_err());
    }

    #[test]
    fn instantiate_to_zero() {
        let e = P::one().sub_ref(&P::param("q12").mul_ref(&P::param("q21")));
        let mut vals = HashMap::new();
        vals.insert("q12".to_string(), C::zeta(12, 1));
        vals.insert("q21".to_string(), C::zeta(12, -1));
        assert!(e.instantiate(&vals).unwrap().is_zero());
        vals.remove("q21");
        assert_eq!(e.instantiate(&vals), Err(ScalarError::MissingParameter("q21".into())));
    }

    #[test]
    fn substitute_eliminates() {
        let e = P::param("q12").mul_ref(&P::param("q21"));
        let mut vals = HashMap::new();
        vals.insert("q21".to_string(), P::constant(C::zeta(12, 5)).mul_ref(&P::param("q12").powi(-1).unwrap()));
        assert_eq!(e.substitute(&vals).unwrap(), P::constant(C::zeta(12, 5)));
    }

    #[test]
    fn display_is_flat() {
        let e = P::param("lam112").scale(&(C::zeta(12, 1) - C::from_int(2)));
        assert_eq!(e.to_syntax(12), "-2*lam112 + z*lam112");
    }
}
