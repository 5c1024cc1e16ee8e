use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;

use super::{Coefficient, RationalScalar, ScalarError};

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    // x^n - 1 divided by every Phi_d, d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quo = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quo[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

struct CycloTable {
    phi: usize,
    /// `powers[k]` is z^k in the basis 1, z, ..., z^(phi-1), stored sparsely.
    powers: Vec<Vec<(usize, i64)>>,
}

fn build_table(n: u32) -> CycloTable {
    let poly = cyclotomic_polynomial(n);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(
            cur.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i, c))
                .collect(),
        );
        // multiply by z and reduce z^phi = -sum poly[i] z^i
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] -= top * poly[i];
            }
        }
    }
    CycloTable { phi, powers }
}

fn table(n: u32) -> Arc<CycloTable> {
    static TABLES: OnceLock<RwLock<HashMap<u32, Arc<CycloTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = tables.read().expect("cyclotomic table lock").get(&n) {
        return t.clone();
    }
    let t = Arc::new(build_table(n));
    tables
        .write()
        .expect("cyclotomic table lock")
        .entry(n)
        .or_insert(t)
        .clone()
}

/// An element of the cyclotomic field `Q(z_n)`.
///
/// Coordinates are taken in the power basis modulo the `n`-th cyclotomic
/// polynomial. Values that happen to be rational are kept at order 1.
#[derive(Clone, Debug)]
pub struct CycloNumber<Q> {
    order: u32,
    coeffs: Vec<Q>,
}

impl<Q: RationalScalar> CycloNumber<Q> {
    pub fn from_rational(q: Q) -> Self {
        CycloNumber { order: 1, coeffs: vec![q] }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Q::from_i64(v).expect("integer fits the rational type"))
    }

    /// `z_n^k`, the `k`-th power of the primitive root `exp(2 pi i / n)`.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n > 0, "root of unity of order 0");
        let t = table(n);
        let k = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![Q::zero(); t.phi];
        for &(i, c) in &t.powers[k] {
            coeffs[i] = q_of(c);
        }
        CycloNumber { order: n, coeffs }.normalized()
    }

    /// Builds a number from coordinates in the power basis of order `n`.
    pub fn from_coeffs(n: u32, coeffs: Vec<Q>) -> Self {
        let phi = euler_phi(n) as usize;
        assert_eq!(coeffs.len(), phi, "coordinate vector length must be phi(n)");
        CycloNumber { order: n, coeffs }.normalized()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn as_rational(&self) -> Option<&Q> {
        if self.order == 1 {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn normalized(mut self) -> Self {
        if self.order > 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            self.coeffs.truncate(1);
            self.order = 1;
        }
        self
    }

    /// Coordinates of `self` inside `Q(z_m)`; `m` must be a multiple of the order.
    pub fn embed_coeffs(&self, m: u32) -> Vec<Q> {
        assert!(m % self.order == 0, "cannot embed order {} into {}", self.order, m);
        if m == self.order {
            return self.coeffs.clone();
        }
        let t = table(m);
        let step = (m / self.order) as usize;
        let mut out = vec![Q::zero(); t.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, s) in &t.powers[(k * step) % m as usize] {
                accumulate(&mut out[i], c, s);
            }
        }
        out
    }

    fn common(&self, other: &Self) -> (u32, Vec<Q>, Vec<Q>) {
        let m = self.order.lcm(&other.order);
        (m, self.embed_coeffs(m), other.embed_coeffs(m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.order == other.order {
            let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
            return CycloNumber { order: self.order, coeffs }.normalized();
        }
        let (m, a, b) = self.common(other);
        let coeffs = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
        CycloNumber { order: m, coeffs }.normalized()
    }

    pub fn neg_ref(&self) -> Self {
        CycloNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn scale(&self, q: &Q) -> Self {
        if q.is_zero() {
            return Self::from_rational(Q::zero());
        }
        CycloNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.clone() * q.clone()).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if let Some(q) = self.as_rational() {
            return other.scale(q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale(q);
        }
        let (m, a, b) = self.common(other);
        let t = table(m);
        let mut conv = vec![Q::zero(); 2 * t.phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] = conv[i + j].clone() + x.clone() * y.clone();
                }
            }
        }
        let mut out: Vec<Q> = conv[..t.phi].to_vec();
        for (k, c) in conv.into_iter().enumerate().skip(t.phi) {
            if c.is_zero() {
                continue;
            }
            for &(i, s) in &t.powers[k % m as usize] {
                accumulate(&mut out[i], &c, s);
            }
        }
        CycloNumber { order: m, coeffs: out }.normalized()
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::InversionOfNonUnit(self.to_string()));
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(Q::one() / q.clone()));
        }
        let n = self.order;
        let t = table(n);
        let phi = t.phi;
        // Column j holds self * z^j; solve M y = e_0.
        let mut m: Vec<Vec<Q>> = vec![vec![Q::zero(); phi + 1]; phi];
        for j in 0..phi {
            let col = self.mul_ref(&Self::zeta(n, j as i64)).embed_coeffs(n);
            for (i, c) in col.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        m[0][phi] = Q::one();
        let y = solve_augmented(m).ok_or_else(|| ScalarError::InversionOfNonUnit(self.to_string()))?;
        Ok(CycloNumber { order: n, coeffs: y }.normalized())
    }

    pub fn powi(&self, e: i64) -> Result<Self, ScalarError> {
        <Self as Coefficient>::pow_i(self, e).ok_or_else(|| ScalarError::InversionOfNonUnit(self.to_string()))
    }

    /// The multiplicative order, `None` when `self` is not a root of unity.
    pub fn multiplicative_order(&self) -> Result<Option<u32>, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroInput);
        }
        let bound = self.order.lcm(&2);
        let one = Self::from_int(1);
        for d in 1..=bound {
            if bound % d == 0 && self.powi(d as i64)? == one {
                return Ok(Some(d));
            }
        }
        Ok(None)
    }

    /// The exponent `k` in `0..n` with `self == z_n^k`, if any.
    pub fn root_exponent(&self, n: u32) -> Option<u32> {
        if n % self.order != 0 {
            return None;
        }
        (0..n).find(|&k| *self == Self::zeta(n, k as i64))
    }

    /// Canonical text with `z` standing for `z_n`; `n` must be a multiple of the order.
    pub fn to_syntax(&self, n: u32) -> String {
        let terms: Vec<(Q, u32)> = self
            .embed_coeffs(n)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c, k as u32))
            .collect();
        let mut out = String::new();
        for (idx, (c, k)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&term_text(&abs, *k, ""));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Renders `c * z^k * rest` with unit factors elided.
pub(crate) fn term_text<Q: RationalScalar>(c: &Q, k: u32, rest: &str) -> String {
    let mut parts: Vec<String> = Vec::new();
    if !c.is_one() || (k == 0 && rest.is_empty()) {
        parts.push(c.to_string());
    }
    match k {
        0 => {}
        1 => parts.push("z".into()),
        _ => parts.push(format!("z^{k}")),
    }
    if !rest.is_empty() {
        parts.push(rest.to_string());
    }
    parts.join("*")
}

fn q_of<Q: RationalScalar>(c: i64) -> Q {
    Q::from_i64(c).expect("integer fits the rational type")
}

fn accumulate<Q: RationalScalar>(slot: &mut Q, c: &Q, s: i64) {
    match s {
        1 => *slot = slot.clone() + c.clone(),
        -1 => *slot = slot.clone() - c.clone(),
        _ => *slot = slot.clone() + c.clone() * q_of::<Q>(s),
    }
}

/// Gauss-Jordan on an augmented square system; `None` when singular.
fn solve_augmented<Q: RationalScalar>(mut m: Vec<Vec<Q>>) -> Option<Vec<Q>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = Q::one() / m[col][col].clone();
        for v in m[col].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let sub = f.clone() * m[col][c].clone();
                    m[r][c] = m[r][c].clone() - sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

impl<Q: RationalScalar> PartialEq for CycloNumber<Q> {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (_, a, b) = self.common(other);
        a == b
    }
}

impl<Q: RationalScalar> Eq for CycloNumber<Q> {}

impl<Q: RationalScalar> fmt::Display for CycloNumber<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_syntax(self.order))
    }
}

impl<Q: RationalScalar> Add for CycloNumber<Q> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<Q: RationalScalar> Sub for CycloNumber<Q> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl<Q: RationalScalar> Mul for CycloNumber<Q> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<Q: RationalScalar> Neg for CycloNumber<Q> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl<Q: RationalScalar> Coefficient for CycloNumber<Q> {
    type Rational = Q;

    fn zero() -> Self {
        Self::from_int(0)
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn from_i64(v: i64) -> Self {
        Self::from_int(v)
    }
    fn from_cyclo(c: CycloNumber<Q>) -> Self {
        c
    }
    fn is_zero(&self) -> bool {
        CycloNumber::is_zero(self)
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
        CycloNumber::inverse(self).ok()
    }
    fn as_cyclo(&self) -> Option<CycloNumber<Q>> {
        Some(self.clone())
    }
    fn to_syntax(&self, n: u32) -> String {
        CycloNumber::to_syntax(self, n)
    }
    fn root_order(&self) -> u32 {
        self.order
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type C = CycloNumber<BigRational>;

    /// Schoolbook remainder of `x^k` modulo a monic integer polynomial.
    fn long_division_remainder(k: usize, modulus: &[i64]) -> Vec<i64> {
        let mut rem = vec![0i64; k + 1];
        rem[k] = 1;
        let d = modulus.len() - 1;
        for top in (d..=k).rev() {
            let c = rem[top];
            if c != 0 {
                for (j, &m) in modulus.iter().enumerate() {
                    rem[top - d + j] -= c * m;
                }
            }
        }
        rem.resize(d, 0);
        rem
    }

    #[test]
    fn phi_12_is_quartic() {
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
    }

    #[test]
    fn zeta_powers_match_long_division() {
        let modulus = cyclotomic_polynomial(12);
        for k in 0..30 {
            let expected: Vec<BigRational> = long_division_remainder(k, &modulus)
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect();
            assert_eq!(C::zeta(12, k as i64).embed_coeffs(12), expected, "k = {k}");
        }
    }

    #[test]
    fn zeta6_plus_one_vanishes() {
        assert!((C::zeta(12, 6) + C::from_int(1)).is_zero());
    }

    #[test]
    fn orders() {
        assert_eq!(C::zeta(12, 1).multiplicative_order().unwrap(), Some(12));
        assert_eq!((-C::zeta(12, -2)).multiplicative_order().unwrap(), Some(3));
        assert_eq!(C::from_int(2).multiplicative_order().unwrap(), None);
        assert!(C::from_int(0).multiplicative_order().is_err());
    }

    #[test]
    fn inverse_of_nonunit_fails() {
        assert!(C::from_int(0).inverse().is_err());
        let x = C::zeta(12, 1) + C::from_int(2);
        assert_eq!(x.inverse().unwrap() * x, C::from_int(1));
    }

    #[test]
    fn mixed_orders_embed() {
        assert_eq!(C::zeta(4, 1), C::zeta(12, 3));
        assert_eq!(C::zeta(3, 1) * C::zeta(4, 1), C::zeta(12, 7));
    }

    #[test]
    fn syntax_text() {
        assert_eq!((C::zeta(12, 2) - C::from_int(1)).to_syntax(12), "-1 + z^2");
        assert_eq!(C::zeta(12, 4).to_syntax(12), "-1 + z^2");
        assert_eq!(C::from_int(0).to_syntax(12), "0");
    }
}
