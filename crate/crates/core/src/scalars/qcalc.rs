//! Quantum integers, factorials and Gaussian binomials.
//!
//! Each quantity is first built as an integer polynomial in `q` and then
//! evaluated, so the results stay correct at roots of unity where naive
//! quotients would divide by zero.

use super::{Coefficient, ScalarError};

/// Which q-quantity to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QKind {
    Number,
    Factorial,
    Binomial,
}

fn check(n: i64, i: i64) -> Result<(), ScalarError> {
    if n < 0 || i < 0 || i > n {
        Err(ScalarError::IndexOutOfRange { n, i })
    } else {
        Ok(())
    }
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j]
                .checked_add(x.checked_mul(*y).expect("q-polynomial coefficient overflow"))
                .expect("q-polynomial coefficient overflow");
        }
    }
    out
}

/// Coefficients of `(n)_q = 1 + q + ... + q^(n-1)`.
pub fn q_number_poly(n: u32) -> Vec<i128> {
    if n == 0 {
        vec![0]
    } else {
        vec![1; n as usize]
    }
}

/// Coefficients of `(n)_q!`.
pub fn q_factorial_poly(n: u32) -> Vec<i128> {
    (1..=n).fold(vec![1], |acc, k| poly_mul(&acc, &q_number_poly(k)))
}

/// Coefficients of the Gaussian binomial, via `b(n,i) = b(n-1,i-1) + q^i b(n-1,i)`.
pub fn gaussian_binomial_poly(n: u32, i: u32) -> Vec<i128> {
    assert!(i <= n, "binomial index out of range");
    let mut row: Vec<Vec<i128>> = vec![vec![1]];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for k in 0..=m {
            let mut p = vec![0i128; (k * (m - k)) as usize + 1];
            if k >= 1 {
                for (d, c) in row[(k - 1) as usize].iter().enumerate() {
                    p[d] += c;
                }
            }
            if k < m {
                for (d, c) in row[k as usize].iter().enumerate() {
                    p[d + k as usize] += c;
                }
            }
            next.push(p);
        }
        row = next;
    }
    row.swap_remove(i as usize)
}

fn from_i128<C: Coefficient>(v: i128) -> C {
    if let Ok(small) = i64::try_from(v) {
        return C::from_i64(small);
    }
    let base = C::from_i64(1i64 << 62);
    let hi = v >> 62;
    let lo = v - (hi << 62);
    from_i128::<C>(hi).times(&base).plus(&C::from_i64(lo as i64))
}

/// Horner evaluation of an integer polynomial.
pub fn eval_poly<C: Coefficient>(coeffs: &[i128], q: &C) -> C {
    coeffs.iter().rev().fold(C::zero(), |acc, c| acc.times(q).plus(&from_i128(*c)))
}

/// Evaluates `(n)_q`, `(n)_q!` or the Gaussian binomial `(n choose i)_q`.
pub fn q_value<C: Coefficient>(kind: QKind, n: i64, i: i64, q: &C) -> Result<C, ScalarError> {
    check(n, if kind == QKind::Binomial { i } else { 0 })?;
    let n32 = u32::try_from(n).map_err(|_| ScalarError::IndexOutOfRange { n, i })?;
    Ok(match kind {
        QKind::Number => eval_poly(&q_number_poly(n32), q),
        QKind::Factorial => (1..=n32).fold(C::one(), |acc, k| acc.times(&eval_poly(&q_number_poly(k), q))),
        QKind::Binomial => eval_poly(&gaussian_binomial_poly(n32, i as u32), q),
    })
}

pub fn q_number<C: Coefficient>(n: i64, q: &C) -> Result<C, ScalarError> {
    q_value(QKind::Number, n, 0, q)
}

pub fn q_factorial<C: Coefficient>(n: i64, q: &C) -> Result<C, ScalarError> {
    q_value(QKind::Factorial, n, 0, q)
}

pub fn q_binomial<C: Coefficient>(n: i64, i: i64, q: &C) -> Result<C, ScalarError> {
    q_value(QKind::Binomial, n, i, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exact division of integer polynomials, used as an independent oracle.
    fn poly_div(num: &[i128], den: &[i128]) -> Vec<i128> {
        let mut rem = num.to_vec();
        let dd = den.len() - 1;
        let lead = den[dd];
        let mut quo = vec![0i128; rem.len() - dd];
        for k in (0..quo.len()).rev() {
            let c = rem[k + dd];
            assert_eq!(c % lead, 0);
            let qk = c / lead;
            quo[k] = qk;
            for (j, d) in den.iter().enumerate() {
                rem[k + j] -= qk * d;
            }
        }
        assert!(rem.iter().all(|&r| r == 0), "division not exact");
        quo
    }

    #[test]
    fn binomial_4_2_by_division() {
        let f4 = q_factorial_poly(4);
        let f2 = q_factorial_poly(2);
        let expected = poly_div(&poly_div(&f4, &f2), &f2);
        assert_eq!(expected, vec![1, 1, 2, 1, 1]);
        assert_eq!(gaussian_binomial_poly(4, 2), expected);
    }

    #[test]
    fn binomials_match_division_oracle() {
        for n in 0..=10u32 {
            for i in 0..=n {
                let expected = poly_div(&poly_div(&q_factorial_poly(n), &q_factorial_poly(i)), &q_factorial_poly(n - i));
                assert_eq!(gaussian_binomial_poly(n, i), expected, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn out_of_range() {
        let q = crate::Cyclo::from_int(2);
        assert!(matches!(q_binomial(3, 4, &q), Err(ScalarError::IndexOutOfRange { .. })));
        assert!(q_number(-1, &q).is_err());
    }
}
