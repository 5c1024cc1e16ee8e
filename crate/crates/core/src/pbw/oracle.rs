use std::collections::{BTreeMap, HashMap};

use super::PbwError;
use crate::lyndon::Word;
use crate::scalars::Coefficient;
use crate::smash::SmashElement;

type Vector<C> = BTreeMap<usize, C>;

/// Graded dimensions of `T(V)/I` for homogeneous, group-free relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub dims: Vec<usize>,
    pub total: u64,
}

/// One graded piece: a row-reduced span inside `A_{d-1} (x) V`.
struct Level<C> {
    pivots: HashMap<usize, Vector<C>>,
    /// Pre-column to basis index, for the non-pivot columns.
    basis_of: HashMap<usize, usize>,
    basis: Vec<Word>,
}

struct Oracle<C> {
    theta: usize,
    levels: Vec<Level<C>>,
    memo: HashMap<Word, Vector<C>>,
}

fn axpy<C: Coefficient>(v: &mut Vector<C>, c: &C, row: &Vector<C>) {
    for (k, x) in row {
        let s = match v.get(k) {
            Some(y) => y.plus(&x.times(c)),
            None => x.times(c),
        };
        if s.is_zero() {
            v.remove(k);
        } else {
            v.insert(*k, s);
        }
    }
}

impl<C: Coefficient> Oracle<C> {
    /// `coords(w[..d-1]) (x) w[d-1]` as a vector of pre-columns.
    fn pre(&mut self, w: &[u8]) -> Vector<C> {
        let (last, head) = w.split_last().expect("nonempty word");
        let prev = self.coords(head);
        prev.into_iter().map(|(b, c)| (b * self.theta + *last as usize, c)).collect()
    }

    fn coords(&mut self, w: &[u8]) -> Vector<C> {
        if w.is_empty() {
            return BTreeMap::from([(0, C::one())]);
        }
        let key = Word::new(w.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut v = self.pre(w);
        let level = &self.levels[w.len()];
        let hits: Vec<(usize, C)> = v.iter().filter(|(k, _)| level.pivots.contains_key(k)).map(|(k, c)| (*k, c.clone())).collect();
        for (k, c) in hits {
            axpy(&mut v, &c.negated(), &level.pivots[&k]);
        }
        let out: Vector<C> = v.into_iter().map(|(k, c)| (level.basis_of[&k], c)).collect();
        self.memo.insert(key, out.clone());
        out
    }

    fn insert_row(pivots: &mut HashMap<usize, Vector<C>>, mut row: Vector<C>) -> Result<(), PbwError> {
        let hits: Vec<(usize, C)> = row.iter().filter(|(k, _)| pivots.contains_key(k)).map(|(k, c)| (*k, c.clone())).collect();
        for (k, c) in hits {
            axpy(&mut row, &c.negated(), &pivots[&k]);
        }
        let Some((&p, c)) = row.iter().next() else {
            return Ok(());
        };
        let inv = c.inverse().ok_or(PbwError::NotNumeric)?;
        let row: Vector<C> = row.into_iter().map(|(k, x)| (k, x.times(&inv))).collect();
        for other in pivots.values_mut() {
            if let Some(c) = other.get(&p).cloned() {
                axpy(other, &c.negated(), &row);
            }
        }
        pivots.insert(p, row);
        Ok(())
    }
}

/// Computes `dim A_d` for `d <= bound` by rank counting. Errors if `A_bound`
/// is still nonzero.
pub fn span_dimension_oracle<C: Coefficient>(
    theta: usize,
    relations: &[SmashElement<C>],
    bound: usize,
) -> Result<OracleResult, PbwError> {
    let mut rels: Vec<(usize, Vec<(Word, C)>)> = Vec::new();
    for r in relations {
        if r.is_zero() {
            continue;
        }
        let deg = r.degree();
        let mut terms = Vec::new();
        for (t, c) in r.terms() {
            if !t.group.is_identity() || t.word.len() != deg {
                return Err(PbwError::NotNumeric);
            }
            terms.push((t.word.clone(), c.clone()));
        }
        rels.push((deg, terms));
    }
    let mut o: Oracle<C> = Oracle {
        theta,
        levels: vec![Level { pivots: HashMap::new(), basis_of: HashMap::from([(0, 0)]), basis: vec![Word::new(Vec::new())] }],
        memo: HashMap::new(),
    };
    let mut dims = vec![1usize];
    for d in 1..=bound {
        if dims[d - 1] == 0 {
            dims.push(0);
            continue;
        }
        // Install an empty level so `pre` can be used while rows are built.
        o.levels.push(Level { pivots: HashMap::new(), basis_of: HashMap::new(), basis: Vec::new() });
        let mut pivots = HashMap::new();
        for (k, terms) in &rels {
            if *k > d {
                continue;
            }
            let prefixes = o.levels[d - k].basis.clone();
            for u in prefixes {
                let mut row = BTreeMap::new();
                for (w, c) in terms {
                    let v = u.concat(w);
                    let p = o.pre(v.letters());
                    axpy(&mut row, c, &p);
                }
                Oracle::insert_row(&mut pivots, row)?;
            }
        }
        let prev = o.levels[d - 1].basis.clone();
        let mut basis = Vec::new();
        let mut basis_of = HashMap::new();
        for (b, w) in prev.iter().enumerate() {
            for x in 0..theta {
                let col = b * theta + x;
                if !pivots.contains_key(&col) {
                    basis_of.insert(col, basis.len());
                    basis.push(w.concat(&Word::letter(x as u8)));
                }
            }
        }
        dims.push(basis.len());
        o.levels[d] = Level { pivots, basis_of, basis };
    }
    if dims[bound] != 0 {
        return Err(PbwError::DegreeBoundTooSmall { bound });
    }
    Ok(OracleResult { total: dims.iter().map(|&d| d as u64).sum(), dims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::BraidingMatrix;
    use crate::smash::SmashAlgebra;
    use crate::syntax::parse_expr;
    use crate::{Cyclo, Scalar};

    fn dims(q: [[i64; 2]; 2], rels: &[&str], bound: usize) -> Result<OracleResult, PbwError> {
        let z = |k: i64| Scalar::constant(Cyclo::zeta(12, k));
        let b = BraidingMatrix::new(vec![vec![z(q[0][0]), z(q[0][1])], vec![z(q[1][0]), z(q[1][1])]]).unwrap();
        let alg = SmashAlgebra::new(b);
        let rs: Vec<_> = rels.iter().map(|s| parse_expr(s, 12).unwrap().eval(&alg).unwrap()).collect();
        span_dimension_oracle(2, &rs, bound)
    }

    #[test]
    fn exterior_algebra() {
        // x1^2 = x2^2 = 0, x1 x2 = -x2 x1: dimension 4.
        let r = dims([[6, 6], [0, 6]], &["x1^2", "x2^2", "[x1 x2]"], 5).unwrap();
        assert_eq!(r.dims, vec![1, 2, 1, 0, 0, 0]);
        assert_eq!(r.total, 4);
    }

    #[test]
    fn a2_minus_one() {
        let r = dims([[6, 0], [6, 6]], &["x1^2", "[x1 x2]^2", "x2^2"], 6).unwrap();
        assert_eq!(r.total, 8);
    }

    #[test]
    fn bound_too_small() {
        assert_eq!(dims([[6, 0], [6, 6]], &["x1^2", "[x1 x2]^2", "x2^2"], 2), Err(PbwError::DegreeBoundTooSmall { bound: 2 }));
    }
}
