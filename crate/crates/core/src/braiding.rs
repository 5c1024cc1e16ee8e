//! Braiding matrices of diagonal type and their Cartan and Dynkin data.

use std::fmt;

use crate::scalars::{Coefficient, CycloNumber, RationalScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidingError {
    #[error("no finite Cartan entry a_{{{i}{j}}} (q_{{{i}{i}}} of infinite order or cap exceeded)")]
    NotFiniteOrder { i: usize, j: usize },
    #[error("braiding entry q_{{{i}{j}}} is not numeric")]
    NotNumeric { i: usize, j: usize },
    #[error("braiding entry q_{{{i}{j}}} is not a unit")]
    NotUnit { i: usize, j: usize },
    #[error("braiding matrix must be square and nonempty")]
    Shape,
    #[error("vertex {0} out of range")]
    BadVertex(usize),
    #[error("Weyl orbit exceeded {0} diagrams")]
    OrbitNotFinite(usize),
}

/// The matrix `(q_ij)` with `c(x_i (x) x_j) = q_ij x_j (x) x_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidingMatrix<C> {
    entries: Vec<Vec<C>>,
}

impl<C: Coefficient> BraidingMatrix<C> {
    pub fn new(entries: Vec<Vec<C>>) -> Result<Self, BraidingError> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return Err(BraidingError::Shape);
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, q) in row.iter().enumerate() {
                if q.inverse().is_none() {
                    return Err(BraidingError::NotUnit { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(BraidingMatrix { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Entry `q_ij` with 0-based indices.
    pub fn q(&self, i: usize, j: usize) -> &C {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<C>] {
        &self.entries
    }

    /// `prod_{i,j} q_ij^(a_i b_j)`.
    pub fn bicharacter(&self, a: &[i64], b: &[i64]) -> C {
        let mut acc = C::one();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                let e = ai * bj;
                if e != 0 {
                    acc = acc.times(&self.entries[i][j].pow_i(e).expect("braiding entries are units"));
                }
            }
        }
        acc
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> BraidingMatrix<D> {
        BraidingMatrix { entries: self.entries.iter().map(|r| r.iter().map(&f).collect()).collect() }
    }

    pub fn to_numeric(&self) -> Result<BraidingMatrix<CycloNumber<C::Rational>>, BraidingError> {
        let mut rows = Vec::new();
        for (i, r) in self.entries.iter().enumerate() {
            let mut row = Vec::new();
            for (j, q) in r.iter().enumerate() {
                row.push(q.as_cyclo().ok_or(BraidingError::NotNumeric { i: i + 1, j: j + 1 })?);
            }
            rows.push(row);
        }
        Ok(BraidingMatrix { entries: rows })
    }
}

impl<C: Coefficient> fmt::Display for BraidingMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// A generalized Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix(pub Vec<Vec<i64>>);

impl CartanMatrix {
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    /// `a_ii = 2`, off-diagonal entries nonpositive, `a_ij = 0` iff `a_ji = 0`.
    pub fn is_generalized_cartan(&self) -> bool {
        let n = self.0.len();
        (0..n).all(|i| {
            self.0[i][i] == 2
                && (0..n).filter(|&j| j != i).all(|j| self.0[i][j] <= 0 && ((self.0[i][j] == 0) == (self.0[j][i] == 0)))
        })
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

type Num<Q> = CycloNumber<Q>;

fn one<Q: RationalScalar>() -> Num<Q> {
    Num::from_int(1)
}

fn search_cap<Q: RationalScalar>(q: &BraidingMatrix<Num<Q>>) -> i64 {
    let order = q.entries.iter().flatten().fold(2u32, |acc, x| num_integer::lcm(acc, x.order().max(1)));
    2 * order as i64
}

impl<Q: RationalScalar> BraidingMatrix<Num<Q>> {
    /// `a_ij = -min{ r : q_ij q_ji q_ii^r = 1 or (r+1)_{q_ii} = 0 }`.
    pub fn cartan_matrix(&self) -> Result<CartanMatrix, BraidingError> {
        let n = self.rank();
        let cap = search_cap(self);
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            let qii = &self.entries[i][i];
            for j in 0..n {
                if i == j {
                    continue;
                }
                let prod = self.entries[i][j].mul_ref(&self.entries[j][i]);
                let mut found = None;
                let mut qpow = one::<Q>();
                let mut qnum = one::<Q>();
                for r in 0..=cap {
                    // qpow = q_ii^r, qnum = (r+1)_{q_ii}
                    if prod.mul_ref(&qpow) == one() || qnum.is_zero() {
                        found = Some(r);
                        break;
                    }
                    qpow = qpow.mul_ref(qii);
                    qnum = qnum.add_ref(&qpow);
                }
                a[i][j] = -found.ok_or(BraidingError::NotFiniteOrder { i: i + 1, j: j + 1 })?;
            }
        }
        Ok(CartanMatrix(a))
    }

    /// Checks `q_ij q_ji = q_ii^(a_ij)` or `ord q_ii = 1 - a_ij` for all `i != j`.
    pub fn satisfies_cartan_condition(&self, a: &CartanMatrix) -> bool {
        let n = self.rank();
        (0..n).all(|i| {
            (0..n).filter(|&j| j != i).all(|j| {
                let prod = self.entries[i][j].mul_ref(&self.entries[j][i]);
                let qii = &self.entries[i][i];
                prod == qii.powi(a.get(i, j)).expect("unit")
                    || qii.multiplicative_order().ok().flatten() == Some((1 - a.get(i, j)) as u32)
            })
        })
    }

    /// The reflected matrix `q^(k)` at 0-based vertex `k`.
    pub fn reflect(&self, k: usize) -> Result<Self, BraidingError> {
        let n = self.rank();
        if k >= n {
            return Err(BraidingError::BadVertex(k + 1));
        }
        let a = self.cartan_matrix()?;
        let mut out = self.entries.clone();
        for i in 0..n {
            for j in 0..n {
                let e = [
                    self.entries[i][k].powi(-a.get(k, j)),
                    self.entries[k][j].powi(-a.get(k, i)),
                    self.entries[k][k].powi(a.get(k, i) * a.get(k, j)),
                ];
                let mut v = self.entries[i][j].clone();
                for f in e {
                    v = v.mul_ref(&f.expect("unit"));
                }
                out[i][j] = v;
            }
        }
        Ok(BraidingMatrix { entries: out })
    }

    pub fn dynkin(&self) -> DynkinDiagram<Q> {
        let n = self.rank();
        let vertices = (0..n).map(|i| self.entries[i][i].clone()).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let p = self.entries[i][j].mul_ref(&self.entries[j][i]);
                if p != one() {
                    edges.push((i, j, p));
                }
            }
        }
        DynkinDiagram { vertices, edges }
    }

    pub fn twist_equivalent(&self, other: &Self) -> bool {
        self.dynkin().isomorphic(&other.dynkin())
    }

    /// Diagrams reachable by iterated reflections, up to isomorphism, in discovery order.
    pub fn weyl_orbit(&self, cap: usize) -> Result<Vec<DynkinDiagram<Q>>, BraidingError> {
        let mut diagrams = vec![self.dynkin()];
        let mut queue = vec![self.clone()];
        while let Some(m) = queue.pop() {
            for k in 0..m.rank() {
                let r = m.reflect(k)?;
                let d = r.dynkin();
                if !diagrams.iter().any(|e| e.isomorphic(&d)) {
                    if diagrams.len() >= cap {
                        return Err(BraidingError::OrbitNotFinite(cap));
                    }
                    diagrams.push(d);
                    queue.push(r);
                }
            }
        }
        Ok(diagrams)
    }
}

/// Vertex labels `q_ii` and edge labels `q_ij q_ji` (edges only when `!= 1`).
#[derive(Clone, Debug, PartialEq)]
pub struct DynkinDiagram<Q: RationalScalar> {
    pub vertices: Vec<Num<Q>>,
    pub edges: Vec<(usize, usize, Num<Q>)>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

impl<Q: RationalScalar> DynkinDiagram<Q> {
    fn edge(&self, i: usize, j: usize) -> Num<Q> {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.edges.iter().find(|e| e.0 == a && e.1 == b).map(|e| e.2.clone()).unwrap_or_else(one)
    }

    /// Equality up to relabeling the vertices.
    pub fn isomorphic(&self, other: &Self) -> bool {
        let n = self.vertices.len();
        if n != other.vertices.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        permutations(n).into_iter().any(|p| {
            (0..n).all(|i| self.vertices[i] == other.vertices[p[i]])
                && (0..n).all(|i| (i + 1..n).all(|j| self.edge(i, j) == other.edge(p[i], p[j])))
        })
    }

    /// Text form with `z` read as the primitive root of order `n`.
    pub fn to_syntax(&self, n: u32) -> String {
        let v: Vec<String> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, q)| format!("{}: {}", i + 1, q.to_syntax(n)))
            .collect();
        let e: Vec<String> = self
            .edges
            .iter()
            .map(|(i, j, q)| format!("{}-{}: {}", i + 1, j + 1, q.to_syntax(n)))
            .collect();
        format!("vertices [{}] edges [{}]", v.join(", "), e.join(", "))
    }
}
