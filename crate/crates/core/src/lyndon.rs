//! Words, Lyndon words, Shirshov decompositions and super words.
//!
//! Letters are 0-based internally and print as `x1`, `x2`, ... A proper prefix
//! is smaller than its extensions, which is exactly `Ord` on slices.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::braiding::BraidingMatrix;
use crate::scalars::{CycloNumber, RationalScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LyndonError {
    #[error("empty word")]
    EmptyWord,
    #[error("word `{0}` is too short for a Shirshov decomposition")]
    TooShort(Word),
    #[error("word `{0}` is not Lyndon")]
    NotLyndon(Word),
    #[error("set is not Shirshov closed")]
    NotShirshovClosed,
    #[error("cannot parse word `{0}`")]
    Parse(String),
    #[error("height of `{0}` is not finite")]
    InfiniteHeight(Word),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    /// `x_(i+1)` for 0-based `i`.
    pub fn letter(i: u8) -> Self {
        Word(vec![i])
    }

    /// From 1-based letter indices, e.g. `Word::from_indices(&[1, 1, 2])`.
    pub fn from_indices(ix: &[u8]) -> Self {
        Word(ix.iter().map(|i| i - 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    /// Letter counts in `Z^theta`.
    pub fn multidegree(&self, theta: usize) -> Vec<i64> {
        let mut d = vec![0i64; theta];
        for &l in &self.0 {
            d[l as usize] += 1;
        }
        d
    }

    pub fn is_lyndon(&self) -> Result<bool, LyndonError> {
        if self.is_empty() {
            return Err(LyndonError::EmptyWord);
        }
        Ok((1..self.len()).all(|i| self.0[..] < self.0[i..]))
    }

    /// Split at the lexicographically minimal proper ending.
    pub fn shirshov(&self) -> Result<(Word, Word), LyndonError> {
        if self.len() < 2 {
            return Err(LyndonError::TooShort(self.clone()));
        }
        let i = (1..self.len()).min_by(|&a, &b| self.0[a..].cmp(&self.0[b..])).expect("nonempty range");
        Ok((Word(self.0[..i].to_vec()), Word(self.0[i..].to_vec())))
    }

    /// Factorization into non-increasing Lyndon words.
    pub fn lyndon_factors(&self) -> Vec<Word> {
        let s = &self.0;
        let n = s.len();
        let mut out = Vec::new();
        let mut i = 0;
        while i < n {
            let (mut j, mut k) = (i + 1, i);
            while j < n && s[k] <= s[j] {
                k = if s[k] < s[j] { i } else { k + 1 };
                j += 1;
            }
            while i <= k {
                out.push(Word(s[i..i + j - k].to_vec()));
                i += j - k;
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| format!("x{}", l + 1)).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = LyndonError;

    /// Accepts `x1 x1 x2`, `x1x1x2` or `112`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || LyndonError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Ok(Word::default());
        }
        let mut letters = Vec::new();
        if t.contains('x') {
            for part in t.split('x').skip(1) {
                let i: u8 = part.parse().map_err(|_| err())?;
                if i == 0 {
                    return Err(err());
                }
                letters.push(i - 1);
            }
            if !t.starts_with('x') {
                return Err(err());
            }
        } else {
            for c in t.chars() {
                let i = c.to_digit(10).filter(|&d| d > 0).ok_or_else(err)?;
                letters.push(i as u8 - 1);
            }
        }
        Ok(Word(letters))
    }
}

/// All Lyndon words over `theta` letters of length `1..=max_len`, in lexicographic order.
pub fn lyndon_words(theta: u8, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if theta == 0 || max_len == 0 {
        return out;
    }
    // Duval's generation algorithm.
    let mut w: Vec<i16> = vec![-1];
    while !w.is_empty() {
        let last = w.len() - 1;
        w[last] += 1;
        out.push(Word(w.iter().map(|&c| c as u8).collect()));
        let m = w.len();
        while w.len() < max_len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&l) = w.last() {
            if l == theta as i16 - 1 {
                w.pop();
            } else {
                break;
            }
        }
    }
    out
}

pub fn is_shirshov_closed(set: &BTreeSet<Word>, theta: u8) -> Result<bool, LyndonError> {
    for w in set {
        if !w.is_lyndon()? {
            return Err(LyndonError::NotLyndon(w.clone()));
        }
    }
    if !(0..theta).all(|i| set.contains(&Word::letter(i))) {
        return Ok(false);
    }
    Ok(set.iter().filter(|w| w.len() > 1).all(|w| {
        let (v, u) = w.shirshov().expect("length at least 2");
        set.contains(&v) && set.contains(&u)
    }))
}

/// The smallest Shirshov-closed set containing `set` and all letters.
pub fn shirshov_closure(set: &BTreeSet<Word>, theta: u8) -> Result<BTreeSet<Word>, LyndonError> {
    let mut out: BTreeSet<Word> = (0..theta).map(Word::letter).collect();
    let mut stack: Vec<Word> = set.iter().cloned().collect();
    while let Some(w) = stack.pop() {
        if !w.is_lyndon()? {
            return Err(LyndonError::NotLyndon(w));
        }
        if out.insert(w.clone()) && w.len() > 1 {
            let (v, u) = w.shirshov()?;
            stack.push(v);
            stack.push(u);
        }
    }
    Ok(out)
}

/// `C(L)`: words `uv` outside `L` with `u < v` in `L` and `(u, v)` its Shirshov decomposition.
pub fn c_set(l: &BTreeSet<Word>, theta: u8) -> Result<BTreeSet<Word>, LyndonError> {
    if !is_shirshov_closed(l, theta)? {
        return Err(LyndonError::NotShirshovClosed);
    }
    let mut out = BTreeSet::new();
    for u in l {
        for v in l {
            if u < v {
                let w = u.concat(v);
                if !l.contains(&w) && w.shirshov()? == (u.clone(), v.clone()) {
                    out.insert(w);
                }
            }
        }
    }
    Ok(out)
}

/// `D(L)` with heights `N_u = ord q_(u,u)`, overridden by `heights` where given.
pub fn d_set<Q: RationalScalar>(
    l: &BTreeSet<Word>,
    q: &BraidingMatrix<CycloNumber<Q>>,
    heights: &BTreeMap<Word, u32>,
) -> Result<BTreeMap<Word, u32>, LyndonError> {
    let theta = q.rank() as u8;
    if !is_shirshov_closed(l, theta)? {
        return Err(LyndonError::NotShirshovClosed);
    }
    let mut out = BTreeMap::new();
    for u in l {
        if let Some(&n) = heights.get(u) {
            out.insert(u.clone(), n);
            continue;
        }
        let d = u.multidegree(q.rank());
        if let Ok(Some(n)) = q.bicharacter(&d, &d).multiplicative_order() {
            out.insert(u.clone(), n);
        }
    }
    Ok(out)
}

/// A product of super letters `[u_1]...[u_k]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SuperWord(pub Vec<Word>);

impl SuperWord {
    pub fn len(&self) -> usize {
        self.0.iter().map(Word::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The super word whose factors are the Lyndon factorization of `w`.
    pub fn of_word(w: &Word) -> Self {
        SuperWord(w.lyndon_factors())
    }

    /// The underlying word `u_1 ... u_k`.
    pub fn flatten(&self) -> Word {
        Word(self.0.iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    /// Exponent form `[(u_1, e_1), ...]` grouping equal neighbours.
    pub fn grouped(&self) -> Vec<(Word, usize)> {
        let mut out: Vec<(Word, usize)> = Vec::new();
        for w in &self.0 {
            match out.last_mut() {
                Some((v, e)) if v == w => *e += 1,
                _ => out.push((w.clone(), 1)),
            }
        }
        out
    }
}

/// `U < V` when `U` is shorter, or equally long and lexicographically larger.
pub fn prec(u: &SuperWord, v: &SuperWord) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| v.0.cmp(&u.0))
}

impl fmt::Display for SuperWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .grouped()
            .into_iter()
            .map(|(w, e)| {
                let base = if w.len() == 1 { w.to_string() } else { format!("[{w}]") };
                if e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}
