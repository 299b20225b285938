//! Framed permutations `W_n(∞) = Zⁿ ⋊ S_n`, their normal words, and the
//! type-A Hecke algebra with `g_i² = p·g_i + q`.
//!
//! Product: `(w₁, π₁)(w₂, π₂) = (w₁ + π₁(w₂), π₁π₂)` where `π(w)_i = w_{π⁻¹(i)}`
//! and `(π₁π₂)(x) = π₁(π₂(x))`. Strands are numbered from 1 in the public
//! API; `perm[i]` stores the image of strand `i + 1` minus one.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::poly::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("cannot parse `{token}` at position {pos}")]
    BadToken { pos: usize, token: String },
    #[error("generator s{index} does not exist on {n} strands")]
    OutOfRange { index: usize, n: usize },
    #[error("size mismatch: {0} and {1} strands")]
    SizeMismatch(usize, usize),
    #[error("`t` is not a Hecke algebra generator")]
    NotHecke,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    /// `t^k`
    T(i64),
    /// `s_i` (also written `g_i`)
    S(usize),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T(1) => write!(f, "t"),
            Letter::T(k) => write!(f, "t^{k}"),
            Letter::S(i) => write!(f, "s{i}"),
        }
    }
}

/// Parses words such as `s3 s2 s1 t^-1 s1`, `ts1ts1` or `g1*g2`.
pub fn parse_word(s: &str) -> Result<Vec<Letter>, WordError> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let bad = |from: usize, to: usize| WordError::BadToken {
        pos: chars[from].0,
        token: chars[from..to.min(chars.len())].iter().map(|c| c.1).collect(),
    };
    let digits = |i: &mut usize, allow_sign: bool| -> Option<i64> {
        let start = *i;
        if allow_sign && *i < chars.len() && matches!(chars[*i].1, '-' | '+') {
            *i += 1;
        }
        while *i < chars.len() && chars[*i].1.is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().map(|c| c.1).collect::<String>().parse().ok()
    };
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let start = i;
        match chars[i].1 {
            c if c.is_whitespace() || c == '*' || c == '.' => i += 1,
            't' => {
                i += 1;
                if i < chars.len() && chars[i].1 == '^' {
                    i += 1;
                    let k = digits(&mut i, true).ok_or_else(|| bad(start, i.max(start + 2)))?;
                    out.push(Letter::T(k));
                } else {
                    out.push(Letter::T(1));
                }
            }
            's' | 'g' | 'σ' => {
                i += 1;
                if i < chars.len() && chars[i].1 == '_' {
                    i += 1;
                }
                match digits(&mut i, false) {
                    Some(k) if k >= 1 => out.push(Letter::S(k as usize)),
                    _ => return Err(bad(start, i.max(start + 1))),
                }
            }
            _ => return Err(bad(start, start + 1)),
        }
    }
    Ok(out)
}

fn word_to_string(w: &[Letter]) -> String {
    w.iter().map(Letter::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FramedPermutation {
    perm: Vec<usize>,
    weights: Vec<i64>,
}

impl FramedPermutation {
    pub fn identity(n: usize) -> Self {
        FramedPermutation { perm: (0..n).collect(), weights: vec![0; n] }
    }

    /// `perm` lists images of strands `1..=n` (1-based).
    pub fn new(perm: Vec<usize>, weights: Vec<i64>) -> Option<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p == 0 || p > n || std::mem::replace(&mut seen[p - 1], true) {
                return None;
            }
        }
        (weights.len() == n).then(|| FramedPermutation { perm: perm.iter().map(|p| p - 1).collect(), weights })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// Image of strand `i` (1-based).
    pub fn image(&self, i: usize) -> usize {
        self.perm[i - 1] + 1
    }

    /// Weight on strand `i` (1-based).
    pub fn weight(&self, i: usize) -> i64 {
        self.weights[i - 1]
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// One-line notation, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.perm.iter().map(|p| p + 1).collect()
    }

    pub fn s(n: usize, i: usize) -> Result<Self, WordError> {
        if i == 0 || i >= n {
            return Err(WordError::OutOfRange { index: i, n });
        }
        let mut g = FramedPermutation::identity(n);
        g.perm.swap(i - 1, i);
        Ok(g)
    }

    /// `v_i`: unit weight on strand `i + 1`; `t = v_0`.
    pub fn v(n: usize, i: usize) -> Self {
        let mut g = FramedPermutation::identity(n);
        g.weights[i] = 1;
        g
    }

    pub fn t_pow(n: usize, k: i64) -> Self {
        let mut g = FramedPermutation::identity(n);
        g.weights[0] = k;
        g
    }

    pub fn mul(&self, other: &Self) -> Result<Self, WordError> {
        if self.n() != other.n() {
            return Err(WordError::SizeMismatch(self.n(), other.n()));
        }
        let mut weights = self.weights.clone();
        for (j, w) in other.weights.iter().enumerate() {
            weights[self.perm[j]] += w;
        }
        let perm = other.perm.iter().map(|&x| self.perm[x]).collect();
        Ok(FramedPermutation { perm, weights })
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0; n];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        // −π⁻¹(w)
        let weights = (0..n).map(|i| -self.weights[self.perm[i]]).collect();
        FramedPermutation { perm, weights }
    }
}

impl fmt::Display for FramedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(perm {:?}, weights {:?})", self.one_line(), self.weights)
    }
}

pub fn fp_mul(a: &FramedPermutation, b: &FramedPermutation) -> Result<FramedPermutation, WordError> {
    a.mul(b)
}

fn letter_element(n: usize, l: Letter) -> Result<FramedPermutation, WordError> {
    match l {
        Letter::T(k) => Ok(FramedPermutation::t_pow(n, k)),
        Letter::S(i) => FramedPermutation::s(n, i),
    }
}

pub fn fp_from_word(n: usize, word: &[Letter]) -> Result<FramedPermutation, WordError> {
    let mut g = FramedPermutation::identity(n);
    for &l in word {
        g = g.mul(&letter_element(n, l)?)?;
    }
    Ok(g)
}

/// Word in the inductive normal form: for each level `N = n, …, 2` a prefix
/// `s_i s_{i+1} … s_{N−1}` or `s_k … s_1 t^j s_1 … s_{N−1}` (`j ≠ 0`), then
/// `t^j` for the first strand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NormalWord(pub Vec<Letter>);

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", word_to_string(&self.0))
    }
}

impl Serialize for NormalWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `P_i = s_i s_{i+1} … s_{N−1}` (empty for `i = N`).
fn p_prefix(i: usize, big_n: usize) -> Vec<Letter> {
    (i..big_n).map(Letter::S).collect()
}

/// `R_{k,j} = s_k … s_1 t^j s_1 … s_{N−1}`.
fn r_prefix(k: usize, j: i64, big_n: usize) -> Vec<Letter> {
    let mut w: Vec<Letter> = (1..=k).rev().map(Letter::S).collect();
    w.push(Letter::T(j));
    w.extend((1..big_n).map(Letter::S));
    w
}

pub fn fp_normal_word(g: &FramedPermutation) -> NormalWord {
    let n = g.n();
    let mut word = Vec::new();
    let mut rest = g.clone();
    for big_n in (2..=n).rev() {
        let m = rest.image(big_n);
        let j = rest.weight(m);
        let prefix = if j == 0 { p_prefix(m, big_n) } else { r_prefix(m - 1, j, big_n) };
        let pe = fp_from_word(n, &prefix).expect("prefix letters are in range");
        rest = pe.inverse().mul(&rest).expect("same size");
        debug_assert!(rest.image(big_n) == big_n && rest.weight(big_n) == 0);
        word.extend(prefix);
    }
    if n >= 1 && rest.weight(1) != 0 {
        word.push(Letter::T(rest.weight(1)));
    }
    NormalWord(word)
}

/// All normal words on `n` strands whose `t`-exponents satisfy `|j| ≤ bound`,
/// generated from the grammar.
pub fn enumerate_normal_words(n: usize, bound: i64) -> Vec<NormalWord> {
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    if n == 0 {
        return vec![NormalWord::default()];
    }
    // Level 1: t^j
    words = words
        .into_iter()
        .flat_map(|w| {
            (-bound..=bound).map(move |j| {
                let mut v = w.clone();
                if j != 0 {
                    v.push(Letter::T(j));
                }
                v
            })
        })
        .collect();
    for big_n in 2..=n {
        let mut prefixes: Vec<Vec<Letter>> = (1..=big_n).map(|i| p_prefix(i, big_n)).collect();
        for k in 0..big_n {
            for j in (-bound..=bound).filter(|&j| j != 0) {
                prefixes.push(r_prefix(k, j, big_n));
            }
        }
        words = prefixes
            .iter()
            .flat_map(|p| {
                words.iter().map(move |w| {
                    let mut v = p.clone();
                    v.extend_from_slice(w);
                    v
                })
            })
            .collect();
    }
    words.into_iter().map(NormalWord).collect()
}

/// Permutation in one-line notation, 0-based.
pub type Perm = Vec<usize>;

const PQ: &[&str] = &["p", "q"];

fn inversions(w: &[usize]) -> usize {
    (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count()
}

/// `s_i ∘ w` for 1-based `i`.
fn left_mul_s(i: usize, w: &[usize]) -> Perm {
    w.iter()
        .map(|&x| {
            if x == i - 1 {
                i
            } else if x == i {
                i - 1
            } else {
                x
            }
        })
        .collect()
}

/// Element of the Hecke algebra `H_n(p, q)` in the basis `T_w`, `w ∈ S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Perm, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, terms: BTreeMap::new() }
    }

    pub fn basis(w: Perm) -> Self {
        let n = w.len();
        let mut terms = BTreeMap::new();
        terms.insert(w, LaurentPoly::one(PQ));
        HeckeElement { n, terms }
    }

    pub fn identity(n: usize) -> Self {
        HeckeElement::basis((0..n).collect())
    }

    pub fn generator(n: usize, i: usize) -> Result<Self, WordError> {
        if i == 0 || i >= n {
            return Err(WordError::OutOfRange { index: i, n });
        }
        Ok(HeckeElement::basis(left_mul_s(i, &(0..n).collect::<Vec<_>>())))
    }

    pub fn from_word(n: usize, word: &[Letter]) -> Result<Self, WordError> {
        let mut e = HeckeElement::identity(n);
        for &l in word {
            let Letter::S(i) = l else { return Err(WordError::NotHecke) };
            e = e.mul(&HeckeElement::generator(n, i)?)?;
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &LaurentPoly)> {
        self.terms.iter()
    }

    fn add_term(&mut self, w: Perm, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&w) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(w, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = HeckeElement::zero(self.n);
        for (w, k) in &self.terms {
            out.add_term(w.clone(), k * c);
        }
        out
    }

    /// `g_i · self`.
    fn left_gen(&self, i: usize) -> Self {
        let p = LaurentPoly::var(PQ, "p");
        let q = LaurentPoly::var(PQ, "q");
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &self.terms {
            let sw = left_mul_s(i, w);
            if inversions(&sw) > inversions(w) {
                out.add_term(sw, c.clone());
            } else {
                out.add_term(w.clone(), c * &p);
                out.add_term(sw, c * &q);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, WordError> {
        if self.n != other.n {
            return Err(WordError::SizeMismatch(self.n, other.n));
        }
        let mut out = HeckeElement::zero(self.n);
        for (u, c) in &self.terms {
            let mut acc = other.scale(c);
            for &i in reduced_word(u).iter().rev() {
                acc = acc.left_gen(i);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Substitutes numeric values for `p` and `q` in every coefficient.
    pub fn specialize(&self, p: i64, q: i64) -> BTreeMap<Perm, num_bigint::BigInt> {
        let mut out = BTreeMap::new();
        for (w, c) in &self.terms {
            let v = c
                .substitute(&[("p", LaurentPoly::constant(p)), ("q", LaurentPoly::constant(q))])
                .expect("numeric substitution")
                .constant_term();
            if v != 0.into() {
                out.insert(w.clone(), v);
            }
        }
        out
    }
}

/// Reduced word `i₁ … i_k` with `w = s_{i₁} ⋯ s_{i_k}`.
pub fn reduced_word(w: &[usize]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (1..w.len()).find(|&i| inversions(&left_mul_s(i, &w)) < inversions(&w)) {
        word.push(i);
        w = left_mul_s(i, &w);
    }
    word
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let one: Vec<usize> = w.iter().map(|x| x + 1).collect();
            write!(f, "({c})·T{one:?}")?;
        }
        Ok(())
    }
}

impl Serialize for HeckeElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            perm: Vec<usize>,
            coeff: &'a LaurentPoly,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            terms: Vec<Term<'a>>,
        }
        Repr {
            n: self.n,
            terms: self.terms.iter().map(|(w, c)| Term { perm: w.iter().map(|x| x + 1).collect(), coeff: c }).collect(),
        }
        .serialize(s)
    }
}

pub fn hecke_mul(e1: &HeckeElement, e2: &HeckeElement) -> Result<HeckeElement, WordError> {
    e1.mul(e2)
}
