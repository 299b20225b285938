//! Skein algebra of the once-punctured torus as a rewriting system on words
//! in `x, y, z`.
//!
//! Normal-ordered monomials `x^a y^b z^c` form the working basis. Each
//! rewrite replaces a disordered adjacent pair and either shortens the word or
//! keeps its length and removes one inversion, so reduction halts.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bracket::a_pow;
use crate::poly::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X,
    Y,
    Z,
}

impl Gen {
    pub const ALL: [Gen; 3] = [Gen::X, Gen::Y, Gen::Z];

    /// The cyclic symmetry `x → y → z → x`.
    pub fn cycle(self) -> Gen {
        match self {
            Gen::X => Gen::Y,
            Gen::Y => Gen::Z,
            Gen::Z => Gen::X,
        }
    }

    fn letter(self) -> char {
        match self {
            Gen::X => 'x',
            Gen::Y => 'y',
            Gen::Z => 'z',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid letter `{letter}` at position {pos}; words use x, y, z")]
pub struct WordError {
    pub pos: usize,
    pub letter: char,
}

pub fn parse_word(s: &str) -> Result<Vec<Gen>, WordError> {
    s.chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace() && *c != '*')
        .map(|(pos, c)| match c {
            'x' => Ok(Gen::X),
            'y' => Ok(Gen::Y),
            'z' => Ok(Gen::Z),
            letter => Err(WordError { pos, letter }),
        })
        .collect()
}

/// Exponents `(a, b, c)` of `x^a y^b z^c`.
pub type NcMonomial = (u32, u32, u32);

fn monomial_word((a, b, c): NcMonomial) -> Vec<Gen> {
    let mut w = vec![Gen::X; a as usize];
    w.extend(std::iter::repeat_n(Gen::Y, b as usize));
    w.extend(std::iter::repeat_n(Gen::Z, c as usize));
    w
}

fn sorted_monomial(word: &[Gen]) -> Option<NcMonomial> {
    if word.windows(2).any(|p| p[0] > p[1]) {
        return None;
    }
    let count = |g| word.iter().filter(|&&h| h == g).count() as u32;
    Some((count(Gen::X), count(Gen::Y), count(Gen::Z)))
}

/// Number of out-of-order pairs in a word.
pub fn inversions(word: &[Gen]) -> usize {
    let mut n = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                n += 1;
            }
        }
    }
    n
}

/// Combination of normal-ordered monomials with coefficients in `Z[A^{±1}]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NcElement {
    terms: BTreeMap<NcMonomial, LaurentPoly>,
}

impl NcElement {
    pub fn zero() -> Self {
        NcElement::default()
    }

    pub fn scalar(c: LaurentPoly) -> Self {
        NcElement::monomial((0, 0, 0), c)
    }

    pub fn monomial(m: NcMonomial, c: LaurentPoly) -> Self {
        let mut e = NcElement::zero();
        e.add_term(m, c);
        e
    }

    pub fn gen(g: Gen) -> Self {
        NcElement::monomial(sorted_monomial(&[g]).expect("single letter"), LaurentPoly::one(&["A"]))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NcMonomial, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: NcMonomial) -> LaurentPoly {
        self.terms.get(&m).cloned().unwrap_or_else(|| LaurentPoly::zero(&["A"]))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: NcMonomial, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&m) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = NcElement::zero();
        for (m, k) in &self.terms {
            out.add_term(*m, k * c);
        }
        out
    }

    /// Applies a substitution to every coefficient (e.g. `A := −1`).
    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut out = NcElement::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    /// Applies `x → y → z → x` letterwise and reduces.
    pub fn cycled(&self, reducer: &mut Reducer) -> Self {
        let mut out = NcElement::zero();
        for (m, c) in &self.terms {
            let w: Vec<Gen> = monomial_word(*m).into_iter().map(Gen::cycle).collect();
            out = out.add(&reducer.reduce(&w).scale(c));
        }
        out
    }
}

impl fmt::Display for NcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let w: String = monomial_word(*m).into_iter().map(Gen::letter).collect();
            write!(f, "({c})·{}", if w.is_empty() { "1" } else { &w })?;
        }
        Ok(())
    }
}

impl Serialize for NcElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            monomial: [u32; 3],
            coeff: &'a LaurentPoly,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            generators: [&'static str; 3],
            terms: Vec<Term<'a>>,
        }
        Repr {
            generators: ["x", "y", "z"],
            terms: self.terms.iter().map(|(&(a, b, c), k)| Term { monomial: [a, b, c], coeff: k }).collect(),
        }
        .serialize(s)
    }
}

/// `A² − A⁻²`.
fn bracket_gap() -> LaurentPoly {
    a_pow(2) - a_pow(-2)
}

/// One rewrite of the disordered pair at `pos, pos+1`; `None` when that pair
/// is already ordered.
pub fn rewrite_at(word: &[Gen], pos: usize) -> Option<Vec<(LaurentPoly, Vec<Gen>)>> {
    let (hi, lo) = (*word.get(pos)?, *word.get(pos + 1)?);
    if hi <= lo {
        return None;
    }
    let (swap_coeff, third, third_coeff) = match (hi, lo) {
        (Gen::Y, Gen::X) => (a_pow(2), Gen::Z, -(&a_pow(1) * &bracket_gap())),
        (Gen::Z, Gen::Y) => (a_pow(2), Gen::X, -(&a_pow(1) * &bracket_gap())),
        (Gen::Z, Gen::X) => (a_pow(-2), Gen::Y, &a_pow(-1) * &bracket_gap()),
        _ => unreachable!("hi > lo"),
    };
    let mut swapped = word.to_vec();
    swapped.swap(pos, pos + 1);
    let mut shorter = word[..pos].to_vec();
    shorter.push(third);
    shorter.extend_from_slice(&word[pos + 2..]);
    Some(vec![(swap_coeff, swapped), (third_coeff, shorter)])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Policy {
    #[default]
    Leftmost,
    Rightmost,
}

/// Reduces words to normal form, caching results per word.
#[derive(Debug, Default)]
pub struct Reducer {
    policy: Policy,
    memo: HashMap<Vec<Gen>, NcElement>,
}

impl Reducer {
    pub fn new(policy: Policy) -> Self {
        Reducer { policy, memo: HashMap::new() }
    }

    pub fn reduce(&mut self, word: &[Gen]) -> NcElement {
        if let Some(m) = sorted_monomial(word) {
            return NcElement::monomial(m, LaurentPoly::one(&["A"]));
        }
        if let Some(v) = self.memo.get(word) {
            return v.clone();
        }
        let descents = (0..word.len() - 1).filter(|&i| word[i] > word[i + 1]);
        let pos = match self.policy {
            Policy::Leftmost => descents.min(),
            Policy::Rightmost => descents.max(),
        }
        .expect("unsorted word has a descent");
        let mut out = NcElement::zero();
        for (c, w) in rewrite_at(word, pos).expect("descent") {
            out = out.add(&self.reduce(&w).scale(&c));
        }
        self.memo.insert(word.to_vec(), out.clone());
        out
    }

    pub fn mul(&mut self, e1: &NcElement, e2: &NcElement) -> NcElement {
        let mut out = NcElement::zero();
        for (m1, c1) in &e1.terms {
            for (m2, c2) in &e2.terms {
                let mut w = monomial_word(*m1);
                w.extend(monomial_word(*m2));
                out = out.add(&self.reduce(&w).scale(&(c1 * c2)));
            }
        }
        out
    }
}

pub fn nc_reduce(word: &[Gen]) -> NcElement {
    Reducer::default().reduce(word)
}

pub fn nc_mul(e1: &NcElement, e2: &NcElement) -> NcElement {
    Reducer::default().mul(e1, e2)
}

/// `Q = A²x² + A⁻²y² + A²z² − Axyz`.
pub fn boundary_element() -> NcElement {
    let mut q = NcElement::zero();
    q.add_term((2, 0, 0), a_pow(2));
    q.add_term((0, 2, 0), a_pow(-2));
    q.add_term((0, 0, 2), a_pow(2));
    q.add_term((1, 1, 1), -a_pow(1));
    q
}

/// The closed-torus value of `Q`: `2(A² + A⁻²)`.
pub fn closed_torus_constant() -> LaurentPoly {
    (a_pow(2) + a_pow(-2)).scale(&2.into())
}

/// Reduces modulo the relation `Q = 2(A² + A⁻²)`. Since `Q` is central and
/// the leading part of `m·Q` is a unit multiple of `m·xyz`, every monomial
/// divisible by `xyz` is eliminated, highest degree first; the residual
/// contains only monomials missing one of the generators.
pub fn closed_torus_relation_check(e: &NcElement) -> NcElement {
    let mut reducer = Reducer::default();
    let relation = boundary_element().sub(&NcElement::scalar(closed_torus_constant()));
    let mut cur = e.clone();
    loop {
        let lead = cur
            .terms
            .keys()
            .filter(|&&(a, b, c)| a >= 1 && b >= 1 && c >= 1)
            .max_by_key(|&&(a, b, c)| (a + b + c, a, b, c))
            .copied();
        let Some(m) = lead else { return cur };
        let coeff = cur.terms[&m].clone();
        let base = (m.0 - 1, m.1 - 1, m.2 - 1);
        let multiple = reducer.mul(&NcElement::monomial(base, LaurentPoly::one(&["A"])), &relation);
        let unit = multiple.coeff(m);
        let inv = unit.inverse().expect("leading coefficient is a unit monomial");
        cur = cur.sub(&multiple.scale(&(&coeff * &inv)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<Gen> {
        parse_word(s).unwrap()
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one(&["A"])
    }

    #[test]
    fn reduce_examples() {
        let yx = nc_reduce(&w("yx"));
        let mut expected = NcElement::monomial((1, 1, 0), a_pow(2));
        expected.add_term((0, 0, 1), -(&a_pow(1) * &bracket_gap()));
        assert_eq!(yx, expected);
        assert_eq!(nc_reduce(&w("xyz")), NcElement::monomial((1, 1, 1), one()));
        assert_eq!(Reducer::new(Policy::Leftmost).reduce(&w("zyx")), Reducer::new(Policy::Rightmost).reduce(&w("zyx")));
        assert!(parse_word("xqy").is_err());
    }

    #[test]
    fn q_is_central() {
        let q = boundary_element();
        let mut r = Reducer::default();
        for g in Gen::ALL {
            let x = NcElement::gen(g);
            assert!(r.mul(&x, &q).sub(&r.mul(&q, &x)).is_zero(), "{g:?}");
        }
    }

    #[test]
    fn q_at_minus_one() {
        let q = boundary_element().map_coeffs(|c| c.substitute(&[("A", LaurentPoly::constant(-1))]).unwrap());
        let mut expected = NcElement::zero();
        for m in [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)] {
            expected.add_term(m, LaurentPoly::constant(1));
        }
        assert_eq!(q, expected);
    }

    #[test]
    fn closed_torus_examples() {
        let c = NcElement::scalar(closed_torus_constant());
        let q = boundary_element();
        assert!(closed_torus_relation_check(&q.sub(&c)).is_zero());
        let x = NcElement::gen(Gen::X);
        assert_eq!(closed_torus_relation_check(&x), x);
        let qx = nc_mul(&q, &x).sub(&nc_mul(&c, &x));
        assert!(closed_torus_relation_check(&qx).is_zero());
    }

    #[test]
    fn rewrites_decrease_length_then_inversions() {
        for word in ["zyx", "yxzx", "zzyx"] {
            let word = w(word);
            for pos in 0..word.len() - 1 {
                if let Some(out) = rewrite_at(&word, pos) {
                    for (_, v) in out {
                        assert!((v.len(), inversions(&v)) < (word.len(), inversions(&word)));
                    }
                }
            }
        }
    }
}
