//! Kauffman bracket, its framing normalization and the Jones polynomial.
//!
//! The A-smoothing of `X(a,b,c,d)` joins `a–b` and `c–d`; the B-smoothing
//! joins `a–d` and `b–c`. With the unknot normalized to 1 every state
//! contributes `A^{#A − #B} δ^{loops − 1}`, `δ = −A² − A⁻²`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::diagram::LinkDiagram;
use crate::planar::{Planar, A_PAIRS, B_PAIRS};
use crate::poly::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    StateSum,
    SkeinRecursion,
}

impl std::str::FromStr for Strategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "state_sum" | "state-sum" => Ok(Strategy::StateSum),
            "skein" | "skein_recursion" | "skein-recursion" => Ok(Strategy::SkeinRecursion),
            other => Err(format!("unknown strategy `{other}` (expected state_sum or skein)")),
        }
    }
}

/// Value of a link invariant. The link with no components has no polynomial
/// value; it is reported as the formal token `empty`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LinkValue {
    Empty,
    Poly(LaurentPoly),
}

pub type BracketValue = LinkValue;

impl LinkValue {
    pub fn poly(&self) -> Option<&LaurentPoly> {
        match self {
            BracketValue::Poly(p) => Some(p),
            BracketValue::Empty => None,
        }
    }

    pub fn into_poly(self) -> Option<LaurentPoly> {
        match self {
            BracketValue::Poly(p) => Some(p),
            BracketValue::Empty => None,
        }
    }

    pub fn map(self, f: impl FnOnce(LaurentPoly) -> LaurentPoly) -> Self {
        match self {
            BracketValue::Poly(p) => BracketValue::Poly(f(p)),
            BracketValue::Empty => BracketValue::Empty,
        }
    }
}

impl fmt::Display for BracketValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketValue::Poly(p) => write!(f, "{p}"),
            BracketValue::Empty => write!(f, "empty"),
        }
    }
}

impl Serialize for BracketValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            BracketValue::Poly(p) => p.serialize(s),
            BracketValue::Empty => s.serialize_str("empty"),
        }
    }
}

const A: &[&str] = &["A"];
const AD: &[&str] = &["A", "d"];

pub fn a_pow(e: i32) -> LaurentPoly {
    LaurentPoly::monomial(A, &[e], 1)
}

/// Loop value `δ = −A² − A⁻²`.
pub fn delta() -> LaurentPoly {
    -(a_pow(2) + a_pow(-2))
}

pub fn bracket(d: &LinkDiagram, strategy: Strategy) -> BracketValue {
    match strategy {
        Strategy::StateSum => state_sum(d),
        Strategy::SkeinRecursion => skein(d),
    }
}

/// State sum; parallel over states when the `parallel` feature is enabled.
pub fn state_sum(d: &LinkDiagram) -> BracketValue {
    #[cfg(feature = "parallel")]
    {
        state_sum_parallel(d)
    }
    #[cfg(not(feature = "parallel"))]
    {
        state_sum_sequential(d)
    }
}

/// Histogram `counts[e + n][loops]` of states by A-exponent and loop count.
struct StateCounts {
    n: usize,
    counts: Vec<Vec<u64>>,
}

impl StateCounts {
    fn new(n: usize) -> Self {
        StateCounts { n, counts: vec![vec![0; 2 * n + 2]; 2 * n + 1] }
    }

    #[cfg(feature = "parallel")]
    fn merge(mut self, other: StateCounts) -> Self {
        for (r, o) in self.counts.iter_mut().zip(other.counts) {
            for (x, y) in r.iter_mut().zip(o) {
                *x += y;
            }
        }
        self
    }
}

fn eval_states(d: &LinkDiagram, range: std::ops::Range<u64>) -> StateCounts {
    let n = d.num_crossings();
    let xs = d.crossings();
    let mut out = StateCounts::new(n);
    let mut parent = vec![0u32; 2 * n + 1];
    for state in range {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u32;
        }
        let mut b_count = 0usize;
        for (i, x) in xs.iter().enumerate() {
            let pairs = if (state >> i) & 1 == 1 {
                b_count += 1;
                B_PAIRS
            } else {
                A_PAIRS
            };
            for (p, q) in pairs {
                union(&mut parent, x[p], x[q]);
            }
        }
        let loops = (1..=2 * n as u32).filter(|&l| find(&mut parent, l) == l).count();
        let e = 2 * (n - b_count); // (#A − #B) + n
        out.counts[e][loops] += 1;
    }
    out
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let g = parent[parent[x as usize] as usize];
        parent[x as usize] = g;
        x = g;
    }
    x
}

fn union(parent: &mut [u32], a: u32, b: u32) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra as usize] = rb;
    }
}

fn assemble(d: &LinkDiagram, sc: StateCounts) -> BracketValue {
    let n = sc.n;
    let extra = d.extra_unknots();
    if n == 0 {
        return if extra == 0 {
            BracketValue::Empty
        } else {
            BracketValue::Poly(delta().pow(extra as i32 - 1).expect("nonnegative power"))
        };
    }
    let mut delta_pows = vec![LaurentPoly::constant(1)];
    for k in 1..sc.counts[0].len() + extra {
        delta_pows.push(&delta_pows[k - 1] * &delta());
    }
    let mut total = LaurentPoly::zero(A);
    for (ei, row) in sc.counts.iter().enumerate() {
        for (loops, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = LaurentPoly::monomial(A, &[ei as i32 - n as i32], c);
            total = &total + &(&term * &delta_pows[loops + extra - 1]);
        }
    }
    BracketValue::Poly(total)
}

pub fn state_sum_sequential(d: &LinkDiagram) -> BracketValue {
    let n = d.num_crossings();
    assert!(n < 64, "state sum limited to fewer than 64 crossings");
    assemble(d, eval_states(d, 0..1u64 << n))
}

#[cfg(feature = "parallel")]
pub fn state_sum_parallel(d: &LinkDiagram) -> BracketValue {
    use rayon::prelude::*;
    const CHUNK: u64 = 1 << 10;
    let n = d.num_crossings();
    assert!(n < 64, "state sum limited to fewer than 64 crossings");
    let total = 1u64 << n;
    let chunks = total.div_ceil(CHUNK);
    let sc = (0..chunks)
        .into_par_iter()
        .map(|c| eval_states(d, c * CHUNK..((c + 1) * CHUNK).min(total)))
        .reduce(|| StateCounts::new(n), StateCounts::merge);
    assemble(d, sc)
}

/// Without the `parallel` feature this is the sequential state sum.
#[cfg(not(feature = "parallel"))]
pub fn state_sum_parallel(d: &LinkDiagram) -> BracketValue {
    state_sum_sequential(d)
}

type Memo = HashMap<Vec<u32>, LaurentPoly>;

/// Resolves `p.xs[0]` repeatedly. The result is a polynomial in `A` and a
/// loop marker `d` counting the circles produced (free loops of `p` are
/// ignored).
fn resolve(p: &Planar, memo: &mut Option<Memo>, modulus: Option<&BigInt>) -> LaurentPoly {
    if p.xs.is_empty() {
        return LaurentPoly::one(AD);
    }
    let key = memo.as_ref().map(|_| p.canonical_key(false));
    if let (Some(m), Some(k)) = (memo.as_ref(), key.as_ref()) {
        if let Some(v) = m.get(k) {
            return v.clone();
        }
    }
    let mut total = LaurentPoly::zero(AD);
    for (a_exp, pairs) in [(1, A_PAIRS), (-1, B_PAIRS)] {
        let mut q = p.clone();
        q.loops = 0;
        let made = q.remove_joining(0, pairs) as i32;
        let sub = resolve(&q, memo, modulus);
        total = &total + &sub.shift(&[a_exp, made]);
    }
    if let Some(m) = modulus {
        total = total.reduce_mod(m);
    }
    if let (Some(m), Some(k)) = (memo.as_mut(), key) {
        m.insert(k, total.clone());
    }
    total
}

fn finish(raw: LaurentPoly, extra: usize, modulus: Option<&BigInt>) -> BracketValue {
    let raw = raw.shift(&[0, extra as i32]);
    if raw.terms().any(|(e, _)| e[1] < 1) {
        // Only the empty link has a state without circles.
        return BracketValue::Empty;
    }
    let lowered = raw.shift(&[0, -1]);
    let a = LaurentPoly::var(A, "A");
    let mut v = lowered.substitute(&[("A", a), ("d", delta())]).expect("d exponents are nonnegative");
    if let Some(m) = modulus {
        v = v.reduce_mod(m);
    }
    BracketValue::Poly(v)
}

/// Skein recursion memoized on canonical sub-diagram keys.
pub fn skein(d: &LinkDiagram) -> BracketValue {
    let p = d.to_planar();
    let raw = resolve(&p, &mut Some(Memo::new()), None);
    finish(raw, d.extra_unknots(), None)
}

/// Unmemoized skein recursion that resolves crossings in `order` (a
/// permutation of crossing indices).
pub fn skein_ordered(d: &LinkDiagram, order: &[usize]) -> BracketValue {
    let mut p = d.to_planar();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    assert!(sorted.iter().copied().eq(0..d.num_crossings()), "order must be a permutation");
    p.xs = order.iter().map(|&i| p.xs[i]).collect();
    let raw = resolve(&p, &mut None, None);
    finish(raw, d.extra_unknots(), None)
}

/// Bracket computed entirely over `Z/m`: every intermediate value of the
/// skein recursion is reduced modulo `m`.
pub fn bracket_mod(d: &LinkDiagram, m: &BigInt) -> BracketValue {
    let p = d.to_planar();
    let raw = resolve(&p, &mut Some(Memo::new()), Some(m));
    finish(raw, d.extra_unknots(), Some(m))
}

/// Framing-normalized bracket `(−A³)^{−w} ⟨D⟩`.
pub fn framed_invariant(d: &LinkDiagram) -> BracketValue {
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let factor = LaurentPoly::monomial(A, &[-3 * w], sign);
    bracket(d, Strategy::StateSum).map(|p| &factor * &p)
}

/// Jones polynomial in the variable `A` (`t = A⁻⁴`).
pub fn jones(d: &LinkDiagram) -> BracketValue {
    framed_invariant(d)
}

/// Re-expresses a polynomial in `A` in `t = A⁻⁴` when every exponent is a
/// multiple of 4.
pub fn jones_in_t(v: &LaurentPoly) -> Option<LaurentPoly> {
    let idx = v.var_index("A");
    if v.terms().any(|(e, _)| idx.is_some_and(|i| e[i] % 4 != 0)) {
        return None;
    }
    Some(v.map_exponents(&["t"], |e| smallvec::smallvec![idx.map_or(0, |i| -e[i] / 4)]))
}
