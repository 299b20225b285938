//! Temperley–Lieb algebra on crossingless matchings, tangle reduction and
//! annular closure.
//!
//! Boundary points of the rectangle are numbered in cyclic order: bottom
//! points `1..=n` left to right, then top points `n+1..=2n` right to left, so
//! the top point above column `c` is `2n + 1 − c`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bracket::{a_pow, delta};
use crate::poly::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TlError {
    #[error("strand counts differ: {0} and {1}")]
    StrandMismatch(usize, usize),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid tangle: {0}")]
    InvalidTangle(String),
}

/// Noncrossing perfect matching of `2n` boundary points, stored as sorted
/// pairs `(a, b)` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Matching {
    n: usize,
    pairs: Vec<(u32, u32)>,
}

impl Matching {
    pub fn new(n: usize, pairs: Vec<(u32, u32)>) -> Result<Self, TlError> {
        let mut pairs: Vec<(u32, u32)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        if pairs.len() != n {
            return Err(TlError::InvalidMatching(format!("expected {n} pairs, got {}", pairs.len())));
        }
        let mut seen = vec![false; 2 * n + 1];
        for &(a, b) in &pairs {
            for p in [a, b] {
                if p == 0 || p as usize > 2 * n || std::mem::replace(&mut seen[p as usize], true) {
                    return Err(TlError::InvalidMatching(format!("point {p} out of range or repeated")));
                }
            }
        }
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[i + 1..] {
                if (a < c && c < b) != (a < d && d < b) {
                    return Err(TlError::InvalidMatching(format!("pairs ({a},{b}) and ({c},{d}) cross")));
                }
            }
        }
        Ok(Matching { n, pairs })
    }

    fn from_partner(partner: &[u32]) -> Result<Self, TlError> {
        let n = (partner.len() - 1) / 2;
        let pairs =
            (1..partner.len() as u32).filter(|&p| p < partner[p as usize]).map(|p| (p, partner[p as usize])).collect();
        Matching::new(n, pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// `partner[p]` for `p` in `1..=2n`; index 0 is unused.
    pub fn partner(&self) -> Vec<u32> {
        let mut v = vec![0; 2 * self.n + 1];
        for &(a, b) in &self.pairs {
            v[a as usize] = b;
            v[b as usize] = a;
        }
        v
    }

    pub fn identity(n: usize) -> Self {
        let top = |c: u32| 2 * n as u32 + 1 - c;
        Matching { n, pairs: (1..=n as u32).map(|c| (c, top(c))).collect() }.normalized()
    }

    /// Generator `e_i`, `1 ≤ i < n`: cup on columns `i, i+1` at the bottom and
    /// the matching cap at the top.
    pub fn e(n: usize, i: usize) -> Result<Self, TlError> {
        if i == 0 || i >= n {
            return Err(TlError::InvalidMatching(format!("e_{i} does not exist in TL_{n}")));
        }
        let top = |c: usize| (2 * n + 1 - c) as u32;
        let mut pairs = vec![(i as u32, i as u32 + 1), (top(i + 1), top(i))];
        pairs.extend((1..=n).filter(|&c| c != i && c != i + 1).map(|c| (c as u32, top(c))));
        Matching::new(n, pairs)
    }

    fn normalized(mut self) -> Self {
        self.pairs.sort_unstable();
        self
    }

    /// Parses `[(1,2),(3,6),(4,5)]`; the strand count is the number of pairs.
    pub fn parse(s: &str) -> Result<Self, TlError> {
        let bad = || TlError::InvalidMatching(format!("cannot parse `{s}`"));
        let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')).ok_or_else(bad)?;
        let mut pairs = Vec::new();
        if !inner.is_empty() {
            for chunk in inner.split("),") {
                let chunk = chunk.strip_prefix('(').ok_or_else(bad)?;
                let chunk = chunk.strip_suffix(')').unwrap_or(chunk);
                let (a, b) = chunk.split_once(',').ok_or_else(bad)?;
                pairs.push((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?));
            }
        }
        Matching::new(pairs.len(), pairs)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, "]")
    }
}

/// All noncrossing matchings on `2n` points.
pub fn enumerate_matchings(n: usize) -> Vec<Matching> {
    fn rec(points: &[u32]) -> Vec<Vec<(u32, u32)>> {
        if points.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in (1..points.len()).step_by(2) {
            let inside = rec(&points[1..k]);
            let outside = rec(&points[k + 1..]);
            for i in &inside {
                for o in &outside {
                    let mut v = vec![(points[0], points[k])];
                    v.extend_from_slice(i);
                    v.extend_from_slice(o);
                    out.push(v);
                }
            }
        }
        out
    }
    let points: Vec<u32> = (1..=2 * n as u32).collect();
    rec(&points).into_iter().map(|p| Matching { n, pairs: p }.normalized()).collect()
}

/// Stacks `top` on `bottom`; returns the induced matching and the number of
/// closed loops.
fn compose(top: &Matching, bottom: &Matching) -> (Matching, usize) {
    let n = top.n as u32;
    let (pt, pb) = (top.partner(), bottom.partner());
    // Bottom's top label L meets top's bottom label 2n + 1 − L.
    let glue = |l: u32| 2 * n + 1 - l;
    let mut partner = vec![0u32; 2 * n as usize + 1];
    let mut visited_t = vec![false; 2 * n as usize + 1];
    let mut visited_b = vec![false; 2 * n as usize + 1];
    // Each external point starts a path; `in_top` says which layer we are in.
    for start in 1..=2 * n {
        if partner[start as usize] != 0 {
            continue;
        }
        let mut in_top = start > n;
        let mut p = start;
        loop {
            let q = if in_top {
                visited_t[p as usize] = true;
                pt[p as usize]
            } else {
                visited_b[p as usize] = true;
                pb[p as usize]
            };
            if in_top {
                visited_t[q as usize] = true;
            } else {
                visited_b[q as usize] = true;
            }
            let external = if in_top { q > n } else { q <= n };
            if external {
                partner[start as usize] = q;
                partner[q as usize] = start;
                break;
            }
            p = glue(q);
            in_top = !in_top;
        }
    }
    // Remaining unvisited glued points form closed loops.
    let mut loops = 0;
    for s in 1..=n {
        if visited_t[s as usize] {
            continue;
        }
        loops += 1;
        let mut p = s;
        let mut in_top = true;
        loop {
            let q = if in_top {
                visited_t[p as usize] = true;
                let q = pt[p as usize];
                visited_t[q as usize] = true;
                q
            } else {
                visited_b[p as usize] = true;
                let q = pb[p as usize];
                visited_b[q as usize] = true;
                q
            };
            p = glue(q);
            in_top = !in_top;
            if in_top && p == s {
                break;
            }
        }
    }
    (Matching::from_partner(&partner).expect("stacking preserves planarity"), loops)
}

/// Linear combination of matchings with coefficients in `Z[A^{±1}]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TlElement {
    n: usize,
    #[serde(serialize_with = "ser_terms")]
    terms: BTreeMap<Matching, LaurentPoly>,
}

fn ser_terms<S: serde::Serializer>(t: &BTreeMap<Matching, LaurentPoly>, s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Term<'a> {
        matching: &'a [(u32, u32)],
        coeff: &'a LaurentPoly,
    }
    s.collect_seq(t.iter().map(|(m, c)| Term { matching: m.pairs(), coeff: c }))
}

impl TlElement {
    pub fn zero(n: usize) -> Self {
        TlElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Matching::identity(n).into()
    }

    pub fn e(n: usize, i: usize) -> Result<Self, TlError> {
        Ok(Matching::e(n, i)?.into())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Matching) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_else(|| LaurentPoly::zero(&["A"]))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Matching, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, TlError> {
        if self.n != other.n {
            return Err(TlError::StrandMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TlError> {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = TlElement::zero(self.n);
        for (m, k) in &self.terms {
            out.add_term(m.clone(), k * c);
        }
        out
    }

    /// `self · other`: `self` stacked on top of `other`.
    pub fn mul(&self, other: &Self) -> Result<Self, TlError> {
        if self.n != other.n {
            return Err(TlError::StrandMismatch(self.n, other.n));
        }
        let d = delta();
        let mut out = TlElement::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let (m, loops) = compose(m1, m2);
                let c = &(c1 * c2) * &d.pow(loops as i32).expect("nonnegative power");
                out.add_term(m, c);
            }
        }
        Ok(out)
    }
}

impl From<Matching> for TlElement {
    fn from(m: Matching) -> Self {
        let n = m.n;
        let mut terms = BTreeMap::new();
        terms.insert(m, LaurentPoly::one(&["A"]));
        TlElement { n, terms }
    }
}

impl fmt::Display for TlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{m}")?;
        }
        Ok(())
    }
}

/// `tl_multiply` on basis matchings.
pub fn tl_multiply(m1: &Matching, m2: &Matching) -> Result<TlElement, TlError> {
    TlElement::from(m1.clone()).mul(&m2.clone().into())
}

/// Tangle in a rectangle: crossings are PD tuples starting at an under-arc
/// and listed counterclockwise; `boundary[k]` is the arc ending at boundary
/// point `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tangle {
    pub n: usize,
    pub crossings: Vec<[u32; 4]>,
    pub boundary: Vec<u32>,
}

impl Tangle {
    pub fn identity(n: usize) -> Self {
        let mut boundary = vec![0; 2 * n];
        for c in 1..=n {
            boundary[c - 1] = c as u32;
            boundary[2 * n - c] = c as u32;
        }
        Tangle { n, crossings: Vec::new(), boundary }
    }

    /// Braid on `n` strands read bottom to top; letter `±i` is `σ_i^{±1}`.
    pub fn from_braid(n: usize, word: &[i32]) -> Result<Self, TlError> {
        let mut next = 1u32;
        let mut fresh = || {
            next += 1;
            next - 1
        };
        let mut cur: Vec<u32> = (0..n).map(|_| fresh()).collect();
        let mut boundary = vec![0; 2 * n];
        boundary[..n].copy_from_slice(&cur);
        let mut crossings = Vec::new();
        for &g in word {
            let i = g.unsigned_abs() as usize;
            if g == 0 || i >= n {
                return Err(TlError::InvalidTangle(format!("generator {g} out of range for {n} strands")));
            }
            let (sw, se) = (cur[i - 1], cur[i]);
            let (nw, ne) = (fresh(), fresh());
            crossings.push(if g > 0 { [se, ne, nw, sw] } else { [sw, se, ne, nw] });
            cur[i - 1] = nw;
            cur[i] = ne;
        }
        for c in 1..=n {
            boundary[2 * n - c] = cur[c - 1];
        }
        Ok(Tangle { n, crossings, boundary })
    }

    fn validate(&self) -> Result<(), TlError> {
        if self.boundary.len() != 2 * self.n {
            return Err(TlError::InvalidTangle(format!(
                "{} boundary arcs for {} strands",
                self.boundary.len(),
                self.n
            )));
        }
        let mut count: BTreeMap<u32, usize> = BTreeMap::new();
        for &l in self.crossings.iter().flatten().chain(&self.boundary) {
            *count.entry(l).or_default() += 1;
        }
        if let Some((l, c)) = count.iter().find(|(_, &c)| c != 2) {
            return Err(TlError::InvalidTangle(format!("arc {l} has {c} ends")));
        }
        Ok(())
    }
}

/// Resolves every crossing with the bracket relation and deletes closed
/// loops at `δ` each.
pub fn tangle_to_tl(t: &Tangle) -> Result<TlElement, TlError> {
    t.validate()?;
    let labels: Vec<u32> = {
        let mut v: Vec<u32> = t.boundary.iter().chain(t.crossings.iter().flatten()).copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let index = |l: u32| labels.binary_search(&l).expect("known label");
    let k = t.crossings.len();
    if k >= 32 {
        return Err(TlError::InvalidTangle("too many crossings".into()));
    }
    let d = delta();
    let mut out = TlElement::zero(t.n);
    for state in 0u64..1 << k {
        let mut parent: Vec<usize> = (0..labels.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut exp = 0i32;
        for (i, x) in t.crossings.iter().enumerate() {
            let pairs = if (state >> i) & 1 == 0 {
                exp += 1;
                crate::planar::A_PAIRS
            } else {
                exp -= 1;
                crate::planar::B_PAIRS
            };
            for (p, q) in pairs {
                let (a, b) = (find(&mut parent, index(x[p])), find(&mut parent, index(x[q])));
                parent[a] = b;
            }
        }
        let mut ends: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for (k, &l) in t.boundary.iter().enumerate() {
            ends.entry(find(&mut parent, index(l))).or_default().push(k as u32 + 1);
        }
        let roots: std::collections::BTreeSet<usize> = (0..labels.len()).map(|i| find(&mut parent, i)).collect();
        let loops = roots.iter().filter(|r| !ends.contains_key(r)).count();
        let mut pairs = Vec::new();
        for pts in ends.values() {
            if pts.len() != 2 {
                return Err(TlError::InvalidTangle("a strand does not join two boundary points".into()));
            }
            pairs.push((pts[0], pts[1]));
        }
        let m = Matching::new(t.n, pairs).map_err(|e| TlError::InvalidTangle(e.to_string()))?;
        out.add_term(m, &a_pow(exp) * &d.pow(loops as i32).expect("nonnegative power"));
    }
    Ok(out)
}

const A_ALPHA: &[&str] = &["A", "alpha"];

/// Closes top column `c` to bottom column `c` around the annulus. Loops with
/// nonzero winding contribute `α`, contractible ones `δ`.
pub fn annular_closure(e: &TlElement) -> LaurentPoly {
    let d = delta();
    let mut total = LaurentPoly::zero(A_ALPHA);
    for (m, c) in &e.terms {
        let (core, trivial) = closure_loops(m);
        let v = &(c * &d.pow(trivial as i32).expect("nonnegative power"))
            * &LaurentPoly::monomial(A_ALPHA, &[0, core as i32], 1);
        total = &total + &v;
    }
    total
}

/// Counts closed loops of the annular closure by winding: `(core, contractible)`.
fn closure_loops(m: &Matching) -> (usize, usize) {
    let n = m.n as u32;
    let partner = m.partner();
    let mut seen = vec![false; 2 * n as usize + 1];
    let (mut core, mut trivial) = (0, 0);
    for s in 1..=2 * n {
        if seen[s as usize] {
            continue;
        }
        let mut winding = 0i32;
        let mut p = s;
        loop {
            seen[p as usize] = true;
            let q = partner[p as usize];
            seen[q as usize] = true;
            // Closure arc: top point 2n+1−c meets bottom point c.
            p = 2 * n + 1 - q;
            winding += if q > n { 1 } else { -1 };
            if p == s {
                break;
            }
        }
        if winding != 0 {
            core += 1;
        } else {
            trivial += 1;
        }
    }
    (core, trivial)
}

/// Adds a straight strand on the right: `TL_n → TL_{n+1}`.
pub fn embed_strand(m: &Matching) -> Matching {
    let n = m.n as u32;
    let lift = |p: u32| if p <= n { p } else { p + 2 };
    let mut pairs: Vec<(u32, u32)> = m.pairs.iter().map(|&(a, b)| (lift(a), lift(b))).collect();
    pairs.push((n + 1, n + 2));
    Matching::new(m.n + 1, pairs).expect("adding a boundary-parallel strand keeps planarity")
}

/// Joins the rightmost top and bottom points around the right side:
/// `TL_{n+1} → TL_n`, closed loops counted at `δ`.
pub fn cap_right(e: &TlElement) -> Result<TlElement, TlError> {
    let n = e.n.checked_sub(1).ok_or(TlError::InvalidMatching("cannot cap TL_0".into()))?;
    let d = delta();
    let mut out = TlElement::zero(n);
    for (m, c) in &e.terms {
        let mut partner = m.partner();
        let (b, t) = (m.n as u32, m.n as u32 + 1);
        let mut loops = 0;
        if partner[b as usize] == t {
            loops = 1;
        } else {
            let (x, y) = (partner[b as usize], partner[t as usize]);
            partner[x as usize] = y;
            partner[y as usize] = x;
        }
        let relabel = |p: u32| if p < b { p } else { p - 2 };
        let pairs = (1..=2 * n as u32 + 2)
            .filter(|&p| p != b && p != t && p < partner[p as usize])
            .map(|p| (relabel(p), relabel(partner[p as usize])))
            .collect();
        let k = Matching::new(n, pairs)?;
        out.add_term(k, c * &d.pow(loops).expect("nonnegative power"));
    }
    Ok(out)
}

pub fn embed_element(e: &TlElement) -> TlElement {
    let mut out = TlElement::zero(e.n + 1);
    for (m, c) in &e.terms {
        out.add_term(embed_strand(m), c.clone());
    }
    out
}

/// Crossingless connections of `2n` points on one boundary of an annulus:
/// `C(2n, n)`.
pub fn count_annular_connections(n: usize) -> u128 {
    let n = n as u128;
    (1..=n).fold(1u128, |acc, k| acc * (n + k) / k)
}

/// Number of complementary regions of a matching drawn as chords in a disk,
/// found by walking region boundaries.
pub fn matching_regions(m: &Matching) -> usize {
    let two_n = 2 * m.n as u32;
    if two_n == 0 {
        return 1;
    }
    let partner = m.partner();
    let mut used = vec![false; two_n as usize + 1];
    let mut regions = 0;
    // Boundary arc `i` runs from point i to point i+1 (cyclically).
    for start in 1..=two_n {
        if used[start as usize] {
            continue;
        }
        regions += 1;
        let mut i = start;
        while !used[i as usize] {
            used[i as usize] = true;
            let end = i % two_n + 1;
            i = partner[end as usize];
        }
    }
    regions
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> TlElement {
        TlElement::e(n, i).unwrap()
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_matchings(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn generators_have_expected_pairs() {
        assert_eq!(Matching::e(3, 1).unwrap().to_string(), "[(1,2),(3,4),(5,6)]");
        assert_eq!(Matching::identity(2).to_string(), "[(1,4),(2,3)]");
        assert_eq!(Matching::parse("[(1,2),(3,6),(4,5)]").unwrap().n(), 3);
        assert!(Matching::parse("[(1,3),(2,4)]").is_err());
    }

    #[test]
    fn multiplication_examples() {
        let d = delta();
        assert_eq!(e(2, 1).mul(&e(2, 1)).unwrap(), e(2, 1).scale(&d));
        assert_eq!(e(3, 1).mul(&e(3, 2)).unwrap().mul(&e(3, 1)).unwrap(), e(3, 1));
        let m = Matching::parse("[(1,2),(3,6),(4,5)]").unwrap();
        assert_eq!(tl_multiply(&Matching::identity(3), &m).unwrap(), m.into());
        assert!(e(2, 1).mul(&e(3, 1)).is_err());
    }

    #[test]
    fn single_crossing_and_double_twist() {
        let one = LaurentPoly::one(&["A"]);
        let expected = TlElement::identity(2).scale(&a_pow(1)).add(&e(2, 1).scale(&a_pow(-1))).unwrap();
        let s = tangle_to_tl(&Tangle::from_braid(2, &[1]).unwrap()).unwrap();
        assert_eq!(s, expected);
        let s2 = tangle_to_tl(&Tangle::from_braid(2, &[1, 1]).unwrap()).unwrap();
        assert_eq!(s2, s.mul(&s).unwrap());
        let by_hand = TlElement::identity(2).scale(&a_pow(2)).add(&e(2, 1).scale(&(&one - &a_pow(-4)))).unwrap();
        assert_eq!(s2, by_hand);
        assert_eq!(tangle_to_tl(&Tangle::identity(3)).unwrap(), TlElement::identity(3));
    }

    #[test]
    fn inverse_crossing_cancels() {
        let t = tangle_to_tl(&Tangle::from_braid(3, &[1, -1]).unwrap()).unwrap();
        assert_eq!(t, TlElement::identity(3));
    }

    #[test]
    fn bad_tangle_rejected() {
        let t = Tangle { n: 1, crossings: vec![], boundary: vec![1, 2] };
        assert!(matches!(tangle_to_tl(&t), Err(TlError::InvalidTangle(_))));
    }

    #[test]
    fn closures() {
        let alpha = |k| LaurentPoly::monomial(A_ALPHA, &[0, k], 1);
        assert_eq!(annular_closure(&TlElement::identity(3)), alpha(3));
        assert_eq!(annular_closure(&e(2, 1)), delta());
        assert_eq!(annular_closure(&TlElement::identity(0)), LaurentPoly::constant(1));
    }

    #[test]
    fn cap_cup_is_delta() {
        for n in 0..=4 {
            for m in enumerate_matchings(n) {
                let back = cap_right(&embed_element(&m.clone().into())).unwrap();
                assert_eq!(back, TlElement::from(m).scale(&delta()));
            }
        }
    }

    #[test]
    fn annular_counts() {
        assert_eq!(count_annular_connections(0), 1);
        assert_eq!(count_annular_connections(1), 2);
        assert_eq!(count_annular_connections(3), 20);
        for n in 0..=6 {
            let by_regions: usize = enumerate_matchings(n).iter().map(matching_regions).sum();
            assert_eq!(by_regions as u128, count_annular_connections(n));
        }
    }
}
