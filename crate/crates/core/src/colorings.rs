//! Fox `p`-colorings and the identity `col₃(L) = 3|V(e^{iπ/3})|²`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::bracket::{delta, jones, LinkValue};
use crate::diagram::LinkDiagram;
use crate::poly::{CyclotomicValue, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
}

pub fn is_odd_prime(p: u64) -> bool {
    p > 2 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Arcs of the diagram: each label is mapped to its arc index. Free
/// unknots contribute further arcs with no labels.
pub fn arcs(d: &LinkDiagram) -> (Vec<usize>, usize) {
    let n = 2 * d.num_crossings();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for x in d.crossings() {
        let (a, b) = (find(&mut parent, x[1] as usize), find(&mut parent, x[3] as usize));
        parent[a] = b;
    }
    let mut index = vec![usize::MAX; n + 1];
    let mut arc_of = vec![0; n + 1];
    let mut count = 0;
    for (l, arc) in arc_of.iter_mut().enumerate().skip(1) {
        let r = find(&mut parent, l);
        if index[r] == usize::MAX {
            index[r] = count;
            count += 1;
        }
        *arc = index[r];
    }
    (arc_of, count + d.extra_unknots())
}

/// Coloring matrix over `Z/p`: one row `2·over − under_in − under_out` per
/// crossing.
pub fn coloring_matrix(d: &LinkDiagram, p: u64) -> Vec<Vec<u64>> {
    let (arc_of, num_arcs) = arcs(d);
    d.crossings()
        .iter()
        .map(|x| {
            let mut row = vec![0u64; num_arcs];
            let mut add = |label: u32, k: u64| {
                let a = arc_of[label as usize];
                row[a] = (row[a] + k) % p;
            };
            add(x[1], 2);
            add(x[0], p - 1);
            add(x[2], p - 1);
            row
        })
        .collect()
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    r
}

/// Rank over `Z/p` by Gaussian elimination.
pub fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for v in m[rank].iter_mut() {
            *v = (*v as u128 * inv as u128 % p as u128) as u64;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                let pivot_row = m[rank].clone();
                for (x, &y) in m[r].iter_mut().zip(&pivot_row) {
                    let sub = (f as u128 * y as u128 % p as u128) as u64;
                    *x = (*x + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Number of Fox `p`-colorings, `p^{nullity}`.
pub fn count_colorings(d: &LinkDiagram, p: u64) -> Result<BigUint, ColoringError> {
    if !is_odd_prime(p) {
        return Err(ColoringError::NotOddPrime(p));
    }
    let (_, num_arcs) = arcs(d);
    let nullity = num_arcs - rank_mod_p(coloring_matrix(d, p), p);
    Ok(BigUint::from(p).pow(nullity as u32))
}

/// Both sides of `col₃(L) = 3|V(ζ)|²`, `ζ = e^{iπ/3}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Col3Check {
    #[serde(serialize_with = "ser_biguint")]
    pub lhs: BigUint,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: BigRational,
}

impl Col3Check {
    pub fn holds(&self) -> bool {
        BigRational::from_integer(BigInt::from(self.lhs.clone())) == self.rhs
    }
}

fn ser_biguint<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    crate::poly::ser_bigint(&BigInt::from(v.clone()), s)
}

fn ser_rational<S: serde::Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    if v.is_integer() {
        crate::poly::ser_bigint(v.numer(), s)
    } else {
        s.serialize_str(&v.to_string())
    }
}

/// `|f(A)|²` at `A` with `A⁻⁴ = ζ`: forms `f(A)·f(A⁻¹)`, whose exponents are
/// multiples of 4, and evaluates it in `t = A⁻⁴` at `ζ`.
pub fn norm_sq_at_zeta(f: &LaurentPoly) -> BigRational {
    let f = f + &LaurentPoly::zero(&["A"]);
    let conj = f.map_exponents(&["A"], |e| smallvec::smallvec![-e[0]]);
    let w = &f * &conj;
    assert!(w.terms().all(|(e, _)| e[0] % 4 == 0), "|V|² lives in integer powers of t");
    let in_t = w.map_exponents(&["t"], |e| smallvec::smallvec![-e[0] / 4]);
    let value: CyclotomicValue = in_t.eval_zeta6().expect("univariate in t");
    assert!(value.is_real(), "|V(ζ)|² is real");
    value.u
}

pub fn col3_jones_check(d: &LinkDiagram) -> Col3Check {
    let lhs = count_colorings(d, 3).expect("3 is an odd prime");
    let three = BigRational::from_integer(3.into());
    let rhs = match jones(d) {
        LinkValue::Poly(v) => three * norm_sq_at_zeta(&v),
        // V(∅) = δ⁻¹
        LinkValue::Empty => three / norm_sq_at_zeta(&delta()),
    };
    Col3Check { lhs, rhs }
}
