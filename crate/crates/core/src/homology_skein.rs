//! Smith normal form over `Z` and the decomposition of the q-deformed second
//! skein module from homological data.
//!
//! Given `H₁ = Z^r ⊕ ⊕ Z/t_i`, `rank H₂ = s` and the intersection pairing on
//! the free parts (an `r × s` matrix `Φ`), the module is free on the classes
//! `α` that pair trivially with all of `H₂` and contributes
//! `Z[q^{±1}]/(q^{2·mul(α)} − 1)` for every other class, where `mul(α)` is the
//! gcd of the entries of `αᵀΦ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::poly::ser_bigint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("rows have different lengths")]
    Ragged,
    #[error("pairing is {rows}×{cols}, expected {h1}×{h2}")]
    Dimension { rows: usize, cols: usize, h1: usize, h2: usize },
    #[error("torsion coefficients must be at least 2 and each must divide the next: {0:?}")]
    Torsion(Vec<BigInt>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds from rows; `cols` is needed only when there are no rows.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<Self, HomologyError> {
        let cols = rows.first().map_or(cols, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(HomologyError::Ragged);
        }
        Ok(IntMatrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self, HomologyError> {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), 0)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += k · row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(dst, c) + k * self.get(src, c);
            self.set(dst, c, v);
        }
    }

    /// col[dst] += k · col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, dst) + k * self.get(r, src);
            self.set(r, dst, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !m.get(r, k).is_zero()) else { return BigInt::zero() };
            if p != k {
                m.swap_rows(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        if n == 0 {
            BigInt::one()
        } else {
            sign * m.get(n - 1, n - 1)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Diagonal entries `d₁ | d₂ | …`, `min(rows, cols)` of them.
    pub factors: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

/// `left · m · right = diag(factors)` with `left`, `right` unimodular.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let k_max = rows.min(cols);
    for t in 0..k_max {
        loop {
            // Smallest nonzero entry of the trailing block as pivot.
            let pivot = (t..rows)
                .flat_map(|r| (t..cols).map(move |c| (r, c)))
                .filter(|&(r, c)| !a.get(r, c).is_zero())
                .min_by_key(|&(r, c)| a.get(r, c).abs());
            let Some((pr, pc)) = pivot else { break };
            a.swap_rows(t, pr);
            left.swap_rows(t, pr);
            a.swap_cols(t, pc);
            right.swap_cols(t, pc);
            let mut clean = true;
            for r in t + 1..rows {
                let q = a.get(r, t).div_floor(a.get(t, t));
                if !q.is_zero() {
                    a.add_row(r, t, &-&q);
                    left.add_row(r, t, &-&q);
                }
                clean &= a.get(r, t).is_zero();
            }
            for c in t + 1..cols {
                let q = a.get(t, c).div_floor(a.get(t, t));
                if !q.is_zero() {
                    a.add_col(c, t, &-&q);
                    right.add_col(c, t, &-&q);
                }
                clean &= a.get(t, c).is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into row t and retry.
            let offending = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !a.get(r, c).is_multiple_of(a.get(t, t))));
            match offending {
                Some(r) => {
                    a.add_row(t, r, &BigInt::one());
                    left.add_row(t, r, &BigInt::one());
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }
    let factors = (0..k_max).map(|i| a.get(i, i).clone()).collect();
    SmithForm { factors, left, right }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingData {
    pub h1_free_rank: usize,
    pub h1_torsion: Vec<BigInt>,
    pub h2_rank: usize,
    pub pairing: IntMatrix,
}

impl PairingData {
    pub fn new(
        h1_free_rank: usize,
        h1_torsion: Vec<BigInt>,
        h2_rank: usize,
        pairing: IntMatrix,
    ) -> Result<Self, HomologyError> {
        if pairing.rows != h1_free_rank || pairing.cols != h2_rank {
            return Err(HomologyError::Dimension {
                rows: pairing.rows,
                cols: pairing.cols,
                h1: h1_free_rank,
                h2: h2_rank,
            });
        }
        let two = BigInt::from(2);
        let chain_ok =
            h1_torsion.iter().all(|t| *t >= two) && h1_torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0]));
        if !chain_ok {
            return Err(HomologyError::Torsion(h1_torsion));
        }
        Ok(PairingData { h1_free_rank, h1_torsion, h2_rank, pairing })
    }
}

fn ser_vec<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    struct Item<'a>(&'a BigInt);
    impl Serialize for Item<'_> {
        fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            ser_bigint(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&Item(x))?;
    }
    seq.end()
}

fn ser_vecs<S: serde::Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    struct Row<'a>(&'a [BigInt]);
    impl Serialize for Row<'_> {
        fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            ser_vec(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&Row(r))?;
    }
    seq.end()
}

/// One summand of the bounded table: the class `α = (free; torsion)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summand {
    #[serde(serialize_with = "ser_vec")]
    pub free: Vec<BigInt>,
    #[serde(serialize_with = "ser_vec")]
    pub torsion: Vec<BigInt>,
    /// 0 exactly when `α` pairs trivially with `H₂`.
    #[serde(serialize_with = "ser_bigint")]
    pub mul: BigInt,
    pub module: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct S2Decomposition {
    /// Invariant factors of the torsion subgroup of `H₁`.
    #[serde(serialize_with = "ser_vec")]
    pub torsion_subgroup: Vec<BigInt>,
    /// Basis of the free classes pairing trivially with `H₂`.
    #[serde(serialize_with = "ser_vecs")]
    pub pairing_kernel_basis: Vec<Vec<BigInt>>,
    pub pairing_rank: usize,
    pub rule: String,
    pub table: Vec<Summand>,
}

/// `mul(α)` for a free-coordinate vector: gcd of the entries of `αᵀΦ`.
pub fn mul_of(pairing: &IntMatrix, alpha: &[BigInt]) -> BigInt {
    assert_eq!(alpha.len(), pairing.rows, "class has the wrong length");
    let mut g = BigInt::zero();
    for c in 0..pairing.cols {
        let entry: BigInt = (0..pairing.rows).map(|r| &alpha[r] * pairing.get(r, c)).sum();
        g = g.gcd(&entry);
    }
    g
}

fn module_name(mul: &BigInt) -> String {
    if mul.is_zero() {
        "Z[q^±1]".to_string()
    } else {
        format!("Z[q^±1]/(q^{}-1)", 2 * mul)
    }
}

/// Decomposition rule plus an explicit table over the classes whose free
/// coordinates lie in `[−bound, bound]` (torsion coordinates range over
/// `Z/t_i`).
pub fn s2_decomposition(data: &PairingData, bound: u32) -> S2Decomposition {
    let snf = smith_normal_form(&data.pairing);
    let rank = snf.factors.iter().filter(|f| !f.is_zero()).count();
    let pairing_kernel_basis = (rank..data.h1_free_rank).map(|i| snf.left.row(i).to_vec()).collect();

    let mut table = Vec::new();
    let bound = bound as i64;
    let mut free = vec![-bound; data.h1_free_rank];
    let mut torsion = vec![BigInt::zero(); data.h1_torsion.len()];
    let free_classes: Vec<Vec<BigInt>> = {
        let mut out = Vec::new();
        loop {
            out.push(free.iter().map(|&x| BigInt::from(x)).collect());
            let Some(i) = (0..free.len()).rev().find(|&i| free[i] < bound) else { break };
            free[i] += 1;
            for x in free.iter_mut().skip(i + 1) {
                *x = -bound;
            }
        }
        out
    };
    let torsion_classes: Vec<Vec<BigInt>> = {
        let mut out = Vec::new();
        loop {
            out.push(torsion.clone());
            let Some(i) = (0..torsion.len()).rev().find(|&i| &torsion[i] + 1 < data.h1_torsion[i]) else { break };
            torsion[i] += 1;
            for x in torsion.iter_mut().skip(i + 1) {
                *x = BigInt::zero();
            }
        }
        out
    };
    for f in &free_classes {
        let mul = mul_of(&data.pairing, f);
        for t in &torsion_classes {
            table.push(Summand { free: f.clone(), torsion: t.clone(), mul: mul.clone(), module: module_name(&mul) });
        }
    }
    S2Decomposition {
        torsion_subgroup: data.h1_torsion.clone(),
        pairing_kernel_basis,
        pairing_rank: rank,
        rule: "mul(alpha) = gcd of the entries of alpha^T * pairing; alpha is in T(H1) iff mul(alpha) = 0".into(),
        table,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64(rows).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    fn check(a: &IntMatrix) -> Vec<BigInt> {
        let s = smith_normal_form(a);
        let d = s.left.mul(a).mul(&s.right);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let expected = if i == j { s.factors[i].clone() } else { BigInt::zero() };
                assert_eq!(*d.get(i, j), expected);
            }
        }
        assert_eq!(s.left.determinant().abs(), BigInt::one());
        assert_eq!(s.right.determinant().abs(), BigInt::one());
        s.factors
    }

    #[test]
    fn snf_examples() {
        assert_eq!(check(&m(&[vec![2, 0], vec![0, 3]])), big(&[1, 6]));
        assert_eq!(check(&m(&[vec![0, 0, 0], vec![0, 0, 0]])), big(&[0, 0]));
        assert_eq!(check(&IntMatrix::identity(3)), big(&[1, 1, 1]));
        assert_eq!(check(&m(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])), big(&[2, 6, 12]));
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[vec![2, 1], vec![7, 4]]).determinant(), BigInt::from(1));
        assert_eq!(m(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]]).determinant(), BigInt::from(-5));
    }

    #[test]
    fn s1_times_s2() {
        let data = PairingData::new(1, vec![], 1, m(&[vec![1]])).unwrap();
        let dec = s2_decomposition(&data, 4);
        assert!(dec.pairing_kernel_basis.is_empty());
        assert_eq!(dec.table.len(), 9);
        for s in &dec.table {
            assert_eq!(s.mul, s.free[0].abs());
        }
        assert_eq!(dec.table[0].module, "Z[q^±1]/(q^8-1)");
    }

    #[test]
    fn zero_pairing_is_free() {
        let data = PairingData::new(2, big(&[2]), 1, IntMatrix::zeros(2, 1)).unwrap();
        let dec = s2_decomposition(&data, 1);
        assert_eq!(dec.pairing_kernel_basis.len(), 2);
        assert!(dec.table.iter().all(|s| s.mul.is_zero() && s.module == "Z[q^±1]"));
        assert_eq!(dec.table.len(), 9 * 2);
    }

    #[test]
    fn three_torus() {
        let data = PairingData::new(3, vec![], 3, IntMatrix::identity(3)).unwrap();
        assert_eq!(mul_of(&data.pairing, &big(&[4, 6, -10])), BigInt::from(2));
        assert!(PairingData::new(2, vec![], 3, IntMatrix::identity(3)).is_err());
        assert!(PairingData::new(0, big(&[4, 6]), 0, IntMatrix::zeros(0, 0)).is_err());
    }
}
