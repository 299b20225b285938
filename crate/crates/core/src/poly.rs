//! Sparse Laurent polynomials with exact integer coefficients.
//!
//! Every invariant in this crate is a [`LaurentPoly`]: a finite map from
//! integer exponent vectors (one slot per named variable, negative entries
//! allowed) to nonzero [`BigInt`] coefficients. Terms are kept in a
//! `BTreeMap`, so iteration follows lexicographic order on exponent vectors
//! and equality/hashing are deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;
use thiserror::Error;

pub type Exponents = SmallVec<[i32; 4]>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },
    #[error("variable `{0}` has no binding")]
    Unbound(String),
    #[error("negative power of the non-monomial {0}")]
    NonMonomialInverse(String),
    #[error("expected a polynomial in at most one variable, found {0:?}")]
    NotUnivariate(Vec<String>),
    #[error("division is not exact")]
    Inexact,
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent vector of length {found} for {expected} variables")]
    Arity { expected: usize, found: usize },
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
}

#[derive(Clone, Debug)]
pub struct LaurentPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Exponents, BigInt>,
}

fn make_vars(names: &[&str]) -> Arc<[String]> {
    names.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
}

/// Common variable list plus whichever operands had to be lifted to it.
type Aligned = (Arc<[String]>, Option<LaurentPoly>, Option<LaurentPoly>);

impl LaurentPoly {
    pub fn zero(vars: &[&str]) -> Self {
        LaurentPoly { vars: make_vars(vars), terms: BTreeMap::new() }
    }

    /// The integer constant `c`, carrying no variables. Constants combine
    /// with polynomials over any variable list.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        let c = c.into();
        if !c.is_zero() {
            terms.insert(Exponents::new(), c);
        }
        LaurentPoly { vars: Arc::from(Vec::new()), terms }
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::monomial(vars, &vec![0; vars.len()], 1)
    }

    pub fn monomial(vars: &[&str], exps: &[i32], coeff: impl Into<BigInt>) -> Self {
        assert_eq!(vars.len(), exps.len(), "exponent arity");
        let mut p = Self::zero(vars);
        let c = coeff.into();
        if !c.is_zero() {
            p.terms.insert(Exponents::from_slice(exps), c);
        }
        p
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &[&str], name: &str) -> Self {
        let idx = vars.iter().position(|v| *v == name).expect("variable not in list");
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Self::monomial(vars, &e, 1)
    }

    /// Builds a polynomial from raw terms, validating arity and variable names
    /// and merging duplicate exponents.
    pub fn from_terms<I>(vars: Vec<String>, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<i32>, BigInt)>,
    {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        let mut p = LaurentPoly { vars: vars.into(), terms: BTreeMap::new() };
        for (e, c) in terms {
            if e.len() != p.vars.len() {
                return Err(PolyError::Arity { expected: p.vars.len(), found: e.len() });
            }
            p.add_term(Exponents::from_vec(e), c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// True when every stored term has the zero exponent vector.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms.iter().find(|(e, _)| e.iter().all(|&x| x == 0)).map(|(_, c)| c.clone()).unwrap_or_default()
    }

    /// `Some((exps, coeff))` when the polynomial has exactly one term.
    pub fn as_monomial(&self) -> Option<(&Exponents, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Smallest and largest exponent of variable `idx` over all terms.
    pub fn exponent_range(&self, idx: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[idx]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Re-expresses `self` over `vars`, which must contain every variable
    /// actually used by `self`.
    fn lift_to(&self, vars: &Arc<[String]>) -> Result<Self, PolyError> {
        if Arc::ptr_eq(&self.vars, vars) || self.vars[..] == vars[..] {
            return Ok(LaurentPoly { vars: vars.clone(), terms: self.terms.clone() });
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None if self.terms.keys().all(|e| e[i] == 0) => map.push(None),
                None => return Err(PolyError::VariableMismatch { left: self.vars.to_vec(), right: vars.to_vec() }),
            }
        }
        let mut out = LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let mut ne = Exponents::from_elem(0, vars.len());
            for (i, &x) in e.iter().enumerate() {
                if let Some(j) = map[i] {
                    ne[j] = x;
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Brings two operands to a common variable list. Identical lists pass
    /// through; a constant (or zero) operand adopts the other's list.
    fn align(&self, other: &Self) -> Result<Aligned, PolyError> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars[..] == other.vars[..] {
            return Ok((self.vars.clone(), None, None));
        }
        if self.is_constant() {
            return Ok((other.vars.clone(), Some(self.lift_to(&other.vars)?), None));
        }
        if other.is_constant() {
            return Ok((self.vars.clone(), None, Some(other.lift_to(&self.vars)?)));
        }
        Err(PolyError::VariableMismatch { left: self.vars.to_vec(), right: other.vars.to_vec() })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        let (vars, l, r) = self.align(other)?;
        let a = l.as_ref().unwrap_or(self);
        let b = r.as_ref().unwrap_or(other);
        let mut out = LaurentPoly { vars, terms: a.terms.clone() };
        for (e, c) in &b.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let (vars, l, r) = self.align(other)?;
        let a = l.as_ref().unwrap_or(self);
        let b = r.as_ref().unwrap_or(other);
        let mut out = LaurentPoly { vars, terms: BTreeMap::new() };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponents = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = LaurentPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    /// Multiplies by the monomial with exponent vector `shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        assert_eq!(shift.len(), self.vars.len(), "exponent arity");
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Integer power; negative exponents are only defined for monomials
    /// with a unit coefficient.
    pub fn pow(&self, k: i32) -> Result<Self, PolyError> {
        if k < 0 {
            let inv = self.inverse()?;
            return inv.pow(-k);
        }
        let mut result = LaurentPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        result.terms.insert(Exponents::from_elem(0, self.vars.len()), BigInt::one());
        let mut base = self.clone();
        let mut k = k as u32;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Inverse of a monomial `±x^e`.
    pub fn inverse(&self) -> Result<Self, PolyError> {
        match self.as_monomial() {
            Some((e, c)) if c.abs().is_one() => {
                let ne: Exponents = e.iter().map(|x| -x).collect();
                let mut out = LaurentPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
                out.terms.insert(ne, c.clone());
                Ok(out)
            }
            _ => Err(PolyError::NonMonomialInverse(self.to_string())),
        }
    }

    /// Substitutes a polynomial for every variable. All bindings must share
    /// one target variable list (constants are allowed anywhere).
    pub fn substitute(&self, bindings: &[(&str, LaurentPoly)]) -> Result<Self, PolyError> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for v in self.vars.iter() {
            let b = bindings
                .iter()
                .find(|(n, _)| *n == v.as_str())
                .map(|(_, p)| p.clone())
                .ok_or_else(|| PolyError::Unbound(v.clone()))?;
            vals.push(b);
        }
        // Common target variable list: the first non-constant binding.
        let target = vals.iter().find(|p| !p.is_constant()).map(|p| p.vars.clone());
        let vals: Vec<LaurentPoly> = match &target {
            Some(t) => vals.iter().map(|p| p.lift_to(t)).collect::<Result<_, _>>()?,
            None => vals,
        };
        let mut cache: Vec<BTreeMap<i32, LaurentPoly>> = vec![BTreeMap::new(); vals.len()];
        let mut out = match &target {
            Some(t) => LaurentPoly { vars: t.clone(), terms: BTreeMap::new() },
            None => LaurentPoly::constant(0),
        };
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let pw = match cache[i].get(&x) {
                    Some(p) => p.clone(),
                    None => {
                        let p = vals[i].pow(x)?;
                        cache[i].insert(x, p.clone());
                        p
                    }
                };
                term = term.try_mul(&pw)?;
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// Reduces every coefficient into `0..m`.
    pub fn reduce_mod(&self, m: &BigInt) -> Self {
        let mut out = LaurentPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.mod_floor(m));
        }
        out
    }

    /// Rewrites exponent vectors through `f` into a polynomial over `vars`.
    pub fn map_exponents<F>(&self, vars: &[&str], mut f: F) -> Self
    where
        F: FnMut(&[i32]) -> Exponents,
    {
        let mut out = Self::zero(vars);
        for (e, c) in &self.terms {
            let ne = f(e);
            assert_eq!(ne.len(), vars.len(), "exponent arity");
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Exact division of univariate Laurent polynomials.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let (vars, l, r) = self.align(divisor)?;
        let num = l.unwrap_or_else(|| self.clone());
        let den = r.unwrap_or_else(|| divisor.clone());
        if vars.len() > 1 {
            return Err(PolyError::NotUnivariate(vars.to_vec()));
        }
        if vars.is_empty() {
            let (q, rem) = num.constant_term().div_rem(&den.constant_term());
            return if rem.is_zero() { Ok(LaurentPoly::constant(q)) } else { Err(PolyError::Inexact) };
        }
        let (dlo, dhi) = den.exponent_range(0).expect("nonzero");
        let lead = den.coeff(&[dhi]);
        let mut rem = LaurentPoly { vars: vars.clone(), terms: num.terms };
        let mut quot = LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() };
        while !rem.is_zero() {
            let (rlo, rhi) = rem.exponent_range(0).expect("nonzero");
            if rhi - rlo < dhi - dlo {
                return Err(PolyError::Inexact);
            }
            let (q, r) = rem.coeff(&[rhi]).div_rem(&lead);
            if !r.is_zero() {
                return Err(PolyError::Inexact);
            }
            let step = LaurentPoly::monomial(&[vars[0].as_str()], &[rhi - dhi], q);
            let step = LaurentPoly { vars: vars.clone(), terms: step.terms };
            rem = &rem - &(&step * &den);
            quot = &quot + &step;
        }
        Ok(quot)
    }

    /// Drops variables that occur with exponent zero in every term.
    pub fn strip_unused(&self) -> Self {
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| self.terms.keys().any(|e| e[i] != 0)).collect();
        if keep.len() == self.vars.len() {
            return self.clone();
        }
        let vars: Arc<[String]> = keep.iter().map(|&i| self.vars[i].clone()).collect::<Vec<_>>().into();
        let terms = self.terms.iter().map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c.clone())).collect();
        LaurentPoly { vars, terms }
    }

    /// Value at the primitive sixth root of unity `ζ = e^{iπ/3}`.
    pub fn eval_zeta6(&self) -> Result<CyclotomicValue, PolyError> {
        let p = self.strip_unused();
        if p.vars.len() > 1 {
            return Err(PolyError::NotUnivariate(p.vars.to_vec()));
        }
        let mut acc = CyclotomicValue::zero();
        for (e, c) in &p.terms {
            let k = e.first().copied().unwrap_or(0);
            let coeff = CyclotomicValue::integer(c.clone());
            acc = &acc + &(&coeff * &CyclotomicValue::zeta().pow(k));
        }
        Ok(acc)
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars[..] == other.vars[..] {
            return self.terms == other.terms;
        }
        let (a, b) = (self.strip_unused(), other.strip_unused());
        a.vars[..] == b.vars[..] && a.terms == b.terms
    }
}

impl Eq for LaurentPoly {}

impl Hash for LaurentPoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let s = self.strip_unused();
        s.vars.hash(state);
        s.terms.hash(state);
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl<'a> $trait<&'a LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            /// Panics when the operands have incompatible variable lists.
            fn $method(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                self.$try(rhs).expect("incompatible polynomial variables")
            }
        }
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest terms first, e.g. `-A^5 - A^-3 + A^-7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono: Vec<String> = e
                .iter()
                .zip(self.vars.iter())
                .filter(|(x, _)| **x != 0)
                .map(|(x, v)| if *x == 1 { v.clone() } else { format!("{v}^{x}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<i32>,
    #[serde(serialize_with = "ser_bigint", deserialize_with = "de_bigint")]
    coeff: BigInt,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    variables: Vec<String>,
    terms: Vec<TermRepr>,
}

/// Coefficients are written as JSON integers when they fit in 64 bits and
/// as decimal strings otherwise.
pub(crate) fn ser_bigint<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match c.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&c.to_string()),
    }
}

struct BigIntVisitor;

impl serde::de::Visitor<'_> for BigIntVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_i128<E: serde::de::Error>(self, v: i128) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_u128<E: serde::de::Error>(self, v: u128) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<BigInt, E> {
        v.parse().map_err(E::custom)
    }
}

pub(crate) fn de_bigint<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    d.deserialize_any(BigIntVisitor)
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            variables: self.vars.to_vec(),
            terms: self.terms.iter().map(|(e, c)| TermRepr { exp: e.to_vec(), coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = PolyRepr::deserialize(d)?;
        LaurentPoly::from_terms(r.variables, r.terms.into_iter().map(|t| (t.exp, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

/// Element `u + w·ζ` of `Q(ζ)`, `ζ = e^{iπ/3}`, with `ζ² = ζ − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicValue {
    pub u: BigRational,
    pub w: BigRational,
}

impl CyclotomicValue {
    pub fn new(u: BigRational, w: BigRational) -> Self {
        CyclotomicValue { u, w }
    }

    pub fn zero() -> Self {
        Self::integer(BigInt::zero())
    }

    pub fn one() -> Self {
        Self::integer(BigInt::one())
    }

    pub fn integer(c: BigInt) -> Self {
        CyclotomicValue { u: BigRational::from_integer(c), w: BigRational::zero() }
    }

    pub fn zeta() -> Self {
        CyclotomicValue { u: BigRational::zero(), w: BigRational::one() }
    }

    /// Complex conjugate; `ζ̄ = 1 − ζ`.
    pub fn conj(&self) -> Self {
        CyclotomicValue { u: &self.u + &self.w, w: -&self.w }
    }

    /// `|u + wζ|² = u² + uw + w²`.
    pub fn norm_sq(&self) -> BigRational {
        &self.u * &self.u + &self.u * &self.w + &self.w * &self.w
    }

    pub fn is_real(&self) -> bool {
        self.w.is_zero()
    }

    /// Integer power; `ζ^{-1} = 1 − ζ`, and in general `x^{-1} = x̄ / |x|²`.
    pub fn pow(&self, k: i32) -> Self {
        if k < 0 {
            let n = self.norm_sq();
            assert!(!n.is_zero(), "inverse of zero");
            let c = self.conj();
            let inv = CyclotomicValue { u: &c.u / &n, w: &c.w / &n };
            return inv.pow(-k);
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k as u32;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        result
    }
}

impl Add for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn add(self, o: &CyclotomicValue) -> CyclotomicValue {
        CyclotomicValue { u: &self.u + &o.u, w: &self.w + &o.w }
    }
}

impl Sub for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn sub(self, o: &CyclotomicValue) -> CyclotomicValue {
        CyclotomicValue { u: &self.u - &o.u, w: &self.w - &o.w }
    }
}

impl Mul for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn mul(self, o: &CyclotomicValue) -> CyclotomicValue {
        let ww = &self.w * &o.w;
        CyclotomicValue { u: &self.u * &o.u - &ww, w: &self.u * &o.w + &self.w * &o.u + ww }
    }
}

impl Neg for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn neg(self) -> CyclotomicValue {
        CyclotomicValue { u: -&self.u, w: -&self.w }
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*zeta", self.u, self.w)
    }
}
