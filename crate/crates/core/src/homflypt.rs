//! Homflypt polynomial by the descending-diagram skein tree, its Conway and
//! Jones specializations, and finite-type differences.
//!
//! Normalization: `v⁻¹P(L₊) − vP(L₋) = zP(L₀)` and `P(unknot) = 1`, so a
//! split unknot multiplies `P` by `μ = (v⁻¹ − v)z⁻¹`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::bracket::{a_pow, LinkValue};
use crate::diagram::{DiagramError, LinkDiagram};
use crate::planar::Planar;
use crate::poly::LaurentPoly;

pub type HomflyValue = LinkValue;

const VZ: &[&str] = &["v", "z"];
/// `m` marks components; it is replaced by `μ` at the end.
const VZM: &[&str] = &["v", "z", "m"];

fn vzm(v: i32, z: i32, m: i32, c: i64) -> LaurentPoly {
    LaurentPoly::monomial(VZM, &[v, z, m], c)
}

/// `μ = (v⁻¹ − v)z⁻¹`.
pub fn mu() -> LaurentPoly {
    LaurentPoly::monomial(VZ, &[-1, -1], 1) - LaurentPoly::monomial(VZ, &[1, -1], 1)
}

type Memo = HashMap<Vec<u32>, LaurentPoly>;

/// `μ · P` of the crossings of `p` (free loops ignored), with `μ` kept as `m`.
fn skein_tree(p: &Planar, memo: &mut Memo) -> LaurentPoly {
    if p.xs.is_empty() {
        return LaurentPoly::one(VZM);
    }
    let key = p.canonical_key(true);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let value = match p.first_non_descending() {
        None => vzm(0, 0, p.components().len() as i32, 1),
        Some(i) => {
            let mut switched = p.clone();
            switched.switch(i);
            let mut smoothed = p.clone();
            smoothed.loops = 0;
            let made = smoothed.smooth_oriented(i) as i32;
            let s = skein_tree(&switched, memo);
            let o = skein_tree(&smoothed, memo).shift(&[0, 0, made]);
            if p.xs[i].positive {
                // P₊ = v²P₋ + vzP₀
                &(&vzm(2, 0, 0, 1) * &s) + &(&vzm(1, 1, 0, 1) * &o)
            } else {
                // P₋ = v⁻²P₊ − v⁻¹zP₀
                &(&vzm(-2, 0, 0, 1) * &s) - &(&vzm(-1, 1, 0, 1) * &o)
            }
        }
    };
    memo.insert(key, value.clone());
    value
}

/// Homflypt polynomial in `v, z`.
pub fn homflypt(d: &LinkDiagram) -> HomflyValue {
    if d.num_components() == 0 {
        return LinkValue::Empty;
    }
    let raw = skein_tree(&d.to_planar(), &mut Memo::new()).shift(&[0, 0, d.extra_unknots() as i32 - 1]);
    let v = LaurentPoly::var(VZ, "v");
    let z = LaurentPoly::var(VZ, "z");
    let p = raw.substitute(&[("v", v), ("z", z), ("m", mu())]).expect("component exponents are nonnegative");
    LinkValue::Poly(p)
}

/// Conway polynomial: `P` at `v = 1`.
pub fn conway(d: &LinkDiagram) -> LinkValue {
    homflypt(d).map(|p| {
        p.substitute(&[("v", LaurentPoly::constant(1)), ("z", LaurentPoly::var(&["z"], "z"))])
            .expect("Conway specialization")
    })
}

/// Coefficient of `z^k` in the Conway polynomial (0 for the empty link).
pub fn conway_coeff(d: &LinkDiagram, k: i32) -> BigInt {
    match conway(d) {
        LinkValue::Poly(p) => {
            let idx = p.var_index("z");
            p.terms().filter(|(e, _)| idx.map_or(0, |i| e[i]) == k).map(|(_, c)| c.clone()).sum()
        }
        LinkValue::Empty => BigInt::from(0),
    }
}

/// `P` at `v = A⁻⁴`, `z = A⁻² − A²`; negative powers of `z` are cleared by
/// exact division.
pub fn jones_from_homflypt(d: &LinkDiagram) -> LinkValue {
    homflypt(d).map(|p| {
        let p = &p + &LaurentPoly::zero(VZ);
        let zi = p.var_index("z");
        let k = p.terms().map(|(e, _)| zi.map_or(0, |i| -e[i])).max().unwrap_or(0).max(0);
        let cleared = p.shift(&[0, k]);
        let z_val = a_pow(-2) - a_pow(2);
        let num = cleared.substitute(&[("v", a_pow(-4)), ("z", z_val.clone())]).expect("nonnegative z powers");
        num.div_exact(&z_val.pow(k).expect("nonnegative power")).expect("Jones polynomial is a Laurent polynomial")
    })
}

/// `v⁻¹P(D₊) − vP(D₋) − zP(D₀)` at crossing `i`; zero by the skein relation.
pub fn skein_residual(d: &LinkDiagram, i: usize) -> Result<LaurentPoly, DiagramError> {
    let (plus, minus) =
        if d.sign(i) > 0 { (d.clone(), d.switch_crossing(i)?) } else { (d.switch_crossing(i)?, d.clone()) };
    let val = |x: &LinkDiagram| match homflypt(x) {
        LinkValue::Poly(p) => p,
        LinkValue::Empty => LaurentPoly::zero(VZ),
    };
    let smoothed = d.smooth_oriented(i)?;
    let v = |e: i32| LaurentPoly::monomial(VZ, &[e, 0], 1);
    let z = LaurentPoly::monomial(VZ, &[0, 1], 1);
    Ok(&(&(&v(-1) * &val(&plus)) - &(&v(1) * &val(&minus))) - &(&z * &val(&smoothed)))
}

/// Invariants available to the finite-difference check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiniteTypeInvariant {
    /// Coefficient of `z^k` in the Conway polynomial; of finite type `k`.
    ConwayCoeff(i32),
    Homflypt,
}

impl std::str::FromStr for FiniteTypeInvariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.split_once(':') {
            _ if s == "homflypt" => Ok(FiniteTypeInvariant::Homflypt),
            Some(("conway", k)) => {
                k.parse().map(FiniteTypeInvariant::ConwayCoeff).map_err(|_| format!("bad Conway degree `{k}`"))
            }
            _ => Err(format!("unknown invariant `{s}` (expected conway:<k> or homflypt)")),
        }
    }
}

impl FiniteTypeInvariant {
    pub fn eval(&self, d: &LinkDiagram) -> LaurentPoly {
        match self {
            FiniteTypeInvariant::ConwayCoeff(k) => LaurentPoly::constant(conway_coeff(d, *k)),
            FiniteTypeInvariant::Homflypt => homflypt(d).into_poly().unwrap_or_else(|| LaurentPoly::zero(VZ)),
        }
    }
}

/// Value of `inv` on the singular link whose double points are `selection`,
/// resolved by `K_cr = K₊ − K₋`: the alternating sum over switch subsets,
/// multiplied by the product of the selected crossings' signs.
pub fn vassiliev_difference(
    d: &LinkDiagram,
    selection: &[usize],
    inv: FiniteTypeInvariant,
) -> Result<LaurentPoly, DiagramError> {
    let mut sorted = selection.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != selection.len() {
        return Err(DiagramError::InvalidSelection("repeated crossing".into()));
    }
    if let Some(&index) = sorted.iter().find(|&&i| i >= d.num_crossings()) {
        return Err(DiagramError::NoSuchCrossing { index, len: d.num_crossings() });
    }
    if selection.len() >= 24 {
        return Err(DiagramError::InvalidSelection(format!("{} double points is too many", selection.len())));
    }
    let sign: i32 = selection.iter().map(|&i| d.sign(i)).product();
    let mut total: Option<LaurentPoly> = None;
    for mask in 0u32..1 << selection.len() {
        let mut e = d.clone();
        for (j, &i) in selection.iter().enumerate() {
            if mask >> j & 1 == 1 {
                e = e.switch_crossing(i)?;
            }
        }
        let mut v = inv.eval(&e);
        if mask.count_ones() % 2 == 1 {
            v = -v;
        }
        total = Some(match total {
            None => v,
            Some(t) => &t + &v,
        });
    }
    let total = total.expect("at least one subset");
    Ok(if sign < 0 { -total } else { total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::jones;

    const TREFOIL: &str = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)";
    const HOPF: &str = "X(1,3,2,4),X(3,1,4,2)";

    fn p(s: &str, extra: usize) -> LaurentPoly {
        homflypt(&LinkDiagram::parse(s, extra).unwrap()).into_poly().unwrap()
    }

    fn m(v: i32, z: i32, c: i64) -> LaurentPoly {
        LaurentPoly::monomial(VZ, &[v, z], c)
    }

    #[test]
    fn hopf_and_trefoil() {
        assert_eq!(p(HOPF, 0), &(&m(1, -1, 1) - &m(3, -1, 1)) + &m(1, 1, 1));
        let right = LinkDiagram::parse(TREFOIL, 0).unwrap().mirror();
        let expected = &(&m(2, 0, 2) - &m(4, 0, 1)) + &m(2, 2, 1);
        assert_eq!(homflypt(&right).into_poly().unwrap(), expected);
    }

    #[test]
    fn trivial_links() {
        assert_eq!(p("", 1), LaurentPoly::constant(1));
        for n in 1..=5 {
            assert_eq!(p("", n), mu().pow(n as i32 - 1).unwrap());
        }
        assert_eq!(homflypt(&LinkDiagram::unlink(0)), LinkValue::Empty);
    }

    #[test]
    fn conway_values() {
        let t = conway(&LinkDiagram::parse(TREFOIL, 0).unwrap()).into_poly().unwrap();
        assert_eq!(t, LaurentPoly::constant(1) + LaurentPoly::monomial(&["z"], &[2], 1));
        assert!(conway(&LinkDiagram::unlink(2)).into_poly().unwrap().is_zero());
        assert_eq!(conway(&LinkDiagram::unknot()).into_poly().unwrap(), LaurentPoly::constant(1));
    }

    #[test]
    fn jones_cross_check() {
        for (s, extra) in [(TREFOIL, 0), (HOPF, 0), ("", 1), ("", 2), (HOPF, 1)] {
            let d = LinkDiagram::parse(s, extra).unwrap();
            assert_eq!(jones_from_homflypt(&d), jones(&d), "{s}");
        }
        let hopf = jones_from_homflypt(&LinkDiagram::parse(HOPF, 0).unwrap()).into_poly().unwrap();
        assert_eq!(hopf, -a_pow(-10) - a_pow(-2));
    }

    #[test]
    fn residuals_vanish() {
        let d = LinkDiagram::parse(TREFOIL, 0).unwrap();
        for i in 0..3 {
            assert!(skein_residual(&d, i).unwrap().is_zero());
        }
    }

    #[test]
    fn finite_differences() {
        let d = LinkDiagram::parse(TREFOIL, 0).unwrap();
        let c2 = FiniteTypeInvariant::ConwayCoeff(2);
        assert!(vassiliev_difference(&d, &[0, 1, 2], c2).unwrap().is_zero());
        assert!(vassiliev_difference(&d, &[1], FiniteTypeInvariant::ConwayCoeff(0)).unwrap().is_zero());
        assert_eq!(vassiliev_difference(&d, &[], c2).unwrap(), LaurentPoly::constant(1));
        // One double point: Δ₊ − Δ₋ = zΔ₀, so c₂ of the resolution is c₁ of the smoothing.
        let c1 = conway_coeff(&d.smooth_oriented(0).unwrap(), 1);
        assert_eq!(vassiliev_difference(&d, &[0], c2).unwrap(), LaurentPoly::constant(c1));
        assert!("conway:2".parse::<FiniteTypeInvariant>().is_ok());
        assert!("jones".parse::<FiniteTypeInvariant>().is_err());
    }
}
