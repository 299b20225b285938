use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use skein::bracket::{bracket_mod, delta, jones, skein_ordered, state_sum, state_sum_parallel, state_sum_sequential};
use skein::colorings::count_colorings;
use skein::framed_perm::{FramedPermutation, HeckeElement};
use skein::homflypt::{homflypt, jones_from_homflypt, mu};
use skein::homology_skein::{mul_of, smith_normal_form, IntMatrix};
use skein::moves::braid_closure;
use skein::skein_algebra::{boundary_element, nc_mul, nc_reduce, Gen, Policy, Reducer};
use skein::tl::{enumerate_matchings, Matching, TlElement};
use skein::{LaurentPoly, LinkDiagram};

fn braid() -> impl Strategy<Value = (usize, Vec<i32>)> {
    (2usize..=4).prop_flat_map(|n| {
        let letter = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        (Just(n), prop::collection::vec(letter, 0..=8))
    })
}

fn diagram() -> impl Strategy<Value = LinkDiagram> {
    braid().prop_map(|(n, w)| braid_closure(n, &w).unwrap())
}

fn bracket_poly(d: &LinkDiagram) -> LaurentPoly {
    state_sum(d).into_poly().unwrap()
}

fn invert_a(p: &LaurentPoly) -> LaurentPoly {
    let p = p + &LaurentPoly::zero(&["A"]);
    p.map_exponents(&["A"], |e| smallvec::smallvec![-e[0]])
}

fn tl_element(n: usize) -> impl Strategy<Value = TlElement> {
    let count = enumerate_matchings(n).len();
    prop::collection::vec((0..count, -3i64..=3, -2i32..=2), 1..=3).prop_map(move |terms| {
        let ms = enumerate_matchings(n);
        terms.into_iter().fold(TlElement::zero(n), |acc, (i, c, e)| {
            let x = TlElement::from(ms[i].clone()).scale(&LaurentPoly::monomial(&["A"], &[e], c));
            acc.add(&x).unwrap()
        })
    })
}

fn gen() -> impl Strategy<Value = Gen> {
    prop_oneof![Just(Gen::X), Just(Gen::Y), Just(Gen::Z)]
}

fn hecke_element(n: usize) -> impl Strategy<Value = HeckeElement> {
    prop::collection::vec((1..n, -2i64..=2), 0..=4).prop_map(move |gens| {
        let p = LaurentPoly::var(&["p", "q"], "p");
        gens.into_iter().fold(HeckeElement::identity(n), |acc, (i, c)| {
            let g = HeckeElement::generator(n, i).unwrap();
            acc.mul(&g).unwrap().add(&acc.scale(&p.scale(&c.into())))
        })
    })
}

fn framed(n: usize) -> impl Strategy<Value = FramedPermutation> {
    (Just((1..=n).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(-3i64..=3, n))
        .prop_map(|(p, w)| FramedPermutation::new(p, w).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_is_order_independent(d in diagram(), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..d.num_crossings()).collect();
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(skein_ordered(&d, &order), state_sum(&d));
    }

    #[test]
    fn sequential_matches_parallel(d in diagram()) {
        prop_assert_eq!(state_sum_sequential(&d), state_sum_parallel(&d));
    }

    #[test]
    fn bracket_of_disjoint_union(a in diagram(), b in diagram()) {
        let u = a.disjoint_union(&b);
        let expected = &(&delta() * &bracket_poly(&a)) * &bracket_poly(&b);
        prop_assert_eq!(bracket_poly(&u), expected);
        let h = |d: &LinkDiagram| homflypt(d).into_poly().unwrap();
        prop_assert_eq!(h(&u), &(&mu() * &h(&a)) * &h(&b));
    }

    #[test]
    fn mirror_inverts_a(d in diagram()) {
        prop_assert_eq!(bracket_poly(&d.mirror()), invert_a(&bracket_poly(&d)));
        prop_assert_eq!(d.mirror().writhe(), -d.writhe());
    }

    #[test]
    fn modular_bracket_is_reduction(d in diagram(), m in 2i64..50) {
        let m = BigInt::from(m);
        let full = bracket_poly(&d).reduce_mod(&m);
        prop_assert_eq!(bracket_mod(&d, &m).into_poly().unwrap(), full);
    }

    #[test]
    fn jones_agrees_with_homflypt(d in diagram()) {
        prop_assert_eq!(jones_from_homflypt(&d), jones(&d));
    }

    #[test]
    fn colorings_are_multiples_of_p(d in diagram(), p in prop_oneof![Just(3u64), Just(5), Just(7)]) {
        let c = count_colorings(&d, p).unwrap();
        prop_assert!((&c % p).is_zero());
        prop_assert_eq!(count_colorings(&d.mirror(), p).unwrap(), c);
    }

    #[test]
    fn tl_is_associative((a, b, c) in (1usize..=4).prop_flat_map(|n| (tl_element(n), tl_element(n), tl_element(n)))) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn matching_text_round_trip(n in 0usize..=5, i in any::<prop::sample::Index>()) {
        let ms = enumerate_matchings(n);
        let m = &ms[i.index(ms.len())];
        prop_assert_eq!(&Matching::parse(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn torus_cycle_is_an_automorphism(w in prop::collection::vec(gen(), 0..=6)) {
        let mut r = Reducer::new(Policy::Leftmost);
        let cycled: Vec<Gen> = w.iter().map(|g| g.cycle()).collect();
        prop_assert_eq!(nc_reduce(&w).cycled(&mut r), nc_reduce(&cycled));
    }

    #[test]
    fn torus_product_is_associative(
        a in prop::collection::vec(gen(), 0..=3),
        b in prop::collection::vec(gen(), 0..=3),
        c in prop::collection::vec(gen(), 0..=3),
    ) {
        let (a, b, c) = (nc_reduce(&a), nc_reduce(&b), nc_reduce(&c));
        prop_assert_eq!(nc_mul(&nc_mul(&a, &b), &c), nc_mul(&a, &nc_mul(&b, &c)));
    }

    #[test]
    fn boundary_element_is_central(w in prop::collection::vec(gen(), 0..=4)) {
        let e = nc_reduce(&w);
        let q = boundary_element();
        prop_assert!(nc_mul(&e, &q).sub(&nc_mul(&q, &e)).is_zero());
        let mut r = Reducer::default();
        prop_assert_eq!(q.cycled(&mut r), q);
    }

    #[test]
    fn hecke_is_associative((a, b, c) in (2usize..=4).prop_flat_map(|n| (hecke_element(n), hecke_element(n), hecke_element(n)))) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn framed_group_laws((a, b, c) in (1usize..=5).prop_flat_map(|n| (framed(n), framed(n), framed(n)))) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&a.inverse()).unwrap(), FramedPermutation::identity(a.n()));
        prop_assert_eq!(a.inverse().mul(&a).unwrap(), FramedPermutation::identity(a.n()));
    }

    #[test]
    fn mul_is_homogeneous(
        rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..=4),
        alpha_seed in prop::collection::vec(-5i64..=5, 4),
        k in -6i64..=6,
    ) {
        let pairing = IntMatrix::from_i64(&rows).unwrap();
        let alpha: Vec<BigInt> = alpha_seed[..rows.len()].iter().map(|&x| x.into()).collect();
        let scaled: Vec<BigInt> = alpha.iter().map(|x| x * k).collect();
        prop_assert_eq!(mul_of(&pairing, &scaled), mul_of(&pairing, &alpha) * BigInt::from(k).abs());
    }

    #[test]
    fn smith_factors_divide_and_match_det(rows in (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-7i64..=7, n), n))) {
        let m = IntMatrix::from_i64(&rows).unwrap();
        let snf = smith_normal_form(&m);
        let prod: BigInt = snf.factors.iter().product();
        prop_assert_eq!(prod, m.determinant().abs());
        for w in snf.factors.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
        }
    }
}
