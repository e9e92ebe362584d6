//! Property suites: ring axioms, normal-form idempotence, integration
//! linearity and symmetry, Whitney/character/Todd multiplicativity, Newton
//! round-trips, the symbolic-vs-concrete symmetric-power equivalence, and
//! agreement of the two identity-certification methods.

use focal::chow::{Class, Variety};
use focal::exact::{ParamCtx, ParamPoly, Rat};
use focal::oracle::{certify_poly, splitting_sym_chern};
use focal::sheaf::{chern_from_character, Rank, Sheaf};
use focal::spaces::{formal_congruence_surface, grassmannian_g13};
use proptest::prelude::*;
use std::collections::BTreeMap;
use std::sync::Arc;

fn ctx() -> ParamCtx {
    ParamCtx::new(["a", "b", "g", "k2", "chi"]).unwrap()
}

/// A small random polynomial in a, b, g.
fn poly_strategy() -> impl Strategy<Value = ParamPoly> {
    let term = (0u16..3, 0u16..3, 0u16..3, -4i64..5);
    proptest::collection::vec(term, 0..5).prop_map(|terms| {
        let cx = ctx();
        let mut acc = ParamPoly::zero(&cx);
        for (i, j, k, c) in terms {
            let mono = &(&ParamPoly::v(&cx, "a").pow(i as u32)
                * &ParamPoly::v(&cx, "b").pow(j as u32))
                * &ParamPoly::v(&cx, "g").pow(k as u32);
            acc = &acc + &mono.scale(&Rat::from_int(c));
        }
        acc
    })
}

/// A random class on the Grassmannian of lines.
fn g13_class_strategy() -> impl Strategy<Value = (Arc<Variety>, Class)> {
    let coeffs = proptest::collection::vec(-4i64..5, 6);
    coeffs.prop_map(|c| {
        let cx = ctx();
        let g = grassmannian_g13(&cx).unwrap().variety;
        let q1 = Class::g(&g, "q1");
        let q2 = Class::g(&g, "q2");
        let basis = [
            Class::one(&g),
            q1.clone(),
            q1.pow(2),
            q2.clone(),
            &q1 * &q2,
            q2.pow(2),
        ];
        let mut acc = Class::zero(&g);
        for (cls, n) in basis.iter().zip(&c) {
            acc = &acc + &cls.scale(&ParamPoly::int(&cx, *n));
        }
        (g, acc)
    })
}

/// A random pair of rank-2 sheaves on one shared congruence surface.
fn surface_sheaf_pair_strategy() -> impl Strategy<Value = (Sheaf, Sheaf)> {
    let triple = || (-3i64..4, -3i64..4, -3i64..4);
    (triple(), triple()).prop_map(|(t1, t2)| {
        let cx = ctx();
        let x = formal_congruence_surface(&cx).unwrap().variety;
        let mk = |(u, v, w): (i64, i64, i64)| {
            let c1 = &Class::g(&x, "H").scale(&ParamPoly::int(&cx, u))
                + &Class::g(&x, "K").scale(&ParamPoly::int(&cx, v));
            let c2 = Class::g(&x, "pt").scale(&ParamPoly::int(&cx, w));
            let total = &(&Class::one(&x) + &c1) + &c2;
            Sheaf::new(&x, Rank::Concrete(2), total).unwrap()
        };
        (mk(t1), mk(t2))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms((f, g, h) in (poly_strategy(), poly_strategy(), poly_strategy())) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism((f, g) in (poly_strategy(), poly_strategy())) {
        let asn: BTreeMap<String, Rat> = [("a", 3i64), ("b", -2), ("g", 5)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), Rat::from_int(v)))
            .collect();
        let lhs = (&f * &g).eval(&asn).unwrap();
        let rhs = &f.eval(&asn).unwrap() * &g.eval(&asn).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = (&f + &g).eval(&asn).unwrap();
        let rhs = &f.eval(&asn).unwrap() + &g.eval(&asn).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn zero_iff_vanishes_on_degree_grid(f in poly_strategy()) {
        // sampling lemma: a polynomial vanishes identically iff it vanishes
        // at (maxdeg+1) points per parameter on an integer grid
        let names = ["a", "b", "g"];
        let degs: Vec<u32> = names.iter().map(|n| f.max_degree_in(n)).collect();
        let mut all_zero = true;
        'outer: for i in 0..=degs[0] {
            for j in 0..=degs[1] {
                for k in 0..=degs[2] {
                    let asn: BTreeMap<String, Rat> = [
                        ("a".to_string(), Rat::from_int(i as i64)),
                        ("b".to_string(), Rat::from_int(j as i64)),
                        ("g".to_string(), Rat::from_int(k as i64)),
                    ]
                    .into_iter()
                    .collect();
                    if !f.eval(&asn).unwrap().is_zero() {
                        all_zero = false;
                        break 'outer;
                    }
                }
            }
        }
        prop_assert_eq!(f.is_zero(), all_zero);
    }

    #[test]
    fn certification_methods_agree((f, g) in (poly_strategy(), poly_strategy())) {
        let cert = certify_poly(&f, &g, 16);
        let canonical = ParamPoly::arith(&f, &g, focal::exact::PolyOp::Sub)
            .unwrap()
            .is_zero();
        prop_assert_eq!(cert.verdict.is_equal(), canonical);
    }

    #[test]
    fn normal_form_is_idempotent_and_multiplication_commutes(
        (pair, coeffs) in (g13_class_strategy(), proptest::collection::vec(-3i64..4, 6))
    ) {
        let (g, x) = pair;
        let cx = ctx();
        // rebuild a second class from the coefficient vector
        let q1 = Class::g(&g, "q1");
        let q2 = Class::g(&g, "q2");
        let basis = [Class::one(&g), q1.clone(), q1.pow(2), q2.clone(), &q1 * &q2, q2.pow(2)];
        let mut y = Class::zero(&g);
        for (cls, n) in basis.iter().zip(&coeffs) {
            y = &y + &cls.scale(&ParamPoly::int(&cx, *n));
        }
        // products are already in normal form: multiplying by 1 is identity
        prop_assert_eq!(&x * &Class::one(&g), x.clone());
        prop_assert_eq!(&x * &y, &y * &x);
        // associativity against q1
        prop_assert_eq!(&(&x * &y) * &q1, &x * &(&y * &q1));
        // integration is linear and symmetric
        let int_xy = (&x * &y).integrate();
        let int_yx = (&y * &x).integrate();
        prop_assert_eq!(int_xy, int_yx);
        let sum = (&x + &y).integrate();
        let parts = &x.integrate() + &y.integrate();
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn whitney_and_character_laws((e, f) in surface_sheaf_pair_strategy()) {
        let sum = e.sum(&f).unwrap();
        prop_assert_eq!(sum.total_chern().clone(), e.total_chern() * f.total_chern());
        // ch is additive over sums
        let ch_sum = sum.chern_character(2).unwrap();
        let ch_parts = &e.chern_character(2).unwrap() + &f.chern_character(2).unwrap();
        prop_assert_eq!(ch_sum, ch_parts);
        // ch is multiplicative over tensor products
        let t = e.tensor(&f).unwrap();
        let lhs = t.chern_character(2).unwrap();
        let rhs = (&e.chern_character(2).unwrap() * &f.chern_character(2).unwrap()).truncate(2);
        prop_assert_eq!(lhs, rhs);
        // td is multiplicative over sums
        let td_sum = sum.todd(2).unwrap();
        let td_parts = (&e.todd(2).unwrap() * &f.todd(2).unwrap()).truncate(2);
        prop_assert_eq!(td_sum, td_parts);
        // Newton round-trip
        let back = chern_from_character(e.host(), &e.chern_character(2).unwrap(), 2).unwrap();
        prop_assert_eq!(back.total_chern().clone(), e.total_chern().clone());
        // dual is an involution
        let dd = e.dual().unwrap().dual().unwrap();
        prop_assert_eq!(dd.total_chern().clone(), e.total_chern().clone());
    }
}

#[test]
fn symbolic_symmetric_power_matches_concrete_through_ten() {
    let cx = ctx();
    let g = grassmannian_g13(&cx).unwrap();
    let q = g.sheaf("Q");
    for n in 1..=10u32 {
        let concrete = q.sym_power(n).unwrap();
        let symbolic = q
            .sym_power_symbolic(&ParamPoly::int(&cx, n as i64), 4)
            .unwrap();
        for k in 1..=4u32 {
            assert_eq!(symbolic.c(k), concrete.c(k), "Sym^{n}, c{k}");
        }
    }
}

#[test]
fn splitting_oracle_matches_tensor_recursion_through_ten() {
    let cx = ParamCtx::new(["c1", "c2"]).unwrap();
    let ctx_full = ctx();
    let g = grassmannian_g13(&ctx_full).unwrap();
    let q = g.sheaf("Q");
    for n in 0..=10u32 {
        let oracle = splitting_sym_chern(&cx, n);
        let concrete = q.sym_power(n).unwrap();
        for (k, ek) in oracle.iter().enumerate() {
            // substitute the bundle's c1, c2 into the oracle polynomial
            let c1 = q.c(1);
            let c2 = q.c(2);
            let mut expect = Class::zero(&g.variety);
            for i in 0..=ek.max_degree_in("c1") {
                for j in 0..=ek.max_degree_in("c2") {
                    let coeff = ek
                        .coeff_of_power("c1", i as u16)
                        .coeff_of_power("c2", j as u16)
                        .constant_value()
                        .unwrap();
                    if coeff.is_zero() {
                        continue;
                    }
                    let mono = (&c1.pow(i) * &c2.pow(j)).scale_rat(&coeff);
                    expect = &expect + &mono;
                }
            }
            assert_eq!(
                expect,
                concrete.c(k as u32 + 1),
                "Sym^{n}, c{} via the splitting oracle",
                k + 1
            );
        }
    }
}
