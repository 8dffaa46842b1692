//! Randomized invariants across the crate.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vkl::braidrep::{check_vb_relations, parse_braid, represent};
use vkl::detinv::{delta0, det_d};
use vkl::diagmod::{diagram_from_braid, presentation_from_braid, presentation_from_diagram};
use vkl::exactalg::{laurent_normalize, parse_ratfun, poly_gcd, MPoly, RatFun};
use vkl::switchlab::{
    budapest, elementary_factorization_holds, inverse_switch, make_noncommuting, sideways, switch_by_name,
    verify_switch, yang_baxter_holds, Switch,
};

use common::{budapest_h, cx_det, eval, matching_pair, q, random_word, rho_cx};

fn monomial() -> impl Strategy<Value = RatFun> {
    (-4i64..=4, 0u32..3, 0u32..3, 0u32..2).prop_map(|(c, a, b, t)| {
        let f = RatFun::from_int(c);
        let x = RatFun::var("x").pow(a as i32).unwrap();
        let y = RatFun::var("y").pow(b as i32).unwrap();
        let t = RatFun::var("t").pow(t as i32).unwrap();
        &(&f * &x) * &(&y * &t)
    })
}

fn poly() -> impl Strategy<Value = RatFun> {
    prop::collection::vec(monomial(), 1..5).prop_map(|ms| ms.iter().fold(RatFun::zero(), |acc, m| &acc + m))
}

fn nonzero_poly() -> impl Strategy<Value = RatFun> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn as_poly(f: &RatFun) -> MPoly {
    assert!(f.is_polynomial());
    f.num().clone()
}

fn budapest_t() -> Switch {
    budapest().augment(&RatFun::var("t")).unwrap()
}

fn word(max_n: usize, max_len: usize, virtual_letters: bool) -> impl Strategy<Value = (String, usize)> {
    (any::<u64>(), 2..=max_n, 0..=max_len).prop_map(move |(seed, n, len)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (random_word(&mut rng, n, len, virtual_letters), n)
    })
}

fn matching_switch(seed: u64) -> Switch {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, b) = matching_pair(&mut rng);
    make_noncommuting(a.into(), b.into()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn render_parse_round_trip(p in poly(), d in nonzero_poly()) {
        let f = p.div(&d).unwrap();
        let back = parse_ratfun(&f.render()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn arithmetic_identities(a in poly(), b in poly(), c in nonzero_poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!((&a * &c).div(&c).unwrap(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn gcd_divides_and_is_maximal(a in nonzero_poly(), b in nonzero_poly(), g in nonzero_poly()) {
        let (pa, pb) = (as_poly(&(&a * &g)), as_poly(&(&b * &g)));
        let h = poly_gcd(&pa, &pb);
        prop_assert!(pa.div_exact(&h).is_some());
        prop_assert!(pb.div_exact(&h).is_some());
        prop_assert!(h.div_exact(&as_poly(&g)).is_some(), "gcd {} misses the common factor {}", h.render(), g.render());
    }

    #[test]
    fn laurent_idempotent_and_unit_invariant(p in nonzero_poly(), e in -3i32..=3, c in 1i64..5) {
        let units = ["t"];
        let n = laurent_normalize(&p, &units).unwrap();
        prop_assert_eq!(laurent_normalize(&n, &units).unwrap(), n.clone());
        let shifted = &(&p * &RatFun::var("t").pow(e).unwrap()) * &RatFun::from_int(-c);
        prop_assert_eq!(laurent_normalize(&shifted, &units).unwrap(), n);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn matching_pairs_give_switches(seed in any::<u64>()) {
        let s = matching_switch(seed);
        prop_assert!(verify_switch(&s).passes());
        prop_assert!(yang_baxter_holds(&s).unwrap());
        prop_assert!(elementary_factorization_holds(&s).unwrap());
        let sw = sideways(&s).unwrap();
        prop_assert!(sw.preserves_diagonal().unwrap());
        let inv = inverse_switch(&s).unwrap();
        prop_assert!(s.matrix().mul(&inv.matrix()).unwrap().is_identity());
    }

    #[test]
    fn vb_relations_hold(seed in any::<u64>(), n in 2usize..=4) {
        let s = matching_switch(seed);
        for r in check_vb_relations(&s, n).unwrap() {
            prop_assert!(r.holds, "{} = {} fails", r.lhs, r.rhs);
        }
    }

    #[test]
    fn word_times_inverse_is_identity((w, n) in word(4, 6, true)) {
        let s = budapest_t();
        let b = parse_braid(&w, n).unwrap();
        let m = represent(&b, &s).unwrap().mul(&represent(&b.inverse(), &s).unwrap()).unwrap();
        prop_assert!(m.is_identity());
    }

    #[test]
    fn representation_has_unit_determinant((w, n) in word(4, 6, true)) {
        let s = budapest_t();
        let b = parse_braid(&w, n).unwrap();
        prop_assert!(det_d(&represent(&b, &s).unwrap()).unwrap().is_one());
    }

    #[test]
    fn closure_determinant_matches_reference((w, n) in word(3, 5, true), t in 2i64..5) {
        let s = budapest_t();
        let b = parse_braid(&w, n).unwrap();
        let p = presentation_from_braid(&b, &s).unwrap();
        let ours = eval(&det_d(&p.matrix).unwrap(), &[("t", q(t, 1))]);
        let theirs = cx_det(&rho_cx(&w, n, &budapest_h(&q(t, 1))));
        prop_assert_eq!(ours, theirs);
    }

    #[test]
    fn alexander_delta0_vanishes_at_b_or_c_one((w, n) in word(3, 5, true)) {
        let s = switch_by_name("alexander", &[]).unwrap();
        let b = parse_braid(&w, n).unwrap();
        let d0 = det_d(&presentation_from_braid(&b, &s).unwrap().matrix).unwrap();
        for v in ["B", "C"] {
            prop_assert!(d0.subs(v, &RatFun::one()).is_zero(), "{} at {}=1", d0, v);
        }
    }

    #[test]
    fn braid_and_diagram_agree((w, n) in word(3, 5, true)) {
        let b = parse_braid(&w, n).unwrap();
        // closures with a crossingless component have no diagram
        let Ok(d) = diagram_from_braid(&b) else { return Ok(()) };
        for s in [budapest_t(), switch_by_name("alexander", &[]).unwrap()] {
            let bp = presentation_from_braid(&b, &s).unwrap();
            let dp = presentation_from_diagram(&d, &s).unwrap();
            prop_assert_eq!(delta0(&bp, &s).unwrap(), delta0(&dp, &s).unwrap(), "{} under {}", w, s.name);
        }
    }
}
