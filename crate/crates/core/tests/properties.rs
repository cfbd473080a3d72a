//! Property tests for the algebraic substrate: ring axioms on randomized
//! inputs, division reconstruction, character multiplicativity, rank
//! invariants.

use proptest::prelude::*;

use maschke_core::algebra::{int_rank, rat, GaussRat, IntMatrix, MultiPoly, Rat, UniPoly};
use maschke_core::ffield::build_ext;

const VARS: [&str; 2] = ["x", "y"];

fn arb_poly() -> impl Strategy<Value = MultiPoly<Rat>> {
    proptest::collection::vec((0u16..4, 0u16..4, -6i64..7), 0..6).prop_map(|terms| {
        let mut p = MultiPoly::zero(&VARS);
        for (e1, e2, c) in terms {
            p.add_term(vec![e1, e2], rat(c));
        }
        p
    })
}

fn arb_gauss() -> impl Strategy<Value = GaussRat> {
    ((-9i64..10), (1i64..5), (-9i64..10), (1i64..5))
        .prop_map(|(a, b, c, d)| GaussRat::new(Rat::new(a.into(), b.into()), Rat::new(c.into(), d.into())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_mul_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn poly_distributive(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn poly_mul_commutative(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn unipoly_divrem_reconstructs(
        f in proptest::collection::vec(-9i64..10, 1..8),
        g in proptest::collection::vec(-9i64..10, 1..5),
    ) {
        let f = UniPoly::<Rat>::from_i64(&f);
        let g = UniPoly::<Rat>::from_i64(&g);
        prop_assume!(!g.is_zero());
        let (q, r) = f.divrem(&g).unwrap();
        prop_assert_eq!(q.mul(&g).add(&r), f);
        if let (Some(dr), Some(dg)) = (r.degree(), g.degree()) {
            prop_assert!(dr < dg);
        }
    }

    #[test]
    fn gauss_field_axioms(a in arb_gauss(), b in arb_gauss(), c in arb_gauss()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert_eq!(&a * &inv, GaussRat::one());
        }
    }

    #[test]
    fn rank_transpose_and_modular_bound(entries in proptest::collection::vec(-5i64..6, 12)) {
        let m = IntMatrix::from_i64(3, 4, &entries);
        let r = m.rank_bareiss();
        prop_assert_eq!(r, m.transpose().rank_bareiss());
        for p in [1009u64, 10007] {
            prop_assert!(m.rank_mod(p) <= r);
        }
    }

    #[test]
    fn quad_char_multiplicative(i in 1u64..48, j in 1u64..48) {
        let ctx = build_ext(7, 2).unwrap();
        let a = ctx.nth(i);
        let b = ctx.nth(j);
        prop_assert_eq!(
            ctx.quad_char(&ctx.mul(&a, &b)),
            ctx.quad_char(&a) * ctx.quad_char(&b)
        );
    }
}
