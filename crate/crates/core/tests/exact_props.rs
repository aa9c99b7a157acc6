//! Property tests for the exact layer and the core combinatorial bijection.

use cmuni::exact::{cyclotomic_polynomial, rat, ratio, Cyclotomic, UniPoly};
use cmuni::partitions::{core_quotient, par_d, Partition};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = cmuni::Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn small_poly() -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec(small_rational(), 1..6)
        .prop_map(|coeffs| UniPoly::from_rationals(&coeffs))
}

fn small_cyclotomic(conductor: u32) -> impl Strategy<Value = Cyclotomic> {
    let dim = cmuni::exact::euler_phi(conductor) as usize;
    proptest::collection::vec(small_rational(), dim).prop_map(move |coeffs| {
        Cyclotomic::from_dense(conductor, coeffs)
    })
}

proptest! {
    #[test]
    fn product_divides_back(p in small_poly(), r in small_poly()) {
        prop_assume!(!r.is_zero());
        let prod = p.mul(&r);
        prop_assert_eq!(prod.divexact(&r).unwrap(), p);
    }

    #[test]
    fn lifted_arithmetic_agrees(
        a in small_cyclotomic(6),
        b in small_cyclotomic(6),
        k in prop_oneof![Just(2u32), Just(3u32)],
    ) {
        let m = 6 * k;
        let sum = a.add(&b).lift(m);
        let prod = a.mul(&b).lift(m);
        prop_assert_eq!(sum, a.lift(m).add(&b.lift(m)));
        prop_assert_eq!(prod, a.lift(m).mul(&b.lift(m)));
    }

    #[test]
    fn inverse_round_trip(a in small_cyclotomic(12)) {
        prop_assume!(!a.is_zero());
        prop_assert!(a.mul(&a.inverse().unwrap()).is_one());
    }

    #[test]
    fn root_multiplicity_is_cyclotomic_valuation(
        exponents in proptest::collection::vec(0u32..3, 3),
        d in 2u32..=6,
    ) {
        // Build a rational polynomial as a product of cyclotomic factors and
        // read off the multiplicity at a primitive d-th root two ways.
        let mut p = UniPoly::from_ints(&[1, 3]);
        for (e, &mult) in [2u32, 3, d].iter().zip(&exponents) {
            for _ in 0..mult {
                p = p.mul(&cyclotomic_polynomial(*e));
            }
        }
        let zeta = Cyclotomic::root_of_unity(d, 1);
        let at_root = p.root_multiplicity(&zeta).unwrap();
        let by_valuation = p.adic_valuation(&cyclotomic_polynomial(d)).unwrap();
        prop_assert_eq!(at_root, by_valuation);
    }

    #[test]
    fn core_quotient_round_trip(mut parts in proptest::collection::vec(1u32..=9, 0..8), d in 1u32..=6) {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = Partition::new(parts);
        let (core, quo) = core_quotient(&lambda, d);
        prop_assert!(core.is_d_core(d));
        prop_assert_eq!(lambda.size(), core.size() + d as u64 * quo.size());
        prop_assert_eq!(par_d(&core, &quo, d).unwrap(), lambda);
    }

    #[test]
    fn evaluation_is_ring_morphism(p in small_poly(), r in small_poly(), x in small_rational()) {
        let at = Cyclotomic::from_rational(x);
        let lhs = p.mul(&r).evaluate(&at);
        let rhs = p.evaluate(&at).mul(&r.evaluate(&at));
        prop_assert_eq!(lhs, rhs);
        let lhs = p.add(&r).evaluate(&at);
        let rhs = p.evaluate(&at).add(&r.evaluate(&at));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn rational_round_trip_through_cyclotomic() {
    let x = Cyclotomic::from_rational_at(rat(-7), 12);
    assert_eq!(x.to_rational().unwrap(), rat(-7));
}
