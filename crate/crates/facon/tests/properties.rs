//! Property suites: ring axioms on the exact kernel, parser totality and
//! round-trips, primitivity laws, and the index-partition invariant of
//! façon labels.

use facon::algebra::{primitive_vector, Monomial, MultiPoly, Rational, VarSpace};
use facon::curves::{ExponentVector, Facon};
use facon::parser::parse_mapping;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec((0usize..3, 1u32..=3), 0..3).prop_map(|powers| {
        let mut m = Monomial::one();
        for (v, e) in powers {
            m = m.mul(&Monomial::var(v, e));
        }
        m
    })
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((monomial(), rational()), 0..5).prop_map(|terms| {
        let mut p = MultiPoly::zero(VarSpace::Ambient);
        for (m, c) in terms {
            p = p.add(&MultiPoly::monomial(VarSpace::Ambient, m, c));
        }
        p
    })
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rational(), 3)
}

proptest! {
    #[test]
    fn addition_commutes_and_associates(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
    }

    #[test]
    fn multiplication_commutes_associates_distributes(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in poly(), q in poly(), pt in point()) {
        let lhs = p.mul(&q).eval(&pt).unwrap();
        let rhs = p.eval(&pt).unwrap() * q.eval(&pt).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = p.add(&q).eval(&pt).unwrap();
        let rhs = p.eval(&pt).unwrap() + q.eval(&pt).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn subtraction_of_self_is_zero(p in poly()) {
        prop_assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn primitive_vector_laws(v in proptest::collection::vec(-30i64..=30, 1..5), k in 1i64..=5) {
        prop_assume!(v.iter().any(|&x| x != 0));
        let p = primitive_vector(&v).unwrap();
        prop_assert_eq!(primitive_vector(&p).unwrap(), p.clone());
        let scaled: Vec<i64> = v.iter().map(|x| x * k).collect();
        prop_assert_eq!(primitive_vector(&scaled).unwrap(), p);
    }

    #[test]
    fn parser_never_panics(text in "\\PC*") {
        let _ = parse_mapping(&text);
    }

    #[test]
    fn parser_never_panics_on_almost_valid_input(
        text in "vars (x[1-3] )+; *[x1-3+*()^; 0-9]*"
    ) {
        let _ = parse_mapping(&text);
    }

    #[test]
    fn canonical_form_round_trips(
        comps in proptest::collection::vec(
            proptest::collection::vec((monomial(), -9i64..=9), 0..4),
            1..=3,
        )
    ) {
        let n = comps.len();
        // Integer coefficients only: that is what the grammar accepts.
        let components: Vec<MultiPoly> = comps
            .into_iter()
            .map(|terms| {
                let mut p = MultiPoly::zero(VarSpace::Ambient);
                for (m, c) in terms {
                    // Keep variables inside the declared range.
                    let mut clipped = Monomial::one();
                    for (v, e) in m.iter() {
                        clipped = clipped.mul(&Monomial::var(v % n, e));
                    }
                    p = p.add(&MultiPoly::monomial(
                        VarSpace::Ambient,
                        clipped,
                        Rational::from_integer(c.into()),
                    ));
                }
                p
            })
            .collect();
        let mapping = facon::parser::PolynomialMapping::new(n, components).unwrap();
        let reparsed = parse_mapping(&mapping.canonical_text()).unwrap();
        prop_assert_eq!(mapping.components(), reparsed.components());
    }

    #[test]
    fn facon_indices_partition_the_coordinates(e in proptest::collection::vec(-3i64..=3, 1..=4)) {
        prop_assume!(e.iter().any(|&x| x > 0));
        let n = e.len();
        let ev = ExponentVector::new(e).unwrap();
        let facon = Facon::from_exponents(&ev).unwrap();
        prop_assert!(!facon.infinity_indices().is_empty());
        let mut all: Vec<usize> = Vec::new();
        all.extend_from_slice(facon.infinity_indices());
        all.extend_from_slice(facon.zero_indices());
        all.extend_from_slice(facon.free_indices());
        all.sort_unstable();
        let expected: Vec<usize> = (1..=n).collect();
        prop_assert_eq!(all, expected);
    }
}
