use arclink_core::calculus::blow_down;
use arclink_core::cusp::{dual_sequence, monodromy, recover_sequence, reduce_mod_monodromy, CuspSequence};
use arclink_core::graph::{intersection_matrix, leading_minors, parse_plumbing, PlumbingGraph};
use arclink_core::hjcf::{hj_expand, hj_numerator, Vec2};
use arclink_core::QuadElement;
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn cusp_terms() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..=7, 1..=6).prop_filter("some term >= 3", |b| b.iter().any(|&x| x >= 3))
}

fn det(g: &PlumbingGraph) -> BigInt {
    leading_minors(&intersection_matrix(g)).last().cloned().unwrap_or_else(|| BigInt::from(1))
}

fn rotation_of(a: &CuspSequence, b: &CuspSequence) -> bool {
    a.is_rotation_of(b)
}

proptest! {
    #[test]
    fn text_roundtrip(legs in prop::collection::vec(prop::collection::vec(-6i64..=-2, 1..=3), 0..=4), center in -4i64..=-1, genus in 0u32..=2) {
        let g = PlumbingGraph::star(center, genus, &legs);
        prop_assert_eq!(parse_plumbing(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn hj_expansion_inverts_numerator(alpha in 2i64..400, omega in 1i64..400) {
        prop_assume!(omega < alpha && alpha.gcd(&omega) == 1);
        let terms = hj_expand(&alpha.into(), &omega.into()).unwrap();
        prop_assert!(terms.iter().all(|&b| b >= 2));
        prop_assert_eq!(hj_numerator(&terms), BigInt::from(alpha));
        prop_assert_eq!(hj_numerator(&terms[1..]), BigInt::from(omega));
    }

    #[test]
    fn duality_is_an_involution(b in cusp_terms()) {
        let c = CuspSequence::new(b).unwrap();
        let d = dual_sequence(&c);
        prop_assert!(rotation_of(&dual_sequence(&d), &c));
        prop_assert_eq!(monodromy(&c).trace(), monodromy(&d).trace());
    }

    #[test]
    fn monodromy_roundtrip(b in cusp_terms()) {
        let c = CuspSequence::new(b).unwrap();
        prop_assert!(recover_sequence(&monodromy(&c)).unwrap().is_rotation_of(&c));
    }

    #[test]
    fn reduction_is_monodromy_invariant(b in cusp_terms(), x in 1i64..30, y in 1i64..30, j in -2i64..=2) {
        // x v0 + y v1 = (y, x) lies in the open first sector
        let c = CuspSequence::new(b).unwrap();
        let w = Vec2::new(y, x);
        let mj = monodromy(&c).pow(j).unwrap();
        let (r1, _) = reduce_mod_monodromy(&w, &c).unwrap();
        let (r2, _) = reduce_mod_monodromy(&mj.apply(&w), &c).unwrap();
        prop_assert_eq!(r1, r2);
    }

    #[test]
    fn blow_down_keeps_determinant(a in -6i64..=-2, b in -6i64..=-2) {
        let g = PlumbingGraph::chain("v", &[a, -1, b]);
        let h = blow_down(&g, "v1");
        prop_assert_eq!(num_traits::Signed::abs(&det(&g)), num_traits::Signed::abs(&det(&h)));
    }

    #[test]
    fn norm_is_multiplicative(a in -20i64..20, b in -20i64..20, c in -20i64..20, e in -20i64..20, d in prop::sample::select(vec![2i64, 3, 5, 7, 13])) {
        let x = QuadElement::from_ints(a, b, d);
        let y = QuadElement::from_ints(c, e, d);
        prop_assert_eq!(x.try_mul(&y).unwrap().norm(), x.norm() * y.norm());
    }
}
