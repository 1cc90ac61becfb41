//! Properties of the polynomial-automorphism families.
//!
//! Both generators of the second elementary shape fix the same horizontal
//! line, so they lie in `{(ax + S(y), by)}` after a translation in `y`.  Its
//! commutator subgroup is abelian and has no central elements other than
//! the identity, so no instance of that shape can be faithful.

use cremona::algebra::UniPoly;
use cremona::heisenberg::{verify_family, FamilySpec, VerifyOptions};
use cremona::GaussRational;
use proptest::prelude::*;

type G = GaussRational;

fn scalar() -> impl Strategy<Value = G> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| G::from(n) / G::from(d))
}

fn nonzero() -> impl Strategy<Value = G> {
    scalar().prop_filter("nonzero", |v| *v != G::from(0))
}

fn poly_y() -> impl Strategy<Value = UniPoly<G>> {
    prop::collection::vec(scalar(), 0..=3).prop_map(UniPoly::from_coeffs)
}

fn opts() -> VerifyOptions {
    VerifyOptions {
        n_max: Some(8),
        ..VerifyOptions::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn second_elementary_shape_is_never_faithful(
        a in nonzero(), alpha in nonzero(), b in nonzero(),
        beta in nonzero().prop_filter("beta != 1", |v| *v != G::from(1)),
        gamma in scalar(), p in poly_y(), q in poly_y(),
    ) {
        let spec = FamilySpec::ElemB { a, alpha, b, beta, gamma, p, q };
        let r = verify_family(&spec, &opts()).unwrap();
        prop_assert!(!r.faithful, "{:?}", spec);
    }

    #[test]
    fn faithful_translation_shape_has_unit_linear_parts(
        a in nonzero(), alpha in nonzero(), c in scalar(), gamma in scalar(), p in poly_y(), q in poly_y(),
    ) {
        let one = G::from(1);
        let spec = FamilySpec::ElemA { a: a.clone(), alpha: alpha.clone(), c, gamma, p, q };
        let r = verify_family(&spec, &opts()).unwrap();
        if r.faithful {
            prop_assert!(a == one && alpha == one, "{:?}", spec);
        }
    }
}
