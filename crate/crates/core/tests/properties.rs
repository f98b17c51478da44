mod common;

use braces::families::QuadraticForm;
use braces::{
    inverse, multiply, parse_brace, same_lambda, serialize_brace, socle, trivial_brace,
    validate_brace, AbelianGroup, Element, MatrixModP,
};
use proptest::prelude::*;

fn moduli() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9]), 1..4)
        .prop_filter("small", |m| m.iter().product::<u32>() <= 512)
}

fn element(g: &AbelianGroup, seed: u64) -> Element {
    g.element_at((seed % g.order() as u64) as usize)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trivial_braces_validate(m in moduli()) {
        let mut b = trivial_brace(&AbelianGroup::new(m).unwrap());
        prop_assert!(validate_brace(&mut b).unwrap().passed());
        prop_assert_eq!(socle(&b).len(), b.order());
    }

    #[test]
    fn brace_identity_holds(k in 0usize..16, s in any::<[u64; 3]>()) {
        let pool = common::pool();
        let b = &pool[k % pool.len()];
        let g = b.group();
        let (x, y, z) = (element(g, s[0]), element(g, s[1]), element(g, s[2]));
        // x (y + z) + x = x y + x z
        let lhs = g.add(&multiply(b, &x, &g.add(&y, &z).unwrap()).unwrap(), &x).unwrap();
        let rhs = g.add(&multiply(b, &x, &y).unwrap(), &multiply(b, &x, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // lambda is a homomorphism from (B, .)
        let xy = multiply(b, &x, &y).unwrap();
        let composed = b.lambda(&x).unwrap().compose(b.lambda(&y).unwrap()).unwrap();
        prop_assert_eq!(b.lambda(&xy).unwrap(), &composed);
        let xi = inverse(b, &x).unwrap();
        prop_assert!(multiply(b, &x, &xi).unwrap().is_zero());
    }

    #[test]
    fn product_is_associative(k in 0usize..16, s in any::<[u64; 3]>()) {
        let pool = common::pool();
        let b = &pool[k % pool.len()];
        let g = b.group();
        let (x, y, z) = (element(g, s[0]), element(g, s[1]), element(g, s[2]));
        let l = multiply(b, &multiply(b, &x, &y).unwrap(), &z).unwrap();
        let r = multiply(b, &x, &multiply(b, &y, &z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn descriptor_round_trip(k in 0usize..16, materialize in any::<bool>()) {
        let pool = common::pool();
        let b = &pool[k % pool.len()];
        let back = parse_brace(&serialize_brace(b, materialize).unwrap()).unwrap();
        prop_assert!(same_lambda(b, &back));
    }

    #[test]
    fn parser_never_panics(s in ".{0,200}") {
        let _ = parse_brace(&s);
    }

    #[test]
    fn matrix_inverse(p in prop::sample::select(vec![2u32, 3, 5, 7]), e in prop::collection::vec(-20i64..20, 9)) {
        let m = MatrixModP::new(p, 3, 3, &e).unwrap();
        match m.inverse() {
            Some(inv) => {
                prop_assert!(m.mul(&inv).unwrap().is_identity());
                prop_assert_eq!(m.rank(), 3);
                prop_assert_ne!(m.det().unwrap(), 0);
            }
            None => prop_assert_eq!(m.det().unwrap(), 0),
        }
    }

    #[test]
    fn polar_form_is_bilinear(
        p in prop::sample::select(vec![2u32, 3, 5]),
        u in prop::collection::vec(0i64..5, 3),
        x in prop::collection::vec(0u32..5, 3),
        y in prop::collection::vec(0u32..5, 3),
        z in prop::collection::vec(0u32..5, 3),
    ) {
        let q = QuadraticForm::from_rows(p, &[
            vec![u[0], u[1], u[2]],
            vec![0, u[0], u[1]],
            vec![0, 0, u[2]],
        ]).unwrap();
        let red = |v: &[u32]| v.iter().map(|&a| a % p).collect::<Vec<_>>();
        let (x, y, z) = (red(&x), red(&y), red(&z));
        let yz: Vec<u32> = y.iter().zip(&z).map(|(a, b)| (a + b) % p).collect();
        let lhs = q.polar_eval(&x, &yz);
        prop_assert_eq!(lhs, (q.polar_eval(&x, &y) + q.polar_eval(&x, &z)) % p);
        prop_assert_eq!(q.polar_eval(&x, &y), q.polar_eval(&y, &x));
    }
}
