mod common;

use braces::families::{
    build_simple_family, construct_explicit_family, construct_recursive, direct_sum_params, eval_q,
    simple_family_matched_pair, simplicity_criterion, validate_simple_family, FamilyCondition,
    QuadraticForm, SimpleFamilyParams,
};
use braces::matched::build_matched_product;
use braces::{
    check_generated_iso, enumerate_ideals, is_simple, same_lambda, socle, Element,
    GroupPresentation, MatrixModP,
};

fn el(c: &[u32]) -> Element {
    Element::new(c.to_vec())
}

#[test]
fn p7_p3_matrix_is_bit_exact() {
    let e = construct_explicit_family(7, 3).unwrap();
    assert_eq!((e.alpha, e.gamma), (3, 2));
    assert_eq!(e.theta, vec![vec![1, 2, 4], vec![3, 6, 5]]);
    let expected: Vec<Vec<u32>> = ["000100", "100000", "000010", "010000", "000001", "001000"]
        .iter()
        .map(|r| r.bytes().map(|b| (b - b'0') as u32).collect())
        .collect();
    assert_eq!(e.params.f.to_rows(), expected);
    assert!(validate_simple_family(&e.params).is_none());
    let crit = simplicity_criterion(&e.params).unwrap();
    assert!(crit.holds);
    assert_eq!(crit.rank, 6);
}

#[test]
fn explicit_family_structural_identities() {
    for (p1, p2) in [(3, 2), (5, 2), (7, 2), (7, 3), (11, 5), (13, 3)] {
        let e = construct_explicit_family(p1, p2).unwrap();
        let s = &e.params;
        assert_eq!(e.cycle_count, (p1 as usize - 1) / p2 as usize);
        assert!(e.theta.iter().all(|c| c.len() == p2 as usize));
        // F C F^{-1} = C^{gamma}
        let fi = s.f.inverse().unwrap();
        let lhs = s.f.mul(&s.c).unwrap().mul(&fi).unwrap();
        assert_eq!(lhs, s.c.pow(e.gamma as u64).unwrap());
        // det of the polar form is 1 mod p2
        assert_eq!(s.q.polar().det().unwrap(), 1);
        if p2 != 2 {
            let b = s.q.polar();
            assert_eq!(s.f.transpose().mul(&b).unwrap().mul(&s.f).unwrap(), b);
        }
        let crit = simplicity_criterion(s).unwrap();
        assert!(crit.holds && crit.c_minus_identity_invertible);
    }
}

#[test]
fn eval_q_examples() {
    let q = QuadraticForm::pairwise_sum(3, 6);
    assert_eq!(eval_q(&q, &el(&[1, 1, 0, 0, 0, 0]), 2).unwrap(), 1);
    assert_eq!(eval_q(&q, &el(&[0; 6]), 0).unwrap(), 0);
}

#[test]
fn q_is_additive_under_the_brace_sum() {
    let b = common::hegedus8();
    let h = match b.kind() {
        braces::LambdaKind::Hegedus(h) => h.clone(),
        _ => unreachable!(),
    };
    let qv = |x: &Element| eval_q(&h.q, &el(&x.coords()[..2]), x.coords()[2]).unwrap();
    for x in b.group().elements(8).unwrap() {
        for y in b.group().elements(8).unwrap() {
            let s = b
                .group()
                .add(&x, &b.lambda(&x).unwrap().apply(&y).unwrap())
                .unwrap();
            assert_eq!(qv(&s), (qv(&x) + qv(&y)) % 2);
        }
    }
}

#[test]
fn order24_brace() {
    let s = construct_explicit_family(3, 2).unwrap().params;
    let b = build_simple_family(&s).unwrap();
    assert_eq!(b.order(), 24);
    assert!(is_simple(&b).unwrap());
    assert!(socle(&b).is_zero());
    assert_eq!(enumerate_ideals(&b, 100).unwrap().ideals.len(), 2);
    let verdict = check_generated_iso(
        &b,
        &GroupPresentation::symmetric4(),
        &[el(&[1, 0, 0, 0]), el(&[0, 1, 1, 0])],
    )
    .unwrap();
    assert!(verdict.holds, "{:?}", verdict.reason);
}

#[test]
fn family_equals_matched_product() {
    let bases = [
        construct_explicit_family(3, 2).unwrap().params,
        construct_explicit_family(5, 2).unwrap().params,
    ];
    for s in &bases {
        let direct = build_simple_family(s).unwrap();
        let d = simple_family_matched_pair(s).unwrap();
        let product = build_matched_product(&d).unwrap();
        assert!(same_lambda(&direct, &product));
    }
}

#[test]
fn z_orbit_sum_vanishes() {
    for (p1, p2) in [(3, 2), (5, 2), (7, 3)] {
        let s = construct_explicit_family(p1, p2).unwrap().params;
        let mut acc = MatrixModP::zeros(p2, s.n, s.n);
        for k in 0..p1 as u64 {
            acc = acc.add(&s.c.pow(k).unwrap()).unwrap();
        }
        assert!(acc.vec_mul(&s.z).unwrap().iter().all(|&x| x == 0));
    }
}

// C = diag(C0, I) and F = diag(F0, F1): the padding block escapes the image
// of [C - I | F - I], so the criterion fails.
fn padded(f1: MatrixModP) -> SimpleFamilyParams {
    let base = construct_explicit_family(3, 2).unwrap().params;
    let pad = SimpleFamilyParams {
        p1: 3,
        p2: 2,
        n: 2,
        q: QuadraticForm::from_rows(2, &[vec![0, 1], vec![0, 0]]).unwrap(),
        f: f1,
        gamma: base.gamma,
        c: MatrixModP::identity(2, 2),
        z: vec![0, 0],
    };
    direct_sum_params(&[base, pad]).unwrap()
}

#[test]
fn criterion_agrees_with_closure_oracle() {
    let base = construct_explicit_family(3, 2).unwrap().params;
    let mut instances = vec![
        base.clone(),
        construct_recursive(&base, 2).unwrap(),
        construct_explicit_family(5, 2).unwrap().params,
    ];
    let swap = MatrixModP::from_rows(2, &[vec![0, 1], vec![1, 0]]).unwrap();
    for f1 in [MatrixModP::identity(2, 2), swap] {
        let s = padded(f1);
        assert!(validate_simple_family(&s).is_none());
        instances.push(s);
    }
    let mut seen_false = false;
    for s in &instances {
        let crit = simplicity_criterion(s).unwrap().holds;
        let b = build_simple_family(s).unwrap();
        assert_eq!(crit, is_simple(&b).unwrap(), "n = {}", s.n);
        seen_false |= !crit;
    }
    assert!(seen_false);
}

#[test]
fn condition_c_violation_reported() {
    let mut s = construct_explicit_family(7, 3).unwrap().params;
    s.gamma = 4;
    let v = validate_simple_family(&s).unwrap();
    assert_eq!(v.condition, FamilyCondition::ConditionC);
}
