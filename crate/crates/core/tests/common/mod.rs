#![allow(dead_code)]

use braces::families::{build_hegedus, HegedusParams, QuadraticForm};
use braces::{trivial_brace, AbelianGroup, Automorphism, LambdaKind, LeftBrace, MatrixModP};

pub fn group(m: &[u32]) -> AbelianGroup {
    AbelianGroup::new(m.to_vec()).unwrap()
}

/// The brace on (Z/2)^3 with
/// lambda_(x,y,z) = [[1, z, x+y+xz], [0, 1, z+x+yz], [0, 0, 1]].
pub fn explicit_order8() -> LeftBrace {
    let grp = group(&[2, 2, 2]);
    LeftBrace::from_lambda_fn(grp.clone(), LambdaKind::Table, |c| {
        let (x, y, z) = (c[0] as i64, c[1] as i64, c[2] as i64);
        Automorphism::from_matrix(
            &grp,
            &[
                vec![1, z, x + y + x * z],
                vec![0, 1, z + x + y * z],
                vec![0, 0, 1],
            ],
        )
    })
    .unwrap()
    .validated()
    .unwrap()
}

/// lambda_a = multiplication by (-1)^a on Z/4.
pub fn signed_z4() -> LeftBrace {
    let grp = group(&[4]);
    LeftBrace::from_lambda_fn(grp.clone(), LambdaKind::Table, |c| {
        Automorphism::from_matrix(&grp, &[vec![if c[0] % 2 == 1 { 3 } else { 1 }]])
    })
    .unwrap()
    .validated()
    .unwrap()
}

/// lambda_(x,y) = [[1, y], [0, 1]] on (Z/2)^2.
pub fn shear_order4() -> LeftBrace {
    let grp = group(&[2, 2]);
    LeftBrace::from_lambda_fn(grp.clone(), LambdaKind::Table, |c| {
        Automorphism::from_matrix(&grp, &[vec![1, c[1] as i64], vec![0, 1]])
    })
    .unwrap()
    .validated()
    .unwrap()
}

/// Q = x1 x2 and the coordinate swap on F_2^2.
pub fn hegedus8() -> LeftBrace {
    build_hegedus(&HegedusParams {
        p: 2,
        n: 2,
        q: QuadraticForm::from_rows(2, &[vec![0, 1], vec![0, 0]]).unwrap(),
        f: MatrixModP::from_rows(2, &[vec![0, 1], vec![1, 0]]).unwrap(),
    })
    .unwrap()
}

/// Q = x1^2 with the shear fixing x1 on F_3^2; a brace with non-zero socle.
pub fn degenerate_hegedus27() -> LeftBrace {
    build_hegedus(&HegedusParams {
        p: 3,
        n: 2,
        q: QuadraticForm::from_rows(3, &[vec![1, 0], vec![0, 0]]).unwrap(),
        f: MatrixModP::from_rows(3, &[vec![1, 0], vec![1, 1]]).unwrap(),
    })
    .unwrap()
}

/// Small braces of assorted orders.
pub fn pool() -> Vec<LeftBrace> {
    let mut v: Vec<LeftBrace> = [
        &[2][..],
        &[4],
        &[2, 2],
        &[8],
        &[2, 2, 2],
        &[3],
        &[9],
        &[3, 3],
        &[5],
        &[7],
        &[27],
    ]
    .iter()
    .map(|m| trivial_brace(&group(m)))
    .collect();
    v.extend([
        explicit_order8(),
        signed_z4(),
        shear_order4(),
        hegedus8(),
        degenerate_hegedus27(),
    ]);
    v
}
