use super::quadratic::{quadratic_zero_witness, QuadraticForm};
use super::{FamilyCondition, FamilyViolation};
use crate::arith;
use crate::automorphism::Automorphism;
use crate::brace::{LambdaKind, LeftBrace};
use crate::error::{BraceError, Result};
use crate::group::AbelianGroup;
use crate::matrix::MatrixModP;

/// A quadratic form `Q` on `F_p^n` and an isometry `f` of order `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HegedusParams {
    pub p: u32,
    pub n: usize,
    pub q: QuadraticForm,
    pub f: MatrixModP,
}

pub fn validate_hegedus(h: &HegedusParams) -> Option<FamilyViolation> {
    let p = h.p;
    if !arith::is_prime(p as u64) {
        return Some(FamilyViolation::new(
            FamilyCondition::NotPrime,
            format!("{p}"),
        ));
    }
    if h.q.p() != p || h.q.dim() != h.n || h.f.p() != p || h.f.rows() != h.n || h.f.cols() != h.n {
        return Some(FamilyViolation::new(
            FamilyCondition::Shape,
            format!("form and matrix must be {0}x{0} over F_{p}", h.n),
        ));
    }
    isometry_violation(&h.q, &h.f)
}

// f has order p and preserves Q
pub(super) fn isometry_violation(q: &QuadraticForm, f: &MatrixModP) -> Option<FamilyViolation> {
    let p = q.p();
    let fp = f.pow(p as u64).expect("square");
    if f.is_identity() || !fp.is_identity() {
        return Some(FamilyViolation::new(
            FamilyCondition::FOrder,
            format!("f does not have order {p}"),
        ));
    }
    let w = quadratic_zero_witness(p, q.dim(), |x| {
        let fx = f.mul_vec(x).expect("dimension");
        (q.eval(&fx) + p - q.eval(x)) % p
    });
    w.map(|x| {
        FamilyViolation::new(
            FamilyCondition::FPreservesQ,
            format!("Q(f(x)) != Q(x) at {x:?}"),
        )
    })
}

/// Powers `M^0, ..., M^{k-1}`.
pub(super) fn powers(m: &MatrixModP, k: usize) -> Vec<MatrixModP> {
    let mut out = Vec::with_capacity(k);
    let mut acc = MatrixModP::identity(m.p(), m.rows());
    for _ in 0..k {
        out.push(acc.clone());
        acc = acc.mul(m).expect("square");
    }
    out
}

/// The block `[[F^q, 0], [v^t B F^q, 1]]` acting on column vectors of
/// `F_p^{n+1}`, where `bf = B F^q`.
pub(super) fn hegedus_block(fq: &MatrixModP, bf: &MatrixModP, v: &[u32]) -> MatrixModP {
    let n = fq.rows();
    let p = fq.p();
    let mut m = MatrixModP::zeros(p, n + 1, n + 1);
    for r in 0..n {
        for c in 0..n {
            m.set(r, c, fq.get(r, c) as i64);
        }
    }
    let row = bf.vec_mul(v).expect("dimension");
    for (c, &x) in row.iter().enumerate() {
        m.set(n, c, x as i64);
    }
    m.set(n, n, 1);
    m
}

/// The brace on `F_p^{n+1}` with
/// `lambda_(x, x')(y, y') = (f^q(y), y' + b(x, f^q(y)))`, `q = x' - Q(x)`.
pub fn build_hegedus(h: &HegedusParams) -> Result<LeftBrace> {
    if let Some(v) = validate_hegedus(h) {
        return Err(BraceError::InvalidFamily(v));
    }
    let (p, n) = (h.p, h.n);
    let group = AbelianGroup::elementary(p, n + 1)?;
    let fpow = powers(&h.f, p as usize);
    let b = h.q.polar();
    let bf: Vec<MatrixModP> = fpow.iter().map(|m| b.mul(m).expect("square")).collect();
    let g2 = group.clone();
    LeftBrace::from_lambda_fn(group, LambdaKind::Hegedus(h.clone()), |c| {
        let x = &c[..n];
        let q = ((c[n] + p - h.q.eval(x)) % p) as usize;
        Automorphism::from_blocks(&g2, &[hegedus_block(&fpow[q], &bf[q], x)])
    })?
    .validated()
}

/// First parameter set in a fixed enumeration order: upper-triangular forms
/// with invertible polar form (when `non_degenerate`), then all matrices of
/// order `p` preserving the form.
pub fn find_hegedus_params(
    p: u32,
    n: usize,
    non_degenerate: bool,
) -> Result<Option<HegedusParams>> {
    if !arith::is_prime(p as u64) {
        return Err(BraceError::NotPrime(p as u64));
    }
    let tri = n * (n + 1) / 2;
    (p as u64)
        .checked_pow((tri + n * n) as u32)
        .filter(|&s| s <= 50_000_000)
        .ok_or_else(|| BraceError::Precondition("search space too large".into()))?;
    let count = |k: usize| (p as u64).pow(k as u32);
    let digits = |mut v: u64, k: usize| -> Vec<i64> {
        let mut d = vec![0i64; k];
        for slot in d.iter_mut().rev() {
            *slot = (v % p as u64) as i64;
            v /= p as u64;
        }
        d
    };
    for qi in 0..count(tri) {
        let coef = digits(qi, tri);
        let mut u = MatrixModP::zeros(p, n, n);
        let mut k = 0;
        for r in 0..n {
            for c in r..n {
                u.set(r, c, coef[k]);
                k += 1;
            }
        }
        let q = QuadraticForm::new(u)?;
        if non_degenerate && !q.is_non_degenerate() {
            continue;
        }
        for fi in 0..count(n * n) {
            let f = MatrixModP::new(p, n, n, &digits(fi, n * n))?;
            if isometry_violation(&q, &f).is_none() {
                return Ok(Some(HegedusParams { p, n, q, f }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::socle;

    #[test]
    fn swap_on_hyperbolic_plane() {
        let h = HegedusParams {
            p: 2,
            n: 2,
            q: QuadraticForm::from_rows(2, &[vec![0, 1], vec![0, 0]]).unwrap(),
            f: MatrixModP::from_rows(2, &[vec![0, 1], vec![1, 0]]).unwrap(),
        };
        let b = build_hegedus(&h).unwrap();
        assert_eq!(b.order(), 8);
        assert!(socle(&b).is_zero());
    }

    #[test]
    fn identity_f_rejected() {
        let h = HegedusParams {
            p: 2,
            n: 2,
            q: QuadraticForm::from_rows(2, &[vec![0, 1], vec![0, 0]]).unwrap(),
            f: MatrixModP::identity(2, 2),
        };
        assert_eq!(
            validate_hegedus(&h).unwrap().condition,
            FamilyCondition::FOrder
        );
        assert!(build_hegedus(&h).is_err());
    }

    #[test]
    fn search_finds_binary_plane() {
        let h = find_hegedus_params(2, 2, true).unwrap().unwrap();
        assert!(validate_hegedus(&h).is_none());
        assert!(h.q.is_non_degenerate());
    }

    #[test]
    fn degenerate_form_still_a_brace() {
        // Q = x1^2 has a radical, so the socle is non-zero
        let h = HegedusParams {
            p: 2,
            n: 2,
            q: QuadraticForm::from_rows(2, &[vec![1, 0], vec![0, 0]]).unwrap(),
            f: MatrixModP::from_rows(2, &[vec![1, 0], vec![1, 1]]).unwrap(),
        };
        assert!(validate_hegedus(&h).is_none());
        let b = build_hegedus(&h).unwrap();
        assert!(!socle(&b).is_zero());
    }
}
