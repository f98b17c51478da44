use serde::Serialize;

use super::hegedus::{build_hegedus, hegedus_block, isometry_violation, powers, HegedusParams};
use super::quadratic::{quadratic_zero_witness, QuadraticForm};
use super::{FamilyCondition, FamilyViolation};
use crate::arith;
use crate::automorphism::Automorphism;
use crate::brace::{trivial_brace, LambdaKind, LeftBrace};
use crate::error::{BraceError, Result};
use crate::group::AbelianGroup;
use crate::matched::MatchedPairData;
use crate::matrix::MatrixModP;

/// Parameters of the brace on `Z/p1 x F_{p2}^{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleFamilyParams {
    pub p1: u32,
    pub p2: u32,
    pub n: usize,
    pub q: QuadraticForm,
    pub f: MatrixModP,
    pub gamma: u32,
    pub c: MatrixModP,
    pub z: Vec<u32>,
}

impl SimpleFamilyParams {
    /// The brace on `F_{p2}^{n+1}` built from `(Q, F)`.
    pub fn hegedus(&self) -> HegedusParams {
        HegedusParams {
            p: self.p2,
            n: self.n,
            q: self.q.clone(),
            f: self.f.clone(),
        }
    }

    /// `[[C, 0], [z, 1]]`, acting on `(y, y')` as `(C y, y' + z . y)`.
    pub fn m_matrix(&self) -> MatrixModP {
        let n = self.n;
        let mut m = MatrixModP::zeros(self.p2, n + 1, n + 1);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, self.c.get(r, c) as i64);
            }
        }
        for (c, &v) in self.z.iter().enumerate() {
            m.set(n, c, v as i64);
        }
        m.set(n, n, 1);
        m
    }

    pub fn order(&self) -> u128 {
        self.p1 as u128 * (self.p2 as u128).pow(self.n as u32 + 1)
    }
}

pub fn validate_simple_family(s: &SimpleFamilyParams) -> Option<FamilyViolation> {
    use FamilyCondition::*;
    let (p1, p2, n) = (s.p1, s.p2, s.n);
    let v = |c, d: String| Some(FamilyViolation::new(c, d));
    for p in [p1, p2] {
        if !arith::is_prime(p as u64) {
            return v(NotPrime, format!("{p}"));
        }
    }
    if p1 == p2 || (p1 - 1) % p2 != 0 {
        return v(Divisibility, format!("{p2} must divide {p1} - 1"));
    }
    let square = |m: &MatrixModP| m.p() == p2 && m.rows() == n && m.cols() == n;
    if s.q.p() != p2 || s.q.dim() != n || !square(&s.f) || !square(&s.c) || s.z.len() != n {
        return v(
            Shape,
            format!("all data must have dimension {n} over F_{p2}"),
        );
    }
    if s.z.iter().any(|&x| x >= p2) || s.gamma >= p1 {
        return v(Shape, "entries must be reduced".into());
    }
    if p2 == 2 && n % 2 != 0 {
        return v(Parity, format!("n = {n} is odd"));
    }
    if p2 != 2 && s.z.iter().any(|&x| x != 0) {
        return v(NonzeroZ, format!("{:?}", s.z));
    }
    if arith::mult_order(s.gamma as u64, p1 as u64) != Some(p2 as u64) {
        return v(GammaOrder, format!("gamma = {}", s.gamma));
    }
    if s.c.is_identity() || !s.c.pow(p1 as u64).expect("square").is_identity() {
        return v(COrder, format!("C does not have order {p1}"));
    }
    if !s.q.is_non_degenerate() {
        return v(Degenerate, "polar form is singular".into());
    }
    if let Some(mut bad) = isometry_violation(&s.q, &s.f) {
        bad.detail = format!("f: {}", bad.detail);
        return Some(bad);
    }
    let w = quadratic_zero_witness(p2, n, |x| {
        let cx = s.c.mul_vec(x).expect("dimension");
        let zx: u64 = s.z.iter().zip(x).map(|(&a, &b)| a as u64 * b as u64).sum();
        ((s.q.eval(&cx) as u64 + 2 * p2 as u64 - s.q.eval(x) as u64 - zx % p2 as u64) % p2 as u64)
            as u32
    });
    if let Some(x) = w {
        return v(ConditionB, format!("Q(Cx) != Q(x) + z.x at {x:?}"));
    }
    let lhs = s.f.mul(&s.c).expect("square");
    let rhs =
        s.c.pow(s.gamma as u64)
            .expect("square")
            .mul(&s.f)
            .expect("square");
    if lhs != rhs {
        return v(ConditionC, "F C != C^gamma F".into());
    }
    // implied by the conditions above; kept as a consistency check
    let mut acc = MatrixModP::zeros(p2, n, n);
    for m in powers(&s.c, p1 as usize) {
        acc = acc.add(&m).expect("square");
    }
    if acc
        .vec_mul(&s.z)
        .expect("dimension")
        .iter()
        .any(|&x| x != 0)
    {
        return v(ZOrbitSum, "z (I + C + ... + C^{p1-1}) != 0".into());
    }
    None
}

/// The brace on `Z/p1 x F_{p2}^{n+1}` with
/// `lambda_(a, x, x') = (gamma^q, M^a [[F^q, 0], [(C^{-a} x)^t B F^q, 1]])`,
/// `q = x' - Q(x)` and `M = [[C, 0], [z, 1]]`.
pub fn build_simple_family(s: &SimpleFamilyParams) -> Result<LeftBrace> {
    if let Some(v) = validate_simple_family(s) {
        return Err(BraceError::InvalidFamily(v));
    }
    let (p1, p2, n) = (s.p1, s.p2, s.n);
    let mut moduli = vec![p1];
    moduli.extend(std::iter::repeat_n(p2, n + 1));
    let group = AbelianGroup::new(moduli)?;
    let fpow = powers(&s.f, p2 as usize);
    let b = s.q.polar();
    let bf: Vec<MatrixModP> = fpow.iter().map(|m| b.mul(m).expect("square")).collect();
    let mpow = powers(&s.m_matrix(), p1 as usize);
    let cpow = powers(&s.c, p1 as usize);
    let gpow: Vec<MatrixModP> = (0..p2 as u64)
        .map(|q| {
            let g = arith::pow_mod(s.gamma as u64, q, p1 as u64);
            MatrixModP::new(p1, 1, 1, &[g as i64]).expect("1x1")
        })
        .collect();
    let g2 = group.clone();
    LeftBrace::from_lambda_fn(group, LambdaKind::SimpleFamily(s.clone()), |c| {
        let a = c[0] as usize;
        let x = &c[1..=n];
        let q = ((c[n + 1] + p2 - s.q.eval(x)) % p2) as usize;
        // C^{-a} = C^{p1 - a}
        let v = cpow[(p1 as usize - a) % p1 as usize].mul_vec(x)?;
        let second = mpow[a].mul(&hegedus_block(&fpow[q], &bf[q], &v))?;
        // blocks in increasing prime order, and p2 < p1
        Automorphism::from_blocks(&g2, &[second, gpow[q].clone()])
    })?
    .validated()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicityCriterion {
    /// `rank [C - I | F - I] = n`.
    pub holds: bool,
    pub rank: usize,
    /// The sufficient special case where `C - I` alone has full rank.
    pub c_minus_identity_invertible: bool,
}

pub fn simplicity_criterion(s: &SimpleFamilyParams) -> Result<SimplicityCriterion> {
    let id = MatrixModP::identity(s.p2, s.n);
    let cm = s.c.sub(&id)?;
    let fm = s.f.sub(&id)?;
    let rank = cm.hstack(&fm)?.rank();
    Ok(SimplicityCriterion {
        holds: rank == s.n,
        rank,
        c_minus_identity_invertible: cm.rank() == s.n,
    })
}

/// Block sum of parameter sets sharing `p1`, `p2` and `gamma`.
pub fn direct_sum_params(parts: &[SimpleFamilyParams]) -> Result<SimpleFamilyParams> {
    let first = parts
        .first()
        .ok_or_else(|| BraceError::Precondition("no parameter sets".into()))?;
    if parts
        .iter()
        .any(|s| (s.p1, s.p2, s.gamma) != (first.p1, first.p2, first.gamma))
    {
        return Err(BraceError::Precondition(
            "blocks must share p1, p2 and gamma".into(),
        ));
    }
    let qs: Vec<QuadraticForm> = parts.iter().map(|s| s.q.clone()).collect();
    let fs: Vec<MatrixModP> = parts.iter().map(|s| s.f.clone()).collect();
    let cs: Vec<MatrixModP> = parts.iter().map(|s| s.c.clone()).collect();
    Ok(SimpleFamilyParams {
        p1: first.p1,
        p2: first.p2,
        n: parts.iter().map(|s| s.n).sum(),
        q: QuadraticForm::block_sum(&qs)?,
        f: MatrixModP::block_diag(&fs)?,
        gamma: first.gamma,
        c: MatrixModP::block_diag(&cs)?,
        z: parts.iter().flat_map(|s| s.z.iter().copied()).collect(),
    })
}

/// `k` diagonal copies of `base`: dimension `k n`, order `p1 p2^{k n + 1}`.
pub fn construct_recursive(base: &SimpleFamilyParams, k: usize) -> Result<SimpleFamilyParams> {
    if k == 0 {
        return Err(BraceError::Precondition("k must be at least 1".into()));
    }
    if let Some(v) = validate_simple_family(base) {
        return Err(BraceError::InvalidFamily(v));
    }
    let out = direct_sum_params(&vec![base.clone(); k])?;
    if let Some(v) = validate_simple_family(&out) {
        return Err(BraceError::InvalidFamily(v));
    }
    Ok(out)
}

/// The same brace as a matched product: the trivial brace on `Z/p1` and the
/// brace from `(Q, F)`, with `alpha_(x, x')` multiplication by `gamma^q` and
/// `beta_a = M^a`.
pub fn simple_family_matched_pair(s: &SimpleFamilyParams) -> Result<MatchedPairData> {
    if let Some(v) = validate_simple_family(s) {
        return Err(BraceError::InvalidFamily(v));
    }
    let (p1, p2, n) = (s.p1, s.p2, s.n);
    let zp = AbelianGroup::new(vec![p1])?;
    let k = build_hegedus(&s.hegedus())?;
    let kg = k.group().clone();
    let m = s.m_matrix();
    MatchedPairData::from_fns(
        trivial_brace(&zp),
        k,
        |x| {
            let c = x.coords();
            let q = (c[n] + p2 - s.q.eval(&c[..n])) % p2;
            let g = arith::pow_mod(s.gamma as u64, q as u64, p1 as u64);
            Automorphism::from_matrix(&zp, &[vec![g as i64]])
        },
        |a| Automorphism::from_blocks(&kg, &[m.pow(a.coords()[0] as u64)?]),
    )
}
