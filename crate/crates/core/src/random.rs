//! Seeded random data: automorphisms, brace automorphisms and matched pairs.

use rand::Rng;

use crate::arith;
use crate::automorphism::Automorphism;
use crate::brace::LeftBrace;
use crate::error::Result;
use crate::group::AbelianGroup;
use crate::matched::{validate_matched_pair, MatchedPairData};

const ATTEMPTS: usize = 2000;

/// A uniformly drawn additive automorphism, found by rejection; the identity
/// if none turns up.
pub fn random_automorphism(g: &AbelianGroup, rng: &mut impl Rng) -> Automorphism {
    for _ in 0..ATTEMPTS {
        let images: Vec<_> = (0..g.rank())
            .map(|_| g.element_at(rng.gen_range(0..g.order())))
            .collect();
        if let Ok(a) = Automorphism::from_images(g, &images) {
            return a;
        }
    }
    Automorphism::identity(g)
}

/// `phi lambda_c phi^{-1} = lambda_{phi(c)}` for every `c`.
pub fn is_brace_automorphism(b: &LeftBrace, phi: &Automorphism) -> Result<bool> {
    let g = b.group();
    for c in 0..b.order() {
        let lhs = phi.compose(b.lam(c))?;
        let rhs = b.lam(phi.apply_idx(g, c)).compose(phi)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn random_brace_automorphism(b: &LeftBrace, rng: &mut impl Rng) -> Result<Automorphism> {
    for _ in 0..64 {
        let phi = random_automorphism(b.group(), rng);
        if is_brace_automorphism(b, &phi)? {
            return Ok(phi);
        }
    }
    Ok(Automorphism::identity(b.group()))
}

/// `t^k -> psi^k` for a generator `t` of a cyclic `(B, .)`, after replacing
/// `psi` by a power whose order divides `|B|`. `None` when `(B, .)` is not
/// cyclic.
pub fn cyclic_action(b: &LeftBrace, psi: &Automorphism) -> Option<Vec<Automorphism>> {
    let n = b.order();
    let t = (0..n).find(|&x| b.mult_order_idx(x) == n as u64)?;
    let o = psi.order(u64::MAX)?;
    let psi = psi.pow(o / arith::gcd(o, n as u64));
    let mut table = vec![psi.clone(); n];
    let mut x = 0usize;
    let mut acc = Automorphism::identity(
        &AbelianGroup::new(psi.moduli().to_vec()).expect("moduli of a group"),
    );
    for _ in 0..n {
        table[x] = acc.clone();
        x = b.mul_idx(x, t);
        acc = acc.compose(&psi).expect("same group");
    }
    Some(table)
}

/// A valid matched pair on `G` and `H`: random actions through cyclic
/// multiplicative groups where available, dropping whichever action breaks
/// the compatibility conditions.
pub fn random_matched_pair(
    g: &LeftBrace,
    h: &LeftBrace,
    rng: &mut impl Rng,
) -> Result<MatchedPairData> {
    let id_alpha = vec![Automorphism::identity(g.group()); h.order()];
    let id_beta = vec![Automorphism::identity(h.group()); g.order()];
    let alpha = cyclic_action(h, &random_brace_automorphism(g, rng)?);
    let beta = cyclic_action(g, &random_brace_automorphism(h, rng)?);
    let mut candidates = Vec::new();
    if let (Some(a), Some(b)) = (&alpha, &beta) {
        candidates.push((a.clone(), b.clone()));
    }
    if rng.gen_bool(0.5) {
        if let Some(a) = &alpha {
            candidates.push((a.clone(), id_beta.clone()));
        }
        if let Some(b) = &beta {
            candidates.push((id_alpha.clone(), b.clone()));
        }
    } else {
        if let Some(b) = &beta {
            candidates.push((id_alpha.clone(), b.clone()));
        }
        if let Some(a) = &alpha {
            candidates.push((a.clone(), id_beta.clone()));
        }
    }
    for (a, b) in candidates {
        let d = MatchedPairData::new(g.clone(), h.clone(), a, b)?;
        if validate_matched_pair(&d)?.is_none() {
            return Ok(d);
        }
    }
    MatchedPairData::direct(g.clone(), h.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_brace;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_automorphisms_are_invertible() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = AbelianGroup::new(vec![4, 2, 3]).unwrap();
        for _ in 0..20 {
            assert!(random_automorphism(&g, &mut rng).is_invertible());
        }
    }

    #[test]
    fn cyclic_action_is_homomorphic() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let g = trivial_brace(&AbelianGroup::new(vec![2, 2]).unwrap());
        let h = trivial_brace(&AbelianGroup::new(vec![3]).unwrap());
        let d = random_matched_pair(&g, &h, &mut rng).unwrap();
        assert!(validate_matched_pair(&d).unwrap().is_none());
        assert!(cyclic_action(&g, &Automorphism::identity(h.group())).is_none());
    }
}
