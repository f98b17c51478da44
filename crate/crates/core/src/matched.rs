//! Matched pairs of left braces and their matched products.
//!
//! `alpha` holds one automorphism of `(G, +)` per element of `H`, and `beta`
//! one automorphism of `(H, +)` per element of `G`, both indexed in element
//! order.

use std::fmt;

use crate::automorphism::Automorphism;
use crate::brace::{socle, LambdaKind, LeftBrace};
use crate::error::{BraceError, Result};
use crate::group::{decompose_abelian, enumeration_cap, AbelianGroup, Element};
use crate::ideals;
use crate::subset::ElementSet;

#[derive(Clone, Debug)]
pub struct MatchedPairData {
    g: LeftBrace,
    h: LeftBrace,
    alpha: Vec<Automorphism>,
    beta: Vec<Automorphism>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchedCondition {
    AlphaNotAutomorphism,
    BetaNotAutomorphism,
    /// `alpha` is a homomorphism from `(H, .)`.
    AlphaHomomorphism,
    /// `beta` is a homomorphism from `(G, .)`.
    BetaHomomorphism,
    /// `lambda1_a alpha_b = alpha_{beta_a(b)} lambda1_{alpha^{-1}_{beta_a(b)}(a)}`.
    Property1,
    /// `lambda2_b beta_a = beta_{alpha_b(a)} lambda2_{beta^{-1}_{alpha_b(a)}(b)}`.
    Property2,
}

impl MatchedCondition {
    pub fn name(self) -> &'static str {
        match self {
            MatchedCondition::AlphaNotAutomorphism => "alpha-automorphism",
            MatchedCondition::BetaNotAutomorphism => "beta-automorphism",
            MatchedCondition::AlphaHomomorphism => "alpha-homomorphism",
            MatchedCondition::BetaHomomorphism => "beta-homomorphism",
            MatchedCondition::Property1 => "property1",
            MatchedCondition::Property2 => "property2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedViolation {
    pub condition: MatchedCondition,
    pub witness: Vec<Vec<u32>>,
}

impl fmt::Display for MatchedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.condition.name(), self.witness)
    }
}

impl MatchedPairData {
    pub fn new(
        g: LeftBrace,
        h: LeftBrace,
        alpha: Vec<Automorphism>,
        beta: Vec<Automorphism>,
    ) -> Result<MatchedPairData> {
        g.mult_gens()?;
        h.mult_gens()?;
        if alpha.len() != h.order() || beta.len() != g.order() {
            return Err(BraceError::Shape(format!(
                "action tables have {} and {} entries, expected {} and {}",
                alpha.len(),
                beta.len(),
                h.order(),
                g.order()
            )));
        }
        if alpha.iter().any(|a| a.moduli() != g.group().moduli())
            || beta.iter().any(|b| b.moduli() != h.group().moduli())
        {
            return Err(BraceError::Shape(
                "action defined on the wrong group".into(),
            ));
        }
        Ok(MatchedPairData { g, h, alpha, beta })
    }

    pub fn from_fns(
        g: LeftBrace,
        h: LeftBrace,
        alpha: impl Fn(&Element) -> Result<Automorphism>,
        beta: impl Fn(&Element) -> Result<Automorphism>,
    ) -> Result<MatchedPairData> {
        let cap = enumeration_cap();
        let a = h
            .group()
            .elements(cap)?
            .map(|x| alpha(&x))
            .collect::<Result<Vec<_>>>()?;
        let b = g
            .group()
            .elements(cap)?
            .map(|x| beta(&x))
            .collect::<Result<Vec<_>>>()?;
        MatchedPairData::new(g, h, a, b)
    }

    /// Trivial actions; the matched product is the direct product.
    pub fn direct(g: LeftBrace, h: LeftBrace) -> Result<MatchedPairData> {
        let a = vec![Automorphism::identity(g.group()); h.order()];
        let b = vec![Automorphism::identity(h.group()); g.order()];
        MatchedPairData::new(g, h, a, b)
    }

    pub fn left(&self) -> &LeftBrace {
        &self.g
    }

    pub fn right(&self) -> &LeftBrace {
        &self.h
    }

    pub fn alpha_table(&self) -> &[Automorphism] {
        &self.alpha
    }

    pub fn beta_table(&self) -> &[Automorphism] {
        &self.beta
    }

    pub fn alpha(&self, b: &Element) -> Result<&Automorphism> {
        Ok(&self.alpha[self.h.group().index_of(b)?])
    }

    pub fn beta(&self, a: &Element) -> Result<&Automorphism> {
        Ok(&self.beta[self.g.group().index_of(a)?])
    }

    fn lambda_parts(&self, a: usize, b: usize) -> Result<(Automorphism, Automorphism)> {
        let (gg, hg) = (self.g.group(), self.h.group());
        let ainv = self.alpha[b].inverse();
        let binv = self.beta[a].inverse();
        let first = self.alpha[b].compose(self.g.lam(ainv.apply_idx(gg, a)))?;
        let second = self.beta[a].compose(self.h.lam(binv.apply_idx(hg, b)))?;
        Ok((first, second))
    }
}

fn check_actions(
    acting: &LeftBrace,
    table: &[Automorphism],
    bad_aut: MatchedCondition,
    bad_hom: MatchedCondition,
) -> Result<Option<MatchedViolation>> {
    let ag = acting.group();
    let fail = |condition, witness| Ok(Some(MatchedViolation { condition, witness }));
    for (x, a) in table.iter().enumerate() {
        if !a.is_invertible() {
            return fail(bad_aut, vec![ag.element_at(x).into_coords()]);
        }
    }
    if !table[0].is_identity() {
        return fail(bad_hom, vec![ag.zero().into_coords()]);
    }
    // a homomorphism on a generating set, extended along all left products
    for &t in acting.mult_gens()? {
        for x in 0..acting.order() {
            let lhs = table[t].compose(&table[x])?;
            if lhs != table[acting.mul_idx(t, x)] {
                return fail(
                    bad_hom,
                    vec![
                        ag.element_at(t).into_coords(),
                        ag.element_at(x).into_coords(),
                    ],
                );
            }
        }
    }
    Ok(None)
}

/// Exhaustive check of the matched-pair conditions. Compositions are compared
/// as matrices, which covers every argument of the acted-on group at once.
pub fn validate_matched_pair(d: &MatchedPairData) -> Result<Option<MatchedViolation>> {
    let (g, h) = (&d.g, &d.h);
    let (gg, hg) = (g.group(), h.group());
    let cap = enumeration_cap();
    if g.order().saturating_mul(h.order()) > cap {
        return Err(BraceError::EnumerationCap {
            order: g.order().saturating_mul(h.order()),
            cap,
        });
    }
    if let Some(v) = check_actions(
        h,
        &d.alpha,
        MatchedCondition::AlphaNotAutomorphism,
        MatchedCondition::AlphaHomomorphism,
    )? {
        return Ok(Some(v));
    }
    if let Some(v) = check_actions(
        g,
        &d.beta,
        MatchedCondition::BetaNotAutomorphism,
        MatchedCondition::BetaHomomorphism,
    )? {
        return Ok(Some(v));
    }
    let alpha_inv: Vec<Automorphism> = d.alpha.iter().map(Automorphism::inverse).collect();
    let beta_inv: Vec<Automorphism> = d.beta.iter().map(Automorphism::inverse).collect();
    let witness = |a: usize, b: usize| {
        vec![
            gg.element_at(a).into_coords(),
            hg.element_at(b).into_coords(),
        ]
    };
    for a in 0..g.order() {
        for b in 0..h.order() {
            let bb = d.beta[a].apply_idx(hg, b);
            let lhs = g.lam(a).compose(&d.alpha[b])?;
            let rhs = d.alpha[bb].compose(g.lam(alpha_inv[bb].apply_idx(gg, a)))?;
            if lhs != rhs {
                return Ok(Some(MatchedViolation {
                    condition: MatchedCondition::Property1,
                    witness: witness(a, b),
                }));
            }
        }
    }
    for a in 0..g.order() {
        for b in 0..h.order() {
            let aa = d.alpha[b].apply_idx(gg, a);
            let lhs = h.lam(b).compose(&d.beta[a])?;
            let rhs = d.beta[aa].compose(h.lam(beta_inv[aa].apply_idx(hg, b)))?;
            if lhs != rhs {
                return Ok(Some(MatchedViolation {
                    condition: MatchedCondition::Property2,
                    witness: witness(a, b),
                }));
            }
        }
    }
    Ok(None)
}

/// The brace `G x H` with componentwise sum; coordinates of `G` come first.
pub fn build_matched_product(d: &MatchedPairData) -> Result<LeftBrace> {
    if let Some(v) = validate_matched_pair(d)? {
        return Err(BraceError::InvalidMatchedPair(v));
    }
    let (gg, hg) = (d.g.group(), d.h.group());
    let group = gg.direct_sum(hg)?;
    let (rg, rh) = (gg.rank(), hg.rank());
    let nh = d.h.order();
    let b = LeftBrace::from_lambda_fn(
        group.clone(),
        LambdaKind::MatchedProduct(Box::new(d.clone())),
        |coords| {
            let a = gg.encode(&coords[..rg]);
            let bi = hg.encode(&coords[rg..]);
            let (first, second) = d.lambda_parts(a, bi)?;
            let mut images = Vec::with_capacity(rg + rh);
            for k in 0..rg {
                let mut c = first.apply(&gg.element_at(gg.basis_idx(k)))?.into_coords();
                c.resize(rg + rh, 0);
                images.push(Element::new(c));
            }
            for k in 0..rh {
                let mut c = vec![0u32; rg];
                c.extend(second.apply(&hg.element_at(hg.basis_idx(k)))?.into_coords());
                images.push(Element::new(c));
            }
            Automorphism::from_images(&group, &images)
        },
    )?
    .validated()?;
    let left = ElementSet::from_indices(&group, (0..d.g.order()).map(|a| a * nh).collect());
    let right = ElementSet::from_indices(&group, (0..nh).collect());
    if !ideals::is_left_ideal(&b, &left)? || !ideals::is_left_ideal(&b, &right)? {
        return Err(BraceError::Precondition(
            "factors of the matched product are not left ideals".into(),
        ));
    }
    Ok(b)
}

/// `(Soc G ∩ ker beta) x (Soc H ∩ ker alpha)`, valid when the orders are coprime.
pub fn matched_socle(d: &MatchedPairData) -> Result<ElementSet> {
    let (ng, nh) = (d.g.order(), d.h.order());
    if crate::arith::gcd(ng as u64, nh as u64) != 1 {
        return Err(BraceError::NotCoprime(ng, nh));
    }
    let group = d.g.group().direct_sum(d.h.group())?;
    let sg: Vec<usize> = (0..ng)
        .filter(|&a| d.g.is_socle_idx(a) && d.beta[a].is_identity())
        .collect();
    let sh: Vec<usize> = (0..nh)
        .filter(|&b| d.h.is_socle_idx(b) && d.alpha[b].is_identity())
        .collect();
    let mut members = Vec::with_capacity(sg.len() * sh.len());
    for &a in &sg {
        for &b in &sh {
            members.push(a * nh + b);
        }
    }
    Ok(ElementSet::from_indices(&group, members))
}

/// An additive subgroup of `B` as a group of its own: the group, and the index
/// in `B` of each of its elements.
pub(crate) fn coordinatize(b: &LeftBrace, s: &ElementSet) -> Result<(AbelianGroup, Vec<usize>)> {
    let g = b.group();
    let mut pos = vec![usize::MAX; g.order()];
    for (k, &x) in s.indices().iter().enumerate() {
        pos[x] = k;
    }
    let add = |u: usize, v: usize| pos[g.add_idx(s.indices()[u], s.indices()[v])];
    // prefer the smallest multiple of each standard generator lying in s
    let mut hints = Vec::new();
    for k in 0..g.rank() {
        let e = g.basis_idx(k);
        let mut m = e;
        while m != 0 {
            if pos[m] != usize::MAX {
                hints.push(pos[m]);
                break;
            }
            m = g.add_idx(m, e);
        }
    }
    let (sub, labels) = decompose_abelian(s.len(), add, &hints)?;
    let embed = labels.iter().map(|&l| s.indices()[l]).collect();
    Ok((sub, embed))
}

/// The sub-brace carried by a left ideal, with its embedding into `B`.
pub(crate) fn restrict(b: &LeftBrace, s: &ElementSet) -> Result<(LeftBrace, Vec<usize>)> {
    let (sub, embed) = coordinatize(b, s)?;
    let mut pos = vec![usize::MAX; b.order()];
    for (k, &x) in embed.iter().enumerate() {
        pos[x] = k;
    }
    let basis: Vec<usize> = (0..sub.rank()).map(|k| embed[sub.basis_idx(k)]).collect();
    let brace = LeftBrace::from_lambda_fn(sub.clone(), LambdaKind::Table, |coords| {
        let a = embed[sub.encode(coords)];
        let images: Vec<Element> = basis
            .iter()
            .map(|&e| sub.element_at(pos[b.lam_apply(a, e)]))
            .collect();
        Automorphism::from_images(&sub, &images)
    })?
    .validated()?;
    Ok((brace, embed))
}

/// Matched-pair data of `B` relative to complementary left ideals `I1`, `I2`:
/// `alpha_b = lambda_b` on `I1` and `beta_a = lambda_a` on `I2`.
pub fn extract_matched_pair(
    b: &LeftBrace,
    i1: &ElementSet,
    i2: &ElementSet,
) -> Result<MatchedPairData> {
    for (name, s) in [("first", i1), ("second", i2)] {
        if s.group() != b.group() || !ideals::is_left_ideal(b, s)? {
            return Err(BraceError::NotComplementary(format!(
                "{name} subset is not a left ideal"
            )));
        }
    }
    let meet = i1.indices().iter().filter(|&&x| i2.contains_idx(x)).count();
    if meet != 1 || i1.len() * i2.len() != b.order() {
        return Err(BraceError::NotComplementary(
            "additive group is not the direct sum of the two".into(),
        ));
    }
    let (gb, gemb) = restrict(b, i1)?;
    let (hb, hemb) = restrict(b, i2)?;
    let mut gpos = vec![usize::MAX; b.order()];
    for (k, &x) in gemb.iter().enumerate() {
        gpos[x] = k;
    }
    let mut hpos = vec![usize::MAX; b.order()];
    for (k, &x) in hemb.iter().enumerate() {
        hpos[x] = k;
    }
    let (gg, hg) = (gb.group().clone(), hb.group().clone());
    let gbasis: Vec<usize> = (0..gg.rank()).map(|k| gemb[gg.basis_idx(k)]).collect();
    let hbasis: Vec<usize> = (0..hg.rank()).map(|k| hemb[hg.basis_idx(k)]).collect();
    let alpha = hemb
        .iter()
        .map(|&y| {
            let images: Vec<Element> = gbasis
                .iter()
                .map(|&e| gg.element_at(gpos[b.lam_apply(y, e)]))
                .collect();
            Automorphism::from_images(&gg, &images)
        })
        .collect::<Result<Vec<_>>>()?;
    let beta = gemb
        .iter()
        .map(|&x| {
            let images: Vec<Element> = hbasis
                .iter()
                .map(|&e| hg.element_at(hpos[b.lam_apply(x, e)]))
                .collect();
            Automorphism::from_images(&hg, &images)
        })
        .collect::<Result<Vec<_>>>()?;
    MatchedPairData::new(gb, hb, alpha, beta)
}

/// Compares the product of the built brace with the group matched product of
/// `(G, .)` and `(H, .)` under the actions `^b a = alpha_b(a)` and
/// `b^a = beta^{-1}_{alpha_b(a)}(b)`, via `(a, b) -> a . b`.
pub fn multiplicative_matched_check(d: &MatchedPairData) -> Result<bool> {
    let built = build_matched_product(d)?;
    let (ng, nh) = (d.g.order(), d.h.order());
    let gg = d.g.group();
    let hg = d.h.group();
    let beta_inv: Vec<Automorphism> = d.beta.iter().map(Automorphism::inverse).collect();
    let phi: Vec<usize> = (0..ng * nh)
        .map(|p| built.mul_idx((p / nh) * nh, p % nh))
        .collect();
    let mut seen = vec![false; ng * nh];
    for &x in &phi {
        if seen[x] {
            return Ok(false);
        }
        seen[x] = true;
    }
    for p in 0..ng * nh {
        let (a, b) = (p / nh, p % nh);
        for q in 0..ng * nh {
            let (a2, b2) = (q / nh, q % nh);
            let act = d.alpha[b].apply_idx(gg, a2);
            let first = d.g.mul_idx(a, act);
            let second = d.h.mul_idx(beta_inv[act].apply_idx(hg, b), b2);
            if phi[first * nh + second] != built.mul_idx(phi[p], phi[q]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Socle of the built product, for comparison with [`matched_socle`].
pub fn product_socle(d: &MatchedPairData) -> Result<ElementSet> {
    Ok(socle(&build_matched_product(d)?))
}

/// `m2 B` and `m1 B` as a matched pair, for `|B| = m1 m2` with coprime factors.
pub fn sylow_matched_pair(b: &LeftBrace, m1: usize, m2: usize) -> Result<MatchedPairData> {
    let (i1, i2) = crate::brace::hall_decompose(b, m1, m2)?;
    extract_matched_pair(b, &i1, &i2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_brace;

    fn g(m: &[u32]) -> AbelianGroup {
        AbelianGroup::new(m.to_vec()).unwrap()
    }

    #[test]
    fn direct_product_of_trivials() {
        let d =
            MatchedPairData::direct(trivial_brace(&g(&[3])), trivial_brace(&g(&[2, 2]))).unwrap();
        assert_eq!(validate_matched_pair(&d).unwrap(), None);
        let b = build_matched_product(&d).unwrap();
        assert_eq!(b.order(), 12);
        assert_eq!(b.lambda_classes(), 1);
        assert!(matched_socle(&d).unwrap().is_full());
        assert!(multiplicative_matched_check(&d).unwrap());
    }

    #[test]
    fn semidirect_z3_by_z2() {
        // Z/2 acting on Z/3 by negation gives the dihedral multiplicative group
        let gb = trivial_brace(&g(&[3]));
        let hb = trivial_brace(&g(&[2]));
        let gg = g(&[3]);
        let d = MatchedPairData::from_fns(
            gb,
            hb,
            |b| Automorphism::from_matrix(&gg, &[vec![if b.coords()[0] == 1 { 2 } else { 1 }]]),
            |_| Ok(Automorphism::identity(&g(&[2]))),
        )
        .unwrap();
        assert_eq!(validate_matched_pair(&d).unwrap(), None);
        let soc = matched_socle(&d).unwrap();
        assert_eq!(soc.len(), 3);
        assert_eq!(soc.indices(), product_socle(&d).unwrap().indices());
        assert!(multiplicative_matched_check(&d).unwrap());
    }

    #[test]
    fn non_homomorphic_alpha_rejected() {
        let gg = g(&[3]);
        let d = MatchedPairData::from_fns(
            trivial_brace(&gg),
            trivial_brace(&g(&[3])),
            |b| Automorphism::from_matrix(&gg, &[vec![if b.coords()[0] == 1 { 2 } else { 1 }]]),
            |_| Ok(Automorphism::identity(&g(&[3]))),
        )
        .unwrap();
        let v = validate_matched_pair(&d).unwrap().unwrap();
        assert_eq!(v.condition, MatchedCondition::AlphaHomomorphism);
        assert!(build_matched_product(&d).is_err());
    }

    #[test]
    fn non_coprime_socle_refused() {
        let d = MatchedPairData::direct(trivial_brace(&g(&[2])), trivial_brace(&g(&[2]))).unwrap();
        assert!(matches!(
            matched_socle(&d),
            Err(BraceError::NotCoprime(2, 2))
        ));
    }

    #[test]
    fn extract_direct_sum() {
        let b = trivial_brace(&g(&[2, 3]));
        let i1 = ElementSet::from_indices(b.group(), vec![0, 3]);
        let i2 = ElementSet::from_indices(b.group(), vec![0, 1, 2]);
        let d = extract_matched_pair(&b, &i1, &i2).unwrap();
        assert!(d.alpha_table().iter().all(Automorphism::is_identity));
        assert!(d.beta_table().iter().all(Automorphism::is_identity));
        let bad = ElementSet::from_indices(b.group(), vec![0]);
        assert!(extract_matched_pair(&b, &i1, &bad).is_err());
    }
}
