//! Extensions of a left brace `H` by a trivial brace `I`.
//!
//! The data `(H, I, sigma, nu, tau, beta)` is stored densely: `sigma` and `nu`
//! hold one automorphism of `I` per element of `H`, and `tau`, `beta` hold one
//! element of `I` per ordered pair `(h1, h2)`, at position `h1 * |H| + h2`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automorphism::Automorphism;
use crate::brace::{LambdaKind, LeftBrace};
use crate::error::{BraceError, Result};
use crate::group::{decompose_abelian, enumeration_cap, AbelianGroup, Element};
use crate::ideals;
use crate::subset::ElementSet;

#[derive(Clone, Debug)]
pub struct ExtensionData {
    h: LeftBrace,
    i: AbelianGroup,
    sigma: Vec<Automorphism>,
    nu: Vec<Automorphism>,
    tau: Vec<usize>,
    beta: Vec<usize>,
}

/// Identities an extension must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionIdentity {
    /// `sigma_{x1} ∘ sigma_{x2} = sigma_{x2·x1}`.
    SigmaRightAction,
    /// `nu_{h1} ∘ nu_{h2} = nu_{h1·h2}`.
    NuLeftAction,
    /// `tau(g, 0) = tau(0, g) = 0`.
    TauNormalized,
    /// `sigma_{g3}(tau(g1,g2)) + tau(g1 g2, g3) = tau(g1, g2 g3) + tau(g2, g3)`.
    TauCocycle,
    /// `beta(0, h) = beta(h, 0) = 0`.
    BetaNormalized,
    BetaSymmetric,
    /// `beta(h1, h2 + h3) + beta(h2, h3) = beta(h1 + h2, h3) + beta(h1, h2)`.
    BetaCocycle,
    /// `nu_{h1+h2} sigma_{h1+h2}(y) + y = nu_{h1} sigma_{h1}(y) + nu_{h2} sigma_{h2}(y)`.
    ActionCompatibility,
    /// The identity linking `tau` and `beta` through the brace law.
    CocycleCompatibility,
}

impl ExtensionIdentity {
    pub fn name(self) -> &'static str {
        match self {
            ExtensionIdentity::SigmaRightAction => "sigma-right-action",
            ExtensionIdentity::NuLeftAction => "nu-left-action",
            ExtensionIdentity::TauNormalized => "tau-normalized",
            ExtensionIdentity::TauCocycle => "tau-cocycle",
            ExtensionIdentity::BetaNormalized => "beta-normalized",
            ExtensionIdentity::BetaSymmetric => "beta-symmetric",
            ExtensionIdentity::BetaCocycle => "beta-cocycle",
            ExtensionIdentity::ActionCompatibility => "propact",
            ExtensionIdentity::CocycleCompatibility => "propcocycle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionViolation {
    pub identity: ExtensionIdentity,
    /// The quantified variables of the failing instance, as coordinates.
    pub witness: Vec<Vec<u32>>,
}

impl fmt::Display for ExtensionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.identity.name(), self.witness)
    }
}

impl ExtensionData {
    pub fn new(
        h: LeftBrace,
        i: AbelianGroup,
        sigma: Vec<Automorphism>,
        nu: Vec<Automorphism>,
        tau: Vec<Element>,
        beta: Vec<Element>,
    ) -> Result<ExtensionData> {
        h.mult_gens()?;
        let nh = h.order();
        let shape = |what: &str, got: usize, want: usize| -> Result<()> {
            if got != want {
                return Err(BraceError::Shape(format!(
                    "{what} has {got} entries, expected {want}"
                )));
            }
            Ok(())
        };
        shape("sigma", sigma.len(), nh)?;
        shape("nu", nu.len(), nh)?;
        shape("tau", tau.len(), nh * nh)?;
        shape("beta", beta.len(), nh * nh)?;
        for a in sigma.iter().chain(&nu) {
            if a.moduli() != i.moduli() {
                return Err(BraceError::Shape(
                    "action is not defined on the kernel group".into(),
                ));
            }
        }
        let idx =
            |v: Vec<Element>| -> Result<Vec<usize>> { v.iter().map(|x| i.index_of(x)).collect() };
        let tau = idx(tau)?;
        let beta = idx(beta)?;
        Ok(ExtensionData {
            h,
            i,
            sigma,
            nu,
            tau,
            beta,
        })
    }

    /// Builds the dense tables by evaluating the given maps on every element.
    pub fn from_fns(
        h: LeftBrace,
        i: AbelianGroup,
        sigma: impl Fn(&Element) -> Result<Automorphism>,
        nu: impl Fn(&Element) -> Result<Automorphism>,
        tau: impl Fn(&Element, &Element) -> Element,
        beta: impl Fn(&Element, &Element) -> Element,
    ) -> Result<ExtensionData> {
        let hs: Vec<Element> = h.group().elements(enumeration_cap())?.collect();
        let s = hs.iter().map(&sigma).collect::<Result<Vec<_>>>()?;
        let n = hs.iter().map(&nu).collect::<Result<Vec<_>>>()?;
        let mut t = Vec::new();
        let mut b = Vec::new();
        for x in &hs {
            for y in &hs {
                t.push(tau(x, y));
                b.push(beta(x, y));
            }
        }
        ExtensionData::new(h, i, s, n, t, b)
    }

    /// The all-trivial data, whose extension is the direct product.
    pub fn direct(h: LeftBrace, i: AbelianGroup) -> Result<ExtensionData> {
        let id = Automorphism::identity(&i);
        let nh = h.order();
        let zero = i.zero();
        ExtensionData::new(
            h,
            i,
            vec![id.clone(); nh],
            vec![id; nh],
            vec![zero.clone(); nh * nh],
            vec![zero; nh * nh],
        )
    }

    pub fn base(&self) -> &LeftBrace {
        &self.h
    }

    pub fn kernel(&self) -> &AbelianGroup {
        &self.i
    }

    pub fn sigma_table(&self) -> &[Automorphism] {
        &self.sigma
    }

    pub fn nu_table(&self) -> &[Automorphism] {
        &self.nu
    }

    pub fn tau_table(&self) -> Vec<Element> {
        self.tau.iter().map(|&y| self.i.element_at(y)).collect()
    }

    pub fn beta_table(&self) -> Vec<Element> {
        self.beta.iter().map(|&y| self.i.element_at(y)).collect()
    }

    pub fn sigma(&self, h: &Element) -> Result<&Automorphism> {
        Ok(&self.sigma[self.h.group().index_of(h)?])
    }

    pub fn nu(&self, h: &Element) -> Result<&Automorphism> {
        Ok(&self.nu[self.h.group().index_of(h)?])
    }

    pub fn tau(&self, h1: &Element, h2: &Element) -> Result<Element> {
        let n = self.h.order();
        let k = self.h.group().index_of(h1)? * n + self.h.group().index_of(h2)?;
        Ok(self.i.element_at(self.tau[k]))
    }

    pub fn beta(&self, h1: &Element, h2: &Element) -> Result<Element> {
        let n = self.h.order();
        let k = self.h.group().index_of(h1)? * n + self.h.group().index_of(h2)?;
        Ok(self.i.element_at(self.beta[k]))
    }

    fn t(&self, a: usize, b: usize) -> usize {
        self.tau[a * self.h.order() + b]
    }

    fn b(&self, a: usize, b: usize) -> usize {
        self.beta[a * self.h.order() + b]
    }

    fn s_apply(&self, h: usize, y: usize) -> usize {
        self.sigma[h].apply_idx(&self.i, y)
    }

    fn n_apply(&self, h: usize, y: usize) -> usize {
        self.nu[h].apply_idx(&self.i, y)
    }
}

/// Checks every identity exhaustively; the first failure is reported with the
/// lexicographically least witness.
pub fn validate_extension_data(d: &ExtensionData) -> Result<Option<ExtensionViolation>> {
    let h = &d.h;
    let hg = h.group();
    let ig = &d.i;
    let nh = h.order();
    let cap = enumeration_cap();
    if nh.saturating_mul(ig.order()) > cap {
        return Err(BraceError::EnumerationCap {
            order: nh.saturating_mul(ig.order()),
            cap,
        });
    }
    let hc = |x: usize| hg.element_at(x).into_coords();
    let ic = |x: usize| ig.element_at(x).into_coords();
    let fail = |identity, witness| Ok(Some(ExtensionViolation { identity, witness }));

    for (k, a) in d.sigma.iter().chain(&d.nu).enumerate() {
        if !a.is_invertible() {
            let which = if k < nh {
                ExtensionIdentity::SigmaRightAction
            } else {
                ExtensionIdentity::NuLeftAction
            };
            return fail(which, vec![hc(k % nh)]);
        }
    }
    for x1 in 0..nh {
        for x2 in 0..nh {
            let lhs = d.sigma[x1].compose(&d.sigma[x2])?;
            if lhs != d.sigma[h.mul_idx(x2, x1)] {
                return fail(ExtensionIdentity::SigmaRightAction, vec![hc(x1), hc(x2)]);
            }
        }
    }
    for h1 in 0..nh {
        for h2 in 0..nh {
            let lhs = d.nu[h1].compose(&d.nu[h2])?;
            if lhs != d.nu[h.mul_idx(h1, h2)] {
                return fail(ExtensionIdentity::NuLeftAction, vec![hc(h1), hc(h2)]);
            }
        }
    }
    for g in 0..nh {
        if d.t(g, 0) != 0 || d.t(0, g) != 0 {
            return fail(ExtensionIdentity::TauNormalized, vec![hc(g)]);
        }
    }
    for g1 in 0..nh {
        for g2 in 0..nh {
            let g12 = h.mul_idx(g1, g2);
            for g3 in 0..nh {
                let g23 = h.mul_idx(g2, g3);
                let lhs = ig.add_idx(d.s_apply(g3, d.t(g1, g2)), d.t(g12, g3));
                let rhs = ig.add_idx(d.t(g1, g23), d.t(g2, g3));
                if lhs != rhs {
                    return fail(ExtensionIdentity::TauCocycle, vec![hc(g1), hc(g2), hc(g3)]);
                }
            }
        }
    }
    for g in 0..nh {
        if d.b(g, 0) != 0 || d.b(0, g) != 0 {
            return fail(ExtensionIdentity::BetaNormalized, vec![hc(g)]);
        }
    }
    for a in 0..nh {
        for b in 0..nh {
            if d.b(a, b) != d.b(b, a) {
                return fail(ExtensionIdentity::BetaSymmetric, vec![hc(a), hc(b)]);
            }
        }
    }
    for a in 0..nh {
        for b in 0..nh {
            let ab = hg.add_idx(a, b);
            for c in 0..nh {
                let lhs = ig.add_idx(d.b(a, hg.add_idx(b, c)), d.b(b, c));
                let rhs = ig.add_idx(d.b(ab, c), d.b(a, b));
                if lhs != rhs {
                    return fail(ExtensionIdentity::BetaCocycle, vec![hc(a), hc(b), hc(c)]);
                }
            }
        }
    }
    // additive in y, so generators of I suffice
    let ns = |h: usize, y: usize| d.n_apply(h, d.s_apply(h, y));
    for h1 in 0..nh {
        for h2 in 0..nh {
            let h12 = hg.add_idx(h1, h2);
            for k in 0..ig.rank() {
                let y = ig.basis_idx(k);
                let lhs = ig.add_idx(ns(h12, y), y);
                let rhs = ig.add_idx(ns(h1, y), ns(h2, y));
                if lhs != rhs {
                    return fail(
                        ExtensionIdentity::ActionCompatibility,
                        vec![hc(h1), hc(h2), ic(y)],
                    );
                }
            }
        }
    }
    for h1 in 0..nh {
        for h2 in 0..nh {
            let p12 = h.mul_idx(h1, h2);
            for h3 in 0..nh {
                let s23 = hg.add_idx(h2, h3);
                let p1s = h.mul_idx(h1, s23);
                let p13 = h.mul_idx(h1, h3);
                let lhs = ig.add_idx(
                    ig.add_idx(d.n_apply(p1s, d.t(h1, s23)), d.b(p1s, h1)),
                    d.n_apply(h1, d.b(h2, h3)),
                );
                let rhs = ig.add_idx(
                    ig.add_idx(d.n_apply(p12, d.t(h1, h2)), d.n_apply(p13, d.t(h1, h3))),
                    d.b(p12, p13),
                );
                if lhs != rhs {
                    return fail(
                        ExtensionIdentity::CocycleCompatibility,
                        vec![hc(h1), hc(h2), hc(h3)],
                    );
                }
            }
        }
    }
    Ok(None)
}

/// The extension brace on `H x I` together with the pair `(h, y)` behind each
/// element index of the result.
pub struct BuiltExtension {
    pub brace: LeftBrace,
    pub pairs: Vec<(Element, Element)>,
}

/// [`build_extension_with_pairs`] without the coordinate map.
pub fn build_extension(d: &ExtensionData) -> Result<LeftBrace> {
    Ok(build_extension_with_pairs(d)?.brace)
}

/// Builds the brace with sum `(h1+h2, y1+y2+beta(h1,h2))` and the twisted
/// product. The additive group is re-coordinatized as a product of cyclic
/// groups; `pairs` records the correspondence.
pub fn build_extension_with_pairs(d: &ExtensionData) -> Result<BuiltExtension> {
    if let Some(v) = validate_extension_data(d)? {
        return Err(BraceError::InvalidExtension(v));
    }
    let h = &d.h;
    let hg = h.group();
    let ig = &d.i;
    let (nh, ni) = (h.order(), ig.order());
    let n = nh * ni;
    let split = |p: usize| (p / ni, p % ni);
    let add = |p: usize, q: usize| {
        let (h1, y1) = split(p);
        let (h2, y2) = split(q);
        hg.add_idx(h1, h2) * ni + ig.add_idx(ig.add_idx(y1, y2), d.b(h1, h2))
    };
    let nu_inv: Vec<Automorphism> = d.nu.iter().map(Automorphism::inverse).collect();
    let mul = |p: usize, q: usize| {
        let (h1, y1) = split(p);
        let (h2, y2) = split(q);
        let h12 = h.mul_idx(h1, h2);
        let a = d.n_apply(h12, d.s_apply(h2, nu_inv[h1].apply_idx(ig, y1)));
        let b = d.n_apply(h1, y2);
        let c = d.n_apply(h12, d.t(h1, h2));
        h12 * ni + ig.add_idx(ig.add_idx(a, b), c)
    };
    // negation in the twisted sum: (-h, -y - beta(h, -h))
    let neg = |p: usize| {
        let (h1, y1) = split(p);
        let mh = hg.neg_idx(h1);
        mh * ni + ig.neg_idx(ig.add_idx(y1, d.b(h1, mh)))
    };

    let mut hints: Vec<usize> = (0..hg.rank()).map(|k| hg.basis_idx(k) * ni).collect();
    hints.extend((0..ig.rank()).map(|k| ig.basis_idx(k)));
    let (group, labels) = decompose_abelian(n, add, &hints)?;
    let mut index_of = vec![0usize; n];
    for (idx, &l) in labels.iter().enumerate() {
        index_of[l] = idx;
    }
    let basis: Vec<usize> = (0..group.rank())
        .map(|k| labels[group.basis_idx(k)])
        .collect();
    let brace = LeftBrace::from_lambda_fn(
        group.clone(),
        LambdaKind::Extension(Box::new(d.clone())),
        |coords| {
            let a = labels[group.encode(coords)];
            let images: Vec<Element> = basis
                .iter()
                .map(|&e| group.element_at(index_of[add(neg(a), mul(a, e))]))
                .collect();
            Automorphism::from_images(&group, &images)
        },
    )?
    .validated()?;

    let pairs: Vec<(Element, Element)> = labels
        .iter()
        .map(|&l| {
            let (a, b) = split(l);
            (hg.element_at(a), ig.element_at(b))
        })
        .collect();

    // {0} x I is an ideal with trivial structure
    let kernel: Vec<usize> = (0..ni).map(|y| index_of[y]).collect();
    let kernel = ElementSet::from_indices(&group, kernel);
    if !ideals::is_ideal(&brace, &kernel)? || !has_trivial_structure(&brace, &kernel) {
        return Err(BraceError::Precondition(
            "kernel of the extension is not a trivial ideal".into(),
        ));
    }
    Ok(BuiltExtension { brace, pairs })
}

/// `y1 · y2 = y1 + y2` inside `s`.
pub(crate) fn has_trivial_structure(b: &LeftBrace, s: &ElementSet) -> bool {
    trivial_structure_witness(b, s).is_none()
}

fn trivial_structure_witness(b: &LeftBrace, s: &ElementSet) -> Option<(usize, usize)> {
    let gens: Vec<usize> = match s.generator_indices() {
        Some(g) => g.to_vec(),
        None => s.indices().to_vec(),
    };
    for &y in s.indices() {
        for &g in &gens {
            if b.lam_apply(y, g) != g {
                return Some((y, g));
            }
        }
    }
    None
}

/// How coset representatives are chosen during extraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transversal {
    /// Lexicographically least element of each coset.
    LexLeast,
    /// Lexicographically greatest element, except `0` for the kernel itself.
    LexGreatest,
    /// A member of each coset drawn from a seeded generator, `0` for the kernel.
    Seeded(u64),
}

/// Extension data of `B` relative to the trivial ideal `I`, using the least
/// coset representatives.
pub fn extract_extension_data(b: &LeftBrace, i: &ElementSet) -> Result<ExtensionData> {
    extract_extension_data_with(b, i, Transversal::LexLeast)
}

pub fn extract_extension_data_with(
    b: &LeftBrace,
    i: &ElementSet,
    rule: Transversal,
) -> Result<ExtensionData> {
    let g = b.group();
    if i.group() != g || !ideals::is_ideal(b, i)? {
        return Err(BraceError::NotAnIdeal);
    }
    if let Some((y1, y2)) = trivial_structure_witness(b, i) {
        return Err(BraceError::NontrivialIdeal(
            g.element_at(y1).to_string(),
            g.element_at(y2).to_string(),
        ));
    }
    let n = b.order();
    // cosets numbered by their least member
    let mut coset_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    let mut rng = match rule {
        Transversal::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        let mut chosen = x;
        for &y in i.indices() {
            let z = g.add_idx(x, y);
            coset_of[z] = c;
            if rule == Transversal::LexGreatest && c != 0 {
                chosen = chosen.max(z);
            }
        }
        if let (Some(rng), true) = (rng.as_mut(), c != 0) {
            let y = i.indices()[rng.gen_range(0..i.len())];
            chosen = g.add_idx(x, y);
        }
        reps.push(chosen);
    }
    let nh = reps.len();

    // quotient group, coordinatized
    let qadd = |c1: usize, c2: usize| coset_of[g.add_idx(reps[c1], reps[c2])];
    let hints: Vec<usize> = (0..g.rank())
        .map(|k| coset_of[g.basis_idx(k)])
        .filter(|&c| c != 0)
        .collect();
    let (hgroup, hlabels) = decompose_abelian(nh, qadd, &hints)?;
    let mut h_of_coset = vec![0usize; nh];
    for (idx, &c) in hlabels.iter().enumerate() {
        h_of_coset[c] = idx;
    }
    let s = |h: usize| reps[hlabels[h]];
    let hbasis: Vec<usize> = (0..hgroup.rank()).map(|k| hgroup.basis_idx(k)).collect();
    let hbrace = LeftBrace::from_lambda_fn(hgroup.clone(), LambdaKind::Table, |coords| {
        let a = s(hgroup.encode(coords));
        let images: Vec<Element> = hbasis
            .iter()
            .map(|&e| hgroup.element_at(h_of_coset[coset_of[b.lam_apply(a, s(e))]]))
            .collect();
        Automorphism::from_images(&hgroup, &images)
    })?
    .validated()?;

    // kernel group, coordinatized
    let mut in_i = vec![usize::MAX; n];
    for (k, &y) in i.indices().iter().enumerate() {
        in_i[y] = k;
    }
    let iadd = |u: usize, v: usize| in_i[g.add_idx(i.indices()[u], i.indices()[v])];
    let mut ihints: Vec<usize> = Vec::new();
    for k in 0..g.rank() {
        let e = g.basis_idx(k);
        let mut m = e;
        while m != 0 {
            if in_i[m] != usize::MAX {
                ihints.push(in_i[m]);
                break;
            }
            m = g.add_idx(m, e);
        }
    }
    let (igroup, ilabels) = decompose_abelian(i.len(), iadd, &ihints)?;
    let mut i_of_member = vec![0usize; i.len()];
    for (idx, &l) in ilabels.iter().enumerate() {
        i_of_member[l] = idx;
    }
    let to_i = |x: usize| -> Element {
        let k = in_i[x];
        assert!(k != usize::MAX, "value lies in the ideal");
        igroup.element_at(i_of_member[k])
    };
    let from_i = |y: usize| i.indices()[ilabels[y]];
    let ibasis: Vec<usize> = (0..igroup.rank())
        .map(|k| from_i(igroup.basis_idx(k)))
        .collect();

    let aut_from = |f: &dyn Fn(usize) -> usize| -> Result<Automorphism> {
        let images: Vec<Element> = ibasis.iter().map(|&y| to_i(f(y))).collect();
        Automorphism::from_images(&igroup, &images)
    };
    let mut sigma = Vec::with_capacity(nh);
    let mut nu = Vec::with_capacity(nh);
    for h in 0..nh {
        let sh = s(h);
        let shi = b.inv_idx(sh);
        sigma.push(aut_from(&|y| b.mul_idx(b.mul_idx(shi, y), sh))?);
        nu.push(aut_from(&|y| b.lam_apply(sh, y))?);
    }
    let mut tau = Vec::with_capacity(nh * nh);
    let mut beta = Vec::with_capacity(nh * nh);
    for h1 in 0..nh {
        for h2 in 0..nh {
            let (s1, s2) = (s(h1), s(h2));
            let p = hbrace.mul_idx(h1, h2);
            tau.push(to_i(b.mul_idx(b.mul_idx(b.inv_idx(s(p)), s1), s2)));
            let q = hgroup.add_idx(h1, h2);
            beta.push(to_i(g.sub_idx(g.add_idx(s1, s2), s(q))));
        }
    }
    ExtensionData::new(hbrace, igroup, sigma, nu, tau, beta)
}

/// Every ideal on which the product coincides with the sum.
pub fn find_trivial_ideals(b: &LeftBrace) -> Result<Vec<ElementSet>> {
    let list = ideals::enumerate_ideals(b, ideals::DEFAULT_IDEAL_CAP)?;
    if !list.complete {
        return Err(BraceError::Precondition(
            "ideal enumeration hit its cap".into(),
        ));
    }
    Ok(list
        .ideals
        .into_iter()
        .filter(|s| has_trivial_structure(b, s))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_brace;

    fn g(m: &[u32]) -> AbelianGroup {
        AbelianGroup::new(m.to_vec()).unwrap()
    }

    #[test]
    fn direct_product_extension() {
        let h = trivial_brace(&g(&[3]));
        let d = ExtensionData::direct(h, g(&[2])).unwrap();
        assert_eq!(validate_extension_data(&d).unwrap(), None);
        let b = build_extension(&d).unwrap();
        assert_eq!(b.order(), 6);
        assert_eq!(b.lambda_classes(), 1);
    }

    #[test]
    fn carry_of_z4() {
        let b = trivial_brace(&g(&[4]));
        let i = ElementSet::from_indices(b.group(), vec![0, 2]);
        let d = extract_extension_data(&b, &i).unwrap();
        assert_eq!(d.base().order(), 2);
        assert!(d.sigma_table().iter().all(Automorphism::is_identity));
        assert!(d.nu_table().iter().all(Automorphism::is_identity));
        // (B, .) = (B, +) here, so tau carries the same overflow as beta
        let one = Element::new(vec![1]);
        assert_eq!(d.beta(&one, &one).unwrap(), Element::new(vec![1]));
        assert_eq!(d.tau(&one, &one).unwrap(), Element::new(vec![1]));
        let zero = Element::new(vec![0]);
        assert!(d.tau(&zero, &one).unwrap().is_zero());
        let rebuilt = build_extension(&d).unwrap();
        assert_eq!(rebuilt.group().moduli(), &[4]);
    }

    #[test]
    fn zero_ideal_extraction() {
        let b = trivial_brace(&g(&[2, 3]));
        let d = extract_extension_data(&b, &ElementSet::zero(b.group())).unwrap();
        assert_eq!(d.kernel().order(), 1);
        assert_eq!(build_extension(&d).unwrap().order(), 6);
    }

    #[test]
    fn non_ideal_rejected() {
        let b = trivial_brace(&g(&[4]));
        let s = ElementSet::from_indices(b.group(), vec![0, 1]);
        assert!(matches!(
            extract_extension_data(&b, &s),
            Err(BraceError::NotAnIdeal)
        ));
    }

    #[test]
    fn trivial_brace_ideals_all_trivial() {
        let b = trivial_brace(&g(&[2, 2]));
        assert_eq!(find_trivial_ideals(&b).unwrap().len(), 5);
    }
}
