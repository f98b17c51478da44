//! Left braces given by their lambda maps.
//!
//! A brace is stored as its additive group plus a dense lambda table: a list of
//! distinct automorphisms and, for every element, the index of its lambda map.
//! The structured origin of the table (a family, a matched product, ...) is kept
//! alongside so that descriptors can be written back in compact form.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith;
use crate::automorphism::Automorphism;
use crate::error::{BraceError, Result};
use crate::extension::ExtensionData;
use crate::families::{HegedusParams, SimpleFamilyParams};
use crate::group::{enumeration_cap, AbelianGroup, Element};
use crate::matched::MatchedPairData;
use crate::subset::{self, ElementSet};

/// Pairwise checks of the composition law are used up to this order; larger
/// braces are checked against a generating set of the multiplicative group.
pub const PAIRWISE_VALIDATION_LIMIT: usize = 256;

/// Exhaustive triple checks are used up to this many triples.
pub const TRIPLE_CAP: u64 = 10_000_000;

/// Deduplicated lambda maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaTable {
    classes: Vec<Automorphism>,
    class_of: Vec<u32>,
}

impl LambdaTable {
    /// `class_of[a]` selects the lambda map of element `a` from `classes`.
    pub fn new(classes: Vec<Automorphism>, class_of: Vec<u32>) -> Result<Self> {
        if class_of.iter().any(|&c| c as usize >= classes.len()) {
            return Err(BraceError::Descriptor(
                "lambda assignment refers to a missing class".into(),
            ));
        }
        Ok(LambdaTable { classes, class_of })
    }

    pub fn classes(&self) -> &[Automorphism] {
        &self.classes
    }

    pub fn class_of(&self) -> &[u32] {
        &self.class_of
    }

    /// Renumbers classes by first occurrence and merges equal ones.
    fn canonical(self) -> LambdaTable {
        let mut seen: HashMap<&Automorphism, u32> = HashMap::new();
        let mut order: Vec<u32> = vec![u32::MAX; self.classes.len()];
        let mut classes = Vec::new();
        let mut class_of = Vec::with_capacity(self.class_of.len());
        for &c in &self.class_of {
            if order[c as usize] == u32::MAX {
                let aut = &self.classes[c as usize];
                let id = *seen.entry(aut).or_insert_with(|| {
                    classes.push(aut.clone());
                    (classes.len() - 1) as u32
                });
                order[c as usize] = id;
            }
            class_of.push(order[c as usize]);
        }
        LambdaTable { classes, class_of }
    }
}

/// Where a lambda table came from.
#[derive(Clone, Debug)]
pub enum LambdaKind {
    Trivial,
    Table,
    Hegedus(HegedusParams),
    SimpleFamily(SimpleFamilyParams),
    MatchedProduct(Box<MatchedPairData>),
    Extension(Box<ExtensionData>),
}

impl LambdaKind {
    pub fn name(&self) -> &'static str {
        match self {
            LambdaKind::Trivial => "trivial",
            LambdaKind::Table => "table",
            LambdaKind::Hegedus(_) => "hegedus",
            LambdaKind::SimpleFamily(_) => "simple_family",
            LambdaKind::MatchedProduct(_) => "matched_product",
            LambdaKind::Extension(_) => "extension",
        }
    }
}

#[derive(Clone)]
pub struct LeftBrace {
    group: AbelianGroup,
    table: LambdaTable,
    kind: LambdaKind,
    // Some once validated: a set of elements generating (B, .)
    mult_gens: Option<Vec<usize>>,
    inverses: OnceLock<Vec<Automorphism>>,
}

impl fmt::Debug for LeftBrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LeftBrace")
            .field("group", &self.group.moduli())
            .field("kind", &self.kind.name())
            .field("lambda_classes", &self.table.classes.len())
            .field("validated", &self.mult_gens.is_some())
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// The lambda map of this element is not bijective.
    NotAutomorphism {
        element: Element,
    },
    LambdaZeroNotIdentity,
    /// `lambda_a ∘ lambda_b != lambda_{a·b}`.
    CompositionLaw {
        a: Element,
        b: Element,
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::NotAutomorphism { element } => {
                write!(f, "lambda of {element} is not an automorphism")
            }
            AxiomViolation::LambdaZeroNotIdentity => write!(f, "lambda of 0 is not the identity"),
            AxiomViolation::CompositionLaw { a, b } => {
                write!(
                    f,
                    "lambda_a . lambda_b != lambda_(a*b) for a = {a}, b = {b}"
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationMethod {
    /// Every pair `(a, b)` was checked.
    Pairwise,
    /// Every pair `(a, t)` with `t` in a generating set of `(B, .)` was checked.
    Generators(usize),
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub violation: Option<AxiomViolation>,
    pub method: ValidationMethod,
    pub lambda_classes: usize,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl LeftBrace {
    pub fn from_table(group: AbelianGroup, table: LambdaTable) -> Result<LeftBrace> {
        LeftBrace::with_kind(group, table, LambdaKind::Table)
    }

    pub(crate) fn with_kind(
        group: AbelianGroup,
        table: LambdaTable,
        kind: LambdaKind,
    ) -> Result<LeftBrace> {
        if table.class_of.len() != group.order() {
            return Err(BraceError::DimensionMismatch {
                expected: group.order(),
                actual: table.class_of.len(),
            });
        }
        if table.classes.iter().any(|a| a.moduli() != group.moduli()) {
            return Err(BraceError::Shape(
                "lambda class defined on a different group".into(),
            ));
        }
        Ok(LeftBrace {
            group,
            table: table.canonical(),
            kind,
            mult_gens: None,
            inverses: OnceLock::new(),
        })
    }

    /// Evaluates `lambda` on every element and deduplicates the results.
    pub fn from_lambda_fn(
        group: AbelianGroup,
        kind: LambdaKind,
        mut lambda: impl FnMut(&[u32]) -> Result<Automorphism>,
    ) -> Result<LeftBrace> {
        let cap = enumeration_cap();
        if group.order() > cap {
            return Err(BraceError::EnumerationCap {
                order: group.order(),
                cap,
            });
        }
        let mut index: HashMap<Automorphism, u32> = HashMap::new();
        let mut classes = Vec::new();
        let mut class_of = Vec::with_capacity(group.order());
        for idx in 0..group.order() {
            let aut = lambda(&group.decode(idx))?;
            let next = classes.len() as u32;
            let c = *index.entry(aut.clone()).or_insert_with(|| {
                classes.push(aut);
                next
            });
            class_of.push(c);
        }
        LeftBrace::with_kind(group, LambdaTable { classes, class_of }, kind)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn kind(&self) -> &LambdaKind {
        &self.kind
    }

    pub fn table(&self) -> &LambdaTable {
        &self.table
    }

    /// Forgets the structured origin; the result serializes as a table.
    pub fn materialized(&self) -> LeftBrace {
        let mut b = self.clone();
        b.kind = LambdaKind::Table;
        b
    }

    pub fn lambda_classes(&self) -> usize {
        self.table.classes.len()
    }

    pub fn is_validated(&self) -> bool {
        self.mult_gens.is_some()
    }

    /// Elements generating `(B, .)`; available after validation.
    pub fn multiplicative_generators(&self) -> Result<Vec<Element>> {
        Ok(self
            .mult_gens()?
            .iter()
            .map(|&i| self.group.element_at(i))
            .collect())
    }

    pub(crate) fn mult_gens(&self) -> Result<&[usize]> {
        self.mult_gens.as_deref().ok_or(BraceError::NotValidated)
    }

    /// Validates and returns the brace, or the first axiom violation as an error.
    pub fn validated(mut self) -> Result<LeftBrace> {
        let report = validate_brace(&mut self)?;
        match report.violation {
            None => Ok(self),
            Some(v) => Err(BraceError::InvalidBrace(v)),
        }
    }

    pub fn lambda(&self, a: &Element) -> Result<&Automorphism> {
        Ok(self.lam(self.group.index_of(a)?))
    }

    pub(crate) fn lam(&self, a: usize) -> &Automorphism {
        &self.table.classes[self.table.class_of[a] as usize]
    }

    pub(crate) fn class_idx(&self, a: usize) -> usize {
        self.table.class_of[a] as usize
    }

    pub(crate) fn lam_inv(&self, a: usize) -> &Automorphism {
        let inv = self
            .inverses
            .get_or_init(|| self.table.classes.iter().map(|c| c.inverse()).collect());
        &inv[self.class_idx(a)]
    }

    pub(crate) fn lam_apply(&self, a: usize, b: usize) -> usize {
        self.lam(a).apply_idx(&self.group, b)
    }

    pub(crate) fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.group.add_idx(a, self.lam_apply(a, b))
    }

    pub(crate) fn inv_idx(&self, a: usize) -> usize {
        self.group
            .neg_idx(self.lam_inv(a).apply_idx(&self.group, a))
    }

    pub(crate) fn is_socle_idx(&self, a: usize) -> bool {
        self.lam(a).is_identity()
    }

    /// `a^k` in `(B, .)`; negative exponents use the inverse.
    pub(crate) fn pow_idx(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv_idx(a) } else { a };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul_idx(acc, base);
        }
        acc
    }

    pub(crate) fn mult_order_idx(&self, a: usize) -> u64 {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul_idx(x, a);
            k += 1;
        }
        k
    }
}

/// `a · b = a + lambda_a(b)`.
pub fn multiply(b: &LeftBrace, x: &Element, y: &Element) -> Result<Element> {
    let i = b.group.index_of(x)?;
    let j = b.group.index_of(y)?;
    Ok(b.group.element_at(b.mul_idx(i, j)))
}

/// Multiplicative inverse `-lambda_a^{-1}(a)`.
pub fn inverse(b: &LeftBrace, x: &Element) -> Result<Element> {
    let i = b.group.index_of(x)?;
    if !b.lam(i).is_invertible() {
        return Err(BraceError::NotAutomorphism(format!("lambda of {x}")));
    }
    Ok(b.group.element_at(b.inv_idx(i)))
}

/// The trivial brace `a · b = a + b`.
pub fn trivial_brace(g: &AbelianGroup) -> LeftBrace {
    let table = LambdaTable {
        classes: vec![Automorphism::identity(g)],
        class_of: vec![0; g.order()],
    };
    let mut b = LeftBrace::with_kind(g.clone(), table, LambdaKind::Trivial)
        .expect("consistent trivial table");
    b.mult_gens = Some((0..g.rank()).map(|i| g.basis_idx(i)).collect());
    b
}

/// Greedy generating set of `(B, .)`: repeatedly adjoin the smallest element not
/// yet reached from `0` by right multiplication with the chosen generators.
fn greedy_generators(b: &LeftBrace) -> Vec<usize> {
    let n = b.order();
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut list = vec![0usize];
    let mut gens: Vec<usize> = Vec::new();
    let mut next_unreached = 1;
    loop {
        while next_unreached < n && reached[next_unreached] {
            next_unreached += 1;
        }
        if next_unreached >= n {
            break;
        }
        gens.push(next_unreached);
        let mut head = 0;
        // every reached element is re-expanded so the new generator acts on it
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &t in &gens {
                let y = b.mul_idx(x, t);
                if !reached[y] {
                    reached[y] = true;
                    list.push(y);
                }
            }
        }
    }
    gens
}

/// Checks that every lambda map is an automorphism, that `lambda_0 = id`, and
/// that `lambda_a ∘ lambda_b = lambda_{a + lambda_a(b)}`.
///
/// Automorphisms are compared as matrices, i.e. on additive generators, which
/// suffices because both sides are additive.
///
/// Above [`PAIRWISE_VALIDATION_LIMIT`] elements the law is checked for all `a`
/// and all `t` in a set `T` whose right-multiplication orbit of `0` is all of
/// `B`. That implies the full law: the map `a -> (a, lambda_a)` into the
/// holomorph then has an image `L` with `L·T ⊆ L`, so the subgroup generated by
/// `T` lies in `L`, and it covers every first coordinate, hence equals `L`.
pub fn validate_brace(b: &mut LeftBrace) -> Result<ValidationReport> {
    let n = b.order();
    let cap = enumeration_cap();
    if n > cap {
        return Err(BraceError::EnumerationCap { order: n, cap });
    }
    b.mult_gens = None;
    let lambda_classes = b.lambda_classes();
    let fail = |v: AxiomViolation, method: ValidationMethod| ValidationReport {
        violation: Some(v),
        method,
        lambda_classes,
    };
    for c in 0..lambda_classes {
        if !b.table.classes[c].is_invertible() {
            let element = b
                .table
                .class_of
                .iter()
                .position(|&k| k as usize == c)
                .map(|i| b.group.element_at(i))
                .expect("class in use");
            return Ok(fail(
                AxiomViolation::NotAutomorphism { element },
                ValidationMethod::Pairwise,
            ));
        }
    }
    if !b.lam(0).is_identity() {
        return Ok(fail(
            AxiomViolation::LambdaZeroNotIdentity,
            ValidationMethod::Pairwise,
        ));
    }

    let gens = greedy_generators(b);
    let (partners, method): (Vec<usize>, ValidationMethod) = if n <= PAIRWISE_VALIDATION_LIMIT {
        ((0..n).collect(), ValidationMethod::Pairwise)
    } else {
        (gens.clone(), ValidationMethod::Generators(gens.len()))
    };

    // lambda_a ∘ lambda_t depends on a only through its class
    let mut composed: HashMap<(usize, usize), Automorphism> = HashMap::new();
    for a in 0..n {
        let ca = b.class_idx(a);
        for &t in &partners {
            let ct = b.class_idx(t);
            let lhs = composed
                .entry((ca, ct))
                .or_insert_with(|| b.lam(a).compose(b.lam(t)).expect("same group"));
            let at = b.mul_idx(a, t);
            if lhs != b.lam(at) {
                return Ok(fail(
                    AxiomViolation::CompositionLaw {
                        a: b.group.element_at(a),
                        b: b.group.element_at(t),
                    },
                    method,
                ));
            }
        }
        if composed.len() > 1 << 20 {
            composed.clear();
        }
    }
    b.mult_gens = Some(gens);
    Ok(ValidationReport {
        violation: None,
        method,
        lambda_classes,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoSidedVerdict {
    pub two_sided: bool,
    pub exhaustive: bool,
    pub triples_checked: u64,
    /// `(a, b, c)` with `(b + c)·a + a != b·a + c·a`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[Vec<u32>; 3]>,
}

/// Checks the right brace law `(b + c)·a + a = b·a + c·a`, exhaustively up to
/// [`TRIPLE_CAP`] triples and on a seeded random sample above it.
pub fn is_two_sided(b: &LeftBrace) -> Result<TwoSidedVerdict> {
    b.mult_gens()?;
    let n = b.order();
    let g = &b.group;
    let total = (n as u64).saturating_pow(3);
    let check = |a: usize, x: usize, y: usize| -> bool {
        let lhs = g.add_idx(b.mul_idx(g.add_idx(x, y), a), a);
        let rhs = g.add_idx(b.mul_idx(x, a), b.mul_idx(y, a));
        lhs == rhs
    };
    let witness = |a: usize, x: usize, y: usize| {
        Some([
            g.element_at(a).into_coords(),
            g.element_at(x).into_coords(),
            g.element_at(y).into_coords(),
        ])
    };
    if total <= TRIPLE_CAP {
        for a in 0..n {
            for x in 0..n {
                for y in 0..n {
                    if !check(a, x, y) {
                        return Ok(TwoSidedVerdict {
                            two_sided: false,
                            exhaustive: true,
                            triples_checked: total,
                            witness: witness(a, x, y),
                        });
                    }
                }
            }
        }
        return Ok(TwoSidedVerdict {
            two_sided: true,
            exhaustive: true,
            triples_checked: total,
            witness: None,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e1d);
    for k in 0..TRIPLE_CAP {
        let (a, x, y) = (
            rng.gen_range(0..n),
            rng.gen_range(0..n),
            rng.gen_range(0..n),
        );
        if !check(a, x, y) {
            return Ok(TwoSidedVerdict {
                two_sided: false,
                exhaustive: false,
                triples_checked: k + 1,
                witness: witness(a, x, y),
            });
        }
    }
    Ok(TwoSidedVerdict {
        two_sided: true,
        exhaustive: false,
        triples_checked: TRIPLE_CAP,
        witness: None,
    })
}

/// `{a : lambda_a = id}`.
pub fn socle(b: &LeftBrace) -> ElementSet {
    let members: Vec<usize> = (0..b.order()).filter(|&a| b.is_socle_idx(a)).collect();
    // s·e_i = s + e_i on generators; additivity extends it to all of B
    for &s in &members {
        for i in 0..b.group.rank() {
            let e = b.group.basis_idx(i);
            assert_eq!(b.mul_idx(s, e), b.group.add_idx(s, e));
        }
    }
    ElementSet::from_indices(&b.group, members)
}

/// The left ideal `nB = {n·a}`.
pub fn n_multiples(b: &LeftBrace, n: u64) -> Result<ElementSet> {
    if n == 0 {
        return Err(BraceError::Precondition("n must be positive".into()));
    }
    let set = subset::multiples(&b.group, n);
    if (set.len() as u64).pow(2) <= 1_000_000 {
        for &x in set.indices() {
            for &y in set.indices() {
                assert!(set.contains_idx(b.mul_idx(x, y)), "nB closed under product");
            }
        }
    }
    Ok(set)
}

/// Splits `B` as `(m''B, m'B)`, left ideals of orders `m'` and `m''`.
pub fn hall_decompose(b: &LeftBrace, m1: usize, m2: usize) -> Result<(ElementSet, ElementSet)> {
    if m1.checked_mul(m2) != Some(b.order()) {
        return Err(BraceError::Precondition(format!(
            "{m1} * {m2} is not the order {}",
            b.order()
        )));
    }
    if arith::gcd(m1 as u64, m2 as u64) != 1 {
        return Err(BraceError::NotCoprime(m1, m2));
    }
    let first = n_multiples(b, m2 as u64)?;
    let second = n_multiples(b, m1 as u64)?;
    for s in [&first, &second] {
        if !crate::ideals::is_left_ideal(b, s)? {
            return Err(BraceError::Precondition(
                "multiples subgroup is not a left ideal".into(),
            ));
        }
    }
    debug_assert_eq!((first.len(), second.len()), (m1, m2));
    Ok((first, second))
}

/// A finite group given by generators and relator words.
#[derive(Clone, Debug)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    /// Each relator is a word of `(generator, exponent)` pairs equal to 1.
    pub relators: Vec<Vec<(usize, i64)>>,
    pub order: usize,
}

impl GroupPresentation {
    pub fn cyclic(n: usize) -> GroupPresentation {
        GroupPresentation {
            generators: vec!["g".into()],
            relators: vec![vec![(0, n as i64)]],
            order: n,
        }
    }

    /// `S4 = <s, t | s^3, t^2, (st)^4>` with `s = (1,2,3)` and `t = (3,4)`.
    pub fn symmetric4() -> GroupPresentation {
        GroupPresentation {
            generators: vec!["s".into(), "t".into()],
            relators: vec![
                vec![(0, 3)],
                vec![(1, 2)],
                vec![
                    (0, 1),
                    (1, 1),
                    (0, 1),
                    (1, 1),
                    (0, 1),
                    (1, 1),
                    (0, 1),
                    (1, 1),
                ],
            ],
            order: 24,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratedIso {
    pub holds: bool,
    pub reason: Option<String>,
}

/// True when the images satisfy every relator and generate `(B, .)`. With
/// `|target| = |B|` the presentation's group then maps onto `B`, and equal
/// orders make that map an isomorphism.
pub fn check_generated_iso(
    b: &LeftBrace,
    target: &GroupPresentation,
    images: &[Element],
) -> Result<GeneratedIso> {
    let no = |reason: String| {
        Ok(GeneratedIso {
            holds: false,
            reason: Some(reason),
        })
    };
    if target.order != b.order() {
        return no(format!(
            "target has order {}, brace has order {}",
            target.order,
            b.order()
        ));
    }
    if images.len() != target.generators.len() {
        return Err(BraceError::DimensionMismatch {
            expected: target.generators.len(),
            actual: images.len(),
        });
    }
    let img: Vec<usize> = images
        .iter()
        .map(|x| b.group.index_of(x))
        .collect::<Result<_>>()?;
    for (r, word) in target.relators.iter().enumerate() {
        let mut acc = 0usize;
        for &(gen, e) in word {
            let g = *img.get(gen).ok_or_else(|| {
                BraceError::Precondition(format!("relator {r} uses unknown generator {gen}"))
            })?;
            acc = b.mul_idx(acc, b.pow_idx(g, e));
        }
        if acc != 0 {
            return no(format!("relator {r} does not hold"));
        }
    }
    let n = b.order();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &g in &img {
            let y = b.mul_idx(x, g);
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
    }
    if queue.len() != n {
        return no(format!(
            "images generate a subgroup of order {} < {n}",
            queue.len()
        ));
    }
    Ok(GeneratedIso {
        holds: true,
        reason: None,
    })
}

/// Same carrier and the same lambda map at every element.
pub fn same_lambda(a: &LeftBrace, b: &LeftBrace) -> bool {
    a.group == b.group && (0..a.order()).all(|x| a.lam(x) == b.lam(x))
}

/// Summary written by analysis front ends.
#[derive(Clone, Debug, Default, Serialize)]
pub struct BraceReport {
    pub order: usize,
    pub moduli: Vec<u32>,
    pub kind: String,
    pub valid: bool,
    pub lambda_classes: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub socle_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub socle: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideals_complete: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simple: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_sided: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_sided_exhaustive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ybe: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub involutive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nondegenerate: Option<bool>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(m: &[u32]) -> AbelianGroup {
        AbelianGroup::new(m.to_vec()).unwrap()
    }

    fn el(c: &[u32]) -> Element {
        Element::new(c.to_vec())
    }

    // The order-8 brace on (Z/2)^3 with lambda_(x,y,z) =
    // [[1, z, x+y+xz], [0, 1, z+x+yz], [0, 0, 1]].
    pub(crate) fn example_order8() -> LeftBrace {
        let grp = g(&[2, 2, 2]);
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

    #[test]
    fn trivial_products() {
        let b = trivial_brace(&g(&[5]));
        assert_eq!(multiply(&b, &el(&[2]), &el(&[4])).unwrap(), el(&[1]));
        assert_eq!(inverse(&b, &el(&[2])).unwrap(), el(&[3]));
        assert_eq!(inverse(&b, &el(&[0])).unwrap(), el(&[0]));
        assert!(validate_brace(&mut b.clone()).unwrap().passed());
        assert!(socle(&b).is_full());
    }

    #[test]
    fn order8_example_product() {
        let b = example_order8();
        assert_eq!(
            multiply(&b, &el(&[1, 0, 0]), &el(&[0, 0, 1])).unwrap(),
            el(&[0, 1, 1])
        );
        for x in b.group().elements(8).unwrap() {
            let xi = inverse(&b, &x).unwrap();
            assert!(multiply(&b, &x, &xi).unwrap().is_zero());
            assert!(multiply(&b, &xi, &x).unwrap().is_zero());
            assert_eq!(multiply(&b, &x, &b.group().zero()).unwrap(), x);
            assert_eq!(multiply(&b, &b.group().zero(), &x).unwrap(), x);
        }
        assert!(socle(&b).is_zero());
    }

    #[test]
    fn perturbed_table_fails() {
        let b = example_order8();
        let grp = b.group().clone();
        let mut classes = b.table().classes().to_vec();
        let mut class_of = b.table().class_of().to_vec();
        // element (1,1,1) gets a singular map
        let bad = Automorphism::from_matrix_unchecked(
            &grp,
            &[vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, 1]],
        )
        .unwrap();
        classes.push(bad);
        class_of[7] = (classes.len() - 1) as u32;
        let mut t =
            LeftBrace::from_table(grp.clone(), LambdaTable::new(classes, class_of).unwrap())
                .unwrap();
        let r = validate_brace(&mut t).unwrap();
        assert_eq!(
            r.violation,
            Some(AxiomViolation::NotAutomorphism {
                element: el(&[1, 1, 1])
            })
        );
        assert!(!t.is_validated());

        // a valid automorphism in the wrong place breaks the composition law
        let mut classes = b.table().classes().to_vec();
        let mut class_of = b.table().class_of().to_vec();
        classes.push(
            Automorphism::from_matrix(&grp, &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]])
                .unwrap(),
        );
        class_of[3] = (classes.len() - 1) as u32;
        let mut t =
            LeftBrace::from_table(grp, LambdaTable::new(classes, class_of).unwrap()).unwrap();
        let r = validate_brace(&mut t).unwrap();
        assert!(matches!(
            r.violation,
            Some(AxiomViolation::CompositionLaw { .. })
        ));
    }

    #[test]
    fn two_sided_verdicts() {
        let t = trivial_brace(&g(&[2, 3]));
        assert!(is_two_sided(&t).unwrap().two_sided);
        let v = is_two_sided(&example_order8()).unwrap();
        assert!(v.exhaustive);
        assert_eq!(v.triples_checked, 512);
        // direct check of the same verdict
        let b = example_order8();
        let grp = b.group().clone();
        let mut ok = true;
        for a in 0..8 {
            for x in 0..8 {
                for y in 0..8 {
                    let l = grp.add_idx(b.mul_idx(grp.add_idx(x, y), a), a);
                    let r = grp.add_idx(b.mul_idx(x, a), b.mul_idx(y, a));
                    ok &= l == r;
                }
            }
        }
        assert_eq!(v.two_sided, ok);
    }

    #[test]
    fn cyclic_presentation() {
        let b = trivial_brace(&g(&[5]));
        let r = check_generated_iso(&b, &GroupPresentation::cyclic(5), &[el(&[1])]).unwrap();
        assert!(r.holds);
        let r = check_generated_iso(&b, &GroupPresentation::cyclic(5), &[el(&[0])]).unwrap();
        assert!(!r.holds);
        let r = check_generated_iso(&b, &GroupPresentation::cyclic(4), &[el(&[1])]).unwrap();
        assert!(!r.holds);
    }

    #[test]
    fn order_one_group() {
        let b = trivial_brace(&AbelianGroup::trivial());
        assert!(validate_brace(&mut b.clone()).unwrap().passed());
        assert_eq!(socle(&b).len(), 1);
    }

    #[test]
    fn hall_decompose_rejects_bad_split() {
        let b = trivial_brace(&g(&[2, 3]));
        assert!(matches!(
            hall_decompose(&b, 2, 2),
            Err(BraceError::Precondition(_))
        ));
        let b = trivial_brace(&g(&[4]));
        assert!(hall_decompose(&b, 2, 2).is_err());
        let b = trivial_brace(&g(&[7]));
        let (x, y) = hall_decompose(&b, 7, 1).unwrap();
        assert!(x.is_full() && y.is_zero());
    }
}
