//! Finite abelian groups presented as products of cyclic groups of prime-power order.
//!
//! Elements are coordinate vectors. Every element also has a dense index: the
//! position of its coordinate vector in lexicographic order (first coordinate most
//! significant). Hot loops in the rest of the crate work on indices.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::arith;
use crate::error::{BraceError, Result};

pub const DEFAULT_ENUM_CAP: usize = 1_000_000;

static ENUM_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_ENUM_CAP);

/// Largest group order that may be enumerated or materialized as a table.
pub fn enumeration_cap() -> usize {
    ENUM_CAP.load(Ordering::Relaxed)
}

pub fn set_enumeration_cap(cap: usize) {
    ENUM_CAP.store(cap.max(1), Ordering::Relaxed);
}

pub(crate) type Coords = SmallVec<[u32; 12]>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element {
    coords: Vec<u32>,
}

impl Element {
    pub fn new(coords: Vec<u32>) -> Self {
        Element { coords }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl From<Vec<u32>> for Element {
    fn from(coords: Vec<u32>) -> Self {
        Element { coords }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The primes dividing the order, each with the positions of its cyclic factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeComponent {
    pub prime: u32,
    pub factors: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    moduli: Vec<u32>,
    strides: Vec<usize>,
    order: usize,
}

impl AbelianGroup {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        for &m in &moduli {
            if m < 2 || arith::prime_power_base(m as u64).is_none() {
                return Err(BraceError::InvalidModulus(m as u64));
            }
        }
        let mut strides = vec![0usize; moduli.len()];
        let mut acc: usize = 1;
        for i in (0..moduli.len()).rev() {
            strides[i] = acc;
            acc = acc
                .checked_mul(moduli[i] as usize)
                .ok_or(BraceError::OrderOverflow)?;
        }
        Ok(AbelianGroup {
            moduli,
            strides,
            order: acc,
        })
    }

    /// Elementary abelian group `(Z/p)^n`.
    pub fn elementary(p: u32, n: usize) -> Result<Self> {
        AbelianGroup::new(vec![p; n])
    }

    /// The group of order one.
    pub fn trivial() -> Self {
        AbelianGroup {
            moduli: Vec::new(),
            strides: Vec::new(),
            order: 1,
        }
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> Result<AbelianGroup> {
        let mut moduli = self.moduli.clone();
        moduli.extend_from_slice(&other.moduli);
        AbelianGroup::new(moduli)
    }

    pub fn sorted_moduli(&self) -> Vec<u32> {
        let mut m = self.moduli.clone();
        m.sort_unstable();
        m
    }

    pub fn prime_components(&self) -> Vec<PrimeComponent> {
        let mut out: Vec<PrimeComponent> = Vec::new();
        for (i, &m) in self.moduli.iter().enumerate() {
            let p = arith::prime_power_base(m as u64).expect("validated modulus") as u32;
            match out.iter_mut().find(|c| c.prime == p) {
                Some(c) => c.factors.push(i),
                None => out.push(PrimeComponent {
                    prime: p,
                    factors: vec![i],
                }),
            }
        }
        out.sort_by_key(|c| c.prime);
        out
    }

    /// True when every cyclic factor has prime order.
    pub fn is_elementary_per_prime(&self) -> bool {
        self.moduli.iter().all(|&m| arith::is_prime(m as u64))
    }

    pub fn check(&self, x: &Element) -> Result<()> {
        if x.coords.len() != self.moduli.len() {
            return Err(BraceError::DimensionMismatch {
                expected: self.moduli.len(),
                actual: x.coords.len(),
            });
        }
        for (i, (&c, &m)) in x.coords.iter().zip(&self.moduli).enumerate() {
            if c >= m {
                return Err(BraceError::UnreducedCoordinate {
                    index: i,
                    value: c,
                    modulus: m,
                });
            }
        }
        Ok(())
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.check(x).is_ok()
    }

    pub fn zero(&self) -> Element {
        Element::new(vec![0; self.moduli.len()])
    }

    /// Reduces arbitrary integers into an element.
    pub fn reduce(&self, raw: &[i64]) -> Result<Element> {
        if raw.len() != self.moduli.len() {
            return Err(BraceError::DimensionMismatch {
                expected: self.moduli.len(),
                actual: raw.len(),
            });
        }
        Ok(Element::new(
            raw.iter()
                .zip(&self.moduli)
                .map(|(&v, &m)| v.rem_euclid(m as i64) as u32)
                .collect(),
        ))
    }

    pub fn add(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(Element::new(
            x.coords
                .iter()
                .zip(&y.coords)
                .zip(&self.moduli)
                .map(|((&a, &b), &m)| ((a as u64 + b as u64) % m as u64) as u32)
                .collect(),
        ))
    }

    pub fn neg(&self, x: &Element) -> Result<Element> {
        self.check(x)?;
        Ok(Element::new(
            x.coords
                .iter()
                .zip(&self.moduli)
                .map(|(&a, &m)| if a == 0 { 0 } else { m - a })
                .collect(),
        ))
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Result<Element> {
        let ny = self.neg(y)?;
        self.add(x, &ny)
    }

    pub fn scale(&self, k: u64, x: &Element) -> Result<Element> {
        self.check(x)?;
        Ok(Element::new(
            x.coords
                .iter()
                .zip(&self.moduli)
                .map(|(&a, &m)| ((a as u64 % m as u64) * (k % m as u64) % m as u64) as u32)
                .collect(),
        ))
    }

    /// Standard generators `e_i`, one per cyclic factor.
    pub fn basis(&self) -> Vec<Element> {
        (0..self.rank())
            .map(|i| {
                let mut c = vec![0; self.rank()];
                c[i] = 1;
                Element::new(c)
            })
            .collect()
    }

    /// All elements in lexicographic order, refusing groups above `cap`.
    pub fn elements(&self, cap: usize) -> Result<Elements<'_>> {
        if self.order > cap {
            return Err(BraceError::EnumerationCap {
                order: self.order,
                cap,
            });
        }
        Ok(Elements {
            group: self,
            next: 0,
        })
    }

    pub fn index_of(&self, x: &Element) -> Result<usize> {
        self.check(x)?;
        Ok(self.encode(&x.coords))
    }

    pub fn element_at(&self, idx: usize) -> Element {
        let mut c = vec![0; self.rank()];
        self.decode_into(idx, &mut c);
        Element::new(c)
    }

    // ---- index-level arithmetic -------------------------------------------------

    pub(crate) fn encode(&self, coords: &[u32]) -> usize {
        coords
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    }

    pub(crate) fn decode_into(&self, mut idx: usize, out: &mut [u32]) {
        for (i, &m) in self.moduli.iter().enumerate().rev() {
            out[i] = (idx % m as usize) as u32;
            idx /= m as usize;
        }
    }

    pub(crate) fn decode(&self, idx: usize) -> Coords {
        let mut c: Coords = smallvec::smallvec![0; self.rank()];
        self.decode_into(idx, &mut c);
        c
    }

    pub(crate) fn stride(&self, i: usize) -> usize {
        self.strides[i]
    }

    pub(crate) fn basis_idx(&self, i: usize) -> usize {
        self.strides[i]
    }

    pub(crate) fn add_idx(&self, a: usize, b: usize) -> usize {
        let mut out = 0usize;
        let (mut a, mut b) = (a, b);
        for i in (0..self.moduli.len()).rev() {
            let m = self.moduli[i] as usize;
            let s = (a % m + b % m) % m;
            out += s * self.strides[i];
            a /= m;
            b /= m;
        }
        out
    }

    pub(crate) fn neg_idx(&self, a: usize) -> usize {
        let mut out = 0usize;
        let mut a = a;
        for i in (0..self.moduli.len()).rev() {
            let m = self.moduli[i] as usize;
            let c = a % m;
            out += ((m - c) % m) * self.strides[i];
            a /= m;
        }
        out
    }

    pub(crate) fn sub_idx(&self, a: usize, b: usize) -> usize {
        self.add_idx(a, self.neg_idx(b))
    }

    pub(crate) fn scale_idx(&self, k: u64, a: usize) -> usize {
        let mut out = 0usize;
        let mut a = a;
        for i in (0..self.moduli.len()).rev() {
            let m = self.moduli[i] as u64;
            let c = (a as u64) % m;
            out += ((c * (k % m)) % m) as usize * self.strides[i];
            a /= m as usize;
        }
        out
    }

    pub(crate) fn additive_order_idx(&self, a: usize) -> u64 {
        let c = self.decode(a);
        c.iter().zip(&self.moduli).fold(1u64, |acc, (&x, &m)| {
            let m = m as u64;
            arith::lcm(acc, m / arith::gcd(x as u64, m))
        })
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.moduli.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z/{m}")?;
        }
        Ok(())
    }
}

/// Iterator returned by [`AbelianGroup::elements`].
pub struct Elements<'a> {
    group: &'a AbelianGroup,
    next: usize,
}

impl Iterator for Elements<'_> {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.next >= self.group.order {
            return None;
        }
        let e = self.group.element_at(self.next);
        self.next += 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.group.order - self.next;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Elements<'_> {}

/// Parses a comma-separated list of cyclic factor orders such as `"3,2,2,2"`.
pub fn parse_moduli(s: &str) -> Result<AbelianGroup> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(AbelianGroup::trivial());
    }
    let mut moduli = Vec::new();
    for part in trimmed.split(',') {
        let m: u32 = part
            .trim()
            .parse()
            .map_err(|_| BraceError::Descriptor(format!("bad modulus {part:?}")))?;
        moduli.push(m);
    }
    AbelianGroup::new(moduli)
}

/// Finds a cyclic decomposition of an abstract finite abelian group.
///
/// The group has elements `0..n` with `0` the neutral element and addition given
/// by `add`. Returns the decomposed group together with `labels`, where
/// `labels[i]` is the abstract element corresponding to index `i` of the result.
/// Elements in `hints` are tried first as generators, so a split presentation
/// keeps its natural coordinates.
pub fn decompose_abelian(
    n: usize,
    add: impl Fn(usize, usize) -> usize,
    hints: &[usize],
) -> Result<(AbelianGroup, Vec<usize>)> {
    if n == 0 {
        return Err(BraceError::Precondition("empty group".into()));
    }
    let scale = |k: u64, x: usize| -> usize {
        let mut acc = 0usize;
        for _ in 0..k {
            acc = add(acc, x);
        }
        acc
    };
    let order_of = |x: usize| -> u64 {
        let mut k = 1u64;
        let mut y = x;
        while y != 0 {
            y = add(y, x);
            k += 1;
            if k > n as u64 {
                break;
            }
        }
        k
    };
    let orders: Vec<u64> = (0..n).map(order_of).collect();
    if orders
        .iter()
        .any(|&o| o > n as u64 || !(n as u64).is_multiple_of(o))
    {
        return Err(BraceError::Precondition(
            "addition table does not define a group".into(),
        ));
    }

    // (generator, modulus, hint rank)
    let mut chosen: Vec<(usize, u32, usize)> = Vec::new();
    let hint_rank: HashMap<usize, usize> = hints.iter().enumerate().map(|(r, &h)| (h, r)).collect();

    for (p, e) in arith::factorize(n as u64) {
        let part_size = p.pow(e) as usize;
        let is_p_elem = |x: usize| arith::prime_power_base(orders[x]).map_or(x == 0, |q| q == p);
        let candidates: Vec<usize> = hints
            .iter()
            .copied()
            .chain(0..n)
            .filter(|&x| x < n && is_p_elem(x))
            .collect();

        let mut basis: Vec<(usize, u64)> = Vec::new();
        // coefficient vector of each element of the current span
        let mut coeffs: Vec<Option<Vec<u64>>> = vec![None; n];
        coeffs[0] = Some(Vec::new());
        let mut span: Vec<usize> = vec![0];

        while span.len() < part_size {
            let mut best: Option<(usize, u64, u32)> = None;
            for &y in &candidates {
                if coeffs[y].is_some() {
                    continue;
                }
                let mut k = 0u32;
                let mut z = y;
                let mut pk = 1u64;
                while coeffs[z].is_none() {
                    z = scale(p, z);
                    k += 1;
                    pk *= p;
                }
                if best.is_none_or(|(_, bpk, _)| pk > bpk) {
                    best = Some((y, pk, k));
                }
            }
            let (y, pk, _) = best
                .ok_or_else(|| BraceError::Precondition("abelian decomposition stalled".into()))?;
            let z = scale(pk, y);
            let c = coeffs[z].clone().expect("in span");
            let mut adjusted = y;
            for (i, &ci) in c.iter().enumerate() {
                if ci % pk != 0 {
                    return Err(BraceError::Precondition(
                        "abelian decomposition: lift is not divisible".into(),
                    ));
                }
                let (b, ord_b) = basis[i];
                let d = (ci / pk) % ord_b;
                if d != 0 {
                    adjusted = add(adjusted, scale(ord_b - d, b));
                }
            }
            if orders[adjusted] != pk {
                return Err(BraceError::Precondition(
                    "abelian decomposition: adjusted generator has wrong order".into(),
                ));
            }
            basis.push((adjusted, pk));
            let old = span.len();
            let mut multiple = adjusted;
            for j in 1..pk {
                for s in 0..old {
                    let base = span[s];
                    let x = add(base, multiple);
                    let mut cv = coeffs[base].clone().expect("in span");
                    cv.resize(basis.len() - 1, 0);
                    cv.push(j);
                    if coeffs[x].is_some() {
                        return Err(BraceError::Precondition(
                            "abelian decomposition: generator not independent".into(),
                        ));
                    }
                    coeffs[x] = Some(cv);
                    span.push(x);
                }
                multiple = add(multiple, adjusted);
            }
            for cv in coeffs.iter_mut().flatten() {
                cv.resize(basis.len(), 0);
            }
        }
        for (g, m) in basis {
            let rank = hint_rank.get(&g).copied().unwrap_or(usize::MAX);
            chosen.push((g, m as u32, rank));
        }
    }

    // Hinted generators keep their hint order; the rest follow by prime.
    chosen.sort_by_key(|&(_, m, rank)| (rank, arith::prime_power_base(m as u64).unwrap_or(0)));
    let group = AbelianGroup::new(chosen.iter().map(|&(_, m, _)| m).collect())?;
    if group.order() != n {
        return Err(BraceError::Precondition(
            "abelian decomposition produced the wrong order".into(),
        ));
    }
    let mut labels = vec![0usize; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut coords = vec![0u32; group.rank()];
    for idx in 1..n {
        group.decode_into(idx, &mut coords);
        let last = coords.iter().rposition(|&c| c != 0).expect("nonzero index");
        let prev = idx - group.stride(last);
        let label = add(labels[prev], chosen[last].0);
        if seen[label] {
            return Err(BraceError::Precondition(
                "abelian decomposition is not injective".into(),
            ));
        }
        seen[label] = true;
        labels[idx] = label;
    }
    Ok((group, labels))
}
