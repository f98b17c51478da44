//! Brace isomorphism by backtracking over images of additive generators.

use std::collections::HashMap;

use crate::automorphism::Automorphism;
use crate::brace::LeftBrace;
use crate::error::{BraceError, Result};
use crate::group::{AbelianGroup, Element};

pub const DEFAULT_ISO_CAP: usize = 4096;

/// An additive isomorphism `F` between the carriers of two braces with
/// `lambda'_{F(a)} = F lambda_a F^{-1}` for every `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceIsomorphism {
    source: AbelianGroup,
    target: AbelianGroup,
    map: Vec<usize>,
}

impl BraceIsomorphism {
    /// Images of the standard generators of the source group.
    pub fn generator_images(&self) -> Vec<Element> {
        (0..self.source.rank())
            .map(|i| self.target.element_at(self.map[self.source.basis_idx(i)]))
            .collect()
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        Ok(self.target.element_at(self.map[self.source.index_of(x)?]))
    }

    /// The witness as an automorphism, when both carriers are the same group.
    pub fn automorphism(&self) -> Option<Automorphism> {
        if self.source != self.target {
            return None;
        }
        Automorphism::from_images(&self.source, &self.generator_images()).ok()
    }

    /// Checks the defining property on every element and generator.
    pub fn verify(&self, b1: &LeftBrace, b2: &LeftBrace) -> bool {
        let g1 = b1.group();
        let n = g1.order();
        let mut seen = vec![false; n];
        for &y in &self.map {
            if y >= n || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        for a in 0..n {
            for i in 0..g1.rank() {
                let e = g1.basis_idx(i);
                if self.map[g1.add_idx(a, e)] != b2.group().add_idx(self.map[a], self.map[e]) {
                    return false;
                }
                let lhs = self.map[b1.lam_apply(a, e)];
                let rhs = b2.lam_apply(self.map[a], self.map[e]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
struct Invariant {
    add_order: u64,
    mult_order: u64,
    lambda_order: u64,
    in_socle: bool,
}

fn invariants(b: &LeftBrace) -> Vec<Invariant> {
    let g = b.group();
    let mut lam_order: HashMap<usize, u64> = HashMap::new();
    (0..b.order())
        .map(|a| {
            let c = b.class_idx(a);
            let lambda_order = *lam_order
                .entry(c)
                .or_insert_with(|| b.lam(a).order(u64::MAX).unwrap_or(0));
            Invariant {
                add_order: g.additive_order_idx(a),
                mult_order: b.mult_order_idx(a),
                lambda_order,
                in_socle: b.is_socle_idx(a),
            }
        })
        .collect()
}

/// [`braces_isomorphic_with_cap`] with the default cap.
pub fn braces_isomorphic(b1: &LeftBrace, b2: &LeftBrace) -> Result<Option<BraceIsomorphism>> {
    braces_isomorphic_with_cap(b1, b2, DEFAULT_ISO_CAP)
}

/// Searches for a brace isomorphism `b1 -> b2`. The carriers must have the
/// same cyclic factors up to order; otherwise the answer is `None`.
pub fn braces_isomorphic_with_cap(
    b1: &LeftBrace,
    b2: &LeftBrace,
    cap: usize,
) -> Result<Option<BraceIsomorphism>> {
    if !b1.is_validated() || !b2.is_validated() {
        return Err(BraceError::NotValidated);
    }
    let (g1, g2) = (b1.group(), b2.group());
    if g1.sorted_moduli() != g2.sorted_moduli() {
        return Ok(None);
    }
    let n = g1.order();
    if n > cap {
        return Err(BraceError::IsomorphismCap { order: n, cap });
    }
    if b1.lambda_classes() != b2.lambda_classes() {
        return Ok(None);
    }
    let inv1 = invariants(b1);
    let inv2 = invariants(b2);
    let mut s1 = inv1.clone();
    let mut s2 = inv2.clone();
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return Ok(None);
    }

    let r = g1.rank();
    let candidates: Vec<Vec<usize>> = (0..r)
        .map(|i| {
            let want = inv1[g1.basis_idx(i)];
            (0..n).filter(|&y| inv2[y] == want).collect()
        })
        .collect();

    let mut search = Search {
        b1,
        b2,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        candidates,
    };
    search.map[0] = 0;
    search.used[0] = true;
    if r == 0 {
        return Ok(Some(BraceIsomorphism {
            source: g1.clone(),
            target: g2.clone(),
            map: search.map,
        }));
    }
    if search.assign(r - 1) {
        let iso = BraceIsomorphism {
            source: g1.clone(),
            target: g2.clone(),
            map: search.map,
        };
        debug_assert!(iso.verify(b1, b2));
        return Ok(Some(iso));
    }
    Ok(None)
}

struct Search<'a> {
    b1: &'a LeftBrace,
    b2: &'a LeftBrace,
    map: Vec<usize>,
    used: Vec<bool>,
    candidates: Vec<Vec<usize>>,
}

impl Search<'_> {
    // Generators are assigned from the last coordinate down, so after fixing
    // e_i the span of e_i..e_{r-1} is exactly the index prefix [0, m_i * stride_i).
    fn assign(&mut self, i: usize) -> bool {
        let g1 = self.b1.group();
        let g2 = self.b2.group();
        let stride = g1.stride(i);
        let m = g1.moduli()[i] as usize;
        let end = stride * m;
        for ci in 0..self.candidates[i].len() {
            let y = self.candidates[i][ci];
            if self.used[y] {
                continue;
            }
            // extend additively to the new prefix
            let mut ok = true;
            let mut filled = stride;
            let mut img = y;
            for c in 1..m {
                for rest in 0..stride {
                    let v = g2.add_idx(img, self.map[rest]);
                    if self.used[v] {
                        ok = false;
                        break;
                    }
                    self.used[v] = true;
                    self.map[c * stride + rest] = v;
                    filled = c * stride + rest + 1;
                }
                if !ok {
                    break;
                }
                img = g2.add_idx(img, y);
            }
            if ok && self.consistent(i, end) {
                if i == 0 {
                    return true;
                }
                if self.assign(i - 1) {
                    return true;
                }
            }
            for k in stride..filled {
                self.used[self.map[k]] = false;
                self.map[k] = usize::MAX;
            }
        }
        false
    }

    // F(lambda_a(e_j)) = lambda'_{F(a)}(F(e_j)) whenever both sides are known.
    fn consistent(&self, i: usize, end: usize) -> bool {
        let g1 = self.b1.group();
        let stride = g1.stride(i);
        let r = g1.rank();
        for a in stride..end {
            let fa = self.map[a];
            for j in i..r {
                let e = g1.basis_idx(j);
                let v = self.b1.lam_apply(a, e);
                if v >= end {
                    continue;
                }
                if self.map[v] != self.b2.lam_apply(fa, self.map[e]) {
                    return false;
                }
            }
        }
        // earlier elements against the new generator
        let e = g1.basis_idx(i);
        for a in 0..stride {
            let v = self.b1.lam_apply(a, e);
            if v < end && self.map[v] != self.b2.lam_apply(self.map[a], self.map[e]) {
                return false;
            }
        }
        true
    }
}
