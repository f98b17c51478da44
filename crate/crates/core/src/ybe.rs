//! Set-theoretic solutions of the Yang-Baxter equation.
//!
//! A left brace `B` gives the map `r(x, y) = (lambda_x(y), lambda_x(y)^{-1} x y)`
//! on `B x B`. This formula is the standard one from the literature rather than
//! something derived here, so every table is checked by brute force before it
//! is returned.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::brace::{LeftBrace, TRIPLE_CAP};
use crate::error::{BraceError, Result};
use crate::group::enumeration_cap;

/// Triples sampled when `N^3` exceeds [`TRIPLE_CAP`].
pub const SAMPLED_TRIPLES: u64 = 1_000_000;

/// `r` on pairs of element indices, stored at position `x * N + y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionTable {
    n: usize,
    r: Vec<(u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidVerdict {
    pub holds: bool,
    pub exhaustive: bool,
    pub triples_checked: u64,
    pub witness: Option<[usize; 3]>,
}

impl SolutionTable {
    pub fn new(n: usize, r: Vec<(u32, u32)>) -> Result<SolutionTable> {
        if r.len() != n * n {
            return Err(BraceError::DimensionMismatch {
                expected: n * n,
                actual: r.len(),
            });
        }
        if r.iter().any(|&(u, v)| u as usize >= n || v as usize >= n) {
            return Err(BraceError::Shape("entry outside the carrier".into()));
        }
        Ok(SolutionTable { n, r })
    }

    /// `r(x, y) = (y, x)`.
    pub fn flip(n: usize) -> SolutionTable {
        let r = (0..n * n)
            .map(|k| ((k % n) as u32, (k / n) as u32))
            .collect();
        SolutionTable { n, r }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> (usize, usize) {
        let (u, v) = self.r[x * self.n + y];
        (u as usize, v as usize)
    }

    pub fn set(&mut self, x: usize, y: usize, uv: (usize, usize)) {
        self.r[x * self.n + y] = (uv.0 as u32, uv.1 as u32);
    }

    /// `[x, y, u, v]` for every pair, in lexicographic order of `(x, y)`.
    pub fn quadruples(&self) -> Vec<[u32; 4]> {
        let n = self.n;
        (0..n * n)
            .map(|k| {
                let (u, v) = self.r[k];
                [(k / n) as u32, (k % n) as u32, u, v]
            })
            .collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.quadruples())?)
    }
}

/// The solution of `B`, after checking `u . v = x . y` and the three
/// verifiers below. A failure is reported as an error.
pub fn derive_solution(b: &LeftBrace) -> Result<SolutionTable> {
    if !b.is_validated() {
        return Err(BraceError::NotValidated);
    }
    let n = b.order();
    let cap = enumeration_cap();
    if n.saturating_mul(n) > cap.saturating_mul(16) {
        return Err(BraceError::EnumerationCap { order: n, cap });
    }
    let mut r = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let u = b.lam_apply(x, y);
            let xy = b.mul_idx(x, y);
            let v = b.mul_idx(b.inv_idx(u), xy);
            if b.mul_idx(u, v) != xy {
                return Err(BraceError::Precondition(format!(
                    "u.v != x.y at ({x}, {y})"
                )));
            }
            r.push((u as u32, v as u32));
        }
    }
    let s = SolutionTable { n, r };
    if !verify_involutive(&s) || !verify_nondegenerate(&s) {
        return Err(BraceError::Precondition(
            "derived solution is not involutive and non-degenerate".into(),
        ));
    }
    let braid = verify_ybe(&s);
    if let Some(w) = braid.witness {
        return Err(BraceError::Precondition(format!(
            "braid relation fails at {w:?}"
        )));
    }
    Ok(s)
}

fn braid_holds(s: &SolutionTable, x: usize, y: usize, z: usize) -> bool {
    // (r x id)(id x r)(r x id)
    let (a, b) = s.get(x, y);
    let (c, d) = s.get(b, z);
    let (e, f) = s.get(a, c);
    // (id x r)(r x id)(id x r)
    let (b2, c2) = s.get(y, z);
    let (a3, b3) = s.get(x, b2);
    let (b4, c4) = s.get(b3, c2);
    (e, f, d) == (a3, b4, c4)
}

/// The braid relation on all triples when `N^3 <= TRIPLE_CAP`, otherwise on a
/// fixed-seed sample. The least failing triple is reported when exhaustive.
pub fn verify_ybe(s: &SolutionTable) -> BraidVerdict {
    let n = s.n as u64;
    let total = n.saturating_mul(n).saturating_mul(n);
    if total <= TRIPLE_CAP {
        for x in 0..s.n {
            for y in 0..s.n {
                for z in 0..s.n {
                    if !braid_holds(s, x, y, z) {
                        return BraidVerdict {
                            holds: false,
                            exhaustive: true,
                            triples_checked: total,
                            witness: Some([x, y, z]),
                        };
                    }
                }
            }
        }
        return BraidVerdict {
            holds: true,
            exhaustive: true,
            triples_checked: total,
            witness: None,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for k in 0..SAMPLED_TRIPLES {
        let (x, y, z) = (
            rng.gen_range(0..s.n),
            rng.gen_range(0..s.n),
            rng.gen_range(0..s.n),
        );
        if !braid_holds(s, x, y, z) {
            return BraidVerdict {
                holds: false,
                exhaustive: false,
                triples_checked: k + 1,
                witness: Some([x, y, z]),
            };
        }
    }
    BraidVerdict {
        holds: true,
        exhaustive: false,
        triples_checked: SAMPLED_TRIPLES,
        witness: None,
    }
}

/// `r^2 = id`.
pub fn verify_involutive(s: &SolutionTable) -> bool {
    (0..s.n).all(|x| {
        (0..s.n).all(|y| {
            let (u, v) = s.get(x, y);
            s.get(u, v) == (x, y)
        })
    })
}

/// For fixed `x` the map `y -> u` is a bijection, and for fixed `y` so is
/// `x -> v`.
pub fn verify_nondegenerate(s: &SolutionTable) -> bool {
    let n = s.n;
    let mut seen = vec![false; n];
    for x in 0..n {
        seen.iter_mut().for_each(|f| *f = false);
        for y in 0..n {
            let u = s.get(x, y).0;
            if seen[u] {
                return false;
            }
            seen[u] = true;
        }
    }
    for y in 0..n {
        seen.iter_mut().for_each(|f| *f = false);
        for x in 0..n {
            let v = s.get(x, y).1;
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    true
}

/// `r` permutes the `N^2` pairs.
pub fn is_bijective(s: &SolutionTable) -> bool {
    let mut seen = vec![false; s.n * s.n];
    for &(u, v) in &s.r {
        let k = u as usize * s.n + v as usize;
        if seen[k] {
            return false;
        }
        seen[k] = true;
    }
    true
}
