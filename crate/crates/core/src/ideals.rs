//! Ideals, left ideals and simplicity.

use serde::Serialize;

use crate::brace::LeftBrace;
use crate::error::Result;
use crate::group::Element;
use crate::subset::{self, ElementSet, SubgroupBuilder};

/// Default limit on the number of ideals collected by [`enumerate_ideals`].
pub const DEFAULT_IDEAL_CAP: usize = 10_000;

/// Closure of the additive span of `seeds` under the lambda maps and under
/// `h -> lambda_h(g) - g` for `g` a standard generator of `B` (that map is
/// additive in `g`). Lambda invariance only needs the lambda maps of a
/// multiplicative generating set, since those generate the image of lambda.
pub(crate) fn closure_of(
    b: &LeftBrace,
    seeds: &[usize],
    full: Option<&[bool]>,
) -> Result<ElementSet> {
    let gens = b.mult_gens()?;
    let g = b.group();
    let basis: Vec<usize> = (0..g.rank()).map(|i| g.basis_idx(i)).collect();
    let mut sg = SubgroupBuilder::new(g);
    let mut head = 0;
    for &s in seeds {
        sg.insert(s);
    }
    'work: while head < sg.len() {
        if sg.len() == g.order() {
            break;
        }
        let h = sg.members()[head];
        head += 1;
        if let Some(full) = full {
            if full[h] {
                // closure(h) is already known to be everything
                for &e in &basis {
                    sg.insert(e);
                }
                break 'work;
            }
        }
        for &t in gens {
            let v = b.lam_apply(t, h);
            sg.insert(v);
        }
        for &e in &basis {
            let v = g.sub_idx(b.lam_apply(h, e), e);
            sg.insert(v);
        }
    }
    Ok(sg.finish())
}

/// The smallest ideal containing `x`.
pub fn ideal_closure(b: &LeftBrace, x: &Element) -> Result<ElementSet> {
    let i = b.group().index_of(x)?;
    closure_of(b, &[i], None)
}

/// Additive subgroup closed under every lambda map.
pub fn is_left_ideal(b: &LeftBrace, s: &ElementSet) -> Result<bool> {
    let gens = b.mult_gens()?;
    if s.group() != b.group() || !subset::is_subgroup(s) {
        return Ok(false);
    }
    for &h in s.indices() {
        for &t in gens {
            if !s.contains_idx(b.lam_apply(t, h)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Left ideal that is also normal in `(B, .)`. Normality is checked by
/// conjugating with multiplicative generators.
pub fn is_ideal(b: &LeftBrace, s: &ElementSet) -> Result<bool> {
    if !is_left_ideal(b, s)? {
        return Ok(false);
    }
    for &g in b.mult_gens()? {
        let gi = b.inv_idx(g);
        for &h in s.indices() {
            if !s.contains_idx(b.mul_idx(b.mul_idx(g, h), gi)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Orbits of the lambda action; returns one representative per orbit, the
/// smallest index in each.
pub(crate) fn lambda_orbit_representatives(b: &LeftBrace) -> Result<Vec<usize>> {
    let gens = b.mult_gens()?.to_vec();
    let n = b.order();
    let mut seen = vec![false; n];
    let mut reps = Vec::new();
    let mut stack = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        reps.push(x);
        seen[x] = true;
        stack.push(x);
        while let Some(y) = stack.pop() {
            for &t in &gens {
                let z = b.lam_apply(t, y);
                if !seen[z] {
                    seen[z] = true;
                    stack.push(z);
                }
            }
        }
    }
    Ok(reps)
}

/// True when every non-zero element generates `B` as an ideal. A brace of order
/// one is not simple.
pub fn is_simple(b: &LeftBrace) -> Result<bool> {
    let n = b.order();
    if n <= 1 {
        return Ok(false);
    }
    let reps = lambda_orbit_representatives(b)?;
    let mut full = vec![false; n];
    for &x in reps.iter().filter(|&&x| x != 0) {
        let c = closure_of(b, &[x], Some(&full))?;
        if !c.is_full() {
            return Ok(false);
        }
        full[x] = true;
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealList {
    pub ideals: Vec<ElementSet>,
    /// False when the cap stopped the search early.
    pub complete: bool,
}

/// All ideals: principal closures and their sums, sorted by size and then by
/// members.
pub fn enumerate_ideals(b: &LeftBrace, cap: usize) -> Result<IdealList> {
    let reps = lambda_orbit_representatives(b)?;
    let mut found: Vec<ElementSet> = Vec::new();
    let mut complete = true;
    let push = |found: &mut Vec<ElementSet>, s: ElementSet| -> bool {
        if found.iter().any(|f| f.indices() == s.indices()) {
            return false;
        }
        found.push(s);
        true
    };
    for &x in &reps {
        let c = closure_of(b, &[x], None)?;
        push(&mut found, c);
        if found.len() > cap {
            complete = false;
            break;
        }
    }
    // close under sums; the sum of two ideals is an ideal
    let mut i = 0;
    while complete && i < found.len() {
        let mut j = 0;
        while j < i {
            let a = &found[i];
            let c = &found[j];
            if !a.is_subset_of(c) && !c.is_subset_of(a) {
                let mut seeds: Vec<usize> = a.generator_indices().unwrap_or(a.indices()).to_vec();
                seeds.extend_from_slice(c.generator_indices().unwrap_or(c.indices()));
                let sum = subset::additive_span(b.group(), &seeds);
                push(&mut found, sum);
                if found.len() > cap {
                    complete = false;
                    break;
                }
            }
            j += 1;
        }
        i += 1;
    }
    found.sort_by(|x, y| {
        x.len()
            .cmp(&y.len())
            .then_with(|| x.indices().cmp(y.indices()))
    });
    found.truncate(cap);
    Ok(IdealList {
        ideals: found,
        complete,
    })
}
