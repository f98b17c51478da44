//! Additive automorphisms, stored as one matrix per prime component.
//!
//! Matrices act on column vectors: column `j` of a block holds the image of the
//! `j`-th generator of that component, and row `i` is reduced modulo the order of
//! the `i`-th generator.

use std::fmt;

use crate::arith;
use crate::error::{BraceError, Result};
use crate::group::{AbelianGroup, Element};
use crate::matrix::MatrixModP;

#[derive(Clone, PartialEq, Eq, Hash)]
struct Block {
    prime: u32,
    factors: Vec<usize>,
    moduli: Vec<u32>,
    mat: Vec<u32>,
}

impl Block {
    fn dim(&self) -> usize {
        self.factors.len()
    }

    fn get(&self, r: usize, c: usize) -> u32 {
        self.mat[r * self.dim() + c]
    }

    fn elementary(&self) -> bool {
        self.moduli.iter().all(|&m| m == self.prime)
    }

    fn as_matrix(&self) -> MatrixModP {
        let d = self.dim();
        let entries: Vec<i64> = self.mat.iter().map(|&x| x as i64).collect();
        MatrixModP::new(self.prime, d, d, &entries).expect("prime block")
    }

    fn compose(&self, other: &Block) -> Block {
        let d = self.dim();
        let mut mat = vec![0u32; d * d];
        for i in 0..d {
            let m = self.moduli[i] as u64;
            for j in 0..d {
                let mut acc = 0u64;
                for k in 0..d {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                mat[i * d + j] = (acc % m) as u32;
            }
        }
        Block {
            prime: self.prime,
            factors: self.factors.clone(),
            moduli: self.moduli.clone(),
            mat,
        }
    }

    fn is_identity(&self) -> bool {
        let d = self.dim();
        (0..d).all(|r| (0..d).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    // Invertible iff the induced map on the Frattini quotient G/pG is.
    fn is_invertible(&self) -> bool {
        let d = self.dim();
        if d == 0 {
            return true;
        }
        let entries: Vec<i64> = self.mat.iter().map(|&x| (x % self.prime) as i64).collect();
        MatrixModP::new(self.prime, d, d, &entries)
            .map(|m| m.rank() == d)
            .unwrap_or(false)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    moduli: Vec<u32>,
    blocks: Vec<Block>,
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism{:?}", self.to_matrix())
    }
}

impl Automorphism {
    pub fn identity(g: &AbelianGroup) -> Automorphism {
        let blocks = g
            .prime_components()
            .into_iter()
            .map(|c| {
                let d = c.factors.len();
                let mut mat = vec![0u32; d * d];
                for i in 0..d {
                    mat[i * d + i] = 1;
                }
                Block {
                    prime: c.prime,
                    moduli: c.factors.iter().map(|&f| g.moduli()[f]).collect(),
                    factors: c.factors,
                    mat,
                }
            })
            .collect();
        Automorphism {
            moduli: g.moduli().to_vec(),
            blocks,
        }
    }

    /// Builds an automorphism from a full `r x r` matrix (`r` = number of cyclic
    /// factors). Entries linking different primes must vanish.
    pub fn from_matrix(g: &AbelianGroup, rows: &[Vec<i64>]) -> Result<Automorphism> {
        let aut = Automorphism::from_matrix_unchecked(g, rows)?;
        aut.check_invertible()?;
        Ok(aut)
    }

    /// Like [`Automorphism::from_matrix`] but accepts non-invertible
    /// endomorphisms. Such maps are rejected later by brace validation.
    pub fn from_matrix_unchecked(g: &AbelianGroup, rows: &[Vec<i64>]) -> Result<Automorphism> {
        let r = g.rank();
        if rows.len() != r || rows.iter().any(|row| row.len() != r) {
            return Err(BraceError::Shape(format!(
                "automorphism of a rank-{r} group needs an {r}x{r} matrix"
            )));
        }
        let m = g.moduli();
        let mut aut = Automorphism::identity(g);
        for block in &mut aut.blocks {
            let d = block.dim();
            for (bi, &fi) in block.factors.iter().enumerate() {
                for (bj, &fj) in block.factors.iter().enumerate() {
                    let v = rows[fi][fj].rem_euclid(m[fi] as i64) as u64;
                    // the image of e_j must have order dividing m_j
                    if !(v * m[fj] as u64).is_multiple_of(m[fi] as u64) {
                        return Err(BraceError::NotAutomorphism(format!(
                            "entry ({fi},{fj}) does not define a homomorphism"
                        )));
                    }
                    block.mat[bi * d + bj] = v as u32;
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                let pi = arith::prime_power_base(m[i] as u64);
                let pj = arith::prime_power_base(m[j] as u64);
                if pi != pj && rows[i][j].rem_euclid(m[i] as i64) != 0 {
                    return Err(BraceError::NotAutomorphism(format!(
                        "entry ({i},{j}) mixes prime components"
                    )));
                }
            }
        }
        Ok(aut)
    }

    /// Builds an automorphism from the images of the standard generators.
    pub fn from_images(g: &AbelianGroup, images: &[Element]) -> Result<Automorphism> {
        if images.len() != g.rank() {
            return Err(BraceError::DimensionMismatch {
                expected: g.rank(),
                actual: images.len(),
            });
        }
        for x in images {
            g.check(x)?;
        }
        let rows: Vec<Vec<i64>> = (0..g.rank())
            .map(|i| images.iter().map(|x| x.coords()[i] as i64).collect())
            .collect();
        Automorphism::from_matrix(g, &rows)
    }

    /// One matrix per prime component, in increasing prime order.
    pub fn from_blocks(g: &AbelianGroup, mats: &[MatrixModP]) -> Result<Automorphism> {
        let mut aut = Automorphism::identity(g);
        if mats.len() != aut.blocks.len() {
            return Err(BraceError::Shape(format!(
                "{} blocks given for {} prime components",
                mats.len(),
                aut.blocks.len()
            )));
        }
        for (block, m) in aut.blocks.iter_mut().zip(mats) {
            if !block.elementary() {
                return Err(BraceError::Shape(
                    "matrix blocks require an elementary component".into(),
                ));
            }
            if m.p() != block.prime || m.rows() != block.dim() || m.cols() != block.dim() {
                return Err(BraceError::Shape(format!(
                    "block for p={} must be {}x{} over F_{}",
                    block.prime,
                    block.dim(),
                    block.dim(),
                    block.prime
                )));
            }
            block.mat = m.entries().to_vec();
        }
        aut.check_invertible()?;
        Ok(aut)
    }

    fn check_invertible(&self) -> Result<()> {
        for b in &self.blocks {
            if !b.is_invertible() {
                return Err(BraceError::NotAutomorphism(format!(
                    "block for p={} is singular",
                    b.prime
                )));
            }
        }
        Ok(())
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn is_invertible(&self) -> bool {
        self.check_invertible().is_ok()
    }

    /// The block for the component of `prime` as a matrix over `F_p`, when that
    /// component is elementary.
    pub fn block(&self, prime: u32) -> Option<MatrixModP> {
        self.blocks
            .iter()
            .find(|b| b.prime == prime && b.elementary())
            .map(Block::as_matrix)
    }

    /// Full `r x r` matrix with zero entries between different primes.
    pub fn to_matrix(&self) -> Vec<Vec<u32>> {
        let r = self.moduli.len();
        let mut out = vec![vec![0u32; r]; r];
        for b in &self.blocks {
            for (bi, &fi) in b.factors.iter().enumerate() {
                for (bj, &fj) in b.factors.iter().enumerate() {
                    out[fi][fj] = b.get(bi, bj);
                }
            }
        }
        out
    }

    fn check_shape(&self, other: &[u32]) -> Result<()> {
        if self.moduli != other {
            return Err(BraceError::Shape(format!(
                "automorphism of {:?} used on {:?}",
                self.moduli, other
            )));
        }
        Ok(())
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if x.coords().len() != self.moduli.len() {
            return Err(BraceError::Shape(format!(
                "element with {} coordinates, automorphism of rank {}",
                x.coords().len(),
                self.moduli.len()
            )));
        }
        for (i, (&c, &m)) in x.coords().iter().zip(&self.moduli).enumerate() {
            if c >= m {
                return Err(BraceError::UnreducedCoordinate {
                    index: i,
                    value: c,
                    modulus: m,
                });
            }
        }
        let mut out = vec![0u32; x.coords().len()];
        self.apply_into(x.coords(), &mut out);
        Ok(Element::new(out))
    }

    /// Raw application on reduced coordinates.
    pub(crate) fn apply_into(&self, x: &[u32], out: &mut [u32]) {
        for b in &self.blocks {
            let d = b.dim();
            for (bi, &fi) in b.factors.iter().enumerate() {
                let mut acc = 0u64;
                for (bj, &fj) in b.factors.iter().enumerate() {
                    acc += b.mat[bi * d + bj] as u64 * x[fj] as u64;
                }
                out[fi] = (acc % b.moduli[bi] as u64) as u32;
            }
        }
    }

    pub(crate) fn apply_idx(&self, g: &AbelianGroup, idx: usize) -> usize {
        let x = g.decode(idx);
        let mut out = x.clone();
        self.apply_into(&x, &mut out);
        g.encode(&out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        self.check_shape(&other.moduli)?;
        Ok(Automorphism {
            moduli: self.moduli.clone(),
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.compose(b))
                .collect(),
        })
    }

    pub fn inverse(&self) -> Automorphism {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                if b.elementary() {
                    let inv = b.as_matrix().inverse().expect("automorphism block");
                    Block {
                        mat: inv.entries().to_vec(),
                        ..b.clone()
                    }
                } else {
                    // phi^-1 = phi^(k-1) where k is the order of phi
                    let mut prev = identity_like(b);
                    let mut cur = b.clone();
                    while !cur.is_identity() {
                        prev = cur.clone();
                        cur = cur.compose(b);
                    }
                    prev
                }
            })
            .collect();
        Automorphism {
            moduli: self.moduli.clone(),
            blocks,
        }
    }

    pub fn pow(&self, e: u64) -> Automorphism {
        let mut acc = Automorphism {
            moduli: self.moduli.clone(),
            blocks: self.blocks.iter().map(identity_like).collect(),
        };
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base).expect("same group");
            }
            base = base.compose(&base).expect("same group");
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(Block::is_identity)
    }

    /// Least `k >= 1` with `phi^k = id`, or `None` when it exceeds `cap`.
    pub fn order(&self, cap: u64) -> Option<u64> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.compose(self).expect("same group");
        }
        None
    }
}

fn identity_like(b: &Block) -> Block {
    let d = b.dim();
    let mut mat = vec![0u32; d * d];
    for i in 0..d {
        mat[i * d + i] = 1;
    }
    Block { mat, ..b.clone() }
}

/// Multiplicative order of an automorphism; see [`Automorphism::order`].
pub fn aut_order(phi: &Automorphism, cap: u64) -> Option<u64> {
    phi.order(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn g(m: &[u32]) -> AbelianGroup {
        AbelianGroup::new(m.to_vec()).unwrap()
    }

    fn random_aut(grp: &AbelianGroup, rng: &mut ChaCha8Rng) -> Automorphism {
        let r = grp.rank();
        loop {
            let rows: Vec<Vec<i64>> = (0..r)
                .map(|i| {
                    (0..r)
                        .map(|_| rng.gen_range(0..grp.moduli()[i] as i64))
                        .collect()
                })
                .collect();
            if let Ok(a) = Automorphism::from_matrix(grp, &rows) {
                return a;
            }
        }
    }

    #[test]
    fn identity_and_swap() {
        let grp = g(&[2, 2]);
        let id = Automorphism::identity(&grp);
        let x = Element::new(vec![1, 1]);
        assert_eq!(id.apply(&x).unwrap(), x);
        let f = Automorphism::from_matrix(&grp, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(
            f.apply(&Element::new(vec![1, 0])).unwrap().coords(),
            &[0, 1]
        );
        assert_eq!(aut_order(&id, 5), Some(1));
        assert_eq!(aut_order(&f, 5), Some(2));
        assert_eq!(aut_order(&f, 1), None);
    }

    #[test]
    fn rejects_singular_and_mixed() {
        let grp = g(&[2, 2]);
        assert!(Automorphism::from_matrix(&grp, &[vec![1, 1], vec![1, 1]]).is_err());
        let mixed = g(&[2, 3]);
        assert!(Automorphism::from_matrix(&mixed, &[vec![1, 1], vec![0, 1]]).is_err());
        assert!(Automorphism::from_matrix(&mixed, &[vec![1, 0], vec![0, 2]]).is_ok());
        // Z/4 x Z/2: e_1 (order 2) cannot map onto the generator of Z/4
        let m = g(&[4, 2]);
        assert!(Automorphism::from_matrix(&m, &[vec![1, 1], vec![0, 1]]).is_err());
        assert!(Automorphism::from_matrix(&m, &[vec![1, 2], vec![1, 1]]).is_ok());
    }

    #[test]
    fn shape_mismatch() {
        let id = Automorphism::identity(&g(&[2, 2]));
        assert!(id.apply(&Element::new(vec![1])).is_err());
        assert!(id.compose(&Automorphism::identity(&g(&[3]))).is_err());
    }

    #[test]
    fn composition_matches_sequential_application() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let groups = [g(&[2, 2, 2]), g(&[3, 2, 2, 2]), g(&[4, 2, 3]), g(&[5, 5])];
        for case in 0..100 {
            let grp = &groups[case % groups.len()];
            let a = random_aut(grp, &mut rng);
            let b = random_aut(grp, &mut rng);
            let x = grp.element_at(rng.gen_range(0..grp.order()));
            let ab = a.compose(&b).unwrap();
            assert_eq!(
                ab.apply(&x).unwrap(),
                a.apply(&b.apply(&x).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn additive_on_small_groups() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for m in [
            vec![2, 2, 2],
            vec![3, 3],
            vec![4, 2],
            vec![2, 3, 2],
            vec![8, 2],
        ] {
            let grp = g(&m);
            let a = random_aut(&grp, &mut rng);
            let els: Vec<Element> = grp.elements(256).unwrap().collect();
            assert_eq!(a.apply(&grp.zero()).unwrap(), grp.zero());
            for x in &els {
                for y in &els {
                    let lhs = a.apply(&grp.add(x, y).unwrap()).unwrap();
                    let rhs = grp.add(&a.apply(x).unwrap(), &a.apply(y).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn inverse_on_basis() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for m in [vec![2, 2, 2], vec![3, 2, 2, 2], vec![4, 2], vec![9, 3]] {
            let grp = g(&m);
            for _ in 0..10 {
                let a = random_aut(&grp, &mut rng);
                let inv = a.inverse();
                for e in grp.basis() {
                    assert_eq!(a.apply(&inv.apply(&e).unwrap()).unwrap(), e);
                    assert_eq!(inv.apply(&a.apply(&e).unwrap()).unwrap(), e);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn pow_agrees_with_order(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let grp = g(&[2, 2, 3]);
            let a = random_aut(&grp, &mut rng);
            let k = a.order(1000).unwrap();
            prop_assert!(a.pow(k).is_identity());
            prop_assert_eq!(a.pow(k + 1), a.clone());
        }
    }
}
