use super::quadratic::QuadraticForm;
use super::simple::{validate_simple_family, SimpleFamilyParams};
use crate::arith;
use crate::error::{BraceError, Result};
use crate::matrix::MatrixModP;

/// The explicit parameters for a pair of primes `p2 | p1 - 1`, with the
/// intermediate data of the recipe kept for inspection.
#[derive(Clone, Debug)]
pub struct ExplicitConstruction {
    pub params: SimpleFamilyParams,
    /// Smallest primitive root modulo `p1`.
    pub alpha: u32,
    /// `alpha^{(p1-1)/p2}`, an element of order `p2`.
    pub gamma: u32,
    /// Cycles of the permutation on `{1, ..., p1-1}`; cycle `i` is
    /// `(alpha^i, alpha^i gamma, ..., alpha^i gamma^{p2-1})` reduced mod `p1`.
    pub theta: Vec<Vec<u32>>,
    /// `(p1 - 1) / p2`, the number of cycles.
    pub cycle_count: usize,
    /// `(p1 - 1)(p1 - 2) / 2`.
    pub m: u64,
}

pub fn construct_explicit_family(p1: u32, p2: u32) -> Result<ExplicitConstruction> {
    for p in [p1, p2] {
        if !arith::is_prime(p as u64) {
            return Err(BraceError::NotPrime(p as u64));
        }
    }
    if p1 == p2 || !(p1 - 1).is_multiple_of(p2) {
        return Err(BraceError::Precondition(format!(
            "{p2} does not divide {p1} - 1"
        )));
    }
    let n = (p1 - 1) as usize;
    let cycle_count = n / p2 as usize;
    let alpha = arith::smallest_primitive_root(p1 as u64).expect("prime modulus");
    let gamma = arith::pow_mod(alpha, (n / p2 as usize) as u64, p1 as u64);

    // companion matrix of x^{n} + ... + x + 1: C e_k = e_{k+1}, C e_n = -(e_1 + ... + e_n)
    let mut c = MatrixModP::zeros(p2, n, n);
    for k in 0..n {
        if k + 1 < n {
            c.set(k + 1, k, 1);
        }
        c.set(k, n - 1, -1);
    }

    let mut theta = Vec::with_capacity(cycle_count);
    let mut perm = vec![usize::MAX; n];
    let mut start = 1u64;
    for _ in 0..cycle_count {
        let cycle: Vec<u32> = (0..p2 as u64)
            .map(|j| (start * arith::pow_mod(gamma, j, p1 as u64) % p1 as u64) as u32)
            .collect();
        for j in 0..cycle.len() {
            let from = cycle[j] as usize - 1;
            let to = cycle[(j + 1) % cycle.len()] as usize - 1;
            perm[from] = to;
        }
        theta.push(cycle);
        start = start * alpha % p1 as u64;
    }
    let f = MatrixModP::permutation(p2, &perm)?;

    let m = (p1 as u64 - 1) * (p1 as u64 - 2) / 2;
    let mut z = vec![0u32; n];
    z[n - 1] = (m % p2 as u64) as u32;

    let params = SimpleFamilyParams {
        p1,
        p2,
        n,
        q: QuadraticForm::pairwise_sum(p2, n),
        f,
        gamma: gamma as u32,
        c,
        z,
    };
    if let Some(v) = validate_simple_family(&params) {
        return Err(BraceError::InvalidFamily(v));
    }
    Ok(ExplicitConstruction {
        params,
        alpha: alpha as u32,
        gamma: gamma as u32,
        theta,
        cycle_count,
        m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p1_3_p2_2() {
        let e = construct_explicit_family(3, 2).unwrap();
        assert_eq!((e.alpha, e.gamma, e.m), (2, 2, 1));
        assert_eq!(e.params.c.to_rows(), vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(e.params.f.to_rows(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(e.params.z, vec![0, 1]);
    }

    #[test]
    fn p1_7_p2_3() {
        let e = construct_explicit_family(7, 3).unwrap();
        assert_eq!((e.alpha, e.gamma), (3, 2));
        assert_eq!(e.theta, vec![vec![1, 2, 4], vec![3, 6, 5]]);
        assert_eq!(e.cycle_count, 2);
        assert!(e.params.z.iter().all(|&x| x == 0));
    }

    #[test]
    fn divisibility_required() {
        assert!(construct_explicit_family(7, 5).is_err());
        assert!(construct_explicit_family(7, 7).is_err());
        assert!(construct_explicit_family(8, 7).is_err());
    }
}
