use crate::error::{BraceError, Result};
use crate::group::Element;
use crate::matrix::MatrixModP;

/// Quadratic form `Q(x) = sum_{i <= j} u_ij x_i x_j` over `F_p`, stored as an
/// upper-triangular coefficient matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    u: MatrixModP,
}

impl QuadraticForm {
    pub fn new(u: MatrixModP) -> Result<QuadraticForm> {
        if !u.is_square() {
            return Err(BraceError::Shape(
                "coefficient matrix must be square".into(),
            ));
        }
        for r in 0..u.rows() {
            for c in 0..r {
                if u.get(r, c) != 0 {
                    return Err(BraceError::Shape(
                        "coefficient matrix must be upper triangular".into(),
                    ));
                }
            }
        }
        Ok(QuadraticForm { u })
    }

    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<QuadraticForm> {
        QuadraticForm::new(MatrixModP::from_rows(p, rows)?)
    }

    /// `sum_{i < j} x_i x_j`.
    pub fn pairwise_sum(p: u32, n: usize) -> QuadraticForm {
        let mut u = MatrixModP::zeros(p, n, n);
        for i in 0..n {
            for j in i + 1..n {
                u.set(i, j, 1);
            }
        }
        QuadraticForm { u }
    }

    /// Orthogonal sum: the form on the concatenated coordinates.
    pub fn block_sum(forms: &[QuadraticForm]) -> Result<QuadraticForm> {
        let mats: Vec<MatrixModP> = forms.iter().map(|f| f.u.clone()).collect();
        QuadraticForm::new(MatrixModP::block_diag(&mats)?)
    }

    pub fn p(&self) -> u32 {
        self.u.p()
    }

    pub fn dim(&self) -> usize {
        self.u.rows()
    }

    pub fn coefficients(&self) -> &MatrixModP {
        &self.u
    }

    pub fn eval(&self, x: &[u32]) -> u32 {
        let p = self.p() as u64;
        let n = self.dim();
        let mut acc = 0u64;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            let row: u64 = (i..n)
                .zip(&x[i..])
                .map(|(j, &xj)| self.u.get(i, j) as u64 * xj as u64)
                .sum();
            acc = (acc + (row % p) * x[i] as u64) % p;
        }
        acc as u32
    }

    /// Matrix `U + U^t` of the polar form `b(x, y) = Q(x+y) - Q(x) - Q(y)`.
    pub fn polar(&self) -> MatrixModP {
        self.u.add(&self.u.transpose()).expect("square")
    }

    pub fn polar_eval(&self, x: &[u32], y: &[u32]) -> u32 {
        let b = self.polar();
        let by = b.mul_vec(y).expect("dimension");
        let p = self.p() as u64;
        let s: u64 = x
            .iter()
            .zip(&by)
            .map(|(&a, &c)| a as u64 * c as u64 % p)
            .sum();
        (s % p) as u32
    }

    /// The polar form is invertible. For `p = 2` this is the convention used
    /// throughout, since the zero-socle argument only needs `b`.
    pub fn is_non_degenerate(&self) -> bool {
        self.polar().is_invertible()
    }
}

/// `x_last - Q(x)` modulo `p`.
pub fn eval_q(q: &QuadraticForm, x: &Element, x_last: u32) -> Result<u32> {
    if x.coords().len() != q.dim() {
        return Err(BraceError::DimensionMismatch {
            expected: q.dim(),
            actual: x.coords().len(),
        });
    }
    let p = q.p();
    Ok(((x_last % p) + p - q.eval(x.coords())) % p)
}

/// Decides whether a polynomial function of degree at most two in each
/// monomial, vanishing at `0`, vanishes on all of `F_p^n`. Exhaustive for
/// `p^n <= 4096`; above that it evaluates at `e_i`, `-e_i` and `e_i + e_j`,
/// which determine every coefficient. Returns a failing point.
pub(crate) fn quadratic_zero_witness(
    p: u32,
    n: usize,
    f: impl Fn(&[u32]) -> u32,
) -> Option<Vec<u32>> {
    let total = (p as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    let mut x = vec![0u32; n];
    if total <= 4096 {
        for _ in 0..total {
            if f(&x) != 0 {
                return Some(x);
            }
            for c in x.iter_mut().rev() {
                *c += 1;
                if *c < p {
                    break;
                }
                *c = 0;
            }
        }
        return None;
    }
    for i in 0..n {
        for v in [1, p - 1] {
            x[i] = v;
            if f(&x) != 0 {
                return Some(x);
            }
        }
        x[i] = 1;
        for j in i + 1..n {
            x[j] = 1;
            if f(&x) != 0 {
                return Some(x);
            }
            x[j] = 0;
        }
        x[i] = 0;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_polar(q: &QuadraticForm, x: &[u32], y: &[u32]) -> u32 {
        let p = q.p();
        let s: Vec<u32> = x.iter().zip(y).map(|(a, b)| (a + b) % p).collect();
        (q.eval(&s) + 2 * p - q.eval(x) - q.eval(y)) % p
    }

    #[test]
    fn pairwise_sum_value() {
        let q = QuadraticForm::pairwise_sum(3, 6);
        let x = Element::new(vec![1, 1, 0, 0, 0, 0]);
        assert_eq!(q.eval(x.coords()), 1);
        assert_eq!(eval_q(&q, &x, 2).unwrap(), 1);
        assert_eq!(eval_q(&q, &Element::new(vec![0; 6]), 0).unwrap(), 0);
    }

    #[test]
    fn lower_entries_rejected() {
        assert!(QuadraticForm::from_rows(2, &[vec![0, 0], vec![1, 0]]).is_err());
    }

    #[test]
    fn hyperbolic_plane_non_degenerate() {
        let q = QuadraticForm::from_rows(2, &[vec![0, 1], vec![0, 0]]).unwrap();
        assert!(q.is_non_degenerate());
        let sq = QuadraticForm::from_rows(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(!sq.is_non_degenerate());
    }

    #[test]
    fn zero_witness_agrees_with_exhaustive() {
        // x1^2 - x1 vanishes on F_2 but not on F_3
        let f = |x: &[u32], p: u32| (x[0] * x[0] + p - x[0]) % p;
        assert_eq!(quadratic_zero_witness(2, 1, |x| f(x, 2)), None);
        assert!(quadratic_zero_witness(3, 1, |x| f(x, 3)).is_some());
        assert!(quadratic_zero_witness(3, 9, |x| f(x, 3)).is_some());
    }

    proptest! {
        #[test]
        fn polar_matches_definition(
            p in prop::sample::select(vec![2u32, 3, 5]),
            coef in prop::collection::vec(0i64..5, 9),
            x in prop::collection::vec(0u32..5, 3),
            y in prop::collection::vec(0u32..5, 3),
        ) {
            let rows: Vec<Vec<i64>> = (0..3)
                .map(|r| (0..3).map(|c| if c >= r { coef[r * 3 + c] } else { 0 }).collect())
                .collect();
            let q = QuadraticForm::from_rows(p, &rows).unwrap();
            let x: Vec<u32> = x.iter().map(|v| v % p).collect();
            let y: Vec<u32> = y.iter().map(|v| v % p).collect();
            prop_assert_eq!(q.polar_eval(&x, &y), brute_polar(&q, &x, &y));
        }
    }
}
