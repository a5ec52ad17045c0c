//! Coefficient rings for characters and exact fields for linear algebra.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use std::fmt::{Debug, Display};

/// Exact signed integer ring used for character multiplicities.
pub trait Coefficient:
    Num + Signed + Clone + Ord + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl Coefficient for i64 {}
impl Coefficient for i128 {}
impl Coefficient for BigInt {}

/// Exact field used by the rational solvers.
pub trait ExactField: Num + Signed + Clone + PartialOrd + Debug {}

impl ExactField for Ratio<i64> {}
impl ExactField for Ratio<i128> {}
impl ExactField for Ratio<BigInt> {}

/// Solve `x · m = b` for a square matrix `m` over an exact field.
///
/// Returns `None` when `m` is singular.
pub fn solve_row<F: ExactField>(m: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let n = m.len();
    // x·m = b  <=>  mᵀ·xᵀ = bᵀ; build the augmented transpose.
    let mut a: Vec<Vec<F>> = (0..n)
        .map(|i| {
            let mut row: Vec<F> = (0..n).map(|j| m[j][i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = F::one() / a[col][col].clone();
        for k in col..=n {
            a[col][k] = a[col][k].clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for k in col..=n {
                    let t = a[col][k].clone() * f.clone();
                    a[r][k] = a[r][k].clone() - t;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_system() {
        let r = |n: i64| Ratio::from_integer(n);
        let m = vec![vec![r(2), r(-1)], vec![r(-3), r(2)]];
        // (1,0) = 2α1 + α2 for G2.
        let x = solve_row(&m, &[r(1), r(0)]).unwrap();
        assert_eq!(x, vec![r(2), r(1)]);
    }

    #[test]
    fn singular_is_none() {
        let r = |n: i64| Ratio::from_integer(n);
        let m = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert!(solve_row(&m, &[r(1), r(1)]).is_none());
    }
}
