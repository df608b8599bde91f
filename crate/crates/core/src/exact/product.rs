//! Product trees for ordered matrix products with a shared denominator.
//!
//! The factors of an ordered product factor(hi-1) * ... * factor(lo) are
//! combined by balanced recursion; the numerator matrices and the scalar
//! denominators are multiplied in separate trees and no gcd is taken at
//! internal nodes. Subtrees combine associatively, so the two halves may be
//! computed in parallel; the factor order itself is never changed.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::gaussian::GaussianInt;
use crate::exact::matrix::Matrix;

/// Ranges at most this long are multiplied sequentially; above it the range
/// splits in two. Exposed for tuning; 16 keeps leaf overhead low without
/// unbalancing the tree.
pub const PRODUCT_TREE_BASE: u64 = 16;

/// An ordered product P/d with an integer-matrix numerator and a single
/// integer denominator; the fraction is in general not reduced.
#[derive(Clone, Debug)]
pub struct FactoredProduct {
    pub numer: Matrix<GaussianInt>,
    pub den: BigInt,
}

impl FactoredProduct {
    pub fn identity(dim: usize) -> Self {
        FactoredProduct {
            numer: Matrix::identity_like(dim, &GaussianInt::zero()),
            den: BigInt::one(),
        }
    }

    /// high * low, combining numerators and denominators separately.
    pub fn combine(high: &Self, low: &Self) -> Self {
        FactoredProduct {
            numer: high.numer.mul(&low.numer),
            den: &high.den * &low.den,
        }
    }
}

/// Computes factor(hi-1) * ... * factor(lo) as a `FactoredProduct` of square
/// matrices of dimension `dim`. The empty range yields the identity.
pub fn product_tree<F>(factor: &F, lo: u64, hi: u64, dim: usize) -> Result<FactoredProduct>
where
    F: Fn(u64) -> (Matrix<GaussianInt>, BigInt) + Sync,
{
    product_tree_checked(factor, lo, hi, dim, &|_| true)
}

/// Like `product_tree`, but `check` is evaluated on every internal node and
/// leaf; a false result aborts with a structural-invariant error. Used by the
/// sum-augmented recurrences, whose nodes must keep the rightmost column
/// equal to (0, ..., 0, den).
pub fn product_tree_checked<F, C>(
    factor: &F,
    lo: u64,
    hi: u64,
    dim: usize,
    check: &C,
) -> Result<FactoredProduct>
where
    F: Fn(u64) -> (Matrix<GaussianInt>, BigInt) + Sync,
    C: Fn(&FactoredProduct) -> bool + Sync,
{
    if lo > hi {
        return Err(Error::InvalidInput(format!("bad product range {lo}..{hi}")));
    }
    #[cfg(feature = "parallel")]
    {
        product_tree_par(factor, lo, hi, dim, check)
    }
    #[cfg(not(feature = "parallel"))]
    {
        product_tree_seq_impl(factor, lo, hi, dim, check)
    }
}

/// Sequential variant, always available (benchmarks compare the two).
pub fn product_tree_seq<F>(factor: &F, lo: u64, hi: u64, dim: usize) -> Result<FactoredProduct>
where
    F: Fn(u64) -> (Matrix<GaussianInt>, BigInt) + Sync,
{
    product_tree_seq_impl(factor, lo, hi, dim, &|_| true)
}

fn product_tree_seq_impl<F, C>(
    factor: &F,
    lo: u64,
    hi: u64,
    dim: usize,
    check: &C,
) -> Result<FactoredProduct>
where
    F: Fn(u64) -> (Matrix<GaussianInt>, BigInt) + Sync,
    C: Fn(&FactoredProduct) -> bool + Sync,
{
    if hi - lo <= PRODUCT_TREE_BASE {
        return base_case(factor, lo, hi, dim, check);
    }
    let mid = lo + (hi - lo) / 2;
    let low = product_tree_seq_impl(factor, lo, mid, dim, check)?;
    let high = product_tree_seq_impl(factor, mid, hi, dim, check)?;
    combine_checked(high, low, check)
}

#[cfg(feature = "parallel")]
fn product_tree_par<F, C>(
    factor: &F,
    lo: u64,
    hi: u64,
    dim: usize,
    check: &C,
) -> Result<FactoredProduct>
where
    F: Fn(u64) -> (Matrix<GaussianInt>, BigInt) + Sync,
    C: Fn(&FactoredProduct) -> bool + Sync,
{
    if hi - lo <= PRODUCT_TREE_BASE {
        return base_case(factor, lo, hi, dim, check);
    }
    let mid = lo + (hi - lo) / 2;
    let (low, high) = rayon::join(
        || product_tree_par(factor, lo, mid, dim, check),
        || product_tree_par(factor, mid, hi, dim, check),
    );
    combine_checked(high?, low?, check)
}

fn base_case<F, C>(
    factor: &F,
    lo: u64,
    hi: u64,
    dim: usize,
    check: &C,
) -> Result<FactoredProduct>
where
    F: Fn(u64) -> (Matrix<GaussianInt>, BigInt) + Sync,
    C: Fn(&FactoredProduct) -> bool + Sync,
{
    let mut acc = FactoredProduct::identity(dim);
    for n in lo..hi {
        let (m, d) = factor(n);
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: m.rows().max(m.cols()),
            });
        }
        if d.is_zero() {
            return Err(Error::InvalidInput(format!("zero denominator at factor {n}")));
        }
        let leaf = FactoredProduct { numer: m, den: d };
        if !check(&leaf) {
            return Err(Error::Invariant("product-tree node structure violated".into()));
        }
        acc = FactoredProduct::combine(&leaf, &acc);
    }
    if !check(&acc) {
        return Err(Error::Invariant("product-tree node structure violated".into()));
    }
    Ok(acc)
}

fn combine_checked<C>(high: FactoredProduct, low: FactoredProduct, check: &C) -> Result<FactoredProduct>
where
    C: Fn(&FactoredProduct) -> bool + Sync,
{
    let node = FactoredProduct::combine(&high, &low);
    if !check(&node) {
        return Err(Error::Invariant("product-tree node structure violated".into()));
    }
    Ok(node)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scalar_factor(n: u64) -> (Matrix<GaussianInt>, BigInt) {
        (
            Matrix::new(1, 1, vec![GaussianInt::from_bigint(BigInt::from(n + 1))]),
            BigInt::one(),
        )
    }

    #[test]
    fn empty_range_is_identity() {
        let p = product_tree(&scalar_factor, 5, 5, 1).unwrap();
        assert_eq!(p.numer, Matrix::identity_like(1, &GaussianInt::zero()));
        assert_eq!(p.den, BigInt::one());
    }

    #[test]
    fn factorial_product() {
        let p = product_tree(&scalar_factor, 0, 5, 1).unwrap();
        assert_eq!(p.numer[(0, 0)].re, BigInt::from(120));
        assert_eq!(p.den, BigInt::one());
    }

    #[test]
    fn matches_naive_ordered_product() {
        // 2x2 factors with order-sensitive entries
        let factor = |n: u64| {
            let n = n as i64;
            (
                Matrix::new(
                    2,
                    2,
                    vec![
                        GaussianInt::from_i64(n + 1, 1),
                        GaussianInt::from_i64(-n, 0),
                        GaussianInt::from_i64(2, -n),
                        GaussianInt::from_i64(1, 0),
                    ],
                ),
                BigInt::from(n + 2),
            )
        };
        for len in [1u64, 2, 15, 16, 17, 64, 100] {
            let tree = product_tree(&factor, 0, len, 2).unwrap();
            let seq = product_tree_seq(&factor, 0, len, 2).unwrap();
            let mut naive = FactoredProduct::identity(2);
            for n in 0..len {
                let (m, d) = factor(n);
                naive = FactoredProduct::combine(&FactoredProduct { numer: m, den: d }, &naive);
            }
            assert_eq!(tree.numer, naive.numer, "len {len}");
            assert_eq!(tree.den, naive.den);
            assert_eq!(seq.numer, naive.numer);
            assert_eq!(seq.den, naive.den);
        }
    }
}
