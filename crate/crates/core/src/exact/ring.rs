//! Minimal commutative-ring interface shared by the scalar types.
//!
//! `ring_zero`/`ring_one` take `&self` so that types carrying structural
//! parameters (jets with a truncation order) can mint constants of the right
//! shape.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::gaussian::{GaussianInt, GaussianRational};
use crate::exact::poly::Poly;

pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn ring_zero(&self) -> Self;
    fn ring_one(&self) -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
}

impl Ring for BigInt {
    fn ring_zero(&self) -> Self {
        BigInt::zero()
    }
    fn ring_one(&self) -> Self {
        BigInt::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Ring for GaussianInt {
    fn ring_zero(&self) -> Self {
        GaussianInt::zero()
    }
    fn ring_one(&self) -> Self {
        GaussianInt::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul_ref(rhs)
    }
}

impl Ring for GaussianRational {
    fn ring_zero(&self) -> Self {
        GaussianRational::zero()
    }
    fn ring_one(&self) -> Self {
        GaussianRational::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Ring for Poly {
    fn ring_zero(&self) -> Self {
        Poly::zero()
    }
    fn ring_one(&self) -> Self {
        Poly::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}
