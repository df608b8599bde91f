//! Gaussian integers and Gaussian rationals.
//!
//! A `GaussianRational` is stored as `(num_re + i*num_im) / den` with a single
//! shared positive denominator and `gcd(num_re, num_im, den) = 1`. This keeps
//! heights tight and makes the height of a value well defined.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::num::{ceil_log2_abs, sqrt_lower, sqrt_upper};

/// Exact element of Z[i].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussianInt { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussianInt::new(BigInt::from(re), BigInt::from(im))
    }

    pub fn zero() -> Self {
        GaussianInt::new(BigInt::zero(), BigInt::zero())
    }

    pub fn one() -> Self {
        GaussianInt::new(BigInt::one(), BigInt::zero())
    }

    pub fn from_bigint(re: BigInt) -> Self {
        GaussianInt::new(re, BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianInt::new(self.re.clone(), -self.im.clone())
    }

    /// |x|^2 = re^2 + im^2, an ordinary integer.
    pub fn norm2(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        GaussianInt::new(&self.re * k, &self.im * k)
    }

    /// Complex product with Karatsuba's three-multiplication formula.
    /// Pure real/imaginary operands fall back to fewer multiplications;
    /// real factors are by far the most common case in product trees.
    pub fn mul_ref(&self, rhs: &Self) -> Self {
        if self.im.is_zero() {
            if rhs.im.is_zero() {
                return GaussianInt::new(&self.re * &rhs.re, BigInt::zero());
            }
            return GaussianInt::new(&self.re * &rhs.re, &self.re * &rhs.im);
        }
        if rhs.im.is_zero() {
            return GaussianInt::new(&self.re * &rhs.re, &self.im * &rhs.re);
        }
        // (a+bi)(c+di): ac, bd, (a+b)(c+d)
        let ac = &self.re * &rhs.re;
        let bd = &self.im * &rhs.im;
        let s = (&self.re + &self.im) * (&rhs.re + &rhs.im);
        let im = s - &ac - &bd;
        GaussianInt::new(ac - bd, im)
    }
}

impl fmt::Debug for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i", self.re, self.im)
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        self.mul_ref(rhs)
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt::new(-self.re.clone(), -self.im.clone())
    }
}

/// Exact element of Q(i): (num_re + i*num_im) / den, den > 0, content 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    num_re: BigInt,
    num_im: BigInt,
    den: BigInt,
}

impl GaussianRational {
    pub fn new(num_re: BigInt, num_im: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut q = GaussianRational { num_re, num_im, den };
        q.normalize();
        q
    }

    fn normalize(&mut self) {
        if self.num_re.is_zero() && self.num_im.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.sign() == Sign::Minus {
            self.num_re = -std::mem::take(&mut self.num_re);
            self.num_im = -std::mem::take(&mut self.num_im);
            self.den = -std::mem::take(&mut self.den);
        }
        let g = self.num_re.gcd(&self.num_im).gcd(&self.den);
        if !g.is_one() {
            self.num_re = &self.num_re / &g;
            self.num_im = &self.num_im / &g;
            self.den = &self.den / &g;
        }
    }

    pub fn zero() -> Self {
        GaussianRational {
            num_re: BigInt::zero(),
            num_im: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            num_re: BigInt::one(),
            num_im: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational {
            num_re: BigInt::from(n),
            num_im: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational::new(BigInt::from(num), BigInt::zero(), BigInt::from(den))
    }

    pub fn from_parts(re: i64, im: i64, den: i64) -> Self {
        GaussianRational::new(BigInt::from(re), BigInt::from(im), BigInt::from(den))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        GaussianRational {
            num_re: n,
            num_im: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn from_gaussian_int(g: &GaussianInt) -> Self {
        GaussianRational {
            num_re: g.re.clone(),
            num_im: g.im.clone(),
            den: BigInt::one(),
        }
    }

    pub fn from_rationals(re: &BigRational, im: &BigRational) -> Self {
        let den = re.denom().lcm(im.denom());
        let nre = re.numer() * (&den / re.denom());
        let nim = im.numer() * (&den / im.denom());
        GaussianRational::new(nre, nim, den)
    }

    pub fn from_real(re: &BigRational) -> Self {
        GaussianRational::new(re.numer().clone(), BigInt::zero(), re.denom().clone())
    }

    pub fn num_re(&self) -> &BigInt {
        &self.num_re
    }

    pub fn num_im(&self) -> &BigInt {
        &self.num_im
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num_re.is_zero() && self.num_im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num_im.is_zero() && self.den.is_one() && self.num_re.is_one()
    }

    pub fn is_real(&self) -> bool {
        self.num_im.is_zero()
    }

    pub fn re(&self) -> BigRational {
        BigRational::new(self.num_re.clone(), self.den.clone())
    }

    pub fn im(&self) -> BigRational {
        BigRational::new(self.num_im.clone(), self.den.clone())
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            num_re: self.num_re.clone(),
            num_im: -self.num_im.clone(),
            den: self.den.clone(),
        }
    }

    /// |x|^2 as an exact rational.
    pub fn abs2(&self) -> BigRational {
        let n = &self.num_re * &self.num_re + &self.num_im * &self.num_im;
        BigRational::new(n, &self.den * &self.den)
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        let n2 = &self.num_re * &self.num_re + &self.num_im * &self.num_im;
        GaussianRational::new(&self.den * &self.num_re, -(&self.den * &self.num_im), n2)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = GaussianRational::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        GaussianRational::new(&self.num_re * k, &self.num_im * k, self.den.clone())
    }

    /// f64 approximation (heuristic use only).
    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(
            crate::exact::num::ratio_to_f64(&self.num_re, &self.den),
            crate::exact::num::ratio_to_f64(&self.num_im, &self.den),
        )
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}i)/{}", self.num_re, self.num_im, self.den)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.num_re * &rhs.den + &rhs.num_re * &self.den,
            &self.num_im * &rhs.den + &rhs.num_im * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.num_re * &rhs.den - &rhs.num_re * &self.den,
            &self.num_im * &rhs.den - &rhs.num_im * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        let a = GaussianInt::new(self.num_re.clone(), self.num_im.clone());
        let b = GaussianInt::new(rhs.num_re.clone(), rhs.num_im.clone());
        let p = a.mul_ref(&b);
        GaussianRational::new(p.re, p.im, &self.den * &rhs.den)
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.recip()
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            num_re: -self.num_re.clone(),
            num_im: -self.num_im.clone(),
            den: self.den.clone(),
        }
    }
}

/// Bit-size of an object: the maximum over its integers of ceil(log2 |n|).
pub trait Height {
    fn height(&self) -> u64;
}

impl Height for BigInt {
    fn height(&self) -> u64 {
        ceil_log2_abs(self)
    }
}

impl Height for GaussianInt {
    fn height(&self) -> u64 {
        self.re.height().max(self.im.height())
    }
}

impl Height for GaussianRational {
    fn height(&self) -> u64 {
        self.num_re
            .height()
            .max(self.num_im.height())
            .max(self.den.height())
    }
}

/// Rational upper bound on |x| with relative slack at most 2^(1-guard_bits);
/// exact when |x| is rational (in particular for real or purely imaginary x
/// and Pythagorean cases).
pub fn abs_upper(x: &GaussianRational, guard_bits: u32) -> BigRational {
    assert!(guard_bits >= 1);
    if x.is_zero() {
        return BigRational::zero();
    }
    if x.num_im.is_zero() {
        return BigRational::new(x.num_re.abs(), x.den.clone());
    }
    if x.num_re.is_zero() {
        return BigRational::new(x.num_im.abs(), x.den.clone());
    }
    sqrt_upper(&x.abs2(), guard_bits)
}

/// Rational lower bound on |x|, same contract as `abs_upper` from below.
pub fn abs_lower(x: &GaussianRational, guard_bits: u32) -> BigRational {
    assert!(guard_bits >= 1);
    if x.is_zero() {
        return BigRational::zero();
    }
    if x.num_im.is_zero() {
        return BigRational::new(x.num_re.abs(), x.den.clone());
    }
    if x.num_re.is_zero() {
        return BigRational::new(x.num_im.abs(), x.den.clone());
    }
    sqrt_lower(&x.abs2(), guard_bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(re: i64, im: i64, den: i64) -> GaussianRational {
        GaussianRational::from_parts(re, im, den)
    }

    #[test]
    fn normalization() {
        let x = GaussianRational::new(BigInt::from(2), BigInt::from(4), BigInt::from(-6));
        assert_eq!(x, q(-1, -2, 3));
        assert_eq!(x.den(), &BigInt::from(3));
        assert!(GaussianRational::new(BigInt::zero(), BigInt::zero(), BigInt::from(7)).is_zero());
    }

    #[test]
    fn field_ops() {
        let a = q(1, 2, 3);
        let b = q(-2, 1, 5);
        let ab = &a * &b;
        assert_eq!(ab, q(-4, -3, 15));
        let back = &ab / &b;
        assert_eq!(back, a);
        assert_eq!(&(&a - &a) + &b, b);
        assert_eq!(&a.recip() * &a, GaussianRational::one());
    }

    #[test]
    fn karatsuba_matches_naive() {
        for (a, b, c, d) in [(3i64, -7, 11, 5), (0, 4, -3, 2), (6, 0, 0, -9), (1, 1, 1, 1)] {
            let x = GaussianInt::from_i64(a, b);
            let y = GaussianInt::from_i64(c, d);
            let p = x.mul_ref(&y);
            assert_eq!(p.re, BigInt::from(a * c - b * d));
            assert_eq!(p.im, BigInt::from(a * d + b * c));
        }
    }

    #[test]
    fn height_examples() {
        // 3/4 -> 2 (ceil log2 of 3 and of 4 are both 2)
        assert_eq!(q(3, 0, 4).height(), 2);
        assert_eq!(GaussianRational::zero().height(), 0);
        // (5+12i)/7 -> 4
        assert_eq!(q(5, 12, 7).height(), 4);
    }

    #[test]
    fn height_submultiplicative_slack() {
        // height(x*y) <= height(x) + height(y) + 2
        let cases = [
            (q(3, 5, 7), q(-11, 2, 9)),
            (q(1, 1, 1), q(1, 1, 1)),
            (q(255, -255, 256), q(255, 255, 254)),
        ];
        for (x, y) in cases {
            let p = &x * &y;
            assert!(p.height() <= x.height() + y.height() + 2);
        }
    }

    #[test]
    fn abs_bounds() {
        // Pythagorean: exact
        assert_eq!(abs_upper(&q(3, 4, 1), 12), BigRational::from_integer(BigInt::from(5)));
        assert_eq!(abs_upper(&GaussianRational::zero(), 12), BigRational::zero());
        // 1+i with 12 guard bits: sqrt(2) <= u <= 1.4146
        let u = abs_upper(&q(1, 1, 1), 12);
        let lo = BigRational::new(BigInt::from(14142135u64), BigInt::from(10000000u64));
        let hi = BigRational::new(BigInt::from(14146u64), BigInt::from(10000u64));
        assert!(u >= lo && u <= hi, "u = {u}");
        let l = abs_lower(&q(1, 1, 1), 12);
        assert!(l <= lo && l >= BigRational::new(BigInt::from(14u64), BigInt::from(10u64)));
    }
}
