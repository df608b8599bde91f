//! Small numeric helpers on big integers and rationals: outward-rounded
//! square roots, base-2 logarithms, dyadic rounding, float conversion.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// ceil(log2 |n|) for n != 0; 0 for n = 0.
pub fn ceil_log2_abs(n: &BigInt) -> u64 {
    if n.is_zero() {
        return 0;
    }
    let m = n.abs() - BigInt::one();
    m.bits()
}

/// Floor square root of a nonnegative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative());
    n.sqrt()
}

/// Rational u with sqrt(q) <= u <= sqrt(q) * (1 + 2^(1-guard_bits)); exact for
/// perfect squares of rationals.
pub fn sqrt_upper(q: &BigRational, guard_bits: u32) -> BigRational {
    assert!(!q.is_negative());
    if q.is_zero() {
        return BigRational::zero();
    }
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^g so the integer sqrt carries
    // guard_bits of precision (relative slack <= 2^-g since n*d >= 1).
    let nd = q.numer() * q.denom();
    let s = isqrt(&nd);
    if &s * &s == nd {
        return BigRational::new(s, q.denom().clone());
    }
    let g = guard_bits as u64;
    let scaled = &nd << (2 * g);
    let root = isqrt(&scaled) + BigInt::one();
    BigRational::new(root, q.denom() * (BigInt::one() << g))
}

/// Rational l with sqrt(q) * (1 - 2^(1-guard_bits)) <= l <= sqrt(q).
pub fn sqrt_lower(q: &BigRational, guard_bits: u32) -> BigRational {
    assert!(!q.is_negative());
    if q.is_zero() {
        return BigRational::zero();
    }
    let nd = q.numer() * q.denom();
    let s = isqrt(&nd);
    if &s * &s == nd {
        return BigRational::new(s, q.denom().clone());
    }
    let g = guard_bits as u64;
    let scaled = &nd << (2 * g);
    let root = isqrt(&scaled);
    BigRational::new(root, q.denom() * (BigInt::one() << g))
}

/// n/d as f64, robust against overflow of either part (heuristic use only).
pub fn ratio_to_f64(n: &BigInt, d: &BigInt) -> f64 {
    if n.is_zero() {
        return 0.0;
    }
    if let (Some(nf), Some(df)) = (n.to_f64(), d.to_f64()) {
        if nf.is_finite() && df.is_finite() && df != 0.0 {
            let r = nf / df;
            if r.is_finite() {
                return r;
            }
        }
    }
    // Shift both to ~60 bits and correct with the exponent difference.
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    let keep = 60i64;
    let ns = if nb > keep { n >> ((nb - keep) as u64) } else { n.clone() };
    let ds = if db > keep { d >> ((db - keep) as u64) } else { d.clone() };
    let base = ns.to_f64().unwrap_or(0.0) / ds.to_f64().unwrap_or(1.0);
    let exp = (nb - keep).max(0) - (db - keep).max(0);
    base * 2f64.powi(exp as i32)
}

/// Round q to the dyadic grid 2^-bits, toward nearest. |result - q| <= 2^-(bits+1).
pub fn round_dyadic(q: &BigRational, bits: u64) -> BigRational {
    let scaled = q * BigRational::from_integer(BigInt::one() << bits);
    let rounded = round_nearest(&scaled);
    BigRational::new(rounded, BigInt::one() << bits)
}

/// Nearest integer to q (ties toward +inf; exact rational comparison).
pub fn round_nearest(q: &BigRational) -> BigInt {
    let two = BigInt::from(2);
    let (num, den) = (q.numer(), q.denom());
    // floor((2*num + den) / (2*den))
    (two.clone() * num + den).div_floor(&(two * den))
}

/// A small-height rational upper bound on q (q > 0): keeps about `bits`
/// significant bits, rounding up.
pub fn rational_upper_short(q: &BigRational, bits: u64) -> BigRational {
    assert!(q.is_positive());
    let nb = q.numer().bits().max(q.denom().bits());
    if nb <= bits {
        return q.clone();
    }
    // write q ~= m / 2^k with m of `bits` bits, rounding m up
    let two = BigInt::from(2);
    let mut k: i64 = 0;
    let mut scaled = q.clone();
    let hi = BigRational::from_integer(BigInt::one() << bits);
    let one = BigRational::from_integer(BigInt::one() << (bits - 1));
    while scaled >= hi {
        scaled = scaled / BigRational::from_integer(two.clone());
        k -= 1;
    }
    while scaled < one {
        scaled = scaled * BigRational::from_integer(two.clone());
        k += 1;
    }
    let m = scaled.ceil().to_integer();
    if k >= 0 {
        BigRational::new(m, BigInt::one() << (k as u64))
    } else {
        BigRational::from_integer(m << ((-k) as u64))
    }
}

/// Same, rounding down.
pub fn rational_lower_short(q: &BigRational, bits: u64) -> BigRational {
    assert!(q.is_positive());
    let nb = q.numer().bits().max(q.denom().bits());
    if nb <= bits {
        return q.clone();
    }
    let two = BigInt::from(2);
    let mut k: i64 = 0;
    let mut scaled = q.clone();
    let hi = BigRational::from_integer(BigInt::one() << bits);
    let one = BigRational::from_integer(BigInt::one() << (bits - 1));
    while scaled >= hi {
        scaled = scaled / BigRational::from_integer(two.clone());
        k -= 1;
    }
    while scaled < one {
        scaled = scaled * BigRational::from_integer(two.clone());
        k += 1;
    }
    let m = scaled.floor().to_integer();
    if k >= 0 {
        BigRational::new(m, BigInt::one() << (k as u64))
    } else {
        BigRational::from_integer(m << ((-k) as u64))
    }
}

/// 10^e as a BigRational for signed e.
pub fn pow10(e: i64) -> BigRational {
    let ten = BigInt::from(10);
    if e >= 0 {
        BigRational::from_integer(ten.pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), ten.pow((-e) as u32))
    }
}

/// Integer power of a rational with signed exponent (square and multiply).
pub fn rat_pow(q: &BigRational, e: i64) -> BigRational {
    if e < 0 {
        return rat_pow(&q.recip(), -e);
    }
    let mut e = e as u64;
    let mut base = q.clone();
    let mut acc = BigRational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// floor(log10 |q|) for q != 0, by exact comparison.
pub fn floor_log10_abs(q: &BigRational) -> i64 {
    assert!(!q.is_zero());
    let a = q.abs();
    // initial guess from bit lengths: log10 x ~ (bits(n)-bits(d)) * log10(2)
    let guess = ((a.numer().bits() as i64 - a.denom().bits() as i64) as f64 * 0.30103) as i64;
    let mut e = guess - 2;
    while pow10(e + 1) <= a {
        e += 1;
    }
    while pow10(e) > a {
        e -= 1;
    }
    e
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_log2_examples() {
        assert_eq!(ceil_log2_abs(&big(0)), 0);
        assert_eq!(ceil_log2_abs(&big(1)), 0);
        assert_eq!(ceil_log2_abs(&big(2)), 1);
        assert_eq!(ceil_log2_abs(&big(3)), 2);
        assert_eq!(ceil_log2_abs(&big(4)), 2);
        assert_eq!(ceil_log2_abs(&big(5)), 3);
        assert_eq!(ceil_log2_abs(&big(-12)), 4);
    }

    #[test]
    fn sqrt_bounds_bracket() {
        for (n, d) in [(2i64, 1i64), (3, 7), (123456, 321), (1, 1000000)] {
            let q = rat(n, d);
            let up = sqrt_upper(&q, 20);
            let lo = sqrt_lower(&q, 20);
            assert!(&up * &up >= q, "upper too small for {n}/{d}");
            assert!(&lo * &lo <= q, "lower too big for {n}/{d}");
            // relative gap below 2^-18
            let gap = (&up - &lo) / &up;
            assert!(gap < rat(1, 1 << 18));
        }
        // exactness on perfect squares
        assert_eq!(sqrt_upper(&rat(9, 4), 8), rat(3, 2));
        assert_eq!(sqrt_lower(&rat(9, 4), 8), rat(3, 2));
    }

    #[test]
    fn dyadic_rounding() {
        let q = rat(1, 3);
        let r = round_dyadic(&q, 10);
        assert!((&r - &q).abs() <= rat(1, 2048));
        assert_eq!(r.denom().bits(), 11); // 2^10 denominator
    }

    #[test]
    fn log10_floor() {
        assert_eq!(floor_log10_abs(&rat(999, 1)), 2);
        assert_eq!(floor_log10_abs(&rat(1000, 1)), 3);
        assert_eq!(floor_log10_abs(&rat(1, 100)), -2);
        assert_eq!(floor_log10_abs(&rat(-35, 10)), 0);
    }

    #[test]
    fn short_rational_bounds() {
        let q = rat(1000003, 999983);
        let up = rational_upper_short(&q, 16);
        let lo = rational_lower_short(&q, 16);
        assert!(up >= q && lo <= q);
        assert!(up.numer().bits() <= 17);
    }

    #[test]
    fn float_ratio() {
        let r = ratio_to_f64(&big(1), &big(3));
        assert!((r - 1.0 / 3.0).abs() < 1e-12);
        let huge = BigInt::from(10).pow(300) * 7;
        let r2 = ratio_to_f64(&huge, &BigInt::from(10).pow(300));
        assert!((r2 - 7.0).abs() < 1e-9);
    }
}
