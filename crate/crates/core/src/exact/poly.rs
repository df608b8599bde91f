//! Dense univariate polynomials over Q(i), lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::gaussian::{GaussianInt, GaussianRational, Height};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

impl Poly {
    /// Builds a polynomial, trimming trailing zeros. The zero polynomial has
    /// an empty coefficient list.
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial c * z^k.
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    /// Horner evaluation at an integer argument.
    pub fn eval_int(&self, n: &BigInt) -> GaussianRational {
        self.eval(&GaussianRational::from_bigint(n.clone()))
    }

    /// Evaluation at an integer for a polynomial with Gaussian-integer
    /// coefficients (denominators all 1). Panics otherwise.
    pub fn eval_int_gaussian(&self, n: &BigInt) -> GaussianInt {
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            assert!(c.den().is_one(), "eval_int_gaussian on non-integer polynomial");
            re = re * n + c.num_re();
            im = im * n + c.num_im();
        }
        GaussianInt::new(re, im)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale_int(&BigInt::from(k)))
                .collect(),
        )
    }

    /// Taylor recomposition p(z0 + z) by repeated synthetic division.
    pub fn shift(&self, z0: &GaussianRational) -> Poly {
        if self.is_zero() || z0.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut work = self.coeffs.clone();
        let mut out = vec![GaussianRational::zero(); n];
        for slot in out.iter_mut().take(n) {
            // divide work by (z - z0): remainder is the next Taylor coefficient
            for k in (0..work.len() - 1).rev() {
                let t = &work[k + 1] * z0;
                work[k] = &work[k] + &t;
            }
            *slot = work[0].clone();
            work.remove(0);
            if work.is_empty() {
                break;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Substitute z -> c*z.
    pub fn compose_scale(&self, c: &GaussianRational) -> Poly {
        let mut p = GaussianRational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for coeff in &self.coeffs {
            out.push(coeff * &p);
            p = &p * c;
        }
        Poly::new(out)
    }

    /// Substitute z -> z + k for integer k (used for recurrence index shifts).
    pub fn shift_int(&self, k: i64) -> Poly {
        self.shift(&GaussianRational::from_int(k))
    }

    /// Conjugate all coefficients.
    pub fn conj(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }

    /// True when every coefficient is a (Gaussian) integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.den().is_one())
    }

    /// Clears denominators: returns (q, d) with q = d * self, q integral,
    /// d a positive integer.
    pub fn clear_denominators(&self) -> (Poly, BigInt) {
        let mut d = BigInt::one();
        for c in &self.coeffs {
            d = d.lcm(c.den());
        }
        let q = Poly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let f = &d / c.den();
                    GaussianRational::new(c.num_re() * &f, c.num_im() * &f, BigInt::one())
                })
                .collect(),
        );
        (q, d)
    }

    /// Integer content of an integral polynomial: gcd over all real and
    /// imaginary parts (plain rational gcd, not the Gaussian gcd).
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c.num_re()).gcd(c.num_im());
        }
        g
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{c:?}*z^{k}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) - &rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out =
            vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Height for Poly {
    fn height(&self) -> u64 {
        self.coeffs.iter().map(|c| c.height()).max().unwrap_or(0)
    }
}

/// Falling factorial x(x-1)...(x-k+1) as a polynomial in x.
pub fn falling_factorial_poly(k: usize) -> Poly {
    let mut p = Poly::one();
    for j in 0..k {
        let lin = Poly::new(vec![
            GaussianRational::from_int(-(j as i64)),
            GaussianRational::one(),
        ]);
        p = &p * &lin;
    }
    p
}

/// Joint primitive normalization of a family of polynomials: clears all
/// denominators, divides by the common integer content, and makes the real
/// part of the leading coefficient of the last polynomial positive (its
/// imaginary part positive when the real part is zero).
pub fn normalize_family(polys: &[Poly]) -> Vec<Poly> {
    let mut den = BigInt::one();
    for p in polys {
        let (_, d) = p.clear_denominators();
        den = den.lcm(&d);
    }
    let scaled: Vec<Poly> = polys
        .iter()
        .map(|p| p.scale(&GaussianRational::from_bigint(den.clone())))
        .collect();
    let mut content = BigInt::zero();
    for p in &scaled {
        content = content.gcd(&p.int_content());
    }
    if content.is_zero() {
        content = BigInt::one();
    }
    let mut sign = BigInt::one();
    if let Some(last) = scaled.iter().rev().find(|p| !p.is_zero()) {
        let lead = last.leading().unwrap();
        if lead.num_re().is_negative()
            || (lead.num_re().is_zero() && lead.num_im().is_negative())
        {
            sign = -sign;
        }
    }
    let factor = GaussianRational::new(sign, BigInt::zero(), content);
    scaled.iter().map(|p| p.scale(&factor)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_i64s(cs)
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = p(&[1, 2]); // 1 + 2z
        let b = p(&[-1, 0, 3]); // -1 + 3z^2
        let ab = &a * &b;
        assert_eq!(ab, p(&[-1, -2, 3, 6]));
        let x = GaussianRational::from_ratio(1, 2);
        assert_eq!(ab.eval(&x), &a.eval(&x) * &b.eval(&x));
        assert_eq!((&a + &b).eval(&x), &a.eval(&x) + &b.eval(&x));
    }

    #[test]
    fn shift_recomposes() {
        // (1+z^2) shifted to 1: 2 + 2z + z^2
        let q = p(&[1, 0, 1]).shift(&GaussianRational::from_int(1));
        assert_eq!(q, p(&[2, 2, 1]));
        // shifting by z0 then -z0 gives the original back
        let orig = p(&[3, -1, 0, 7]);
        let z0 = GaussianRational::from_parts(1, 2, 3);
        let back = orig.shift(&z0).shift(&(-&z0));
        assert_eq!(back, orig);
    }

    #[test]
    fn derivative_and_falling() {
        assert_eq!(p(&[5, 3, 0, 2]).derivative(), p(&[3, 0, 6]));
        // x(x-1)(x-2) = x^3 - 3x^2 + 2x
        assert_eq!(falling_factorial_poly(3), p(&[0, 2, -3, 1]));
    }

    #[test]
    fn normalization_family() {
        let fam = vec![
            Poly::new(vec![GaussianRational::from_ratio(1, 2)]),
            Poly::new(vec![GaussianRational::from_ratio(-3, 4), GaussianRational::from_ratio(-1, 2)]),
        ];
        let norm = normalize_family(&fam);
        // common denominator 4, content 1, leading of last is -2 -> flip sign
        assert_eq!(norm[0], p(&[-2]));
        assert_eq!(norm[1], p(&[3, 2]));
    }
}
