//! Truncated power series in one indeterminate: elements of R[d]/(d^order).
//! The truncation order is carried by the value; all binary operations
//! require matching orders.

use std::fmt;

use crate::exact::ring::Ring;

#[derive(Clone, PartialEq, Eq)]
pub struct Jet<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Jet<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "jet order must be positive");
        Jet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn constant(c: T, order: usize) -> Self {
        assert!(order >= 1);
        let mut coeffs = Vec::with_capacity(order);
        let zero = c.ring_zero();
        coeffs.push(c);
        coeffs.resize(order, zero);
        Jet { coeffs }
    }

    /// c0 + c1*d truncated to `order`.
    pub fn linear(c0: T, c1: T, order: usize) -> Self {
        assert!(order >= 1);
        if order == 1 {
            return Jet::constant(c0, 1);
        }
        let zero = c0.ring_zero();
        let mut coeffs = Vec::with_capacity(order);
        coeffs.push(c0);
        coeffs.push(c1);
        coeffs.resize(order, zero);
        Jet { coeffs }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order());
        Jet {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.ring_add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order());
        Jet {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.ring_sub(b))
                .collect(),
        }
    }

    /// Truncated convolution; O(order^2) scalar products.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order();
        assert_eq!(n, rhs.order());
        let zero = self.coeffs[0].ring_zero();
        let mut out = vec![zero; n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.ring_is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                if b.ring_is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].ring_add(&a.ring_mul(b));
            }
        }
        Jet { coeffs: out }
    }

    pub fn scale(&self, c: &T) -> Self {
        Jet {
            coeffs: self.coeffs.iter().map(|a| a.ring_mul(c)).collect(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&T) -> S) -> Jet<S> {
        Jet {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<T: Ring> Ring for Jet<T> {
    fn ring_zero(&self) -> Self {
        Jet::constant(self.coeffs[0].ring_zero(), self.order())
    }
    fn ring_one(&self) -> Self {
        Jet::constant(self.coeffs[0].ring_one(), self.order())
    }
    fn ring_is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.ring_is_zero())
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
}

impl<T: fmt::Debug> fmt::Debug for Jet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Jet{:?}", self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::gaussian::GaussianRational;

    fn jet(cs: &[i64], order: usize) -> Jet<GaussianRational> {
        let mut v: Vec<GaussianRational> =
            cs.iter().map(|&c| GaussianRational::from_int(c)).collect();
        v.resize(order, GaussianRational::zero());
        Jet::new(v)
    }

    #[test]
    fn truncated_product() {
        let a = jet(&[1, 1], 3); // 1 + d
        let b = jet(&[2, 0, 5], 3);
        let ab = a.mul(&b);
        assert_eq!(ab, jet(&[2, 2, 5], 3));
    }

    #[test]
    fn associativity_distributivity_small() {
        // deterministic pseudorandom jets over Q(i), orders up to 8
        let mut state = 0x243f6a88u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 7) - 3
        };
        for order in 1..=8usize {
            let g = |next: &mut dyn FnMut() -> i64| {
                Jet::new(
                    (0..order)
                        .map(|_| GaussianRational::from_parts(next(), next(), next().abs() + 1))
                        .collect::<Vec<_>>(),
                )
            };
            let a = g(&mut next);
            let b = g(&mut next);
            let c = g(&mut next);
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }
    }
}
