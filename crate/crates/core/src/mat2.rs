//! 2x2 matrices over a commutative ring.

use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The operations a 2x2 matrix needs from its entries.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Row-major 2x2 matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2<R> {
    pub entries: [[R; 2]; 2],
}

impl<R: Ring> Mat2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Mat2 {
            entries: [[a, b], [c, d]],
        }
    }

    pub fn identity() -> Self {
        Self::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.entries[row][col]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let [[a, b], [c, d]] = &self.entries;
        let [[e, f], [g, h]] = &rhs.entries;
        Self::new(
            a.mul(e).add(&b.mul(g)),
            a.mul(f).add(&b.mul(h)),
            c.mul(e).add(&d.mul(g)),
            c.mul(f).add(&d.mul(h)),
        )
    }

    pub fn det(&self) -> R {
        let [[a, b], [c, d]] = &self.entries;
        a.mul(d).sub(&b.mul(c))
    }

    pub fn trace(&self) -> R {
        self.entries[0][0].add(&self.entries[1][1])
    }

    /// `self - I`.
    pub fn sub_identity(&self) -> Self {
        let [[a, b], [c, d]] = &self.entries;
        Self::new(a.sub(&R::one()), b.clone(), c.clone(), d.sub(&R::one()))
    }

    pub fn neg(&self) -> Self {
        let [[a, b], [c, d]] = &self.entries;
        Self::new(a.neg(), b.neg(), c.neg(), d.neg())
    }

    /// `self^exp` by binary powering.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::identity();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

impl<R: fmt::Debug> fmt::Debug for Mat2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entry(&self.entries[0])
            .entry(&self.entries[1])
            .finish()
    }
}

impl<R: fmt::Display> fmt::Display for Mat2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.entries;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(a: i64, b: i64, c: i64, d: i64) -> Mat2<BigInt> {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    #[test]
    fn pow_matches_repeated_product() {
        let m = int(2, 1, 1, 1);
        let mut slow = Mat2::identity();
        for k in 0..20u64 {
            assert_eq!(m.pow(k), slow);
            slow = slow.mul(&m);
        }
    }

    #[test]
    fn det_and_trace() {
        let m = int(5, 3, 3, 2);
        assert_eq!(m.det(), BigInt::from(1));
        assert_eq!(m.trace(), BigInt::from(7));
        assert_eq!(m.sub_identity(), int(4, 3, 3, 1));
        assert_eq!(m.neg(), int(-5, -3, -3, -2));
    }

    #[test]
    fn ab_cubed_is_minus_identity() {
        let a = int(1, 1, 0, 1);
        let b = int(1, 0, -1, 1);
        assert_eq!(a.mul(&b).pow(3), int(-1, 0, 0, -1));
    }
}
