//! Closed-form determinant of `Q(m1, -m2, n, l)`.
//!
//! At `t = -1` the family braid maps to `(-1)^l C^n` with
//! `C = [[1 + m1 m2, m1], [m2, 1]]`, whose characteristic polynomial is
//! `x^2 - (2 + m1 m2) x + 1`. With `λ±` its roots,
//!
//! ```text
//! det = | λ+^n + λ-^n + (-1)^(l+1) 2 |
//! ```
//!
//! The power sum `a_n = λ+^n + λ-^n` is an integer satisfying
//! `a_n = (2 + m1 m2) a_{n-1} - a_{n-2}` with `a_0 = 2`, `a_1 = 2 + m1 m2`, so
//! no square roots are ever formed.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use crate::braid::TghwParams;
use crate::burau::IntMat;
use crate::mat2::Mat2;

/// The power sums `a_0..=a_n` for a fixed product `m1 m2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceSequence {
    m1m2: u64,
    values: Vec<BigInt>,
}

impl TraceSequence {
    pub fn new(m1m2: u64, n: u64) -> Self {
        let s = BigInt::from(m1m2) + 2u32;
        let mut values = Vec::with_capacity(n as usize + 1);
        values.push(BigInt::from(2));
        if n >= 1 {
            values.push(s.clone());
        }
        for k in 2..=n as usize {
            let next = &s * &values[k - 1] - &values[k - 2];
            values.push(next);
        }
        TraceSequence { m1m2, values }
    }

    pub fn m1m2(&self) -> u64 {
        self.m1m2
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn last(&self) -> &BigInt {
        self.values.last().expect("a_0 always present")
    }
}

/// `λ+^n + λ-^n` for the roots of `x^2 - (2 + m1m2) x + 1`, i.e. `tr(C^n)`.
pub fn trace_power(m1m2: u64, n: u64) -> BigInt {
    let s = BigInt::from(m1m2) + 2u32;
    let mut prev = BigInt::from(2);
    if n == 0 {
        return prev;
    }
    let mut cur = s.clone();
    for _ in 1..n {
        let next = &s * &cur - &prev;
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// The signed quantity inside the absolute value:
/// `trace_power(m1 m2, n) + (-1)^(l+1) 2`.
pub fn det_closed_form_signed(p: &TghwParams) -> BigInt {
    let trace = trace_power(p.m1m2(), u64::from(p.n()));
    if p.l() % 2 == 0 {
        trace - 2
    } else {
        trace + 2
    }
}

/// Determinant of `Q(m1, -m2, n, l)` from the closed form.
pub fn det_closed_form(p: &TghwParams) -> BigUint {
    det_closed_form_signed(p)
        .abs()
        .to_biguint()
        .expect("nonnegative")
}

/// `C = [[1 + m1 m2, m1], [m2, 1]]`.
pub fn block_matrix(p: &TghwParams) -> IntMat {
    Mat2::new(
        BigInt::from(p.m1m2()) + 1,
        p.m1().into(),
        p.m2().into(),
        BigInt::one(),
    )
}

/// `(-1)^l C^n`, the family braid's Burau image at `t = -1`.
pub fn oracle_matrix(p: &TghwParams) -> IntMat {
    let cn = block_matrix(p).pow(u64::from(p.n()));
    assert!(cn.det().is_one(), "det(C^n) must be 1");
    if p.l() % 2 == 0 {
        cn
    } else {
        cn.neg()
    }
}

/// `|det((-1)^l C^n - I)|` by integer matrix powering.
pub fn matrix_oracle(p: &TghwParams) -> BigUint {
    oracle_matrix(p)
        .sub_identity()
        .det()
        .abs()
        .to_biguint()
        .expect("nonnegative")
}
