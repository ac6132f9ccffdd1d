//! Lucas and m-Lucas numbers, and the determinant identities they satisfy
//! on the weaving, hybrid weaving, torus and `(1, -5)` families.
//!
//! `L_{m,n} = Φ^n + (-Φ^-1)^n` with `Φ = (m + sqrt(m^2 + 4)) / 2` is the power
//! sum of the roots of `x^2 - m x - 1`; it is computed here by the integer
//! recurrence `L_{m,n} = m L_{m,n-1} + L_{m,n-2}`, `L_{m,0} = 2`, `L_{m,1} = m`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use num_bigint::BigInt;

use crate::braid::TghwParams;
use crate::closed_form::det_closed_form;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LucasParams {
    m: u64,
    n: u64,
}

impl LucasParams {
    /// `None` when `m == 0`.
    pub fn new(m: u64, n: u64) -> Option<Self> {
        (m >= 1).then_some(LucasParams { m, n })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn value(&self) -> BigInt {
        m_lucas(self.m, self.n)
    }
}

/// `L_n`: 2, 1, 3, 4, 7, 11, ...
pub fn lucas(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::from(2), BigInt::from(1));
    for _ in 0..n {
        let next = &a + &b;
        a = core::mem::replace(&mut b, next);
    }
    a
}

/// `L_{m,n}`.
pub fn m_lucas(m: u64, n: u64) -> BigInt {
    let m = BigInt::from(m);
    let (mut a, mut b) = (BigInt::from(2), m.clone());
    for _ in 0..n {
        let next = &m * &b + &a;
        a = core::mem::replace(&mut b, next);
    }
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    /// `det W(3,n) = L_{2n} - 2`.
    Weaving,
    /// `det Q(m,-m,n,0) = L_{m,2n} - 2`, `det Q(m,-m,n,±1) = L_{m,2n} + 2`.
    Hybrid,
    /// `det T(2,q) = q`.
    Torus,
    /// `det Q(1,-5,n,l) = L_{4n} + (-1)^(l+1) 2`.
    OneFive,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Weaving => "weaving",
            Identity::Hybrid => "hybrid",
            Identity::Torus => "torus",
            Identity::OneFive => "one-five",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One evaluated instance of an identity: `left` is the closed-form
/// determinant, `right` the sequence expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub params: TghwParams,
    pub left: BigInt,
    pub right: BigInt,
}

impl IdentityCheck {
    fn new(params: TghwParams, right: BigInt) -> Self {
        IdentityCheck {
            params,
            left: det_closed_form(&params).into(),
            right,
        }
    }

    pub fn passed(&self) -> bool {
        self.left == self.right
    }
}

/// All checks of one identity over a grid, sorted by parameter tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: Identity,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    fn new(identity: Identity, mut checks: Vec<IdentityCheck>) -> Self {
        checks.sort_by_key(|c| c.params);
        IdentityReport { identity, checks }
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> + '_ {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed()).count()
    }

    pub fn is_clean(&self) -> bool {
        self.failures().next().is_none()
    }
}

fn params(m1: u32, m2: u32, n: u32, l: i32) -> TghwParams {
    TghwParams::new(m1, m2, n, l).expect("grid bounds are positive")
}

pub fn check_identity_weaving(n_max: u32) -> IdentityReport {
    let checks = (1..=n_max)
        .map(|n| IdentityCheck::new(params(1, 1, n, 0), lucas(2 * u64::from(n)) - 2))
        .collect();
    IdentityReport::new(Identity::Weaving, checks)
}

pub fn check_identity_hybrid(m_max: u32, n_max: u32) -> IdentityReport {
    let mut checks = Vec::new();
    for m in 1..=m_max {
        for n in 1..=n_max {
            let l_m_2n = m_lucas(u64::from(m), 2 * u64::from(n));
            checks.push(IdentityCheck::new(params(m, m, n, 0), &l_m_2n - 2));
            for l in [-1, 1] {
                checks.push(IdentityCheck::new(params(m, m, n, l), &l_m_2n + 2));
            }
        }
    }
    IdentityReport::new(Identity::Hybrid, checks)
}

pub fn check_identity_torus(q_max: u32) -> IdentityReport {
    let checks = (1..=q_max)
        .map(|q| IdentityCheck::new(params(q, 1, 1, 0), q.into()))
        .collect();
    IdentityReport::new(Identity::Torus, checks)
}

pub fn check_identity_one_five(n_max: u32, l_range: RangeInclusive<i32>) -> IdentityReport {
    let mut checks = Vec::new();
    for n in 1..=n_max {
        let l_4n = lucas(4 * u64::from(n));
        for l in l_range.clone() {
            let right = if l % 2 == 0 { &l_4n - 2 } else { &l_4n + 2 };
            checks.push(IdentityCheck::new(params(1, 5, n, l), right));
        }
    }
    IdentityReport::new(Identity::OneFive, checks)
}
