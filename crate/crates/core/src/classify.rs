//! Classification facts that follow from the family parameters or the
//! determinant alone.
//!
//! Quasi-alternating membership is only decided for the covered family
//! `Q(1, -m, n, l)` (and its mirror image `Q(m, -1, n, l)`), which is
//! quasi-alternating exactly when `l` is in `{-1, 0, 1}`. Everything else is
//! reported as [`Qa::Unknown`].

use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::braid::TghwParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Qa {
    Yes,
    No,
    Unknown,
}

impl Qa {
    pub fn as_str(self) -> &'static str {
        match self {
            Qa::Yes => "yes",
            Qa::No => "no",
            Qa::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Qa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QaVerdict {
    pub value: Qa,
    /// Which rule fired.
    pub reason: &'static str,
}

const REASON_DIRECT: &str = "Q(1,-m,n,l) is quasi-alternating iff l in {-1,0,1}";
const REASON_MIRROR: &str =
    "mirror of Q(1,-m1,n,-l); Q(1,-m,n,l) is quasi-alternating iff l in {-1,0,1}";
const REASON_UNKNOWN: &str = "m1 > 1 and m2 > 1: outside the settled family";

pub fn quasi_alternating(p: &TghwParams) -> QaVerdict {
    let reason = if p.m1() == 1 {
        REASON_DIRECT
    } else if p.m2() == 1 {
        // Q(m, -1, n, l) is the mirror of Q(1, -m, n, -l), and the condition
        // on l is symmetric under l -> -l.
        REASON_MIRROR
    } else {
        return QaVerdict {
            value: Qa::Unknown,
            reason: REASON_UNKNOWN,
        };
    };
    let value = if (-1..=1).contains(&p.l()) {
        Qa::Yes
    } else {
        Qa::No
    };
    QaVerdict { value, reason }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ColorError {
    #[error("p = 2 is not supported; p must be an odd prime")]
    Two,
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A link is p-colorable for an odd prime `p` exactly when `p | det`.
pub fn p_colorable(det: &BigUint, p: u64) -> Result<bool, ColorError> {
    if p == 2 {
        return Err(ColorError::Two);
    }
    if !is_prime(p) {
        return Err(ColorError::NotPrime(p));
    }
    Ok((det % p).is_zero())
}

/// Named families, in priority order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `W(3,n) = Q(1,-1,n,0)`.
    Weaving,
    /// `T(2,q) = Q(q,-1,1,0)`.
    Torus,
    /// `Q(m,-m,n,0)`.
    HybridWeaving,
    /// `Q(m,-m,n,l)`, `l != 0`.
    TwistedHybridWeaving,
    Generic,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Weaving => "weaving",
            Family::Torus => "torus",
            Family::HybridWeaving => "hybrid-weaving",
            Family::TwistedHybridWeaving => "twisted-hybrid-weaving",
            Family::Generic => "generic",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn recognize_family(p: &TghwParams) -> Family {
    let (m1, m2, n, l) = (p.m1(), p.m2(), p.n(), p.l());
    if m1 == 1 && m2 == 1 && l == 0 {
        Family::Weaving
    } else if m2 == 1 && n == 1 && l == 0 {
        Family::Torus
    } else if m1 == m2 && l == 0 {
        Family::HybridWeaving
    } else if m1 == m2 {
        Family::TwistedHybridWeaving
    } else {
        Family::Generic
    }
}
