//! Laurent polynomials in `Z[t, t^-1]` with arbitrary-precision coefficients.
//!
//! A [`LaurentPoly`] is a finite map from exponent to nonzero coefficient. Zero
//! coefficients are never stored, so structural equality is ring equality and
//! the empty map is the zero polynomial.
//!
//! The textual form lists terms in ascending exponent order, e.g.
//! `t^-1 - 2 + t` or `-3t^-2 + 5 - t^4`, and [`str::parse`] reads it back.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("cannot evaluate a Laurent polynomial at t = 0")]
    EvalAtZero,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division is not exact")]
    NonExact,
    #[error("parse error at byte {position}: {message}")]
    Parse {
        position: usize,
        message: &'static str,
    },
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// `coeff * t^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: map }
    }

    /// `coeffs[0] t^low + coeffs[1] t^(low+1) + ...`
    pub fn from_coeffs<C: Into<BigInt> + Clone>(low: i64, coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (low + i as i64, c.clone())),
        )
    }

    /// `1 + t + t^2`, the factor separating `det(phi(b) - I)` from the
    /// Alexander polynomial of a closed 3-braid.
    pub fn cyclotomic3() -> Self {
        Self::from_coeffs(0, &[1, 1, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `t`.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Coefficient of the lowest power of `t`.
    pub fn trailing_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * factor)).collect(),
        }
    }

    /// The substitution `t -> t^-1`.
    pub fn reversed(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact value at `t = x` for nonzero `x`.
    pub fn eval_int(&self, x: i64) -> Result<BigRational, LaurentError> {
        if x == 0 {
            return Err(LaurentError::EvalAtZero);
        }
        let x = BigRational::from_integer(x.into());
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let power = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else {
                num_traits::pow(x.recip(), e.unsigned_abs() as usize)
            };
            acc += power * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Value at `t = -1`.
    pub fn eval_at_minus_one(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |acc, (e, c)| {
            if e.is_even() {
                acc + c
            } else {
                acc - c
            }
        })
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient `q` with `self = q * divisor`.
    ///
    /// Both operands are shifted to ordinary polynomials with lowest exponent
    /// zero and divided by schoolbook long division over the integers; the
    /// exponent offset is restored on the quotient.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, LaurentError> {
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (a_low, mut rem) = self.to_dense();
        let (d_low, d) = divisor.to_dense();
        if rem.len() < d.len() {
            return Err(LaurentError::NonExact);
        }
        let d_lead = d.last().expect("nonzero divisor");
        let q_len = rem.len() - d.len() + 1;
        let mut quot = vec![BigInt::zero(); q_len];
        for i in (0..q_len).rev() {
            let top = &rem[i + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(d_lead);
            if !r.is_zero() {
                return Err(LaurentError::NonExact);
            }
            for (j, dj) in d.iter().enumerate() {
                rem[i + j] -= &q * dj;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(LaurentError::NonExact);
        }
        Ok(Self::from_coeffs(a_low - d_low, &quot))
    }

    /// Canonical representative of the class `{±t^k * self}`: lowest exponent
    /// zero and positive leading coefficient. Zero maps to zero.
    pub fn normalize_unit(&self) -> Self {
        let Some(low) = self.min_exp() else {
            return Self::zero();
        };
        let shifted = self.shift(-low);
        if shifted.leading_coeff().is_some_and(|c| c.is_negative()) {
            -shifted
        } else {
            shifted
        }
    }

    /// True iff `self = ±t^k * other` for some integer `k`.
    pub fn unit_equivalent(&self, other: &Self) -> bool {
        self.normalize_unit() == other.normalize_unit()
    }

    fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let (Some(low), Some(high)) = (self.min_exp(), self.max_exp()) else {
            return (0, Vec::new());
        };
        let mut dense = vec![BigInt::zero(); (high - low) as usize + 1];
        for (e, c) in &self.terms {
            dense[(e - low) as usize] = c.clone();
        }
        (low, dense)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let (Some(a_low), Some(a_high), Some(b_low), Some(b_high)) =
            (self.min_exp(), self.max_exp(), rhs.min_exp(), rhs.max_exp())
        else {
            return Self::zero();
        };
        let low = a_low + b_low;
        let mut dense = vec![BigInt::zero(); (a_high + b_high - low) as usize + 1];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                dense[(ea + eb - low) as usize] += ca * cb;
            }
        }
        Self::from_terms(
            dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (low + i as i64, c)),
        )
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_default();
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { terms }
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                let f: fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly = $body;
                f(self, rhs)
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&-b));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl crate::mat2::Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.add_ref(rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_ref(rhs)
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if *e == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    /// Accepts sums of terms `c`, `t`, `ct`, `c*t`, `t^e`, `ct^e`, with
    /// whitespace anywhere between tokens. Repeated exponents are summed.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser::new(s).parse()
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, message: &'static str) -> LaurentError {
        LaurentError::Parse {
            position: self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            core::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits")
        })
    }

    fn parse(mut self) -> Result<LaurentPoly, LaurentError> {
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                None if first => return Err(self.err("empty input")),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(_) => return Err(self.err("expected '+' or '-' between terms")),
            };
            first = false;
            let (exp, mut coeff) = self.term()?;
            if negative {
                coeff = -coeff;
            }
            terms.push((exp, coeff));
        }
        Ok(LaurentPoly::from_terms(terms))
    }

    fn term(&mut self) -> Result<(i64, BigInt), LaurentError> {
        self.skip_ws();
        let coeff = match self.digits() {
            Some(d) => Some(d.parse::<BigInt>().map_err(|_| self.err("bad coefficient"))?),
            None => None,
        };
        if coeff.is_some() && self.peek() == Some(b'*') {
            self.pos += 1;
            if self.peek() != Some(b't') {
                return Err(self.err("expected 't' after '*'"));
            }
        }
        if self.peek() != Some(b't') {
            return match coeff {
                Some(c) => Ok((0, c)),
                None => Err(self.err("expected coefficient or 't'")),
            };
        }
        self.pos += 1;
        let coeff = coeff.unwrap_or_else(BigInt::one);
        if self.peek() != Some(b'^') {
            return Ok((1, coeff));
        }
        self.pos += 1;
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let digits = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        let mag: i64 = digits.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok((if negative { -mag } else { mag }, coeff))
    }
}
