//! Exact knot determinants and Alexander polynomials of closed 3-braids.
//!
//! Everything here is pure arithmetic over arbitrary-precision integers and
//! Laurent polynomials in `Z[t, t^-1]`; the crate is `no_std` and only needs
//! `alloc`. IO, file formats and the command-line front end live in the
//! `braidet` crate.
//!
//! Three independent routes compute the determinant of the twisted generalized
//! hybrid weaving knot `Q(m1, -m2, n, l)`, the closure of
//! `(s1^m1 s2^-m2)^n (s1 s2)^(3l)`:
//!
//! * [`burau::alexander`]: the reduced Burau representation, `det(phi(b) - I)`
//!   divided by `1 + t + t^2`, evaluated at `t = -1`;
//! * [`burau::determinant_fast`]: the same product taken over the integers at
//!   `t = -1`;
//! * [`closed_form::det_closed_form`]: the eigenvalue power sum of
//!   `C = [[1 + m1 m2, m1], [m2, 1]]`, computed by an integer recurrence.
//!
//! ```
//! use braidet_core::{braid::TghwParams, burau, closed_form};
//!
//! let p: TghwParams = "1,1,4,0".parse().unwrap();
//! let word = p.expand();
//! assert_eq!(closed_form::det_closed_form(&p), 45u32.into());
//! assert_eq!(burau::determinant_fast(&word), 45u32.into());
//! assert_eq!(burau::alexander(&word).unwrap().determinant, 45u32.into());
//! ```

#![no_std]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod braid;
pub mod burau;
pub mod classify;
pub mod closed_form;
pub mod laurent;
pub mod mat2;
pub mod sequences;

pub use braid::{BraidWord, Generator, Letter, TghwParams};
pub use burau::AlexanderResult;
pub use laurent::LaurentPoly;
pub use mat2::Mat2;
