//! Verification suites behind `braidet verify`.
//!
//! Each suite yields a [`SuiteReport`]; the binary prints one JSON line per
//! suite and exits 1 if any check failed.

use std::ops::RangeInclusive;

use braidet_core::braid::{BraidWord, Generator, Letter, TghwParams};
use braidet_core::burau::{alexander, burau, char_det, determinant_fast, BurauError};
use braidet_core::closed_form::{det_closed_form, matrix_oracle};
use braidet_core::laurent::LaurentPoly;
use braidet_core::sequences::{self, IdentityReport};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Parameter tuple or braid word.
    pub input: String,
    pub check: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

impl From<IdentityReport> for SuiteReport {
    fn from(r: IdentityReport) -> Self {
        let failures = r
            .failures()
            .map(|c| Failure {
                input: c.params.to_string(),
                check: r.identity.name().to_string(),
                left: c.left.to_string(),
                right: c.right.to_string(),
            })
            .collect();
        SuiteReport {
            suite: r.identity.name().to_string(),
            checks: r.checks.len(),
            passed: r.passed(),
            failures,
        }
    }
}

pub fn weaving(n_max: u32) -> SuiteReport {
    sequences::check_identity_weaving(n_max).into()
}

pub fn hybrid(m_max: u32, n_max: u32) -> SuiteReport {
    sequences::check_identity_hybrid(m_max, n_max).into()
}

pub fn torus(q_max: u32) -> SuiteReport {
    sequences::check_identity_torus(q_max).into()
}

pub fn one_five(n_max: u32, l_range: RangeInclusive<i32>) -> SuiteReport {
    sequences::check_identity_one_five(n_max, l_range).into()
}

/// Bounds of the route-agreement grid: `m1 in [1, m1_max]`,
/// `m2 in [1, m2_max]`, `n in [1, n_max]`, `l in [-l_max, l_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    pub m1_max: u32,
    pub m2_max: u32,
    pub n_max: u32,
    pub l_max: u32,
}

impl Grid {
    pub fn params(&self) -> Vec<TghwParams> {
        let l = self.l_max as i32;
        let mut out = Vec::new();
        for m1 in 1..=self.m1_max {
            for m2 in 1..=self.m2_max {
                for n in 1..=self.n_max {
                    for l in -l..=l {
                        out.push(TghwParams::new(m1, m2, n, l).expect("positive bounds"));
                    }
                }
            }
        }
        out
    }
}

impl std::str::FromStr for Grid {
    type Err = String;

    /// `m1_max,m2_max,n_max,l_max`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<u32> = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| format!("expected four nonnegative integers, got {s:?}"))?;
        match parts[..] {
            [m1_max, m2_max, n_max, l_max] if m1_max > 0 && m2_max > 0 && n_max > 0 => Ok(Grid {
                m1_max,
                m2_max,
                n_max,
                l_max,
            }),
            _ => Err(format!("expected m1_max,m2_max,n_max,l_max with positive m and n bounds, got {s:?}")),
        }
    }
}

/// Determinants of one parameter tuple by all four routes, in the order
/// closed form, integer-matrix oracle, integer Burau at t = -1, symbolic
/// Burau.
pub fn all_routes(p: &TghwParams) -> Result<[(&'static str, BigUint); 4], BurauError> {
    let word = p.expand();
    let symbolic = alexander(&word)?.determinant;
    Ok([
        ("closed", det_closed_form(p)),
        ("oracle", matrix_oracle(p)),
        ("matrix", determinant_fast(&word)),
        ("burau", symbolic),
    ])
}

fn route_failure(p: &TghwParams) -> Option<Failure> {
    let values = match all_routes(p) {
        Ok(values) => values,
        Err(e) => {
            return Some(Failure {
                input: p.to_string(),
                check: "burau".into(),
                left: e.to_string(),
                right: String::new(),
            })
        }
    };
    let reference = &values[0].1;
    values
        .iter()
        .find(|(_, v)| v != reference)
        .map(|(name, v)| Failure {
            input: p.to_string(),
            check: format!("closed = {name}"),
            left: reference.to_string(),
            right: v.to_string(),
        })
}

pub fn routes(grid: Grid) -> SuiteReport {
    let params = grid.params();
    let failures: Vec<Failure> = params.par_iter().filter_map(route_failure).collect();
    SuiteReport {
        suite: "routes".into(),
        checks: params.len(),
        passed: params.len() - failures.len(),
        failures,
    }
}

/// Random braid word with up to `max_len` letters, powers in `[-4, 4] \ {0}`.
pub fn random_word(rng: &mut impl Rng, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let generator = if rng.gen_bool(0.5) {
                Generator::S1
            } else {
                Generator::S2
            };
            let magnitude = rng.gen_range(1..=4);
            let power = if rng.gen_bool(0.5) { magnitude } else { -magnitude };
            Letter::new(generator, power).expect("nonzero power")
        })
        .collect()
}

/// Names of the per-word checks in [`burau_props`].
pub const BURAU_PROPERTIES: [&str; 6] = [
    "homomorphism",
    "braid-relation",
    "determinant-law",
    "divisibility",
    "conjugation-invariance",
    "alexander-symmetry",
];

fn check_word(w: &BraidWord, v: &BraidWord, g: &BraidWord) -> Vec<Failure> {
    let mut failures = Vec::new();
    let mut fail = |check: &str, left: String, right: String| {
        failures.push(Failure {
            input: w.to_string(),
            check: check.to_string(),
            left,
            right,
        })
    };

    let lhs = burau(&w.concat(v));
    let rhs = burau(w).mul(&burau(v));
    if lhs != rhs {
        fail("homomorphism", lhs.to_string(), rhs.to_string());
    }

    let a = burau(&w.concat(&BraidWord::from_pairs(&[(1, 1), (2, 1), (1, 1)])));
    let b = burau(&w.concat(&BraidWord::from_pairs(&[(2, 1), (1, 1), (2, 1)])));
    if a != b {
        fail("braid-relation", a.to_string(), b.to_string());
    }

    let e = w.exponent_sum();
    let det = burau(w).det();
    let expected = LaurentPoly::monomial(if e % 2 == 0 { 1 } else { -1 }, e);
    if det != expected {
        fail("determinant-law", det.to_string(), expected.to_string());
    }

    let cd = char_det(w);
    if cd.div_exact(&LaurentPoly::cyclotomic3()).is_err() {
        fail("divisibility", cd.to_string(), "multiple of 1 + t + t^2".into());
    }

    let conj = determinant_fast(&w.conjugate_by(g));
    let plain = determinant_fast(w);
    if conj != plain {
        fail("conjugation-invariance", conj.to_string(), plain.to_string());
    }

    match alexander(w) {
        Ok(r) if r.alexander.unit_equivalent(&r.alexander.reversed()) => {}
        Ok(r) => fail(
            "alexander-symmetry",
            r.alexander.to_string(),
            r.alexander.reversed().to_string(),
        ),
        Err(e) => fail("alexander-symmetry", e.to_string(), String::new()),
    }
    failures
}

/// Six reduced-Burau properties on `words` seeded random words of length at
/// most `max_len`. Each word is paired with a second random word (for the
/// homomorphism check) and a random conjugator of length at most 10.
pub fn burau_props(words: usize, max_len: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<_> = (0..words)
        .map(|_| {
            (
                random_word(&mut rng, max_len),
                random_word(&mut rng, max_len),
                random_word(&mut rng, 10),
            )
        })
        .collect();
    let failures: Vec<Failure> = cases
        .par_iter()
        .flat_map_iter(|(w, v, g)| check_word(w, v, g))
        .collect();
    let checks = words * BURAU_PROPERTIES.len();
    SuiteReport {
        suite: "burau-props".into(),
        checks,
        passed: checks - failures.len(),
        failures,
    }
}
