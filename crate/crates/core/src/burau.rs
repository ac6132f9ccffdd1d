//! The reduced Burau representation of the 3-strand braid group and the
//! Alexander polynomial and determinant of a closed 3-braid.
//!
//! For `b` in `B3`, `det(phi(b) - I) = ±t^k (1 + t + t^2) Δ(t)` where `Δ` is
//! the Alexander polynomial of the closure, and `det = |Δ(-1)|`.

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use crate::braid::{BraidWord, Generator, Letter};
use crate::laurent::{LaurentError, LaurentPoly};
use crate::mat2::Mat2;

/// 2x2 matrix over `Z[t, t^-1]`.
pub type MatL = Mat2<LaurentPoly>;

/// 2x2 integer matrix.
pub type IntMat = Mat2<BigInt>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BurauError {
    /// `det(phi(b) - I)` was not divisible by `1 + t + t^2`. Cannot happen for
    /// a correct implementation.
    #[error("det(phi(b) - I) = {char_det} is not divisible by 1 + t + t^2")]
    Inconsistent { char_det: LaurentPoly },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderResult {
    /// `det(phi(b) - I)`.
    pub char_det: LaurentPoly,
    /// Δ normalized to lowest exponent 0 and positive leading coefficient;
    /// zero for split links.
    pub alexander: LaurentPoly,
    pub determinant: BigUint,
}

fn p(low: i64, coeffs: &[i64]) -> LaurentPoly {
    LaurentPoly::from_coeffs(low, coeffs)
}

/// Image of a single generator or its inverse.
pub fn generator_matrix(generator: Generator, inverse: bool) -> MatL {
    let zero = LaurentPoly::zero();
    let one = LaurentPoly::one();
    match (generator, inverse) {
        // [[-t, 1], [0, 1]]
        (Generator::S1, false) => Mat2::new(p(1, &[-1]), one.clone(), zero, one),
        // [[-t^-1, t^-1], [0, 1]]
        (Generator::S1, true) => Mat2::new(p(-1, &[-1]), p(-1, &[1]), zero, one),
        // [[1, 0], [t, -t]]
        (Generator::S2, false) => Mat2::new(one, zero, p(1, &[1]), p(1, &[-1])),
        // [[1, 0], [1, -t^-1]]
        (Generator::S2, true) => Mat2::new(one.clone(), zero, one, p(-1, &[-1])),
    }
}

pub fn letter_matrix(letter: &Letter) -> MatL {
    generator_matrix(letter.generator(), letter.power() < 0).pow(letter.power().unsigned_abs())
}

/// `phi(w)`, the ordered product of the letter images. The empty word maps to
/// the identity.
pub fn burau(word: &BraidWord) -> MatL {
    word.letters()
        .iter()
        .fold(MatL::identity(), |acc, l| acc.mul(&letter_matrix(l)))
}

/// `det(phi(w) - I)`.
pub fn char_det(word: &BraidWord) -> LaurentPoly {
    burau(word).sub_identity().det()
}

/// Alexander polynomial and determinant of the closure of `word`.
pub fn alexander(word: &BraidWord) -> Result<AlexanderResult, BurauError> {
    let char_det = char_det(word);
    let quotient = char_det
        .div_exact(&LaurentPoly::cyclotomic3())
        .map_err(|e| match e {
            LaurentError::NonExact => BurauError::Inconsistent {
                char_det: char_det.clone(),
            },
            other => unreachable!("dividing by a nonzero constant polynomial: {other}"),
        })?;
    let alexander = quotient.normalize_unit();
    let determinant = alexander.eval_at_minus_one().abs().to_biguint().expect("nonnegative");
    Ok(AlexanderResult {
        char_det,
        alexander,
        determinant,
    })
}

/// Images of the generators at `t = -1`.
pub fn integer_generator_matrix(generator: Generator, inverse: bool) -> IntMat {
    let m = |a: i64, b: i64, c: i64, d: i64| Mat2::new(a.into(), b.into(), c.into(), d.into());
    match (generator, inverse) {
        (Generator::S1, false) => m(1, 1, 0, 1),
        (Generator::S1, true) => m(1, -1, 0, 1),
        (Generator::S2, false) => m(1, 0, -1, 1),
        (Generator::S2, true) => m(1, 0, 1, 1),
    }
}

/// `phi(w)` at `t = -1`, computed over the integers with binary powering
/// inside each letter.
pub fn burau_at_minus_one(word: &BraidWord) -> IntMat {
    word.letters().iter().fold(IntMat::identity(), |acc, l| {
        let base = integer_generator_matrix(l.generator(), l.power() < 0);
        acc.mul(&base.pow(l.power().unsigned_abs()))
    })
}

/// `|det(phi(w)|_{t=-1} - I)|`, entirely over arbitrary-precision integers.
pub fn determinant_fast(word: &BraidWord) -> BigUint {
    burau_at_minus_one(word)
        .sub_identity()
        .det()
        .abs()
        .to_biguint()
        .expect("nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::TghwParams;

    fn w(pairs: &[(u8, i64)]) -> BraidWord {
        BraidWord::from_pairs(pairs)
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn fam(m1: u32, m2: u32, n: u32, l: i32) -> BraidWord {
        TghwParams::new(m1, m2, n, l).unwrap().expand()
    }

    #[test]
    fn generator_images() {
        assert_eq!(
            burau(&w(&[(1, 1)])),
            Mat2::new(lp("-t"), lp("1"), lp("0"), lp("1"))
        );
        assert_eq!(
            burau(&w(&[(2, 1)])),
            Mat2::new(lp("1"), lp("0"), lp("t"), lp("-t"))
        );
        assert!(burau(&BraidWord::new()).is_identity());
        for g in [Generator::S1, Generator::S2] {
            assert!(generator_matrix(g, false)
                .mul(&generator_matrix(g, true))
                .is_identity());
        }
    }

    #[test]
    fn braid_relation() {
        assert_eq!(
            burau(&w(&[(1, 1), (2, 1), (1, 1)])),
            burau(&w(&[(2, 1), (1, 1), (2, 1)]))
        );
    }

    #[test]
    fn char_det_examples() {
        assert!(char_det(&w(&[(1, 1)])).is_zero());
        assert!(char_det(&BraidWord::new()).is_zero());
        let trefoil = char_det(&w(&[(1, 3), (2, -1)]));
        let expected = LaurentPoly::cyclotomic3() * lp("1 - t + t^2");
        assert!(trefoil.unit_equivalent(&expected), "{trefoil}");
    }

    #[test]
    fn alexander_examples() {
        let trefoil = alexander(&w(&[(1, 3), (2, -1)])).unwrap();
        assert_eq!(trefoil.alexander, lp("1 - t + t^2"));
        assert_eq!(trefoil.determinant, 3u32.into());

        let unlink = alexander(&BraidWord::new()).unwrap();
        assert!(unlink.alexander.is_zero());
        assert_eq!(unlink.determinant, 0u32.into());

        let figure_eight = alexander(&fam(1, 1, 2, 0)).unwrap();
        assert_eq!(figure_eight.alexander, lp("1 - 3t + t^2"));
        assert_eq!(figure_eight.determinant, 5u32.into());
    }

    #[test]
    fn determinant_fast_examples() {
        assert_eq!(determinant_fast(&fam(3, 1, 1, 0)), 3u32.into());
        assert_eq!(determinant_fast(&fam(1, 1, 4, 0)), 45u32.into());
        assert_eq!(determinant_fast(&fam(1, 5, 1, 2)), 5u32.into());
        assert_eq!(determinant_fast(&BraidWord::new()), 0u32.into());
        assert_eq!(determinant_fast(&w(&[(1, 1)])), 0u32.into());
    }

    #[test]
    fn integer_images_are_burau_at_minus_one() {
        for g in [Generator::S1, Generator::S2] {
            for inv in [false, true] {
                let sym = generator_matrix(g, inv);
                let evaluated = Mat2::new(
                    sym.get(0, 0).eval_at_minus_one(),
                    sym.get(0, 1).eval_at_minus_one(),
                    sym.get(1, 0).eval_at_minus_one(),
                    sym.get(1, 1).eval_at_minus_one(),
                );
                assert_eq!(evaluated, integer_generator_matrix(g, inv));
            }
        }
    }
}
