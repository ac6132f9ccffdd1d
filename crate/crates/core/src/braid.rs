//! Braid words in the 3-strand braid group and the twisted generalized hybrid
//! weaving family.
//!
//! Words are kept exactly as written: no free cancellation and no merging of
//! adjacent letters. The textual form is whitespace-separated tokens
//! `s<index>[^<power>]` with index 1 or 2 and a nonzero power, e.g.
//! `s1^3 s2^-1`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    S1,
    S2,
}

impl Generator {
    pub fn index(self) -> u8 {
        match self {
            Generator::S1 => 1,
            Generator::S2 => 2,
        }
    }
}

/// `generator^power` with `power != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    generator: Generator,
    power: i64,
}

impl Letter {
    /// Returns `None` for a zero power.
    pub fn new(generator: Generator, power: i64) -> Option<Self> {
        (power != 0).then_some(Letter { generator, power })
    }

    pub fn generator(&self) -> Generator {
        self.generator
    }

    pub fn power(&self) -> i64 {
        self.power
    }

    pub fn inverse(&self) -> Self {
        Letter {
            generator: self.generator,
            power: -self.power,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.generator.index())?;
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordParseError {
    #[error("byte {position}: generator index `{index}` out of range (expected 1 or 2)")]
    GeneratorOutOfRange { position: usize, index: alloc::string::String },
    #[error("byte {position}: zero power")]
    ZeroPower { position: usize },
    #[error("byte {position}: malformed power")]
    BadPower { position: usize },
    #[error("byte {position}: unexpected token `{token}`")]
    StrayToken { position: usize, token: alloc::string::String },
}

impl WordParseError {
    pub fn position(&self) -> usize {
        match self {
            WordParseError::GeneratorOutOfRange { position, .. }
            | WordParseError::ZeroPower { position }
            | WordParseError::BadPower { position }
            | WordParseError::StrayToken { position, .. } => *position,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        BraidWord { letters }
    }

    /// Convenience constructor from `(index, power)` pairs.
    ///
    /// Panics if an index is not 1 or 2 or a power is zero.
    pub fn from_pairs(pairs: &[(u8, i64)]) -> Self {
        pairs
            .iter()
            .map(|&(g, e)| {
                let generator = match g {
                    1 => Generator::S1,
                    2 => Generator::S2,
                    _ => panic!("generator index {g} out of range"),
                };
                Letter::new(generator, e).expect("nonzero power")
            })
            .collect()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    /// `(index, power)` pairs in reading order.
    pub fn to_pairs(&self) -> Vec<(u8, i64)> {
        self.letters
            .iter()
            .map(|l| (l.generator.index(), l.power))
            .collect()
    }

    /// Sum of all powers.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.power).sum()
    }

    /// Number of elementary crossings, the sum of `|power|`.
    pub fn crossing_count(&self) -> u64 {
        self.letters.iter().map(|l| l.power.unsigned_abs()).sum()
    }

    /// Group inverse: reversed order, negated powers.
    pub fn invert(&self) -> Self {
        self.letters.iter().rev().map(Letter::inverse).collect()
    }

    /// Concatenation `self * other`.
    pub fn concat(&self, other: &Self) -> Self {
        self.letters.iter().chain(&other.letters).copied().collect()
    }

    /// `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.concat(self).concat(&g.invert())
    }
}

impl FromIterator<Letter> for BraidWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        BraidWord {
            letters: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

/// Parses the whitespace-separated braid-word grammar.
pub fn parse_word(text: &str) -> Result<BraidWord, WordParseError> {
    let mut letters = Vec::new();
    let mut rest = text;
    let mut offset = 0;
    while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
        let tail = &rest[start..];
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        let token = &tail[..len];
        letters.push(parse_token(token, offset + start)?);
        offset += start + len;
        rest = &tail[len..];
    }
    Ok(BraidWord { letters })
}

fn parse_token(token: &str, position: usize) -> Result<Letter, WordParseError> {
    let stray = || WordParseError::StrayToken {
        position,
        token: token.into(),
    };
    let body = token.strip_prefix('s').ok_or_else(stray)?;
    let (index, power) = match body.split_once('^') {
        Some((i, p)) => (i, Some(p)),
        None => (body, None),
    };
    if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
        return Err(stray());
    }
    let generator = match index {
        "1" => Generator::S1,
        "2" => Generator::S2,
        _ => {
            return Err(WordParseError::GeneratorOutOfRange {
                position,
                index: index.into(),
            })
        }
    };
    let power = match power {
        None => 1,
        Some(p) => {
            let digits = p.strip_prefix(['-', '+']).unwrap_or(p);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(WordParseError::BadPower { position });
            }
            p.parse::<i64>()
                .map_err(|_| WordParseError::BadPower { position })?
        }
    };
    Letter::new(generator, power).ok_or(WordParseError::ZeroPower { position })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamsError {
    #[error("m1, m2 and n must be positive (got m1={m1}, m2={m2}, n={n})")]
    NotPositive { m1: u32, m2: u32, n: u32 },
    #[error("expected `m1,m2,n,l` with four comma-separated integers, got `{0}`")]
    Malformed(alloc::string::String),
}

/// Parameters `(m1, m2, n, l)` of the knot or link `Q(m1, -m2, n, l)`, the
/// closure of `(s1^m1 s2^-m2)^n (s1 s2)^(3l)`.
///
/// Ordering is lexicographic on `(m1, m2, n, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TghwParams {
    m1: u32,
    m2: u32,
    n: u32,
    l: i32,
}

impl TghwParams {
    pub fn new(m1: u32, m2: u32, n: u32, l: i32) -> Result<Self, ParamsError> {
        if m1 == 0 || m2 == 0 || n == 0 {
            return Err(ParamsError::NotPositive { m1, m2, n });
        }
        Ok(TghwParams { m1, m2, n, l })
    }

    pub fn m1(&self) -> u32 {
        self.m1
    }

    pub fn m2(&self) -> u32 {
        self.m2
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> i32 {
        self.l
    }

    /// `m1 * m2`, the only way the determinant depends on `m1` and `m2`.
    pub fn m1m2(&self) -> u64 {
        u64::from(self.m1) * u64::from(self.m2)
    }

    /// The braid word `(s1^m1 s2^-m2)^n (s1 s2)^(3l)`; a negative twist
    /// contributes `3|l|` copies of `s2^-1 s1^-1`.
    pub fn expand(&self) -> BraidWord {
        let mut letters =
            Vec::with_capacity(2 * self.n as usize + 6 * self.l.unsigned_abs() as usize);
        let a = Letter::new(Generator::S1, i64::from(self.m1)).expect("m1 > 0");
        let b = Letter::new(Generator::S2, -i64::from(self.m2)).expect("m2 > 0");
        for _ in 0..self.n {
            letters.push(a);
            letters.push(b);
        }
        let twist: [Letter; 2] = if self.l >= 0 {
            [
                Letter::new(Generator::S1, 1).unwrap(),
                Letter::new(Generator::S2, 1).unwrap(),
            ]
        } else {
            [
                Letter::new(Generator::S2, -1).unwrap(),
                Letter::new(Generator::S1, -1).unwrap(),
            ]
        };
        for _ in 0..3 * self.l.unsigned_abs() {
            letters.extend_from_slice(&twist);
        }
        BraidWord { letters }
    }
}

/// Free-function form of [`TghwParams::expand`].
pub fn expand_tghw(p: &TghwParams) -> BraidWord {
    p.expand()
}

impl fmt::Display for TghwParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.m1, self.m2, self.n, self.l)
    }
}

impl FromStr for TghwParams {
    type Err = ParamsError;

    /// Reads the literal `m1,m2,n,l`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || ParamsError::Malformed(s.into());
        let mut parts = s.split(',').map(str::trim);
        let mut next = || parts.next().ok_or_else(malformed);
        let m1 = next()?.parse().map_err(|_| malformed())?;
        let m2 = next()?.parse().map_err(|_| malformed())?;
        let n = next()?.parse().map_err(|_| malformed())?;
        let l = next()?.parse().map_err(|_| malformed())?;
        if parts.next().is_some() {
            return Err(malformed());
        }
        TghwParams::new(m1, m2, n, l)
    }
}
