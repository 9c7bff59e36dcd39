//! Integer 2×2 matrices of determinant one, the positive monoid generated by
//! `L = (1 0; 1 1)` and `R = (1 1; 0 1)`, Farey intervals and their halving,
//! and the reduction of a hyperbolic matrix to its cyclic `L`/`R` word.
//!
//! A Farey interval `[b/a, d/c]` (with `ad - bc = 1` and
//! `0/1 ≤ b/a < d/c ≤ 1/0`) corresponds to the matrix with columns `(a, b)`
//! and `(c, d)`. Halving the interval multiplies that matrix by `L` (right
//! half) or `R` (left half) on the right, so nested halvings from
//! `[0/1, 1/0]` spell out a word in the monoid; [`word_of_interval`] recovers
//! it and [`LrWord::matrix`] evaluates it back.
//!
//! For a hyperbolic matrix, [`eigen_data`] extracts the expanding eigenvalue
//! `λ = (tr + √(tr²-4))/2` and the slope `s` of its eigenvector `(1, s)ᵀ` as
//! exact [`Quad`] values, and [`lr_cycle_of_matrix`] computes the cyclic
//! block word `L^{q_k} R^{p_k} ⋯ L^{q_1} R^{p_1}` the matrix is conjugate to.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::surd::{cf_of_quad, Quad};

/// A 2×2 integer matrix of determinant one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    m11: BigInt,
    m12: BigInt,
    m21: BigInt,
    m22: BigInt,
}

impl Mat2 {
    /// Builds a matrix, rejecting determinant ≠ 1.
    pub fn new(
        m11: impl Into<BigInt>,
        m12: impl Into<BigInt>,
        m21: impl Into<BigInt>,
        m22: impl Into<BigInt>,
    ) -> Result<Mat2> {
        let m = Mat2 {
            m11: m11.into(),
            m12: m12.into(),
            m21: m21.into(),
            m22: m22.into(),
        };
        let det = &m.m11 * &m.m22 - &m.m12 * &m.m21;
        if det.is_one() {
            Ok(m)
        } else {
            Err(Error::domain(format!(
                "matrix {m} has determinant {det}, expected 1"
            )))
        }
    }

    pub fn identity() -> Mat2 {
        Mat2::new(1, 0, 0, 1).unwrap()
    }

    /// `L = (1 0; 1 1)`.
    pub fn l() -> Mat2 {
        Mat2::new(1, 0, 1, 1).unwrap()
    }

    /// `R = (1 1; 0 1)`.
    pub fn r() -> Mat2 {
        Mat2::new(1, 1, 0, 1).unwrap()
    }

    /// `L^e = (1 0; e 1)` for any integer `e`.
    pub fn l_pow(e: impl Into<BigInt>) -> Mat2 {
        let e = e.into();
        Mat2 {
            m11: BigInt::one(),
            m12: BigInt::zero(),
            m21: e,
            m22: BigInt::one(),
        }
    }

    /// `R^e = (1 e; 0 1)` for any integer `e`.
    pub fn r_pow(e: impl Into<BigInt>) -> Mat2 {
        let e = e.into();
        Mat2 {
            m11: BigInt::one(),
            m12: e,
            m21: BigInt::zero(),
            m22: BigInt::one(),
        }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.m11, &self.m12, &self.m21, &self.m22]
    }

    pub fn trace(&self) -> BigInt {
        &self.m11 + &self.m22
    }

    /// Inverse, exact since the determinant is one.
    pub fn inverse(&self) -> Mat2 {
        Mat2 {
            m11: self.m22.clone(),
            m12: -&self.m12,
            m21: -&self.m21,
            m22: self.m11.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.m11.is_one() && self.m22.is_one() && self.m12.is_zero() && self.m21.is_zero()
    }

    pub fn is_minus_identity(&self) -> bool {
        self.m12.is_zero()
            && self.m21.is_zero()
            && self.m11 == BigInt::from(-1)
            && self.m22 == BigInt::from(-1)
    }

    /// All four entries nonnegative, i.e. membership in the monoid
    /// generated by `L` and `R`.
    pub fn is_nonnegative(&self) -> bool {
        !self.m11.is_negative()
            && !self.m12.is_negative()
            && !self.m21.is_negative()
            && !self.m22.is_negative()
    }

    /// Applies the matrix to the column vector `(x, y)ᵀ` of field elements.
    pub fn apply(&self, x: &Quad, y: &Quad) -> Result<(Quad, Quad)> {
        let lift = |n: &BigInt| Quad::integer(n.clone(), x.d().clone());
        let nx = lift(&self.m11)?.checked_mul(x)?.checked_add(&lift(&self.m12)?.checked_mul(y)?)?;
        let ny = lift(&self.m21)?.checked_mul(x)?.checked_add(&lift(&self.m22)?.checked_mul(y)?)?;
        Ok((nx, ny))
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            m11: &self.m11 * &rhs.m11 + &self.m12 * &rhs.m21,
            m12: &self.m11 * &rhs.m12 + &self.m12 * &rhs.m22,
            m21: &self.m21 * &rhs.m11 + &self.m22 * &rhs.m21,
            m22: &self.m21 * &rhs.m12 + &self.m22 * &rhs.m22,
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2 {
            m11: -&self.m11,
            m12: -&self.m12,
            m21: -&self.m21,
            m22: -&self.m22,
        }
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        -&self
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.m11, self.m12, self.m21, self.m22)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat2{self}")
    }
}

/// Serialized matrix: decimal-string entries in row order.
#[derive(Serialize, Deserialize)]
struct Mat2Repr {
    m11: String,
    m12: String,
    m21: String,
    m22: String,
}

impl Serialize for Mat2 {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        Mat2Repr {
            m11: self.m11.to_string(),
            m12: self.m12.to_string(),
            m21: self.m21.to_string(),
            m22: self.m22.to_string(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Mat2 {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Mat2, D::Error> {
        use serde::de::Error as _;
        let repr = Mat2Repr::deserialize(de)?;
        let parse = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|e| D::Error::custom(format!("bad integer `{s}`: {e}")))
        };
        Mat2::new(
            parse(&repr.m11)?,
            parse(&repr.m12)?,
            parse(&repr.m21)?,
            parse(&repr.m22)?,
        )
        .map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// Which half of a Farey interval to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    Left,
    Right,
}

/// The letters of the positive monoid; also the two splitting sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn other(self) -> Letter {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
        }
    }

    pub fn matrix(self) -> Mat2 {
        match self {
            Letter::L => Mat2::l(),
            Letter::R => Mat2::r(),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// The Farey interval `[b/a, d/c]` with `ad - bc = 1`, identified with the
/// matrix `(a c; b d)` in the positive monoid. The base interval `[0/1, 1/0]`
/// corresponds to the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FareyInterval {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl FareyInterval {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<FareyInterval> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if a.is_negative() || b.is_negative() || c.is_negative() || d.is_negative() {
            return Err(Error::domain("Farey interval entries must be nonnegative"));
        }
        if (&a * &d - &b * &c) != BigInt::one() {
            return Err(Error::domain(format!(
                "[{b}/{a}, {d}/{c}] is not a Farey interval: ad - bc != 1"
            )));
        }
        Ok(FareyInterval { a, b, c, d })
    }

    /// The base interval `[0/1, 1/0]`.
    pub fn base() -> FareyInterval {
        FareyInterval {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// Left endpoint as `(numerator, denominator) = (b, a)`.
    pub fn left_endpoint(&self) -> (&BigInt, &BigInt) {
        (&self.b, &self.a)
    }

    /// Right endpoint as `(numerator, denominator) = (d, c)`.
    pub fn right_endpoint(&self) -> (&BigInt, &BigInt) {
        (&self.d, &self.c)
    }

    /// The corresponding matrix `(a c; b d)`.
    pub fn matrix(&self) -> Mat2 {
        Mat2 {
            m11: self.a.clone(),
            m12: self.c.clone(),
            m21: self.b.clone(),
            m22: self.d.clone(),
        }
    }

    /// Reads an interval off a matrix in the positive monoid.
    pub fn from_matrix(m: &Mat2) -> Result<FareyInterval> {
        FareyInterval::new(m.m11.clone(), m.m21.clone(), m.m12.clone(), m.m22.clone())
    }

    /// Keeps the chosen half: the right half `[(b+d)/(a+c), d/c]` multiplies
    /// the matrix by `L`, the left half `[b/a, (b+d)/(a+c)]` by `R`.
    pub fn halve(&self, half: Half) -> FareyInterval {
        let mediant_den = &self.a + &self.c;
        let mediant_num = &self.b + &self.d;
        match half {
            Half::Right => FareyInterval {
                a: mediant_den,
                b: mediant_num,
                c: self.c.clone(),
                d: self.d.clone(),
            },
            Half::Left => FareyInterval {
                a: self.a.clone(),
                b: self.b.clone(),
                c: mediant_den,
                d: mediant_num,
            },
        }
    }

    /// The halving step a letter stands for: `L` keeps the right half,
    /// `R` the left half.
    pub fn step(&self, letter: Letter) -> FareyInterval {
        match letter {
            Letter::L => self.halve(Half::Right),
            Letter::R => self.halve(Half::Left),
        }
    }
}

impl fmt::Display for FareyInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}/{}, {}/{}]", self.b, self.a, self.d, self.c)
    }
}

impl fmt::Debug for FareyInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FareyInterval{self}")
    }
}

/// Serialized interval: `[b/a, d/c]` with decimal-string entries.
#[derive(Serialize, Deserialize)]
struct FareyRepr {
    a: String,
    b: String,
    c: String,
    d: String,
}

impl Serialize for FareyInterval {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        FareyRepr {
            a: self.a.to_string(),
            b: self.b.to_string(),
            c: self.c.to_string(),
            d: self.d.to_string(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for FareyInterval {
    fn deserialize<D: serde::Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<FareyInterval, D::Error> {
        use serde::de::Error as _;
        let repr = FareyRepr::deserialize(de)?;
        let parse = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|e| D::Error::custom(format!("bad integer `{s}`: {e}")))
        };
        FareyInterval::new(
            parse(&repr.a)?,
            parse(&repr.b)?,
            parse(&repr.c)?,
            parse(&repr.d)?,
        )
        .map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// A word in the positive monoid, stored as blocks `(letter, exponent)` with
/// positive exponents and distinct adjacent letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrWord {
    blocks: Vec<(Letter, BigInt)>,
}

impl LrWord {
    pub fn empty() -> LrWord {
        LrWord { blocks: Vec::new() }
    }

    /// Builds a word from blocks, merging adjacent equal letters and
    /// rejecting non-positive exponents.
    pub fn from_blocks(blocks: impl IntoIterator<Item = (Letter, BigInt)>) -> Result<LrWord> {
        let mut w = LrWord::empty();
        for (letter, exp) in blocks {
            if !exp.is_positive() {
                return Err(Error::domain(format!(
                    "block exponent must be positive, got {letter}^{exp}"
                )));
            }
            w.push(letter, exp);
        }
        Ok(w)
    }

    fn push(&mut self, letter: Letter, exp: BigInt) {
        if exp.is_zero() {
            return;
        }
        match self.blocks.last_mut() {
            Some((last, e)) if *last == letter => *e += exp,
            _ => self.blocks.push((letter, exp)),
        }
    }

    pub fn blocks(&self) -> &[(Letter, BigInt)] {
        &self.blocks
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Total number of letters.
    pub fn len(&self) -> BigInt {
        self.blocks.iter().map(|(_, e)| e).sum()
    }

    /// Evaluates the word left-to-right as a matrix product.
    pub fn matrix(&self) -> Mat2 {
        let mut m = Mat2::identity();
        for (letter, e) in &self.blocks {
            let block = match letter {
                Letter::L => Mat2::l_pow(e.clone()),
                Letter::R => Mat2::r_pow(e.clone()),
            };
            m = &m * &block;
        }
        m
    }

    /// Parses either the compact form `LRRLLL` or the block form
    /// `L^1 R^2 L^3` (mixing is allowed, whitespace is ignored).
    pub fn parse(text: &str) -> Result<LrWord> {
        let bytes = text.as_bytes();
        let mut i = 0;
        let mut w = LrWord::empty();
        while i < bytes.len() {
            let ch = bytes[i] as char;
            if ch.is_whitespace() {
                i += 1;
                continue;
            }
            let letter = match ch.to_ascii_uppercase() {
                'L' => Letter::L,
                'R' => Letter::R,
                _ => {
                    return Err(Error::Parse {
                        pos: i,
                        msg: format!("expected L or R, found `{ch}`"),
                    })
                }
            };
            i += 1;
            let mut exp = BigInt::one();
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(Error::Parse {
                        pos: i,
                        msg: "expected digits after `^`".to_string(),
                    });
                }
                exp = text[start..i].parse::<BigInt>().unwrap();
                if !exp.is_positive() {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "exponent must be positive".to_string(),
                    });
                }
            }
            w.push(letter, exp);
        }
        Ok(w)
    }

    /// Compact rendering, one character per letter.
    pub fn compact(&self) -> String {
        let mut out = String::new();
        for (letter, e) in &self.blocks {
            let reps = e.to_usize().expect("word too long to render compactly");
            for _ in 0..reps {
                out.push(letter.as_char());
            }
        }
        out
    }
}

impl fmt::Display for LrWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.compact())
    }
}

/// Recovers the unique monoid word whose matrix matches the interval, by
/// greedily peeling whole `L`/`R` blocks off the left of the matrix.
pub fn word_of_interval(interval: &FareyInterval) -> LrWord {
    let m = interval.matrix();
    let (mut a, mut b, mut c, mut d) = (m.m11, m.m21, m.m12, m.m22);
    let mut word = LrWord::empty();
    loop {
        // Matrix is (a c; b d); identity terminates.
        if a.is_one() && d.is_one() && b.is_zero() && c.is_zero() {
            return word;
        }
        // L^{-k} (a c; b d) = (a, c; b - ka, d - kc); a block of k L's peels
        // off iff the result stays nonnegative.
        let l_count = match (a.is_zero(), c.is_zero()) {
            (false, false) => (b.div_floor(&a)).min(d.div_floor(&c)),
            (false, true) => b.div_floor(&a),
            (true, false) => d.div_floor(&c),
            (true, true) => unreachable!("zero row in a determinant-one matrix"),
        };
        if l_count.is_positive() && &b - &l_count * &a >= BigInt::zero() {
            b -= &l_count * &a;
            d -= &l_count * &c;
            word.push(Letter::L, l_count);
            continue;
        }
        // R^{-k} (a c; b d) = (a - kb, c - kd; b, d).
        let r_count = match (b.is_zero(), d.is_zero()) {
            (false, false) => (a.div_floor(&b)).min(c.div_floor(&d)),
            (false, true) => a.div_floor(&b),
            (true, false) => c.div_floor(&d),
            (true, true) => unreachable!("zero row in a determinant-one matrix"),
        };
        if r_count.is_positive() {
            a -= &r_count * &b;
            c -= &r_count * &d;
            word.push(Letter::R, r_count);
            continue;
        }
        unreachable!("nonnegative determinant-one matrix failed to factor");
    }
}

/// Expanding eigenvalue `λ` and eigenvector slope `s` of a matrix with
/// trace > 2, as exact values over `D = tr² - 4`.
///
/// The matrix acts on column vectors; `s` is the `y/x` ratio of the
/// eigenvector `(1, s)ᵀ` with `M (1, s)ᵀ = λ (1, s)ᵀ`. `D` is never a
/// perfect square here: `tr² - 4 = n²` forces `tr = ±2`.
pub fn eigen_data(m: &Mat2) -> Result<(Quad, Quad)> {
    let tr = m.trace();
    if tr <= BigInt::from(2) {
        return Err(Error::NotHyperbolic { trace: tr });
    }
    let d: BigInt = &tr * &tr - 4;
    let lambda = Quad::new(tr.clone(), 1, 2, d.clone())?;
    let slope = if !m.m12.is_zero() {
        // s = (λ - m11)/m12 = (tr - 2·m11 + √D) / (2·m12).
        Quad::new(&tr - 2 * &m.m11, 1, 2 * &m.m12, d)?
    } else {
        // det = m11·m22 = 1 with m12 = 0 forces tr = ±2, excluded above.
        return Err(Error::internal(
            "hyperbolic matrix with zero upper-right entry".to_string(),
        ));
    };
    Ok((lambda, slope))
}

/// The cyclic block word of a hyperbolic matrix.
///
/// Returns pairs `(p_1, q_1), …, (p_k, q_k)` in the lexicographically least
/// rotation together with the repetition count `n` of the primitive block,
/// such that `±M` is conjugate in `SL(2, Z)` to
/// `L^{q_k} R^{p_k} ⋯ L^{q_1} R^{p_1}` (the pair list already contains the
/// `n` repetitions).
pub fn lr_cycle_of_matrix(m: &Mat2) -> Result<(Vec<(BigInt, BigInt)>, u64)> {
    let tr = m.trace();
    if tr.abs() <= BigInt::from(2) {
        return Err(Error::NotHyperbolic { trace: tr });
    }
    let m0 = if tr.is_positive() { m.clone() } else { -m };
    let target = tr.abs();

    // The attracting fixed point of the slope action is the expanding
    // eigenvector slope: the multiplier there is 1/λ² < 1.
    let (_, slope) = eigen_data(&m0)?;
    let cf = cf_of_quad(&slope)?;
    let t = cf.period.len();
    debug_assert!(t > 0);

    // Each continued-fraction step conjugates the fixed matrix by a
    // determinant -1 elementary matrix, so only an even number of steps
    // preserves the SL(2, Z) class. An odd-length minimal period is doubled,
    // after which any rotation parity reads off a cyclic rotation of the same
    // block word. For an even-length period the entry parity matters: the
    // cycle must be read from an even step index, so a period that starts
    // after an odd preperiod is rotated by one.
    let seq: Vec<BigInt> = if t % 2 == 1 {
        cf.period.iter().chain(cf.period.iter()).cloned().collect()
    } else if cf.preperiod.len() % 2 == 0 {
        cf.period.clone()
    } else {
        let mut rotated = cf.period[1..].to_vec();
        rotated.push(cf.period[0].clone());
        rotated
    };

    // seq = (q_k', p_k', q_{k'-1}, p_{k'-1}, …, q_1, p_1).
    let k_prime = seq.len() / 2;
    let mut pairs: Vec<(BigInt, BigInt)> = Vec::with_capacity(k_prime);
    for i in 0..k_prime {
        let q = seq[seq.len() - 2 - 2 * i].clone();
        let p = seq[seq.len() - 1 - 2 * i].clone();
        pairs.push((p, q));
    }

    let w = word_of_pairs(&pairs).matrix();
    let mut power = w.clone();
    let mut n: u64 = 1;
    while power.trace() < target {
        power = &power * &w;
        n += 1;
    }
    if power.trace() != target {
        return Err(Error::internal(format!(
            "trace matching failed for {m}: block word {} overshoots |tr| = {target}",
            word_of_pairs(&pairs)
        )));
    }

    let mut full: Vec<(BigInt, BigInt)> = Vec::with_capacity(k_prime * n as usize);
    for _ in 0..n {
        full.extend(pairs.iter().cloned());
    }
    Ok((canonical_rotation(&full), n))
}

/// The word `L^{q_k} R^{p_k} ⋯ L^{q_1} R^{p_1}` of a pair list
/// `(p_1, q_1), …, (p_k, q_k)`.
pub fn word_of_pairs(pairs: &[(BigInt, BigInt)]) -> LrWord {
    let mut w = LrWord::empty();
    for (p, q) in pairs.iter().rev() {
        w.push(Letter::L, q.clone());
        w.push(Letter::R, p.clone());
    }
    w
}

/// Lexicographically least rotation of a pair list.
pub fn canonical_rotation(pairs: &[(BigInt, BigInt)]) -> Vec<(BigInt, BigInt)> {
    if pairs.is_empty() {
        return Vec::new();
    }
    let rotation = |start: usize| {
        pairs[start..]
            .iter()
            .chain(pairs[..start].iter())
            .cloned()
            .collect::<Vec<_>>()
    };
    let mut best = rotation(0);
    for start in 1..pairs.len() {
        let cand = rotation(start);
        if cand < best {
            best = cand;
        }
    }
    best
}

/// Whether two pair lists agree up to rotation.
pub fn pairs_equal_cyclically(a: &[(BigInt, BigInt)], b: &[(BigInt, BigInt)]) -> bool {
    a.len() == b.len() && canonical_rotation(a) == canonical_rotation(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn pairs(v: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        v.iter().map(|&(p, q)| (big(p), big(q))).collect()
    }

    #[test]
    fn generators_and_products() {
        assert_eq!(&Mat2::l() * &Mat2::r(), Mat2::new(1, 1, 1, 2).unwrap());
        assert_eq!(LrWord::empty().matrix(), Mat2::identity());
        let w = LrWord::parse("LRRLLL").unwrap();
        assert_eq!(w.matrix(), Mat2::new(7, 2, 10, 3).unwrap());
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(Mat2::new(1, 1, 1, 1).is_err());
        assert!(Mat2::new(2, 0, 0, 2).is_err());
    }

    #[test]
    fn halving_steps_match_worked_chain() {
        let base = FareyInterval::base();
        let step1 = base.halve(Half::Right);
        assert_eq!(step1.to_string(), "[1/1, 1/0]");
        let step2 = step1.halve(Half::Left);
        assert_eq!(step2.to_string(), "[1/1, 2/1]");
        let i = FareyInterval::new(1, 1, 2, 3).unwrap(); // [1/1, 3/2]
        assert_eq!(i.halve(Half::Right).to_string(), "[4/3, 3/2]");
    }

    #[test]
    fn interval_matrix_correspondence() {
        let i = FareyInterval::new(7, 10, 2, 3).unwrap();
        assert_eq!(i.to_string(), "[10/7, 3/2]");
        assert_eq!(i.matrix(), Mat2::new(7, 2, 10, 3).unwrap());
        assert_eq!(FareyInterval::from_matrix(&i.matrix()).unwrap(), i);
    }

    #[test]
    fn word_of_interval_examples() {
        let i = FareyInterval::new(7, 10, 2, 3).unwrap();
        assert_eq!(word_of_interval(&i).to_string(), "LRRLLL");
        assert!(word_of_interval(&FareyInterval::base()).is_empty());
        let l = FareyInterval::new(1, 1, 0, 1).unwrap(); // [1/1, 1/0]
        assert_eq!(word_of_interval(&l).to_string(), "L");
    }

    #[test]
    fn word_block_form_parses() {
        let w = LrWord::parse("L^2 R^3 L^1 R^1").unwrap();
        assert_eq!(w.compact(), "LLRRRLR");
        assert_eq!(LrWord::parse("LLRRRLR").unwrap(), w);
        assert!(LrWord::parse("L^0").is_err());
        assert!(LrWord::parse("X").is_err());
    }

    #[test]
    fn eigen_data_examples() {
        let (lambda, s) = eigen_data(&Mat2::new(1, 1, 1, 2).unwrap()).unwrap();
        assert_eq!(lambda, Quad::new(3, 1, 2, 5).unwrap());
        assert_eq!(s, Quad::new(1, 1, 2, 5).unwrap());

        let (lambda, s) = eigen_data(&Mat2::new(2, 1, 1, 1).unwrap()).unwrap();
        assert_eq!(lambda, Quad::new(3, 1, 2, 5).unwrap());
        assert_eq!(s, Quad::new(-1, 1, 2, 5).unwrap());

        let (lambda, s) = eigen_data(&Mat2::new(1, 2, 1, 3).unwrap()).unwrap();
        assert_eq!(lambda, Quad::new(4, 1, 2, 12).unwrap());
        assert_eq!(s, Quad::new(2, 1, 4, 12).unwrap());
    }

    #[test]
    fn eigen_equation_holds_exactly() {
        for m in [
            Mat2::new(1, 1, 1, 2).unwrap(),
            Mat2::new(2, 1, 1, 1).unwrap(),
            Mat2::new(1, 2, 1, 3).unwrap(),
            LrWord::parse("LLRRRLR").unwrap().matrix(),
        ] {
            let (lambda, s) = eigen_data(&m).unwrap();
            let one = Quad::one(lambda.d().clone()).unwrap();
            let (x, y) = m.apply(&one, &s).unwrap();
            assert_eq!(x, lambda.checked_mul(&one).unwrap());
            assert_eq!(y, lambda.checked_mul(&s).unwrap());
            // λ · λ̄ = 1.
            let conj = Quad::new(m.trace(), -1, 2, lambda.d().clone()).unwrap();
            assert_eq!(lambda.checked_mul(&conj).unwrap(), one);
        }
    }

    #[test]
    fn eigen_rejects_non_hyperbolic() {
        assert!(matches!(
            eigen_data(&Mat2::identity()),
            Err(Error::NotHyperbolic { .. })
        ));
        assert!(matches!(
            eigen_data(&Mat2::l()),
            Err(Error::NotHyperbolic { .. })
        ));
    }

    #[test]
    fn lr_cycle_primitive() {
        let (p, n) = lr_cycle_of_matrix(&Mat2::new(1, 1, 1, 2).unwrap()).unwrap();
        assert_eq!(p, pairs(&[(1, 1)]));
        assert_eq!(n, 1);
    }

    #[test]
    fn lr_cycle_of_conjugate() {
        // R² (LR) R⁻² = (3 -1; 1 0).
        let m = Mat2::new(3, -1, 1, 0).unwrap();
        let (p, n) = lr_cycle_of_matrix(&m).unwrap();
        assert_eq!(p, pairs(&[(1, 1)]));
        assert_eq!(n, 1);
    }

    #[test]
    fn lr_cycle_of_power() {
        let lr = Mat2::new(1, 1, 1, 2).unwrap();
        let sq = &lr * &lr;
        assert_eq!(sq, Mat2::new(2, 3, 3, 5).unwrap());
        let (p, n) = lr_cycle_of_matrix(&sq).unwrap();
        assert_eq!(p, pairs(&[(1, 1), (1, 1)]));
        assert_eq!(n, 2);
    }

    #[test]
    fn lr_cycle_period_alignment() {
        // L (LR²) L⁻¹ enters the continued-fraction cycle after one step, so
        // a naive reading of the period would report the pairs of L²R.
        let lr2 = LrWord::parse("LRR").unwrap().matrix();
        let conj = &(&Mat2::l() * &lr2) * &Mat2::l().inverse();
        let (p, _) = lr_cycle_of_matrix(&conj).unwrap();
        assert_eq!(p, pairs(&[(2, 1)]));
        // And L²R keeps its own pairs.
        let l2r = LrWord::parse("LLR").unwrap().matrix();
        let (p, _) = lr_cycle_of_matrix(&l2r).unwrap();
        assert_eq!(p, pairs(&[(1, 2)]));
    }

    #[test]
    fn lr_cycle_sign_symmetry() {
        for word in ["LR", "LRR", "LLRLRRR", "LRLRLR"] {
            let m = LrWord::parse(word).unwrap().matrix();
            let pos = lr_cycle_of_matrix(&m).unwrap();
            let neg = lr_cycle_of_matrix(&-&m).unwrap();
            assert_eq!(pos, neg);
        }
    }

    #[test]
    fn lr_cycle_rejects_non_hyperbolic() {
        assert!(lr_cycle_of_matrix(&Mat2::identity()).is_err());
        assert!(lr_cycle_of_matrix(&Mat2::r()).is_err());
        let rot = Mat2::new(0, -1, 1, 0).unwrap();
        assert!(lr_cycle_of_matrix(&rot).is_err());
    }

    #[test]
    fn canonical_rotation_is_least() {
        let p = pairs(&[(3, 4), (1, 2)]);
        assert_eq!(canonical_rotation(&p), pairs(&[(1, 2), (3, 4)]));
        assert!(pairs_equal_cyclically(
            &pairs(&[(3, 4), (1, 2)]),
            &pairs(&[(1, 2), (3, 4)])
        ));
        assert!(!pairs_equal_cyclically(
            &pairs(&[(5, 1)]),
            &pairs(&[(1, 5)])
        ));
    }

    #[test]
    fn word_of_pairs_order() {
        let w = word_of_pairs(&pairs(&[(1, 1), (2, 3)]));
        // A = L^{q_2} R^{p_2} L^{q_1} R^{p_1} = L³R²L¹R¹.
        assert_eq!(w.to_string(), "LLLRRLR");
    }
}
