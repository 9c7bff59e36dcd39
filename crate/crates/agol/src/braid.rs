//! 3-braid words, their matrix images, Nielsen–Thurston classification, and
//! the cyclic normal form classifying pseudo-Anosov conjugacy classes.
//!
//! The quotient of the 3-braid group by its center is `PSL(2, Z)`; concretely
//! `σ₁ ↦ R` and `σ₂ ↦ L⁻¹`, with a braid word mapping to the product of its
//! letter images in *reverse* word order (braid words compose left to right,
//! mapping classes right to left). Under this map the half twist
//! `Δ = σ₁σ₂σ₁` goes to `(0 1; -1 0)` and the full twist `Δ²` to `-I`, so the
//! center dies in `PSL(2, Z)` and the trace of the image classifies a braid
//! as periodic, reducible or pseudo-Anosov.
//!
//! A pseudo-Anosov braid is conjugate to
//! `Δ^{2j} σ₁^{p_1} σ₂^{-q_1} ⋯ σ₁^{p_k} σ₂^{-q_k}` with `j` and the cyclic
//! pair list `(p_i, q_i)` unique; [`murasugi_form`] recovers that datum from
//! any word.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::farey::{canonical_rotation, lr_cycle_of_matrix, Mat2};

/// The two Artin generators of the 3-braid group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Sigma1,
    Sigma2,
}

/// A 3-braid word: a list of signed generator letters. Not freely reduced
/// unless [`BraidWord::free_reduced`] is asked for.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    letters: Vec<(Gen, i8)>,
}

impl BraidWord {
    pub fn new() -> BraidWord {
        BraidWord::default()
    }

    pub fn letters(&self) -> &[(Gen, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, gen: Gen, sign: i8) {
        debug_assert!(sign == 1 || sign == -1);
        self.letters.push((gen, sign));
    }

    /// Appends `gen^exp` (letter by letter; `exp` may be negative).
    pub fn push_power(&mut self, gen: Gen, exp: i64) {
        let sign = if exp >= 0 { 1 } else { -1 };
        for _ in 0..exp.unsigned_abs() {
            self.push(gen, sign);
        }
    }

    /// Appends `Δ^exp` with `Δ = σ₁σ₂σ₁`.
    pub fn push_half_twist_power(&mut self, exp: i64) {
        if exp >= 0 {
            for _ in 0..exp {
                self.push(Gen::Sigma1, 1);
                self.push(Gen::Sigma2, 1);
                self.push(Gen::Sigma1, 1);
            }
        } else {
            for _ in 0..(-exp) {
                self.push(Gen::Sigma1, -1);
                self.push(Gen::Sigma2, -1);
                self.push(Gen::Sigma1, -1);
            }
        }
    }

    /// Concatenation.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    /// The inverse word (letters reversed with signs flipped).
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&(g, s)| (g, -s))
                .collect(),
        }
    }

    /// `self · w · self⁻¹`.
    pub fn conjugate(&self, w: &BraidWord) -> BraidWord {
        self.concat(w).concat(&self.inverse())
    }

    /// Signed letter count; a conjugacy invariant.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&(_, s)| s as i64).sum()
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduced(&self) -> BraidWord {
        let mut stack: Vec<(Gen, i8)> = Vec::with_capacity(self.letters.len());
        for &(g, s) in &self.letters {
            match stack.last() {
                Some(&(tg, ts)) if tg == g && ts == -s => {
                    stack.pop();
                }
                _ => stack.push((g, s)),
            }
        }
        BraidWord { letters: stack }
    }

    /// Parses the grammar `word := token*`,
    /// `token := ("s1" | "s2" | "D") ["^" integer]`, case-insensitive,
    /// whitespace-insensitive. `D` is the half twist `σ₁σ₂σ₁`, expanded
    /// literally.
    pub fn parse(text: &str) -> Result<BraidWord> {
        let bytes = text.as_bytes();
        let mut i = 0;
        let mut word = BraidWord::new();
        while i < bytes.len() {
            let ch = bytes[i] as char;
            if ch.is_whitespace() {
                i += 1;
                continue;
            }
            let (token, token_len): (Option<Gen>, usize) = match ch.to_ascii_lowercase() {
                's' => {
                    match bytes.get(i + 1) {
                        Some(b'1') => (Some(Gen::Sigma1), 2),
                        Some(b'2') => (Some(Gen::Sigma2), 2),
                        _ => {
                            return Err(Error::Parse {
                                pos: i,
                                msg: "expected `s1` or `s2`".to_string(),
                            })
                        }
                    }
                }
                'd' => (None, 1),
                _ => {
                    return Err(Error::Parse {
                        pos: i,
                        msg: format!("unknown token starting with `{ch}`"),
                    })
                }
            };
            i += token_len;
            let mut exp: i64 = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let start = i;
                if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == start || (i == start + 1 && !bytes[start].is_ascii_digit()) {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "expected an integer exponent after `^`".to_string(),
                    });
                }
                exp = text[start..i].parse::<i64>().map_err(|e| Error::Parse {
                    pos: start,
                    msg: format!("bad exponent: {e}"),
                })?;
                if exp == 0 {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "exponent must be nonzero".to_string(),
                    });
                }
            }
            match token {
                Some(gen) => word.push_power(gen, exp),
                None => word.push_half_twist_power(exp),
            }
        }
        Ok(word)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let (g, s) = self.letters[i];
            let mut run = 0i64;
            while i < self.letters.len() && self.letters[i] == (g, s) {
                run += 1;
                i += 1;
            }
            let name = match g {
                Gen::Sigma1 => "s1",
                Gen::Sigma2 => "s2",
            };
            let exp = run * s as i64;
            if exp == 1 {
                out.push(name.to_string());
            } else {
                out.push(format!("{name}^{exp}"));
            }
        }
        write!(f, "{}", out.join(" "))
    }
}

/// Image of a braid word in `SL(2, Z)` together with its exponent sum.
///
/// Letters map as `σ₁ ↦ R`, `σ₂ ↦ L⁻¹` and the product is taken in reverse
/// word order, matching composition of the induced mapping classes; on
/// concatenation `rho_image(u·v) = rho_image(v) · rho_image(u)`.
pub fn rho_image(word: &BraidWord) -> (Mat2, i64) {
    let r = Mat2::r();
    let r_inv = r.inverse();
    let l = Mat2::l();
    let l_inv = l.inverse();
    let mut m = Mat2::identity();
    for &(g, s) in &word.letters {
        let img = match (g, s) {
            (Gen::Sigma1, 1) => &r,
            (Gen::Sigma1, _) => &r_inv,
            (Gen::Sigma2, 1) => &l_inv,
            (Gen::Sigma2, _) => &l,
        };
        m = img * &m;
    }
    (m, word.exponent_sum())
}

/// The conjugacy datum of a pseudo-Anosov 3-braid:
/// `Δ^{2j} σ₁^{p_1} σ₂^{-q_1} ⋯ σ₁^{p_k} σ₂^{-q_k}` with the pair list kept
/// in its lexicographically least rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsaForm {
    j: i64,
    pairs: Vec<(BigInt, BigInt)>,
}

impl PsaForm {
    /// Builds a form from any rotation of the pair list.
    pub fn new(j: i64, pairs: Vec<(BigInt, BigInt)>) -> Result<PsaForm> {
        if pairs.is_empty() {
            return Err(Error::domain("normal form needs at least one pair"));
        }
        for (p, q) in &pairs {
            if !p.is_positive() || !q.is_positive() {
                return Err(Error::domain(format!(
                    "normal-form exponents must be positive, got ({p}, {q})"
                )));
            }
        }
        Ok(PsaForm {
            j,
            pairs: canonical_rotation(&pairs),
        })
    }

    pub fn from_small_pairs(j: i64, pairs: &[(u64, u64)]) -> Result<PsaForm> {
        PsaForm::new(
            j,
            pairs
                .iter()
                .map(|&(p, q)| (BigInt::from(p), BigInt::from(q)))
                .collect(),
        )
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    pub fn pairs(&self) -> &[(BigInt, BigInt)] {
        &self.pairs
    }

    /// `ℓ = Σ (p_i + q_i)`, the length of the splitting cycle.
    pub fn ell(&self) -> BigInt {
        self.pairs.iter().map(|(p, q)| p + q).sum()
    }

    /// `Σ p_i - Σ q_i`.
    pub fn exponent_diff(&self) -> BigInt {
        self.pairs.iter().map(|(p, q)| p - q).sum()
    }

    /// Materializes the word `Δ^{2j} σ₁^{p_1} σ₂^{-q_1} ⋯`.
    pub fn braid_word(&self) -> BraidWord {
        let mut w = BraidWord::new();
        w.push_half_twist_power(2 * self.j);
        for (p, q) in &self.pairs {
            let p = p.to_i64().expect("pair exponent too large to materialize");
            let q = q.to_i64().expect("pair exponent too large to materialize");
            w.push_power(Gen::Sigma1, p);
            w.push_power(Gen::Sigma2, -q);
        }
        w
    }
}

impl fmt::Display for PsaForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", 2 * self.j)?;
        for (p, q) in &self.pairs {
            write!(f, " s1^{p} s2^-{q}")?;
        }
        Ok(())
    }
}

/// Wire form of [`PsaForm`]: `j` as a number, pairs as decimal strings.
#[derive(Serialize, Deserialize)]
struct PsaFormRepr {
    j: i64,
    pairs: Vec<(String, String)>,
}

impl Serialize for PsaForm {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        PsaFormRepr {
            j: self.j,
            pairs: self
                .pairs
                .iter()
                .map(|(p, q)| (p.to_string(), q.to_string()))
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PsaForm {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<PsaForm, D::Error> {
        use serde::de::Error as _;
        let repr = PsaFormRepr::deserialize(de)?;
        let mut pairs = Vec::with_capacity(repr.pairs.len());
        for (p, q) in &repr.pairs {
            let parse = |s: &str| {
                s.parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad integer `{s}`: {e}")))
            };
            pairs.push((parse(p)?, parse(q)?));
        }
        PsaForm::new(repr.j, pairs).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// Nielsen–Thurston type of a 3-braid, decided through its matrix image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Periodic,
    Reducible,
    PseudoAnosov(PsaForm),
}

impl Classification {
    pub fn type_name(&self) -> &'static str {
        match self {
            Classification::Periodic => "periodic",
            Classification::Reducible => "reducible",
            Classification::PseudoAnosov(_) => "pseudo-anosov",
        }
    }
}

/// Classifies a braid word: `|tr| > 2` is pseudo-Anosov, `±I` and `|tr| < 2`
/// are periodic (elliptic or central), `|tr| = 2` otherwise is reducible.
pub fn classify(word: &BraidWord) -> Result<Classification> {
    let (m, _) = rho_image(word);
    let tr = m.trace().abs();
    if tr > BigInt::from(2) {
        return Ok(Classification::PseudoAnosov(murasugi_form(word)?));
    }
    if m.is_identity() || m.is_minus_identity() || tr < BigInt::from(2) {
        return Ok(Classification::Periodic);
    }
    Ok(Classification::Reducible)
}

/// Extracts the normal-form datum `(j, pairs)` of a pseudo-Anosov word.
pub fn murasugi_form(word: &BraidWord) -> Result<PsaForm> {
    let (m, exponent_sum) = rho_image(word);
    let (pairs, _) = lr_cycle_of_matrix(&m).map_err(|e| match e {
        Error::NotHyperbolic { .. } => not_pa_error(word),
        other => other,
    })?;
    let diff: BigInt = pairs.iter().map(|(p, q)| p - q).sum();
    let six_j = BigInt::from(exponent_sum) - diff;
    let (j, rem) = num_integer::Integer::div_rem(&six_j, &BigInt::from(6));
    if !rem.is_zero() {
        return Err(Error::internal(format!(
            "twist exponent not integral for `{word}`: 6j = {six_j}"
        )));
    }
    let j = j
        .to_i64()
        .ok_or_else(|| Error::internal("twist exponent overflow".to_string()))?;
    PsaForm::new(j, pairs)
}

fn not_pa_error(word: &BraidWord) -> Error {
    let class = match classify(word) {
        Ok(c) => c.type_name().to_string(),
        Err(_) => "unclassifiable".to_string(),
    };
    Error::NotPseudoAnosov {
        word: word.to_string(),
        class,
    }
}

fn require_pa(word: &BraidWord) -> Result<PsaForm> {
    let (m, _) = rho_image(word);
    if m.trace().abs() <= BigInt::from(2) {
        return Err(not_pa_error(word));
    }
    murasugi_form(word)
}

/// Conjugacy in `B₃/Z(B₃)`: true iff the canonical pair lists agree
/// (the full twist is central, so `j` plays no role).
pub fn conjugate_mod_center(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    let f1 = require_pa(w1)?;
    let f2 = require_pa(w2)?;
    Ok(f1.pairs() == f2.pairs())
}

/// Conjugacy in `B₃`: true iff both `j` and the canonical pair lists agree.
pub fn conjugate_in_b3(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    let f1 = require_pa(w1)?;
    let f2 = require_pa(w2)?;
    Ok(f1 == f2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> BraidWord {
        BraidWord::parse(text).unwrap()
    }

    #[test]
    fn parse_examples() {
        let word = w("s1 s2^-1");
        assert_eq!(
            word.letters(),
            &[(Gen::Sigma1, 1), (Gen::Sigma2, -1)]
        );
        let word = w("s1^3 s2^-2");
        assert_eq!(word.len(), 5);
        assert_eq!(word.exponent_sum(), 1);
        let word = w("D^2 s1 s2^-1");
        assert_eq!(word.len(), 8);
        assert_eq!(word.exponent_sum(), 6);
        // Whitespace-insensitive.
        assert_eq!(w("s1s2^-1"), w("s1 s2^-1"));
        assert_eq!(w("S1 S2"), w("s1 s2"));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match BraidWord::parse("s1 x2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(BraidWord::parse("s3").is_err());
        assert!(BraidWord::parse("s1^").is_err());
        assert!(BraidWord::parse("s1^0").is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["s1 s2^-1", "s1^3 s2^-2", "s1 s1 s2^-1"] {
            let word = w(text);
            assert_eq!(w(&word.to_string()), word);
        }
        assert_eq!(w("s1 s1 s1").to_string(), "s1^3");
        assert_eq!(BraidWord::new().to_string(), "e");
    }

    #[test]
    fn rho_image_examples() {
        let (m, e) = rho_image(&w("s1 s2^-1"));
        assert_eq!(m, Mat2::new(1, 1, 1, 2).unwrap());
        assert_eq!(e, 0);

        let (m, e) = rho_image(&w("D^2"));
        assert!(m.is_minus_identity());
        assert_eq!(e, 6);

        let (m, e) = rho_image(&BraidWord::new());
        assert!(m.is_identity());
        assert_eq!(e, 0);

        let (m, _) = rho_image(&w("D"));
        assert_eq!(m, Mat2::new(0, 1, -1, 0).unwrap());
    }

    #[test]
    fn rho_image_reverses_concatenation() {
        let u = w("s1 s2 s1^-1");
        let v = w("s2^-1 s1 s1");
        let (mu, _) = rho_image(&u);
        let (mv, _) = rho_image(&v);
        let (muv, _) = rho_image(&u.concat(&v));
        assert_eq!(muv, &mv * &mu);
    }

    #[test]
    fn classify_examples() {
        assert!(matches!(
            classify(&w("s1 s2^-1")).unwrap(),
            Classification::PseudoAnosov(_)
        ));
        assert_eq!(classify(&w("s1")).unwrap(), Classification::Reducible);
        assert_eq!(classify(&w("s1 s2")).unwrap(), Classification::Periodic);
        assert_eq!(classify(&w("D^2")).unwrap(), Classification::Periodic);
        assert_eq!(classify(&BraidWord::new()).unwrap(), Classification::Periodic);
    }

    #[test]
    fn murasugi_form_examples() {
        let f = murasugi_form(&w("s1 s2^-1")).unwrap();
        assert_eq!(f.j(), 0);
        assert_eq!(f, PsaForm::from_small_pairs(0, &[(1, 1)]).unwrap());

        let f = murasugi_form(&w("D^2 s1 s2^-1")).unwrap();
        assert_eq!(f.j(), 1);
        assert_eq!(f.pairs(), PsaForm::from_small_pairs(0, &[(1, 1)]).unwrap().pairs());

        let f = murasugi_form(&w("s2^-1 s1")).unwrap();
        assert_eq!(f.j(), 0);
        assert_eq!(f, PsaForm::from_small_pairs(0, &[(1, 1)]).unwrap());
    }

    #[test]
    fn murasugi_round_trip_through_word() {
        for (j, pairs) in [
            (0i64, vec![(1u64, 1u64)]),
            (1, vec![(2, 3)]),
            (-2, vec![(1, 1), (4, 2)]),
            (0, vec![(3, 1), (1, 3), (2, 2)]),
        ] {
            let form = PsaForm::from_small_pairs(j, &pairs).unwrap();
            let recovered = murasugi_form(&form.braid_word()).unwrap();
            assert_eq!(recovered, form);
        }
    }

    #[test]
    fn murasugi_rejects_non_pa() {
        assert!(matches!(
            murasugi_form(&w("s1")),
            Err(Error::NotPseudoAnosov { .. })
        ));
    }

    #[test]
    fn conjugacy_decisions() {
        assert!(conjugate_mod_center(&w("s1 s2^-1"), &w("s2^-1 s1")).unwrap());
        assert!(conjugate_mod_center(&w("s1 s2^-1"), &w("D^2 s1 s2^-1")).unwrap());
        assert!(!conjugate_mod_center(&w("s1^5 s2^-1"), &w("s1 s2^-5")).unwrap());

        assert!(!conjugate_in_b3(&w("s1 s2^-1"), &w("D^2 s1 s2^-1")).unwrap());
        assert!(conjugate_in_b3(&w("s1 s2^-1"), &w("s2^-1 s1")).unwrap());
        let word = w("s1^2 s2^-3");
        assert!(conjugate_in_b3(&word, &word).unwrap());

        assert!(matches!(
            conjugate_mod_center(&w("s1"), &w("s1 s2^-1")),
            Err(Error::NotPseudoAnosov { .. })
        ));
    }

    #[test]
    fn exponent_sum_matches_form() {
        let form = PsaForm::from_small_pairs(2, &[(3, 1), (1, 4)]).unwrap();
        let word = form.braid_word();
        let expected: BigInt = BigInt::from(6 * 2) + form.exponent_diff();
        assert_eq!(BigInt::from(word.exponent_sum()), expected);
    }

    #[test]
    fn free_reduction() {
        let word = w("s1 s2 s2^-1 s1^-1 s1 s2^-1");
        let red = word.free_reduced();
        assert_eq!(red, w("s1 s2^-1"));
    }
}
