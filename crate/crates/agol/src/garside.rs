//! Garside left normal forms in the 3-braid group, canonical length, and
//! cycling/decycling down to the super-summit canonical length.
//!
//! The six simple elements (permutation braids) of `B₃` are `e`, `σ₁`, `σ₂`,
//! `σ₁σ₂`, `σ₂σ₁` and the half twist `Δ = σ₁σ₂σ₁`. Every braid has a unique
//! expression `Δ^r P₁ ⋯ P_s` with the `P_i` simple, none equal to `e` or
//! `Δ`, and each adjacent pair *left-weighted*: the starting set of `P_{i+1}`
//! is contained in the finishing set of `P_i`. The number `s` of factors is
//! the canonical length.
//!
//! Inverse generators are removed by `σ₁⁻¹ = Δ⁻¹ σ₁σ₂` and
//! `σ₂⁻¹ = Δ⁻¹ σ₂σ₁`, shifting `Δ⁻¹` to the left through the flip
//! automorphism `τ` (`σ₁ ↔ σ₂`); the positive remainder is then factored
//! with a precomputed table of products, complements and left gcds over the
//! six simples, realized as arithmetic in the symmetric group `S₃`.

use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::braid::{BraidWord, Gen};
use crate::error::{Error, Result};

/// A permutation of three strands, as the image array of positions 0..3.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct Perm([u8; 3]);

const PERM_E: Perm = Perm([0, 1, 2]);
const PERM_S1: Perm = Perm([1, 0, 2]);
const PERM_S2: Perm = Perm([0, 2, 1]);
const PERM_S1S2: Perm = Perm([2, 0, 1]);
const PERM_S2S1: Perm = Perm([1, 2, 0]);
const PERM_DELTA: Perm = Perm([2, 1, 0]);

impl Perm {
    /// `self` then `rhs`.
    fn then(self, rhs: Perm) -> Perm {
        Perm([
            rhs.0[self.0[0] as usize],
            rhs.0[self.0[1] as usize],
            rhs.0[self.0[2] as usize],
        ])
    }

    fn inverse(self) -> Perm {
        let mut out = [0u8; 3];
        for (i, &v) in self.0.iter().enumerate() {
            out[v as usize] = i as u8;
        }
        Perm(out)
    }

    /// Coxeter length = inversion count.
    fn len(self) -> u8 {
        let mut inv = 0;
        for i in 0..3 {
            for j in (i + 1)..3 {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        inv
    }
}

/// The six simple elements of `B₃`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Simple {
    E,
    S1,
    S2,
    S1S2,
    S2S1,
    Delta,
}

const ALL_SIMPLES: [Simple; 6] = [
    Simple::E,
    Simple::S1,
    Simple::S2,
    Simple::S1S2,
    Simple::S2S1,
    Simple::Delta,
];

impl Simple {
    fn perm(self) -> Perm {
        match self {
            Simple::E => PERM_E,
            Simple::S1 => PERM_S1,
            Simple::S2 => PERM_S2,
            Simple::S1S2 => PERM_S1S2,
            Simple::S2S1 => PERM_S2S1,
            Simple::Delta => PERM_DELTA,
        }
    }

    fn from_perm(p: Perm) -> Simple {
        match p {
            PERM_E => Simple::E,
            PERM_S1 => Simple::S1,
            PERM_S2 => Simple::S2,
            PERM_S1S2 => Simple::S1S2,
            PERM_S2S1 => Simple::S2S1,
            PERM_DELTA => Simple::Delta,
            _ => unreachable!("not a permutation of three strands"),
        }
    }

    fn index(self) -> usize {
        match self {
            Simple::E => 0,
            Simple::S1 => 1,
            Simple::S2 => 2,
            Simple::S1S2 => 3,
            Simple::S2S1 => 4,
            Simple::Delta => 5,
        }
    }

    /// Crossing count of the simple.
    pub fn len(self) -> usize {
        self.perm().len() as usize
    }

    /// Generator letters spelling the simple.
    pub fn letters(self) -> &'static [Gen] {
        match self {
            Simple::E => &[],
            Simple::S1 => &[Gen::Sigma1],
            Simple::S2 => &[Gen::Sigma2],
            Simple::S1S2 => &[Gen::Sigma1, Gen::Sigma2],
            Simple::S2S1 => &[Gen::Sigma2, Gen::Sigma1],
            Simple::Delta => &[Gen::Sigma1, Gen::Sigma2, Gen::Sigma1],
        }
    }

    /// The flip automorphism `τ = Δ(·)Δ⁻¹`, exchanging `σ₁ ↔ σ₂`.
    pub fn flip(self) -> Simple {
        match self {
            Simple::E => Simple::E,
            Simple::S1 => Simple::S2,
            Simple::S2 => Simple::S1,
            Simple::S1S2 => Simple::S2S1,
            Simple::S2S1 => Simple::S1S2,
            Simple::Delta => Simple::Delta,
        }
    }

    /// Starting set as a bitmask: bit 0 for `σ₁`, bit 1 for `σ₂`.
    pub fn starting_set(self) -> u8 {
        tables().starting[self.index()]
    }

    /// Finishing set as a bitmask: bit 0 for `σ₁`, bit 1 for `σ₂`.
    pub fn finishing_set(self) -> u8 {
        tables().finishing[self.index()]
    }

    pub fn name(self) -> &'static str {
        match self {
            Simple::E => "e",
            Simple::S1 => "s1",
            Simple::S2 => "s2",
            Simple::S1S2 => "s1s2",
            Simple::S2S1 => "s2s1",
            Simple::Delta => "D",
        }
    }
}

impl fmt::Display for Simple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Precomputed data over the six simples: starting/finishing sets and the
/// left-weighted two-factor rewriting of every product `u·v`.
struct Tables {
    starting: [u8; 6],
    finishing: [u8; 6],
    /// `pair[u][v] = (delta_emitted, first, second)` with
    /// `u·v = Δ^{delta_emitted} · first · second` left-weighted; `first` or
    /// `second` may be `E` when the product collapses.
    pair: [[(u8, Simple, Simple); 6]; 6],
}

fn left_divides(s: Perm, x: Perm) -> bool {
    s.len() + s.inverse().then(x).len() == x.len()
}

fn right_divides(s: Perm, x: Perm) -> bool {
    x.then(s.inverse()).len() + s.len() == x.len()
}

fn left_gcd(x: Perm, y: Perm) -> Perm {
    let mut best = PERM_E;
    for s in ALL_SIMPLES {
        let p = s.perm();
        if left_divides(p, x) && left_divides(p, y) && p.len() > best.len() {
            best = p;
        }
    }
    // The divisor lattice under Δ makes the gcd unique: every common divisor
    // divides the longest one.
    debug_assert!(ALL_SIMPLES.iter().all(|s| {
        let p = s.perm();
        !(left_divides(p, x) && left_divides(p, y)) || left_divides(p, best)
    }));
    best
}

/// Right complement: the simple with `u · comp(u) = Δ`.
fn complement(u: Perm) -> Perm {
    u.inverse().then(PERM_DELTA)
}

fn build_tables() -> Tables {
    let mut starting = [0u8; 6];
    let mut finishing = [0u8; 6];
    for s in ALL_SIMPLES {
        let p = s.perm();
        let mut st = 0u8;
        let mut fi = 0u8;
        if left_divides(PERM_S1, p) {
            st |= 1;
        }
        if left_divides(PERM_S2, p) {
            st |= 2;
        }
        if right_divides(PERM_S1, p) {
            fi |= 1;
        }
        if right_divides(PERM_S2, p) {
            fi |= 2;
        }
        starting[s.index()] = st;
        finishing[s.index()] = fi;
    }

    let mut pair = [[(0u8, Simple::E, Simple::E); 6]; 6];
    for u in ALL_SIMPLES {
        for v in ALL_SIMPLES {
            // Transfer the left gcd of (complement of u, v) into u; what
            // remains of v cannot start inside the complement of the
            // enlarged first factor, which is the left-weighted condition.
            let t = left_gcd(complement(u.perm()), v.perm());
            let first = u.perm().then(t);
            let second = t.inverse().then(v.perm());
            debug_assert_eq!(first.len() + second.len(), u.perm().len() + v.perm().len());
            let (delta, first) = if first == PERM_DELTA {
                (1u8, Simple::E)
            } else {
                (0u8, Simple::from_perm(first))
            };
            pair[u.index()][v.index()] = (delta, first, Simple::from_perm(second));
        }
    }
    Tables {
        starting,
        finishing,
        pair,
    }
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(build_tables)
}

/// The Garside left normal form `Δ^inf · P₁ ⋯ P_s` of a 3-braid; no factor
/// is `e` or `Δ`, and adjacent factors are left-weighted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNf {
    inf: i64,
    factors: Vec<Simple>,
}

impl GarsideNf {
    /// Power of `Δ` in front (the infimum).
    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    /// Number of simple factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// `inf + canonical length` (the supremum).
    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    /// Whether every adjacent pair satisfies the left-weighted condition
    /// and no factor is `e` or `Δ`.
    pub fn is_left_weighted(&self) -> bool {
        self.factors
            .windows(2)
            .all(|w| w[1].starting_set() & !w[0].finishing_set() == 0)
            && !self.factors.contains(&Simple::E)
            && !self.factors.contains(&Simple::Delta)
    }

    /// Expands the normal form back into a braid word.
    pub fn braid_word(&self) -> BraidWord {
        let mut w = BraidWord::new();
        w.push_half_twist_power(self.inf);
        for f in &self.factors {
            for &g in f.letters() {
                w.push(g, 1);
            }
        }
        w
    }
}

impl fmt::Display for GarsideNf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inf == 0 && self.factors.is_empty() {
            return write!(f, "e");
        }
        let mut parts: Vec<String> = Vec::new();
        if self.inf != 0 {
            parts.push(format!("D^{}", self.inf));
        }
        parts.extend(self.factors.iter().map(|s| s.to_string()));
        write!(f, "{}", parts.join(" . "))
    }
}

impl Serialize for GarsideNf {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            inf: i64,
            factors: Vec<&'a str>,
            canonical_length: usize,
        }
        Repr {
            inf: self.inf,
            factors: self.factors.iter().map(|s| s.name()).collect(),
            canonical_length: self.factors.len(),
        }
        .serialize(ser)
    }
}

/// Pushes one positive generator onto a left-weighted factor list, restoring
/// left-weightedness by local slidings and extracting any `Δ` produced.
fn push_generator(inf: &mut i64, factors: &mut Vec<Simple>, gen: Gen) {
    let simple = match gen {
        Gen::Sigma1 => Simple::S1,
        Gen::Sigma2 => Simple::S2,
    };
    factors.push(simple);
    let t = tables();
    let mut i = factors.len() - 1;
    while i > 0 {
        let (delta, first, second) = t.pair[factors[i - 1].index()][factors[i].index()];
        if delta == 0 && first == factors[i - 1] {
            break; // pair already left-weighted
        }
        if delta > 0 {
            // Δ commutes to the very front through the flip.
            *inf += 1;
            for f in factors.iter_mut().take(i - 1) {
                *f = f.flip();
            }
        }
        factors[i - 1] = first;
        factors[i] = second;
        if factors[i] == Simple::E {
            factors.remove(i);
        }
        if factors[i - 1] == Simple::E {
            factors.remove(i - 1);
        }
        i = i.min(factors.len());
        if i == 0 {
            break;
        }
        i -= 1;
    }
}

/// Computes the left normal form of a braid word.
///
/// Inverse letters become `Δ⁻¹` times a simple, with the `Δ⁻¹` commuted to
/// the front through the flip automorphism; the positive remainder is then
/// factored left-weighted.
pub fn left_normal_form(word: &BraidWord) -> GarsideNf {
    // Strip inverses first, maintaining word = Δ^r · (positive letters).
    let mut r: i64 = 0;
    let mut positive: Vec<Gen> = Vec::with_capacity(word.len() * 2);
    let flip_gen = |g: Gen| match g {
        Gen::Sigma1 => Gen::Sigma2,
        Gen::Sigma2 => Gen::Sigma1,
    };
    for &(g, s) in word.letters() {
        if s > 0 {
            positive.push(g);
        } else {
            r -= 1;
            for l in positive.iter_mut() {
                *l = flip_gen(*l);
            }
            // σ₁⁻¹ = Δ⁻¹ σ₁σ₂, σ₂⁻¹ = Δ⁻¹ σ₂σ₁.
            match g {
                Gen::Sigma1 => {
                    positive.push(Gen::Sigma1);
                    positive.push(Gen::Sigma2);
                }
                Gen::Sigma2 => {
                    positive.push(Gen::Sigma2);
                    positive.push(Gen::Sigma1);
                }
            }
        }
    }

    let mut inf = 0i64;
    let mut factors: Vec<Simple> = Vec::new();
    for g in positive {
        push_generator(&mut inf, &mut factors, g);
    }
    let nf = GarsideNf {
        inf: r + inf,
        factors,
    };
    debug_assert!(nf.is_left_weighted(), "normal form not left-weighted: {nf}");
    nf
}

/// Canonical length of a word's normal form.
pub fn canonical_length(word: &BraidWord) -> usize {
    left_normal_form(word).canonical_length()
}

/// Cycling: conjugate by the initial factor,
/// `Δ^r f₁ ⋯ f_s ↦ Δ^r f₂ ⋯ f_s τ^r(f₁)`.
fn cycling(nf: &GarsideNf) -> GarsideNf {
    if nf.factors.is_empty() {
        return nf.clone();
    }
    let mut moved = nf.factors[0];
    if nf.inf.rem_euclid(2) == 1 {
        moved = moved.flip();
    }
    let mut word = BraidWord::new();
    word.push_half_twist_power(nf.inf);
    for f in &nf.factors[1..] {
        for &g in f.letters() {
            word.push(g, 1);
        }
    }
    for &g in moved.letters() {
        word.push(g, 1);
    }
    left_normal_form(&word)
}

/// Decycling: conjugate by the inverse of the final factor,
/// `Δ^r f₁ ⋯ f_s ↦ Δ^r τ^r(f_s) f₁ ⋯ f_{s-1}`.
fn decycling(nf: &GarsideNf) -> GarsideNf {
    if nf.factors.is_empty() {
        return nf.clone();
    }
    let mut moved = *nf.factors.last().unwrap();
    if nf.inf.rem_euclid(2) == 1 {
        moved = moved.flip();
    }
    let mut word = BraidWord::new();
    word.push_half_twist_power(nf.inf);
    for &g in moved.letters() {
        word.push(g, 1);
    }
    for f in &nf.factors[..nf.factors.len() - 1] {
        for &g in f.letters() {
            word.push(g, 1);
        }
    }
    left_normal_form(&word)
}

/// Canonical length of the super summit set of the word's conjugacy class.
///
/// Iterated cycling raises the infimum to its conjugacy-class maximum,
/// iterated decycling lowers the supremum to its minimum; each phase walks
/// the orbit and adopts only strict improvements, and the phases alternate
/// until neither improves. The iteration cap only guards against
/// implementation bugs.
pub fn sss_canonical_length(word: &BraidWord) -> Result<usize> {
    let mut nf = left_normal_form(word);
    let cap = 10 * word.len() + 10;
    let mut ops = 0usize;
    let bump = |ops: &mut usize| -> Result<()> {
        *ops += 1;
        if *ops > cap {
            return Err(Error::internal(format!(
                "cycling/decycling exceeded {cap} iterations"
            )));
        }
        Ok(())
    };

    loop {
        let before = (nf.inf, nf.factors.len());

        // Raise inf by cycling.
        'cycle: loop {
            let mut seen: HashSet<GarsideNf> = HashSet::new();
            let mut probe = nf.clone();
            loop {
                if !seen.insert(probe.clone()) {
                    break 'cycle; // full orbit visited without improvement
                }
                probe = cycling(&probe);
                bump(&mut ops)?;
                if probe.inf > nf.inf {
                    nf = probe;
                    continue 'cycle;
                }
            }
        }

        // Lower sup by decycling.
        'decycle: loop {
            let mut seen: HashSet<GarsideNf> = HashSet::new();
            let mut probe = nf.clone();
            loop {
                if !seen.insert(probe.clone()) {
                    break 'decycle;
                }
                probe = decycling(&probe);
                bump(&mut ops)?;
                if probe.sup() < nf.sup() {
                    nf = probe;
                    continue 'decycle;
                }
            }
        }

        if (nf.inf, nf.factors.len()) == before {
            return Ok(nf.factors.len());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::rho_image;

    fn w(text: &str) -> BraidWord {
        BraidWord::parse(text).unwrap()
    }

    #[test]
    fn simple_tables() {
        assert_eq!(Simple::E.len(), 0);
        assert_eq!(Simple::Delta.len(), 3);
        assert_eq!(Simple::S1S2.len(), 2);
        assert_eq!(Simple::S1.starting_set(), 0b01);
        assert_eq!(Simple::S1.finishing_set(), 0b01);
        assert_eq!(Simple::S1S2.starting_set(), 0b01);
        assert_eq!(Simple::S1S2.finishing_set(), 0b10);
        assert_eq!(Simple::S2S1.starting_set(), 0b10);
        assert_eq!(Simple::S2S1.finishing_set(), 0b01);
        assert_eq!(Simple::Delta.starting_set(), 0b11);
        assert_eq!(Simple::Delta.finishing_set(), 0b11);
        assert_eq!(Simple::E.starting_set(), 0);
    }

    #[test]
    fn normal_form_of_sigma1_sigma2_inverse() {
        let nf = left_normal_form(&w("s1 s2^-1"));
        assert_eq!(nf.inf(), -1);
        assert_eq!(nf.factors(), &[Simple::S2, Simple::S2S1]);
        assert_eq!(nf.to_string(), "D^-1 . s2 . s2s1");
    }

    #[test]
    fn normal_form_of_sigma1_sigma2_inverse_squared() {
        let nf = left_normal_form(&w("s1 s2^-2"));
        assert_eq!(nf.inf(), -2);
        assert_eq!(nf.factors(), &[Simple::S1, Simple::S1S2, Simple::S2S1]);
    }

    #[test]
    fn normal_form_of_half_twist() {
        let nf = left_normal_form(&w("D"));
        assert_eq!(nf.inf(), 1);
        assert!(nf.factors().is_empty());
        assert_eq!(nf.to_string(), "D^1");

        let nf = left_normal_form(&w("D^4"));
        assert_eq!(nf.inf(), 4);
        assert_eq!(nf.canonical_length(), 0);
    }

    #[test]
    fn normal_form_absorbs_interior_half_twist() {
        let nf = left_normal_form(&w("s1 s2 s1 s2"));
        assert_eq!(nf.inf(), 1);
        assert_eq!(nf.factors(), &[Simple::S2]);
    }

    #[test]
    fn canonical_length_of_band_family() {
        for p in 1..=10i64 {
            for q in 1..=10i64 {
                let mut word = BraidWord::new();
                word.push_power(Gen::Sigma1, p);
                word.push_power(Gen::Sigma2, -q);
                assert_eq!(
                    canonical_length(&word),
                    (p + q) as usize,
                    "canonical length of s1^{p} s2^-{q}"
                );
            }
        }
    }

    #[test]
    fn family_factorizations() {
        // q = 1: Δ⁻¹ σ₂^p (σ₂σ₁); q = 2: Δ⁻² σ₁^p (σ₁σ₂)(σ₂σ₁).
        for p in 1..=6i64 {
            let mut word = BraidWord::new();
            word.push_power(Gen::Sigma1, p);
            word.push_power(Gen::Sigma2, -1);
            let nf = left_normal_form(&word);
            assert_eq!(nf.inf(), -1);
            let mut expected = vec![Simple::S2; p as usize];
            expected.push(Simple::S2S1);
            assert_eq!(nf.factors(), expected.as_slice());

            let mut word = BraidWord::new();
            word.push_power(Gen::Sigma1, p);
            word.push_power(Gen::Sigma2, -2);
            let nf = left_normal_form(&word);
            assert_eq!(nf.inf(), -2);
            let mut expected = vec![Simple::S1; p as usize];
            expected.push(Simple::S1S2);
            expected.push(Simple::S2S1);
            assert_eq!(nf.factors(), expected.as_slice());
        }
    }

    #[test]
    fn normal_form_is_sound() {
        // Matrix image and exponent sum together determine a 3-braid, and
        // both survive the rewriting.
        for text in [
            "s1 s2^-1",
            "s1^3 s2^-2",
            "s2 s1 s2 s1^-1 s2^-1",
            "D^-2 s1 s2 s1 s2 s1",
            "s2^-1 s2 s1",
            "s1^-4 s2^3 s1 s2^-2",
        ] {
            let word = w(text);
            let nf = left_normal_form(&word);
            assert!(nf.is_left_weighted());
            let rebuilt = nf.braid_word();
            let (m1, e1) = rho_image(&word);
            let (m2, e2) = rho_image(&rebuilt);
            assert_eq!(m1, m2, "matrix image changed for {text}");
            assert_eq!(e1, e2, "exponent sum changed for {text}");
        }
    }

    #[test]
    fn sss_examples() {
        let mut word = BraidWord::new();
        word.push_power(Gen::Sigma1, 3);
        word.push_power(Gen::Sigma2, -2);
        assert_eq!(sss_canonical_length(&word).unwrap(), 5);

        // A conjugate of s1 s2^-1 comes back down to length 2.
        let u = w("s2 s1 s2");
        let conj = u.conjugate(&w("s1 s2^-1"));
        assert_eq!(sss_canonical_length(&conj).unwrap(), 2);

        assert_eq!(sss_canonical_length(&w("D^4")).unwrap(), 0);
    }

    #[test]
    fn sss_handles_padded_conjugates() {
        let form = crate::braid::PsaForm::from_small_pairs(-1, &[(2, 1), (1, 3)]).unwrap();
        let ell = 7usize;
        for u in ["s1 s2 s1^-1", "s2^-1 s2^-1 s1", "D s1", "s1^4"] {
            let conj = w(u).conjugate(&form.braid_word());
            assert_eq!(sss_canonical_length(&conj).unwrap(), ell, "conjugator {u}");
        }
    }

    #[test]
    fn cycling_preserves_conjugacy_class() {
        let word = w("s1^2 s2^-3 s1 s2^-1");
        let nf = left_normal_form(&word);
        let cycled = cycling(&nf);
        let decycled = decycling(&nf);
        let (m0, e0) = rho_image(&nf.braid_word());
        for other in [cycled, decycled] {
            let (m1, e1) = rho_image(&other.braid_word());
            assert_eq!(e0, e1);
            assert_eq!(m0.trace(), m1.trace());
        }
    }
}
