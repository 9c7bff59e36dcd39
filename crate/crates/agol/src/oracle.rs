//! Independent validators: bounded conjugacy search in `SL(2, Z)`,
//! floor/invert recomputation of continued fractions with an
//! interval-arithmetic shadow, and an exhaustive-rewriting Garside normal
//! form for short words.
//!
//! Everything here deliberately avoids the main computation paths: the
//! conjugacy search enumerates candidate conjugators instead of reducing to
//! block words, the continued-fraction check iterates floor-and-invert
//! directly on field elements instead of running the surd state machine, and
//! the normal-form oracle explores whole braid-relation equivalence classes
//! instead of using the simple-element tables.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::{HashSet, VecDeque};

use crate::braid::{BraidWord, Gen};
use crate::error::{Error, Result};
use crate::farey::Mat2;
use crate::garside::Simple;
use crate::surd::{cf_of_quad, Quad};

/// Outcome of a bounded conjugacy search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyVerdict {
    /// A conjugator with entries within the bound was found.
    Witness(Mat2),
    /// No conjugator exists at all (class invariants differ).
    ProvenNegative(String),
    /// The bounded search space is exhausted; larger conjugators may exist.
    InconclusiveNegative { bound: u64 },
}

impl Serialize for ConjugacyVerdict {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(tag = "verdict", rename_all = "kebab-case")]
        enum Repr<'a> {
            Witness { conjugator: &'a Mat2 },
            ProvenNegative { reason: &'a str },
            InconclusiveNegative { bound: u64 },
        }
        match self {
            ConjugacyVerdict::Witness(m) => Repr::Witness { conjugator: m },
            ConjugacyVerdict::ProvenNegative(r) => Repr::ProvenNegative { reason: r },
            ConjugacyVerdict::InconclusiveNegative { bound } => {
                Repr::InconclusiveNegative { bound: *bound }
            }
        }
        .serialize(ser)
    }
}

/// Searches exhaustively for `P ∈ SL(2, Z)` with `|entries| ≤ bound` and
/// `P M₁ P⁻¹ = M₂`.
///
/// `P M₁ = M₂ P` is linear in `P`, so only one row is enumerated and the
/// other is solved for; every conjugator within the bound is still found.
/// Trace mismatch is a proven negative; an exhausted search is only
/// inconclusive.
pub fn sl2_conjugacy(m1: &Mat2, m2: &Mat2, bound: u64) -> ConjugacyVerdict {
    if m1.trace() != m2.trace() {
        return ConjugacyVerdict::ProvenNegative(format!(
            "traces differ: {} vs {}",
            m1.trace(),
            m2.trace()
        ));
    }
    let [a, b, c, d] = m1.entries().map(Clone::clone);
    let [alpha, beta, gamma, delta] = m2.entries().map(Clone::clone);

    // With β ≠ 0, row one of P M₁ = M₂ P determines the second row of P:
    //   r = (p·a + q·c - α·p)/β,  s = (p·b + q·d - α·q)/β.
    // With β = 0 but γ ≠ 0 the symmetric solve runs on the second row. If
    // both vanish M₂ is diagonal, hence ±I, and conjugacy is equality.
    if beta.is_zero() && gamma.is_zero() {
        return if m1 == m2 {
            ConjugacyVerdict::Witness(Mat2::identity())
        } else {
            ConjugacyVerdict::ProvenNegative(
                "second matrix is central, first differs".to_string(),
            )
        };
    }

    let ibound = BigInt::from(bound);
    let in_bound = |x: &BigInt| x.abs() <= ibound;
    let range = || {
        let b = bound as i64;
        -b..=b
    };
    for p in range() {
        for q in range() {
            let p = BigInt::from(p);
            let q = BigInt::from(q);
            let (pp, qq, rr, ss);
            if !beta.is_zero() {
                let r_num = &p * &a + &q * &c - &alpha * &p;
                let s_num = &p * &b + &q * &d - &alpha * &q;
                if !(&r_num % &beta).is_zero() || !(&s_num % &beta).is_zero() {
                    continue;
                }
                (pp, qq, rr, ss) = (p, q, r_num / &beta, s_num / &beta);
            } else {
                // The enumerated pair is the second row; solve for the first.
                let (r, s) = (p, q);
                let p_num = &r * &a + &s * &c - &delta * &r;
                let q_num = &r * &b + &s * &d - &delta * &s;
                if !(&p_num % &gamma).is_zero() || !(&q_num % &gamma).is_zero() {
                    continue;
                }
                (pp, qq, rr, ss) = (p_num / &gamma, q_num / &gamma, r, s);
            }
            if !in_bound(&rr) || !in_bound(&ss) || !in_bound(&pp) || !in_bound(&qq) {
                continue;
            }
            if (&pp * &ss - &qq * &rr) != BigInt::from(1) {
                continue;
            }
            let cand = Mat2::new(pp, qq, rr, ss).expect("determinant checked");
            if &(&cand * m1) * &cand.inverse() == *m2 {
                return ConjugacyVerdict::Witness(cand);
            }
        }
    }
    ConjugacyVerdict::InconclusiveNegative { bound }
}

/// A closed floating-point interval guaranteed to contain an exact value.
#[derive(Clone, Copy, Debug)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

fn widen(x: f64) -> Interval {
    Interval {
        lo: x.next_down(),
        hi: x.next_up(),
    }
}

impl Interval {
    pub fn point(x: f64) -> Interval {
        widen(x)
    }

    fn guard(self) -> Interval {
        if self.lo.is_nan() || self.hi.is_nan() {
            Interval {
                lo: f64::NEG_INFINITY,
                hi: f64::INFINITY,
            }
        } else {
            self
        }
    }

    pub fn add(self, rhs: Interval) -> Interval {
        Interval {
            lo: (self.lo + rhs.lo).next_down(),
            hi: (self.hi + rhs.hi).next_up(),
        }
        .guard()
    }

    pub fn mul(self, rhs: Interval) -> Interval {
        let products = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        Interval {
            lo: products
                .iter()
                .cloned()
                .fold(f64::INFINITY, f64::min)
                .next_down(),
            hi: products
                .iter()
                .cloned()
                .fold(f64::NEG_INFINITY, f64::max)
                .next_up(),
        }
        .guard()
    }

    pub fn div_scalar(self, s: f64) -> Interval {
        debug_assert!(s != 0.0);
        let a = self.lo / s;
        let b = self.hi / s;
        Interval {
            lo: a.min(b).next_down(),
            hi: a.max(b).next_up(),
        }
        .guard()
    }

    pub fn is_positive(self) -> bool {
        self.lo > 0.0
    }

    pub fn is_negative(self) -> bool {
        self.hi < 0.0
    }

    pub fn contains_zero(self) -> bool {
        self.lo <= 0.0 && self.hi >= 0.0
    }
}

fn bigint_interval(n: &BigInt) -> Interval {
    match n.to_f64() {
        Some(x) if x.is_finite() => widen(x),
        _ => {
            if n.is_negative() {
                Interval {
                    lo: f64::NEG_INFINITY,
                    hi: f64::MIN,
                }
            } else {
                Interval {
                    lo: f64::MAX,
                    hi: f64::INFINITY,
                }
            }
        }
    }
}

/// A floating-point bracket of the exact value of a field element.
pub fn quad_interval(v: &Quad) -> Interval {
    let p = bigint_interval(v.p());
    let q = bigint_interval(v.q());
    let d = bigint_interval(v.d());
    let sqrt_d = Interval {
        lo: d.lo.max(0.0).sqrt().next_down(),
        hi: d.hi.sqrt().next_up(),
    };
    let r = v.r().to_f64().filter(|x| x.is_finite() && *x != 0.0);
    let numer = p.add(q.mul(sqrt_d));
    match r {
        Some(r) => numer.div_scalar(r),
        None => Interval {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        },
    }
}

/// Whether the exact sign of a value agrees with its floating bracket
/// (vacuously true when the bracket straddles zero).
pub fn sign_shadow_consistent(v: &Quad) -> bool {
    let iv = quad_interval(v);
    let sign = v.sign();
    if iv.is_positive() {
        sign == 1
    } else if iv.is_negative() {
        sign == -1
    } else {
        true
    }
}

/// Report of the floor/invert recomputation of a continued fraction.
#[derive(Clone, Debug, Serialize)]
pub struct CfIterateReport {
    /// Partial quotients produced by direct floor-and-invert iteration.
    pub terms: Vec<String>,
    /// Every floor decision was consistent with the interval shadow.
    pub shadow_consistent: bool,
    /// The terms agree with the state-machine expansion.
    pub matches_expansion: bool,
}

/// Recomputes the first `count` partial quotients of an irrational value by
/// floor-and-invert iteration, shadow-checking each comparison with interval
/// arithmetic, and compares against [`cf_of_quad`].
pub fn cf_iterate(value: &Quad, count: usize) -> Result<CfIterateReport> {
    if value.is_rational() {
        return Err(Error::domain("cf-iterate needs an irrational value"));
    }
    let mut x = value.clone();
    let mut terms: Vec<BigInt> = Vec::with_capacity(count);
    let mut shadow_consistent = true;
    for _ in 0..count {
        let n = x.floor();
        let n_quad = Quad::integer(n.clone(), x.d().clone())?;
        let one = Quad::one(x.d().clone())?;
        let below = x.checked_sub(&n_quad)?;
        let above = below.checked_sub(&one)?;
        // n ≤ x < n + 1, checked both exactly and through the float bracket.
        if below.sign() < 0 || above.sign() >= 0 {
            return Err(Error::internal(format!("floor({x}) miscomputed as {n}")));
        }
        shadow_consistent &= sign_shadow_consistent(&below) && sign_shadow_consistent(&above);
        terms.push(n);
        x = below.inv()?;
    }
    let expansion = cf_of_quad(value)?;
    let matches_expansion = expansion.terms(count) == terms;
    Ok(CfIterateReport {
        terms: terms.iter().map(|t| t.to_string()).collect(),
        shadow_consistent,
        matches_expansion,
    })
}

/// Garside normal form computed by exhaustive rewriting, for words of at
/// most eight letters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BruteforceNf {
    pub inf: i64,
    pub factors: Vec<Simple>,
}

/// All positive words equal to `letters` in the braid monoid, reachable by
/// the single relation `σ₁σ₂σ₁ = σ₂σ₁σ₂`.
fn rewrite_class(letters: &[Gen]) -> HashSet<Vec<Gen>> {
    let mut seen: HashSet<Vec<Gen>> = HashSet::new();
    let mut queue: VecDeque<Vec<Gen>> = VecDeque::new();
    seen.insert(letters.to_vec());
    queue.push_back(letters.to_vec());
    while let Some(word) = queue.pop_front() {
        for i in 0..word.len().saturating_sub(2) {
            let window = [word[i], word[i + 1], word[i + 2]];
            let swapped = match window {
                [Gen::Sigma1, Gen::Sigma2, Gen::Sigma1] => [Gen::Sigma2, Gen::Sigma1, Gen::Sigma2],
                [Gen::Sigma2, Gen::Sigma1, Gen::Sigma2] => [Gen::Sigma1, Gen::Sigma2, Gen::Sigma1],
                _ => continue,
            };
            let mut next = word.clone();
            next[i..i + 3].copy_from_slice(&swapped);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

fn starts_with(word: &[Gen], prefix: &[Gen]) -> bool {
    word.len() >= prefix.len() && &word[..prefix.len()] == prefix
}

/// The longest simple element some representative of the class starts with,
/// together with the representative's remainder.
fn peel_greedy(class: &HashSet<Vec<Gen>>) -> (Simple, Vec<Gen>) {
    let candidates: [Simple; 6] = [
        Simple::Delta,
        Simple::S1S2,
        Simple::S2S1,
        Simple::S1,
        Simple::S2,
        Simple::E,
    ];
    let mut sorted: Vec<&Vec<Gen>> = class.iter().collect();
    sorted.sort();
    for simple in candidates {
        let spelling = simple.letters();
        if let Some(hit) = sorted.iter().find(|w| starts_with(w, spelling)) {
            return (simple, hit[spelling.len()..].to_vec());
        }
    }
    unreachable!("the empty prefix always matches")
}

/// Left normal form by brute force: rewrites the whole word through the
/// braid relation and peels maximal simple prefixes greedily.
///
/// Limited to words of at most eight letters. Inverse letters are first
/// replaced through `σ_i⁻¹ = Δ⁻¹ · (simple)`; the factorization that follows
/// never consults the simple-element tables.
pub fn garside_bruteforce(word: &BraidWord) -> Result<BruteforceNf> {
    if word.len() > 8 {
        return Err(Error::domain(format!(
            "bruteforce normal form is limited to 8 letters, got {}",
            word.len()
        )));
    }
    let mut r: i64 = 0;
    let mut positive: Vec<Gen> = Vec::new();
    let flip = |g: Gen| match g {
        Gen::Sigma1 => Gen::Sigma2,
        Gen::Sigma2 => Gen::Sigma1,
    };
    for &(g, s) in word.letters() {
        if s > 0 {
            positive.push(g);
        } else {
            r -= 1;
            for l in positive.iter_mut() {
                *l = flip(*l);
            }
            match g {
                Gen::Sigma1 => positive.extend([Gen::Sigma1, Gen::Sigma2]),
                Gen::Sigma2 => positive.extend([Gen::Sigma2, Gen::Sigma1]),
            }
        }
    }

    let mut factors: Vec<Simple> = Vec::new();
    let mut rest = positive;
    while !rest.is_empty() {
        let class = rewrite_class(&rest);
        let (simple, remainder) = peel_greedy(&class);
        match simple {
            Simple::Delta => {
                if !factors.is_empty() {
                    return Err(Error::internal(
                        "greedy factorization peeled a half twist after the head".to_string(),
                    ));
                }
                r += 1;
            }
            Simple::E => {
                return Err(Error::internal("greedy peel made no progress".to_string()))
            }
            other => factors.push(other),
        }
        rest = remainder;
    }
    Ok(BruteforceNf { inf: r, factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::rho_image;
    use crate::farey::LrWord;
    use crate::garside::left_normal_form;

    #[test]
    fn conjugacy_witness_found() {
        let lr = Mat2::new(1, 1, 1, 2).unwrap();
        let m2 = Mat2::new(3, -1, 1, 0).unwrap(); // R² (LR) R⁻²
        match sl2_conjugacy(&lr, &m2, 9) {
            ConjugacyVerdict::Witness(p) => {
                assert_eq!(&(&p * &lr) * &p.inverse(), m2);
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn conjugacy_trace_mismatch_is_proven() {
        let a = Mat2::new(1, 1, 1, 2).unwrap();
        let b = Mat2::new(2, 1, 1, 1).unwrap();
        assert!(matches!(
            sl2_conjugacy(&a, &b, 9),
            ConjugacyVerdict::Witness(_)
        ));
        let c = LrWord::parse("LRR").unwrap().matrix();
        assert!(matches!(
            sl2_conjugacy(&a, &c, 9),
            ConjugacyVerdict::ProvenNegative(_)
        ));
    }

    #[test]
    fn conjugacy_distinct_cyclic_words_inconclusive() {
        let lr5 = LrWord::parse("LRRRRR").unwrap().matrix();
        let l5r = LrWord::parse("LLLLLR").unwrap().matrix();
        assert_eq!(lr5.trace(), l5r.trace());
        assert!(matches!(
            sl2_conjugacy(&lr5, &l5r, 100),
            ConjugacyVerdict::InconclusiveNegative { bound: 100 }
        ));
    }

    #[test]
    fn conjugacy_central_matrices() {
        let id = Mat2::identity();
        assert!(matches!(
            sl2_conjugacy(&id, &id, 3),
            ConjugacyVerdict::Witness(_)
        ));
        let parabolic = Mat2::r();
        let id_neg = -&Mat2::identity();
        assert_eq!(parabolic.trace(), BigInt::from(2));
        assert!(matches!(
            sl2_conjugacy(&id_neg, &id_neg, 3),
            ConjugacyVerdict::Witness(_)
        ));
    }

    #[test]
    fn interval_brackets_and_signs() {
        let golden = Quad::new(1, 1, 2, 5).unwrap();
        let iv = quad_interval(&golden);
        assert!(iv.lo <= 1.618033988749895 && 1.618033988749894 <= iv.hi);
        assert!(sign_shadow_consistent(&golden));
        assert!(sign_shadow_consistent(&Quad::new(1, -1, 2, 5).unwrap()));
        assert!(sign_shadow_consistent(&Quad::zero(5).unwrap()));
        assert!(quad_interval(&Quad::zero(5).unwrap()).contains_zero());
    }

    #[test]
    fn cf_iterate_golden_ratio() {
        let golden = Quad::new(1, 1, 2, 5).unwrap();
        let report = cf_iterate(&golden, 10).unwrap();
        assert_eq!(report.terms, vec!["1"; 10]);
        assert!(report.shadow_consistent);
        assert!(report.matches_expansion);
    }

    #[test]
    fn cf_iterate_rejects_rationals() {
        assert!(cf_iterate(&Quad::rational(3, 2, 5).unwrap(), 4).is_err());
    }

    #[test]
    fn bruteforce_matches_table_normal_form() {
        for text in [
            "s1 s2^-1",
            "s1 s2 s1 s2",
            "s2 s2 s1",
            "s1 s1 s2 s2 s1",
            "s2 s1 s2 s1 s2 s1",
            "s1^3 s2^-2",
            "D s1 s2",
        ] {
            let word = BraidWord::parse(text).unwrap();
            let brute = garside_bruteforce(&word).unwrap();
            let table = left_normal_form(&word);
            assert_eq!(brute.inf, table.inf(), "inf for {text}");
            assert_eq!(brute.factors, table.factors(), "factors for {text}");
            // Soundness of the oracle itself.
            let mut rebuilt = BraidWord::new();
            rebuilt.push_half_twist_power(brute.inf);
            for f in &brute.factors {
                for &g in f.letters() {
                    rebuilt.push(g, 1);
                }
            }
            let (m1, e1) = rho_image(&word);
            let (m2, e2) = rho_image(&rebuilt);
            assert_eq!((m1, e1), (m2, e2));
        }
    }

    #[test]
    fn bruteforce_rejects_long_words() {
        let word = BraidWord::parse("s1^9").unwrap();
        assert!(garside_bruteforce(&word).is_err());
    }
}
