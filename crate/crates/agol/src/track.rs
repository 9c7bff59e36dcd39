//! Measured train tracks over Farey intervals, single and maximal
//! splittings, splitting cycles with exact closure verification, and the
//! collapse of rational measures to simple closed curves.
//!
//! A track is the triple (surface, Farey interval, measure): the interval
//! `[b/a, d/c]` names the track obtained by smoothing the intersection of
//! the slope-`b/a` and slope-`d/c` curves, `x` weighs the small branch from
//! the left-endpoint curve and `y` the one from the right-endpoint curve,
//! and the large branch carries `x + y` by the switch condition. On the
//! four-punctured sphere the same data drives the twin-large-branch track:
//! both large branches split simultaneously and count as one step, so the
//! two surfaces share all interval and measure bookkeeping.
//!
//! A left splitting needs `x < y` and sends the measure to `(x, y - x)`
//! (that is `L⁻¹` applied to the column) while the interval keeps its right
//! half; a right splitting is the mirror image. Runs of equal splittings
//! follow division with remainder, which ties the splitting sequence of a
//! measure `(1, s)` to the continued fraction of `s`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::braid::PsaForm;
use crate::error::{Error, Result};
use crate::farey::{
    eigen_data, lr_cycle_of_matrix, word_of_pairs, FareyInterval, Letter, LrWord, Mat2,
};
use crate::surd::{cf_of_rational, CfExpansion, Quad};

/// Ambient field used for purely rational measures (the collapse of a
/// rational slope never touches the radical part, so any valid `D` works;
/// one is fixed so all rational pipelines interoperate).
pub const RATIONAL_AMBIENT_D: u32 = 5;

/// The two surfaces carrying the tracks. They share all combinatorics; the
/// tag matters for rendering and for making the twin-branch bookkeeping of
/// the four-punctured sphere explicit in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Surface {
    Torus,
    Sphere4,
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::Torus => write!(f, "torus"),
            Surface::Sphere4 => write!(f, "sphere4"),
        }
    }
}

/// A measured track: surface, Farey interval, and the measure `(x, y)`.
///
/// Weights are nonnegative and not both zero; a zero weight marks a terminal
/// state (the track has collapsed to one of its boundary curves) and admits
/// no further splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasuredTrack {
    surface: Surface,
    interval: FareyInterval,
    x: Quad,
    y: Quad,
}

impl MeasuredTrack {
    pub fn new(
        surface: Surface,
        interval: FareyInterval,
        x: Quad,
        y: Quad,
    ) -> Result<MeasuredTrack> {
        if x.d() != y.d() {
            return Err(Error::FieldMismatch {
                left: x.d().clone(),
                right: y.d().clone(),
            });
        }
        if x.is_negative() || y.is_negative() {
            return Err(Error::domain(format!(
                "branch weights must be nonnegative, got ({x}, {y})"
            )));
        }
        if x.is_zero() && y.is_zero() {
            return Err(Error::domain("branch weights must not both vanish"));
        }
        Ok(MeasuredTrack {
            surface,
            interval,
            x,
            y,
        })
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn interval(&self) -> &FareyInterval {
        &self.interval
    }

    pub fn x(&self) -> &Quad {
        &self.x
    }

    pub fn y(&self) -> &Quad {
        &self.y
    }

    /// Whether one branch weight has dropped to zero (terminal state).
    pub fn is_terminal(&self) -> bool {
        self.x.is_zero() || self.y.is_zero()
    }
}

impl fmt::Display for MeasuredTrack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} track at {}, measure ({}, {}))",
            self.surface, self.interval, self.x, self.y
        )
    }
}

/// The base track at `[0/1, 1/0]` with measure `(x, y)`.
pub fn base_track(surface: Surface, x: Quad, y: Quad) -> Result<MeasuredTrack> {
    MeasuredTrack::new(surface, FareyInterval::base(), x, y)
}

/// One recorded splitting: the side taken and the state after it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitStep {
    pub side: Letter,
    pub interval: FareyInterval,
    pub x: Quad,
    pub y: Quad,
}

#[derive(Serialize, Deserialize)]
struct MeasureRepr {
    x: Quad,
    y: Quad,
}

#[derive(Serialize, Deserialize)]
struct SplitStepRepr {
    side: Letter,
    interval: FareyInterval,
    measure: MeasureRepr,
}

impl Serialize for SplitStep {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        SplitStepRepr {
            side: self.side,
            interval: self.interval.clone(),
            measure: MeasureRepr {
                x: self.x.clone(),
                y: self.y.clone(),
            },
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SplitStep {
    fn deserialize<D: serde::Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<SplitStep, D::Error> {
        let repr = SplitStepRepr::deserialize(de)?;
        Ok(SplitStep {
            side: repr.side,
            interval: repr.interval,
            x: repr.measure.x,
            y: repr.measure.y,
        })
    }
}

fn split_inner(track: &MeasuredTrack, side: Letter, extended: bool) -> Result<MeasuredTrack> {
    if track.is_terminal() {
        return Err(Error::NotSplittable {
            side: side.as_char(),
            detail: format!("terminal measure ({}, {})", track.x, track.y),
        });
    }
    let cmp = track.y.compare(&track.x)?;
    let allowed = match side {
        Letter::L => cmp == std::cmp::Ordering::Greater,
        Letter::R => cmp == std::cmp::Ordering::Less,
    };
    if !allowed && !(extended && cmp == std::cmp::Ordering::Equal) {
        let need = match side {
            Letter::L => "y > x",
            Letter::R => "x > y",
        };
        return Err(Error::NotSplittable {
            side: side.as_char(),
            detail: format!("requires {need}, but x = {}, y = {}", track.x, track.y),
        });
    }
    let (x, y) = match side {
        Letter::L => (track.x.clone(), track.y.checked_sub(&track.x)?),
        Letter::R => (track.x.checked_sub(&track.y)?, track.y.clone()),
    };
    Ok(MeasuredTrack {
        surface: track.surface,
        interval: track.interval.step(side),
        x,
        y,
    })
}

/// A single splitting: left needs `y > x`, right needs `x > y`. The interval
/// keeps its right half under a left splitting and its left half under a
/// right splitting; the measure is hit by `L⁻¹` or `R⁻¹`.
pub fn split(track: &MeasuredTrack, side: Letter) -> Result<MeasuredTrack> {
    split_inner(track, side, false)
}

/// Like [`split`], but also permits the extended case `x = y`, which drives
/// one weight to zero. Only terminal collapse steps use this.
pub fn split_extended(track: &MeasuredTrack, side: Letter) -> Result<MeasuredTrack> {
    split_inner(track, side, true)
}

/// Splits once, choosing the side by comparing the weights.
pub fn split_auto(track: &MeasuredTrack) -> Result<(Letter, MeasuredTrack)> {
    let side = match track.y.compare(&track.x)? {
        std::cmp::Ordering::Greater => Letter::L,
        std::cmp::Ordering::Less => Letter::R,
        std::cmp::Ordering::Equal => return Err(Error::AmbiguousSplit),
    };
    Ok((side, split(track, side)?))
}

/// The full run of consecutive equal-side splittings the track admits.
///
/// With `y > x` the run is `⌊y/x⌋` left splittings (the continued-fraction
/// partial quotient of `y/x`), ending at measure `(x, y - count·x)`; in
/// strict mode a run that would end exactly at `y = 0` stops one splitting
/// earlier, at `(x, x)`. Symmetrically for `x > y`. Equal weights are an
/// error unless `extended` is set, in which case a single extended left
/// splitting finishes the collapse.
pub fn max_split_run(
    track: &MeasuredTrack,
    extended: bool,
) -> Result<(Letter, BigInt, MeasuredTrack)> {
    if track.is_terminal() {
        return Err(Error::NotSplittable {
            side: '?',
            detail: format!("terminal measure ({}, {})", track.x, track.y),
        });
    }
    let cmp = track.y.compare(&track.x)?;
    let (side, big, small) = match cmp {
        std::cmp::Ordering::Greater => (Letter::L, &track.y, &track.x),
        std::cmp::Ordering::Less => (Letter::R, &track.x, &track.y),
        std::cmp::Ordering::Equal => {
            if !extended {
                return Err(Error::AmbiguousSplit);
            }
            let end = split_extended(track, Letter::L)?;
            return Ok((Letter::L, BigInt::from(1), end));
        }
    };
    let quotient = big.checked_div(small)?.floor();
    debug_assert!(quotient >= BigInt::from(1));
    let scaled = Quad::integer(quotient.clone(), small.d().clone())?.checked_mul(small)?;
    let exact = scaled == *big;
    let count = if exact && !extended {
        &quotient - 1
    } else {
        quotient
    };
    debug_assert!(count.is_positive());

    let delta = Quad::integer(count.clone(), small.d().clone())?.checked_mul(small)?;
    let (x, y) = match side {
        Letter::L => (track.x.clone(), track.y.checked_sub(&delta)?),
        Letter::R => (track.x.checked_sub(&delta)?, track.y.clone()),
    };
    let block = match side {
        Letter::L => Mat2::l_pow(count.clone()),
        Letter::R => Mat2::r_pow(count.clone()),
    };
    let interval = FareyInterval::from_matrix(&(&track.interval.matrix() * &block))?;
    Ok((
        side,
        count,
        MeasuredTrack {
            surface: track.surface,
            interval,
            x,
            y,
        },
    ))
}

/// A splitting cycle: the first `ℓ` maximal splittings of the base track
/// measured by the eigen-slope of `A`, which return the start rescaled by
/// the inverse dilatation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgolCycle {
    pub surface: Surface,
    pub normal_form: PsaForm,
    /// `A = L^{q_k} R^{p_k} ⋯ L^{q_1} R^{p_1}`.
    pub matrix: Mat2,
    /// Expanding eigenvalue of `A`.
    pub lambda: Quad,
    /// Eigenvector slope: the initial measure is `(1, s)`.
    pub slope: Quad,
    pub initial: MeasuredTrack,
    pub steps: Vec<SplitStep>,
    /// Whether the closure identities held when the cycle was built.
    pub verified: bool,
}

impl AgolCycle {
    /// Number of splittings in the cycle.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The sides of the steps as a block word (reads `L^{q_k} R^{p_k} ⋯`).
    pub fn side_word(&self) -> LrWord {
        LrWord::from_blocks(side_blocks(&self.steps)).expect("sides form a valid word")
    }

    /// Measure after the final step.
    pub fn final_measure(&self) -> (&Quad, &Quad) {
        let last = self.steps.last().expect("cycle has at least two steps");
        (&last.x, &last.y)
    }
}

fn side_blocks(steps: &[SplitStep]) -> Vec<(Letter, BigInt)> {
    let mut blocks: Vec<(Letter, BigInt)> = Vec::new();
    for step in steps {
        match blocks.last_mut() {
            Some((letter, count)) if *letter == step.side => *count += 1,
            _ => blocks.push((step.side, BigInt::from(1))),
        }
    }
    blocks
}

#[derive(Serialize, Deserialize)]
struct AgolCycleRepr {
    surface: Surface,
    normal_form: PsaForm,
    matrix: Mat2,
    trace: String,
    #[serde(rename = "D")]
    d: String,
    lambda: Quad,
    slope: Quad,
    length: usize,
    steps: Vec<SplitStep>,
    verified: bool,
}

impl Serialize for AgolCycle {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        AgolCycleRepr {
            surface: self.surface,
            normal_form: self.normal_form.clone(),
            matrix: self.matrix.clone(),
            trace: self.matrix.trace().to_string(),
            d: self.lambda.d().to_string(),
            lambda: self.lambda.clone(),
            slope: self.slope.clone(),
            length: self.steps.len(),
            steps: self.steps.clone(),
            verified: self.verified,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for AgolCycle {
    fn deserialize<D: serde::Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<AgolCycle, D::Error> {
        use serde::de::Error as _;
        let repr = AgolCycleRepr::deserialize(de)?;
        let one = Quad::one(repr.slope.d().clone()).map_err(|e| D::Error::custom(e.to_string()))?;
        let initial = base_track(repr.surface, one, repr.slope.clone())
            .map_err(|e| D::Error::custom(e.to_string()))?;
        Ok(AgolCycle {
            surface: repr.surface,
            normal_form: repr.normal_form,
            matrix: repr.matrix,
            lambda: repr.lambda,
            slope: repr.slope,
            initial,
            steps: repr.steps,
            verified: repr.verified,
        })
    }
}

/// Builds the splitting cycle of a normal form on the chosen surface.
///
/// With `A = L^{q_k} R^{p_k} ⋯ L^{q_1} R^{p_1}`, `(λ, s)` its eigen-data and
/// `ℓ = Σ(p_i + q_i)`, the base track with measure `(1, s)` admits exactly
/// `q_k` left, then `p_k` right, …, then `p_1` right splittings; the final
/// measure is `λ⁻¹ (1, s)` and the final interval corresponds to `A`. Those
/// identities are checked during construction and recorded in `verified`.
/// The twist exponent `j` plays no role here: the full twist acts trivially
/// on the splitting data.
pub fn agol_cycle(form: &PsaForm, surface: Surface) -> Result<AgolCycle> {
    let word = word_of_pairs(form.pairs());
    let matrix = word.matrix();
    let (lambda, slope) = eigen_data(&matrix)?;
    let one = Quad::one(slope.d().clone())?;
    let initial = base_track(surface, one.clone(), slope.clone())?;

    let mut current = initial.clone();
    let mut steps: Vec<SplitStep> = Vec::new();
    for (letter, exponent) in word.blocks() {
        let (run_side, run_count, _) = max_split_run(&current, false)?;
        if run_side != *letter || run_count != *exponent {
            return Err(Error::internal(format!(
                "splitting run mismatch: expected {letter}^{exponent}, track admits {run_side}^{run_count}"
            )));
        }
        let reps = exponent
            .to_u64()
            .ok_or_else(|| Error::internal("cycle too long to materialize".to_string()))?;
        for _ in 0..reps {
            current = split(&current, *letter)?;
            steps.push(SplitStep {
                side: *letter,
                interval: current.interval.clone(),
                x: current.x.clone(),
                y: current.y.clone(),
            });
        }
    }

    let lambda_inv = lambda.inv()?;
    let closure_ok = current.x == lambda_inv.checked_mul(initial.x())?
        && current.y == lambda_inv.checked_mul(initial.y())?;
    let interval_ok = current.interval == FareyInterval::from_matrix(&matrix)?;
    Ok(AgolCycle {
        surface,
        normal_form: form.clone(),
        matrix,
        lambda,
        slope,
        initial,
        steps,
        verified: closure_ok && interval_ok,
    })
}

/// Splitting cycle of a hyperbolic matrix: reduces the matrix to its cyclic
/// block word first, so `M` and `-M` produce identical cycles.
pub fn cycle_of_matrix(m: &Mat2, surface: Surface) -> Result<AgolCycle> {
    let (pairs, _) = lr_cycle_of_matrix(m)?;
    let form = PsaForm::new(0, pairs)?;
    agol_cycle(&form, surface)
}

/// One verification check with its outcome.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CycleCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of re-verifying a cycle from scratch.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CycleReport {
    pub checks: Vec<CycleCheck>,
}

impl CycleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for CycleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(
                f,
                "{} {}{}",
                if check.passed { "PASS" } else { "FAIL" },
                check.name,
                if check.detail.is_empty() {
                    String::new()
                } else {
                    format!(": {}", check.detail)
                }
            )?;
        }
        Ok(())
    }
}

/// Recomputes every step of a cycle and the closure identities, reporting
/// pass/fail per check.
///
/// Checks: step-by-step replay, cycle length `ℓ`, side word
/// `L^{q_k} R^{p_k} ⋯ L^{q_1} R^{p_1}`, final measure `λ⁻¹(1, s)`,
/// `λ·λ⁻¹ = 1`, `A · ν_ℓ = ν₀` componentwise, final interval = interval of
/// `A`, and the trace-sign symmetry (the cycle rebuilt from `-A` is
/// step-identical).
pub fn verify_cycle(cycle: &AgolCycle) -> CycleReport {
    let mut checks: Vec<CycleCheck> = Vec::new();
    let mut check = |name: &str, passed: bool, detail: String| {
        checks.push(CycleCheck {
            name: name.to_string(),
            passed,
            detail,
        });
    };

    let ell = cycle.normal_form.ell();
    check(
        "length",
        BigInt::from(cycle.steps.len()) == ell,
        format!("{} steps, normal form has ell = {ell}", cycle.steps.len()),
    );

    let expected_word = word_of_pairs(cycle.normal_form.pairs());
    let side_word = cycle.side_word();
    check(
        "side-word",
        side_word == expected_word,
        format!("steps read {side_word}, expected {expected_word}"),
    );

    let mut replay_ok = true;
    let mut replay_detail = String::from("all steps admissible and exact");
    let mut current = cycle.initial.clone();
    for (i, step) in cycle.steps.iter().enumerate() {
        match split(&current, step.side) {
            Ok(next) => {
                if next.interval != step.interval || next.x != step.x || next.y != step.y {
                    replay_ok = false;
                    replay_detail = format!("step {i} does not match the recorded state");
                    break;
                }
                current = next;
            }
            Err(e) => {
                replay_ok = false;
                replay_detail = format!("step {i} not admissible: {e}");
                break;
            }
        }
    }
    check("replay", replay_ok, replay_detail);

    let closure = (|| -> Result<bool> {
        let lambda_inv = cycle.lambda.inv()?;
        let (fx, fy) = cycle.final_measure();
        Ok(*fx == lambda_inv.checked_mul(cycle.initial.x())?
            && *fy == lambda_inv.checked_mul(cycle.initial.y())?)
    })();
    check(
        "closure",
        matches!(closure, Ok(true)),
        "final measure equals lambda^-1 times the initial measure".to_string(),
    );

    let unit = (|| -> Result<bool> {
        let one = Quad::one(cycle.lambda.d().clone())?;
        Ok(cycle.lambda.checked_mul(&cycle.lambda.inv()?)? == one)
    })();
    check(
        "unit",
        matches!(unit, Ok(true)),
        "lambda times its inverse is exactly one".to_string(),
    );

    let recover = (|| -> Result<bool> {
        let (fx, fy) = cycle.final_measure();
        let (rx, ry) = cycle.matrix.apply(fx, fy)?;
        Ok(rx == *cycle.initial.x() && ry == *cycle.initial.y())
    })();
    check(
        "matrix-recovers-measure",
        matches!(recover, Ok(true)),
        "A times the final measure equals the initial measure".to_string(),
    );

    let interval_ok = cycle
        .steps
        .last()
        .map(|s| FareyInterval::from_matrix(&cycle.matrix).map(|i| i == s.interval))
        .unwrap_or(Ok(false));
    check(
        "final-interval",
        matches!(interval_ok, Ok(true)),
        "final interval corresponds to A".to_string(),
    );

    let negated = cycle_of_matrix(&-&cycle.matrix, cycle.surface);
    let neg_ok = matches!(&negated, Ok(c) if c.steps == cycle.steps);
    check(
        "negative-matrix",
        neg_ok,
        "the cycle rebuilt from -A is step-identical".to_string(),
    );

    CycleReport { checks }
}

/// Result of collapsing a rational measure to a simple closed curve.
#[derive(Clone, Debug)]
pub struct CollapseResult {
    /// Slope of the curve the sequence ends at, as `(numerator, denominator)`.
    pub curve: (BigInt, BigInt),
    pub cf: CfExpansion,
    pub initial: MeasuredTrack,
    pub steps: Vec<SplitStep>,
    pub terminal_interval: FareyInterval,
    /// `(1, 0)` or `(0, 1)` (exactly, since the input is in lowest terms).
    pub terminal_measure: (Quad, Quad),
}

impl CollapseResult {
    pub fn side_word(&self) -> LrWord {
        LrWord::from_blocks(side_blocks(&self.steps)).expect("sides form a valid word")
    }
}

/// Splits the base track with integer measure `(den, num)` down to the
/// simple closed curve of slope `num/den`.
///
/// With `num/den = [n₀: n₁, …, n_k]`, the sequence is `n₀` left splittings,
/// `n₁` right, alternating (the leading block is skipped when `n₀ = 0`); the
/// final splitting of the last block is extended and drives one weight to
/// zero. For even `k` the terminal measure is `(1, 0)` on the interval
/// `[num/den, δ/γ]`, for odd `k` it is `(0, 1)` on `[β/α, num/den]`.
pub fn rational_collapse(num: &BigInt, den: &BigInt, surface: Surface) -> Result<CollapseResult> {
    if !num.is_positive() || !den.is_positive() {
        return Err(Error::domain(format!(
            "slope must be a positive fraction, got {num}/{den}"
        )));
    }
    if !num.gcd(den).is_one() {
        return Err(Error::domain(format!("{num}/{den} is not in lowest terms")));
    }
    let cf = cf_of_rational(num, den)?;
    let quotients = &cf.preperiod;
    let x0 = Quad::integer(den.clone(), RATIONAL_AMBIENT_D)?;
    let y0 = Quad::integer(num.clone(), RATIONAL_AMBIENT_D)?;
    let initial = base_track(surface, x0, y0)?;

    let mut current = initial.clone();
    let mut steps: Vec<SplitStep> = Vec::new();
    let last_block = quotients.len() - 1;
    for (i, n) in quotients.iter().enumerate() {
        if n.is_zero() {
            debug_assert_eq!(i, 0);
            continue;
        }
        let side = if i % 2 == 0 { Letter::L } else { Letter::R };
        let reps = n
            .to_u64()
            .ok_or_else(|| Error::internal("collapse too long to materialize".to_string()))?;
        for r in 0..reps {
            let final_split = i == last_block && r == reps - 1;
            current = if final_split {
                split_extended(&current, side)?
            } else {
                split(&current, side)?
            };
            steps.push(SplitStep {
                side,
                interval: current.interval.clone(),
                x: current.x.clone(),
                y: current.y.clone(),
            });
        }
    }

    let one = Quad::one(RATIONAL_AMBIENT_D)?;
    let zero = Quad::zero(RATIONAL_AMBIENT_D)?;
    let k_even = (quotients.len() - 1) % 2 == 0;
    let expected = if k_even {
        (one.clone(), zero.clone())
    } else {
        (zero, one)
    };
    if (current.x.clone(), current.y.clone()) != expected {
        return Err(Error::internal(format!(
            "collapse of {num}/{den} ended at measure ({}, {}), expected ({}, {})",
            current.x, current.y, expected.0, expected.1
        )));
    }
    // The endpoint carrying the nonzero weight is the collapsed curve.
    let endpoint = if k_even {
        current.interval.left_endpoint()
    } else {
        current.interval.right_endpoint()
    };
    if (endpoint.0, endpoint.1) != (num, den) {
        return Err(Error::internal(format!(
            "collapse of {num}/{den} ended at interval {}, curve endpoint mismatch",
            current.interval
        )));
    }

    Ok(CollapseResult {
        curve: (num.clone(), den.clone()),
        cf,
        initial,
        terminal_interval: current.interval.clone(),
        terminal_measure: (current.x.clone(), current.y.clone()),
        steps,
    })
}
