//! Degree sequences of iterates and their growth type.
//!
//! The growth type of a birational map is a statement about an infinite
//! sequence; everything here looks at a finite window and says so through
//! [`GrowthClass::Indeterminate`] when the window is inconclusive.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::Scalar;
use crate::birmap::{BirMap, Caps, JonqMap, MapError, ProjMap};

/// Default iteration depth for maps composed projectively.
pub const DEFAULT_N_MAX: usize = 16;
/// Default iteration depth for maps iterated in de Jonquières form.
pub const DEFAULT_N_MAX_JONQ: usize = 64;
/// Shortest sequence [`classify_growth`] accepts.
pub const MIN_CLASSIFY_LEN: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DynamicsError {
    #[error("sequence of length {0} is too short to classify (need {MIN_CLASSIFY_LEN})")]
    TooShort(usize),
    #[error("sequence does not grow exponentially")]
    NotExponential,
    #[error("caps exceeded at the first iterate: {0}")]
    CapAtFirstStep(MapError),
    #[error("n_max must be at least 1")]
    ZeroLength,
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GrowthClass {
    /// Bounded degrees: an elliptic map.
    Bounded,
    /// Linear growth: a Jonquières twist.
    Linear,
    /// Quadratic growth: a Halphen twist.
    Quadratic,
    /// Exponential growth: a hyperbolic map.
    Exponential,
    Indeterminate,
}

impl GrowthClass {
    /// The geometric name of the class.
    pub fn map_type(self) -> &'static str {
        match self {
            GrowthClass::Bounded => "elliptic",
            GrowthClass::Linear => "Jonquières twist",
            GrowthClass::Quadratic => "Halphen twist",
            GrowthClass::Exponential => "hyperbolic",
            GrowthClass::Indeterminate => "indeterminate",
        }
    }
}

impl std::fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

/// Classification thresholds.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    /// Exponential growth requires ratios of at least `1 + theta`.
    pub theta: f64,
    /// Largest relative residual accepted for the log-linear fit.
    pub residual: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            theta: 0.25,
            residual: 1e-2,
        }
    }
}

/// Degrees of `f, f², …` and whether a cap stopped the iteration early.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    pub degrees: Vec<u32>,
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrowthReport {
    pub degrees: Vec<u32>,
    pub class: GrowthClass,
    /// Estimate of the dynamical degree; exponential class only.
    pub dyn_degree_estimate: Option<f64>,
    /// Estimate of `c` in `deg(fⁿ) ≈ c·λⁿ`; exponential class only.
    pub growth_constant_estimate: Option<f64>,
    pub n_used: usize,
    pub truncated: bool,
}

/// Estimate of the dynamical degree with the number of ratios it rests on.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeEstimate {
    pub value: f64,
    pub samples: usize,
}

fn check_first<F: Scalar>(first: &ProjMap<F>, caps: &Caps) -> Result<(), DynamicsError> {
    if first.degree() > caps.max_degree {
        return Err(DynamicsError::CapAtFirstStep(MapError::DegreeCap {
            bound: first.degree() as u64,
            cap: caps.max_degree,
        }));
    }
    if first.term_count() > caps.max_terms {
        return Err(DynamicsError::CapAtFirstStep(MapError::TermCap {
            terms: first.term_count(),
            cap: caps.max_terms,
        }));
    }
    Ok(())
}

/// Degrees of the iterates by projective composition, `fⁿ = f ∘ fⁿ⁻¹`.
pub fn degree_sequence_projective<F: Scalar>(
    f: &ProjMap<F>,
    n_max: usize,
    caps: &Caps,
) -> Result<DegreeSequence, DynamicsError> {
    if n_max == 0 {
        return Err(DynamicsError::ZeroLength);
    }
    check_first(f, caps)?;
    let mut degrees = vec![f.degree()];
    let mut current = f.clone();
    for _ in 1..n_max {
        match f.compose_capped(&current, caps) {
            Ok(next) => {
                degrees.push(next.degree());
                current = next;
            }
            Err(e) if e.is_cap() => return Ok(DegreeSequence { degrees, truncated: true }),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(DegreeSequence {
        degrees,
        truncated: false,
    })
}

/// Degrees of the iterates computed in de Jonquières normal form, converting
/// each iterate to a reduced triple only to read off its degree.
pub fn degree_sequence_jonq<F: Scalar>(
    f: &JonqMap<F>,
    n_max: usize,
    caps: &Caps,
) -> Result<DegreeSequence, DynamicsError> {
    if n_max == 0 {
        return Err(DynamicsError::ZeroLength);
    }
    let first = f.to_proj();
    check_first(&first, caps)?;
    let mut degrees = vec![first.degree()];
    let mut current = f.clone();
    for _ in 1..n_max {
        current = f.compose(&current)?;
        let (degree, terms) = current.degree_and_terms();
        if degree > caps.max_degree || terms > caps.max_terms {
            return Ok(DegreeSequence { degrees, truncated: true });
        }
        degrees.push(degree);
    }
    Ok(DegreeSequence {
        degrees,
        truncated: false,
    })
}

/// Degrees of `f¹ … f^n_max`, using the normal-form fast path when `f` is a
/// de Jonquières map.
pub fn degree_sequence<F: Scalar>(f: &BirMap<F>, n_max: usize, caps: &Caps) -> Result<DegreeSequence, DynamicsError> {
    match f {
        BirMap::Jonq(j) => degree_sequence_jonq(j, n_max, caps),
        BirMap::Proj(p) => degree_sequence_projective(p, n_max, caps),
    }
}

fn window(seq: &[u32]) -> &[u32] {
    &seq[seq.len() / 2..]
}

/// The last half, widened to four entries so that second differences are
/// compared at least once even for the shortest sequences.
fn difference_window(seq: &[u32]) -> &[u32] {
    let n = seq.len();
    &seq[n - (n - n / 2).max(4).min(n)..]
}

fn is_bounded(seq: &[u32]) -> bool {
    let n = seq.len();
    let third = (n / 3).max(1);
    let (head, tail) = seq.split_at(n - third);
    let max = *seq.iter().max().expect("nonempty");
    head.contains(&max) && tail.iter().all(|v| head.contains(v))
}

fn differences(seq: &[i64]) -> Vec<i64> {
    seq.windows(2).map(|w| w[1] - w[0]).collect()
}

fn constant_nonzero(v: &[i64]) -> bool {
    v.len() >= 2 && v[0] != 0 && v.iter().all(|d| *d == v[0])
}

/// Relative residual of the least-squares fit `log d_k ≈ a + b k`,
/// measured against the spread of the logs.
fn log_linear_residual(w: &[u32]) -> f64 {
    let n = w.len() as f64;
    let ys: Vec<f64> = w.iter().map(|&d| (d as f64).ln()).collect();
    let mean_x = (n - 1.0) / 2.0;
    let mean_y = ys.iter().sum::<f64>() / n;
    let sxx: f64 = (0..w.len()).map(|k| (k as f64 - mean_x).powi(2)).sum();
    let sxy: f64 = ys.iter().enumerate().map(|(k, y)| (k as f64 - mean_x) * (y - mean_y)).sum();
    let slope = sxy / sxx;
    let res: f64 = ys
        .iter()
        .enumerate()
        .map(|(k, y)| (y - mean_y - slope * (k as f64 - mean_x)).powi(2))
        .sum();
    let spread: f64 = ys.iter().map(|y| (y - mean_y).powi(2)).sum();
    if spread == 0.0 {
        return f64::INFINITY;
    }
    (res / spread).sqrt()
}

fn is_exponential(seq: &[u32], t: &Thresholds) -> bool {
    let w = window(seq);
    w.len() >= 3
        && w.windows(2).all(|p| p[0] > 0 && p[1] as f64 >= (1.0 + t.theta) * p[0] as f64)
        && log_linear_residual(w) < t.residual
}

/// Geometric mean of the consecutive ratios over the last half.
pub fn dyn_degree_estimate(seq: &[u32]) -> Result<DegreeEstimate, DynamicsError> {
    dyn_degree_estimate_with(seq, &Thresholds::default())
}

pub fn dyn_degree_estimate_with(seq: &[u32], t: &Thresholds) -> Result<DegreeEstimate, DynamicsError> {
    if !is_exponential(seq, t) {
        return Err(DynamicsError::NotExponential);
    }
    Ok(ratio_estimate(seq))
}

fn ratio_estimate(seq: &[u32]) -> DegreeEstimate {
    let w = window(seq);
    let samples = w.len() - 1;
    let value = (*w.last().expect("nonempty") as f64 / w[0] as f64).powf(1.0 / samples as f64);
    DegreeEstimate { value, samples }
}

pub fn classify_growth(seq: &[u32]) -> Result<GrowthReport, DynamicsError> {
    classify_growth_with(seq, &Thresholds::default())
}

/// Classify by the tail of the sequence: bounded, then constant first
/// differences, constant second differences, and finally exponential
/// ratios with a good log-linear fit.
pub fn classify_growth_with(seq: &[u32], t: &Thresholds) -> Result<GrowthReport, DynamicsError> {
    if seq.len() < MIN_CLASSIFY_LEN {
        return Err(DynamicsError::TooShort(seq.len()));
    }
    let w: Vec<i64> = difference_window(seq).iter().map(|&d| d as i64).collect();
    let d1 = differences(&w);
    let d2 = differences(&d1);
    let mut report = GrowthReport {
        degrees: seq.to_vec(),
        class: GrowthClass::Indeterminate,
        dyn_degree_estimate: None,
        growth_constant_estimate: None,
        n_used: seq.len(),
        truncated: false,
    };
    report.class = if is_bounded(seq) {
        GrowthClass::Bounded
    } else if constant_nonzero(&d1) {
        GrowthClass::Linear
    } else if constant_nonzero(&d2) {
        GrowthClass::Quadratic
    } else if is_exponential(seq, t) {
        let est = ratio_estimate(seq);
        let start = seq.len() / 2;
        let c = window(seq)
            .iter()
            .enumerate()
            .map(|(k, &d)| d as f64 / est.value.powi((start + k + 1) as i32))
            .sum::<f64>()
            / (seq.len() - start) as f64;
        report.dyn_degree_estimate = Some(est.value);
        report.growth_constant_estimate = Some(c);
        GrowthClass::Exponential
    } else {
        GrowthClass::Indeterminate
    };
    Ok(report)
}

/// Degree sequence followed by classification.  Sequences cut short by the
/// caps below the classifiable length are reported as indeterminate.
pub fn growth_report<F: Scalar>(
    f: &BirMap<F>,
    n_max: usize,
    caps: &Caps,
    t: &Thresholds,
) -> Result<GrowthReport, DynamicsError> {
    let seq = degree_sequence(f, n_max, caps)?;
    let mut report = match classify_growth_with(&seq.degrees, t) {
        Ok(r) => r,
        Err(DynamicsError::TooShort(_)) => GrowthReport {
            n_used: seq.degrees.len(),
            degrees: seq.degrees.clone(),
            class: GrowthClass::Indeterminate,
            dyn_degree_estimate: None,
            growth_constant_estimate: None,
            truncated: seq.truncated,
        },
        Err(e) => return Err(e),
    };
    report.truncated = seq.truncated;
    Ok(report)
}
