//! Classical chi-square tests for a stream of values in `[0, 1)`.
//!
//! * uniformity: 100 equal-width bins, 99 degrees of freedom;
//! * gap: gaps between hits of `[0, 0.5)`, lengths `0..=9` plus a pooled
//!   `10+` class, 10 degrees of freedom;
//! * maximum-of-t: non-overlapping groups of `t = 5`, `max^t` binned into 10
//!   equal bins, 9 degrees of freedom;
//! * poker: hands of five first decimal digits classified by distinct-digit
//!   count, with the 1- and 2-distinct classes pooled, 3 degrees of freedom.
//!
//! A test passes when its statistic does not exceed the upper chi-square
//! quantile at the configured significance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const UNIFORMITY_BINS: usize = 100;
const GAP_LOW: f64 = 0.0;
const GAP_HIGH: f64 = 0.5;
const GAP_CLASSES: usize = 10;
const MAX_T: usize = 5;
const MAX_BINS: usize = 10;
const HAND: usize = 5;

/// `P(r distinct digits in 5 draws)`, `r = 1..=5`: `10!/(10−r)! · S(5, r) / 10^5`.
const POKER_PROBABILITIES: [f64; 5] = [0.0001, 0.0135, 0.18, 0.504, 0.3024];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Significance {
    #[default]
    #[serde(rename = "0.01")]
    OnePercent,
    #[serde(rename = "0.05")]
    FivePercent,
}

impl Significance {
    pub fn alpha(self) -> f64 {
        match self {
            Significance::OnePercent => 0.01,
            Significance::FivePercent => 0.05,
        }
    }

    /// Upper chi-square quantile for the degrees of freedom used here.
    pub fn threshold(self, dof: usize) -> f64 {
        let (one, five) = match dof {
            3 => (11.3449, 7.8147),
            9 => (21.6660, 16.9190),
            10 => (23.2093, 18.3070),
            99 => (134.6416, 123.2252),
            _ => panic!("no tabulated chi-square quantile for {dof} degrees of freedom"),
        };
        match self {
            Significance::OnePercent => one,
            Significance::FivePercent => five,
        }
    }
}

impl std::str::FromStr for Significance {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "0.01" => Ok(Significance::OnePercent),
            "0.05" => Ok(Significance::FivePercent),
            other => Err(format!(
                "unsupported significance {other:?}, expected 0.01 or 0.05"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestConfig {
    pub significance: Significance,
    pub min_samples: usize,
}

impl Default for TestConfig {
    fn default() -> Self {
        TestConfig {
            significance: Significance::OnePercent,
            min_samples: 1000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestReport {
    pub test: String,
    pub statistic: f64,
    pub degrees_of_freedom: usize,
    pub threshold: f64,
    pub pass: bool,
    pub sample_size: usize,
}

impl TestReport {
    fn new(test: &str, statistic: f64, dof: usize, sample_size: usize, sig: Significance) -> Self {
        let threshold = sig.threshold(dof);
        TestReport {
            test: test.to_owned(),
            statistic,
            degrees_of_freedom: dof,
            threshold,
            pass: statistic <= threshold,
            sample_size,
        }
    }
}

fn chi_square(observed: &[u64], probabilities: &[f64]) -> f64 {
    let total: u64 = observed.iter().sum();
    let total = total as f64;
    observed
        .iter()
        .zip(probabilities)
        .map(|(&o, &p)| {
            let e = total * p;
            (o as f64 - e).powi(2) / e
        })
        .sum()
}

#[inline]
fn bin(u: f64, bins: usize) -> usize {
    ((u * bins as f64) as usize).min(bins - 1)
}

pub fn uniformity(sample: &[f64], sig: Significance) -> TestReport {
    let mut counts = [0u64; UNIFORMITY_BINS];
    for &u in sample {
        counts[bin(u, UNIFORMITY_BINS)] += 1;
    }
    let p = [1.0 / UNIFORMITY_BINS as f64; UNIFORMITY_BINS];
    TestReport::new(
        "uniformity",
        chi_square(&counts, &p),
        UNIFORMITY_BINS - 1,
        sample.len(),
        sig,
    )
}

/// Gap lengths are counted from the start of the sample to the first hit and
/// between consecutive hits; a trailing unfinished run is dropped.
pub fn gap(sample: &[f64], sig: Significance) -> TestReport {
    let mut counts = [0u64; GAP_CLASSES + 1];
    let mut run = 0usize;
    for &u in sample {
        if (GAP_LOW..GAP_HIGH).contains(&u) {
            counts[run.min(GAP_CLASSES)] += 1;
            run = 0;
        } else {
            run += 1;
        }
    }
    let p = GAP_HIGH - GAP_LOW;
    let mut probs = [0.0; GAP_CLASSES + 1];
    for (r, slot) in probs.iter_mut().enumerate().take(GAP_CLASSES) {
        *slot = p * (1.0 - p).powi(r as i32);
    }
    probs[GAP_CLASSES] = (1.0 - p).powi(GAP_CLASSES as i32);
    TestReport::new(
        "gap",
        chi_square(&counts, &probs),
        GAP_CLASSES,
        sample.len(),
        sig,
    )
}

pub fn max_of_t(sample: &[f64], sig: Significance) -> TestReport {
    let mut counts = [0u64; MAX_BINS];
    for group in sample.chunks_exact(MAX_T) {
        let max = group.iter().copied().fold(0.0, f64::max);
        counts[bin(max.powi(MAX_T as i32), MAX_BINS)] += 1;
    }
    let p = [1.0 / MAX_BINS as f64; MAX_BINS];
    TestReport::new(
        "maximum-of-t",
        chi_square(&counts, &p),
        MAX_BINS - 1,
        sample.len(),
        sig,
    )
}

pub fn poker(sample: &[f64], sig: Significance) -> TestReport {
    // classes: ≤2 distinct, 3, 4, 5
    let mut counts = [0u64; 4];
    for hand in sample.chunks_exact(HAND) {
        let mut seen = 0u16;
        for &u in hand {
            seen |= 1 << bin(u, 10);
        }
        let distinct = seen.count_ones() as usize;
        counts[distinct.saturating_sub(2)] += 1;
    }
    let [p1, p2, p3, p4, p5] = POKER_PROBABILITIES;
    let probs = [p1 + p2, p3, p4, p5];
    TestReport::new("poker", chi_square(&counts, &probs), 3, sample.len(), sig)
}

/// Runs the four tests in the order uniformity, gap, maximum-of-t, poker.
pub fn run_tests(sample: &[f64], config: &TestConfig) -> Result<Vec<TestReport>> {
    let needed = config.min_samples.max(MAX_T.max(HAND));
    if sample.len() < needed {
        return Err(Error::InsufficientSample {
            needed,
            got: sample.len(),
        });
    }
    let sig = config.significance;
    Ok(vec![
        uniformity(sample, sig),
        gap(sample, sig),
        max_of_t(sample, sig),
        poker(sample, sig),
    ])
}
