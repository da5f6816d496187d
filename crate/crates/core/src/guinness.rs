//! Whole and one-half Guinness numbers.
//!
//! `n` is a *whole* Guinness number when the orbit of the standard point
//! `(n, 0)` has length `|Ω_n| − 2` (every point except the two corner fixed
//! points), and a *one-half* Guinness number when it has length
//! `|Ω_n|/2 − 1`. Writing the `x` components of that orbit in the order
//! `x_0, x_{r−1}, …, x_1` as `k`-digit chunks gives the digits of `G_n`: a
//! number that starts with the digits of `n` and is divided by `n` when those
//! first `k` digits are moved to the end.

use std::io::{self, Write};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decimal::parse_decimal;
use crate::error::{Error, Result};
use crate::orbit::standard_orbit_length;
use crate::space::{OmegaSpace, Point};

/// Digit budget for [`verify_rotation`]; `G_n` for three-digit `n` stays well
/// below it.
pub const DEFAULT_DIGIT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GuinnessKind {
    Whole,
    Half,
    Neither,
}

impl GuinnessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GuinnessKind::Whole => "whole",
            GuinnessKind::Half => "half",
            GuinnessKind::Neither => "neither",
        }
    }
}

impl std::str::FromStr for GuinnessKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "whole" => Ok(GuinnessKind::Whole),
            "half" => Ok(GuinnessKind::Half),
            "neither" => Ok(GuinnessKind::Neither),
            other => Err(format!(
                "unknown kind {other:?}, expected whole|half|neither"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuinnessClass {
    pub n: u64,
    pub k: u32,
    pub kind: GuinnessKind,
    #[serde(rename = "orbit_length")]
    pub standard_orbit_length: u64,
}

impl GuinnessClass {
    pub fn is_guinness(&self) -> bool {
        self.kind != GuinnessKind::Neither
    }

    /// Digit count of `G_n`.
    pub fn digit_count(&self) -> u64 {
        self.standard_orbit_length * u64::from(self.k)
    }
}

fn kind_for(space: &OmegaSpace, length: u64) -> GuinnessKind {
    let size = space.size();
    if length == size - 2 {
        GuinnessKind::Whole
    } else if length == size / 2 - 1 {
        GuinnessKind::Half
    } else {
        GuinnessKind::Neither
    }
}

pub fn classify(n: u64) -> Result<GuinnessClass> {
    let space = OmegaSpace::new(n)?;
    let length = standard_orbit_length(&space);
    Ok(GuinnessClass {
        n,
        k: space.k(),
        kind: kind_for(&space, length),
        standard_orbit_length: length,
    })
}

fn check_range(lo: u64, hi: u64) -> Result<()> {
    if lo == 0 {
        return Err(Error::ZeroN);
    }
    if lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    OmegaSpace::new(hi).map(drop)
}

/// Classifies every `n` in `lo..=hi`, ascending, on `workers` threads.
pub fn classify_range(lo: u64, hi: u64, workers: usize) -> Result<Vec<GuinnessClass>> {
    check_range(lo, hi)?;
    if workers == 0 {
        return Err(Error::NonPositive("worker count"));
    }
    if workers == 1 {
        return (lo..=hi).map(classify).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    // indexed collect keeps ascending order whatever the scheduling
    pool.install(|| (lo..=hi).into_par_iter().map(classify).collect())
}

/// All `n` in `lo..=hi` of the given kind, ascending.
pub fn scan(lo: u64, hi: u64, kind: GuinnessKind) -> Result<Vec<GuinnessClass>> {
    scan_parallel(lo, hi, kind, 1)
}

pub fn scan_parallel(
    lo: u64,
    hi: u64,
    kind: GuinnessKind,
    workers: usize,
) -> Result<Vec<GuinnessClass>> {
    let mut all = classify_range(lo, hi, workers)?;
    all.retain(|c| c.kind == kind);
    Ok(all)
}

/// Pairs `(n, n + 1)` inside `lo..=hi` that are both one-half Guinness.
pub fn twins(lo: u64, hi: u64) -> Result<Vec<(u64, u64)>> {
    twins_parallel(lo, hi, 1)
}

pub fn twins_parallel(lo: u64, hi: u64, workers: usize) -> Result<Vec<(u64, u64)>> {
    let all = classify_range(lo, hi, workers)?;
    Ok(all
        .windows(2)
        .filter(|w| w[0].kind == GuinnessKind::Half && w[1].kind == GuinnessKind::Half)
        .map(|w| (w[0].n, w[1].n))
        .collect())
}

/// The `k`-digit chunks of `G_n`, most significant first.
///
/// Emits `x_0 = n`, then walks the standard orbit backwards with the inverse
/// map, yielding `x_{r−1}, x_{r−2}, …, x_1`. Constant memory.
#[derive(Debug, Clone)]
pub struct DigitChunkStream {
    space: OmegaSpace,
    total_chunks: u64,
    emitted: u64,
    current: Point,
}

impl DigitChunkStream {
    pub fn n(&self) -> u64 {
        self.space.n()
    }

    pub fn k(&self) -> u32 {
        self.space.k()
    }

    pub fn total_chunks(&self) -> u64 {
        self.total_chunks
    }

    pub fn digit_count(&self) -> u64 {
        self.total_chunks * u64::from(self.space.k())
    }

    /// Writes the remaining chunks as zero-padded ASCII digits with no
    /// separators and returns the number of digits written.
    pub fn write_to<W: Write>(self, out: W) -> io::Result<u64> {
        let k = self.k() as usize;
        let mut out = io::BufWriter::with_capacity(1 << 16, out);
        let mut buf = [0u8; 16];
        let mut written = 0;
        for mut chunk in self {
            for slot in buf[..k].iter_mut().rev() {
                *slot = b'0' + (chunk % 10) as u8;
                chunk /= 10;
            }
            out.write_all(&buf[..k])?;
            written += k as u64;
        }
        out.flush()?;
        Ok(written)
    }

    pub fn into_digits(self) -> Vec<u8> {
        let mut buf = Vec::with_capacity(self.digit_count() as usize);
        self.write_to(&mut buf)
            .expect("writing to a Vec cannot fail");
        buf
    }
}

impl Iterator for DigitChunkStream {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.emitted == self.total_chunks {
            return None;
        }
        if self.emitted > 0 {
            self.current = self.space.step_back(self.current);
        }
        self.emitted += 1;
        Some(self.current.x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total_chunks - self.emitted) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for DigitChunkStream {}

pub fn digit_stream(n: u64) -> Result<DigitChunkStream> {
    let space = OmegaSpace::new(n)?;
    Ok(DigitChunkStream {
        total_chunks: standard_orbit_length(&space),
        emitted: 0,
        current: space.standard_point(),
        space,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationCheck {
    pub n: u64,
    pub digit_count: u64,
    /// First `k` digits of `G_n`.
    pub prefix: String,
    pub prefix_matches: bool,
    /// `n · rotated = G_n` exactly.
    pub quotient_matches: bool,
    pub holds: bool,
}

fn guinness_digits(n: u64, budget: u64) -> Result<(GuinnessClass, Vec<u8>)> {
    let class = classify(n)?;
    if !class.is_guinness() {
        return Err(Error::NotGuinness { n });
    }
    let digits = class.digit_count();
    if digits > budget {
        return Err(Error::BudgetExceeded { n, digits, budget });
    }
    Ok((class, digit_stream(n)?.into_digits()))
}

/// `G_n` as an integer.
pub fn guinness_value(n: u64, budget: u64) -> Result<BigUint> {
    guinness_digits(n, budget).map(|(_, d)| parse_decimal(&d))
}

pub fn verify_rotation(n: u64) -> Result<RotationCheck> {
    verify_rotation_with_budget(n, DEFAULT_DIGIT_BUDGET)
}

/// Materializes `G_n`, moves its first `k` digits to the end and checks that
/// the result times `n` is `G_n` again.
pub fn verify_rotation_with_budget(n: u64, budget: u64) -> Result<RotationCheck> {
    let (class, digits) = guinness_digits(n, budget)?;
    let k = class.k as usize;
    let prefix = String::from_utf8(digits[..k].to_vec()).expect("ASCII digits");
    let prefix_matches = prefix == n.to_string();

    let mut rotated = Vec::with_capacity(digits.len());
    rotated.extend_from_slice(&digits[k..]);
    rotated.extend_from_slice(&digits[..k]);

    let value = parse_decimal(&digits);
    let quotient_matches = parse_decimal(&rotated) * n == value;
    let digit_count = digits.len() as u64;
    Ok(RotationCheck {
        n,
        digit_count,
        prefix,
        prefix_matches,
        quotient_matches,
        holds: prefix_matches && quotient_matches && digit_count == class.digit_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        let c = classify(2).unwrap();
        assert_eq!((c.kind, c.standard_orbit_length), (GuinnessKind::Whole, 18));
        let c = classify(9).unwrap();
        assert_eq!((c.kind, c.standard_orbit_length), (GuinnessKind::Half, 44));
        let c = classify(10).unwrap();
        assert_eq!(
            (c.kind, c.standard_orbit_length),
            (GuinnessKind::Neither, 3)
        );
        let c = classify(1).unwrap();
        assert_eq!(
            (c.kind, c.standard_orbit_length),
            (GuinnessKind::Neither, 1)
        );
    }

    #[test]
    fn classify_rejects_bad_input() {
        assert_eq!(classify(0), Err(Error::ZeroN));
        assert!(matches!(
            classify(5_000_000_000),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn scan_single_digits() {
        let whole: Vec<_> = scan(1, 9, GuinnessKind::Whole)
            .unwrap()
            .iter()
            .map(|c| c.n)
            .collect();
        assert_eq!(whole, vec![2, 3, 6]);
        let half: Vec<_> = scan(1, 9, GuinnessKind::Half)
            .unwrap()
            .iter()
            .map(|c| c.n)
            .collect();
        assert_eq!(half, vec![9]);
    }

    #[test]
    fn scan_rejects_bad_ranges() {
        assert_eq!(
            scan(10, 9, GuinnessKind::Half),
            Err(Error::InvalidRange { lo: 10, hi: 9 })
        );
        assert_eq!(scan(0, 9, GuinnessKind::Half), Err(Error::ZeroN));
        assert_eq!(
            scan_parallel(1, 9, GuinnessKind::Half, 0),
            Err(Error::NonPositive("worker count"))
        );
    }

    #[test]
    fn parallel_scan_matches_sequential() {
        let seq = scan(10, 99, GuinnessKind::Half).unwrap();
        for workers in [2, 3, 16, 200] {
            assert_eq!(
                scan_parallel(10, 99, GuinnessKind::Half, workers).unwrap(),
                seq
            );
        }
    }

    #[test]
    fn twins_two_digit() {
        assert_eq!(twins(10, 99).unwrap(), vec![(20, 21)]);
        assert_eq!(twins(20, 20).unwrap(), vec![]);
    }

    #[test]
    fn digit_stream_of_two() {
        let s = digit_stream(2).unwrap();
        assert_eq!(s.digit_count(), 18);
        assert_eq!(s.into_digits(), b"210526315789473684");
    }

    #[test]
    fn digit_stream_pads_chunks() {
        // G_14 has chunks below 10 somewhere; every chunk must be 2 characters.
        let s = digit_stream(14).unwrap();
        let chunks: Vec<u64> = s.clone().collect();
        assert!(chunks.iter().any(|&c| c < 10));
        let digits = s.into_digits();
        assert_eq!(digits.len(), chunks.len() * 2);
        for (chunk, pair) in chunks.iter().zip(digits.chunks(2)) {
            assert_eq!(format!("{chunk:02}").as_bytes(), pair);
        }
    }

    #[test]
    fn digit_stream_reverses_the_orbit() {
        let space = OmegaSpace::new(37).unwrap();
        let forward: Vec<u64> = crate::orbit::orbit_iter(&space, space.standard_point())
            .unwrap()
            .map(|p| p.x)
            .collect();
        let mut expected = vec![forward[0]];
        expected.extend(forward[1..].iter().rev());
        let streamed: Vec<u64> = digit_stream(37).unwrap().collect();
        assert_eq!(streamed, expected);
    }

    #[test]
    fn rotation_examples() {
        let r = verify_rotation(2).unwrap();
        assert!(r.holds);
        assert_eq!(r.prefix, "2");
        assert_eq!(r.digit_count, 18);
        assert_eq!(
            BigUint::parse_bytes(b"105263157894736842", 10).unwrap() * 2u32,
            BigUint::parse_bytes(b"210526315789473684", 10).unwrap()
        );
        assert!(verify_rotation(14).unwrap().holds);
        assert_eq!(verify_rotation(10), Err(Error::NotGuinness { n: 10 }));
    }

    #[test]
    fn rotation_budget() {
        assert_eq!(
            verify_rotation_with_budget(9, 43),
            Err(Error::BudgetExceeded {
                n: 9,
                digits: 44,
                budget: 43
            })
        );
        assert!(verify_rotation_with_budget(9, 44).unwrap().holds);
    }

    #[test]
    fn value_matches_stream() {
        for n in [2, 3, 6, 9, 14, 20, 102] {
            let digits = digit_stream(n).unwrap().into_digits();
            let value = guinness_value(n, DEFAULT_DIGIT_BUDGET).unwrap();
            assert_eq!(value.to_string().as_bytes(), &digits[..], "n = {n}");
        }
    }
}
