//! Pseudorandom pairs from the orbit of `f_n`, plus the middle-square and
//! Lehmer generators for comparison.
//!
//! The orbit generator walks the orbit of a seed point (by default `(n, 0)`)
//! and emits `(x / 10^k, y / n)` for each visited point, seed first. Its
//! period is the seed's orbit length, so a one-half Guinness `n` gives period
//! `|Ω_n|/2 − 1`.

pub mod stats;

use crate::error::Result;
use crate::orbit::orbit_length;
use crate::space::{OmegaSpace, Point};

pub use stats::{run_tests, Significance, TestConfig, TestReport};

#[derive(Debug, Clone)]
pub struct OrbitGenerator {
    space: OmegaSpace,
    seed: Point,
    current: Point,
    emitted: u64,
}

impl OrbitGenerator {
    pub fn new(space: OmegaSpace, seed: Point) -> Result<Self> {
        let seed = space.check(seed)?;
        Ok(OrbitGenerator {
            space,
            seed,
            current: seed,
            emitted: 0,
        })
    }

    /// Seeded at the standard point `(n, 0)`.
    pub fn standard(space: OmegaSpace) -> Self {
        let seed = space.standard_point();
        OrbitGenerator {
            space,
            seed,
            current: seed,
            emitted: 0,
        }
    }

    pub fn space(&self) -> &OmegaSpace {
        &self.space
    }

    pub fn seed(&self) -> Point {
        self.seed
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    /// Returns the current point and advances by one forward step.
    pub fn next_point(&mut self) -> Point {
        let p = self.current;
        self.current = self.space.step(p);
        self.emitted += 1;
        p
    }

    /// `(x / 10^k, y / n)`.
    pub fn to_unit(&self, p: Point) -> (f64, f64) {
        (
            p.x as f64 / self.space.chunk_modulus() as f64,
            p.y as f64 / self.space.n() as f64,
        )
    }

    /// Stream period: the seed's orbit length.
    pub fn period(&self) -> u64 {
        orbit_length(&self.space, self.seed).expect("seed checked at construction")
    }

    /// First components only.
    pub fn first_components(self) -> impl Iterator<Item = f64> {
        self.map(|(u, _)| u)
    }

    /// Formats a point as `"u v"`, `u` with `k` decimals (exact) and `v` with
    /// `⌈log10 n⌉` decimals.
    pub fn format_pair(&self, p: Point) -> String {
        let k = self.space.k() as usize;
        let n = self.space.n();
        let v_digits = (0..).find(|&d| 10u64.pow(d) >= n).unwrap() as usize;
        let v = p.y as f64 / n as f64;
        format!("0.{:0k$} {:.v_digits$}", p.x, v)
    }
}

impl Iterator for OrbitGenerator {
    type Item = (f64, f64);

    fn next(&mut self) -> Option<(f64, f64)> {
        let p = self.next_point();
        Some(self.to_unit(p))
    }
}

/// Von Neumann's middle-square method on four-digit states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MiddleSquare {
    value: u32,
}

impl MiddleSquare {
    pub const STATES: u32 = 10_000;

    /// `None` unless `seed` is in `0..=9999`.
    pub fn new(seed: u32) -> Option<Self> {
        (seed < Self::STATES).then_some(MiddleSquare { value: seed })
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    /// Square, pad to eight digits, keep digits 3 to 6.
    pub fn next_state(self) -> Self {
        MiddleSquare {
            value: self.value * self.value / 100 % Self::STATES,
        }
    }
}

impl Iterator for MiddleSquare {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let u = f64::from(self.value) / f64::from(Self::STATES);
        *self = self.next_state();
        Some(u)
    }
}

/// `m_{i+1} = 5^17 · m_i mod 2^40`, output `m_i / 2^40`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lehmer {
    m: u64,
}

impl Lehmer {
    pub const MULTIPLIER: u64 = 762_939_453_125;
    pub const MODULUS_BITS: u32 = 40;
    const MASK: u64 = (1 << Self::MODULUS_BITS) - 1;

    pub fn new(m: u64) -> Self {
        Lehmer { m: m & Self::MASK }
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn next_state(self) -> Self {
        // reduction mod 2^40 commutes with wrapping mod 2^64
        Lehmer {
            m: self.m.wrapping_mul(Self::MULTIPLIER) & Self::MASK,
        }
    }
}

impl Default for Lehmer {
    fn default() -> Self {
        Lehmer { m: 1 }
    }
}

impl Iterator for Lehmer {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let u = self.m as f64 / (1u64 << Self::MODULUS_BITS) as f64;
        *self = self.next_state();
        Some(u)
    }
}
