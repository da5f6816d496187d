//! Orbits of `f_n`: lengths, iteration, full decompositions of `Ω_n` and the
//! split of orbits into self-conjugate ones and conjugate pairs.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::{OmegaSpace, Point};

/// Default cap on `|Ω_n|` for whole-set traversals: one visited bit per
/// point, so 2^31 points is 256 MiB of scratch.
pub const DEFAULT_POINT_CAP: u64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSummary {
    pub generator: Point,
    pub length: u64,
    /// Lexicographically smallest point of the orbit.
    pub canonical: Point,
    /// The orbit's point set is closed under conjugation.
    pub self_conjugate: bool,
}

impl OrbitSummary {
    /// Walks the orbit through `p` once.
    pub fn of(space: &OmegaSpace, p: Point) -> Result<Self> {
        let p = space.check(p)?;
        let mirror = space.mirror(p);
        let mut canonical = p;
        let mut self_conjugate = false;
        let mut length = 0;
        for q in orbit_iter(space, p)? {
            length += 1;
            canonical = canonical.min(q);
            self_conjugate |= q == mirror;
        }
        Ok(OrbitSummary {
            generator: p,
            length,
            canonical,
            self_conjugate,
        })
    }
}

/// One `r^m` term of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureEntry {
    pub length: u64,
    pub count: u64,
}

/// The multiset `{r_1^{m_1}, …, r_s^{m_s}}` of orbit lengths, ascending by `r`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionSignature {
    pub entries: Vec<SignatureEntry>,
}

impl DecompositionSignature {
    pub fn from_lengths(lengths: impl IntoIterator<Item = u64>) -> Self {
        let mut counts = BTreeMap::new();
        for r in lengths {
            *counts.entry(r).or_insert(0u64) += 1;
        }
        Self::from_counts(counts)
    }

    pub fn from_counts(counts: BTreeMap<u64, u64>) -> Self {
        DecompositionSignature {
            entries: counts
                .into_iter()
                .filter(|&(_, m)| m > 0)
                .map(|(length, count)| SignatureEntry { length, count })
                .collect(),
        }
    }

    /// `Σ r_i·m_i`, which equals `|Ω_n|`.
    pub fn total_points(&self) -> u64 {
        self.entries.iter().map(|e| e.length * e.count).sum()
    }

    pub fn orbit_count(&self) -> u64 {
        self.entries.iter().map(|e| e.count).sum()
    }

    pub fn count_of(&self, length: u64) -> u64 {
        self.entries
            .iter()
            .find(|e| e.length == length)
            .map_or(0, |e| e.count)
    }
}

impl From<&[(u64, u64)]> for DecompositionSignature {
    fn from(pairs: &[(u64, u64)]) -> Self {
        let mut counts = BTreeMap::new();
        for &(r, m) in pairs {
            *counts.entry(r).or_insert(0) += m;
        }
        Self::from_counts(counts)
    }
}

impl fmt::Display for DecompositionSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}^{}", e.length, e.count)?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyCensus {
    pub self_conjugate_by_length: BTreeMap<u64, u64>,
    /// Unordered pairs of distinct, mutually conjugate orbits.
    pub conjugate_pair_count: u64,
    pub orbit_count: u64,
}

impl ConjugacyCensus {
    pub fn self_conjugate(&self, length: u64) -> u64 {
        self.self_conjugate_by_length
            .get(&length)
            .copied()
            .unwrap_or(0)
    }

    pub fn self_conjugate_total(&self) -> u64 {
        self.self_conjugate_by_length.values().sum()
    }
}

/// The orbit through `p`, starting at `p` and stopping before it repeats.
#[derive(Debug, Clone)]
pub struct OrbitIter {
    space: OmegaSpace,
    start: Point,
    next: Option<Point>,
}

impl Iterator for OrbitIter {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let current = self.next?;
        let following = self.space.step(current);
        self.next = (following != self.start).then_some(following);
        Some(current)
    }
}

impl std::iter::FusedIterator for OrbitIter {}

pub fn orbit_iter(space: &OmegaSpace, p: Point) -> Result<OrbitIter> {
    let start = space.check(p)?;
    Ok(OrbitIter {
        space: *space,
        start,
        next: Some(start),
    })
}

/// Least `r ≥ 1` with `f_n^r(p) = p`, by direct iteration.
pub fn orbit_length(space: &OmegaSpace, p: Point) -> Result<u64> {
    let p = space.check(p)?;
    let n = space.n();
    // A constant modulus turns the per-step division into a multiply.
    Ok(match space.k() {
        1 => cycle_length::<10>(n, p),
        2 => cycle_length::<100>(n, p),
        3 => cycle_length::<1_000>(n, p),
        4 => cycle_length::<10_000>(n, p),
        5 => cycle_length::<100_000>(n, p),
        6 => cycle_length::<1_000_000>(n, p),
        7 => cycle_length::<10_000_000>(n, p),
        8 => cycle_length::<100_000_000>(n, p),
        9 => cycle_length::<1_000_000_000>(n, p),
        _ => unreachable!("capacity check bounds k by 9"),
    })
}

fn cycle_length<const P: u64>(n: u64, start: Point) -> u64 {
    let (mut x, mut y) = (start.x, start.y);
    let mut r = 0;
    loop {
        let m = n * x + y;
        x = m % P;
        y = m / P;
        r += 1;
        if x == start.x && y == start.y {
            return r;
        }
    }
}

/// Length of the orbit through the standard point `(n, 0)`.
pub fn standard_orbit_length(space: &OmegaSpace) -> u64 {
    orbit_length(space, space.standard_point()).expect("(n, 0) lies in Ω_n")
}

struct Visited {
    words: Vec<u64>,
}

impl Visited {
    fn new(len: u64) -> Self {
        Visited {
            words: vec![0; len.div_ceil(64) as usize],
        }
    }

    #[inline]
    fn get(&self, i: u64) -> bool {
        self.words[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: u64) {
        self.words[(i / 64) as usize] |= 1 << (i % 64);
    }
}

fn ensure_cap(space: &OmegaSpace, cap: u64) -> Result<()> {
    if space.size() > cap {
        Err(Error::PointCapExceeded {
            n: space.n(),
            size: space.size(),
            cap,
        })
    } else {
        Ok(())
    }
}

/// Visits every orbit of `Ω_n` exactly once, in ascending order of canonical
/// representative. Points are scanned in lexicographic order, so the first
/// unvisited point of each orbit is its smallest one and becomes the generator.
pub fn for_each_orbit(
    space: &OmegaSpace,
    cap: u64,
    mut visit: impl FnMut(&OrbitSummary),
) -> Result<()> {
    ensure_cap(space, cap)?;
    let mut visited = Visited::new(space.size());
    for start in space.points() {
        if visited.get(space.index(start)) {
            continue;
        }
        let mirror = space.mirror(start);
        let mut self_conjugate = false;
        let mut length = 0;
        let mut p = start;
        loop {
            visited.set(space.index(p));
            self_conjugate |= p == mirror;
            length += 1;
            p = space.step(p);
            if p == start {
                break;
            }
        }
        visit(&OrbitSummary {
            generator: start,
            length,
            canonical: start,
            self_conjugate,
        });
    }
    Ok(())
}

/// All orbit summaries, ordered by canonical representative.
pub fn orbits(space: &OmegaSpace, cap: u64) -> Result<Vec<OrbitSummary>> {
    let mut out = Vec::new();
    for_each_orbit(space, cap, |o| out.push(*o))?;
    Ok(out)
}

pub fn decompose(space: &OmegaSpace) -> Result<DecompositionSignature> {
    decompose_capped(space, DEFAULT_POINT_CAP)
}

pub fn decompose_capped(space: &OmegaSpace, cap: u64) -> Result<DecompositionSignature> {
    let mut counts = BTreeMap::new();
    for_each_orbit(space, cap, |o| *counts.entry(o.length).or_insert(0) += 1)?;
    Ok(DecompositionSignature::from_counts(counts))
}

pub fn conjugacy_census(space: &OmegaSpace) -> Result<ConjugacyCensus> {
    conjugacy_census_capped(space, DEFAULT_POINT_CAP)
}

pub fn conjugacy_census_capped(space: &OmegaSpace, cap: u64) -> Result<ConjugacyCensus> {
    let mut census = ConjugacyCensus::default();
    let mut paired = 0;
    for_each_orbit(space, cap, |o| {
        census.orbit_count += 1;
        if o.self_conjugate {
            *census.self_conjugate_by_length.entry(o.length).or_insert(0) += 1;
        } else {
            paired += 1;
        }
    })?;
    // conjugation maps orbits onto orbits, so the remainder pairs up exactly
    debug_assert_eq!(paired % 2, 0);
    census.conjugate_pair_count = paired / 2;
    Ok(census)
}

/// Multiplicative order of 10 modulo `n·10^k − 1`, by iterated modular
/// multiplication. Independent of the point map; used to cross-check it.
pub fn order_oracle(space: &OmegaSpace) -> u64 {
    let modulus = space.size() - 1;
    // gcd(10, M) = 1 since M ends in 9, so the loop terminates.
    let mut d = 1;
    if modulus < 1 << 59 {
        let mut v = 10 % modulus;
        while v != 1 {
            v = v * 10 % modulus;
            d += 1;
        }
    } else {
        let m = modulus as u128;
        let mut v = 10 % m;
        while v != 1 {
            v = v * 10 % m;
            d += 1;
        }
    }
    d
}
