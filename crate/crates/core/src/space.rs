//! The Cartesian set `Ω_n` and the pointwise maps on it.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible `|Ω_n| = n·10^k`. Every intermediate `n·x + y` is below
/// `|Ω_n|`, so all pointwise arithmetic fits in a `u64`.
pub const MAX_SIZE: u64 = 1 << 63;

/// One element `(x, y)` of `Ω_n`.
///
/// The derived ordering is lexicographic by `(x, y)`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct Point {
    pub x: u64,
    pub y: u64,
}

impl Point {
    pub const fn new(x: u64, y: u64) -> Self {
        Point { x, y }
    }
}

impl From<(u64, u64)> for Point {
    fn from((x, y): (u64, u64)) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Parameters of one set `Ω_n = {0, …, 10^k − 1} × {0, …, n − 1}` where `k` is
/// the number of decimal digits of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OmegaSpace {
    n: u64,
    k: u32,
    modulus: u64,
    size: u64,
}

/// Number of decimal digits of a positive integer.
pub fn digit_count(n: u64) -> u32 {
    n.checked_ilog10().map_or(1, |d| d + 1)
}

impl OmegaSpace {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroN);
        }
        let k = digit_count(n);
        let size = 10u64
            .checked_pow(k)
            .and_then(|m| n.checked_mul(m))
            .filter(|&s| s <= MAX_SIZE)
            .ok_or(Error::CapacityExceeded { n })?;
        Ok(OmegaSpace {
            n,
            k,
            modulus: size / n,
            size,
        })
    }

    #[inline]
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Decimal digit count of `n`, i.e. the chunk width.
    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    /// `10^k`, the exclusive bound on `x`.
    #[inline]
    pub fn chunk_modulus(&self) -> u64 {
        self.modulus
    }

    /// `|Ω_n| = n·10^k`.
    #[inline]
    pub fn size(&self) -> u64 {
        self.size
    }

    /// The standard generating point `(n, 0)`.
    #[inline]
    pub fn standard_point(&self) -> Point {
        Point::new(self.n, 0)
    }

    #[inline]
    pub fn contains(&self, p: Point) -> bool {
        p.x < self.modulus && p.y < self.n
    }

    pub fn check(&self, p: Point) -> Result<Point> {
        if self.contains(p) {
            Ok(p)
        } else {
            Err(Error::PointOutOfRange {
                n: self.n,
                point: p,
            })
        }
    }

    /// `f_n(x, y) = (x', y')` with `n·x + y = x' + 10^k·y'`.
    pub fn forward(&self, p: Point) -> Result<Point> {
        self.check(p).map(|p| self.step(p))
    }

    /// `f_n^{-1}(x', y') = (x, y)` with `x' + 10^k·y' = n·x + y`.
    pub fn inverse(&self, p: Point) -> Result<Point> {
        self.check(p).map(|p| self.step_back(p))
    }

    /// `(10^k − 1 − x, n − 1 − y)`.
    pub fn conjugate(&self, p: Point) -> Result<Point> {
        self.check(p).map(|p| self.mirror(p))
    }

    /// Unchecked [`forward`](Self::forward) for hot loops. `p` must lie in `Ω_n`.
    #[inline]
    pub fn step(&self, p: Point) -> Point {
        debug_assert!(self.contains(p));
        let m = self.n * p.x + p.y;
        Point::new(m % self.modulus, m / self.modulus)
    }

    /// Unchecked [`inverse`](Self::inverse).
    #[inline]
    pub fn step_back(&self, p: Point) -> Point {
        debug_assert!(self.contains(p));
        let m = p.x + self.modulus * p.y;
        Point::new(m / self.n, m % self.n)
    }

    /// Unchecked [`conjugate`](Self::conjugate).
    #[inline]
    pub fn mirror(&self, p: Point) -> Point {
        debug_assert!(self.contains(p));
        Point::new(self.modulus - 1 - p.x, self.n - 1 - p.y)
    }

    /// Dense index `x + 10^k·y` in `0..|Ω_n|`.
    #[inline]
    pub fn index(&self, p: Point) -> u64 {
        p.x + self.modulus * p.y
    }

    #[inline]
    pub fn point_at(&self, index: u64) -> Point {
        Point::new(index % self.modulus, index / self.modulus)
    }

    /// All fixed points of `f_n`, ascending by `x`.
    ///
    /// Fixed points solve `(n − 1)·x = (10^k − 1)·y`. With
    /// `g = gcd(n − 1, 10^k − 1)` the solutions inside `Ω_n` are exactly
    /// `(t·(10^k − 1)/g, t·(n − 1)/g)` for `t = 0..=g`.
    pub fn fixed_points(&self) -> Vec<Point> {
        let a = self.n - 1;
        let b = self.modulus - 1;
        let g = a.gcd(&b);
        (0..=g)
            .map(|t| Point::new(t * (b / g), t * (a / g)))
            .collect()
    }

    /// Number of fixed points, `gcd(n − 1, 10^k − 1) + 1`.
    pub fn fixed_point_count(&self) -> u64 {
        (self.n - 1).gcd(&(self.modulus - 1)) + 1
    }

    /// Points in lexicographic `(x, y)` order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.modulus).flat_map(move |x| (0..self.n).map(move |y| Point::new(x, y)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn space_parameters() {
        let s = OmegaSpace::new(9).unwrap();
        assert_eq!((s.k(), s.chunk_modulus(), s.size()), (1, 10, 90));
        let s = OmegaSpace::new(2013).unwrap();
        assert_eq!((s.k(), s.size()), (4, 20_130_000));
        let s = OmegaSpace::new(1).unwrap();
        assert_eq!((s.k(), s.size()), (1, 10));
        let s = OmegaSpace::new(10).unwrap();
        assert_eq!((s.k(), s.chunk_modulus()), (2, 100));
    }

    #[test]
    fn rejects_zero_and_oversized() {
        assert_eq!(OmegaSpace::new(0), Err(Error::ZeroN));
        assert!(OmegaSpace::new(999_999_999).is_ok());
        assert_eq!(
            OmegaSpace::new(1_000_000_000),
            Err(Error::CapacityExceeded { n: 1_000_000_000 })
        );
        assert!(OmegaSpace::new(u64::MAX).is_err());
    }

    #[test]
    fn forward_examples() {
        let s = OmegaSpace::new(103).unwrap();
        assert_eq!(s.forward(Point::new(76, 95)), Ok(Point::new(923, 7)));
        assert_eq!(s.forward(Point::new(0, 0)), Ok(Point::new(0, 0)));
        let s = OmegaSpace::new(2013).unwrap();
        // 2013² = 4052169
        assert_eq!(s.forward(Point::new(2013, 0)), Ok(Point::new(2169, 405)));
    }

    #[test]
    fn inverse_examples() {
        let s = OmegaSpace::new(103).unwrap();
        assert_eq!(s.inverse(Point::new(923, 7)), Ok(Point::new(76, 95)));
        assert_eq!(s.inverse(Point::new(0, 0)), Ok(Point::new(0, 0)));
        let s = OmegaSpace::new(2).unwrap();
        assert_eq!(s.inverse(Point::new(4, 0)), Ok(Point::new(2, 0)));
    }

    #[test]
    fn conjugate_examples() {
        let s = OmegaSpace::new(103).unwrap();
        assert_eq!(s.conjugate(Point::new(76, 95)), Ok(Point::new(923, 7)));
        assert_eq!(s.conjugate(Point::new(0, 0)), Ok(Point::new(999, 102)));
    }

    #[test]
    fn out_of_range_points_are_rejected() {
        let s = OmegaSpace::new(34).unwrap();
        let bad = [Point::new(100, 0), Point::new(0, 34)];
        for p in bad {
            let err = Error::PointOutOfRange { n: 34, point: p };
            assert_eq!(s.forward(p), Err(err.clone()));
            assert_eq!(s.inverse(p), Err(err.clone()));
            assert_eq!(s.conjugate(p), Err(err));
        }
    }

    #[test]
    fn fixed_points_examples() {
        let s = OmegaSpace::new(34).unwrap();
        let expected: Vec<_> = (0..34).map(|i| Point::new(3 * i, i)).collect();
        assert_eq!(s.fixed_points(), expected);

        // brute force over the 20 points of Ω_2
        let s = OmegaSpace::new(2).unwrap();
        let brute: Vec<_> = s.points().filter(|&p| s.step(p) == p).collect();
        assert_eq!(brute, vec![Point::new(0, 0), Point::new(9, 1)]);
        assert_eq!(s.fixed_points(), brute);

        assert_eq!(OmegaSpace::new(10).unwrap().fixed_points().len(), 10);
        assert_eq!(OmegaSpace::new(1).unwrap().fixed_points().len(), 10);
    }

    #[test]
    fn fixed_point_count_matches_diagonal_scan() {
        for n in 1..=999u64 {
            let s = OmegaSpace::new(n).unwrap();
            // brute-force scan of (n-1)x = (10^k-1)y over Ω_n
            let brute = (0..s.chunk_modulus())
                .filter(|&x| {
                    let lhs = (n - 1) * x;
                    lhs % (s.chunk_modulus() - 1) == 0 && lhs / (s.chunk_modulus() - 1) < n
                })
                .count() as u64;
            assert_eq!(s.fixed_point_count(), brute, "n = {n}");
            assert_eq!(s.fixed_points().len() as u64, brute, "n = {n}");
        }
    }

    #[test]
    fn bijective_for_small_n() {
        for n in 1..=200u64 {
            let s = OmegaSpace::new(n).unwrap();
            let mut seen = vec![false; s.size() as usize];
            for p in s.points() {
                let q = s.step(p);
                assert!(s.contains(q));
                let i = s.index(q) as usize;
                assert!(!seen[i], "n = {n}: duplicate image {q}");
                seen[i] = true;
                assert_eq!(s.step_back(q), p);
            }
        }
    }

    fn space_and_point() -> impl Strategy<Value = (OmegaSpace, Point)> {
        (1u64..=99_999_999).prop_flat_map(|n| {
            let s = OmegaSpace::new(n).unwrap();
            (Just(s), 0..s.chunk_modulus(), 0..n).prop_map(|(s, x, y)| (s, Point::new(x, y)))
        })
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution((s, p) in space_and_point()) {
            prop_assert_eq!(s.mirror(s.mirror(p)), p);
        }

        #[test]
        fn forward_commutes_with_conjugation((s, p) in space_and_point()) {
            prop_assert_eq!(s.step(s.mirror(p)), s.mirror(s.step(p)));
        }

        #[test]
        fn reciprocity((s, p) in space_and_point()) {
            let c = s.mirror(p);
            prop_assert_eq!(s.step(p) == c, s.step(c) == p);
        }

        #[test]
        fn inverse_undoes_forward((s, p) in space_and_point()) {
            prop_assert_eq!(s.step_back(s.step(p)), p);
            prop_assert_eq!(s.step(s.step_back(p)), p);
        }

        #[test]
        fn index_roundtrip((s, p) in space_and_point()) {
            prop_assert_eq!(s.point_at(s.index(p)), p);
        }
    }
}
