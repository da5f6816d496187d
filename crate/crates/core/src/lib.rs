//! The carry map `f_n` on the Cartesian set `Ω_n = {0..10^k-1} × {0..n-1}` and
//! everything built on top of it.
//!
//! For a `k`-digit number `n`, one application of [`OmegaSpace::forward`] is a
//! single carry step of multiplying by `n` in base `10^k`:
//! `n·x + y = x' + 10^k·y'`. The map is a permutation of `Ω_n`, and its cycle
//! structure is what this crate studies:
//!
//! * [`space`]: the set `Ω_n`, points, forward/inverse maps, conjugation and
//!   fixed points.
//! * [`orbit`]: orbit lengths, full decompositions, conjugacy census and an
//!   independent multiplicative-order oracle.
//! * [`guinness`]: whole/one-half Guinness classification, range scans,
//!   twins, streaming digit generation and the rotation check.
//! * [`multiply`]: long multiplication by `n` as repeated carry steps.
//! * [`prng`]: the orbit pair generator, two classical comparison generators
//!   and four chi-square based tests.
//! * [`tiling`]: the conjugation-symmetric colouring of `Ω_n`, tilings, orbit
//!   plots and binary PPM output.

pub mod error;
pub mod guinness;
pub mod multiply;
pub mod orbit;
pub mod prng;
pub mod space;
pub mod tiling;

mod decimal;

pub use error::{Error, Result};
pub use guinness::{
    classify, digit_stream, scan, scan_parallel, twins, twins_parallel, verify_rotation,
    DigitChunkStream, GuinnessClass, GuinnessKind, RotationCheck,
};
pub use multiply::{chunk_decimal, multiply, multiply_traced, CarryStep, ChunkedDecimal};
pub use orbit::{
    conjugacy_census, decompose, orbit_iter, orbit_length, order_oracle, ConjugacyCensus,
    DecompositionSignature, OrbitIter, OrbitSummary,
};
pub use space::{OmegaSpace, Point};
pub use tiling::{
    color_groups, render_omega, render_orbit_plot, render_tiling, ColorGroup, Coloring, GroupKind,
    Image,
};
