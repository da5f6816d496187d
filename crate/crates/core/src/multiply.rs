//! Long multiplication by a `k`-digit number as a chain of carry steps.
//!
//! Split `m` into `k`-digit chunks from the right, start with carry `0`, and
//! apply `f_n` to each `(chunk, carry)` pair: the new `x` is the product chunk
//! and the new `y` is the carry into the next chunk.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::{OmegaSpace, Point};

/// A decimal number split into `width`-digit chunks, least significant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChunkedDecimal {
    chunks: Vec<u64>,
    width: u32,
}

impl ChunkedDecimal {
    pub fn chunks(&self) -> &[u64] {
        &self.chunks
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn len(&self) -> usize {
        self.chunks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chunks.is_empty()
    }
}

fn validate_digits(m: &str) -> Result<&[u8]> {
    if m.is_empty() {
        return Err(Error::EmptyNumber);
    }
    if let Some((position, found)) = m.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
        return Err(Error::InvalidDigit { found, position });
    }
    Ok(m.as_bytes())
}

pub fn chunk_decimal(m: &str, width: u32) -> Result<ChunkedDecimal> {
    if !(1..=18).contains(&width) {
        return Err(Error::InvalidChunkWidth(width));
    }
    let digits = validate_digits(m)?;
    let chunks = digits
        .rchunks(width as usize)
        .map(|c| c.iter().fold(0u64, |acc, d| acc * 10 + u64::from(d - b'0')))
        .collect();
    Ok(ChunkedDecimal { chunks, width })
}

/// One `(x_i, y_i) ↦ (x'_i, y'_i)` application.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarryStep {
    pub input: Point,
    pub output: Point,
}

/// `m · n` as a decimal string without leading zeros.
pub fn multiply(m: &str, n: u64) -> Result<String> {
    multiply_traced(m, n).map(|(product, _)| product)
}

/// Like [`multiply`], also returning every carry step, least significant
/// chunk first.
pub fn multiply_traced(m: &str, n: u64) -> Result<(String, Vec<CarryStep>)> {
    let space = OmegaSpace::new(n)?;
    let chunked = chunk_decimal(m, space.k())?;
    let mut steps = Vec::with_capacity(chunked.len());
    let mut carry = 0;
    for &x in chunked.chunks() {
        let input = Point::new(x, carry);
        let output = space.step(input);
        carry = output.y;
        steps.push(CarryStep { input, output });
    }
    Ok((render_product(&steps, space.k() as usize, carry), steps))
}

fn render_product(steps: &[CarryStep], width: usize, carry: u64) -> String {
    let mut out = String::with_capacity(steps.len() * width + 20);
    out.push_str(&carry.to_string());
    for step in steps.iter().rev() {
        out.push_str(&format!("{:0width$}", step.output.x));
    }
    let trimmed = out.trim_start_matches('0');
    if trimmed.is_empty() {
        "0".to_owned()
    } else {
        trimmed.to_owned()
    }
}
