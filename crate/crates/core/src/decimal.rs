//! Decimal string to `BigUint` conversion for multi-million digit inputs.
//!
//! `BigUint::parse_bytes` is quadratic in the digit count; splitting in halves
//! and recombining with `hi·10^len(lo) + lo` lets the sub-quadratic big-int
//! multiplication do the heavy lifting.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

const LEAF_DIGITS: usize = 2048;

pub(crate) fn parse_decimal(digits: &[u8]) -> BigUint {
    debug_assert!(digits.iter().all(u8::is_ascii_digit));
    let mut powers = HashMap::new();
    parse_rec(digits, &mut powers)
}

fn parse_rec(digits: &[u8], powers: &mut HashMap<usize, BigUint>) -> BigUint {
    if digits.is_empty() {
        return BigUint::zero();
    }
    if digits.len() <= LEAF_DIGITS {
        return BigUint::parse_bytes(digits, 10).expect("ASCII digits");
    }
    let low_len = digits.len() / 2;
    let (hi, lo) = digits.split_at(digits.len() - low_len);
    let hi = parse_rec(hi, powers);
    let lo = parse_rec(lo, powers);
    hi * pow10(low_len, powers) + lo
}

fn pow10(e: usize, powers: &mut HashMap<usize, BigUint>) -> BigUint {
    if let Some(p) = powers.get(&e) {
        return p.clone();
    }
    let p = if e <= 64 {
        BigUint::from(10u32).pow(e as u32)
    } else {
        let half = pow10(e / 2, powers);
        let sq = &half * &half;
        if e % 2 == 1 {
            sq * 10u32
        } else {
            sq
        }
    };
    powers.insert(e, p.clone());
    p
}
