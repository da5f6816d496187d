//! Criterion benchmarks for `guinness-core`; see `benches/`.

/// Decimal string of `len` pseudorandom digits, reproducible across runs.
pub fn digits(len: usize, seed: u64) -> String {
    let mut v = seed | 1;
    (0..len)
        .map(|_| {
            v ^= v << 13;
            v ^= v >> 7;
            v ^= v << 17;
            char::from(b'0' + (v % 10) as u8)
        })
        .collect()
}
