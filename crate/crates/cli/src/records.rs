//! JSON output records. Field order is the serialized key order.

use serde::{Deserialize, Serialize};

use guinness_core::orbit::{ConjugacyCensus, DecompositionSignature, SignatureEntry};
use guinness_core::{OmegaSpace, Point};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinRecord {
    pub n: u64,
    pub next: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeRecord {
    pub n: u64,
    pub k: u32,
    pub size: u64,
    pub signature: Vec<SignatureEntry>,
}

impl DecomposeRecord {
    pub fn new(space: &OmegaSpace, signature: DecompositionSignature) -> Self {
        DecomposeRecord {
            n: space.n(),
            k: space.k(),
            size: space.size(),
            signature: signature.entries,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: u64,
    pub orbit_count: u64,
    pub conjugate_pair_count: u64,
    pub self_conjugate: Vec<SignatureEntry>,
}

impl CensusRecord {
    pub fn new(space: &OmegaSpace, census: &ConjugacyCensus) -> Self {
        CensusRecord {
            n: space.n(),
            orbit_count: census.orbit_count,
            conjugate_pair_count: census.conjugate_pair_count,
            self_conjugate: census
                .self_conjugate_by_length
                .iter()
                .map(|(&length, &count)| SignatureEntry { length, count })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointsRecord {
    pub n: u64,
    pub count: u64,
    pub points: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigitsRecord {
    pub n: u64,
    pub k: u32,
    pub digits: u64,
    pub path: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplyRecord {
    pub m: String,
    pub n: u64,
    pub product: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageRecord {
    pub width: u64,
    pub height: u64,
    pub path: String,
}
