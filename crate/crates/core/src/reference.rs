//! Published reference values for the volume sequences.

/// A named sequence of published values for volumes (or offsets) `1..=12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceSequence {
    pub name: &'static str,
    pub source: &'static str,
    pub values: &'static [i64],
}

/// Pyramids in dimension 3 by volume, OEIS A229914.
pub const PYRAMIDS: ReferenceSequence = ReferenceSequence {
    name: "pyramid",
    source: "OEIS A229914",
    values: &[1, 3, 7, 16, 33, 63, 117, 202, 344, 566, 908, 1419],
};

/// Espaliers in dimension 3 by volume, OEIS A229915.
pub const ESPALIERS: ReferenceSequence = ReferenceSequence {
    name: "espalier",
    source: "OEIS A229915",
    values: &[1, 3, 5, 10, 14, 26, 34, 57, 76, 116, 150, 227],
};

/// Quasi-espaliers by volume.
pub const QUASI_ESPALIERS: ReferenceSequence = ReferenceSequence {
    name: "quasi-espalier",
    source: "published first values",
    values: &[2, 4, 7, 12, 18, 29, 42, 61, 87, 122, 167, 229],
};

pub const ALL: [ReferenceSequence; 3] = [ESPALIERS, PYRAMIDS, QUASI_ESPALIERS];
