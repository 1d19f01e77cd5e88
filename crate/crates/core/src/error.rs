use thiserror::Error;

use crate::partition::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("box set is not a partition: {0}")]
    NotAPartition(String),

    #[error("not a path: box {index} does not step east or south from its predecessor")]
    NotAPath { index: usize },

    #[error("not a Dyck path: {0}")]
    NotDyck(String),

    #[error("box {0} is used twice")]
    Overlap(Cell),

    #[error("bullet {0} is not in the head or tail run of any path")]
    UncoverableBullet(Cell),

    #[error("enumeration region did not stabilize (width {width} exceeded)")]
    RegionOverflow { width: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("negative coefficient {coefficient} in degree {degree} of the series of {label}")]
    NegativeCoefficient {
        label: String,
        degree: u32,
        coefficient: String,
    },

    #[error("partitions {0} and {1} are comparable")]
    ComparablePair(String, String),

    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
