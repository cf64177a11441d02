use thiserror::Error;

use crate::roots::LieType;

/// Errors raised by the model constructions and bijections.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}")]
    Rank { family: char, rank: usize },

    #[error("column height {height} out of range for {lie} (allowed 1..={max})")]
    Height { lie: LieType, height: usize, max: usize },

    #[error("weight {0:?} is not a dominant partition")]
    NotDominant(Vec<i64>),

    #[error("root {0} is not valid for {1}")]
    InvalidRoot(String, LieType),

    #[error("window {0:?} is not an element of the Weyl group of {1}")]
    InvalidWindow(Vec<i32>, LieType),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(LieType, LieType),

    #[error("letter {letter} is outside the alphabet of {lie}")]
    Alphabet { letter: i32, lie: LieType },

    #[error("circular minimum of an empty set")]
    EmptySet,

    #[error("operation requires type {expected}, got {got}")]
    WrongFamily { expected: &'static str, got: LieType },

    #[error("Weyl group of {lie} has {size} elements, above the guard {guard}")]
    GroupTooLarge { lie: LieType, size: u128, guard: u128 },

    #[error("chain length {len} exceeds the enumeration guard {guard}")]
    ChainTooLong { len: usize, guard: usize },

    #[error("position {pos} out of range 1..={len} or not strictly increasing")]
    BadPositions { pos: usize, len: usize },

    #[error("folding positions {0:?} are not admissible")]
    NotAdmissible(Vec<usize>),

    #[error("column {0:?} is not a Kashiwara-Nakashima column")]
    NotKnColumn(Vec<i32>),

    #[error("column {0:?} cannot be split")]
    Unsplittable(Vec<i32>),

    #[error("split column pair ({0:?}, {1:?}) is not in the image of split/extend")]
    NotInImage(Vec<i32>, Vec<i32>),

    #[error("cannot extend column pair to height {0}: no free letters")]
    NoFreeLetters(usize),

    #[error("column {index} has entries {got:?}, expected a reordering of {expected:?}")]
    ColumnMismatch { index: usize, expected: Vec<i32>, got: Vec<i32> },

    #[error("reorder found no admissible letter for column {column} row {row}")]
    NoFeasibleLetter { column: usize, row: usize },

    #[error("greedy scan did not reach column {column}: window {window:?}, target {target:?}")]
    Termination { column: usize, window: Vec<i32>, target: Vec<i32> },

    #[error("tableau element does not match the shape: {0}")]
    Shape(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("size guard exceeded: {0}")]
    Guard(String),
}

pub type Result<T> = std::result::Result<T, Error>;
