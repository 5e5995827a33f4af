//! Point counts over prime fields: linear algebra, nilpotent operators and
//! enumeration of the flags they fix.

use num_bigint::BigInt;
use thiserror::Error;

use crate::tower::TowerError;

mod field;
mod flags;
mod linalg;
mod nilpotent;

pub use field::PrimeField;
pub use flags::{
    component_flags, count_complete_flags, count_component_points, count_fixed_flags, enumerate_fixed_flags,
    enumerate_fixed_flags_with_bound, fixed_flag_class, for_each_fixed_flag, frame_image, frame_jordan_type,
    frame_kernel, lemma_predicate, satisfies, stratum_flags, FixedFlag, LemmaShape, DEFAULT_FLAG_BOUND,
};
pub use linalg::{kernel, mat_mul, mat_vec, projective_points, rank, rref, Subspace, Vector};
pub use nilpotent::{jordan_type_from_kernel_dims, NilpotentOp, PowerKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0:?} is not a partition in decreasing order")]
    BadPartition(Vec<usize>),
    #[error("flag index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("projected {projected} fixed flags exceeds the enumeration bound {bound}")]
    Capacity { projected: BigInt, bound: u64 },
    #[error("operator has Jordan type {found:?}, expected {expected:?}")]
    WrongType { expected: Vec<usize>, found: Vec<usize> },
    #[error("subspaces do not form a complete flag")]
    NotAFlag,
    #[error("{0} is not a stratum word for this operator")]
    InvalidWord(String),
    #[error(transparent)]
    Tower(#[from] TowerError),
}
