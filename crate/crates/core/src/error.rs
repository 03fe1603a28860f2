use thiserror::Error;

use crate::cover::Cover;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cycle: the cover relation is not acyclic (through element {0})")]
    Cycle(usize),
    #[error("edge ({lo},{hi}) is implied transitively or repeated")]
    NotReduced { lo: usize, hi: usize },
    #[error("not a lattice: {0}")]
    NotLattice(String),
    #[error("element id {id} out of range for size {size}")]
    Index { id: usize, size: usize },
    #[error("element {0} is not {1}")]
    NotIrreducible(usize, &'static str),
    #[error("{u} is not an admissible lower cover of {cover}")]
    NotALowerCover { cover: Cover, u: usize },
    #[error("{w} is not an admissible upper cover of {cover}")]
    NotAnUpperCover { cover: Cover, w: usize },
    #[error("lattice is not a pushdown lattice")]
    NotPushdown,
    #[error("no unique perspective join-irreducible below {cover}: candidates {candidates:?}")]
    Ambiguity { cover: Cover, candidates: Vec<usize> },
    #[error("labelling is not total on the covers: {0}")]
    PartialLabelling(String),
    #[error("lattice is not semidistributive")]
    NotSemidistributive,
    #[error("{0} is not a cover of the lattice")]
    InvalidCover(Cover),
    #[error("derivation stage {stage}: {cover} is not a cover of the current lattice")]
    StageSelector { stage: usize, cover: Cover },
    #[error("lattice is not bounded")]
    NotBounded,
    #[error("labelling is not a strict facet labelling ({0} violations)")]
    LabellingInvalid(usize),
    #[error("construction exceeds the element cap ({requested} > {cap})")]
    Size { requested: usize, cap: usize },
    #[error("{k} is not a split of {vector}")]
    NotASplit { vector: String, k: usize },
    #[error("cover is not perspective to the atomic cover {k}: {detail}")]
    NotPerspective { k: usize, detail: String },
    #[error("partition is not a congruence: {0}")]
    NotACongruence(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
