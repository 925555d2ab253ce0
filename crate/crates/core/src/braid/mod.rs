//! Braid words, the Artin representation, the generators `A(i,j)` of the pure
//! braid group, the action tables of `P_n ≅ F_{n-1} ⋊ P_{n-1}`, relation
//! checking and combing.

mod action;
mod artin;
mod comb;
mod pure;
pub mod relations;
mod word;

pub use action::{
    pure_braid_action, table_entry, ActionTable, BraidContext, CaseFourVariant, TableError, TableMismatch,
};
pub use artin::ArtinOracle;
pub use comb::{comb, recombine, CombedForm, Comber};
pub use pure::{levels_to_pure, pure_from_sigma, PureGen, PureRewriter, PureWord};
pub use word::{BraidWord, Permutation};

use crate::words::WordError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("invalid strand count {0} (need at least 2)")]
    InvalidStrands(usize),
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("invalid pure generator A({i},{j})")]
    InvalidPureGen { i: usize, j: usize },
    #[error("invalid level {level} for {strands} strands")]
    InvalidLevel { level: usize, strands: usize },
    #[error("not a pure braid: {0}")]
    NotPure(String),
    #[error("not in the top free factor: {0}")]
    NotTopLevel(String),
    #[error("inconsistent action table: {0}")]
    Table(String),
    #[error(transparent)]
    Word(WordError),
}
