//! Exact computations around braid groups: free-group words, the Artin
//! representation as a word-problem oracle, combing of pure braids, integer
//! homology of presentation complexes and K-theory rank bookkeeping for
//! `C*_r(P_n)`.

pub mod braid;
pub mod cli;
pub mod homology;
pub mod intlinalg;
pub mod ktheory;
pub mod words;
