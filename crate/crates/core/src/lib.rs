//! Abelian primitive words: recognition, roots, constructions and counting.
//!
//! A word is an *Abelian power* when it splits into at least two blocks of
//! equal length that all share one Parikh vector (letter-count vector). A word
//! that is not an Abelian power is *A-primitive*. This crate provides:
//!
//! - [`numtheory`]: trial-division factorization, ω, d(n), μ, the middle
//!   antichain of the divisor lattice and its multiples closure.
//! - [`parikh`]: words over an ordered alphabet and their Parikh vectors.
//! - [`primitivity`]: a brute-force decider, the maximal-divisor decider and
//!   the linear-time cached decider.
//! - [`roots`]: enumeration of all A-roots and A-primitive roots.
//! - [`constructions`]: the word families with many A-primitive roots.
//! - [`counting`]: ψ_k(n), exhaustive ψ_k^A(n), Δ_k(n) and the prime-power
//!   closed form for Δ.
//! - [`relations`]: the block relations `~_n`, `≃_n` and commutation witnesses.
//!
//! ```
//! use abelwords::{parikh::Word, primitivity};
//!
//! let w: Word = "aabbab".parse().unwrap();
//! assert!(primitivity::is_a_primitive_linear(&w).unwrap().is_a_primitive);
//! let u: Word = "aabbabab".parse().unwrap();
//! assert!(!primitivity::is_a_primitive_linear(&u).unwrap().is_a_primitive);
//! ```

pub mod cli;
pub mod constructions;
pub mod counting;
pub mod error;
pub mod numtheory;
pub mod parikh;
pub mod primitivity;
pub mod relations;
pub mod roots;

pub use error::{Error, Result};
pub use parikh::{ParikhVector, Word};
