//! Exact arithmetic for the Fibonacci, Lucas and Pell families: gap
//! (lacunary) recurrences that step through a sequence N indices at a
//! time, classical identity checks, and the square/domino tiling
//! combinatorics that explain why the gap identities hold.
//!
//! * [`seq`]: recurrence evaluation over `BigInt`, fast doubling, tiling
//!   counts.
//! * [`identities`]: checked classical identities with explicit domains.
//! * [`lacunary`]: gap expansions, the Fibonacci/Pell gap formula, and the
//!   residue congruence mod `L(N)`.
//! * [`tilings`]: exhaustive board and bracelet enumeration, the bracelet
//!   partition, and the pair embedding behind the one-step gap identity.
//! * [`bench`]: timing harness comparing evaluation strategies.

pub mod bench;
pub mod error;
pub mod identities;
pub mod lacunary;
pub mod seq;
pub mod tilings;

pub use error::{Error, Result};
pub use seq::{board_count, bracelet_count, fast_double_fib, fib, lucas, pell, SequenceSpec};
