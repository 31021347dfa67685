//! Finite soluble permutation groups, Hall factorisations and class counts.
//!
//! Groups are enumerated in full and every structural query works on the
//! enumerated element set. That limits the crate to groups of a few
//! thousand elements (or a couple of million for the few queries that only
//! need orbit sizes), which is the scale the checks are written for.

pub mod automorphism;
pub mod classes;
pub mod conjecture;
pub mod decompose;
pub mod error;
pub mod group;
pub mod hall;
pub mod oracles;
pub mod perm;
pub mod primes;
pub mod quotient;
pub mod radicals;
pub mod sieve;
pub mod subgroups;

pub use classes::{ccl, ccl_pi, centralizer_order, ConjClassData, GeneratedGroup};
pub use error::{Error, Result};
pub use group::{Elem, FiniteGroup, Subgroup, DEFAULT_ELEMENT_CAP, IDENTITY};
pub use hall::{hall_pair, hall_subgroup, sylow_system, HallPair, StarImage, SylowSystem};
pub use perm::Permutation;
pub use primes::PrimeSet;
pub use quotient::{quotient, Quotient};
