//! Exact computation of the Homflypt-type invariants of tied links, singular
//! links and tied singular links presented as braid words.
//!
//! The pipeline is: parse a braid word into the semidirect normal form
//! `(partition, word)` ([`braids`]), map it into the algebra of braids and
//! ties ([`btalgebra`]), evaluate the Markov trace ([`trace`]) and rescale
//! by the Jones recipe ([`invariants`]). Everything runs over an exact
//! five-variable coefficient field with a formal square root ([`coeffs`]).
//! An independent Iwahori-Hecke/Ocneanu evaluation ([`hecke`]) cross-checks
//! the classical specialization.

pub mod braids;
pub mod btalgebra;
pub mod coeffs;
pub mod hecke;
pub mod invariants;
pub mod partitions;
pub mod perm;
pub mod report;
pub mod trace;

pub use braids::{Letter, TiedSingularBraid};
pub use btalgebra::{AlgebraElement, Presentation};
pub use coeffs::{FieldTag, MultiPoly, PolyFrac, QuadExt, Var};
pub use invariants::{Evaluator, InvariantKind, InvariantResult};
pub use partitions::SetPartition;
pub use perm::Perm;
