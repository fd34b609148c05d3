//! Finite categories, monads, distributive laws and their Eilenberg-Moore
//! lifts, all represented by dense lookup tables and verified by exhaustive
//! evaluation.
//!
//! The crate is organised around a small kernel ([`fincat`]) of
//! table-backed categories, functors and natural transformations. On top of
//! it sit brute-force enumerators ([`oracle`]) used as ground truth in
//! tests, the Eilenberg-Moore construction and maps of monads ([`monad`]),
//! distributive laws with the law/lift bijection ([`distlaw`]), PRO
//! presentations with multigon generation ([`pro`]), and a small
//! declarative check language with a runner ([`dsl`]) that backs the
//! `catlaw` command line tool.
//!
//! All values are immutable after construction and cheap to share; every
//! structural law the library talks about is decided by finite table scans.

pub mod distlaw;
pub mod dsl;
pub mod error;
pub mod fincat;
pub mod monad;
pub mod oracle;
pub mod pro;
pub mod report;

pub use error::CatError;
pub use report::{Report, Violation};
