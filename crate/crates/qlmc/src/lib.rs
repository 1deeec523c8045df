//! Model checking for finite ortholattices and the quantum/classical
//! propositional logics they model.
//!
//! The crate provides:
//! - finite ortholattices built from Hasse diagrams or subset families,
//!   with a catalog of builtin lattices (`O6`, `O7`, `O8`, `MO2`,
//!   Boolean `B2`..`B16`) — [`lattice`];
//! - wffs and lattice terms with the derived implication/equivalence
//!   connectives and definitional expansion — [`term`];
//! - exhaustive-valuation checking of identities and Horn conditions,
//!   validity/consequence for wffs, and variety classification —
//!   [`check`];
//! - Hilbert-style derivation verification for the two axiomatic
//!   systems and soundness suites — [`logic`].

pub mod check;
pub mod lattice;
pub mod logic;
pub mod tables;
pub mod term;
