//! A workbench for direct-product decompositions of finite groups and their
//! truncated-profinite shadows.
//!
//! Everything lives inside fully enumerated groups: a [`group::FiniteGroup`]
//! is a validated multiplication table, homomorphisms are total image
//! vectors, and every theorem-level claim the crate makes is checked by
//! exhaustive computation at desk scale. The main storylines:
//!
//! - **Decomposition and uniqueness** ([`decomp`]): splitting a group into
//!   indecomposable internal direct factors, matching two such decompositions
//!   factor-by-factor with explicit isomorphism witnesses, and cancelling a
//!   shared direct factor.
//! - **Normal endomorphism calculus** ([`endo`]): the pointwise partial sum,
//!   Fitting kernel/image splits, and the automorphism-or-nilpotent
//!   dichotomy on indecomposable groups.
//! - **Towers** ([`tower`]): finite truncations of inverse systems — verbal
//!   quotient towers, coherent levelwise decompositions, finite-image sets,
//!   and fiber powers.
//!
//! ```
//! use grouplab::corpus::{named_group, NamedGroupSpec};
//! use grouplab::decomp::decompose;
//!
//! let c6 = named_group(&NamedGroupSpec::Cyclic(6)).unwrap();
//! let d = decompose(&c6);
//! let orders: Vec<usize> = d.factors().iter().map(|f| f.order()).collect();
//! assert_eq!(orders, vec![2, 3]);
//! ```
//!
//! Indecomposability is decided by exhaustive complement search, never by
//! classification shortcuts:
//!
//! ```
//! use grouplab::corpus::{named_group, NamedGroupSpec};
//! use grouplab::decomp::{indecomposability, Indecomposability};
//!
//! let q8 = named_group(&NamedGroupSpec::Quaternion(8)).unwrap();
//! assert_eq!(indecomposability(&q8), Indecomposability::Indecomposable);
//! ```
//!
//! Nothing in the crate represents an infinite group. The tower module's
//! reports are explicit that they speak about truncations; outcomes that are
//! only guaranteed in the limit (like coherent chains of decompositions) are
//! reported honestly as present or absent at the chosen depth.

pub mod corpus;
pub mod decomp;
pub mod endo;
pub mod error;
pub mod group;
pub mod hom;
pub mod io;
pub mod iso;
pub mod oracle;
pub mod report;
pub mod suite;
pub mod tower;

pub use error::{Error, Result};
