//! Exact symbolic calculus for the Grothendieck groups of representations of
//! GL(n) over a p-adic division algebra, at the level of segments of
//! cuspidal representations.
//!
//! The ring R is modelled on standard labels (multisegments). Products are
//! label concatenation, the comultiplication m* is built from the segment
//! formula, and minimal Jacquet modules are shuffles of descending segment
//! words. On top of this sit the Casselman square-integrability test, the
//! irreducibility and composition-series decisions for pairs of segments,
//! and a harness that checks the algebraic laws over finite windows.

pub mod cli;
pub mod criteria;
pub mod error;
pub mod format;
pub mod hopf;
pub mod model;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use model::{CuspSum, CuspWord, Line, LineSet, Multisegment, Point, RElem, Rational, Segment, TensorElem};
