//! Finite commutative integral residuated lattices: element classes,
//! filters, lifting properties, spectral topologies and reticulations.
//!
//! Carriers are at most 64 elements; subsets are [`ElemSet`] bitmasks.

#![cfg_attr(not(test), no_std)]
// Multi-table index loops read better than zipped iterators here.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod algebra;
pub mod classes;
pub mod construct;
pub mod dlattice;
pub mod elemset;
pub mod enumerate;
pub mod error;
pub mod filters;
pub mod fixtures;
pub mod formula;
pub mod lifting;
pub mod reticulation;
pub mod theorems;
pub mod lattice;
pub mod topology;

pub use algebra::{RawAlgebra, ResiduatedLattice};
pub use elemset::ElemSet;
pub use error::{Axiom, Error};
pub use filters::{Filter, QuotientAlgebra};
pub use formula::{parse_formula, Formula, Term};
pub use lattice::{Elem, Lattice};
pub use topology::{SpectrumSpace, TopologyPredicates, Which};
pub use dlattice::{underlying_lattice, validate_bdl, BDLattice};
pub use reticulation::{build_reticulation, RLMorphism, Reticulation};
pub use theorems::{theorem_checks, TheoremVerdict};
