//! Exact constructions of ribbon Schur modules, the complex of ribbons,
//! minimal resolutions of Veronese modules and the derived functors
//! between them, with verification routines for all of them.

pub mod cli;
pub mod combinatorics;
pub mod derived_functors;
pub mod error;
pub mod linalg;
pub mod monomial;
pub mod poset_homology;
pub mod report;
pub mod ribbon_complex;
pub mod schur_module;
pub mod symfunc;
pub mod veronese;

pub use combinatorics::{ComposeKind, Composition, DiagramComposeKind, SkewShape, Tableau, TableauKind};
pub use error::{Error, Result};
pub use linalg::{CoefficientRing, SparseMatrix, Subspace};
