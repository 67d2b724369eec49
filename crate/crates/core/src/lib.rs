//! Exact computations with differential graded Hopf algebras: the Hopf,
//! Hochschild, Cartier and Harrison cochain complexes, their cohomology,
//! and formal deformations.

pub mod builtin;
pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod field;
pub mod graded;
pub mod harrison;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod resolution;

pub use error::{AlgebraError, Result};
pub use field::{Field, PrimeField, Rationals};
pub use graded::{word, GradedBasis, GradedMap, GradedSpace, Terms, Word};
pub use hopf::{AxiomCheck, AxiomReport, DgHopf};
pub use cochain::{Differentials, Theory, TotalCochain, Tridegree, Truncation, Window};
pub use cohomology::{AssembledComplex, CohomologyResult, CohomologySummary};
