//! Associated radicals of monomial ideals, their powers and symbolic powers,
//! together with the polyhedral and homological tools used to study them.

pub mod asr;
pub mod corpus;
pub mod decomposition;
pub mod depth;
pub mod error;
pub mod hypergraph;
pub mod io;
pub mod lattice;
pub mod monomial;
pub mod polyhedra;
pub mod report;
pub mod text;
pub mod varset;
pub mod verify;

pub use asr::{AsrSet, Method, PowerKind, SourceIdeal};
pub use decomposition::{Decomposition, RadicalIdeal};
pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
pub use monomial::{Monomial, MonomialIdeal};
pub use varset::VarSet;
