//! Closure (saturation) and interior (reduction) operators on finite
//! carriers, valued in a finite Heyting algebra.

pub mod btop;
pub mod catalog;
pub mod cli;
pub mod doc;
pub mod error;
pub mod heyting;
pub mod hset;
pub mod galois;
pub mod gen;
pub mod laws;
pub mod optable;
pub mod rep;
pub mod report;

pub use error::{Error, Result};
pub use heyting::{Elem, HeytingAlgebra};
pub use hset::{Carrier, HSubset, Space};
pub use optable::{Operator, OperatorProfile, Rule};
pub use report::{Graded, LawReport, Status, Witness};
pub use btop::BasicTopology;
pub use doc::{parse_document, Workspace};
pub use galois::{Reduction, Saturation};
pub use gen::AxiomSet;
pub use rep::HRelation;
