//! Finite topological spaces, their specialization preorders, and exhaustive
//! checks of separation axioms in definitional and order-characterized form.

pub mod axioms;
pub mod decomp;
pub mod dynamics;
pub mod enumerate;
pub mod error;
pub mod order;
pub mod pointset;
pub mod preorder;
pub mod topology;

pub use axioms::{AxiomId, AxiomReport, Classifier, Mode, Witness};
pub use error::Error;
pub use order::HeightInfo;
pub use pointset::PointSet;
pub use preorder::{ClassPoset, Preorder};
pub use topology::{alexandrov, class_space, disjoint_union, specialization, validate_topology, FiniteTopology};
