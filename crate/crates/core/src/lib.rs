//! Exact analysis of faithful completely reducible representations of
//! finite semigroups given by Cayley tables or transformation generators.
//!
//! The pipeline is [`green`] (Green's relations and maximal subgroups),
//! [`congruence`] (the relations `≡_J`, the GGM congruence, irreducible
//! J-classes and `N_J`), [`group`] (socles and normal generation),
//! [`zmud`] (the group-level count) and finally [`analyze`].

pub mod analyze;
pub mod congruence;
pub mod constructions;
pub mod error;
pub mod green;
pub mod group;
pub mod oracle;
pub mod semigroup;
pub mod zmud;

pub use analyze::{analyze, AnalysisReport, ReportRow};
pub use error::{Error, Result};
pub use group::{Group, NormalSubgroup};
pub use semigroup::{AssocCheck, Element, Semigroup, Transformation};
pub use zmud::ZmudResult;
