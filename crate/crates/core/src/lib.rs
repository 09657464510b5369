//! Signless-Laplacian spectral radii (Q-indices) of small graphs, the closed
//! forms and bounds for friendship and split graphs, and exhaustive
//! forbidden-cycle extremal search over isomorph-free graph enumerations.
//!
//! ```
//! use qindex::{families, spectra};
//!
//! let f7 = families::build(&"F:7".parse().unwrap()).unwrap();
//! let q = spectra::q_index(&f7).unwrap().value;
//! assert!((q - families::q_friendship_closed(7).unwrap()).abs() < 1e-9);
//! ```

pub mod bounds;
pub mod canon;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod patterns;
pub mod search;
pub mod spectra;
pub mod verify;

pub use crate::canon::{canonical_form, CanonicalForm};
pub use crate::error::{Error, Result};
pub use crate::families::{FamilyKind, FamilySpec};
pub use crate::graph::{Graph, VertexSet};
pub use crate::patterns::PatternQuery;
pub use crate::search::{EnumerationSpec, Objective, SearchOutcome};
pub use crate::spectra::SpectralResult;
