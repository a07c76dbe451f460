//! Root systems, characters, graded characters of current-algebra modules
//! for E6, and l-weights of minimal affinizations.

pub mod charalg;
pub mod e6;
pub mod error;
pub mod graded;
pub mod lweight;
pub mod output;
pub mod rootsys;
pub mod verify;

pub use error::{Error, Result};
pub use rootsys::{DynkinDiagram, RootVec, Subdiagram, WeightVec};
