//! Exact computations with vertex Lie algebras, their enveloping vertex
//! algebras, and the coalgebra structures they carry.

pub mod cli;
pub mod coalgebra;
pub mod constructions;
pub mod current;
pub mod divided;
pub mod enveloping;
pub mod error;
pub mod json;
pub mod linalg;
pub mod lincomb;
pub mod report;
pub mod scalar;
pub mod text;
pub mod vertex;
pub mod vla;

pub use enveloping::{Enveloping, PbwWord, State};
pub use error::{Error, Result};
pub use lincomb::LinComb;
pub use report::{CheckResult, ValidationReport};
pub use scalar::Rational;
pub use vertex::{Coalgebra, VertexAlgebra, Window};
pub use vla::{DGen, GenId, Presentation, PresentationBuilder, VlaElement};
