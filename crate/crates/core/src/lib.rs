//! Planar diagram calculus over circular quadruples.
//!
//! Circular forms (nested circles), crossingless and outer matchings,
//! decorated diagrams with skein composition, ω-evaluation, pairings, Gram
//! matrices, state spaces and Temperley–Lieb type endomorphism algebras,
//! all with exact arithmetic.

pub mod algebra;
pub mod closure;
pub mod diagram;
pub mod error;
pub mod eval;
pub mod experiment;
pub mod fixtures;
pub mod form;
pub mod gram;
pub mod io;
pub mod linalg;
pub mod matching;
pub mod meander;
pub mod scalar;
pub mod tables;
pub mod tl;
mod unionfind;
pub mod variety;

pub use algebra::{CommAlgebra, Quadruple, ValidationReport};
pub use closure::{glue_disk_outer, NestedClosure};
pub use diagram::{compose, tensor, Content, Diagram, Label, OuterDiagram};
pub use error::Error;
pub use eval::EvalContext;
pub use form::CircularForm;
pub use io::ParamQuadruple;
pub use matching::{Matching, OuterMatching};
pub use scalar::{Field, MPoly, QuadElem, Ring, Q};
