//! Multiplication in `F_{q^n}` by asymmetric interpolation on algebraic
//! curves, with exact accounting of every base-field multiplication.
//!
//! The pipeline evaluates the two operands at a set of places of a curve
//! through two different embeddings, multiplies componentwise in the residue
//! fields, and interpolates back. Three instances ship with the crate:
//! `F_{16^13}`, `F_{4^5}` and `F_{2^5}`, all on genus-2 curves.
//!
//! ```
//! use chudnovsky::engine::compile;
//! use chudnovsky::tools::{bundled, format_element, parse_element};
//!
//! let ci = compile(bundled::f4_5()).unwrap();
//! let x = parse_element(ci.base(), 5, "2,1,0,0,0").unwrap();
//! let y = parse_element(ci.base(), 5, "1,2,2,0,0").unwrap();
//! let (z, report) = ci.multiply(&x, &y).unwrap();
//! assert_eq!(format_element(&z), "2,2,1,2,0");
//! assert_eq!(report.step2_bilinear, 12);
//! ```

pub mod curve;
pub mod engine;
pub mod galois;
pub mod kernels;
pub mod linalg;
pub mod tools;

pub use engine::{compile, CompiledInstance, InstanceSpec, OpReport};
pub use galois::{ExtElement, ExtField, FieldElement, FieldSpec, Poly};
