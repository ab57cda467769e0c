//! Counting polynomials, F1-zeta functions and Ihara zeta functions of
//! loose graphs.
//!
//! ```
//! use lgz_core::loosegraph::{generate, Family};
//! use lgz_core::grothendieck::class_polynomial;
//!
//! let k5 = generate(Family::Complete(5)).unwrap();
//! assert_eq!(class_polynomial(&k5).unwrap().to_string(), "L^4 + L^3 + L^2 + L + 1");
//! ```

pub mod grothendieck;
pub mod ihara;
pub mod loosegraph;
pub mod pointcount;
pub mod polyring;
pub mod zeta;

pub use grothendieck::{class_polynomial, ClassEngine, ClassError, SurgeryTrace};
pub use loosegraph::{Edge, Family, GraphError, LooseGraph};
pub use polyring::{IntPolynomial, PolyMatrix};
pub use zeta::FactoredZeta;
