//! Exact computations with supersymmetric elements of divided power
//! algebras over prime fields F_p, p > 2.
//!
//! The algebra Div[x1..xm | y1..yn] is spanned by products
//! x1^(a1)..xm^(am) y1^(b1)..yn^(bn) with the divided-power rule
//! z^(a) z^(b) = C(a+b, a) z^(a+b). An element f that is symmetric in the
//! x's and in the y's separately is supersymmetric when
//! (d/dx1 + d/dy1) f = (x1 - y1) f' for some f' two degrees down. This
//! crate decides that membership exactly, computes per-degree bases and
//! the marked (realizable leading term) monomials, constructs the named
//! generator families, and checks degree-by-degree that proposed
//! generator lists span.

pub mod arith;
pub mod catalog;
pub mod divalg;
pub mod error;
pub mod fplin;
pub mod spanalg;
pub mod supersym;
pub mod verify;

pub use arith::FpScalar;
pub use divalg::{Context, Element, Monomial, Var};
pub use error::Error;
