//! Exact arithmetic: rationals, dense univariate polynomials over `Q` and
//! over algebraic towers, Sturm sequences, real root isolation and
//! resultants.

pub mod bivariate;
pub mod field;
pub mod interval;
pub mod qpoly;
pub mod rational;
pub mod roots;
pub mod sturm;
pub mod tower;
pub mod upoly;

pub use field::{ArithError, ArithResult, FieldElem};
pub use rational::Q;
pub use roots::IsolatingInterval;
pub use tower::{NfElem, NumberField, SplitEvent};
pub use upoly::UPoly;
