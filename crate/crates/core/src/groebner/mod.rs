//! Multivariate polynomials over `Q` in `s, t, x, y`, Gröbner bases,
//! normal forms, elimination and saturation.

pub mod buchberger;
pub mod ideal;
pub mod mpoly;
pub mod order;

pub use buchberger::{buchberger, normal_form, GroebnerBasis};
pub use ideal::{eliminate, monic_in_t_witness, saturate, PolyIdeal};
pub use mpoly::{MPoly, Var};
pub use order::MonomialOrder;
