//! Local hidden-variable models.
//!
//! A response function `F(·, λ)` for fixed λ is a ±1 step function of period
//! π ([`SimpleFunctionSpec`]). A model is a finite weighted mixture of such
//! responses together with the sign relating Bob's response to Alice's.

mod aspect;
mod file;
pub(crate) mod model;
mod simple;

pub use aspect::{
    aspect_correlation_closed, aspect_correlation_quadrature, aspect_model, aspect_response,
    aspect_to_simple, AspectTriangle,
};
pub use file::{AtomRecord, ModelFile};
pub use model::{
    lhv_correlation_exact, lhv_estimate_correlation, Atom, LhvModel, Pairing, SampledLhv,
};
pub use simple::SimpleFunctionSpec;
