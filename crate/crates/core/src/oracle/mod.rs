//! Brute-force checks by exact linear algebra on graded pieces of `K<X,Y>`.

mod ak;
mod freeness;
mod kernel;
pub mod linalg;
mod rfn;

pub use ak::{ak_basis, ak_family};
pub use freeness::verify_freeness;
pub use kernel::{
    compare_kernels, delta_power_kernel_dimension, generator_products, graded_kernel_basis,
    recover_scalar, span_dimension, GradedComponent, KernelBasis, KernelComparison, WEIGHT_CAP,
};
pub use rfn::rfn_span_dimension;
