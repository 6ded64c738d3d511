//! Complexified octonions in the Fano-plane basis `e0, …, e7`, with
//! coefficients in the Gaussian rationals.

mod algebra;
mod fano;
mod forms;
mod g2;
mod subspace;

pub use algebra::Octonion;
pub use fano::FanoTable;
pub use forms::{
    fano_form, im_product_via_form, induced_bilinear, three_form, three_form_via_products,
    volume_identity_constant, Form,
};
pub use g2::{g2_basis, g2_stabilizer_dim};
pub use subspace::{
    classify, h0, h1, h2, is_subalgebra, null_plane_test, stratum_membership, OrbitType, Stratum,
    StratumDatum, Subspace,
};
