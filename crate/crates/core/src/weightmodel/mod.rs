//! Weight lattice and root system of G₂, the torus-adapted model of `V₇`, and
//! dimension formulas.

mod bridge;
mod dims;
mod roots;
mod split;
mod weight;

pub use bridge::{model_bridge, Bridge};
pub use dims::{g2_irrep_dim, gl7_schur_dim, gl_schur_dim};
pub use roots::{inner, weyl_apply, RootSystemG2};
pub use split::{
    omega_split, omega_split_form, partner, q_split, q_twisted, split_product, SplitVector,
    SPLIT_WEIGHTS,
};
pub use weight::{Weight, ALPHA, BETA, GAMMA};
