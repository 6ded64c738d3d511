//! Schubert calculus on `G(4,7)` and restriction to the Cayley Grassmannian,
//! cut out by a section of `∧³U*`.

mod partition;
mod restriction;
mod schubert;
mod sympoly;

pub use partition::{serialize_keyed, Partition43, COLS, ROWS};
pub use restriction::{
    image_index, localized_cg_class, localized_tau, restriction_by_localization, restriction_table,
    IndexReport, RestrictionTable,
};
pub use schubert::{cg_class, lr_multiply, restricted_degree, tau_one_power, AmbientClass};
pub use sympoly::{complete, elementary, schur, schur_coefficients, RootPoly};
