//! Equivariant Schubert classes by GKM localization, and the cohomology ring
//! they determine.

mod class;
mod integrate;
mod linsys;
mod ring;
mod solver;

pub use class::{
    euler, fundamental_class, hyperplane_class, negative_product, point_class, ClassRecord, EqClass,
};
pub use integrate::{ab_integrate, expand_equivariant, nonequivariant, SchubertVector};
pub use ring::{
    schubert_ring, verify_ring_presentation, PresentationReport, Ring, RingElement, SchubertRing,
    RELATION_ONE, RELATION_TWO,
};
pub use solver::{class_value, schubert_classes, solve_all_classes, SchubertClasses};
