//! Chern classes, the dual degree, and the Hilbert polynomial.

mod chern;
mod hilbert;

pub use chern::{
    ambient_chern_series, chern_classes, chern_classes_by_restriction, dual_degree,
    euler_by_localization, ChernData, DualPolynomial,
};
pub use hilbert::{
    closed_form_hilbert, equivariant_series_check, hilbert_polynomial, koszul_hilbert,
    quadric_count, HilbertData, SeriesReport,
};
