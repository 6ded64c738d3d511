//! Torus-fixed points of the Cayley Grassmannian, their tangent weights,
//! cell codimensions and the GKM graph.

mod chamber;
mod fixed;
mod gkm;
mod label;
mod tangent;

pub use chamber::{OnePs, CHAMBER};
pub use fixed::{
    enumerate_fixed_points, fixed_point, fixed_points, is_cg_member, orthogonal_indices,
    FixedPoint, LABEL_TRIPLES,
};
pub use gkm::{edge_between, gkm_edges, gkm_graph, GkmEdge, GkmGraph};
pub use label::Label;
pub use tangent::{tangent_at, tangent_table, tangent_weights, S3Element};
