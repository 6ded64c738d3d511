use std::sync::OnceLock;

use serde::Serialize;

use super::fixed::{fixed_point, fixed_points};
use super::label::Label;
use crate::exact::GaussianRational;
use crate::weightmodel::{omega_split, SplitVector, Weight, SPLIT_WEIGHTS};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GkmEdge {
    pub p: Label,
    pub q: Label,
    /// `wt(U_p ∖ U_q) - wt(U_q ∖ U_p)`; meaningful up to sign.
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GkmGraph {
    pub vertices: Vec<Label>,
    pub edges: Vec<GkmEdge>,
}

impl GkmGraph {
    pub fn neighbours(&self, l: Label) -> impl Iterator<Item = (Label, Weight)> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.p == l {
                Some((e.q, e.weight))
            } else if e.q == l {
                Some((e.p, -e.weight))
            } else {
                None
            }
        })
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![self.vertices[0]];
        let mut stack = vec![self.vertices[0]];
        while let Some(v) = stack.pop() {
            for (w, _) in self.neighbours(v) {
                if !seen.contains(&w) {
                    seen.push(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }
}

/// Checks that `Ω` vanishes on `span(U_p ∩ U_q, x + t·y)` identically in `t`,
/// comparing the constant and linear coefficients.
fn curve_in_cg(common: &[usize], x: usize, y: usize) -> bool {
    let u = |i: usize| SplitVector::basis(i);
    let zero = |v: GaussianRational| v.is_zero();
    for i in 0..common.len() {
        for j in i + 1..common.len() {
            let (a, b) = (u(common[i]), u(common[j]));
            if !zero(omega_split(&a, &b, &u(x))) || !zero(omega_split(&a, &b, &u(y))) {
                return false;
            }
            for k in j + 1..common.len() {
                if !zero(omega_split(&a, &b, &u(common[k]))) {
                    return false;
                }
            }
        }
    }
    true
}

/// Edges join fixed points whose 4-spaces share a 3-space.
pub fn gkm_edges() -> Result<GkmGraph> {
    let ps = fixed_points();
    let mut edges = Vec::new();
    for (i, p) in ps.iter().enumerate() {
        for q in &ps[i + 1..] {
            let common: Vec<usize> = p
                .four_space
                .iter()
                .copied()
                .filter(|j| q.four_space.contains(j))
                .collect();
            if common.len() != 3 {
                continue;
            }
            let x = *p
                .four_space
                .iter()
                .find(|j| !common.contains(j))
                .expect("one extra index");
            let y = *q
                .four_space
                .iter()
                .find(|j| !common.contains(j))
                .expect("one extra index");
            if !curve_in_cg(&common, x, y) {
                return Err(Error::CurveNotContained(
                    p.label.to_string(),
                    q.label.to_string(),
                ));
            }
            edges.push(GkmEdge {
                p: p.label,
                q: q.label,
                weight: SPLIT_WEIGHTS[x] - SPLIT_WEIGHTS[y],
            });
        }
    }
    Ok(GkmGraph {
        vertices: ps.iter().map(|p| p.label).collect(),
        edges,
    })
}

pub fn gkm_graph() -> &'static GkmGraph {
    static G: OnceLock<GkmGraph> = OnceLock::new();
    G.get_or_init(|| gkm_edges().expect("GKM graph"))
}

/// The edge between two labels, if any.
pub fn edge_between(p: Label, q: Label) -> Option<GkmEdge> {
    let _ = (fixed_point(p), fixed_point(q));
    gkm_graph()
        .edges
        .iter()
        .copied()
        .find(|e| (e.p, e.q) == (p, q) || (e.p, e.q) == (q, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::tangent::{tangent_at, S3Element};
    use crate::weightmodel::RootSystemG2;

    fn l(s: &str) -> Label {
        s.parse().unwrap()
    }

    #[test]
    fn example_edges() {
        let e = edge_between(l("4"), l("1")).unwrap();
        let gb = crate::weightmodel::GAMMA - crate::weightmodel::BETA;
        assert!(e.weight == gb || e.weight == -gb);
        assert!(edge_between(l("0"), l("8")).is_none());
    }

    #[test]
    fn graph_shape() {
        let g = gkm_graph();
        assert_eq!(g.edges.len(), 36);
        assert!(g.is_connected());
        let roots: Vec<Weight> = RootSystemG2::new().roots().collect();
        let mut doubled = 0;
        for e in &g.edges {
            // differences u_w - u_{-w} give 2w; all other edges carry roots
            let (c, prim) = e.weight.primitive();
            assert!(
                roots.contains(&prim) && (c.abs() == 1 || c.abs() == 2),
                "{e:?}"
            );
            if !roots.contains(&e.weight) {
                doubled += 1;
            }
            for v in [e.p, e.q] {
                let t = tangent_at(v);
                assert!(t.contains(&e.weight) || t.contains(&-e.weight), "{e:?}");
            }
        }
        assert!(doubled > 0);
    }

    #[test]
    fn graph_is_s3_invariant() {
        let g = gkm_graph();
        for s in S3Element::all() {
            for e in &g.edges {
                let image =
                    edge_between(s.apply_label(e.p), s.apply_label(e.q)).expect("image edge");
                let w = s.apply(e.weight);
                assert!(image.weight == w || image.weight == -w);
            }
        }
    }
}
