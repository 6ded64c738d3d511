use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::fixed::{fixed_point, fixed_points, FixedPoint, LABEL_TRIPLES};
use super::label::Label;
use crate::weightmodel::{Weight, SPLIT_WEIGHTS};
use crate::{Error, Result};

/// Tangent weights at `p`: `{ν - μ : ν ∈ wt U, μ ∈ wt V/U}` with the four
/// triple sums of `wt U` removed, sorted. This is the sign convention in which
/// the chamber `(1,2)` counts codimension by negative weights.
pub fn tangent_weights(p: &FixedPoint) -> Result<Vec<Weight>> {
    let u = p.four_space_weights();
    let quotient: Vec<Weight> = (0..7)
        .filter(|i| !p.four_space.contains(i))
        .map(|i| SPLIT_WEIGHTS[i])
        .collect();
    let mut all: Vec<Weight> = u
        .iter()
        .flat_map(|&n| quotient.iter().map(move |&m| n - m))
        .collect();
    let total: Weight = u.iter().copied().sum();
    for &n in &u {
        let w = total - n;
        let pos = all
            .iter()
            .position(|&x| x == w)
            .ok_or_else(|| Error::TangentSubtraction(p.label.to_string()))?;
        all.swap_remove(pos);
    }
    all.sort();
    Ok(all)
}

/// Tangent weights at every fixed point, indexed like [`Label::ALL`].
pub fn tangent_table() -> &'static [Vec<Weight>] {
    static T: OnceLock<Vec<Vec<Weight>>> = OnceLock::new();
    T.get_or_init(|| {
        fixed_points()
            .iter()
            .map(|p| tangent_weights(p).expect("tangent weights"))
            .collect()
    })
}

pub fn tangent_at(label: Label) -> &'static [Weight] {
    &tangent_table()[label.index()]
}

/// Permutation of `{α, β, γ}`: optional swap `α ↔ β`, then `rotations` steps of `α → β → γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct S3Element {
    pub swap: bool,
    pub rotations: u8,
}

impl S3Element {
    pub fn all() -> [S3Element; 6] {
        let mut out = [S3Element {
            swap: false,
            rotations: 0,
        }; 6];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = S3Element {
                swap: i >= 3,
                rotations: (i % 3) as u8,
            };
        }
        out
    }

    pub fn apply(self, w: Weight) -> Weight {
        let mut w = if self.swap { w.swap_alpha_beta() } else { w };
        for _ in 0..self.rotations {
            w = w.rotate();
        }
        w
    }

    fn apply_index(self, i: usize) -> usize {
        let w = self.apply(SPLIT_WEIGHTS[i]);
        SPLIT_WEIGHTS
            .iter()
            .position(|&x| x == w)
            .expect("weights are permuted")
    }

    /// Image of a fixed point.
    pub fn apply_label(self, l: Label) -> Label {
        let mut t = fixed_point(l).triple.map(|i| self.apply_index(i));
        t.sort();
        LABEL_TRIPLES
            .iter()
            .find(|(_, x)| *x == t)
            .expect("fixed points are permuted")
            .0
    }
}
