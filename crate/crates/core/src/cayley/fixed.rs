use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use super::label::Label;
use crate::weightmodel::{omega_split, partner, SplitVector, Weight, SPLIT_WEIGHTS};
use crate::{Error, Result};

/// Label of each fixed point, keyed by the weight-basis indices of its 3-space.
pub const LABEL_TRIPLES: [(Label, [usize; 3]); 15] = [
    (Label::new(0, 0), [1, 3, 6]),
    (Label::new(5, 0), [2, 3, 5]),
    (Label::new(6, 1), [1, 4, 5]),
    (Label::new(3, 0), [1, 4, 6]),
    (Label::new(2, 1), [2, 3, 6]),
    (Label::new(8, 0), [2, 4, 5]),
    (Label::new(5, 1), [0, 1, 4]),
    (Label::new(2, 0), [0, 1, 6]),
    (Label::new(3, 1), [0, 2, 3]),
    (Label::new(1, 0), [0, 3, 6]),
    (Label::new(6, 0), [0, 2, 5]),
    (Label::new(7, 0), [0, 4, 5]),
    (Label::new(4, 2), [0, 1, 2]),
    (Label::new(4, 1), [0, 3, 4]),
    (Label::new(4, 0), [0, 5, 6]),
];

/// A torus-fixed point `[u_x ∧ u_y ∧ u_z]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FixedPoint {
    /// Sorted weight-basis indices spanning `W`.
    pub triple: [usize; 3],
    /// Indices spanning `U = W^⊥`.
    pub four_space: [usize; 4],
    pub label: Label,
    pub codim: u8,
}

impl FixedPoint {
    pub fn triple_weights(&self) -> [Weight; 3] {
        self.triple.map(|i| SPLIT_WEIGHTS[i])
    }

    pub fn four_space_weights(&self) -> [Weight; 4] {
        self.four_space.map(|i| SPLIT_WEIGHTS[i])
    }

    /// Weight of the line `∧³W`.
    pub fn weight(&self) -> Weight {
        self.triple_weights().into_iter().sum()
    }
}

impl fmt::Display for FixedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self
            .triple_weights()
            .iter()
            .map(|w| w.to_string())
            .collect();
        write!(f, "{} ({})", self.label, ws.join(", "))
    }
}

/// Indices `j` whose opposite-weight partner lies outside `w`.
pub fn orthogonal_indices(w: &[usize]) -> Vec<usize> {
    (0..7).filter(|&j| !w.contains(&partner(j))).collect()
}

/// Whether the three-form vanishes identically on the 4-space spanned by `u`.
pub fn is_cg_member(u: &[SplitVector]) -> Result<bool> {
    if u.len() != 4 {
        return Err(Error::Dimension {
            expected: 4,
            found: u.len(),
        });
    }
    let rank = crate::exact::Matrix::from_rows(u.iter().map(|v| v.0.to_vec()).collect()).rank();
    if rank != 4 {
        return Err(Error::Dimension {
            expected: 4,
            found: rank,
        });
    }
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                if !omega_split(&u[i], &u[j], &u[k]).is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn coordinate_space(indices: &[usize]) -> Vec<SplitVector> {
    indices.iter().map(|&i| SplitVector::basis(i)).collect()
}

/// Scans the 35 coordinate 3-spaces and keeps those whose orthogonal lies in CG.
pub fn enumerate_fixed_points() -> Result<Vec<FixedPoint>> {
    let mut out = Vec::new();
    for x in 0..7 {
        for y in x + 1..7 {
            for z in y + 1..7 {
                let triple = [x, y, z];
                let four: [usize; 4] = orthogonal_indices(&triple)
                    .try_into()
                    .expect("four indices");
                if !is_cg_member(&coordinate_space(&four))? {
                    continue;
                }
                let (label, _) = LABEL_TRIPLES
                    .iter()
                    .find(|(_, t)| *t == triple)
                    .ok_or_else(|| Error::UnknownFixedPoint(format!("{triple:?}")))?;
                out.push(FixedPoint {
                    triple,
                    four_space: four,
                    label: *label,
                    codim: label.codim,
                });
            }
        }
    }
    if out.len() != 15 {
        return Err(Error::FixedPointCount(out.len()));
    }
    out.sort_by_key(|p| p.label);
    Ok(out)
}

/// The fifteen fixed points, indexed like [`Label::ALL`].
pub fn fixed_points() -> &'static [FixedPoint] {
    static P: OnceLock<Vec<FixedPoint>> = OnceLock::new();
    P.get_or_init(|| enumerate_fixed_points().expect("fixed point enumeration"))
}

pub fn fixed_point(label: Label) -> &'static FixedPoint {
    &fixed_points()[label.index()]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(ix: &[usize]) -> Vec<SplitVector> {
        coordinate_space(ix)
    }

    #[test]
    fn membership_examples() {
        // ⟨u0, uα, uβ, u-γ⟩
        assert!(is_cg_member(&space(&[0, 1, 3, 6])).unwrap());
        // ⟨u0, uα, uγ, u-γ⟩
        assert!(!is_cg_member(&space(&[0, 1, 5, 6])).unwrap());
        // the orthogonal of (0, β, -β)
        assert!(is_cg_member(&space(&orthogonal_indices(&[0, 3, 4]))).unwrap());
        assert!(matches!(
            is_cg_member(&space(&[0, 1, 3])),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn fifteen_fixed_points() {
        let ps = fixed_points();
        assert_eq!(ps.len(), 15);
        for (p, l) in ps.iter().zip(Label::ALL) {
            assert_eq!(p.label, l);
        }
        assert_eq!(fixed_point(Label::new(0, 0)).triple, [1, 3, 6]);
        assert_eq!(fixed_point(Label::new(5, 1)).triple, [0, 1, 4]);
        assert_eq!(fixed_point(Label::new(8, 0)).to_string(), "8 (-α, -β, γ)");
    }
}
