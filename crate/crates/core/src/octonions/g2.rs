use std::sync::OnceLock;

use super::fano::FanoTable;
use super::subspace::{is_subalgebra, Subspace};
use crate::exact::{int, GaussianRational, Matrix, Rational};
use crate::{Error, Result};

/// Kernel of `X ↦ X·Ω` on `End(Im 𝕆)`, as 7×7 matrices acting on `e1, …, e7`
/// (column `s` is the image of `e_{s+1}`).
pub fn g2_basis() -> Result<&'static [Matrix<Rational>]> {
    static B: OnceLock<Vec<Matrix<Rational>>> = OnceLock::new();
    let b = B.get_or_init(compute_basis);
    if b.len() != 14 {
        return Err(Error::Dimension {
            expected: 14,
            found: b.len(),
        });
    }
    Ok(b)
}

fn compute_basis() -> Vec<Matrix<Rational>> {
    let t = FanoTable::standard();
    let omega = |a: usize, b: usize, c: usize| t.orientation(a + 1, b + 1, c + 1) as i64;
    let mut rows = Vec::new();
    for i in 0..7 {
        for j in i + 1..7 {
            for k in j + 1..7 {
                // (X·Ω)(e_i, e_j, e_k) as a linear form in the entries X[r][s]
                let mut row = vec![int(0); 49];
                for r in 0..7 {
                    row[r * 7 + i] += int(omega(r, j, k));
                    row[r * 7 + j] += int(omega(i, r, k));
                    row[r * 7 + k] += int(omega(i, j, r));
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(rows)
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(7).map(<[Rational]>::to_vec).collect()))
        .collect()
}

/// `dim {X ∈ 𝔤₂ : X·W ⊆ W}`.
pub fn g2_stabilizer_dim(w: &Subspace) -> Result<usize> {
    if !is_subalgebra(w)? {
        return Err(Error::NotSubalgebra);
    }
    let basis = g2_basis()?;
    let vectors: Vec<Vec<GaussianRational>> =
        w.basis().iter().map(|v| v.im_coords().to_vec()).collect();
    let annihilator = Matrix::from_rows(vectors.clone()).nullspace();

    let mut rows = Vec::new();
    for phi in &annihilator {
        for v in &vectors {
            let row = basis
                .iter()
                .map(|x| {
                    let mut acc = GaussianRational::zero();
                    for r in 0..7 {
                        for s in 0..7 {
                            acc = acc + (&phi[r] * &v[s]).scale(&x[(r, s)]);
                        }
                    }
                    acc
                })
                .collect();
            rows.push(row);
        }
    }
    Ok(basis.len() - Matrix::from_rows(rows).rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonions::{fano_form, h0, h1, h2, Octonion};

    #[test]
    fn g2_has_dimension_fourteen() {
        assert_eq!(g2_basis().unwrap().len(), 14);
    }

    #[test]
    fn g2_elements_are_derivations() {
        for x in g2_basis().unwrap() {
            let apply = |v: &Octonion| {
                let coords: Vec<GaussianRational> = (0..7)
                    .map(|r| {
                        (0..7).fold(GaussianRational::zero(), |acc, s| {
                            acc + v.c[s + 1].scale(&x[(r, s)])
                        })
                    })
                    .collect();
                Octonion::imaginary(&coords)
            };
            for i in 1..8 {
                for j in 1..8 {
                    let (a, b) = (Octonion::basis(i), Octonion::basis(j));
                    let lhs = apply(&(&a * &b).im());
                    let rhs = &(&apply(&a) * &b).im() + &(&a * &apply(&b)).im();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        assert!(!fano_form().is_zero());
    }

    #[test]
    fn stabilizer_dimensions_of_models() {
        assert_eq!(g2_stabilizer_dim(&h0()), Ok(6));
        assert_eq!(g2_stabilizer_dim(&h1()), Ok(7));
        assert_eq!(g2_stabilizer_dim(&h2()), Ok(9));
    }
}
