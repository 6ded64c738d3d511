use serde::Serialize;

use crate::exact::{frac, int, solve_rational, Matrix, Rational};
use crate::weightmodel::{g2_irrep_dim, gl7_schur_dim};
use crate::{Error, Result};

/// `dim H⁰(G(4,7), S_μ U*) = dim S_μ V₇*` for a weakly decreasing
/// non-negative `μ`, and zero otherwise.
fn sections(mu: [i64; 4]) -> i64 {
    if mu.iter().any(|&m| m < 0) || mu.windows(2).any(|w| w[0] < w[1]) {
        return 0;
    }
    let parts: Vec<u32> = mu.iter().map(|&m| m as u32).collect();
    gl7_schur_dim(&parts) as i64
}

/// `P(k)` from the Koszul resolution of the section of `E = ∧³U*`:
/// `∧^i E* ⊗ O(k) = ∧^i U* ⊗ O(k - i) = S_{((k-i+1)^i, (k-i)^{4-i})} U*`.
pub fn koszul_hilbert(k: i64) -> i64 {
    sections([k, k, k, k]) - sections([k, k - 1, k - 1, k - 1])
        + sections([k - 1, k - 1, k - 2, k - 2])
        - sections([k - 2, k - 2, k - 2, k - 3])
        + sections([k - 3, k - 3, k - 3, k - 3])
}

/// `(k+1)(k+2)²(k+3)(13(k+2)⁴ + 7(k+2)² + 4) / 2880`.
pub fn closed_form_hilbert(k: i64) -> Rational {
    let m = int(k + 2);
    let m2 = &m * &m;
    int(k + 1) * &m2 * int(k + 3) * (int(13) * &m2 * &m2 + int(7) * &m2 + int(4)) * frac(1, 2880)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// Coefficients of `k^0..k^8`.
    #[serde(serialize_with = "crate::exact::serialize_rationals")]
    pub coefficients: Vec<Rational>,
    /// `(k, P(k))` for `k = 0..=kmax`.
    pub samples: Vec<(i64, i64)>,
}

impl HilbertData {
    pub fn eval(&self, k: i64) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::from_integer(0.into()), |acc, c| acc * int(k) + c)
    }

    /// `8!` times the leading coefficient.
    pub fn degree(&self) -> Rational {
        &self.coefficients[8] * int(40320)
    }
}

/// Interpolates the Koszul values at `k = 0..=8` and checks them against the
/// closed form up to `kmax`.
pub fn hilbert_polynomial(kmax: i64) -> Result<HilbertData> {
    let rows: Vec<Vec<Rational>> = (0..=8)
        .map(|k: i64| (0..=8u32).map(|e| int(k.pow(e))).collect())
        .collect();
    let rhs: Vec<Rational> = (0..=8).map(|k| int(koszul_hilbert(k))).collect();
    let coefficients = solve_rational(&Matrix::from_rows(rows), &rhs)
        .unique()
        .ok_or(Error::HilbertMismatch(0))?;
    let mut samples = Vec::new();
    for k in 0..=kmax.max(10) {
        let p = koszul_hilbert(k);
        if int(p) != closed_form_hilbert(k) {
            return Err(Error::HilbertMismatch(k));
        }
        if k <= kmax {
            samples.push((k, p));
        }
    }
    Ok(HilbertData {
        coefficients,
        samples,
    })
}

/// Quadrics vanishing on the variety inside `ℙ(S²V₇)`: `C(29, 2) - P(2)`.
pub fn quadric_count(h: &HilbertData) -> i64 {
    let span = h.eval(1);
    let n = span.to_integer();
    let sym2 = &n * (&n + 1u32) / 2u32;
    let p2 = h.eval(2).to_integer();
    i64::try_from(sym2 - p2).expect("small")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    /// `(k, Σ_{i+2j≤k} dim V_{2iω₁+2jω₂}, P(k))`.
    pub rows: Vec<(i64, u64, i64)>,
}

/// `Σ_{i+2j≤k} dim V_{2iω₁+2jω₂} = P(k)` for `k = 0..=kmax`.
pub fn equivariant_series_check(kmax: i64) -> Result<SeriesReport> {
    let mut rows = Vec::new();
    for k in 0..=kmax {
        let mut total = 0u64;
        for j in 0..=k / 2 {
            for i in 0..=k - 2 * j {
                total += g2_irrep_dim(2 * i as u32, 2 * j as u32);
            }
        }
        let p = koszul_hilbert(k);
        if total as i64 != p {
            return Err(Error::SeriesMismatch(k));
        }
        rows.push((k, total, p));
    }
    Ok(SeriesReport { rows })
}
