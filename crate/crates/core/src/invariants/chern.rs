use serde::Serialize;

use crate::ambient::{AmbientClass, RestrictionTable, RootPoly, ROWS};
use crate::cayley::{tangent_at, Label};
use crate::equivariant::{ab_integrate, EqClass, SchubertClasses, SchubertRing, SchubertVector};
use crate::exact::{to_i64, HomogPoly};
use crate::{Error, Result};

/// `c_0..c_8` of the tangent bundle in the Schubert basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChernData {
    pub classes: Vec<SchubertVector>,
}

impl ChernData {
    pub fn c(&self, k: usize) -> &SchubertVector {
        &self.classes[k]
    }

    /// `∫ c_k · σ_1^{8-k}`.
    pub fn hyperplane_number(&self, ring: &SchubertRing, k: usize) -> i64 {
        ring.degree(&self.classes[k])
    }

    /// `∫ c_8`.
    pub fn euler_characteristic(&self) -> i64 {
        self.classes[8].get(Label::new(8, 0))
    }
}

/// Graded pieces of `Π (1 + w)` over the tangent weights at `l`.
fn equivariant_chern(l: Label) -> Vec<HomogPoly> {
    let mut e: Vec<HomogPoly> = (0..=8).map(HomogPoly::zero).collect();
    e[0] = HomogPoly::one();
    for &w in tangent_at(l) {
        for k in (1..=8).rev() {
            e[k] = &e[k] + &(&e[k - 1] * &w.to_poly());
        }
    }
    e
}

/// Chern classes from the localized total Chern class, expanded in the equivariant basis.
pub fn chern_classes(classes: &SchubertClasses) -> Result<ChernData> {
    let local: Vec<Vec<HomogPoly>> = Label::ALL.iter().map(|&l| equivariant_chern(l)).collect();
    let out = (0..=8u32)
        .map(|k| {
            let f = EqClass::from_fn(k, |l| local[l.index()][k as usize].clone());
            classes.expand(&f)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ChernData { classes: out })
}

/// `∫ c_8` by localization: the sum of `e_p / e_p` over the fixed points.
pub fn euler_by_localization() -> Result<i64> {
    let top = EqClass::from_fn(8, |l| equivariant_chern(l)[8].clone());
    let v = ab_integrate(&top)?;
    to_i64(&v).ok_or_else(|| Error::NonIntegral("Euler characteristic".into()))
}

/// `c(T_G) / c(∧³U*)` in the dual tautological roots, with
/// `c(T_G) = c(U*)^7 / c(U* ⊗ U)`, truncated at degree 8.
pub fn ambient_chern_series() -> RootPoly {
    let x = |i: usize| RootPoly::root(i);
    let one = RootPoly::one();
    let e1 = (0..ROWS).fold(RootPoly::zero(), |acc, i| acc.add(&x(i)));
    let mut num = one.clone();
    for i in 0..ROWS {
        for _ in 0..7 {
            num = num.mul(&one.add(&x(i))).truncated(8);
        }
    }
    let mut den = one.clone();
    for i in 0..ROWS {
        for j in 0..ROWS {
            if i != j {
                den = den.mul(&one.add(&x(i)).sub(&x(j))).truncated(8);
            }
        }
        den = den.mul(&one.add(&e1).sub(&x(i))).truncated(8);
    }
    num.mul(&den.inverse_truncated(8)).truncated(8)
}

/// Chern classes as restrictions of the ambient quotient `c(T_G)/c(N)`.
pub fn chern_classes_by_restriction(table: &RestrictionTable) -> Result<ChernData> {
    let series = ambient_chern_series();
    let mut out = Vec::new();
    for k in 0..=8u32 {
        let amb = AmbientClass::from_roots(&series.degree_part(k));
        let mut v = SchubertVector::new();
        for (lambda, c) in amb.terms() {
            if lambda.size() == 0 {
                v.add_term(Label::new(0, 0), c);
                continue;
            }
            v = v.add(&table.entries[&lambda].scale(c));
        }
        out.push(v);
    }
    Ok(ChernData { classes: out })
}

/// Dual degree polynomial `Σ_{i=0}^{8} q^{i+1} ∫ c_{8-i}(Ω)·σ_1^i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualPolynomial {
    /// Coefficients of `q^1..q^9`.
    pub coefficients: Vec<i64>,
}

impl DualPolynomial {
    pub fn value_at_one(&self) -> i64 {
        self.coefficients.iter().sum()
    }

    pub fn derivative_at_one(&self) -> i64 {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| (i as i64 + 1) * c)
            .sum()
    }
}

/// Katz-Kleiman polynomial and the dual degree `c'(1)`; uses `c_k(Ω) = (-1)^k c_k(T)`.
pub fn dual_degree(chern: &ChernData, ring: &SchubertRing) -> Result<(DualPolynomial, i64)> {
    let coefficients = (0..=8usize)
        .map(|i| {
            let k = 8 - i;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            sign * chern.hyperplane_number(ring, k)
        })
        .collect();
    let p = DualPolynomial { coefficients };
    match p.derivative_at_one() {
        0 => Err(Error::DualNotHypersurface),
        d => Ok((p, d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::restriction_table;
    use crate::equivariant::{schubert_classes, schubert_ring};

    fn sv(pairs: &[(&str, i64)]) -> SchubertVector {
        SchubertVector::from_pairs(
            &pairs
                .iter()
                .map(|&(s, c)| (s.parse().unwrap(), c))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn low_chern_classes() {
        let c = chern_classes(schubert_classes().unwrap()).unwrap();
        assert_eq!(c.c(0), &sv(&[("0", 1)]));
        assert_eq!(c.c(1), &sv(&[("1", 4)]));
        assert_eq!(c.c(2), &sv(&[("2", 9), ("2'", 7)]));
        assert_eq!(c.c(8), &sv(&[("8", 15)]));
        assert_eq!(c.euler_characteristic(), 15);
        assert_eq!(euler_by_localization().unwrap(), 15);
    }

    #[test]
    fn both_routes_agree() {
        let ring = schubert_ring().unwrap();
        let direct = chern_classes(schubert_classes().unwrap()).unwrap();
        let restricted = chern_classes_by_restriction(&restriction_table(ring).unwrap()).unwrap();
        assert_eq!(direct, restricted);
    }

    #[test]
    fn dual_polynomial_ends() {
        let ring = schubert_ring().unwrap();
        let c = chern_classes(schubert_classes().unwrap()).unwrap();
        let (p, d) = dual_degree(&c, ring).unwrap();
        assert_eq!(p.coefficients[0], 15);
        assert_eq!(p.coefficients[8], 182);
        // Each coefficient again, integrating the localized Chern class against H^i directly.
        let h = crate::equivariant::hyperplane_class();
        for i in 0..=8u32 {
            let k = 8 - i;
            let ck = EqClass::from_fn(k, |l| equivariant_chern(l)[k as usize].clone());
            let v = to_i64(&ab_integrate(&ck.mul(&h.pow(i))).unwrap()).unwrap();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(p.coefficients[i as usize], sign * v, "q^{}", i + 1);
        }
        assert_eq!(
            d,
            p.coefficients
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + 1) * c)
                .sum::<i64>()
        );
    }
}
