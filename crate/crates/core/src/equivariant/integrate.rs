use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::class::EqClass;
use crate::cayley::{tangent_at, Label};
use crate::exact::{to_i64, HomogPoly, Rational};
use crate::weightmodel::Weight;
use crate::{Error, Result};

/// Common denominator `D` of the localization formula (each primitive tangent
/// direction at its largest multiplicity) and the cofactors `D / e_q`.
pub(crate) struct Localization {
    pub denominator: Vec<Weight>,
    pub cofactors: Vec<HomogPoly>,
}

pub(crate) fn localization() -> &'static Localization {
    static L: OnceLock<Localization> = OnceLock::new();
    L.get_or_init(|| {
        let mut mult: BTreeMap<Weight, usize> = BTreeMap::new();
        for l in Label::ALL {
            let mut here: BTreeMap<Weight, usize> = BTreeMap::new();
            for w in tangent_at(l) {
                *here.entry(w.primitive().1).or_default() += 1;
            }
            for (w, m) in here {
                let e = mult.entry(w).or_default();
                *e = (*e).max(m);
            }
        }
        let denominator: Vec<Weight> = mult
            .iter()
            .flat_map(|(&w, &m)| std::iter::repeat_n(w, m))
            .collect();
        let d = HomogPoly::from_weights(&denominator);
        let cofactors = Label::ALL
            .iter()
            .map(|&l| {
                d.divide_by_product(tangent_at(l))
                    .ok()
                    .flatten()
                    .expect("e_q divides D")
            })
            .collect();
        Localization {
            denominator,
            cofactors,
        }
    })
}

/// `Σ_q f(q)·(D/e_q)`, the numerator of the localization sum over `D`.
pub(crate) fn localization_numerator(values: &[HomogPoly]) -> HomogPoly {
    let loc = localization();
    values
        .iter()
        .zip(&loc.cofactors)
        .filter(|(v, _)| !v.is_zero())
        .fold(None::<HomogPoly>, |acc, (v, c)| {
            let t = v * c;
            Some(match acc {
                Some(a) => &a + &t,
                None => t,
            })
        })
        .unwrap_or_else(|| HomogPoly::zero(0))
}

/// `Σ_p f(p)/e_p`, required to be a constant.
pub fn ab_integrate(f: &EqClass) -> Result<Rational> {
    let num = localization_numerator(&f.values);
    if num.is_zero() {
        return Ok(Rational::zero());
    }
    if f.codim < 8 {
        return Err(Error::NotPolynomial);
    }
    let quotient = num
        .divide_by_product(&localization().denominator)?
        .ok_or(Error::NotPolynomial)?;
    match quotient.as_constant() {
        Some(c) => Ok(c.clone()),
        None if quotient.is_zero() => Ok(Rational::zero()),
        None => Err(Error::NonConstantIntegral(quotient.degree())),
    }
}

/// Integer combination of Schubert classes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertVector(pub BTreeMap<Label, i64>);

impl SchubertVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(Label, i64)]) -> Self {
        let mut v = Self::new();
        for &(l, c) in pairs {
            v.add_term(l, c);
        }
        v
    }

    pub fn get(&self, l: Label) -> i64 {
        self.0.get(&l).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, l: Label, c: i64) {
        let e = self.0.entry(l).or_default();
        *e += c;
        if *e == 0 {
            self.0.remove(&l);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&l, &c) in &o.0 {
            out.add_term(l, c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::new();
        for (&l, &c) in &self.0 {
            out.add_term(l, c * k);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (Label, i64)> + '_ {
        self.0.iter().map(|(&l, &c)| (l, c))
    }
}

impl fmt::Display for SchubertVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, c) in self.terms() {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}{}", l.sigma_name())?;
            } else {
                write!(f, "{sign}{mag}{}", l.sigma_name())?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Equivariant expansion `f = Σ c_p σ_p` with `c_p ∈ ℚ[α, β]`.
pub fn expand_equivariant(
    f: &EqClass,
    basis: &[EqClass],
    normal_weights: impl Fn(Label) -> Vec<Weight>,
) -> Result<BTreeMap<Label, HomogPoly>> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    for k in 0..=8u32 {
        for l in Label::ALL
            .iter()
            .copied()
            .filter(|l| basis[l.index()].codim == k)
        {
            let v = rest.value(l);
            if v.is_zero() {
                continue;
            }
            let c = v
                .divide_by_product(&normal_weights(l))?
                .ok_or_else(|| Error::NotInSpan(l.to_string()))?;
            let term = EqClass {
                codim: rest.codim,
                values: basis[l.index()].values.iter().map(|b| b * &c).collect(),
            };
            rest = EqClass {
                codim: rest.codim,
                values: rest
                    .values
                    .iter()
                    .zip(&term.values)
                    .map(|(a, b)| a - b)
                    .collect(),
            };
            out.insert(l, c);
        }
    }
    if !rest.is_zero() {
        return Err(Error::NotInSpan(format!("{:?}", rest.support())));
    }
    Ok(out)
}

/// The non-equivariant part of an equivariant expansion: the constant
/// coefficients on classes of the full codimension, required integral.
pub fn nonequivariant(
    expansion: &BTreeMap<Label, HomogPoly>,
    codim: u32,
) -> Result<SchubertVector> {
    let mut v = SchubertVector::new();
    for (l, c) in expansion {
        if u32::from(l.codim) != codim || c.degree() != 0 {
            continue;
        }
        let r = c.as_constant().expect("degree zero");
        let n = to_i64(r).ok_or_else(|| {
            Error::NonIntegral(format!("{} at {l}", crate::exact::rational_string(r)))
        })?;
        v.add_term(*l, n);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::CHAMBER;
    use crate::equivariant::class::{euler, fundamental_class, hyperplane_class, point_class};

    #[test]
    fn denominator_has_degree_twelve() {
        assert_eq!(localization().denominator.len(), 12);
        for l in Label::ALL {
            assert_eq!(euler(l).degree(), 8);
        }
    }

    #[test]
    fn integrals() {
        assert_eq!(
            ab_integrate(&point_class(CHAMBER).unwrap()).unwrap(),
            Rational::from_integer(1.into())
        );
        assert_eq!(
            ab_integrate(&hyperplane_class().pow(8)).unwrap(),
            Rational::from_integer(182.into())
        );
        for k in 0..8 {
            assert!(ab_integrate(&hyperplane_class().pow(k)).unwrap().is_zero());
        }
        assert!(ab_integrate(&fundamental_class()).unwrap().is_zero());
        assert!(matches!(
            ab_integrate(&hyperplane_class().pow(9)),
            Err(Error::NonConstantIntegral(1))
        ));
    }
}
