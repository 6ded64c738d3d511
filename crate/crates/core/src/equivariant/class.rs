use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::cayley::{fixed_point, gkm_graph, tangent_at, Label, OnePs};
use crate::exact::{HomogPoly, Rational};
use crate::weightmodel::{Weight, ALPHA, BETA, GAMMA};
use crate::Result;

/// Pointwise localization data: one homogeneous polynomial per fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqClass {
    pub codim: u32,
    /// Indexed like [`Label::ALL`].
    pub values: Vec<HomogPoly>,
}

impl EqClass {
    pub fn from_fn(codim: u32, f: impl Fn(Label) -> HomogPoly) -> Self {
        let values = Label::ALL.iter().map(|&l| f(l)).collect::<Vec<_>>();
        debug_assert!(values.iter().all(|v| v.is_zero() || v.degree() == codim));
        Self { codim, values }
    }

    pub fn value(&self, l: Label) -> &HomogPoly {
        &self.values[l.index()]
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            codim: self.codim + o.codim,
            values: self
                .values
                .iter()
                .zip(&o.values)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.codim, o.codim);
        Self {
            codim: self.codim,
            values: self
                .values
                .iter()
                .zip(&o.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.codim, o.codim);
        Self {
            codim: self.codim,
            values: self
                .values
                .iter()
                .zip(&o.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            codim: self.codim,
            values: self.values.iter().map(|v| v.scale(r)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(fundamental_class(), |acc, _| acc.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(HomogPoly::is_zero)
    }

    pub fn support(&self) -> Vec<Label> {
        Label::ALL
            .iter()
            .copied()
            .filter(|l| !self.value(*l).is_zero())
            .collect()
    }

    /// Edges `(p, q, w)` along which `f(p) - f(q)` is not divisible by `w`.
    pub fn gkm_violations(&self) -> Vec<(Label, Label, Weight)> {
        gkm_graph()
            .edges
            .iter()
            .filter(|e| {
                !(self.value(e.p) - self.value(e.q))
                    .restrict_to_line(e.weight)
                    .is_zero()
            })
            .map(|e| (e.p, e.q, e.weight))
            .collect()
    }

    pub fn to_map(&self) -> BTreeMap<Label, HomogPoly> {
        Label::ALL
            .iter()
            .map(|&l| (l, self.value(l).clone()))
            .collect()
    }
}

/// JSON shape `{label, codim, values: {vertex: poly}}`.
#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    pub label: Label,
    pub codim: u32,
    pub values: BTreeMap<Label, HomogPoly>,
}

pub fn fundamental_class() -> EqClass {
    EqClass::from_fn(0, |_| HomogPoly::one())
}

/// `ω(q) - ω(0)`, where `ω` is the weight of `∧³W` and `ω(0) = α+β-γ`.
pub fn hyperplane_class() -> EqClass {
    let base = fixed_point(Label::new(0, 0)).weight();
    debug_assert_eq!(base, ALPHA + BETA - GAMMA);
    EqClass::from_fn(1, |l| HomogPoly::linear(fixed_point(l).weight() - base))
}

/// Product of the tangent weights at `l`.
pub fn euler(l: Label) -> HomogPoly {
    HomogPoly::from_weights(tangent_at(l))
}

/// Product of the tangent weights at `l` that pair negatively with the chamber.
pub fn negative_product(chamber: OnePs, l: Label) -> HomogPoly {
    HomogPoly::from_weights(&chamber.negative_weights(l))
}

/// Class supported at the codimension-8 vertex.
pub fn point_class(chamber: OnePs) -> Result<EqClass> {
    let top = Label::ALL
        .iter()
        .copied()
        .find(|&l| chamber.codim(l).ok() == Some(8))
        .expect("unique top vertex");
    Ok(EqClass::from_fn(8, |l| {
        if l == top {
            negative_product(chamber, l)
        } else {
            HomogPoly::zero(8)
        }
    }))
}
