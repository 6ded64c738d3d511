use std::ops::{Add, Mul, Neg, Sub};

use super::fano::FanoTable;
use crate::exact::{GaussianRational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Octonion {
    pub c: [GaussianRational; 8],
}

impl Octonion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut x = Self::zero();
        x.c[i] = GaussianRational::one();
        x
    }

    pub fn from_coeffs(c: [GaussianRational; 8]) -> Self {
        Self { c }
    }

    /// Imaginary octonion from coordinates on `e1, …, e7`.
    pub fn imaginary(v: &[GaussianRational]) -> Self {
        assert_eq!(v.len(), 7);
        let mut x = Self::zero();
        x.c[1..].clone_from_slice(v);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(GaussianRational::is_zero)
    }

    pub fn is_imaginary(&self) -> bool {
        self.c[0].is_zero()
    }

    pub fn re(&self) -> GaussianRational {
        self.c[0].clone()
    }

    pub fn im(&self) -> Self {
        let mut x = self.clone();
        x.c[0] = GaussianRational::zero();
        x
    }

    pub fn im_coords(&self) -> &[GaussianRational] {
        &self.c[1..]
    }

    pub fn conj(&self) -> Self {
        let mut x = self.clone();
        for c in &mut x.c[1..] {
            *c = -c.clone();
        }
        x
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        Self {
            c: std::array::from_fn(|i| &self.c[i] * s),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Self {
            c: std::array::from_fn(|i| self.c[i].scale(r)),
        }
    }

    pub fn multiply(&self, o: &Self) -> Self {
        self.multiply_with(o, FanoTable::standard())
    }

    pub fn multiply_with(&self, o: &Self, t: &FanoTable) -> Self {
        let mut out = Self::zero();
        for i in 0..8 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if o.c[j].is_zero() {
                    continue;
                }
                let (s, k) = t.product(i, j);
                let v = &self.c[i] * &o.c[j];
                out.c[k] = if s > 0 {
                    &out.c[k] + &v
                } else {
                    &out.c[k] - &v
                };
            }
        }
        out
    }

    /// The multiplicative norm, the `e0` coefficient of `x·conj(x)`.
    pub fn norm(&self) -> GaussianRational {
        self.multiply(&self.conj()).re()
    }

    /// Polarization of the norm: `Σ x_i y_i`.
    pub fn inner(&self, o: &Self) -> GaussianRational {
        self.c
            .iter()
            .zip(&o.c)
            .fold(GaussianRational::zero(), |acc, (a, b)| acc + a * b)
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, o: &Octonion) -> Octonion {
        Octonion {
            c: std::array::from_fn(|i| &self.c[i] + &o.c[i]),
        }
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, o: &Octonion) -> Octonion {
        Octonion {
            c: std::array::from_fn(|i| &self.c[i] - &o.c[i]),
        }
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion {
            c: std::array::from_fn(|i| -self.c[i].clone()),
        }
    }
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, o: &Octonion) -> Octonion {
        self.multiply(o)
    }
}
