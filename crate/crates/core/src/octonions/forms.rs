use std::collections::BTreeMap;

use super::algebra::Octonion;
use super::fano::FanoTable;
use crate::exact::{frac, GaussianRational, Matrix};
use crate::{Error, Result};

const FULL: u8 = 0b111_1111;

/// Exterior form on a 7-dimensional space. Bit `i` of a key stands for the
/// dual basis covector `e^{i+1}`; coordinates are read off `e1, …, e7`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Form {
    degree: u32,
    terms: BTreeMap<u8, GaussianRational>,
}

fn merge_sign(a: u8, b: u8) -> i32 {
    // (-1)^{#{(x, y) : x ∈ a, y ∈ b, x > y}}
    let mut count = 0;
    for y in 0..7 {
        if b & (1 << y) != 0 {
            count += (a >> (y + 1)).count_ones();
        }
    }
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

impl Form {
    pub fn zero(degree: u32) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `e^{i1} ∧ … ∧ e^{ik}` with 1-based indices, in the given order.
    pub fn monomial(indices: &[usize]) -> Self {
        let mut f = Self {
            degree: 0,
            terms: BTreeMap::from([(0, GaussianRational::one())]),
        };
        for &i in indices {
            assert!((1..=7).contains(&i));
            let mut c = Self::zero(1);
            c.terms.insert(1 << (i - 1), GaussianRational::one());
            f = f.wedge(&c);
        }
        f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(GaussianRational::is_zero)
    }

    pub fn coeff(&self, indices: &[usize]) -> GaussianRational {
        let mono = Self::monomial(indices);
        let Some((&mask, sign)) = mono.terms.iter().next() else {
            return GaussianRational::zero();
        };
        let v = self.terms.get(&mask).cloned().unwrap_or_default();
        &v * sign
    }

    fn add_term(&mut self, mask: u8, v: GaussianRational) {
        let e = self.terms.entry(mask).or_default();
        *e = &*e + &v;
        if e.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.degree, o.degree);
        let mut out = self.clone();
        for (&m, v) in &o.terms {
            out.add_term(m, v.clone());
        }
        out
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        let mut out = Self::zero(self.degree);
        for (&m, v) in &self.terms {
            out.add_term(m, v * s);
        }
        out
    }

    pub fn wedge(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.degree + o.degree);
        for (&a, x) in &self.terms {
            for (&b, y) in &o.terms {
                if a & b != 0 {
                    continue;
                }
                let v = x * y;
                let v = if merge_sign(a, b) > 0 { v } else { -v };
                out.add_term(a | b, v);
            }
        }
        out
    }

    /// Insertion of `v` (seven coordinates) into the first slot.
    pub fn contract(&self, v: &[GaussianRational]) -> Self {
        assert_eq!(v.len(), 7);
        assert!(self.degree > 0);
        let mut out = Self::zero(self.degree - 1);
        for (&m, x) in &self.terms {
            let mut pos = 0;
            for i in 0..7 {
                if m & (1 << i) == 0 {
                    continue;
                }
                if !v[i].is_zero() {
                    let t = x * &v[i];
                    out.add_term(m & !(1 << i), if pos % 2 == 0 { t } else { -t });
                }
                pos += 1;
            }
        }
        out
    }

    /// `f(v1, …, vk)`.
    pub fn eval(&self, vs: &[&[GaussianRational]]) -> GaussianRational {
        assert_eq!(vs.len() as u32, self.degree);
        let mut f = self.clone();
        for v in vs {
            f = f.contract(v);
        }
        f.terms.get(&0).cloned().unwrap_or_default()
    }

    /// Coefficient of `e^1 ∧ … ∧ e^7`.
    pub fn top_coeff(&self) -> GaussianRational {
        assert_eq!(self.degree, 7);
        self.terms.get(&FULL).cloned().unwrap_or_default()
    }
}

fn require_imaginary(xs: &[&Octonion]) -> Result<()> {
    if xs.iter().all(|x| x.is_imaginary()) {
        Ok(())
    } else {
        Err(Error::NotImaginary)
    }
}

/// Σ over oriented lines `(i, j, k)` of `e^i ∧ e^j ∧ e^k`.
pub fn fano_form() -> Form {
    let mut f = Form::zero(3);
    for l in FanoTable::standard().lines() {
        f = f.add(&Form::monomial(l));
    }
    f
}

/// `(1/6) Σ_{i,j} e^i ∧ e^j ∧ (e_i e_j)^*`, built from the multiplication table alone.
pub fn three_form_via_products() -> Form {
    let t = FanoTable::standard();
    let mut f = Form::zero(3);
    for i in 1..8 {
        for j in 1..8 {
            let (s, k) = t.product(i, j);
            if k == 0 {
                continue;
            }
            f = f.add(&Form::monomial(&[i, j, k]).scale(&GaussianRational::from_int(s as i64)));
        }
    }
    f.scale(&GaussianRational::real(frac(1, 6)))
}

fn det3(m: [[&GaussianRational; 3]; 3]) -> GaussianRational {
    let minor = |a: usize, b: usize| m[1][a] * m[2][b] - m[1][b] * m[2][a];
    m[0][0] * &minor(1, 2) - m[0][1] * &minor(0, 2) + m[0][2] * &minor(0, 1)
}

/// Sum of 3×3 minors of `(x, y, z)` over the oriented lines.
pub fn three_form(x: &Octonion, y: &Octonion, z: &Octonion) -> Result<GaussianRational> {
    require_imaginary(&[x, y, z])?;
    let mut acc = GaussianRational::zero();
    for &[i, j, k] in FanoTable::standard().lines() {
        fn row(v: &Octonion, i: usize, j: usize, k: usize) -> [&GaussianRational; 3] {
            [&v.c[i], &v.c[j], &v.c[k]]
        }
        acc = acc + det3([row(x, i, j, k), row(y, i, j, k), row(z, i, j, k)]);
    }
    Ok(acc)
}

/// `Im(xy)` recovered as `Ω(x, y, ·)` dualized through the norm. With insertion
/// of a bivector read as `ι(a∧b) = ι_a ∘ ι_b`, this is `ι(y∧x)Ω`.
pub fn im_product_via_form(x: &Octonion, y: &Octonion) -> Result<Octonion> {
    require_imaginary(&[x, y])?;
    let partial = fano_form().contract(x.im_coords()).contract(y.im_coords());
    let coords: Vec<GaussianRational> = (1..8)
        .map(|k| partial.eval(&[Octonion::basis(k).im_coords()]))
        .collect();
    Ok(Octonion::imaginary(&coords))
}

/// Matrix of `(x, y) ↦ top(ι_x ω ∧ ι_y ω ∧ ω)` for a 3-form `ω`.
pub fn induced_bilinear(omega: &Form) -> Matrix<GaussianRational> {
    assert_eq!(omega.degree(), 3);
    let unit = |i: usize| Octonion::basis(i + 1).im_coords().to_vec();
    let partials: Vec<Form> = (0..7).map(|i| omega.contract(&unit(i))).collect();
    let mut m = Matrix::zeros(7, 7);
    for i in 0..7 {
        for j in 0..7 {
            m[(i, j)] = partials[i].wedge(&partials[j]).wedge(omega).top_coeff();
        }
    }
    m
}

/// The constant `c` with `q(x)·e^1∧…∧e^7 = c·ι_xΩ ∧ ι_xΩ ∧ Ω` for every imaginary `x`.
pub fn volume_identity_constant() -> Result<GaussianRational> {
    let b = induced_bilinear(&fano_form());
    if b[(0, 0)].is_zero() {
        return Err(Error::VolumeConstant);
    }
    let c = GaussianRational::one() / b[(0, 0)].clone();
    // q(x) = Σ x_i² is the identity matrix; the quadratic form is pinned by its polarization.
    for i in 0..7 {
        for j in 0..7 {
            let q = if i == j {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            };
            if &c * &b[(i, j)] != q {
                return Err(Error::VolumeConstant);
            }
        }
    }
    Ok(c)
}
