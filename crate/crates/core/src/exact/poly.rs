use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{int, parse_rational, rational_string, Rational};
use crate::weightmodel::Weight;
use crate::{Error, Result};

/// Homogeneous polynomial in `α, β` (`γ = -α-β` is eliminated on input).
///
/// Stored densely: `coeffs[p]` multiplies `α^p β^(d-p)`.
#[derive(Clone, Debug)]
pub struct HomogPoly {
    degree: u32,
    coeffs: Vec<Rational>,
}

impl HomogPoly {
    pub fn zero(degree: u32) -> Self {
        Self {
            degree,
            coeffs: vec![Rational::zero(); degree as usize + 1],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self {
            degree: 0,
            coeffs: vec![c],
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn linear(w: Weight) -> Self {
        Self {
            degree: 1,
            coeffs: vec![int(w.b), int(w.a)],
        }
    }

    /// `coeffs[p]` multiplies `α^p β^(d-p)`; length fixes the degree.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a homogeneous polynomial needs a degree"
        );
        Self {
            degree: coeffs.len() as u32 - 1,
            coeffs,
        }
    }

    pub fn from_weights(ws: &[Weight]) -> Self {
        ws.iter()
            .fold(Self::one(), |acc, w| &acc * &Self::linear(*w))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficient of `α^p β^(d-p)`.
    pub fn coeff(&self, p: u32) -> &Rational {
        &self.coeffs[p as usize]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero terms as `(α exponent, β exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> + '_ {
        let d = self.degree;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(p, c)| (p as u32, d - p as u32, c))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, alpha: &Rational, beta: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (p, q, c) in self.terms() {
            acc += c
                * num_traits::pow(alpha.clone(), p as usize)
                * num_traits::pow(beta.clone(), q as usize);
        }
        acc
    }

    /// Value on the zero line of `w`, parametrized as `(α, β) = (-w_b, w_a)`.
    pub fn restrict_to_line(&self, w: Weight) -> Rational {
        self.eval(&int(-w.b), &int(w.a))
    }

    /// The constant term if the degree is zero.
    pub fn as_constant(&self) -> Option<&Rational> {
        (self.degree == 0).then(|| &self.coeffs[0])
    }

    /// `Some(q)` with `q·w = self` when `w` divides `self`, otherwise `None`.
    pub fn divide_by_linear(&self, w: Weight) -> Result<Option<Self>> {
        if w.is_zero() {
            return Err(Error::ZeroLinearForm);
        }
        if self.is_zero() {
            return Ok(Some(Self::zero(self.degree.saturating_sub(1))));
        }
        if self.degree == 0 || !self.restrict_to_line(w).is_zero() {
            return Ok(None);
        }
        let d = self.degree as usize;
        let (a, b) = (int(w.a), int(w.b));
        let mut q = vec![Rational::zero(); d];
        if !a.is_zero() {
            // highest α power first: c_p = a q_{p-1} + b q_p
            let mut rem = self.coeffs.clone();
            for p in (1..=d).rev() {
                let qp = &rem[p] / &a;
                rem[p - 1] -= &qp * &b;
                q[p - 1] = qp;
            }
        } else {
            for p in 0..d {
                q[p] = &self.coeffs[p] / &b;
            }
        }
        Ok(Some(Self {
            degree: self.degree - 1,
            coeffs: q,
        }))
    }

    /// Exact division by a product of linear forms.
    pub fn divide_by_product(&self, ws: &[Weight]) -> Result<Option<Self>> {
        let mut cur = self.clone();
        for w in ws {
            match cur.divide_by_linear(*w)? {
                Some(q) => cur = q,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    fn combine(&self, o: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        if o.is_zero() && o.degree != self.degree {
            return self.clone();
        }
        if self.is_zero() && o.degree != self.degree {
            return Self {
                degree: o.degree,
                coeffs: o.coeffs.iter().map(|c| f(&Rational::zero(), c)).collect(),
            };
        }
        assert_eq!(
            self.degree, o.degree,
            "adding homogeneous polynomials of different degrees"
        );
        Self {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

pub fn poly_mul(a: &HomogPoly, b: &HomogPoly) -> HomogPoly {
    a * b
}

impl PartialEq for HomogPoly {
    /// Zero polynomials are equal whatever their nominal degree.
    fn eq(&self, o: &Self) -> bool {
        match (self.is_zero(), o.is_zero()) {
            (true, true) => true,
            (false, false) => self.degree == o.degree && self.coeffs == o.coeffs,
            _ => false,
        }
    }
}

impl Eq for HomogPoly {}

impl<'a> Add<&'a HomogPoly> for &'a HomogPoly {
    type Output = HomogPoly;
    fn add(self, o: &HomogPoly) -> HomogPoly {
        self.combine(o, |a, b| a + b)
    }
}

impl Add for HomogPoly {
    type Output = HomogPoly;
    fn add(self, o: HomogPoly) -> HomogPoly {
        &self + &o
    }
}

impl<'a> Sub<&'a HomogPoly> for &'a HomogPoly {
    type Output = HomogPoly;
    fn sub(self, o: &HomogPoly) -> HomogPoly {
        self.combine(o, |a, b| a - b)
    }
}

impl Sub for HomogPoly {
    type Output = HomogPoly;
    fn sub(self, o: HomogPoly) -> HomogPoly {
        &self - &o
    }
}

impl<'a> Mul<&'a HomogPoly> for &'a HomogPoly {
    type Output = HomogPoly;
    fn mul(self, o: &HomogPoly) -> HomogPoly {
        let mut coeffs = vec![Rational::zero(); (self.degree + o.degree) as usize + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        HomogPoly {
            degree: self.degree + o.degree,
            coeffs,
        }
    }
}

impl Mul for HomogPoly {
    type Output = HomogPoly;
    fn mul(self, o: HomogPoly) -> HomogPoly {
        &self * &o
    }
}

impl Neg for HomogPoly {
    type Output = HomogPoly;
    fn neg(self) -> HomogPoly {
        HomogPoly {
            degree: self.degree,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &HomogPoly {
    type Output = HomogPoly;
    fn neg(self) -> HomogPoly {
        -self.clone()
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn var(f: &mut fmt::Formatter<'_>, name: char, e: u32) -> fmt::Result {
            match e {
                0 => Ok(()),
                1 => write!(f, "{name}"),
                _ => write!(f, "{name}^{e}"),
            }
        }
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for p in (0..=self.degree).rev() {
            let c = self.coeff(p);
            if c.is_zero() {
                continue;
            }
            let q = self.degree - p;
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            if !a.is_one() || self.degree == 0 {
                write!(f, "{a}")?;
            }
            var(f, 'α', p)?;
            var(f, 'β', q)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    degree: u32,
    terms: Vec<(u32, u32, String)>,
}

impl Serialize for HomogPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            degree: self.degree,
            terms: self
                .terms()
                .map(|(p, q, c)| (p, q, rational_string(c)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomogPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let mut poly = HomogPoly::zero(raw.degree);
        for (p, q, c) in raw.terms {
            if p + q != raw.degree {
                return Err(D::Error::custom(format!(
                    "term α^{p}β^{q} in a degree {} polynomial",
                    raw.degree
                )));
            }
            poly.coeffs[p as usize] += parse_rational(&c).map_err(D::Error::custom)?;
        }
        Ok(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weightmodel::{ALPHA, BETA, GAMMA};
    use proptest::prelude::*;

    fn a() -> HomogPoly {
        HomogPoly::linear(ALPHA)
    }
    fn b() -> HomogPoly {
        HomogPoly::linear(BETA)
    }
    fn g() -> HomogPoly {
        HomogPoly::linear(GAMMA)
    }

    #[test]
    fn products() {
        assert_eq!(
            poly_mul(&a(), &b()),
            HomogPoly::from_coeffs(vec![int(0), int(1), int(0)])
        );
        let s = &a() + &b();
        let sq = HomogPoly::from_coeffs(vec![int(1), int(2), int(1)]);
        assert_eq!(poly_mul(&s, &s), sq);
        assert_eq!(poly_mul(&-g(), &-g()), sq);
    }

    #[test]
    fn division_examples() {
        let f = &(&a() * &a()) - &(&b() * &b());
        assert_eq!(f.divide_by_linear(ALPHA - BETA).unwrap(), Some(&a() + &b()));
        assert_eq!((&a() * &b()).divide_by_linear(ALPHA + BETA).unwrap(), None);
        assert_eq!(
            HomogPoly::zero(1).divide_by_linear(ALPHA).unwrap(),
            Some(HomogPoly::zero(0))
        );
        assert_eq!(
            a().divide_by_linear(Weight::ZERO),
            Err(Error::ZeroLinearForm)
        );
        assert_eq!((&a() * &b()).divide_by_linear(BETA).unwrap(), Some(a()));
    }

    #[test]
    fn json_shape() {
        let f = &(&a() * &a()).scale(&crate::exact::frac(1, 2)) - &(&b() * &b());
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"degree": 2, "terms": [[0, 2, "-1/1"], [2, 0, "1/2"]]})
        );
        let back: HomogPoly = serde_json::from_value(v).unwrap();
        assert_eq!(back, f);
        let bad = serde_json::json!({"degree": 2, "terms": [[0, 1, "1/1"]]});
        assert!(serde_json::from_value::<HomogPoly>(bad).is_err());
    }

    #[test]
    fn display() {
        let f = &(&a() * &a()).scale(&int(3)) - &(&a() * &b());
        assert_eq!(f.to_string(), "3α^2 - αβ");
        assert_eq!(HomogPoly::zero(3).to_string(), "0");
    }

    fn arb_poly(max_deg: u32) -> impl Strategy<Value = HomogPoly> {
        (0..=max_deg).prop_flat_map(|d| {
            prop::collection::vec(-20i64..20, d as usize + 1)
                .prop_map(|cs| HomogPoly::from_coeffs(cs.into_iter().map(int).collect()))
        })
    }

    fn arb_weight() -> impl Strategy<Value = Weight> {
        (-4i64..5, -4i64..5)
            .prop_filter("nonzero", |&(a, b)| a != 0 || b != 0)
            .prop_map(|(a, b)| Weight::new(a, b))
    }

    proptest! {
        #[test]
        fn divide_undoes_multiply(f in arb_poly(6), w in arb_weight()) {
            let prod = &f * &HomogPoly::linear(w);
            prop_assert_eq!(prod.divide_by_linear(w).unwrap(), Some(f));
        }

        #[test]
        fn gamma_substitution_commutes(x in -3i64..4, y in -3i64..4, u in -3i64..4, v in -3i64..4) {
            // (xα + yγ)(uβ + vγ) expanded after elimination equals elimination of the expanded form
            let l1 = &a().scale(&int(x)) + &g().scale(&int(y));
            let l2 = &b().scale(&int(u)) + &g().scale(&int(v));
            let lhs = &l1 * &l2;
            let (al, be) = (int(2), int(-5));
            let ga = -(&al + &be);
            let direct = (int(x) * &al + int(y) * &ga) * (int(u) * &be + int(v) * &ga);
            prop_assert_eq!(lhs.eval(&al, &be), direct);
        }
    }
}
