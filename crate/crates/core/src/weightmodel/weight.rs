use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::exact::{parse_poly, HomogPoly};
use crate::{Error, Result};

/// The character `aα + bβ`; `γ = -α-β`.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

pub const ALPHA: Weight = Weight { a: 1, b: 0 };
pub const BETA: Weight = Weight { a: 0, b: 1 };
pub const GAMMA: Weight = Weight { a: -1, b: -1 };

impl Weight {
    pub const ZERO: Weight = Weight { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Pairing with the one-parameter subgroup taking values `(⟨λ,α⟩, ⟨λ,β⟩)`.
    pub fn pair(self, lambda: (i64, i64)) -> i64 {
        self.a * lambda.0 + self.b * lambda.1
    }

    /// `(c, w)` with `self = c·w`, `w` primitive and its first nonzero coordinate positive.
    pub fn primitive(self) -> (i64, Weight) {
        let mut g = self.a.gcd(&self.b);
        if g == 0 {
            return (0, self);
        }
        if self.a < 0 || (self.a == 0 && self.b < 0) {
            g = -g;
        }
        (g, Weight::new(self.a / g, self.b / g))
    }

    pub fn to_poly(self) -> HomogPoly {
        HomogPoly::linear(self)
    }

    /// Swaps `α` and `β`, fixing `γ`.
    pub fn swap_alpha_beta(self) -> Self {
        Weight::new(self.b, self.a)
    }

    /// Cyclic substitution `α → β → γ → α`.
    pub fn rotate(self) -> Self {
        // aα + bβ ↦ aβ + bγ = -bα + (a-b)β
        Weight::new(-self.b, self.a - self.b)
    }

    /// Parses linear expressions such as `α-γ`, `-2β`, `γ`.
    pub fn parse(s: &str) -> Result<Self> {
        let p = parse_poly(s)?;
        match p.degree() {
            1 => {
                let (b, a) = (p.coeff(0), p.coeff(1));
                let (Some(a), Some(b)) = (crate::exact::to_i64(a), crate::exact::to_i64(b)) else {
                    return Err(Error::Parse(format!("non-integral weight {s:?}")));
                };
                Ok(Weight::new(a, b))
            }
            0 if p.is_zero() => Ok(Weight::ZERO),
            _ => Err(Error::Parse(format!("not a weight: {s:?}"))),
        }
    }
}

impl From<[i64; 2]> for Weight {
    fn from([a, b]: [i64; 2]) -> Self {
        Weight::new(a, b)
    }
}

impl From<Weight> for [i64; 2] {
    fn from(w: Weight) -> Self {
        [w.a, w.b]
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.a, -self.b)
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: Weight) -> Weight {
        Weight::new(self * w.a, self * w.b)
    }
}

impl std::iter::Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, Add::add)
    }
}

impl fmt::Display for Weight {
    /// Shortest expression in `α, β, γ` with at most two letters, e.g. `α-γ` for `2α+β`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // aα + bβ = (a-c)α + (b-c)β - cγ; pick c minimizing the number and size of terms
        let best = (-(self.a.abs() + self.b.abs())..=(self.a.abs() + self.b.abs()))
            .map(|c| [(self.a - c, 'α'), (self.b - c, 'β'), (-c, 'γ')])
            .min_by_key(|t| {
                let nz = t.iter().filter(|(x, _)| *x != 0).count();
                let size: i64 = t.iter().map(|(x, _)| x.abs()).sum();
                // prefer fewer letters, then smaller coefficients, then positive leading terms
                let neg = t.iter().filter(|(x, _)| *x < 0).count();
                (nz, size, neg)
            })
            .expect("nonempty range");
        let mut terms: Vec<_> = best.iter().filter(|(x, _)| *x != 0).collect();
        terms.sort_by_key(|(x, _)| *x < 0);
        let mut first = true;
        for (x, v) in terms {
            let sign = if *x < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = x.abs();
            if mag == 1 {
                write!(f, "{sign}{v}")?;
            } else {
                write!(f, "{sign}{mag}{v}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_is_minus_alpha_minus_beta() {
        assert_eq!(ALPHA + BETA + GAMMA, Weight::ZERO);
    }

    #[test]
    fn parse_and_display() {
        for (s, w) in [
            ("α-γ", Weight::new(2, 1)),
            ("−γ", Weight::new(1, 1)),
            ("γ−β", Weight::new(-1, -2)),
            ("2β", Weight::new(0, 2)),
        ] {
            assert_eq!(Weight::parse(s).unwrap(), w, "{s}");
        }
        assert_eq!(Weight::new(2, 1).to_string(), "α-γ");
        assert_eq!(Weight::new(-1, -2).to_string(), "γ-β");
        assert_eq!(Weight::new(1, 1).to_string(), "-γ");
        assert_eq!(Weight::new(0, -2).to_string(), "-2β");
        assert!(Weight::parse("αβ").is_err());
    }

    #[test]
    fn rotation_has_order_three() {
        assert_eq!(ALPHA.rotate(), BETA);
        assert_eq!(BETA.rotate(), GAMMA);
        assert_eq!(GAMMA.rotate(), ALPHA);
        let w = Weight::new(3, -7);
        assert_eq!(w.rotate().rotate().rotate(), w);
    }

    #[test]
    fn primitive_normalization() {
        assert_eq!(Weight::new(-4, -2).primitive(), (-2, Weight::new(2, 1)));
        assert_eq!(Weight::new(0, -3).primitive(), (-3, BETA));
    }

    #[test]
    fn serializes_as_pair() {
        assert_eq!(
            serde_json::to_string(&Weight::new(2, -1)).unwrap(),
            "[2,-1]"
        );
    }
}
