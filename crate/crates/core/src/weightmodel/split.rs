use std::ops::{Add, Index, Sub};

use super::weight::{Weight, ALPHA, BETA, GAMMA};
use crate::exact::{frac, GaussianRational};
use crate::octonions::Form;

/// Weights of the basis `u0, uα, u-α, uβ, u-β, uγ, u-γ`.
pub const SPLIT_WEIGHTS: [Weight; 7] = [
    Weight::ZERO,
    ALPHA,
    Weight::new(-1, 0),
    BETA,
    Weight::new(0, -1),
    GAMMA,
    Weight::new(1, 1),
];

/// Index of the basis vector of opposite weight.
pub fn partner(i: usize) -> usize {
    match i {
        0 => 0,
        i if i % 2 == 1 => i + 1,
        i => i - 1,
    }
}

/// Coordinates in the weight basis `u0, uα, u-α, uβ, u-β, uγ, u-γ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SplitVector(pub [GaussianRational; 7]);

impl SplitVector {
    pub fn basis(i: usize) -> Self {
        let mut v = Self::default();
        v.0[i] = GaussianRational::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(GaussianRational::is_zero)
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        Self(std::array::from_fn(|i| &self.0[i] * s))
    }

    /// Negates the coordinates of negative weight.
    pub fn twist(&self) -> Self {
        Self(std::array::from_fn(|i| {
            if i > 0 && i % 2 == 0 {
                -self.0[i].clone()
            } else {
                self.0[i].clone()
            }
        }))
    }

    /// The single weight carried by `self`, if it is a nonzero weight vector.
    pub fn weight(&self) -> Option<Weight> {
        let mut ws = (0..7)
            .filter(|&i| !self.0[i].is_zero())
            .map(|i| SPLIT_WEIGHTS[i]);
        let w = ws.next()?;
        ws.all(|x| x == w).then_some(w)
    }
}

impl Index<usize> for SplitVector {
    type Output = GaussianRational;
    fn index(&self, i: usize) -> &GaussianRational {
        &self.0[i]
    }
}

impl Add for &SplitVector {
    type Output = SplitVector;
    fn add(self, o: &SplitVector) -> SplitVector {
        SplitVector(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }
}

impl Sub for &SplitVector {
    type Output = SplitVector;
    fn sub(self, o: &SplitVector) -> SplitVector {
        SplitVector(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }
}

/// Polarization of `v0² + vαv-α + vβv-β + vγv-γ`, i.e. `q(x,y) = ½(q(x+y) - q(x) - q(y))`.
pub fn q_split(x: &SplitVector, y: &SplitVector) -> GaussianRational {
    let half = GaussianRational::real(frac(1, 2));
    let mut acc = &x.0[0] * &y.0[0];
    for i in [1, 3, 5] {
        let j = partner(i);
        acc = acc + &half * &(&x.0[i] * &y.0[j] + &x.0[j] * &y.0[i]);
    }
    acc
}

/// `q_split(θx, θy)` where `θ` negates the negative-weight coordinates: the
/// polarization of `v0² - Σ v_w v_{-w}`, which is the form the three-form below induces.
pub fn q_twisted(x: &SplitVector, y: &SplitVector) -> GaussianRational {
    q_split(&x.twist(), &y.twist())
}

/// `v0∧vα∧v-α + v0∧vβ∧v-β + v0∧vγ∧v-γ + vα∧vβ∧vγ + v-α∧v-β∧v-γ`.
pub fn omega_split_form() -> Form {
    [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [2, 4, 6]]
        .iter()
        .map(|t: &[usize; 3]| Form::monomial(&t.map(|i| i + 1)))
        .fold(Form::zero(3), |acc, m| acc.add(&m))
}

pub fn omega_split(x: &SplitVector, y: &SplitVector, z: &SplitVector) -> GaussianRational {
    omega_split_form().eval(&[&x.0, &y.0, &z.0])
}

/// The vector `p` with `q_twisted(p, z) = Ω(x, y, z)` for all `z`.
pub fn split_product(x: &SplitVector, y: &SplitVector) -> SplitVector {
    let partial = omega_split_form().contract(&x.0).contract(&y.0);
    let at = |k: usize| partial.eval(&[&SplitVector::basis(k).0]);
    let minus_two = GaussianRational::from_int(-2);
    SplitVector(std::array::from_fn(|i| {
        if i == 0 {
            at(0)
        } else {
            &minus_two * &at(partner(i))
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::octonions::induced_bilinear;
    use proptest::prelude::*;

    fn u(i: usize) -> SplitVector {
        SplitVector::basis(i)
    }

    fn vector() -> impl Strategy<Value = SplitVector> {
        proptest::collection::vec((-3i64..=3, -3i64..=3), 7).prop_map(|v| {
            let c: Vec<_> = v
                .into_iter()
                .map(|(a, b)| GaussianRational::new(int(a), int(b)))
                .collect();
            SplitVector(c.try_into().unwrap())
        })
    }

    #[test]
    fn form_examples() {
        assert_eq!(q_split(&u(0), &u(0)), GaussianRational::one());
        assert_eq!(q_split(&u(1), &u(2)), GaussianRational::real(frac(1, 2)));
        assert!(q_split(&u(1), &u(3)).is_zero());
        assert_eq!(omega_split(&u(0), &u(1), &u(2)), GaussianRational::one());
        assert_eq!(omega_split(&u(1), &u(3), &u(5)), GaussianRational::one());
        assert!(omega_split(&u(1), &u(3), &u(6)).is_zero());
    }

    #[test]
    fn quadratic_form_is_polarized() {
        let x = &(&u(1) + &u(2)) + &u(0);
        let q = |v: &SplitVector| q_split(v, v);
        assert_eq!(q(&x), GaussianRational::from_int(2));
    }

    #[test]
    fn induced_form_is_the_twisted_one() {
        // top(ι_xΩ ∧ ι_yΩ ∧ Ω) = 6·q_twisted(x, y), and is not proportional to q_split
        let b = induced_bilinear(&omega_split_form());
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(
                    b[(i, j)],
                    &GaussianRational::from_int(6) * &q_twisted(&u(i), &u(j))
                );
            }
        }
        let ratio0 = b[(0, 0)].clone() / q_split(&u(0), &u(0));
        let ratio1 = b[(1, 2)].clone() / q_split(&u(1), &u(2));
        assert_ne!(ratio0, ratio1);
    }

    #[test]
    fn product_examples() {
        let p = split_product(&u(1), &u(2));
        assert_eq!(p.weight(), Some(Weight::ZERO));
        let p = split_product(&u(1), &u(3));
        assert_eq!(p.weight(), Some(-GAMMA));
        // ⟨u0, uα, u-α⟩ closes
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let p = split_product(&u(i), &u(j));
            assert!((3..7).all(|k| p[k].is_zero()), "{i},{j}");
            assert!(!p.is_zero());
        }
    }

    #[test]
    fn weights_add() {
        for i in 0..7 {
            for j in 0..7 {
                let p = split_product(&u(i), &u(j));
                if !p.is_zero() {
                    assert_eq!(p.weight(), Some(SPLIT_WEIGHTS[i] + SPLIT_WEIGHTS[j]));
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn product_is_alternating_and_compatible(x in vector(), y in vector(), z in vector()) {
            let xy = split_product(&x, &y);
            prop_assert_eq!(&xy, &split_product(&y, &x).scale(&GaussianRational::from_int(-1)));
            let lhs = q_twisted(&xy, &z);
            prop_assert_eq!(&lhs, &omega_split(&x, &y, &z));
            prop_assert_eq!(lhs, -q_twisted(&split_product(&x, &z), &y));
        }
    }
}
