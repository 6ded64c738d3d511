use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{Partition43, COLS, ROWS};
use super::sympoly::{elementary, schur, schur_coefficients, RootPoly};

/// Integer combination of Schubert classes `τ_λ` on `G(4,7)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmbientClass(pub BTreeMap<Partition43, i64>);

impl AmbientClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn tau(l: Partition43) -> Self {
        Self(BTreeMap::from([(l, 1)]))
    }

    pub fn get(&self, l: Partition43) -> i64 {
        self.0.get(&l).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Partition43, i64)> + '_ {
        self.0.iter().map(|(&l, &c)| (l, c))
    }

    /// Symmetric polynomial representative in the dual tautological roots.
    pub fn to_roots(&self) -> RootPoly {
        self.terms().fold(RootPoly::zero(), |acc, (l, c)| {
            acc.add(&schur(&l).scale(i128::from(c)))
        })
    }

    /// Schur expansion of a symmetric polynomial, dropping shapes outside the box.
    pub fn from_roots(f: &RootPoly) -> Self {
        let mut out = BTreeMap::new();
        for (lambda, c) in schur_coefficients(f) {
            if lambda[0] > u32::from(COLS) || c == 0 {
                continue;
            }
            let parts: Vec<u8> = lambda.iter().map(|&x| x as u8).collect();
            let l = Partition43::new(&parts).expect("shape fits the box");
            out.insert(l, i64::try_from(c).expect("coefficient fits in i64"));
        }
        Self(out)
    }

    /// `∫_G`: the coefficient of the point class `τ_{3333}`.
    pub fn integrate(&self) -> i64 {
        self.get(Partition43::FULL)
    }
}

impl fmt::Display for AmbientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i == 0 {
                ""
            } else {
                "+"
            };
            match c.abs() {
                1 => write!(f, "{sign}{}", l.tau_name())?,
                m => write!(f, "{sign}{m}{}", l.tau_name())?,
            }
        }
        Ok(())
    }
}

/// Product in `H*(G(4,7))`, computed in the symmetric polynomial ring and
/// truncated to the 4x3 box.
pub fn lr_multiply(a: &AmbientClass, b: &AmbientClass) -> AmbientClass {
    AmbientClass::from_roots(&a.to_roots().mul(&b.to_roots()))
}

/// `τ_1^k`.
pub fn tau_one_power(k: u32) -> AmbientClass {
    let one = AmbientClass::tau(Partition43::new(&[1]).expect("fits"));
    (0..k).fold(AmbientClass::tau(Partition43::EMPTY), |acc, _| {
        lr_multiply(&acc, &one)
    })
}

/// `c_4(∧³ U*)`: the roots of `∧³ U*` are the triple sums `e_1 - x_l`.
pub fn cg_class() -> AmbientClass {
    let e1 = elementary(1);
    let f = (0..ROWS).fold(RootPoly::one(), |acc, l| {
        acc.mul(&e1.sub(&RootPoly::root(l)))
    });
    AmbientClass::from_roots(&f)
}

/// `∫_G cg · τ_λ · τ_1^{8-|λ|}`, the degree of `ι*τ_λ` on the variety.
pub fn restricted_degree(lambda: Partition43) -> i64 {
    let c = lr_multiply(&cg_class(), &AmbientClass::tau(lambda));
    lr_multiply(&c, &tau_one_power(8 - lambda.size())).integrate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition43 {
        s.parse().unwrap()
    }

    fn t(s: &str) -> AmbientClass {
        AmbientClass::tau(p(s))
    }

    /// Number of Littlewood-Richardson tableaux of shape `ν/λ` and content `μ`:
    /// semistandard fillings whose reverse reading word is a lattice word.
    fn lr_count(lambda: &[u8; 4], mu: &[u8; 4], nu: &[u8; 4]) -> i64 {
        if (0..4).any(|i| lambda[i] > nu[i]) {
            return 0;
        }
        let cells: Vec<(usize, usize)> = (0..4)
            .flat_map(|r| (lambda[r] as usize..nu[r] as usize).map(move |c| (r, c)))
            .collect();
        let size: usize = mu.iter().map(|&x| x as usize).sum();
        if cells.len() != size {
            return 0;
        }
        let mut fill = vec![0u8; cells.len()];
        fn rec(
            k: usize,
            cells: &[(usize, usize)],
            fill: &mut [u8],
            mu: &[u8; 4],
            used: &mut [u8; 4],
        ) -> i64 {
            if k == cells.len() {
                // Reverse reading word: rows top to bottom, each read right to left.
                let mut seen = [0u8; 4];
                let mut order: Vec<usize> = (0..cells.len()).collect();
                order.sort_by(|&a, &b| {
                    cells[a]
                        .0
                        .cmp(&cells[b].0)
                        .then(cells[b].1.cmp(&cells[a].1))
                });
                for i in order {
                    let v = fill[i] as usize;
                    seen[v] += 1;
                    if v > 0 && seen[v] > seen[v - 1] {
                        return 0;
                    }
                }
                return 1;
            }
            let (r, c) = cells[k];
            let mut total = 0;
            for v in 0..4u8 {
                if used[v as usize] == mu[v as usize] {
                    continue;
                }
                let ok = cells[..k].iter().zip(fill.iter()).all(|(&(r2, c2), &f2)| {
                    !(r2 == r && c2 + 1 == c && f2 > v) && !(c2 == c && r2 + 1 == r && f2 >= v)
                });
                if !ok {
                    continue;
                }
                fill[k] = v;
                used[v as usize] += 1;
                total += rec(k + 1, cells, fill, mu, used);
                used[v as usize] -= 1;
            }
            total
        }
        rec(0, &cells, &mut fill, mu, &mut [0; 4])
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(
            lr_multiply(&t("1"), &t("1")),
            AmbientClass(BTreeMap::from([(p("2"), 1), (p("11"), 1)]))
        );
        assert!(lr_multiply(&t("3"), &t("3333")).is_zero());
        assert_eq!(lr_multiply(&t("3"), &t("333")), t("3333"));
        assert!(
            lr_multiply(&t("3"), &t("3")).get(p("33")) == 1
                && lr_multiply(&t("3"), &t("3")).0.len() == 1
        );
    }

    #[test]
    fn degree_of_the_grassmannian() {
        // 12! · 0!1!2!3! / (3!4!5!6!)
        assert_eq!(tau_one_power(12).integrate(), 462);
    }

    #[test]
    fn poincare_duality_in_the_box() {
        for a in Partition43::all() {
            for b in Partition43::all() {
                if a.size() + b.size() == 12 {
                    let want = i64::from(b == a.complement());
                    assert_eq!(
                        lr_multiply(&t(&a.to_string()), &t(&b.to_string())).integrate(),
                        want,
                        "{a} {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn lr_rule_matches_tableau_count() {
        let all = Partition43::all();
        for a in &all {
            for b in &all {
                if a.size() + b.size() > 8 || a > b {
                    continue;
                }
                let prod = lr_multiply(&AmbientClass::tau(*a), &AmbientClass::tau(*b));
                for n in Partition43::of_size(a.size() + b.size()) {
                    assert_eq!(
                        prod.get(n),
                        lr_count(a.parts(), b.parts(), n.parts()),
                        "{a}·{b} at {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn cg_class_is_effective() {
        let c = cg_class();
        assert!(c.terms().all(|(l, k)| l.size() == 4 && k > 0), "{c}");
        assert_eq!(lr_multiply(&c, &tau_one_power(8)).integrate(), 182);
    }

    #[test]
    fn restricted_degrees_of_codimension_two() {
        assert_eq!(restricted_degree(p("1")), 182);
        assert_eq!(restricted_degree(p("2")) + restricted_degree(p("11")), 182);
        let mut pair = [restricted_degree(p("2")), restricted_degree(p("11"))];
        pair.sort();
        assert_eq!(pair, [82, 100]);
    }

    proptest! {
        #[test]
        fn product_is_commutative_and_nonnegative(i in 0usize..35, j in 0usize..35) {
            let all = Partition43::all();
            let (a, b) = (AmbientClass::tau(all[i]), AmbientClass::tau(all[j]));
            let ab = lr_multiply(&a, &b);
            prop_assert_eq!(&ab, &lr_multiply(&b, &a));
            prop_assert!(ab.terms().all(|(_, c)| c > 0));
        }
    }
}
