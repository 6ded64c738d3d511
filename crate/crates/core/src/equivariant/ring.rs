use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::class::{hyperplane_class, EqClass};
use super::integrate::{ab_integrate, expand_equivariant, nonequivariant, SchubertVector};
use super::solver::SchubertClasses;
use crate::cayley::Label;
use crate::exact::{int, to_i64, Matrix, Rational};
use crate::{Error, Result};

impl SchubertClasses {
    /// Non-equivariant expansion of a pointwise class of full codimension.
    pub fn expand(&self, f: &EqClass) -> Result<SchubertVector> {
        if f.codim > 8 {
            return Ok(SchubertVector::new());
        }
        let e = expand_equivariant(f, &self.classes, |l| self.normal_weights(l))?;
        nonequivariant(&e, f.codim)
    }

    /// `σ_a · σ_b` in the Schubert basis.
    pub fn product(&self, a: Label, b: Label) -> Result<SchubertVector> {
        let v = self.expand(&self.class(a).mul(self.class(b)))?;
        if let Some((l, c)) = v.terms().find(|(_, c)| *c < 0) {
            return Err(Error::Negative(format!("σ_{a}·σ_{b} at {l}: {c}")));
        }
        Ok(v)
    }

    /// `H·σ` for every class, by expansion of the pointwise product.
    pub fn monk_matrix(&self) -> Result<BTreeMap<Label, SchubertVector>> {
        let h = hyperplane_class();
        Label::ALL
            .iter()
            .map(|&l| Ok((l, self.expand(&h.mul(self.class(l)))?)))
            .collect()
    }

    /// `∫ σ·H^{8-codim}`.
    pub fn degrees(&self) -> Result<BTreeMap<Label, i64>> {
        let h = hyperplane_class();
        let mut out = BTreeMap::new();
        for l in Label::ALL {
            let v = ab_integrate(&self.class(l).mul(&h.pow(8 - u32::from(l.codim))))?;
            let d = to_i64(&v).ok_or_else(|| Error::NonIntegral(format!("degree of σ_{l}")))?;
            if d <= 0 {
                return Err(Error::Negative(format!("degree of σ_{l}: {d}")));
            }
            out.insert(l, d);
        }
        Ok(out)
    }

    /// `σ_a·σ_b` for all `a ≤ b` (label order).
    pub fn multiplication_table(&self) -> Result<BTreeMap<(Label, Label), SchubertVector>> {
        let mut out = BTreeMap::new();
        for (i, &a) in Label::ALL.iter().enumerate() {
            for &b in &Label::ALL[i..] {
                out.insert((a, b), self.product(a, b)?);
            }
        }
        Ok(out)
    }

    /// `∫ σ_a σ_b` over pairs of complementary codimension, rows and columns in label order.
    pub fn poincare_pairing(&self) -> Result<Matrix<Rational>> {
        let mut m = Matrix::zeros(15, 15);
        for a in Label::ALL {
            for b in Label::ALL {
                if a.codim + b.codim == 8 {
                    m[(a.index(), b.index())] = ab_integrate(&self.class(a).mul(self.class(b)))?;
                }
            }
        }
        Ok(m)
    }
}

/// Degrees, Monk matrix and multiplication table of the default chamber.
#[derive(Clone, Debug)]
pub struct SchubertRing {
    pub degrees: BTreeMap<Label, i64>,
    pub monk: BTreeMap<Label, SchubertVector>,
    pub table: BTreeMap<(Label, Label), SchubertVector>,
}

impl SchubertRing {
    pub fn build(s: &SchubertClasses) -> Result<Self> {
        Ok(Self {
            degrees: s.degrees()?,
            monk: s.monk_matrix()?,
            table: s.multiplication_table()?,
        })
    }

    pub fn product(&self, a: Label, b: Label) -> &SchubertVector {
        &self.table[&if a <= b { (a, b) } else { (b, a) }]
    }

    /// Bilinear extension of the table to integer combinations.
    pub fn multiply(&self, x: &SchubertVector, y: &SchubertVector) -> SchubertVector {
        let mut out = SchubertVector::new();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                out = out.add(&self.product(a, b).scale(c * d));
            }
        }
        out
    }

    /// `H·x` via the Monk matrix.
    pub fn hyperplane_times(&self, x: &SchubertVector) -> SchubertVector {
        x.terms().fold(SchubertVector::new(), |acc, (a, c)| {
            acc.add(&self.monk[&a].scale(c))
        })
    }

    pub fn degree(&self, x: &SchubertVector) -> i64 {
        x.terms().map(|(a, c)| c * self.degrees[&a]).sum()
    }
}

/// The ring data of the default chamber, computed once.
pub fn schubert_ring() -> Result<&'static SchubertRing> {
    static R: std::sync::OnceLock<std::result::Result<SchubertRing, Error>> =
        std::sync::OnceLock::new();
    R.get_or_init(|| SchubertRing::build(crate::equivariant::schubert_classes()?))
        .as_ref()
        .map_err(Clone::clone)
}

/// Non-equivariant cohomology with the structure constants of a multiplication table.
pub struct Ring<'a> {
    table: &'a BTreeMap<(Label, Label), SchubertVector>,
}

/// Element of `H*` as rational coordinates on the Schubert basis, by label index.
pub type RingElement = Vec<Rational>;

impl<'a> Ring<'a> {
    pub fn new(table: &'a BTreeMap<(Label, Label), SchubertVector>) -> Self {
        Self { table }
    }

    pub fn basis(l: Label) -> RingElement {
        let mut v = vec![Rational::zero(); 15];
        v[l.index()] = int(1);
        v
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> RingElement {
        let mut out = vec![Rational::zero(); 15];
        for a in Label::ALL {
            if x[a.index()].is_zero() {
                continue;
            }
            for b in Label::ALL {
                if y[b.index()].is_zero() {
                    continue;
                }
                let key = if a <= b { (a, b) } else { (b, a) };
                let c = &x[a.index()] * &y[b.index()];
                for (l, k) in self.table[&key].terms() {
                    out[l.index()] += &c * int(k);
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &RingElement, n: u32) -> RingElement {
        (0..n).fold(Self::basis(Label::new(0, 0)), |acc, _| self.mul(&acc, x))
    }

    /// `Σ c·h^a·x^b` over the given `(c, a, b)` terms.
    pub fn eval(&self, terms: &[(i64, u32, u32)], h: &RingElement, x: &RingElement) -> RingElement {
        let mut out = vec![Rational::zero(); 15];
        for &(c, a, b) in terms {
            let m = self.mul(&self.pow(h, a), &self.pow(x, b));
            for (o, v) in out.iter_mut().zip(m) {
                *o += v * int(c);
            }
        }
        out
    }
}

/// `h⁵ - 5h³x + 6hx²`.
pub const RELATION_ONE: [(i64, u32, u32); 3] = [(1, 5, 0), (-5, 3, 1), (6, 1, 2)];
/// `16x³ - 27h²x² + 9h⁴x`.
pub const RELATION_TWO: [(i64, u32, u32); 3] = [(16, 0, 3), (-27, 2, 2), (9, 4, 1)];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    /// The codimension-2 class playing the role of the second generator.
    pub generator: Label,
    pub relation_one_vanishes: bool,
    pub relation_two_vanishes: bool,
    /// Rank of the monomials `h^a x^b` in each degree `0..=9`.
    pub monomial_ranks: Vec<usize>,
    /// Dimension of the ideal generated by the two relations in each degree `0..=9`.
    pub ideal_dims: Vec<usize>,
    /// Whether the two relations generate every relation up to degree 9.
    pub complete: bool,
}

fn monomials(d: u32) -> Vec<(u32, u32)> {
    (0..=d / 2).map(|b| (d - 2 * b, b)).collect()
}

fn ideal_dim(d: u32) -> usize {
    let index: BTreeMap<(u32, u32), usize> = monomials(d)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut rows = Vec::new();
    for (rel, deg) in [(&RELATION_ONE, 5u32), (&RELATION_TWO, 6u32)] {
        if d < deg {
            continue;
        }
        for (a0, b0) in monomials(d - deg) {
            let mut row = vec![Rational::zero(); index.len()];
            for &(c, a, b) in rel.iter() {
                row[index[&(a + a0, b + b0)]] += int(c);
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        0
    } else {
        Matrix::from_rows(rows).rank()
    }
}

/// Finds the codimension-2 class satisfying both relations and checks by rank
/// counting that the relations generate the whole ideal.
pub fn verify_ring_presentation(
    table: &BTreeMap<(Label, Label), SchubertVector>,
    betti: &[usize; 9],
) -> Result<PresentationReport> {
    let ring = Ring::new(table);
    let h = Ring::basis(Label::new(1, 0));
    let candidates = [Label::new(2, 0), Label::new(2, 1)];
    let zero = |v: &RingElement| v.iter().all(Zero::is_zero);
    let generator = candidates
        .into_iter()
        .find(|&g| {
            let x = Ring::basis(g);
            zero(&ring.eval(&RELATION_ONE, &h, &x)) && zero(&ring.eval(&RELATION_TWO, &h, &x))
        })
        .ok_or_else(|| {
            Error::Presentation("no codimension-2 class satisfies both relations".into())
        })?;
    let x = Ring::basis(generator);

    let mut monomial_ranks = Vec::new();
    let mut ideal_dims = Vec::new();
    let mut complete = true;
    for d in 0..=9u32 {
        let vals: Vec<RingElement> = monomials(d)
            .iter()
            .map(|&(a, b)| ring.mul(&ring.pow(&h, a), &ring.pow(&x, b)))
            .collect();
        let rank = Matrix::from_rows(vals).rank();
        let ideal = ideal_dim(d);
        let expected = betti.get(d as usize).copied().unwrap_or(0);
        complete &= rank == expected && ideal + rank == monomials(d).len();
        monomial_ranks.push(rank);
        ideal_dims.push(ideal);
    }
    Ok(PresentationReport {
        generator,
        relation_one_vanishes: zero(&ring.eval(&RELATION_ONE, &h, &x)),
        relation_two_vanishes: zero(&ring.eval(&RELATION_TWO, &h, &x)),
        monomial_ranks,
        ideal_dims,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::CHAMBER;
    use crate::equivariant::schubert_classes;
    use proptest::prelude::*;

    fn l(s: &str) -> Label {
        s.parse().unwrap()
    }

    fn sv(pairs: &[(&str, i64)]) -> SchubertVector {
        SchubertVector::from_pairs(&pairs.iter().map(|&(s, c)| (l(s), c)).collect::<Vec<_>>())
    }

    #[test]
    fn monk_expansion_matches_solver() {
        let s = schubert_classes().unwrap();
        let m = s.monk_matrix().unwrap();
        for p in Label::ALL {
            assert_eq!(&m[&p], s.monk(p), "{p}");
        }
        assert_eq!(m[&l("1")], sv(&[("2", 1), ("2'", 1)]));
    }

    #[test]
    fn degrees_and_additivity() {
        let s = schubert_classes().unwrap();
        let d = s.degrees().unwrap();
        assert_eq!(d[&l("0")], 182);
        assert_eq!(d[&l("2")], 82);
        assert_eq!(d[&l("2'")], 100);
        assert_eq!(
            d[&l("4")] * d[&l("4")] + d[&l("4'")] * d[&l("4'")] + d[&l("4''")] * d[&l("4''")],
            182
        );
        for p in Label::ALL {
            if p.codim == 8 {
                continue;
            }
            let total: i64 = s.monk(p).terms().map(|(q, c)| c * d[&q]).sum();
            assert_eq!(total, d[&p], "{p}");
        }
    }

    #[test]
    fn table_examples() {
        let s = schubert_classes().unwrap();
        assert_eq!(
            s.product(l("2"), l("2")).unwrap(),
            sv(&[("4", 1), ("4'", 2), ("4''", 2)])
        );
        assert_eq!(s.product(l("2"), l("6")).unwrap(), sv(&[("8", 1)]));
        assert!(s.product(l("2'"), l("6")).unwrap().is_zero());
        assert_eq!(s.product(l("4"), l("4")).unwrap(), sv(&[("8", 1)]));
        assert!(s.product(l("4"), l("4'")).unwrap().is_zero());
        assert_eq!(s.product(l("4''"), l("4''")).unwrap(), sv(&[("8", 1)]));
        assert!(s.product(l("5"), l("5")).unwrap().is_zero());
    }

    #[test]
    fn poincare_pairing_is_the_central_symmetry() {
        let s = schubert_classes().unwrap();
        let m = s.poincare_pairing().unwrap();
        for a in Label::ALL {
            for b in Label::ALL {
                let want = if a.codim + b.codim == 8 && b == a.dual() {
                    int(1)
                } else {
                    int(0)
                };
                assert_eq!(m[(a.index(), b.index())], want, "{a} {b}");
            }
        }
    }

    #[test]
    fn under_degree_products_integrate_to_zero() {
        let s = schubert_classes().unwrap();
        for a in Label::ALL {
            for b in Label::ALL {
                if a.codim + b.codim < 8 {
                    assert!(ab_integrate(&s.class(a).mul(s.class(b))).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn presentation() {
        let s = schubert_classes().unwrap();
        let t = s.multiplication_table().unwrap();
        let betti = CHAMBER.betti_profile().unwrap();
        let r = verify_ring_presentation(&t, &betti).unwrap();
        assert!(r.relation_one_vanishes && r.relation_two_vanishes && r.complete);
        assert_eq!(r.monomial_ranks, vec![1, 1, 2, 2, 3, 2, 2, 1, 1, 0]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn table_is_commutative_and_associative(a in 0usize..15, b in 0usize..15, c in 0usize..15) {
            let ring = Ring::new(&schubert_ring().unwrap().table);
            let (x, y, z) = (Ring::basis(Label::ALL[a]), Ring::basis(Label::ALL[b]), Ring::basis(Label::ALL[c]));
            prop_assert_eq!(ring.mul(&x, &y), ring.mul(&y, &x));
            prop_assert_eq!(ring.mul(&ring.mul(&x, &y), &z), ring.mul(&x, &ring.mul(&y, &z)));
        }
    }
}
