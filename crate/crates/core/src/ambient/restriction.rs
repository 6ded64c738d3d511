use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::partition::Partition43;
use super::schubert::{cg_class, lr_multiply, restricted_degree, AmbientClass};
use super::sympoly::schur;
use crate::cayley::{fixed_point, Label};
use crate::equivariant::{EqClass, SchubertClasses, SchubertRing, SchubertVector};
use crate::exact::{
    int, smith_normal_form, solve_rational, to_i64, HomogPoly, IntMatrix, Matrix, Rational,
    Solution,
};
use crate::{Error, Result};

/// Which constraints pinned down a level of the restriction table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Resolution {
    /// Degree equations and multiplication by `τ_1`.
    Linear,
    /// Products of two classes of size at least two were added.
    Products,
    /// The linear constraints left a family; non-negativity and integrality selected one point.
    NonNegativity,
}

/// `ι*τ_λ` for every nonempty `λ` with `|λ| ≤ 8`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionTable {
    #[serde(serialize_with = "super::partition::serialize_keyed")]
    pub entries: BTreeMap<Partition43, SchubertVector>,
    /// Indexed by size `1..=8`.
    pub resolution: Vec<Resolution>,
}

fn append_row(
    a: &[Vec<Rational>],
    b: &[Rational],
    j: usize,
    v: i64,
) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    let mut row = vec![Rational::zero(); a[0].len()];
    row[j] = int(1);
    a.push(row);
    b.push(int(v));
    (a, b)
}

/// All solutions with entries in `0..=bounds[j]` that are integers.
fn nonnegative_integer_points(
    a: &[Vec<Rational>],
    b: &[Rational],
    bounds: &[i64],
) -> Vec<Vec<Rational>> {
    match solve_rational(&Matrix::from_rows(a.to_vec()), b) {
        Solution::Inconsistent => vec![],
        Solution::Unique(x) => {
            let ok = x
                .iter()
                .zip(bounds)
                .all(|(c, &m)| c.is_integer() && !c.is_negative() && *c <= int(m));
            if ok {
                vec![x]
            } else {
                vec![]
            }
        }
        Solution::Family { kernel, .. } => {
            let j = (0..bounds.len())
                .find(|&j| kernel.iter().any(|k| !k[j].is_zero()))
                .expect("nonzero kernel");
            (0..=bounds[j])
                .flat_map(|v| {
                    let (a2, b2) = append_row(a, b, j, v);
                    nonnegative_integer_points(&a2, &b2, bounds)
                })
                .collect()
        }
    }
}

fn labels(codim: u32) -> Vec<Label> {
    Label::ALL
        .iter()
        .copied()
        .filter(|l| u32::from(l.codim) == codim)
        .collect()
}

/// Determines `ι*τ_λ` level by level from the degree equations and from
/// `ι*(τ_μ·τ_ν) = ι*τ_μ · ι*τ_ν`, first with `τ_ν = τ_1` only.
pub fn restriction_table(ring: &SchubertRing) -> Result<RestrictionTable> {
    let mut known: BTreeMap<Partition43, SchubertVector> = BTreeMap::new();
    known.insert(
        Partition43::EMPTY,
        SchubertVector::from_pairs(&[(Label::new(0, 0), 1)]),
    );
    let mut resolution = Vec::new();
    for n in 1..=8u32 {
        let lambdas = Partition43::of_size(n);
        let targets = labels(n);
        let (nl, nt) = (lambdas.len(), targets.len());
        let var = |i: usize, j: usize| i * nt + j;
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();

        for (i, &l) in lambdas.iter().enumerate() {
            let mut row = vec![Rational::zero(); nl * nt];
            for (j, t) in targets.iter().enumerate() {
                row[var(i, j)] = int(ring.degrees[t]);
            }
            rows.push(row);
            rhs.push(int(restricted_degree(l)));
        }

        let push_product = |prod: &AmbientClass,
                            value: &SchubertVector,
                            rows: &mut Vec<Vec<Rational>>,
                            rhs: &mut Vec<Rational>| {
            for (j, &t) in targets.iter().enumerate() {
                let mut row = vec![Rational::zero(); nl * nt];
                for (l, c) in prod.terms() {
                    let i = lambdas.iter().position(|&x| x == l).expect("same size");
                    row[var(i, j)] = int(c);
                }
                rows.push(row);
                rhs.push(int(value.get(t)));
            }
        };

        let one = Partition43::new(&[1])?;
        for mu in Partition43::of_size(n - 1) {
            let prod = lr_multiply(&AmbientClass::tau(mu), &AmbientClass::tau(one));
            push_product(
                &prod,
                &ring.hyperplane_times(&known[&mu]),
                &mut rows,
                &mut rhs,
            );
        }

        let mut how = Resolution::Linear;
        let mut solution = solve_rational(&Matrix::from_rows(rows.clone()), &rhs);
        if matches!(solution, Solution::Family { .. }) && n >= 4 {
            how = Resolution::Products;
            for a in 2..=n / 2 {
                for mu in Partition43::of_size(a) {
                    for nu in Partition43::of_size(n - a) {
                        let prod = lr_multiply(&AmbientClass::tau(mu), &AmbientClass::tau(nu));
                        push_product(
                            &prod,
                            &ring.multiply(&known[&mu], &known[&nu]),
                            &mut rows,
                            &mut rhs,
                        );
                    }
                }
            }
            solution = solve_rational(&Matrix::from_rows(rows.clone()), &rhs);
        }
        let names = || {
            lambdas
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let x = match solution {
            Solution::Unique(x) => x,
            Solution::Family { .. } => {
                how = Resolution::NonNegativity;
                let bounds: Vec<i64> = (0..nl * nt)
                    .map(|v| restricted_degree(lambdas[v / nt]) / ring.degrees[&targets[v % nt]])
                    .collect();
                let mut points = nonnegative_integer_points(&rows, &rhs, &bounds);
                match points.len() {
                    1 => points.pop().expect("one point"),
                    0 => return Err(Error::RestrictionInconsistent(names())),
                    _ => return Err(Error::RestrictionAmbiguous(names())),
                }
            }
            Solution::Inconsistent => return Err(Error::RestrictionInconsistent(names())),
        };
        resolution.push(how);
        for (i, &l) in lambdas.iter().enumerate() {
            let mut v = SchubertVector::new();
            for (j, &t) in targets.iter().enumerate() {
                let c = &x[var(i, j)];
                match to_i64(c) {
                    Some(k) if k >= 0 => v.add_term(t, k),
                    _ => return Err(Error::RestrictionInconsistent(l.to_string())),
                }
            }
            known.insert(l, v);
        }
    }
    known.remove(&Partition43::EMPTY);
    Ok(RestrictionTable {
        entries: known,
        resolution,
    })
}

/// Roots of the dual tautological bundle at a fixed point: the weights of
/// the four-space, in the sign convention of the tangent weights.
fn roots_at(l: Label) -> [HomogPoly; 4] {
    fixed_point(l).four_space_weights().map(|w| w.to_poly())
}

/// `τ_λ` localized at the fixed points.
pub fn localized_tau(lambda: Partition43) -> EqClass {
    let s = schur(&lambda);
    EqClass::from_fn(lambda.size(), |l| s.evaluate(&roots_at(l)))
}

/// `ι*τ_λ` by expanding the localized class in the equivariant Schubert basis.
pub fn restriction_by_localization(
    classes: &SchubertClasses,
    lambda: Partition43,
) -> Result<SchubertVector> {
    classes.expand(&localized_tau(lambda))
}

/// `cg_class` localized: at a fixed point of the variety, the Euler class of its normal bundle.
pub fn localized_cg_class() -> EqClass {
    let c = cg_class().to_roots();
    EqClass::from_fn(4, |l| c.evaluate(&roots_at(l)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    /// Cokernel order of `ι*` in each codimension `0..=8`.
    pub by_codim: Vec<u64>,
    pub total: u64,
}

/// Index of the image of `ι*` in the integral cohomology of the variety.
pub fn image_index(table: &RestrictionTable) -> Result<IndexReport> {
    let mut by_codim = Vec::new();
    for n in 0..=8u32 {
        let targets = labels(n);
        let rows: Vec<Vec<i64>> = if n == 0 {
            vec![vec![1]]
        } else {
            Partition43::of_size(n)
                .iter()
                .map(|l| targets.iter().map(|&t| table.entries[l].get(t)).collect())
                .collect()
        };
        let snf = smith_normal_form(&IntMatrix::from_rows(&rows));
        let nonzero: Vec<&BigInt> = snf.diagonal.iter().filter(|d| !d.is_zero()).collect();
        if nonzero.len() != targets.len() {
            return Err(Error::NotFullRank(n as usize));
        }
        let order = nonzero.iter().fold(BigInt::one(), |acc, d| acc * d.abs());
        by_codim.push(u64::try_from(order).map_err(|_| Error::NotFullRank(n as usize))?);
    }
    let total = by_codim.iter().product();
    Ok(IndexReport { by_codim, total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivariant::{schubert_classes, schubert_ring};

    fn p(s: &str) -> Partition43 {
        s.parse().unwrap()
    }

    fn sv(pairs: &[(&str, i64)]) -> SchubertVector {
        SchubertVector::from_pairs(
            &pairs
                .iter()
                .map(|&(s, c)| (s.parse().unwrap(), c))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn table_has_27_entries_and_index_16() {
        let t = restriction_table(schubert_ring().unwrap()).unwrap();
        assert_eq!(t.entries.len(), 27);
        assert_eq!(t.entries[&p("1")], sv(&[("1", 1)]));
        assert_eq!(t.entries[&p("21")], sv(&[("3", 1), ("3'", 2)]));
        assert_eq!(t.entries[&p("22")], sv(&[("4", 1), ("4'", 1), ("4''", 1)]));
        assert_eq!(t.entries[&p("2222")], sv(&[("8", 1)]));
        let idx = image_index(&t).unwrap();
        assert_eq!(idx.total, 16);
        assert_eq!(idx.by_codim[..2], [1, 1]);
    }

    #[test]
    fn both_routes_agree() {
        let s = schubert_classes().unwrap();
        let t = restriction_table(schubert_ring().unwrap()).unwrap();
        for (l, v) in &t.entries {
            assert_eq!(&restriction_by_localization(s, *l).unwrap(), v, "{l}");
        }
    }

    #[test]
    fn localized_cg_class_is_the_normal_euler_class() {
        let cg = localized_cg_class();
        for l in Label::ALL {
            let u = fixed_point(l).four_space_weights();
            let q: Vec<_> = fixed_point(l)
                .triple_weights()
                .iter()
                .map(|&w| -w)
                .collect();
            let ambient: Vec<_> = u
                .iter()
                .flat_map(|&a| q.iter().map(move |&b| a - b))
                .collect();
            let lhs = cg.value(l) * &crate::equivariant::euler(l);
            assert_eq!(lhs, HomogPoly::from_weights(&ambient), "{l}");
        }
    }

    #[test]
    fn restriction_is_a_ring_homomorphism() {
        let ring = schubert_ring().unwrap();
        let t = restriction_table(ring).unwrap();
        let all = Partition43::all();
        for a in all.iter().filter(|x| !x.is_empty()) {
            for b in all
                .iter()
                .filter(|x| !x.is_empty() && a.size() + x.size() <= 8)
            {
                let prod = lr_multiply(&AmbientClass::tau(*a), &AmbientClass::tau(*b));
                let lhs = prod.terms().fold(SchubertVector::new(), |acc, (l, c)| {
                    acc.add(&t.entries[&l].scale(c))
                });
                assert_eq!(lhs, ring.multiply(&t.entries[a], &t.entries[b]), "{a}·{b}");
            }
        }
    }

    #[test]
    fn codimension_two_images_by_degree() {
        let t = restriction_table(schubert_ring().unwrap()).unwrap();
        assert_eq!(restricted_degree(p("2")), 82);
        assert_eq!(t.entries[&p("2")], sv(&[("2", 1)]));
        assert_eq!(t.entries[&p("11")], sv(&[("2'", 1)]));
    }
}
