use std::sync::OnceLock;

use num_traits::Signed;

use super::class::{hyperplane_class, negative_product, point_class, EqClass};
use super::integrate::{localization, SchubertVector};
use super::linsys::{LinPoly, System};
use crate::cayley::{gkm_graph, Label, OnePs, CHAMBER};
use crate::exact::{int, rational_string, solve_rational, to_i64, HomogPoly, Rational, Solution};
use crate::{Error, Result};

/// The fifteen equivariant Schubert classes for a chamber, with the
/// non-equivariant Monk coefficients found while solving.
#[derive(Clone, Debug)]
pub struct SchubertClasses {
    pub chamber: OnePs,
    /// Indexed like [`Label::ALL`].
    pub classes: Vec<EqClass>,
    /// `H·σ_p` for every vertex `p`.
    pub monk: Vec<SchubertVector>,
}

impl SchubertClasses {
    pub fn class(&self, l: Label) -> &EqClass {
        &self.classes[l.index()]
    }

    pub fn monk(&self, l: Label) -> &SchubertVector {
        &self.monk[l.index()]
    }

    pub fn normal_weights(&self, l: Label) -> Vec<crate::weightmodel::Weight> {
        self.chamber.negative_weights(l)
    }
}

/// Unknowns: one Monk coefficient per codim-(k+1) class, then the `k+1`
/// coefficients of `f(q)` for every `q` of codimension above `k`.
fn solve_vertex(
    chamber: OnePs,
    p: Label,
    solved: &[Option<EqClass>],
) -> Result<(EqClass, SchubertVector)> {
    let k = u32::from(p.codim);
    let h = hyperplane_class();
    let below: Vec<Label> = Label::ALL
        .iter()
        .copied()
        .filter(|l| u32::from(l.codim) == k + 1)
        .collect();
    let mut n = below.len();
    let mut starts = vec![None; 15];
    for q in Label::ALL {
        if u32::from(q.codim) > k {
            starts[q.index()] = Some(n);
            n += k as usize + 1;
        }
    }

    let f: Vec<LinPoly> = Label::ALL
        .iter()
        .map(|&q| match starts[q.index()] {
            Some(s) => LinPoly::unknown(k, s, n),
            None if q == p => LinPoly::known(&negative_product(chamber, p), n),
            None => LinPoly::zero(k, n),
        })
        .collect();

    let mut sys = System::default();
    let hp = h.value(p).clone();
    for q in Label::ALL {
        let shift = h.value(q) - &hp;
        let mut lhs = f[q.index()].mul_known(&shift);
        for (i, y) in below.iter().enumerate() {
            let sy = solved[y.index()]
                .as_ref()
                .expect("lower classes solved first");
            lhs = lhs.sub(&LinPoly::unknown_times(i, sy.value(q), n));
        }
        sys.push_all(&lhs);
    }
    for e in &gkm_graph().edges {
        let d = f[e.p.index()].sub(&f[e.q.index()]);
        sys.push(d.eval(&int(-e.weight.b), &int(e.weight.a)));
    }
    // ∫ f·Hʲ vanishes below the top degree
    let loc = localization();
    for j in 0..(8 - k) {
        let mut acc = LinPoly::zero(k + j + 4, n);
        for q in Label::ALL {
            let weight = &h.value(q).pow(j) * &loc.cofactors[q.index()];
            acc = acc.add(&f[q.index()].mul_known(&weight));
        }
        sys.push_all(&acc);
    }

    let (a, b) = sys.into_parts(n);
    let x = match solve_rational(&a, &b) {
        Solution::Unique(x) => x,
        Solution::Family { kernel, .. } => {
            return Err(Error::ClassNotUnique {
                label: p.to_string(),
                dim: kernel.len(),
            })
        }
        Solution::Inconsistent => return Err(Error::ClassInconsistent(p.to_string())),
    };

    let class = EqClass {
        codim: k,
        values: f.iter().map(|fq| fq.evaluate_unknowns(&x)).collect(),
    };
    let mut monk = SchubertVector::new();
    for (i, y) in below.iter().enumerate() {
        let c: &Rational = &x[i];
        let v = to_i64(c)
            .ok_or_else(|| Error::NonIntegral(format!("H·σ_{p} at {y}: {}", rational_string(c))))?;
        if c.is_negative() {
            return Err(Error::Negative(format!("H·σ_{p} at {y}: {v}")));
        }
        monk.add_term(*y, v);
    }
    Ok((class, monk))
}

/// Descending induction from the point class.
pub fn solve_all_classes(chamber: OnePs) -> Result<SchubertClasses> {
    chamber.verify_labels()?;
    let mut classes: Vec<Option<EqClass>> = vec![None; 15];
    let mut monk = vec![SchubertVector::new(); 15];
    for k in (0..=8u8).rev() {
        for p in Label::ALL.iter().copied().filter(|l| l.codim == k) {
            if k == 8 {
                classes[p.index()] = Some(point_class(chamber)?);
                continue;
            }
            let (c, m) = solve_vertex(chamber, p, &classes)?;
            classes[p.index()] = Some(c);
            monk[p.index()] = m;
        }
    }
    Ok(SchubertClasses {
        chamber,
        classes: classes
            .into_iter()
            .map(|c| c.expect("all solved"))
            .collect(),
        monk,
    })
}

/// Classes in the default chamber, solved once.
pub fn schubert_classes() -> Result<&'static SchubertClasses> {
    static S: OnceLock<std::result::Result<SchubertClasses, Error>> = OnceLock::new();
    S.get_or_init(|| solve_all_classes(CHAMBER))
        .as_ref()
        .map_err(Clone::clone)
}

/// Value of `σ_label` at `vertex` in the default chamber.
pub fn class_value(label: Label, vertex: Label) -> Result<HomogPoly> {
    Ok(schubert_classes()?.class(label).value(vertex).clone())
}
