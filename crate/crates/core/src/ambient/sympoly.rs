use std::collections::BTreeMap;

use super::partition::{Partition43, ROWS};
use crate::exact::HomogPoly;

type Exponent = [u32; ROWS];

/// Integer polynomial in the four Chern roots `x1..x4` of the dual tautological bundle.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootPoly {
    terms: BTreeMap<Exponent, i128>,
}

impl RootPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial([0; ROWS], 1)
    }

    pub fn monomial(e: Exponent, c: i128) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn root(i: usize) -> Self {
        let mut e = [0; ROWS];
        e[i] = 1;
        Self::monomial(e, 1)
    }

    fn add_term(&mut self, e: Exponent, c: i128) {
        if c == 0 {
            return;
        }
        let v = self.terms.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exponent) -> i128 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&e, &c) in &o.terms {
            r.add_term(e, c);
        }
        r
    }

    pub fn scale(&self, k: i128) -> Self {
        let mut r = Self::zero();
        for (&e, &c) in &self.terms {
            r.add_term(e, c * k);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (a, &c) in &self.terms {
            for (b, &d) in &o.terms {
                let mut e = *a;
                for i in 0..ROWS {
                    e[i] += b[i];
                }
                r.add_term(e, c * d);
            }
        }
        r
    }

    /// Terms of total degree at most `max`.
    pub fn truncated(&self, max: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= max)
                .map(|(&e, &c)| (e, c))
                .collect(),
        }
    }

    /// Terms of total degree exactly `k`.
    pub fn degree_part(&self, k: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == k)
                .map(|(&e, &c)| (e, c))
                .collect(),
        }
    }

    /// `1/self` modulo terms of degree above `max`; the constant term must be 1.
    pub fn inverse_truncated(&self, max: u32) -> Self {
        assert_eq!(self.coeff([0; ROWS]), 1, "unit constant term");
        let y = self.sub(&Self::one());
        let mut out = Self::one();
        let mut power = Self::one();
        for _ in 0..max {
            power = power.mul(&y).scale(-1).truncated(max);
            out = out.add(&power);
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, &c)| {
            (0..ROWS - 1).all(|i| {
                let mut f = *e;
                f.swap(i, i + 1);
                self.coeff(f) == c
            })
        })
    }

    /// Substitutes the roots by linear forms.
    pub fn evaluate(&self, roots: &[HomogPoly; ROWS]) -> HomogPoly {
        let degree = self.terms.keys().next().map_or(0, |e| e.iter().sum());
        let mut out = HomogPoly::zero(degree);
        for (e, &c) in &self.terms {
            let mut m = HomogPoly::constant(crate::exact::int(c as i64));
            for i in 0..ROWS {
                m = &m * &roots[i].pow(e[i]);
            }
            out = &out + &m;
        }
        out
    }
}

/// Elementary symmetric polynomial `e_k`.
pub fn elementary(k: u32) -> RootPoly {
    let mut p = RootPoly::zero();
    for mask in 0u32..(1 << ROWS) {
        if mask.count_ones() == k {
            let mut e = [0; ROWS];
            for (i, x) in e.iter_mut().enumerate() {
                *x = (mask >> i) & 1;
            }
            p.add_term(e, 1);
        }
    }
    p
}

/// Complete homogeneous symmetric polynomial `h_k`; zero for negative `k`.
pub fn complete(k: i32) -> RootPoly {
    if k < 0 {
        return RootPoly::zero();
    }
    let k = k as u32;
    let mut p = RootPoly::zero();
    for a in 0..=k {
        for b in 0..=k - a {
            for c in 0..=k - a - b {
                p.add_term([a, b, c, k - a - b - c], 1);
            }
        }
    }
    p
}

/// `s_λ = det(h_{λ_i + j - i})`.
pub fn schur(lambda: &Partition43) -> RootPoly {
    let parts = lambda.parts();
    let n = lambda.len();
    if n == 0 {
        return RootPoly::one();
    }
    let m: Vec<Vec<RootPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| complete(i32::from(parts[i]) + j as i32 - i as i32))
                .collect()
        })
        .collect();
    determinant(&m)
}

fn determinant(m: &[Vec<RootPoly>]) -> RootPoly {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut out = RootPoly::zero();
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<RootPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let t = a.mul(&determinant(&minor));
        out = if j % 2 == 0 { out.add(&t) } else { out.sub(&t) };
    }
    out
}

/// Vandermonde `Π_{i<j} (x_i - x_j)`.
fn vandermonde() -> RootPoly {
    let mut p = RootPoly::one();
    for i in 0..ROWS {
        for j in i + 1..ROWS {
            p = p.mul(&RootPoly::root(i).sub(&RootPoly::root(j)));
        }
    }
    p
}

/// Coefficients of a symmetric polynomial in the Schur basis, over all
/// partitions with at most four parts: `[s_λ] f = [x^{λ+δ}] (f · a_δ)`.
pub fn schur_coefficients(f: &RootPoly) -> BTreeMap<Vec<u32>, i128> {
    debug_assert!(f.is_symmetric());
    let a = f.mul(&vandermonde());
    let mut out = BTreeMap::new();
    for (e, &c) in &a.terms {
        if e.windows(2).all(|w| w[0] > w[1]) {
            let lambda: Vec<u32> = (0..ROWS).map(|i| e[i] - (ROWS - 1 - i) as u32).collect();
            out.insert(lambda, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition43 {
        s.parse().unwrap()
    }

    #[test]
    fn jacobi_trudi_small_cases() {
        assert_eq!(schur(&p("1")), elementary(1));
        assert_eq!(schur(&p("11")), elementary(2));
        assert_eq!(schur(&p("1111")), elementary(4));
        assert_eq!(schur(&p("3")), complete(3));
        // s_21 = h2 h1 - h3
        assert_eq!(
            schur(&p("21")),
            complete(2).mul(&complete(1)).sub(&complete(3))
        );
    }

    #[test]
    fn schur_polynomials_are_symmetric_and_self_expanding() {
        for l in Partition43::all() {
            let s = schur(&l);
            assert!(s.is_symmetric(), "{l}");
            let c = schur_coefficients(&s);
            let key: Vec<u32> = l.parts().iter().map(|&x| u32::from(x)).collect();
            assert_eq!(c.len(), 1, "{l}");
            assert_eq!(c[&key], 1, "{l}");
        }
    }

    #[test]
    fn dimension_count_by_evaluation() {
        // s_λ(1,1,1,1) is the dimension of the GL4 module; s_21 gives 20.
        let ones = std::array::from_fn(|_| HomogPoly::one());
        let v = schur(&p("21")).evaluate(&ones);
        assert_eq!(v.as_constant().cloned(), Some(crate::exact::int(20)));
    }
}
