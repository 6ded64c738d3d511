use num_traits::Zero;

use crate::exact::{HomogPoly, Matrix, Rational};

/// Affine-linear expression `Σ c_i x_i + c` over `n` unknowns; the constant is last.
pub(crate) type LinExpr = Vec<Rational>;

/// Homogeneous polynomial whose coefficients are affine-linear in the unknowns.
#[derive(Clone, Debug)]
pub(crate) struct LinPoly {
    pub degree: u32,
    pub coeffs: Vec<LinExpr>,
}

fn zero_expr(n: usize) -> LinExpr {
    vec![Rational::zero(); n + 1]
}

impl LinPoly {
    pub fn zero(degree: u32, n: usize) -> Self {
        Self {
            degree,
            coeffs: vec![zero_expr(n); degree as usize + 1],
        }
    }

    pub fn known(p: &HomogPoly, n: usize) -> Self {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| {
                let mut e = zero_expr(n);
                e[n] = c.clone();
                e
            })
            .collect();
        Self {
            degree: p.degree(),
            coeffs,
        }
    }

    /// Degree-`d` polynomial whose coefficients are the unknowns `start..start+d+1`.
    pub fn unknown(degree: u32, start: usize, n: usize) -> Self {
        let coeffs = (0..=degree as usize)
            .map(|p| {
                let mut e = zero_expr(n);
                e[start + p] = Rational::from_integer(1.into());
                e
            })
            .collect();
        Self { degree, coeffs }
    }

    /// `unknown x_i` times a known polynomial.
    pub fn unknown_times(i: usize, p: &HomogPoly, n: usize) -> Self {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| {
                let mut e = zero_expr(n);
                e[i] = c.clone();
                e
            })
            .collect();
        Self {
            degree: p.degree(),
            coeffs,
        }
    }

    fn width(&self) -> usize {
        self.coeffs[0].len()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.degree, o.degree);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Self {
            degree: self.degree,
            coeffs,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let neg = Self {
            degree: o.degree,
            coeffs: o
                .coeffs
                .iter()
                .map(|e| e.iter().map(|x| -x).collect())
                .collect(),
        };
        self.add(&neg)
    }

    pub fn mul_known(&self, p: &HomogPoly) -> Self {
        let n = self.width() - 1;
        let mut out = Self::zero(self.degree + p.degree(), n);
        for (i, e) in self.coeffs.iter().enumerate() {
            for (j, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (slot, x) in out.coeffs[i + j].iter_mut().zip(e) {
                    *slot += x * c;
                }
            }
        }
        out
    }

    /// Value at `(α, β)` as an affine-linear expression.
    pub fn eval(&self, alpha: &Rational, beta: &Rational) -> LinExpr {
        let d = self.degree as usize;
        let mut out = zero_expr(self.width() - 1);
        for (p, e) in self.coeffs.iter().enumerate() {
            let m = num_traits::pow(alpha.clone(), p) * num_traits::pow(beta.clone(), d - p);
            if m.is_zero() {
                continue;
            }
            for (slot, x) in out.iter_mut().zip(e) {
                *slot += x * &m;
            }
        }
        out
    }

    /// Substitutes a solution vector.
    pub fn evaluate_unknowns(&self, x: &[Rational]) -> HomogPoly {
        HomogPoly::from_coeffs(self.coeffs.iter().map(|e| affine_value(e, x)).collect())
    }
}

pub(crate) fn affine_value(e: &LinExpr, x: &[Rational]) -> Rational {
    let n = e.len() - 1;
    let mut acc = e[n].clone();
    for i in 0..n {
        acc += &e[i] * &x[i];
    }
    acc
}

/// Accumulates equations `expr = 0`.
#[derive(Default)]
pub(crate) struct System {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

impl System {
    pub fn push(&mut self, e: LinExpr) {
        if e.iter().all(Zero::is_zero) {
            return;
        }
        let n = e.len() - 1;
        self.rhs.push(-e[n].clone());
        self.rows.push(e[..n].to_vec());
    }

    pub fn push_all(&mut self, p: &LinPoly) {
        for e in &p.coeffs {
            self.push(e.clone());
        }
    }

    pub fn into_parts(self, n: usize) -> (Matrix<Rational>, Vec<Rational>) {
        if self.rows.is_empty() {
            return (Matrix::zeros(0, n), Vec::new());
        }
        (Matrix::from_rows(self.rows), self.rhs)
    }
}
