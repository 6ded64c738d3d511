//! Parser for polynomial expressions in `α, β, γ` as written in tables,
//! e.g. `4γ(γ−β)`, `2(β-γ)^2`, `−3βγ`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::poly::HomogPoly;
use super::rational::{int, Rational};
use crate::{Error, Result};

/// Not necessarily homogeneous; keyed by `(α exponent, β exponent)`.
#[derive(Clone, Debug, Default)]
struct Sparse(BTreeMap<(u32, u32), Rational>);

impl Sparse {
    fn constant(c: Rational) -> Self {
        let mut m = BTreeMap::new();
        m.insert((0, 0), c);
        Sparse(m)
    }

    fn var(a: i64, b: i64) -> Self {
        let mut m = BTreeMap::new();
        if a != 0 {
            m.insert((1, 0), int(a));
        }
        if b != 0 {
            m.insert((0, 1), int(b));
        }
        Sparse(m)
    }

    fn add(mut self, o: &Sparse, sign: i64) -> Self {
        for (k, v) in &o.0 {
            *self.0.entry(*k).or_insert_with(Rational::zero) += v * int(sign);
        }
        self.0.retain(|_, v| !v.is_zero());
        self
    }

    fn mul(&self, o: &Sparse) -> Self {
        let mut m: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for ((p1, q1), c1) in &self.0 {
            for ((p2, q2), c2) in &o.0 {
                *m.entry((p1 + p2, q1 + q2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        m.retain(|_, v| !v.is_zero());
        Sparse(m)
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn sign(c: char) -> Option<i64> {
        match c {
            '+' => Some(1),
            '-' | '−' | '–' => Some(-1),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = Sparse::default();
        let mut sign = 1;
        if let Some(s) = self.peek().and_then(Self::sign) {
            sign = s;
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            acc = acc.add(&t, sign);
            match self.peek().and_then(Self::sign) {
                Some(s) => {
                    sign = s;
                    self.pos += 1;
                }
                None => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') | Some('·') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(c) if c == '(' || c.is_ascii_digit() || Self::letter(c).is_some() => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn letter(c: char) -> Option<(i64, i64)> {
        match c {
            'α' | 'a' => Some((1, 0)),
            'β' | 'b' => Some((0, 1)),
            'γ' | 'g' => Some((-1, -1)),
            _ => None,
        }
    }

    fn factor(&mut self) -> Result<Sparse> {
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                e
            }
            Some(c) if c.is_ascii_digit() => Sparse::constant(int(self.number()? as i64)),
            Some(c) => match Self::letter(c) {
                Some((a, b)) => {
                    self.pos += 1;
                    Sparse::var(a, b)
                }
                None => return Err(self.err("unexpected character")),
            },
            None => return Err(self.err("unexpected end")),
        };
        let exp = match self.peek() {
            Some('^') => {
                self.pos += 1;
                self.number()?
            }
            Some('²') => {
                self.pos += 1;
                2
            }
            Some('³') => {
                self.pos += 1;
                3
            }
            _ => 1,
        };
        Ok((1..exp).fold(base.clone(), |acc, _| acc.mul(&base)))
    }

    fn number(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("expected a number"))
    }
}

/// Parses a homogeneous expression; `γ` is replaced by `-α-β`.
pub fn parse_poly(src: &str) -> Result<HomogPoly> {
    let chars: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { chars, pos: 0, src };
    let sparse = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    let degrees: Vec<u32> = sparse.0.keys().map(|(a, b)| a + b).collect();
    let degree = degrees.first().copied().unwrap_or(0);
    if degrees.iter().any(|&d| d != degree) {
        return Err(Error::Parse(format!("{src:?} is not homogeneous")));
    }
    let mut coeffs = vec![Rational::zero(); degree as usize + 1];
    for ((a, _), c) in sparse.0 {
        coeffs[a as usize] = c;
    }
    Ok(HomogPoly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weightmodel::{Weight, ALPHA, BETA, GAMMA};

    fn lin(w: Weight) -> HomogPoly {
        HomogPoly::linear(w)
    }

    #[test]
    fn table_expressions() {
        let g = lin(GAMMA);
        let b = lin(BETA);
        assert_eq!(
            parse_poly("4γ(γ−β)").unwrap(),
            (&g * &(&g - &b)).scale(&int(4))
        );
        assert_eq!(parse_poly("-3βγ").unwrap(), (&b * &g).scale(&int(-3)));
        let d = &b - &g;
        assert_eq!(parse_poly("2(β-γ)^2").unwrap(), (&d * &d).scale(&int(2)));
        assert_eq!(parse_poly("2(β-γ)²").unwrap(), (&d * &d).scale(&int(2)));
        assert_eq!(parse_poly("α-γ").unwrap(), lin(Weight::new(2, 1)));
        assert_eq!(parse_poly("0").unwrap(), HomogPoly::zero(0));
        assert_eq!(parse_poly("-α").unwrap(), lin(-ALPHA));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("α+1").is_err());
        assert!(parse_poly("(α").is_err());
        assert!(parse_poly("αx").is_err());
        assert!(parse_poly("").is_err());
    }
}
