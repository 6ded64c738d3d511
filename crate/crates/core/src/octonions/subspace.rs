use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::algebra::Octonion;
use crate::exact::{int, GaussianRational, Matrix};
use crate::{Error, Result};

/// Linear span of independent octonions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Vec<Octonion>,
}

fn rank_of(vs: &[&Octonion]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    Matrix::from_rows(vs.iter().map(|v| v.c.to_vec()).collect()).rank()
}

impl Subspace {
    pub fn new(basis: Vec<Octonion>) -> Result<Self> {
        let r = rank_of(&basis.iter().collect::<Vec<_>>());
        if r != basis.len() {
            return Err(Error::Dimension {
                expected: basis.len(),
                found: r,
            });
        }
        Ok(Self { basis })
    }

    /// Like [`Subspace::new`], additionally requiring zero real parts.
    pub fn imaginary(basis: Vec<Octonion>) -> Result<Self> {
        if !basis.iter().all(Octonion::is_imaginary) {
            return Err(Error::NotImaginary);
        }
        Self::new(basis)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Octonion] {
        &self.basis
    }

    pub fn is_imaginary(&self) -> bool {
        self.basis.iter().all(Octonion::is_imaginary)
    }

    pub fn contains(&self, x: &Octonion) -> bool {
        let mut vs: Vec<&Octonion> = self.basis.iter().collect();
        vs.push(x);
        rank_of(&vs) == self.dim()
    }

    pub fn intersection_dim(&self, o: &Subspace) -> usize {
        let vs: Vec<&Octonion> = self.basis.iter().chain(&o.basis).collect();
        self.dim() + o.dim() - rank_of(&vs)
    }

    /// Gram matrix of the polarized norm on the basis.
    pub fn gram(&self) -> Matrix<GaussianRational> {
        self.pairing(self)
    }

    fn pairing(&self, o: &Subspace) -> Matrix<GaussianRational> {
        Matrix::from_rows(
            self.basis
                .iter()
                .map(|x| o.basis.iter().map(|y| x.inner(y)).collect())
                .collect(),
        )
    }

    /// `dim(self ∩ o^⊥)` for the polarized norm.
    pub fn orthogonal_intersection_dim(&self, o: &Subspace) -> usize {
        if o.dim() == 0 {
            return self.dim();
        }
        self.dim() - self.pairing(o).rank()
    }

    /// Image of `x ↦ f(x)` applied basis-wise, when the map is injective on `self`.
    pub fn map(&self, f: impl Fn(&Octonion) -> Octonion) -> Result<Self> {
        Self::new(self.basis.iter().map(f).collect())
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .basis
            .iter()
            .map(|v| v.c.iter().map(|c| c.to_string()).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let mut basis = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != 8 {
                return Err(D::Error::custom(format!(
                    "expected 8 coefficients, got {}",
                    row.len()
                )));
            }
            let mut c: [GaussianRational; 8] = Default::default();
            for (slot, s) in c.iter_mut().zip(&row) {
                *slot = GaussianRational::parse(s).map_err(D::Error::custom)?;
            }
            basis.push(Octonion::from_coeffs(c));
        }
        Subspace::new(basis).map_err(D::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitType {
    NonDegenerate,
    DegenerateRankOne,
    Isotropic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stratum {
    /// Subalgebras `A` with `A ∩ ℓ𝕆 ≠ 0`.
    X1,
    /// Subalgebras meeting `N^⊥` of a null-plane in at least a plane.
    X2,
    /// Subalgebras with `Im A ∩ ℓ𝕆 ≠ 0`.
    X2Prime,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StratumDatum {
    /// Spanning vector of an isotropic imaginary line.
    Line(Octonion),
    NullPlane(Subspace),
}

fn require_dim(w: &Subspace, d: usize) -> Result<()> {
    if w.dim() != d {
        return Err(Error::Dimension {
            expected: d,
            found: w.dim(),
        });
    }
    Ok(())
}

/// Whether an imaginary 3-space is closed under `Im(x·y)`.
pub fn is_subalgebra(w: &Subspace) -> Result<bool> {
    require_dim(w, 3)?;
    if !w.is_imaginary() {
        return Err(Error::NotImaginary);
    }
    let b = w.basis();
    for i in 0..3 {
        for j in i + 1..3 {
            if !w.contains(&(&b[i] * &b[j]).im()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn require_subalgebra(w: &Subspace) -> Result<()> {
    if is_subalgebra(w)? {
        Ok(())
    } else {
        Err(Error::NotSubalgebra)
    }
}

pub fn classify(w: &Subspace) -> Result<OrbitType> {
    require_subalgebra(w)?;
    match w.gram().rank() {
        3 => Ok(OrbitType::NonDegenerate),
        1 => Ok(OrbitType::DegenerateRankOne),
        0 => Ok(OrbitType::Isotropic),
        r => Err(Error::GramRank(r)),
    }
}

/// Whether the product and the norm vanish identically on a plane.
pub fn null_plane_test(p: &Subspace) -> Result<bool> {
    require_dim(p, 2)?;
    let b = p.basis();
    for x in b {
        for y in b {
            if !(x * y).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(p.gram().rank() == 0)
}

/// `ℓ𝕆 = {u·x}` for a spanning vector `u`.
fn left_ideal(u: &Octonion) -> Vec<Octonion> {
    (0..8).map(|j| u * &Octonion::basis(j)).collect()
}

fn span_dim(vs: &[Octonion]) -> usize {
    rank_of(&vs.iter().collect::<Vec<_>>())
}

fn meets(a: &[Octonion], b: &[Octonion]) -> bool {
    let joint: Vec<Octonion> = a.iter().chain(b).cloned().collect();
    span_dim(&joint) < span_dim(a) + span_dim(b)
}

pub fn stratum_membership(w: &Subspace, datum: &StratumDatum, which: Stratum) -> Result<bool> {
    require_subalgebra(w)?;
    match (which, datum) {
        (Stratum::X1 | Stratum::X2Prime, StratumDatum::Line(u)) => {
            if u.is_zero() || !u.is_imaginary() || !u.norm().is_zero() {
                return Err(Error::Datum(
                    "line must be imaginary, isotropic and nonzero".into(),
                ));
            }
            let ideal = left_ideal(u);
            let mut a = w.basis().to_vec();
            if which == Stratum::X1 {
                a.push(Octonion::basis(0));
            }
            Ok(meets(&a, &ideal))
        }
        (Stratum::X2, StratumDatum::NullPlane(n)) => {
            if !null_plane_test(n)? {
                return Err(Error::Datum("plane is not a null-plane".into()));
            }
            Ok(w.orthogonal_intersection_dim(n) >= 2)
        }
        (Stratum::X2, _) => Err(Error::Datum("X2 takes a null-plane".into())),
        _ => Err(Error::Datum("X1 and X2' take an isotropic line".into())),
    }
}

fn e(i: usize) -> Octonion {
    Octonion::basis(i)
}

fn plus_i(a: usize, b: usize, sign: i64) -> Octonion {
    &e(a) + &e(b).scale(&GaussianRational::new(int(0), int(sign)))
}

/// `Im⟨e0, e1, e2, e3⟩`.
pub fn h0() -> Subspace {
    Subspace::new(vec![e(1), e(2), e(3)]).expect("independent")
}

/// `Im⟨e0, e1+ie2, e6+ie7, e3⟩`.
pub fn h1() -> Subspace {
    Subspace::new(vec![plus_i(1, 2, 1), plus_i(6, 7, 1), e(3)]).expect("independent")
}

/// `Im⟨e0, e1+ie2, e6+ie7, e4−ie5⟩`.
pub fn h2() -> Subspace {
    Subspace::new(vec![plus_i(1, 2, 1), plus_i(6, 7, 1), plus_i(4, 5, -1)]).expect("independent")
}
