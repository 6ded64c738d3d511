use super::split::{omega_split, q_twisted, SplitVector};
use crate::exact::{frac, int, GaussianRational};
use crate::octonions::{three_form, FanoTable, Octonion, Subspace};
use crate::{Error, Result};

/// Linear isomorphism from the weight model to `Im 𝕆`, with
/// `Ω_Fano(φx, φy, φz) = scale·Ω_split(x, y, z)` and `q(φx, φy) = q_twisted(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bridge {
    pub images: [Octonion; 7],
    pub scale: GaussianRational,
}

impl Bridge {
    pub fn apply(&self, x: &SplitVector) -> Octonion {
        self.images
            .iter()
            .zip(&x.0)
            .fold(Octonion::zero(), |acc, (img, c)| &acc + &img.scale(c))
    }

    pub fn image(&self, basis: &[SplitVector]) -> Result<Subspace> {
        Subspace::new(basis.iter().map(|x| self.apply(x)).collect())
    }
}

fn permutations3() -> [[usize; 3]; 6] {
    [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ]
}

fn candidate(k: usize, s0: i64, pairs: [(usize, usize); 3], signs: [i64; 3]) -> [Octonion; 7] {
    let half = GaussianRational::real(frac(1, 2));
    let e = Octonion::basis;
    let mut out: [Octonion; 7] = Default::default();
    out[0] = e(k).scale(&GaussianRational::from_int(s0));
    for (r, ((a, b), s)) in pairs.into_iter().zip(signs).enumerate() {
        let ib = e(b).scale(&GaussianRational::new(int(0), int(s)));
        out[1 + 2 * r] = (&e(a) + &ib).scale(&half);
        out[2 + 2 * r] = (&ib - &e(a)).scale(&half);
    }
    out
}

fn check(images: &[Octonion; 7]) -> Option<GaussianRational> {
    let u = SplitVector::basis;
    for i in 0..7 {
        for j in i..7 {
            if images[i].inner(&images[j]) != q_twisted(&u(i), &u(j)) {
                return None;
            }
        }
    }
    let mut scale: Option<GaussianRational> = None;
    for i in 0..7 {
        for j in i + 1..7 {
            for k in j + 1..7 {
                let lhs = three_form(&images[i], &images[j], &images[k]).ok()?;
                let rhs = omega_split(&u(i), &u(j), &u(k));
                if rhs.is_zero() {
                    if !lhs.is_zero() {
                        return None;
                    }
                    continue;
                }
                let ratio = lhs / rhs;
                match &scale {
                    None => scale = Some(ratio),
                    Some(s) if *s != ratio => return None,
                    Some(_) => {}
                }
            }
        }
    }
    scale.filter(|s| !s.is_zero())
}

/// Searches maps sending `u0` to `±e_k` and each opposite pair `u_{±w}` to
/// `(±e_a + i·s·e_b)/2` along a Fano line through `k`.
pub fn model_bridge() -> Result<Bridge> {
    let t = FanoTable::standard();
    for k in 1..8 {
        let through: Vec<(usize, usize)> = t
            .lines()
            .iter()
            .filter(|l| l.contains(&k))
            .map(|l| {
                let rest: Vec<usize> = l.iter().copied().filter(|&x| x != k).collect();
                (rest[0], rest[1])
            })
            .collect();
        for perm in permutations3() {
            for swaps in 0..8u32 {
                let pairs: [(usize, usize); 3] = std::array::from_fn(|r| {
                    let (a, b) = through[perm[r]];
                    if swaps & (1 << r) != 0 {
                        (b, a)
                    } else {
                        (a, b)
                    }
                });
                for sign_mask in 0..8u32 {
                    let signs: [i64; 3] =
                        std::array::from_fn(|r| if sign_mask & (1 << r) != 0 { -1 } else { 1 });
                    for s0 in [1, -1] {
                        let images = candidate(k, s0, pairs, signs);
                        if let Some(scale) = check(&images) {
                            return Ok(Bridge { images, scale });
                        }
                    }
                }
            }
        }
    }
    Err(Error::BridgeNotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonions::{classify, OrbitType};
    use crate::weightmodel::split::split_product;

    #[test]
    fn bridge_exists_and_is_compatible() {
        let b = model_bridge().unwrap();
        assert!(!b.scale.is_zero());
        assert_eq!(
            b.apply(&SplitVector::basis(0)).norm(),
            GaussianRational::one()
        );
        let u = SplitVector::basis;
        for i in 0..7 {
            for j in 0..7 {
                let lhs = (&b.apply(&u(i)) * &b.apply(&u(j))).im();
                let rhs = b.apply(&split_product(&u(i), &u(j))).scale(&b.scale);
                assert_eq!(lhs, rhs, "{i},{j}");
            }
        }
    }

    #[test]
    fn quaternionic_triple_maps_to_nondegenerate_subalgebra() {
        let b = model_bridge().unwrap();
        let w = b
            .image(&[
                SplitVector::basis(0),
                SplitVector::basis(1),
                SplitVector::basis(2),
            ])
            .unwrap();
        assert_eq!(classify(&w), Ok(OrbitType::NonDegenerate));
    }
}
