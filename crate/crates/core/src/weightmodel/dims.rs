use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::roots::{inner, RootSystemG2};

/// `dim S_λ(ℂⁿ)` by the hook-content formula.
pub fn gl_schur_dim(lambda: &[u32], n: u32) -> u64 {
    if lambda.iter().filter(|&&x| x > 0).count() > n as usize {
        return 0;
    }
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = lambda[i + 1..].iter().filter(|&&r| r as usize > j).count();
            num *= BigInt::from(n as i64 + j as i64 - i as i64);
            den *= BigInt::from(arm + leg + 1);
        }
    }
    BigRational::new(num, den)
        .to_integer()
        .to_u64()
        .expect("fits")
}

pub fn gl7_schur_dim(lambda: &[u32]) -> u64 {
    gl_schur_dim(lambda, 7)
}

/// `dim V_{aω₁+bω₂}` by the Weyl dimension formula over the positive roots.
pub fn g2_irrep_dim(a: u32, b: u32) -> u64 {
    let r = RootSystemG2::new();
    let lambda = (a as i64) * r.fundamental[0] + (b as i64) * r.fundamental[1];
    let rho = r.rho();
    let mut num = 1i64;
    let mut den = 1i64;
    for p in r.positive() {
        num *= inner(lambda + rho, p);
        den *= inner(rho, p);
    }
    (num / den) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weightmodel::roots::weyl_apply;
    use crate::weightmodel::Weight;
    use std::collections::HashMap;

    /// Number of semistandard tableaux of shape `λ` with entries in `1..=n`.
    fn count_ssyt(lambda: &[u32], n: u32) -> u64 {
        let cells: Vec<(usize, usize)> = lambda
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (0..r as usize).map(move |j| (i, j)))
            .collect();
        let mut grid =
            vec![vec![0u32; lambda.first().copied().unwrap_or(0) as usize]; lambda.len()];
        fn fill(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, n: u32) -> u64 {
            if k == cells.len() {
                return 1;
            }
            let (i, j) = cells[k];
            let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
            let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
            let mut total = 0;
            for v in lo_row.max(lo_col)..=n {
                grid[i][j] = v;
                total += fill(k + 1, cells, grid, n);
            }
            grid[i][j] = 0;
            total
        }
        fill(0, &cells, &mut grid, n)
    }

    /// Number of ways to write `v` as a non-negative combination of positive roots.
    fn partition_count(
        v: Weight,
        pos: &[Weight],
        memo: &mut HashMap<(Weight, usize), i64>,
        k: usize,
    ) -> i64 {
        let r = RootSystemG2::new();
        let (x, y) = r.simple_coords(v).unwrap();
        if x < 0 || y < 0 {
            return 0;
        }
        if k == pos.len() {
            return i64::from(v.is_zero());
        }
        if let Some(&c) = memo.get(&(v, k)) {
            return c;
        }
        let mut total = 0;
        let mut rest = v;
        loop {
            let (x, y) = r.simple_coords(rest).unwrap();
            if x < 0 || y < 0 {
                break;
            }
            total += partition_count(rest, pos, memo, k + 1);
            rest = rest - pos[k];
        }
        memo.insert((v, k), total);
        total
    }

    /// Σ over weights of their Kostant multiplicities.
    fn dim_by_kostant(a: u32, b: u32) -> i64 {
        let r = RootSystemG2::new();
        let pos = r.positive();
        let lambda = (a as i64) * r.fundamental[0] + (b as i64) * r.fundamental[1];
        let rho = r.rho();
        let weyl = r.weyl_group();
        let mut memo = HashMap::new();
        let (lx, ly) = r.simple_coords(lambda).unwrap();
        let mut total = 0;
        // weights lie in λ - {x α₁ + y α₂ : 0 ≤ x ≤ 2lx, 0 ≤ y ≤ 2ly}
        for x in 0..=2 * lx {
            for y in 0..=2 * ly {
                let mu = lambda - x * r.simple[0] - y * r.simple[1];
                let m: i64 = weyl
                    .iter()
                    .map(|(s, img)| {
                        s * partition_count(
                            weyl_apply(img, lambda + rho) - (mu + rho),
                            &pos,
                            &mut memo,
                            0,
                        )
                    })
                    .sum();
                total += m;
            }
        }
        total
    }

    #[test]
    fn schur_examples() {
        assert_eq!(gl7_schur_dim(&[1]), 7);
        assert_eq!(gl7_schur_dim(&[1, 1, 1]), 35);
        assert_eq!(gl7_schur_dim(&[2]), 28);
        assert_eq!(gl7_schur_dim(&[1; 8]), 0);
        assert_eq!(gl7_schur_dim(&[]), 1);
    }

    #[test]
    fn schur_matches_tableaux_count() {
        for a in 0..=3u32 {
            for b in 0..=a {
                for c in 0..=b {
                    for d in 0..=c {
                        let lambda: Vec<u32> =
                            [a, b, c, d].into_iter().filter(|&x| x > 0).collect();
                        assert_eq!(gl7_schur_dim(&lambda), count_ssyt(&lambda, 7), "{lambda:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn g2_examples() {
        assert_eq!(g2_irrep_dim(0, 0), 1);
        assert_eq!(g2_irrep_dim(1, 0), 7);
        assert_eq!(g2_irrep_dim(0, 1), 14);
        assert_eq!(g2_irrep_dim(2, 0), 27);
    }

    #[test]
    fn g2_matches_closed_form_and_kostant() {
        for a in 0..=6u32 {
            for b in 0..=2u32 {
                let (x, y) = (a as u64, b as u64);
                let closed = (x + 1)
                    * (y + 1)
                    * (x + y + 2)
                    * (x + 2 * y + 3)
                    * (x + 3 * y + 4)
                    * (2 * x + 3 * y + 5)
                    / 120;
                assert_eq!(g2_irrep_dim(a, b), closed, "({a},{b})");
                if a + 3 * b <= 6 {
                    assert_eq!(g2_irrep_dim(a, b) as i64, dim_by_kostant(a, b), "({a},{b})");
                }
            }
        }
    }
}
