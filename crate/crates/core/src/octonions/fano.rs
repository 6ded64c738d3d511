use std::sync::OnceLock;

use crate::{Error, Result};

/// Oriented lines `(i, j, k)` meaning `e_i e_j = e_k`, plus the derived
/// signed multiplication table on `e0, …, e7`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoTable {
    lines: [[usize; 3]; 7],
    /// `table[i][j] = (s, k)` with `e_i e_j = s·e_k`.
    table: [[(i8, usize); 8]; 8],
}

impl FanoTable {
    pub const STANDARD_LINES: [[usize; 3]; 7] = [
        [1, 2, 3],
        [2, 4, 6],
        [4, 1, 7],
        [3, 4, 5],
        [1, 5, 6],
        [2, 5, 7],
        [6, 3, 7],
    ];

    /// Relations `e_i e_j = s·e_k` that any accepted orientation must satisfy.
    pub const REQUIRED: [(usize, usize, i8, usize); 5] = [
        (1, 2, 1, 3),
        (3, 4, 1, 5),
        (2, 4, 1, 6),
        (1, 4, -1, 7),
        (5, 6, 1, 1),
    ];

    pub fn new(lines: [[usize; 3]; 7]) -> Result<Self> {
        let mut seen = [[false; 8]; 8];
        for l in &lines {
            for (x, y) in [(l[0], l[1]), (l[1], l[2]), (l[0], l[2])] {
                if !(1..=7).contains(&x) || !(1..=7).contains(&y) || x == y {
                    return Err(Error::FanoTable(format!("bad line {l:?}")));
                }
                if seen[x][y] {
                    return Err(Error::FanoTable(format!("pair {{{x},{y}}} covered twice")));
                }
                seen[x][y] = true;
                seen[y][x] = true;
            }
        }

        let mut table = [[(0i8, 0usize); 8]; 8];
        for (i, row) in table.iter_mut().enumerate() {
            row[0] = (1, i);
        }
        for j in 0..8 {
            table[0][j] = (1, j);
        }
        for i in 1..8 {
            table[i][i] = (-1, 0);
        }
        for &[a, b, c] in &lines {
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                table[x][y] = (1, z);
                table[y][x] = (-1, z);
            }
        }

        let t = Self { lines, table };
        for (i, j, s, k) in Self::REQUIRED {
            if t.product(i, j) != (s, k) {
                return Err(Error::FanoTable(format!("e{i}e{j} ≠ {s}·e{k}")));
            }
        }
        Ok(t)
    }

    pub fn standard() -> &'static FanoTable {
        static T: OnceLock<FanoTable> = OnceLock::new();
        T.get_or_init(|| FanoTable::new(Self::STANDARD_LINES).expect("standard table is valid"))
    }

    pub fn lines(&self) -> &[[usize; 3]; 7] {
        &self.lines
    }

    pub fn product(&self, i: usize, j: usize) -> (i8, usize) {
        self.table[i][j]
    }

    /// Sign of `(i, j, k)` relative to an oriented line, 0 when not a line.
    pub fn orientation(&self, i: usize, j: usize, k: usize) -> i8 {
        if i == 0 || j == 0 || k == 0 || i == j {
            return 0;
        }
        match self.product(i, j) {
            (s, z) if z == k => s,
            _ => 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn each_pair_on_exactly_one_line() {
        let t = FanoTable::standard();
        for i in 1..8 {
            for j in 1..8 {
                if i != j {
                    let count = t
                        .lines()
                        .iter()
                        .filter(|l| l.contains(&i) && l.contains(&j))
                        .count();
                    assert_eq!(count, 1, "pair {i},{j}");
                }
            }
        }
    }

    #[test]
    fn imaginary_units_square_to_minus_one() {
        let t = FanoTable::standard();
        for i in 1..8 {
            assert_eq!(t.product(i, i), (-1, 0));
        }
    }

    #[test]
    fn rejects_tables_breaking_required_relations() {
        // reversing the orientation of the line through 1, 2, 3 breaks e1e2 = e3
        let mut lines = FanoTable::STANDARD_LINES;
        lines[0] = [2, 1, 3];
        assert!(matches!(FanoTable::new(lines), Err(Error::FanoTable(_))));
        let mut lines = FanoTable::STANDARD_LINES;
        lines[1] = [1, 2, 4];
        assert!(FanoTable::new(lines).is_err());
    }
}
