use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Rows of the box.
pub const ROWS: usize = 4;
/// Columns of the box.
pub const COLS: u8 = 3;

/// Partition with at most four parts, each at most three.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition43([u8; ROWS]);

impl Partition43 {
    pub const EMPTY: Self = Self([0; ROWS]);
    pub const FULL: Self = Self([COLS; ROWS]);

    pub fn new(parts: &[u8]) -> Result<Self> {
        let bad = || Error::Parse(format!("{parts:?} does not fit the 4x3 box"));
        if parts.len() > ROWS
            || parts.iter().any(|&p| p > COLS)
            || parts.windows(2).any(|w| w[0] < w[1])
        {
            return Err(bad());
        }
        let mut a = [0; ROWS];
        a[..parts.len()].copy_from_slice(parts);
        Ok(Self(a))
    }

    /// All 35 partitions, by size then reverse lexicographic order.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::new();
        for a in 0..=COLS {
            for b in 0..=a {
                for c in 0..=b {
                    for d in 0..=c {
                        out.push(Self([a, b, c, d]));
                    }
                }
            }
        }
        out.sort_by(|x, y| x.size().cmp(&y.size()).then(y.0.cmp(&x.0)));
        out
    }

    pub fn of_size(n: u32) -> Vec<Self> {
        Self::all().into_iter().filter(|p| p.size() == n).collect()
    }

    pub fn parts(&self) -> &[u8; ROWS] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(|&p| u32::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    pub fn is_empty(&self) -> bool {
        self.0[0] == 0
    }

    /// Complement in the box, rotated: the Poincaré dual index.
    pub fn complement(&self) -> Self {
        let mut a = [0; ROWS];
        for i in 0..ROWS {
            a[i] = COLS - self.0[ROWS - 1 - i];
        }
        Self(a)
    }

    /// Shapes obtained by adding one box.
    pub fn add_box(&self) -> Vec<Self> {
        (0..ROWS)
            .filter(|&i| self.0[i] < COLS && (i == 0 || self.0[i - 1] > self.0[i]))
            .map(|i| {
                let mut a = self.0;
                a[i] += 1;
                Self(a)
            })
            .collect()
    }

    /// Shapes obtained by adding a horizontal strip of `k` boxes (Pieri).
    pub fn add_horizontal_strip(&self, k: u8) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = [0u8; ROWS];
        fn rec(
            p: &[u8; ROWS],
            i: usize,
            left: u8,
            cur: &mut [u8; ROWS],
            out: &mut Vec<Partition43>,
        ) {
            if i == ROWS {
                if left == 0 {
                    out.push(Partition43(*cur));
                }
                return;
            }
            let cap = if i == 0 { COLS } else { p[i - 1] };
            for add in 0..=left.min(cap - p[i]) {
                cur[i] = p[i] + add;
                rec(p, i + 1, left - add, cur, out);
            }
        }
        rec(&self.0, 0, k, &mut cur, &mut out);
        out
    }

    pub fn tau_name(&self) -> String {
        format!("tau_{self}")
    }
}

impl fmt::Display for Partition43 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for p in self.0.iter().filter(|&&p| p > 0) {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition43 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix("tau_")
            .or_else(|| s.strip_prefix("τ"))
            .unwrap_or(s);
        if s == "0" || s.is_empty() {
            return Ok(Self::EMPTY);
        }
        let parts: Option<Vec<u8>> = s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect();
        Self::new(&parts.ok_or_else(|| Error::Parse(format!("partition {s:?}")))?)
    }
}

impl Serialize for Partition43 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0
            .iter()
            .copied()
            .filter(|&p| p > 0)
            .collect::<Vec<u8>>()
            .serialize(s)
    }
}

/// Accepts `[2,1]` and, for map keys, `"21"`.
impl<'de> Deserialize<'de> for Partition43 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Parts(Vec<u8>),
            Name(String),
        }
        match Repr::deserialize(d)? {
            Repr::Parts(v) => Self::new(&v),
            Repr::Name(s) => s.parse(),
        }
        .map_err(serde::de::Error::custom)
    }
}

/// Serializes a map keyed by partitions with the keys written as `"21"`.
pub fn serialize_keyed<S: Serializer, V: Serialize>(
    m: &std::collections::BTreeMap<Partition43, V>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(k, v)| (k.to_string(), v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_counts() {
        let all = Partition43::all();
        assert_eq!(all.len(), 35);
        let sizes: Vec<usize> = (0..=12).map(|n| Partition43::of_size(n).len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 3, 4, 4, 5, 4, 4, 3, 2, 1, 1]);
        assert_eq!(
            (1..=8)
                .map(|n| Partition43::of_size(n).len())
                .sum::<usize>(),
            27
        );
    }

    #[test]
    fn parse_display_serde() {
        let p: Partition43 = "tau_3211".parse().unwrap();
        assert_eq!(p.to_string(), "3211");
        assert_eq!(serde_json::to_string(&p).unwrap(), "[3,2,1,1]");
        assert_eq!(
            serde_json::from_str::<Partition43>("[2,2]").unwrap(),
            "22".parse().unwrap()
        );
        assert_eq!(
            serde_json::from_str::<Partition43>("\"22\"").unwrap(),
            "22".parse().unwrap()
        );
        assert!("4".parse::<Partition43>().is_err());
        assert!("11111".parse::<Partition43>().is_err());
        assert!("12".parse::<Partition43>().is_err());
    }

    #[test]
    fn complement_is_an_involution() {
        for p in Partition43::all() {
            assert_eq!(p.complement().complement(), p);
            assert_eq!(p.size() + p.complement().size(), 12);
        }
    }

    #[test]
    fn pieri_strips() {
        let p: Partition43 = "21".parse().unwrap();
        let one: Vec<String> = p
            .add_horizontal_strip(1)
            .iter()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(one.len(), 3);
        let mut a = p.add_box();
        let mut b = p.add_horizontal_strip(1);
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert!(Partition43::FULL.add_box().is_empty());
    }
}
