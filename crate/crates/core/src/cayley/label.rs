use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Vertex name `k`, `k'` or `k''`; the number is the codimension of the cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub codim: u8,
    pub primes: u8,
}

impl Label {
    pub const fn new(codim: u8, primes: u8) -> Self {
        Self { codim, primes }
    }

    /// All fifteen labels ordered by codimension, then primes.
    pub const ALL: [Label; 15] = [
        Label::new(0, 0),
        Label::new(1, 0),
        Label::new(2, 0),
        Label::new(2, 1),
        Label::new(3, 0),
        Label::new(3, 1),
        Label::new(4, 0),
        Label::new(4, 1),
        Label::new(4, 2),
        Label::new(5, 0),
        Label::new(5, 1),
        Label::new(6, 0),
        Label::new(6, 1),
        Label::new(7, 0),
        Label::new(8, 0),
    ];

    pub fn index(self) -> usize {
        Self::ALL
            .iter()
            .position(|&l| l == self)
            .expect("label in table")
    }

    /// Image under the central symmetry of the graph (codim `k` ↔ `8-k`).
    pub fn dual(self) -> Self {
        Label::new(8 - self.codim, self.primes)
    }

    /// Schubert class name, e.g. `sigma_2'`.
    pub fn sigma_name(self) -> String {
        format!("sigma_{self}")
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.codim, "'".repeat(self.primes as usize))
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches("sigma_");
        let digits: String = s.chars().take_while(char::is_ascii_digit).collect();
        let rest = &s[digits.len()..];
        let primes = rest.chars().try_fold(0u8, |acc, c| match c {
            '\'' | '′' => Some(acc + 1),
            '″' => Some(acc + 2),
            _ => None,
        });
        let codim: Option<u8> = digits.parse().ok();
        match (codim, primes) {
            (Some(c), Some(p)) if Self::ALL.contains(&Label::new(c, p)) => Ok(Label::new(c, p)),
            _ => Err(Error::Parse(format!("unknown label {s:?}"))),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
