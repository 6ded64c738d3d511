//! Reference tables for the verification suite, stored as JSON under
//! `fixtures/` and embedded at build time. `CAYLEY_FIXTURES` names a
//! directory whose files replace the embedded ones.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::ambient::Partition43;
use crate::cayley::Label;
use crate::equivariant::SchubertVector;
use crate::exact::{parse_poly, HomogPoly};
use crate::octonions::OrbitType;
use crate::weightmodel::Weight;
use crate::{Error, Result};

const EMBEDDED: &[(&str, &str)] = &[
    ("manifest.json", include_str!("../fixtures/manifest.json")),
    ("algebra.json", include_str!("../fixtures/algebra.json")),
    ("bruhat.json", include_str!("../fixtures/bruhat.json")),
    ("chern.json", include_str!("../fixtures/chern.json")),
    ("degrees.json", include_str!("../fixtures/degrees.json")),
    (
        "figure_sigma1.json",
        include_str!("../fixtures/figure_sigma1.json"),
    ),
    (
        "figure_sigma2.json",
        include_str!("../fixtures/figure_sigma2.json"),
    ),
    (
        "fixed_points.json",
        include_str!("../fixtures/fixed_points.json"),
    ),
    ("hilbert.json", include_str!("../fixtures/hilbert.json")),
    (
        "multiplication.json",
        include_str!("../fixtures/multiplication.json"),
    ),
    (
        "presentation.json",
        include_str!("../fixtures/presentation.json"),
    ),
    (
        "restriction.json",
        include_str!("../fixtures/restriction.json"),
    ),
    ("tangents.json", include_str!("../fixtures/tangents.json")),
];

pub const ENV_VAR: &str = "CAYLEY_FIXTURES";

#[derive(Clone, Debug, Deserialize)]
pub struct Manifest {
    pub version: u32,
    pub files: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct AlgebraFixture {
    pub g2_dimension: usize,
    pub stabilizer_dimensions: BTreeMap<String, usize>,
    pub orbit_types: BTreeMap<String, OrbitType>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct RestrictionFixture {
    pub entries: BTreeMap<Partition43, SchubertVector>,
    pub index: u64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ChernFixture {
    pub classes: Vec<SchubertVector>,
    pub dual_coefficients: Vec<i64>,
    pub dual_degree: i64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct HilbertFixture {
    pub closed_form: String,
    pub span_dimension: i64,
    pub quadrics: i64,
    pub degree: i64,
    pub betti: Vec<usize>,
    pub series_kmax: i64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct PresentationFixture {
    pub generator: Label,
    pub relations: Vec<Vec<(i64, u32, u32)>>,
}

/// One printed row `a · b = value`; rows may repeat.
#[derive(Clone, Debug, Deserialize)]
pub struct ProductRow(pub Label, pub Label, pub SchubertVector);

#[derive(Clone, Debug)]
pub struct Fixtures {
    pub version: u32,
    /// Where the tables came from: `embedded` or a directory.
    pub source: String,
    pub algebra: AlgebraFixture,
    pub fixed_points: BTreeMap<Label, Vec<Weight>>,
    /// In printed order.
    pub tangents: Vec<(Label, Vec<Weight>)>,
    pub sigma1: BTreeMap<Label, HomogPoly>,
    pub sigma2: BTreeMap<Label, HomogPoly>,
    pub bruhat: BTreeMap<Label, SchubertVector>,
    pub degrees: BTreeMap<Label, i64>,
    pub multiplication: Vec<ProductRow>,
    pub presentation: PresentationFixture,
    pub restriction: RestrictionFixture,
    pub chern: ChernFixture,
    pub hilbert: HilbertFixture,
}

fn fixture_error(name: &str, reason: impl ToString) -> Error {
    Error::Fixture {
        name: name.to_string(),
        reason: reason.to_string(),
    }
}

struct Loader {
    dir: Option<PathBuf>,
}

impl Loader {
    fn text(&self, name: &str) -> Result<String> {
        match &self.dir {
            Some(d) => std::fs::read_to_string(d.join(name)).map_err(|e| fixture_error(name, e)),
            None => EMBEDDED
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, t)| t.to_string())
                .ok_or_else(|| fixture_error(name, "not embedded")),
        }
    }

    fn json<T: DeserializeOwned>(&self, name: &str) -> Result<T> {
        serde_json::from_str(&self.text(name)?).map_err(|e| fixture_error(name, e))
    }

    /// JSON object keyed by labels, each value parsed by `f`, in file order.
    fn ordered<T>(
        &self,
        name: &str,
        f: impl Fn(&serde_json::Value) -> Result<T>,
    ) -> Result<Vec<(Label, T)>> {
        let v: serde_json::Value =
            serde_json::from_str(&self.text(name)?).map_err(|e| fixture_error(name, e))?;
        let obj = v
            .as_object()
            .ok_or_else(|| fixture_error(name, "expected an object"))?;
        obj.iter()
            .map(|(k, v)| {
                Ok((
                    k.parse::<Label>().map_err(|e| fixture_error(name, e))?,
                    f(v).map_err(|e| fixture_error(name, e))?,
                ))
            })
            .collect()
    }
}

fn weights(v: &serde_json::Value) -> Result<Vec<Weight>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected an array of weights".into()))?;
    arr.iter()
        .map(|w| {
            Weight::parse(
                w.as_str()
                    .ok_or_else(|| Error::Parse("expected a string".into()))?,
            )
        })
        .collect()
}

fn poly(v: &serde_json::Value) -> Result<HomogPoly> {
    parse_poly(
        v.as_str()
            .ok_or_else(|| Error::Parse("expected a string".into()))?,
    )
}

impl Fixtures {
    /// Tables from `CAYLEY_FIXTURES` if set, the embedded copies otherwise.
    pub fn load() -> Result<Self> {
        match std::env::var_os(ENV_VAR) {
            Some(d) => Self::from_dir(Some(PathBuf::from(d))),
            None => Self::from_dir(None),
        }
    }

    pub fn embedded() -> Result<Self> {
        Self::from_dir(None)
    }

    pub fn from_dir(dir: Option<PathBuf>) -> Result<Self> {
        let source = dir
            .as_ref()
            .map_or_else(|| "embedded".to_string(), |d| d.display().to_string());
        let l = Loader { dir };
        let manifest: Manifest = l.json("manifest.json")?;
        Ok(Self {
            version: manifest.version,
            source,
            algebra: l.json("algebra.json")?,
            fixed_points: l
                .ordered("fixed_points.json", weights)?
                .into_iter()
                .collect(),
            tangents: l.ordered("tangents.json", weights)?,
            sigma1: l.ordered("figure_sigma1.json", poly)?.into_iter().collect(),
            sigma2: l.ordered("figure_sigma2.json", poly)?.into_iter().collect(),
            bruhat: l.json("bruhat.json")?,
            degrees: l.json("degrees.json")?,
            multiplication: l.json("multiplication.json")?,
            presentation: l.json("presentation.json")?,
            restriction: l.json("restriction.json")?,
            chern: l.json("chern.json")?,
            hilbert: l.json("hilbert.json")?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_parse() {
        let f = Fixtures::embedded().unwrap();
        assert_eq!(f.version, 1);
        assert_eq!(f.fixed_points.len(), 15);
        assert_eq!(f.tangents.len(), 15);
        assert!(f.tangents.iter().all(|(_, w)| w.len() == 8));
        assert_eq!(f.tangents[0].0, "0".parse().unwrap());
        assert_eq!(f.sigma1.len(), 15);
        assert_eq!(f.sigma2.len(), 15);
        assert_eq!(f.bruhat.len(), 14);
        assert_eq!(f.degrees.len(), 15);
        assert_eq!(f.multiplication.len(), 36);
        assert_eq!(f.restriction.entries.len(), 27);
        assert_eq!(f.chern.classes.len(), 9);
        assert_eq!(f.hilbert.betti.iter().sum::<usize>(), 15);
    }

    #[test]
    fn manifest_lists_every_embedded_file() {
        let m: Manifest = serde_json::from_str(EMBEDDED[0].1).unwrap();
        let mut listed = m.files.clone();
        listed.push("manifest.json".into());
        listed.sort();
        let mut embedded: Vec<String> = EMBEDDED.iter().map(|(n, _)| n.to_string()).collect();
        embedded.sort();
        assert_eq!(listed, embedded);
    }

    #[test]
    fn directory_override_reads_files() {
        let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
        let f = Fixtures::from_dir(Some(dir)).unwrap();
        assert_eq!(f.degrees[&"2'".parse().unwrap()], 100);
        assert!(Fixtures::from_dir(Some(PathBuf::from("/nonexistent"))).is_err());
    }
}
