use serde::{Deserialize, Serialize};

use super::label::Label;
use super::tangent::tangent_at;
use crate::weightmodel::Weight;
use crate::{Error, Result};

/// One-parameter subgroup, recorded by its pairings with `α` and `β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OnePs {
    pub alpha: i64,
    pub beta: i64,
}

/// The chamber `β > α > 0 > γ` in which codimensions equal label numbers.
pub const CHAMBER: OnePs = OnePs { alpha: 1, beta: 2 };

impl OnePs {
    pub const fn new(alpha: i64, beta: i64) -> Self {
        Self { alpha, beta }
    }

    pub fn pair(self, w: Weight) -> i64 {
        w.pair((self.alpha, self.beta))
    }

    pub fn is_generic(self) -> bool {
        Label::ALL
            .iter()
            .all(|&l| tangent_at(l).iter().all(|&w| self.pair(w) != 0))
    }

    fn require_generic(self) -> Result<()> {
        if self.is_generic() {
            Ok(())
        } else {
            Err(Error::NonGenericChamber(self.alpha, self.beta))
        }
    }

    /// Number of tangent weights at `l` that pair negatively.
    pub fn codim(self, l: Label) -> Result<usize> {
        self.require_generic()?;
        Ok(tangent_at(l).iter().filter(|&&w| self.pair(w) < 0).count())
    }

    /// Tangent weights at `l` that pair negatively.
    pub fn negative_weights(self, l: Label) -> Vec<Weight> {
        tangent_at(l)
            .iter()
            .copied()
            .filter(|&w| self.pair(w) < 0)
            .collect()
    }

    pub fn betti_profile(self) -> Result<[usize; 9]> {
        let mut out = [0; 9];
        for l in Label::ALL {
            out[self.codim(l)?] += 1;
        }
        Ok(out)
    }

    /// Checks that codimensions reproduce the label numbers.
    pub fn verify_labels(self) -> Result<()> {
        for l in Label::ALL {
            if self.codim(l)? != l.codim as usize {
                return Err(Error::ChamberLabels(self.alpha, self.beta));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::tangent::S3Element;

    #[test]
    fn betti_numbers_in_the_chamber() {
        assert_eq!(
            CHAMBER.betti_profile().unwrap(),
            [1, 1, 2, 2, 3, 2, 2, 1, 1]
        );
        CHAMBER.verify_labels().unwrap();
        assert_eq!(CHAMBER.codim(Label::new(4, 2)).unwrap(), 4);
        assert_eq!(CHAMBER.betti_profile().unwrap().iter().sum::<usize>(), 15);
    }

    #[test]
    fn swapped_chamber_relabels_by_symmetry() {
        let swapped = OnePs::new(2, 1);
        assert_eq!(
            swapped.betti_profile().unwrap(),
            [1, 1, 2, 2, 3, 2, 2, 1, 1]
        );
        let swap = S3Element {
            swap: true,
            rotations: 0,
        };
        for l in Label::ALL {
            assert_eq!(
                swapped.codim(swap.apply_label(l)).unwrap(),
                l.codim as usize
            );
        }
        assert!(matches!(
            swapped.verify_labels(),
            Err(Error::ChamberLabels(2, 1))
        ));
    }

    #[test]
    fn degenerate_subgroups_are_rejected() {
        assert!(matches!(
            OnePs::new(1, 1).betti_profile(),
            Err(Error::NonGenericChamber(1, 1))
        ));
        assert!(matches!(
            OnePs::new(1, 0).codim(Label::new(0, 0)),
            Err(Error::NonGenericChamber(..))
        ));
    }
}
