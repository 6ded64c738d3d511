use super::weight::{Weight, ALPHA, BETA, GAMMA};

/// Invariant form with `(α,α) = 2`, `(α,β) = -1`; short roots have length² 2.
pub fn inner(x: Weight, y: Weight) -> i64 {
    2 * x.a * y.a - x.a * y.b - x.b * y.a + 2 * x.b * y.b
}

/// Root datum of G₂ with the base `α₁ = α` (short), `α₂ = β-α` (long).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemG2 {
    pub short: [Weight; 6],
    pub long: [Weight; 6],
    pub simple: [Weight; 2],
    pub fundamental: [Weight; 2],
    /// Highest root `3α₁+2α₂`.
    pub psi: Weight,
    /// Highest short root `2α₁+α₂`.
    pub theta: Weight,
}

impl RootSystemG2 {
    pub fn new() -> Self {
        let short = [ALPHA, -ALPHA, BETA, -BETA, GAMMA, -GAMMA];
        let long = [
            ALPHA - BETA,
            BETA - ALPHA,
            ALPHA - GAMMA,
            GAMMA - ALPHA,
            BETA - GAMMA,
            GAMMA - BETA,
        ];
        let simple = [ALPHA, BETA - ALPHA];
        let theta = 2 * simple[0] + simple[1];
        let psi = 3 * simple[0] + 2 * simple[1];
        Self {
            short,
            long,
            simple,
            fundamental: [theta, psi],
            psi,
            theta,
        }
    }

    pub fn roots(&self) -> impl Iterator<Item = Weight> + '_ {
        self.short.iter().chain(&self.long).copied()
    }

    /// Roots that are non-negative combinations of the simple roots.
    pub fn positive(&self) -> Vec<Weight> {
        self.roots()
            .filter(|&r| self.simple_coords(r).is_some_and(|(x, y)| x >= 0 && y >= 0))
            .collect()
    }

    /// Coordinates of `w` in the simple roots, when integral.
    pub fn simple_coords(&self, w: Weight) -> Option<(i64, i64)> {
        // w = x·α + y·(β-α) ⇒ y = b, x = a + b
        let _ = self;
        Some((w.a + w.b, w.b))
    }

    pub fn rho(&self) -> Weight {
        self.fundamental[0] + self.fundamental[1]
    }

    /// Reflection in the hyperplane orthogonal to `r`.
    pub fn reflect(r: Weight, v: Weight) -> Weight {
        let k = 2 * inner(v, r) / inner(r, r);
        v - k * r
    }

    /// The twelve Weyl group elements as `(sign, action)` pairs, listed by the
    /// image of `(α, β)`.
    pub fn weyl_group(&self) -> Vec<(i64, [Weight; 2])> {
        let mut out: Vec<(i64, [Weight; 2])> = vec![(1, [ALPHA, BETA])];
        let mut frontier = out.clone();
        while let Some((sign, img)) = frontier.pop() {
            for s in self.simple {
                let next = [Self::reflect(s, img[0]), Self::reflect(s, img[1])];
                if !out.iter().any(|(_, x)| *x == next) {
                    out.push((-sign, next));
                    frontier.push((-sign, next));
                }
            }
        }
        out
    }
}

impl Default for RootSystemG2 {
    fn default() -> Self {
        Self::new()
    }
}

/// Apply a Weyl element given by the images of `α` and `β`.
pub fn weyl_apply(img: &[Weight; 2], v: Weight) -> Weight {
    v.a * img[0] + v.b * img[1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts_and_lengths() {
        let r = RootSystemG2::new();
        assert!(r.short.iter().all(|&x| inner(x, x) == 2));
        assert!(r.long.iter().all(|&x| inner(x, x) == 6));
        assert_eq!(r.positive().len(), 6);
    }

    #[test]
    fn highest_roots() {
        let r = RootSystemG2::new();
        assert_eq!(r.theta, -GAMMA);
        assert_eq!(r.psi, BETA - GAMMA);
        assert_eq!(r.fundamental, [-GAMMA, Weight::new(1, 2)]);
        // fundamental weights are dual to the simple coroots
        for (i, w) in r.fundamental.iter().enumerate() {
            for (j, s) in r.simple.iter().enumerate() {
                assert_eq!(2 * inner(*w, *s) / inner(*s, *s), i64::from(i == j));
            }
        }
    }

    #[test]
    fn positive_roots() {
        let mut p = RootSystemG2::new().positive();
        p.sort();
        let mut want = vec![
            ALPHA,
            BETA - ALPHA,
            BETA,
            -GAMMA,
            ALPHA - GAMMA,
            BETA - GAMMA,
        ];
        want.sort();
        assert_eq!(p, want);
    }

    #[test]
    fn weyl_group_has_order_twelve() {
        let r = RootSystemG2::new();
        let w = r.weyl_group();
        assert_eq!(w.len(), 12);
        assert_eq!(w.iter().filter(|(s, _)| *s == 1).count(), 6);
        for (_, img) in &w {
            let mut roots: Vec<_> = r.roots().map(|x| weyl_apply(img, x)).collect();
            let mut all: Vec<_> = r.roots().collect();
            roots.sort();
            all.sort();
            assert_eq!(roots, all);
        }
    }
}
