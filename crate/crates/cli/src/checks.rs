use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use cayley_core::ambient::{
    image_index, lr_multiply, restriction_by_localization, restriction_table, AmbientClass,
    Partition43, RestrictionTable,
};
use cayley_core::cayley::{
    enumerate_fixed_points, gkm_graph, tangent_at, Label, OnePs, S3Element, CHAMBER,
};
use cayley_core::equivariant::{
    ab_integrate, hyperplane_class, negative_product, schubert_classes, schubert_ring,
    solve_all_classes, verify_ring_presentation, EqClass, Ring, SchubertClasses, SchubertRing,
    SchubertVector, RELATION_ONE, RELATION_TWO,
};
use cayley_core::exact::{int, rational_string, to_i64, HomogPoly};
use cayley_core::fixtures::{Fixtures, ProductRow};
use cayley_core::invariants::{
    chern_classes, chern_classes_by_restriction, closed_form_hilbert, dual_degree,
    equivariant_series_check, hilbert_polynomial, quadric_count, ChernData,
};
use cayley_core::octonions::{
    classify, g2_basis, g2_stabilizer_dim, h0, h1, h2, im_product_via_form,
    volume_identity_constant, Octonion, Subspace,
};
use cayley_core::weightmodel::{Weight, ALPHA, BETA, GAMMA};
use cayley_core::{Error, Result};
use serde_json::{json, Value};

use crate::report::{CheckResult, Report, Source, Status, REPORT_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Check {
    Octonion,
    Orbits,
    FixedPoints,
    Tangents,
    Betti,
    Gkm,
    Classes,
    Monk,
    Degrees,
    Mult,
    Ring,
    Restriction,
    Index,
    Chern,
    Dual,
    Hilbert,
    Series,
    All,
}

impl Check {
    pub const GROUPS: [Check; 17] = [
        Check::Octonion,
        Check::Orbits,
        Check::FixedPoints,
        Check::Tangents,
        Check::Betti,
        Check::Gkm,
        Check::Classes,
        Check::Monk,
        Check::Degrees,
        Check::Mult,
        Check::Ring,
        Check::Restriction,
        Check::Index,
        Check::Chern,
        Check::Dual,
        Check::Hilbert,
        Check::Series,
    ];
}

fn sorted_names(ws: &[Weight]) -> Vec<String> {
    let mut v = ws.to_vec();
    v.sort();
    v.iter().map(Weight::to_string).collect()
}

fn sorted_weights(ws: &[Weight]) -> Vec<Weight> {
    let mut v = ws.to_vec();
    v.sort();
    v
}

/// Runs checks against the fixtures; heavy objects are computed once.
pub struct Verifier {
    pub chamber: OnePs,
    pub fixtures: Fixtures,
    /// Overrides the sample range of `hilbert` and `series`.
    pub kmax: Option<i64>,
    classes: OnceLock<Result<SchubertClasses>>,
    ring: OnceLock<Result<SchubertRing>>,
    restriction: OnceLock<Result<RestrictionTable>>,
    chern: OnceLock<Result<ChernData>>,
}

impl Verifier {
    pub fn new(chamber: OnePs, fixtures: Fixtures, kmax: Option<i64>) -> Self {
        Self {
            chamber,
            fixtures,
            kmax,
            classes: OnceLock::new(),
            ring: OnceLock::new(),
            restriction: OnceLock::new(),
            chern: OnceLock::new(),
        }
    }

    pub fn classes(&self) -> Result<&SchubertClasses> {
        self.classes
            .get_or_init(|| {
                if self.chamber == CHAMBER {
                    schubert_classes().cloned()
                } else {
                    solve_all_classes(self.chamber)
                }
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn ring(&self) -> Result<&SchubertRing> {
        self.ring
            .get_or_init(|| {
                if self.chamber == CHAMBER {
                    schubert_ring().cloned()
                } else {
                    SchubertRing::build(self.classes()?)
                }
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn restriction(&self) -> Result<&RestrictionTable> {
        self.restriction
            .get_or_init(|| restriction_table(self.ring()?))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn chern(&self) -> Result<&ChernData> {
        self.chern
            .get_or_init(|| chern_classes(self.classes()?))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn report(&self, check: Check) -> Report {
        Report {
            version: REPORT_VERSION,
            chamber: [self.chamber.alpha, self.chamber.beta],
            fixtures: self.fixtures.source.clone(),
            results: self.run(check),
        }
    }

    pub fn run(&self, check: Check) -> Vec<CheckResult> {
        let group = |name: &str, r: Result<Vec<CheckResult>>| match r {
            Ok(v) => v,
            Err(e) => vec![CheckResult::error(name, e)],
        };
        match check {
            Check::All => Check::GROUPS.iter().flat_map(|&c| self.run(c)).collect(),
            Check::Octonion => group("octonion", self.octonion()),
            Check::Orbits => group("orbits", self.orbits()),
            Check::FixedPoints => group("fixed_points", self.fixed_points()),
            Check::Tangents => group("tangents", Ok(self.tangents())),
            Check::Betti => group("betti", self.betti()),
            Check::Gkm => group("gkm", Ok(self.gkm())),
            Check::Classes => group("classes", self.class_checks()),
            Check::Monk => group("monk", self.monk()),
            Check::Degrees => group("degrees", self.degrees()),
            Check::Mult => group("mult", self.mult()),
            Check::Ring => group("ring", self.ring_checks()),
            Check::Restriction => group("restriction", self.restriction_checks()),
            Check::Index => group("index", self.index()),
            Check::Chern => group("chern", self.chern_checks()),
            Check::Dual => group("dual", self.dual()),
            Check::Hilbert => group("hilbert", self.hilbert()),
            Check::Series => group("series", self.series()),
        }
    }

    fn octonion(&self) -> Result<Vec<CheckResult>> {
        let basis: Vec<Octonion> = (0..8).map(Octonion::basis).collect();
        let mut sample = basis.clone();
        for i in 0..8 {
            for j in i + 1..8 {
                sample.push(&basis[i] + &basis[j]);
            }
        }
        let (mut alt, mut norm) = (0, 0);
        for x in &sample {
            for y in &sample {
                let xx = x * x;
                if &xx * y != x * &(x * y) || y * &xx != &(y * x) * x {
                    alt += 1;
                }
                if (x * y).norm() != &x.norm() * &y.norm() {
                    norm += 1;
                }
            }
        }
        let mut form = 0;
        for i in 1..8 {
            for j in 1..8 {
                if (&basis[i] * &basis[j]).im() != im_product_via_form(&basis[i], &basis[j])? {
                    form += 1;
                }
            }
        }
        let pairs = sample.len() * sample.len();
        Ok(vec![
            CheckResult::compare("octonion.alternativity", alt, 0, Source::Identity).with_note(
                format!("{pairs} pairs from basis elements and their pairwise sums"),
            ),
            CheckResult::compare("octonion.norm_multiplicative", norm, 0, Source::Identity)
                .with_note(format!("{pairs} pairs")),
            CheckResult::compare(
                "octonion.product_from_three_form",
                form,
                0,
                Source::Independent,
            )
            .with_note(
                "Im(xy) against the contraction of the three-form, 49 imaginary basis pairs",
            ),
            {
                let c = volume_identity_constant()?;
                CheckResult::flag(
                    "octonion.volume_constant_nonzero",
                    !c.is_zero(),
                    Source::Identity,
                    format!("c = {c}"),
                )
            },
            CheckResult::compare(
                "octonion.g2_dimension",
                g2_basis()?.len(),
                self.fixtures.algebra.g2_dimension,
                Source::Fixture,
            ),
        ])
    }

    fn orbits(&self) -> Result<Vec<CheckResult>> {
        let mut out = Vec::new();
        let subs: [(&str, Subspace); 3] = [("H0", h0()), ("H1", h1()), ("H2", h2())];
        let a = &self.fixtures.algebra;
        for (name, w) in subs {
            let stab = g2_stabilizer_dim(&w)?;
            let want = a.stabilizer_dimensions.get(name).copied();
            out.push(CheckResult::compare(
                format!("orbits.stabilizer.{name}"),
                stab,
                want,
                Source::Fixture,
            ));
            out.push(CheckResult::compare(
                format!("orbits.dimension.{name}"),
                14 - stab,
                want.map(|s| 14 - s),
                Source::Fixture,
            ));
            out.push(CheckResult::compare(
                format!("orbits.type.{name}"),
                classify(&w)?,
                a.orbit_types.get(name),
                Source::Fixture,
            ));
        }
        Ok(out)
    }

    fn fixed_points(&self) -> Result<Vec<CheckResult>> {
        let found = enumerate_fixed_points()?;
        let mut out = vec![CheckResult::compare(
            "fixed_points.count",
            found.len(),
            self.fixtures.fixed_points.len(),
            Source::Fixture,
        )
        .with_note("coordinate three-spaces tested: 35")];
        for p in &found {
            let want = self
                .fixtures
                .fixed_points
                .get(&p.label)
                .map(|w| sorted_names(w));
            out.push(CheckResult::compare(
                format!("fixed_points.{}", p.label),
                sorted_names(&p.triple_weights()),
                want,
                Source::Fixture,
            ));
        }
        Ok(out)
    }

    fn tangents(&self) -> Vec<CheckResult> {
        let printed: BTreeMap<Label, &Vec<Weight>> = self
            .fixtures
            .tangents
            .iter()
            .map(|(l, w)| (*l, w))
            .collect();
        let mut out = Vec::new();
        for (l, want) in &self.fixtures.tangents {
            let got = sorted_weights(tangent_at(*l));
            let mut r = CheckResult::compare(
                format!("tangents.{l}"),
                sorted_names(&got),
                sorted_names(want),
                Source::Fixture,
            );
            if r.status == Status::Fail {
                // A printed row that repeats another row, while the computed row is
                // the symmetric image of that other row, is a copying slip.
                let twin = printed
                    .iter()
                    .find(|(k, w)| *k != l && sorted_weights(w) == sorted_weights(want))
                    .map(|(k, _)| *k);
                if let Some(t) = twin {
                    let image = S3Element::all().into_iter().find(|g| {
                        g.apply_label(t) == *l
                            && sorted_weights(
                                &tangent_at(t)
                                    .iter()
                                    .map(|&w| g.apply(w))
                                    .collect::<Vec<_>>(),
                            ) == got
                    });
                    if let Some(g) = image {
                        r = r.with_status(Status::Discrepancy).with_note(format!(
                            "printed row duplicates row {t}; computed row is the image of row {t} under α, β, γ ↦ {}, {}, {}",
                            g.apply(ALPHA),
                            g.apply(BETA),
                            g.apply(GAMMA)
                        ));
                    }
                }
            }
            out.push(r);
        }
        out
    }

    fn betti(&self) -> Result<Vec<CheckResult>> {
        let profile = self.chamber.betti_profile()?;
        let labels = Label::ALL
            .iter()
            .all(|&l| self.chamber.codim(l).ok() == Some(l.codim as usize));
        Ok(vec![
            CheckResult::compare(
                "betti.profile",
                profile,
                &self.fixtures.hilbert.betti,
                Source::Fixture,
            ),
            CheckResult::flag("betti.codim_equals_label", labels, Source::Identity, ""),
        ])
    }

    fn gkm(&self) -> Vec<CheckResult> {
        let g = gkm_graph();
        let tangent_direction = |l: Label, w: Weight| {
            let d = w.primitive().1;
            tangent_at(l)
                .iter()
                .any(|&t| t.primitive().1 == d || t.primitive().1 == -d)
        };
        let weights_ok = g
            .edges
            .iter()
            .all(|e| tangent_direction(e.p, e.weight) && tangent_direction(e.q, e.weight));
        let pairs: BTreeSet<(Label, Label)> = g
            .edges
            .iter()
            .map(|e| (e.p.min(e.q), e.p.max(e.q)))
            .collect();
        let symmetric = S3Element::all().into_iter().all(|s| {
            pairs.iter().all(|&(a, b)| {
                let (x, y) = (s.apply_label(a), s.apply_label(b));
                pairs.contains(&(x.min(y), x.max(y)))
            })
        });
        vec![
            CheckResult::flag(
                "gkm.connected",
                g.is_connected(),
                Source::Identity,
                format!("{} edges", g.edges.len()),
            ),
            CheckResult::flag(
                "gkm.edge_weights_are_tangent_directions",
                weights_ok,
                Source::Independent,
                "",
            ),
            CheckResult::flag(
                "gkm.symmetric",
                symmetric,
                Source::Identity,
                "edge set is stable under the six permutations of α, β, γ",
            ),
        ]
    }

    fn class_checks(&self) -> Result<Vec<CheckResult>> {
        let s = self.classes()?;
        let mut out =
            vec![
                CheckResult::compare("classes.count", s.classes.len(), 15, Source::Identity)
                    .with_note("each class is the unique solution of its linear system"),
            ];

        let sigma1 = s.class(Label::new(1, 0));
        let same = Label::ALL
            .iter()
            .all(|&l| Some(sigma1.value(l)) == self.fixtures.sigma1.get(&l));
        let negated = Label::ALL
            .iter()
            .all(|&l| Some(&-sigma1.value(l)) == self.fixtures.sigma1.get(&l));
        let show = |c: &EqClass| {
            c.to_map()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect::<BTreeMap<_, _>>()
        };
        let printed = |m: &BTreeMap<Label, HomogPoly>| {
            m.iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect::<BTreeMap<_, _>>()
        };
        let mut r = CheckResult::compare(
            "classes.sigma_1",
            show(sigma1),
            printed(&self.fixtures.sigma1),
            Source::Fixture,
        );
        if !same && negated {
            r = r
                .with_status(Status::Discrepancy)
                .with_note("figure shows the negated class, as for every odd codimension");
        }
        out.push(r);

        let sigma2 = s.class(Label::new(2, 0));
        for l in Label::ALL {
            let got = sigma2.value(l);
            let want = self.fixtures.sigma2.get(&l);
            let mut r = CheckResult::compare(
                format!("classes.sigma_2.{l}"),
                got.to_string(),
                want.map(|p| p.to_string()),
                Source::Fixture,
            );
            if r.status == Status::Fail {
                if let Some(w) = want {
                    let mut alt = sigma2.clone();
                    alt.values[l.index()] = w.clone();
                    let broken = alt.gkm_violations();
                    r = r.with_note(format!(
                        "the printed value breaks divisibility on {} edge(s) at this vertex",
                        broken.len()
                    ));
                }
            }
            out.push(r);
        }

        let mut violations = 0;
        let mut support = 0;
        let mut normal = 0;
        for p in Label::ALL {
            let c = s.class(p);
            violations += c.gkm_violations().len();
            support += Label::ALL
                .iter()
                .filter(|&&q| q != p && q.codim <= p.codim && !c.value(q).is_zero())
                .count();
            if c.value(p) != &negative_product(self.chamber, p) {
                normal += 1;
            }
        }
        out.push(
            CheckResult::compare("classes.gkm_divisibility", violations, 0, Source::Identity)
                .with_note("all classes, all edges"),
        );
        out.push(CheckResult::compare(
            "classes.support",
            support,
            0,
            Source::Identity,
        ));
        out.push(CheckResult::compare(
            "classes.normalization",
            normal,
            0,
            Source::Identity,
        ));

        let m = s.poincare_pairing()?;
        let mut off = 0;
        let mut under = 0;
        for a in Label::ALL {
            for b in Label::ALL {
                let want = i64::from(a.codim + b.codim == 8 && b == a.dual());
                if m[(a.index(), b.index())] != int(want) {
                    off += 1;
                }
                if a.codim + b.codim < 8 && ab_integrate(&s.class(a).mul(s.class(b)))? != int(0) {
                    under += 1;
                }
            }
        }
        out.push(
            CheckResult::compare("classes.poincare_pairing", off, 0, Source::Identity)
                .with_note("entries differing from the central-symmetry permutation"),
        );
        out.push(CheckResult::compare(
            "classes.under_degree_integrals",
            under,
            0,
            Source::Identity,
        ));
        Ok(out)
    }

    fn monk(&self) -> Result<Vec<CheckResult>> {
        let ring = self.ring()?;
        let mut out = Vec::new();
        for l in Label::ALL.iter().filter(|l| l.codim < 8) {
            out.push(CheckResult::compare(
                format!("monk.{}", l.sigma_name()),
                &ring.monk[l],
                self.fixtures.bruhat.get(l),
                Source::Fixture,
            ));
        }
        let additive = Label::ALL
            .iter()
            .filter(|l| l.codim < 8)
            .all(|l| ring.degree(&ring.monk[l]) == ring.degrees[l]);
        out.push(CheckResult::flag(
            "monk.degree_additivity",
            additive,
            Source::Identity,
            "deg σ = Σ (Monk coefficient)·deg",
        ));
        Ok(out)
    }

    fn degrees(&self) -> Result<Vec<CheckResult>> {
        let ring = self.ring()?;
        let mut out = Vec::new();
        for l in Label::ALL {
            out.push(CheckResult::compare(
                format!("degrees.{}", l.sigma_name()),
                ring.degrees[&l],
                self.fixtures.degrees.get(&l),
                Source::Fixture,
            ));
        }
        let top = ab_integrate(&hyperplane_class().pow(8))?;
        out.push(CheckResult::compare(
            "degrees.hyperplane_power",
            rational_string(&top),
            self.fixtures
                .degrees
                .get(&Label::new(0, 0))
                .map(|d| format!("{d}/1")),
            Source::Fixture,
        ));
        let squares: i64 = Label::ALL
            .iter()
            .filter(|l| l.codim == 4)
            .map(|l| ring.degrees[l].pow(2))
            .sum();
        out.push(CheckResult::compare(
            "degrees.middle_squares",
            squares,
            ring.degrees[&Label::new(0, 0)],
            Source::Identity,
        ));
        Ok(out)
    }

    /// Products with both factors of codimension at least two and a nonzero
    /// target degree.
    fn product_pairs() -> Vec<(Label, Label)> {
        let mut out = Vec::new();
        for (i, &a) in Label::ALL.iter().enumerate() {
            for &b in &Label::ALL[i..] {
                if a.codim >= 2 && b.codim >= 2 && a.codim + b.codim <= 8 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn mult(&self) -> Result<Vec<CheckResult>> {
        let ring = self.ring()?;
        let key = |a: Label, b: Label| (a.min(b), a.max(b));
        let rows = &self.fixtures.multiplication;
        let printed: BTreeSet<(Label, Label)> =
            rows.iter().map(|ProductRow(a, b, _)| key(*a, *b)).collect();
        let mut missing: Vec<(Label, Label)> = Self::product_pairs()
            .into_iter()
            .filter(|p| !printed.contains(p))
            .collect();

        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for ProductRow(a, b, want) in rows {
            let k = key(*a, *b);
            let id = format!("mult.{}.{}", a.sigma_name(), b.sigma_name());
            if seen.insert(k) {
                out.push(CheckResult::compare(
                    id,
                    ring.product(*a, *b),
                    want,
                    Source::Fixture,
                ));
                continue;
            }
            // A repeated row stands for an unprinted product of the same codimensions.
            let codims = (k.0.codim, k.1.codim);
            let shared = |p: &(Label, Label)| {
                [p.0, p.1]
                    .iter()
                    .filter(|x| **x == k.0 || **x == k.1)
                    .count()
            };
            let pick = missing
                .iter()
                .enumerate()
                .filter(|(_, p)| (p.0.codim, p.1.codim) == codims)
                .max_by_key(|(_, p)| shared(p))
                .map(|(i, _)| i);
            let r = match pick {
                Some(i) => {
                    let (x, y) = missing.remove(i);
                    let mut r = CheckResult::compare(
                        format!("{id}.repeated"),
                        ring.product(x, y),
                        want,
                        Source::Fixture,
                    );
                    let agree = if r.status == Status::Pass {
                        "agrees with"
                    } else {
                        "differs from"
                    };
                    r.note = format!(
                        "row printed twice; read as {}·{}, whose computed value {agree} the repeated entry",
                        x.sigma_name(),
                        y.sigma_name()
                    );
                    r.with_status(Status::Discrepancy)
                }
                None => CheckResult::compare(
                    format!("{id}.repeated"),
                    ring.product(*a, *b),
                    want,
                    Source::Fixture,
                ),
            };
            out.push(r);
        }
        let negative = ring
            .table
            .values()
            .flat_map(|v| v.terms())
            .filter(|&(_, c)| c < 0)
            .count();
        out.push(
            CheckResult::compare("mult.nonnegative_integers", negative, 0, Source::Identity)
                .with_note(format!(
                    "{} products; expansion rejects fractional constants",
                    ring.table.len()
                )),
        );

        let table = Ring::new(&ring.table);
        let mut bad = 0;
        for &a in &Label::ALL {
            for &b in &Label::ALL {
                let (x, y) = (Ring::basis(a), Ring::basis(b));
                if table.mul(&x, &y) != table.mul(&y, &x) {
                    bad += 1;
                }
                for &c in &Label::ALL {
                    if a.codim + b.codim + c.codim > 8 {
                        continue;
                    }
                    let z = Ring::basis(c);
                    if table.mul(&table.mul(&x, &y), &z) != table.mul(&x, &table.mul(&y, &z)) {
                        bad += 1;
                    }
                }
            }
        }
        out.push(CheckResult::compare(
            "mult.commutative_associative",
            bad,
            0,
            Source::Identity,
        ));
        Ok(out)
    }

    fn ring_checks(&self) -> Result<Vec<CheckResult>> {
        let ring = self.ring()?;
        let betti = self.chamber.betti_profile()?;
        let r = verify_ring_presentation(&ring.table, &betti)?;
        let mut ranks = self.fixtures.hilbert.betti.clone();
        ranks.push(0);
        let coded: Vec<Vec<(i64, u32, u32)>> = vec![RELATION_ONE.to_vec(), RELATION_TWO.to_vec()];
        Ok(vec![
            CheckResult::compare(
                "ring.relations",
                &coded,
                &self.fixtures.presentation.relations,
                Source::Fixture,
            ),
            CheckResult::compare(
                "ring.generator",
                r.generator,
                self.fixtures.presentation.generator,
                Source::Fixture,
            ),
            CheckResult::flag(
                "ring.relation_1_vanishes",
                r.relation_one_vanishes,
                Source::Fixture,
                "codimension 5",
            ),
            CheckResult::flag(
                "ring.relation_2_vanishes",
                r.relation_two_vanishes,
                Source::Fixture,
                "codimension 6",
            ),
            CheckResult::compare(
                "ring.monomial_ranks",
                &r.monomial_ranks,
                ranks,
                Source::Fixture,
            ),
            CheckResult::flag(
                "ring.relations_generate",
                r.complete,
                Source::Independent,
                format!("ideal dimensions {:?}", r.ideal_dims),
            ),
        ])
    }

    fn restriction_checks(&self) -> Result<Vec<CheckResult>> {
        let t = self.restriction()?;
        let ring = self.ring()?;
        let fx = &self.fixtures.restriction.entries;
        let mut out = vec![CheckResult::compare(
            "restriction.count",
            t.entries.len(),
            fx.len(),
            Source::Fixture,
        )
        .with_note(format!("levels resolved by {:?}", t.resolution))];
        for (l, v) in &t.entries {
            out.push(CheckResult::compare(
                format!("restriction.{}", l.tau_name()),
                v,
                fx.get(l),
                Source::Fixture,
            ));
        }
        let classes = self.classes()?;
        let mut disagree = Vec::new();
        for (l, v) in &t.entries {
            if &restriction_by_localization(classes, *l)? != v {
                disagree.push(l.to_string());
            }
        }
        out.push(
            CheckResult::compare(
                "restriction.localization_route",
                &disagree,
                Vec::<String>::new(),
                Source::Independent,
            )
            .with_note(
                "Schur polynomials of the four-space weights, expanded in the equivariant basis",
            ),
        );
        let all = Partition43::all();
        let mut bad = 0;
        for a in all.iter().filter(|x| !x.is_empty()) {
            for b in all
                .iter()
                .filter(|x| !x.is_empty() && a.size() + x.size() <= 8 && *a <= **x)
            {
                let prod = lr_multiply(&AmbientClass::tau(*a), &AmbientClass::tau(*b));
                let lhs = prod.terms().fold(SchubertVector::new(), |acc, (l, c)| {
                    acc.add(&t.entries[&l].scale(c))
                });
                if lhs != ring.multiply(&t.entries[a], &t.entries[b]) {
                    bad += 1;
                }
            }
        }
        out.push(CheckResult::compare(
            "restriction.ring_homomorphism",
            bad,
            0,
            Source::Identity,
        ));
        Ok(out)
    }

    fn index(&self) -> Result<Vec<CheckResult>> {
        let idx = image_index(self.restriction()?)?;
        Ok(vec![
            CheckResult::compare(
                "index.total",
                idx.total,
                self.fixtures.restriction.index,
                Source::Fixture,
            )
            .with_note(format!("by codimension {:?}", idx.by_codim)),
            CheckResult::compare("index.codim_0", idx.by_codim[0], 1, Source::Identity),
            CheckResult::compare("index.codim_1", idx.by_codim[1], 1, Source::Identity),
        ])
    }

    fn chern_checks(&self) -> Result<Vec<CheckResult>> {
        let c = self.chern()?;
        let mut out = Vec::new();
        for k in 1..=8 {
            out.push(CheckResult::compare(
                format!("chern.c{k}"),
                c.c(k),
                self.fixtures.chern.classes.get(k),
                Source::Fixture,
            ));
        }
        let other = chern_classes_by_restriction(self.restriction()?)?;
        out.push(
            CheckResult::compare(
                "chern.restriction_route",
                &other.classes,
                &c.classes,
                Source::Independent,
            )
            .with_note("c(T_G)/c(∧³U*) restricted through the restriction table"),
        );
        out.push(
            CheckResult::compare(
                "chern.euler_characteristic",
                c.euler_characteristic(),
                Label::ALL.len(),
                Source::Independent,
            )
            .with_note("number of fixed points"),
        );
        Ok(out)
    }

    fn dual(&self) -> Result<Vec<CheckResult>> {
        let ring = self.ring()?;
        let (p, d) = dual_degree(self.chern()?, ring)?;
        let f = &self.fixtures.chern;
        let c1 = self.chern()?.c(1).get(Label::new(1, 0));
        Ok(vec![
            CheckResult::compare(
                "dual.coefficients",
                &p.coefficients,
                &f.dual_coefficients,
                Source::Fixture,
            )
            .with_note(format!("c(1) = {}", p.value_at_one())),
            CheckResult::compare("dual.degree", d, f.dual_degree, Source::Fixture),
            CheckResult::compare(
                "dual.top_coefficient",
                p.coefficients[8],
                ring.degrees[&Label::new(0, 0)],
                Source::Identity,
            ),
            CheckResult::compare(
                "dual.q8_coefficient",
                p.coefficients[7],
                -c1 * ring.degrees[&Label::new(1, 0)],
                Source::Independent,
            )
            .with_note("-∫ c_1 σ_1^7 with c_1 a multiple of σ_1"),
        ])
    }

    fn hilbert(&self) -> Result<Vec<CheckResult>> {
        let kmax = self.kmax.unwrap_or(10).max(10);
        let h = hilbert_polynomial(kmax)?;
        let f = &self.fixtures.hilbert;
        let closed: Vec<(i64, String)> = (0..=kmax)
            .map(|k| (k, rational_string(&closed_form_hilbert(k))))
            .collect();
        let koszul: Vec<(i64, String)> = h
            .samples
            .iter()
            .map(|&(k, v)| (k, format!("{v}/1")))
            .collect();
        let integral = (-10..=10).all(|k| h.eval(k).is_integer());
        let span: i64 = to_i64(&h.eval(1)).unwrap_or(-1);
        Ok(vec![
            CheckResult::compare("hilbert.koszul_equals_closed_form", koszul, closed, Source::Fixture).with_note(f.closed_form.clone()),
            CheckResult::compare("hilbert.span", span.to_string(), f.span_dimension.to_string(), Source::Fixture),
            CheckResult::compare("hilbert.quadrics", quadric_count(&h), f.quadrics, Source::Fixture),
            CheckResult::compare("hilbert.degree", rational_string(&h.degree()), format!("{}/1", f.degree), Source::Fixture),
            CheckResult::flag("hilbert.integer_valued", integral, Source::Identity, "k = -10..10"),
            CheckResult::compare("hilbert.missing_linear_forms", (35 - span).to_string(), "7", Source::Identity)
                .with_note("inside the projectivized exterior cube the span misses the seven-dimensional summand"),
        ])
    }

    fn series(&self) -> Result<Vec<CheckResult>> {
        let kmax = self.kmax.unwrap_or(self.fixtures.hilbert.series_kmax);
        let r = equivariant_series_check(kmax);
        let rows = match r {
            Ok(r) => r.rows,
            Err(Error::SeriesMismatch(k)) => {
                return Ok(vec![CheckResult::error(
                    "series",
                    format!("mismatch at k = {k}"),
                )])
            }
            Err(e) => return Err(e),
        };
        Ok(rows
            .into_iter()
            .map(|(k, sum, p)| {
                CheckResult::compare(format!("series.k{k}"), sum as i64, p, Source::Independent)
            })
            .collect())
    }
}

/// Objects available to `dump`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Object {
    FixedPoints,
    Tangents,
    Gkm,
    Classes,
    Monk,
    Degrees,
    Mult,
    Restriction,
    Chern,
    Hilbert,
}

impl Verifier {
    pub fn dump_json(&self, object: Object) -> Result<Value> {
        let v = match object {
            Object::FixedPoints => json!(enumerate_fixed_points()?
                .iter()
                .map(|p| json!({"label": p.label, "triple": p.triple, "weights": sorted_names(&p.triple_weights())}))
                .collect::<Vec<_>>()),
            Object::Tangents => json!(Label::ALL
                .iter()
                .map(|&l| (l.to_string(), sorted_names(tangent_at(l))))
                .collect::<BTreeMap<_, _>>()),
            Object::Gkm => {
                let g = gkm_graph();
                json!({
                    "vertices": g.vertices,
                    "edges": g.edges.iter().map(|e| json!({"p": e.p, "q": e.q, "weight": e.weight.to_string()})).collect::<Vec<_>>(),
                })
            }
            Object::Classes => {
                let s = self.classes()?;
                json!(Label::ALL
                    .iter()
                    .map(|&l| {
                        let c = s.class(l);
                        json!({
                            "label": l,
                            "codim": c.codim,
                            "values": c.to_map(),
                            "display": c.to_map().into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect::<BTreeMap<_, _>>(),
                        })
                    })
                    .collect::<Vec<_>>())
            }
            Object::Monk => json!(self.ring()?.monk),
            Object::Degrees => json!(self.ring()?.degrees),
            Object::Mult => json!(self
                .ring()?
                .table
                .iter()
                .map(|((a, b), v)| json!({"a": a, "b": b, "product": v}))
                .collect::<Vec<_>>()),
            Object::Restriction => serde_json::to_value(self.restriction()?).expect("serializable"),
            Object::Chern => json!(self.chern()?),
            Object::Hilbert => serde_json::to_value(hilbert_polynomial(self.kmax.unwrap_or(10))?).expect("serializable"),
        };
        Ok(v)
    }

    /// Row-oriented output for the two tabular objects.
    pub fn dump_csv(&self, object: Object) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        match object {
            Object::Restriction => {
                let mut header = vec!["partition".to_string()];
                header.extend(Label::ALL.iter().map(|l| l.sigma_name()));
                w.write_record(&header).expect("in memory");
                for (l, v) in &self.restriction()?.entries {
                    let mut row = vec![l.to_string()];
                    row.extend(Label::ALL.iter().map(|&t| v.get(t).to_string()));
                    w.write_record(&row).expect("in memory");
                }
            }
            Object::Hilbert => {
                w.write_record(["k", "P(k)"]).expect("in memory");
                for (k, p) in hilbert_polynomial(self.kmax.unwrap_or(10))?.samples {
                    w.write_record([k.to_string(), p.to_string()])
                        .expect("in memory");
                }
            }
            other => {
                return Err(Error::Parse(format!(
                    "{other:?} has no CSV form; use --format json"
                )));
            }
        }
        Ok(String::from_utf8(w.into_inner().expect("in memory")).expect("utf-8"))
    }
}
