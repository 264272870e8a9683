//! Defining pairs `(S, μ)` of simple cycles with multiplicities, their
//! axioms D0–D4, and the three families of relations they generate.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::quiver::{compose, lies_in, ArrowId, Path, Quiver, SimpleCycle, VertexId};
use crate::report::{all_passed, Check};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningPair {
    quiver: Quiver,
    mult: BTreeMap<SimpleCycle, u32>,
}

impl DefiningPair {
    /// Takes `S` and `μ` as given; the axioms are checked by [`validate`].
    pub fn new(quiver: Quiver, cycles: impl IntoIterator<Item = (SimpleCycle, u32)>) -> Result<Self> {
        let mut mult = BTreeMap::new();
        for (c, m) in cycles {
            if !quiver.contains_path(c.path()) {
                return Err(Error::ForeignPath(format!("{:?}", c.arrows())));
            }
            let name = quiver.format_path(c.path());
            if m == 0 {
                return Err(Error::ZeroMultiplicity(name));
            }
            if let Some(&old) = mult.get(&c) {
                if old != m {
                    return Err(Error::MultiplicityConflict(name.clone(), name, old, m));
                }
            }
            mult.insert(c, m);
        }
        Ok(DefiningPair { quiver, mult })
    }

    /// All rotations of the given representatives, with μ constant on each class.
    pub fn close_under_rotation(
        quiver: Quiver,
        representatives: impl IntoIterator<Item = (SimpleCycle, u32)>,
    ) -> Result<Self> {
        let mut classes: BTreeMap<Vec<ArrowId>, (SimpleCycle, u32)> = BTreeMap::new();
        for (c, m) in representatives {
            if !quiver.contains_path(c.path()) {
                return Err(Error::ForeignPath(format!("{:?}", c.arrows())));
            }
            if m == 0 {
                return Err(Error::ZeroMultiplicity(quiver.format_path(c.path())));
            }
            match classes.get(&c.canonical_arrows()) {
                Some((other, m0)) if *m0 != m => {
                    return Err(Error::MultiplicityConflict(
                        quiver.format_path(other.path()),
                        quiver.format_path(c.path()),
                        *m0,
                        m,
                    ))
                }
                Some(_) => {}
                None => {
                    classes.insert(c.canonical_arrows(), (c, m));
                }
            }
        }
        let cycles: Vec<(SimpleCycle, u32)> = classes
            .values()
            .flat_map(|(c, m)| quiver.rotations(c).into_iter().map(move |r| (r, *m)))
            .collect();
        Self::new(quiver, cycles)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// The cycles of `S`, sorted.
    pub fn cycles(&self) -> impl Iterator<Item = &SimpleCycle> + '_ {
        self.mult.keys()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&SimpleCycle, u32)> + '_ {
        self.mult.iter().map(|(c, &m)| (c, m))
    }

    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn multiplicity(&self, c: &SimpleCycle) -> Option<u32> {
        self.mult.get(c).copied()
    }

    /// `S_v`: cycles of `S` starting at `v`.
    pub fn cycles_at(&self, v: VertexId) -> Vec<&SimpleCycle> {
        self.mult.keys().filter(|c| c.vertex() == v).collect()
    }

    /// One cycle per rotation class (the one with the smallest arrow sequence), sorted.
    pub fn representatives(&self) -> Vec<(&SimpleCycle, u32)> {
        self.mult
            .iter()
            .filter(|(c, _)| c.arrows() == c.canonical_arrows().as_slice())
            .map(|(c, &m)| (c, m))
            .collect()
    }

    /// The full power `C^{μ(C)}`.
    pub fn full_power(&self, c: &SimpleCycle) -> Path {
        c.path().power(self.mult[c] as usize)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    pub checks: Vec<Check>,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// Checks the axioms D0–D4, with witnesses for each failure.
pub fn validate(pair: &DefiningPair) -> PairReport {
    let q = &pair.quiver;
    let show = |c: &SimpleCycle| format!("({})", q.format_path(c.path()));

    let d0 = pair
        .entries()
        .filter(|(c, m)| c.is_loop() && *m <= 1)
        .map(|(c, m)| format!("{} has multiplicity {m}", show(c)))
        .collect();

    let mut d1 = Vec::new();
    let mut d2 = Vec::new();
    for (c, m) in pair.entries() {
        for r in q.rotations(c) {
            match pair.multiplicity(&r) {
                None => d1.push(format!("{} missing rotation {}", show(c), show(&r))),
                Some(mr) if mr != m => {
                    d2.push(format!("{} has {m} but {} has {mr}", show(c), show(&r)))
                }
                Some(_) => {}
            }
        }
    }

    let d3 = q
        .arrow_ids()
        .filter(|&a| !pair.cycles().any(|c| c.contains_arrow(a)))
        .map(|a| q.arrow_name(a).to_string())
        .collect();

    let mut d4 = Vec::new();
    for a in q.arrow_ids() {
        let through: Vec<&SimpleCycle> = pair.cycles().filter(|c| c.contains_arrow(a)).collect();
        if let Some((first, rest)) = through.split_first() {
            if let Some(bad) = rest.iter().find(|c| !c.is_rotation_of(first)) {
                d4.push(format!("{} on {} and {}", q.arrow_name(a), show(first), show(bad)));
            }
        }
    }

    PairReport {
        checks: vec![
            Check::from_witnesses("D0 loops have multiplicity > 1", d0),
            Check::from_witnesses("D1 closed under rotation", d1),
            Check::from_witnesses("D2 multiplicity constant on rotations", d2),
            Check::from_witnesses("D3 every arrow on some cycle", d3),
            Check::from_witnesses("D4 cycles sharing an arrow are rotations", d4),
        ],
    }
}

/// Generators of the ideal defined by a pair, in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RelationSet {
    /// `C^{μ(C)} - C'^{μ(C')}` for distinct `C, C'` at a common vertex.
    pub type1: Vec<(Path, Path)>,
    /// `C^{μ(C)} a` with `a` the first arrow of `C`.
    pub type2: Vec<Path>,
    /// Length-two paths lying on no cycle of `S`.
    pub type3: Vec<Path>,
}

impl RelationSet {
    pub fn len(&self) -> usize {
        self.type1.len() + self.type2.len() + self.type3.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn generate_relations(pair: &DefiningPair) -> RelationSet {
    let q = &pair.quiver;
    let mut type1 = Vec::new();
    for v in q.vertex_ids() {
        let at_v = pair.cycles_at(v);
        for (i, c) in at_v.iter().enumerate() {
            for d in &at_v[i + 1..] {
                type1.push((pair.full_power(c), pair.full_power(d)));
            }
        }
    }
    let type2 = pair
        .cycles()
        .map(|c| {
            let first = q.arrow_path(c.first_arrow());
            compose(&pair.full_power(c), &first).expect("cycle returns to its start")
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut type3 = Vec::new();
    for a in q.arrow_ids() {
        for b in q.arrows_from(q.target(a)) {
            let ab = q.path(&[a, b]).expect("composable");
            let on_cycle = pair
                .cycles()
                .any(|c| lies_in(&ab, c).expect("nontrivial path"));
            if !on_cycle {
                type3.push(ab);
            }
        }
    }
    type3.sort();
    type1.sort();
    RelationSet { type1, type2, type3 }
}

/// `N + 1` where `N = max μ(C)ℓ(C)`; every path this long is zero in the algebra.
pub fn nilpotency_bound(pair: &DefiningPair) -> usize {
    pair.entries()
        .map(|(c, m)| m as usize * c.len())
        .max()
        .unwrap_or(0)
        + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn quiver(vs: &[&str], arrows: &[(&str, &str, &str)]) -> Quiver {
        Quiver::from_parts(
            vs.iter().map(|s| s.to_string()),
            arrows
                .iter()
                .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string())),
        )
        .unwrap()
    }

    fn cyc(q: &Quiver, names: &[&str]) -> SimpleCycle {
        q.simple_cycle(q.path_by_names(names).unwrap()).unwrap()
    }

    fn failing(r: &PairReport) -> Vec<&str> {
        r.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| &c.name[..2])
            .collect()
    }

    #[test]
    fn validate_examples() {
        let lq = quiver(&["1"], &[("a", "1", "1")]);
        let p = DefiningPair::new(lq.clone(), [(cyc(&lq, &["a"]), 1)]).unwrap();
        assert_eq!(failing(&validate(&p)), vec!["D0"]);

        let two = quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]);
        let p = DefiningPair::new(two.clone(), [(cyc(&two, &["a", "b"]), 2)]).unwrap();
        assert_eq!(failing(&validate(&p)), vec!["D1"]);

        let fork = quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1"), ("c", "2", "1")]);
        let p = DefiningPair::close_under_rotation(
            fork.clone(),
            [(cyc(&fork, &["a", "b"]), 2), (cyc(&fork, &["a", "c"]), 2)],
        )
        .unwrap();
        let r = validate(&p);
        assert_eq!(failing(&r), vec!["D4"]);
        assert!(r.checks[4].witnesses.iter().all(|w| w.starts_with("a on")));
    }

    #[test]
    fn d3_and_d2_witnesses() {
        let q = quiver(&["1", "2"], &[("a", "1", "1"), ("b", "1", "2")]);
        let p = DefiningPair::close_under_rotation(q.clone(), [(cyc(&q, &["a"]), 2)]).unwrap();
        let r = validate(&p);
        assert_eq!(failing(&r), vec!["D3"]);
        assert_eq!(r.checks[3].witnesses, vec!["b"]);

        let two = quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]);
        let p = DefiningPair::new(two.clone(), [(cyc(&two, &["a", "b"]), 2), (cyc(&two, &["b", "a"]), 3)])
            .unwrap();
        assert_eq!(failing(&validate(&p)), vec!["D2"]);
    }

    #[test]
    fn close_under_rotation_examples() {
        let two = quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]);
        let p = DefiningPair::close_under_rotation(two.clone(), [(cyc(&two, &["a", "b"]), 2)]).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.entries().all(|(_, m)| m == 2));
        assert!(validate(&p).passed());

        let lq = quiver(&["1"], &[("a", "1", "1")]);
        let p = DefiningPair::close_under_rotation(lq.clone(), [(cyc(&lq, &["a"]), 3)]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.multiplicity(&cyc(&lq, &["a"])), Some(3));

        let err = DefiningPair::close_under_rotation(
            two.clone(),
            [(cyc(&two, &["a", "b"]), 2), (cyc(&two, &["b", "a"]), 3)],
        );
        assert!(matches!(err, Err(Error::MultiplicityConflict(_, _, 2, 3))));
    }

    #[test]
    fn relation_examples() {
        let lq = quiver(&["1"], &[("a", "1", "1")]);
        let p = DefiningPair::close_under_rotation(lq.clone(), [(cyc(&lq, &["a"]), 2)]).unwrap();
        let r = generate_relations(&p);
        assert!(r.type1.is_empty() && r.type3.is_empty());
        assert_eq!(r.type2, vec![lq.path_by_names(&["a", "a", "a"]).unwrap()]);

        let q = quiver(
            &["1", "2", "3"],
            &[("a", "1", "2"), ("abar", "2", "1"), ("b", "2", "3"), ("bbar", "3", "2")],
        );
        let p = DefiningPair::close_under_rotation(
            q.clone(),
            [(cyc(&q, &["a", "abar"]), 2), (cyc(&q, &["b", "bbar"]), 2)],
        )
        .unwrap();
        let r = generate_relations(&p);
        let expected = (
            q.path_by_names(&["abar", "a", "abar", "a"]).unwrap(),
            q.path_by_names(&["b", "bbar", "b", "bbar"]).unwrap(),
        );
        assert!(r.type1.contains(&expected) || r.type1.contains(&(expected.1.clone(), expected.0.clone())));
        assert_eq!(r.type1.len(), 1);
        assert_eq!(r.type2.len(), 4);
        let t3: Vec<String> = r.type3.iter().map(|p| q.format_path(p)).collect();
        assert_eq!(t3, vec!["a b", "bbar abar"]);
    }

    #[test]
    fn type3_contains_off_cycle_paths() {
        let q = quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1"), ("x", "2", "2")]);
        let p = DefiningPair::close_under_rotation(
            q.clone(),
            [(cyc(&q, &["a", "b"]), 1), (cyc(&q, &["x"]), 2)],
        )
        .unwrap();
        assert!(validate(&p).passed());
        let r = generate_relations(&p);
        let t3: Vec<String> = r.type3.iter().map(|p| q.format_path(p)).collect();
        assert_eq!(t3, vec!["a x", "x b"]);
    }

    #[test]
    fn nilpotency_bound_examples() {
        let lq = quiver(&["1"], &[("a", "1", "1")]);
        let p = DefiningPair::close_under_rotation(lq.clone(), [(cyc(&lq, &["a"]), 2)]).unwrap();
        assert_eq!(nilpotency_bound(&p), 3);

        let two = quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]);
        let p = DefiningPair::close_under_rotation(two.clone(), [(cyc(&two, &["a", "b"]), 3)]).unwrap();
        assert_eq!(nilpotency_bound(&p), 7);

        let q = quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1"), ("x", "2", "2")]);
        let p = DefiningPair::close_under_rotation(
            q.clone(),
            [(cyc(&q, &["a", "b"]), 2), (cyc(&q, &["x"]), 6)],
        )
        .unwrap();
        assert_eq!(nilpotency_bound(&p), 7);
    }
}
