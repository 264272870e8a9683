//! Special multiserial presentations `KQ/I` and the successor functions they induce.
//!
//! Membership of a length-two path in `I` is read off the explicit monomial
//! generators (or is automatic when the nilpotency index is 2). Producers of
//! presentations must list every quadratic monomial that lies in `I`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::quiver::{is_simple, ArrowId, Path, Quiver, SimpleCycle};
use crate::report::Check;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    quiver: Quiver,
    zero_paths: BTreeSet<Path>,
    equal_pairs: Vec<(Path, Path)>,
    nilpotency: usize,
}

impl Presentation {
    pub fn new(
        quiver: Quiver,
        zero_paths: impl IntoIterator<Item = Path>,
        equal_pairs: impl IntoIterator<Item = (Path, Path)>,
        nilpotency: usize,
    ) -> Result<Self> {
        if nilpotency < 2 {
            return Err(Error::InvalidPresentation(format!(
                "nilpotency must be at least 2, got {nilpotency}"
            )));
        }
        let zero_paths: BTreeSet<Path> = zero_paths.into_iter().collect();
        let equal_pairs: Vec<(Path, Path)> = equal_pairs.into_iter().collect();
        let check = |p: &Path| -> Result<()> {
            if !quiver.contains_path(p) {
                return Err(Error::ForeignPath(format!("{:?}", p.arrows())));
            }
            if p.len() < 2 {
                return Err(Error::InvalidPresentation(format!(
                    "generator `{}` has length below 2",
                    quiver.format_path(p)
                )));
            }
            Ok(())
        };
        for p in &zero_paths {
            check(p)?;
        }
        for (p, q) in &equal_pairs {
            check(p)?;
            check(q)?;
            if p.source() != q.source() || p.target() != q.target() {
                return Err(Error::InvalidPresentation(format!(
                    "`{}` and `{}` do not share endpoints",
                    quiver.format_path(p),
                    quiver.format_path(q)
                )));
            }
        }
        Ok(Presentation { quiver, zero_paths, equal_pairs, nilpotency })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn zero_paths(&self) -> &BTreeSet<Path> {
        &self.zero_paths
    }

    pub fn equal_pairs(&self) -> &[(Path, Path)] {
        &self.equal_pairs
    }

    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    pub fn is_monomial(&self) -> bool {
        self.equal_pairs.is_empty()
    }

    /// Whether the length-two path `ab` lies in `I`.
    pub fn quadratic_in_ideal(&self, a: ArrowId, b: ArrowId) -> bool {
        if self.nilpotency == 2 {
            return true;
        }
        match self.quiver.path(&[a, b]) {
            Ok(p) => self.zero_paths.contains(&p),
            Err(_) => true,
        }
    }

    /// Arrows `b` with `ab` a path outside `I`.
    pub fn successors(&self, a: ArrowId) -> Vec<ArrowId> {
        self.quiver
            .arrows_from(self.quiver.target(a))
            .filter(|&b| !self.quadratic_in_ideal(a, b))
            .collect()
    }

    /// Arrows `c` with `ca` a path outside `I`.
    pub fn predecessors(&self, a: ArrowId) -> Vec<ArrowId> {
        self.quiver
            .arrows_into(self.quiver.source(a))
            .filter(|&c| !self.quadratic_in_ideal(c, a))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.quiver.components().len() <= 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionMViolation {
    pub arrow: ArrowId,
    pub successors: Vec<ArrowId>,
    pub predecessors: Vec<ArrowId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionMReport {
    pub violations: Vec<ConditionMViolation>,
}

impl ConditionMReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_check(&self, quiver: &Quiver) -> Check {
        let witnesses = self
            .violations
            .iter()
            .map(|v| {
                let mut parts = Vec::new();
                if v.successors.len() > 1 {
                    parts.push(format!("successors {}", quiver.format_arrows(&v.successors)));
                }
                if v.predecessors.len() > 1 {
                    parts.push(format!("predecessors {}", quiver.format_arrows(&v.predecessors)));
                }
                format!("arrow {}: {}", quiver.arrow_name(v.arrow), parts.join("; "))
            })
            .collect();
        Check::from_witnesses("condition (M)", witnesses)
    }
}

/// Every arrow has at most one successor and at most one predecessor outside `I`.
pub fn check_condition_m(p: &Presentation) -> ConditionMReport {
    let violations = p
        .quiver
        .arrow_ids()
        .filter_map(|a| {
            let successors = p.successors(a);
            let predecessors = p.predecessors(a);
            (successors.len() > 1 || predecessors.len() > 1).then_some(ConditionMViolation {
                arrow: a,
                successors,
                predecessors,
            })
        })
        .collect();
    ConditionMReport { violations }
}

/// The successor function σ and predecessor function τ; `None` is the stop symbol ⋄.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuccessorTables {
    sigma: Vec<Option<ArrowId>>,
    tau: Vec<Option<ArrowId>>,
}

impl SuccessorTables {
    /// Checks composability and the inverse properties B1/B2.
    pub fn new(quiver: &Quiver, sigma: Vec<Option<ArrowId>>, tau: Vec<Option<ArrowId>>) -> Result<Self> {
        let n = quiver.arrow_count();
        if sigma.len() != n || tau.len() != n {
            return Err(Error::CorruptTables(format!("tables must cover all {n} arrows")));
        }
        let t = SuccessorTables { sigma, tau };
        for a in quiver.arrow_ids() {
            if let Some(b) = t.sigma(a) {
                if b.0 >= n || quiver.target(a) != quiver.source(b) {
                    return Err(Error::CorruptTables(format!(
                        "sigma({}) does not compose",
                        quiver.arrow_name(a)
                    )));
                }
            }
            if let Some(c) = t.tau(a) {
                if c.0 >= n || quiver.target(c) != quiver.source(a) {
                    return Err(Error::CorruptTables(format!(
                        "tau({}) does not compose",
                        quiver.arrow_name(a)
                    )));
                }
            }
        }
        let (b1, b2) = t.check_inverse_properties(quiver);
        for check in [b1, b2] {
            if !check.passed {
                return Err(Error::CorruptTables(check.witnesses.join(", ")));
            }
        }
        Ok(t)
    }

    /// Builds τ as the inverse of a partial injection σ.
    pub fn from_sigma(quiver: &Quiver, sigma: Vec<Option<ArrowId>>) -> Result<Self> {
        let mut tau = vec![None; quiver.arrow_count()];
        for (a, s) in sigma.iter().enumerate() {
            if let Some(b) = s {
                let slot = tau
                    .get_mut(b.0)
                    .ok_or_else(|| Error::CorruptTables(format!("arrow #{} out of range", b.0)))?;
                if slot.is_some() {
                    return Err(Error::CorruptTables(format!(
                        "sigma is not injective at {}",
                        quiver.arrow_name(*b)
                    )));
                }
                *slot = Some(ArrowId(a));
            }
        }
        Self::new(quiver, sigma, tau)
    }

    pub fn sigma(&self, a: ArrowId) -> Option<ArrowId> {
        self.sigma[a.0]
    }

    pub fn tau(&self, a: ArrowId) -> Option<ArrowId> {
        self.tau[a.0]
    }

    pub fn arrow_count(&self) -> usize {
        self.sigma.len()
    }

    /// B1: σ(a) ∈ Q₁ ⇒ τσ(a) = a. B2: τ(a) ∈ Q₁ ⇒ στ(a) = a.
    pub fn check_inverse_properties(&self, quiver: &Quiver) -> (Check, Check) {
        let mut b1 = Vec::new();
        let mut b2 = Vec::new();
        for a in quiver.arrow_ids() {
            if let Some(b) = self.sigma(a) {
                if self.tau.get(b.0).copied().flatten() != Some(a) {
                    b1.push(quiver.arrow_name(a).to_string());
                }
            }
            if let Some(c) = self.tau(a) {
                if self.sigma.get(c.0).copied().flatten() != Some(a) {
                    b2.push(quiver.arrow_name(a).to_string());
                }
            }
        }
        (Check::from_witnesses("B1", b1), Check::from_witnesses("B2", b2))
    }
}

pub fn format_successor(quiver: &Quiver, s: Option<ArrowId>) -> String {
    s.map_or_else(|| "⋄".to_string(), |b| quiver.arrow_name(b).to_string())
}

/// σ(a) = the unique b with ab ∉ I, τ(a) = the unique c with ca ∉ I, else ⋄.
pub fn derive_successors(p: &Presentation) -> Result<SuccessorTables> {
    let report = check_condition_m(p);
    if !report.passed() {
        return Err(Error::ConditionM(report.to_check(&p.quiver).witnesses.join("; ")));
    }
    let sigma = p.quiver.arrow_ids().map(|a| p.successors(a).first().copied()).collect();
    let tau = p.quiver.arrow_ids().map(|a| p.predecessors(a).first().copied()).collect();
    SuccessorTables::new(&p.quiver, sigma, tau)
}

/// Orbit of an arrow under σ and τ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitData {
    /// σ^forward(a) = ⋄ and τ^backward(a) = ⋄, both exponents minimal.
    Stops { forward: usize, backward: usize },
    /// σ^period(a) = a = τ^period(a), minimal.
    Periodic { period: usize },
}

enum Orbit {
    Stop(usize),
    Return(usize),
}

fn iterate(quiver: &Quiver, a: ArrowId, step: impl Fn(ArrowId) -> Option<ArrowId>) -> Result<Orbit> {
    let limit = quiver.arrow_count() + 1;
    let mut x = a;
    for k in 1..=limit {
        match step(x) {
            None => return Ok(Orbit::Stop(k)),
            Some(y) if y == a => return Ok(Orbit::Return(k)),
            Some(y) => x = y,
        }
    }
    Err(Error::CorruptTables(format!(
        "orbit of {} neither stops nor returns",
        quiver.arrow_name(a)
    )))
}

/// The integers m_a, n_a or m̂_a = n̂_a for every arrow, checking B3 and B4.
pub fn orbit_data(quiver: &Quiver, t: &SuccessorTables) -> Result<Vec<OrbitData>> {
    quiver
        .arrow_ids()
        .map(|a| {
            let fwd = iterate(quiver, a, |x| t.sigma(x))?;
            let bwd = iterate(quiver, a, |x| t.tau(x))?;
            match (fwd, bwd) {
                (Orbit::Stop(m), Orbit::Stop(n)) => Ok(OrbitData::Stops { forward: m, backward: n }),
                (Orbit::Return(m), Orbit::Return(n)) if m == n => Ok(OrbitData::Periodic { period: m }),
                (Orbit::Return(m), Orbit::Return(n)) => Err(Error::CorruptTables(format!(
                    "{}: sigma period {m} differs from tau period {n}",
                    quiver.arrow_name(a)
                ))),
                _ => Err(Error::CorruptTables(format!(
                    "{}: sigma and tau orbits disagree on stopping",
                    quiver.arrow_name(a)
                ))),
            }
        })
        .collect()
}

fn maximal_path_through(quiver: &Quiver, t: &SuccessorTables, a: ArrowId, forward: usize, backward: usize) -> Path {
    let mut arrows = Vec::with_capacity(forward + backward - 1);
    let mut x = a;
    for _ in 1..backward {
        x = t.tau(x).expect("backward orbit length");
        arrows.push(x);
    }
    arrows.reverse();
    arrows.push(a);
    let mut x = a;
    for _ in 1..forward {
        x = t.sigma(x).expect("forward orbit length");
        arrows.push(x);
    }
    quiver.path(&arrows).expect("successor tables compose")
}

fn cycle_through(quiver: &Quiver, t: &SuccessorTables, a: ArrowId, period: usize) -> SimpleCycle {
    let mut arrows = vec![a];
    let mut x = a;
    for _ in 1..period {
        x = t.sigma(x).expect("periodic orbit");
        arrows.push(x);
    }
    let path = quiver.path(&arrows).expect("successor tables compose");
    SimpleCycle::new(path).expect("sigma orbit is a simple cycle")
}

/// M_a for every arrow with finite forward orbit, or `None` where a is periodic.
pub fn maximal_path_of(quiver: &Quiver, t: &SuccessorTables, orbits: &[OrbitData], a: ArrowId) -> Option<Path> {
    match orbits[a.0] {
        OrbitData::Stops { forward, backward } => Some(maximal_path_through(quiver, t, a, forward, backward)),
        OrbitData::Periodic { .. } => None,
    }
}

/// C_a, or `None` where a has a finite forward orbit.
pub fn cycle_of(quiver: &Quiver, t: &SuccessorTables, orbits: &[OrbitData], a: ArrowId) -> Option<SimpleCycle> {
    match orbits[a.0] {
        OrbitData::Periodic { period } => Some(cycle_through(quiver, t, a, period)),
        OrbitData::Stops { .. } => None,
    }
}

/// The (σ,τ)-maximal paths, sorted.
pub fn maximal_paths(quiver: &Quiver, t: &SuccessorTables) -> Result<Vec<Path>> {
    let orbits = orbit_data(quiver, t)?;
    let set: BTreeSet<Path> = quiver
        .arrow_ids()
        .filter_map(|a| maximal_path_of(quiver, t, &orbits, a))
        .collect();
    Ok(set.into_iter().collect())
}

/// The cycles C_a over periodic arrows, sorted; closed under rotation.
pub fn simple_cycles(quiver: &Quiver, t: &SuccessorTables) -> Result<Vec<SimpleCycle>> {
    let orbits = orbit_data(quiver, t)?;
    let set: BTreeSet<SimpleCycle> = quiver
        .arrow_ids()
        .filter_map(|a| cycle_of(quiver, t, &orbits, a))
        .collect();
    Ok(set.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub items: Vec<Check>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|c| c.passed)
    }
}

/// Checks the seven structural facts about maximal paths and cycles.
pub fn check_lemma_properties(quiver: &Quiver, t: &SuccessorTables) -> Result<LemmaReport> {
    let orbits = orbit_data(quiver, t)?;
    let paths = maximal_paths(quiver, t)?;
    let cycles = simple_cycles(quiver, t)?;
    let name = |a: ArrowId| quiver.arrow_name(a).to_string();
    let mut w: [Vec<String>; 7] = Default::default();

    for a in quiver.arrow_ids() {
        let on_path = paths.iter().filter(|m| m.contains_arrow(a)).count();
        let on_cycle = cycles.iter().any(|c| c.contains_arrow(a));
        let own_path = maximal_path_of(quiver, t, &orbits, a);
        let own_cycle = cycle_of(quiver, t, &orbits, a);
        let in_own = own_path.as_ref().is_some_and(|m| m.contains_arrow(a))
            ^ own_cycle.as_ref().is_some_and(|c| c.contains_arrow(a));
        if !in_own || (on_path > 0) == on_cycle {
            w[0].push(name(a));
        }
        if on_path > 1 {
            w[1].push(name(a));
        }
        if let (Some(c), OrbitData::Periodic { period }) = (&own_cycle, orbits[a.0]) {
            if c.len() != period {
                w[3].push(format!("{}: length {} vs period {period}", name(a), c.len()));
            }
        }
        if let (Some(m), OrbitData::Stops { forward, backward }) = (&own_path, orbits[a.0]) {
            if m.len() != forward + backward - 1 {
                w[6].push(format!(
                    "{}: length {} vs {forward} + {backward} - 1",
                    name(a),
                    m.len()
                ));
            }
        }
    }
    for c in &cycles {
        for &a in c.arrows() {
            match cycle_of(quiver, t, &orbits, a) {
                Some(ca) if ca.is_rotation_of(c) => {}
                _ => w[2].push(format!("{} on {}", name(a), quiver.format_path(c.path()))),
            }
        }
    }
    for m in &paths {
        let maximal = t.tau(m.first().expect("nontrivial")).is_none()
            && t.sigma(m.last().expect("nontrivial")).is_none();
        if !is_simple(m) || !maximal {
            w[4].push(quiver.format_path(m));
        }
        for &a in m.arrows() {
            if maximal_path_of(quiver, t, &orbits, a).as_ref() != Some(m) {
                w[5].push(format!("{} on {}", name(a), quiver.format_path(m)));
            }
        }
    }
    let names = [
        "(1) each arrow on exactly one of M_a, C_a",
        "(2) at most one maximal path per arrow",
        "(3) cycles through an arrow are rotations of C_a",
        "(4) length of C_a equals its period",
        "(5) maximal paths repeat no arrow",
        "(6) M = M_a for every arrow a on M",
        "(7) length of M_a is m_a + n_a - 1",
    ];
    let items = names
        .iter()
        .zip(w)
        .map(|(n, w)| Check::from_witnesses(*n, w))
        .collect();
    Ok(LemmaReport { items })
}

/// Declared versus minimal nilpotency index of a purely monomial presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NilpotencyCheck {
    pub declared: usize,
    pub minimal: usize,
}

impl NilpotencyCheck {
    pub fn is_minimal(&self) -> bool {
        self.declared == self.minimal
    }
}

impl fmt::Display for NilpotencyCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "declared {} minimal {}", self.declared, self.minimal)
    }
}

/// For monomial presentations, the smallest `N' >= 2` with every path of
/// length `N'` in `I`. Returns `Ok(None)` when binomial generators are present.
pub fn check_nilpotency(p: &Presentation, max_paths: usize) -> Result<Option<NilpotencyCheck>> {
    if !p.is_monomial() {
        return Ok(None);
    }
    let q = &p.quiver;
    let avoids = |arrows: &[ArrowId]| -> bool {
        // only suffixes ending at the newest arrow can be new occurrences
        (2..=arrows.len()).all(|k| {
            let suffix = &arrows[arrows.len() - k..];
            q.path(suffix).map_or(true, |s| !p.zero_paths.contains(&s))
        })
    };
    let mut longest = 0usize;
    let mut visited = 0usize;
    let mut stack: Vec<Vec<ArrowId>> = q.arrow_ids().map(|a| vec![a]).collect();
    while let Some(path) = stack.pop() {
        visited += 1;
        if visited > max_paths {
            return Err(Error::BudgetExceeded { cap: max_paths });
        }
        longest = longest.max(path.len());
        if path.len() + 1 >= p.nilpotency {
            continue;
        }
        let last = *path.last().expect("nonempty");
        for b in q.arrows_from(q.target(last)) {
            let mut next = path.clone();
            next.push(b);
            if avoids(&next) {
                stack.push(next);
            }
        }
    }
    Ok(Some(NilpotencyCheck { declared: p.nilpotency, minimal: (longest + 1).max(2) }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiver(vs: &[&str], arrows: &[(&str, &str, &str)]) -> Quiver {
        Quiver::from_parts(
            vs.iter().map(|s| s.to_string()),
            arrows
                .iter()
                .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string())),
        )
        .unwrap()
    }

    fn pres(q: Quiver, zeros: &[&[&str]], n: usize) -> Presentation {
        let zs: Vec<Path> = zeros.iter().map(|z| q.path_by_names(z).unwrap()).collect();
        Presentation::new(q, zs, vec![], n).unwrap()
    }

    fn id(q: &Quiver, n: &str) -> ArrowId {
        q.arrow_id(n).unwrap()
    }

    #[test]
    fn condition_m_examples() {
        let a3 = pres(quiver(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]), &[&["a", "b"]], 2);
        assert!(check_condition_m(&a3).passed());

        let fork = pres(
            quiver(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "2", "4")]),
            &[],
            3,
        );
        let r = check_condition_m(&fork);
        assert!(!r.passed());
        assert_eq!(r.violations.len(), 1);
        let v = &r.violations[0];
        assert_eq!(v.arrow, id(fork.quiver(), "a"));
        assert_eq!(v.successors, vec![id(fork.quiver(), "b"), id(fork.quiver(), "c")]);
        assert!(derive_successors(&fork).is_err());

        let lp = pres(quiver(&["1"], &[("a", "1", "1")]), &[], 3);
        assert!(check_condition_m(&lp).passed());
    }

    #[test]
    fn successor_examples() {
        let a3 = pres(quiver(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]), &[&["a", "b"]], 2);
        let t = derive_successors(&a3).unwrap();
        for a in a3.quiver().arrow_ids() {
            assert_eq!(t.sigma(a), None);
            assert_eq!(t.tau(a), None);
        }

        let two = pres(quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]), &[], 3);
        let t = derive_successors(&two).unwrap();
        let (a, b) = (id(two.quiver(), "a"), id(two.quiver(), "b"));
        assert_eq!((t.sigma(a), t.sigma(b)), (Some(b), Some(a)));
        assert_eq!((t.tau(a), t.tau(b)), (Some(b), Some(a)));

        let lp = pres(quiver(&["1"], &[("a", "1", "1")]), &[&["a", "a"]], 2);
        let t = derive_successors(&lp).unwrap();
        assert_eq!((t.sigma(ArrowId(0)), t.tau(ArrowId(0))), (None, None));
    }

    #[test]
    fn orbit_examples() {
        let q = quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]);
        let t = SuccessorTables::from_sigma(&q, vec![Some(ArrowId(1)), Some(ArrowId(0))]).unwrap();
        let o = orbit_data(&q, &t).unwrap();
        assert_eq!(o[0], OrbitData::Periodic { period: 2 });

        let t = SuccessorTables::from_sigma(&q, vec![None, None]).unwrap();
        assert_eq!(orbit_data(&q, &t).unwrap()[0], OrbitData::Stops { forward: 1, backward: 1 });

        let lq = quiver(&["1"], &[("a", "1", "1")]);
        let t = SuccessorTables::from_sigma(&lq, vec![Some(ArrowId(0))]).unwrap();
        assert_eq!(orbit_data(&lq, &t).unwrap()[0], OrbitData::Periodic { period: 1 });
    }

    #[test]
    fn maximal_path_examples() {
        let q = quiver(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]);
        let t = SuccessorTables::from_sigma(&q, vec![None, None]).unwrap();
        let ms: Vec<String> = maximal_paths(&q, &t).unwrap().iter().map(|m| q.format_path(m)).collect();
        assert_eq!(ms, vec!["a", "b"]);

        let t = SuccessorTables::from_sigma(&q, vec![Some(ArrowId(1)), None]).unwrap();
        let ms: Vec<String> = maximal_paths(&q, &t).unwrap().iter().map(|m| q.format_path(m)).collect();
        assert_eq!(ms, vec!["a b"]);
        let o = orbit_data(&q, &t).unwrap();
        assert_eq!(o[0], OrbitData::Stops { forward: 2, backward: 1 });
        let lemma = check_lemma_properties(&q, &t).unwrap();
        assert!(lemma.passed(), "{lemma:?}");

        let c = quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]);
        let t = SuccessorTables::from_sigma(&c, vec![Some(ArrowId(1)), Some(ArrowId(0))]).unwrap();
        assert!(maximal_paths(&c, &t).unwrap().is_empty());
    }

    #[test]
    fn cycle_examples() {
        let c = quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]);
        let t = SuccessorTables::from_sigma(&c, vec![Some(ArrowId(1)), Some(ArrowId(0))]).unwrap();
        let cs: Vec<String> = simple_cycles(&c, &t).unwrap().iter().map(|x| c.format_path(x.path())).collect();
        assert_eq!(cs, vec!["a b", "b a"]);
        let lemma = check_lemma_properties(&c, &t).unwrap();
        assert!(lemma.passed());

        let t = SuccessorTables::from_sigma(&c, vec![None, None]).unwrap();
        assert!(simple_cycles(&c, &t).unwrap().is_empty());

        let lq = quiver(&["1"], &[("a", "1", "1")]);
        let t = SuccessorTables::from_sigma(&lq, vec![Some(ArrowId(0))]).unwrap();
        assert_eq!(simple_cycles(&lq, &t).unwrap().len(), 1);
    }

    #[test]
    fn corrupt_tables_are_rejected() {
        let q = quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]);
        // sigma(a) = b but tau(b) = stop
        assert!(SuccessorTables::new(&q, vec![Some(ArrowId(1)), None], vec![None, None]).is_err());
        // a does not compose with a
        assert!(SuccessorTables::from_sigma(&q, vec![Some(ArrowId(0)), None]).is_err());
    }

    #[test]
    fn presentation_invariants() {
        let q = quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]);
        let a = q.path_by_names(&["a"]).unwrap();
        assert!(Presentation::new(q.clone(), vec![a], vec![], 3).is_err());
        assert!(Presentation::new(q.clone(), vec![], vec![], 1).is_err());
        let ab = q.path_by_names(&["a", "b"]).unwrap();
        let ba = q.path_by_names(&["b", "a"]).unwrap();
        assert!(Presentation::new(q, vec![], vec![(ab, ba)], 3).is_err());
    }

    #[test]
    fn nilpotency_of_monomial_presentations() {
        let two = quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]);
        let p = pres(two.clone(), &[&["a", "b", "a"], &["b", "a", "b"]], 3);
        assert_eq!(check_nilpotency(&p, 1000).unwrap(), Some(NilpotencyCheck { declared: 3, minimal: 3 }));
        let p = pres(two, &[&["a", "b"], &["b", "a"]], 4);
        assert_eq!(check_nilpotency(&p, 1000).unwrap().unwrap().minimal, 2);
    }
}
