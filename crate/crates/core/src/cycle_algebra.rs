//! The algebra `KQ/I` defined by a valid pair, computed in closed form.
//!
//! A nonzero path class is either an idempotent, a proper on-cycle path
//! (shorter than the full power of its cycle) or the socle element at a
//! vertex, which is the common class of all full powers `C^{μ(C)}` based
//! there. Every path reduces to one basis element or to zero, so products of
//! basis elements are again basis elements or zero.

use std::collections::BTreeMap;
use std::fmt;

use crate::defining_pair::{nilpotency_bound, validate, DefiningPair};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg;
use crate::quiver::{compose, ArrowId, Path, Quiver, SimpleCycle, VertexId};
use crate::report::Check;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisElement {
    Idempotent(VertexId),
    OnCyclePath(Path),
    Socle(VertexId),
}

impl BasisElement {
    pub fn source(&self) -> VertexId {
        match self {
            BasisElement::Idempotent(v) | BasisElement::Socle(v) => *v,
            BasisElement::OnCyclePath(p) => p.source(),
        }
    }

    pub fn target(&self) -> VertexId {
        match self {
            BasisElement::Idempotent(v) | BasisElement::Socle(v) => *v,
            BasisElement::OnCyclePath(p) => p.target(),
        }
    }

    pub fn display<'a>(&'a self, quiver: &'a Quiver) -> impl fmt::Display + 'a {
        DisplayBasis { b: self, quiver }
    }
}

struct DisplayBasis<'a> {
    b: &'a BasisElement,
    quiver: &'a Quiver,
}

impl fmt::Display for DisplayBasis<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.b {
            BasisElement::Idempotent(v) => write!(f, "e_{}", self.quiver.vertex_name(*v)),
            BasisElement::OnCyclePath(p) => write!(f, "{}", self.quiver.format_path(p)),
            BasisElement::Socle(v) => write!(f, "soc_{}", self.quiver.vertex_name(*v)),
        }
    }
}

/// A finite linear combination of basis elements with nonzero coefficients.
#[derive(Debug, Clone)]
pub struct LinearCombination<F: Field> {
    terms: BTreeMap<BasisElement, F::Elem>,
}

impl<F: Field> PartialEq for LinearCombination<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Default for LinearCombination<F> {
    fn default() -> Self {
        LinearCombination { terms: BTreeMap::new() }
    }
}

impl<F: Field> LinearCombination<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(field: &F, b: BasisElement) -> Self {
        let mut lc = Self::zero();
        lc.add_term(field, b, field.one());
        lc
    }

    pub fn from_terms(field: &F, terms: impl IntoIterator<Item = (F::Elem, BasisElement)>) -> Self {
        let mut lc = Self::zero();
        for (c, b) in terms {
            lc.add_term(field, b, c);
        }
        lc
    }

    pub fn add_term(&mut self, field: &F, b: BasisElement, c: F::Elem) {
        let entry = self.terms.entry(b.clone()).or_insert_with(|| field.zero());
        *entry = field.add(entry, &c);
        if field.is_zero(entry) {
            self.terms.remove(&b);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &F::Elem)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: &BasisElement) -> Option<&F::Elem> {
        self.terms.get(b)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }
}

/// Gram matrix of the bilinear form `(x, y) ↦ f(xy)` on the canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    pub basis: Vec<BasisElement>,
    pub entries: Vec<Vec<i64>>,
    pub rank: usize,
    /// Vertices without incident arrows; the form vanishes on their idempotents.
    pub degenerate_vertices: Vec<VertexId>,
}

impl GramMatrix {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank == self.dimension()
    }

    /// Each row and each column holds exactly one 1 and zeros elsewhere.
    pub fn is_permutation(&self) -> bool {
        let n = self.dimension();
        let ok_row = |row: &Vec<i64>| {
            row.iter().all(|&x| x == 0 || x == 1) && row.iter().filter(|&&x| x == 1).count() == 1
        };
        self.entries.iter().all(ok_row)
            && (0..n).all(|j| self.entries.iter().filter(|r| r[j] == 1).count() == 1)
    }
}

#[derive(Debug, Clone)]
pub struct CycleAlgebra<'a> {
    pair: &'a DefiningPair,
    /// The rotation in `S` starting at each arrow.
    cycle_from: Vec<SimpleCycle>,
    /// `μ(C)ℓ(C)` for the class of each arrow.
    full_length: Vec<usize>,
}

impl<'a> CycleAlgebra<'a> {
    /// Fails unless the pair satisfies D0–D4.
    pub fn new(pair: &'a DefiningPair) -> Result<Self> {
        let report = validate(pair);
        if !report.passed() {
            let failed: Vec<String> = report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| format!("{}: {}", c.name, c.witnesses.join(", ")))
                .collect();
            return Err(Error::InvalidPair(failed.join("; ")));
        }
        let q = pair.quiver();
        let mut cycle_from = Vec::with_capacity(q.arrow_count());
        let mut full_length = Vec::with_capacity(q.arrow_count());
        for a in q.arrow_ids() {
            let c = pair
                .cycles()
                .find(|c| c.first_arrow() == a)
                .expect("D1 and D3 give a cycle starting at every arrow");
            full_length.push(pair.multiplicity(c).expect("in S") as usize * c.len());
            cycle_from.push(c.clone());
        }
        Ok(CycleAlgebra { pair, cycle_from, full_length })
    }

    pub fn pair(&self) -> &DefiningPair {
        self.pair
    }

    pub fn quiver(&self) -> &Quiver {
        self.pair.quiver()
    }

    pub fn cycle_starting_at(&self, a: ArrowId) -> &SimpleCycle {
        &self.cycle_from[a.0]
    }

    /// The arrow following `a` on its cycle.
    pub fn next_on_cycle(&self, a: ArrowId) -> ArrowId {
        let c = &self.cycle_from[a.0];
        c.arrows()[1 % c.len()]
    }

    /// The class of `p` in the algebra: a basis element, or `None` for zero.
    pub fn normal_form(&self, p: &Path) -> Result<Option<BasisElement>> {
        let q = self.quiver();
        if !q.contains_path(p) {
            return Err(Error::ForeignPath(format!("{:?}", p.arrows())));
        }
        Ok(self.reduce(p))
    }

    fn reduce(&self, p: &Path) -> Option<BasisElement> {
        let Some(first) = p.first() else {
            return Some(BasisElement::Idempotent(p.source()));
        };
        let c = self.cycle_from[first.0].arrows();
        let on_cycle = p.arrows().iter().enumerate().all(|(k, &a)| c[k % c.len()] == a);
        if !on_cycle {
            return None;
        }
        let full = self.full_length[first.0];
        match p.len().cmp(&full) {
            std::cmp::Ordering::Less => Some(BasisElement::OnCyclePath(p.clone())),
            std::cmp::Ordering::Equal => Some(BasisElement::Socle(p.source())),
            std::cmp::Ordering::Greater => None,
        }
    }

    pub fn normal_form_combination<F: Field>(&self, field: &F, p: &Path) -> Result<LinearCombination<F>> {
        Ok(self
            .normal_form(p)?
            .map_or_else(LinearCombination::zero, |b| LinearCombination::basis(field, b)))
    }

    /// A path whose class is `b`.
    pub fn representative(&self, b: &BasisElement) -> Path {
        let q = self.quiver();
        match b {
            BasisElement::Idempotent(v) => q.trivial_path(*v),
            BasisElement::OnCyclePath(p) => p.clone(),
            BasisElement::Socle(v) => {
                let c = self.pair.cycles_at(*v)[0];
                self.pair.full_power(c)
            }
        }
    }

    /// The canonical basis: idempotents, proper on-cycle paths, then socle elements.
    pub fn basis(&self) -> Vec<BasisElement> {
        let q = self.quiver();
        let mut out: Vec<BasisElement> = q.vertex_ids().map(BasisElement::Idempotent).collect();
        let mut paths = Vec::new();
        for c in self.pair.cycles() {
            let full = self.full_length[c.first_arrow().0];
            let mut arrows = Vec::with_capacity(full);
            for k in 0..full - 1 {
                arrows.push(c.arrows()[k % c.len()]);
                paths.push(BasisElement::OnCyclePath(q.path(&arrows).expect("cycle composes")));
            }
        }
        paths.sort();
        out.extend(paths);
        out.extend(
            q.vertex_ids()
                .filter(|&v| !self.pair.cycles_at(v).is_empty())
                .map(BasisElement::Socle),
        );
        out
    }

    pub fn dimension(&self) -> usize {
        let q = self.quiver();
        let proper: usize = self.pair.cycles().map(|c| self.full_length[c.first_arrow().0] - 1).sum();
        let socles = q.vertex_ids().filter(|&v| !self.pair.cycles_at(v).is_empty()).count();
        q.vertex_count() + proper + socles
    }

    /// Product of two basis elements.
    pub fn multiply_basis(&self, x: &BasisElement, y: &BasisElement) -> Option<BasisElement> {
        let p = compose(&self.representative(x), &self.representative(y))?;
        self.reduce(&p)
    }

    pub fn multiply<F: Field>(
        &self,
        field: &F,
        x: &LinearCombination<F>,
        y: &LinearCombination<F>,
    ) -> LinearCombination<F> {
        let mut out = LinearCombination::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                if let Some(b) = self.multiply_basis(bx, by) {
                    out.add_term(field, b, field.mul(cx, cy));
                }
            }
        }
        out
    }

    /// The symmetrizing form: the sum of the socle coefficients.
    pub fn frobenius_form<F: Field>(&self, field: &F, x: &LinearCombination<F>) -> F::Elem {
        x.terms()
            .filter(|(b, _)| matches!(b, BasisElement::Socle(_)))
            .fold(field.zero(), |acc, (_, c)| field.add(&acc, c))
    }

    fn form_of_product(&self, x: &BasisElement, y: &BasisElement) -> i64 {
        match self.multiply_basis(x, y) {
            Some(BasisElement::Socle(_)) => 1,
            _ => 0,
        }
    }

    pub fn gram_matrix<F: Field>(&self, field: &F) -> GramMatrix {
        let basis = self.basis();
        let entries: Vec<Vec<i64>> = basis
            .iter()
            .map(|x| basis.iter().map(|y| self.form_of_product(x, y)).collect())
            .collect();
        let as_field: Vec<Vec<F::Elem>> = entries
            .iter()
            .map(|row| row.iter().map(|&e| field.from_i64(e)).collect())
            .collect();
        let rank = linalg::rank(field, &as_field);
        GramMatrix {
            basis,
            entries,
            rank,
            degenerate_vertices: self.quiver().isolated_vertices(),
        }
    }

    /// `f(xy) = f(yx)` for every ordered pair of basis elements.
    pub fn check_trace_symmetry(&self) -> Check {
        let basis = self.basis();
        let q = self.quiver();
        let mut witnesses = Vec::new();
        for x in &basis {
            for y in &basis {
                if self.form_of_product(x, y) != self.form_of_product(y, x) {
                    witnesses.push(format!("({}, {})", x.display(q), y.display(q)));
                }
            }
        }
        Check::from_witnesses("trace symmetry f(xy) = f(yx)", witnesses)
    }

    /// Entry `(u, v)` is `dim e_u A e_v`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.quiver().vertex_count();
        let mut m = vec![vec![0; n]; n];
        for b in self.basis() {
            m[b.source().0][b.target().0] += 1;
        }
        m
    }

    /// Re-derives successors from the quotient (`ab ∉ I` iff `ab` reduces to
    /// nonzero) and checks condition (M) plus agreement with the cycles.
    pub fn check_special_multiserial(&self) -> Vec<Check> {
        let q = self.quiver();
        let nonzero = |a: ArrowId, b: ArrowId| {
            self.reduce(&q.path(&[a, b]).expect("composable")).is_some()
        };
        let mut succ_w = Vec::new();
        let mut pred_w = Vec::new();
        let mut cyc_w = Vec::new();
        for a in q.arrow_ids() {
            let succ: Vec<ArrowId> = q.arrows_from(q.target(a)).filter(|&b| nonzero(a, b)).collect();
            let pred: Vec<ArrowId> = q.arrows_into(q.source(a)).filter(|&c| nonzero(c, a)).collect();
            if succ.len() > 1 {
                succ_w.push(format!("{}: {}", q.arrow_name(a), q.format_arrows(&succ)));
            }
            if pred.len() > 1 {
                pred_w.push(format!("{}: {}", q.arrow_name(a), q.format_arrows(&pred)));
            }
            if succ != [self.next_on_cycle(a)] {
                cyc_w.push(q.arrow_name(a).to_string());
            }
        }
        vec![
            Check::from_witnesses("at most one successor outside I", succ_w),
            Check::from_witnesses("at most one predecessor outside I", pred_w),
            Check::from_witnesses("successor is the next arrow on the cycle", cyc_w),
        ]
    }

    /// Every path of length [`nilpotency_bound`] reduces to zero. Only paths
    /// whose proper prefixes are nonzero need to be visited.
    pub fn check_nilpotency_bound(&self) -> Check {
        let q = self.quiver();
        let bound = nilpotency_bound(self.pair);
        let mut witnesses = Vec::new();
        let mut stack: Vec<Path> = q.arrow_ids().map(|a| q.arrow_path(a)).collect();
        while let Some(p) = stack.pop() {
            if self.reduce(&p).is_none() {
                continue;
            }
            if p.len() >= bound {
                witnesses.push(q.format_path(&p));
                continue;
            }
            for b in q.arrows_from(p.target()) {
                stack.push(compose(&p, &q.arrow_path(b)).expect("composable"));
            }
        }
        Check::from_witnesses(format!("paths of length {bound} vanish"), witnesses)
    }

    /// `(xy)z = x(yz)` on all basis triples.
    pub fn check_associativity(&self) -> Check {
        let basis = self.basis();
        let q = self.quiver();
        let mut witnesses = Vec::new();
        for x in &basis {
            for y in &basis {
                let xy = self.multiply_basis(x, y);
                for z in &basis {
                    let left = xy.as_ref().and_then(|xy| self.multiply_basis(xy, z));
                    let right = self.multiply_basis(y, z).and_then(|yz| self.multiply_basis(x, &yz));
                    if left != right {
                        witnesses.push(format!("({}, {}, {})", x.display(q), y.display(q), z.display(q)));
                    }
                }
            }
        }
        Check::from_witnesses("associativity", witnesses)
    }
}
