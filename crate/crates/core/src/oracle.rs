//! Brute-force dimension of `KQ/I` by exact linear algebra in a truncated
//! path algebra.
//!
//! The caller promises that every path of length `>= bound` lies in `I`.
//! Paths shorter than the bound span the truncated algebra; the image of `I`
//! is the smallest subspace containing the generators and stable under
//! multiplication by arrows on either side.
//!
//! With `prune_monomials` set, paths containing a monomial generator are
//! removed up front: they are exactly the paths in the monomial part of `I`,
//! and the quotient by that part has the surviving paths as a basis. The
//! binomials are then closed up in that smaller space. Both modes compute the
//! same dimension.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::defining_pair::RelationSet;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{EchelonBasis, SparseVec};
use crate::presentation::Presentation;
use crate::quiver::{compose, ArrowId, Path, Quiver};

pub const DEFAULT_MAX_PATHS: usize = 200_000;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Generators {
    pub monomials: Vec<Path>,
    pub binomials: Vec<(Path, Path)>,
}

impl From<&RelationSet> for Generators {
    fn from(r: &RelationSet) -> Self {
        let mut monomials = r.type2.clone();
        monomials.extend(r.type3.iter().cloned());
        Generators { monomials, binomials: r.type1.clone() }
    }
}

impl From<&Presentation> for Generators {
    fn from(p: &Presentation) -> Self {
        Generators {
            monomials: p.zero_paths().iter().cloned().collect(),
            binomials: p.equal_pairs().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub max_paths: usize,
    pub prune_monomials: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { max_paths: DEFAULT_MAX_PATHS, prune_monomials: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleResult {
    pub dimension: usize,
    /// Paths spanning the truncated algebra.
    pub enumerated: usize,
    /// Rank of the ideal's image among them.
    pub ideal_rank: usize,
}

struct Truncation<'q> {
    quiver: &'q Quiver,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
}

impl Truncation<'_> {
    fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    fn extend(&self, p: &Path, a: ArrowId, right: bool) -> Option<usize> {
        let arrow = self.quiver.arrow_path(a);
        let prod = if right { compose(p, &arrow) } else { compose(&arrow, p) }?;
        self.index_of(&prod)
    }
}

fn enumerate<'q>(
    quiver: &'q Quiver,
    bound: usize,
    forbidden: &HashSet<Vec<ArrowId>>,
    max_paths: usize,
) -> Result<Truncation<'q>> {
    let mut paths: Vec<Path> = quiver.vertex_ids().map(|v| quiver.trivial_path(v)).collect();
    if paths.len() > max_paths {
        return Err(Error::BudgetExceeded { cap: max_paths });
    }
    let mut frontier: Vec<Path> = quiver.arrow_ids().map(|a| quiver.arrow_path(a)).collect();
    let mut len = 1;
    while len < bound && !frontier.is_empty() {
        frontier.retain(|p| {
            let arrows = p.arrows();
            !(1..=arrows.len()).any(|k| forbidden.contains(&arrows[arrows.len() - k..]))
        });
        if paths.len() + frontier.len() > max_paths {
            return Err(Error::BudgetExceeded { cap: max_paths });
        }
        let mut next = Vec::new();
        for p in &frontier {
            for b in quiver.arrows_from(p.target()) {
                next.push(compose(p, &quiver.arrow_path(b)).expect("composable"));
            }
        }
        paths.append(&mut frontier);
        frontier = next;
        len += 1;
    }
    let index = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    Ok(Truncation { quiver, paths, index })
}

/// Dimension of `KQ/I` where `I` is generated by `gens` and contains every
/// path of length `>= bound`.
pub fn oracle_dimension<F: Field>(
    field: &F,
    quiver: &Quiver,
    gens: &Generators,
    bound: usize,
    opts: OracleOptions,
) -> Result<OracleResult> {
    let forbidden: HashSet<Vec<ArrowId>> = if opts.prune_monomials {
        gens.monomials.iter().map(|m| m.arrows().to_vec()).collect()
    } else {
        HashSet::new()
    };
    let trunc = enumerate(quiver, bound, &forbidden, opts.max_paths)?;

    let term = |p: &Path| trunc.index_of(p);
    let mut queue: VecDeque<SparseVec<F::Elem>> = VecDeque::new();
    if !opts.prune_monomials {
        for m in &gens.monomials {
            if let Some(i) = term(m) {
                queue.push_back(SparseVec::from([(i, field.one())]));
            }
        }
    }
    for (p, q) in &gens.binomials {
        let mut v = SparseVec::new();
        if let Some(i) = term(p) {
            v.insert(i, field.one());
        }
        if let Some(j) = term(q) {
            let e = v.entry(j).or_insert_with(|| field.zero());
            *e = field.sub(e, &field.one());
        }
        v.retain(|_, c| !field.is_zero(c));
        if !v.is_empty() {
            queue.push_back(v);
        }
    }

    let mut span = EchelonBasis::new(field.clone());
    while let Some(v) = queue.pop_front() {
        if !span.insert(v.clone()) {
            continue;
        }
        for a in quiver.arrow_ids() {
            for right in [true, false] {
                let mut w = SparseVec::new();
                for (&i, c) in &v {
                    if let Some(j) = trunc.extend(&trunc.paths[i], a, right) {
                        let e = w.entry(j).or_insert_with(|| field.zero());
                        *e = field.add(e, c);
                    }
                }
                w.retain(|_, c| !field.is_zero(c));
                if !w.is_empty() {
                    queue.push_back(w);
                }
            }
        }
    }

    let enumerated = trunc.paths.len();
    Ok(OracleResult { dimension: enumerated - span.rank(), enumerated, ideal_rank: span.rank() })
}
