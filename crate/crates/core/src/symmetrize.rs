//! The symmetric algebra associated to a special multiserial presentation.
//!
//! Each (σ,τ)-maximal path `M` gets a fresh return arrow `a_M` from its end
//! to its start, closing `M` into a simple cycle of the enlarged quiver `Q*`.
//! Together with the σ-cycles these form a defining pair with constant
//! multiplicity `N`. Killing the fresh arrows maps the resulting algebra onto
//! the presentation, and [`verify_quotient`] certifies this generator by
//! generator.

use std::collections::BTreeSet;
use std::fmt;

use crate::cycle_algebra::CycleAlgebra;
use crate::defining_pair::{generate_relations, DefiningPair};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::oracle::{oracle_dimension, Generators, OracleOptions};
use crate::presentation::{derive_successors, maximal_paths, simple_cycles, Presentation, SuccessorTables};
use crate::quiver::{ArrowId, Path, Quiver};

/// Reserved prefix for generated arrow names.
pub const STAR_PREFIX: &str = "star_";

/// `star_` followed by the arrow names of `M` joined with dots.
pub fn star_arrow_name(quiver: &Quiver, m: &Path) -> String {
    let names: Vec<&str> = m.arrows().iter().map(|&a| quiver.arrow_name(a)).collect();
    format!("{STAR_PREFIX}{}", names.join("."))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverStar {
    base: Quiver,
    quiver: Quiver,
    /// Each maximal path of the base with its return arrow in `Q*`.
    star_arrows: Vec<(Path, ArrowId)>,
}

impl QuiverStar {
    pub fn base(&self) -> &Quiver {
        &self.base
    }

    /// `Q*`. Base arrows keep their indices; star arrows follow them.
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn star_arrows(&self) -> &[(Path, ArrowId)] {
        &self.star_arrows
    }

    pub fn is_star(&self, a: ArrowId) -> bool {
        a.0 >= self.base.arrow_count()
    }

    /// The simple cycle `M a_M` of `Q*`.
    pub fn closed_cycle(&self, m: &Path, a_m: ArrowId) -> Path {
        let mut arrows = m.arrows().to_vec();
        arrows.push(a_m);
        self.quiver.path(&arrows).expect("return arrow closes the path")
    }
}

fn build_from_tables(p: &Presentation, tables: &SuccessorTables) -> Result<QuiverStar> {
    let base = p.quiver().clone();
    let mut quiver = base.clone();
    let mut star_arrows = Vec::new();
    for m in maximal_paths(&base, tables)? {
        let name = star_arrow_name(&base, &m);
        let from = base.vertex_name(m.target()).to_string();
        let to = base.vertex_name(m.source()).to_string();
        let a_m = quiver.add_arrow(name.clone(), &from, &to).map_err(|e| match e {
            Error::DuplicateArrow(n) => Error::NameCollision(n),
            other => other,
        })?;
        star_arrows.push((m, a_m));
    }
    Ok(QuiverStar { base, quiver, star_arrows })
}

/// Adds one return arrow per maximal path.
pub fn build_qstar(p: &Presentation) -> Result<QuiverStar> {
    let tables = derive_successors(p)?;
    build_from_tables(p, &tables)
}

/// The presentation's successor tables, `Q*` and the defining pair on `Q*`.
#[derive(Debug, Clone)]
pub struct Symmetrization {
    pub tables: SuccessorTables,
    pub star: QuiverStar,
    pub pair: DefiningPair,
}

pub fn symmetrization(p: &Presentation) -> Result<Symmetrization> {
    let tables = derive_successors(p)?;
    let star = build_from_tables(p, &tables)?;
    let mu = u32::try_from(p.nilpotency())
        .map_err(|_| Error::InvalidPresentation("nilpotency does not fit in 32 bits".into()))?;
    let q = star.quiver();
    let mut reps = Vec::new();
    for c in simple_cycles(p.quiver(), &tables)? {
        reps.push((q.simple_cycle(c.path().clone())?, mu));
    }
    for (m, a_m) in star.star_arrows() {
        reps.push((q.simple_cycle(star.closed_cycle(m, *a_m))?, mu));
    }
    let pair = DefiningPair::close_under_rotation(q.clone(), reps)?;
    Ok(Symmetrization { tables, star, pair })
}

/// `S = 𝒞 ∪ {rotations of M a_M}` on `Q*` with `μ ≡ N`.
pub fn symmetrize(p: &Presentation) -> Result<DefiningPair> {
    Ok(symmetrization(p)?.pair)
}

/// `F: KQ* → KQ`: identity on vertices and base arrows, zero on star arrows.
#[derive(Debug, Clone)]
pub struct ProjectionMap<'a> {
    star: &'a QuiverStar,
}

impl<'a> ProjectionMap<'a> {
    pub fn arrow(&self, a: ArrowId) -> Option<ArrowId> {
        (!self.star.is_star(a)).then_some(a)
    }

    /// `F(p)`, or `None` when `p` passes through a star arrow.
    pub fn path(&self, p: &Path) -> Option<Path> {
        if p.is_trivial() {
            return Some(self.star.base.trivial_path(p.source()));
        }
        let arrows = p
            .arrows()
            .iter()
            .map(|&a| self.arrow(a))
            .collect::<Option<Vec<_>>>()?;
        Some(self.star.base.path(&arrows).expect("base arrows compose as in Q*"))
    }

    /// Linear extension; terms killed by `F` are dropped.
    pub fn combination<F: Field>(&self, field: &F, terms: &[(F::Elem, Path)]) -> Vec<(F::Elem, Path)> {
        let mut out: Vec<(F::Elem, Path)> = Vec::new();
        for (c, p) in terms {
            let Some(img) = self.path(p) else { continue };
            match out.iter_mut().find(|(_, q)| *q == img) {
                Some((acc, _)) => *acc = field.add(acc, c),
                None => out.push((c.clone(), img)),
            }
        }
        out.retain(|(c, _)| !field.is_zero(c));
        out
    }

    /// The first star arrow on `p`.
    pub fn killing_arrow(&self, p: &Path) -> Option<ArrowId> {
        p.arrows().iter().copied().find(|&a| self.star.is_star(a))
    }
}

pub fn projection<'a>(_p: &Presentation, star: &'a QuiverStar) -> ProjectionMap<'a> {
    ProjectionMap { star }
}

/// Why the image of a generator lies in `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    /// The path passes through a star arrow, so its image is zero.
    KilledByStarArrow { arrow: String },
    /// The image is a path of length at least the nilpotency index.
    LongPath { length: usize, nilpotency: usize },
    /// The image is a length-two path `ab` in `I`, with σ(a) recorded.
    ForbiddenQuadratic { sigma: String },
    /// Both terms of a binomial, each certified separately.
    BinomialBothTerms(Box<Justification>, Box<Justification>),
    /// No justification found; by the theory this indicates bad input or a bug.
    Uncertified { reason: String },
}

impl Justification {
    pub fn is_complete(&self) -> bool {
        match self {
            Justification::Uncertified { .. } => false,
            Justification::BinomialBothTerms(l, r) => l.is_complete() && r.is_complete(),
            _ => true,
        }
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::KilledByStarArrow { arrow } => write!(f, "killed by {arrow}"),
            Justification::LongPath { length, nilpotency } => {
                write!(f, "long path ({length} >= {nilpotency})")
            }
            Justification::ForbiddenQuadratic { sigma } => write!(f, "forbidden quadratic (sigma = {sigma})"),
            Justification::BinomialBothTerms(l, r) => write!(f, "both terms [{l}] [{r}]"),
            Justification::Uncertified { reason } => write!(f, "UNCERTIFIED: {reason}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationType {
    Type1,
    Type2,
    Type3,
}

impl fmt::Display for RelationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self {
            RelationType::Type1 => 1,
            RelationType::Type2 => 2,
            RelationType::Type3 => 3,
        };
        write!(f, "type{n}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedGenerator {
    pub kind: RelationType,
    /// The generator in `Q*`, rendered as arrow names (`p - q` for binomials).
    pub generator: String,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientCertificate {
    pub entries: Vec<CertifiedGenerator>,
}

impl QuotientCertificate {
    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(|e| e.justification.is_complete())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CertifiedGenerator> + '_ {
        self.entries.iter().filter(|e| !e.justification.is_complete())
    }

    pub fn count(&self, kind: RelationType) -> usize {
        self.entries.iter().filter(|e| e.kind == kind).count()
    }
}

struct Certifier<'a> {
    presentation: &'a Presentation,
    tables: &'a SuccessorTables,
    star: &'a QuiverStar,
    map: ProjectionMap<'a>,
}

impl Certifier<'_> {
    fn killed(&self, p: &Path) -> Option<Justification> {
        self.map.killing_arrow(p).map(|a| Justification::KilledByStarArrow {
            arrow: self.star.quiver().arrow_name(a).to_string(),
        })
    }

    /// Terms of Type 1 and Type 2 relations.
    fn long_or_killed(&self, p: &Path) -> Justification {
        if let Some(j) = self.killed(p) {
            return j;
        }
        let image = self.map.path(p).expect("no star arrow");
        let n = self.presentation.nilpotency();
        if image.len() >= n {
            Justification::LongPath { length: image.len(), nilpotency: n }
        } else {
            Justification::Uncertified {
                reason: format!("image has length {} < {n}", image.len()),
            }
        }
    }

    fn quadratic_or_killed(&self, p: &Path) -> Justification {
        if let Some(j) = self.killed(p) {
            return j;
        }
        let image = self.map.path(p).expect("no star arrow");
        let (a, b) = match image.arrows() {
            &[a, b] => (a, b),
            _ => {
                return Justification::Uncertified { reason: "not a length-two path".into() };
            }
        };
        let base = self.presentation.quiver();
        let sigma = self.tables.sigma(a);
        if sigma != Some(b) && self.presentation.quadratic_in_ideal(a, b) {
            Justification::ForbiddenQuadratic {
                sigma: crate::presentation::format_successor(base, sigma),
            }
        } else {
            Justification::Uncertified {
                reason: format!("{} is not in I", base.format_path(&image)),
            }
        }
    }
}

/// Applies `F` to every generator of `I*` and certifies that the image lies in `I`.
pub fn verify_quotient(p: &Presentation) -> Result<QuotientCertificate> {
    let sym = symmetrization(p)?;
    let rels = generate_relations(&sym.pair);
    let q = sym.star.quiver();
    let cert = Certifier {
        presentation: p,
        tables: &sym.tables,
        star: &sym.star,
        map: ProjectionMap { star: &sym.star },
    };
    let mut entries = Vec::with_capacity(rels.len());
    for (l, r) in &rels.type1 {
        entries.push(CertifiedGenerator {
            kind: RelationType::Type1,
            generator: format!("{} - {}", q.format_path(l), q.format_path(r)),
            justification: Justification::BinomialBothTerms(
                Box::new(cert.long_or_killed(l)),
                Box::new(cert.long_or_killed(r)),
            ),
        });
    }
    for g in &rels.type2 {
        entries.push(CertifiedGenerator {
            kind: RelationType::Type2,
            generator: q.format_path(g),
            justification: cert.long_or_killed(g),
        });
    }
    for g in &rels.type3 {
        entries.push(CertifiedGenerator {
            kind: RelationType::Type3,
            generator: q.format_path(g),
            justification: cert.quadratic_or_killed(g),
        });
    }
    Ok(QuotientCertificate { entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionComparison {
    /// `dim A` from the oracle on the presentation.
    pub algebra: usize,
    /// `dim A*` from the closed form.
    pub symmetric: usize,
}

impl DimensionComparison {
    pub fn holds(&self) -> bool {
        self.algebra <= self.symmetric
    }
}

pub fn dimension_comparison<F: Field>(field: &F, p: &Presentation, opts: OracleOptions) -> Result<DimensionComparison> {
    let pair = symmetrize(p)?;
    let algebra = CycleAlgebra::new(&pair)?;
    let dim_a = oracle_dimension(field, p.quiver(), &Generators::from(p), p.nilpotency(), opts)?;
    Ok(DimensionComparison { algebra: dim_a.dimension, symmetric: algebra.dimension() })
}

/// Star arrows occur only on rotations of their own closed cycle, and every
/// base arrow lies on exactly one rotation class.
pub fn check_arrow_classes(sym: &Symmetrization) -> Vec<String> {
    let q = sym.star.quiver();
    let mut witnesses = Vec::new();
    for a in q.arrow_ids() {
        let classes: BTreeSet<Vec<ArrowId>> = sym
            .pair
            .cycles()
            .filter(|c| c.contains_arrow(a))
            .map(|c| c.canonical_arrows())
            .collect();
        if classes.len() != 1 {
            witnesses.push(format!("{} lies on {} classes", q.arrow_name(a), classes.len()));
        }
    }
    for (m, a_m) in sym.star.star_arrows() {
        let own = q
            .simple_cycle(sym.star.closed_cycle(m, *a_m))
            .expect("closed cycle is simple");
        for c in sym.pair.cycles().filter(|c| c.contains_arrow(*a_m)) {
            if !c.is_rotation_of(&own) {
                witnesses.push(format!("{} on {}", q.arrow_name(*a_m), q.format_path(c.path())));
            }
        }
    }
    witnesses
}
