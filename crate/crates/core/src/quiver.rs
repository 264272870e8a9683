//! Quivers, paths and simple cycles.
//!
//! Arrows are identified by name; parallel arrows and loops are allowed.
//! Paths are stored as arrow indices into their quiver together with the
//! endpoints, so the trivial path `e_v` is representable.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ArrowId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Debug, Clone, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a quiver from vertex names and `(name, source, target)` triples.
    pub fn from_parts<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let mut q = Quiver::new();
        for v in vertices {
            q.add_vertex(v)?;
        }
        for (name, s, t) in arrows {
            q.add_arrow(name, &s, &t)?;
        }
        Ok(q)
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<VertexId> {
        let name = name.into();
        if self.vertex_index.contains_key(&name) {
            return Err(Error::DuplicateVertex(name));
        }
        let id = VertexId(self.vertices.len());
        self.vertex_index.insert(name.clone(), id);
        self.vertices.push(name);
        Ok(id)
    }

    pub fn add_arrow(&mut self, name: impl Into<String>, source: &str, target: &str) -> Result<ArrowId> {
        let name = name.into();
        if self.arrow_index.contains_key(&name) {
            return Err(Error::DuplicateArrow(name));
        }
        let source = self.vertex(source)?;
        let target = self.vertex(target)?;
        let id = ArrowId(self.arrows.len());
        self.arrow_index.insert(name.clone(), id);
        self.arrows.push(Arrow { name, source, target });
        Ok(id)
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_id(&self, name: &str) -> Result<ArrowId> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a.0].name
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].target
    }

    /// Arrows starting at `v`, in declaration order.
    pub fn arrows_from(&self, v: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrow_ids().filter(move |&a| self.source(a) == v)
    }

    /// Arrows ending at `v`, in declaration order.
    pub fn arrows_into(&self, v: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrow_ids().filter(move |&a| self.target(a) == v)
    }

    pub fn trivial_path(&self, v: VertexId) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow_path(&self, a: ArrowId) -> Path {
        Path { source: self.source(a), target: self.target(a), arrows: vec![a] }
    }

    /// Builds a nontrivial path, checking that consecutive arrows compose.
    pub fn path(&self, arrows: &[ArrowId]) -> Result<Path> {
        let (&first, rest) = arrows.split_first().ok_or(Error::TrivialPath)?;
        if first.0 >= self.arrows.len() {
            return Err(Error::UnknownArrow(format!("#{}", first.0)));
        }
        let mut prev = first;
        for &a in rest {
            if a.0 >= self.arrows.len() {
                return Err(Error::UnknownArrow(format!("#{}", a.0)));
            }
            if self.target(prev) != self.source(a) {
                return Err(Error::NotComposable(
                    self.arrow_name(prev).to_string(),
                    self.arrow_name(a).to_string(),
                ));
            }
            prev = a;
        }
        Ok(Path {
            source: self.source(first),
            target: self.target(prev),
            arrows: arrows.to_vec(),
        })
    }

    /// Builds a path from arrow names.
    pub fn path_by_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Path> {
        let ids = names
            .iter()
            .map(|n| self.arrow_id(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.path(&ids)
    }

    /// Checks that a path value actually lives in this quiver.
    pub fn contains_path(&self, p: &Path) -> bool {
        if p.arrows.is_empty() {
            return p.source == p.target && p.source.0 < self.vertices.len();
        }
        match self.path(&p.arrows) {
            Ok(q) => q == *p,
            Err(_) => false,
        }
    }

    /// Concatenation `pq`, or `None` when the target of `p` is not the source of `q`.
    pub fn compose(&self, p: &Path, q: &Path) -> Option<Path> {
        compose(p, q)
    }

    /// Checks that `p` lives in this quiver and is a simple cycle.
    pub fn simple_cycle(&self, p: Path) -> Result<SimpleCycle> {
        if !self.contains_path(&p) {
            return Err(Error::ForeignPath(format!("{:?}", p.arrows())));
        }
        if p.is_trivial() || !p.is_cycle() {
            return Err(Error::NotACycle(self.format_path(&p)));
        }
        if !is_simple(&p) {
            return Err(Error::NotSimple(self.format_path(&p)));
        }
        Ok(SimpleCycle(p))
    }

    /// The cyclic permutation of `c` starting at its `i`-th arrow.
    pub fn rotation(&self, c: &SimpleCycle, i: usize) -> SimpleCycle {
        let n = c.len();
        let arrows: Vec<ArrowId> = (0..n).map(|k| c.arrows()[(i + k) % n]).collect();
        let v = self.source(arrows[0]);
        SimpleCycle(Path { source: v, target: v, arrows })
    }

    /// All `ℓ(c)` cyclic permutations of `c`, the `i`-th starting at arrow `i`.
    pub fn rotations(&self, c: &SimpleCycle) -> Vec<SimpleCycle> {
        (0..c.len()).map(|i| self.rotation(c, i)).collect()
    }

    pub fn format_arrows(&self, arrows: &[ArrowId]) -> String {
        arrows
            .iter()
            .map(|&a| self.arrow_name(a))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Arrow names separated by spaces, or `e_v` for a trivial path.
    pub fn format_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertex_name(p.source))
        } else {
            self.format_arrows(&p.arrows)
        }
    }

    /// Connected components of the underlying undirected graph.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for arrow in &self.arrows {
            let a = find(&mut parent, arrow.source.0);
            let b = find(&mut parent, arrow.target.0);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: std::collections::BTreeMap<usize, BTreeSet<VertexId>> = Default::default();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().insert(VertexId(v));
        }
        groups.into_values().collect()
    }

    /// Vertices with no incident arrow.
    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        self.vertex_ids()
            .filter(|&v| !self.arrows.iter().any(|a| a.source == v || a.target == v))
            .collect()
    }
}

/// A path in a quiver. Trivial paths have no arrows and `source == target`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn is_cycle(&self) -> bool {
        self.source == self.target
    }

    pub fn first(&self) -> Option<ArrowId> {
        self.arrows.first().copied()
    }

    pub fn last(&self) -> Option<ArrowId> {
        self.arrows.last().copied()
    }

    pub fn contains_arrow(&self, a: ArrowId) -> bool {
        self.arrows.contains(&a)
    }

    /// `self` repeated `n` times; `n` must be positive and `self` a cycle.
    pub fn power(&self, n: usize) -> Path {
        assert!(self.is_cycle() && n > 0, "power of a non-cycle");
        let mut arrows = Vec::with_capacity(self.arrows.len() * n);
        for _ in 0..n {
            arrows.extend_from_slice(&self.arrows);
        }
        Path { source: self.source, target: self.target, arrows }
    }
}

/// Concatenation `pq`; trivial paths act as identities at their vertex.
pub fn compose(p: &Path, q: &Path) -> Option<Path> {
    if p.target != q.source {
        return None;
    }
    let mut arrows = p.arrows.clone();
    arrows.extend_from_slice(&q.arrows);
    Some(Path { source: p.source, target: q.target, arrows })
}

/// A closed path of positive length with no repeated arrow. Vertices may repeat.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleCycle(Path);

impl SimpleCycle {
    pub fn new(path: Path) -> Result<Self> {
        if path.is_trivial() || !path.is_cycle() {
            return Err(Error::NotACycle(format!("{:?}", path.arrows)));
        }
        if !is_simple(&path) {
            return Err(Error::NotSimple(format!("{:?}", path.arrows)));
        }
        Ok(SimpleCycle(path))
    }

    pub fn path(&self) -> &Path {
        &self.0
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.0.arrows
    }

    pub fn len(&self) -> usize {
        self.0.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex(&self) -> VertexId {
        self.0.source
    }

    pub fn first_arrow(&self) -> ArrowId {
        self.0.arrows[0]
    }

    pub fn is_loop(&self) -> bool {
        self.len() == 1
    }

    pub fn contains_arrow(&self, a: ArrowId) -> bool {
        self.0.contains_arrow(a)
    }

    /// Position of `a` on the cycle.
    pub fn position(&self, a: ArrowId) -> Option<usize> {
        self.0.arrows.iter().position(|&b| b == a)
    }

    /// The arrow following `a` on the cycle, cyclically.
    pub fn next_arrow(&self, a: ArrowId) -> Option<ArrowId> {
        let i = self.position(a)?;
        Some(self.0.arrows[(i + 1) % self.len()])
    }

    /// The smallest rotation, as an arrow sequence; equal for rotation-equivalent cycles.
    pub fn canonical_arrows(&self) -> Vec<ArrowId> {
        let n = self.len();
        (0..n)
            .map(|i| (0..n).map(|k| self.0.arrows[(i + k) % n]).collect::<Vec<_>>())
            .min()
            .expect("nonempty cycle")
    }

    pub fn is_rotation_of(&self, other: &SimpleCycle) -> bool {
        self.len() == other.len() && self.canonical_arrows() == other.canonical_arrows()
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// True iff no arrow occurs twice.
pub fn is_simple(c: &Path) -> bool {
    let mut seen = BTreeSet::new();
    c.arrows.iter().all(|a| seen.insert(*a))
}

/// Whether `p` is a subpath of some power of `c`.
pub fn lies_in(p: &Path, c: &SimpleCycle) -> Result<bool> {
    if p.is_trivial() {
        return Err(Error::TrivialPath);
    }
    let cyc = c.arrows();
    let n = cyc.len();
    Ok((0..n).any(|offset| {
        p.arrows
            .iter()
            .enumerate()
            .all(|(k, &a)| cyc[(offset + k) % n] == a)
    }))
}
