//! Ground systems (graphs, hypergraphs, bare set-separation universes),
//! separations, and exhaustive enumeration of low-order separations.
//!
//! Vertices are named by strings and stored in lexicographic order; a vertex
//! set is a bitmask over that order, so separations compare structurally.

pub mod generators;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default upper bound on `|V|` for anything that enumerates separations.
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

/// Vertex sets are `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices of a [`GroundSystem`], bit `i` being the `i`-th
/// vertex in canonical order.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        VertexSet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest element in canonical order.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

/// Complement within all 64 bits; intersect with the full set before use.
impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Graph,
    Hypergraph,
    Setsep,
}

/// The universe separations live in: a vertex set plus the edges a
/// separation may not cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSystem {
    mode: Mode,
    names: Vec<String>,
    edges: Vec<VertexSet>,
    enumeration_cap: usize,
}

impl GroundSystem {
    pub fn new<V, E, S>(mode: Mode, vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator,
        E::Item: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let given = names.len();
        names.sort();
        names.dedup();
        if names.len() != given {
            return Err(Error::InvalidGround("duplicate vertex identifier".into()));
        }
        if names.len() > MAX_VERTICES {
            return Err(Error::TooLarge {
                vertices: names.len(),
                cap: MAX_VERTICES,
            });
        }

        let mut g = GroundSystem {
            mode,
            names,
            edges: Vec::new(),
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        };

        let mut edge_set = BTreeSet::new();
        for edge in edges {
            let members: Vec<S> = edge.into_iter().collect();
            let set = g.vertex_set(members.iter().map(AsRef::as_ref))?;
            match mode {
                Mode::Setsep => {
                    return Err(Error::InvalidGround(
                        "a set-separation universe has no edges".into(),
                    ))
                }
                Mode::Graph if members.len() != 2 || set.len() != 2 => {
                    return Err(Error::InvalidGround(format!(
                        "graph edge {:?} must join exactly two distinct vertices",
                        members.iter().map(AsRef::as_ref).collect::<Vec<_>>()
                    )))
                }
                Mode::Hypergraph if set.len() < 2 => {
                    return Err(Error::InvalidGround(format!(
                        "hyperedge {:?} must contain at least two distinct vertices",
                        members.iter().map(AsRef::as_ref).collect::<Vec<_>>()
                    )))
                }
                _ => {}
            }
            edge_set.insert(set);
        }
        g.edges = edge_set.into_iter().collect();
        Ok(g)
    }

    /// A simple graph from vertex names and edge pairs.
    pub fn graph<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        Self::new(
            Mode::Graph,
            vertices.iter().map(|v| v.as_ref().to_string()),
            edges.iter().map(|(u, v)| [u.as_ref(), v.as_ref()]),
        )
    }

    /// A set-separation universe over the given ground set.
    pub fn setsep<S: AsRef<str>>(vertices: &[S]) -> Result<Self> {
        Self::new(
            Mode::Setsep,
            vertices.iter().map(|v| v.as_ref().to_string()),
            std::iter::empty::<[&str; 0]>(),
        )
    }

    pub fn with_enumeration_cap(mut self, cap: usize) -> Self {
        self.enumeration_cap = cap.min(MAX_VERTICES);
        self
    }

    pub fn enumeration_cap(&self) -> usize {
        self.enumeration_cap
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.names.len())
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .map_err(|_| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertex_set<I, S>(&self, names: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        names
            .into_iter()
            .map(|n| self.index_of(n.as_ref()))
            .collect()
    }

    pub fn names_of(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|i| self.names[i].clone()).collect()
    }

    pub fn check_enumerable(&self) -> Result<()> {
        if self.vertex_count() > self.enumeration_cap {
            return Err(Error::TooLarge {
                vertices: self.vertex_count(),
                cap: self.enumeration_cap,
            });
        }
        Ok(())
    }

    /// `A ∪ B = V` and no edge meets both `A∖B` and `B∖A`.
    pub fn is_separation_sets(&self, a: VertexSet, b: VertexSet) -> bool {
        let v = self.vertices();
        if (a | b) != v || !a.is_subset(v) || !b.is_subset(v) {
            return false;
        }
        let (a_only, b_only) = (a - b, b - a);
        self.edges
            .iter()
            .all(|&e| !(e.intersects(a_only) && e.intersects(b_only)))
    }

    /// Name-level form of [`GroundSystem::is_separation_sets`]; unknown names are an error.
    pub fn is_separation<I, J, S, T>(&self, a: I, b: J) -> Result<bool>
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = T>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let a = self.vertex_set(a)?;
        let b = self.vertex_set(b)?;
        Ok(self.is_separation_sets(a, b))
    }

    /// Builds a checked separation from vertex names.
    pub fn separation<I, J, S, T>(&self, a: I, b: J) -> Result<Separation>
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = T>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let a = self.vertex_set(a)?;
        let b = self.vertex_set(b)?;
        self.separation_from_sets(a, b)
    }

    pub fn separation_from_sets(&self, a: VertexSet, b: VertexSet) -> Result<Separation> {
        if self.is_separation_sets(a, b) {
            Ok(Separation::new(a, b))
        } else {
            Err(Error::NotASeparation(self.display(&Separation::new(a, b))))
        }
    }

    /// Connected components of the ground system with `removed` deleted.
    /// A hyperedge links whatever of it survives the deletion.
    pub fn components_without(&self, removed: VertexSet) -> Vec<VertexSet> {
        let mut rest = self.vertices() - removed;
        let mut comps = Vec::new();
        while let Some(v) = rest.first() {
            let mut comp = VertexSet::singleton(v);
            loop {
                let mut grown = comp;
                for &e in &self.edges {
                    if e.intersects(comp) {
                        grown = grown | (e - removed);
                    }
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            rest = rest - comp;
            comps.push(comp);
        }
        comps
    }

    /// Human-readable `({a,b} | {b,c})`.
    pub fn display(&self, s: &Separation) -> String {
        format!(
            "({{{}}} | {{{}}})",
            self.names_of(s.small()).join(","),
            self.names_of(s.big()).join(",")
        )
    }
}

/// An oriented separation `(A, B)`; `A` is the small side, `B` the big side.
///
/// Validity against a ground system is checked at construction through
/// [`GroundSystem::separation`]; `Separation::new` itself is unchecked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Separation {
    a: VertexSet,
    b: VertexSet,
}

impl Separation {
    pub fn new(a: VertexSet, b: VertexSet) -> Self {
        Separation { a, b }
    }

    pub fn small(&self) -> VertexSet {
        self.a
    }

    pub fn big(&self) -> VertexSet {
        self.b
    }

    pub fn separator(&self) -> VertexSet {
        self.a & self.b
    }

    pub fn order(&self) -> usize {
        self.separator().len()
    }

    pub fn inverse(&self) -> Separation {
        Separation {
            a: self.b,
            b: self.a,
        }
    }

    /// `(A,B) ≤ (C,D)` iff `A ⊆ C` and `B ⊇ D`.
    pub fn leq(&self, other: &Separation) -> bool {
        self.a.is_subset(other.a) && other.b.is_subset(self.b)
    }

    /// The representative of `{s, s⁻¹}` used to index unordered pairs.
    pub fn canonical(&self) -> Separation {
        (*self).min(self.inverse())
    }
}

/// Visits every subset of `{0..n-1}` with fewer than `limit` elements,
/// by increasing size.
pub fn subsets_below(n: usize, limit: usize, mut f: impl FnMut(VertexSet)) {
    for size in 0..limit.min(n + 1) {
        if size == 0 {
            f(VertexSet::EMPTY);
            continue;
        }
        // Gosper's hack over n-bit words.
        let mut x: u128 = (1u128 << size) - 1;
        let end = 1u128 << n;
        while x < end {
            f(VertexSet::from_bits(x as u64));
            let c = x & x.wrapping_neg();
            let r = x + c;
            x = (((r ^ x) >> 2) / c) | r;
        }
    }
}

/// Every oriented separation of order `< k`, sorted, each exactly once.
///
/// Iterates candidate separators `C` with `|C| < k` and, for each, every
/// assignment of the components of `G − C` to the two sides.
pub fn enumerate_separations(g: &GroundSystem, k: usize) -> Result<Vec<Separation>> {
    g.check_enumerable()?;
    let n = g.vertex_count();
    let mut out = Vec::new();
    subsets_below(n, k, |sep| {
        let comps = g.components_without(sep);
        for choice in 0u64..(1u64 << comps.len()) {
            let (mut a, mut b) = (sep, sep);
            for (j, &c) in comps.iter().enumerate() {
                if choice >> j & 1 == 1 {
                    a = a | c;
                } else {
                    b = b | c;
                }
            }
            out.push(Separation::new(a, b));
        }
    });
    out.sort();
    Ok(out)
}
