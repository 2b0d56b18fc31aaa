//! Orientations of the low-order separations, the tangle and profile axioms,
//! exhaustive tangle enumeration, and orientations induced by majority vote.

mod search;

use std::collections::{BTreeSet, HashSet};

use crate::decider::WeightFunction;
use crate::error::{Error, Result};
use crate::sepsys::{enumerate_separations, GroundSystem, Separation, VertexSet};

pub use search::enumerate_tangles;

/// A choice of exactly one of `(A,B)`, `(B,A)` for every separation of
/// order `< k`. Well-formedness is checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    k: usize,
    chosen: BTreeSet<Separation>,
}

impl Orientation {
    pub fn from_chosen<I>(g: &GroundSystem, k: usize, chosen: I) -> Result<Self>
    where
        I: IntoIterator<Item = Separation>,
    {
        let universe = enumerate_separations(g, k)?;
        Self::from_chosen_in(g, k, &universe, chosen)
    }

    pub(crate) fn from_chosen_in<I>(
        g: &GroundSystem,
        k: usize,
        universe: &[Separation],
        chosen: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = Separation>,
    {
        let known: HashSet<&Separation> = universe.iter().collect();
        let mut set = BTreeSet::new();
        for s in chosen {
            if !known.contains(&s) {
                return Err(Error::MalformedOrientation(format!(
                    "{} is not a separation of order < {k}",
                    g.display(&s)
                )));
            }
            set.insert(s);
        }
        for s in &set {
            let inv = s.inverse();
            if inv != *s && set.contains(&inv) {
                return Err(Error::MalformedOrientation(format!(
                    "both {} and its inverse are chosen",
                    g.display(s)
                )));
            }
        }
        for s in universe {
            if !set.contains(s) && !set.contains(&s.inverse()) {
                return Err(Error::MalformedOrientation(format!(
                    "neither {} nor its inverse is chosen",
                    g.display(s)
                )));
            }
        }
        Ok(Orientation { k, chosen: set })
    }

    /// Reconstructs an orientation from its maximal elements by taking every
    /// separation of order `< k` below one of them.
    pub fn downward_closure(g: &GroundSystem, k: usize, maximal: &[Separation]) -> Result<Self> {
        let universe = enumerate_separations(g, k)?;
        let chosen: Vec<Separation> = universe
            .iter()
            .copied()
            .filter(|s| maximal.iter().any(|m| s.leq(m)))
            .collect();
        Self::from_chosen_in(g, k, &universe, chosen)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn chosen(&self) -> &BTreeSet<Separation> {
        &self.chosen
    }

    pub fn contains(&self, s: &Separation) -> bool {
        self.chosen.contains(s)
    }

    pub fn len(&self) -> usize {
        self.chosen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chosen.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Separation> {
        self.chosen.iter()
    }
}

/// Why an orientation fails the tangle or profile axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The three small sides cover every vertex and every edge.
    Cover([Separation; 3]),
    /// `smaller ≤ larger`, both of order `< k`, yet `smaller⁻¹` is chosen.
    Inconsistent {
        larger: Separation,
        smaller: Separation,
    },
    /// `corner = (B∩D, A∪C)` has order `< k` and is chosen, for chosen
    /// `(A,B)` and `(C,D)`.
    CornerReversal {
        first: Separation,
        second: Separation,
        corner: Separation,
    },
    /// `(V, X)` is chosen, i.e. the orientation points at a small set.
    Irregular(Separation),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleCertificate {
    pub verdict: bool,
    pub witness: Option<Violation>,
}

impl TangleCertificate {
    fn pass() -> Self {
        TangleCertificate {
            verdict: true,
            witness: None,
        }
    }

    fn fail(v: Violation) -> Self {
        TangleCertificate {
            verdict: false,
            witness: Some(v),
        }
    }

    /// Re-derives the violation from the witness alone.
    pub fn witness_reproduces(&self, g: &GroundSystem, o: &Orientation) -> bool {
        match &self.witness {
            None => self.verdict,
            Some(Violation::Cover(triple)) => {
                triple.iter().all(|s| o.contains(s))
                    && covers(g, [triple[0].small(), triple[1].small(), triple[2].small()])
            }
            Some(Violation::Inconsistent { larger, smaller }) => {
                o.contains(larger)
                    && o.contains(&smaller.inverse())
                    && smaller.leq(larger)
                    && smaller.order() < o.k()
            }
            Some(Violation::CornerReversal {
                first,
                second,
                corner,
            }) => {
                o.contains(first)
                    && o.contains(second)
                    && o.contains(corner)
                    && *corner
                        == Separation::new(
                            first.big() & second.big(),
                            first.small() | second.small(),
                        )
                    && corner.order() < o.k()
            }
            Some(Violation::Irregular(s)) => o.contains(s) && s.small() == g.vertices(),
        }
    }
}

/// Whether the induced subgraphs on the given sets together are the whole
/// ground system: every vertex in some set, every edge inside some set.
pub fn covers<const N: usize>(g: &GroundSystem, sides: [VertexSet; N]) -> bool {
    let union = sides.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s);
    union == g.vertices() && g.edges().iter().all(|&e| sides.iter().any(|&s| e.is_subset(s)))
}

/// No three (not necessarily distinct) small sides of chosen separations
/// cover the ground system.
///
/// Only maximal elements are tried: small sides grow along `≤`, so a
/// covering triple can always be lifted to maximal elements.
pub fn is_tangle(g: &GroundSystem, o: &Orientation) -> TangleCertificate {
    let maximal = maximal_elements(o);
    for (i, s) in maximal.iter().enumerate() {
        for (j, t) in maximal.iter().enumerate().skip(i) {
            for u in maximal.iter().skip(j) {
                if covers(g, [s.small(), t.small(), u.small()]) {
                    return TangleCertificate::fail(Violation::Cover([*s, *t, *u]));
                }
            }
        }
    }
    TangleCertificate::pass()
}

/// Regularity, consistency and the profile property, in that order.
pub fn is_profile(g: &GroundSystem, o: &Orientation) -> TangleCertificate {
    let v = g.vertices();
    if let Some(s) = o.iter().find(|s| s.small() == v) {
        return TangleCertificate::fail(Violation::Irregular(*s));
    }
    for larger in o.iter() {
        for other in o.iter() {
            let smaller = other.inverse();
            if smaller.leq(larger) && smaller.order() < o.k() {
                return TangleCertificate::fail(Violation::Inconsistent {
                    larger: *larger,
                    smaller,
                });
            }
        }
    }
    for first in o.iter() {
        for second in o.iter() {
            let corner = Separation::new(first.big() & second.big(), first.small() | second.small());
            if corner.order() < o.k() && o.contains(&corner) {
                return TangleCertificate::fail(Violation::CornerReversal {
                    first: *first,
                    second: *second,
                    corner,
                });
            }
        }
    }
    TangleCertificate::pass()
}

/// The chosen separations not strictly below another chosen one, in
/// canonical order. This order fixes the indexing used by the decider.
pub fn maximal_elements(o: &Orientation) -> Vec<Separation> {
    o.iter()
        .filter(|s| !o.iter().any(|t| t != *s && s.leq(t)))
        .copied()
        .collect()
}

/// Outcome of orienting every separation towards the heavier side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Induced {
    Decided(Orientation),
    /// One representative per unordered pair whose sides weigh the same.
    Ties(Vec<Separation>),
}

impl Induced {
    pub fn orientation(&self) -> Option<&Orientation> {
        match self {
            Induced::Decided(o) => Some(o),
            Induced::Ties(_) => None,
        }
    }
}

fn induce_by(g: &GroundSystem, k: usize, measure: impl Fn(VertexSet) -> u128) -> Result<Induced> {
    let universe = enumerate_separations(g, k)?;
    let mut chosen = Vec::new();
    let mut ties = Vec::new();
    for s in universe.iter().filter(|s| s.canonical() == **s) {
        let (a, b) = (measure(s.small()), measure(s.big()));
        match a.cmp(&b) {
            std::cmp::Ordering::Less => chosen.push(*s),
            std::cmp::Ordering::Greater => chosen.push(s.inverse()),
            std::cmp::Ordering::Equal => ties.push(*s),
        }
    }
    if ties.is_empty() {
        Ok(Induced::Decided(Orientation::from_chosen_in(g, k, &universe, chosen)?))
    } else {
        Ok(Induced::Ties(ties))
    }
}

/// Chooses `(A,B)` when `|A∩X| < |B∩X|`.
pub fn induce_from_set(g: &GroundSystem, k: usize, x: VertexSet) -> Result<Induced> {
    induce_by(g, k, |s| (s & x).len() as u128)
}

/// Chooses `(A,B)` when `w(A) < w(B)`.
pub fn induce_from_weights(g: &GroundSystem, k: usize, w: &WeightFunction) -> Result<Induced> {
    if w.len() != g.vertex_count() {
        return Err(Error::InvalidWeights(format!(
            "{} weights for {} vertices",
            w.len(),
            g.vertex_count()
        )));
    }
    induce_by(g, k, |s| w.weight_of(s))
}
