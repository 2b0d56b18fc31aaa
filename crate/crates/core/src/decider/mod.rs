//! Weight functions that decide a tangle: `(A,B) ∈ τ` iff `w(A) < w(B)`.
//!
//! The construction works on the maximal elements `(A₁,B₁), …, (Aₙ,Bₙ)` of
//! the orientation. With `m_ij = |Bᵢ ∩ Sⱼ| − |Aᵢ ∩ Sⱼ|` for separators
//! `Sⱼ = Aⱼ ∩ Bⱼ`, a non-negative `x` gives `w(v) = Σ_{i: v ∈ Sᵢ} xᵢ` with
//! margins `w(Bᵢ) − w(Aᵢ) = (Mx)ᵢ`. Splitting `M` into its symmetric part
//! `K'` (positive off the diagonal) and skew part `K`, a Tucker vector for
//! `K` makes `Mx > 0` except in one degenerate case, repaired by moving a
//! little weight onto the big side of the single failing separation.

mod weights;

use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ratlp::{int, scale_to_integers, tucker_solve, RatMatrix, Rational};
use crate::sepsys::{GroundSystem, Mode, Separation, VertexSet};
use crate::tangles::{is_profile, is_tangle, maximal_elements, Orientation};

pub use weights::WeightFunction;

/// `M` indexed by the canonical order of the maximal elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossMatrix {
    entries: Vec<Vec<i64>>,
}

impl CrossMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_integers(&self.entries).expect("square by construction")
    }
}

/// `m_ij = |Bᵢ ∩ (Aⱼ∩Bⱼ)| − |Aᵢ ∩ (Aⱼ∩Bⱼ)|`.
pub fn cross_matrix(maximals: &[Separation]) -> CrossMatrix {
    let entries = maximals
        .iter()
        .map(|si| {
            maximals
                .iter()
                .map(|sj| {
                    let sep = sj.separator();
                    (si.big() & sep).len() as i64 - (si.small() & sep).len() as i64
                })
                .collect()
        })
        .collect();
    CrossMatrix { entries }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossCountingFailure {
    /// `|Bᵢ∩Sⱼ| + |Bⱼ∩Sᵢ| ≤ |Aᵢ∩Sⱼ| + |Aⱼ∩Sᵢ|`.
    NotStrict { big: usize, small: usize },
    /// `|(Aᵢ∪Aⱼ) ∩ (Bᵢ∩Bⱼ)| < k`.
    Corner { order: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCountingViolation {
    pub i: usize,
    pub j: usize,
    pub failure: CrossCountingFailure,
}

/// Checks, for every pair of distinct maximal elements, the strict
/// cross-counting inequality and that their shared corner has order `≥ k`.
pub fn check_cross_counting(
    maximals: &[Separation],
    k: usize,
) -> std::result::Result<(), CrossCountingViolation> {
    for (i, si) in maximals.iter().enumerate() {
        for (j, sj) in maximals.iter().enumerate().skip(i + 1) {
            let (sep_i, sep_j) = (si.separator(), sj.separator());
            let big = (si.big() & sep_j).len() + (sj.big() & sep_i).len();
            let small = (si.small() & sep_j).len() + (sj.small() & sep_i).len();
            if big <= small {
                return Err(CrossCountingViolation {
                    i,
                    j,
                    failure: CrossCountingFailure::NotStrict { big, small },
                });
            }
            let corner = ((si.small() | sj.small()) & (si.big() & sj.big())).len();
            if corner < k {
                return Err(CrossCountingViolation {
                    i,
                    j,
                    failure: CrossCountingFailure::Corner { order: corner },
                });
            }
        }
    }
    Ok(())
}

/// `K' = (M + Mᵀ)/2` and `K = M − K'`.
pub fn split_symmetric(m: &RatMatrix) -> Result<(RatMatrix, RatMatrix)> {
    let sym = m.add(&m.transpose())?.scale(&Rational::new(1.into(), 2.into()));
    let skew = m.sub(&sym)?;
    Ok((sym, skew))
}

/// `w(v) = Σ_{i : v ∈ Aᵢ∩Bᵢ} xᵢ`.
pub fn assemble_weights(vertex_count: usize, maximals: &[Separation], x: &[Rational]) -> Vec<Rational> {
    let mut w = vec![Rational::zero(); vertex_count];
    for (s, xi) in maximals.iter().zip(x) {
        for v in s.separator().iter() {
            w[v] += xi;
        }
    }
    w
}

pub fn rational_weight(w: &[Rational], set: VertexSet) -> Rational {
    set.iter().fold(Rational::zero(), |acc, v| acc + &w[v])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// No maximal elements; the zero function decides vacuously.
    Empty,
    /// `Mx > 0` straight from the Tucker vector.
    Positive,
    /// One margin was zero and the bump fixed it.
    EpsilonBump,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Empty => "empty",
            Branch::Positive => "positive",
            Branch::EpsilonBump => "epsilon-bump",
        }
    }
}

/// What the construction did along the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub maximals: Vec<Separation>,
    pub x: Vec<Rational>,
    /// `w` from the Tucker vector, before any bump.
    pub unbumped: Vec<Rational>,
    /// `Mx`, equal to the margins of `unbumped`.
    pub margins: Vec<Rational>,
    pub branch: Branch,
    pub bumped_vertex: Option<usize>,
    pub epsilon: Option<Rational>,
    /// Rational weights after the bump, before scaling to integers.
    pub rational_weights: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Synthesis {
    pub weights: WeightFunction,
    pub provenance: Provenance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axioms {
    Tangle,
    Profile,
}

impl Axioms {
    pub fn for_mode(mode: Mode) -> Self {
        match mode {
            Mode::Setsep => Axioms::Profile,
            Mode::Graph | Mode::Hypergraph => Axioms::Tangle,
        }
    }
}

/// Tangle axioms for graphs and hypergraphs, profile axioms for bare set
/// separation universes.
pub fn synthesize_weights(g: &GroundSystem, o: &Orientation) -> Result<Synthesis> {
    synthesize_weights_as(g, o, Axioms::for_mode(g.mode()))
}

pub fn synthesize_weights_as(g: &GroundSystem, o: &Orientation, axioms: Axioms) -> Result<Synthesis> {
    let cert = match axioms {
        Axioms::Tangle => is_tangle(g, o),
        Axioms::Profile => is_profile(g, o),
    };
    if !cert.verdict {
        return Err(Error::AxiomViolation(format!("{:?}", cert.witness)));
    }

    let maximals = maximal_elements(o);
    let n = maximals.len();
    let nv = g.vertex_count();
    if n == 0 {
        return Ok(Synthesis {
            weights: WeightFunction::zero(g),
            provenance: Provenance {
                maximals,
                x: Vec::new(),
                unbumped: vec![Rational::zero(); nv],
                margins: Vec::new(),
                branch: Branch::Empty,
                bumped_vertex: None,
                epsilon: None,
                rational_weights: vec![Rational::zero(); nv],
            },
        });
    }

    let cross = cross_matrix(&maximals);
    if let Err(v) = check_cross_counting(&maximals, o.k()) {
        return Err(Error::Internal(format!("cross-counting fails on maximal elements: {v:?}")));
    }
    let m = cross.to_rational();
    let (sym, skew) = split_symmetric(&m)?;
    if !skew.is_skew_symmetric() || sym.add(&skew)? != m {
        return Err(Error::Internal("symmetric/skew split is inexact".into()));
    }

    let x = tucker_solve(&skew)?.into_inner();
    let unbumped = assemble_weights(nv, &maximals, &x);
    let mx = m.mul_vec(&x)?;
    let margins: Vec<Rational> = maximals
        .iter()
        .map(|s| rational_weight(&unbumped, s.big()) - rational_weight(&unbumped, s.small()))
        .collect();
    if margins != mx {
        return Err(Error::Internal("margins differ from Mx".into()));
    }

    let mut w = unbumped.clone();
    let (branch, bumped_vertex, epsilon) = if mx.iter().all(Signed::is_positive) {
        (Branch::Positive, None, None)
    } else {
        let zeros: Vec<usize> = (0..n).filter(|&i| mx[i].is_zero()).collect();
        let [i] = zeros[..] else {
            return Err(Error::Internal(format!("expected exactly one zero margin, Mx = {mx:?}")));
        };
        if mx.iter().any(Signed::is_negative) {
            return Err(Error::Internal(format!("negative margin in Mx = {mx:?}")));
        }
        let epsilon = mx
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v)
            .min()
            .map_or_else(Rational::one, |slack| slack / int(2));
        let v = (maximals[i].big() - maximals[i].small())
            .first()
            .ok_or_else(|| Error::Internal("maximal element with B∖A empty".into()))?;
        w[v] += &epsilon;
        (Branch::EpsilonBump, Some(v), Some(epsilon))
    };

    if let Some(bad) = maximals
        .iter()
        .position(|s| rational_weight(&w, s.small()) >= rational_weight(&w, s.big()))
    {
        return Err(Error::Internal(format!("maximal element {bad} not decided by rational weights")));
    }

    let scaled = scale_to_integers(&w)?;
    let weights = WeightFunction::new(
        g,
        scaled
            .iter()
            .map(|v: &BigUint| v.to_u64().ok_or(Error::WeightOverflow))
            .collect::<Result<Vec<u64>>>()?,
    )?;
    if let Some(bad) = maximals
        .iter()
        .position(|s| weights.weight_of(s.small()) >= weights.weight_of(s.big()))
    {
        return Err(Error::Internal(format!("maximal element {bad} not decided by integer weights")));
    }

    Ok(Synthesis {
        weights,
        provenance: Provenance {
            maximals,
            x,
            unbumped,
            margins: mx,
            branch,
            bumped_vertex,
            epsilon,
            rational_weights: w,
        },
    })
}

/// For every chosen `(C,D) ≤ (A,B)` with `(A,B)` maximal, checks
/// `w(C) ≤ w(A)` and `w(B) ≤ w(D)`. Returns the first failing
/// `(smaller, maximal)` pair.
pub fn monotone_extension_check(
    o: &Orientation,
    w: &WeightFunction,
) -> std::result::Result<(), (Separation, Separation)> {
    let maximals = maximal_elements(o);
    for smaller in o.iter() {
        for top in maximals.iter().filter(|m| smaller.leq(m)) {
            if w.weight_of(smaller.small()) > w.weight_of(top.small())
                || w.weight_of(top.big()) > w.weight_of(smaller.big())
            {
                return Err((*smaller, *top));
            }
        }
    }
    Ok(())
}
