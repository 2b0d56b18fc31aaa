//! Brute-force verification, kept independent of the construction it checks.

use crate::decider::WeightFunction;
use crate::error::{Error, Result};
use crate::sepsys::{enumerate_separations, subsets_below, GroundSystem, Separation, VertexSet};
use crate::tangles::Orientation;

/// Above this many vertices the `3^|V|` brute force is refused.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeciderWitness {
    pub separation: Separation,
    pub weight_small: u128,
    pub weight_big: u128,
    pub in_orientation: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub ok: bool,
    pub checked: usize,
    pub witness: Option<DeciderWitness>,
}

/// Checks `(A,B) ∈ o ⇔ w(A) < w(B)` for every separation of order `< k`,
/// reporting the first failure in canonical order.
pub fn verify_decider(g: &GroundSystem, o: &Orientation, w: &WeightFunction) -> Result<VerificationReport> {
    if w.len() != g.vertex_count() {
        return Err(Error::InvalidWeights(format!(
            "{} weights for {} vertices",
            w.len(),
            g.vertex_count()
        )));
    }
    let universe = enumerate_separations(g, o.k())?;
    for (checked, s) in universe.iter().enumerate() {
        let (small, big) = (w.weight_of(s.small()), w.weight_of(s.big()));
        let inside = o.contains(s);
        if inside != (small < big) {
            return Ok(VerificationReport {
                ok: false,
                checked: checked + 1,
                witness: Some(DeciderWitness {
                    separation: *s,
                    weight_small: small,
                    weight_big: big,
                    in_orientation: inside,
                }),
            });
        }
    }
    Ok(VerificationReport {
        ok: true,
        checked: universe.len(),
        witness: None,
    })
}

/// Tries every `X ⊆ V` in increasing bitmask order and returns the first
/// that decides `o` by plain majority.
pub fn search_01_decider(g: &GroundSystem, o: &Orientation) -> Result<Option<VertexSet>> {
    let universe = enumerate_separations(g, o.k())?;
    let decides = |x: VertexSet| {
        universe
            .iter()
            .all(|s| o.contains(s) == ((s.small() & x).len() < (s.big() & x).len()))
    };
    Ok((0..1u64 << g.vertex_count())
        .map(VertexSet::from_bits)
        .find(|&x| decides(x)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountLawReport {
    pub ok: bool,
    pub enumerated: usize,
    pub brute_force: usize,
    pub formula: u128,
}

/// Compares the separator-first enumeration with a `3^|V|` brute force
/// over side assignments and with `Σ_{|C|<k} 2^{#components(G−C)}`.
pub fn count_law_check(g: &GroundSystem, k: usize) -> Result<CountLawReport> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::TooLarge {
            vertices: n,
            cap: BRUTE_FORCE_MAX_VERTICES,
        });
    }
    let mut enumerated = enumerate_separations(g, k)?;
    enumerated.sort();
    let brute = brute_force_separations(g, k);
    let mut formula = 0u128;
    subsets_below(n, k, |c| formula += 1u128 << component_count(g, c));
    Ok(CountLawReport {
        ok: enumerated == brute && enumerated.len() as u128 == formula,
        enumerated: enumerated.len(),
        brute_force: brute.len(),
        formula,
    })
}

/// Assigns each vertex to `A` only, `B` only, or both, keeping assignments
/// with small enough separator and no edge meeting both exclusive parts.
pub fn brute_force_separations(g: &GroundSystem, k: usize) -> Vec<Separation> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut code = vec![0u8; n];
    loop {
        let (mut a_only, mut b_only, mut both) = (0u64, 0u64, 0u64);
        for (v, &c) in code.iter().enumerate() {
            match c {
                0 => a_only |= 1 << v,
                1 => b_only |= 1 << v,
                _ => both |= 1 << v,
            }
        }
        let crosses = g
            .edges()
            .iter()
            .any(|e| e.bits() & a_only != 0 && e.bits() & b_only != 0);
        if (both.count_ones() as usize) < k && !crosses {
            out.push(Separation::new(
                VertexSet::from_bits(a_only | both),
                VertexSet::from_bits(b_only | both),
            ));
        }
        // base-3 increment
        let mut i = 0;
        while i < n && code[i] == 2 {
            code[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        code[i] += 1;
    }
    out.sort();
    out
}

/// Components of `G − removed` by union-find over edges.
fn component_count(g: &GroundSystem, removed: VertexSet) -> u32 {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in g.edges() {
        let alive: Vec<usize> = e.iter().filter(|&v| !removed.contains(v)).collect();
        for w in alive.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let mut roots: Vec<usize> = (0..n)
        .filter(|&v| !removed.contains(v))
        .map(|v| find(&mut parent, v))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len() as u32
}
