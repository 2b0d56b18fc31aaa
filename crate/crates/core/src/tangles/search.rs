//! Backtracking enumeration of all k-tangles.
//!
//! Unordered pairs are decided in order of increasing separation order.
//! Choosing `(A,B)` forces every separation below it, since a tangle that
//! contains `(A,B)` and the inverse of some `(C,D) ≤ (A,B)` has two small
//! sides `A` and `D` that already cover the ground system. Cover checks are
//! incremental and only look at small sides of explicit choices; forced
//! elements lie below one of those.

use std::collections::HashMap;

use super::{covers, is_tangle, Orientation};
use crate::error::Result;
use crate::sepsys::{enumerate_separations, GroundSystem, Separation, VertexSet};

struct Search<'a> {
    g: &'a GroundSystem,
    k: usize,
    seps: Vec<Separation>,
    inverse: Vec<usize>,
    below: Vec<Vec<usize>>,
    /// Canonical representative of each unordered pair, in decision order.
    pairs: Vec<usize>,
    chosen: Vec<bool>,
    trail: Vec<usize>,
    sides: Vec<VertexSet>,
    found: Vec<Orientation>,
    limit: Option<usize>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.found.len() >= l)
    }

    fn decided(&self, idx: usize) -> bool {
        self.chosen[idx] || self.chosen[self.inverse[idx]]
    }

    /// Chooses `idx` and everything below it. Returns false on conflict;
    /// the caller unwinds the trail either way.
    fn choose(&mut self, idx: usize) -> bool {
        if !self.set(idx) {
            return false;
        }
        for t in 0..self.below[idx].len() {
            let lower = self.below[idx][t];
            if !self.set(lower) {
                return false;
            }
        }
        true
    }

    fn set(&mut self, idx: usize) -> bool {
        if self.chosen[idx] {
            return true;
        }
        if self.chosen[self.inverse[idx]] {
            return false;
        }
        self.chosen[idx] = true;
        self.trail.push(idx);
        true
    }

    fn unwind(&mut self, mark: usize) {
        for idx in self.trail.drain(mark..) {
            self.chosen[idx] = false;
        }
    }

    /// Whether adding small side `a` creates a covering triple with the
    /// sides chosen so far (repetition allowed).
    fn creates_cover(&self, a: VertexSet) -> bool {
        if covers(self.g, [a]) {
            return true;
        }
        for (i, &s) in self.sides.iter().enumerate() {
            if covers(self.g, [a, s]) {
                return true;
            }
            for &t in &self.sides[i..] {
                if covers(self.g, [a, s, t]) {
                    return true;
                }
            }
        }
        false
    }

    fn descend(&mut self, mut pos: usize) {
        while pos < self.pairs.len() && self.decided(self.pairs[pos]) {
            pos += 1;
        }
        if pos == self.pairs.len() {
            self.record();
            return;
        }
        let rep = self.pairs[pos];
        for idx in [rep, self.inverse[rep]] {
            if self.done() {
                return;
            }
            let a = self.seps[idx].small();
            let redundant = self.sides.iter().any(|&s| a.is_subset(s));
            if !redundant && self.creates_cover(a) {
                continue;
            }
            let mark = self.trail.len();
            if self.choose(idx) {
                if !redundant {
                    self.sides.push(a);
                }
                self.descend(pos + 1);
                if !redundant {
                    self.sides.pop();
                }
            }
            self.unwind(mark);
        }
    }

    fn record(&mut self) {
        let chosen = self
            .seps
            .iter()
            .zip(&self.chosen)
            .filter(|(_, &c)| c)
            .map(|(s, _)| *s);
        let o = Orientation::from_chosen_in(self.g, self.k, &self.seps, chosen)
            .expect("search assigns every pair exactly once");
        debug_assert!(is_tangle(self.g, &o).verdict);
        self.found.push(o);
    }
}

/// All k-tangles of `g`, at most `limit` of them, in a deterministic order.
pub fn enumerate_tangles(
    g: &GroundSystem,
    k: usize,
    limit: Option<usize>,
) -> Result<Vec<Orientation>> {
    let seps = enumerate_separations(g, k)?;
    let index: HashMap<Separation, usize> = seps.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let inverse: Vec<usize> = seps.iter().map(|s| index[&s.inverse()]).collect();
    let below: Vec<Vec<usize>> = seps
        .iter()
        .map(|s| {
            seps.iter()
                .enumerate()
                .filter(|(_, t)| *t != s && t.leq(s))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut pairs: Vec<usize> = (0..seps.len()).filter(|&i| inverse[i] >= i).collect();
    pairs.sort_by_key(|&i| (seps[i].order(), seps[i]));

    let n = seps.len();
    let mut search = Search {
        g,
        k,
        seps,
        inverse,
        below,
        pairs,
        chosen: vec![false; n],
        trail: Vec::new(),
        sides: Vec::new(),
        found: Vec::new(),
        limit,
    };
    if limit != Some(0) {
        search.descend(0);
    }
    Ok(search.found)
}
