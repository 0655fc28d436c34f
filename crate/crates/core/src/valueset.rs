//! Cofinite sets of non-negative integers ("value sets").
//!
//! Every set handled by this crate — a numerical semigroup, a fractional
//! ideal, a Hom module between semigroup rings — contains a full tail
//! `[c, ∞)`. A `ValueSet` therefore stores an exact bit table on `[0, c)`
//! together with the conductor `c`, and all arithmetic (Minkowski sums,
//! colon quotients, shifts) is exact: finite work below the conductor,
//! symbolic tail above it.

use serde::{Deserialize, Serialize};

const WORD: usize = 64;

/// A set `S ⊆ ℕ₀` with `[conductor, ∞) ⊆ S`, canonicalized so that the
/// conductor is minimal (either `conductor == 0` or `conductor − 1 ∉ S`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ValueSet {
    bits: Vec<u64>,
    conductor: u64,
}

impl ValueSet {
    /// The full set ℕ₀.
    pub fn natural() -> Self {
        ValueSet { bits: Vec::new(), conductor: 0 }
    }

    /// The tail `[c, ∞)`.
    pub fn tail(c: u64) -> Self {
        let mut s = ValueSet { bits: vec![0; Self::words(c)], conductor: c };
        s.canonicalize();
        s
    }

    /// Builds a set from a membership table on `[0, table.len())` under the
    /// promise that every `n ≥ table.len()` is a member.
    pub fn from_table(table: &[bool]) -> Self {
        let conductor = table.len() as u64;
        let mut s = ValueSet { bits: vec![0; Self::words(conductor)], conductor };
        for (n, &m) in table.iter().enumerate() {
            if m {
                s.set_bit(n as u64);
            }
        }
        s.canonicalize();
        s
    }

    /// Builds `{values} ∪ [tail_from, ∞)`.
    pub fn from_values_and_tail(values: &[u64], tail_from: u64) -> Self {
        let mut table = vec![false; tail_from as usize];
        for &v in values {
            if v < tail_from {
                table[v as usize] = true;
            }
        }
        Self::from_table(&table)
    }

    fn words(len: u64) -> usize {
        (len as usize).div_ceil(WORD)
    }

    fn set_bit(&mut self, n: u64) {
        self.bits[n as usize / WORD] |= 1u64 << (n as usize % WORD);
    }

    fn get_bit(&self, n: u64) -> bool {
        (self.bits[n as usize / WORD] >> (n as usize % WORD)) & 1 == 1
    }

    fn canonicalize(&mut self) {
        while self.conductor > 0 && self.get_bit(self.conductor - 1) {
            self.conductor -= 1;
        }
        let w = Self::words(self.conductor);
        self.bits.truncate(w);
        if self.conductor % WORD as u64 != 0 {
            if let Some(last) = self.bits.last_mut() {
                *last &= (1u64 << (self.conductor % WORD as u64)) - 1;
            }
        }
    }

    /// Least `c` with `[c, ∞) ⊆ S`.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        n >= self.conductor || self.get_bit(n)
    }

    pub fn is_natural(&self) -> bool {
        self.conductor == 0
    }

    /// Least element of the set.
    pub fn min(&self) -> u64 {
        self.iter_below(self.conductor).next().unwrap_or(self.conductor)
    }

    /// Members strictly below `bound`, ascending.
    pub fn iter_below(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (0..bound).filter(move |&n| self.contains(n as i64))
    }

    /// Complement `[0, conductor) \ S`, ascending. Finite by construction.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&n| !self.get_bit(n)).collect()
    }

    /// Removes `0` from the set (used to pass from a ring to its maximal ideal).
    pub fn without_zero(&self) -> Self {
        if !self.contains(0) {
            return self.clone();
        }
        let mut table: Vec<bool> =
            (0..self.conductor.max(1)).map(|n| self.contains(n as i64)).collect();
        table[0] = false;
        Self::from_table(&table)
    }

    /// `{n + d : n ∈ S}`.
    pub fn shift(&self, d: u64) -> Self {
        let c = self.conductor + d;
        let mut table = vec![false; c as usize];
        for n in self.iter_below(self.conductor) {
            table[(n + d) as usize] = true;
        }
        Self::from_table(&table)
    }

    /// Minkowski sum `{a + b : a ∈ S, b ∈ T}`.
    pub fn sum(&self, other: &Self) -> Self {
        let c = self.conductor + other.conductor;
        let mut table = vec![false; c as usize];
        for a in self.iter_below(c) {
            for b in other.iter_below(c - a) {
                table[(a + b) as usize] = true;
            }
        }
        Self::from_table(&table)
    }

    pub fn union(&self, other: &Self) -> Self {
        let c = self.conductor.max(other.conductor);
        let table: Vec<bool> =
            (0..c).map(|n| self.contains(n as i64) || other.contains(n as i64)).collect();
        Self::from_table(&table)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let c = self.conductor.max(other.conductor);
        let table: Vec<bool> =
            (0..c).map(|n| self.contains(n as i64) && other.contains(n as i64)).collect();
        Self::from_table(&table)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        if other.conductor > self.conductor {
            // some n in [self.conductor, other.conductor) is in self (tail)
            // but must also be in other's table
            for n in self.conductor..other.conductor {
                if !other.contains(n as i64) {
                    return false;
                }
            }
        }
        self.iter_below(self.conductor).all(|n| other.contains(n as i64))
    }

    /// Colon quotient `{v ≥ 0 : v + other ⊆ self}`.
    ///
    /// The result contains `[self.conductor, ∞)` since `other ⊆ ℕ₀`, so the
    /// scan below `self.conductor` is exhaustive: for `v + n ≥ conductor`
    /// membership in `self` is automatic.
    pub fn colon(&self, other: &Self) -> Self {
        let c = self.conductor;
        let table: Vec<bool> = (0..c)
            .map(|v| other.iter_below(c - v).all(|n| self.contains((v + n) as i64)))
            .collect();
        Self::from_table(&table)
    }

    /// Checks `S + H ⊆ S` exhaustively below `bound`.
    pub fn is_stable_under(&self, h: &Self, bound: u64) -> bool {
        for s in self.iter_below(bound) {
            for m in h.iter_below(bound.saturating_sub(s)) {
                if !self.contains((s + m) as i64) {
                    return false;
                }
            }
        }
        true
    }

    /// Minimal `G ⊆ S` with `S = ∪_{g ∈ G} (g + ambient)`, by the greedy
    /// ascending sieve. `ambient` must contain 0.
    pub fn module_generators(&self, ambient: &Self) -> Vec<u64> {
        debug_assert!(ambient.contains(0));
        let bound = self.conductor + ambient.conductor + 1;
        let mut gens: Vec<u64> = Vec::new();
        for v in self.iter_below(bound) {
            if !gens.iter().any(|&g| ambient.contains(v as i64 - g as i64)) {
                gens.push(v);
            }
        }
        gens
    }
}

impl std::fmt::Debug for ValueSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let below: Vec<u64> = self.iter_below(self.conductor).collect();
        write!(f, "{{{:?} ∪ [{}, ∞)}}", below, self.conductor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(values: &[u64], tail: u64) -> ValueSet {
        ValueSet::from_values_and_tail(values, tail)
    }

    #[test]
    fn canonical_conductor_is_minimal() {
        // {0, 2} ∪ [3, ∞) written with a sloppy table still canonicalizes
        let s = ValueSet::from_table(&[true, false, true, true, true, true]);
        assert_eq!(s.conductor(), 2);
        assert!(s.contains(0));
        assert!(!s.contains(1));
        assert!(s.contains(2));
        assert!(!s.contains(-1));
    }

    #[test]
    fn sum_shift_agree() {
        let a = vs(&[0, 6, 9], 11); // lead {0,6,9,11}
        let b = a.shift(6);
        let principal = ValueSet::from_values_and_tail(&[6], 7).sum(&a);
        // {6} ∪ [7,∞) sums with a to more than the shift; check the shift alone
        assert!(b.is_subset_of(&principal));
        assert_eq!(b.min(), 6);
        assert_eq!(b.conductor(), 17);
    }

    #[test]
    fn colon_of_maximal_ideal() {
        // H = lead{0,6,9,11}: End(m) = {0,3} ∪ [5,∞)
        let h = vs(&[0, 6, 9], 11);
        let m = h.without_zero();
        let e = m.colon(&m);
        assert_eq!(e, vs(&[0, 3], 5));
    }

    #[test]
    fn module_generators_cover_exactly() {
        let h = vs(&[0, 6, 9], 11);
        let e = vs(&[0, 3], 5);
        let gens = e.module_generators(&h);
        assert_eq!(gens, vec![0, 3, 5, 7, 8, 10]);
        // removing any generator breaks the cover
        for skip in 0..gens.len() {
            let rest: Vec<u64> =
                gens.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &g)| g).collect();
            let covered = |v: u64| rest.iter().any(|&g| h.contains(v as i64 - g as i64));
            assert!(!e.iter_below(e.conductor() + h.conductor() + 1).all(covered));
        }
    }
}
