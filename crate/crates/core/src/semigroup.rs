//! Numerical semigroups and the associated subrings of `k[[t]]`.
//!
//! A numerical semigroup `H ⊆ ℕ₀` contains 0, is closed under addition and
//! misses only finitely many integers. Its ring `R(H) ⊆ k[[t]]` is spanned by
//! `t^n` for `n ∈ H`, so everything about `R(H)` used here is encoded by the
//! value set `H`: the Frobenius number `F(H)` (largest gap, −1 for ℕ₀), the
//! multiplicity `e(H)` (least nonzero member), and `Γ(H)` (nonzero members
//! `≤ F(H)+1`, which together with the tail determine `H`).

use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::valueset::ValueSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("gcd of generators is {0}, not 1")]
    NotCoprime(u64),
    #[error("family parameters out of range: n={n}, a={a}, i={i} (need n even ≥ 6, 3n/2+1 ≤ a ≤ 2n−1, i ≥ 1)")]
    BadFamilyParameters { n: u64, a: u64, i: u64 },
}

#[derive(Debug)]
struct Repr {
    values: ValueSet,
    min_generators: Vec<u64>,
    gamma: Vec<u64>,
}

/// A numerical semigroup with cached invariants. Cheap to clone and safe to
/// share across threads; immutable once built.
#[derive(Clone)]
pub struct NumericalSemigroup {
    repr: Arc<Repr>,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.repr, &other.repr) || self.repr.values == other.repr.values
    }
}
impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.repr.values.hash(state);
    }
}

impl NumericalSemigroup {
    /// Builds `⟨gens⟩`. The input need not be minimal: the unique minimal
    /// generating set is recomputed. Zeros in the input are ignored.
    pub fn from_generators(gens: &[u64]) -> Result<Self, SemigroupError> {
        let gens: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        let g = gens.iter().copied().fold(0u64, gcd);
        if g != 1 {
            return Err(SemigroupError::NotCoprime(g));
        }
        // Closure by dynamic programming, growing the bound until a window of
        // e consecutive members certifies the conductor.
        let e = *gens.iter().min().unwrap();
        let mut bound = (gens.iter().max().unwrap() * e + 1) as usize;
        loop {
            let mut table = vec![false; bound];
            table[0] = true;
            for n in 1..bound {
                table[n] = gens.iter().any(|&g| n >= g as usize && table[n - g as usize]);
            }
            if let Some(start) = conductor_window(&table, e as usize) {
                let values = ValueSet::from_table(&table[..start + 1]);
                return Ok(Self::from_value_set_unchecked(values));
            }
            bound *= 2;
        }
    }

    /// The full semigroup ℕ₀ (ring `k[[t]]`).
    pub fn natural() -> Self {
        Self::from_value_set_unchecked(ValueSet::natural())
    }

    /// Wraps an additively closed value set containing 0. Closure is the
    /// caller's responsibility; it is asserted in debug builds.
    pub(crate) fn from_value_set_unchecked(values: ValueSet) -> Self {
        debug_assert!(values.contains(0));
        debug_assert!(
            values.is_stable_under(&values, 2 * (values.conductor() + 1)),
            "value set is not additively closed: {values:?}"
        );
        let gamma: Vec<u64> = values.iter_below(values.conductor() + 1).filter(|&n| n > 0).collect();
        let min_generators = minimal_generators(&values);
        NumericalSemigroup { repr: Arc::new(Repr { values, min_generators, gamma }) }
    }

    /// Membership test; any `n > F(H)` is a member, negatives are not.
    pub fn contains(&self, n: i64) -> bool {
        self.repr.values.contains(n)
    }

    /// Frobenius number: the largest integer not in `H`, −1 for ℕ₀.
    pub fn frobenius(&self) -> i64 {
        self.repr.values.conductor() as i64 - 1
    }

    /// Multiplicity: least nonzero member (1 for ℕ₀).
    pub fn multiplicity(&self) -> u64 {
        if self.is_natural() {
            1
        } else {
            self.repr.gamma[0]
        }
    }

    /// `Γ(H)`: nonzero members `≤ F(H)+1`, ascending. Empty exactly for ℕ₀.
    pub fn gamma(&self) -> &[u64] {
        &self.repr.gamma
    }

    /// The unique minimal generating set, ascending.
    pub fn min_generators(&self) -> &[u64] {
        &self.repr.min_generators
    }

    /// Gaps `ℕ₀ \ H`, ascending; `max(gaps) = F(H)`.
    pub fn gaps(&self) -> Vec<u64> {
        self.repr.values.gaps()
    }

    /// Number of gaps (the genus).
    pub fn genus(&self) -> usize {
        self.gaps().len()
    }

    /// `{0} ∪ Γ(H)`; together with the tail above `F(H)` this determines `H`.
    pub fn lead_set(&self) -> Vec<u64> {
        let mut s = vec![0];
        s.extend_from_slice(self.gamma());
        s
    }

    pub fn is_natural(&self) -> bool {
        self.repr.values.is_natural()
    }

    pub fn values(&self) -> &ValueSet {
        &self.repr.values
    }

    /// `H[[b]] = ⟨min_generators(H), b⟩`; returns `H` itself iff `b ∈ H`.
    pub fn adjoin(&self, b: u64) -> Self {
        if self.contains(b as i64) {
            return self.clone();
        }
        // Adjoining a single gap b: the new members are b + H plus the old
        // members; recompute the closure from the generator list to stay
        // honest about arbitrary b.
        let mut gens = self.min_generators().to_vec();
        gens.push(b);
        Self::from_generators(&gens).expect("adjoining to a semigroup keeps gcd 1")
    }
}

impl std::fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_natural() {
            write!(f, "ℕ₀")
        } else {
            write!(f, "lead{:?}", self.lead_set())
        }
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("NumericalSemigroup", 4)?;
        st.serialize_field("generators", self.min_generators())?;
        st.serialize_field("frobenius", &self.frobenius())?;
        st.serialize_field("multiplicity", &self.multiplicity())?;
        st.serialize_field("gamma", self.gamma())?;
        st.end()
    }
}

/// The starting rings `A_n^a(i)`: for `i = 1` the ring `lead{0, n, 3n/2}`,
/// and for `i ≥ 2` the ring whose lead set is the multiples `jn/2`
/// (`j = 2..=i+1`) together with `a + 1 + (i−2)·n/2`.
///
/// Requires `n` even with `n ≥ 6`, `3n/2 + 1 ≤ a ≤ 2n − 1`, `i ≥ 1`; these
/// bounds are exactly what make the lead set additively closed.
pub fn family_ring(n: u64, a: u64, i: u64) -> Result<NumericalSemigroup, SemigroupError> {
    if n < 6 || n % 2 != 0 || a < 3 * n / 2 + 1 || a > 2 * n - 1 || i == 0 {
        return Err(SemigroupError::BadFamilyParameters { n, a, i });
    }
    let h = n / 2;
    let lead: Vec<u64> = if i == 1 {
        vec![n, 3 * h]
    } else {
        let mut v: Vec<u64> = (2..=i + 1).map(|j| j * h).collect();
        v.push(a + 1 + (i - 2) * h);
        v.sort_unstable();
        v
    };
    let tail_from = *lead.last().unwrap();
    let values = ValueSet::from_values_and_tail(
        &lead.iter().copied().chain(std::iter::once(0)).collect::<Vec<_>>(),
        tail_from,
    );
    Ok(NumericalSemigroup::from_value_set_unchecked(values))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// First index `s` such that `table[s..s+window]` is all true, if the table
/// certifies a conductor this way (a run of `e` consecutive members proves
/// everything above is a member).
fn conductor_window(table: &[bool], window: usize) -> Option<usize> {
    let mut run = 0;
    for (n, &m) in table.iter().enumerate() {
        if m {
            run += 1;
            if run == window {
                return Some(n + 1 - window);
            }
        } else {
            run = 0;
        }
    }
    None
}

/// Greedy ascending sieve: a member is a minimal generator iff it is not a
/// sum of two nonzero members. Members above `F + e` are always sums.
fn minimal_generators(values: &ValueSet) -> Vec<u64> {
    if values.is_natural() {
        return vec![1];
    }
    let c = values.conductor();
    let e = values.without_zero().min();
    let bound = c + e + 1;
    let mut gens = Vec::new();
    for m in values.iter_below(bound) {
        if m == 0 {
            continue;
        }
        let decomposable =
            (1..m).any(|x| values.contains(x as i64) && values.contains((m - x) as i64));
        if !decomposable {
            gens.push(m);
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: brute-force closure of a generator list up to a
    /// fixed bound, used to freeze derived expectations.
    fn closure_to(gens: &[u64], bound: usize) -> Vec<bool> {
        let mut t = vec![false; bound + 1];
        t[0] = true;
        for n in 1..=bound {
            t[n] = gens.iter().any(|&g| g > 0 && n >= g as usize && t[n - g as usize]);
        }
        t
    }

    #[test]
    fn paper_running_example() {
        let h = NumericalSemigroup::from_generators(&[5, 8, 17, 19]).unwrap();
        assert_eq!(h.frobenius(), 14);
        assert_eq!(h.multiplicity(), 5);
        assert_eq!(h.gamma(), &[5, 8, 10, 13, 15]);
        assert_eq!(h.lead_set(), vec![0, 5, 8, 10, 13, 15]);
        assert_eq!(h.min_generators(), &[5, 8, 17, 19]);
        assert!(!h.contains(14));
        assert!(h.contains(13));
        assert!(h.contains(0));
        assert!(!h.contains(-3));
    }

    #[test]
    fn full_semigroup() {
        let h = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert_eq!(h.frobenius(), -1);
        assert!(h.gamma().is_empty());
        assert_eq!(h.lead_set(), vec![0]);
        assert_eq!(h.multiplicity(), 1);
        assert!(h.is_natural());
        assert_eq!(h, NumericalSemigroup::natural());
    }

    #[test]
    fn non_coprime_is_rejected() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(SemigroupError::NotCoprime(2))
        );
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(SemigroupError::EmptyGenerators));
    }

    #[test]
    fn closure_oracle_places_frobenius() {
        // ⟨6,9,11,12,13⟩ misses 14 and 16: the brute-force closure places the
        // Frobenius number at 16, not below it.
        let t = closure_to(&[6, 9, 11, 12, 13], 40);
        let last_gap = (0..=40).rev().find(|&n| !t[n]).unwrap();
        assert_eq!(last_gap, 16);

        let h = NumericalSemigroup::from_generators(&[6, 9, 11, 12, 13]).unwrap();
        assert_eq!(h.frobenius(), 16);
        assert_eq!(h.multiplicity(), 6);
        assert_eq!(h.gamma(), &[6, 9, 11, 12, 13, 15, 17]);
        for n in 0..=40 {
            assert_eq!(h.contains(n as i64), t[n]);
        }
    }

    #[test]
    fn lead_0_6_9_11_and_its_minimal_generators() {
        // The semigroup {0,6,9} ∪ [11,∞): oracle says its minimal generating
        // set is {6,9,11,13,14,16}, with F=10, e=6, Γ={6,9,11}.
        let h = NumericalSemigroup::from_generators(&[6, 9, 11, 13, 14, 16]).unwrap();
        assert_eq!(h.frobenius(), 10);
        assert_eq!(h.multiplicity(), 6);
        assert_eq!(h.gamma(), &[6, 9, 11]);
        assert_eq!(h.min_generators(), &[6, 9, 11, 13, 14, 16]);
        let t = closure_to(&[6, 9, 11, 13, 14, 16], 30);
        for n in 0..=30 {
            assert_eq!(t[n], n == 0 || n == 6 || n == 9 || n >= 11);
        }
    }

    #[test]
    fn adjoin_frobenius_shrinks_gap_set() {
        let h = NumericalSemigroup::from_generators(&[5, 8, 17, 19]).unwrap();
        let h2 = h.adjoin(14);
        assert_eq!(h2.frobenius(), 12);
        assert_eq!(h2.gamma(), &[5, 8, 10, 13]);
        assert_eq!(h2.multiplicity(), 5);
        // adjoining a member is the identity
        assert_eq!(h.adjoin(13), h);
        assert_eq!(h.adjoin(0), h);
        // lead{0,6,9,11} adjoin 10 → {0,6} ∪ [9,∞)
        let g = NumericalSemigroup::from_generators(&[6, 9, 11, 13, 14, 16]).unwrap();
        let g2 = g.adjoin(10);
        assert_eq!(g2.frobenius(), 8);
        assert_eq!(g2.lead_set(), vec![0, 6, 9]);
    }

    #[test]
    fn family_instances() {
        let a1 = family_ring(6, 10, 1).unwrap();
        assert_eq!(a1.lead_set(), vec![0, 6, 9]);
        assert_eq!(a1.frobenius(), 8);
        for n in 0..30i64 {
            assert_eq!(a1.contains(n), n == 0 || n == 6 || n >= 9);
        }

        let a2 = family_ring(6, 10, 2).unwrap();
        assert_eq!(a2.lead_set(), vec![0, 6, 9, 11]);
        assert_eq!(a2.frobenius(), 10);

        let a3 = family_ring(6, 10, 3).unwrap();
        assert_eq!(a3.frobenius(), 13); // F(A(3)) = F(A(2)) + n/2
        assert_eq!(a3.lead_set(), vec![0, 6, 9, 12, 14]);

        assert!(family_ring(6, 9, 2).is_err());
        assert!(family_ring(6, 12, 2).is_err());
        assert!(family_ring(7, 11, 1).is_err());
        assert!(family_ring(4, 7, 1).is_err());
        assert!(family_ring(6, 10, 0).is_err());
    }

    #[test]
    fn family_frobenius_recursion() {
        for n in [6u64, 8] {
            for a in (3 * n / 2 + 1)..=(2 * n - 1) {
                let mut prev = family_ring(n, a, 2).unwrap().frobenius();
                for i in 3..=6 {
                    let f = family_ring(n, a, i).unwrap().frobenius();
                    assert_eq!(f, prev + (n / 2) as i64, "n={n} a={a} i={i}");
                    prev = f;
                }
            }
        }
    }

    #[test]
    fn small_semigroups() {
        let h = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(h.frobenius(), 1);
        assert_eq!(h.lead_set(), vec![0, 2]);
        assert_eq!(h.gaps(), vec![1]);
        assert_eq!(h.genus(), 1);

        let h = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        assert_eq!(h.frobenius(), 2);
        assert_eq!(h.min_generators(), &[3, 4, 5]);
    }

    #[test]
    fn generator_roundtrip_and_closure() {
        for gens in [vec![5u64, 8, 17, 19], vec![3, 4, 5], vec![2, 3], vec![6, 9, 11, 13, 14, 16]]
        {
            let h = NumericalSemigroup::from_generators(&gens).unwrap();
            let h2 = NumericalSemigroup::from_generators(h.min_generators()).unwrap();
            assert_eq!(h, h2);
            // additive closure on [0, 2(F+1)]
            let f1 = (h.frobenius() + 1) as u64;
            for x in h.values().iter_below(f1 + 1) {
                for y in h.values().iter_below(f1 + 1) {
                    assert!(h.contains((x + y) as i64));
                }
            }
            // everything above F is a member, spot-checked to 2F+2
            for n in (h.frobenius() + 1)..=(2 * h.frobenius() + 2) {
                assert!(h.contains(n));
            }
        }
    }

    #[test]
    fn json_shape() {
        let h = NumericalSemigroup::from_generators(&[5, 8, 17, 19]).unwrap();
        let j = serde_json::to_string(&h).unwrap();
        assert_eq!(
            j,
            "{\"generators\":[5,8,17,19],\"frobenius\":14,\"multiplicity\":5,\"gamma\":[5,8,10,13,15]}"
        );
    }
}
