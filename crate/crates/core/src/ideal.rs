//! Relative ideals: fractional-ideal value sets over a numerical semigroup.
//!
//! A relative ideal is a value set `I ⊆ ℕ₀` with `I + H ⊆ I` over its ambient
//! semigroup `H` and a full tail. These carry everything the order needs:
//! maximal ideals `m`, the Hom modules `Hom(R_j, R_i)` (realized as colon
//! quotients of value sets), and the lead-truncated ideals `R_{i,j}`.
//! All ideals here sit inside the power-series ring, so values are ≥ 0.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::semigroup::NumericalSemigroup;
use crate::valueset::ValueSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("ideals live over different ambient semigroups")]
    AmbientMismatch,
    #[error("lead index {index} out of range; Γ has {len} elements")]
    IndexOutOfRange { index: usize, len: usize },
}

/// A fractional-ideal value set over an ambient semigroup.
#[derive(Clone, PartialEq, Eq)]
pub struct RelativeIdeal {
    values: ValueSet,
    ambient: NumericalSemigroup,
}

impl RelativeIdeal {
    pub(crate) fn new(values: ValueSet, ambient: NumericalSemigroup) -> Self {
        let i = RelativeIdeal { values, ambient };
        debug_assert!(i.is_stable(), "not an ideal over its ambient: {i:?}");
        i
    }

    pub fn values(&self) -> &ValueSet {
        &self.values
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    pub fn contains(&self, n: i64) -> bool {
        self.values.contains(n)
    }

    /// Least `c` with `[c, ∞) ⊆ I`.
    pub fn conductor(&self) -> u64 {
        self.values.conductor()
    }

    /// Least member.
    pub fn min(&self) -> u64 {
        self.values.min()
    }

    /// Stability `I + H ⊆ I`, checked exhaustively on `[0, 2·conductor + Δ]`.
    pub fn is_stable(&self) -> bool {
        let bound = 2 * self.values.conductor() + 8;
        self.values.is_stable_under(self.ambient.values(), bound)
    }

    /// `{v + d : v ∈ I}` over the same ambient.
    pub fn shift(&self, d: u64) -> Self {
        RelativeIdeal { values: self.values.shift(d), ambient: self.ambient.clone() }
    }

    /// Minimal generators as an ambient-module: the greedy ascending sieve,
    /// so `I = ∪_g (g + ambient)` and no generator is redundant.
    pub fn generators(&self) -> Vec<u64> {
        self.values.module_generators(self.ambient.values())
    }

    /// Same value set viewed over a different ambient (used when a chain
    /// re-homes every ideal over its starting ring).
    pub fn over(&self, ambient: &NumericalSemigroup) -> Self {
        RelativeIdeal::new(self.values.clone(), ambient.clone())
    }
}

impl std::fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} over {:?}", self.values, self.ambient)
    }
}

impl Serialize for RelativeIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RelativeIdeal", 3)?;
        st.serialize_field("ambient", &self.ambient)?;
        st.serialize_field("generators", &self.generators())?;
        st.serialize_field("conductor", &self.conductor())?;
        st.end()
    }
}

/// `{v ≥ 0 : v + J ⊆ I}`, the value set of `Hom(J, I)` between modules over
/// the common ambient. Errors if the ambients differ.
pub fn colon(i: &RelativeIdeal, j: &RelativeIdeal) -> Result<RelativeIdeal, IdealError> {
    if i.ambient != j.ambient {
        return Err(IdealError::AmbientMismatch);
    }
    Ok(RelativeIdeal::new(i.values.colon(&j.values), i.ambient.clone()))
}

impl NumericalSemigroup {
    /// `H` viewed as an ideal over itself.
    pub fn as_ideal(&self) -> RelativeIdeal {
        RelativeIdeal::new(self.values().clone(), self.clone())
    }

    /// `H` viewed as an ideal over a smaller ring of the same chain.
    pub fn as_ideal_over(&self, ambient: &NumericalSemigroup) -> RelativeIdeal {
        RelativeIdeal::new(self.values().clone(), ambient.clone())
    }

    /// The maximal ideal: nonzero members of `H`.
    pub fn maximal_ideal(&self) -> RelativeIdeal {
        RelativeIdeal::new(self.values().without_zero(), self.clone())
    }

    /// `R_{i,j}`: members of `H` that are `≥ β_j` (the j-th element of Γ,
    /// 1-based); `j = 0` gives `H` itself and `j = 1` the maximal ideal.
    pub fn lead_ideal(&self, j: usize) -> Result<RelativeIdeal, IdealError> {
        let gamma = self.gamma();
        if j == 0 {
            return Ok(self.as_ideal());
        }
        if j > gamma.len() {
            return Err(IdealError::IndexOutOfRange { index: j, len: gamma.len() });
        }
        let beta = gamma[j - 1];
        let c = self.values().conductor().max(beta);
        let table: Vec<bool> = (0..c).map(|n| n >= beta && self.contains(n as i64)).collect();
        Ok(RelativeIdeal::new(ValueSet::from_table(&table), self.clone()))
    }
}

/// Checks the column-shift identity between consecutive rings of a greedy
/// family chain: `lead_ideal(H_j, b) = t^{e(H_j)} · lead_ideal(H_{j+1}, b−1)`
/// as value sets. `b` is 1-based into `Γ(H_j)`.
pub fn scaled_ideal_identity_check(
    h_j: &NumericalSemigroup,
    h_j1: &NumericalSemigroup,
    b: usize,
) -> bool {
    assert!(b >= 1 && b <= h_j.gamma().len(), "lead index {b} out of range");
    let lhs = h_j.lead_ideal(b).expect("b validated above");
    let rhs = match h_j1.lead_ideal(b - 1) {
        Ok(i) => i,
        Err(_) => return false,
    };
    lhs.values() == &rhs.values().shift(h_j.multiplicity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::family_ring;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    /// Brute-force oracle for the colon quotient, scanning v ∈ [0, bound).
    fn colon_oracle(i: &ValueSet, j: &ValueSet, bound: u64) -> Vec<u64> {
        (0..bound)
            .filter(|&v| {
                (0..bound.saturating_sub(v))
                    .all(|n| !j.contains(n as i64) || i.contains((v + n) as i64))
            })
            .collect()
    }

    #[test]
    fn end_of_maximal_ideal() {
        // H = lead{0,6,9,11}: End(m) = {0,3} ∪ [5,∞) = lead{0,3,5}
        let h = sg(&[6, 9, 11, 13, 14, 16]);
        let m = h.maximal_ideal();
        let e = colon(&m, &m).unwrap();
        assert_eq!(e.values(), &ValueSet::from_values_and_tail(&[0, 3], 5));
        // agree with the v-scan oracle on [0,30]
        let oracle = colon_oracle(m.values(), m.values(), 30);
        for v in 0..30 {
            assert_eq!(e.contains(v as i64), oracle.contains(&v), "v={v}");
        }
        assert_eq!(e.generators(), vec![0, 3, 5, 7, 8, 10]);
    }

    #[test]
    fn ring_is_its_own_endomorphisms() {
        for h in [sg(&[3, 4, 5]), sg(&[2, 3]), sg(&[5, 8, 17, 19]), NumericalSemigroup::natural()]
        {
            let i = h.as_ideal();
            assert_eq!(colon(&i, &i).unwrap().values(), h.values());
            // End(m) strictly contains H when H ≠ ℕ₀
            let m = h.maximal_ideal();
            let e = colon(&m, &m).unwrap();
            assert!(h.values().is_subset_of(e.values()));
            if !h.is_natural() {
                assert_ne!(e.values(), h.values());
            }
        }
    }

    #[test]
    fn hom_between_chain_rings() {
        // Hom(R_3, R_1) for R_1 = ⟨3,4,5⟩ ⊆ R_3 = ⟨2,3⟩ is m_1
        let h1 = sg(&[3, 4, 5]);
        let h3 = sg(&[2, 3]);
        let hom = colon(&h1.as_ideal(), &h3.as_ideal_over(&h1)).unwrap();
        assert_eq!(hom.values(), h1.maximal_ideal().values());
        // Hom(R_j, R_i) = R_i whenever R_j ⊆ R_i
        let hom_down = colon(&h3.as_ideal_over(&h1), &h1.as_ideal()).unwrap();
        assert_eq!(hom_down.values(), h3.values());
    }

    #[test]
    fn ambient_mismatch_detected() {
        let h1 = sg(&[3, 4, 5]);
        let h3 = sg(&[2, 3]);
        assert_eq!(
            colon(&h1.as_ideal(), &h3.as_ideal()),
            Err(IdealError::AmbientMismatch)
        );
    }

    #[test]
    fn maximal_ideals() {
        let h = sg(&[3, 4, 5]);
        let m = h.maximal_ideal();
        assert_eq!(m.values(), &ValueSet::tail(3));
        assert_eq!(m.conductor(), 3);
        assert_eq!(m.generators(), vec![3, 4, 5]);

        let n = NumericalSemigroup::natural().maximal_ideal();
        assert_eq!(n.values(), &ValueSet::tail(1));

        let h = sg(&[6, 9, 11, 13, 14, 16]);
        let m = h.maximal_ideal();
        assert!(m.contains(6) && m.contains(9) && m.contains(11) && m.contains(12));
        assert!(!m.contains(0) && !m.contains(10));
    }

    #[test]
    fn lead_ideals() {
        let h = sg(&[5, 8, 17, 19]);
        assert_eq!(h.lead_ideal(0).unwrap().values(), h.values());
        assert_eq!(h.lead_ideal(1).unwrap().values(), h.maximal_ideal().values());
        let r12 = h.lead_ideal(2).unwrap();
        for n in 0..40 {
            assert_eq!(r12.contains(n), n >= 8 && h.contains(n), "n={n}");
        }
        assert!(h.lead_ideal(6).is_err());
        // generators of H as an ideal over itself
        assert_eq!(h.as_ideal().generators(), vec![0]);
    }

    #[test]
    fn colon_containment_and_monotonicity() {
        let h = sg(&[6, 9, 11, 13, 14, 16]);
        let m = h.maximal_ideal();
        let r12 = h.lead_ideal(2).unwrap();
        // colon(I,J) + J ⊆ I
        let q = colon(&m, &r12).unwrap();
        let s = q.values().sum(r12.values());
        assert!(s.is_subset_of(m.values()));
        // J ⊆ J' ⇒ colon(I, J') ⊆ colon(I, J)
        assert!(r12.values().is_subset_of(m.values()));
        let q_small = colon(&m, &m).unwrap();
        assert!(q_small.values().is_subset_of(q.values()));
    }

    #[test]
    fn scaled_identity_on_greedy_steps() {
        // greedy chain of A_6^10(2): lead{0,6,9,11} → lead{0,3,5}
        let a2 = family_ring(6, 10, 2).unwrap();
        let m = a2.maximal_ideal();
        let next = colon(&m, &m).unwrap();
        // End(m) of lead{0,6,9,11} is lead{0,3,5} = ⟨3,5,7⟩
        let h_next = NumericalSemigroup::from_value_set_unchecked(next.values().clone());
        assert_eq!(h_next.lead_set(), vec![0, 3, 5]);
        assert_eq!(h_next.min_generators(), &[3, 5, 7]);
        assert!(scaled_ideal_identity_check(&a2, &h_next, 1));
        assert!(scaled_ideal_identity_check(&a2, &h_next, 2));
        // a non-chain pair fails
        assert!(!scaled_ideal_identity_check(&sg(&[2, 3]), &sg(&[3, 4, 5]), 1));
    }
}
