//! Radical chains of semigroup rings.
//!
//! A radical chain is a tower `R_1 ⊆ R_2 ⊆ … ⊆ R_l = k[[t]]` with each
//! `R_{i+1} ⊆ End(m_i)`. Two canonical builders are provided: the lazy chain
//! adjoins `t^{F}` one gap at a time (maximal length), the greedy chain jumps
//! straight to `End(m_i)` (minimal length). Arbitrary towers are accepted by
//! [`validate_chain`], which also records the repetition metadata
//! `(a_i, n_{a_i})` (first index and multiplicity of each ring) that the
//! radical formula of the order needs.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::ideal::colon;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("the full semigroup ℕ₀ has no proper chain above it")]
    FullSemigroup,
    #[error("chain list is empty")]
    EmptyChain,
    #[error("not a radical chain at step {index}: {reason}")]
    NotAChain { index: usize, reason: String },
    #[error("last ring of the chain is not ℕ₀")]
    LastRingNotFull,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Lazy,
    Greedy,
    Custom,
}

/// Repetition metadata for one chain position: the first (1-based) index at
/// which this ring occurs, and how many times it occurs in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Repetition {
    pub first: usize,
    pub count: usize,
}

/// A validated tower `R_1 ⊆ … ⊆ R_l = ℕ₀`.
#[derive(Clone, PartialEq, Eq)]
pub struct RadicalChain {
    rings: Vec<NumericalSemigroup>,
    kind: ChainKind,
    repetition: Vec<Repetition>,
}

impl RadicalChain {
    pub fn len(&self) -> usize {
        self.rings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rings.is_empty()
    }

    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    /// The i-th ring, 1-based.
    pub fn ring(&self, i: usize) -> &NumericalSemigroup {
        &self.rings[i - 1]
    }

    pub fn rings(&self) -> &[NumericalSemigroup] {
        &self.rings
    }

    pub fn start(&self) -> &NumericalSemigroup {
        &self.rings[0]
    }

    /// Repetition metadata for position i (1-based).
    pub fn repetition(&self, i: usize) -> Repetition {
        self.repetition[i - 1]
    }

    /// First indices of each isomorphism class of rings, ascending.
    pub fn class_representatives(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = self.repetition.iter().map(|r| r.first).collect();
        reps.dedup();
        reps
    }

    /// Two positions carry the same ring (hence isomorphic projectives).
    pub fn same_class(&self, i: usize, j: usize) -> bool {
        self.repetition[i - 1].first == self.repetition[j - 1].first
    }

    /// Extends the tower by `a` copies of the starting ring in front,
    /// keeping metadata consistent. Used by the shift functor on orders.
    pub(crate) fn prepend_start(&self, a: usize) -> RadicalChain {
        let mut rings = vec![self.start().clone(); a];
        rings.extend(self.rings.iter().cloned());
        let repetition = compute_repetition(&rings);
        RadicalChain { rings, kind: ChainKind::Custom, repetition }
    }
}

impl std::fmt::Debug for RadicalChain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} chain {:?}", self.kind, self.rings)
    }
}

impl Serialize for RadicalChain {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RadicalChain", 2)?;
        let kind = match self.kind {
            ChainKind::Lazy => "lazy",
            ChainKind::Greedy => "greedy",
            ChainKind::Custom => "custom",
        };
        st.serialize_field("construction", kind)?;
        st.serialize_field("rings", &self.rings)?;
        st.end()
    }
}

fn compute_repetition(rings: &[NumericalSemigroup]) -> Vec<Repetition> {
    let n = rings.len();
    let mut rep = Vec::with_capacity(n);
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && rings[j] == rings[i] {
            j += 1;
        }
        for _ in i..j {
            rep.push(Repetition { first: i + 1, count: j - i });
        }
        i = j;
    }
    rep
}

/// The lazy chain: `R_{i+1} = R_i[[t^{F(R_i)}]]` until ℕ₀ is reached. Each
/// step adjoins exactly the current Frobenius number, so the length is
/// `genus(H) + 1` and every inclusion is strict.
pub fn lazy_chain(h: &NumericalSemigroup) -> Result<RadicalChain, ChainError> {
    if h.is_natural() {
        return Err(ChainError::FullSemigroup);
    }
    let cap = (h.frobenius() + 2) as usize;
    let mut rings = vec![h.clone()];
    let mut cur = h.clone();
    for _ in 0..cap {
        if cur.is_natural() {
            break;
        }
        let next = cur.adjoin(cur.frobenius() as u64);
        assert_ne!(next, cur, "lazy step must be strict");
        rings.push(next.clone());
        cur = next;
    }
    assert!(cur.is_natural(), "lazy chain exceeded its iteration cap");
    let repetition = compute_repetition(&rings);
    Ok(RadicalChain { rings, kind: ChainKind::Lazy, repetition })
}

/// The greedy chain: `R_{i+1} = End(m_i)` until ℕ₀ is reached. Every step is
/// strict because a non-regular local ring is a proper subring of the
/// endomorphism ring of its maximal ideal.
pub fn greedy_chain(h: &NumericalSemigroup) -> Result<RadicalChain, ChainError> {
    if h.is_natural() {
        return Err(ChainError::FullSemigroup);
    }
    let cap = (h.frobenius() + 2) as usize;
    let mut rings = vec![h.clone()];
    let mut cur = h.clone();
    for _ in 0..cap {
        if cur.is_natural() {
            break;
        }
        let m = cur.maximal_ideal();
        let end = colon(&m, &m).expect("same ambient by construction");
        let next = NumericalSemigroup::from_value_set_unchecked(end.values().clone());
        assert_ne!(next, cur, "greedy step must be strict");
        rings.push(next.clone());
        cur = next;
    }
    assert!(cur.is_natural(), "greedy chain exceeded its iteration cap");
    let repetition = compute_repetition(&rings);
    Ok(RadicalChain { rings, kind: ChainKind::Greedy, repetition })
}

/// Validates an arbitrary tower as a radical chain: inclusions
/// `R_i ⊆ R_{i+1}`, the radical condition `R_{i+1} ⊆ End(m_i)`, the last
/// ring equal to ℕ₀ and not repeated. Repeats elsewhere are allowed.
pub fn validate_chain(rings: Vec<NumericalSemigroup>) -> Result<RadicalChain, ChainError> {
    if rings.is_empty() {
        return Err(ChainError::EmptyChain);
    }
    let l = rings.len();
    if !rings[l - 1].is_natural() {
        return Err(ChainError::LastRingNotFull);
    }
    if l >= 2 && rings[l - 2].is_natural() {
        return Err(ChainError::NotAChain {
            index: l - 1,
            reason: "the normalization may not be repeated".into(),
        });
    }
    for i in 0..l - 1 {
        if !rings[i].values().is_subset_of(rings[i + 1].values()) {
            return Err(ChainError::NotAChain {
                index: i + 1,
                reason: format!("{:?} ⊄ {:?}", rings[i], rings[i + 1]),
            });
        }
        let m = rings[i].maximal_ideal();
        let end = colon(&m, &m).expect("same ambient");
        if !rings[i + 1].values().is_subset_of(end.values()) {
            return Err(ChainError::NotAChain {
                index: i + 1,
                reason: format!("ring {} is not inside End(m_{})", i + 2, i + 1),
            });
        }
    }
    let repetition = compute_repetition(&rings);
    Ok(RadicalChain { rings, kind: ChainKind::Custom, repetition })
}
