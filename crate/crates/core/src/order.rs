//! The endomorphism order of the direct sum of a radical chain.
//!
//! For a chain `R_1 ⊆ … ⊆ R_l`, the order `E = End(R_1 ⊕ … ⊕ R_l)` is the
//! `l×l` grid `E_ij = Hom(R_j, R_i)`, each entry a relative ideal over `R_1`.
//! Below the diagonal `E_ij = R_i`. The Jacobson radical follows the
//! repetition-aware row formula: with `a` the first occurrence of `R_i` and
//! `n_a` its multiplicity, row `i` of `J(E)` is `R_i` before the block,
//! `m_i` on the block columns `a ..= a+n_a−1`, and `E_ij` after it. The
//! indecomposable projectives are the rows, the simples their tops.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::chain::RadicalChain;
use crate::ideal::{colon, RelativeIdeal};

/// The order `E` together with its radical, stored per entry as value sets.
#[derive(Clone)]
pub struct EndomorphismOrder {
    chain: RadicalChain,
    entries: Vec<Vec<RelativeIdeal>>,
    radical: Vec<Vec<RelativeIdeal>>,
}

/// Row `i` of `E`: the projective `P_i` identified with its nonzero row.
#[derive(Clone, Debug)]
pub struct ProjectiveDescriptor {
    pub index: usize,
    pub row: Vec<RelativeIdeal>,
}

/// The simple `S_i = P_i / J(E)`: a copy of the residue field in row `i`,
/// supported on the columns of the repetition block of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleDescriptor {
    pub index: usize,
    /// First column of the support block (1-based).
    pub support_start: usize,
    /// Width of the support block (`n_a`).
    pub support_len: usize,
}

impl SimpleDescriptor {
    pub fn support(&self) -> std::ops::RangeInclusive<usize> {
        self.support_start..=self.support_start + self.support_len - 1
    }
}

/// Builds `E` and `J(E)` from a validated chain.
pub fn build_order(chain: &RadicalChain) -> EndomorphismOrder {
    let l = chain.len();
    let start = chain.start();
    let mut entries = Vec::with_capacity(l);
    for i in 1..=l {
        let r_i = chain.ring(i).as_ideal_over(start);
        let mut row = Vec::with_capacity(l);
        for j in 1..=l {
            let e_ij = if j <= i {
                // Hom(R_j, R_i) = R_i whenever R_j ⊆ R_i
                r_i.clone()
            } else {
                let r_j = chain.ring(j).as_ideal_over(start);
                colon(&r_i, &r_j).expect("entries share the starting ambient")
            };
            row.push(e_ij);
        }
        entries.push(row);
    }
    debug_assert!({
        // the shortcut below the diagonal agrees with the colon definition
        let ok = (1..=l).all(|i| {
            (1..=i).all(|j| {
                let r_i = chain.ring(i).as_ideal_over(start);
                let r_j = chain.ring(j).as_ideal_over(start);
                colon(&r_i, &r_j).unwrap().values() == entries[i - 1][j - 1].values()
            })
        });
        ok
    });

    let mut radical = Vec::with_capacity(l);
    for i in 1..=l {
        let rep = chain.repetition(i);
        let (a, n_a) = (rep.first, rep.count);
        let mut row = Vec::with_capacity(l);
        for j in 1..=l {
            let v = if j < a {
                entries[i - 1][j - 1].clone() // = R_i
            } else if j < a + n_a {
                RelativeIdeal::new(
                    chain.ring(i).values().without_zero(),
                    start.clone(),
                )
            } else {
                entries[i - 1][j - 1].clone()
            };
            row.push(v);
        }
        radical.push(row);
    }

    EndomorphismOrder { chain: chain.clone(), entries, radical }
}

impl EndomorphismOrder {
    pub fn chain(&self) -> &RadicalChain {
        &self.chain
    }

    /// Grid size `l`.
    pub fn size(&self) -> usize {
        self.chain.len()
    }

    /// `E_ij`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &RelativeIdeal {
        &self.entries[i - 1][j - 1]
    }

    /// `J(E)_ij`, 1-based.
    pub fn radical_entry(&self, i: usize, j: usize) -> &RelativeIdeal {
        &self.radical[i - 1][j - 1]
    }

    pub fn projective(&self, i: usize) -> ProjectiveDescriptor {
        assert!(i >= 1 && i <= self.size(), "projective index {i} out of range");
        ProjectiveDescriptor { index: i, row: self.entries[i - 1].clone() }
    }

    pub fn simple(&self, i: usize) -> SimpleDescriptor {
        assert!(i >= 1 && i <= self.size(), "simple index {i} out of range");
        let rep = self.chain.repetition(i);
        SimpleDescriptor { index: i, support_start: rep.first, support_len: rep.count }
    }

    /// Structural closure checks on generators: `E·E ⊆ E` and `E·J ⊆ J`.
    pub fn verify_closure(&self) -> bool {
        let l = self.size();
        for i in 1..=l {
            for j in 1..=l {
                for k in 1..=l {
                    let prod = self.entry(i, k).values().sum(self.entry(k, j).values());
                    if !prod.is_subset_of(self.entry(i, j).values()) {
                        return false;
                    }
                    let prod = self.entry(i, k).values().sum(self.radical_entry(k, j).values());
                    if !prod.is_subset_of(self.radical_entry(i, j).values()) {
                        return false;
                    }
                }
                if !self
                    .radical_entry(i, j)
                    .values()
                    .is_subset_of(self.entry(i, j).values())
                {
                    return false;
                }
            }
        }
        true
    }

    /// The shifted order: `a` copies of `R_1` prepended to the chain, then
    /// rebuilt. Block surgery on the grid is the cross-check in tests.
    pub fn ceil(&self, a: usize) -> EndomorphismOrder {
        if a == 0 {
            return self.clone();
        }
        build_order(&self.chain.prepend_start(a))
    }

    /// Renders the grid in matrix layout with `R_i`/`m_i` symbols where an
    /// entry equals a chain ring or its maximal ideal, and explicit value
    /// sets otherwise.
    pub fn pretty(&self, radical: bool) -> String {
        let l = self.size();
        let grid = if radical { &self.radical } else { &self.entries };
        let mut cells = vec![Vec::with_capacity(l); l];
        for i in 0..l {
            for j in 0..l {
                cells[i].push(self.symbol(grid[i][j].values()));
            }
        }
        let widths: Vec<usize> = (0..l)
            .map(|j| cells.iter().map(|row| row[j].chars().count()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for row in &cells {
            out.push('(');
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    out.push_str("  ");
                }
                let pad = widths[j] - cell.chars().count();
                out.push_str(cell);
                out.push_str(&" ".repeat(pad));
            }
            out.push_str(")\n");
        }
        out
    }

    fn symbol(&self, v: &crate::valueset::ValueSet) -> String {
        for (idx, ring) in self.chain.rings().iter().enumerate() {
            if v == ring.values() {
                return format!("R{}", idx + 1);
            }
            if *v == ring.values().without_zero() {
                return format!("m{}", idx + 1);
            }
        }
        let members: Vec<u64> = v.iter_below(v.conductor()).collect();
        format!("{{{:?}∪[{},∞)}}", members, v.conductor())
    }
}

impl Serialize for EndomorphismOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("EndomorphismOrder", 3)?;
        st.serialize_field("chain", &self.chain)?;
        st.serialize_field("entries", &self.entries)?;
        st.serialize_field("radical", &self.radical)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{greedy_chain, lazy_chain, validate_chain};
    use crate::semigroup::{family_ring, NumericalSemigroup};
    use crate::valueset::ValueSet;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn nat() -> NumericalSemigroup {
        NumericalSemigroup::natural()
    }

    /// The repeated five-ring tower used throughout the worked examples.
    fn five_ring_order() -> EndomorphismOrder {
        let r = sg(&[3, 4, 5]);
        let s = sg(&[2, 3]);
        let chain =
            validate_chain(vec![r.clone(), r, s.clone(), s, nat()]).unwrap();
        build_order(&chain)
    }

    #[test]
    fn five_ring_grids_match_the_worked_example() {
        let e = five_ring_order();
        let r1 = sg(&[3, 4, 5]);
        let r3 = sg(&[2, 3]);
        let r5 = nat();
        let m = |h: &NumericalSemigroup| h.values().without_zero();

        // E row by row: (R1 R1 m1 m1 m1 / same / R3 R3 R3 R3 m3 / same / R5×5)
        for j in 1..=2 {
            assert_eq!(e.entry(1, j).values(), r1.values());
            assert_eq!(e.entry(2, j).values(), r1.values());
        }
        for j in 3..=5 {
            assert_eq!(e.entry(1, j).values(), &m(&r1));
            assert_eq!(e.entry(2, j).values(), &m(&r1));
        }
        for i in 3..=4 {
            for j in 1..=4 {
                assert_eq!(e.entry(i, j).values(), r3.values());
            }
            assert_eq!(e.entry(i, 5).values(), &m(&r3));
        }
        for j in 1..=5 {
            assert_eq!(e.entry(5, j).values(), r5.values());
        }

        // J(E): rows 1–2 all m1; rows 3–4 (R3 R3 m3 m3 m3); row 5 (R5×4 m5)
        for i in 1..=2 {
            for j in 1..=5 {
                assert_eq!(e.radical_entry(i, j).values(), &m(&r1), "J({i},{j})");
            }
        }
        for i in 3..=4 {
            for j in 1..=2 {
                assert_eq!(e.radical_entry(i, j).values(), r3.values());
            }
            for j in 3..=5 {
                assert_eq!(e.radical_entry(i, j).values(), &m(&r3));
            }
        }
        for j in 1..=4 {
            assert_eq!(e.radical_entry(5, j).values(), r5.values());
        }
        assert_eq!(e.radical_entry(5, 5).values(), &m(&r5));

        assert!(e.verify_closure());
    }

    #[test]
    fn two_ring_order() {
        let chain = validate_chain(vec![sg(&[3, 4, 5]), nat()]).unwrap();
        let e = build_order(&chain);
        let r1 = sg(&[3, 4, 5]);
        assert_eq!(e.entry(1, 1).values(), r1.values());
        assert_eq!(e.entry(1, 2).values(), &r1.values().without_zero());
        assert_eq!(e.entry(2, 1).values(), nat().values());
        assert_eq!(e.entry(2, 2).values(), nat().values());
        assert_eq!(e.radical_entry(1, 1).values(), &r1.values().without_zero());
        assert_eq!(e.radical_entry(1, 2).values(), &r1.values().without_zero());
        assert_eq!(e.radical_entry(2, 1).values(), nat().values());
        assert_eq!(e.radical_entry(2, 2).values(), &ValueSet::tail(1));
    }

    #[test]
    fn degenerate_single_ring() {
        let chain = validate_chain(vec![nat()]).unwrap();
        let e = build_order(&chain);
        assert_eq!(e.size(), 1);
        assert_eq!(e.entry(1, 1).values(), &ValueSet::natural());
        assert_eq!(e.radical_entry(1, 1).values(), &ValueSet::tail(1));
    }

    #[test]
    fn projectives_and_simples() {
        let e = five_ring_order();
        let p1 = e.projective(1);
        assert_eq!(p1.index, 1);
        assert_eq!(p1.row.len(), 5);
        assert_eq!(p1.row[0].values(), sg(&[3, 4, 5]).values());
        // bottom row is all ℕ₀
        let p5 = e.projective(5);
        assert!(p5.row.iter().all(|v| v.values() == nat().values()));

        // S1 and S3 have two-column supports; S5 is a point
        assert_eq!(e.simple(1).support(), 1..=2);
        assert_eq!(e.simple(2).support(), 1..=2);
        assert_eq!(e.simple(3).support(), 3..=4);
        assert_eq!(e.simple(4).support(), 3..=4);
        assert_eq!(e.simple(5).support(), 5..=5);

        // distinct-ring chain: every support is one column
        let chain = greedy_chain(&family_ring(6, 10, 2).unwrap()).unwrap();
        let e = build_order(&chain);
        for i in 1..=e.size() {
            assert_eq!(e.simple(i).support(), i..=i);
        }
    }

    #[test]
    fn greedy_entries_are_lead_ideals() {
        // E_jb = R_{j, b−j} on a greedy family chain
        for (n, a, i) in [(6u64, 10u64, 2u64), (6, 11, 3), (8, 13, 3)] {
            let chain = greedy_chain(&family_ring(n, a, i).unwrap()).unwrap();
            let e = build_order(&chain);
            for j in 1..=e.size() {
                for b in 1..=e.size() {
                    let expect = if b <= j {
                        chain.ring(j).as_ideal()
                    } else {
                        chain.ring(j).lead_ideal(b - j).unwrap()
                    };
                    assert_eq!(
                        e.entry(j, b).values(),
                        expect.values(),
                        "n={n} a={a} i={i} entry ({j},{b})"
                    );
                }
            }
        }
    }

    #[test]
    fn ceil_matches_block_surgery() {
        let chain = validate_chain(vec![sg(&[3, 4, 5]), nat()]).unwrap();
        let e = build_order(&chain);
        let e1 = e.ceil(1);
        assert_eq!(e1.size(), 3);
        // displayed 3×3 grid: (R1 R1 m1 / R1 R1 m1 / R2 R2 R2)
        let r1 = sg(&[3, 4, 5]);
        for i in 1..=2 {
            for j in 1..=2 {
                assert_eq!(e1.entry(i, j).values(), r1.values());
            }
            assert_eq!(e1.entry(i, 3).values(), &r1.values().without_zero());
        }
        for j in 1..=3 {
            assert_eq!(e1.entry(3, j).values(), nat().values());
        }
        // radical of the shifted order = shifted radical
        for i in 1..=2 {
            for j in 1..=3 {
                assert_eq!(e1.radical_entry(i, j).values(), &r1.values().without_zero());
            }
        }
        assert_eq!(e1.radical_entry(3, 3).values(), &ValueSet::tail(1));

        // block surgery cross-check: A = E11, B = row 1, C = col 1
        let a = 2usize;
        let ea = e.ceil(a);
        let l = e.size();
        for i in 1..=a {
            for j in 1..=a {
                assert_eq!(ea.entry(i, j).values(), e.entry(1, 1).values());
            }
            for j in 1..=l {
                assert_eq!(ea.entry(i, a + j).values(), e.entry(1, j).values());
            }
        }
        for i in 1..=l {
            for j in 1..=a {
                assert_eq!(ea.entry(a + i, j).values(), e.entry(i, 1).values());
            }
            for j in 1..=l {
                assert_eq!(ea.entry(a + i, a + j).values(), e.entry(i, j).values());
            }
        }

        // identity and composition
        let e0 = e.ceil(0);
        assert_eq!(e0.size(), e.size());
        let via_two = e.ceil(1).ceil(2);
        let direct = e.ceil(3);
        assert_eq!(via_two.size(), direct.size());
        for i in 1..=direct.size() {
            for j in 1..=direct.size() {
                assert_eq!(via_two.entry(i, j).values(), direct.entry(i, j).values());
            }
        }
    }

    #[test]
    fn lazy_order_closure() {
        let chain = lazy_chain(&family_ring(6, 10, 1).unwrap()).unwrap();
        let e = build_order(&chain);
        assert!(e.verify_closure());
        for i in 1..=e.size() {
            for j in 1..=i {
                assert_eq!(e.entry(i, j).values(), chain.ring(i).values());
            }
        }
    }

    #[test]
    fn pretty_uses_ring_symbols() {
        let e = five_ring_order();
        let s = e.pretty(false);
        assert!(s.contains("R1"));
        assert!(s.contains("m1"));
        let sj = e.pretty(true);
        assert!(sj.contains("m3"));
    }
}
