//! Module-level data: frames of projectives, maps between them, finitely
//! generated submodules, and grid (row) modules, together with the shift
//! functor on each.
//!
//! A `Frame` is an ordered multiset of projective indices denoting
//! `⊕_s P_{a_s}`. A map between frames is a matrix of truncated series, the
//! `(s, q)` entry multiplying the `q`-th source summand into the `s`-th
//! target summand; its degrees must lie in `E[target][source]`. A map column
//! is therefore a column-pure element of the target frame, and the submodule
//! it generates is its orbit under the right action of the order.

use serde::{Deserialize, Serialize};

use crate::order::EndomorphismOrder;
use crate::valueset::ValueSet;

/// `⊕_s P_{summands[s]}`, indices 1-based into the chain.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Frame {
    pub summands: Vec<usize>,
}

impl Frame {
    pub fn new(summands: Vec<usize>) -> Self {
        Frame { summands }
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Index transport under the shift functor: summand 1 fans out into
    /// `a + 1` copies, higher indices move up by `a`.
    pub fn ceil(&self, a: usize) -> Frame {
        let mut summands = Vec::new();
        for &p in &self.summands {
            if p == 1 {
                summands.extend(1..=a + 1);
            } else {
                summands.push(p + a);
            }
        }
        Frame { summands }
    }

    pub fn direct_sum(&self, other: &Frame) -> Frame {
        let mut summands = self.summands.clone();
        summands.extend_from_slice(&other.summands);
        Frame { summands }
    }
}

/// One exact term `num/den · t^deg` of a map entry.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Term {
    pub deg: u32,
    pub num: i64,
    pub den: i64,
}

impl Term {
    pub fn new(deg: u32, num: i64, den: i64) -> Self {
        Term { deg, num, den }
    }
    pub fn monomial(deg: u32) -> Self {
        Term { deg, num: 1, den: 1 }
    }
}

/// A truncated-series entry: terms ascending by degree.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Entry {
    pub terms: Vec<Term>,
}

impl Entry {
    pub fn zero() -> Self {
        Entry { terms: Vec::new() }
    }
    pub fn monomial(deg: u32) -> Self {
        Entry { terms: vec![Term::monomial(deg)] }
    }
    pub fn signed_monomial(deg: u32, num: i64) -> Self {
        Entry { terms: vec![Term::new(deg, num, 1)] }
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
    pub fn lead_degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.deg)
    }
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.deg)
    }
}

/// A map `⊕_q P_{source[q]} → ⊕_s P_{target[s]}` given by `entries[s][q]`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ModuleMap {
    pub source: Frame,
    pub target: Frame,
    pub entries: Vec<Vec<Entry>>,
}

impl ModuleMap {
    pub fn new(source: Frame, target: Frame, entries: Vec<Vec<Entry>>) -> Self {
        assert_eq!(entries.len(), target.len(), "entry rows must match target");
        for row in &entries {
            assert_eq!(row.len(), source.len(), "entry columns must match source");
        }
        ModuleMap { source, target, entries }
    }

    /// Builds a map from monomial data `(target_row, source_col, degree, sign)`.
    pub fn from_monomials(
        source: Frame,
        target: Frame,
        monomials: &[(usize, usize, u32, i64)],
    ) -> Self {
        let mut entries = vec![vec![Entry::zero(); source.len()]; target.len()];
        for &(s, q, deg, num) in monomials {
            entries[s][q] = Entry::signed_monomial(deg, num);
        }
        ModuleMap::new(source, target, entries)
    }

    pub fn max_degree(&self) -> u32 {
        self.entries
            .iter()
            .flat_map(|row| row.iter().filter_map(Entry::max_degree))
            .max()
            .unwrap_or(0)
    }

    /// Every entry supported inside the corresponding `E` cell.
    pub fn well_defined_over(&self, order: &EndomorphismOrder) -> bool {
        self.entries.iter().enumerate().all(|(s, row)| {
            row.iter().enumerate().all(|(q, e)| {
                e.terms.iter().all(|t| {
                    order
                        .entry(self.target.summands[s], self.source.summands[q])
                        .contains(t.deg as i64)
                })
            })
        })
    }

    /// Every entry supported inside the corresponding radical cell
    /// (minimality of a resolution differential).
    pub fn lands_in_radical(&self, order: &EndomorphismOrder) -> bool {
        self.entries.iter().enumerate().all(|(s, row)| {
            row.iter().enumerate().all(|(q, e)| {
                e.terms.iter().all(|t| {
                    order
                        .radical_entry(self.target.summands[s], self.source.summands[q])
                        .contains(t.deg as i64)
                })
            })
        })
    }

    pub fn all_entries_monomial(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(|e| e.is_zero() || e.is_monomial()))
    }

    /// The shift functor on maps: duplicate the row/column of every summand
    /// of index 1 according to the frame expansion.
    pub fn ceil(&self, a: usize) -> ModuleMap {
        let expand = |frame: &Frame| -> Vec<usize> {
            // original summand position for each expanded position
            let mut orig = Vec::new();
            for (i, &p) in frame.summands.iter().enumerate() {
                let copies = if p == 1 { a + 1 } else { 1 };
                for _ in 0..copies {
                    orig.push(i);
                }
            }
            orig
        };
        let src_orig = expand(&self.source);
        let tgt_orig = expand(&self.target);
        let entries: Vec<Vec<Entry>> = tgt_orig
            .iter()
            .map(|&s| src_orig.iter().map(|&q| self.entries[s][q].clone()).collect())
            .collect();
        ModuleMap::new(self.source.ceil(a), self.target.ceil(a), entries)
    }
}

/// A finitely generated submodule of a frame, presented by generators.
/// `generators[g][s][c]` is the series of generator `g` in summand `s`,
/// column `c` (0-based storage of the 1-based column).
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct SubModule {
    pub frame: Frame,
    pub generators: Vec<Vec<Vec<Entry>>>,
    /// All generators lie strictly below this degree; together with the
    /// ambient tails this pins the module above it.
    pub tail_degree: u32,
}

impl SubModule {
    pub fn zero(frame: Frame) -> Self {
        SubModule { frame, generators: Vec::new(), tail_degree: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// A column-pure generator with entries `parts[s]` in column `col`.
    pub fn column_generator(frame: &Frame, columns: usize, col: usize, parts: Vec<Entry>) -> Vec<Vec<Entry>> {
        assert_eq!(parts.len(), frame.len());
        let mut g = vec![vec![Entry::zero(); columns]; frame.len()];
        for (s, e) in parts.into_iter().enumerate() {
            g[s][col - 1] = e;
        }
        g
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators
            .iter()
            .flat_map(|g| g.iter().flat_map(|row| row.iter().filter_map(Entry::max_degree)))
            .max()
            .unwrap_or(0)
    }
}

/// A product-of-value-sets module: `cells[s][c]` is the full set of degrees
/// allowed in summand `s`, column `c`, every position independent. Rows of
/// the order and of its radical are grid modules, and the shift functor acts
/// on grids by duplicating the first column and fanning out index-1 summands.
#[derive(Clone, PartialEq, Debug)]
pub struct GridModule {
    pub frame: Frame,
    pub cells: Vec<Vec<ValueSet>>,
}

impl GridModule {
    pub fn new(frame: Frame, cells: Vec<Vec<ValueSet>>) -> Self {
        assert_eq!(cells.len(), frame.len());
        GridModule { frame, cells }
    }

    /// The frame `⊕ P_{a_s}` itself as a grid: row `a_s` of the order.
    pub fn of_frame(order: &EndomorphismOrder, frame: &Frame) -> Self {
        let l = order.size();
        let cells = frame
            .summands
            .iter()
            .map(|&p| (1..=l).map(|c| order.entry(p, c).values().clone()).collect())
            .collect();
        GridModule { frame: frame.clone(), cells }
    }

    /// `X · J(E)` for a grid module: cell-wise `Σ_b cells[s][b] + J[b][c]`.
    pub fn radical(&self, order: &EndomorphismOrder) -> GridModule {
        let l = order.size();
        let cells = self
            .cells
            .iter()
            .map(|row| {
                (1..=l)
                    .map(|c| {
                        let mut acc: Option<ValueSet> = None;
                        for (b, cell) in row.iter().enumerate() {
                            let shifted = cell.sum(order.radical_entry(b + 1, c).values());
                            acc = Some(match acc {
                                None => shifted,
                                Some(a) => a.union(&shifted),
                            });
                        }
                        acc.expect("grid rows are nonempty")
                    })
                    .collect()
            })
            .collect();
        GridModule { frame: self.frame.clone(), cells }
    }

    /// Shift functor on grids: fan out index-1 summands, duplicate column 1.
    pub fn ceil(&self, a: usize) -> GridModule {
        let mut cells = Vec::new();
        for (s, &p) in self.frame.summands.iter().enumerate() {
            let copies = if p == 1 { a + 1 } else { 1 };
            let mut row = Vec::with_capacity(self.cells[s].len() + a);
            for _ in 0..a {
                row.push(self.cells[s][0].clone());
            }
            row.extend(self.cells[s].iter().cloned());
            for _ in 0..copies {
                cells.push(row.clone());
            }
        }
        GridModule { frame: self.frame.ceil(a), cells }
    }
}
