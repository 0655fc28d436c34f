//! Sparse exact linear algebra over graded coordinate spaces.
//!
//! Vectors are sparse lists of `(coordinate, coefficient)` with coordinates
//! sorted ascending; the leading term is the lowest coordinate, matching the
//! local-ring convention that the lowest degree leads. `RowSpace` maintains a
//! reduced echelon basis keyed by pivot and is the single primitive behind
//! span, membership, quotient and kernel computations.

use std::collections::BTreeMap;

use super::field::Scalar;

#[derive(Clone, PartialEq, Debug)]
pub(crate) struct SparseVec<K> {
    /// `(coord, coef)` sorted by coord ascending, no zero coefficients.
    pub terms: Vec<(u32, K)>,
}

impl<K: Scalar> SparseVec<K> {
    pub fn zero() -> Self {
        SparseVec { terms: Vec::new() }
    }

    pub fn unit(coord: u32, one: K) -> Self {
        SparseVec { terms: vec![(coord, one)] }
    }

    pub fn from_terms(mut terms: Vec<(u32, K)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by_key(|&(i, _)| i);
        let mut out: Vec<(u32, K)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match out.last_mut() {
                Some((li, lc)) if *li == i => {
                    *lc = lc.add(&c);
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push((i, c)),
            }
        }
        SparseVec { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest coordinate.
    pub fn lead(&self) -> Option<u32> {
        self.terms.first().map(|&(i, _)| i)
    }

    pub fn get(&self, coord: u32) -> Option<&K> {
        self.terms.binary_search_by_key(&coord, |&(i, _)| i).ok().map(|p| &self.terms[p].1)
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        SparseVec { terms: self.terms.iter().map(|(i, c)| (*i, c.mul(k))).collect() }
    }

    /// `self + k·other`, merged.
    pub fn axpy(&self, k: &K, other: &Self) -> Self {
        if k.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (0, 0);
        while a < self.terms.len() || b < other.terms.len() {
            let pick_a = b >= other.terms.len()
                || (a < self.terms.len() && self.terms[a].0 < other.terms[b].0);
            let pick_b = a >= self.terms.len()
                || (b < other.terms.len() && other.terms[b].0 < self.terms[a].0);
            if pick_a {
                out.push(self.terms[a].clone());
                a += 1;
            } else if pick_b {
                let (i, c) = &other.terms[b];
                let v = k.mul(c);
                if !v.is_zero() {
                    out.push((*i, v));
                }
                b += 1;
            } else {
                let (i, c1) = &self.terms[a];
                let c2 = &other.terms[b].1;
                let v = c1.add(&k.mul(c2));
                if !v.is_zero() {
                    out.push((*i, v));
                }
                a += 1;
                b += 1;
            }
        }
        SparseVec { terms: out }
    }

    /// Restriction to coordinates `< bound`.
    pub fn truncate(&self, bound: u32) -> Self {
        SparseVec { terms: self.terms.iter().take_while(|&&(i, _)| i < bound).cloned().collect() }
    }
}

/// A subspace in reduced echelon form: one row per pivot (its lowest
/// coordinate), pivot coefficient 1, and every pivot eliminated from all
/// other rows. Insertion keeps the form, so bases are canonical and
/// deterministic regardless of insertion order.
#[derive(Clone, Debug)]
pub(crate) struct RowSpace<K> {
    rows: BTreeMap<u32, SparseVec<K>>,
}

impl<K: Scalar> RowSpace<K> {
    pub fn new() -> Self {
        RowSpace { rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.keys().copied()
    }

    pub fn has_pivot(&self, coord: u32) -> bool {
        self.rows.contains_key(&coord)
    }

    pub fn row(&self, pivot: u32) -> Option<&SparseVec<K>> {
        self.rows.get(&pivot)
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values()
    }

    /// Fully reduces `v` against the basis.
    pub fn reduce(&self, v: SparseVec<K>) -> SparseVec<K> {
        let mut v = v;
        let mut i = 0;
        while i < v.terms.len() {
            let (coord, coef) = v.terms[i].clone();
            if let Some(row) = self.rows.get(&coord) {
                v = v.axpy(&coef.neg(), row);
                // the axpy removed `coord`; indices before i are untouched
            } else {
                i += 1;
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Inserts `v`; returns its pivot if it enlarged the space.
    pub fn insert(&mut self, v: SparseVec<K>) -> Option<u32> {
        let r = self.reduce(v);
        if r.is_zero() {
            return None;
        }
        let pivot = r.lead().unwrap();
        let inv = r.terms[0].1.inv();
        let r = r.scale(&inv);
        // back-substitute the new pivot out of existing rows
        let touched: Vec<u32> = self
            .rows
            .iter()
            .filter(|(_, row)| row.get(pivot).is_some())
            .map(|(&p, _)| p)
            .collect();
        for p in touched {
            let row = self.rows.remove(&p).unwrap();
            let c = row.get(pivot).unwrap().clone();
            self.rows.insert(p, row.axpy(&c.neg(), &r));
        }
        self.rows.insert(pivot, r);
        Some(pivot)
    }

    /// Pivots of `self` missing from `sub` (meaningful when `sub ⊆ self`).
    pub fn pivot_drops(&self, sub: &RowSpace<K>) -> Vec<u32> {
        self.rows.keys().filter(|p| !sub.rows.contains_key(p)).copied().collect()
    }

    /// The span of all rows truncated below `bound` (projection to the low
    /// window; rows with pivot ≥ `bound` project to zero).
    pub fn truncated(&self, bound: u32) -> RowSpace<K> {
        let mut out = RowSpace::new();
        for (&p, row) in &self.rows {
            if p < bound {
                out.insert(row.truncate(bound));
            }
        }
        out
    }

    /// Space equality below `bound`.
    pub fn eq_below(&self, other: &RowSpace<K>, bound: u32) -> bool {
        let a = self.truncated(bound);
        let b = other.truncated(bound);
        if a.dim() != b.dim() {
            return false;
        }
        a.rows.values().all(|r| b.contains(r))
    }
}

/// Incremental kernel computation: feed the image of each source basis
/// vector in turn; whenever an image is linearly dependent on the earlier
/// ones, the tracked combination is a kernel element.
pub(crate) struct KernelBuilder<K> {
    /// image pivot → (image row, source combination)
    rows: BTreeMap<u32, (SparseVec<K>, SparseVec<K>)>,
    kernel: Vec<SparseVec<K>>,
}

impl<K: Scalar> KernelBuilder<K> {
    pub fn new() -> Self {
        KernelBuilder { rows: BTreeMap::new(), kernel: Vec::new() }
    }

    pub fn feed(&mut self, image: SparseVec<K>, source_unit: u32, one: K) {
        let mut img = image;
        let mut combo = SparseVec::unit(source_unit, one);
        let mut i = 0;
        while i < img.terms.len() {
            let (coord, coef) = img.terms[i].clone();
            if let Some((r_img, r_combo)) = self.rows.get(&coord) {
                let c = coef.neg();
                img = img.axpy(&c, r_img);
                combo = combo.axpy(&c, r_combo);
            } else {
                i += 1;
            }
        }
        if img.is_zero() {
            self.kernel.push(combo);
        } else {
            let inv = img.terms[0].1.inv();
            let pivot = img.lead().unwrap();
            self.rows.insert(pivot, (img.scale(&inv), combo.scale(&inv)));
        }
    }

    /// Rank of the fed images.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn into_kernel(self) -> Vec<SparseVec<K>> {
        self.kernel
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::field::Rat;

    fn v(pairs: &[(u32, i64)]) -> SparseVec<Rat> {
        SparseVec::from_terms(pairs.iter().map(|&(i, c)| (i, Rat::from(c))).collect())
    }

    #[test]
    fn row_space_is_canonical() {
        let mut a = RowSpace::new();
        a.insert(v(&[(0, 1), (2, 1)]));
        a.insert(v(&[(2, 3)]));
        let mut b = RowSpace::new();
        b.insert(v(&[(2, -5)]));
        b.insert(v(&[(0, 7), (2, 4)]));
        assert_eq!(a.dim(), 2);
        assert_eq!(b.dim(), 2);
        // canonical reduced rows agree regardless of insertion order
        for (p, row) in a.rows.iter() {
            assert_eq!(b.rows.get(p), Some(row));
        }
        assert!(a.contains(&v(&[(0, 2), (2, 9)])));
        assert!(!a.contains(&v(&[(1, 1)])));
    }

    #[test]
    fn kernel_builder_finds_relations() {
        // images: f(e0) = x, f(e1) = 2x, f(e2) = y → kernel = span{2e0 − e1}
        let mut kb = KernelBuilder::new();
        kb.feed(v(&[(0, 1)]), 0, Rat::from(1));
        kb.feed(v(&[(0, 2)]), 1, Rat::from(1));
        kb.feed(v(&[(1, 1)]), 2, Rat::from(1));
        assert_eq!(kb.rank(), 2);
        let ker = kb.into_kernel();
        assert_eq!(ker.len(), 1);
        let k = &ker[0];
        // combo = e1 − 2 e0 up to scale
        assert_eq!(k.terms.len(), 2);
        let c0 = k.get(0).unwrap();
        let c1 = k.get(1).unwrap();
        assert_eq!(c0.add(&c1.add(c1)).to_fraction().0, 0);
    }

    #[test]
    fn truncated_projection() {
        let mut a = RowSpace::new();
        a.insert(v(&[(1, 1), (5, 2)]));
        a.insert(v(&[(6, 1)]));
        let t = a.truncated(4);
        assert_eq!(t.dim(), 1);
        assert!(t.contains(&v(&[(1, 3)])));
    }
}
