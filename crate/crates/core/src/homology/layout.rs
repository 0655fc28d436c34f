//! Degree-graded coordinate layouts.
//!
//! An element of `⊕_s P_{a_s}` restricted to one column `c` of the order is a
//! tuple of truncated series, the `s`-th supported on `E[a_s][c]`. A
//! `ColumnLayout` enumerates the legal `(degree, summand)` pairs below the
//! truncation bound, ordered by degree first so that the lowest coordinate of
//! a vector is its local leading term.

use crate::valueset::ValueSet;

use super::field::Scalar;
use super::space::SparseVec;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct ColumnLayout {
    /// `(degree, summand)` ascending by degree, then summand.
    coords: Vec<(u32, u32)>,
    /// `index[summand][degree] → coord`, dense.
    index: Vec<Vec<u32>>,
    pub bound: u32,
}

impl ColumnLayout {
    pub fn build(degree_sets: &[&ValueSet], bound: u32) -> Self {
        let mut coords = Vec::new();
        for d in 0..bound {
            for (s, vs) in degree_sets.iter().enumerate() {
                if vs.contains(d as i64) {
                    coords.push((d, s as u32));
                }
            }
        }
        let mut index = vec![vec![NONE; bound as usize]; degree_sets.len()];
        for (i, &(d, s)) in coords.iter().enumerate() {
            index[s as usize][d as usize] = i as u32;
        }
        ColumnLayout { coords, index, bound }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, summand: u32, degree: u32) -> Option<u32> {
        if degree >= self.bound {
            return None;
        }
        let c = self.index[summand as usize][degree as usize];
        (c != NONE).then_some(c)
    }

    /// `(degree, summand)` of a coordinate.
    pub fn at(&self, coord: u32) -> (u32, u32) {
        self.coords[coord as usize]
    }

    pub fn degree_of(&self, coord: u32) -> u32 {
        self.coords[coord as usize].0
    }

    /// First coordinate with degree ≥ `deg`, or dim() if none.
    pub fn first_coord_at_degree(&self, deg: u32) -> u32 {
        self.coords.partition_point(|&(d, _)| d < deg) as u32
    }

    /// Transports `v` (in `src` layout) by `t^delta` into `dst` layout,
    /// truncating at the destination bound. Source coordinates whose shifted
    /// degree stays below the bound must exist in `dst` (the order is closed
    /// under multiplication); this is asserted in debug builds.
    pub fn shift_into<K: Scalar>(
        src: &ColumnLayout,
        dst: &ColumnLayout,
        v: &SparseVec<K>,
        delta: u32,
    ) -> SparseVec<K> {
        let mut terms = Vec::with_capacity(v.terms.len());
        for (coord, coef) in &v.terms {
            let (d, s) = src.at(*coord);
            let nd = d + delta;
            if nd >= dst.bound {
                continue;
            }
            match dst.coord(s, nd) {
                Some(c) => terms.push((c, coef.clone())),
                None => {
                    debug_assert!(false, "shift left the legal degree set: s={s} d={d} δ={delta}");
                }
            }
        }
        SparseVec::from_terms(terms)
    }
}
