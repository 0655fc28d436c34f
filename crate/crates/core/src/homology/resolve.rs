//! The syzygy engine: kernels, Nakayama minimal generators, projective
//! covers, and minimal resolutions of the simple modules of an order.
//!
//! Everything is computed twice, at the context bound and at the bound plus
//! the stability delta; the structural outputs (frames, generator columns,
//! leading degrees) must agree, otherwise the truncation is reported as
//! unstable. Within one pass, three windows govern soundness near the
//! truncation boundary: kernels are solved only for coordinates low enough
//! that no image term is lost, minimal generators are accepted only below a
//! window backed off by the largest shift in play, and space comparisons
//! happen one further backoff down. All structural decisions therefore use
//! only honestly computed data; the boundary fringe is never trusted.
//!
//! Columns never mix under either the right action or a frame map, so every
//! computation is per-column over the degree-graded coordinate layouts. The
//! radical multiple of a column space collapses to finitely many shifts: a
//! column space is stable under the starting ring, so only the module
//! generators of each radical cell contribute new vectors.

use rayon::prelude::*;

use crate::order::EndomorphismOrder;

use super::field::{FieldCtx, Scalar};
use super::layout::ColumnLayout;
use super::modules::{Entry, Frame, ModuleMap, SubModule, Term};
use super::poly::Poly;
use super::space::{KernelBuilder, RowSpace, SparseVec};
use super::{HomologyError, Resolution, ResolutionCertificates};

/// Shift data shared by one resolution run.
pub(crate) struct Engine<'a, F: FieldCtx> {
    pub order: &'a EndomorphismOrder,
    pub fctx: F,
    pub bound: u32,
    /// Module generators of `E[b][c]` over the starting ring, 0-based grid.
    e_gens: Vec<Vec<Vec<u32>>>,
    /// Module generators of `J[b][c]` over the starting ring, 0-based grid.
    j_gens: Vec<Vec<Vec<u32>>>,
    /// Minimal semigroup generators of the starting ring.
    r1_gens: Vec<u32>,
    /// Largest degree among the shift generators.
    max_shift: u32,
}

/// One syzygy module, held as per-column reduced row spaces over the frame.
pub(crate) struct State<K> {
    /// Projective index (1-based) of each frame summand.
    pub projs: Vec<usize>,
    pub layouts: Vec<ColumnLayout>,
    /// `X·e_c` for each column, 0-based.
    pub cols: Vec<RowSpace<K>>,
    /// Degree slack consumed so far (max entry degree of the defining map).
    pub slack: u32,
}

impl<K: Scalar> State<K> {
    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|s| s.dim() == 0)
    }
}

/// A minimal generator: column-pure with a canonical reduced vector.
#[derive(Clone)]
pub(crate) struct Gen<K> {
    /// 1-based column (also the index of the covering projective).
    pub column: usize,
    pub vec: SparseVec<K>,
    pub lead_degree: u32,
}

/// One resolution step with its certificates.
pub(crate) struct Step<K> {
    pub frame: Vec<usize>,
    pub entries: Vec<Vec<Poly<K>>>,
    pub gen_columns: Vec<usize>,
    pub gen_leads: Vec<u32>,
    pub minimal: bool,
    pub exact: bool,
    pub dd_zero: bool,
    pub monomial: bool,
}

impl<'a, F: FieldCtx> Engine<'a, F> {
    pub fn new(order: &'a EndomorphismOrder, fctx: F, bound: u32) -> Self {
        let l = order.size();
        let mut e_gens = vec![vec![Vec::new(); l]; l];
        let mut j_gens = vec![vec![Vec::new(); l]; l];
        let mut max_shift = 0;
        for b in 1..=l {
            for c in 1..=l {
                let eg: Vec<u32> =
                    order.entry(b, c).generators().iter().map(|&g| g as u32).collect();
                let jg: Vec<u32> =
                    order.radical_entry(b, c).generators().iter().map(|&g| g as u32).collect();
                max_shift = max_shift.max(eg.iter().copied().max().unwrap_or(0));
                max_shift = max_shift.max(jg.iter().copied().max().unwrap_or(0));
                e_gens[b - 1][c - 1] = eg;
                j_gens[b - 1][c - 1] = jg;
            }
        }
        let r1_gens: Vec<u32> =
            order.chain().start().min_generators().iter().map(|&g| g as u32).collect();
        Engine { order, fctx, bound, e_gens, j_gens, r1_gens, max_shift }
    }

    fn layouts(&self, projs: &[usize]) -> Vec<ColumnLayout> {
        let l = self.order.size();
        (1..=l)
            .map(|c| {
                let sets: Vec<_> =
                    projs.iter().map(|&p| self.order.entry(p, c).values()).collect();
                ColumnLayout::build(&sets, self.bound)
            })
            .collect()
    }

    /// The first syzygy of `S_i`: the radical row `J(P_i)` over frame `[P_i]`.
    pub fn radical_row_state(&self, i: usize) -> State<F::K> {
        let projs = vec![i];
        let layouts = self.layouts(&projs);
        let l = self.order.size();
        let cols = (1..=l)
            .map(|c| {
                let mut space = RowSpace::new();
                let cell = self.order.radical_entry(i, c).values();
                let layout = &layouts[c - 1];
                for d in cell.iter_below(self.bound as u64) {
                    let coord = layout
                        .coord(0, d as u32)
                        .expect("radical cell is contained in the order cell");
                    space.insert(SparseVec::unit(coord, self.fctx.one()));
                }
                space
            })
            .collect();
        State { projs, layouts, cols, slack: 0 }
    }

    /// Kernel of a frame map, solved per column on the honest window.
    pub fn kernel_state(
        &self,
        src_projs: &[usize],
        tgt_layouts: &[ColumnLayout],
        entries: &[Vec<Poly<F::K>>],
    ) -> State<F::K> {
        let l = self.order.size();
        let max_deg =
            entries.iter().flat_map(|r| r.iter().filter_map(Poly::max_degree)).max().unwrap_or(0);
        let layouts = self.layouts(src_projs);
        let src_window = self.bound.saturating_sub(max_deg);
        let cols = (0..l)
            .map(|c| {
                let src = &layouts[c];
                let tgt = &tgt_layouts[c];
                let mut kb = KernelBuilder::new();
                let cut = src.first_coord_at_degree(src_window);
                for coord in 0..cut {
                    let (d, q) = src.at(coord);
                    // image of t^d in source summand q
                    let mut terms = Vec::new();
                    for (s, row) in entries.iter().enumerate() {
                        for (deg, coef) in &row[q as usize].terms {
                            if let Some(tc) = tgt.coord(s as u32, d + deg) {
                                terms.push((tc, coef.clone()));
                            } else {
                                debug_assert!(
                                    d + deg >= tgt.bound,
                                    "map entry leaves the order cell"
                                );
                            }
                        }
                    }
                    kb.feed(SparseVec::from_terms(terms), coord, self.fctx.one());
                }
                let mut space = RowSpace::new();
                for v in kb.into_kernel() {
                    space.insert(v);
                }
                space
            })
            .collect();
        State { projs: src_projs.to_vec(), layouts, cols, slack: max_deg }
    }

    /// `X·J(E)` column spaces: shifts of every column space by the module
    /// generators of the radical cells.
    pub fn radical_spaces(&self, state: &State<F::K>) -> Vec<RowSpace<F::K>> {
        let l = self.order.size();
        (0..l)
            .into_par_iter()
            .map(|c| {
                let mut space = RowSpace::new();
                for b in 0..l {
                    if state.cols[b].dim() == 0 {
                        continue;
                    }
                    for &delta in &self.j_gens[b][c] {
                        for row in state.cols[b].rows() {
                            space.insert(ColumnLayout::shift_into(
                                &state.layouts[b],
                                &state.layouts[c],
                                row,
                                delta,
                            ));
                        }
                    }
                }
                space
            })
            .collect()
    }

    /// Window below which minimal-generator decisions are trusted.
    pub fn gen_window(&self, state: &State<F::K>) -> Result<u32, HomologyError> {
        let g = self
            .bound
            .saturating_sub(state.slack)
            .saturating_sub(self.max_shift)
            .saturating_sub(1);
        if g <= self.max_shift {
            return Err(HomologyError::TruncationOverflow(format!(
                "truncation bound {} leaves no usable window (slack {}, shift {})",
                self.bound, state.slack, self.max_shift
            )));
        }
        Ok(g)
    }

    /// Nakayama: lift a basis of `X/XJ`. Generators are column-pure; for a
    /// block of repeated rings the representative column is the last one of
    /// the block, and the drop pattern must agree across the block.
    pub fn minimal_generators(
        &self,
        state: &State<F::K>,
    ) -> Result<Vec<Gen<F::K>>, HomologyError> {
        let window = self.gen_window(state)?;
        let xj = self.radical_spaces(state);
        let l = self.order.size();
        let chain = self.order.chain();
        let mut gens = Vec::new();
        let mut c = 1usize;
        while c <= l {
            let rep = chain.repetition(c);
            let block: Vec<usize> = (rep.first..rep.first + rep.count).collect();
            debug_assert_eq!(block[0], c);
            // degree multisets of trusted drops, per block column
            let drops_per_col: Vec<Vec<(u32, u32)>> = block
                .iter()
                .map(|&col| {
                    state.cols[col - 1]
                        .pivot_drops(&xj[col - 1])
                        .into_iter()
                        .map(|p| state.layouts[col - 1].at(p))
                        .filter(|&(d, _)| d < window)
                        .collect()
                })
                .collect();
            for w in drops_per_col.windows(2) {
                if w[0] != w[1] {
                    return Err(HomologyError::UnstableTruncation(format!(
                        "quotient drops disagree across the block at column {c}: {:?} vs {:?}",
                        w[0], w[1]
                    )));
                }
            }
            let rep_col = *block.last().unwrap();
            let layout = &state.layouts[rep_col - 1];
            for &(d, s) in drops_per_col.last().unwrap() {
                let pivot = layout.coord(s, d).expect("drop coordinate exists");
                let vec = state.cols[rep_col - 1]
                    .row(pivot)
                    .expect("dropped pivot has a row")
                    .clone();
                gens.push(Gen { column: rep_col, vec, lead_degree: d });
            }
            c = rep.first + rep.count;
        }
        gens.sort_by_key(|g| (g.column, g.lead_degree, g.vec.lead()));
        Ok(gens)
    }

    /// The orbit of generators under the right action, per column: saturate
    /// each generator inside its own column under the starting ring, then
    /// push through the module generators of every order cell.
    pub fn orbit_spaces(
        &self,
        layouts: &[ColumnLayout],
        gens: &[Gen<F::K>],
    ) -> Vec<RowSpace<F::K>> {
        let l = self.order.size();
        let saturated: Vec<(usize, RowSpace<F::K>)> = gens
            .iter()
            .map(|g| (g.column, self.r1_saturate(&layouts[g.column - 1], g.vec.clone())))
            .collect();
        (0..l)
            .into_par_iter()
            .map(|c| {
                let mut space = RowSpace::new();
                for (b, sat) in &saturated {
                    for &delta in &self.e_gens[b - 1][c] {
                        for row in sat.rows() {
                            space.insert(ColumnLayout::shift_into(
                                &layouts[b - 1],
                                &layouts[c],
                                row,
                                delta,
                            ));
                        }
                    }
                }
                space
            })
            .collect()
    }

    /// Closure of one vector under shifts from the starting ring.
    fn r1_saturate(&self, layout: &ColumnLayout, seed: SparseVec<F::K>) -> RowSpace<F::K> {
        let mut space = RowSpace::new();
        let mut queue = Vec::new();
        if let Some(p) = space.insert(seed) {
            queue.push(space.row(p).unwrap().clone());
        }
        while let Some(v) = queue.pop() {
            for &g in &self.r1_gens {
                let shifted = ColumnLayout::shift_into(layout, layout, &v, g);
                if shifted.is_zero() {
                    continue;
                }
                if let Some(p) = space.insert(shifted) {
                    queue.push(space.row(p).unwrap().clone());
                }
            }
        }
        space
    }

    /// Builds the cover map for sorted generators: one projective per
    /// generator, indexed by the generator's column; entries normalized so
    /// the first nonzero summand entry has lead coefficient one.
    pub fn cover_map(
        &self,
        state: &State<F::K>,
        gens: &[Gen<F::K>],
    ) -> (Vec<usize>, Vec<Vec<Poly<F::K>>>) {
        let frame: Vec<usize> = gens.iter().map(|g| g.column).collect();
        let n_tgt = state.projs.len();
        let mut entries = vec![vec![Poly::zero(); gens.len()]; n_tgt];
        for (q, g) in gens.iter().enumerate() {
            let layout = &state.layouts[g.column - 1];
            let mut polys = vec![Vec::new(); n_tgt];
            for (coord, coef) in &g.vec.terms {
                let (d, s) = layout.at(*coord);
                polys[s as usize].push((d, coef.clone()));
            }
            let mut polys: Vec<Poly<F::K>> =
                polys.into_iter().map(Poly::from_terms).collect();
            // normalize: first nonzero summand entry becomes monic
            if let Some(first) = polys.iter().find(|p| !p.is_zero()) {
                let inv = first.lead_coef().unwrap().inv();
                for p in polys.iter_mut() {
                    *p = p.scale(&inv);
                }
            }
            for (s, p) in polys.into_iter().enumerate() {
                entries[s][q] = p;
            }
        }
        (frame, entries)
    }

    /// `im(map) == state` below the comparison window, where the map columns
    /// are read as column-pure generators of the target frame.
    pub fn image_matches_state(
        &self,
        state: &State<F::K>,
        map_frame: &[usize],
        entries: &[Vec<Poly<F::K>>],
    ) -> bool {
        let gens = map_columns_as_gens(map_frame, entries, &state.layouts);
        let image = self.orbit_spaces(&state.layouts, &gens);
        let map_deg =
            entries.iter().flat_map(|r| r.iter().filter_map(Poly::max_degree)).max().unwrap_or(0);
        let cmp_deg = self
            .bound
            .saturating_sub(state.slack)
            .saturating_sub(map_deg)
            .saturating_sub(2 * self.max_shift + 2);
        (0..self.order.size()).all(|c| {
            let cut = state.layouts[c].first_coord_at_degree(cmp_deg);
            image[c].eq_below(&state.cols[c], cut)
        })
    }

    /// Entry supports inside the radical cells.
    fn map_is_minimal(&self, tgt_projs: &[usize], frame: &[usize], entries: &[Vec<Poly<F::K>>]) -> bool {
        entries.iter().enumerate().all(|(s, row)| {
            row.iter().enumerate().all(|(q, p)| {
                p.terms.iter().all(|&(d, _)| {
                    self.order.radical_entry(tgt_projs[s], frame[q]).contains(d as i64)
                })
            })
        })
    }

    /// One full resolution pass for `S_i`.
    pub fn resolve_pass(&self, i: usize, max_len: usize) -> Result<Vec<Step<F::K>>, HomologyError> {
        let l = self.order.size();
        assert!(i >= 1 && i <= l, "simple index {i} out of range");
        let mut state = self.radical_row_state(i);
        let mut steps: Vec<Step<F::K>> = Vec::new();
        loop {
            if state.is_zero() {
                break;
            }
            if steps.len() >= max_len {
                return Err(HomologyError::ResolutionTooLong { simple: i, max_len });
            }
            let gens = self.minimal_generators(&state)?;
            if gens.is_empty() {
                return Err(HomologyError::UnstableTruncation(format!(
                    "nonzero syzygy of S_{i} has no generators below the window"
                )));
            }
            let (frame, entries) = self.cover_map(&state, &gens);
            let tgt_projs = state.projs.clone();
            let minimal = self.map_is_minimal(&tgt_projs, &frame, &entries);
            let exact = self.image_matches_state(&state, &frame, &entries);
            let dd_zero = match steps.last() {
                None => true, // position 0 exactness is im(d1) = J(P_i), checked above
                Some(prev) => compose_is_zero(&prev.entries, &entries, self.bound),
            };
            let monomial =
                entries.iter().all(|row| row.iter().all(|p| p.is_zero() || p.is_monomial()));
            let next = self.kernel_state(&frame, &state.layouts, &entries);
            steps.push(Step {
                frame,
                entries,
                gen_columns: gens.iter().map(|g| g.column).collect(),
                gen_leads: gens.iter().map(|g| g.lead_degree).collect(),
                minimal,
                exact,
                dd_zero,
                monomial,
            });
            state = next;
        }
        Ok(steps)
    }
}

/// The columns of a frame map, read as column-pure generators of the target.
pub(crate) fn map_columns_as_gens<K: Scalar>(
    frame: &[usize],
    entries: &[Vec<Poly<K>>],
    target_layouts: &[ColumnLayout],
) -> Vec<Gen<K>> {
    let mut gens = Vec::new();
    for (q, &col) in frame.iter().enumerate() {
        let layout = &target_layouts[col - 1];
        let mut terms = Vec::new();
        for (s, row) in entries.iter().enumerate() {
            for (d, coef) in &row[q].terms {
                if let Some(c) = layout.coord(s as u32, *d) {
                    terms.push((c, coef.clone()));
                }
            }
        }
        let vec = SparseVec::from_terms(terms);
        if let Some(lead) = vec.lead() {
            let lead_degree = layout.degree_of(lead);
            gens.push(Gen { column: col, vec, lead_degree });
        }
    }
    gens
}

/// `prev ∘ next = 0` below the bound, as truncated polynomial matrices.
pub(crate) fn compose_is_zero<K: Scalar>(
    prev: &[Vec<Poly<K>>],
    next: &[Vec<Poly<K>>],
    bound: u32,
) -> bool {
    let rows = prev.len();
    let mids = next.len();
    if mids == 0 {
        return true;
    }
    let cols = next[0].len();
    for t in 0..rows {
        for q in 0..cols {
            let mut acc = Poly::zero();
            for s in 0..mids {
                acc = acc.add(&prev[t][s].mul_trunc(&next[s][q], bound));
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Structural fingerprint of a pass, compared across truncation bounds.
fn fingerprint<K: Scalar>(steps: &[Step<K>]) -> Vec<(Vec<usize>, Vec<usize>, Vec<u32>, Vec<Vec<Option<u32>>>)> {
    steps
        .iter()
        .map(|s| {
            (
                s.frame.clone(),
                s.gen_columns.clone(),
                s.gen_leads.clone(),
                s.entries
                    .iter()
                    .map(|row| row.iter().map(Poly::lead_degree).collect())
                    .collect(),
            )
        })
        .collect()
}

fn poly_to_entry<K: Scalar>(p: &Poly<K>) -> Entry {
    Entry {
        terms: p
            .terms
            .iter()
            .map(|(d, c)| {
                let (num, den) = c.to_fraction();
                Term { deg: *d, num, den }
            })
            .collect(),
    }
}

/// Runs the double-pass resolution and assembles the public result.
pub(crate) fn resolve_simple_with<F: FieldCtx>(
    order: &EndomorphismOrder,
    fctx: F,
    i: usize,
    max_len: usize,
    bound: u32,
    delta: u32,
) -> Result<Resolution, HomologyError> {
    let eng1 = Engine::new(order, fctx.clone(), bound);
    let steps1 = eng1.resolve_pass(i, max_len)?;
    let eng2 = Engine::new(order, fctx, bound + delta);
    let steps2 = eng2.resolve_pass(i, max_len)?;
    if fingerprint(&steps1) != fingerprint(&steps2) {
        return Err(HomologyError::UnstableTruncation(format!(
            "resolution of S_{i} changes between bounds {} and {}",
            bound,
            bound + delta
        )));
    }
    let mut frames = vec![Frame::new(vec![i])];
    let mut maps = Vec::new();
    let mut certs = ResolutionCertificates {
        dd_zero: true,
        exact: Vec::new(),
        minimal: Vec::new(),
        monomial: Vec::new(),
        stable: true,
        failures: Vec::new(),
    };
    for (k, s) in steps1.iter().enumerate() {
        let source = Frame::new(s.frame.clone());
        let target = frames.last().unwrap().clone();
        let entries: Vec<Vec<Entry>> =
            s.entries.iter().map(|row| row.iter().map(poly_to_entry).collect()).collect();
        maps.push(ModuleMap::new(source.clone(), target, entries));
        frames.push(source);
        certs.exact.push(s.exact);
        certs.minimal.push(s.minimal);
        certs.monomial.push(s.monomial);
        certs.dd_zero &= s.dd_zero;
        if !s.exact {
            certs.failures.push(format!("exactness fails entering position {k}"));
        }
        if !s.minimal {
            certs.failures.push(format!("map {} is not minimal", k + 1));
        }
        if !s.dd_zero {
            certs.failures.push(format!("d{} ∘ d{} ≠ 0", k, k + 1));
        }
    }
    Ok(Resolution { simple_index: i, frames, maps, certificates: certs })
}

/// Public kernel: stability-checked minimal generators of `ker f`.
pub(crate) fn kernel_with<F: FieldCtx>(
    order: &EndomorphismOrder,
    fctx: F,
    map: &ModuleMap,
    bound: u32,
    delta: u32,
) -> Result<SubModule, HomologyError> {
    if map.entries.len() != map.target.len()
        || map.entries.iter().any(|r| r.len() != map.source.len())
    {
        return Err(HomologyError::ShapeMismatch("map entries do not match frames".into()));
    }
    let mut results = Vec::new();
    for b in [bound, bound + delta] {
        let eng = Engine::new(order, fctx.clone(), b);
        let tgt_layouts = eng.layouts(&map.target.summands);
        let entries = entries_to_polys(&eng, &map.entries);
        let state = eng.kernel_state(&map.source.summands, &tgt_layouts, &entries);
        let gens = eng.minimal_generators(&state)?;
        results.push((eng, state, gens));
    }
    let fp = |gens: &[Gen<F::K>]| -> Vec<(usize, u32)> {
        gens.iter().map(|g| (g.column, g.lead_degree)).collect()
    };
    if fp(&results[0].2) != fp(&results[1].2) {
        return Err(HomologyError::UnstableTruncation(format!(
            "kernel generators change between bounds {bound} and {}",
            bound + delta
        )));
    }
    let (eng, state, gens) = &results[0];
    Ok(gens_to_submodule(eng, state, gens, &map.source))
}

pub(crate) fn entries_to_polys<F: FieldCtx>(
    eng: &Engine<'_, F>,
    entries: &[Vec<Entry>],
) -> Vec<Vec<Poly<F::K>>> {
    entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    Poly::from_terms(
                        e.terms
                            .iter()
                            .filter(|t| t.deg < eng.bound)
                            .map(|t| (t.deg, eng.fctx.from_fraction(t.num, t.den)))
                            .collect(),
                    )
                })
                .collect()
        })
        .collect()
}

pub(crate) fn gens_to_submodule<F: FieldCtx>(
    eng: &Engine<'_, F>,
    state: &State<F::K>,
    gens: &[Gen<F::K>],
    frame: &Frame,
) -> SubModule {
    let l = eng.order.size();
    let generators: Vec<Vec<Vec<Entry>>> = gens
        .iter()
        .map(|g| {
            let layout = &state.layouts[g.column - 1];
            let mut per_summand: Vec<Vec<(u32, F::K)>> = vec![Vec::new(); frame.len()];
            for (coord, coef) in &g.vec.terms {
                let (d, s) = layout.at(*coord);
                per_summand[s as usize].push((d, coef.clone()));
            }
            per_summand
                .into_iter()
                .map(|terms| {
                    let mut row = vec![Entry::zero(); l];
                    row[g.column - 1] = poly_to_entry(&Poly::from_terms(terms));
                    row
                })
                .collect()
        })
        .collect();
    let tail = 1 + gens.iter().map(|g| {
        g.vec.terms.iter().map(|(c, _)| state.layouts[g.column - 1].degree_of(*c)).max().unwrap_or(0)
    }).max().unwrap_or(0);
    SubModule { frame: frame.clone(), generators, tail_degree: tail }
}

/// Seeds engine column spaces from a public submodule's generators.
pub(crate) fn submodule_state<F: FieldCtx>(
    eng: &Engine<'_, F>,
    x: &SubModule,
) -> Result<State<F::K>, HomologyError> {
    let l = eng.order.size();
    let layouts = eng.layouts(&x.frame.summands);
    // split each generator into its column-pure parts, then take the orbit
    let mut gens: Vec<Gen<F::K>> = Vec::new();
    for g in &x.generators {
        if g.len() != x.frame.len() || g.iter().any(|row| row.len() != l) {
            return Err(HomologyError::ShapeMismatch(
                "generator shape does not match frame × columns".into(),
            ));
        }
        for c in 1..=l {
            let layout = &layouts[c - 1];
            let mut terms = Vec::new();
            for (s, row) in g.iter().enumerate() {
                for t in &row[c - 1].terms {
                    match layout.coord(s as u32, t.deg) {
                        Some(coord) => terms.push((coord, eng.fctx.from_fraction(t.num, t.den))),
                        None if t.deg >= eng.bound => {}
                        None => {
                            return Err(HomologyError::ShapeMismatch(format!(
                                "generator degree {} not allowed in summand {}, column {c}",
                                t.deg,
                                s + 1
                            )))
                        }
                    }
                }
            }
            let vec = SparseVec::from_terms(terms);
            if let Some(lead) = vec.lead() {
                gens.push(Gen { column: c, vec, lead_degree: layout.degree_of(lead) });
            }
        }
    }
    let cols = eng.orbit_spaces(&layouts, &gens);
    Ok(State { projs: x.frame.summands.clone(), layouts, cols, slack: 0 })
}

/// Projective dimensions of the simple modules, one per isomorphism class,
/// computed in parallel; the global dimension is their maximum.
pub(crate) fn global_dimension_with<F: FieldCtx>(
    order: &EndomorphismOrder,
    fctx: F,
    max_len: usize,
    bound: u32,
    delta: u32,
) -> Result<usize, HomologyError> {
    let reps = order.chain().class_representatives();
    let dims: Result<Vec<usize>, HomologyError> = reps
        .par_iter()
        .map(|&i| {
            resolve_simple_with(order, fctx.clone(), i, max_len, bound, delta)
                .map(|r| r.maps.len())
        })
        .collect();
    Ok(dims?.into_iter().max().expect("chains are nonempty"))
}
