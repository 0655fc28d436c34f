//! Homological algebra over an endomorphism order: minimal projective
//! resolutions of the simple modules, projective and global dimension, and
//! certification of externally supplied complexes.
//!
//! The engine works in a truncated degree window `[0, N)` chosen large
//! enough that every ideal in play has reached its tail. Each computation is
//! repeated at `N + Δ` and must produce the same structure; a disagreement
//! surfaces as [`HomologyError::UnstableTruncation`] rather than a wrong
//! answer. Coefficients are exact rationals by default; a word-sized prime
//! field is available and is cross-checked against the rationals by the
//! acceptance suite.

mod certify;
mod field;
mod layout;
mod modules;
mod poly;
mod resolve;
mod space;

pub use certify::{check_complex, ComplexCertificate, PositionCertificate};
pub use modules::{Entry, Frame, GridModule, ModuleMap, SubModule, Term};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::order::EndomorphismOrder;

use field::{FpCtx, RatCtx};

pub use field::DEFAULT_PRIME;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("truncation overflow: {0}")]
    TruncationOverflow(String),
    #[error("unstable truncation: {0}")]
    UnstableTruncation(String),
    #[error("resolution of S_{simple} exceeded {max_len} steps")]
    ResolutionTooLong { simple: usize, max_len: usize },
    #[error("no valid projective index: {0}")]
    NoValidIndex(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
}

/// Coefficient field selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    /// Exact rationals (the default; certificates are unconditional).
    Rational,
    /// A prime field for speed; results are reported, not asserted, and the
    /// acceptance suite compares them against the rational runs.
    Prime(u64),
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Rational
    }
}

/// Degree window and field for one engine run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationContext {
    /// Exact representation of degrees `[0, bound)`.
    pub bound: u32,
    /// Stability recheck margin.
    pub delta: u32,
    pub field: FieldSpec,
}

impl TruncationContext {
    /// Sizes the window from the order: twice the largest entry conductor,
    /// plus twice the largest radical-generator degree (a proxy for the map
    /// degrees that will appear), plus the chain length, plus a margin.
    pub fn auto(order: &EndomorphismOrder) -> Self {
        let l = order.size();
        let mut max_cond = 0u64;
        let mut max_gen = 0u64;
        for i in 1..=l {
            for j in 1..=l {
                max_cond = max_cond.max(order.entry(i, j).conductor());
                let g = order.radical_entry(i, j).generators();
                max_gen = max_gen.max(g.into_iter().max().unwrap_or(0));
            }
        }
        let bound = 2 * max_cond + 2 * max_gen + l as u64 + 8;
        TruncationContext { bound: bound as u32, delta: 8, field: FieldSpec::Rational }
    }

    pub fn with_bound(mut self, bound: u32) -> Self {
        self.bound = bound;
        self
    }

    pub fn with_field(mut self, field: FieldSpec) -> Self {
        self.field = field;
        self
    }
}

/// Certificates carried by a computed resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionCertificates {
    /// All consecutive composites vanish below the bound.
    pub dd_zero: bool,
    /// Per map: its image equals the syzygy it covers (in truncation).
    pub exact: Vec<bool>,
    /// Per map: image contained in the radical of its target.
    pub minimal: Vec<bool>,
    /// Per map: all entries are single monomials (the fast shape; general
    /// entries are legal and handled by the same elimination).
    pub monomial: Vec<bool>,
    /// Structure agreed between the two truncation bounds.
    pub stable: bool,
    pub failures: Vec<String>,
}

impl ResolutionCertificates {
    pub fn all_pass(&self) -> bool {
        self.dd_zero
            && self.stable
            && self.exact.iter().all(|&b| b)
            && self.minimal.iter().all(|&b| b)
    }
}

/// A minimal projective resolution `0 ← S_i ← W_0 ← … ← W_k ← 0`, with
/// `frames[j] = W_j` and `maps[j] = d_{j+1} : W_{j+1} → W_j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Resolution {
    pub simple_index: usize,
    pub frames: Vec<Frame>,
    pub maps: Vec<ModuleMap>,
    pub certificates: ResolutionCertificates,
}

impl Resolution {
    /// The projective dimension: the index of the last nonzero frame.
    pub fn length(&self) -> usize {
        self.maps.len()
    }
}

fn check_simple_index(order: &EndomorphismOrder, i: usize) -> Result<(), HomologyError> {
    if i < 1 || i > order.size() {
        return Err(HomologyError::IndexOutOfRange(i));
    }
    Ok(())
}

/// Minimal projective resolution of `S_i` (1-based), stability-checked.
pub fn resolve_simple(
    order: &EndomorphismOrder,
    i: usize,
    max_len: usize,
    ctx: &TruncationContext,
) -> Result<Resolution, HomologyError> {
    check_simple_index(order, i)?;
    match ctx.field {
        FieldSpec::Rational => {
            resolve::resolve_simple_with(order, RatCtx, i, max_len, ctx.bound, ctx.delta)
        }
        FieldSpec::Prime(p) => resolve::resolve_simple_with(
            order,
            FpCtx { modulus: p },
            i,
            max_len,
            ctx.bound,
            ctx.delta,
        ),
    }
}

/// `pd(S_i)`: the length of the minimal resolution.
pub fn projective_dimension(
    order: &EndomorphismOrder,
    i: usize,
    ctx: &TruncationContext,
) -> Result<usize, HomologyError> {
    resolve_simple(order, i, order.size().max(2), ctx).map(|r| r.length())
}

/// Global dimension: the supremum of `pd(S_i)` over one representative per
/// isomorphism class of simples.
pub fn global_dimension(
    order: &EndomorphismOrder,
    ctx: &TruncationContext,
) -> Result<usize, HomologyError> {
    let max_len = order.size().max(2);
    match ctx.field {
        FieldSpec::Rational => {
            resolve::global_dimension_with(order, RatCtx, max_len, ctx.bound, ctx.delta)
        }
        FieldSpec::Prime(p) => resolve::global_dimension_with(
            order,
            FpCtx { modulus: p },
            max_len,
            ctx.bound,
            ctx.delta,
        ),
    }
}

/// Minimal generators of the kernel of a frame map, stability-checked.
pub fn kernel(
    order: &EndomorphismOrder,
    map: &ModuleMap,
    ctx: &TruncationContext,
) -> Result<SubModule, HomologyError> {
    match ctx.field {
        FieldSpec::Rational => resolve::kernel_with(order, RatCtx, map, ctx.bound, ctx.delta),
        FieldSpec::Prime(p) => {
            resolve::kernel_with(order, FpCtx { modulus: p }, map, ctx.bound, ctx.delta)
        }
    }
}

/// `X · J(E)`, generated by the products of the generators of `X` with the
/// monomial module generators of the radical cells.
pub fn radical_multiply(
    order: &EndomorphismOrder,
    x: &SubModule,
    ctx: &TruncationContext,
) -> Result<SubModule, HomologyError> {
    let l = order.size();
    let mut generators: Vec<Vec<Vec<Entry>>> = Vec::new();
    let mut tail = 0u32;
    for g in &x.generators {
        if g.len() != x.frame.len() || g.iter().any(|row| row.len() != l) {
            return Err(HomologyError::ShapeMismatch(
                "generator shape does not match frame × columns".into(),
            ));
        }
        for b in 1..=l {
            // column-b part of the generator
            let parts: Vec<&Entry> = g.iter().map(|row| &row[b - 1]).collect();
            if parts.iter().all(|e| e.is_zero()) {
                continue;
            }
            for c in 1..=l {
                for &delta in order.radical_entry(b, c).generators().iter() {
                    let mut new_gen = vec![vec![Entry::zero(); l]; x.frame.len()];
                    let mut nonzero = false;
                    for (s, e) in parts.iter().enumerate() {
                        let mut terms = Vec::new();
                        for t in &e.terms {
                            let d = t.deg as u64 + delta;
                            if d >= ctx.bound as u64 {
                                return Err(HomologyError::TruncationOverflow(format!(
                                    "product degree {d} exceeds the bound {}",
                                    ctx.bound
                                )));
                            }
                            terms.push(Term { deg: d as u32, num: t.num, den: t.den });
                            tail = tail.max(d as u32 + 1);
                            nonzero = true;
                        }
                        new_gen[s][c - 1] = Entry { terms };
                    }
                    if nonzero {
                        generators.push(new_gen);
                    }
                }
            }
        }
    }
    Ok(SubModule { frame: x.frame.clone(), generators, tail_degree: tail })
}

/// Nakayama-minimal generators of a submodule.
pub fn minimal_generators(
    order: &EndomorphismOrder,
    x: &SubModule,
    ctx: &TruncationContext,
) -> Result<Vec<Vec<Vec<Entry>>>, HomologyError> {
    projective_cover_impl(order, x, ctx).map(|(sm, _, _)| sm.generators)
}

/// The projective cover of a submodule: one projective per minimal
/// generator, indexed by the generator's column, with the covering map.
pub fn projective_cover(
    order: &EndomorphismOrder,
    x: &SubModule,
    ctx: &TruncationContext,
) -> Result<(Frame, ModuleMap), HomologyError> {
    projective_cover_impl(order, x, ctx).map(|(_, f, m)| (f, m))
}

fn projective_cover_impl(
    order: &EndomorphismOrder,
    x: &SubModule,
    ctx: &TruncationContext,
) -> Result<(SubModule, Frame, ModuleMap), HomologyError> {
    // structural outputs are field-independent; run over the rationals
    let run = |bound: u32| -> Result<(SubModule, Frame, ModuleMap), HomologyError> {
        let eng = resolve::Engine::new(order, RatCtx, bound);
        let state = resolve::submodule_state(&eng, x)?;
        let gens = eng.minimal_generators(&state)?;
        let (frame, entries) = eng.cover_map(&state, &gens);
        let sm = resolve::gens_to_submodule(&eng, &state, &gens, &x.frame);
        let entries: Vec<Vec<Entry>> = entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| Entry {
                        terms: p
                            .terms
                            .iter()
                            .map(|(d, c)| {
                                let (num, den) = field::Scalar::to_fraction(c);
                                Term { deg: *d, num, den }
                            })
                            .collect(),
                    })
                    .collect()
            })
            .collect();
        let map = ModuleMap::new(Frame::new(frame.clone()), x.frame.clone(), entries);
        Ok((sm, Frame::new(frame), map))
    };
    let a = run(ctx.bound)?;
    let b = run(ctx.bound + ctx.delta)?;
    if a.1 != b.1 {
        return Err(HomologyError::UnstableTruncation(format!(
            "cover frame changes between bounds {} and {}",
            ctx.bound,
            ctx.bound + ctx.delta
        )));
    }
    Ok(a)
}
