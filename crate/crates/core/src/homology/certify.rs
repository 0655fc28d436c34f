//! Certification of externally supplied complexes: exactness position by
//! position, minimality of every differential, and whether the complex is a
//! minimal projective resolution of the stated simple module.

use serde::Serialize;

use crate::order::EndomorphismOrder;

use super::field::{FieldCtx, FpCtx, RatCtx};
use super::modules::{Frame, ModuleMap};
use super::resolve::{compose_is_zero, entries_to_polys, Engine};
use super::{FieldSpec, HomologyError, TruncationContext};

/// Verdicts at one position of the complex (position `j` sits at frame
/// `W_j`, between `d_j` and `d_{j+1}`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositionCertificate {
    pub position: usize,
    /// Image of the incoming map equals the kernel of the outgoing map.
    pub exact: bool,
    /// The outgoing map lands in the radical of the frame.
    pub minimal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexCertificate {
    pub simple_index: usize,
    /// Frames and maps compose with matching shapes and legal entries.
    pub well_defined: bool,
    /// `W_0` is the projective cover of the stated simple.
    pub covers_simple: bool,
    /// All consecutive composites vanish below the bound.
    pub dd_zero: bool,
    pub positions: Vec<PositionCertificate>,
    pub failures: Vec<String>,
}

impl ComplexCertificate {
    /// Exact everywhere, minimal everywhere, and a resolution of the simple.
    pub fn is_minimal_resolution(&self) -> bool {
        self.well_defined
            && self.covers_simple
            && self.dd_zero
            && self.positions.iter().all(|p| p.exact && p.minimal)
    }
}

/// Checks the complex `0 ← S_i ← W_0 ← d_1 ← W_1 ← … ← W_k ← 0`.
///
/// Exactness at position 0 means `im(d_1) = J(P_i)`; at position `j ≥ 1` it
/// means `im(d_{j+1}) = ker(d_j)` (with the convention that a missing
/// `d_{k+1}` is the zero map, so exactness at `k` means `ker(d_k) = 0`).
pub fn check_complex(
    order: &EndomorphismOrder,
    frames: &[Frame],
    maps: &[ModuleMap],
    simple_index: usize,
    ctx: &TruncationContext,
) -> Result<ComplexCertificate, HomologyError> {
    match ctx.field {
        FieldSpec::Rational => check_with(order, RatCtx, frames, maps, simple_index, ctx.bound),
        FieldSpec::Prime(p) => {
            check_with(order, FpCtx { modulus: p }, frames, maps, simple_index, ctx.bound)
        }
    }
}

fn check_with<F: FieldCtx>(
    order: &EndomorphismOrder,
    fctx: F,
    frames: &[Frame],
    maps: &[ModuleMap],
    simple_index: usize,
    bound: u32,
) -> Result<ComplexCertificate, HomologyError> {
    if simple_index < 1 || simple_index > order.size() {
        return Err(HomologyError::IndexOutOfRange(simple_index));
    }
    if frames.is_empty() || maps.len() + 1 != frames.len() {
        return Err(HomologyError::ShapeMismatch(format!(
            "{} frames do not fit {} maps",
            frames.len(),
            maps.len()
        )));
    }
    for (j, m) in maps.iter().enumerate() {
        if m.target != frames[j] || m.source != frames[j + 1] {
            return Err(HomologyError::ShapeMismatch(format!(
                "map {} does not connect frame {} to frame {}",
                j + 1,
                j + 1,
                j
            )));
        }
        if m.entries.len() != m.target.len() || m.entries.iter().any(|r| r.len() != m.source.len())
        {
            return Err(HomologyError::ShapeMismatch(format!("map {} entry grid malformed", j + 1)));
        }
    }

    let mut failures = Vec::new();
    let eng = Engine::new(order, fctx, bound);

    let well_defined = maps.iter().enumerate().all(|(j, m)| {
        let ok = m.well_defined_over(order);
        if !ok {
            failures.push(format!("map {} has entries outside the order", j + 1));
        }
        ok
    });

    // W_0 must be one projective in the class of the simple
    let covers_simple = frames[0].len() == 1
        && order.chain().same_class(frames[0].summands[0], simple_index);
    if !covers_simple {
        failures.push(format!(
            "frame 0 = {:?} is not the cover of S_{simple_index}",
            frames[0].summands
        ));
    }

    let polys: Vec<Vec<Vec<_>>> = maps.iter().map(|m| entries_to_polys(&eng, &m.entries)).collect();

    let mut dd_zero = true;
    for j in 0..maps.len().saturating_sub(1) {
        if !compose_is_zero(&polys[j], &polys[j + 1], bound) {
            dd_zero = false;
            failures.push(format!("d{} ∘ d{} ≠ 0", j + 1, j + 2));
        }
    }

    let mut positions = Vec::new();
    // position 0: im(d_1) = J(P_i) over frame W_0, if there is a d_1
    let mut incoming_state = eng.radical_row_state(frames[0].summands[0]);
    for j in 0..=maps.len() {
        let minimal = if j < maps.len() {
            let ok = maps[j].lands_in_radical(order);
            if !ok {
                failures.push(format!("map {} does not land in the radical", j + 1));
            }
            ok
        } else {
            true
        };
        let exact = if j < maps.len() {
            let ok = eng.image_matches_state(&incoming_state, &maps[j].source.summands, &polys[j]);
            if !ok {
                failures.push(format!("image of d{} differs from the syzygy at position {j}", j + 1));
            }
            ok
        } else {
            // end of the complex: the last kernel must vanish
            let ok = incoming_state.is_zero();
            if !ok {
                failures.push(format!("kernel of d{} is nonzero", j));
            }
            ok
        };
        positions.push(PositionCertificate { position: j, exact, minimal });
        if j < maps.len() {
            incoming_state =
                eng.kernel_state(&maps[j].source.summands, &incoming_state.layouts, &polys[j]);
        }
    }

    Ok(ComplexCertificate {
        simple_index,
        well_defined,
        covers_simple,
        dd_zero,
        positions,
        failures,
    })
}
