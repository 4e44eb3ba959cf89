//! Frame representations of finite lattices with negation, necessity, and
//! possibility, and machine verification of the induced embeddings.
//!
//! Three constructions are provided. The pairs frame lives on pairs `(a, b)`
//! of lattice elements with `¬a <= b`, with separate accessibility relations
//! for necessity and possibility; the unified frame strengthens the
//! accessibility relation so a single relation serves both operations; the
//! filter-ideal frame replays the pairs construction on filter/ideal pairs,
//! which on a finite lattice is the same frame up to renaming (every filter
//! and ideal is principal) — that agreement is verified, not assumed.

use crate::frames::{FrameCondition, FrameError, ModalFrame, StateSet};
use crate::lattice::{InteractionAxiom, Lattice, LatticeProperty, PropertyReport};
use std::fmt;

/// A carrier state of the pairs construction: lattice elements `(fst, snd)`
/// with `¬fst <= snd`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairState {
    pub fst: usize,
    pub snd: usize,
}

/// A carrier state of the filter-ideal construction, with both sides as
/// element bitmasks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FilterIdealPair {
    pub filter: u32,
    pub ideal: u32,
}

#[derive(Debug, thiserror::Error)]
pub enum RepresentationError {
    #[error("precondition failed: {0:?}")]
    Precondition(PropertyReport),
    #[error("the lattice needs box and dia tables for the modal representation")]
    MissingModalTables,
    #[error("carrier would have {0} states, above the supported maximum")]
    CarrierTooLarge(usize),
    #[error(transparent)]
    Frame(#[from] FrameError),
}

/// A built representation frame along with its carrier labelling.
#[derive(Clone, Debug)]
pub struct PairsFrame {
    pub frame: ModalFrame,
    pub carrier: Vec<PairState>,
    /// Whether the unified accessibility relation was used.
    pub unified: bool,
}

/// A built filter-ideal frame along with its carrier labelling.
#[derive(Clone, Debug)]
pub struct FilterIdealFrame {
    pub frame: ModalFrame,
    pub carrier: Vec<FilterIdealPair>,
    pub unified: bool,
}

fn require(lat: &Lattice, prop: LatticeProperty) -> Result<(), RepresentationError> {
    let report = lat
        .check_property(prop)
        .map_err(|_| RepresentationError::MissingModalTables)?;
    if report.holds {
        Ok(())
    } else {
        Err(RepresentationError::Precondition(report))
    }
}

fn base_preconditions(lat: &Lattice) -> Result<(), RepresentationError> {
    if lat.box_table().is_none() || lat.dia_table().is_none() {
        return Err(RepresentationError::MissingModalTables);
    }
    require(lat, LatticeProperty::Antitone)?;
    require(lat, LatticeProperty::NegTopIsBot)?;
    require(lat, LatticeProperty::Multiplicative)?;
    require(lat, LatticeProperty::Additive)?;
    Ok(())
}

fn unified_preconditions(lat: &Lattice) -> Result<(), RepresentationError> {
    base_preconditions(lat)?;
    require(lat, LatticeProperty::DualSelfAdjoint)?;
    let ax = lat
        .check_axiom(InteractionAxiom::DiamondNeg)
        .map_err(|_| RepresentationError::MissingModalTables)?;
    if !ax.holds {
        return Err(RepresentationError::Precondition(ax));
    }
    Ok(())
}

fn pairs_carrier(lat: &Lattice) -> Result<Vec<PairState>, RepresentationError> {
    let n = lat.len();
    let mut carrier = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lat.leq(lat.neg(a), b) {
                carrier.push(PairState { fst: a, snd: b });
            }
        }
    }
    if carrier.len() > crate::frames::MAX_STATES {
        return Err(RepresentationError::CarrierTooLarge(carrier.len()));
    }
    Ok(carrier)
}

/// `x R y` iff every `a` with `fst(x) <= []a` has `fst(y) <= a`.
fn pairs_r(lat: &Lattice, x: PairState, y: PairState) -> bool {
    let bx = lat.box_table().expect("checked");
    (0..lat.len()).all(|a| !lat.leq(x.fst, bx[a]) || lat.leq(y.fst, a))
}

/// `x Q y` iff every `a` with `<>a <= snd(x)` has `a <= snd(y)`.
fn pairs_q(lat: &Lattice, x: PairState, y: PairState) -> bool {
    let dx = lat.dia_table().expect("checked");
    (0..lat.len()).all(|a| !lat.leq(dx[a], x.snd) || lat.leq(a, y.snd))
}

fn pairs_frame_with(
    lat: &Lattice,
    unified: bool,
) -> Result<PairsFrame, RepresentationError> {
    let carrier = pairs_carrier(lat)?;
    let names: Vec<String> = carrier
        .iter()
        .map(|p| format!("({},{})", lat.name(p.fst), lat.name(p.snd)))
        .collect();
    let mut open = Vec::new();
    let mut r = Vec::new();
    let mut q = Vec::new();
    for (i, &x) in carrier.iter().enumerate() {
        for (j, &y) in carrier.iter().enumerate() {
            // x open to y iff snd(x) is not above fst(y)
            if !lat.leq(y.fst, x.snd) {
                open.push((i, j));
            }
            let rr = pairs_r(lat, x, y);
            let qq = pairs_q(lat, x, y);
            if unified {
                if rr && qq {
                    r.push((i, j));
                    q.push((i, j));
                }
            } else {
                if rr {
                    r.push((i, j));
                }
                if qq {
                    q.push((i, j));
                }
            }
        }
    }
    Ok(PairsFrame {
        frame: ModalFrame::from_relations(names, &open, &r, &q)?,
        carrier,
        unified,
    })
}

/// The pairs representation with independent accessibility relations.
///
/// Requires an antitone negation sending top to bottom, a multiplicative
/// box, and an additive dia; the result is always an additive modal frame.
pub fn build_pairs_frame(lat: &Lattice) -> Result<PairsFrame, RepresentationError> {
    base_preconditions(lat)?;
    pairs_frame_with(lat, false)
}

/// The unified pairs representation, with one relation for both modalities.
///
/// Additionally requires dual self-adjointness of the negation and the
/// `◇¬a <= ¬□a` axiom; the result is a unified additive modal frame with
/// pseudo-symmetric openness.
pub fn build_unified_frame(lat: &Lattice) -> Result<PairsFrame, RepresentationError> {
    unified_preconditions(lat)?;
    pairs_frame_with(lat, true)
}

fn is_filter(lat: &Lattice, mask: u32) -> bool {
    if mask == 0 {
        return false;
    }
    let n = lat.len();
    for a in 0..n {
        if mask >> a & 1 == 0 {
            continue;
        }
        for b in 0..n {
            if lat.leq(a, b) && mask >> b & 1 == 0 {
                return false;
            }
            if mask >> b & 1 == 1 && mask >> lat.meet(a, b) & 1 == 0 {
                return false;
            }
        }
    }
    true
}

fn is_ideal(lat: &Lattice, mask: u32) -> bool {
    if mask == 0 {
        return false;
    }
    let n = lat.len();
    for a in 0..n {
        if mask >> a & 1 == 0 {
            continue;
        }
        for b in 0..n {
            if lat.leq(b, a) && mask >> b & 1 == 0 {
                return false;
            }
            if mask >> b & 1 == 1 && mask >> lat.join(a, b) & 1 == 0 {
                return false;
            }
        }
    }
    true
}

/// The filter-ideal representation. With `unified` the accessibility
/// relation conjoins the box and dia transfer conditions and is shared.
pub fn build_filter_ideal_frame(
    lat: &Lattice,
    unified: bool,
) -> Result<FilterIdealFrame, RepresentationError> {
    if unified {
        unified_preconditions(lat)?;
    } else {
        base_preconditions(lat)?;
    }
    let n = lat.len();
    if n > 16 {
        return Err(RepresentationError::CarrierTooLarge(1 << n));
    }
    let bx = lat.box_table().expect("checked");
    let dx = lat.dia_table().expect("checked");
    let filters: Vec<u32> = (1u32..(1 << n)).filter(|&m| is_filter(lat, m)).collect();
    let ideals: Vec<u32> = (1u32..(1 << n)).filter(|&m| is_ideal(lat, m)).collect();
    let mut carrier = Vec::new();
    for &f in &filters {
        // {~a : a in F} as a mask
        let mut negs = 0u32;
        for a in 0..n {
            if f >> a & 1 == 1 {
                negs |= 1 << lat.neg(a);
            }
        }
        for &i in &ideals {
            if negs & !i == 0 {
                carrier.push(FilterIdealPair { filter: f, ideal: i });
            }
        }
    }
    if carrier.len() > crate::frames::MAX_STATES {
        return Err(RepresentationError::CarrierTooLarge(carrier.len()));
    }
    let describe = |mask: u32| {
        let names: Vec<&str> = (0..n).filter(|&a| mask >> a & 1 == 1).map(|a| lat.name(a)).collect();
        names.join(" ")
    };
    let names: Vec<String> = carrier
        .iter()
        .map(|p| format!("(F{{{}}},I{{{}}})", describe(p.filter), describe(p.ideal)))
        .collect();
    let box_transfer = |x: &FilterIdealPair, y: &FilterIdealPair| {
        (0..n).all(|a| x.filter >> bx[a] & 1 == 0 || y.filter >> a & 1 == 1)
    };
    let dia_transfer = |x: &FilterIdealPair, y: &FilterIdealPair| {
        (0..n).all(|a| x.ideal >> dx[a] & 1 == 0 || y.ideal >> a & 1 == 1)
    };
    let mut open = Vec::new();
    let mut r = Vec::new();
    let mut q = Vec::new();
    for (i, x) in carrier.iter().enumerate() {
        for (j, y) in carrier.iter().enumerate() {
            if x.ideal & y.filter == 0 {
                open.push((i, j));
            }
            if unified {
                if box_transfer(x, y) && dia_transfer(x, y) {
                    r.push((i, j));
                    q.push((i, j));
                }
            } else {
                if box_transfer(x, y) {
                    r.push((i, j));
                }
                if dia_transfer(x, y) {
                    q.push((i, j));
                }
            }
        }
    }
    Ok(FilterIdealFrame {
        frame: ModalFrame::from_relations(names, &open, &r, &q)?,
        carrier,
        unified,
    })
}

/// Report on the separating conditions for a set of element pairs.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SeparatingReport {
    pub holds: bool,
    /// `(a, b)` violating the covering clause, if any.
    pub clause1_witness: Option<(usize, usize)>,
    /// `(pair index, b)` violating the refinement clause, if any.
    pub clause2_witness: Option<(usize, usize)>,
}

/// Exhaustively check the two separating clauses for `pairs` over the
/// lattice, with the openness relation `(a,b) open to (c,d)` iff `c` is not
/// below `b`.
pub fn check_separating(lat: &Lattice, pairs: &[PairState]) -> SeparatingReport {
    let n = lat.len();
    let mut clause1_witness = None;
    'outer1: for a in 0..n {
        for b in 0..n {
            if lat.leq(a, b) {
                continue;
            }
            let ok = pairs.iter().any(|p| lat.leq(p.fst, a) && !lat.leq(p.fst, b));
            if !ok {
                clause1_witness = Some((a, b));
                break 'outer1;
            }
        }
    }
    let mut clause2_witness = None;
    'outer2: for (ci, c) in pairs.iter().enumerate() {
        for b in 0..n {
            if lat.leq(c.fst, b) {
                continue;
            }
            // need a pair open to c all of whose openness successors avoid b
            let ok = pairs.iter().any(|cp| {
                !lat.leq(c.fst, cp.snd)
                    && pairs
                        .iter()
                        .all(|cpp| lat.leq(cpp.fst, cp.snd) || !lat.leq(cpp.fst, b))
            });
            if !ok {
                clause2_witness = Some((ci, b));
                break 'outer2;
            }
        }
    }
    SeparatingReport {
        holds: clause1_witness.is_none() && clause2_witness.is_none(),
        clause1_witness,
        clause2_witness,
    }
}

/// Per-operation outcome of the embedding verification.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OpCheck {
    pub op: &'static str,
    pub holds: bool,
    pub witness: Option<String>,
}

/// Full verification record for a canonical embedding.
#[derive(Clone, Debug, serde::Serialize)]
pub struct MorphismReport {
    pub injective: bool,
    pub injective_witness: Option<(String, String)>,
    pub surjective_onto_fixpoints: bool,
    pub surjectivity_witness: Option<String>,
    pub preserves: Vec<OpCheck>,
}

impl MorphismReport {
    /// Bijective onto the fixpoints and preserving every operation.
    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.surjective_onto_fixpoints && self.preserves.iter().all(|c| c.holds)
    }
}

/// A built frame of either flavor, for embedding checks.
pub enum BuiltFrame<'a> {
    Pairs(&'a PairsFrame),
    FilterIdeal(&'a FilterIdealFrame),
}

impl<'a> BuiltFrame<'a> {
    fn frame(&self) -> &ModalFrame {
        match self {
            BuiltFrame::Pairs(p) => &p.frame,
            BuiltFrame::FilterIdeal(f) => &f.frame,
        }
    }

    /// The canonical image of a lattice element: states whose first
    /// component is below `a` (pairs), or whose filter contains `a`.
    fn image(&self, lat: &Lattice, a: usize) -> StateSet {
        let mut out = StateSet::EMPTY;
        match self {
            BuiltFrame::Pairs(p) => {
                for (i, s) in p.carrier.iter().enumerate() {
                    if lat.leq(s.fst, a) {
                        out.insert(i);
                    }
                }
            }
            BuiltFrame::FilterIdeal(f) => {
                for (i, s) in f.carrier.iter().enumerate() {
                    if s.filter >> a & 1 == 1 {
                        out.insert(i);
                    }
                }
            }
        }
        out
    }
}

/// Verify that the canonical map is an isomorphism from the lattice onto
/// the fixpoint lattice of the built frame, preserving meet, join, both
/// bounds, negation, box, and dia.
pub fn canonical_embedding(
    lat: &Lattice,
    built: &BuiltFrame<'_>,
) -> Result<MorphismReport, RepresentationError> {
    let frame = built.frame();
    let algebra = frame.fixpoints_capped(crate::frames::HARD_FIXPOINT_CAP)?;
    let n = lat.len();
    let images: Vec<StateSet> = (0..n).map(|a| built.image(lat, a)).collect();

    let mut injective = true;
    let mut injective_witness = None;
    'inj: for a in 0..n {
        for b in (a + 1)..n {
            if images[a] == images[b] {
                injective = false;
                injective_witness = Some((lat.name(a).to_string(), lat.name(b).to_string()));
                break 'inj;
            }
        }
    }

    let mut surjective = true;
    let mut surjectivity_witness = None;
    for (a, &img) in images.iter().enumerate() {
        if !algebra.contains(img) {
            surjective = false;
            surjectivity_witness = Some(format!(
                "image of {} is {}, not a fixpoint",
                lat.name(a),
                img
            ));
            break;
        }
    }
    if surjective {
        if let Some(&missing) = algebra.fixpoints().iter().find(|f| !images.contains(f)) {
            surjective = false;
            surjectivity_witness = Some(format!("fixpoint {missing} is not an image"));
        }
    }

    let mut preserves = Vec::new();
    let mut check = |op: &'static str, witness: Option<String>| {
        preserves.push(OpCheck {
            op,
            holds: witness.is_none(),
            witness,
        });
    };

    let mut meet_witness = None;
    let mut join_witness = None;
    'bin: for a in 0..n {
        for b in 0..n {
            if images[lat.meet(a, b)] != images[a].inter(images[b]) {
                meet_witness = Some(format!("at ({}, {})", lat.name(a), lat.name(b)));
                break 'bin;
            }
            if images[lat.join(a, b)] != frame.join(images[a], images[b]) {
                join_witness = Some(format!("at ({}, {})", lat.name(a), lat.name(b)));
                break 'bin;
            }
        }
    }
    check("meet", meet_witness);
    check("join", join_witness);
    check(
        "bot",
        (images[lat.bot()] != frame.bottom()).then(|| "image of bottom is not the least fixpoint".to_string()),
    );
    check(
        "top",
        (images[lat.top()] != frame.full()).then(|| "image of top is not the carrier".to_string()),
    );
    let neg_w = (0..n)
        .find(|&a| images[lat.neg(a)] != frame.neg_op(images[a]))
        .map(|a| format!("at {}", lat.name(a)));
    check("neg", neg_w);
    if let (Some(bt), Some(dt)) = (lat.box_table(), lat.dia_table()) {
        let bt = bt.to_vec();
        let dt = dt.to_vec();
        let box_w = (0..n)
            .find(|&a| images[bt[a]] != frame.box_op(images[a]))
            .map(|a| format!("at {}", lat.name(a)));
        check("box", box_w);
        let dia_w = (0..n)
            .find(|&a| images[dt[a]] != frame.dia_op(images[a]))
            .map(|a| format!("at {}", lat.name(a)));
        check("dia", dia_w);
    }

    Ok(MorphismReport {
        injective,
        injective_witness,
        surjective_onto_fixpoints: surjective,
        surjectivity_witness,
        preserves,
    })
}

/// Which witness state to produce for an accessibility obligation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessMap {
    /// Box witness: first component the meet of all `b` with `fst <= []b`.
    Rho,
    /// Dia witness: second component the join of all `b` with `<>b <= snd`.
    Sigma,
    /// Unified witness combining both.
    Tau,
}

impl fmt::Display for WitnessMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessMap::Rho => "rho",
            WitnessMap::Sigma => "sigma",
            WitnessMap::Tau => "tau",
        })
    }
}

/// Compute the named witness state for `x`, scanning the finite lattice for
/// the definable meet and join.
pub fn witness_map(
    lat: &Lattice,
    x: PairState,
    which: WitnessMap,
) -> Result<PairState, RepresentationError> {
    if lat.box_table().is_none() || lat.dia_table().is_none() {
        return Err(RepresentationError::MissingModalTables);
    }
    let bx = lat.box_table().unwrap();
    let dx = lat.dia_table().unwrap();
    let n = lat.len();
    let mut box_set = 0u32;
    let mut dia_set = 0u32;
    for b in 0..n {
        if lat.leq(x.fst, bx[b]) {
            box_set |= 1 << b;
        }
        if lat.leq(dx[b], x.snd) {
            dia_set |= 1 << b;
        }
    }
    let box_meet = lat.meet_all(box_set);
    let dia_join = lat.join_all(dia_set);
    Ok(match which {
        WitnessMap::Rho => PairState {
            fst: box_meet,
            snd: lat.neg(box_meet),
        },
        WitnessMap::Sigma => PairState {
            fst: lat.top(),
            snd: dia_join,
        },
        WitnessMap::Tau => PairState {
            fst: box_meet,
            snd: lat.join(dia_join, lat.neg(box_meet)),
        },
    })
}

/// Check that the filter-ideal frame is the pairs frame up to the principal
/// generator renaming: same carrier size, and the canonical bijection
/// matches openness and both accessibility relations.
pub fn check_filter_ideal_agreement(
    lat: &Lattice,
    unified: bool,
) -> Result<(), String> {
    let pairs = if unified {
        build_unified_frame(lat)
    } else {
        build_pairs_frame(lat)
    }
    .map_err(|e| e.to_string())?;
    let fi = build_filter_ideal_frame(lat, unified).map_err(|e| e.to_string())?;
    if pairs.carrier.len() != fi.carrier.len() {
        return Err(format!(
            "carrier sizes differ: {} pairs vs {} filter-ideal states",
            pairs.carrier.len(),
            fi.carrier.len()
        ));
    }
    // principal generators: the filter's least element, the ideal's greatest
    let principal = |p: &FilterIdealPair| -> Result<PairState, String> {
        let members = |m: u32| (0..lat.len()).filter(move |&a| m >> a & 1 == 1);
        let fst = members(p.filter)
            .find(|&g| members(p.filter).all(|c| lat.leq(g, c)))
            .ok_or("filter has no least element")?;
        let snd = members(p.ideal)
            .find(|&g| members(p.ideal).all(|c| lat.leq(c, g)))
            .ok_or("ideal has no greatest element")?;
        Ok(PairState { fst, snd })
    };
    let mut mapping = Vec::with_capacity(fi.carrier.len());
    for p in &fi.carrier {
        let target = principal(p)?;
        let idx = pairs
            .carrier
            .iter()
            .position(|&s| s == target)
            .ok_or_else(|| format!("({:?}) has no pairs counterpart", target))?;
        mapping.push(idx);
    }
    {
        let mut seen = mapping.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != mapping.len() {
            return Err("principal generator map is not injective".into());
        }
    }
    for (i, &pi) in mapping.iter().enumerate() {
        for (j, &pj) in mapping.iter().enumerate() {
            if fi.frame.open(i, j) != pairs.frame.open(pi, pj) {
                return Err(format!("openness differs at ({i}, {j})"));
            }
            if fi.frame.rel_r(i, j) != pairs.frame.rel_r(pi, pj) {
                return Err(format!("R differs at ({i}, {j})"));
            }
            if fi.frame.rel_q(i, j) != pairs.frame.rel_q(pi, pj) {
                return Err(format!("Q differs at ({i}, {j})"));
            }
        }
    }
    Ok(())
}

/// The conditions a pairs representation is expected to satisfy.
pub fn expected_conditions(unified: bool, lat: &Lattice) -> Vec<FrameCondition> {
    let mut conds = vec![FrameCondition::ModalFrame, FrameCondition::Additive];
    if unified {
        conds.push(FrameCondition::Unified);
        conds.push(FrameCondition::PseudoSymmetric);
        if lat
            .check_property(LatticeProperty::Semicomplementation)
            .map(|r| r.holds)
            .unwrap_or(false)
        {
            conds.push(FrameCondition::PseudoReflexive);
        }
        if lat
            .check_axiom(InteractionAxiom::NegDiamond)
            .map(|r| r.holds)
            .unwrap_or(false)
        {
            conds.push(FrameCondition::Negative);
        }
    }
    conds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{fixtures, LatticeAlgebra};

    fn boolean2() -> Lattice {
        LatticeAlgebra {
            elements: vec!["0".into(), "1".into()],
            leq: vec![(0, 1)],
            neg: vec![1, 0],
            box_table: Some(vec![0, 1]),
            dia: Some(vec![0, 1]),
        }
        .validate()
        .unwrap()
    }

    #[test]
    fn two_element_carrier() {
        let lat = boolean2();
        let built = build_pairs_frame(&lat).unwrap();
        // pairs with ~a <= b: (0,1), (1,0), (1,1)
        assert_eq!(
            built.carrier,
            vec![
                PairState { fst: 0, snd: 1 },
                PairState { fst: 1, snd: 0 },
                PairState { fst: 1, snd: 1 },
            ]
        );
        // the top-top pair is not open to itself
        let tt = built
            .carrier
            .iter()
            .position(|p| p.fst == 1 && p.snd == 1)
            .unwrap();
        assert!(!built.frame.open(tt, tt));
    }

    #[test]
    fn pairs_frames_are_additive_modal_frames() {
        for fx in fixtures() {
            let built = build_pairs_frame(&fx.lattice).unwrap();
            assert!(
                built.frame.satisfies(FrameCondition::ModalFrame),
                "{}",
                fx.name
            );
            assert!(
                built.frame.satisfies(FrameCondition::Additive),
                "{}",
                fx.name
            );
        }
    }

    #[test]
    fn unified_frame_conditions() {
        for fx in fixtures() {
            let lat = &fx.lattice;
            match build_unified_frame(lat) {
                Ok(built) => {
                    for cond in expected_conditions(true, lat) {
                        assert!(built.frame.satisfies(cond), "{}: {cond}", fx.name);
                    }
                }
                Err(RepresentationError::Precondition(report)) => {
                    // only the two weak-negation fixtures are rejected
                    assert!(
                        fx.name.starts_with("allind"),
                        "{} rejected: {report:?}",
                        fx.name
                    );
                }
                Err(other) => panic!("{}: {other}", fx.name),
            }
        }
    }

    #[test]
    fn embeddings_are_isomorphisms() {
        for fx in fixtures() {
            let built = build_pairs_frame(&fx.lattice).unwrap();
            let report = canonical_embedding(&fx.lattice, &BuiltFrame::Pairs(&built)).unwrap();
            assert!(report.is_isomorphism(), "{}: {report:?}", fx.name);
        }
    }

    #[test]
    fn separating_examples() {
        let lat = boolean2();
        let built = build_pairs_frame(&lat).unwrap();
        assert!(check_separating(&lat, &built.carrier).holds);
        // the empty set fails the covering clause on a two-element lattice
        let report = check_separating(&lat, &[]);
        assert!(!report.holds);
        assert_eq!(report.clause1_witness, Some((1, 0)));
        // pairs (a, ~a) for every a: check by brute force
        let diag: Vec<PairState> = (0..lat.len())
            .map(|a| PairState { fst: a, snd: lat.neg(a) })
            .collect();
        let report = check_separating(&lat, &diag);
        // clause 1 holds: for 1 not<= 0 take (1, 0)
        assert_eq!(report.clause1_witness, None);
    }

    #[test]
    fn witness_map_examples() {
        // sigma on the three-element chain at (1, 0): join of b with <>b <= 0
        // is just 0
        let fx = fixtures().into_iter().find(|f| f.name == "negbox_chain3").unwrap();
        let lat = &fx.lattice;
        let one = lat.top();
        let zero = lat.bot();
        let x = PairState { fst: one, snd: zero };
        let sigma = witness_map(lat, x, WitnessMap::Sigma).unwrap();
        assert_eq!(sigma, PairState { fst: one, snd: zero });
        // rho at (1,1): first component is the meet of all b with 1 <= []b
        let x = PairState { fst: one, snd: one };
        let rho = witness_map(lat, x, WitnessMap::Rho).unwrap();
        // only b = 1 satisfies 1 <= []b on this chain
        assert_eq!(rho.fst, one);
        assert_eq!(rho.snd, lat.neg(one));
    }

    #[test]
    fn witness_map_properties_hold() {
        for fx in fixtures() {
            let lat = &fx.lattice;
            let built = build_pairs_frame(lat).unwrap();
            let bx = lat.box_table().unwrap().to_vec();
            let dx = lat.dia_table().unwrap().to_vec();
            for &x in &built.carrier {
                let rho = witness_map(lat, x, WitnessMap::Rho).unwrap();
                let sigma = witness_map(lat, x, WitnessMap::Sigma).unwrap();
                assert!(pairs_r(lat, x, rho), "{}: x R rho(x)", fx.name);
                assert!(pairs_q(lat, x, sigma), "{}: x Q sigma(x)", fx.name);
                for a in 0..lat.len() {
                    if !lat.leq(x.fst, bx[a]) {
                        assert!(!lat.leq(rho.fst, a), "{}: rho blocking", fx.name);
                    }
                    if !lat.leq(dx[a], x.snd) {
                        assert!(!lat.leq(a, sigma.snd), "{}: sigma blocking", fx.name);
                    }
                }
            }
            if build_unified_frame(lat).is_ok() {
                for &x in &built.carrier {
                    let tau = witness_map(lat, x, WitnessMap::Tau).unwrap();
                    assert!(
                        pairs_r(lat, x, tau) && pairs_q(lat, x, tau),
                        "{}: x R tau(x) under the unified relation",
                        fx.name
                    );
                    for a in 0..lat.len() {
                        if !lat.leq(x.fst, bx[a]) {
                            assert!(!lat.leq(tau.fst, a), "{}: tau box blocking", fx.name);
                        }
                        if !lat.leq(dx[a], x.snd) {
                            assert!(!lat.leq(a, tau.snd), "{}: tau dia blocking", fx.name);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn one_element_lattice_degenerates_gracefully() {
        let lat = LatticeAlgebra {
            elements: vec!["*".into()],
            leq: vec![],
            neg: vec![0],
            box_table: Some(vec![0]),
            dia: Some(vec![0]),
        }
        .validate()
        .unwrap();
        let built = build_pairs_frame(&lat).unwrap();
        assert_eq!(built.carrier.len(), 1);
        assert!(built.frame.edges_open().is_empty());
        let report = canonical_embedding(&lat, &BuiltFrame::Pairs(&built)).unwrap();
        assert!(report.is_isomorphism());
    }

    #[test]
    fn filter_ideal_agreement_on_small_fixtures() {
        for name in ["negbox_chain3", "negdiamond_bool4"] {
            let fx = fixtures().into_iter().find(|f| f.name == name).unwrap();
            check_filter_ideal_agreement(&fx.lattice, false).unwrap();
            check_filter_ideal_agreement(&fx.lattice, true).unwrap();
        }
    }

    #[test]
    fn filter_ideal_two_element_carrier() {
        let lat = boolean2();
        let built = build_filter_ideal_frame(&lat, false).unwrap();
        // filters {1}, {0,1}; ideals {0}, {0,1}; membership leaves 3 states
        assert_eq!(built.carrier.len(), 3);
    }

    /// Random lattices carrying any valid signature embed isomorphically,
    /// and their carriers are separating.
    #[test]
    fn random_valid_lattices_embed() {
        use crate::lattice::LatticeProperty;
        use crate::sampling::{
            random_lattice, random_monotone_table, random_table, rng_from_seed, with_tables,
        };
        let mut rng = rng_from_seed(9);
        let mut done = 0;
        for _ in 0..400 {
            if done >= 30 {
                break;
            }
            let lat0 = random_lattice(&mut rng, 3, 2);
            if lat0.len() > 5 {
                continue;
            }
            let n = lat0.len();
            // antitone negation with top to bottom, by rejection with a
            // guaranteed fallback
            let neg = (0..200)
                .map(|_| random_table(&mut rng, n))
                .find(|t| {
                    t[lat0.top()] == lat0.bot()
                        && (0..n).all(|a| (0..n).all(|b| !lat0.leq(a, b) || lat0.leq(t[b], t[a])))
                })
                .unwrap_or_else(|| {
                    (0..n)
                        .map(|a| if a == lat0.bot() { lat0.top() } else { lat0.bot() })
                        .collect()
                });
            let multiplicative = |t: &[usize]| {
                t[lat0.top()] == lat0.top()
                    && (0..n).all(|a| {
                        (0..n).all(|b| t[lat0.meet(a, b)] == lat0.meet(t[a], t[b]))
                    })
            };
            let additive = |t: &[usize]| {
                t[lat0.bot()] == lat0.bot()
                    && (0..n)
                        .all(|a| (0..n).all(|b| t[lat0.join(a, b)] == lat0.join(t[a], t[b])))
            };
            let identity: Vec<usize> = (0..n).collect();
            let bx = (0..60)
                .map(|_| random_monotone_table(&mut rng, &lat0))
                .find(|t| multiplicative(t))
                .unwrap_or_else(|| identity.clone());
            let dx = (0..60)
                .map(|_| random_monotone_table(&mut rng, &lat0))
                .find(|t| additive(t))
                .unwrap_or(identity);
            let lat = with_tables(&lat0, neg, Some(bx), Some(dx));
            assert!(lat.check_property(LatticeProperty::Antitone).unwrap().holds);
            let built = match build_pairs_frame(&lat) {
                Ok(b) if b.frame.num_states() <= 18 => b,
                Ok(_) => continue,
                Err(RepresentationError::CarrierTooLarge(_)) => continue,
                Err(e) => panic!("{e}"),
            };
            assert!(built.frame.satisfies(FrameCondition::ModalFrame));
            assert!(built.frame.satisfies(FrameCondition::Additive));
            assert!(check_separating(&lat, &built.carrier).holds);
            let report = canonical_embedding(&lat, &BuiltFrame::Pairs(&built)).unwrap();
            assert!(report.is_isomorphism(), "{report:?}");
            done += 1;
        }
        assert!(done >= 30, "only {done} random lattices exercised");
    }
}
