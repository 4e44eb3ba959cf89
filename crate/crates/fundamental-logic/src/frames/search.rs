//! Countermodel search over enumerated frame classes.
//!
//! Frames are enumerated by relation bitmask in canonical order, keeping one
//! representative per isomorphism class (the minimum encoding over all state
//! permutations), filtered by the class conditions, and cached per size. The
//! search then tries every valuation of the goal's atoms by fixpoints and
//! returns the first state forcing the left side but not the right side.
//!
//! Brute-force enumeration is capped at 4 states for relational classes and
//! 3 states for the modal class; larger `max_states` values add nothing.

use super::{
    ConditionReport, CounterModel, FixpointAlgebra, FrameCondition, ModalFrame, Model, StateSet,
};
use crate::formula::{Consecution, Formula};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// Classes of frames for which the supported logics are sound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrameClass {
    /// Pseudo-reflexive, pseudo-symmetric relational frames.
    FundamentalRelational,
    /// Relational frames with reflexive and symmetric openness.
    OrthoRelational,
    /// Unified additive modal frames, pseudo-reflexive and pseudo-symmetric.
    UnifiedModal,
}

impl FrameClass {
    pub fn is_modal(self) -> bool {
        matches!(self, FrameClass::UnifiedModal)
    }

    /// The conditions defining the class, as checkable reports.
    pub fn condition_reports(self, frame: &ModalFrame) -> Vec<ConditionReport> {
        match self {
            FrameClass::FundamentalRelational | FrameClass::OrthoRelational => vec![
                frame.check_condition(FrameCondition::PseudoReflexive),
                frame.check_condition(FrameCondition::PseudoSymmetric),
            ],
            FrameClass::UnifiedModal => vec![
                frame.check_condition(FrameCondition::Unified),
                frame.check_condition(FrameCondition::ModalFrame),
                frame.check_condition(FrameCondition::Additive),
                frame.check_condition(FrameCondition::PseudoReflexive),
                frame.check_condition(FrameCondition::PseudoSymmetric),
            ],
        }
    }

    pub fn admits(self, frame: &ModalFrame) -> bool {
        match self {
            FrameClass::FundamentalRelational | FrameClass::UnifiedModal => {
                self.condition_reports(frame).iter().all(|r| r.holds)
            }
            // reflexive + symmetric openness, which strengthens the pseudo
            // conditions
            FrameClass::OrthoRelational => {
                let n = frame.num_states();
                (0..n).all(|x| frame.open(x, x))
                    && (0..n).all(|x| (0..n).all(|y| frame.open(x, y) == frame.open(y, x)))
            }
        }
    }

    fn max_enumerated_states(self) -> usize {
        if self.is_modal() {
            3
        } else {
            4
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut perms);
    perms
}

fn permute_matrix(bits: u64, n: usize, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    let mut rest = bits;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (x, y) = (b / n, b % n);
        out |= 1 << (perm[x] * n + perm[y]);
    }
    out
}

/// Is `(open, r)` the lexicographically least encoding in its orbit?
fn is_canonical(open: u64, r: u64, n: usize, perms: &[Vec<usize>]) -> bool {
    for perm in perms {
        let po = permute_matrix(open, n, perm);
        if po < open || (po == open && permute_matrix(r, n, perm) < r) {
            return false;
        }
    }
    true
}

fn matrix_rows(bits: u64, n: usize) -> Vec<u64> {
    (0..n)
        .map(|x| (bits >> (x * n)) & ((1u64 << n) - 1))
        .collect()
}

fn build_catalog(class: FrameClass, n: usize) -> Vec<FixpointAlgebra> {
    if n == 0 || n > class.max_enumerated_states() {
        return Vec::new();
    }
    let perms = permutations(n);
    let cells = n * n;
    let mut out = Vec::new();
    for open in 0u64..(1 << cells) {
        if !class.is_modal() {
            if !is_canonical(open, 0, n, &perms) {
                continue;
            }
            let frame = ModalFrame::from_masks(n, matrix_rows(open, n), vec![0; n], vec![0; n]);
            if class.admits(&frame) {
                let algebra = frame.fixpoints_capped(n).expect("small frame");
                out.push(algebra);
            }
        } else {
            // the openness conditions are isomorphism-invariant, so filter
            // on them before enumerating accessibility
            let skeleton = ModalFrame::from_masks(n, matrix_rows(open, n), vec![0; n], vec![0; n]);
            if !skeleton.satisfies(FrameCondition::PseudoReflexive)
                || !skeleton.satisfies(FrameCondition::PseudoSymmetric)
            {
                continue;
            }
            for r in 0u64..(1 << cells) {
                if !is_canonical(open, r, n, &perms) {
                    continue;
                }
                let rows = matrix_rows(r, n);
                let frame = ModalFrame::from_masks(n, matrix_rows(open, n), rows.clone(), rows);
                if frame.satisfies(FrameCondition::ModalFrame)
                    && frame.satisfies(FrameCondition::Additive)
                {
                    let algebra = frame.fixpoints_capped(n).expect("small frame");
                    out.push(algebra);
                }
            }
        }
    }
    out
}

type CatalogMap = HashMap<(FrameClass, usize), Arc<Vec<FixpointAlgebra>>>;

static CATALOGS: OnceLock<Mutex<CatalogMap>> = OnceLock::new();

/// The cached catalog of all frames of the class with `n` states, one per
/// isomorphism class, each paired with its fixpoint lattice.
pub fn sound_frame_catalog(class: FrameClass, n: usize) -> Arc<Vec<FixpointAlgebra>> {
    let map = CATALOGS.get_or_init(|| Mutex::new(HashMap::new()));
    {
        let guard = map.lock().unwrap();
        if let Some(found) = guard.get(&(class, n)) {
            return Arc::clone(found);
        }
    }
    let built = Arc::new(build_catalog(class, n));
    let mut guard = map.lock().unwrap();
    Arc::clone(guard.entry((class, n)).or_insert(built))
}

/// Denotation against a positional valuation, used in the inner search loop.
fn denote(frame: &ModalFrame, f: &Formula, atoms: &[String], vals: &[StateSet]) -> StateSet {
    match f {
        Formula::Atom(p) => {
            let i = atoms.iter().position(|a| a == p).expect("atom in goal");
            vals[i]
        }
        Formula::Bot => frame.bottom(),
        Formula::Top => frame.full(),
        Formula::Neg(g) => frame.neg_op(denote(frame, g, atoms, vals)),
        Formula::And(a, b) => denote(frame, a, atoms, vals).inter(denote(frame, b, atoms, vals)),
        Formula::Or(a, b) => frame.join(denote(frame, a, atoms, vals), denote(frame, b, atoms, vals)),
        Formula::Box(g) => frame.box_op(denote(frame, g, atoms, vals)),
        Formula::Dia(g) => frame.dia_op(denote(frame, g, atoms, vals)),
    }
}

/// Try every fixpoint valuation of `atoms` on the given frames; first hit wins.
pub fn search_in_algebras(
    goal: &Consecution,
    algebras: &[FixpointAlgebra],
    atoms: &[String],
) -> Option<CounterModel> {
    let k = atoms.len();
    for algebra in algebras {
        let frame = algebra.frame();
        let fixpoints = algebra.fixpoints();
        let m = fixpoints.len();
        if m == 0 {
            continue;
        }
        let mut idx = vec![0usize; k];
        loop {
            let vals: Vec<StateSet> = idx.iter().map(|&i| fixpoints[i]).collect();
            let lhs = denote(frame, goal.lhs(), atoms, &vals);
            let rhs = denote(frame, goal.rhs(), atoms, &vals);
            let bad = lhs.inter(StateSet(!rhs.0)).inter(frame.full());
            if !bad.is_empty() {
                let witness = bad.iter().next().unwrap();
                let valuation: BTreeMap<String, StateSet> = atoms
                    .iter()
                    .cloned()
                    .zip(vals.iter().copied())
                    .collect();
                return Some(CounterModel {
                    model: Model::new(frame.clone(), valuation),
                    witness,
                });
            }
            // odometer over valuations
            let mut carry = true;
            for slot in idx.iter_mut().rev() {
                *slot += 1;
                if *slot < m {
                    carry = false;
                    break;
                }
                *slot = 0;
            }
            if carry || k == 0 {
                break;
            }
        }
    }
    None
}

/// Enumerate frames of size 1 to `max_states` in the class and search for a
/// model of the goal's left side that avoids its right side.
///
/// Exhaustion returns `None`; that is not a proof, only the absence of a
/// countermodel at the searched sizes.
pub fn countermodel_search(
    goal: &Consecution,
    class: FrameClass,
    max_states: usize,
) -> Option<CounterModel> {
    let atoms: Vec<String> = goal.atoms().into_iter().collect();
    for n in 1..=max_states {
        let catalog = sound_frame_catalog(class, n);
        if let Some(found) = search_in_algebras(goal, &catalog, &atoms) {
            return Some(found);
        }
    }
    None
}

/// Re-check a countermodel from first principles: class conditions, the
/// valuation being fixpoints, and the witness verdict via the recursive
/// forcing clauses (not the set-level evaluator the search used).
pub fn verify_countermodel(
    goal: &Consecution,
    class: FrameClass,
    cm: &CounterModel,
) -> Result<(), String> {
    if !class.admits(&cm.model.frame) {
        return Err("frame is outside the sound class".into());
    }
    cm.model.validate().map_err(|e| e.to_string())?;
    for atom in goal.atoms() {
        if !cm.model.valuation.contains_key(&atom) {
            return Err(format!("atom `{atom}` missing from valuation"));
        }
    }
    if !cm.model.forcing(cm.witness, goal.lhs()).map_err(|e| e.to_string())? {
        return Err("witness does not force the left side".into());
    }
    if cm.model.forcing(cm.witness, goal.rhs()).map_err(|e| e.to_string())? {
        return Err("witness forces the right side".into());
    }
    Ok(())
}
