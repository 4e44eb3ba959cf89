//! Finite relational and modal frames with exact fixpoint semantics.
//!
//! A frame carries a state set `X` (at most 64 states), the openness
//! relation on it, and two accessibility relations for the necessity and
//! possibility operations. Propositions are the fixpoints of the closure
//! operator induced by openness; this module computes them exactly,
//! together with the negation and modal operations, the first-order frame
//! conditions, and the forcing relation.

mod dot;
mod json;
pub mod search;

pub use dot::to_dot;
pub use json::{frame_from_json, frame_to_json, FrameJsonError};
pub use search::{countermodel_search, verify_countermodel, FrameClass};

use crate::formula::Formula;
use std::collections::BTreeMap;
use std::fmt;

/// Hard carrier cap imposed by the bitmask representation.
pub const MAX_STATES: usize = 64;

/// Default cap on `|X|` for exhaustive fixpoint enumeration.
pub const DEFAULT_FIXPOINT_CAP: usize = 14;

/// Largest `|X|` for which we are willing to enumerate all `2^|X|` subsets.
pub const HARD_FIXPOINT_CAP: usize = 24;

/// A subset of the states of some fixed frame, as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet(pub u64);

impl StateSet {
    pub const EMPTY: StateSet = StateSet(0);

    pub fn full(n: usize) -> StateSet {
        debug_assert!(n <= MAX_STATES);
        if n == 64 {
            StateSet(u64::MAX)
        } else {
            StateSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> StateSet {
        StateSet(1u64 << i)
    }

    pub fn from_states(states: &[usize]) -> StateSet {
        StateSet(states.iter().fold(0, |m, &i| m | (1u64 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: StateSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: StateSet) -> StateSet {
        StateSet(self.0 | other.0)
    }

    pub fn inter(self, other: StateSet) -> StateSet {
        StateSet(self.0 & other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn states(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FrameError {
    #[error("a frame needs at least one state")]
    Empty,
    #[error("frames support at most {MAX_STATES} states, got {0}")]
    TooManyStates(usize),
    #[error("state index {index} out of range for {states} states")]
    StateOutOfRange { index: usize, states: usize },
    #[error("fixpoint enumeration needs |X| <= {cap}, but the frame has {states} states")]
    FixpointCapExceeded { states: usize, cap: usize },
}

/// A finite frame `(X, open, R, Q)`.
///
/// `open` is the openness relation; `R` and `Q` drive the necessity and
/// possibility operations. A purely relational frame is one with `R` and
/// `Q` empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModalFrame {
    names: Vec<String>,
    open_succ: Vec<u64>,
    open_pred: Vec<u64>,
    r_succ: Vec<u64>,
    q_succ: Vec<u64>,
}

impl ModalFrame {
    /// Build a frame from edge lists; `open[(x, y)]` means x is open to y.
    pub fn from_relations(
        names: Vec<String>,
        open: &[(usize, usize)],
        r: &[(usize, usize)],
        q: &[(usize, usize)],
    ) -> Result<Self, FrameError> {
        let n = names.len();
        if n == 0 {
            return Err(FrameError::Empty);
        }
        if n > MAX_STATES {
            return Err(FrameError::TooManyStates(n));
        }
        let mut frame = ModalFrame {
            names,
            open_succ: vec![0; n],
            open_pred: vec![0; n],
            r_succ: vec![0; n],
            q_succ: vec![0; n],
        };
        let check = |i: usize| {
            if i >= n {
                Err(FrameError::StateOutOfRange { index: i, states: n })
            } else {
                Ok(())
            }
        };
        for &(x, y) in open {
            check(x)?;
            check(y)?;
            frame.open_succ[x] |= 1 << y;
            frame.open_pred[y] |= 1 << x;
        }
        for &(x, y) in r {
            check(x)?;
            check(y)?;
            frame.r_succ[x] |= 1 << y;
        }
        for &(x, y) in q {
            check(x)?;
            check(y)?;
            frame.q_succ[x] |= 1 << y;
        }
        Ok(frame)
    }

    /// Frame with default state names `s0..s{n-1}`.
    pub fn with_default_names(
        n: usize,
        open: &[(usize, usize)],
        r: &[(usize, usize)],
        q: &[(usize, usize)],
    ) -> Result<Self, FrameError> {
        Self::from_relations((0..n).map(|i| format!("s{i}")).collect(), open, r, q)
    }

    /// A frame with empty accessibility relations.
    pub fn relational(n: usize, open: &[(usize, usize)]) -> Result<Self, FrameError> {
        Self::with_default_names(n, open, &[], &[])
    }

    pub(crate) fn from_masks(n: usize, open_succ: Vec<u64>, r_succ: Vec<u64>, q_succ: Vec<u64>) -> Self {
        let mut open_pred = vec![0u64; n];
        for (x, &row) in open_succ.iter().enumerate() {
            let mut bits = row;
            while bits != 0 {
                let y = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                open_pred[y] |= 1 << x;
            }
        }
        ModalFrame {
            names: (0..n).map(|i| format!("s{i}")).collect(),
            open_succ,
            open_pred,
            r_succ,
            q_succ,
        }
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn state_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn state_names(&self) -> &[String] {
        &self.names
    }

    pub fn full(&self) -> StateSet {
        StateSet::full(self.num_states())
    }

    pub fn open(&self, x: usize, y: usize) -> bool {
        self.open_succ[x] >> y & 1 == 1
    }

    pub fn rel_r(&self, x: usize, y: usize) -> bool {
        self.r_succ[x] >> y & 1 == 1
    }

    pub fn rel_q(&self, x: usize, y: usize) -> bool {
        self.q_succ[x] >> y & 1 == 1
    }

    /// States `x` is open to.
    pub fn open_successors(&self, x: usize) -> StateSet {
        StateSet(self.open_succ[x])
    }

    /// States open to `x`.
    pub fn open_predecessors(&self, x: usize) -> StateSet {
        StateSet(self.open_pred[x])
    }

    pub fn r_successors(&self, x: usize) -> StateSet {
        StateSet(self.r_succ[x])
    }

    pub fn q_successors(&self, x: usize) -> StateSet {
        StateSet(self.q_succ[x])
    }

    pub fn edges_open(&self) -> Vec<(usize, usize)> {
        self.edges_of(&self.open_succ)
    }

    pub fn edges_r(&self) -> Vec<(usize, usize)> {
        self.edges_of(&self.r_succ)
    }

    pub fn edges_q(&self) -> Vec<(usize, usize)> {
        self.edges_of(&self.q_succ)
    }

    fn edges_of(&self, rows: &[u64]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (x, &row) in rows.iter().enumerate() {
            for y in StateSet(row).iter() {
                out.push((x, y));
            }
        }
        out
    }

    /// A state with no openness predecessor; exactly the states where
    /// falsum is forced.
    pub fn is_absurd(&self, x: usize) -> bool {
        self.open_pred[x] == 0
    }

    /// The closure of `A`: states x such that everything open to x has an
    /// openness successor inside `A`.
    pub fn closure(&self, a: StateSet) -> StateSet {
        let n = self.num_states();
        let mut blocked = 0u64;
        for y in 0..n {
            if self.open_succ[y] & a.0 == 0 {
                blocked |= 1 << y;
            }
        }
        let mut out = 0u64;
        for x in 0..n {
            if self.open_pred[x] & blocked == 0 {
                out |= 1 << x;
            }
        }
        StateSet(out)
    }

    /// Least fixpoint, the `0` of the proposition lattice.
    pub fn bottom(&self) -> StateSet {
        self.closure(StateSet::EMPTY)
    }

    /// Negation: states none of whose openness predecessors lie in `A`.
    pub fn neg_op(&self, a: StateSet) -> StateSet {
        let n = self.num_states();
        let mut out = 0u64;
        for x in 0..n {
            if self.open_pred[x] & a.0 == 0 {
                out |= 1 << x;
            }
        }
        StateSet(out)
    }

    /// Necessity: states whose `R`-successors all lie in `A`.
    pub fn box_op(&self, a: StateSet) -> StateSet {
        let n = self.num_states();
        let mut out = 0u64;
        for x in 0..n {
            if self.r_succ[x] & !a.0 == 0 {
                out |= 1 << x;
            }
        }
        StateSet(out)
    }

    /// Possibility: states x such that everything open to x can reach `A`
    /// through one `Q`-step followed by one openness step backwards.
    pub fn dia_op(&self, a: StateSet) -> StateSet {
        let n = self.num_states();
        // w = states with an openness successor in A
        let mut w = 0u64;
        for y in 0..n {
            if self.open_succ[y] & a.0 != 0 {
                w |= 1 << y;
            }
        }
        // m = states with a Q-successor in w
        let mut m = 0u64;
        for x in 0..n {
            if self.q_succ[x] & w != 0 {
                m |= 1 << x;
            }
        }
        let mut out = 0u64;
        for x in 0..n {
            if self.open_pred[x] & !m == 0 {
                out |= 1 << x;
            }
        }
        StateSet(out)
    }

    /// Join in the proposition lattice: the closure of the union.
    pub fn join(&self, a: StateSet, b: StateSet) -> StateSet {
        self.closure(a.union(b))
    }

    /// `z` pre-refines `x` when every state open to `z` is open to `x`.
    pub fn pre_refines(&self, z: usize, x: usize) -> bool {
        self.open_pred[z] & !self.open_pred[x] == 0
    }

    /// Exhaustive first-order check of a frame condition; on failure the
    /// report carries the violating state tuple.
    pub fn check_condition(&self, cond: FrameCondition) -> ConditionReport {
        let witness = match cond {
            FrameCondition::PseudoReflexive => self.find_pseudo_reflexive_failure(),
            FrameCondition::PseudoSymmetric => self.find_pseudo_symmetric_failure(),
            FrameCondition::ModalFrame => self.find_modal_failure(),
            FrameCondition::Additive => self.find_additive_failure(),
            FrameCondition::Negative => self.find_negative_failure(),
            FrameCondition::Unified => self.find_unified_failure(),
        };
        ConditionReport {
            condition: cond,
            holds: witness.is_none(),
            witness,
        }
    }

    pub fn satisfies(&self, cond: FrameCondition) -> bool {
        self.check_condition(cond).holds
    }

    /// Every non-absurd x has some z open to x that pre-refines x.
    fn find_pseudo_reflexive_failure(&self) -> Option<Vec<usize>> {
        let n = self.num_states();
        for x in 0..n {
            if self.open_pred[x] == 0 {
                continue;
            }
            let ok = StateSet(self.open_pred[x]).iter().any(|z| self.pre_refines(z, x));
            if !ok {
                return Some(vec![x]);
            }
        }
        None
    }

    /// For all x and all y open to x there is a z open to y pre-refining x.
    fn find_pseudo_symmetric_failure(&self) -> Option<Vec<usize>> {
        let n = self.num_states();
        for x in 0..n {
            for y in StateSet(self.open_pred[x]).iter() {
                let ok = StateSet(self.open_pred[y]).iter().any(|z| self.pre_refines(z, x));
                if !ok {
                    return Some(vec![x, y]);
                }
            }
        }
        None
    }

    /// The interaction condition between `R` and openness that makes the
    /// necessity operation fixpoint-preserving.
    fn find_modal_failure(&self) -> Option<Vec<usize>> {
        self.find_rq_failure(&self.r_succ, false, false)
    }

    /// The flipped condition on `Q` giving complete additivity of possibility.
    fn find_additive_failure(&self) -> Option<Vec<usize>> {
        self.find_rq_failure(&self.q_succ, true, true)
    }

    /// The condition making `~<>A <= []~A` valid: if x R y |> z then some
    /// x' open to x has every x'' open to x' reaching z by one Q-step and
    /// one openness step into z.
    fn find_negative_failure(&self) -> Option<Vec<usize>> {
        let n = self.num_states();
        // can_hit[z] = {u : exists v with u Q v and v open to z}
        let mut can_hit = vec![0u64; n];
        for z in 0..n {
            for u in 0..n {
                if self.q_succ[u] & self.open_pred[z] != 0 {
                    can_hit[z] |= 1 << u;
                }
            }
        }
        for x in 0..n {
            for y in StateSet(self.r_succ[x]).iter() {
                // y |> z, i.e. z open to y
                for z in StateSet(self.open_pred[y]).iter() {
                    let ok = StateSet(self.open_pred[x])
                        .iter()
                        .any(|xp| self.open_pred[xp] & !can_hit[z] == 0);
                    if !ok {
                        return Some(vec![x, y, z]);
                    }
                }
            }
        }
        None
    }

    /// Shared worker for the modal and additive conditions, which have the
    /// same quantifier shape with openness arrows flipped.
    ///
    /// Modal:    if x REL y |> z then ex x' open to x,  all x'' with x' open
    ///           to x'', ex y'': x'' REL y'' |> z.
    /// Additive: if x REL y, y open to z then ex x' with x open to x', all
    ///           x'' open to x', ex y'': x'' REL y'' open to z.
    fn find_rq_failure(&self, rel: &[u64], flip_outer: bool, flip_inner: bool) -> Option<Vec<usize>> {
        let n = self.num_states();
        // target[z] = {u : exists v with u REL v and (v related-to z per inner arrow)}
        let mut target = vec![0u64; n];
        for z in 0..n {
            let hits = if flip_inner {
                // v open to z (additive): v in open_pred[z]
                self.open_pred[z]
            } else {
                // v |> z, i.e. z open to v: v in open_succ[z]
                self.open_succ[z]
            };
            for u in 0..n {
                if rel[u] & hits != 0 {
                    target[z] |= 1 << u;
                }
            }
        }
        for x in 0..n {
            for y in StateSet(rel[x]).iter() {
                let zs = if flip_inner {
                    // y open to z
                    self.open_succ[y]
                } else {
                    // y |> z, z open to y
                    self.open_pred[y]
                };
                for z in StateSet(zs).iter() {
                    let xps = if flip_outer {
                        // x' with x open to x'
                        self.open_succ[x]
                    } else {
                        // x' open to x
                        self.open_pred[x]
                    };
                    let ok = StateSet(xps).iter().any(|xp| {
                        let xpps = if flip_outer {
                            // all x'' open to x'
                            self.open_pred[xp]
                        } else {
                            // all x'' with x' open to x''
                            self.open_succ[xp]
                        };
                        xpps & !target[z] == 0
                    });
                    if !ok {
                        return Some(vec![x, y, z]);
                    }
                }
            }
        }
        None
    }

    fn find_unified_failure(&self) -> Option<Vec<usize>> {
        for x in 0..self.num_states() {
            let diff = self.r_succ[x] ^ self.q_succ[x];
            if diff != 0 {
                let y = diff.trailing_zeros() as usize;
                return Some(vec![x, y]);
            }
        }
        None
    }

    /// All fixpoints of the closure operator, under the default cap.
    pub fn fixpoints(&self) -> Result<FixpointAlgebra, FrameError> {
        self.fixpoints_capped(DEFAULT_FIXPOINT_CAP)
    }

    /// All fixpoints, enumerated by filtering the closures of every subset.
    pub fn fixpoints_capped(&self, cap: usize) -> Result<FixpointAlgebra, FrameError> {
        let n = self.num_states();
        let cap = cap.min(HARD_FIXPOINT_CAP);
        if n > cap {
            return Err(FrameError::FixpointCapExceeded { states: n, cap });
        }
        let mut fixpoints = Vec::new();
        for bits in 0u64..(1u64 << n) {
            let a = StateSet(bits);
            if self.closure(a) == a {
                fixpoints.push(a);
            }
        }
        Ok(FixpointAlgebra {
            frame: self.clone(),
            fixpoints,
        })
    }
}

/// The first-order frame conditions recognised by [`ModalFrame::check_condition`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrameCondition {
    PseudoReflexive,
    PseudoSymmetric,
    ModalFrame,
    Additive,
    Negative,
    Unified,
}

impl FrameCondition {
    pub const ALL: [FrameCondition; 6] = [
        FrameCondition::PseudoReflexive,
        FrameCondition::PseudoSymmetric,
        FrameCondition::ModalFrame,
        FrameCondition::Additive,
        FrameCondition::Negative,
        FrameCondition::Unified,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FrameCondition::PseudoReflexive => "pseudo_reflexive",
            FrameCondition::PseudoSymmetric => "pseudo_symmetric",
            FrameCondition::ModalFrame => "modal_frame",
            FrameCondition::Additive => "additive",
            FrameCondition::Negative => "negative",
            FrameCondition::Unified => "unified",
        }
    }
}

impl fmt::Display for FrameCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FrameCondition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FrameCondition::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s || c.name().replace('_', "-") == s)
            .ok_or_else(|| format!("unknown frame condition `{s}`"))
    }
}

/// Outcome of a frame-condition check.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ConditionReport {
    pub condition: FrameCondition,
    pub holds: bool,
    /// The violating state tuple, present exactly when the check fails.
    pub witness: Option<Vec<usize>>,
}

/// The lattice of closure fixpoints of a frame, with its operations.
#[derive(Clone, Debug)]
pub struct FixpointAlgebra {
    frame: ModalFrame,
    fixpoints: Vec<StateSet>,
}

impl FixpointAlgebra {
    pub fn frame(&self) -> &ModalFrame {
        &self.frame
    }

    /// The fixpoints in increasing bitmask order.
    pub fn fixpoints(&self) -> &[StateSet] {
        &self.fixpoints
    }

    pub fn len(&self) -> usize {
        self.fixpoints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fixpoints.is_empty()
    }

    pub fn contains(&self, a: StateSet) -> bool {
        self.fixpoints.binary_search(&a).is_ok()
    }

    pub fn index_of(&self, a: StateSet) -> Option<usize> {
        self.fixpoints.binary_search(&a).ok()
    }

    pub fn bottom(&self) -> StateSet {
        self.frame.bottom()
    }

    pub fn top(&self) -> StateSet {
        self.frame.full()
    }

    pub fn meet(&self, a: StateSet, b: StateSet) -> StateSet {
        a.inter(b)
    }

    pub fn join(&self, a: StateSet, b: StateSet) -> StateSet {
        self.frame.join(a, b)
    }

    pub fn neg(&self, a: StateSet) -> StateSet {
        self.frame.neg_op(a)
    }

    pub fn box_op(&self, a: StateSet) -> StateSet {
        self.frame.box_op(a)
    }

    pub fn dia_op(&self, a: StateSet) -> StateSet {
        self.frame.dia_op(a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("atom `{0}` has no valuation")]
    UnboundAtom(String),
    #[error("valuation of `{atom}` is {set}, which is not a closure fixpoint (its closure is {closure})")]
    NotAFixpoint {
        atom: String,
        set: StateSet,
        closure: StateSet,
    },
    #[error("state {index} out of range for {states} states")]
    StateOutOfRange { index: usize, states: usize },
}

/// A frame together with a valuation of atoms by fixpoints.
#[derive(Clone, Debug)]
pub struct Model {
    pub frame: ModalFrame,
    pub valuation: BTreeMap<String, StateSet>,
}

impl Model {
    pub fn new(frame: ModalFrame, valuation: BTreeMap<String, StateSet>) -> Self {
        Model { frame, valuation }
    }

    /// Check that every valuation value is a closure fixpoint inside the carrier.
    pub fn validate(&self) -> Result<(), ModelError> {
        let full = self.frame.full();
        for (atom, &set) in &self.valuation {
            if !set.is_subset(full) {
                return Err(ModelError::StateOutOfRange {
                    index: set.iter().find(|&i| !full.contains(i)).unwrap_or(0),
                    states: self.frame.num_states(),
                });
            }
            let c = self.frame.closure(set);
            if c != set {
                return Err(ModelError::NotAFixpoint {
                    atom: atom.clone(),
                    set,
                    closure: c,
                });
            }
        }
        Ok(())
    }

    /// The set of states forcing `f`, computed with set operations.
    pub fn denotation(&self, f: &Formula) -> Result<StateSet, ModelError> {
        Ok(match f {
            Formula::Atom(p) => *self
                .valuation
                .get(p)
                .ok_or_else(|| ModelError::UnboundAtom(p.clone()))?,
            Formula::Bot => self.frame.bottom(),
            Formula::Top => self.frame.full(),
            Formula::Neg(g) => self.frame.neg_op(self.denotation(g)?),
            Formula::And(a, b) => self.denotation(a)?.inter(self.denotation(b)?),
            Formula::Or(a, b) => self.frame.join(self.denotation(a)?, self.denotation(b)?),
            Formula::Box(g) => self.frame.box_op(self.denotation(g)?),
            Formula::Dia(g) => self.frame.dia_op(self.denotation(g)?),
        })
    }

    /// Whether `f` is forced at state `x`, by direct recursive evaluation of
    /// the forcing clauses. Independent of [`Model::denotation`]; the two
    /// agree on every model.
    pub fn forcing(&self, x: usize, f: &Formula) -> Result<bool, ModelError> {
        if x >= self.frame.num_states() {
            return Err(ModelError::StateOutOfRange {
                index: x,
                states: self.frame.num_states(),
            });
        }
        Ok(match f {
            Formula::Atom(p) => self
                .valuation
                .get(p)
                .ok_or_else(|| ModelError::UnboundAtom(p.clone()))?
                .contains(x),
            Formula::Bot => self.frame.is_absurd(x),
            Formula::Top => true,
            Formula::Neg(g) => {
                for y in self.frame.open_predecessors(x).iter() {
                    if self.forcing(y, g)? {
                        return Ok(false);
                    }
                }
                true
            }
            Formula::And(a, b) => self.forcing(x, a)? && self.forcing(x, b)?,
            Formula::Or(a, b) => {
                // x forces a join when everything open to x has an openness
                // successor forcing one of the disjuncts
                'outer: {
                    for y in self.frame.open_predecessors(x).iter() {
                        let mut found = false;
                        for z in self.frame.open_successors(y).iter() {
                            if self.forcing(z, a)? || self.forcing(z, b)? {
                                found = true;
                                break;
                            }
                        }
                        if !found {
                            break 'outer false;
                        }
                    }
                    true
                }
            }
            Formula::Box(g) => {
                for y in self.frame.r_successors(x).iter() {
                    if !self.forcing(y, g)? {
                        return Ok(false);
                    }
                }
                true
            }
            Formula::Dia(g) => {
                'outer: {
                    for xp in self.frame.open_predecessors(x).iter() {
                        let mut found = false;
                        'mid: for yp in self.frame.q_successors(xp).iter() {
                            for y in self.frame.open_successors(yp).iter() {
                                if self.forcing(y, g)? {
                                    found = true;
                                    break 'mid;
                                }
                            }
                        }
                        if !found {
                            break 'outer false;
                        }
                    }
                    true
                }
            }
        })
    }
}

/// A refuting model: a state forcing the left side of a consecution but
/// not the right side.
#[derive(Clone, Debug)]
pub struct CounterModel {
    pub model: Model,
    pub witness: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn frame(n: usize, open: &[(usize, usize)]) -> ModalFrame {
        ModalFrame::relational(n, open).unwrap()
    }

    #[test]
    fn closure_examples() {
        // loose point: closure of the empty set is everything
        let f = frame(1, &[]);
        assert_eq!(f.closure(StateSet::EMPTY), StateSet::full(1));
        // reflexive point: empty set is closed
        let f = frame(1, &[(0, 0)]);
        assert_eq!(f.closure(StateSet::EMPTY), StateSet::EMPTY);
        // the full carrier is always a fixpoint
        for open in [vec![], vec![(0, 1)], vec![(0, 0), (1, 0)]] {
            let f = frame(2, &open);
            assert_eq!(f.closure(f.full()), f.full());
        }
    }

    #[test]
    fn fixpoint_examples() {
        let f = frame(1, &[(0, 0)]);
        let alg = f.fixpoints().unwrap();
        assert_eq!(alg.fixpoints(), &[StateSet(0), StateSet(1)]);
        let f = frame(1, &[]);
        let alg = f.fixpoints().unwrap();
        assert_eq!(alg.fixpoints(), &[StateSet(1)]);
    }

    #[test]
    fn neg_examples() {
        // no predecessors: x belongs to the negation of every set
        let f = frame(2, &[(0, 1)]);
        assert!(f.neg_op(f.full()).contains(0)); // state 0 has no predecessor
        // reflexive frame: negation of the carrier is empty
        let f = frame(2, &[(0, 0), (1, 1)]);
        assert_eq!(f.neg_op(f.full()), StateSet::EMPTY);
        assert_eq!(f.neg_op(StateSet::EMPTY), f.full());
    }

    #[test]
    fn box_dia_examples() {
        let f = frame(2, &[(0, 1)]);
        // R empty: box of anything is everything
        assert_eq!(f.box_op(StateSet::EMPTY), f.full());
        // openness empty at every state: dia of anything is everything
        let g = ModalFrame::with_default_names(2, &[], &[], &[(0, 1)]).unwrap();
        assert_eq!(g.dia_op(StateSet::EMPTY), g.full());
        // singleton loop with Q loop
        let h = ModalFrame::with_default_names(1, &[(0, 0)], &[], &[(0, 0)]).unwrap();
        assert_eq!(h.dia_op(StateSet(1)), StateSet(1));
        assert_eq!(h.dia_op(StateSet(0)), StateSet(0));
    }

    #[test]
    fn pre_refines_examples() {
        let f = frame(3, &[(0, 1)]);
        // state 2 has no predecessors, so it pre-refines everything
        assert!(f.pre_refines(2, 0));
        assert!(f.pre_refines(2, 1));
        // 0 <| 1, so 1 pre-refines 2 iff 0 <| 2, which fails
        assert!(!f.pre_refines(1, 2));
        // reflexive point pre-refines itself
        let g = frame(1, &[(0, 0)]);
        assert!(g.pre_refines(0, 0));
    }

    #[test]
    fn condition_examples() {
        // reflexive openness is pseudo-reflexive
        let f = frame(2, &[(0, 0), (1, 1), (0, 1)]);
        assert!(f.satisfies(FrameCondition::PseudoReflexive));
        // reflexive and symmetric gives pseudo-symmetric
        let g = frame(2, &[(0, 0), (1, 1), (0, 1), (1, 0)]);
        assert!(g.satisfies(FrameCondition::PseudoSymmetric));
        // empty R and Q: the modal conditions hold vacuously
        for cond in [
            FrameCondition::ModalFrame,
            FrameCondition::Additive,
            FrameCondition::Negative,
            FrameCondition::Unified,
        ] {
            assert!(g.satisfies(cond), "{cond}");
        }
    }

    #[test]
    fn condition_witness_reproduces() {
        // a frame violating pseudo-symmetry: 0 <| 1 but nothing open to 0
        let f = frame(2, &[(0, 1)]);
        let rep = f.check_condition(FrameCondition::PseudoSymmetric);
        assert!(!rep.holds);
        let w = rep.witness.unwrap();
        assert_eq!(w, vec![1, 0]); // x = 1, y = 0
        // recheck: no z open to y pre-refines x
        let (x, y) = (w[0], w[1]);
        assert!(f.open(y, x));
        assert!(!StateSet(f.open_pred[y]).iter().any(|z| f.pre_refines(z, x)));
    }

    #[test]
    fn forcing_bot_top() {
        let f = frame(2, &[(0, 1)]);
        let model = Model::new(f, BTreeMap::new());
        // state 0 is absurd (no predecessor), state 1 is not
        assert!(model.forcing(0, &Formula::Bot).unwrap());
        assert!(!model.forcing(1, &Formula::Bot).unwrap());
        assert!(model.forcing(0, &Formula::Top).unwrap());
        assert!(model.forcing(1, &Formula::Top).unwrap());
    }

    #[test]
    fn forcing_agrees_with_denotation_small() {
        let f = ModalFrame::with_default_names(
            3,
            &[(0, 0), (1, 1), (2, 2), (1, 0), (2, 1)],
            &[(0, 1), (1, 2)],
            &[(0, 1), (1, 2)],
        )
        .unwrap();
        let alg = f.fixpoints().unwrap();
        let val: BTreeMap<String, StateSet> =
            [("p".to_string(), alg.fixpoints()[1]), ("q".to_string(), alg.fixpoints()[0])]
                .into_iter()
                .collect();
        let model = Model::new(f, val);
        model.validate().unwrap();
        for text in ["p", "~p", "p | q", "p & ~q", "[]p", "<>q", "[](p | q)", "~<>p"] {
            let formula = parse(text).unwrap();
            let den = model.denotation(&formula).unwrap();
            for x in 0..3 {
                assert_eq!(
                    model.forcing(x, &formula).unwrap(),
                    den.contains(x),
                    "{text} at {x}"
                );
            }
        }
    }

    #[test]
    fn validate_rejects_non_fixpoint() {
        let f = frame(2, &[(0, 0), (1, 0)]);
        // {0} is not closed here iff closure({0}) != {0}; check both ways
        let set = StateSet(0b01);
        let c = f.closure(set);
        let model = Model::new(f, [("p".to_string(), set)].into_iter().collect());
        assert_eq!(model.validate().is_ok(), c == set);
    }

    /// The per-state forcing clauses and the set-level evaluator are two
    /// independent routes; they must agree everywhere.
    #[test]
    fn forcing_agrees_with_denotation_random() {
        use rand::Rng;
        let mut rng = crate::sampling::rng_from_seed(42);
        let atoms = ["p".to_string(), "q".to_string()];
        for _ in 0..80 {
            let n = rng.gen_range(1..=4);
            let frame = crate::sampling::random_modal_frame(&mut rng, n);
            let algebra = frame.fixpoints().unwrap();
            let model = crate::sampling::random_model_on(&mut rng, &algebra, &atoms);
            for _ in 0..6 {
                let f = crate::sampling::random_formula(&mut rng, 3, &["p", "q"], true);
                let den = model.denotation(&f).unwrap();
                for x in 0..n {
                    assert_eq!(
                        model.forcing(x, &f).unwrap(),
                        den.contains(x),
                        "{} at {x} on {frame:?}",
                        f.render()
                    );
                }
            }
        }
    }
}
