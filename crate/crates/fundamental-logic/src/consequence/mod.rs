//! Deciding consequence claims: sound forward saturation, a classical
//! truth-table oracle, and the combined prove/refute driver.

mod rules;
mod saturate;

pub use rules::{check_trace, parse_trace, render_trace, RuleId, RuleInstance, TraceParseError};
pub use saturate::{
    saturate, saturate_with_axioms, BudgetReport, SaturateOutcome, SaturationBudget, MAX_UNIVERSE,
};

use crate::formula::{Consecution, Formula, LogicId};
use crate::frames::search::{countermodel_search, search_in_algebras, FrameClass};
use crate::frames::{CounterModel, FixpointAlgebra, ModalFrame, Model, StateSet};
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// Outcome of a decision: a replayable proof, a refuting model in the
/// logic's sound frame class, or budget exhaustion.
#[derive(Clone, Debug)]
pub enum Verdict {
    Proved(Vec<RuleInstance>),
    Refuted(CounterModel),
    Unknown(BudgetReport),
}

impl Verdict {
    pub fn is_proved(&self) -> bool {
        matches!(self, Verdict::Proved(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown(_))
    }
}

/// Budgets for the prover and the refuter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecideBudgets {
    pub saturation: SaturationBudget,
    /// Largest frame size for brute-force countermodel enumeration
    /// (capped internally at 4 relational / 3 modal states).
    pub max_states: usize,
}

impl Default for DecideBudgets {
    fn default() -> Self {
        DecideBudgets {
            saturation: SaturationBudget::default(),
            max_states: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("formula `{0}` is not propositional")]
    NotPropositional(String),
    #[error("too many variables for the truth-table oracle: {0}")]
    TooManyVariables(usize),
}

fn eval_classical(f: &Formula, vars: &[String], mask: u64) -> bool {
    match f {
        Formula::Atom(p) => {
            let i = vars.iter().position(|v| v == p).expect("var collected");
            mask >> i & 1 == 1
        }
        Formula::Neg(g) => !eval_classical(g, vars, mask),
        Formula::And(a, b) => eval_classical(a, vars, mask) && eval_classical(b, vars, mask),
        Formula::Or(a, b) => eval_classical(a, vars, mask) || eval_classical(b, vars, mask),
        Formula::Bot | Formula::Top | Formula::Box(_) | Formula::Dia(_) => {
            unreachable!("checked propositional")
        }
    }
}

/// Exhaustive two-valued check: every assignment satisfying `phi`
/// satisfies `psi`.
pub fn classical_entails(phi: &Formula, psi: &Formula) -> Result<bool, OracleError> {
    for f in [phi, psi] {
        if !f.is_propositional() {
            return Err(OracleError::NotPropositional(f.render()));
        }
    }
    let mut vars: Vec<String> = phi.atoms().into_iter().collect();
    for v in psi.atoms() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars.sort();
    if vars.len() > 24 {
        return Err(OracleError::TooManyVariables(vars.len()));
    }
    for mask in 0u64..(1 << vars.len()) {
        if eval_classical(phi, &vars, mask) && !eval_classical(psi, &vars, mask) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First falsifying assignment, packaged as a one-point reflexive model.
/// That frame's fixpoint lattice is the two-element Boolean algebra, so the
/// model is a member of every sound class used here.
fn classical_countermodel(goal: &Consecution) -> Option<CounterModel> {
    let mut vars: Vec<String> = goal.atoms().into_iter().collect();
    vars.sort();
    let frame = ModalFrame::relational(1, &[(0, 0)]).expect("one-point frame");
    for mask in 0u64..(1 << vars.len()) {
        if eval_classical(goal.lhs(), &vars, mask) && !eval_classical(goal.rhs(), &vars, mask) {
            let valuation: BTreeMap<String, StateSet> = vars
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let set = if mask >> i & 1 == 1 {
                        StateSet(1)
                    } else {
                        StateSet::EMPTY
                    };
                    (v.clone(), set)
                })
                .collect();
            return Some(CounterModel {
                model: Model::new(frame, valuation),
                witness: 0,
            });
        }
    }
    None
}

/// The frame class for which the logic is sound (and, for the relational
/// logics and the modal system, complete).
pub fn frame_class_for(logic: LogicId) -> Option<FrameClass> {
    match logic {
        LogicId::Fundamental => Some(FrameClass::FundamentalRelational),
        LogicId::Ortho => Some(FrameClass::OrthoRelational),
        LogicId::FundamentalModal => Some(FrameClass::UnifiedModal),
        LogicId::Classical | LogicId::IntuitionisticFragment => None,
    }
}

/// Frames obtained by representing the bundled lattice fixtures through the
/// unified construction, kept when they land in the modal sound class.
/// They extend the refuter's reach past the brute-force size cap.
pub fn curated_modal_algebras() -> &'static [FixpointAlgebra] {
    static CURATED: OnceLock<Vec<FixpointAlgebra>> = OnceLock::new();
    CURATED.get_or_init(|| {
        let mut out = Vec::new();
        for fx in crate::lattice::fixtures() {
            if let Ok(built) = crate::representation::build_unified_frame(&fx.lattice) {
                if FrameClass::UnifiedModal.admits(&built.frame) {
                    if let Ok(algebra) = built
                        .frame
                        .fixpoints_capped(crate::frames::HARD_FIXPOINT_CAP)
                    {
                        out.push(algebra);
                    }
                }
            }
        }
        out.sort_by_key(|a| a.frame().num_states());
        out
    })
}

/// Decide the goal: prove by saturation, else search for a countermodel in
/// the logic's sound class, else report the spent budgets.
///
/// Classical goals are refuted directly from the truth-table oracle; a
/// classically valid goal still needs an in-budget saturation proof (over
/// the rules of the base system plus double negation elimination and the
/// two strengthened intuitionistic rules) to come back `Proved`.
/// The intuitionistic fragment has no countermodel search, so unproved
/// goals stay `Unknown`.
pub fn decide(goal: &Consecution, budgets: &DecideBudgets) -> Verdict {
    match goal.logic() {
        LogicId::Classical => match classical_entails(goal.lhs(), goal.rhs()) {
            Ok(false) => {
                Verdict::Refuted(classical_countermodel(goal).expect("oracle found an assignment"))
            }
            Ok(true) => match saturate(goal, &budgets.saturation) {
                SaturateOutcome::Proved(trace) => Verdict::Proved(trace),
                SaturateOutcome::Exhausted(mut report) => {
                    report.note = Some(
                        "classically valid by the truth-table oracle, but no proof fit the budget"
                            .to_string(),
                    );
                    Verdict::Unknown(report)
                }
            },
            Err(e) => Verdict::Unknown(BudgetReport {
                note: Some(e.to_string()),
                ..BudgetReport::default()
            }),
        },
        LogicId::IntuitionisticFragment => match saturate(goal, &budgets.saturation) {
            SaturateOutcome::Proved(trace) => Verdict::Proved(trace),
            SaturateOutcome::Exhausted(mut report) => {
                report.note =
                    Some("no countermodel search is available for this logic".to_string());
                Verdict::Unknown(report)
            }
        },
        LogicId::Fundamental | LogicId::Ortho | LogicId::FundamentalModal => {
            let proof = match saturate(goal, &budgets.saturation) {
                SaturateOutcome::Proved(trace) => return Verdict::Proved(trace),
                SaturateOutcome::Exhausted(report) => report,
            };
            let class = frame_class_for(goal.logic()).expect("relational or modal logic");
            if let Some(cm) = countermodel_search(goal, class, budgets.max_states) {
                return Verdict::Refuted(cm);
            }
            if goal.logic() == LogicId::FundamentalModal {
                let atoms: Vec<String> = goal.atoms().into_iter().collect();
                if let Some(cm) = search_in_algebras(goal, curated_modal_algebras(), &atoms) {
                    return Verdict::Refuted(cm);
                }
            }
            let mut report = proof;
            report.max_states_searched = budgets.max_states;
            Verdict::Unknown(report)
        }
    }
}
