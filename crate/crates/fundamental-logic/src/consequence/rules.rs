//! Rule identifiers, rule instances, trace checking, and the line-oriented
//! trace format.
//!
//! Rules 1-11 are the intro-elim rules of the base system; 12-20 are the
//! additional rules of the modal system. The variant tags cover double
//! negation elimination (orthologic, classical), the pseudocomplementation
//! rule, and proof by cases with side assumptions (intuitionistic fragment,
//! classical).

use crate::formula::{Consecution, Formula, LogicId, ParseError};
use std::collections::HashSet;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleId {
    /// One of rules 1..=20.
    Standard(u8),
    /// Double negation elimination `~~x |- x`.
    Dne,
    /// If `x & y |- x & ~x` then `x |- ~y`.
    PseudoComplement,
    /// If `a & x |- c` and `a & y |- c` then `a & (x | y) |- c`.
    ///
    /// The conclusion ends in the shared `c` of the premises. Statements of
    /// this rule occasionally end it in `y` instead; that reading is a typo
    /// (it would let `a & (x | y)` entail an arbitrary second disjunct) and
    /// is not followed here.
    CasesWithSide,
    /// An externally supplied assumption, used only when saturating under
    /// extra axioms; plain proof search never emits it.
    Hypothesis,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleId::Standard(n) => write!(f, "{n}"),
            RuleId::Dne => f.write_str("dne"),
            RuleId::PseudoComplement => f.write_str("pc"),
            RuleId::CasesWithSide => f.write_str("pbc"),
            RuleId::Hypothesis => f.write_str("hyp"),
        }
    }
}

impl std::str::FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dne" => Ok(RuleId::Dne),
            "pc" => Ok(RuleId::PseudoComplement),
            "pbc" => Ok(RuleId::CasesWithSide),
            "hyp" => Ok(RuleId::Hypothesis),
            n => n
                .parse::<u8>()
                .ok()
                .filter(|n| (1..=20).contains(n))
                .map(RuleId::Standard)
                .ok_or_else(|| format!("unknown rule id `{s}`")),
        }
    }
}

/// One derivation step: a rule, its conclusion, and the premises it used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleInstance {
    pub rule: RuleId,
    pub conclusion: Consecution,
    pub premises: Vec<Consecution>,
}

impl RuleInstance {
    /// Whether the step is a literal instance of its rule schema.
    pub fn matches_schema(&self) -> bool {
        use Formula::*;
        let logic = self.conclusion.logic();
        if self.premises.iter().any(|p| p.logic() != logic) {
            return false;
        }
        let l = self.conclusion.lhs();
        let r = self.conclusion.rhs();
        let prems: Vec<(&Formula, &Formula)> =
            self.premises.iter().map(|p| (p.lhs(), p.rhs())).collect();
        match (self.rule, prems.as_slice()) {
            (RuleId::Standard(1), []) => l == r,
            (RuleId::Standard(2), []) => matches!(l, And(a, _) if **a == *r),
            (RuleId::Standard(3), []) => matches!(l, And(_, b) if **b == *r),
            (RuleId::Standard(4), []) => matches!(r, Or(a, _) if **a == *l),
            (RuleId::Standard(5), []) => matches!(r, Or(_, b) if **b == *l),
            (RuleId::Standard(6), []) => {
                matches!(r, Neg(n) if matches!(&**n, Neg(m) if **m == *l))
            }
            (RuleId::Standard(7), []) => {
                matches!(l, And(a, n) if matches!(&**n, Neg(m) if m == a))
            }
            (RuleId::Standard(8), [(a, b), (b2, c)]) => a == &l && b == b2 && c == &r,
            (RuleId::Standard(9), [(a, b), (a2, c)]) => {
                a == a2 && a == &l && matches!(r, And(x, y) if **x == **b && **y == **c)
            }
            (RuleId::Standard(10), [(a, c), (b, c2)]) => {
                c == c2 && c == &r && matches!(l, Or(x, y) if **x == **a && **y == **b)
            }
            (RuleId::Standard(11), [(a, b)]) => {
                matches!(l, Neg(x) if **x == **b) && matches!(r, Neg(y) if **y == **a)
            }
            (RuleId::Standard(12), []) => *l == Bot || *r == Top,
            (RuleId::Standard(13), []) => {
                matches!(l, Neg(t) if **t == Top) && *r == Bot
            }
            (RuleId::Standard(14), []) => match (l, r) {
                (And(ba, bb), Formula::Box(ab)) => match (&**ba, &**bb, &**ab) {
                    (Formula::Box(a), Formula::Box(b), And(a2, b2)) => a == a2 && b == b2,
                    _ => false,
                },
                _ => false,
            },
            (RuleId::Standard(15), []) => match (l, r) {
                (Dia(or), Or(da, db)) => match (&**or, &**da, &**db) {
                    (Or(a, b), Dia(a2), Dia(b2)) => a == a2 && b == b2,
                    _ => false,
                },
                _ => false,
            },
            (RuleId::Standard(16), []) => match (l, r) {
                (Dia(na), Neg(ba)) => match (&**na, &**ba) {
                    (Neg(a), Formula::Box(a2)) => a == a2,
                    _ => false,
                },
                _ => false,
            },
            (RuleId::Standard(17), []) => {
                *l == Top && matches!(r, Formula::Box(t) if **t == Top)
            }
            (RuleId::Standard(18), []) => {
                matches!(l, Dia(b) if **b == Bot) && *r == Bot
            }
            (RuleId::Standard(19), [(a, b)]) => {
                matches!(l, Formula::Box(x) if **x == **a)
                    && matches!(r, Formula::Box(y) if **y == **b)
            }
            (RuleId::Standard(20), [(a, b)]) => {
                matches!(l, Dia(x) if **x == **a) && matches!(r, Dia(y) if **y == **b)
            }
            (RuleId::Dne, []) => {
                matches!(l, Neg(n) if matches!(&**n, Neg(m) if **m == *r))
            }
            (RuleId::Hypothesis, []) => true,
            (RuleId::PseudoComplement, [(p, q)]) => match (p, q) {
                (And(a, b), And(a2, na)) => {
                    a == a2
                        && matches!(&**na, Neg(m) if m == a)
                        && **a == *l
                        && matches!(r, Neg(y) if y == b)
                }
                _ => false,
            },
            (RuleId::CasesWithSide, [(p1, c1), (p2, c2)]) => match (p1, p2) {
                (And(al, f), And(al2, g)) => {
                    al == al2
                        && c1 == c2
                        && *c1 == r
                        && matches!(l, And(a3, or) if a3 == al
                            && matches!(&**or, Or(x, y) if x == f && y == g))
                }
                _ => false,
            },
            _ => false,
        }
    }
}

/// True iff every step instantiates its rule schema and every premise
/// appears as the conclusion of an earlier step.
pub fn check_trace(trace: &[RuleInstance]) -> bool {
    let mut seen: HashSet<(Formula, Formula)> = HashSet::new();
    for step in trace {
        if !step.matches_schema() {
            return false;
        }
        for p in &step.premises {
            if !seen.contains(&(p.lhs().clone(), p.rhs().clone())) {
                return false;
            }
        }
        seen.insert((step.conclusion.lhs().clone(), step.conclusion.rhs().clone()));
    }
    true
}

/// One step per line: `<rule>: <lhs> |- <rhs> FROM <indices>`, where the
/// indices point at earlier lines (0-based) and `-` marks an axiom step.
pub fn render_trace(trace: &[RuleInstance]) -> String {
    let mut out = String::new();
    let conclusions: Vec<&Consecution> = trace.iter().map(|s| &s.conclusion).collect();
    for (i, step) in trace.iter().enumerate() {
        let idxs: Vec<String> = step
            .premises
            .iter()
            .map(|p| {
                conclusions[..i]
                    .iter()
                    .position(|c| c.lhs() == p.lhs() && c.rhs() == p.rhs())
                    .map(|k| k.to_string())
                    .unwrap_or_else(|| "?".to_string())
            })
            .collect();
        let from = if idxs.is_empty() {
            "-".to_string()
        } else {
            idxs.join(",")
        };
        out.push_str(&format!("{}: {} FROM {}\n", step.rule, step.conclusion, from));
    }
    out
}

#[derive(Debug, thiserror::Error)]
pub enum TraceParseError {
    #[error("line {line}: missing `:` separator")]
    MissingRule { line: usize },
    #[error("line {line}: missing ` FROM ` marker")]
    MissingFrom { line: usize },
    #[error("line {1}: {0}")]
    BadRule(String, usize),
    #[error("line {line}: bad premise index `{index}`")]
    BadIndex { line: usize, index: String },
    #[error("line {line}: premise index {index} is not earlier than the step")]
    ForwardReference { line: usize, index: usize },
    #[error("line {line}: {source}")]
    Consecution {
        line: usize,
        source: ParseError,
    },
    #[error("line {line}: formula outside the logic's language")]
    Language { line: usize },
}

/// Parse the [`render_trace`] format back into rule instances.
pub fn parse_trace(text: &str, logic: LogicId) -> Result<Vec<RuleInstance>, TraceParseError> {
    let mut out: Vec<RuleInstance> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let raw = raw.trim();
        if raw.is_empty() {
            continue;
        }
        let line = out.len();
        let (rule_str, rest) = raw
            .split_once(':')
            .ok_or(TraceParseError::MissingRule { line: lineno })?;
        let rule: RuleId = rule_str
            .trim()
            .parse()
            .map_err(|e| TraceParseError::BadRule(e, lineno))?;
        let (cons_str, from_str) = rest
            .rsplit_once(" FROM ")
            .ok_or(TraceParseError::MissingFrom { line: lineno })?;
        let conclusion = Consecution::parse(cons_str.trim(), logic).map_err(|e| match e {
            crate::formula::ConsecutionParseError::Syntax(s) => TraceParseError::Consecution {
                line: lineno,
                source: s,
            },
            crate::formula::ConsecutionParseError::Language(_) => {
                TraceParseError::Language { line: lineno }
            }
        })?;
        let mut premises = Vec::new();
        let from_str = from_str.trim();
        if from_str != "-" {
            for part in from_str.split(',') {
                let index: usize = part.trim().parse().map_err(|_| TraceParseError::BadIndex {
                    line: lineno,
                    index: part.to_string(),
                })?;
                if index >= line {
                    return Err(TraceParseError::ForwardReference { line: lineno, index });
                }
                premises.push(out[index].conclusion.clone());
            }
        }
        out.push(RuleInstance {
            rule,
            conclusion,
            premises,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cons(text: &str, logic: LogicId) -> Consecution {
        Consecution::parse(text, logic).unwrap()
    }

    #[test]
    fn one_step_identity_trace_checks() {
        let trace = vec![RuleInstance {
            rule: RuleId::Standard(1),
            conclusion: cons("p |- p", LogicId::Fundamental),
            premises: vec![],
        }];
        assert!(check_trace(&trace));
    }

    #[test]
    fn rule9_with_one_premise_fails() {
        let trace = vec![
            RuleInstance {
                rule: RuleId::Standard(1),
                conclusion: cons("p |- p", LogicId::Fundamental),
                premises: vec![],
            },
            RuleInstance {
                rule: RuleId::Standard(9),
                conclusion: cons("p |- p & p", LogicId::Fundamental),
                premises: vec![cons("p |- p", LogicId::Fundamental)],
            },
        ];
        assert!(!check_trace(&trace));
    }

    #[test]
    fn premises_must_precede_use() {
        let trace = vec![RuleInstance {
            rule: RuleId::Standard(8),
            conclusion: cons("p |- r", LogicId::Fundamental),
            premises: vec![
                cons("p |- q", LogicId::Fundamental),
                cons("q |- r", LogicId::Fundamental),
            ],
        }];
        assert!(!check_trace(&trace));
    }

    #[test]
    fn schema_samples() {
        let ok = |rule, c: &str, ps: &[&str]| RuleInstance {
            rule,
            conclusion: cons(c, LogicId::FundamentalModal),
            premises: ps.iter().map(|p| cons(p, LogicId::FundamentalModal)).collect(),
        };
        assert!(ok(RuleId::Standard(6), "p |- ~~p", &[]).matches_schema());
        assert!(!ok(RuleId::Standard(6), "~~p |- p", &[]).matches_schema());
        assert!(ok(RuleId::Dne, "~~p |- p", &[]).matches_schema());
        assert!(ok(RuleId::Standard(7), "p & ~p |- q", &[]).matches_schema());
        assert!(!ok(RuleId::Standard(7), "~p & p |- q", &[]).matches_schema());
        assert!(ok(RuleId::Standard(14), "[]p & []q |- [](p & q)", &[]).matches_schema());
        assert!(ok(RuleId::Standard(15), "<>(p | q) |- <>p | <>q", &[]).matches_schema());
        assert!(ok(RuleId::Standard(16), "<>~p |- ~[]p", &[]).matches_schema());
        assert!(ok(RuleId::Standard(12), "_|_ |- q", &[]).matches_schema());
        assert!(ok(RuleId::Standard(12), "q |- T", &[]).matches_schema());
        assert!(!ok(RuleId::Standard(12), "q |- p", &[]).matches_schema());
        assert!(ok(RuleId::Standard(19), "[]p |- []q", &["p |- q"]).matches_schema());
        assert!(
            ok(RuleId::PseudoComplement, "p |- ~q", &["p & q |- p & ~p"]).matches_schema()
        );
        assert!(ok(
            RuleId::CasesWithSide,
            "a & (p | q) |- c",
            &["a & p |- c", "a & q |- c"]
        )
        .matches_schema());
    }

    #[test]
    fn trace_round_trip() {
        let logic = LogicId::Fundamental;
        let trace = vec![
            RuleInstance {
                rule: RuleId::Standard(6),
                conclusion: cons("p |- ~~p", logic),
                premises: vec![],
            },
            RuleInstance {
                rule: RuleId::Standard(11),
                conclusion: cons("~~~p |- ~p", logic),
                premises: vec![cons("p |- ~~p", logic)],
            },
        ];
        let text = render_trace(&trace);
        assert!(text.lines().next().unwrap().starts_with("6: p |- ~~p FROM -"));
        let back = parse_trace(&text, logic).unwrap();
        assert_eq!(back, trace);
        assert!(check_trace(&back));
    }
}
