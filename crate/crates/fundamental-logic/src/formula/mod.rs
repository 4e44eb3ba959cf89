//! Formula AST, concrete syntax, and the syntactic translations.
//!
//! The propositional language has atoms, `~`, `&`, `|`; the modal language
//! adds `[]`, `<>` and the constants `_|_` (falsum) and `T` (verum).
//! Concrete syntax is ASCII; see [`parse`] for the grammar.

mod parse;

pub use parse::{parse, parse_consecution_text, ParseError};

use std::collections::BTreeSet;
use std::fmt;

/// A formula of the propositional or modal language.
///
/// `Bot`, `Top`, `Box`, and `Dia` belong to the modal language only; the
/// plain propositional language is generated from atoms by `Neg`, `And`,
/// and `Or`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Bot,
    Top,
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Box(Box<Formula>),
    Dia(Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    pub fn neg(f: Formula) -> Self {
        Formula::Neg(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn boxed(f: Formula) -> Self {
        Formula::Box(Box::new(f))
    }

    pub fn dia(f: Formula) -> Self {
        Formula::Dia(Box::new(f))
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Bot | Formula::Top => 1,
            Formula::Neg(f) | Formula::Box(f) | Formula::Dia(f) => 1 + f.size(),
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// The atom names occurring in the formula, in lexicographic order.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(p) => {
                out.insert(p.clone());
            }
            Formula::Bot | Formula::Top => {}
            Formula::Neg(f) | Formula::Box(f) | Formula::Dia(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// All subtrees of the formula, including the formula itself.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if !out.insert(self.clone()) {
            return;
        }
        match self {
            Formula::Atom(_) | Formula::Bot | Formula::Top => {}
            Formula::Neg(f) | Formula::Box(f) | Formula::Dia(f) => f.collect_subformulas(out),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_subformulas(out);
                b.collect_subformulas(out);
            }
        }
    }

    /// True if the formula lies in the plain propositional language
    /// (no `[]`, `<>`, `_|_`, `T`).
    pub fn is_propositional(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Bot | Formula::Top => false,
            Formula::Box(_) | Formula::Dia(_) => false,
            Formula::Neg(f) => f.is_propositional(),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.is_propositional() && b.is_propositional()
            }
        }
    }

    /// Minimal-parenthesis concrete syntax; `parse(f.render())` returns `f`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        self.render_prec(1, &mut s);
        s
    }

    fn prec(&self) -> u8 {
        match self {
            Formula::Or(..) => 1,
            Formula::And(..) => 2,
            Formula::Neg(_) | Formula::Box(_) | Formula::Dia(_) => 3,
            Formula::Atom(_) | Formula::Bot | Formula::Top => 4,
        }
    }

    fn render_prec(&self, min: u8, out: &mut String) {
        let me = self.prec();
        let parens = me < min;
        if parens {
            out.push('(');
        }
        match self {
            Formula::Atom(p) => out.push_str(p),
            Formula::Bot => out.push_str("_|_"),
            Formula::Top => out.push('T'),
            Formula::Neg(f) => {
                out.push('~');
                f.render_prec(3, out);
            }
            Formula::Box(f) => {
                out.push_str("[]");
                f.render_prec(3, out);
            }
            Formula::Dia(f) => {
                out.push_str("<>");
                f.render_prec(3, out);
            }
            Formula::And(a, b) => {
                a.render_prec(2, out);
                out.push_str(" & ");
                b.render_prec(3, out);
            }
            Formula::Or(a, b) => {
                a.render_prec(1, out);
                out.push_str(" | ");
                b.render_prec(2, out);
            }
        }
        if parens {
            out.push(')');
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Identifier of one of the five supported consequence relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LogicId {
    Fundamental,
    Ortho,
    IntuitionisticFragment,
    Classical,
    FundamentalModal,
}

impl LogicId {
    /// Only fundamental modal logic speaks the full modal language.
    pub fn is_modal(self) -> bool {
        matches!(self, LogicId::FundamentalModal)
    }

    /// Whether a formula is well-formed in this logic's language.
    pub fn admits(self, f: &Formula) -> bool {
        self.is_modal() || f.is_propositional()
    }

    pub fn name(self) -> &'static str {
        match self {
            LogicId::Fundamental => "fundamental",
            LogicId::Ortho => "ortho",
            LogicId::IntuitionisticFragment => "intuitionistic",
            LogicId::Classical => "classical",
            LogicId::FundamentalModal => "fundamental-modal",
        }
    }
}

impl fmt::Display for LogicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for LogicId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fundamental" | "f" => Ok(LogicId::Fundamental),
            "ortho" | "orthologic" | "o" => Ok(LogicId::Ortho),
            "intuitionistic" | "int" | "i" => Ok(LogicId::IntuitionisticFragment),
            "classical" | "c" => Ok(LogicId::Classical),
            "fundamental-modal" | "modal" | "fm" => Ok(LogicId::FundamentalModal),
            other => Err(format!(
                "unknown logic `{other}` (expected fundamental, ortho, intuitionistic, classical, or fundamental-modal)"
            )),
        }
    }
}

/// A formula is outside the language of the requested logic.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("formula `{formula}` is not in the language of {logic}: {reason}")]
pub struct LanguageError {
    pub logic: LogicId,
    pub formula: String,
    pub reason: &'static str,
}

/// The claim `lhs |- rhs` in a given logic.
///
/// Both formulas are checked against the logic's language on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Consecution {
    lhs: Formula,
    rhs: Formula,
    logic: LogicId,
}

impl Consecution {
    pub fn new(lhs: Formula, rhs: Formula, logic: LogicId) -> Result<Self, LanguageError> {
        for f in [&lhs, &rhs] {
            if !logic.admits(f) {
                return Err(LanguageError {
                    logic,
                    formula: f.render(),
                    reason: "modal connectives and constants require fundamental-modal",
                });
            }
        }
        Ok(Consecution { lhs, rhs, logic })
    }

    /// Parse `"<formula> |- <formula>"` and validate against the logic.
    pub fn parse(text: &str, logic: LogicId) -> Result<Self, ConsecutionParseError> {
        let (lhs, rhs) = parse_consecution_text(text)?;
        Ok(Consecution::new(lhs, rhs, logic)?)
    }

    pub fn lhs(&self) -> &Formula {
        &self.lhs
    }

    pub fn rhs(&self) -> &Formula {
        &self.rhs
    }

    pub fn logic(&self) -> LogicId {
        self.logic
    }

    /// Atoms of both sides, lexicographically ordered.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut a = self.lhs.atoms();
        a.extend(self.rhs.atoms());
        a
    }
}

impl fmt::Display for Consecution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |- {}", self.lhs.render(), self.rhs.render())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConsecutionParseError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Language(#[from] LanguageError),
}

/// The double-negation translation of the propositional language.
///
/// Clauses: atoms go to their double negation, negation and conjunction
/// commute with the translation, and disjunction is rewritten through
/// negated conjunction. Embeds orthologic fully and faithfully into
/// fundamental logic.
pub fn godel_gentzen(f: &Formula) -> Result<Formula, LanguageError> {
    if !f.is_propositional() {
        return Err(LanguageError {
            logic: LogicId::Fundamental,
            formula: f.render(),
            reason: "the translation is defined on the &, |, ~ language only",
        });
    }
    Ok(gg(f))
}

fn gg(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) => Formula::neg(Formula::neg(f.clone())),
        Formula::Neg(g) => Formula::neg(gg(g)),
        Formula::And(a, b) => Formula::and(gg(a), gg(b)),
        Formula::Or(a, b) => Formula::neg(Formula::and(Formula::neg(gg(a)), Formula::neg(gg(b)))),
        Formula::Bot | Formula::Top | Formula::Box(_) | Formula::Dia(_) => unreachable!(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum StateDescriptionError {
    #[error("the variable list is empty")]
    Empty,
    #[error("duplicate variable `{0}`")]
    Duplicate(String),
}

/// All `2^n` sign patterns over the given variables, as left-associated
/// conjunctions of literals.
///
/// Patterns are listed with the unnegated sign first, most significant
/// variable outermost: `[p, q]` yields `p&q, p&~q, ~p&q, ~p&~q`.
pub fn state_descriptions(vars: &[String]) -> Result<Vec<Formula>, StateDescriptionError> {
    if vars.is_empty() {
        return Err(StateDescriptionError::Empty);
    }
    let mut seen = BTreeSet::new();
    for v in vars {
        if !seen.insert(v) {
            return Err(StateDescriptionError::Duplicate(v.clone()));
        }
    }
    let n = vars.len();
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u64..(1 << n) {
        let mut lits = (0..n).map(|i| {
            let atom = Formula::atom(vars[i].clone());
            if mask >> (n - 1 - i) & 1 == 1 {
                Formula::neg(atom)
            } else {
                atom
            }
        });
        let first = lits.next().expect("nonempty");
        out.push(lits.fold(first, Formula::and));
    }
    Ok(out)
}

/// The premise strengthening that reduces classical consequence to
/// fundamental consequence: the disjunction over all state descriptions
/// `d` of the shared variables of `d & phi`.
///
/// Left-associated; variables in lexicographic order. Rejects the
/// (unreachable for well-formed propositional input) empty-variable case.
pub fn classical_premise(
    phi: &Formula,
    psi: &Formula,
) -> Result<Formula, ClassicalPremiseError> {
    for f in [phi, psi] {
        if !f.is_propositional() {
            return Err(ClassicalPremiseError::Language(LanguageError {
                logic: LogicId::Classical,
                formula: f.render(),
                reason: "classical reduction is defined on propositional formulas",
            }));
        }
    }
    let mut vars: Vec<String> = phi.atoms().into_iter().collect();
    for v in psi.atoms() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars.sort();
    let sds = state_descriptions(&vars)?;
    let mut disjuncts = sds.into_iter().map(|d| Formula::and(d, phi.clone()));
    let first = disjuncts.next().expect("nonempty");
    Ok(disjuncts.fold(first, Formula::or))
}

#[derive(Debug, thiserror::Error)]
pub enum ClassicalPremiseError {
    #[error(transparent)]
    Language(#[from] LanguageError),
    #[error(transparent)]
    StateDescriptions(#[from] StateDescriptionError),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::atom("p")
    }

    fn q() -> Formula {
        Formula::atom("q")
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse("~(p & q)").unwrap(),
            Formula::neg(Formula::and(p(), q()))
        );
        assert_eq!(
            parse("[]p | <>~q").unwrap(),
            Formula::or(Formula::boxed(p()), Formula::dia(Formula::neg(q())))
        );
        assert_eq!(
            parse("p & q | r").unwrap(),
            Formula::or(Formula::and(p(), q()), Formula::atom("r"))
        );
    }

    #[test]
    fn render_examples() {
        assert_eq!(Formula::neg(Formula::neg(p())).render(), "~~p");
        assert_eq!(
            Formula::and(Formula::or(p(), q()), Formula::atom("r")).render(),
            "(p | q) & r"
        );
        assert_eq!(Formula::boxed(Formula::Bot).render(), "[]_|_");
    }

    #[test]
    fn render_right_nesting_keeps_parens() {
        let f = Formula::and(p(), Formula::and(q(), Formula::atom("r")));
        assert_eq!(f.render(), "p & (q & r)");
        assert_eq!(parse(&f.render()).unwrap(), f);
        let g = Formula::or(Formula::or(p(), q()), Formula::atom("r"));
        assert_eq!(g.render(), "p | q | r");
        assert_eq!(parse(&g.render()).unwrap(), g);
    }

    #[test]
    fn subformula_examples() {
        assert_eq!(p().subformulas().len(), 1);
        let f = Formula::and(p(), Formula::neg(p()));
        let subs = f.subformulas();
        assert_eq!(subs.len(), 3);
        assert!(subs.contains(&p()));
        assert!(subs.contains(&Formula::neg(p())));
        assert!(subs.contains(&f));
        let g = Formula::boxed(Formula::dia(p()));
        let subs = g.subformulas();
        assert_eq!(subs.len(), 3);
        assert!(subs.contains(&Formula::dia(p())));
    }

    #[test]
    fn subformula_count_bounded_by_size() {
        let f = parse("(p | q) & ~(p | q) & (p | q)").unwrap();
        assert!(f.subformulas().len() <= f.size());
    }

    #[test]
    fn godel_gentzen_examples() {
        let nn = |f: Formula| Formula::neg(Formula::neg(f));
        assert_eq!(godel_gentzen(&p()).unwrap(), nn(p()));
        assert_eq!(
            godel_gentzen(&Formula::neg(p())).unwrap(),
            Formula::neg(nn(p()))
        );
        // p | q unfolds to ~(~~~p & ~~~q)
        let expected = parse("~(~~~p & ~~~q)").unwrap();
        assert_eq!(godel_gentzen(&Formula::or(p(), q())).unwrap(), expected);
        assert!(godel_gentzen(&Formula::boxed(p())).is_err());
        assert!(godel_gentzen(&Formula::Bot).is_err());
    }

    /// Translation output never contains a disjunction, and every atom sits
    /// directly under a double negation.
    #[test]
    fn godel_gentzen_shape_invariant() {
        // valid images: ~~atom, ~valid, valid & valid — no disjunctions,
        // no bare atoms
        fn check(f: &Formula) -> bool {
            if let Formula::Neg(g) = f {
                if let Formula::Neg(h) = &**g {
                    if matches!(&**h, Formula::Atom(_)) {
                        return true;
                    }
                }
            }
            match f {
                Formula::Neg(g) => check(g),
                Formula::And(a, b) => check(a) && check(b),
                _ => false,
            }
        }
        for text in ["p", "~p", "p & q", "p | q", "~(p | ~q) & (r | p)"] {
            let g = godel_gentzen(&parse(text).unwrap()).unwrap();
            assert!(check(&g), "bad shape: {g}");
        }
    }

    #[test]
    fn state_description_examples() {
        let vars = |vs: &[&str]| vs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let one = state_descriptions(&vars(&["p"])).unwrap();
        assert_eq!(one, vec![p(), Formula::neg(p())]);
        let two = state_descriptions(&vars(&["p", "q"])).unwrap();
        assert_eq!(
            two,
            vec![
                Formula::and(p(), q()),
                Formula::and(p(), Formula::neg(q())),
                Formula::and(Formula::neg(p()), q()),
                Formula::and(Formula::neg(p()), Formula::neg(q())),
            ]
        );
        let three = state_descriptions(&vars(&["p", "q", "r"])).unwrap();
        assert_eq!(three.len(), 8);
        assert!(state_descriptions(&[]).is_err());
        assert!(state_descriptions(&vars(&["p", "p"])).is_err());
    }

    #[test]
    fn state_descriptions_have_one_literal_per_variable() {
        let vars: Vec<String> = ["p", "q", "r"].iter().map(|s| s.to_string()).collect();
        for sd in state_descriptions(&vars).unwrap() {
            let rendered = sd.render();
            for v in &vars {
                let count = rendered.split(v.as_str()).count() - 1;
                assert_eq!(count, 1, "{rendered} mentions {v} {count} times");
            }
        }
    }

    #[test]
    fn classical_premise_examples() {
        // (p, p): two state descriptions over {p}
        let r = classical_premise(&p(), &p()).unwrap();
        assert_eq!(
            r,
            Formula::or(
                Formula::and(p(), p()),
                Formula::and(Formula::neg(p()), p())
            )
        );
        // (p, q): 4 disjuncts over sd({p, q})
        let r = classical_premise(&p(), &q()).unwrap();
        let mut count = 1;
        let mut cur = &r;
        while let Formula::Or(a, _) = cur {
            count += 1;
            cur = a;
        }
        assert_eq!(count, 4);
        // (p & q, q): also 4 disjuncts
        let r = classical_premise(&Formula::and(p(), q()), &q()).unwrap();
        let mut count = 1;
        let mut cur = &r;
        while let Formula::Or(a, _) = cur {
            count += 1;
            cur = a;
        }
        assert_eq!(count, 4);
    }

    #[test]
    fn consecution_language_enforcement() {
        assert!(Consecution::parse("p |- ~~p", LogicId::Fundamental).is_ok());
        assert!(Consecution::parse("[]p |- p", LogicId::Fundamental).is_err());
        assert!(Consecution::parse("[]p |- p", LogicId::FundamentalModal).is_ok());
        assert!(Consecution::parse("T |- p", LogicId::Ortho).is_err());
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn formula_strategy() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            6 => prop::sample::select(vec!["p", "q", "r", "s0", "long_name1"])
                .prop_map(Formula::atom),
            1 => Just(Formula::Bot),
            1 => Just(Formula::Top),
        ];
        leaf.prop_recursive(6, 96, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::neg),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                inner.clone().prop_map(Formula::boxed),
                inner.prop_map(Formula::dia),
            ]
        })
    }

    proptest! {
        #[test]
        fn parse_render_round_trip(f in formula_strategy()) {
            prop_assert_eq!(parse(&f.render()).unwrap(), f);
        }

        #[test]
        fn subformulas_bounded_by_size(f in formula_strategy()) {
            prop_assert!(f.subformulas().len() <= f.size());
        }
    }
}
