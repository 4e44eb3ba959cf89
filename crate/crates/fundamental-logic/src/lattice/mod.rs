//! Finite bounded lattices with negation and modal operation tables, and
//! exhaustive checkers for their algebraic properties and the four
//! negation-modality interaction axioms.

mod fixtures;

pub use fixtures::{fixtures, Fixture};

use std::fmt;

/// Maximum number of lattice elements (bitmask representation).
pub const MAX_ELEMENTS: usize = 32;

/// Raw lattice description, as read from or written to JSON.
///
/// `leq` lists generating pairs `i <= j`; the reflexive-transitive closure
/// is taken on validation. Unary operations are index arrays.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct LatticeAlgebra {
    pub elements: Vec<String>,
    pub leq: Vec<(usize, usize)>,
    pub neg: Vec<usize>,
    #[serde(rename = "box", default, skip_serializing_if = "Option::is_none")]
    pub box_table: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dia: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LatticeDefect {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("at most {MAX_ELEMENTS} elements are supported, got {0}")]
    TooLarge(usize),
    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("antisymmetry fails: `{0}` and `{1}` are below each other")]
    NotAntisymmetric(String, String),
    #[error("`{0}` and `{1}` have no greatest lower bound")]
    NoMeet(String, String),
    #[error("`{0}` and `{1}` have no least upper bound")]
    NoJoin(String, String),
    #[error("the {table} table has {got} entries for {want} elements")]
    BadTableLength {
        table: &'static str,
        got: usize,
        want: usize,
    },
    #[error("modal property `{0}` requires box and dia tables")]
    MissingModalTables(String),
}

impl LatticeAlgebra {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("lattice serialization cannot fail")
    }

    /// Check the partial order, the existence of all binary meets and joins
    /// and of the bounds, and the operation tables; cache everything.
    pub fn validate(&self) -> Result<Lattice, LatticeDefect> {
        let n = self.elements.len();
        if n == 0 {
            return Err(LatticeDefect::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(LatticeDefect::TooLarge(n));
        }
        let check_table = |table: &[usize], name: &'static str| {
            if table.len() != n {
                return Err(LatticeDefect::BadTableLength {
                    table: name,
                    got: table.len(),
                    want: n,
                });
            }
            if let Some(&bad) = table.iter().find(|&&i| i >= n) {
                return Err(LatticeDefect::IndexOutOfRange(bad));
            }
            Ok(())
        };
        check_table(&self.neg, "neg")?;
        if let Some(t) = &self.box_table {
            check_table(t, "box")?;
        }
        if let Some(t) = &self.dia {
            check_table(t, "dia")?;
        }

        // reflexive-transitive closure of the given pairs
        let mut up = vec![0u32; n];
        for i in 0..n {
            up[i] |= 1 << i;
        }
        for &(a, b) in &self.leq {
            if a >= n {
                return Err(LatticeDefect::IndexOutOfRange(a));
            }
            if b >= n {
                return Err(LatticeDefect::IndexOutOfRange(b));
            }
            up[a] |= 1 << b;
        }
        loop {
            let mut changed = false;
            for a in 0..n {
                let mut acc = up[a];
                for b in 0..n {
                    if up[a] >> b & 1 == 1 {
                        acc |= up[b];
                    }
                }
                if acc != up[a] {
                    up[a] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && up[a] >> b & 1 == 1 && up[b] >> a & 1 == 1 {
                    return Err(LatticeDefect::NotAntisymmetric(
                        self.elements[a].clone(),
                        self.elements[b].clone(),
                    ));
                }
            }
        }
        let mut down = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if up[b] >> a & 1 == 1 {
                    down[a] |= 1 << b;
                }
            }
        }

        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                let lower = down[a] & down[b];
                let glb = (0..n).find(|&g| lower >> g & 1 == 1 && lower & !down[g] == 0);
                match glb {
                    Some(g) => meet[a * n + b] = g,
                    None => {
                        return Err(LatticeDefect::NoMeet(
                            self.elements[a].clone(),
                            self.elements[b].clone(),
                        ))
                    }
                }
                let upper = up[a] & up[b];
                let lub = (0..n).find(|&g| upper >> g & 1 == 1 && upper & !up[g] == 0);
                match lub {
                    Some(g) => join[a * n + b] = g,
                    None => {
                        return Err(LatticeDefect::NoJoin(
                            self.elements[a].clone(),
                            self.elements[b].clone(),
                        ))
                    }
                }
            }
        }
        // with all binary meets and joins on a finite carrier, the bounds
        // are the iterated meet and join
        let bot = (0..n).fold(0, |acc, b| meet[acc * n + b]);
        let top = (0..n).fold(0, |acc, b| join[acc * n + b]);

        Ok(Lattice {
            names: self.elements.clone(),
            up,
            down,
            meet,
            join,
            bot,
            top,
            neg: self.neg.clone(),
            box_table: self.box_table.clone(),
            dia_table: self.dia.clone(),
        })
    }
}

/// A validated finite bounded lattice with cached meet and join tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    names: Vec<String>,
    up: Vec<u32>,
    down: Vec<u32>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bot: usize,
    top: usize,
    neg: Vec<usize>,
    box_table: Option<Vec<usize>>,
    dia_table: Option<Vec<usize>>,
}

impl Lattice {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a] >> b & 1 == 1
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn box_table(&self) -> Option<&[usize]> {
        self.box_table.as_deref()
    }

    pub fn dia_table(&self) -> Option<&[usize]> {
        self.dia_table.as_deref()
    }

    pub fn box_of(&self, a: usize) -> Option<usize> {
        self.box_table.as_ref().map(|t| t[a])
    }

    pub fn dia_of(&self, a: usize) -> Option<usize> {
        self.dia_table.as_ref().map(|t| t[a])
    }

    /// Meet of every element in the mask (meet over the empty mask is top).
    pub fn meet_all(&self, mask: u32) -> usize {
        let mut acc = self.top;
        for a in 0..self.len() {
            if mask >> a & 1 == 1 {
                acc = self.meet(acc, a);
            }
        }
        acc
    }

    /// Join of every element in the mask (join over the empty mask is bottom).
    pub fn join_all(&self, mask: u32) -> usize {
        let mut acc = self.bot;
        for a in 0..self.len() {
            if mask >> a & 1 == 1 {
                acc = self.join(acc, a);
            }
        }
        acc
    }

    /// Back to the raw exchange form (full `leq` relation).
    pub fn to_algebra(&self) -> LatticeAlgebra {
        let n = self.len();
        let mut leq = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.leq(a, b) {
                    leq.push((a, b));
                }
            }
        }
        LatticeAlgebra {
            elements: self.names.clone(),
            leq,
            neg: self.neg.clone(),
            box_table: self.box_table.clone(),
            dia: self.dia_table.clone(),
        }
    }

    fn require_modal(&self, what: LatticeProperty) -> Result<(), LatticeDefect> {
        if self.box_table.is_none() || self.dia_table.is_none() {
            return Err(LatticeDefect::MissingModalTables(what.to_string()));
        }
        Ok(())
    }

    /// Exhaustive check of an algebraic property of the operation tables.
    pub fn check_property(&self, prop: LatticeProperty) -> Result<PropertyReport, LatticeDefect> {
        use LatticeProperty::*;
        let witness: Option<Vec<usize>> = match prop {
            Antitone => self.first_pair(|a, b| !(self.leq(a, b) && !self.leq(self.neg(b), self.neg(a)))),
            NegTopIsBot => {
                if self.neg(self.top) == self.bot {
                    None
                } else {
                    Some(vec![self.top])
                }
            }
            DoubleInflationary => self.first_one(|a| self.leq(a, self.neg(self.neg(a)))),
            DualSelfAdjoint => {
                self.first_pair(|a, b| !(self.leq(a, self.neg(b)) && !self.leq(b, self.neg(a))))
            }
            Semicomplementation => self.first_one(|a| self.meet(a, self.neg(a)) == self.bot),
            WeakPseudocomplementation => {
                let semi = self.check_property(Semicomplementation)?;
                if !semi.holds {
                    semi.witness
                } else {
                    self.check_property(DualSelfAdjoint)?.witness
                }
            }
            Pseudocomplementation => {
                let dominated = self.first_pair(|a, b| {
                    !(self.meet(a, b) == self.bot && !self.leq(b, self.neg(a)))
                });
                if dominated.is_some() {
                    dominated
                } else {
                    self.first_one(|a| self.meet(a, self.neg(a)) == self.bot)
                }
            }
            Involutive => self.first_one(|a| self.neg(self.neg(a)) == a),
            MonotoneBox => {
                self.require_modal(prop)?;
                let t = self.box_table.as_ref().unwrap();
                self.first_pair(|a, b| !(self.leq(a, b) && !self.leq(t[a], t[b])))
            }
            MonotoneDia => {
                self.require_modal(prop)?;
                let t = self.dia_table.as_ref().unwrap();
                self.first_pair(|a, b| !(self.leq(a, b) && !self.leq(t[a], t[b])))
            }
            Multiplicative | CompletelyMultiplicative => {
                // on a finite lattice, preservation of arbitrary meets
                // reduces to the empty meet (top) plus binary meets
                self.require_modal(prop)?;
                let t = self.box_table.as_ref().unwrap();
                if t[self.top] != self.top {
                    Some(vec![self.top])
                } else {
                    self.first_pair(|a, b| t[self.meet(a, b)] == self.meet(t[a], t[b]))
                }
            }
            Additive | CompletelyAdditive => {
                self.require_modal(prop)?;
                let t = self.dia_table.as_ref().unwrap();
                if t[self.bot] != self.bot {
                    Some(vec![self.bot])
                } else {
                    self.first_pair(|a, b| t[self.join(a, b)] == self.join(t[a], t[b]))
                }
            }
        };
        Ok(PropertyReport {
            id: prop.to_string(),
            holds: witness.is_none(),
            witness,
            detail: None,
        })
    }

    fn first_one(&self, ok: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
        (0..self.len()).find(|&a| !ok(a)).map(|a| vec![a])
    }

    fn first_pair(&self, ok: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
        for a in 0..self.len() {
            for b in 0..self.len() {
                if !ok(a, b) {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }

    /// Exhaustive check of one of the interaction axioms; the failure detail
    /// carries the evaluated witness chain.
    pub fn check_axiom(&self, ax: InteractionAxiom) -> Result<PropertyReport, LatticeDefect> {
        if self.box_table.is_none() || self.dia_table.is_none() {
            return Err(LatticeDefect::MissingModalTables(ax.to_string()));
        }
        let bx = |a: usize| self.box_table.as_ref().unwrap()[a];
        let dx = |a: usize| self.dia_table.as_ref().unwrap()[a];
        let ng = |a: usize| self.neg(a);
        let nm = |a: usize| self.name(a);
        for e in 0..self.len() {
            let (holds, chain) = match ax {
                InteractionAxiom::DiamondNeg => {
                    let (l, r) = (dx(ng(e)), ng(bx(e)));
                    (
                        self.leq(l, r),
                        format!(
                            "◇¬{} = ◇{} = {} ≰ {} = ¬{} = ¬□{}",
                            nm(e), nm(ng(e)), nm(l), nm(r), nm(bx(e)), nm(e)
                        ),
                    )
                }
                InteractionAxiom::BoxNeg => {
                    let (l, r) = (bx(ng(e)), ng(dx(e)));
                    (
                        self.leq(l, r),
                        format!(
                            "□¬{} = □{} = {} ≰ {} = ¬{} = ¬◇{}",
                            nm(e), nm(ng(e)), nm(l), nm(r), nm(dx(e)), nm(e)
                        ),
                    )
                }
                InteractionAxiom::NegDiamond => {
                    let (l, r) = (ng(dx(e)), bx(ng(e)));
                    (
                        self.leq(l, r),
                        format!(
                            "¬◇{} = ¬{} = {} ≰ {} = □{} = □¬{}",
                            nm(e), nm(dx(e)), nm(l), nm(r), nm(ng(e)), nm(e)
                        ),
                    )
                }
                InteractionAxiom::NegBox => {
                    let (l, r) = (ng(bx(e)), dx(ng(e)));
                    (
                        self.leq(l, r),
                        format!(
                            "¬□{} = ¬{} = {} ≰ {} = ◇{} = ◇¬{}",
                            nm(e), nm(bx(e)), nm(l), nm(r), nm(ng(e)), nm(e)
                        ),
                    )
                }
                InteractionAxiom::DiaDef => {
                    let (l, r) = (dx(e), ng(bx(ng(e))));
                    (
                        l == r,
                        format!("◇{} = {} ≠ {} = ¬□¬{}", nm(e), nm(l), nm(r), nm(e)),
                    )
                }
                InteractionAxiom::BoxDef => {
                    let (l, r) = (bx(e), ng(dx(ng(e))));
                    (
                        l == r,
                        format!("□{} = {} ≠ {} = ¬◇¬{}", nm(e), nm(l), nm(r), nm(e)),
                    )
                }
            };
            if !holds {
                return Ok(PropertyReport {
                    id: ax.to_string(),
                    holds: false,
                    witness: Some(vec![e]),
                    detail: Some(chain),
                });
            }
        }
        Ok(PropertyReport {
            id: ax.to_string(),
            holds: true,
            witness: None,
            detail: None,
        })
    }
}

/// Algebraic properties checkable on a lattice's operation tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeProperty {
    Antitone,
    NegTopIsBot,
    DoubleInflationary,
    DualSelfAdjoint,
    Semicomplementation,
    WeakPseudocomplementation,
    Pseudocomplementation,
    Involutive,
    MonotoneBox,
    MonotoneDia,
    Multiplicative,
    Additive,
    CompletelyMultiplicative,
    CompletelyAdditive,
}

impl fmt::Display for LatticeProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LatticeProperty::Antitone => "antitone",
            LatticeProperty::NegTopIsBot => "neg_top_is_bot",
            LatticeProperty::DoubleInflationary => "double_inflationary",
            LatticeProperty::DualSelfAdjoint => "dual_self_adjoint",
            LatticeProperty::Semicomplementation => "semicomplementation",
            LatticeProperty::WeakPseudocomplementation => "weak_pseudocomplementation",
            LatticeProperty::Pseudocomplementation => "pseudocomplementation",
            LatticeProperty::Involutive => "involutive",
            LatticeProperty::MonotoneBox => "monotone_box",
            LatticeProperty::MonotoneDia => "monotone_dia",
            LatticeProperty::Multiplicative => "multiplicative",
            LatticeProperty::Additive => "additive",
            LatticeProperty::CompletelyMultiplicative => "completely_multiplicative",
            LatticeProperty::CompletelyAdditive => "completely_additive",
        };
        f.write_str(s)
    }
}

/// The four negation-modality inequalities plus the two duality equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InteractionAxiom {
    /// `◇¬a ≤ ¬□a`
    DiamondNeg,
    /// `□¬a ≤ ¬◇a`
    BoxNeg,
    /// `¬◇a ≤ □¬a`
    NegDiamond,
    /// `¬□a ≤ ◇¬a`
    NegBox,
    /// `◇a = ¬□¬a`
    DiaDef,
    /// `□a = ¬◇¬a`
    BoxDef,
}

impl InteractionAxiom {
    pub const CORE: [InteractionAxiom; 4] = [
        InteractionAxiom::DiamondNeg,
        InteractionAxiom::BoxNeg,
        InteractionAxiom::NegDiamond,
        InteractionAxiom::NegBox,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            InteractionAxiom::DiamondNeg => "(◇¬)",
            InteractionAxiom::BoxNeg => "(□¬)",
            InteractionAxiom::NegDiamond => "(¬◇)",
            InteractionAxiom::NegBox => "(¬□)",
            InteractionAxiom::DiaDef => "(◇ def)",
            InteractionAxiom::BoxDef => "(□ def)",
        }
    }
}

impl fmt::Display for InteractionAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InteractionAxiom::DiamondNeg => "DiamondNeg",
            InteractionAxiom::BoxNeg => "BoxNeg",
            InteractionAxiom::NegDiamond => "NegDiamond",
            InteractionAxiom::NegBox => "NegBox",
            InteractionAxiom::DiaDef => "DiaDef",
            InteractionAxiom::BoxDef => "BoxDef",
        };
        f.write_str(s)
    }
}

/// Outcome of a property or axiom check; the witness is present exactly
/// when the check fails, and re-evaluating it reproduces the failure.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PropertyReport {
    pub id: String,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
    /// Witness chain for axiom failures, e.g. `◇¬b = ◇a = 1 ≰ a = ¬b = ¬□b`.
    pub detail: Option<String>,
}

/// The greatest element whose meet with `a` is bottom, if one exists.
/// Derives the Heyting/Boolean negation tables for the fixture algebras.
pub fn derive_pseudocomplement(lat: &Lattice) -> Option<Vec<usize>> {
    let n = lat.len();
    let mut neg = Vec::with_capacity(n);
    for a in 0..n {
        let candidates: Vec<usize> = (0..n).filter(|&b| lat.meet(a, b) == lat.bot()).collect();
        let best = candidates
            .iter()
            .copied()
            .find(|&g| candidates.iter().all(|&c| lat.leq(c, g)))?;
        neg.push(best);
    }
    Some(neg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> LatticeAlgebra {
        LatticeAlgebra {
            elements: vec!["0".into(), "1".into()],
            leq: vec![(0, 1)],
            neg: vec![1, 0],
            box_table: Some(vec![0, 1]),
            dia: Some(vec![0, 1]),
        }
    }

    #[test]
    fn validate_examples() {
        assert!(chain2().validate().is_ok());
        // the four-element diamond with two incomparable middles
        let m2 = LatticeAlgebra {
            elements: vec!["0".into(), "a".into(), "b".into(), "1".into()],
            leq: vec![(0, 1), (0, 2), (1, 3), (2, 3)],
            neg: vec![3, 0, 0, 0],
            box_table: None,
            dia: None,
        };
        assert!(m2.validate().is_ok());
        // three elements, two maximal: no least upper bound
        let bad = LatticeAlgebra {
            elements: vec!["0".into(), "a".into(), "b".into()],
            leq: vec![(0, 1), (0, 2)],
            neg: vec![0, 0, 0],
            box_table: None,
            dia: None,
        };
        match bad.validate() {
            Err(LatticeDefect::NoJoin(x, y)) => {
                assert_eq!((x.as_str(), y.as_str()), ("a", "b"));
            }
            other => panic!("expected NoJoin, got {other:?}"),
        }
    }

    #[test]
    fn cycle_is_rejected() {
        let bad = LatticeAlgebra {
            elements: vec!["x".into(), "y".into()],
            leq: vec![(0, 1), (1, 0)],
            neg: vec![0, 1],
            box_table: None,
            dia: None,
        };
        assert!(matches!(
            bad.validate(),
            Err(LatticeDefect::NotAntisymmetric(..))
        ));
    }

    #[test]
    fn bounds_and_tables() {
        let lat = chain2().validate().unwrap();
        assert_eq!(lat.bot(), 0);
        assert_eq!(lat.top(), 1);
        assert_eq!(lat.meet(0, 1), 0);
        assert_eq!(lat.join(0, 1), 1);
        assert_eq!(lat.meet_all(0), lat.top());
        assert_eq!(lat.join_all(0), lat.bot());
    }

    #[test]
    fn property_checks_on_boolean_pair() {
        let lat = chain2().validate().unwrap();
        for prop in [
            LatticeProperty::Antitone,
            LatticeProperty::NegTopIsBot,
            LatticeProperty::DualSelfAdjoint,
            LatticeProperty::Semicomplementation,
            LatticeProperty::WeakPseudocomplementation,
            LatticeProperty::Pseudocomplementation,
            LatticeProperty::Involutive,
            LatticeProperty::Multiplicative,
            LatticeProperty::Additive,
        ] {
            assert!(lat.check_property(prop).unwrap().holds, "{prop}");
        }
    }

    #[test]
    fn modal_props_require_tables() {
        let mut raw = chain2();
        raw.box_table = None;
        raw.dia = None;
        let lat = raw.validate().unwrap();
        assert!(lat.check_property(LatticeProperty::Multiplicative).is_err());
        assert!(lat.check_axiom(InteractionAxiom::DiamondNeg).is_err());
        assert!(lat.check_property(LatticeProperty::Antitone).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let raw = chain2();
        let text = raw.to_json();
        let back = LatticeAlgebra::from_json(&text).unwrap();
        assert_eq!(back.validate().unwrap(), raw.validate().unwrap());
    }
}

#[cfg(test)]
mod law_tests {
    //! Random-structure checks of the algebraic lemmas relating the
    //! negation properties and the interaction axioms.

    use super::*;
    use crate::sampling::{
        random_dsa_table, random_lattice, random_monotone_table, random_table, rng_from_seed,
        with_tables,
    };

    /// Dual self-adjointness is exactly antitone plus double inflationary.
    #[test]
    fn dsa_iff_antitone_and_double_inflationary() {
        let mut rng = rng_from_seed(5);
        let mut tried = 0;
        for _ in 0..400 {
            let lat0 = random_lattice(&mut rng, 3, 3);
            if lat0.len() > 6 {
                continue;
            }
            let neg = random_table(&mut rng, lat0.len());
            let lat = with_tables(&lat0, neg, None, None);
            let dsa = lat.check_property(LatticeProperty::DualSelfAdjoint).unwrap().holds;
            let anti = lat.check_property(LatticeProperty::Antitone).unwrap().holds;
            let infl = lat
                .check_property(LatticeProperty::DoubleInflationary)
                .unwrap()
                .holds;
            assert_eq!(dsa, anti && infl, "{lat:?}");
            tried += 1;
        }
        assert!(tried >= 100, "only {tried} lattices exercised");
    }

    /// Weak pseudocomplementation decomposes into semicomplementation plus
    /// dual self-adjointness.
    #[test]
    fn weak_pseudo_decomposition() {
        let mut rng = rng_from_seed(6);
        for _ in 0..200 {
            let lat0 = random_lattice(&mut rng, 3, 3);
            if lat0.len() > 6 {
                continue;
            }
            let neg = random_table(&mut rng, lat0.len());
            let lat = with_tables(&lat0, neg, None, None);
            let wp = lat
                .check_property(LatticeProperty::WeakPseudocomplementation)
                .unwrap()
                .holds;
            let semi = lat
                .check_property(LatticeProperty::Semicomplementation)
                .unwrap()
                .holds;
            let dsa = lat.check_property(LatticeProperty::DualSelfAdjoint).unwrap().holds;
            assert_eq!(wp, semi && dsa);
        }
    }

    /// With a dually self-adjoint negation and monotone modal operations,
    /// the dia-neg and box-neg axioms stand or fall together.
    #[test]
    fn dsam_equivalence() {
        let mut rng = rng_from_seed(7);
        let mut tried = 0;
        let mut nontrivial = 0;
        for _ in 0..400 {
            let lat0 = random_lattice(&mut rng, 3, 3);
            if lat0.len() > 6 {
                continue;
            }
            let neg = random_dsa_table(&mut rng, &lat0);
            let bx = random_monotone_table(&mut rng, &lat0);
            let dx = random_monotone_table(&mut rng, &lat0);
            let lat = with_tables(&lat0, neg, Some(bx), Some(dx));
            let dn = lat.check_axiom(InteractionAxiom::DiamondNeg).unwrap().holds;
            let bn = lat.check_axiom(InteractionAxiom::BoxNeg).unwrap().holds;
            assert_eq!(dn, bn, "{lat:?}");
            tried += 1;
            if dn {
                nontrivial += 1;
            }
        }
        assert!(tried >= 100);
        assert!(nontrivial > 0, "no instance where the axioms hold");
    }

    /// Self-dual carriers with an order-reversing involution.
    fn involutive_carriers() -> Vec<Lattice> {
        let mut out = Vec::new();
        // chains of length 2..=5 with the reversal negation
        for n in 2..=5usize {
            let elements: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
            let leq: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            let neg: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
            out.push(
                LatticeAlgebra {
                    elements,
                    leq,
                    neg,
                    box_table: None,
                    dia: None,
                }
                .validate()
                .unwrap(),
            );
        }
        // the diamond with the complement swapping the middles
        out.push(
            LatticeAlgebra {
                elements: vec!["0".into(), "a".into(), "b".into(), "1".into()],
                leq: vec![(0, 1), (0, 2), (1, 3), (2, 3)],
                neg: vec![3, 2, 1, 0],
                box_table: None,
                dia: None,
            }
            .validate()
            .unwrap(),
        );
        out
    }

    /// With an antitone involution and monotone modal operations: the two
    /// downward axioms are equivalent, the two upward axioms are
    /// equivalent, and the duality equations hold exactly when all four
    /// axioms do.
    #[test]
    fn involution_equivalences() {
        let mut rng = rng_from_seed(8);
        let mut all_four = 0;
        for lat0 in involutive_carriers() {
            assert!(lat0.check_property(LatticeProperty::Involutive).unwrap().holds);
            assert!(lat0.check_property(LatticeProperty::Antitone).unwrap().holds);
            for _ in 0..60 {
                let bx = random_monotone_table(&mut rng, &lat0);
                let dx = random_monotone_table(&mut rng, &lat0);
                let neg: Vec<usize> = (0..lat0.len()).map(|a| lat0.neg(a)).collect();
                let lat = with_tables(&lat0, neg, Some(bx), Some(dx));
                let ax = |a| lat.check_axiom(a).unwrap().holds;
                let dn = ax(InteractionAxiom::DiamondNeg);
                let bn = ax(InteractionAxiom::BoxNeg);
                let nd = ax(InteractionAxiom::NegDiamond);
                let nb = ax(InteractionAxiom::NegBox);
                let dd = ax(InteractionAxiom::DiaDef);
                let bd = ax(InteractionAxiom::BoxDef);
                assert_eq!(dn, bn);
                assert_eq!(nd, nb);
                assert_eq!(dd, bd);
                assert_eq!(dd, dn && bn && nd && nb);
                if dd {
                    all_four += 1;
                }
            }
        }
        assert!(all_four > 0, "no dual pair sampled");
    }
}
