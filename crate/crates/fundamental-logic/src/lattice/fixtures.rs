//! The five bundled lattice algebras that separate the interaction axioms,
//! together with their known check results.
//!
//! Two live on the four-element diamond with a weak negation, one on the
//! four-element Boolean algebra, one on the five-element Heyting algebra,
//! and one on the three-element chain. The Boolean and Heyting negations
//! are derived as (pseudo)complements rather than written out.

use super::{derive_pseudocomplement, InteractionAxiom, Lattice, LatticeAlgebra};

/// A named fixture with its expected axiom pattern.
pub struct Fixture {
    pub name: &'static str,
    pub lattice: Lattice,
    /// Expected verdict for each of the four core axioms, in
    /// [`InteractionAxiom::CORE`] order.
    pub expected_axioms: [(InteractionAxiom, bool); 4],
    /// Expected witness chains for the failing axioms.
    pub expected_chains: Vec<(InteractionAxiom, &'static str)>,
    /// Whether `[]x <= <>x` is asserted for this fixture.
    pub asserts_box_below_dia: bool,
}

fn diamond(neg: Vec<usize>, box_table: Vec<usize>, dia: Vec<usize>) -> Lattice {
    // element order matches the tables: 1, a, b, 0
    LatticeAlgebra {
        elements: vec!["1".into(), "a".into(), "b".into(), "0".into()],
        leq: vec![(3, 1), (3, 2), (1, 0), (2, 0)],
        neg,
        box_table: Some(box_table),
        dia: Some(dia),
    }
    .validate()
    .expect("fixture lattice is valid")
}

fn with_derived_neg(
    elements: Vec<String>,
    leq: Vec<(usize, usize)>,
    box_table: Vec<usize>,
    dia: Vec<usize>,
) -> Lattice {
    let n = elements.len();
    let skeleton = LatticeAlgebra {
        elements,
        leq,
        neg: vec![0; n],
        box_table: Some(box_table),
        dia: Some(dia),
    }
    .validate()
    .expect("fixture lattice is valid");
    let neg = derive_pseudocomplement(&skeleton).expect("fixture is pseudocomplemented");
    let mut raw = skeleton.to_algebra();
    raw.neg = neg;
    raw.validate().expect("fixture lattice is valid")
}

/// The five fixture algebras, in presentation order.
pub fn fixtures() -> Vec<Fixture> {
    use InteractionAxiom::*;
    vec![
        Fixture {
            name: "allind_a",
            // diamond with weak negation; box is the identity
            lattice: diamond(vec![3, 3, 1, 0], vec![0, 1, 2, 3], vec![0, 0, 2, 3]),
            expected_axioms: [(DiamondNeg, false), (BoxNeg, true), (NegDiamond, true), (NegBox, true)],
            expected_chains: vec![(DiamondNeg, "◇¬b = ◇a = 1 ≰ a = ¬b = ¬□b")],
            asserts_box_below_dia: false,
        },
        Fixture {
            name: "allind_b",
            lattice: diamond(vec![3, 3, 1, 0], vec![0, 0, 3, 3], vec![0, 0, 0, 3]),
            expected_axioms: [(DiamondNeg, true), (BoxNeg, false), (NegDiamond, true), (NegBox, true)],
            expected_chains: vec![(BoxNeg, "□¬b = □a = 1 ≰ 0 = ¬1 = ¬◇b")],
            asserts_box_below_dia: false,
        },
        Fixture {
            name: "negdiamond_bool4",
            // four-element Boolean algebra; negation derived as complement
            lattice: with_derived_neg(
                vec!["1".into(), "a".into(), "b".into(), "0".into()],
                vec![(3, 1), (3, 2), (1, 0), (2, 0)],
                vec![0, 3, 3, 3],
                vec![0, 0, 3, 3],
            ),
            expected_axioms: [(DiamondNeg, true), (BoxNeg, true), (NegDiamond, false), (NegBox, false)],
            expected_chains: vec![
                (NegDiamond, "¬◇b = ¬0 = 1 ≰ 0 = □a = □¬b"),
                (NegBox, "¬□a = ¬0 = 1 ≰ 0 = ◇b = ◇¬a"),
            ],
            asserts_box_below_dia: true,
        },
        Fixture {
            name: "negdiamond_heyting5",
            // five-element Heyting algebra: 0 < a,b < c < 1
            lattice: with_derived_neg(
                vec!["1".into(), "c".into(), "a".into(), "b".into(), "0".into()],
                vec![(4, 2), (4, 3), (2, 1), (3, 1), (1, 0)],
                vec![0, 0, 1, 4, 4],
                vec![0, 0, 0, 4, 4],
            ),
            expected_axioms: [(DiamondNeg, true), (BoxNeg, true), (NegDiamond, false), (NegBox, true)],
            expected_chains: vec![(NegDiamond, "¬◇b = ¬0 = 1 ≰ c = □a = □¬b")],
            asserts_box_below_dia: true,
        },
        Fixture {
            name: "negbox_chain3",
            // three-element Heyting chain 0 < a < 1
            lattice: with_derived_neg(
                vec!["1".into(), "a".into(), "0".into()],
                vec![(2, 1), (1, 0)],
                vec![0, 2, 2],
                vec![0, 0, 2],
            ),
            expected_axioms: [(DiamondNeg, true), (BoxNeg, true), (NegDiamond, true), (NegBox, false)],
            expected_chains: vec![(NegBox, "¬□a = ¬0 = 1 ≰ 0 = ◇0 = ◇¬a")],
            asserts_box_below_dia: true,
        },
    ]
}
