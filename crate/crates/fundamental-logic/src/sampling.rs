//! Seeded random generation of formulas, frames, lattices, and models for
//! the property suites.

use crate::formula::{Consecution, Formula, LogicId};
use crate::frames::search::{sound_frame_catalog, FrameClass};
use crate::frames::{FixpointAlgebra, ModalFrame, Model, StateSet};
use crate::lattice::{Lattice, LatticeAlgebra};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random formula over the given atoms, modal connectives included on request.
pub fn random_formula(
    rng: &mut impl Rng,
    max_depth: usize,
    atoms: &[&str],
    modal: bool,
) -> Formula {
    if max_depth == 0 || rng.gen_bool(0.3) {
        if modal && rng.gen_bool(0.1) {
            return if rng.gen_bool(0.5) {
                Formula::Bot
            } else {
                Formula::Top
            };
        }
        return Formula::atom(*atoms.choose(rng).expect("nonempty atom pool"));
    }
    let pick = if modal { rng.gen_range(0..5) } else { rng.gen_range(0..3) };
    match pick {
        0 => Formula::neg(random_formula(rng, max_depth - 1, atoms, modal)),
        1 => Formula::and(
            random_formula(rng, max_depth - 1, atoms, modal),
            random_formula(rng, max_depth - 1, atoms, modal),
        ),
        2 => Formula::or(
            random_formula(rng, max_depth - 1, atoms, modal),
            random_formula(rng, max_depth - 1, atoms, modal),
        ),
        3 => Formula::boxed(random_formula(rng, max_depth - 1, atoms, modal)),
        _ => Formula::dia(random_formula(rng, max_depth - 1, atoms, modal)),
    }
}

pub fn random_goal(
    rng: &mut impl Rng,
    logic: LogicId,
    atoms: &[&str],
    max_depth: usize,
) -> Consecution {
    let modal = logic.is_modal();
    Consecution::new(
        random_formula(rng, max_depth, atoms, modal),
        random_formula(rng, max_depth, atoms, modal),
        logic,
    )
    .expect("language respected by construction")
}

fn random_relation(rng: &mut impl Rng, n: usize, density: f64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if rng.gen_bool(density) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Random frame with empty accessibility relations; edge density varies
/// per frame.
pub fn random_relational_frame(rng: &mut impl Rng, n: usize) -> ModalFrame {
    let density = rng.gen_range(0.2..0.8);
    ModalFrame::relational(n, &random_relation(rng, n, density)).expect("valid size")
}

/// Random frame with all three relations populated.
pub fn random_modal_frame(rng: &mut impl Rng, n: usize) -> ModalFrame {
    let density = rng.gen_range(0.2..0.8);
    ModalFrame::with_default_names(
        n,
        &random_relation(rng, n, density),
        &random_relation(rng, n, density),
        &random_relation(rng, n, density),
    )
    .expect("valid size")
}

/// Random finite lattice, built as a closure system over a small base set:
/// random subsets plus the full set, closed under intersection, ordered by
/// inclusion. Meets are intersections and joins least covers, so the result
/// is a lattice by construction.
pub fn random_lattice(rng: &mut impl Rng, base: usize, seeds: usize) -> Lattice {
    let full: u32 = (1 << base) - 1;
    let mut family: Vec<u32> = vec![full];
    for _ in 0..seeds {
        family.push(rng.gen_range(0..=full));
    }
    loop {
        let mut grew = false;
        let snapshot = family.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let c = a & b;
                if !family.contains(&c) {
                    family.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    family.sort_unstable();
    family.dedup();
    let names: Vec<String> = (0..family.len()).map(|i| format!("e{i}")).collect();
    let mut leq = Vec::new();
    for (i, &a) in family.iter().enumerate() {
        for (j, &b) in family.iter().enumerate() {
            if a & !b == 0 {
                leq.push((i, j));
            }
        }
    }
    let n = family.len();
    LatticeAlgebra {
        elements: names,
        leq,
        neg: vec![0; n],
        box_table: None,
        dia: None,
    }
    .validate()
    .expect("closure systems are lattices")
}

/// Uniformly random unary table.
pub fn random_table(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(0..n)).collect()
}

/// Random monotone unary table, by rejection.
pub fn random_monotone_table(rng: &mut impl Rng, lat: &Lattice) -> Vec<usize> {
    let n = lat.len();
    loop {
        let t = random_table(rng, n);
        let monotone = (0..n)
            .all(|a| (0..n).all(|b| !lat.leq(a, b) || lat.leq(t[a], t[b])));
        if monotone {
            return t;
        }
    }
}

/// Random dually self-adjoint negation table: rejection sampling with a
/// guaranteed fallback (everything except bottom to bottom, bottom to top).
pub fn random_dsa_table(rng: &mut impl Rng, lat: &Lattice) -> Vec<usize> {
    let n = lat.len();
    let dsa = |t: &[usize]| {
        (0..n).all(|a| (0..n).all(|b| !lat.leq(a, t[b]) || lat.leq(b, t[a])))
    };
    for _ in 0..2_000 {
        let t = random_table(rng, n);
        if dsa(&t) {
            return t;
        }
    }
    let fallback: Vec<usize> = (0..n)
        .map(|a| if a == lat.bot() { lat.top() } else { lat.bot() })
        .collect();
    debug_assert!(dsa(&fallback));
    fallback
}

/// Attach a negation table (and optionally modal tables) to a lattice.
pub fn with_tables(
    lat: &Lattice,
    neg: Vec<usize>,
    box_table: Option<Vec<usize>>,
    dia: Option<Vec<usize>>,
) -> Lattice {
    let mut raw = lat.to_algebra();
    raw.neg = neg;
    raw.box_table = box_table;
    raw.dia = dia;
    raw.validate().expect("tables over the same carrier")
}

/// Random model from the cached catalog of the class (frames of 1 to 3
/// states), with every atom assigned a random fixpoint.
pub fn random_model_in_class(
    rng: &mut impl Rng,
    class: FrameClass,
    atoms: &[String],
) -> Model {
    loop {
        let n = rng.gen_range(1..=3);
        let catalog = sound_frame_catalog(class, n);
        if catalog.is_empty() {
            continue;
        }
        let algebra = &catalog[rng.gen_range(0..catalog.len())];
        return random_model_on(rng, algebra, atoms);
    }
}

/// Random fixpoint valuation over a fixed frame.
pub fn random_model_on(
    rng: &mut impl Rng,
    algebra: &FixpointAlgebra,
    atoms: &[String],
) -> Model {
    let fixpoints = algebra.fixpoints();
    let valuation: BTreeMap<String, StateSet> = atoms
        .iter()
        .map(|a| (a.clone(), fixpoints[rng.gen_range(0..fixpoints.len())]))
        .collect();
    Model::new(algebra.frame().clone(), valuation)
}

/// Check a proved goal against freshly sampled models of the logic's sound
/// class, through the recursive forcing clauses.
pub fn spot_check_soundness(
    goal: &Consecution,
    samples: usize,
    seed: u64,
) -> Result<(), String> {
    let class = crate::consequence::frame_class_for(goal.logic())
        .ok_or_else(|| format!("no frame class for {}", goal.logic()))?;
    let atoms: Vec<String> = goal.atoms().into_iter().collect();
    let mut rng = rng_from_seed(seed);
    for k in 0..samples {
        let model = random_model_in_class(&mut rng, class, &atoms);
        for x in 0..model.frame.num_states() {
            let lhs = model.forcing(x, goal.lhs()).map_err(|e| e.to_string())?;
            let rhs = model.forcing(x, goal.rhs()).map_err(|e| e.to_string())?;
            if lhs && !rhs {
                return Err(format!(
                    "sample {k}: state {x} forces the left side but not the right"
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_lattices_validate() {
        let mut rng = rng_from_seed(7);
        for _ in 0..50 {
            let lat = random_lattice(&mut rng, 3, 3);
            assert!(!lat.is_empty());
            // revalidation through the exchange form agrees
            assert_eq!(lat.to_algebra().validate().unwrap(), lat);
        }
    }

    #[test]
    fn dsa_tables_are_dsa() {
        let mut rng = rng_from_seed(11);
        for _ in 0..20 {
            let lat = random_lattice(&mut rng, 2, 2);
            let t = random_dsa_table(&mut rng, &lat);
            let n = lat.len();
            for a in 0..n {
                for b in 0..n {
                    assert!(!lat.leq(a, t[b]) || lat.leq(b, t[a]));
                }
            }
        }
    }

    #[test]
    fn sampled_models_validate() {
        let mut rng = rng_from_seed(3);
        let atoms = vec!["p".to_string(), "q".to_string()];
        for class in [
            FrameClass::FundamentalRelational,
            FrameClass::OrthoRelational,
            FrameClass::UnifiedModal,
        ] {
            for _ in 0..10 {
                let model = random_model_in_class(&mut rng, class, &atoms);
                model.validate().unwrap();
            }
        }
    }

    #[test]
    fn spot_check_accepts_axioms() {
        let goal = Consecution::parse("p & q |- p", LogicId::Fundamental).unwrap();
        spot_check_soundness(&goal, 25, 0).unwrap();
        let goal = Consecution::parse("<>~p |- ~[]p", LogicId::FundamentalModal).unwrap();
        spot_check_soundness(&goal, 25, 0).unwrap();
    }
}
