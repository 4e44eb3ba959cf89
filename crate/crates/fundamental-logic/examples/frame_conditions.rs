//! First-order frame conditions and their algebraic mirror images: a frame
//! is pseudo-reflexive exactly when propositions never overlap their own
//! negations, and pseudo-symmetric exactly when double negation inflates.
//!
//! ```bash
//! cargo run --example frame_conditions
//! ```

use fundamental_logic::frames::{FrameCondition, ModalFrame};
use fundamental_logic::sampling::{random_relational_frame, rng_from_seed};
use rand::Rng;

fn main() {
    let frame = ModalFrame::relational(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]).unwrap();
    println!("conditions on a reflexive chain-like frame:");
    for cond in FrameCondition::ALL {
        let report = frame.check_condition(cond);
        match report.witness {
            None => println!("  {cond}: holds"),
            Some(w) => println!("  {cond}: fails at {w:?}"),
        }
    }

    // the correspondence, checked on random frames
    let mut rng = rng_from_seed(1);
    let mut shown = 0;
    println!();
    println!("correspondence on random frames:");
    while shown < 6 {
        let n = rng.gen_range(1..=4);
        let frame = random_relational_frame(&mut rng, n);
        let algebra = frame.fixpoints().unwrap();
        let bottom = frame.bottom();
        let refl = frame.satisfies(FrameCondition::PseudoReflexive);
        let refl_alg = algebra
            .fixpoints()
            .iter()
            .all(|&a| a.inter(frame.neg_op(a)).is_subset(bottom));
        let sym = frame.satisfies(FrameCondition::PseudoSymmetric);
        let sym_alg = algebra
            .fixpoints()
            .iter()
            .all(|&a| a.is_subset(frame.neg_op(frame.neg_op(a))));
        assert_eq!(refl, refl_alg);
        assert_eq!(sym, sym_alg);
        println!(
            "  {n}-state frame: pseudo-reflexive = {refl:5}  <=>  A n ~A <= 0 = {refl_alg:5} | pseudo-symmetric = {sym:5}  <=>  A <= ~~A = {sym_alg}",
        );
        shown += 1;
    }
}
