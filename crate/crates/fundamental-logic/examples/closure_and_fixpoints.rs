//! The closure operator of a frame, its fixpoint lattice, and the
//! negation operation, computed exactly on a small example.
//!
//! ```bash
//! cargo run --example closure_and_fixpoints
//! ```

use fundamental_logic::frames::{ModalFrame, StateSet};

fn main() {
    // two states: 0 and 1 are both open to themselves, 1 is open to 0
    let frame = ModalFrame::relational(2, &[(0, 0), (1, 1), (1, 0)]).unwrap();

    println!("closures of every subset:");
    for bits in 0u64..4 {
        let a = StateSet(bits);
        println!("  c({a}) = {}", frame.closure(a));
    }

    let algebra = frame.fixpoints().unwrap();
    println!();
    println!("fixpoints (the propositions of the frame):");
    for &a in algebra.fixpoints() {
        println!("  {a}   neg = {}", frame.neg_op(a));
    }
    println!("bottom (closure of the empty set): {}", frame.bottom());

    // meets are intersections, joins are closures of unions
    let fixpoints = algebra.fixpoints();
    println!();
    println!("join table:");
    for &a in fixpoints {
        for &b in fixpoints {
            println!("  {a} v {b} = {}", frame.join(a, b));
        }
    }

    // on this frame the proposition {1} is not touched by double negation
    // pre-composition: neg(neg({1})) = {0,1}, strictly above {1}
    let one = StateSet(0b10);
    let nn = frame.neg_op(frame.neg_op(one));
    println!();
    println!("~~{one} = {nn} (double negation can strictly grow a proposition)");
}
