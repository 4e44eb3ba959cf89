//! Search for countermodels and re-verify them from first principles.
//!
//! ```bash
//! cargo run --example countermodels
//! ```

use fundamental_logic::formula::{Consecution, LogicId};
use fundamental_logic::frames::search::{countermodel_search, verify_countermodel, FrameClass};

fn main() {
    // double negation elimination fails in fundamental logic
    let goal = Consecution::parse("~~p |- p", LogicId::Fundamental).unwrap();
    let cm = countermodel_search(&goal, FrameClass::FundamentalRelational, 4)
        .expect("a countermodel exists within four states");
    println!("countermodel to {goal}:");
    println!("  states: {:?}", cm.model.frame.state_names());
    println!("  openness edges: {:?}", cm.model.frame.edges_open());
    for (atom, set) in &cm.model.valuation {
        println!("  V({atom}) = {set}");
    }
    println!("  witness: state {}", cm.witness);
    // the verifier replays the class conditions and the forcing clauses
    verify_countermodel(&goal, FrameClass::FundamentalRelational, &cm).unwrap();
    println!("  verified: class conditions + forcing replay");

    // distribution fails in orthologic; the refuting frame is the classic
    // four-point one whose propositions form a non-distributive lattice
    let goal = Consecution::parse("p & (q | r) |- (p & q) | (p & r)", LogicId::Ortho).unwrap();
    let cm = countermodel_search(&goal, FrameClass::OrthoRelational, 4)
        .expect("non-distributivity shows up within four states");
    println!();
    println!("countermodel to {goal} over reflexive-symmetric frames:");
    println!("  {} states, witness {}", cm.model.frame.num_states(), cm.witness);
    verify_countermodel(&goal, FrameClass::OrthoRelational, &cm).unwrap();
    println!("  verified");

    // but the same claim has no countermodel of size 1 or 2
    assert!(countermodel_search(&goal, FrameClass::OrthoRelational, 2).is_none());
    println!("  (and no countermodel with at most 2 states exists)");
}
