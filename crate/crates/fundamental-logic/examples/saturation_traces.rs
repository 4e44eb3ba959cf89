//! Prove claims by forward saturation, print the replayable traces, check
//! them step by step, and round-trip the text format. Also shows budget
//! sensitivity: the formula universe is staged, so some proofs only appear
//! once the universe is allowed to grow.
//!
//! ```bash
//! cargo run --example saturation_traces
//! ```

use fundamental_logic::consequence::{
    check_trace, parse_trace, render_trace, saturate, SaturateOutcome, SaturationBudget,
};
use fundamental_logic::formula::{Consecution, LogicId};

fn main() {
    let logic = LogicId::FundamentalModal;
    let goal = Consecution::parse("[]q & []p |- [](q & p)", logic).unwrap();
    let trace = match saturate(&goal, &SaturationBudget::default()) {
        SaturateOutcome::Proved(trace) => trace,
        SaturateOutcome::Exhausted(report) => panic!("not proved: {report:?}"),
    };
    println!("proof of {goal} ({} steps):", trace.len());
    let text = render_trace(&trace);
    print!("{text}");

    // every step is a literal rule instance with premises derived earlier
    assert!(check_trace(&trace));
    println!("trace replays: ok");

    // the text format round-trips
    let back = parse_trace(&text, logic).unwrap();
    assert_eq!(back, trace);
    println!("text round-trip: ok");

    // the commuted variant needs the conjunction of the two boxes the
    // other way round, a formula the default universe does not reach
    let goal = Consecution::parse("[]p & []q |- [](q & p)", logic).unwrap();
    println!();
    match saturate(&goal, &SaturationBudget::default()) {
        SaturateOutcome::Proved(_) => println!("{goal}: proved at the default budget"),
        SaturateOutcome::Exhausted(r) => println!(
            "{goal}: exhausted at the default budget (universe {})",
            r.universe_size
        ),
    }
    let bigger = SaturationBudget {
        max_universe: 384,
        max_steps: 400_000,
    };
    match saturate(&goal, &bigger) {
        SaturateOutcome::Proved(trace) => {
            println!("{goal}: proved at universe 384 ({} steps):", trace.len());
            print!("{}", render_trace(&trace));
        }
        SaturateOutcome::Exhausted(r) => panic!("still exhausted: {r:?}"),
    }

    // a longer derivation in orthologic, for flavor
    let goal = Consecution::parse("q |- p | ~p", LogicId::Ortho).unwrap();
    if let SaturateOutcome::Proved(trace) = saturate(&goal, &SaturationBudget::default()) {
        println!();
        println!("proof of {goal} in orthologic ({} steps):", trace.len());
        print!("{}", render_trace(&trace));
    }
}
