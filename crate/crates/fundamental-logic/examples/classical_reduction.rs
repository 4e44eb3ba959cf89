//! Classical consequence reduces to fundamental consequence by
//! strengthening the premise with a disjunction over all state
//! descriptions of the relevant variables.
//!
//! ```bash
//! cargo run --example classical_reduction
//! ```

use fundamental_logic::consequence::{classical_entails, decide, DecideBudgets, Verdict};
use fundamental_logic::formula::{classical_premise, parse, state_descriptions, Consecution, LogicId};

fn main() {
    let vars: Vec<String> = ["p", "q"].iter().map(|s| s.to_string()).collect();
    println!("state descriptions over {{p, q}}:");
    for sd in state_descriptions(&vars).unwrap() {
        println!("  {sd}");
    }

    println!();
    let cases = [
        ("~~p", "p"),
        ("q", "p | ~p"),
        ("p | q", "p"),
        ("~(p & q)", "~p | ~q"),
    ];
    let budgets = DecideBudgets::default();
    for (lhs, rhs) in cases {
        let phi = parse(lhs).unwrap();
        let psi = parse(rhs).unwrap();
        let premise = classical_premise(&phi, &psi).unwrap();
        let classically = classical_entails(&phi, &psi).unwrap();
        let goal = Consecution::new(premise.clone(), psi, LogicId::Fundamental).unwrap();
        let verdict = decide(&goal, &budgets);
        println!("classical claim   {lhs} |- {rhs}   (oracle: {classically})");
        println!("  reduction: {premise} |- {rhs}");
        let agree = match &verdict {
            Verdict::Proved(t) => {
                println!("  fundamental verdict: proved ({} steps)", t.len());
                classically
            }
            Verdict::Refuted(cm) => {
                println!(
                    "  fundamental verdict: refuted ({} state model)",
                    cm.model.frame.num_states()
                );
                !classically
            }
            Verdict::Unknown(_) => {
                println!("  fundamental verdict: unknown");
                true
            }
        };
        assert!(agree, "reduction must match the truth-table oracle");
        println!();
    }
}
