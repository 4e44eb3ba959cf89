//! Decide the same claims in each supported logic and watch the verdicts
//! change: fundamental logic drops double negation elimination, orthologic
//! restores it, the intuitionistic fragment proves-only, classical logic
//! answers by truth table plus proof search.
//!
//! ```bash
//! cargo run --example decide_consecutions
//! ```

use fundamental_logic::consequence::{decide, DecideBudgets, Verdict};
use fundamental_logic::formula::{Consecution, LogicId};

fn verdict_name(v: &Verdict) -> String {
    match v {
        Verdict::Proved(trace) => format!("proved ({} steps)", trace.len()),
        Verdict::Refuted(cm) => format!(
            "refuted ({} state{})",
            cm.model.frame.num_states(),
            if cm.model.frame.num_states() == 1 { "" } else { "s" }
        ),
        Verdict::Unknown(_) => "unknown".to_string(),
    }
}

fn main() {
    let budgets = DecideBudgets::default();
    let logics = [
        LogicId::Fundamental,
        LogicId::Ortho,
        LogicId::IntuitionisticFragment,
        LogicId::Classical,
    ];
    let claims = [
        "p |- ~~p",
        "~~p |- p",
        "p & ~p |- q",
        "q |- p | ~p",
        "p & (q | r) |- (p & q) | (p & r)",
    ];
    print!("{:40}", "");
    for logic in logics {
        print!("{:18}", logic.to_string());
    }
    println!();
    for claim in claims {
        print!("{claim:40}");
        for logic in logics {
            let goal = Consecution::parse(claim, logic).expect("propositional claim");
            print!("{:18}", verdict_name(&decide(&goal, &budgets)));
        }
        println!();
    }

    println!();
    println!("fundamental modal logic:");
    for claim in ["<>~p |- ~[]p", "~[]p |- <>~p", "<>(p | q) |- <>p | <>q", "[]p |- <>p"] {
        let goal = Consecution::parse(claim, LogicId::FundamentalModal).unwrap();
        println!("  {claim:28} {}", verdict_name(&decide(&goal, &budgets)));
    }
}
