//! The double-negation translation embeds orthologic into fundamental
//! logic: a claim is orthologic-derivable exactly when its translation is
//! fundamentally derivable.
//!
//! ```bash
//! cargo run --example godel_gentzen
//! ```

use fundamental_logic::consequence::{decide, DecideBudgets, Verdict};
use fundamental_logic::formula::{godel_gentzen, parse, Consecution, LogicId};

fn name(v: &Verdict) -> &'static str {
    match v {
        Verdict::Proved(_) => "proved",
        Verdict::Refuted(_) => "refuted",
        Verdict::Unknown(_) => "unknown",
    }
}

fn main() {
    for text in ["p", "~p", "p & q", "p | q"] {
        let f = parse(text).unwrap();
        println!("g({text}) = {}", godel_gentzen(&f).unwrap());
    }

    println!();
    let budgets = DecideBudgets::default();
    let pairs = [
        ("~~p", "p"),
        ("q", "p | ~p"),
        ("p", "q"),
        ("~(p | q)", "~p & ~q"),
    ];
    println!(
        "{:24} {:12} {:12}",
        "claim", "orthologic", "translated-in-fundamental"
    );
    for (lhs, rhs) in pairs {
        let phi = parse(lhs).unwrap();
        let psi = parse(rhs).unwrap();
        let ortho = decide(
            &Consecution::new(phi.clone(), psi.clone(), LogicId::Ortho).unwrap(),
            &budgets,
        );
        let fund = decide(
            &Consecution::new(
                godel_gentzen(&phi).unwrap(),
                godel_gentzen(&psi).unwrap(),
                LogicId::Fundamental,
            )
            .unwrap(),
            &budgets,
        );
        println!("{:24} {:12} {:12}", format!("{lhs} |- {rhs}"), name(&ortho), name(&fund));
        if !matches!(ortho, Verdict::Unknown(_)) && !matches!(fund, Verdict::Unknown(_)) {
            assert_eq!(
                matches!(ortho, Verdict::Proved(_)),
                matches!(fund, Verdict::Proved(_)),
                "the translation is supposed to be faithful"
            );
        }
    }
    println!();
    println!("definite verdicts agreed on every pair");
}
