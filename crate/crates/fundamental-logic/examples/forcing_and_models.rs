//! Build a model by hand and evaluate formulas two ways: per state through
//! the forcing clauses, and globally through set-level denotations. The two
//! always agree.
//!
//! ```bash
//! cargo run --example forcing_and_models
//! ```

use fundamental_logic::formula::parse;
use fundamental_logic::frames::{ModalFrame, Model, StateSet};
use std::collections::BTreeMap;

fn main() {
    // three states with reflexive openness going down a chain, and an
    // accessibility relation marching up it
    let frame = ModalFrame::with_default_names(
        3,
        &[(0, 0), (1, 1), (2, 2), (1, 0), (2, 1), (2, 0)],
        &[(0, 1), (1, 2), (2, 2)],
        &[(0, 1), (1, 2), (2, 2)],
    )
    .unwrap();
    let algebra = frame.fixpoints().unwrap();
    println!("propositions: {:?}", algebra.fixpoints());

    // pick a nontrivial proposition for p
    let p_val = *algebra
        .fixpoints()
        .iter()
        .find(|a| !a.is_empty() && **a != frame.full())
        .expect("a proper nonempty proposition exists");
    let valuation: BTreeMap<String, StateSet> = [("p".to_string(), p_val)].into();
    let model = Model::new(frame, valuation);
    model.validate().unwrap();
    println!("V(p) = {p_val}");
    println!();

    for text in ["p", "~p", "~~p", "[]p", "<>p", "[]p | ~p", "<>~p", "~[]p"] {
        let f = parse(text).unwrap();
        let den = model.denotation(&f).unwrap();
        print!("{text:10} denotes {den}   forcing:");
        for x in 0..model.frame.num_states() {
            let forces = model.forcing(x, &f).unwrap();
            assert_eq!(forces, den.contains(x));
            print!(" {}", if forces { "1" } else { "0" });
        }
        println!();
    }
    println!();
    println!("falsum holds exactly at absurd states (none here, openness is reflexive)");
    let bot = parse("_|_").unwrap();
    assert!(model.denotation(&bot).unwrap().is_empty());
}
