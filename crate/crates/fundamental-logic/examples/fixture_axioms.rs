//! The bundled lattice algebras and their interaction-axiom patterns: each
//! fixture breaks exactly one of the four negation-modality axioms while
//! the other three survive, witnessing their mutual independence.
//!
//! ```bash
//! cargo run --example fixture_axioms
//! ```

use fundamental_logic::lattice::{fixtures, InteractionAxiom};

fn main() {
    for fx in fixtures() {
        let lat = &fx.lattice;
        println!("{} ({} elements)", fx.name, lat.len());
        print!("  elements:");
        for i in 0..lat.len() {
            print!(" {}", lat.name(i));
        }
        println!();
        print!("  neg:");
        for i in 0..lat.len() {
            print!(" {}->{}", lat.name(i), lat.name(lat.neg(i)));
        }
        println!();
        for ax in InteractionAxiom::CORE {
            let report = lat.check_axiom(ax).unwrap();
            if report.holds {
                println!("  {:<11} {:5} holds", ax.to_string(), ax.symbol());
            } else {
                println!(
                    "  {:<11} {:5} FAILS: {}",
                    ax.to_string(),
                    ax.symbol(),
                    report.detail.unwrap()
                );
            }
        }
        println!();
    }

    println!("independence: over the five fixtures, each axiom fails somewhere");
    for ax in InteractionAxiom::CORE {
        let breakers: Vec<&str> = fixtures()
            .iter()
            .filter(|fx| !fx.lattice.check_axiom(ax).unwrap().holds)
            .map(|fx| fx.name)
            .collect();
        println!("  {ax} fails on: {}", breakers.join(", "));
    }
}
