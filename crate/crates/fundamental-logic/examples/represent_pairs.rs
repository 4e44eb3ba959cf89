//! Represent a finite lattice as the proposition lattice of a frame: the
//! carrier consists of element pairs (a, b) with ~a <= b, and the canonical
//! map lands isomorphically on the frame's fixpoints.
//!
//! ```bash
//! cargo run --example represent_pairs
//! ```

use fundamental_logic::lattice::fixtures;
use fundamental_logic::representation::{
    build_pairs_frame, canonical_embedding, check_separating, witness_map, BuiltFrame, WitnessMap,
};

fn main() {
    let fx = fixtures()
        .into_iter()
        .find(|f| f.name == "negdiamond_bool4")
        .unwrap();
    let lat = &fx.lattice;
    let built = build_pairs_frame(lat).unwrap();
    println!(
        "{}: {} lattice elements -> {} pair states",
        fx.name,
        lat.len(),
        built.carrier.len()
    );
    for (i, p) in built.carrier.iter().enumerate() {
        println!("  state {i}: ({}, {})", lat.name(p.fst), lat.name(p.snd));
    }

    // the carrier separates the lattice order
    assert!(check_separating(lat, &built.carrier).holds);
    println!("carrier is separating");

    // the canonical map a |-> {x : fst(x) <= a} is an isomorphism
    let report = canonical_embedding(lat, &BuiltFrame::Pairs(&built)).unwrap();
    println!(
        "embedding: injective={}, onto fixpoints={}",
        report.injective, report.surjective_onto_fixpoints
    );
    for op in &report.preserves {
        println!("  preserves {}: {}", op.op, op.holds);
    }
    assert!(report.is_isomorphism());

    // accessibility witnesses for the two modal transfer conditions
    let x = built.carrier[0];
    let rho = witness_map(lat, x, WitnessMap::Rho).unwrap();
    let sigma = witness_map(lat, x, WitnessMap::Sigma).unwrap();
    println!();
    println!(
        "witnesses for ({}, {}): rho = ({}, {}), sigma = ({}, {})",
        lat.name(x.fst),
        lat.name(x.snd),
        lat.name(rho.fst),
        lat.name(rho.snd),
        lat.name(sigma.fst),
        lat.name(sigma.snd),
    );
}
