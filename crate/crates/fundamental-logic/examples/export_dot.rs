//! Export frames to Graphviz: solid arrows draw the converse of openness,
//! dashed arrows the box accessibility, dotted arrows the dia
//! accessibility.
//!
//! ```bash
//! cargo run --example export_dot > frame.dot && dot -Tpng frame.dot -o frame.png
//! ```

use fundamental_logic::frames::{frame_to_json, to_dot};
use fundamental_logic::lattice::fixtures;
use fundamental_logic::representation::build_unified_frame;

fn main() {
    let fx = fixtures()
        .into_iter()
        .find(|f| f.name == "negbox_chain3")
        .unwrap();
    let built = build_unified_frame(&fx.lattice).unwrap();
    eprintln!(
        "unified frame of {} ({} states); JSON form:",
        fx.name,
        built.frame.num_states()
    );
    eprintln!("{}", frame_to_json(&built.frame));
    print!("{}", to_dot(&built.frame));
}
