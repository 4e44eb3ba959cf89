//! When the negation is dually self-adjoint and dia-neg entails neg-box, a
//! single accessibility relation serves both modal operations. The unified
//! frame then satisfies the stronger conditions, and the filter-ideal
//! construction agrees with the pairs construction on finite lattices.
//!
//! ```bash
//! cargo run --example represent_unified
//! ```

use fundamental_logic::frames::FrameCondition;
use fundamental_logic::lattice::fixtures;
use fundamental_logic::representation::{
    build_unified_frame, canonical_embedding, check_filter_ideal_agreement, BuiltFrame,
};

fn main() {
    for fx in fixtures() {
        match build_unified_frame(&fx.lattice) {
            Ok(built) => {
                println!("{}: unified frame with {} states", fx.name, built.frame.num_states());
                for cond in [
                    FrameCondition::Unified,
                    FrameCondition::ModalFrame,
                    FrameCondition::Additive,
                    FrameCondition::PseudoSymmetric,
                    FrameCondition::PseudoReflexive,
                    FrameCondition::Negative,
                ] {
                    println!("    {cond}: {}", built.frame.satisfies(cond));
                }
                let report = canonical_embedding(&fx.lattice, &BuiltFrame::Pairs(&built)).unwrap();
                println!("    isomorphism: {}", report.is_isomorphism());
            }
            Err(e) => {
                // the weak-negation fixtures lack dual self-adjointness
                println!("{}: rejected ({e})", fx.name);
            }
        }
    }

    println!();
    println!("filter-ideal agreement (finite filters and ideals are principal):");
    for name in ["negbox_chain3", "negdiamond_bool4", "negdiamond_heyting5"] {
        let fx = fixtures().into_iter().find(|f| f.name == name).unwrap();
        check_filter_ideal_agreement(&fx.lattice, false).unwrap();
        check_filter_ideal_agreement(&fx.lattice, true).unwrap();
        println!("  {name}: plain and unified flavors agree with the pairs frame");
    }
}
