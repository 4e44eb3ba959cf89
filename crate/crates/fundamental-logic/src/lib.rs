//! A workbench for fundamental propositional and modal logic.
//!
//! The library decides consequence claims by sound forward saturation and
//! exhaustive countermodel search, computes the fixpoint semantics of
//! finite frames exactly, checks lattice algebras against the
//! negation-modality interaction axioms, and executes the frame
//! representations of finite lattices with machine-verified embeddings.
//!
//! Five consequence relations are supported: fundamental logic, orthologic,
//! the intuitionistic `&,|,~`-fragment, classical logic, and fundamental
//! modal logic. See the `examples/` directory for one runnable tour per
//! capability, and the `fml` binary for batch use.
//!
//! ```
//! use fundamental_logic::formula::{Consecution, LogicId};
//! use fundamental_logic::consequence::{decide, DecideBudgets, Verdict};
//!
//! let goal = Consecution::parse("p |- ~~p", LogicId::Fundamental).unwrap();
//! assert!(matches!(decide(&goal, &DecideBudgets::default()), Verdict::Proved(_)));
//!
//! let goal = Consecution::parse("~~p |- p", LogicId::Fundamental).unwrap();
//! assert!(matches!(decide(&goal, &DecideBudgets::default()), Verdict::Refuted(_)));
//! ```

pub mod consequence;
pub mod formula;
pub mod frames;
pub mod lattice;
pub mod representation;
pub mod sampling;

pub use consequence::{decide, DecideBudgets, Verdict};
pub use formula::{Consecution, Formula, LogicId};
