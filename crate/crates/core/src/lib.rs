//! Symbolic toolkit for ordinal notations and iterated reflection.

pub mod cli;
pub mod formula;
pub mod notation;
pub mod ordinal;
pub mod theory;
pub mod worm;

pub use formula::{Formula, FormulaError};
pub use notation::{PredicateExpr, Presentation};
pub use ordinal::{Atom, Ordinal, OrdinalError};
pub use theory::{TheoryError, TheoryExpr};
pub use worm::{Worm, WormError};
