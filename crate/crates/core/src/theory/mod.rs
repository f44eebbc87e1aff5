//! Theories built from EA⁺ or PA by iterated uniform reflection.
//!
//! `Reflect(n, α, T)` is `α` iterations of Π_n reflection over `T`; level 1 is
//! iterated consistency, so `Reflect(1, α, T)` is the Turing progression stage
//! `T_α`.

mod catalog;
mod engine;
mod rules;
mod sexpr;

use std::fmt;
use std::str::FromStr;

use crate::ordinal::{Ordinal, OrdinalError};

pub use catalog::{catalog_lookup, Catalog};
pub use engine::{
    omega_model_dilator, pi_ordinal, progression_stage, reduce_to_level, Engine, Reduction,
};
pub use rules::{LevelPattern, OrdinalPattern, Pattern, ReductionRule, RuleSet, Transform};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TheoryError {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("reflection level must be at least 1")]
    ZeroLevel,
    #[error("iteration count must be nonzero")]
    ZeroIterations,
    #[error("level {requested} is above the outermost level {outermost}")]
    LevelTooHigh { requested: u32, outermost: u32 },
    #[error("unsupported shape: {0}")]
    Unsupported(String),
    #[error("unknown theory {0:?}")]
    UnknownTheory(String),
    #[error("line {line}: {message}")]
    DataFile { line: usize, message: String },
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TheoryExpr {
    EaPlus,
    Pa,
    Reflect(Reflection),
}

/// `iterations` many steps of Π_`level` reflection over `over`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Reflection {
    level: u32,
    iterations: Ordinal,
    over: Box<TheoryExpr>,
}

impl Reflection {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn iterations(&self) -> &Ordinal {
        &self.iterations
    }

    pub fn over(&self) -> &TheoryExpr {
        &self.over
    }
}

impl TheoryExpr {
    pub fn reflect(level: u32, iterations: Ordinal, over: TheoryExpr) -> Result<Self, TheoryError> {
        if level == 0 {
            return Err(TheoryError::ZeroLevel);
        }
        if iterations.is_zero() {
            return Err(TheoryError::ZeroIterations);
        }
        Ok(TheoryExpr::Reflect(Reflection {
            level,
            iterations,
            over: Box::new(over),
        }))
    }

    /// `Con^α(T)`, i.e. level-1 reflection.
    pub fn con(iterations: Ordinal, over: TheoryExpr) -> Result<Self, TheoryError> {
        Self::reflect(1, iterations, over)
    }

    pub fn as_reflection(&self) -> Option<&Reflection> {
        match self {
            TheoryExpr::Reflect(r) => Some(r),
            _ => None,
        }
    }

    /// The innermost base theory.
    pub fn base(&self) -> &TheoryExpr {
        let mut t = self;
        while let TheoryExpr::Reflect(r) = t {
            t = &r.over;
        }
        t
    }

    /// `(level, iterations)` of each reflection layer, outermost first.
    pub fn layers(&self) -> Vec<(u32, &Ordinal)> {
        let mut out = Vec::new();
        let mut t = self;
        while let TheoryExpr::Reflect(r) = t {
            out.push((r.level, &r.iterations));
            t = &r.over;
        }
        out
    }
}

impl fmt::Display for TheoryExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoryExpr::EaPlus => f.write_str("EA+"),
            TheoryExpr::Pa => f.write_str("PA"),
            TheoryExpr::Reflect(r) => write!(f, "(rfn {} {} {})", r.level, r.iterations, r.over),
        }
    }
}

impl FromStr for TheoryExpr {
    type Err = TheoryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        sexpr::parse_theory(s)
    }
}
