//! Arithmetic formula ASTs for consistency-style statements.
//!
//! Formulas are surface syntax only: `Con` is an atom over a named theory and
//! `F_e0(x)↓` is an atom over an uninterpreted function symbol.

mod print;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use print::{con_star_equation, Style};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("variable {variable} is free in the input and would be captured")]
    Capture { variable: String },
    #[error("invalid name {0:?}")]
    InvalidName(String),
    #[error("consistency power must be at least 1")]
    ZeroPower,
}

const GREEK: [(&str, &str); 8] = [
    ("alpha", "α"),
    ("beta", "β"),
    ("gamma", "γ"),
    ("delta", "δ"),
    ("theta", "θ"),
    ("phi", "φ"),
    ("chi", "χ"),
    ("psi", "ψ"),
];

/// Spelled-out Greek letter names become the letter itself.
pub fn canonical_name(name: &str) -> String {
    GREEK
        .iter()
        .find(|(latin, _)| *latin == name)
        .map_or_else(|| name.to_string(), |(_, greek)| greek.to_string())
}

pub(crate) fn ascii_name(name: &str) -> String {
    let mut out = String::new();
    for c in name.chars() {
        match GREEK.iter().find(|(_, greek)| greek.starts_with(c)) {
            Some((latin, _)) => out.push_str(latin),
            None => out.push(c),
        }
    }
    out
}

fn check_name(name: &str) -> Result<(), FormulaError> {
    let ok = !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_alphanumeric() || c == '_' || c == '\'');
    if ok {
        Ok(())
    } else {
        Err(FormulaError::InvalidName(name.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Num(u64),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Num(_) => {}
            Term::Add(a, b) | Term::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

/// Subscript of `ISigma`: a variable or a numeral.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Index {
    Var(String),
    Num(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BaseTheory {
    Pa,
    Ea,
    ISigma(Index),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TheoryRef {
    base: BaseTheory,
    added: Option<Box<Formula>>,
}

impl TheoryRef {
    pub fn new(base: BaseTheory) -> TheoryRef {
        TheoryRef { base, added: None }
    }

    /// `base + formula`; adding `⊤` leaves the theory unchanged.
    pub fn plus(base: BaseTheory, formula: Formula) -> TheoryRef {
        let added = (formula != Formula::Verum).then(|| Box::new(formula));
        TheoryRef { base, added }
    }

    pub fn base(&self) -> &BaseTheory {
        &self.base
    }

    pub fn added(&self) -> Option<&Formula> {
        self.added.as_deref()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Verum,
    /// A schematic sentence letter.
    Hole(String),
    Equals(Term, Term),
    Leq(Term, Term),
    /// `f(t)↓`
    Defined(String, Term),
    /// `Conⁿ(T)`, `n >= 1`.
    Con(TheoryRef, u32),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    ForAll(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

impl Formula {
    pub fn hole(name: &str) -> Result<Formula, FormulaError> {
        let name = canonical_name(name);
        check_name(&name)?;
        Ok(Formula::Hole(name))
    }

    pub fn con(theory: TheoryRef, power: u32) -> Result<Formula, FormulaError> {
        if power == 0 {
            return Err(FormulaError::ZeroPower);
        }
        Ok(Formula::Con(theory, power))
    }

    pub fn negate(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn for_all(var: &str, body: Formula) -> Formula {
        Formula::ForAll(var.to_string(), Box::new(body))
    }

    pub fn exists(var: &str, body: Formula) -> Formula {
        Formula::Exists(var.to_string(), Box::new(body))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Verum | Formula::Hole(_) => {}
            Formula::Equals(a, b) | Formula::Leq(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::Defined(_, t) => t.collect_vars(out),
            Formula::Con(theory, _) => {
                if let BaseTheory::ISigma(Index::Var(v)) = &theory.base {
                    out.insert(v.clone());
                }
                if let Some(added) = &theory.added {
                    added.collect_free(out);
                }
            }
            Formula::Not(f) => f.collect_free(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(out);
                b.collect_free(out);
            }
            Formula::ForAll(v, body) | Formula::Exists(v, body) => {
                let mut inner = BTreeSet::new();
                body.collect_free(&mut inner);
                inner.remove(v);
                out.extend(inner);
            }
        }
    }

    pub fn holes(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Hole(h) = f {
                out.insert(h.clone());
            }
        });
        out
    }

    fn visit(&self, g: &mut impl FnMut(&Formula)) {
        g(self);
        match self {
            Formula::Con(theory, _) => {
                if let Some(added) = &theory.added {
                    added.visit(g);
                }
            }
            Formula::Not(f) | Formula::ForAll(_, f) | Formula::Exists(_, f) => f.visit(g),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.visit(g);
                b.visit(g);
            }
            _ => {}
        }
    }

    /// Replaces every occurrence of the hole `name`. Holes stand for
    /// sentences, so the replacement should be closed.
    pub fn fill(&self, name: &str, replacement: &Formula) -> Formula {
        let name = canonical_name(name);
        self.fill_canonical(&name, replacement)
    }

    fn fill_canonical(&self, name: &str, r: &Formula) -> Formula {
        let go = |f: &Formula| Box::new(f.fill_canonical(name, r));
        match self {
            Formula::Hole(h) if h == name => r.clone(),
            Formula::Verum
            | Formula::Hole(_)
            | Formula::Equals(..)
            | Formula::Leq(..)
            | Formula::Defined(..) => self.clone(),
            Formula::Con(theory, power) => {
                let theory = match &theory.added {
                    Some(added) => {
                        TheoryRef::plus(theory.base.clone(), added.fill_canonical(name, r))
                    }
                    None => theory.clone(),
                };
                Formula::Con(theory, *power)
            }
            Formula::Not(f) => Formula::Not(go(f)),
            Formula::And(a, b) => Formula::And(go(a), go(b)),
            Formula::Or(a, b) => Formula::Or(go(a), go(b)),
            Formula::Implies(a, b) => Formula::Implies(go(a), go(b)),
            Formula::ForAll(v, f) => Formula::ForAll(v.clone(), go(f)),
            Formula::Exists(v, f) => Formula::Exists(v.clone(), go(f)),
        }
    }

    pub fn pretty(&self, style: Style) -> String {
        print::render(self, style)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty(Style::Unicode))
    }
}

const BOUND: &str = "x";

fn check_capture(inputs: &[&Formula]) -> Result<(), FormulaError> {
    if inputs.iter().any(|f| f.free_vars().contains(BOUND)) {
        return Err(FormulaError::Capture {
            variable: BOUND.to_string(),
        });
    }
    Ok(())
}

fn isigma_plus(phi: &Formula) -> TheoryRef {
    TheoryRef::plus(BaseTheory::ISigma(Index::Var(BOUND.into())), phi.clone())
}

/// Slow consistency: `∀x(F_e0(x)↓ → Con(ISigma_x + φ))`.
pub fn slowcon(phi: &Formula) -> Result<Formula, FormulaError> {
    check_capture(&[phi])?;
    Ok(Formula::for_all(
        BOUND,
        Formula::implies(
            Formula::Defined("F_e0".into(), Term::var(BOUND)),
            Formula::Con(isigma_plus(phi), 1),
        ),
    ))
}

/// `φ ∧ ∀x(Con(ISigma_x + φ) → Con²(ISigma_x + φ))`
pub fn sv(phi: &Formula) -> Result<Formula, FormulaError> {
    check_capture(&[phi])?;
    let theory = isigma_plus(phi);
    Ok(Formula::and(
        phi.clone(),
        Formula::for_all(
            BOUND,
            Formula::implies(Formula::Con(theory.clone(), 1), Formula::Con(theory, 2)),
        ),
    ))
}

/// `φ ∨ (SV(¬φ ∧ ψ) ∧ ψ)`
pub fn sv_star(phi: &Formula, psi: &Formula) -> Result<Formula, FormulaError> {
    check_capture(&[phi, psi])?;
    let inner = sv(&Formula::and(Formula::negate(phi.clone()), psi.clone()))?;
    Ok(Formula::or(phi.clone(), Formula::and(inner, psi.clone())))
}

/// `φ ∨ (ψ ∧ θ)`, with no simplification.
pub fn rosser_combination(phi: &Formula, psi: &Formula, theta: &Formula) -> Formula {
    Formula::or(phi.clone(), Formula::and(psi.clone(), theta.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(name: &str) -> Formula {
        Formula::hole(name).unwrap()
    }

    #[test]
    fn slowcon_renders() {
        let f = slowcon(&h("phi")).unwrap();
        assert_eq!(f.to_string(), "∀x(F_e0(x)↓ → Con(ISigma_x + φ))");
        assert_eq!(
            f.pretty(Style::Ascii),
            "forall x (F_e0(x)| -> Con(ISigma_x + phi))"
        );
        assert_eq!(
            slowcon(&Formula::Verum).unwrap().to_string(),
            "∀x(F_e0(x)↓ → Con(ISigma_x))"
        );
        assert!(matches!(
            f,
            Formula::ForAll(ref x, ref body)
                if x == "x" && matches!(**body, Formula::Implies(ref a, ref b)
                    if matches!(**a, Formula::Defined(..)) && matches!(**b, Formula::Con(_, 1)))
        ));
    }

    #[test]
    fn sv_renders() {
        let f = sv(&h("φ")).unwrap();
        assert_eq!(
            f.to_string(),
            "φ ∧ ∀x(Con(ISigma_x + φ) → Con²(ISigma_x + φ))"
        );
        assert_eq!(
            f.pretty(Style::Ascii),
            "phi /\\ forall x (Con(ISigma_x + phi) -> Con^2(ISigma_x + phi))"
        );
        assert_eq!(
            sv(&Formula::Verum).unwrap().to_string(),
            "⊤ ∧ ∀x(Con(ISigma_x) → Con²(ISigma_x))"
        );
    }

    #[test]
    fn sv_star_and_rosser_render() {
        let f = sv_star(&h("phi"), &h("psi")).unwrap();
        assert_eq!(
            f.to_string(),
            "φ ∨ (¬φ ∧ ψ ∧ ∀x(Con(ISigma_x + (¬φ ∧ ψ)) → Con²(ISigma_x + (¬φ ∧ ψ))) ∧ ψ)"
        );
        let r = rosser_combination(&h("phi"), &h("psi"), &h("theta"));
        assert_eq!(r.to_string(), "φ ∨ (ψ ∧ θ)");
        assert_eq!(r.pretty(Style::Ascii), "phi \\/ (psi /\\ theta)");
        let r = rosser_combination(&h("phi"), &h("psi"), &Formula::Verum);
        assert_eq!(r.to_string(), "φ ∨ (ψ ∧ ⊤)");
    }

    #[test]
    fn capture_is_rejected() {
        let open = Formula::Leq(Term::var("x"), Term::Num(3));
        let err = FormulaError::Capture {
            variable: "x".into(),
        };
        assert_eq!(slowcon(&open), Err(err.clone()));
        assert_eq!(sv(&open), Err(err.clone()));
        assert_eq!(sv_star(&h("phi"), &open), Err(err));
        let closed = Formula::for_all("x", open);
        assert!(slowcon(&closed).is_ok());
        let other = Formula::Equals(Term::var("y"), Term::Num(0));
        assert!(slowcon(&other).is_ok());
    }

    #[test]
    fn filling_commutes_with_building() {
        let psi = Formula::exists("y", Formula::Leq(Term::var("y"), Term::Num(2)));
        for r in [Formula::Verum, psi] {
            let built_then_filled = slowcon(&h("phi")).unwrap().fill("phi", &r);
            assert_eq!(built_then_filled, slowcon(&r).unwrap());
            let built_then_filled = sv(&h("phi")).unwrap().fill("phi", &r);
            assert_eq!(built_then_filled, sv(&r).unwrap());
        }
    }

    #[test]
    fn free_variables() {
        let f = Formula::for_all(
            "x",
            Formula::Equals(
                Term::Add(Box::new(Term::var("x")), Box::new(Term::var("y"))),
                Term::Num(0),
            ),
        );
        assert_eq!(f.free_vars(), BTreeSet::from(["y".to_string()]));
        assert!(slowcon(&h("phi")).unwrap().free_vars().is_empty());
        assert_eq!(
            sv_star(&h("phi"), &h("psi")).unwrap().holes(),
            BTreeSet::from(["φ".to_string(), "ψ".to_string()])
        );
    }

    #[test]
    fn names() {
        assert_eq!(canonical_name("theta"), "θ");
        assert_eq!(canonical_name("T"), "T");
        assert_eq!(ascii_name("α'"), "alpha'");
        assert!(Formula::hole("").is_err());
        assert!(Formula::hole("a b").is_err());
        assert_eq!(
            Formula::con(TheoryRef::new(BaseTheory::Pa), 0),
            Err(FormulaError::ZeroPower)
        );
    }
}
