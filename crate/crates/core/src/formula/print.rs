use super::{
    ascii_name, canonical_name, check_name, BaseTheory, Formula, FormulaError, Index, Term,
    TheoryRef,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Style {
    #[default]
    Unicode,
    Ascii,
}

struct Symbols {
    verum: &'static str,
    not: &'static str,
    and: &'static str,
    or: &'static str,
    implies: &'static str,
    iff: &'static str,
    leq: &'static str,
    times: &'static str,
    defined: &'static str,
    precedes: &'static str,
    con_star: &'static str,
    quote: (&'static str, &'static str),
}

const UNICODE: Symbols = Symbols {
    verum: "⊤",
    not: "¬",
    and: " ∧ ",
    or: " ∨ ",
    implies: " → ",
    iff: " ↔ ",
    leq: " ≤ ",
    times: "·",
    defined: "↓",
    precedes: " ≺ ",
    con_star: "Con★",
    quote: ("⌜", "⌝"),
};

const ASCII: Symbols = Symbols {
    verum: "true",
    not: "~",
    and: " /\\ ",
    or: " \\/ ",
    implies: " -> ",
    iff: " <-> ",
    leq: " <= ",
    times: "*",
    defined: "|",
    precedes: " < ",
    con_star: "Con*",
    quote: ("[", "]"),
};

struct Printer {
    style: Style,
    sym: &'static Symbols,
    out: String,
}

pub(super) fn render(f: &Formula, style: Style) -> String {
    let mut p = Printer::new(style);
    p.formula(f);
    p.out
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[usize::from(b - b'0')])
        .collect()
}

fn is_binary(f: &Formula) -> bool {
    matches!(f, Formula::And(..) | Formula::Or(..) | Formula::Implies(..))
}

impl Printer {
    fn new(style: Style) -> Printer {
        let sym = match style {
            Style::Unicode => &UNICODE,
            Style::Ascii => &ASCII,
        };
        Printer {
            style,
            sym,
            out: String::new(),
        }
    }

    fn name(&mut self, name: &str) {
        match self.style {
            Style::Unicode => self.out.push_str(name),
            Style::Ascii => self.out.push_str(&ascii_name(name)),
        }
    }

    fn wrapped(&mut self, f: &Formula, parens: bool) {
        if parens {
            self.out.push('(');
            self.formula(f);
            self.out.push(')');
        } else {
            self.formula(f);
        }
    }

    fn formula(&mut self, f: &Formula) {
        let sym = self.sym;
        match f {
            Formula::Verum => self.out.push_str(sym.verum),
            Formula::Hole(h) => self.name(h),
            Formula::Equals(a, b) => {
                self.term(a);
                self.out.push_str(" = ");
                self.term(b);
            }
            Formula::Leq(a, b) => {
                self.term(a);
                self.out.push_str(sym.leq);
                self.term(b);
            }
            Formula::Defined(func, t) => {
                self.out.push_str(func);
                self.out.push('(');
                self.term(t);
                self.out.push(')');
                self.out.push_str(sym.defined);
            }
            Formula::Con(theory, power) => {
                self.out.push_str("Con");
                if *power > 1 {
                    match self.style {
                        Style::Unicode => self.out.push_str(&superscript(*power)),
                        Style::Ascii => self.out.push_str(&format!("^{power}")),
                    }
                }
                self.out.push('(');
                self.theory(theory);
                self.out.push(')');
            }
            Formula::Not(g) => {
                self.out.push_str(sym.not);
                self.wrapped(g, is_binary(g));
            }
            // Conjunction and disjunction chains associate to the left; mixing
            // the two is always parenthesized.
            Formula::And(a, b) => {
                self.wrapped(a, matches!(**a, Formula::Or(..) | Formula::Implies(..)));
                self.out.push_str(sym.and);
                self.wrapped(b, is_binary(b));
            }
            Formula::Or(a, b) => {
                self.wrapped(a, matches!(**a, Formula::And(..) | Formula::Implies(..)));
                self.out.push_str(sym.or);
                self.wrapped(b, is_binary(b));
            }
            Formula::Implies(a, b) => {
                self.wrapped(a, matches!(**a, Formula::Implies(..)));
                self.out.push_str(sym.implies);
                self.formula(b);
            }
            Formula::ForAll(v, body) => self.quantifier("∀", "forall", v, body),
            Formula::Exists(v, body) => self.quantifier("∃", "exists", v, body),
        }
    }

    fn quantifier(&mut self, symbol: &str, word: &str, var: &str, body: &Formula) {
        match self.style {
            Style::Unicode => {
                self.out.push_str(symbol);
                self.out.push_str(var);
            }
            Style::Ascii => {
                self.out.push_str(word);
                self.out.push(' ');
                self.name(var);
                self.out.push(' ');
            }
        }
        self.wrapped(body, true);
    }

    fn theory(&mut self, theory: &TheoryRef) {
        match theory.base() {
            BaseTheory::Pa => self.out.push_str("PA"),
            BaseTheory::Ea => self.out.push_str("EA"),
            BaseTheory::ISigma(index) => {
                self.out.push_str("ISigma_");
                match index {
                    Index::Var(v) => self.name(v),
                    Index::Num(n) => self.out.push_str(&n.to_string()),
                }
            }
        }
        if let Some(added) = theory.added() {
            self.out.push_str(" + ");
            self.wrapped(added, is_binary(added));
        }
    }

    fn term(&mut self, t: &Term) {
        match t {
            Term::Var(v) => self.name(v),
            Term::Num(n) => self.out.push_str(&n.to_string()),
            Term::Add(a, b) => {
                self.term(a);
                self.out.push_str(" + ");
                self.term_wrapped(b, matches!(**b, Term::Add(..)));
            }
            Term::Mul(a, b) => {
                self.term_wrapped(a, matches!(**a, Term::Add(..)));
                self.out.push_str(self.sym.times);
                self.term_wrapped(b, matches!(**b, Term::Add(..) | Term::Mul(..)));
            }
        }
    }

    fn term_wrapped(&mut self, t: &Term, parens: bool) {
        if parens {
            self.out.push('(');
            self.term(t);
            self.out.push(')');
        } else {
            self.term(t);
        }
    }
}

/// The fixed-point equation for `Con★`, as text.
pub fn con_star_equation(alpha: &str, theory: &str, style: Style) -> Result<String, FormulaError> {
    let alpha = canonical_name(alpha.trim());
    let theory = canonical_name(theory.trim());
    check_name(&alpha)?;
    check_name(&theory)?;
    let bound = ["β", "γ", "δ", "θ"]
        .into_iter()
        .find(|b| *b != alpha && *b != theory)
        .expect("at most two names are taken");
    let (alpha, theory, bound) = match style {
        Style::Unicode => (alpha, theory, bound.to_string()),
        Style::Ascii => (ascii_name(&alpha), ascii_name(&theory), ascii_name(bound)),
    };
    let sym = match style {
        Style::Unicode => &UNICODE,
        Style::Ascii => &ASCII,
    };
    let star = sym.con_star;
    let forall = match style {
        Style::Unicode => format!("∀{bound}"),
        Style::Ascii => format!("forall {bound}"),
    };
    let (open, close) = sym.quote;
    Ok(format!(
        "{star}({alpha},{theory}){iff}{forall}{prec}{alpha} Con({theory}+{open}{star}({bound},{theory}){close})",
        iff = sym.iff,
        prec = sym.precedes,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(name: &str) -> Formula {
        Formula::hole(name).unwrap()
    }

    #[test]
    fn precedence() {
        let (a, b, c) = (h("a"), h("b"), h("c"));
        let and_or = Formula::and(a.clone(), Formula::or(b.clone(), c.clone()));
        assert_eq!(and_or.to_string(), "a ∧ (b ∨ c)");
        let chain = Formula::implies(a.clone(), Formula::implies(b.clone(), c.clone()));
        assert_eq!(chain.to_string(), "a → b → c");
        let left = Formula::implies(Formula::implies(a.clone(), b.clone()), c.clone());
        assert_eq!(left.to_string(), "(a → b) → c");
        let conj = Formula::and(Formula::and(a.clone(), b.clone()), c.clone());
        assert_eq!(conj.to_string(), "a ∧ b ∧ c");
        let right = Formula::and(a.clone(), Formula::and(b.clone(), c.clone()));
        assert_eq!(right.to_string(), "a ∧ (b ∧ c)");
        let mixed = Formula::or(Formula::and(a.clone(), b.clone()), c.clone());
        assert_eq!(mixed.to_string(), "(a ∧ b) ∨ c");
        let neg = Formula::negate(Formula::or(a.clone(), b.clone()));
        assert_eq!(neg.pretty(Style::Ascii), "~(a \\/ b)");
        let imp = Formula::implies(Formula::and(a, b), Formula::negate(c));
        assert_eq!(imp.to_string(), "a ∧ b → ¬c");
    }

    #[test]
    fn atoms_and_terms() {
        let t = Term::Mul(
            Box::new(Term::Add(Box::new(Term::var("x")), Box::new(Term::Num(1)))),
            Box::new(Term::var("y")),
        );
        let f = Formula::exists("y", Formula::Leq(t.clone(), Term::Num(7)));
        assert_eq!(f.to_string(), "∃y((x + 1)·y ≤ 7)");
        assert_eq!(f.pretty(Style::Ascii), "exists y ((x + 1)*y <= 7)");
        let con = Formula::con(TheoryRef::new(BaseTheory::ISigma(Index::Num(3))), 12).unwrap();
        assert_eq!(con.to_string(), "Con¹²(ISigma_3)");
        assert_eq!(con.pretty(Style::Ascii), "Con^12(ISigma_3)");
        let pa = Formula::con(
            TheoryRef::plus(BaseTheory::Pa, Formula::negate(h("phi"))),
            1,
        )
        .unwrap();
        assert_eq!(pa.to_string(), "Con(PA + ¬φ)");
    }

    #[test]
    fn con_star() {
        assert_eq!(
            con_star_equation("α", "T", Style::Unicode).unwrap(),
            "Con★(α,T) ↔ ∀β ≺ α Con(T+⌜Con★(β,T)⌝)"
        );
        assert_eq!(
            con_star_equation("alpha", "T", Style::Ascii).unwrap(),
            "Con*(alpha,T) <-> forall beta < alpha Con(T+[Con*(beta,T)])"
        );
        assert_eq!(
            con_star_equation("a", "PA", Style::Unicode).unwrap(),
            "Con★(a,PA) ↔ ∀β ≺ a Con(PA+⌜Con★(β,PA)⌝)"
        );
        assert_eq!(
            con_star_equation("beta", "T", Style::Unicode).unwrap(),
            "Con★(β,T) ↔ ∀γ ≺ β Con(T+⌜Con★(γ,T)⌝)"
        );
        assert!(con_star_equation("", "T", Style::Unicode).is_err());
    }
}
