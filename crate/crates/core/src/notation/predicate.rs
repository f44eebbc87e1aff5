// A small total predicate language over one natural variable `x`:
//
//   pred  := conj (("or" | "||") conj)*
//   conj  := neg (("and" | "&&") neg)*
//   neg   := ("not" | "!") neg | "true" | "false" | "(" pred ")" | cmp
//   cmp   := arith ("<" | "<=" | ">" | ">=" | "=" | "==" | "!=" | "≠" | "≤" | "≥") arith
//   arith := term ("+" term)*
//   term  := factor ("*" factor)*
//   factor := "x" | nat | "(" arith ")"

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("predicate syntax error at {pos}: {message}")]
pub struct PredicateError {
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Arith {
    Var,
    Const(u64),
    Add(Box<Arith>, Box<Arith>),
    Mul(Box<Arith>, Box<Arith>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PredicateExpr {
    True,
    False,
    Compare(Relation, Arith, Arith),
    Not(Box<PredicateExpr>),
    And(Box<PredicateExpr>, Box<PredicateExpr>),
    Or(Box<PredicateExpr>, Box<PredicateExpr>),
}

impl Arith {
    // Saturating, so evaluation stays total.
    pub fn eval(&self, x: u64) -> u128 {
        match self {
            Arith::Var => u128::from(x),
            Arith::Const(c) => u128::from(*c),
            Arith::Add(a, b) => a.eval(x).saturating_add(b.eval(x)),
            Arith::Mul(a, b) => a.eval(x).saturating_mul(b.eval(x)),
        }
    }
}

impl Relation {
    fn holds(self, a: u128, b: u128) -> bool {
        match self {
            Relation::Lt => a < b,
            Relation::Le => a <= b,
            Relation::Gt => a > b,
            Relation::Ge => a >= b,
            Relation::Eq => a == b,
            Relation::Ne => a != b,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
            Relation::Eq => "=",
            Relation::Ne => "!=",
        }
    }
}

impl PredicateExpr {
    pub fn eval(&self, x: u64) -> bool {
        match self {
            PredicateExpr::True => true,
            PredicateExpr::False => false,
            PredicateExpr::Compare(rel, a, b) => rel.holds(a.eval(x), b.eval(x)),
            PredicateExpr::Not(p) => !p.eval(x),
            PredicateExpr::And(p, q) => p.eval(x) && q.eval(x),
            PredicateExpr::Or(p, q) => p.eval(x) || q.eval(x),
        }
    }
}

impl FromStr for PredicateExpr {
    type Err = PredicateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens = tokenize(s)?;
        let mut parser = Parser {
            tokens,
            pos: 0,
            end: s.len(),
        };
        let pred = parser.pred()?;
        if parser.pos < parser.tokens.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(pred)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Num(u64),
    Sym(&'static str),
}

const SYMBOLS: &[(&str, &str)] = &[
    ("<=", "<="),
    (">=", ">="),
    ("==", "="),
    ("!=", "!="),
    ("&&", "and"),
    ("||", "or"),
    ("≤", "<="),
    ("≥", ">="),
    ("≠", "!="),
    ("<", "<"),
    (">", ">"),
    ("=", "="),
    ("!", "not"),
    ("¬", "not"),
    ("+", "+"),
    ("*", "*"),
    ("(", "("),
    (")", ")"),
];

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, PredicateError> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let rest = &s[i..];
        let c = rest.chars().next().expect("nonempty");
        if c.is_whitespace() {
            i += c.len_utf8();
        } else if c.is_ascii_digit() {
            let len = rest
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(rest.len());
            let n = rest[..len].parse().map_err(|_| PredicateError {
                pos: i,
                message: "numeral too large".into(),
            })?;
            out.push((i, Tok::Num(n)));
            i += len;
        } else if c.is_ascii_alphabetic() {
            let len = rest
                .find(|c: char| !c.is_ascii_alphanumeric() && c != '_')
                .unwrap_or(rest.len());
            out.push((i, Tok::Word(rest[..len].to_string())));
            i += len;
        } else if let Some((lit, sym)) = SYMBOLS.iter().find(|(lit, _)| rest.starts_with(lit)) {
            out.push((i, Tok::Sym(sym)));
            i += lit.len();
        } else {
            return Err(PredicateError {
                pos: i,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn error(&self, message: &str) -> PredicateError {
        PredicateError {
            pos: self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p),
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn eat_sym(&mut self, sym: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(s)) if *s == sym) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_keyword(&mut self, word: &str) -> bool {
        let hit = match self.peek() {
            Some(Tok::Word(w)) => w == word,
            Some(Tok::Sym(s)) => *s == word,
            _ => false,
        };
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn pred(&mut self) -> Result<PredicateExpr, PredicateError> {
        let mut acc = self.conj()?;
        while self.eat_keyword("or") {
            acc = PredicateExpr::Or(Box::new(acc), Box::new(self.conj()?));
        }
        Ok(acc)
    }

    fn conj(&mut self) -> Result<PredicateExpr, PredicateError> {
        let mut acc = self.neg()?;
        while self.eat_keyword("and") {
            acc = PredicateExpr::And(Box::new(acc), Box::new(self.neg()?));
        }
        Ok(acc)
    }

    fn neg(&mut self) -> Result<PredicateExpr, PredicateError> {
        if self.eat_keyword("not") {
            return Ok(PredicateExpr::Not(Box::new(self.neg()?)));
        }
        if self.eat_keyword("true") {
            return Ok(PredicateExpr::True);
        }
        if self.eat_keyword("false") {
            return Ok(PredicateExpr::False);
        }
        if matches!(self.peek(), Some(Tok::Sym("("))) {
            // A parenthesis may open either a predicate or an arithmetic term.
            let start = self.pos;
            self.pos += 1;
            if let Ok(inner) = self.pred() {
                if self.eat_sym(")") {
                    return Ok(inner);
                }
            }
            self.pos = start;
        }
        self.cmp()
    }

    fn cmp(&mut self) -> Result<PredicateExpr, PredicateError> {
        let lhs = self.arith()?;
        let rel = match self.peek() {
            Some(Tok::Sym("<")) => Relation::Lt,
            Some(Tok::Sym("<=")) => Relation::Le,
            Some(Tok::Sym(">")) => Relation::Gt,
            Some(Tok::Sym(">=")) => Relation::Ge,
            Some(Tok::Sym("=")) => Relation::Eq,
            Some(Tok::Sym("!=")) => Relation::Ne,
            _ => return Err(self.error("expected a comparison operator")),
        };
        self.pos += 1;
        let rhs = self.arith()?;
        Ok(PredicateExpr::Compare(rel, lhs, rhs))
    }

    fn arith(&mut self) -> Result<Arith, PredicateError> {
        let mut acc = self.term()?;
        while self.eat_sym("+") {
            acc = Arith::Add(Box::new(acc), Box::new(self.term()?));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Arith, PredicateError> {
        let mut acc = self.factor()?;
        while self.eat_sym("*") {
            acc = Arith::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Arith, PredicateError> {
        match self.peek().cloned() {
            Some(Tok::Word(w)) if w == "x" => {
                self.pos += 1;
                Ok(Arith::Var)
            }
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Arith::Const(n))
            }
            Some(Tok::Sym("(")) => {
                self.pos += 1;
                let inner = self.arith()?;
                if !self.eat_sym(")") {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            _ => Err(self.error("expected 'x', a numeral or '('")),
        }
    }
}

impl fmt::Display for Arith {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arith::Var => f.write_str("x"),
            Arith::Const(c) => write!(f, "{c}"),
            Arith::Add(a, b) => write!(f, "{a} + {b}"),
            Arith::Mul(a, b) => {
                let paren = |t: &Arith| matches!(t, Arith::Add(..));
                match (paren(a), paren(b)) {
                    (false, false) => write!(f, "{a}*{b}"),
                    (true, false) => write!(f, "({a})*{b}"),
                    (false, true) => write!(f, "{a}*({b})"),
                    (true, true) => write!(f, "({a})*({b})"),
                }
            }
        }
    }
}

impl PredicateExpr {
    fn rank(&self) -> u8 {
        match self {
            PredicateExpr::Or(..) => 0,
            PredicateExpr::And(..) => 1,
            _ => 2,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min_rank: u8) -> fmt::Result {
        if self.rank() < min_rank {
            f.write_str("(")?;
            self.fmt_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            PredicateExpr::True => f.write_str("true"),
            PredicateExpr::False => f.write_str("false"),
            PredicateExpr::Compare(rel, a, b) => write!(f, "{a} {} {b}", rel.symbol()),
            PredicateExpr::Not(p) => {
                f.write_str("not ")?;
                p.fmt_at(f, 2)
            }
            PredicateExpr::And(p, q) => {
                p.fmt_at(f, 1)?;
                f.write_str(" and ")?;
                q.fmt_at(f, 2)
            }
            PredicateExpr::Or(p, q) => {
                p.fmt_at(f, 0)?;
                f.write_str(" or ")?;
                q.fmt_at(f, 1)
            }
        }
    }
}

impl fmt::Display for PredicateExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pred(s: &str) -> PredicateExpr {
        s.parse().unwrap()
    }

    #[test]
    fn evaluates() {
        assert!(pred("true").eval(3));
        let p = pred("x != 7");
        assert!(p.eval(6) && !p.eval(7) && p.eval(8));
        let q = pred("x*x <= 10000 or x != 50");
        assert!((0..300).all(|x| q.eval(x)));
        let r = pred("not (x = 3 or x = 5) and x < 10");
        assert_eq!(
            (0..12).filter(|&x| r.eval(x)).collect::<Vec<_>>(),
            [0, 1, 2, 4, 6, 7, 8, 9]
        );
        assert!(pred("(x + 1) * 2 = 8").eval(3));
        assert!(pred("x ≠ 2 && !(x ≥ 9)").eval(4));
        assert!(pred("x*18446744073709551615*18446744073709551615 > 0").eval(1));
    }

    #[test]
    fn precedence() {
        // and binds tighter than or
        let p = pred("x = 1 or x = 2 and x = 3");
        assert!(p.eval(1));
        assert_eq!(p.to_string(), "x = 1 or x = 2 and x = 3");
        assert_eq!(
            pred("(x = 1 or x = 2) and x = 3").to_string(),
            "(x = 1 or x = 2) and x = 3"
        );
        assert_eq!(pred("x*(x+1) == 6").to_string(), "x*(x + 1) = 6");
    }

    #[test]
    fn printing_round_trips() {
        for s in [
            "x != 7",
            "not x < 3 or true",
            "(x + 2)*3 >= 9 and not (false or x = 0)",
        ] {
            let p = pred(s);
            assert_eq!(pred(&p.to_string()), p, "{s}");
        }
    }

    #[test]
    fn syntax_errors() {
        for bad in [
            "",
            "x",
            "x <",
            "y = 1",
            "x = 1 or",
            "(x = 1",
            "x = 1)",
            "x ^ 2 = 4",
            "99999999999999999999999 = x",
        ] {
            assert!(bad.parse::<PredicateExpr>().is_err(), "{bad:?}");
        }
        assert_eq!("x = 1 )".parse::<PredicateExpr>().unwrap_err().pos, 6);
    }
}
