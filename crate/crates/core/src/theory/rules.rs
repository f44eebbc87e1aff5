//! Declarative reduction rules.
//!
//! A rules file holds one rule per line:
//!
//! ```text
//! rule <name>: <pattern> => <transform> cite <text>
//! ```
//!
//! Patterns are theory expressions whose parts may be metavariables written
//! with a leading `?`: `?n` or `?n+1` for levels, `?a` or `?k:nat` for
//! iteration counts, `?T` for a whole theory. Repeated names must bind equal
//! values. Blank lines and lines starting with `#` are ignored.

use std::collections::HashMap;
use std::fmt;

use super::sexpr::Cursor;
use super::{TheoryError, TheoryExpr};
use crate::ordinal::{parse_ordinal, Ordinal};

/// The closed catalog of ordinal transforms a rule may name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transform {
    /// `Reflect(n+1, α, T)` to `Reflect(n, ω^α, T)`.
    LevelDropOmegaPower,
    /// `Reflect(n, α, Reflect(n, β, T))` to `Reflect(n, β+α, T)`.
    Concatenation,
    /// `|PA + Con^k(PA)|_Π₁ = ε₀·(1+k)` for finite `k`.
    PaConProduct,
}

impl Transform {
    pub fn tag(self) -> &'static str {
        match self {
            Transform::LevelDropOmegaPower => "level-drop-omega-power",
            Transform::Concatenation => "concatenation",
            Transform::PaConProduct => "pa-con-product",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        [
            Transform::LevelDropOmegaPower,
            Transform::Concatenation,
            Transform::PaConProduct,
        ]
        .into_iter()
        .find(|t| t.tag() == tag)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelPattern {
    Exact(u32),
    /// Matches `value + offset` and binds `name` to `value >= 1`.
    Var {
        name: String,
        offset: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrdinalPattern {
    Exact(Ordinal),
    Any(String),
    /// Matches natural numbers only.
    Finite(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pattern {
    EaPlus,
    Pa,
    Theory(String),
    Reflect {
        level: LevelPattern,
        iterations: OrdinalPattern,
        over: Box<Pattern>,
    },
}

/// Values bound by a successful match.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bindings {
    pub levels: HashMap<String, u32>,
    pub ordinals: HashMap<String, Ordinal>,
    pub theories: HashMap<String, TheoryExpr>,
}

fn bind<V: PartialEq>(map: &mut HashMap<String, V>, name: &str, value: V) -> bool {
    match map.get(name) {
        Some(existing) => *existing == value,
        None => {
            map.insert(name.to_string(), value);
            true
        }
    }
}

impl Pattern {
    pub fn matches(&self, expr: &TheoryExpr) -> Option<Bindings> {
        let mut bindings = Bindings::default();
        self.match_into(expr, &mut bindings).then_some(bindings)
    }

    fn match_into(&self, expr: &TheoryExpr, b: &mut Bindings) -> bool {
        match (self, expr) {
            (Pattern::EaPlus, TheoryExpr::EaPlus) | (Pattern::Pa, TheoryExpr::Pa) => true,
            (Pattern::Theory(name), _) => bind(&mut b.theories, name, expr.clone()),
            (
                Pattern::Reflect {
                    level,
                    iterations,
                    over,
                },
                TheoryExpr::Reflect(r),
            ) => {
                let level_ok = match level {
                    LevelPattern::Exact(n) => *n == r.level(),
                    LevelPattern::Var { name, offset } => match r.level().checked_sub(*offset) {
                        Some(v) if v >= 1 => bind(&mut b.levels, name, v),
                        _ => false,
                    },
                };
                let iterations_ok = match iterations {
                    OrdinalPattern::Exact(x) => x == r.iterations(),
                    OrdinalPattern::Any(name) => {
                        bind(&mut b.ordinals, name, r.iterations().clone())
                    }
                    OrdinalPattern::Finite(name) => {
                        r.iterations().as_nat().is_some()
                            && bind(&mut b.ordinals, name, r.iterations().clone())
                    }
                };
                level_ok && iterations_ok && over.match_into(r.over(), b)
            }
            _ => false,
        }
    }

    fn parse(cursor: &mut Cursor<'_>) -> Result<Pattern, TheoryError> {
        if cursor.peek() == Some('(') {
            cursor.expect_char('(')?;
            let level = match cursor.word()? {
                "rfn" => parse_level_pattern(cursor)?,
                "con" => LevelPattern::Exact(1),
                other => return Err(cursor.error(format!("unknown form {other:?}"))),
            };
            let iterations = parse_ordinal_pattern(cursor)?;
            let over = Pattern::parse(cursor)?;
            cursor.expect_char(')')?;
            return Ok(Pattern::Reflect {
                level,
                iterations,
                over: Box::new(over),
            });
        }
        match cursor.word()? {
            "EA+" => Ok(Pattern::EaPlus),
            "PA" => Ok(Pattern::Pa),
            var if var.len() > 1 && var.starts_with('?') => {
                Ok(Pattern::Theory(var[1..].to_string()))
            }
            other => Err(cursor.error(format!("invalid theory pattern {other:?}"))),
        }
    }
}

fn parse_level_pattern(cursor: &mut Cursor<'_>) -> Result<LevelPattern, TheoryError> {
    let word = cursor.word()?;
    if let Some(var) = word.strip_prefix('?') {
        let (name, offset) = match var.split_once('+') {
            Some((name, k)) => (
                name,
                k.parse()
                    .map_err(|_| cursor.error(format!("invalid level offset {k:?}")))?,
            ),
            None => (var, 0),
        };
        if name.is_empty() {
            return Err(cursor.error("empty level variable"));
        }
        return Ok(LevelPattern::Var {
            name: name.to_string(),
            offset,
        });
    }
    word.parse()
        .map(LevelPattern::Exact)
        .map_err(|_| cursor.error(format!("invalid level {word:?}")))
}

fn parse_ordinal_pattern(cursor: &mut Cursor<'_>) -> Result<OrdinalPattern, TheoryError> {
    let token = cursor.balanced()?;
    match token.strip_prefix('?') {
        Some(var) => match var.strip_suffix(":nat") {
            Some(name) if !name.is_empty() => Ok(OrdinalPattern::Finite(name.to_string())),
            None if !var.is_empty() => Ok(OrdinalPattern::Any(var.to_string())),
            _ => Err(cursor.error(format!("invalid ordinal variable {token:?}"))),
        },
        None => Ok(OrdinalPattern::Exact(parse_ordinal(token)?)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionRule {
    pub name: String,
    pub pattern: Pattern,
    pub target_level: LevelPattern,
    pub transform: Transform,
    pub citation: String,
}

impl ReductionRule {
    pub fn matches(&self, expr: &TheoryExpr) -> Option<Bindings> {
        self.pattern.matches(expr)
    }

    /// Parses one `rule <name>: <pattern> => <transform> cite <text>` line.
    pub fn parse(line: &str) -> Result<ReductionRule, String> {
        let body = line
            .trim()
            .strip_prefix("rule ")
            .ok_or("expected 'rule <name>: ...'")?;
        let (name, rest) = body.split_once(':').ok_or("missing ':' after rule name")?;
        let name = name.trim();
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(format!("invalid rule name {name:?}"));
        }
        let (pattern_text, rest) = rest.split_once("=>").ok_or("missing '=>'")?;
        let (transform_text, citation) =
            rest.split_once(" cite ").ok_or("missing 'cite <text>'")?;
        let citation = citation.trim();
        if citation.is_empty() {
            return Err("empty citation".into());
        }
        let transform = Transform::from_tag(transform_text.trim())
            .ok_or_else(|| format!("unknown transform {:?}", transform_text.trim()))?;

        let mut cursor = Cursor::new(pattern_text);
        let pattern = Pattern::parse(&mut cursor).map_err(|e| e.to_string())?;
        if !cursor.at_end() {
            return Err("trailing input after pattern".into());
        }
        let target_level = target_level(&pattern, transform)?;
        Ok(ReductionRule {
            name: name.to_string(),
            pattern,
            target_level,
            transform,
            citation: citation.to_string(),
        })
    }
}

// Checks that the pattern has the shape its transform rewrites and returns the
// level of the rewritten expression.
fn target_level(pattern: &Pattern, transform: Transform) -> Result<LevelPattern, String> {
    match (transform, pattern) {
        (
            Transform::LevelDropOmegaPower,
            Pattern::Reflect {
                level: LevelPattern::Var { name, offset },
                ..
            },
        ) if *offset >= 1 => Ok(LevelPattern::Var {
            name: name.clone(),
            offset: offset - 1,
        }),
        (
            Transform::LevelDropOmegaPower,
            Pattern::Reflect {
                level: LevelPattern::Exact(n),
                ..
            },
        ) if *n >= 2 => Ok(LevelPattern::Exact(n - 1)),
        (Transform::Concatenation, Pattern::Reflect { level, over, .. }) if matches!(&**over, Pattern::Reflect { level: inner, .. } if inner == level) => {
            Ok(level.clone())
        }
        (Transform::PaConProduct, Pattern::Pa) => Ok(LevelPattern::Exact(1)),
        (
            Transform::PaConProduct,
            Pattern::Reflect {
                level: LevelPattern::Exact(1),
                iterations: OrdinalPattern::Finite(_) | OrdinalPattern::Exact(_),
                over,
            },
        ) if **over == Pattern::Pa => Ok(LevelPattern::Exact(1)),
        _ => Err(format!(
            "pattern does not fit transform {}",
            transform.tag()
        )),
    }
}

/// An ordered, read-only collection of rules.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleSet {
    rules: Vec<ReductionRule>,
}

impl RuleSet {
    pub fn parse(text: &str) -> Result<RuleSet, TheoryError> {
        let mut rules: Vec<ReductionRule> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let rule = ReductionRule::parse(line).map_err(|message| TheoryError::DataFile {
                line: i + 1,
                message,
            })?;
            if rules.iter().any(|r| r.name == rule.name) {
                return Err(TheoryError::DataFile {
                    line: i + 1,
                    message: format!("duplicate rule {:?}", rule.name),
                });
            }
            rules.push(rule);
        }
        Ok(RuleSet { rules })
    }

    pub fn rules(&self) -> &[ReductionRule] {
        &self.rules
    }

    /// First rule with the given transform whose pattern matches `expr`.
    pub fn find(
        &self,
        transform: Transform,
        expr: &TheoryExpr,
    ) -> Option<(&ReductionRule, Bindings)> {
        self.rules
            .iter()
            .filter(|r| r.transform == transform)
            .find_map(|r| r.matches(expr).map(|b| (r, b)))
    }
}

impl fmt::Display for LevelPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelPattern::Exact(n) => write!(f, "{n}"),
            LevelPattern::Var { name, offset: 0 } => write!(f, "?{name}"),
            LevelPattern::Var { name, offset } => write!(f, "?{name}+{offset}"),
        }
    }
}

impl fmt::Display for OrdinalPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdinalPattern::Exact(x) => write!(f, "{x}"),
            OrdinalPattern::Any(name) => write!(f, "?{name}"),
            OrdinalPattern::Finite(name) => write!(f, "?{name}:nat"),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::EaPlus => f.write_str("EA+"),
            Pattern::Pa => f.write_str("PA"),
            Pattern::Theory(name) => write!(f, "?{name}"),
            Pattern::Reflect {
                level,
                iterations,
                over,
            } => write!(f, "(rfn {level} {iterations} {over})"),
        }
    }
}

impl fmt::Display for ReductionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rule {}: {} => {} cite {}",
            self.name,
            self.pattern,
            self.transform.tag(),
            self.citation
        )
    }
}
