use std::sync::OnceLock;

use super::rules::{RuleSet, Transform};
use super::{TheoryError, TheoryExpr};
use crate::ordinal::Ordinal;
use crate::worm::Worm;

const SHIPPED_RULES: &str = include_str!("../../data/rules.txt");

/// Name recorded in a reduction trace when a worm-shaped theory is evaluated
/// through the worm ordinal.
pub const WORM_ROUTE: &str = "worm-ordinal";

/// The result of a reduction together with the names of the rules applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub theory: TheoryExpr,
    pub steps: Vec<String>,
}

/// Reduces theory expressions using a loaded [`RuleSet`].
#[derive(Debug, Clone)]
pub struct Engine {
    rules: RuleSet,
}

impl Engine {
    pub fn new(rules: RuleSet) -> Self {
        Self { rules }
    }

    pub fn shipped() -> &'static Engine {
        static ENGINE: OnceLock<Engine> = OnceLock::new();
        ENGINE.get_or_init(|| {
            Engine::new(RuleSet::parse(SHIPPED_RULES).expect("shipped rules parse"))
        })
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    /// Rewrites `t` to a single `Reflect(k, γ, base)` (or the bare base).
    pub fn reduce(&self, t: &TheoryExpr, k: u32) -> Result<Reduction, TheoryError> {
        if k == 0 {
            return Err(TheoryError::ZeroLevel);
        }
        let mut steps = Vec::new();
        let merged = self.concatenate(t, &mut steps)?;
        let theory = match merged.base() {
            TheoryExpr::Pa => self.reduce_pa(merged, k)?,
            _ => self.reduce_ea(t, merged, k, &mut steps)?,
        };
        Ok(Reduction { theory, steps })
    }

    pub fn reduce_to_level(&self, t: &TheoryExpr, k: u32) -> Result<TheoryExpr, TheoryError> {
        self.reduce(t, k).map(|r| r.theory)
    }

    /// `|t|_Π_k`: the iteration count of the level-`k` reduct over EA⁺, or
    /// the catalog value for PA-based theories.
    pub fn pi_ordinal(&self, t: &TheoryExpr, k: u32) -> Result<Ordinal, TheoryError> {
        let reduced = self.reduce_to_level(t, k)?;
        if reduced.base() == &TheoryExpr::Pa {
            self.rules
                .find(Transform::PaConProduct, &reduced)
                .ok_or_else(|| {
                    TheoryError::Unsupported(format!(
                        "no rule gives the Pi_1 ordinal of {reduced}; only finite iterates over PA are known"
                    ))
                })?;
            let too_large =
                || TheoryError::Unsupported(format!("iteration count of {reduced} too large"));
            let n = reduced
                .as_reflection()
                .map_or(Some(0), |r| r.iterations().as_nat())
                .ok_or_else(|| {
                    TheoryError::Unsupported(format!("{reduced}: transfinite iterates over PA"))
                })?;
            let factor = n.checked_add(1).ok_or_else(too_large)?;
            return Ordinal::epsilon_zero()
                .checked_mul_nat(factor)
                .ok_or_else(too_large);
        }
        Ok(reduced
            .as_reflection()
            .map(|r| r.iterations().clone())
            .unwrap_or_default())
    }

    // Merges adjacent layers of equal level, innermost first.
    fn concatenate(
        &self,
        t: &TheoryExpr,
        steps: &mut Vec<String>,
    ) -> Result<TheoryExpr, TheoryError> {
        let TheoryExpr::Reflect(r) = t else {
            return Ok(t.clone());
        };
        let over = self.concatenate(r.over(), steps)?;
        let candidate = TheoryExpr::reflect(r.level(), r.iterations().clone(), over)?;
        let inner = match candidate.as_reflection().map(|c| c.over()) {
            Some(TheoryExpr::Reflect(inner)) if inner.level() == r.level() => inner.clone(),
            _ => return Ok(candidate),
        };
        let Some((rule, _)) = self.rules.find(Transform::Concatenation, &candidate) else {
            return Ok(candidate);
        };
        steps.push(rule.name.clone());
        TheoryExpr::reflect(
            r.level(),
            inner.iterations().add(r.iterations()),
            inner.over().clone(),
        )
    }

    fn reduce_ea(
        &self,
        original: &TheoryExpr,
        merged: TheoryExpr,
        k: u32,
        steps: &mut Vec<String>,
    ) -> Result<TheoryExpr, TheoryError> {
        let layers = merged.layers();
        match layers.len() {
            0 => Ok(TheoryExpr::EaPlus),
            1 => {
                let outermost = layers[0].0;
                if k > outermost {
                    return Err(TheoryError::LevelTooHigh {
                        requested: k,
                        outermost,
                    });
                }
                let mut current = merged;
                while let Some(r) = current.as_reflection().filter(|r| r.level() > k) {
                    let (rule, _) = self
                        .rules
                        .find(Transform::LevelDropOmegaPower, &current)
                        .ok_or_else(|| {
                            TheoryError::Unsupported(format!(
                                "no level-drop rule matches {current}"
                            ))
                        })?;
                    steps.push(rule.name.clone());
                    current = TheoryExpr::reflect(
                        r.level() - 1,
                        r.iterations().omega_pow(),
                        r.over().clone(),
                    )?;
                }
                Ok(current)
            }
            _ => {
                let worm = worm_of_theory(original).ok_or_else(|| {
                    TheoryError::Unsupported(format!(
                        "mixed-level nesting {original} is not worm-shaped"
                    ))
                })?;
                if k != 1 {
                    return Err(TheoryError::Unsupported(format!(
                        "mixed-level worm-shaped theories reduce only to level 1, not {k}"
                    )));
                }
                steps.push(WORM_ROUTE.to_string());
                TheoryExpr::con(worm.ordinal(), TheoryExpr::EaPlus)
            }
        }
    }

    fn reduce_pa(&self, merged: TheoryExpr, k: u32) -> Result<TheoryExpr, TheoryError> {
        if merged.layers().iter().any(|(level, _)| *level > 1) {
            return Err(TheoryError::Unsupported(format!(
                "{merged}: PA under higher-level reflection"
            )));
        }
        if merged.layers().len() > 1 {
            return Err(TheoryError::Unsupported(format!(
                "{merged}: unmerged layers over PA"
            )));
        }
        if k != 1 {
            return Err(TheoryError::Unsupported(format!(
                "PA-based theories are only analysed at level 1, not {k}"
            )));
        }
        Ok(merged)
    }
}

/// The worm whose theory is `t`, when `t` consists of single reflections over EA⁺.
pub fn worm_of_theory(t: &TheoryExpr) -> Option<Worm> {
    if t.base() != &TheoryExpr::EaPlus {
        return None;
    }
    t.layers()
        .into_iter()
        .map(|(level, iterations)| (*iterations == Ordinal::one()).then_some(level - 1))
        .collect::<Option<Vec<_>>>()
        .map(Worm::new)
}

pub fn reduce_to_level(t: &TheoryExpr, k: u32) -> Result<TheoryExpr, TheoryError> {
    Engine::shipped().reduce_to_level(t, k)
}

pub fn pi_ordinal(t: &TheoryExpr, k: u32) -> Result<Ordinal, TheoryError> {
    Engine::shipped().pi_ordinal(t, k)
}

/// The `α`-th Turing progression stage over `t`: `T_α = Reflect(1, α, T)`,
/// with `(T_β)_α = T_(β+α)`.
pub fn progression_stage(t: &TheoryExpr, alpha: &Ordinal) -> Result<TheoryExpr, TheoryError> {
    if alpha.is_zero() {
        return Err(TheoryError::ZeroIterations);
    }
    match t.as_reflection() {
        Some(r) if r.level() == 1 => TheoryExpr::con(r.iterations().add(alpha), r.over().clone()),
        _ => TheoryExpr::con(alpha.clone(), t.clone()),
    }
}

/// `φ⁺_{1+α}(β)`: the least value of `φ_{1+α}` strictly above `β`.
pub fn omega_model_dilator(alpha: &Ordinal, beta: &Ordinal) -> Ordinal {
    beta.next_phi_value(&Ordinal::one().add(alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::parse_ordinal;

    fn theory(s: &str) -> TheoryExpr {
        s.parse().unwrap()
    }

    fn ord(s: &str) -> Ordinal {
        parse_ordinal(s).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(
            reduce_to_level(&theory("(rfn 2 1 EA+)"), 1).unwrap(),
            theory("(con w EA+)")
        );
        let t = theory("(con w^w+3 EA+)");
        assert_eq!(reduce_to_level(&t, 1).unwrap(), t);
        assert_eq!(
            reduce_to_level(&theory("(rfn 2 2 EA+)"), 1).unwrap(),
            theory("(con w^2 EA+)")
        );
        assert_eq!(
            reduce_to_level(&theory("(rfn 3 2 EA+)"), 1).unwrap(),
            theory("(con w^w^2 EA+)")
        );
        assert_eq!(
            reduce_to_level(&TheoryExpr::EaPlus, 3).unwrap(),
            TheoryExpr::EaPlus
        );
    }

    #[test]
    fn reduction_traces_rules() {
        let r = Engine::shipped()
            .reduce(&theory("(rfn 3 1 (rfn 3 w EA+))"), 1)
            .unwrap();
        assert_eq!(r.theory, theory("(con w^w^(w+1) EA+)"));
        assert_eq!(
            r.steps,
            [
                "iteration-concatenation",
                "schmerl-level-drop",
                "schmerl-level-drop"
            ]
        );
        let r = Engine::shipped()
            .reduce(&theory("(rfn 2 1 (con 1 EA+))"), 1)
            .unwrap();
        assert_eq!(r.steps, [WORM_ROUTE]);
        assert_eq!(r.theory, theory("(con w EA+)"));
    }

    #[test]
    fn reduce_errors() {
        assert_eq!(
            reduce_to_level(&theory("(con 3 EA+)"), 2),
            Err(TheoryError::LevelTooHigh {
                requested: 2,
                outermost: 1
            })
        );
        assert!(matches!(
            reduce_to_level(&theory("(rfn 2 w (con 1 EA+))"), 1),
            Err(TheoryError::Unsupported(_))
        ));
        assert!(matches!(
            reduce_to_level(&theory("(rfn 2 1 (con 1 EA+))"), 2),
            Err(TheoryError::Unsupported(_))
        ));
        assert!(matches!(
            reduce_to_level(&theory("(rfn 2 1 PA)"), 1),
            Err(TheoryError::Unsupported(_))
        ));
        assert_eq!(
            reduce_to_level(&TheoryExpr::EaPlus, 0),
            Err(TheoryError::ZeroLevel)
        );
    }

    #[test]
    fn pi_ordinal_examples() {
        assert_eq!(
            pi_ordinal(&TheoryExpr::Pa, 1).unwrap(),
            Ordinal::epsilon_zero()
        );
        assert_eq!(pi_ordinal(&theory("(con 1 PA)"), 1).unwrap(), ord("e0+e0"));
        assert_eq!(
            pi_ordinal(&theory("(con 2 (con 3 PA))"), 1).unwrap(),
            ord("e0*6")
        );
        let alpha = ord("w^(w+1)+2");
        let t = TheoryExpr::con(alpha.clone(), TheoryExpr::EaPlus).unwrap();
        assert_eq!(pi_ordinal(&t, 1).unwrap(), alpha);
        assert_eq!(
            pi_ordinal(&theory("(rfn 2 1 EA+)"), 2).unwrap(),
            Ordinal::one()
        );
        assert_eq!(pi_ordinal(&TheoryExpr::EaPlus, 1).unwrap(), Ordinal::zero());
    }

    #[test]
    fn pi_ordinal_refuses_unknown_pa_shapes() {
        assert!(matches!(
            pi_ordinal(&theory("(con w PA)"), 1),
            Err(TheoryError::Unsupported(_))
        ));
        assert!(matches!(
            pi_ordinal(&TheoryExpr::Pa, 2),
            Err(TheoryError::Unsupported(_))
        ));
    }

    #[test]
    fn rules_gate_reductions() {
        let bare = Engine::new(RuleSet::default());
        assert!(matches!(
            bare.reduce_to_level(&theory("(rfn 2 1 EA+)"), 1),
            Err(TheoryError::Unsupported(_))
        ));
        assert!(matches!(
            bare.pi_ordinal(&TheoryExpr::Pa, 1),
            Err(TheoryError::Unsupported(_))
        ));
        // Without the concatenation rule, equal-level layers stay separate.
        assert!(bare
            .reduce_to_level(&theory("(con 2 (con 3 EA+))"), 1)
            .is_err());
    }

    #[test]
    fn progression_examples() {
        assert_eq!(
            progression_stage(&TheoryExpr::EaPlus, &Ordinal::one()).unwrap(),
            theory("(con 1 EA+)")
        );
        assert_eq!(
            progression_stage(&theory("(con w EA+)"), &ord("w^2")).unwrap(),
            theory("(con w^2 EA+)")
        );
        assert_eq!(
            progression_stage(&theory("(con w^2 EA+)"), &ord("w")).unwrap(),
            theory("(con w^2+w EA+)")
        );
        assert_eq!(
            progression_stage(&TheoryExpr::Pa, &Ordinal::omega()).unwrap(),
            theory("(con w PA)")
        );
        assert_eq!(
            progression_stage(&theory("(rfn 2 1 EA+)"), &Ordinal::one()).unwrap(),
            theory("(con 1 (rfn 2 1 EA+))")
        );
        assert_eq!(
            progression_stage(&TheoryExpr::Pa, &Ordinal::zero()),
            Err(TheoryError::ZeroIterations)
        );
    }

    #[test]
    fn dilator_examples() {
        let zero = Ordinal::zero();
        assert_eq!(omega_model_dilator(&zero, &zero), Ordinal::epsilon_zero());
        assert_eq!(
            omega_model_dilator(&zero, &Ordinal::epsilon_zero()),
            ord("phi(1,1)")
        );
        assert_eq!(
            omega_model_dilator(&Ordinal::omega(), &zero),
            ord("phi(w,0)")
        );
        assert_eq!(
            omega_model_dilator(&Ordinal::one(), &ord("e0")),
            ord("phi(2,0)")
        );
    }
}
