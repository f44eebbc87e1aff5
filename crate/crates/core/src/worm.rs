//! Worms of the closed fragment of GLP.
//!
//! A worm `⟨n₁ n₂ … n_k⟩` stands for `⟨n₁⟩⟨n₂⟩…⟨n_k⟩⊤`, the leftmost letter
//! being the outermost modality. Worms are ordered by the ordinal `o(w) < ε₀`
//! they denote.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::ordinal::Ordinal;
use crate::theory::TheoryExpr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WormError {
    #[error("invalid worm letter {token:?}")]
    Syntax { token: String },
    #[error("cannot drop a worm containing the letter 0")]
    DropZero,
    #[error("letter overflow while lifting")]
    LetterOverflow,
    #[error("{0} is not below e0")]
    NotBelowEpsilonZero(Ordinal),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Worm {
    letters: Vec<u32>,
}

impl Worm {
    /// The empty worm ⊤.
    pub fn top() -> Self {
        Self::default()
    }

    pub fn new(letters: Vec<u32>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn is_top(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn lift(&self, k: u32) -> Result<Worm, WormError> {
        self.letters
            .iter()
            .map(|n| n.checked_add(k).ok_or(WormError::LetterOverflow))
            .collect::<Result<_, _>>()
            .map(Worm::new)
    }

    pub fn drop(&self) -> Result<Worm, WormError> {
        self.lower(1)
    }

    fn lower(&self, k: u32) -> Result<Worm, WormError> {
        self.letters
            .iter()
            .map(|n| n.checked_sub(k).ok_or(WormError::DropZero))
            .collect::<Result<_, _>>()
            .map(Worm::new)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Worm) -> Worm {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Worm::new(letters)
    }

    /// The ordinal `o(w)`.
    ///
    /// Splitting at the leftmost 0, `o(H·0·T) = o(T) + ω^o(drop H)`; a
    /// nonempty 0-free worm gets `ω^o(drop w)`.
    pub fn ordinal(&self) -> Ordinal {
        match self.letters.iter().position(|&n| n == 0) {
            Some(split) => {
                let head = Worm::new(self.letters[..split].to_vec());
                let tail = Worm::new(self.letters[split + 1..].to_vec());
                tail.ordinal().add(&head.dropped_ordinal().omega_pow())
            }
            None if self.is_top() => Ordinal::zero(),
            None => self.dropped_ordinal().omega_pow(),
        }
    }

    // o(drop w) for a 0-free worm. Lowering by the minimum letter m at once
    // gives o(drop w) = ω_{m-1}(o(w - m)) and keeps the recursion shallow.
    fn dropped_ordinal(&self) -> Ordinal {
        let Some(&min) = self.letters.iter().min() else {
            return Ordinal::zero();
        };
        debug_assert!(min > 0);
        let lowered = self.lower(min).expect("min letter");
        lowered.ordinal().iter_omega(min - 1)
    }

    /// The canonical worm with `o(w) = alpha`.
    ///
    /// A single power `ω^β` with `β > 0` maps to `lift(worm(β))`. Otherwise,
    /// for `alpha = ω^β₁ + … + ω^β_k`, the split is at the smallest term:
    /// `lift(worm(β_k)) · 0 · worm(ω^β₁ + … + ω^β_{k-1})`.
    pub fn of_ordinal(alpha: &Ordinal) -> Result<Worm, WormError> {
        if !below_epsilon_zero(alpha) {
            return Err(WormError::NotBelowEpsilonZero(alpha.clone()));
        }
        Ok(Self::of_ordinal_unchecked(alpha))
    }

    fn of_ordinal_unchecked(alpha: &Ordinal) -> Worm {
        let lift = |w: Worm| w.lift(1).expect("letters stay below the ordinal's depth");
        if let Some(atom) = alpha.as_atom() {
            if !atom.arg().is_zero() {
                return lift(Self::of_ordinal_unchecked(atom.arg()));
            }
        }
        let atoms: Vec<_> = alpha.components().cloned().collect();
        let Some((last, init)) = atoms.split_last() else {
            return Worm::top();
        };
        let rest = Ordinal::from_atoms(init.iter().cloned()).expect("prefix of normal form");
        let mut letters = lift(Self::of_ordinal_unchecked(last.arg())).letters;
        letters.push(0);
        letters.extend(Self::of_ordinal_unchecked(&rest).letters);
        Worm::new(letters)
    }

    /// Nested single reflections over EA⁺: `⟨n⟩·w ↦ Reflect(n+1, 1, theory(w))`.
    pub fn theory(&self) -> TheoryExpr {
        self.letters
            .iter()
            .rev()
            .fold(TheoryExpr::EaPlus, |over, &n| {
                TheoryExpr::reflect(n + 1, Ordinal::one(), over).expect("level >= 1, one iteration")
            })
    }

    pub fn compare(&self, other: &Worm) -> Ordering {
        self.ordinal().cmp(&other.ordinal())
    }
}

fn below_epsilon_zero(alpha: &Ordinal) -> bool {
    alpha
        .terms()
        .iter()
        .all(|(atom, _)| atom.index().is_zero() && below_epsilon_zero(atom.arg()))
}

impl fmt::Display for Worm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("T");
        }
        for (i, n) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

impl FromStr for Worm {
    type Err = WormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "T" || s == "⊤" {
            return Ok(Worm::top());
        }
        s.split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| WormError::Syntax {
                    token: tok.to_string(),
                })
            })
            .collect::<Result<_, _>>()
            .map(Worm::new)
    }
}
