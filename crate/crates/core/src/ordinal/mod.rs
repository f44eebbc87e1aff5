//! Ordinals below Γ₀ in Veblen normal form.
//!
//! An [`Ordinal`] is a non-increasing sum of atoms `φ(a, b)`. Runs of equal
//! atoms are stored once with a multiplicity, so the natural number `n` is the
//! atom `φ(0, 0)` repeated `n` times without allocating `n` entries.
//!
//! Every constructor normalizes eagerly. Two values denote the same ordinal
//! exactly when they are structurally equal, which is what makes the derived
//! `PartialEq`/`Hash` agree with the hand-written `Ord`.

mod enumerate;
mod format;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

pub use enumerate::{enumerate_terms, DEFAULT_ENUMERATION_CAP};
pub use parse::{parse_ordinal, parse_ordinal_with, ParseOptions, DEFAULT_NUMERAL_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrdinalError {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("numeral at {pos} exceeds the limit {limit}")]
    NumeralOverflow { pos: usize, limit: u64 },
    #[error("coefficient overflow")]
    CoefficientOverflow,
    #[error("enumeration size {requested} exceeds the cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

/// A single Veblen atom `φ(index, arg)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Atom {
    index: Ordinal,
    arg: Ordinal,
}

/// An ordinal below Γ₀ in canonical Veblen normal form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    // Strictly decreasing atoms with multiplicities >= 1. Empty means zero.
    terms: Arc<[(Atom, u64)]>,
}

impl Atom {
    pub fn index(&self) -> &Ordinal {
        &self.index
    }

    pub fn arg(&self) -> &Ordinal {
        &self.arg
    }

    fn is_one(&self) -> bool {
        self.index.is_zero() && self.arg.is_zero()
    }

    /// Number of atoms in this atom's syntax tree, itself included.
    pub fn node_count(&self) -> u64 {
        1 + self.index.node_count() + self.arg.node_count()
    }
}

impl Ordinal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::nat(1)
    }

    pub fn omega() -> Self {
        Self::veblen(&Self::zero(), &Self::one())
    }

    pub fn epsilon_zero() -> Self {
        Self::veblen(&Self::one(), &Self::zero())
    }

    pub fn nat(n: u64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let one = Atom {
            index: Self::zero(),
            arg: Self::zero(),
        };
        Self::from_terms(vec![(one, n)])
    }

    fn from_terms(terms: Vec<(Atom, u64)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, n)| *n > 0));
        Self {
            terms: terms.into(),
        }
    }

    fn from_atom(atom: Atom) -> Self {
        Self::from_terms(vec![(atom, 1)])
    }

    /// Builds the sum of a non-increasing sequence of atoms.
    ///
    /// Returns `None` when the atoms are not in non-increasing order.
    pub fn from_atoms<I: IntoIterator<Item = Atom>>(atoms: I) -> Option<Self> {
        let mut terms: Vec<(Atom, u64)> = Vec::new();
        for atom in atoms {
            match terms.last_mut() {
                Some((last, n)) if *last == atom => *n += 1,
                Some((last, _)) if *last < atom => return None,
                _ => terms.push((atom, 1)),
            }
        }
        Some(Self::from_terms(terms))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Atoms with their multiplicities, largest first.
    pub fn terms(&self) -> &[(Atom, u64)] {
        &self.terms
    }

    /// Atoms in order, each repeated according to its multiplicity.
    pub fn components(&self) -> impl Iterator<Item = &Atom> + '_ {
        self.terms
            .iter()
            .flat_map(|(a, n)| std::iter::repeat_n(a, *n as usize))
    }

    pub fn leading_atom(&self) -> Option<&Atom> {
        self.terms.first().map(|(a, _)| a)
    }

    /// The atom when `self` is a single atom with multiplicity one.
    pub fn as_atom(&self) -> Option<&Atom> {
        match &*self.terms {
            [(atom, 1)] => Some(atom),
            _ => None,
        }
    }

    /// The value as a natural number, if it is finite.
    pub fn as_nat(&self) -> Option<u64> {
        match &*self.terms {
            [] => Some(0),
            [(atom, n)] if atom.is_one() => Some(*n),
            _ => None,
        }
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|(a, _)| a.is_one())
    }

    /// Total number of atoms in the syntax tree, counting multiplicities.
    pub fn node_count(&self) -> u64 {
        self.terms
            .iter()
            .map(|(a, n)| a.node_count().saturating_mul(*n))
            .fold(0u64, u64::saturating_add)
    }

    /// Ordinal sum.
    ///
    /// Panics if a coefficient overflows `u64`; see [`Ordinal::checked_add`].
    pub fn add(&self, rhs: &Ordinal) -> Ordinal {
        self.checked_add(rhs).expect("ordinal coefficient overflow")
    }

    pub fn checked_add(&self, rhs: &Ordinal) -> Option<Ordinal> {
        let Some((lead, lead_count)) = rhs.terms.first() else {
            return Some(self.clone());
        };
        // Everything in `self` below the leading atom of `rhs` is absorbed.
        let kept = self.terms.iter().take_while(|(a, _)| a >= lead).count();
        let mut out: Vec<(Atom, u64)> = self.terms[..kept].to_vec();
        let mut rest = rhs.terms.iter();
        if let Some((last, n)) = out.last_mut() {
            if last == lead {
                *n = n.checked_add(*lead_count)?;
                rest.next();
            }
        }
        out.extend(rest.cloned());
        Some(Ordinal::from_terms(out))
    }

    pub fn successor(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// `self · n` for a natural number `n`.
    ///
    /// Panics if a coefficient overflows `u64`; see [`Ordinal::checked_mul_nat`].
    pub fn mul_nat(&self, n: u64) -> Ordinal {
        self.checked_mul_nat(n)
            .expect("ordinal coefficient overflow")
    }

    pub fn checked_mul_nat(&self, n: u64) -> Option<Ordinal> {
        if n == 0 || self.is_zero() {
            return Some(Ordinal::zero());
        }
        // (L·k + r)·n = L·(k·n) + r, since each copy of r is absorbed by the next L.
        let mut terms = self.terms.to_vec();
        terms[0].1 = terms[0].1.checked_mul(n)?;
        Some(Ordinal::from_terms(terms))
    }

    /// `φ_index(arg)` in canonical form.
    pub fn veblen(index: &Ordinal, arg: &Ordinal) -> Ordinal {
        if let Some(inner) = arg.as_atom() {
            if inner.index > *index {
                // `arg` is already a fixed point of φ_index.
                return arg.clone();
            }
        }
        Ordinal::from_atom(Atom {
            index: index.clone(),
            arg: arg.clone(),
        })
    }

    /// `ω^self`.
    pub fn omega_pow(&self) -> Ordinal {
        Ordinal::veblen(&Ordinal::zero(), self)
    }

    /// `ω_m(self)`: `m`-fold iteration of `x ↦ ω^x`.
    pub fn iter_omega(&self, m: u32) -> Ordinal {
        let mut x = self.clone();
        for _ in 0..m {
            let next = x.omega_pow();
            if next == x {
                break;
            }
            x = next;
        }
        x
    }

    /// If `self` lies in the range of `φ_index`, the argument that produces it.
    pub fn veblen_preimage(&self, index: &Ordinal) -> Option<Ordinal> {
        let atom = self.as_atom()?;
        match atom.index.cmp(index) {
            Ordering::Less => None,
            Ordering::Equal => Some(atom.arg.clone()),
            Ordering::Greater => Some(self.clone()),
        }
    }

    pub fn is_veblen_value(&self, index: &Ordinal) -> bool {
        self.veblen_preimage(index).is_some()
    }

    /// The least value of `φ_index` strictly above `self`.
    pub fn next_phi_value(&self, index: &Ordinal) -> Ordinal {
        let first = Ordinal::veblen(index, &Ordinal::zero());
        if *self < first {
            return first;
        }
        let lead = self.leading_atom().expect("nonzero above φ(a,0)");
        if lead.index >= *index {
            // The leading atom is φ_index(b0); every φ_index value above it is
            // at least φ_index(b0 + 1), and that one exceeds any multiple of it.
            let b0 = if lead.index > *index {
                Ordinal::from_atom(lead.clone())
            } else {
                lead.arg.clone()
            };
            Ordinal::veblen(index, &b0.successor())
        } else {
            // lead = φ_c(d) with c < index. A φ_index value is a fixed point of
            // φ_c, so it exceeds `self` exactly when it exceeds `d`.
            lead.arg.next_phi_value(index)
        }
    }

    /// The `gamma`-th value of `φ_index` above `self`, counting from zero.
    pub fn phi_plus_iter(&self, index: &Ordinal, gamma: &Ordinal) -> Ordinal {
        let first = self.next_phi_value(index);
        let mu = first
            .veblen_preimage(index)
            .expect("next_phi_value returns a φ value");
        Ordinal::veblen(index, &mu.add(gamma))
    }
}

fn cmp_with_atom(x: &Ordinal, atom: &Atom) -> Ordering {
    match x.terms.first() {
        None => Ordering::Less,
        Some((lead, n)) => match lead.cmp(atom) {
            Ordering::Equal if *n == 1 && x.terms.len() == 1 => Ordering::Equal,
            Ordering::Equal => Ordering::Greater,
            other => other,
        },
    }
}

impl Ord for Atom {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.index.cmp(&other.index) {
            Ordering::Equal => self.arg.cmp(&other.arg),
            // φ_a(b) < φ_c(d) with a < c iff b < φ_c(d).
            Ordering::Less => match cmp_with_atom(&self.arg, other) {
                Ordering::Less => Ordering::Less,
                _ => Ordering::Greater,
            },
            Ordering::Greater => match cmp_with_atom(&other.arg, self) {
                Ordering::Less => Ordering::Greater,
                _ => Ordering::Less,
            },
        }
    }
}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for ((a, m), (b, n)) in self.terms.iter().zip(other.terms.iter()) {
            match a.cmp(b).then(m.cmp(n)) {
                Ordering::Equal => continue,
                unequal => return unequal,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::nat(n)
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ordinal({self})")
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "φ({}, {})", self.index, self.arg)
    }
}
