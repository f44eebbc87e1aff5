//! Pools, generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeMap;

use ordlab::ordinal::enumerate_terms;
use ordlab::{Ordinal, Worm};
use rand::rngs::StdRng;
use rand::Rng;

pub fn pool(max_nodes: usize) -> Vec<Ordinal> {
    enumerate_terms(max_nodes, max_nodes).expect("pool within cap")
}

/// A random term built from raw syntax with nesting depth at most `depth`.
///
/// Sums are added in arbitrary order so absorption gets exercised.
pub fn random_term(rng: &mut StdRng, depth: u32) -> Ordinal {
    if depth == 0 || rng.gen_bool(0.2) {
        return Ordinal::nat(rng.gen_range(0..4));
    }
    let summands = rng.gen_range(1..=3);
    let mut acc = Ordinal::zero();
    for _ in 0..summands {
        let index = if rng.gen_bool(0.6) {
            Ordinal::zero()
        } else {
            random_term(rng, depth.min(2) - 1)
        };
        let arg = random_term(rng, depth - 1);
        acc = acc.add(&Ordinal::veblen(&index, &arg));
    }
    acc
}

/// All ordinals built from unrestricted raw syntax with at most `n` atoms:
/// sums in any order and φ applied to anything, normalized by the library's
/// constructors. Duplicates are removed.
pub fn raw_closure(n: usize) -> Vec<Ordinal> {
    // by_size[k]: values of raw trees with exactly k atoms.
    let mut by_size: Vec<Vec<Ordinal>> = vec![vec![Ordinal::zero()]];
    for k in 1..=n {
        let mut out = Vec::new();
        // A single atom φ(a, b) with |a| + |b| = k - 1.
        for i in 0..k {
            for a in &by_size[i] {
                for b in &by_size[k - 1 - i] {
                    out.push(Ordinal::veblen(a, b));
                }
            }
        }
        // A binary sum of two nonempty pieces.
        for i in 1..k {
            for a in &by_size[i] {
                for b in &by_size[k - i] {
                    out.push(a.add(b));
                }
            }
        }
        out.sort();
        out.dedup();
        by_size.push(out);
    }
    let mut all: Vec<Ordinal> = by_size.into_iter().flatten().collect();
    all.sort();
    all.dedup();
    all
}

/// Whether every atom anywhere in `x` has index 0, i.e. `x < ε₀`.
pub fn below_epsilon_zero(x: &Ordinal) -> bool {
    x.terms()
        .iter()
        .all(|(a, _)| a.index().is_zero() && below_epsilon_zero(a.arg()))
}

/// Coefficients of `x` as a polynomial in ω, if `x < ω^ω`.
pub fn cantor_coefficients(x: &Ordinal) -> Option<BTreeMap<u64, u64>> {
    let mut out = BTreeMap::new();
    for (atom, n) in x.terms() {
        if !atom.index().is_zero() {
            return None;
        }
        let exponent = atom.arg().as_nat()?;
        *out.entry(exponent).or_insert(0) += n;
    }
    Some(out)
}

/// Reverse-lexicographic comparison of coefficient vectors: the highest
/// exponent decides first.
pub fn compare_coefficients(a: &BTreeMap<u64, u64>, b: &BTreeMap<u64, u64>) -> Ordering {
    let top = a.keys().chain(b.keys()).max().copied().unwrap_or(0);
    for e in (0..=top).rev() {
        let ca = a.get(&e).copied().unwrap_or(0);
        let cb = b.get(&e).copied().unwrap_or(0);
        match ca.cmp(&cb) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Membership in the range of φ_a for a ∈ {0, 1}, decided by the defining
/// fixed-point equations rather than by inspecting atom indices.
pub fn in_phi_range(a: u64, t: &Ordinal) -> bool {
    match a {
        // Range of ω^x: the additively principal ordinals, i.e. nonzero
        // ordinals that are not a sum of two smaller ones.
        0 => !t.is_zero() && t.components().count() == 1,
        // Range of φ_1: the ε-numbers, ω^t = t.
        1 => Ordinal::veblen(&Ordinal::zero(), t) == *t && !t.is_zero(),
        _ => unimplemented!("only levels 0 and 1 have an oracle"),
    }
}

pub fn worms(max_len: usize, alphabet: u32) -> Vec<Worm> {
    let mut out = vec![Worm::top()];
    let mut layer = vec![Vec::<u32>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for letter in 0..alphabet {
                let mut v = w.clone();
                v.push(letter);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(Worm::new));
        layer = next;
    }
    out
}

/// o(w) by the split at the leftmost 0, computed directly on letter vectors.
pub fn worm_ordinal_oracle(w: &[u32]) -> Ordinal {
    if w.is_empty() {
        return Ordinal::zero();
    }
    match w.iter().position(|&l| l == 0) {
        Some(i) => {
            let head: Vec<u32> = w[..i].iter().map(|l| l - 1).collect();
            let tail = &w[i + 1..];
            worm_ordinal_oracle(tail).add(&worm_ordinal_oracle(&head).omega_pow())
        }
        None => {
            let dropped: Vec<u32> = w.iter().map(|l| l - 1).collect();
            worm_ordinal_oracle(&dropped).omega_pow()
        }
    }
}
