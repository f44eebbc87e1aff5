//! Pathological presentations of ω.
//!
//! [`Presentation::kreisel`] orders the naturals by a decidable relation that
//! is the usual order of ω exactly when a hidden predicate holds everywhere.
//! If the predicate first fails at `k`, then `k, k+1, k+2, …` descends forever,
//! yet deciding `a ≺ b` only ever looks at the predicate up to `max(a, b)`.

mod predicate;

use std::fmt;

pub use predicate::{Arith, PredicateError, PredicateExpr, Relation};

pub const DEFAULT_FUEL: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    predicate: PredicateExpr,
    description: String,
}

// Below the counterexample `k`: natural order; below-k precedes the rest;
// from `k` on: reversed.
fn three_zone_less(k: Option<u64>, a: u64, b: u64) -> bool {
    match k {
        None => a < b,
        Some(k) => match (a < k, b < k) {
            (true, true) => a < b,
            (true, false) => true,
            (false, true) => false,
            (false, false) => a > b,
        },
    }
}

impl Presentation {
    pub fn kreisel(predicate: PredicateExpr) -> Self {
        let description = format!("kreisel presentation of w gated on {predicate}");
        Self {
            predicate,
            description,
        }
    }

    pub fn predicate(&self) -> &PredicateExpr {
        &self.predicate
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// The least `x <= bound` with `¬P(x)`.
    pub fn least_counterexample(&self, bound: u64) -> Option<u64> {
        (0..=bound).find(|&x| !self.predicate.eval(x))
    }

    pub fn less(&self, a: u64, b: u64) -> bool {
        self.less_observed(a, b, |_| {})
    }

    /// [`Presentation::less`], reporting every argument the predicate is queried at.
    pub fn less_observed(&self, a: u64, b: u64, mut observe: impl FnMut(u64)) -> bool {
        let k = (0..=a.max(b)).find(|&x| {
            observe(x);
            !self.predicate.eval(x)
        });
        three_zone_less(k, a, b)
    }

    /// The order restricted to `0..=bound`, with the predicate scanned once.
    pub fn window(&self, bound: u64) -> Window {
        Window {
            bound,
            counterexample: self.least_counterexample(bound),
        }
    }
}

/// A presentation restricted to `0..=bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    bound: u64,
    counterexample: Option<u64>,
}

impl Window {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn counterexample(&self) -> Option<u64> {
        self.counterexample
    }

    /// Agrees with [`Presentation::less`] for `a, b <= bound`.
    pub fn less(&self, a: u64, b: u64) -> bool {
        debug_assert!(a <= self.bound && b <= self.bound);
        let k = self.counterexample.filter(|&k| k <= a.max(b));
        three_zone_less(k, a, b)
    }
}

/// Whether `0 ≺ 1 ≺ … ≺ n`.
pub fn check_ascending(p: &Presentation, n: u64) -> bool {
    let window = p.window(n);
    (0..n).all(|i| window.less(i, i + 1))
}

/// A descending chain `k ≻ k+1 ≻ …` from the least counterexample `k <= fuel`,
/// of length `min(fuel, fuel - k + 1)`, but never shorter than the single
/// element `k`.
pub fn find_descending(p: &Presentation, fuel: u64) -> Option<Vec<u64>> {
    let window = p.window(fuel);
    let k = window.counterexample()?;
    let chain: Vec<u64> = (k..=fuel).take(fuel.max(1) as usize).collect();
    debug_assert!(chain.windows(2).all(|w| window.less(w[1], w[0])));
    Some(chain)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub predicate: String,
    pub window: u64,
    pub counterexamples: u64,
    pub least_counterexample: Option<u64>,
    /// Adjacent pairs `i, i+1 <= window` with `i+1 ≺ i`.
    pub descents: u64,
    /// Whether `0 ≺ 1 ≺ … ≺ window`.
    pub standard_prefix: bool,
    /// Whether the predicate holds on every `x < window`. A counterexample at
    /// `window` itself cannot break the prefix: nothing above it is in view.
    pub predicate_total_below: bool,
}

impl AuditReport {
    pub fn equivalent(&self) -> bool {
        self.standard_prefix == self.predicate_total_below
    }
}

pub fn audit(p: &Presentation, n: u64) -> AuditReport {
    let window = p.window(n);
    let counterexamples = (0..=n).filter(|&x| !p.predicate.eval(x)).count() as u64;
    let descents = (0..n).filter(|&i| window.less(i + 1, i)).count() as u64;
    AuditReport {
        predicate: p.predicate.to_string(),
        window: n,
        counterexamples,
        least_counterexample: window.counterexample(),
        descents,
        standard_prefix: (0..n).all(|i| window.less(i, i + 1)),
        predicate_total_below: window.counterexample().is_none_or(|k| k >= n),
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "predicate: {}", self.predicate)?;
        writeln!(f, "window: {}", self.window)?;
        writeln!(f, "counterexamples: {}", self.counterexamples)?;
        match self.least_counterexample {
            Some(k) => writeln!(f, "least_counterexample: {k}")?,
            None => writeln!(f, "least_counterexample: none")?,
        }
        writeln!(f, "descents: {}", self.descents)?;
        writeln!(f, "standard_prefix: {}", yes_no(self.standard_prefix))?;
        writeln!(
            f,
            "predicate_total_below: {}",
            yes_no(self.predicate_total_below)
        )?;
        write!(f, "equivalent: {}", yes_no(self.equivalent()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kreisel(s: &str) -> Presentation {
        Presentation::kreisel(s.parse().unwrap())
    }

    #[test]
    fn total_predicate_gives_omega() {
        let p = kreisel("true");
        for a in 0..100 {
            for b in 0..100 {
                assert_eq!(p.less(a, b), a < b);
            }
        }
    }

    #[test]
    fn counterexample_reverses_the_tail() {
        let p = kreisel("x != 7");
        assert!(p.less(3, 6));
        assert!(p.less(6, 7));
        assert!(p.less(9, 8));
        let chain: Vec<u64> = (7..=57).collect();
        assert_eq!(chain.len() - 1, 50);
        assert!(chain.windows(2).all(|w| p.less(w[1], w[0])));
    }

    #[test]
    fn locality() {
        let p = kreisel("x != 7");
        for (a, b) in [(3, 6), (10, 2), (7, 7), (100, 40)] {
            let mut seen = Vec::new();
            p.less_observed(a, b, |x| seen.push(x));
            assert!(seen.iter().all(|&x| x <= a.max(b)));
        }
    }

    #[test]
    fn ascending_checks() {
        assert!(check_ascending(&kreisel("true"), 100));
        assert!(!check_ascending(&kreisel("x != 7"), 100));
        assert!(check_ascending(&kreisel("x != 200"), 100));
        assert!(check_ascending(&kreisel("x != 0"), 0));
    }

    #[test]
    fn descending_chains() {
        assert_eq!(find_descending(&kreisel("true"), 1000), None);
        let chain = find_descending(&kreisel("x != 7"), 50).unwrap();
        assert_eq!(chain.first(), Some(&7));
        assert_eq!(chain.len(), 44);
        assert_eq!(
            find_descending(&kreisel("x != 0"), 5).unwrap(),
            [0, 1, 2, 3, 4]
        );
        assert_eq!(find_descending(&kreisel("x != 60"), 50), None);
        assert_eq!(find_descending(&kreisel("x != 0"), 0).unwrap(), [0]);
    }

    #[test]
    fn audits() {
        let r = audit(&kreisel("true"), 100);
        assert_eq!(
            (r.counterexamples, r.descents, r.equivalent()),
            (0, 0, true)
        );
        let r = audit(&kreisel("x != 7"), 100);
        assert_eq!(r.counterexamples, 1);
        assert_eq!(r.descents, 93);
        assert!(r.equivalent() && !r.standard_prefix);
        let r = audit(&kreisel("x != 7"), 5);
        assert_eq!(
            (r.counterexamples, r.descents, r.equivalent()),
            (0, 0, true)
        );
        assert_eq!(
            r.to_string(),
            "predicate: x != 7\nwindow: 5\ncounterexamples: 0\nleast_counterexample: none\n\
             descents: 0\nstandard_prefix: yes\npredicate_total_below: yes\nequivalent: yes"
        );
        let r = audit(&kreisel("x != 7"), 7);
        assert_eq!(r.least_counterexample, Some(7));
        assert!(r.standard_prefix && r.predicate_total_below && r.equivalent());
    }
}
