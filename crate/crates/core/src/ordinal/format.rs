use std::fmt;

use super::{Atom, Ordinal};

// Lowest-sugar rendering: decimals for naturals, "w", "w^x", "e0", else "phi(a,b)".
// Runs of equal atoms print as "atom*n".

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (atom, n)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if atom.is_one() {
                write!(f, "{n}")?;
            } else if *n == 1 {
                write!(f, "{atom}")?;
            } else {
                write!(f, "{atom}*{n}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.index.is_zero() {
            match self.arg.as_nat() {
                Some(0) => f.write_str("1"),
                Some(1) => f.write_str("w"),
                // Naturals and lone atoms are atoms of the grammar; anything else needs parens.
                Some(_) => write!(f, "w^{}", self.arg),
                None if self.arg.as_atom().is_some() => write!(f, "w^{}", self.arg),
                None => write!(f, "w^({})", self.arg),
            }
        } else if self.index.as_nat() == Some(1) && self.arg.is_zero() {
            f.write_str("e0")
        } else {
            write!(f, "phi({},{})", self.index, self.arg)
        }
    }
}
