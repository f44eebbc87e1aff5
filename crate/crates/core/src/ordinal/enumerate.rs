use super::{Atom, Ordinal, OrdinalError};

pub const DEFAULT_ENUMERATION_CAP: usize = 6;

/// Every canonical ordinal whose syntax tree has at most `max_nodes` atoms,
/// sorted ascending. Multiplicities count, so the natural `n` has `n` nodes.
pub fn enumerate_terms(max_nodes: usize, cap: usize) -> Result<Vec<Ordinal>, OrdinalError> {
    if max_nodes > cap {
        return Err(OrdinalError::CapExceeded {
            requested: max_nodes,
            cap,
        });
    }
    // by_size[s]: canonical terms with exactly s nodes.
    let mut by_size: Vec<Vec<Ordinal>> = vec![vec![Ordinal::zero()]];
    let mut atoms: Vec<Vec<Atom>> = vec![Vec::new()];
    for size in 1..=max_nodes {
        let mut new_atoms = Vec::new();
        for index_size in 0..size {
            for index in &by_size[index_size] {
                for arg in &by_size[size - 1 - index_size] {
                    let value = Ordinal::veblen(index, arg);
                    // Collapsed fixed points already appear at a smaller size.
                    if value.node_count() == size as u64 {
                        new_atoms.push(value.as_atom().expect("single atom").clone());
                    }
                }
            }
        }
        atoms.push(new_atoms);

        // A term of this size is a leading atom followed by a smaller term that
        // does not exceed it.
        let mut terms: Vec<Ordinal> = Vec::new();
        for lead_size in 1..=size {
            for lead in &atoms[lead_size] {
                for rest in &by_size[size - lead_size] {
                    if rest.leading_atom().is_none_or(|r| r <= lead) {
                        let term = Ordinal::from_atoms(
                            std::iter::once(lead.clone()).chain(rest.components().cloned()),
                        )
                        .expect("non-increasing");
                        terms.push(term);
                    }
                }
            }
        }
        by_size.push(terms);
    }
    let mut all: Vec<Ordinal> = by_size.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_pools() {
        let names = |n| {
            enumerate_terms(n, DEFAULT_ENUMERATION_CAP)
                .unwrap()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        };
        assert_eq!(names(0), ["0"]);
        assert_eq!(names(1), ["0", "1"]);
        assert_eq!(names(2), ["0", "1", "2", "w", "e0"]);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_terms(7, 6),
            Err(OrdinalError::CapExceeded {
                requested: 7,
                cap: 6
            })
        );
    }

    #[test]
    fn strictly_sorted_and_sized() {
        let pool = enumerate_terms(5, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(pool.windows(2).all(|w| w[0] < w[1]));
        assert!(pool.iter().all(|t| t.node_count() <= 5));
    }
}
