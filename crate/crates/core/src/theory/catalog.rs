use std::sync::OnceLock;

use super::{TheoryError, TheoryExpr};

const SHIPPED_CATALOG: &str = include_str!("../../data/catalog.txt");

/// Named theories, loaded from `name = expression` lines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<(String, TheoryExpr)>,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog, TheoryError> {
        let mut entries: Vec<(String, TheoryExpr)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let data_error = |message: String| TheoryError::DataFile {
                line: i + 1,
                message,
            };
            let (name, expr) = line
                .split_once('=')
                .ok_or_else(|| data_error("expected '<name> = <expression>'".into()))?;
            let name = name.trim();
            if name.is_empty() {
                return Err(data_error("empty name".into()));
            }
            if entries.iter().any(|(n, _)| n == name) {
                return Err(data_error(format!("duplicate entry {name:?}")));
            }
            let expr = expr
                .trim()
                .parse()
                .map_err(|e: TheoryError| data_error(e.to_string()))?;
            entries.push((name.to_string(), expr));
        }
        Ok(Catalog { entries })
    }

    pub fn shipped() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::parse(SHIPPED_CATALOG).expect("shipped catalog parses"))
    }

    pub fn lookup(&self, name: &str) -> Result<&TheoryExpr, TheoryError> {
        self.entries
            .iter()
            .find(|(n, _)| n == name.trim())
            .map(|(_, t)| t)
            .ok_or_else(|| TheoryError::UnknownTheory(name.to_string()))
    }

    pub fn entries(&self) -> &[(String, TheoryExpr)] {
        &self.entries
    }
}

pub fn catalog_lookup(name: &str) -> Result<TheoryExpr, TheoryError> {
    Catalog::shipped().lookup(name).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::Ordinal;

    #[test]
    fn shipped_entries() {
        assert_eq!(catalog_lookup("PA").unwrap(), TheoryExpr::Pa);
        assert_eq!(catalog_lookup("EA+").unwrap(), TheoryExpr::EaPlus);
        assert_eq!(
            catalog_lookup("PA+Con(PA)").unwrap(),
            TheoryExpr::con(Ordinal::one(), TheoryExpr::Pa).unwrap()
        );
        assert_eq!(
            catalog_lookup("1Con(EA+)").unwrap(),
            TheoryExpr::reflect(2, Ordinal::one(), TheoryExpr::EaPlus).unwrap()
        );
        assert_eq!(
            catalog_lookup("ZFC"),
            Err(TheoryError::UnknownTheory("ZFC".into()))
        );
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert!(matches!(
            Catalog::parse("A = PA\nB PA"),
            Err(TheoryError::DataFile { line: 2, .. })
        ));
        assert!(matches!(
            Catalog::parse("A = PA\nA = EA+"),
            Err(TheoryError::DataFile { line: 2, .. })
        ));
        assert!(matches!(
            Catalog::parse("A = (con 0 PA)"),
            Err(TheoryError::DataFile { line: 1, .. })
        ));
    }
}
