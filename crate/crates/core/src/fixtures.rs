//! Newform Fourier-coefficient fixtures and the other golden tables, loaded
//! from plain CSV. The workbench never computes newform coefficients; these
//! tables are the single source of modular data, and every identity that
//! consumes them runs at the primes they cover.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::{Error, Result};

/// The shipped tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormLabel {
    F120,
    F24B,
    F120E,
    F15C,
    F210,
    F840,
    F1680,
    HeckeW,
    BpW7,
    TrYhat,
}

impl FormLabel {
    pub const ALL: [FormLabel; 10] = [
        FormLabel::F120,
        FormLabel::F24B,
        FormLabel::F120E,
        FormLabel::F15C,
        FormLabel::F210,
        FormLabel::F840,
        FormLabel::F1680,
        FormLabel::HeckeW,
        FormLabel::BpW7,
        FormLabel::TrYhat,
    ];

    pub fn file_name(&self) -> &'static str {
        match self {
            FormLabel::F120 => "f120.csv",
            FormLabel::F24B => "f24B.csv",
            FormLabel::F120E => "f120E.csv",
            FormLabel::F15C => "f15C.csv",
            FormLabel::F210 => "f210.csv",
            FormLabel::F840 => "f840.csv",
            FormLabel::F1680 => "f1680.csv",
            FormLabel::HeckeW => "heckeW.csv",
            FormLabel::BpW7 => "bpW7.csv",
            FormLabel::TrYhat => "trYhat.csv",
        }
    }

    /// Motivic weight of the eigenvalue normalization (2 for elliptic
    /// newforms, 3 for the Hecke form, 4 for the threefold form); tables
    /// that are not Hecke eigenform coefficient lists report 0.
    pub fn weight(&self) -> u32 {
        match self {
            FormLabel::F120 => 4,
            FormLabel::HeckeW => 3,
            FormLabel::F24B
            | FormLabel::F120E
            | FormLabel::F15C
            | FormLabel::F210
            | FormLabel::F840
            | FormLabel::F1680 => 2,
            FormLabel::BpW7 | FormLabel::TrYhat => 0,
        }
    }
}

/// A loaded coefficient table: exact integer entries keyed by p (or q).
#[derive(Clone, Debug)]
pub struct CoefficientTable {
    pub label: FormLabel,
    pub weight: u32,
    pub map: BTreeMap<u64, i64>,
}

impl CoefficientTable {
    pub fn get(&self, p: u64) -> Option<i64> {
        self.map.get(&p).copied()
    }

    /// Eigenvalue prime-power rule for a weight-w newform with trivial
    /// nebentypus at good p: a_{p^2} = a_p^2 - 2 p^{w-1}.
    pub fn prime_square(&self, p: u64) -> Option<i64> {
        let ap = self.get(p)?;
        assert!(self.weight >= 2, "prime-power rule needs an eigenform table");
        let pw = (p as i64).pow(self.weight - 1);
        Some(ap * ap - 2 * pw)
    }
}

fn parse_table(label: FormLabel, text: &str, file: &Path) -> Result<CoefficientTable> {
    let mut map = BTreeMap::new();
    let mut saw_header = false;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !saw_header {
            if line != "p,coeff" {
                return Err(Error::Fixture(format!(
                    "{}: line {}: expected header `p,coeff`, got `{line}`",
                    file.display(),
                    lineno + 1
                )));
            }
            saw_header = true;
            continue;
        }
        let mut parts = line.split(',');
        let (Some(ps), Some(cs), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Fixture(format!(
                "{}: line {}: malformed row `{line}`",
                file.display(),
                lineno + 1
            )));
        };
        let p: u64 = ps.trim().parse().map_err(|_| {
            Error::Fixture(format!(
                "{}: line {}: bad prime `{ps}`",
                file.display(),
                lineno + 1
            ))
        })?;
        let c: i64 = cs.trim().parse().map_err(|_| {
            Error::Fixture(format!(
                "{}: line {}: bad coefficient `{cs}`",
                file.display(),
                lineno + 1
            ))
        })?;
        if map.insert(p, c).is_some() {
            return Err(Error::Fixture(format!(
                "{}: line {}: duplicate entry for p = {p}",
                file.display(),
                lineno + 1
            )));
        }
    }
    if map.is_empty() {
        return Err(Error::Fixture(format!("{}: no data rows", file.display())));
    }
    Ok(CoefficientTable {
        label,
        weight: label.weight(),
        map,
    })
}

/// All tables from one directory.
#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub tables: BTreeMap<FormLabel, CoefficientTable>,
}

impl FixtureSet {
    pub fn load(dir: &Path) -> Result<Self> {
        let mut tables = BTreeMap::new();
        for label in FormLabel::ALL {
            let file = dir.join(label.file_name());
            let text = std::fs::read_to_string(&file).map_err(|e| {
                Error::Fixture(format!("{}: {e}", file.display()))
            })?;
            tables.insert(label, parse_table(label, &text, &file)?);
        }
        Ok(FixtureSet { tables })
    }

    /// The directory shipped with the repository.
    pub fn repo_dir() -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("..")
            .join("..")
            .join("fixtures")
    }

    pub fn load_default() -> Result<Self> {
        Self::load(&Self::repo_dir())
    }

    pub fn table(&self, label: FormLabel) -> &CoefficientTable {
        &self.tables[&label]
    }

    pub fn get(&self, label: FormLabel, p: u64) -> Option<i64> {
        self.table(label).get(p)
    }

    /// Primes at which all listed tables have entries.
    pub fn common_primes(&self, labels: &[FormLabel]) -> Vec<u64> {
        let first = self.table(labels[0]);
        first
            .map
            .keys()
            .copied()
            .filter(|p| labels.iter().all(|l| self.get(*l, *p).is_some()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_shipped_fixtures() {
        let fx = FixtureSet::load_default().unwrap();
        assert_eq!(fx.get(FormLabel::HeckeW, 17), Some(14));
        assert_eq!(fx.get(FormLabel::F120, 13), Some(54));
        assert_eq!(fx.get(FormLabel::BpW7, 53), Some(-55));
        assert_eq!(fx.get(FormLabel::TrYhat, 361), Some(-122970));
        assert_eq!(fx.get(FormLabel::F210, 7), None);
    }

    #[test]
    fn prime_square_rule() {
        let fx = FixtureSet::load_default().unwrap();
        // weight 2: b_{49} = 0 - 14; weight 4: a_{49} = 0 - 686
        assert_eq!(fx.table(FormLabel::F24B).prime_square(7), Some(-14));
        assert_eq!(fx.table(FormLabel::F120).prime_square(7), Some(-686));
        // trYhat table consistency at q = 49
        let a = fx.table(FormLabel::F120).prime_square(7).unwrap();
        let b = fx.table(FormLabel::F24B).prime_square(7).unwrap();
        let c = fx.table(FormLabel::F120E).prime_square(7).unwrap();
        assert_eq!(a + 49 * (9 * b + 5 * c), -10290);
    }

    #[test]
    fn rejects_malformed() {
        let dir = std::env::temp_dir().join("maschke-fixture-test");
        std::fs::create_dir_all(&dir).unwrap();
        let f = dir.join("f24B.csv");
        std::fs::write(&f, "p,coeff\n7,zero\n").unwrap();
        let err = parse_table(FormLabel::F24B, "p,coeff\n7,zero\n", &f).unwrap_err();
        let msg = format!("{err}");
        assert!(msg.contains("f24B.csv"), "{msg}");
        assert!(msg.contains("line 2"), "{msg}");
    }
}
