//! Named molecule parameter sets, stored as TOML and validated on load.
//!
//! An entry is three quantities in fixed spectroscopic units (amu, eV,
//! angstrom) plus a free-text provenance note. The built-in table ships in
//! the binary; user tables load from disk and follow the same schema. Every
//! value is checked here once, so downstream code can assume positive,
//! finite parameters in a single unit system.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::{PhysQty, UnitSystem};

const BUILTIN_TABLE: &str = include_str!("../data/molecules.toml");

const SYSTEM: UnitSystem = UnitSystem::SpectroscopicEvAngstromAmu;

/// One molecule's radial-problem inputs: reduced mass, well strength, and
/// well position, all in spectroscopic units.
#[derive(Debug, Clone)]
pub struct MoleculeSpec {
    pub name: String,
    pub reduced_mass: PhysQty,
    pub v0: PhysQty,
    pub a: PhysQty,
    pub source: String,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct FileSchema {
    #[serde(default)]
    molecule: Vec<MoleculeRow>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct MoleculeRow {
    name: String,
    #[serde(default)]
    source: Option<String>,
    reduced_mass: FieldRow,
    v0: FieldRow,
    a: FieldRow,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct FieldRow {
    value: f64,
    unit: String,
}

/// Case-insensitive name-to-parameters map with deterministic iteration
/// order.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    entries: BTreeMap<String, MoleculeSpec>,
}

impl Registry {
    /// The table compiled into the binary.
    pub fn builtin() -> Registry {
        Registry::load_str(BUILTIN_TABLE).expect("built-in molecule table is well-formed")
    }

    pub fn load_str(text: &str) -> Result<Registry> {
        let parsed: FileSchema = toml::from_str(text).map_err(|e| Error::RegistryParse {
            path: None,
            reason: e.to_string(),
        })?;
        Registry::from_rows(parsed.molecule)
    }

    pub fn load_path(path: &Path) -> Result<Registry> {
        let text = std::fs::read_to_string(path)?;
        let parsed: FileSchema = toml::from_str(&text).map_err(|e| Error::RegistryParse {
            path: Some(path.display().to_string()),
            reason: e.to_string(),
        })?;
        Registry::from_rows(parsed.molecule)
    }

    fn from_rows(rows: Vec<MoleculeRow>) -> Result<Registry> {
        let mut entries = BTreeMap::new();
        for row in rows {
            let spec = validate_row(row)?;
            let key = spec.name.to_lowercase();
            if let Some(previous) = entries.insert(key, spec) {
                return Err(Error::RegistryParse {
                    path: None,
                    reason: format!(
                        "molecule '{}' appears more than once (names are case-insensitive)",
                        previous.name
                    ),
                });
            }
        }
        Ok(Registry { entries })
    }

    /// Render the registry back to TOML, entries in key order.
    pub fn save_string(&self) -> String {
        let rows: Vec<MoleculeRow> = self
            .entries
            .values()
            .map(|spec| MoleculeRow {
                name: spec.name.clone(),
                source: Some(spec.source.clone()),
                reduced_mass: FieldRow {
                    value: spec.reduced_mass.value(),
                    unit: "amu".to_string(),
                },
                v0: FieldRow {
                    value: spec.v0.value(),
                    unit: "eV".to_string(),
                },
                a: FieldRow {
                    value: spec.a.value(),
                    unit: "angstrom".to_string(),
                },
            })
            .collect();
        toml::to_string_pretty(&FileSchema { molecule: rows })
            .expect("molecule rows serialize to TOML")
    }

    pub fn save_path(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.save_string())?;
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&MoleculeSpec> {
        let key = name.to_lowercase();
        if let Some(spec) = self.entries.get(&key) {
            return Ok(spec);
        }
        let mut suggestions: Vec<String> = self
            .entries
            .values()
            .filter(|spec| strsim::levenshtein(&spec.name.to_lowercase(), &key) <= 2)
            .map(|spec| spec.name.clone())
            .collect();
        suggestions.sort();
        Err(Error::UnknownMolecule {
            name: name.to_string(),
            suggestions,
        })
    }

    /// Display names in deterministic (lowercased-key) order.
    pub fn names(&self) -> Vec<&str> {
        self.entries
            .values()
            .map(|spec| spec.name.as_str())
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &MoleculeSpec> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn validate_row(row: MoleculeRow) -> Result<MoleculeSpec> {
    if row.name.trim().is_empty() {
        return Err(Error::RegistryParse {
            path: None,
            reason: "a molecule entry has an empty name".to_string(),
        });
    }
    let reduced_mass = checked_qty(&row.name, "reduced_mass", &row.reduced_mass, "amu")?;
    let v0 = checked_qty(&row.name, "v0", &row.v0, "eV")?;
    let a = checked_qty(&row.name, "a", &row.a, "angstrom")?;
    Ok(MoleculeSpec {
        name: row.name,
        reduced_mass,
        v0,
        a,
        source: row.source.unwrap_or_default(),
    })
}

fn checked_qty(
    molecule: &str,
    field: &'static str,
    raw: &FieldRow,
    expected_unit: &str,
) -> Result<PhysQty> {
    if raw.unit != expected_unit {
        return Err(Error::InvalidMoleculeField {
            molecule: molecule.to_string(),
            field,
            reason: format!("unit must be '{expected_unit}', got '{}'", raw.unit),
        });
    }
    if !raw.value.is_finite() || raw.value <= 0.0 {
        return Err(Error::InvalidMoleculeField {
            molecule: molecule.to_string(),
            field,
            reason: format!("value must be positive and finite, got {}", raw.value),
        });
    }
    match field {
        "reduced_mass" => PhysQty::mass(raw.value, SYSTEM),
        "v0" => PhysQty::energy(raw.value, SYSTEM),
        "a" => PhysQty::length(raw.value, SYSTEM),
        other => unreachable!("no molecule field named {other}"),
    }
}
