//! The orbit catalog: the twelve real forms and their nonzero nilpotent
//! orbits, keyed by characteristic.
//!
//! Orbits that the source tables only count (never list) are kept as
//! [`RemainderClass`] blocks rather than invented labels. A lookup that misses
//! every explicit record therefore reports [`Error::UnlistedLabel`] instead of
//! claiming the orbit does not exist.

mod label;

use std::collections::{BTreeMap, HashSet};
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use label::{OrbitLabel, MAX_ENTRY};

use crate::error::{Error, Result};
use crate::rootsys::CartanType;

/// The embedded dataset, schema version 1.
pub const EMBEDDED_JSON: &str = include_str!("../../data/catalog.v1.json");

/// Canonical algebra names, in catalog order.
pub const ALGEBRA_NAMES: [&str; 12] = [
    "G2(2)", "F4(4)", "F4(-20)", "E6(6)", "E6(2)", "E6(-14)", "E6(-26)", "E7(7)", "E7(-5)", "E7(-25)",
    "E8(8)", "E8(-24)",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentGroup {
    Trivial,
    NonTrivial,
}

impl ComponentGroup {
    pub fn name(self) -> &'static str {
        match self {
            ComponentGroup::Trivial => "trivial",
            ComponentGroup::NonTrivial => "nontrivial",
        }
    }
}

/// One explicitly labeled nonzero nilpotent orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub label: OrbitLabel,
    /// `dim z(k)` for a maximal compact `k` of the triple's centralizer.
    pub dim_z_k: u32,
    /// `K/K°`, when the source states it; `None` otherwise.
    pub component_group: Option<ComponentGroup>,
    pub h1: u8,
    pub provenance: String,
    #[serde(skip)]
    pub algebra: String,
}

/// A block of orbits counted by a clause but not enumerated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemainderClass {
    pub count: u32,
    pub dim_z_k: u32,
    pub component_group: Option<ComponentGroup>,
    pub h1: u8,
    pub provenance: String,
    #[serde(skip)]
    pub algebra: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealForm {
    pub name: String,
    pub complex_type: CartanType,
    /// Simple summands of `[m, m]`.
    pub compact_summands: Vec<String>,
    pub dim_center_m: u8,
    pub inner: bool,
    pub label_length: usize,
    pub total: u32,
    pub records: Vec<OrbitRecord>,
    pub remainders: Vec<RemainderClass>,
}

impl RealForm {
    /// `m = [m, m]`.
    pub fn m_semisimple(&self) -> bool {
        self.dim_center_m == 0
    }

    pub fn explicit_count(&self) -> u32 {
        self.records.len() as u32
    }

    pub fn remainder_count(&self) -> u32 {
        self.remainders.iter().map(|r| r.count).sum()
    }

    /// Explicit records plus every remainder class.
    pub fn orbit_count(&self) -> u32 {
        self.explicit_count() + self.remainder_count()
    }

    /// Rank of `m_C`, from the summand names plus the center.
    pub fn compact_rank(&self) -> Result<usize> {
        let mut rank = usize::from(self.dim_center_m);
        for s in &self.compact_summands {
            rank += s.parse::<CartanType>()?.rank();
        }
        Ok(rank)
    }

    /// Written form of a label in this algebra's tables: the final entry is
    /// split off when `m` has more than one factor.
    pub fn format_label(&self, label: &OrbitLabel) -> String {
        let split = self.label_length > 2 && self.compact_summands.len() + usize::from(self.dim_center_m) > 1;
        label.render(split)
    }

    pub fn parse_label(&self, text: &str) -> Result<OrbitLabel> {
        OrbitLabel::parse(text, self.label_length)
    }

    pub fn lookup(&self, label: &OrbitLabel) -> Result<&OrbitRecord> {
        if label.len() != self.label_length {
            return Err(Error::LabelLengthMismatch {
                algebra: self.name.clone(),
                expected: self.label_length,
                found: label.len(),
            });
        }
        self.records
            .iter()
            .find(|r| &r.label == label)
            .ok_or_else(|| Error::UnlistedLabel {
                algebra: self.name.clone(),
                label: self.format_label(label),
            })
    }
}

/// The whole dataset, immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    forms: Vec<RealForm>,
}

impl Catalog {
    /// Schema, naming, label and duplicate checks only; orbit totals are left
    /// to [`crate::validate`]. Use [`Catalog::load`] for a fully checked catalog.
    pub fn parse(text: &str) -> Result<Catalog> {
        let mut forms: Vec<RealForm> =
            serde_json::from_str(text).map_err(|e| Error::CatalogCorrupt(format!("schema: {e}")))?;
        let mut names = HashSet::new();
        for form in &mut forms {
            let corrupt = |what: String| Error::CatalogCorrupt(format!("{}: {what}", form.name));
            if !ALGEBRA_NAMES.contains(&form.name.as_str()) {
                return Err(Error::CatalogCorrupt(format!(
                    "unknown algebra block `{}`",
                    form.name
                )));
            }
            if !names.insert(form.name.clone()) {
                return Err(corrupt("duplicate algebra block".into()));
            }
            if form.label_length == 0 {
                return Err(corrupt("label_length must be positive".into()));
            }
            if form.dim_center_m > 1 {
                return Err(corrupt("dim_center_m must be 0 or 1".into()));
            }
            for s in &form.compact_summands {
                s.parse::<CartanType>()
                    .map_err(|_| corrupt(format!("compact summand `{s}` is not a simple type")))?;
            }
            let mut seen = HashSet::new();
            for (k, r) in form.records.iter().enumerate() {
                let at = format!("record {k} (label {})", r.label);
                if r.label.len() != form.label_length {
                    return Err(corrupt(format!(
                        "{at}: label has {} entries, expected {}",
                        r.label.len(),
                        form.label_length
                    )));
                }
                if !r.label.in_bounds() {
                    return Err(corrupt(format!("{at}: entry out of bounds")));
                }
                if r.label.is_zero() {
                    return Err(corrupt(format!("{at}: zero label is the zero orbit")));
                }
                if !seen.insert(r.label.clone()) {
                    return Err(corrupt(format!("{at}: duplicate label")));
                }
                if r.h1 > 1 {
                    return Err(corrupt(format!("{at}: h1 must be 0 or 1")));
                }
                if r.provenance.is_empty() {
                    return Err(corrupt(format!("{at}: missing provenance")));
                }
            }
            for (k, r) in form.remainders.iter().enumerate() {
                if r.count == 0 {
                    return Err(corrupt(format!("remainder {k}: count must be positive")));
                }
                if r.h1 > 1 {
                    return Err(corrupt(format!("remainder {k}: h1 must be 0 or 1")));
                }
                if r.provenance.is_empty() {
                    return Err(corrupt(format!("remainder {k}: missing provenance")));
                }
            }
            let name = form.name.clone();
            form.records.iter_mut().for_each(|r| r.algebra = name.clone());
            form.remainders.iter_mut().for_each(|r| r.algebra = name.clone());
        }
        Ok(Catalog { forms })
    }

    /// [`Catalog::parse`] plus the requirement that every block's explicit
    /// and remainder orbits add up to its stated total.
    pub fn load(text: &str) -> Result<Catalog> {
        let catalog = Catalog::parse(text)?;
        for form in &catalog.forms {
            if form.orbit_count() != form.total {
                return Err(Error::CatalogCorrupt(format!(
                    "{}: {} explicit + {} remainder orbits != stated total {}",
                    form.name,
                    form.explicit_count(),
                    form.remainder_count(),
                    form.total
                )));
            }
        }
        Ok(catalog)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Catalog> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::CatalogCorrupt(format!("{}: {e}", path.display())))?;
        Catalog::load(&text)
    }

    /// The embedded dataset, loaded once.
    pub fn embedded() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::load(EMBEDDED_JSON).expect("embedded catalog is well formed"))
    }

    pub fn forms(&self) -> &[RealForm] {
        &self.forms
    }

    pub fn forms_mut(&mut self) -> &mut [RealForm] {
        &mut self.forms
    }

    pub fn form(&self, name: &str) -> Result<&RealForm> {
        let canonical = canonical_name(name)?;
        self.forms
            .iter()
            .find(|f| f.name == canonical)
            .ok_or_else(|| Error::UnknownAlgebra(name.to_string()))
    }

    pub fn orbit_count(&self, name: &str) -> Result<u32> {
        Ok(self.form(name)?.orbit_count())
    }

    pub fn lookup(&self, name: &str, label: &OrbitLabel) -> Result<&OrbitRecord> {
        self.form(name)?.lookup(label)
    }

    pub fn normalize_label(&self, text: &str, name: &str) -> Result<OrbitLabel> {
        self.form(name)?.parse_label(text)
    }

    /// Every explicit record, across all algebras, in catalog order.
    pub fn records(&self) -> impl Iterator<Item = (&RealForm, &OrbitRecord)> {
        self.forms
            .iter()
            .flat_map(|f| f.records.iter().map(move |r| (f, r)))
    }

    pub fn remainders(&self) -> impl Iterator<Item = (&RealForm, &RemainderClass)> {
        self.forms
            .iter()
            .flat_map(|f| f.remainders.iter().map(move |r| (f, r)))
    }

    /// Provenance tag to (explicit records, remainder orbits) per algebra.
    pub fn clause_sizes(&self) -> BTreeMap<String, (u32, u32)> {
        let mut out: BTreeMap<String, (u32, u32)> = BTreeMap::new();
        for (_, r) in self.records() {
            out.entry(r.provenance.clone()).or_default().0 += 1;
        }
        for (_, r) in self.remainders() {
            out.entry(r.provenance.clone()).or_default().1 += r.count;
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.forms).expect("catalog serializes")
    }
}

/// The embedded catalog.
pub fn load_catalog() -> &'static Catalog {
    Catalog::embedded()
}

/// Shell-friendly spelling of an algebra name: `E6(-14)` becomes `E6_m14`.
pub fn alias(name: &str) -> String {
    name.replace('(', "_").replace(')', "").replace('-', "m")
}

/// Resolves a canonical name or its alias, ignoring ASCII case.
pub fn canonical_name(name: &str) -> Result<&'static str> {
    let wanted = name.trim();
    ALGEBRA_NAMES
        .iter()
        .copied()
        .find(|n| n.eq_ignore_ascii_case(wanted) || alias(n).eq_ignore_ascii_case(wanted))
        .ok_or_else(|| Error::UnknownAlgebra(name.to_string()))
}
