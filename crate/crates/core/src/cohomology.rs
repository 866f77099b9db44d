//! Decision rules turning centralizer data into cohomology dimensions.
//!
//! An orbit is type III when `z(k) = 0`, type I when `z(k) != 0`, `K/K°` is
//! trivial and `m` is semisimple, and type II otherwise. `H²` is then exactly
//! `dim z(k)` (I), at most `dim z(k)` (II), or zero (III). `H¹` is 1 exactly
//! when `k + [m, m]` is a proper subspace of `m`, which needs `z(m) != 0`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::catalog::{Catalog, ComponentGroup, OrbitLabel, OrbitRecord, RealForm, RemainderClass};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitType {
    I,
    II,
    III,
}

impl OrbitType {
    pub fn name(self) -> &'static str {
        match self {
            OrbitType::I => "I",
            OrbitType::II => "II",
            OrbitType::III => "III",
        }
    }
}

impl fmt::Display for OrbitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for OrbitType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A cohomology dimension that is either known or only bounded above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CohomologyValue {
    Exact(u32),
    UpperBound(u32),
}

impl CohomologyValue {
    pub fn n(self) -> u32 {
        match self {
            CohomologyValue::Exact(n) | CohomologyValue::UpperBound(n) => n,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, CohomologyValue::Exact(_))
    }

    pub fn kind(self) -> &'static str {
        match self {
            CohomologyValue::Exact(_) => "exact",
            CohomologyValue::UpperBound(_) => "upper-bound",
        }
    }
}

impl fmt::Display for CohomologyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind(), self.n())
    }
}

impl Serialize for CohomologyValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CohomologyValue", 2)?;
        st.serialize_field("kind", self.kind())?;
        st.serialize_field("n", &self.n())?;
        st.end()
    }
}

pub fn classify(dim_z_k: u32, component_group: ComponentGroup, m_semisimple: bool) -> OrbitType {
    if dim_z_k == 0 {
        OrbitType::III
    } else if component_group == ComponentGroup::Trivial && m_semisimple {
        OrbitType::I
    } else {
        OrbitType::II
    }
}

/// [`classify`] for catalog entries, where the component group may be
/// unstated. That is only an error when it would decide the type.
pub fn classify_entry(
    dim_z_k: u32,
    component_group: Option<ComponentGroup>,
    m_semisimple: bool,
) -> Result<OrbitType> {
    match component_group {
        Some(cg) => Ok(classify(dim_z_k, cg, m_semisimple)),
        None if dim_z_k == 0 => Ok(OrbitType::III),
        None if !m_semisimple => Ok(OrbitType::II),
        None => Err(Error::InconsistentInput(
            "component group is needed to classify this orbit but is not stated".into(),
        )),
    }
}

pub fn h2_for(orbit_type: OrbitType, dim_z_k: u32) -> CohomologyValue {
    match orbit_type {
        OrbitType::I => CohomologyValue::Exact(dim_z_k),
        OrbitType::II => CohomologyValue::UpperBound(dim_z_k),
        OrbitType::III => CohomologyValue::Exact(0),
    }
}

fn same_algebra(entry: &str, form: &RealForm) -> Result<()> {
    if entry != form.name {
        return Err(Error::InconsistentInput(format!(
            "entry belongs to {entry}, not {}",
            form.name
        )));
    }
    Ok(())
}

pub fn orbit_type(record: &OrbitRecord, form: &RealForm) -> Result<OrbitType> {
    same_algebra(&record.algebra, form)?;
    classify_entry(record.dim_z_k, record.component_group, form.m_semisimple())
}

pub fn h2(record: &OrbitRecord, form: &RealForm) -> Result<CohomologyValue> {
    Ok(h2_for(orbit_type(record, form)?, record.dim_z_k))
}

pub fn remainder_type(class: &RemainderClass, form: &RealForm) -> Result<OrbitType> {
    same_algebra(&class.algebra, form)?;
    classify_entry(class.dim_z_k, class.component_group, form.m_semisimple())
}

pub fn h2_remainder(class: &RemainderClass, form: &RealForm) -> Result<CohomologyValue> {
    Ok(h2_for(remainder_type(class, form)?, class.dim_z_k))
}

fn h1_from(stored: u8, form: &RealForm) -> Result<CohomologyValue> {
    if form.m_semisimple() {
        // k + [m, m] = m whenever m is semisimple
        if stored != 0 {
            return Err(Error::InconsistentInput(format!(
                "{} has semisimple m, so H1 must vanish, but the entry stores {stored}",
                form.name
            )));
        }
        return Ok(CohomologyValue::Exact(0));
    }
    Ok(CohomologyValue::Exact(u32::from(stored)))
}

pub fn h1(record: &OrbitRecord, form: &RealForm) -> Result<CohomologyValue> {
    same_algebra(&record.algebra, form)?;
    h1_from(record.h1, form)
}

pub fn h1_remainder(class: &RemainderClass, form: &RealForm) -> Result<CohomologyValue> {
    same_algebra(&class.algebra, form)?;
    h1_from(class.h1, form)
}

/// `(H¹, H²)` of the zero orbit, a point.
pub fn zero_orbit_cohomology() -> (CohomologyValue, CohomologyValue) {
    (CohomologyValue::Exact(0), CohomologyValue::Exact(0))
}

/// One line of an algebra's orbit table: an explicit orbit, or a remainder
/// class standing for `count` unlisted orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub algebra: String,
    /// `None` for remainder rows.
    pub label: Option<OrbitLabel>,
    pub label_text: String,
    pub count: u32,
    pub dim_z_k: u32,
    pub component_group: Option<ComponentGroup>,
    #[serde(rename = "type")]
    pub orbit_type: OrbitType,
    pub h2: CohomologyValue,
    pub h1: CohomologyValue,
    pub provenance: String,
}

impl TableRow {
    pub fn is_remainder(&self) -> bool {
        self.label.is_none()
    }
}

/// Explicit records in dataset order, then remainder classes.
pub fn theorem_table(catalog: &Catalog, algebra: &str) -> Result<Vec<TableRow>> {
    let form = catalog.form(algebra)?;
    let mut rows = Vec::with_capacity(form.records.len() + form.remainders.len());
    for r in &form.records {
        let ty = orbit_type(r, form)?;
        rows.push(TableRow {
            algebra: form.name.clone(),
            label: Some(r.label.clone()),
            label_text: form.format_label(&r.label),
            count: 1,
            dim_z_k: r.dim_z_k,
            component_group: r.component_group,
            orbit_type: ty,
            h2: h2_for(ty, r.dim_z_k),
            h1: h1(r, form)?,
            provenance: r.provenance.clone(),
        });
    }
    for c in &form.remainders {
        let ty = remainder_type(c, form)?;
        rows.push(TableRow {
            algebra: form.name.clone(),
            label: None,
            label_text: format!("({} unlisted)", c.count),
            count: c.count,
            dim_z_k: c.dim_z_k,
            component_group: c.component_group,
            orbit_type: ty,
            h2: h2_for(ty, c.dim_z_k),
            h1: h1_remainder(c, form)?,
            provenance: c.provenance.clone(),
        });
    }
    Ok(rows)
}

/// Orbit-weighted tallies for one algebra or the whole catalog.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SummaryRow {
    pub scope: String,
    pub orbits: u32,
    pub explicit: u32,
    pub unlisted: u32,
    pub type_i: u32,
    pub type_ii: u32,
    pub type_iii: u32,
    pub exact: u32,
    pub upper_bound: u32,
    pub h1_nonzero: u32,
}

impl SummaryRow {
    fn absorb(&mut self, row: &TableRow) {
        self.orbits += row.count;
        if row.is_remainder() {
            self.unlisted += row.count;
        } else {
            self.explicit += row.count;
        }
        match row.orbit_type {
            OrbitType::I => self.type_i += row.count,
            OrbitType::II => self.type_ii += row.count,
            OrbitType::III => self.type_iii += row.count,
        }
        if row.h2.is_exact() {
            self.exact += row.count;
        } else {
            self.upper_bound += row.count;
        }
        if row.h1.n() > 0 {
            self.h1_nonzero += row.count;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub algebras: Vec<SummaryRow>,
    pub total: SummaryRow,
}

/// Tallies for `scope`, or for all twelve algebras when `scope` is `None`.
pub fn summary(catalog: &Catalog, scope: Option<&str>) -> Result<Summary> {
    let names: Vec<String> = match scope {
        Some(name) => vec![catalog.form(name)?.name.clone()],
        None => catalog.forms().iter().map(|f| f.name.clone()).collect(),
    };
    let mut total = SummaryRow {
        scope: scope.map_or_else(|| "all".to_string(), |_| names[0].clone()),
        ..SummaryRow::default()
    };
    let mut algebras = Vec::new();
    for name in &names {
        let mut row = SummaryRow {
            scope: name.clone(),
            ..SummaryRow::default()
        };
        for t in theorem_table(catalog, name)? {
            row.absorb(&t);
            total.absorb(&t);
        }
        algebras.push(row);
    }
    Ok(Summary { algebras, total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use ComponentGroup::*;

    fn cat() -> &'static Catalog {
        Catalog::embedded()
    }

    fn h2_of(alg: &str, label: &str) -> CohomologyValue {
        let form = cat().form(alg).unwrap();
        let l = form.parse_label(label).unwrap();
        h2(form.lookup(&l).unwrap(), form).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(1, Trivial, true), OrbitType::I);
        assert_eq!(classify(0, Trivial, true), OrbitType::III);
        assert_eq!(classify(1, Trivial, false), OrbitType::II);
        assert_eq!(classify(2, NonTrivial, true), OrbitType::II);
        assert_eq!(classify(0, NonTrivial, false), OrbitType::III);
    }

    #[test]
    fn unstated_component_group() {
        assert_eq!(classify_entry(0, None, true).unwrap(), OrbitType::III);
        assert_eq!(classify_entry(1, None, false).unwrap(), OrbitType::II);
        assert!(matches!(
            classify_entry(1, None, true),
            Err(Error::InconsistentInput(_))
        ));
    }

    #[test]
    fn h2_examples() {
        assert_eq!(h2_of("E7(7)", "1011101"), CohomologyValue::Exact(3));
        assert_eq!(h2_of("E6(2)", "20202 2"), CohomologyValue::UpperBound(1));
        let f4 = cat().form("F4(-20)").unwrap();
        for c in &f4.remainders {
            assert_eq!(h2_remainder(c, f4).unwrap(), CohomologyValue::Exact(0));
        }
    }

    #[test]
    fn h2_remainder_examples() {
        let rem = |alg: &str| {
            let f = cat().form(alg).unwrap();
            h2_remainder(f.remainders.last().unwrap(), f).unwrap()
        };
        assert_eq!(rem("E6(2)"), CohomologyValue::Exact(1));
        assert_eq!(rem("E8(8)"), CohomologyValue::Exact(0));
        assert_eq!(rem("E7(-25)"), CohomologyValue::UpperBound(1));
    }

    #[test]
    fn h1_examples() {
        let one = |alg: &str, label: &str| {
            let f = cat().form(alg).unwrap();
            h1(f.lookup(&f.parse_label(label).unwrap()).unwrap(), f).unwrap()
        };
        assert_eq!(one("E6(-14)", "40000 -2"), CohomologyValue::Exact(1));
        assert_eq!(one("E7(-25)", "000000 2"), CohomologyValue::Exact(1));
        let e77 = cat().form("E7(7)").unwrap();
        for r in &e77.records {
            assert_eq!(h1(r, e77).unwrap(), CohomologyValue::Exact(0));
        }
    }

    #[test]
    fn h1_flags_dataset_violation() {
        let form = cat().form("E7(7)").unwrap();
        let mut bad = form.records[0].clone();
        bad.h1 = 1;
        assert!(matches!(h1(&bad, form), Err(Error::InconsistentInput(_))));
    }

    #[test]
    fn cross_linked_algebra_mismatch() {
        let e77 = cat().form("E7(7)").unwrap();
        let g2 = cat().form("G2(2)").unwrap();
        assert!(matches!(
            h2(&e77.records[0], g2),
            Err(Error::InconsistentInput(_))
        ));
        assert!(matches!(
            h1(&e77.records[0], g2),
            Err(Error::InconsistentInput(_))
        ));
        assert!(matches!(
            h2_remainder(&e77.remainders[0], g2),
            Err(Error::InconsistentInput(_))
        ));
    }

    #[test]
    fn zero_orbit_is_a_point() {
        assert_eq!(
            zero_orbit_cohomology(),
            (CohomologyValue::Exact(0), CohomologyValue::Exact(0))
        );
    }

    #[test]
    fn table_examples() {
        let g2 = theorem_table(cat(), "G2(2)").unwrap();
        assert_eq!(g2.len(), 5);
        assert_eq!(g2.iter().filter(|r| r.h2 == CohomologyValue::Exact(1)).count(), 2);
        assert_eq!(g2.iter().filter(|r| r.h2 == CohomologyValue::Exact(0)).count(), 3);

        let f4 = theorem_table(cat(), "F4(-20)").unwrap();
        assert!(f4.iter().all(|r| r.h2 == CohomologyValue::Exact(0)));
        assert_eq!(f4.iter().map(|r| r.count).sum::<u32>(), 2);

        let e8 = theorem_table(cat(), "E8(-24)").unwrap();
        let explicit: Vec<_> = e8.iter().filter(|r| !r.is_remainder()).collect();
        assert_eq!(
            explicit
                .iter()
                .filter(|r| r.h2 == CohomologyValue::Exact(1))
                .count(),
            13
        );
        assert_eq!(
            explicit
                .iter()
                .filter(|r| r.h2 == CohomologyValue::UpperBound(1))
                .count(),
            2
        );
        let rest = e8.last().unwrap();
        assert_eq!((rest.count, rest.h2), (21, CohomologyValue::Exact(0)));

        assert!(theorem_table(cat(), "X9(0)").is_err());
    }

    #[test]
    fn summary_totals() {
        let s = summary(cat(), None).unwrap();
        assert_eq!(s.total.orbits, 411);
        assert_eq!(s.total.type_ii, 101);
        assert_eq!(s.total.upper_bound, 101);
        assert_eq!(s.total.exact, 310);
        assert_eq!(s.algebras.len(), 12);

        let f4 = summary(cat(), Some("F4(-20)")).unwrap();
        assert_eq!(f4.total.orbits, 2);
        assert_eq!(f4.total.exact, 2);
        assert_eq!(f4.total.type_iii, 2);
    }

    #[test]
    fn value_display() {
        assert_eq!(CohomologyValue::Exact(3).to_string(), "exact 3");
        assert_eq!(CohomologyValue::UpperBound(1).to_string(), "upper-bound 1");
        assert_eq!(
            serde_json::to_string(&CohomologyValue::UpperBound(2)).unwrap(),
            r#"{"kind":"upper-bound","n":2}"#
        );
    }
}
