//! Consistency checks binding the catalog, the decision rules and the root
//! engine to a frozen registry of expected values.
//!
//! Failures are reported, never raised: [`validate_all`] always returns a full
//! report with one entry per registered check, in registration order.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::catalog::{Catalog, ComponentGroup, OrbitLabel, RealForm};
use crate::cohomology::{classify_entry, h2_for, CohomologyValue, OrbitType};
use crate::rootsys::{fold_e6, CartanType, FoldConvention, FoldingSpec, RootSystem};

use CohomologyValue::{Exact, UpperBound};
use ComponentGroup::{NonTrivial, Trivial};

/// Expected data for one clause: every orbit it covers shares these values.
#[derive(Debug, Clone, Copy)]
pub struct ClauseExpect {
    pub clause: u8,
    pub orbits: u32,
    pub dim_z_k: u32,
    pub component_group: Option<ComponentGroup>,
    pub h1: u8,
    /// The value the clause states for `H²`.
    pub h2: CohomologyValue,
}

#[derive(Debug, Clone, Copy)]
pub struct FormExpect {
    pub name: &'static str,
    pub complex_type: CartanType,
    pub dim_center_m: u8,
    pub inner: bool,
    pub total: u32,
    pub clauses: &'static [ClauseExpect],
}

const fn c(
    clause: u8,
    orbits: u32,
    dim_z_k: u32,
    component_group: Option<ComponentGroup>,
    h1: u8,
    h2: CohomologyValue,
) -> ClauseExpect {
    ClauseExpect {
        clause,
        orbits,
        dim_z_k,
        component_group,
        h1,
        h2,
    }
}

const T: Option<ComponentGroup> = Some(Trivial);
const N: Option<ComponentGroup> = Some(NonTrivial);
const U: Option<ComponentGroup> = None;

#[rustfmt::skip]
pub const REGISTRY: [FormExpect; 12] = [
    FormExpect {
        name: "G2(2)", complex_type: CartanType::G2, dim_center_m: 0, inner: true, total: 5,
        clauses: &[c(1, 2, 1, T, 0, Exact(1)), c(2, 3, 0, U, 0, Exact(0))],
    },
    FormExpect {
        name: "F4(4)", complex_type: CartanType::F4, dim_center_m: 0, inner: true, total: 26,
        clauses: &[
            c(1, 5, 1, T, 0, Exact(1)),
            c(2, 5, 1, N, 0, UpperBound(1)),
            c(3, 2, 2, N, 0, UpperBound(2)),
            c(4, 14, 0, U, 0, Exact(0)),
        ],
    },
    FormExpect {
        name: "F4(-20)", complex_type: CartanType::F4, dim_center_m: 0, inner: true, total: 2,
        clauses: &[c(1, 2, 0, U, 0, Exact(0))],
    },
    FormExpect {
        name: "E6(6)", complex_type: CartanType::E6, dim_center_m: 0, inner: false, total: 23,
        clauses: &[
            c(1, 3, 1, T, 0, Exact(1)),
            c(2, 5, 1, N, 0, UpperBound(1)),
            c(3, 15, 0, U, 0, Exact(0)),
        ],
    },
    FormExpect {
        name: "E6(2)", complex_type: CartanType::E6, dim_center_m: 0, inner: true, total: 37,
        clauses: &[
            c(1, 8, 0, U, 0, Exact(0)),
            c(2, 9, 2, T, 0, Exact(2)),
            c(3, 3, 2, N, 0, UpperBound(2)),
            c(4, 1, 1, N, 0, UpperBound(1)),
            c(5, 16, 1, T, 0, Exact(1)),
        ],
    },
    FormExpect {
        name: "E6(-14)", complex_type: CartanType::E6, dim_center_m: 1, inner: true, total: 12,
        clauses: &[c(1, 1, 0, U, 1, Exact(0)), c(2, 11, 1, U, 0, UpperBound(1))],
    },
    FormExpect {
        name: "E6(-26)", complex_type: CartanType::E6, dim_center_m: 0, inner: false, total: 2,
        clauses: &[c(1, 2, 0, U, 0, Exact(0))],
    },
    FormExpect {
        name: "E7(7)", complex_type: CartanType::E7, dim_center_m: 0, inner: true, total: 94,
        clauses: &[
            c(1, 1, 3, T, 0, Exact(3)),
            c(2, 9, 2, T, 0, Exact(2)),
            c(3, 24, 1, T, 0, Exact(1)),
            c(4, 11, 1, N, 0, UpperBound(1)),
            c(5, 8, 2, N, 0, UpperBound(2)),
            c(6, 2, 3, N, 0, UpperBound(3)),
            c(7, 39, 0, U, 0, Exact(0)),
        ],
    },
    FormExpect {
        name: "E7(-5)", complex_type: CartanType::E7, dim_center_m: 0, inner: true, total: 37,
        clauses: &[
            c(1, 2, 2, T, 0, Exact(2)),
            c(2, 12, 1, T, 0, Exact(1)),
            c(3, 2, 2, N, 0, UpperBound(2)),
            c(4, 4, 1, N, 0, UpperBound(1)),
            c(5, 17, 0, U, 0, Exact(0)),
        ],
    },
    FormExpect {
        name: "E7(-25)", complex_type: CartanType::E7, dim_center_m: 1, inner: true, total: 22,
        clauses: &[c(1, 10, 0, T, 1, Exact(0)), c(2, 12, 1, T, 0, UpperBound(1))],
    },
    FormExpect {
        name: "E8(8)", complex_type: CartanType::E8, dim_center_m: 0, inner: true, total: 115,
        clauses: &[
            c(1, 4, 2, T, 0, Exact(2)),
            c(2, 26, 1, T, 0, Exact(1)),
            c(3, 1, 3, N, 0, UpperBound(3)),
            c(4, 8, 2, N, 0, UpperBound(2)),
            c(5, 24, 1, N, 0, UpperBound(1)),
            c(6, 52, 0, U, 0, Exact(0)),
        ],
    },
    FormExpect {
        name: "E8(-24)", complex_type: CartanType::E8, dim_center_m: 0, inner: true, total: 36,
        clauses: &[
            c(1, 13, 1, T, 0, Exact(1)),
            c(2, 2, 1, N, 0, UpperBound(1)),
            c(3, 21, 0, U, 0, Exact(0)),
        ],
    },
];

/// Root counts of the exceptional types.
pub const ROOT_COUNTS: [(CartanType, usize); 5] = [
    (CartanType::G2, 12),
    (CartanType::F4, 48),
    (CartanType::E6, 72),
    (CartanType::E7, 126),
    (CartanType::E8, 240),
];

pub fn provenance_tag(algebra: &str, clause: u8) -> String {
    format!("{algebra}/{clause}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub description: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn get(&self, check_id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check_id == check_id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Report(Vec<CheckResult>);

impl Report {
    fn push(&mut self, id: impl Into<String>, description: impl Into<String>, problems: Vec<String>) {
        let (status, detail) = if problems.is_empty() {
            (Status::Pass, String::new())
        } else {
            (Status::Fail, problems.join("; "))
        };
        self.0.push(CheckResult {
            check_id: id.into(),
            description: description.into(),
            status,
            detail,
        });
    }
}

pub fn validate_all(catalog: &Catalog) -> ValidationReport {
    let mut report = Report(Vec::new());
    let forms: HashMap<&str, &RealForm> = catalog.forms().iter().map(|f| (f.name.as_str(), f)).collect();

    for exp in &REGISTRY {
        let problems = match forms.get(exp.name) {
            None => vec!["block missing".to_string()],
            Some(f) if f.total != exp.total => {
                vec![format!("{}: total {} != {}", exp.name, f.total, exp.total)]
            }
            Some(_) => vec![],
        };
        report.push(
            format!("a.total.{}", exp.name),
            format!("{} has {} nonzero orbits", exp.name, exp.total),
            problems,
        );
    }

    for exp in &REGISTRY {
        let problems = match forms.get(exp.name) {
            None => vec!["block missing".to_string()],
            Some(f) if f.orbit_count() != f.total => vec![format!(
                "{}: {} explicit + {} remainder != total {}",
                exp.name,
                f.explicit_count(),
                f.remainder_count(),
                f.total
            )],
            Some(_) => vec![],
        };
        report.push(
            format!("b.partition.{}", exp.name),
            format!("{} explicit and remainder orbits add up", exp.name),
            problems,
        );
    }

    check_bound(catalog, &mut report);
    check_structure(&forms, &mut report);
    check_h1_support(catalog, &mut report);
    check_roots(&mut report);
    check_fold(&mut report);
    check_erratum(&forms, &mut report);
    check_provenance(catalog, &mut report);
    check_clauses(catalog, &mut report);

    ValidationReport { checks: report.0 }
}

/// Type and `H²` of one catalog entry, or why it could not be computed.
fn evaluate(
    form: &RealForm,
    dim_z_k: u32,
    cg: Option<ComponentGroup>,
) -> Result<(OrbitType, CohomologyValue), String> {
    let ty = classify_entry(dim_z_k, cg, form.m_semisimple()).map_err(|e| e.to_string())?;
    Ok((ty, h2_for(ty, dim_z_k)))
}

/// (display label, orbit count, dim z(k), component group, h1, provenance)
type Entry<'a> = (String, u32, u32, Option<ComponentGroup>, u8, &'a str);

fn entries(form: &RealForm) -> Vec<Entry<'_>> {
    let mut v: Vec<_> = form
        .records
        .iter()
        .map(|r| {
            (
                form.format_label(&r.label),
                1,
                r.dim_z_k,
                r.component_group,
                r.h1,
                r.provenance.as_str(),
            )
        })
        .collect();
    v.extend(form.remainders.iter().map(|r| {
        (
            format!("({} unlisted)", r.count),
            r.count,
            r.dim_z_k,
            r.component_group,
            r.h1,
            r.provenance.as_str(),
        )
    }));
    v
}

fn check_bound(catalog: &Catalog, report: &mut Report) {
    let mut problems = Vec::new();
    for form in catalog.forms() {
        for (label, _, dim, cg, _, _) in entries(form) {
            match evaluate(form, dim, cg) {
                Ok((_, v)) if v.n() > dim => {
                    problems.push(format!("{} {label}: {v} exceeds dim z(k) {dim}", form.name))
                }
                Ok(_) => {}
                Err(e) => problems.push(format!("{} {label}: {e}", form.name)),
            }
        }
    }
    report.push("c.bound", "H2 never exceeds dim z(k)", problems);
}

fn check_structure(forms: &HashMap<&str, &RealForm>, report: &mut Report) {
    for exp in &REGISTRY {
        let mut problems = Vec::new();
        if let Some(f) = forms.get(exp.name) {
            if f.complex_type != exp.complex_type {
                problems.push(format!("complex type {} != {}", f.complex_type, exp.complex_type));
            }
            if f.dim_center_m != exp.dim_center_m {
                problems.push(format!("dim z(m) {} != {}", f.dim_center_m, exp.dim_center_m));
            }
            if f.inner != exp.inner {
                problems.push(format!("inner flag {} != {}", f.inner, exp.inner));
            }
            let want_len = if exp.inner { exp.complex_type.rank() } else { 4 };
            if f.label_length != want_len {
                problems.push(format!("label length {} != {want_len}", f.label_length));
            }
            match f.compact_rank() {
                Ok(r) if (r == f.complex_type.rank()) != f.inner => problems.push(format!(
                    "rank m_C = {r} vs rank g_C = {} disagrees with inner = {}",
                    f.complex_type.rank(),
                    f.inner
                )),
                Ok(_) => {}
                Err(e) => problems.push(e.to_string()),
            }
            if let Some(r) = f.records.iter().find(|r| r.label.len() != f.label_length) {
                problems.push(format!("label {} has the wrong length", r.label));
            }
        } else {
            problems.push("block missing".into());
        }
        report.push(
            format!("d.structure.{}", exp.name),
            format!("{} type, center, inner flag and label length", exp.name),
            problems,
        );
    }
}

fn check_h1_support(catalog: &Catalog, report: &mut Report) {
    let mut problems = Vec::new();
    let mut per_form: Vec<(String, u32)> = Vec::new();
    for form in catalog.forms() {
        let mut ones = 0;
        for (label, count, dim, _, h1, _) in entries(form) {
            if h1 == 0 {
                continue;
            }
            ones += count;
            if form.m_semisimple() {
                problems.push(format!("{} {label}: H1 = 1 but m is semisimple", form.name));
            }
            if dim != 0 {
                problems.push(format!("{} {label}: H1 = 1 but z(k) != 0", form.name));
            }
        }
        if ones > 0 {
            per_form.push((form.name.clone(), ones));
        }
    }
    let want = vec![("E6(-14)".to_string(), 1), ("E7(-25)".to_string(), 10)];
    if per_form != want {
        problems.push(format!("H1 = 1 orbits {per_form:?}, expected {want:?}"));
    }
    report.push(
        "e.h1_support",
        "H1 = 1 exactly for one E6(-14) and ten E7(-25) orbits",
        problems,
    );
}

fn check_roots(report: &mut Report) {
    for (ty, want) in ROOT_COUNTS {
        let problems = match RootSystem::new(ty) {
            Ok(rs) => {
                let mut p = Vec::new();
                if rs.roots().len() != want {
                    p.push(format!("{ty}: {} roots, expected {want}", rs.roots().len()));
                }
                if rs.roots().len() + ty.rank() != ty.algebra_dimension() {
                    p.push(format!("{ty}: roots + rank != dim g"));
                }
                p
            }
            Err(e) => vec![e.to_string()],
        };
        report.push(
            format!("f.roots.{ty}"),
            format!("{ty} has {want} roots"),
            problems,
        );
    }
}

fn check_fold(report: &mut Report) {
    let mut got = BTreeSet::new();
    let mut problems = Vec::new();
    for conv in [FoldConvention::OrbitSum, FoldConvention::TwistedAffine] {
        match fold_e6(&FoldingSpec::e6(conv)) {
            Ok(t) => {
                got.insert(t.to_string());
            }
            Err(e) => problems.push(format!("{conv}: {e}")),
        }
    }
    let want: BTreeSet<String> = ["C4", "F4"].map(String::from).into();
    if problems.is_empty() && got != want {
        problems.push(format!("folded types {got:?}, expected {want:?}"));
    }
    report.push("g.fold", "E6 folds to F4 and C4", problems);
}

fn check_erratum(forms: &HashMap<&str, &RealForm>, report: &mut Report) {
    let mut problems = Vec::new();
    let label = OrbitLabel::new(vec![2, 0, 0, 0]);
    match forms.get("E6(6)").map(|f| (f, f.lookup(&label))) {
        Some((f, Ok(r))) => match evaluate(f, r.dim_z_k, r.component_group) {
            Ok((OrbitType::III, _)) => {}
            Ok((ty, _)) => problems.push(format!("label 2000 is type {ty}, expected III")),
            Err(e) => problems.push(e),
        },
        Some((_, Err(e))) => problems.push(e.to_string()),
        None => problems.push("E6(6) block missing".into()),
    }
    report.push("h.erratum", "E6(6) label 2000 has z(k) = 0 (type III)", problems);
}

fn check_provenance(catalog: &Catalog, report: &mut Report) {
    let mut problems = Vec::new();
    let known: BTreeSet<String> = REGISTRY
        .iter()
        .flat_map(|f| f.clauses.iter().map(move |c| provenance_tag(f.name, c.clause)))
        .collect();
    let mut used = BTreeSet::new();
    for form in catalog.forms() {
        for (label, _, _, _, _, prov) in entries(form) {
            if !known.contains(prov) || !prov.starts_with(&format!("{}/", form.name)) {
                problems.push(format!(
                    "{} {label}: provenance `{prov}` is not a clause of this algebra",
                    form.name
                ));
            }
            used.insert(prov.to_string());
        }
    }
    for tag in known.difference(&used) {
        problems.push(format!("clause {tag} has no entry"));
    }
    report.push(
        "i.provenance",
        "every entry cites a clause and every clause is cited",
        problems,
    );
}

fn check_clauses(catalog: &Catalog, report: &mut Report) {
    for fexp in &REGISTRY {
        let form = catalog.forms().iter().find(|f| f.name == fexp.name);
        for cexp in fexp.clauses {
            let tag = provenance_tag(fexp.name, cexp.clause);
            let mut problems = Vec::new();
            let mut orbits = 0;
            if let Some(form) = form {
                for (label, count, dim, cg, h1, prov) in entries(form) {
                    if prov != tag {
                        continue;
                    }
                    orbits += count;
                    if dim != cexp.dim_z_k {
                        problems.push(format!("{label}: dim z(k) {dim} != {}", cexp.dim_z_k));
                    }
                    if cg != cexp.component_group {
                        problems.push(format!(
                            "{label}: component group {cg:?} != {:?}",
                            cexp.component_group
                        ));
                    }
                    if h1 != cexp.h1 {
                        problems.push(format!("{label}: h1 {h1} != {}", cexp.h1));
                    }
                    match evaluate(form, dim, cg) {
                        Ok((_, v)) if v != cexp.h2 => {
                            problems.push(format!("{label}: H2 {v}, clause states {}", cexp.h2))
                        }
                        Ok(_) => {}
                        Err(e) => problems.push(format!("{label}: {e}")),
                    }
                }
            }
            if orbits != cexp.orbits {
                problems.push(format!("clause covers {orbits} orbits, expected {}", cexp.orbits));
            }
            report.push(
                format!("j.clause.{tag}"),
                format!("{tag}: {} orbits with H2 {}", cexp.orbits, cexp.h2),
                problems,
            );
        }
    }
}
