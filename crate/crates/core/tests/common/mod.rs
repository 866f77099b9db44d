#![allow(dead_code)]

use std::collections::BTreeMap;

use orbitcoh::{Catalog, CohomologyValue, OrbitLabel};

pub const STATED_H2: &str = include_str!("../data/stated_h2.tsv");

/// Orbit totals per algebra, transcribed by hand.
pub const TOTALS: [(&str, u32); 12] = [
    ("G2(2)", 5),
    ("F4(4)", 26),
    ("F4(-20)", 2),
    ("E6(6)", 23),
    ("E6(2)", 37),
    ("E6(-14)", 12),
    ("E6(-26)", 2),
    ("E7(7)", 94),
    ("E7(-5)", 37),
    ("E7(-25)", 22),
    ("E8(8)", 115),
    ("E8(-24)", 36),
];

/// The orbits with a one-dimensional first cohomology.
pub const H1_NONZERO: [(&str, &str); 11] = [
    ("E6(-14)", "40000 -2"),
    ("E7(-25)", "000000 2"),
    ("E7(-25)", "000000 -2"),
    ("E7(-25)", "000002 -2"),
    ("E7(-25)", "200000 -2"),
    ("E7(-25)", "200002 -2"),
    ("E7(-25)", "400000 -2"),
    ("E7(-25)", "000004 -6"),
    ("E7(-25)", "200002 -6"),
    ("E7(-25)", "400004 -6"),
    ("E7(-25)", "400004 -10"),
];

/// (complex type, Lie algebra dimension, rank) for the exceptional types.
pub const DIMENSIONS: [(&str, usize, usize); 5] = [
    ("G2", 14, 2),
    ("F4", 52, 4),
    ("E6", 78, 6),
    ("E7", 133, 7),
    ("E8", 248, 8),
];

#[derive(Debug, Default)]
pub struct StatedForm {
    pub listed: Vec<(OrbitLabel, CohomologyValue)>,
    /// Number of unlisted orbits and the value they share; `None` count means all of them.
    pub rest: Option<(Option<u32>, CohomologyValue)>,
}

fn value(kind: &str, n: &str) -> CohomologyValue {
    let n: u32 = n.parse().expect("integer value");
    match kind {
        "exact" => CohomologyValue::Exact(n),
        "upper-bound" => CohomologyValue::UpperBound(n),
        other => panic!("unknown kind {other}"),
    }
}

/// Parses the stated-value fixture, resolving label lengths from the catalog.
pub fn stated(catalog: &Catalog) -> BTreeMap<String, StatedForm> {
    let mut out: BTreeMap<String, StatedForm> = BTreeMap::new();
    for line in STATED_H2
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
    {
        let f: Vec<&str> = line.split('\t').collect();
        assert_eq!(f.len(), 4, "bad fixture line {line:?}");
        let entry = out.entry(f[0].to_string()).or_default();
        let v = value(f[2], f[3]);
        if let Some(rest) = f[1].strip_prefix('*') {
            let count = if rest == "all" {
                None
            } else {
                Some(rest.parse().unwrap())
            };
            entry.rest = Some((count, v));
        } else {
            let len = catalog.form(f[0]).unwrap().label_length;
            let label = OrbitLabel::parse(f[1], len).unwrap_or_else(|e| panic!("{line:?}: {e}"));
            entry.listed.push((label, v));
        }
    }
    out
}

/// Every orbit in the catalog with its computed H2, remainder classes expanded by count.
pub fn all_h2(catalog: &Catalog) -> Vec<(String, Option<OrbitLabel>, u32, CohomologyValue)> {
    let mut out = Vec::new();
    for form in catalog.forms() {
        for r in &form.records {
            out.push((
                form.name.clone(),
                Some(r.label.clone()),
                r.dim_z_k,
                orbitcoh::cohomology::h2(r, form).unwrap(),
            ));
        }
        for c in &form.remainders {
            let v = orbitcoh::cohomology::h2_remainder(c, form).unwrap();
            for _ in 0..c.count {
                out.push((form.name.clone(), None, c.dim_z_k, v));
            }
        }
    }
    out
}

/// Differences between the catalog and the stated values, one message per mismatch.
pub fn stated_mismatches(catalog: &Catalog) -> Vec<String> {
    let mut bad = Vec::new();
    let stated = stated(catalog);
    for form in catalog.forms() {
        let Some(s) = stated.get(&form.name) else {
            bad.push(format!("{}: no stated values", form.name));
            continue;
        };
        for (label, want) in &s.listed {
            match form.lookup(label) {
                Ok(r) => {
                    let got = orbitcoh::cohomology::h2(r, form).unwrap();
                    if got != *want {
                        bad.push(format!("{} {}: got {got}, stated {want}", form.name, label));
                    }
                }
                Err(e) => bad.push(format!("{} {}: {e}", form.name, label)),
            }
        }
        let listed: Vec<&OrbitLabel> = s.listed.iter().map(|(l, _)| l).collect();
        let mut rest = Vec::new();
        for r in form.records.iter().filter(|r| !listed.contains(&&r.label)) {
            rest.push((1, orbitcoh::cohomology::h2(r, form).unwrap()));
        }
        for c in &form.remainders {
            rest.push((c.count, orbitcoh::cohomology::h2_remainder(c, form).unwrap()));
        }
        let rest_count: u32 = rest.iter().map(|(n, _)| n).sum();
        match s.rest {
            None if rest_count > 0 => bad.push(format!("{}: {rest_count} orbits not stated", form.name)),
            None => {}
            Some((count, want)) => {
                if let Some(k) = count {
                    if k != rest_count {
                        bad.push(format!("{}: {rest_count} unlisted orbits, stated {k}", form.name));
                    }
                }
                for (_, got) in rest.iter().filter(|(_, got)| *got != want) {
                    bad.push(format!("{}: unlisted orbit got {got}, stated {want}", form.name));
                }
            }
        }
    }
    bad
}

pub fn golden_name(algebra: &str) -> String {
    format!("{}.txt", orbitcoh::catalog::alias(algebra))
}
