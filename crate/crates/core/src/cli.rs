//! The `orbitcoh` command line.
//!
//! Exit codes: 0 success, 2 usage or unknown input, 3 label not enumerated in
//! the catalog, 4 validation failure or corrupt dataset.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{Catalog, RealForm};
use crate::cohomology::{self, CohomologyValue, SummaryRow, TableRow};
use crate::error::Error;
use crate::rootsys::{fold_e6, CartanType, FoldConvention, FoldingSpec, RootSystem};
use crate::validate::{validate_all, Status};

/// Environment variable naming a dataset file to use instead of the embedded one.
pub const DATA_ENV: &str = "ORBITCOH_DATA";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNLISTED: i32 = 3;
pub const EXIT_INVALID: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "orbitcoh",
    version,
    about = "Cohomology of nilpotent orbits in real exceptional Lie algebras"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the orbits of an algebra
    List { algebra: String },
    /// Second cohomology of one orbit
    H2 { algebra: String, label: String },
    /// First cohomology of one orbit
    H1 { algebra: String, label: String },
    /// Every orbit of an algebra with its type, H2 and H1
    Table { algebra: String },
    /// Orbit tallies for one algebra or all of them
    Summary { algebra: Option<String> },
    /// Run the consistency checks
    Validate,
    /// Root system facts for a Cartan type
    Roots {
        cartan_type: String,
        /// Print only the number of roots
        #[arg(long)]
        count: bool,
        /// Print only the highest root
        #[arg(long)]
        highest: bool,
        /// Print the extended basis
        #[arg(long)]
        extended: bool,
    },
    /// Fold the E6 diagram
    Fold {
        source: String,
        #[arg(long)]
        convention: Option<String>,
    },
}

struct Failure {
    code: i32,
    message: String,
    /// Output produced before the failure, still written to stdout.
    partial: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnlistedLabel { .. } => EXIT_UNLISTED,
            Error::CatalogCorrupt(_) | Error::InconsistentInput(_) => EXIT_INVALID,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
            partial: String::new(),
        }
    }
}

type CmdResult = Result<String, Failure>;

/// Runs one invocation, writing to `out`/`err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure {
            code,
            message,
            partial,
        }) => {
            let _ = out.write_all(partial.as_bytes());
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn catalog_strict() -> Result<Catalog, Failure> {
    match std::env::var_os(DATA_ENV) {
        Some(path) => Ok(Catalog::from_path(path)?),
        None => Ok(Catalog::embedded().clone()),
    }
}

fn execute(cli: &Cli) -> CmdResult {
    let fmt = cli.format;
    match &cli.command {
        Command::List { algebra } => cmd_list(&catalog_strict()?, algebra, fmt),
        Command::H2 { algebra, label } => {
            cmd_cohomology(&catalog_strict()?, algebra, label, fmt, Degree::Two)
        }
        Command::H1 { algebra, label } => {
            cmd_cohomology(&catalog_strict()?, algebra, label, fmt, Degree::One)
        }
        Command::Table { algebra } => cmd_table(&catalog_strict()?, algebra, fmt),
        Command::Summary { algebra } => cmd_summary(&catalog_strict()?, algebra.as_deref(), fmt),
        Command::Validate => cmd_validate(fmt),
        Command::Roots {
            cartan_type,
            count,
            highest,
            extended,
        } => cmd_roots(cartan_type, *count, *highest, *extended, fmt),
        Command::Fold { source, convention } => cmd_fold(source, convention.as_deref(), fmt),
    }
}

fn component_name(cg: Option<crate::catalog::ComponentGroup>) -> &'static str {
    cg.map_or("-", |c| c.name())
}

fn cmd_list(catalog: &Catalog, algebra: &str, fmt: OutputFormat) -> CmdResult {
    let form = catalog.form(algebra)?;
    Ok(match fmt {
        OutputFormat::Json => json_line(&json!([form])),
        OutputFormat::Csv => {
            let mut rows = vec![cells([
                "label",
                "count",
                "dim_z_k",
                "component_group",
                "h1",
                "provenance",
            ])];
            rows.extend(list_rows(form));
            csv(&rows)
        }
        OutputFormat::Table => {
            let mut rows = vec![cells(["label", "count", "dim z(k)", "K/K0", "h1", "provenance"])];
            rows.extend(list_rows(form));
            table(&rows)
        }
    })
}

fn list_rows(form: &RealForm) -> Vec<Vec<String>> {
    let mut rows: Vec<Vec<String>> = form
        .records
        .iter()
        .map(|r| {
            vec![
                form.format_label(&r.label),
                "1".into(),
                r.dim_z_k.to_string(),
                component_name(r.component_group).into(),
                r.h1.to_string(),
                r.provenance.clone(),
            ]
        })
        .collect();
    rows.extend(form.remainders.iter().map(|r| {
        vec![
            format!("({} unlisted)", r.count),
            r.count.to_string(),
            r.dim_z_k.to_string(),
            component_name(r.component_group).into(),
            r.h1.to_string(),
            r.provenance.clone(),
        ]
    }));
    rows
}

#[derive(Clone, Copy)]
enum Degree {
    One,
    Two,
}

fn cmd_cohomology(
    catalog: &Catalog,
    algebra: &str,
    text: &str,
    fmt: OutputFormat,
    degree: Degree,
) -> CmdResult {
    let form = catalog.form(algebra)?;
    let label = form.parse_label(text)?;
    let value = if label.is_zero() {
        let (h1, h2) = cohomology::zero_orbit_cohomology();
        match degree {
            Degree::One => h1,
            Degree::Two => h2,
        }
    } else {
        let record = form.lookup(&label)?;
        match degree {
            Degree::One => cohomology::h1(record, form)?,
            Degree::Two => cohomology::h2(record, form)?,
        }
    };
    Ok(match fmt {
        OutputFormat::Json => {
            let key = match degree {
                Degree::One => "h1",
                Degree::Two => "h2",
            };
            json_line(&json!({
                "algebra": form.name,
                "label": label,
                key: value,
            }))
        }
        _ => format!("{value}\n"),
    })
}

fn table_json(form: &RealForm, rows: &[TableRow]) -> Value {
    let mut block = serde_json::to_value(form).expect("block serializes");
    let annotate = |entry: &mut Value, row: &TableRow| {
        let obj = entry.as_object_mut().expect("entry is an object");
        obj.insert("type".into(), json!(row.orbit_type));
        obj.insert("h2_kind".into(), json!(row.h2.kind()));
        obj.insert("h2_n".into(), json!(row.h2.n()));
    };
    let (explicit, rest): (Vec<&TableRow>, Vec<&TableRow>) = rows.iter().partition(|r| !r.is_remainder());
    if let Some(records) = block["records"].as_array_mut() {
        records.iter_mut().zip(explicit).for_each(|(e, r)| annotate(e, r));
    }
    if let Some(rems) = block["remainders"].as_array_mut() {
        rems.iter_mut().zip(rest).for_each(|(e, r)| annotate(e, r));
    }
    json!([block])
}

fn cmd_table(catalog: &Catalog, algebra: &str, fmt: OutputFormat) -> CmdResult {
    let form = catalog.form(algebra)?;
    let rows = cohomology::theorem_table(catalog, algebra)?;
    Ok(match fmt {
        OutputFormat::Json => json_line(&table_json(form, &rows)),
        OutputFormat::Csv => {
            let mut out = vec![cells([
                "label",
                "dim_z_k",
                "component_group",
                "type",
                "h2_kind",
                "h2_n",
                "h1",
                "provenance",
            ])];
            out.extend(rows.iter().map(|r| {
                vec![
                    r.label_text.clone(),
                    r.dim_z_k.to_string(),
                    component_name(r.component_group).into(),
                    r.orbit_type.to_string(),
                    r.h2.kind().into(),
                    r.h2.n().to_string(),
                    r.h1.n().to_string(),
                    r.provenance.clone(),
                ]
            }));
            csv(&out)
        }
        OutputFormat::Table => {
            let mut out = vec![cells([
                "label",
                "dim z(k)",
                "K/K0",
                "type",
                "H2",
                "",
                "H1",
                "provenance",
            ])];
            out.extend(rows.iter().map(|r| {
                let bound = match r.h2 {
                    CohomologyValue::UpperBound(_) => "≤",
                    CohomologyValue::Exact(_) => "",
                };
                vec![
                    r.label_text.clone(),
                    r.dim_z_k.to_string(),
                    component_name(r.component_group).into(),
                    r.orbit_type.to_string(),
                    r.h2.n().to_string(),
                    bound.into(),
                    r.h1.n().to_string(),
                    r.provenance.clone(),
                ]
            }));
            format!("{}\n{}", form.name, table(&out))
        }
    })
}

fn summary_cells(r: &SummaryRow) -> Vec<String> {
    [
        r.orbits,
        r.explicit,
        r.unlisted,
        r.type_i,
        r.type_ii,
        r.type_iii,
        r.exact,
        r.upper_bound,
        r.h1_nonzero,
    ]
    .iter()
    .map(u32::to_string)
    .fold(vec![r.scope.clone()], |mut v, s| {
        v.push(s);
        v
    })
}

fn cmd_summary(catalog: &Catalog, algebra: Option<&str>, fmt: OutputFormat) -> CmdResult {
    let s = cohomology::summary(catalog, algebra)?;
    if fmt == OutputFormat::Json {
        return Ok(json_line(&json!(s)));
    }
    let header = cells([
        "scope",
        "orbits",
        "explicit",
        "unlisted",
        "type_i",
        "type_ii",
        "type_iii",
        "exact",
        "upper_bound",
        "h1_nonzero",
    ]);
    let mut rows = vec![header];
    rows.extend(s.algebras.iter().map(summary_cells));
    if algebra.is_none() {
        rows.push(summary_cells(&s.total));
    }
    Ok(match fmt {
        OutputFormat::Csv => csv(&rows),
        _ => table(&rows),
    })
}

fn cmd_validate(fmt: OutputFormat) -> CmdResult {
    let catalog = match std::env::var_os(DATA_ENV) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| Failure {
                code: EXIT_INVALID,
                message: format!("{}: {e}", path.to_string_lossy()),
                partial: String::new(),
            })?;
            Catalog::parse(&text)?
        }
        None => Catalog::embedded().clone(),
    };
    let report = validate_all(&catalog);
    let text = match fmt {
        OutputFormat::Json => format!("{}\n", report.to_json()),
        OutputFormat::Csv => {
            let mut rows = vec![cells(["check_id", "status", "description", "detail"])];
            rows.extend(report.checks.iter().map(|c| {
                vec![
                    c.check_id.clone(),
                    status_name(c.status).into(),
                    c.description.clone(),
                    c.detail.clone(),
                ]
            }));
            csv(&rows)
        }
        OutputFormat::Table => {
            let mut s = String::new();
            for c in &report.checks {
                s.push_str(&format!(
                    "{:<4}  {:<24}  {}",
                    status_name(c.status).to_uppercase(),
                    c.check_id,
                    c.description
                ));
                if !c.detail.is_empty() {
                    s.push_str(&format!("  [{}]", c.detail));
                }
                s.push('\n');
            }
            let passed = report.checks.iter().filter(|c| c.status == Status::Pass).count();
            s.push_str(&format!("{passed}/{} checks passed\n", report.checks.len()));
            s
        }
    };
    if report.passed() {
        Ok(text)
    } else {
        let failed: Vec<&str> = report.failures().map(|c| c.check_id.as_str()).collect();
        Err(Failure {
            code: EXIT_INVALID,
            message: format!("validation failed: {}", failed.join(", ")),
            partial: text,
        })
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
    }
}

fn coeffs(c: &[i32]) -> String {
    c.iter().map(i32::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_roots(ty: &str, count: bool, highest: bool, extended: bool, fmt: OutputFormat) -> CmdResult {
    let ty: CartanType = ty.parse()?;
    let rs = RootSystem::new(ty)?;
    let eb = rs.extended_basis();
    if fmt == OutputFormat::Json {
        return Ok(json_line(&json!({
            "type": ty,
            "rank": ty.rank(),
            "roots": rs.roots().len(),
            "highest_root": rs.highest_root().coeffs(),
            "alpha_0": eb.alpha_0().coeffs(),
            "cartan_matrix": rs.cartan_matrix().rows(),
        })));
    }
    let mut s = String::new();
    if count {
        s.push_str(&format!("{}\n", rs.roots().len()));
    }
    if highest {
        s.push_str(&format!("{}\n", coeffs(rs.highest_root().coeffs())));
    }
    if extended {
        for (k, node) in eb.nodes().iter().enumerate() {
            let name = if k == eb.alpha_0_index() {
                "alpha_0".to_string()
            } else {
                format!("alpha_{}", k + 1)
            };
            s.push_str(&format!("{name} {}\n", coeffs(node.coeffs())));
        }
    }
    if s.is_empty() {
        s = format!(
            "type {ty}\nrank {}\nroots {}\nhighest {}\nalpha_0 {}\n",
            ty.rank(),
            rs.roots().len(),
            coeffs(rs.highest_root().coeffs()),
            coeffs(eb.alpha_0().coeffs())
        );
    }
    Ok(s)
}

fn cmd_fold(source: &str, convention: Option<&str>, fmt: OutputFormat) -> CmdResult {
    let ty: CartanType = source.parse()?;
    if ty != CartanType::E6 {
        return Err(Error::InvalidFolding(format!("only E6 is folded, got {ty}")).into());
    }
    let conventions: Vec<FoldConvention> = match convention {
        Some(c) => vec![c.parse()?],
        None => FoldConvention::ALL.to_vec(),
    };
    let mut results = Vec::new();
    for conv in conventions {
        results.push((conv, fold_e6(&FoldingSpec::e6(conv))?));
    }
    Ok(match (fmt, convention) {
        (OutputFormat::Json, _) => json_line(&Value::Object(
            results
                .iter()
                .map(|(c, t)| (c.name().to_string(), json!(t)))
                .collect(),
        )),
        (_, Some(_)) => format!("{}\n", results[0].1),
        (_, None) => results.iter().map(|(c, t)| format!("{c} {t}\n")).collect(),
    })
}

fn cells<const N: usize>(v: [&str; N]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn json_line(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json serializes"))
}

fn csv(rows: &[Vec<String>]) -> String {
    let quote = |s: &String| {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.clone()
        }
    };
    rows.iter()
        .map(|r| r.iter().map(quote).collect::<Vec<_>>().join(",") + "\n")
        .collect()
}

fn table(rows: &[Vec<String>]) -> String {
    let ncol = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncol)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s}{}", " ".repeat(widths[c] - s.chars().count())))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("orbitcoh").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn table_pads_and_trims() {
        let t = table(&[cells(["a", "bb"]), cells(["ccc", ""])]);
        assert_eq!(t, "a    bb\nccc\n");
    }

    #[test]
    fn csv_quotes() {
        assert_eq!(csv(&[cells(["a,b", "c"])]), "\"a,b\",c\n");
    }

    #[test]
    fn h2_lines() {
        assert_eq!(
            run_args(&["h2", "E7(7)", "1011101"]),
            (0, "exact 3\n".into(), String::new())
        );
        assert_eq!(run_args(&["h2", "F4(4)", "100 2"]).1, "upper-bound 1\n");
        assert_eq!(run_args(&["h1", "E6(-14)", "40000 -2"]).1, "exact 1\n");
        assert_eq!(run_args(&["h1", "E6_m14", "40000 -2"]).1, "exact 1\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["list", "X9(0)"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["h2", "F4(4)", "1001"]).0, EXIT_UNLISTED);
        assert_eq!(run_args(&["h2", "G2(2)", "1x"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["roots", "E9"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["fold", "E7"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["fold", "E6", "--convention", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn zero_orbit_from_any_algebra() {
        for alg in crate::catalog::ALGEBRA_NAMES {
            let form = Catalog::embedded().form(alg).unwrap();
            let zeros = "0".repeat(form.label_length);
            assert_eq!(run_args(&["h2", alg, &zeros]).1, "exact 0\n");
            assert_eq!(run_args(&["h1", alg, &zeros]).1, "exact 0\n");
        }
    }

    #[test]
    fn roots_and_fold() {
        assert_eq!(run_args(&["roots", "E8", "--count"]).1, "240\n");
        assert_eq!(run_args(&["roots", "G2", "--highest"]).1, "3 2\n");
        assert_eq!(run_args(&["fold", "E6", "--convention", "orbit-sum"]).1, "F4\n");
        assert_eq!(
            run_args(&["fold", "E6", "--convention", "twisted-affine"]).1,
            "C4\n"
        );
    }

    #[test]
    fn label_passes_through_json() {
        let (_, out, _) = run_args(&["--format", "json", "h2", "E7(-25)", "400004 -10"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["label"], json!([4, 0, 0, 0, 0, 4, -10]));
        assert_eq!(v["h2"], json!({"kind": "exact", "n": 0}));
    }
}
