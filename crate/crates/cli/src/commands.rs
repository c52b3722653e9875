use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use solweights::catalog::table::Spec;
use solweights::catalog::System;
use solweights::lie::{assemble_series, exotic_check, kd_at, kd_poly, owc_check, Branch, Series, SeriesGroup, TOP};
use solweights::poly::verify::{fit_row, fitted_m, fitted_table, verify_level, verify_m, verify_wpdod, DiffReport, FittedRow};
use solweights::poly::{Family, GoldenTable, RationalPoly};
use solweights::weights::{conjecture_checks, m_summary, WeightStore};

use crate::args::{Cli, Command, InterpolateArgs, LieArgs, OwcArgs, VerifyArgs, WeightsArgs};
use crate::output::Output;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(solweights::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Compute(e) => e.fmt(f),
        }
    }
}

impl From<solweights::Error> for CliError {
    fn from(e: solweights::Error) -> CliError {
        CliError::Compute(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> Result<Output> {
    let store = match &cli.cache_dir {
        Some(d) => WeightStore::with_cache_dir(d),
        None => WeightStore::new(),
    }
    .with_progress(!cli.quiet);
    match &cli.command {
        Command::Weights(a) => weights(&store, a),
        Command::Interpolate(a) => interpolate(&store, a),
        Command::Verify(a) => verify(&store, a),
        Command::Lie(a) => lie_cmd(a),
        Command::Owc(a) => owc(&store, a),
    }
}

fn resolve_specs(ids: &[String]) -> Result<Option<Vec<Spec>>> {
    if ids.is_empty() || ids.iter().any(|s| s.eq_ignore_ascii_case("all")) {
        return Ok(None);
    }
    ids.iter().map(|s| s.parse::<Spec>().map_err(|_| CliError::Usage(format!("unknown row {s:?}")))).collect::<Result<Vec<_>>>().map(Some)
}

fn poly_opt(p: &Option<RationalPoly>) -> String {
    p.as_ref().map_or_else(|| "-".into(), |p| p.to_string())
}

#[derive(Serialize)]
struct WeightRecord {
    spec: &'static str,
    system: System,
    l: u32,
    d: i64,
    w: i64,
}

fn weights(store: &WeightStore, a: &WeightsArgs) -> Result<Output> {
    let explicit = resolve_specs(&a.spec)?;
    let specs = explicit.clone().unwrap_or_else(|| Spec::all().collect());
    let mut keys = Vec::new();
    for &spec in &specs {
        let before = keys.len();
        for system in a.system.systems() {
            for &l in &a.l.0 {
                if Spec::rows_at(l, system).contains(&spec) {
                    keys.push((spec, system, l));
                }
            }
        }
        if explicit.is_some() && keys.len() == before {
            return Err(CliError::Usage(format!("{} is not a row for the requested system and levels", spec.id())));
        }
    }
    let rows = store.rows(&keys)?;
    let mut out = Vec::new();
    for (&(spec, system, l), w) in keys.iter().zip(&rows) {
        match a.d_offset {
            Some(f) => {
                let d = f.at(l);
                let v = u32::try_from(d).ok().and_then(|d| w.get(&d).copied()).unwrap_or(0);
                out.push(WeightRecord { spec: spec.id(), system, l, d, w: v });
            }
            None => out.extend(w.iter().map(|(&d, &v)| WeightRecord { spec: spec.id(), system, l, d: d as i64, w: v })),
        }
    }
    Ok(Output::new(&out, &out, true))
}

#[derive(Serialize)]
struct FitRecord {
    label: String,
    system: System,
    family: String,
    fitted: String,
    expected: String,
    status: &'static str,
}

fn interpolate(store: &WeightStore, a: &InterpolateArgs) -> Result<Output> {
    let filter = resolve_specs(&a.spec)?;
    let t1 = GoldenTable::table1();
    let t3 = GoldenTable::table3();
    let mut fitted: Vec<FittedRow> = Vec::new();
    let mut records = Vec::new();
    for system in a.system.systems() {
        let specs: Vec<Spec> = Spec::rows_at(1, system).into_iter().filter(|s| filter.as_ref().map_or(true, |f| f.contains(s))).collect();
        let keys: Vec<_> = specs.iter().flat_map(|&s| solweights::poly::verify::sample_levels(s).into_iter().map(move |l| (s, system, l))).collect();
        store.rows(&keys)?;
        let rows = specs.iter().map(|&s| fit_row(store, s, system)).collect::<solweights::Result<Vec<_>>>()?;
        for r in &rows {
            let label = r.spec.id();
            for (&c, p) in &r.cells {
                let family = Family::Defect(r.family(c));
                let expected = t3.get(label, system, family).cloned();
                let status = if expected.as_ref() == Some(p) { "ok" } else { "mismatch" };
                records.push(FitRecord { label: label.into(), system, family: family.to_string(), fitted: p.to_string(), expected: poly_opt(&expected), status });
            }
        }
        if filter.is_none() {
            for (family, p) in fitted_m(&rows) {
                let expected = t1.get("m", system, family).cloned();
                let status = if expected.clone().unwrap_or_default() == p { "ok" } else { "mismatch" };
                records.push(FitRecord { label: "m".into(), system, family: family.to_string(), fitted: p.to_string(), expected: poly_opt(&expected), status });
            }
        }
        fitted.extend(rows);
    }
    if let Some(f) = &filter {
        if let Some(s) = f.iter().find(|s| !fitted.iter().any(|r| r.spec == **s)) {
            return Err(CliError::Usage(format!("{} is not a generic row for the requested system", s.id())));
        }
    }
    let mut table = fitted_table(&fitted);
    if filter.is_some() {
        table.entries.retain(|e| e.label != "m");
    }
    Ok(Output::new(&records, &table, true))
}

#[derive(Serialize)]
struct DiffRecord {
    table: u8,
    label: String,
    system: System,
    family: String,
    expected: String,
    got: String,
    status: &'static str,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    passed: bool,
    mismatches: usize,
    cells: &'a DiffReport,
}

fn verify(store: &WeightStore, a: &VerifyArgs) -> Result<Output> {
    let mut report = DiffReport::default();
    for system in a.system.systems() {
        match &a.l {
            None => {
                report.extend(verify_wpdod(store, system)?);
                report.extend(verify_m(store, system)?);
            }
            Some(levels) => {
                for &l in &levels.0 {
                    report.extend(verify_level(store, system, l)?);
                }
            }
        }
    }
    let records: Vec<DiffRecord> = report
        .cells
        .iter()
        .map(|c| DiffRecord {
            table: c.table,
            label: c.label.clone(),
            system: c.system,
            family: c.family.to_string(),
            expected: poly_opt(&c.expected),
            got: poly_opt(&c.got),
            status: if c.ok() { "ok" } else { "mismatch" },
        })
        .collect();
    let passed = report.passed();
    let json = VerifyJson { passed, mismatches: report.mismatches().len(), cells: &report };
    Ok(Output::new(&records, &json, passed))
}

#[derive(Serialize)]
struct SeriesRecord {
    group: &'static str,
    branch: Branch,
    row: usize,
    label: String,
    class_count: String,
    index: String,
    degree: String,
    v2: String,
    defect: String,
}

#[derive(Serialize)]
struct KdRecord {
    group: &'static str,
    branch: Branch,
    d: String,
    k: String,
}

#[derive(Serialize)]
struct KdLevelRecord {
    group: &'static str,
    branch: Branch,
    l: u32,
    d: i64,
    k: String,
    families: String,
}

fn series_list(a: &LieArgs) -> Result<Vec<Series>> {
    let mut v = Vec::new();
    for g in a.group.groups() {
        for b in a.branch.branches() {
            v.push(assemble_series(g, b)?);
        }
    }
    Ok(v)
}

fn lie_cmd(a: &LieArgs) -> Result<Output> {
    let all = series_list(a)?;
    if a.series {
        let mut out = Vec::new();
        for s in &all {
            for (i, r) in s.rows.iter().enumerate() {
                for (d, v) in r.degrees.iter().zip(&r.valuations) {
                    out.push(SeriesRecord {
                        group: s.group.name(),
                        branch: s.branch,
                        row: i + 1,
                        label: r.label.clone(),
                        class_count: r.class_count.to_string(),
                        index: r.index.to_string(),
                        degree: d.to_string(),
                        v2: v.to_string(),
                        defect: (TOP - *v).to_string(),
                    });
                }
            }
        }
        return Ok(Output::new(&out, &out, true));
    }
    if let Some(levels) = &a.l {
        let mut out = Vec::new();
        for s in &all {
            for &l in &levels.0 {
                let mut fams: BTreeMap<i64, Vec<String>> = BTreeMap::new();
                for f in kd_poly(s).keys() {
                    fams.entry(f.at(l)).or_default().push(f.to_string());
                }
                for (d, k) in kd_at(s, l) {
                    let families = fams.get(&d).map(|v| v.join(";")).unwrap_or_default();
                    out.push(KdLevelRecord { group: s.group.name(), branch: s.branch, l, d, k: k.to_string(), families });
                }
            }
        }
        return Ok(Output::new(&out, &out, true));
    }
    let mut out = Vec::new();
    for s in &all {
        for (f, p) in kd_poly(s) {
            out.push(KdRecord { group: s.group.name(), branch: s.branch, d: f.to_string(), k: p.to_string() });
        }
        out.push(KdRecord { group: s.group.name(), branch: s.branch, d: "total".into(), k: s.character_count().to_string() });
    }
    Ok(Output::new(&out, &out, true))
}

#[derive(Serialize)]
struct OwcRecord {
    check: &'static str,
    system: System,
    branch: String,
    l: String,
    key: String,
    lhs: String,
    rhs: String,
    status: &'static str,
}

fn status(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "mismatch"
    }
}

fn owc(store: &WeightStore, a: &OwcArgs) -> Result<Output> {
    let t1 = GoldenTable::table1();
    let m_of = |system| -> BTreeMap<Family, RationalPoly> { t1.row("m", system).iter().map(|e| (e.family, e.poly.clone())).collect() };
    let (m_h, m_f) = (m_of(System::H), m_of(System::F));
    let mut out = Vec::new();
    let rec = |check, system, branch: String, l: String, key: String, lhs: String, rhs: String, status| OwcRecord { check, system, branch, l, key, lhs, rhs, status };
    for b in a.branch.branches() {
        let spin7 = assemble_series(SeriesGroup::Spin7, b)?;
        let spets = assemble_series(SeriesGroup::Spets, b)?;
        for c in owc_check(&spin7, &m_h).families {
            out.push(rec("spin7 = m(H)", System::H, b.to_string(), "x".into(), c.family.to_string(), c.kd.to_string(), c.m.to_string(), status(c.passed)));
        }
        let ex = exotic_check(&spets, &m_f);
        for c in &ex.families {
            out.push(rec("spets = m(F)", System::F, b.to_string(), "x".into(), c.family.to_string(), c.kd.to_string(), c.m.to_string(), status(c.passed)));
        }
        for (f, p) in &ex.residual {
            let want = if f.slope == 0 && f.intercept == 0 { RationalPoly::from_ints(&[6]) } else { RationalPoly::default() };
            out.push(rec("spets residual", System::F, b.to_string(), "x".into(), f.to_string(), p.to_string(), want.to_string(), status(*p == want)));
        }
        out.push(rec("spets total = m(F) + 6", System::F, b.to_string(), "x".into(), "total".into(), ex.total.to_string(), ex.expected_total.to_string(), status(ex.total == ex.expected_total)));

        for &l in a.l.as_ref().map_or(&[][..], |v| &v.0[..]) {
            for (system, series, m) in [(System::H, &spin7, &m_h), (System::F, &spets, &m_f)] {
                let computed = m_summary(store, system, l)?;
                let kd = kd_at(series, l);
                let listed: BTreeSet<i64> = m.keys().filter_map(|f| match f {
                    Family::Defect(f) => Some(f.at(l)),
                    Family::Total => None,
                }).collect();
                let mut ds: BTreeSet<i64> = kd.keys().copied().collect();
                ds.extend(computed.by_d.keys().map(|&d| d as i64));
                for d in ds {
                    let k = kd.get(&d).cloned().unwrap_or_else(BigRational::zero);
                    let mv = computed.by_d.get(&(d as u32)).copied().unwrap_or(0);
                    let compared = system == System::H || listed.contains(&d);
                    let st = if compared { status(k == BigRational::from_integer(mv.into())) } else if mv == 0 { "excluded" } else { "mismatch" };
                    let check = if system == System::H { "spin7 = m(H)" } else { "spets = m(F)" };
                    out.push(rec(check, system, b.to_string(), l.to_string(), d.to_string(), k.to_string(), mv.to_string(), st));
                }
            }
        }
    }
    for &l in a.l.as_ref().map_or(&[][..], |v| &v.0[..]) {
        for system in [System::H, System::F] {
            for it in conjecture_checks(store, system, l)?.items {
                out.push(rec("conjecture", system, "-".into(), l.to_string(), format!("({}) {}", it.item, it.statement), it.lhs, it.rhs, status(it.passed)));
            }
        }
    }
    let ok = out.iter().all(|r| r.status != "mismatch");
    Ok(Output::new(&out, &out, ok))
}
