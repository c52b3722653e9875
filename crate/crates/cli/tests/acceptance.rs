use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use solweights::catalog::table::{Catalog, Spec};
use solweights::catalog::System;
use solweights::characters::quaternion::{matches_dixon, quaternion_irr};
use solweights::lie::{assemble_series, exotic_check, owc_check, Branch, SeriesGroup};
use solweights::poly::verify::{fit_rows, fitted_m, verify_m, verify_wpdod, FittedRow};
use solweights::poly::{int, rat, Family, RationalPoly};
use solweights::weights::summary::class_counts;
use solweights::weights::{conjecture_checks, WeightStore};

type Outcome = Result<String, String>;

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn quaternion_layer() -> Outcome {
    for l in 0..=5u32 {
        let irr = quaternion_irr(l);
        let linear = irr.iter().filter(|c| c.degree == 1).count();
        let two = irr.iter().filter(|c| c.degree == 2).count();
        let faithful_center = irr.iter().filter(|c| !c.center_in_kernel).count();
        let shape = irr.len() == (1 << (l + 1)) + 3 && linear == 4 && two == (1 << (l + 1)) - 1 && faithful_center == 1 << l;
        if !shape {
            return Err(format!("l={l}: {} characters, {linear} linear, {two} of degree 2, {faithful_center} nontrivial on the center", irr.len()));
        }
        if l <= 4 && !matches_dixon(l).map_err(|e| e.to_string())? {
            return Err(format!("l={l}: labels differ from the Dixon table"));
        }
    }
    Ok("l = 0..5 counts, Dixon rows for l <= 4".into())
}

fn example(store: &WeightStore) -> Outcome {
    let want = RationalPoly::new(vec![rat(-3, 1), rat(8, 3), int(2), rat(-8, 3)]);
    let mut got = Vec::new();
    for l in [1u32, 2] {
        let w = store.w(Spec::CsU, System::F, l, 3 * l + 6).map_err(|e| e.to_string())?;
        if int(w) != want.at_level(l) {
            return Err(format!("l={l}: {w}, expected {}", want.at_level(l)));
        }
        got.push(w);
    }
    ensure(got == [-11, -131], format!("w = {got:?} at l = 1, 2"))
}

fn golden_table3(store: &WeightStore) -> Outcome {
    let mut cells = 0;
    for system in [System::H, System::F] {
        let r = verify_wpdod(store, system).map_err(|e| e.to_string())?;
        if let Some(c) = r.cells.iter().find(|c| !c.ok() || !c.presence_agrees()) {
            return Err(format!("{system:?} {} {}: expected {:?}, got {:?}", c.label, c.family, c.expected.as_ref().map(|p| p.to_string()), c.got.as_ref().map(|p| p.to_string())));
        }
        cells += r.cells.len();
    }
    Ok(format!("{cells} cells equal, presence included"))
}

fn summary_tables(store: &WeightStore, fits: &BTreeMap<System, Vec<FittedRow>>) -> Outcome {
    let totals = [
        (System::H, RationalPoly::new(vec![int(28), rat(92, 3), int(12), rat(4, 3)])),
        (System::F, RationalPoly::new(vec![rat(155, 7), rat(50, 3), int(4), rat(4, 21)])),
    ];
    for (system, want) in totals {
        let r = verify_m(store, system).map_err(|e| e.to_string())?;
        if let Some(c) = r.mismatches().first() {
            return Err(format!("{system:?} table {} {} {}: expected {:?}, got {:?}", c.table, c.label, c.family, c.expected.as_ref().map(|p| p.to_string()), c.got.as_ref().map(|p| p.to_string())));
        }
        let got = fitted_m(&fits[&system]).remove(&Family::Total).unwrap_or_default();
        if got != want {
            return Err(format!("{system:?} total {got}"));
        }
    }
    let m0 = |s| solweights::weights::m_summary(store, s, 0).map(|m| m.by_d);
    let (h, f) = (m0(System::H).map_err(|e| e.to_string())?, m0(System::F).map_err(|e| e.to_string())?);
    let split: Vec<(i64, i64)> = [6, 7, 8].iter().map(|d| (h[d], f[d])).collect();
    ensure(split == [(22, 5), (10, 6), (10, 2)], format!("family sums, totals and l = 0 cells equal; split cells {split:?}"))
}

fn class_count_identities(store: &WeightStore) -> Outcome {
    for l in 0..=2u32 {
        let x = 1i64 << l;
        let want = ((4 * x * x * x + 15 * x * x + 24 * x + 18) as usize, (16 * x * x * x + 12 * x) as usize);
        let got = class_counts(store, l).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("l={l}: {got:?}, expected {want:?}"));
        }
        for system in [System::H, System::F] {
            let sum: i64 = store.row(Spec::S, system, l).map_err(|e| e.to_string())?.values().sum();
            if sum as usize != got.0 {
                return Err(format!("l={l} {system:?}: sum of w_S is {sum}, k(S) = {}", got.0));
            }
        }
    }
    Ok("k(S), k([S,S]) and the S-row sums at l = 0, 1, 2".into())
}

fn oracle_equivalence() -> Outcome {
    let mut n = 0;
    for l in [0u32, 1] {
        let cat = Catalog::new(l).map_err(|e| e.to_string())?;
        for system in [System::H, System::F] {
            for spec in Spec::rows_at(l, system) {
                if l == 1 && spec.type_a() > 1 {
                    continue;
                }
                let r = cat.oracle(spec, system).map_err(|e| format!("{} {system:?} l={l}: {e}", spec.id()))?;
                if !r.passed() {
                    return Err(format!("{} {system:?} l={l}: {:?} vs {:?}, orbits agree {}", spec.id(), r.symbolic, r.oracle, r.orbits_agree));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} rows agree with the Dixon oracle"))
}

fn lie_side(fits: &BTreeMap<System, Vec<FittedRow>>) -> Outcome {
    let m_h = fitted_m(&fits[&System::H]);
    let m_f = fitted_m(&fits[&System::F]);
    for b in Branch::ALL {
        let spin7 = assemble_series(SeriesGroup::Spin7, b).map_err(|e| e.to_string())?;
        let spets = assemble_series(SeriesGroup::Spets, b).map_err(|e| e.to_string())?;
        let r = owc_check(&spin7, &m_h);
        let defect_families = r.families.iter().filter(|f| f.family != Family::Total && !(f.kd.is_zero() && f.m.is_zero())).count();
        if !r.passed() || defect_families != 11 {
            return Err(format!("branch {b}: Spin7 comparison over {defect_families} families failed"));
        }
        let e = exotic_check(&spets, &m_f);
        if !e.passed() {
            return Err(format!("branch {b}: spets residual {:?}, total {}", e.residual, e.total));
        }
    }
    Ok("valuation columns, 11 Spin7 families, spets families with 6 defect-zero characters, both branches".into())
}

fn conjectures(store: &WeightStore) -> Outcome {
    for l in 0..=4u32 {
        for system in [System::H, System::F] {
            let r = conjecture_checks(store, system, l).map_err(|e| e.to_string())?;
            if let Some(i) = r.items.iter().find(|i| !i.passed) {
                return Err(format!("l={l} {system:?} item {}: {} vs {}", i.item, i.lhs, i.rhs));
            }
        }
    }
    Ok("six checks for H and F at l = 0..4".into())
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_owc"))
            .args(["verify", "--quiet", "--format", "json", "--cache-dir"])
            .arg(dir.path())
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    let ok = first.status.success() && second.status.success() && first.stdout == second.stdout && !first.stdout.is_empty();
    ensure(ok, format!("fresh and cached runs, {} bytes each, exit {:?}/{:?}", first.stdout.len(), first.status.code(), second.status.code()))
}

fn main() {
    let store = WeightStore::new();
    let started = Instant::now();
    let mut fits = BTreeMap::new();
    for system in [System::H, System::F] {
        match fit_rows(&store, system) {
            Ok(f) => {
                fits.insert(system, f);
            }
            Err(e) => {
                println!("fitting {system:?} failed: {e}");
                std::process::exit(1);
            }
        }
    }
    println!("fitted all generic rows in {:.1?}", started.elapsed());
    let criteria: Vec<(u32, &str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, "quaternion layer", Box::new(quaternion_layer)),
        (2, "C_S(U) example", Box::new(|| example(&store))),
        (3, "generic-level table", Box::new(|| golden_table3(&store))),
        (4, "summary and l = 0 tables", Box::new(|| summary_tables(&store, &fits))),
        (5, "class-count identities", Box::new(|| class_count_identities(&store))),
        (6, "oracle equivalence", Box::new(oracle_equivalence)),
        (7, "Lie and spets side", Box::new(|| lie_side(&fits))),
        (8, "conjecture battery", Box::new(|| conjectures(&store))),
        (9, "determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (n, name, check) in criteria {
        let t = Instant::now();
        let (tag, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {n} ({name}): {tag} [{:.1?}] {detail}", t.elapsed());
    }
    println!("acceptance: {} of 9 criteria pass in {:.1?}", 9 - failed, started.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
