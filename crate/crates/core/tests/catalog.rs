use solweights::catalog::table::{Catalog, Spec};
use solweights::catalog::System;
use solweights::weights::WeightStore;

#[test]
fn out_groups_sit_inside_out_k_with_small_index() {
    let cat = Catalog::new(1).unwrap();
    for system in [System::H, System::F] {
        for spec in Spec::rows_at(1, system) {
            let r = cat.out_index_check(spec, system).unwrap();
            assert_eq!(r.exception, r.out_k.is_none(), "{}", spec.id());
            if let Some(k) = r.out_k {
                assert_eq!(k % r.out_d, 0, "{}", spec.id());
                let want = match (system, spec) {
                    (System::F, _) => 1,
                    (System::H, Spec::QRR | Spec::QRQ | Spec::QRQp | Spec::QpQQ) => 2,
                    (System::H, Spec::QQQ) => 3,
                    _ => 1,
                };
                assert_eq!(r.index(), Some(want), "{} {system:?}", spec.id());
            }
        }
    }
}

#[test]
fn rows_outside_their_system_or_level_are_refused() {
    let cat = Catalog::new(1).unwrap();
    assert!(cat.out_action(Spec::CsU, System::H).is_err());
    assert!(cat.out_action(Spec::Q0, System::F).is_err());
    assert!(Catalog::new(0).unwrap().out_action(Spec::QQR, System::F).is_err());
}

#[test]
fn cached_rows_reload_identically() {
    let dir = tempfile::tempdir().unwrap();
    let first = WeightStore::with_cache_dir(dir.path()).row(Spec::QQRt, System::F, 2).unwrap();
    assert!(dir.path().join("w_QQRt_F_l2.txt").exists());
    let again = WeightStore::with_cache_dir(dir.path()).row(Spec::QQRt, System::F, 2).unwrap();
    assert_eq!(first, again);
    assert_eq!(first, WeightStore::new().row(Spec::QQRt, System::F, 2).unwrap());
}
