//! Memoized `w_P` rows across levels, with an optional on-disk cache.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use dashmap::DashMap;

use super::wp::WeightMap;
use crate::catalog::table::{Catalog, Spec};
use crate::catalog::System;
use crate::error::{Error, Result};
use crate::par;

pub type RowKey = (Spec, System, u32);

#[derive(Default)]
pub struct WeightStore {
    catalogs: Mutex<BTreeMap<u32, Arc<Catalog>>>,
    rows: DashMap<RowKey, WeightMap>,
    cache_dir: Option<PathBuf>,
    progress: bool,
}

fn sys_tag(s: System) -> &'static str {
    match s {
        System::H => "H",
        System::F => "F",
    }
}

impl WeightStore {
    pub fn new() -> WeightStore {
        WeightStore::default()
    }

    /// Rows are read from and written to `dir`, one file per `(spec, system, l)`.
    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> WeightStore {
        WeightStore { cache_dir: Some(dir.into()), ..WeightStore::default() }
    }

    /// Report each freshly computed row on standard error.
    pub fn with_progress(mut self, on: bool) -> WeightStore {
        self.progress = on;
        self
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    pub fn catalog(&self, l: u32) -> Result<Arc<Catalog>> {
        let mut m = self.catalogs.lock().unwrap();
        if let Some(c) = m.get(&l) {
            return Ok(c.clone());
        }
        let c = Arc::new(Catalog::new(l)?);
        m.insert(l, c.clone());
        Ok(c)
    }

    fn cache_path(&self, (spec, system, l): RowKey) -> Option<PathBuf> {
        self.cache_dir.as_ref().map(|d| d.join(format!("w_{}_{}_l{l}.txt", spec.id(), sys_tag(system))))
    }

    fn read_cached(path: &Path) -> Option<WeightMap> {
        let text = std::fs::read_to_string(path).ok()?;
        let mut m = WeightMap::new();
        for line in text.lines() {
            let (d, v) = line.split_once(' ')?;
            m.insert(d.parse().ok()?, v.parse().ok()?);
        }
        Some(m)
    }

    fn write_cached(path: &Path, w: &WeightMap) -> Result<()> {
        let body: String = w.iter().map(|(d, v)| format!("{d} {v}\n")).collect();
        let io = |e: std::io::Error| Error::SpecUnavailable(path.display().to_string(), e.to_string());
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(io)?;
        }
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, body).map_err(io)?;
        std::fs::rename(&tmp, path).map_err(io)
    }

    /// `d -> w_P(D, 0, d)` for every defect carried by `Irr(P)`.
    pub fn row(&self, spec: Spec, system: System, l: u32) -> Result<WeightMap> {
        let key = (spec, system, l);
        if let Some(w) = self.rows.get(&key) {
            return Ok(w.clone());
        }
        let path = self.cache_path(key);
        if let Some(w) = path.as_deref().and_then(WeightStore::read_cached) {
            self.rows.insert(key, w.clone());
            return Ok(w);
        }
        let t = std::time::Instant::now();
        let w = self.catalog(l)?.weights(spec, system)?;
        if self.progress {
            eprintln!("computed {} {system:?} l={l} in {:.2?}", spec.name(), t.elapsed());
        }
        if let Some(p) = path {
            WeightStore::write_cached(&p, &w)?;
        }
        self.rows.insert(key, w.clone());
        Ok(w)
    }

    /// Computes the requested rows on the worker pool; results follow `keys`.
    pub fn rows(&self, keys: &[RowKey]) -> Result<Vec<WeightMap>> {
        let mut levels: Vec<u32> = keys.iter().map(|k| k.2).collect();
        levels.dedup();
        for l in levels {
            self.catalog(l)?;
        }
        par::map_collect(keys.to_vec(), |&(s, y, l)| self.row(s, y, l)).into_iter().collect()
    }

    pub fn w(&self, spec: Spec, system: System, l: u32, d: u32) -> Result<i64> {
        Ok(self.row(spec, system, l)?.get(&d).copied().unwrap_or(0))
    }
}
