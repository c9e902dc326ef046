//! On-disk memoization of expansions and character tables.
//!
//! Entries are JSON files keyed by `(operation, n, version)`. Writes go
//! through a temporary file in the cache directory and are renamed into
//! place. Entries that fail to parse or carry the wrong key are discarded
//! with a warning and recomputed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use tempfile::NamedTempFile;

use crate::error::CliError;

pub const CACHE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub operation: String,
    pub n: usize,
    pub version: String,
}

impl CacheKey {
    pub fn new(operation: impl Into<String>, n: usize) -> Self {
        CacheKey { operation: operation.into(), n, version: CACHE_VERSION.to_string() }
    }

    fn file_name(&self) -> String {
        let op: String = self.operation.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '-' }).collect();
        format!("{op}-n{}-v{}.json", self.n, self.version)
    }
}

#[derive(Serialize, Deserialize)]
struct Entry<T> {
    key: CacheKey,
    value: T,
}

/// Whether a lookup was served from disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lookup {
    Hit,
    Miss,
    Disabled,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn path_for(&self, key: &CacheKey) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(key.file_name()))
    }

    pub fn get_or_compute<T, F>(&self, key: &CacheKey, compute: F) -> Result<(T, Lookup), CliError>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T, CliError>,
    {
        let Some(path) = self.path_for(key) else {
            return Ok((compute()?, Lookup::Disabled));
        };
        if let Some(value) = read_entry(&path, key) {
            log::debug!("cache hit: {}", path.display());
            return Ok((value, Lookup::Hit));
        }
        let value = compute()?;
        self.store(&path, key, &value)?;
        Ok((value, Lookup::Miss))
    }

    fn store<T: Serialize>(&self, path: &Path, key: &CacheKey, value: &T) -> Result<(), CliError> {
        let dir = self.dir.as_deref().expect("store is only reached with a directory");
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        let mut tmp = NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir, e))?;
        serde_json::to_writer(&mut tmp, &Entry { key: key.clone(), value })?;
        tmp.flush().map_err(|e| CliError::io(tmp.path(), e))?;
        tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
        Ok(())
    }
}

fn read_entry<T: DeserializeOwned>(path: &Path, key: &CacheKey) -> Option<T> {
    let bytes = match fs::read(path) {
        Ok(bytes) => bytes,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
        Err(e) => {
            log::warn!("cannot read cache entry {}: {e}; recomputing", path.display());
            return None;
        }
    };
    match serde_json::from_slice::<Entry<T>>(&bytes) {
        Ok(entry) if entry.key == *key => Some(entry.value),
        Ok(entry) => {
            log::warn!("cache entry {} has key {:?}, expected {:?}; recomputing", path.display(), entry.key, key);
            None
        }
        Err(e) => {
            log::warn!("discarding corrupt cache entry {}: {e}", path.display());
            None
        }
    }
}
