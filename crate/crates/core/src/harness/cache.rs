//! Content-addressed on-disk cache of character tables.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::permcore::PermGroup;
use crate::Cyc;

use super::spec::GroupSpec;

pub const CACHE_ENV: &str = "BLOCKLAB_CACHE";
const FORMAT: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Record {
    format: u32,
    key: String,
    conductor: u64,
    /// `rows[i][j]` = power-basis coefficients of `χ_i(x_j)` at `conductor`.
    rows: Vec<Vec<Vec<String>>>,
    checksum: String,
}

fn payload_checksum(conductor: u64, rows: &[Vec<Vec<String>>]) -> String {
    let body = serde_json::to_string(&(conductor, rows)).expect("rows serialize");
    hex::encode(Sha256::digest(body.as_bytes()))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub corrupt: u64,
}

pub struct TableCache {
    dir: PathBuf,
    hits: AtomicU64,
    misses: AtomicU64,
    corrupt: AtomicU64,
    warnings: Mutex<Vec<String>>,
}

impl TableCache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref().to_path_buf();
        fs::create_dir_all(&dir)?;
        Ok(TableCache {
            dir,
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
            corrupt: AtomicU64::new(0),
            warnings: Mutex::new(Vec::new()),
        })
    }

    /// Uses `BLOCKLAB_CACHE` when set and non-empty.
    pub fn from_env() -> Result<Option<Self>> {
        match std::env::var(CACHE_ENV) {
            Ok(dir) if !dir.is_empty() => Self::open(dir).map(Some),
            _ => Ok(None),
        }
    }

    pub fn key(spec: &GroupSpec) -> String {
        let text = format!("blocklab-table-v{FORMAT}\n{}", spec.source_text());
        hex::encode(Sha256::digest(text.as_bytes()))
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            corrupt: self.corrupt.load(Ordering::Relaxed),
        }
    }

    /// Warnings emitted so far, drained.
    pub fn take_warnings(&self) -> Vec<String> {
        std::mem::take(&mut *self.warnings.lock().unwrap())
    }

    fn warn(&self, msg: String) {
        self.warnings.lock().unwrap().push(msg);
    }

    /// Cached table for `spec`, or a fresh computation that is then stored.
    pub fn table(&self, spec: &GroupSpec, group: &PermGroup) -> Result<CharacterTable> {
        let key = Self::key(spec);
        let path = self.path_for(&key);
        if path.exists() {
            match self.load(&path, &key, group) {
                Ok(t) => {
                    self.hits.fetch_add(1, Ordering::Relaxed);
                    return Ok(t);
                }
                Err(e) => {
                    self.corrupt.fetch_add(1, Ordering::Relaxed);
                    self.warn(format!("cache entry {} unusable ({e}); recomputing", path.display()));
                }
            }
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let table = CharacterTable::compute(group)?;
        self.store(&path, &key, &table)?;
        Ok(table)
    }

    fn load(&self, path: &Path, key: &str, group: &PermGroup) -> Result<CharacterTable> {
        let bad = |m: &str| Error::Consistency(m.to_string());
        let text = fs::read_to_string(path)?;
        let record: Record = serde_json::from_str(&text).map_err(|e| bad(&format!("malformed record: {e}")))?;
        if record.format != FORMAT || record.key != key {
            return Err(bad("format or key mismatch"));
        }
        if payload_checksum(record.conductor, &record.rows) != record.checksum {
            return Err(bad("checksum mismatch"));
        }
        let rows = record
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|coeffs| {
                        let parsed = coeffs
                            .iter()
                            .map(|c| BigRational::from_str(c).map_err(|_| bad("bad coefficient")))
                            .collect::<Result<Vec<_>>>()?;
                        Cyc::from_coefficients(record.conductor, parsed)
                            .map(|v| v.reduced())
                            .ok_or_else(|| bad("coefficient count does not match the conductor"))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        // re-verifies both orthogonality relations
        CharacterTable::from_rows(group, rows)
    }

    fn store(&self, path: &Path, key: &str, table: &CharacterTable) -> Result<()> {
        let conductor = table.conductor();
        let rows: Vec<Vec<Vec<String>>> = table
            .characters()
            .iter()
            .map(|chi| {
                chi.values()
                    .iter()
                    .map(|v| v.lift_to(conductor).coefficients().iter().map(|c| c.to_string()).collect())
                    .collect()
            })
            .collect();
        let record = Record {
            format: FORMAT,
            key: key.to_string(),
            conductor,
            checksum: payload_checksum(conductor, &rows),
            rows,
        };
        let body = serde_json::to_string(&record).map_err(|e| Error::Io(e.to_string()))?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(body.as_bytes())?;
        tmp.persist(path).map_err(|e| Error::Io(e.to_string()))?;
        Ok(())
    }
}
