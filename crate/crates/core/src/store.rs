//! Append-only on-disk cache of simple-module Hilbert series.
//!
//! The file starts with a version header line; every further line is one JSON
//! record. Later records for the same key supersede earlier ones only when
//! they carry a larger truncation.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::series::HilbertSeries;

pub const CACHE_HEADER: &str = "dyck-syzygy series cache v1";

/// Environment variable naming the default cache file.
pub const CACHE_ENV: &str = "DYCK_SYZYGY_CACHE";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub key: String,
    pub mu: Partition,
    pub m: u32,
    pub n: u32,
    pub trunc: u32,
    pub series: HilbertSeries,
}

/// Content hash of the inputs `(μ, m, n)`.
pub fn cache_key(mu: &Partition, m: u32, n: u32) -> String {
    let digest = Sha256::digest(format!("mu={mu};m={m};n={n}").as_bytes());
    hex::encode(digest)
}

#[derive(Debug)]
pub struct SeriesStore {
    path: PathBuf,
    file: Mutex<File>,
}

impl SeriesStore {
    /// Opens or creates the cache file and returns it with every valid record.
    pub fn open(path: impl AsRef<Path>) -> Result<(SeriesStore, Vec<CacheRecord>)> {
        let path = path.as_ref().to_path_buf();
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir).map_err(io)?;
        }
        let mut records = Vec::new();
        let fresh = !path.exists() || std::fs::metadata(&path).map_err(io)?.len() == 0;
        if !fresh {
            let reader = BufReader::new(File::open(&path).map_err(io)?);
            let mut lines = reader.lines();
            let header = lines.next().transpose().map_err(io)?.unwrap_or_default();
            if header.trim() != CACHE_HEADER {
                return Err(Error::Cache(format!(
                    "{}: unrecognized header {header:?}",
                    path.display()
                )));
            }
            for line in lines {
                let line = line.map_err(io)?;
                if line.trim().is_empty() {
                    continue;
                }
                // a torn final line from an interrupted writer is skipped
                let Ok(rec) = serde_json::from_str::<CacheRecord>(&line) else {
                    continue;
                };
                if rec.key == cache_key(&rec.mu, rec.m, rec.n) {
                    records.push(rec);
                }
            }
        }
        let mut file = OpenOptions::new().create(true).append(true).open(&path).map_err(io)?;
        if fresh {
            writeln!(file, "{CACHE_HEADER}").map_err(io)?;
        }
        Ok((
            SeriesStore {
                path,
                file: Mutex::new(file),
            },
            records,
        ))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn append(&self, records: &[CacheRecord]) -> Result<()> {
        if records.is_empty() {
            return Ok(());
        }
        let mut buf = String::new();
        for rec in records {
            buf.push_str(&serde_json::to_string(rec).map_err(|e| Error::Cache(e.to_string()))?);
            buf.push('\n');
        }
        let mut file = self.file.lock().unwrap_or_else(|e| e.into_inner());
        file.write_all(buf.as_bytes())
            .and_then(|()| file.flush())
            .map_err(|e| Error::Cache(format!("{}: {e}", self.path.display())))
    }
}

/// Keeps, per key, the record with the largest truncation.
pub(crate) fn best_records(records: Vec<CacheRecord>) -> HashMap<String, CacheRecord> {
    let mut best: HashMap<String, CacheRecord> = HashMap::new();
    for rec in records {
        match best.get(&rec.key) {
            Some(old) if old.trunc >= rec.trunc => {}
            _ => {
                best.insert(rec.key.clone(), rec);
            }
        }
    }
    best
}
