//! Append-only JSONL store of result records, keyed by content hash, π and
//! the checks that were run.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use crate::error::{Result, VerifierError};
use crate::record::ResultRecord;

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    entries: HashMap<String, ResultRecord>,
}

impl Cache {
    /// Loads `path` if it exists. Later lines win over earlier ones.
    pub fn open(path: &Path) -> Result<Cache> {
        let mut entries = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(path)?);
            for (i, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let r: ResultRecord = serde_json::from_str(&line).map_err(|e| {
                    VerifierError::Cache(format!("{}:{}: {e}", path.display(), i + 1))
                })?;
                entries.insert(r.cache_key(), r);
            }
        }
        Ok(Cache {
            path: path.to_path_buf(),
            entries,
        })
    }

    pub fn get(&self, key: &str) -> Option<&ResultRecord> {
        self.entries.get(key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Single writer: callers append once per run, after all workers finish.
    pub fn append<'a>(
        &mut self,
        records: impl IntoIterator<Item = &'a ResultRecord>,
    ) -> Result<()> {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        let mut buf = Vec::new();
        for r in records {
            serde_json::to_writer(&mut buf, r).map_err(|e| VerifierError::Cache(e.to_string()))?;
            buf.push(b'\n');
            self.entries.insert(r.cache_key(), r.clone());
        }
        file.write_all(&buf)?;
        Ok(())
    }
}
