//! On-disk result cache keyed by a content hash.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::Result;

/// Values are JSON files named by the SHA-256 of their key. A disabled
/// cache always recomputes.
#[derive(Debug, Clone)]
pub struct ResultCache {
    dir: Option<PathBuf>,
}

impl ResultCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(ResultCache { dir: Some(dir) })
    }

    pub fn disabled() -> Self {
        ResultCache { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn key(parts: &[&str]) -> String {
        let mut h = Sha256::new();
        for p in parts {
            h.update((p.len() as u64).to_le_bytes());
            h.update(p.as_bytes());
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let text = fs::read_to_string(self.path(key)?).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn put<T: Serialize>(&self, key: &str, value: &T) -> Result<()> {
        if let Some(path) = self.path(key) {
            // Write then rename so concurrent readers never see a torn file.
            let tmp = path.with_extension(format!("tmp{}", std::process::id()));
            fs::write(&tmp, serde_json::to_vec(value)?)?;
            fs::rename(&tmp, &path)?;
        }
        Ok(())
    }

    pub fn get_or_compute<T, F>(&self, parts: &[&str], f: F) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        if self.dir.is_none() {
            return f();
        }
        let key = Self::key(parts);
        if let Some(v) = self.get(&key) {
            return Ok(v);
        }
        let v = f()?;
        self.put(&key, &v)?;
        Ok(v)
    }
}
