//! Content-addressed on-disk cache. Each entry is a file named by the
//! SHA-256 of its key, holding a version line followed by a JSON payload.
//! Anything unreadable, foreign or from another version is a miss.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use sha2::{Digest, Sha256};

pub const CACHE_VERSION: &str = "pq-cache v1";

static TEMP_COUNTER: AtomicU64 = AtomicU64::new(0);

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
    version: String,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into(), version: CACHE_VERSION.to_string() }
    }

    /// A cache that stamps and accepts a different version line.
    pub fn with_version(dir: impl Into<PathBuf>, version: &str) -> Cache {
        Cache { dir: dir.into(), version: version.to_string() }
    }

    /// `--cache-dir`, else `PQ_CACHE_DIR`, else a directory under the
    /// system temp dir.
    pub fn default_dir(flag: Option<&Path>) -> PathBuf {
        if let Some(d) = flag {
            return d.to_path_buf();
        }
        match std::env::var_os("PQ_CACHE_DIR") {
            Some(d) if !d.is_empty() => PathBuf::from(d),
            _ => std::env::temp_dir().join("pq-cache"),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(parts: &[&str]) -> String {
        let mut h = Sha256::new();
        for p in parts {
            h.update((p.len() as u64).to_le_bytes());
            h.update(p.as_bytes());
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<String> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let (header, payload) = text.split_once('\n')?;
        if header != self.version {
            return None;
        }
        serde_json::from_str::<serde_json::Value>(payload).ok()?;
        Some(payload.to_string())
    }

    /// Writes to a temporary file and renames it into place.
    pub fn put(&self, key: &str, payload: &str) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let n = TEMP_COUNTER.fetch_add(1, Ordering::Relaxed);
        let tmp = self.dir.join(format!(".{key}.{}.{n}.tmp", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            writeln!(f, "{}", self.version)?;
            f.write_all(payload.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, self.path(key))
    }

    /// Returns the cached payload or computes, stores and returns it.
    pub fn get_or_put<E>(&self, key: &str, compute: impl FnOnce() -> Result<String, E>) -> Result<(String, bool), E> {
        if let Some(hit) = self.get(key) {
            return Ok((hit, true));
        }
        let fresh = compute()?;
        // A failed write only costs a recomputation next time.
        let _ = self.put(key, &fresh);
        Ok((fresh, false))
    }
}
