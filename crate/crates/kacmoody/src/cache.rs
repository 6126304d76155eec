//! Content-addressed build cache for structure-constant exports.
//!
//! Cache entries are keyed by the matrix, the height bound, and the cache
//! format version; payloads carry a checksum and are re-validated on load,
//! so a corrupted file triggers a rebuild instead of silent reuse. Writes go
//! through a temporary file and an atomic rename.

use crate::engine::AlgebraExport;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

/// Bumped whenever the exported representation changes.
pub const CACHE_FORMAT_VERSION: &str = concat!("kacmoody-", env!("CARGO_PKG_VERSION"));

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "KM_CACHE_DIR";

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    version: String,
    checksum: String,
    payload: AlgebraExport,
}

fn digest(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    hex::encode(h.finalize())
}

/// Stable file name for a (matrix, height) pair.
pub fn cache_path(dir: &Path, matrix: &[Vec<i64>], height: i64) -> PathBuf {
    let key = serde_json::json!({
        "matrix": matrix,
        "height": height,
        "version": CACHE_FORMAT_VERSION,
    });
    let name = digest(key.to_string().as_bytes());
    dir.join(format!("km-{}.json", &name[..32]))
}

/// Writes an export atomically; returns the final path.
pub fn store(dir: &Path, export: &AlgebraExport) -> std::io::Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let payload_bytes = serde_json::to_vec(export)?;
    let file = CacheFile {
        version: CACHE_FORMAT_VERSION.to_string(),
        checksum: digest(&payload_bytes),
        payload: export.clone(),
    };
    let path = cache_path(dir, &export.matrix, export.height);
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, serde_json::to_vec_pretty(&file)?)?;
    std::fs::rename(&tmp, &path)?;
    Ok(path)
}

/// Loads and re-validates a cached export; any mismatch yields `None` so the
/// caller rebuilds.
pub fn load(dir: &Path, matrix: &[Vec<i64>], height: i64) -> Option<AlgebraExport> {
    let path = cache_path(dir, matrix, height);
    let bytes = std::fs::read(&path).ok()?;
    let file: CacheFile = serde_json::from_slice(&bytes).ok()?;
    if file.version != CACHE_FORMAT_VERSION {
        return None;
    }
    let payload_bytes = serde_json::to_vec(&file.payload).ok()?;
    if digest(&payload_bytes) != file.checksum {
        return None;
    }
    if file.payload.matrix != matrix || file.payload.height != height {
        return None;
    }
    Some(file.payload)
}
