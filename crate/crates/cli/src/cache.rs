use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::{CliError, Outcome, RunConfig};

fn entry(dir: &Path, key: &RunConfig) -> PathBuf {
    let canon = serde_json::to_string(key).expect("config serializes");
    let mut h = Sha256::new();
    h.update(env!("CARGO_PKG_VERSION").as_bytes());
    h.update(b"\0");
    h.update(canon.as_bytes());
    let digest: String = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
    dir.join(format!("{digest}.json"))
}

/// A cached outcome, or `None` on a miss or an unreadable entry.
pub(crate) fn load(dir: &Path, key: &RunConfig) -> Option<Outcome> {
    let bytes = fs::read(entry(dir, key)).ok()?;
    serde_json::from_slice(&bytes).ok()
}

pub(crate) fn store(dir: &Path, key: &RunConfig, out: &Outcome) -> Result<(), CliError> {
    fs::create_dir_all(dir)?;
    let path = entry(dir, key);
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, serde_json::to_vec(out).expect("outcome serializes"))?;
    fs::rename(tmp, path)?;
    Ok(())
}
