//! On-disk result cache keyed by the SHA-256 of the serialized run config.

use std::fs;
use std::path::PathBuf;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::Outcome;

pub const ENV_VAR: &str = "SYMSTOCH_CACHE_DIR";

pub fn key(config: &impl Serialize) -> String {
    let bytes = serde_json::to_vec(config).expect("run config serializes");
    let digest = Sha256::digest(&bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub struct Store {
    dir: PathBuf,
}

impl Store {
    /// `None` when neither the flag nor the environment names a directory.
    pub fn open(flag: Option<PathBuf>) -> Option<Store> {
        let dir = flag.or_else(|| std::env::var_os(ENV_VAR).map(PathBuf::from))?;
        fs::create_dir_all(&dir).ok()?;
        Some(Store { dir })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<Outcome> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        let exit = u8::try_from(v.get("exit")?.as_u64()?).ok()?;
        let text_lines = v
            .get("text")
            .and_then(|t| serde_json::from_value(t.clone()).ok());
        let table = v
            .get("table")
            .and_then(|t| serde_json::from_value(t.clone()).ok());
        Some(Outcome {
            payload: v.get("payload")?.clone(),
            exit,
            text: text_lines,
            table,
        })
    }

    /// Best effort: a failed write only costs a recomputation later.
    pub fn put(&self, key: &str, out: &Outcome) {
        let v = json!({
            "exit": out.exit,
            "payload": out.payload,
            "text": out.text,
            "table": out.table,
        });
        let tmp = self.dir.join(format!("{key}.tmp"));
        if fs::write(&tmp, v.to_string()).is_ok() {
            let _ = fs::rename(&tmp, self.path(key));
        }
    }
}
