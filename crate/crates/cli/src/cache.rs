use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use circbetti::graph::Graph;
use circbetti::homology::FieldSpec;

/// File-backed result cache. Entries are keyed by a hash of the sorted edge
/// list, the field and the method; deleting the directory is always safe.
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir }
    }

    pub fn key(g: &Graph, field: FieldSpec, method: &str) -> String {
        let mut h = Sha256::new();
        h.update(format!("n={};", g.n()));
        for (u, v) in g.edges() {
            h.update(format!("{u}-{v};"));
        }
        h.update(format!("field={field};method={method}"));
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir
            .as_deref()
            .map(|d: &Path| d.join(format!("{key}.json")))
    }

    pub fn load(&self, key: &str) -> Option<String> {
        fs::read_to_string(self.path(key)?).ok()
    }

    /// Best effort: a cache that cannot be written is simply skipped.
    pub fn store(&self, key: &str, contents: &str) {
        if let Some(path) = self.path(key) {
            let tmp = path.with_extension("tmp");
            let written = path
                .parent()
                .map_or(Ok(()), fs::create_dir_all)
                .and_then(|_| fs::write(&tmp, contents))
                .and_then(|_| fs::rename(&tmp, &path));
            if written.is_err() {
                let _ = fs::remove_file(&tmp);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_depend_on_every_component() {
        let c5 = Graph::cycle(5).unwrap();
        let base = Cache::key(&c5, FieldSpec::Rationals, "hochster");
        assert_eq!(base.len(), 64);
        assert_eq!(
            base,
            Cache::key(&c5.clone(), FieldSpec::Rationals, "hochster")
        );
        assert_ne!(base, Cache::key(&c5, FieldSpec::Prime(2), "hochster"));
        assert_ne!(base, Cache::key(&c5, FieldSpec::Rationals, "join"));
        assert_ne!(
            base,
            Cache::key(&Graph::path(5).unwrap(), FieldSpec::Rationals, "hochster")
        );
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path().join("nested")));
        assert_eq!(cache.load("k"), None);
        cache.store("k", "{}");
        assert_eq!(cache.load("k").as_deref(), Some("{}"));
        let off = Cache::new(None);
        off.store("k", "x");
        assert_eq!(off.load("k"), None);
    }
}
