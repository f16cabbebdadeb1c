//! Thread-safe memo table with an optional entry cap.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

#[derive(Debug)]
pub struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
    limit: Option<usize>,
}

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    /// `Some(0)` stores nothing; `None` is unbounded.
    pub fn new(limit: Option<usize>) -> Self {
        Memo { map: RwLock::new(HashMap::new()), limit }
    }

    pub fn get(&self, key: &K) -> Option<V> {
        self.map.read().ok()?.get(key).cloned()
    }

    /// Inserts unless the cap is reached. Entries are never evicted, so a cached
    /// value is always the value that would be recomputed.
    pub fn put(&self, key: K, value: &V) {
        if let Ok(mut m) = self.map.write() {
            if self.limit.is_none_or(|l| m.len() < l) {
                m.insert(key, value.clone());
            }
        }
    }

    pub fn len(&self) -> usize {
        self.map.read().map(|m| m.len()).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        if let Ok(mut m) = self.map.write() {
            m.clear();
        }
    }
}

impl<K: Eq + Hash, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Memo::new(None)
    }
}

/// Reads the cap from `SPRINGER_CACHE_LIMIT`; unset or unparsable means unbounded.
pub fn limit_from_env() -> Option<usize> {
    std::env::var(CACHE_LIMIT_VAR).ok().and_then(|v| v.trim().parse().ok())
}

/// Environment variable capping the number of memoized entries per table.
pub const CACHE_LIMIT_VAR: &str = "SPRINGER_CACHE_LIMIT";
