//! Memoized subobject counts and their on-disk form.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::classify::{ClassRef, ClassRegistry};
use crate::error::{Error, Result};
use crate::quiver::QuiverSpec;

pub const TABLE_FORMAT_VERSION: u32 = 1;

/// All nonzero subobject counts of one class `E`, keyed by `(quotient M, sub N)`.
///
/// Always contains `(E, 0) -> 1`, so a stored profile is never empty.
pub type Profile = BTreeMap<(ClassRef, ClassRef), u64>;

/// Concurrent memo of subobject counts `g^E_{MN}`.
///
/// Profiles are inserted whole, one per `E`; readers never observe a partially filled profile.
#[derive(Debug, Default)]
pub struct HallTable {
    profiles: RwLock<BTreeMap<ClassRef, Arc<Profile>>>,
    computed: AtomicUsize,
}

impl HallTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, e: ClassRef) -> Option<Arc<Profile>> {
        self.profiles.read().unwrap().get(&e).cloned()
    }

    /// Inserts a freshly computed profile. If another worker got there first the stored one is
    /// kept and returned.
    pub(crate) fn insert_computed(&self, e: ClassRef, profile: Profile) -> Arc<Profile> {
        let mut guard = self.profiles.write().unwrap();
        if let Some(existing) = guard.get(&e) {
            return existing.clone();
        }
        self.computed.fetch_add(1, Ordering::Relaxed);
        let profile = Arc::new(profile);
        guard.insert(e, profile.clone());
        profile
    }

    /// Number of profiles computed by enumeration (cache hits and loads are not counted).
    pub fn computed_count(&self) -> usize {
        self.computed.load(Ordering::Relaxed)
    }

    pub fn len(&self) -> usize {
        self.profiles.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Serializes every stored entry as versioned JSON. Output is deterministic: entries are
    /// ordered by the registry order of `E`, then `M`, then `N`, one entry per line.
    pub fn to_json(&self, registry: &ClassRegistry) -> Result<String> {
        let header = TableHeader::for_registry(registry);
        let mut out = String::new();
        out.push_str("{\n  \"header\": ");
        out.push_str(&serde_json::to_string(&header)?);
        out.push_str(",\n  \"entries\": [");
        let guard = self.profiles.read().unwrap();
        let mut first = true;
        for (&e, profile) in guard.iter() {
            for (&(m, n), &g) in profile.iter() {
                let entry = (
                    [
                        registry.class(e).label.as_str(),
                        registry.class(m).label.as_str(),
                        registry.class(n).label.as_str(),
                    ],
                    g,
                );
                out.push_str(if first { "\n    " } else { ",\n    " });
                first = false;
                out.push_str(&serde_json::to_string(&entry)?);
            }
        }
        out.push_str(if first { "]\n}\n" } else { "\n  ]\n}\n" });
        Ok(out)
    }

    /// Loads entries written by [`HallTable::to_json`]. The header must match the registry
    /// exactly; entries for a class already present must agree with what is stored.
    pub fn load_json(&self, registry: &ClassRegistry, text: &str) -> Result<usize> {
        let file: TableFile = serde_json::from_str(text)
            .map_err(|e| Error::CacheMismatch(format!("corrupt cache file: {e}")))?;
        let expected = TableHeader::for_registry(registry);
        let h = &file.header;
        if h.format_version != expected.format_version {
            return Err(Error::CacheMismatch(format!(
                "format_version {} (expected {})",
                h.format_version, expected.format_version
            )));
        }
        if h.quiver != expected.quiver {
            return Err(Error::CacheMismatch(
                "cache was written for a different quiver".into(),
            ));
        }
        if h.q != expected.q {
            return Err(Error::CacheMismatch(format!(
                "cache was written for q={} (running q={})",
                h.q, expected.q
            )));
        }
        if h.dim_bound != expected.dim_bound {
            return Err(Error::CacheMismatch(format!(
                "cache was written for dimension bound {} (running {})",
                h.dim_bound, expected.dim_bound
            )));
        }

        let resolve = |label: &str| {
            registry
                .by_label(label)
                .map_err(|_| Error::CacheMismatch(format!("unknown class {label:?} in cache")))
        };
        let mut loaded: BTreeMap<ClassRef, Profile> = BTreeMap::new();
        for ([e, m, n], g) in &file.entries {
            let (e, m, n) = (resolve(e)?, resolve(m)?, resolve(n)?);
            let grade_ok =
                registry.class(e).dims == &registry.class(m).dims + &registry.class(n).dims;
            if *g == 0 || !grade_ok {
                return Err(Error::CacheMismatch(format!(
                    "invalid entry for {}",
                    registry.class(e).label
                )));
            }
            if loaded.entry(e).or_default().insert((m, n), *g).is_some() {
                return Err(Error::CacheMismatch("duplicate cache entry".into()));
            }
        }
        for (&e, profile) in &loaded {
            if profile.get(&(e, registry.zero())) != Some(&1) {
                return Err(Error::CacheMismatch(format!(
                    "incomplete profile for {}",
                    registry.class(e).label
                )));
            }
        }

        let mut guard = self.profiles.write().unwrap();
        for (e, profile) in &loaded {
            if let Some(existing) = guard.get(e) {
                if **existing != *profile {
                    return Err(Error::CacheMismatch(format!(
                        "cached counts for {} disagree with computed ones",
                        registry.class(*e).label
                    )));
                }
            }
        }
        let count = loaded.len();
        for (e, profile) in loaded {
            guard.entry(e).or_insert_with(|| Arc::new(profile));
        }
        Ok(count)
    }

    /// Human-readable summary, one line per stored class.
    pub fn describe(&self, registry: &ClassRegistry) -> String {
        let mut s = String::new();
        for (&e, profile) in self.profiles.read().unwrap().iter() {
            let _ = writeln!(s, "{}: {} entries", registry.class(e).label, profile.len());
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableHeader {
    pub format_version: u32,
    pub quiver: QuiverSpec,
    pub q: u32,
    pub dim_bound: usize,
}

impl TableHeader {
    fn for_registry(registry: &ClassRegistry) -> Self {
        TableHeader {
            format_version: TABLE_FORMAT_VERSION,
            quiver: registry.quiver().spec(),
            q: registry.prime().get(),
            dim_bound: registry.bound(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct TableFile {
    header: TableHeader,
    entries: Vec<([String; 3], u64)>,
}
