//! On-disk cache of Z₁(n) structure constants.
//!
//! Brute-force products are the expensive side of every cross-check, so
//! the multiplication table K_{λ,i}·K_{μ,j} = Σ c·K_{ν,k} is persisted
//! as canonical JSON: records sorted by (n, left class, right class),
//! products sorted by target class, counts in decimal. The same table
//! serializes to the same bytes on every run, and replacement is atomic
//! (write to a temporary file in the target directory, then rename), so
//! concurrent readers never observe a torn file.

use crate::partition::TaggedClass;
use crate::{Error, Int, Result};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

const FORMAT: &str = "z1-structure-constants-v1";

type Key = (u32, TaggedClass, TaggedClass);

#[derive(Serialize, Deserialize)]
struct ProductRecord {
    class: TaggedClass,
    count: String,
}

#[derive(Serialize, Deserialize)]
struct Record {
    n: u32,
    left: TaggedClass,
    right: TaggedClass,
    products: Vec<ProductRecord>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: String,
    records: Vec<Record>,
}

/// Cache handle; all mutation happens in memory until [`save`].
///
/// [`save`]: StructureCache::save
pub struct StructureCache {
    path: PathBuf,
    records: BTreeMap<Key, Vec<(TaggedClass, Int)>>,
}

impl StructureCache {
    /// Opens (or initializes, when the file does not exist) a cache at
    /// `path`.
    ///
    /// # Errors
    /// `Error::Cache` on unreadable or malformed files.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut records = BTreeMap::new();
        if path.exists() {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Cache(format!("read {}: {}", path.display(), e)))?;
            let file: CacheFile = serde_json::from_str(&text)
                .map_err(|e| Error::Cache(format!("parse {}: {}", path.display(), e)))?;
            if file.format != FORMAT {
                return Err(Error::Cache(format!(
                    "unsupported cache format {:?}",
                    file.format
                )));
            }
            for rec in file.records {
                let mut products = Vec::with_capacity(rec.products.len());
                for p in rec.products {
                    let count = p
                        .count
                        .parse::<Int>()
                        .map_err(|e| Error::Cache(format!("bad count {:?}: {}", p.count, e)))?;
                    products.push((p.class, count));
                }
                records.insert((rec.n, rec.left, rec.right), products);
            }
        }
        Ok(StructureCache { path, records })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Cached expansion of K_left · K_right, if present (nonzero terms
    /// only, sorted by target class).
    pub fn get(&self, left: &TaggedClass, right: &TaggedClass) -> Option<&[(TaggedClass, Int)]> {
        let key = (left.n(), left.clone(), right.clone());
        self.records.get(&key).map(Vec::as_slice)
    }

    /// Records an expansion; zero counts are dropped so that logically
    /// equal tables serialize identically.
    pub fn put(
        &mut self,
        left: &TaggedClass,
        right: &TaggedClass,
        products: &BTreeMap<TaggedClass, Int>,
    ) {
        let cleaned: Vec<(TaggedClass, Int)> = products
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        self.records
            .insert((left.n(), left.clone(), right.clone()), cleaned);
    }

    /// Writes the cache atomically: a temporary file in the destination
    /// directory is populated and then renamed over `path`.
    ///
    /// # Errors
    /// `Error::Cache` on any I/O failure.
    pub fn save(&self) -> Result<()> {
        let file = CacheFile {
            format: FORMAT.to_string(),
            records: self
                .records
                .iter()
                .map(|((n, left, right), products)| Record {
                    n: *n,
                    left: left.clone(),
                    right: right.clone(),
                    products: products
                        .iter()
                        .map(|(class, count)| ProductRecord {
                            class: class.clone(),
                            count: count.to_string(),
                        })
                        .collect(),
                })
                .collect(),
        };
        let text = serde_json::to_string_pretty(&file)
            .map_err(|e| Error::Cache(format!("serialize cache: {}", e)))?;
        let dir = self.path.parent().filter(|p| !p.as_os_str().is_empty());
        let tmp = match dir {
            Some(dir) => tempfile::NamedTempFile::new_in(dir),
            None => tempfile::NamedTempFile::new(),
        }
        .map_err(|e| Error::Cache(format!("create temp file: {}", e)))?;
        std::fs::write(tmp.path(), text.as_bytes())
            .map_err(|e| Error::Cache(format!("write temp file: {}", e)))?;
        tmp.persist(&self.path)
            .map_err(|e| Error::Cache(format!("persist {}: {}", self.path.display(), e)))?;
        Ok(())
    }
}
