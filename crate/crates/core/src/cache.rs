//! Persistent table files: `{"space": {"dims": [...]}, "entries":
//! {"b1,...,bt": "num/den", ...}, "version": 1}`.
//!
//! Loading revalidates what the engine guarantees when it writes: entries
//! must be downward closed under the recursion, and a randomly sampled entry
//! must re-derive exactly from the others. Only product spaces are
//! persistable; a generic space's values cannot be re-derived without its
//! invariant table.

use std::collections::BTreeMap;
use std::path::Path;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::class::CurveClass;
use crate::engine::OcTable;
use crate::error::Error;
use crate::partitions::subclasses;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::space::AmbientSpace;

const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheSpace {
    dims: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    space: CacheSpace,
    entries: serde_json::Map<String, serde_json::Value>,
    version: u32,
}

/// Serialize a table to the cache format.
pub fn table_to_json(table: &OcTable) -> Result<String, Error> {
    let dims = table
        .space()
        .dims()
        .ok_or(Error::CacheNeedsProductSpace)?
        .to_vec();
    let mut entries = serde_json::Map::new();
    for (class, value) in table.entries() {
        entries.insert(
            class.to_string(),
            serde_json::Value::String(format_rational(value)),
        );
    }
    Ok(serde_json::to_string(&CacheFile {
        space: CacheSpace { dims },
        entries,
        version: CACHE_VERSION,
    })?)
}

pub fn save_table(table: &OcTable, path: &Path) -> Result<(), Error> {
    std::fs::write(path, table_to_json(table)?)?;
    Ok(())
}

/// Load and validate a table for the given space.
pub fn load_table(path: &Path, expected_space: &AmbientSpace) -> Result<OcTable, Error> {
    from_json(&std::fs::read_to_string(path)?, expected_space)
}

pub fn from_json(text: &str, expected_space: &AmbientSpace) -> Result<OcTable, Error> {
    let file: CacheFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidCache(e.to_string()))?;
    if file.version != CACHE_VERSION {
        return Err(Error::UnsupportedCacheVersion(file.version));
    }
    if expected_space.dims() != Some(file.space.dims.as_slice()) {
        return Err(Error::CacheSpaceMismatch);
    }

    let mut entries: BTreeMap<CurveClass, Rational> = BTreeMap::new();
    for (key, raw) in &file.entries {
        let class: CurveClass = key
            .parse()
            .map_err(|e| Error::InvalidCache(format!("entry key {key:?}: {e}")))?;
        expected_space
            .check_nonzero_class(&class)
            .map_err(|e| Error::InvalidCache(format!("entry key {key:?}: {e}")))?;
        let text = raw
            .as_str()
            .ok_or_else(|| Error::InvalidCache(format!("entry {key:?} is not a string")))?;
        let value = parse_rational(text)
            .map_err(|e| Error::InvalidCache(format!("entry {key:?}: {e}")))?;
        entries.insert(class, value);
    }

    // closure: every class strictly below a stored class is needed by one of
    // its partitions, so it must be stored as well
    for class in entries.keys() {
        for needed in subclasses(class) {
            if &needed != class && !entries.contains_key(&needed) {
                return Err(Error::InvalidCache(format!(
                    "not closed under the recursion: {class} is stored but {needed} is missing"
                )));
            }
        }
    }

    let table = OcTable::from_parts(expected_space.clone(), entries);
    spot_check(&table)?;
    Ok(table)
}

/// Re-derive one randomly sampled entry from the others and compare exactly.
fn spot_check(table: &OcTable) -> Result<(), Error> {
    if table.is_empty() {
        return Ok(());
    }
    let pick = rand::rng().random_range(0..table.len());
    let (class, stored) = table.entries().nth(pick).expect("index in range");
    let rederived = table.rederive_from_entries(class)?;
    if &rederived != stored {
        return Err(Error::InvalidCache(format!(
            "entry for {class} does not re-derive: stored {}, recomputed {}",
            format_rational(stored),
            format_rational(&rederived)
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{compute_table, Budget};

    fn space(dims: &[u32]) -> AmbientSpace {
        AmbientSpace::product(dims.to_vec()).unwrap()
    }

    fn class(coeffs: &[u32]) -> CurveClass {
        CurveClass::new(coeffs.to_vec()).unwrap()
    }

    fn sample_table() -> OcTable {
        compute_table(space(&[3]), &class(&[2]), &Budget::unlimited()).unwrap()
    }

    #[test]
    fn round_trip_through_json() {
        let table = sample_table();
        let text = table_to_json(&table).unwrap();
        let loaded = from_json(&text, &space(&[3])).unwrap();
        assert_eq!(loaded.len(), table.len());
        assert_eq!(loaded.get(&class(&[2])), table.get(&class(&[2])));
    }

    #[test]
    fn round_trip_through_a_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("table.json");
        let table = compute_table(space(&[2, 2]), &class(&[1, 1]), &Budget::unlimited()).unwrap();
        save_table(&table, &path).unwrap();
        let loaded = load_table(&path, &space(&[2, 2])).unwrap();
        assert_eq!(loaded.len(), 3);
        assert_eq!(
            loaded.get(&class(&[1, 1])),
            table.get(&class(&[1, 1]))
        );
    }

    #[test]
    fn rejects_wrong_space_and_version() {
        let text = table_to_json(&sample_table()).unwrap();
        assert!(matches!(
            from_json(&text, &space(&[4])),
            Err(Error::CacheSpaceMismatch)
        ));
        let bumped = text.replace("\"version\":1", "\"version\":9");
        assert!(matches!(
            from_json(&bumped, &space(&[3])),
            Err(Error::UnsupportedCacheVersion(9))
        ));
    }

    #[test]
    fn rejects_tables_that_are_not_closed() {
        let text = table_to_json(&sample_table()).unwrap();
        let gutted = text.replace("\"1\":\"2\",", "");
        match from_json(&gutted, &space(&[3])) {
            Err(Error::InvalidCache(msg)) => assert!(msg.contains("not closed"), "{msg}"),
            other => panic!("expected closure failure, got {other:?}"),
        }
    }

    #[test]
    fn rejects_tampered_values() {
        // tamper every entry so the sampled one is certainly corrupt
        let text = table_to_json(&sample_table())
            .unwrap()
            .replace("\"1\":\"2\"", "\"1\":\"3\"")
            .replace("\"2\":\"27\"", "\"2\":\"28\"");
        match from_json(&text, &space(&[3])) {
            Err(Error::InvalidCache(msg)) => {
                assert!(msg.contains("does not re-derive"), "{msg}")
            }
            other => panic!("expected re-derivation failure, got {other:?}"),
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(from_json("{not json", &space(&[3])).is_err());
        assert!(from_json(
            r#"{"space":{"dims":[3]},"entries":{"0":"1"},"version":1}"#,
            &space(&[3])
        )
        .is_err());
        assert!(from_json(
            r#"{"space":{"dims":[3]},"entries":{"1":"1/0"},"version":1}"#,
            &space(&[3])
        )
        .is_err());
    }
}
