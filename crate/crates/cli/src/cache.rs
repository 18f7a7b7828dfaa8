//! Opt-in on-disk cache of enumerated ideal lattices.
//!
//! One JSON file per ring, keyed by the SHA-256 of the ring's
//! construction record (never its label).  A stored lattice is trusted
//! only after the saved key, order, and operation-table fingerprint all
//! match the live ring *and* the ideal data revalidates through
//! [`IdealLattice::from_parts`]; anything stale or corrupt is treated
//! as a miss.  Writes go to a temp file first and are renamed into
//! place, so a crashed run never leaves a half-written entry behind.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use pure_spectra::lattice::IdealLattice;
use pure_spectra::ring::FiniteRing;
use pure_spectra::Limits;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub struct LatticeCache {
    dir: PathBuf,
}

impl LatticeCache {
    /// Open (creating if needed) a cache directory.
    pub fn new(dir: impl Into<PathBuf>) -> io::Result<LatticeCache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(LatticeCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Content hash of the ring's construction record.
    pub fn key(ring: &FiniteRing) -> String {
        let digest = Sha256::digest(ring.construction().cache_key_bytes());
        let mut out = String::with_capacity(64);
        for byte in digest {
            out.push_str(&format!("{byte:02x}"));
        }
        out
    }

    fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Load the cached lattice for `ring`, or `None` on a miss or any
    /// validation failure.
    pub fn load(&self, ring: &FiniteRing, limits: &Limits) -> Option<IdealLattice> {
        let key = Self::key(ring);
        let text = fs::read_to_string(self.path_for(&key)).ok()?;
        let doc: Value = serde_json::from_str(&text).ok()?;
        if doc.get("key")? != &json!(key)
            || doc.get("order")? != &json!(ring.order())
            || doc.get("fingerprint")? != &json!(ring.fingerprint())
        {
            return None;
        }
        let parts: Vec<Vec<usize>> = serde_json::from_value(doc.get("ideals")?.clone()).ok()?;
        IdealLattice::from_parts(ring, parts, limits).ok()
    }

    /// Persist `lattice` under its ring's key (atomic replace).
    pub fn store(&self, lattice: &IdealLattice) -> io::Result<()> {
        let ring = lattice.ring();
        let key = Self::key(ring);
        let doc = json!({
            "key": key,
            "label": ring.label(),
            "order": ring.order(),
            "fingerprint": ring.fingerprint(),
            "ideals": lattice
                .ideals()
                .iter()
                .map(|i| i.elements())
                .collect::<Vec<_>>(),
        });
        let tmp = self.dir.join(format!("{key}.tmp.{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string(&doc)?)?;
        fs::rename(&tmp, self.path_for(&key))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pure_spectra::ring::{build_product, build_zmod};

    #[test]
    fn round_trips_and_rejects_corruption() {
        let limits = Limits::default();
        let dir = tempfile::tempdir().unwrap();
        let cache = LatticeCache::new(dir.path()).unwrap();
        let ring = build_zmod(12, &limits).unwrap();

        assert!(cache.load(&ring, &limits).is_none());
        let fresh = IdealLattice::enumerate(&ring, &limits).unwrap();
        cache.store(&fresh).unwrap();

        let cached = cache.load(&ring, &limits).expect("hit after store");
        assert_eq!(cached.ideals(), fresh.ideals());

        // A different ring never hits this entry.
        let other = build_zmod(13, &limits).unwrap();
        assert!(cache.load(&other, &limits).is_none());

        // Corrupt the ideal data: validation turns the hit into a miss.
        let path = cache.path_for(&LatticeCache::key(&ring));
        let mut doc: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        doc["ideals"] = json!([[0usize], [0usize, 1]]);
        fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
        assert!(cache.load(&ring, &limits).is_none());
    }

    #[test]
    fn keys_hash_the_construction_not_the_label() {
        let limits = Limits::default();
        let z6 = build_zmod(6, &limits).unwrap();
        let z2 = build_zmod(2, &limits).unwrap();
        let z3 = build_zmod(3, &limits).unwrap();
        let prod = build_product(&[z2, z3], &limits).unwrap();
        // Isomorphic rings, different constructions, different keys.
        assert_ne!(LatticeCache::key(&z6), LatticeCache::key(&prod));
        assert_eq!(LatticeCache::key(&z6).len(), 64);
    }
}
