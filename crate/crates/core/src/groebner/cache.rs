//! On-disk store for reduced bases.
//!
//! A computed basis is keyed by a digest of its ring (variable names and
//! order) together with the exact generator list, so a cache entry is only
//! ever replayed for the identical computation. Files are plain text: three
//! header lines followed by one basis element per line, which keeps entries
//! inspectable and diffable.
//!
//! Cached bases carry no transform rows; callers that need cofactors must
//! recompute with tracking enabled.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use sha2::{Digest, Sha256};

use super::{buchberger_with, GroebnerBasis, PairSelection};
use crate::error::{Error, Result};
use crate::ring::{same_ring, Polynomial, RingCtx};

/// Directory-backed store of reduced bases.
pub struct BasisStore {
    dir: PathBuf,
}

fn ring_header_vars(ring: &RingCtx) -> String {
    ring.var_names().join(",")
}

fn ring_header_order(ring: &RingCtx) -> String {
    let names: Vec<&str> = ring
        .order()
        .priority()
        .iter()
        .map(|&i| ring.var_name(i))
        .collect();
    format!("{} {}", ring.order().kind().name(), names.join(">"))
}

fn generators_digest(gens: &[Polynomial]) -> String {
    let mut hasher = Sha256::new();
    for g in gens {
        hasher.update(g.to_string().as_bytes());
        hasher.update(b"\n");
    }
    format!("{:x}", hasher.finalize())
}

impl BasisStore {
    /// Opens (and creates if needed) a store rooted at `dir`.
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(BasisStore { dir })
    }

    /// Path of the entry for this ring and generator list.
    fn entry_path(&self, ring: &RingCtx, digest: &str) -> PathBuf {
        let mut hasher = Sha256::new();
        hasher.update(ring_header_vars(ring).as_bytes());
        hasher.update(b"\n");
        hasher.update(ring_header_order(ring).as_bytes());
        hasher.update(b"\n");
        hasher.update(digest.as_bytes());
        let key = format!("{:x}", hasher.finalize());
        self.dir.join(format!("{key}.basis"))
    }

    /// Loads the basis elements for `gens` if a matching entry exists.
    /// Header mismatches are treated as a miss rather than an error so a
    /// stale or foreign file can never poison a computation.
    pub fn load(&self, ring: &Arc<RingCtx>, gens: &[Polynomial]) -> Option<Vec<Polynomial>> {
        let digest = generators_digest(gens);
        let path = self.entry_path(ring, &digest);
        let text = fs::read_to_string(&path).ok()?;
        match parse_entry(ring, &text) {
            Ok((vars, order, stored_digest, elements))
                if vars == ring_header_vars(ring)
                    && order == ring_header_order(ring)
                    && stored_digest == digest =>
            {
                Some(elements)
            }
            _ => None,
        }
    }

    /// Writes a basis entry for `gens`.
    pub fn store(
        &self,
        ring: &Arc<RingCtx>,
        gens: &[Polynomial],
        elements: &[Polynomial],
    ) -> Result<PathBuf> {
        let digest = generators_digest(gens);
        let path = self.entry_path(ring, &digest);
        let mut text = String::new();
        text.push_str(&format!("#vars: {}\n", ring_header_vars(ring)));
        text.push_str(&format!("#order: {}\n", ring_header_order(ring)));
        text.push_str(&format!("#gens-sha256: {digest}\n"));
        for e in elements {
            text.push_str(&e.to_string());
            text.push('\n');
        }
        fs::write(&path, text)?;
        Ok(path)
    }

    /// Directory this store writes into.
    pub fn dir(&self) -> &Path {
        &self.dir
    }
}

fn parse_entry(
    ring: &Arc<RingCtx>,
    text: &str,
) -> Result<(String, String, String, Vec<Polynomial>)> {
    let mut lines = text.lines();
    let vars = header_value(lines.next(), "#vars:")?;
    let order = header_value(lines.next(), "#order:")?;
    let digest = header_value(lines.next(), "#gens-sha256:")?;
    let mut elements = Vec::new();
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        elements.push(ring.parse(line)?);
    }
    Ok((vars, order, digest, elements))
}

fn header_value(line: Option<&str>, tag: &str) -> Result<String> {
    let line = line.ok_or_else(|| Error::CacheHeader(format!("missing `{tag}` line")))?;
    line.strip_prefix(tag)
        .map(|rest| rest.trim().to_string())
        .ok_or_else(|| Error::CacheHeader(format!("expected `{tag}`, found `{line}`")))
}

/// Returns the reduced basis of `gens`, reusing a stored result when one
/// matches and computing (then storing) it otherwise. Bases delivered this
/// way never carry transform rows, whether computed or replayed.
pub fn cached_reduced_basis(store: &BasisStore, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let ring = gens
        .first()
        .map(|p| Arc::clone(p.ring()))
        .expect("at least one polynomial is required to identify the ring");
    for g in gens {
        assert!(
            same_ring(&ring, g.ring()),
            "polynomials belong to different rings"
        );
    }
    if let Some(elements) = store.load(&ring, gens) {
        return Ok(GroebnerBasis::from_parts(&ring, gens.to_vec(), elements));
    }
    let gb = buchberger_with(gens, PairSelection::Normal, false);
    store.store(&ring, gens, gb.elements())?;
    Ok(GroebnerBasis::from_parts(
        &ring,
        gens.to_vec(),
        gb.elements().to_vec(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingCtx;

    #[test]
    fn round_trip_hits_the_cache() {
        let dir = tempfile::tempdir().unwrap();
        let store = BasisStore::open(dir.path()).unwrap();
        let r = RingCtx::lex(&["x1", "d1"]);
        let gens = vec![r.parse("x1^2").unwrap(), r.parse("x1*d1 - d1").unwrap()];

        let first = cached_reduced_basis(&store, &gens).unwrap();
        assert!(store.load(&r, &gens).is_some(), "entry was written");

        let second = cached_reduced_basis(&store, &gens).unwrap();
        assert_eq!(first.elements(), second.elements());
        assert!(second.transform().is_none(), "cached loads carry no rows");
    }

    #[test]
    fn different_generators_do_not_collide() {
        let dir = tempfile::tempdir().unwrap();
        let store = BasisStore::open(dir.path()).unwrap();
        let r = RingCtx::lex(&["x1", "d1"]);
        let a = vec![r.parse("x1").unwrap()];
        let b = vec![r.parse("d1").unwrap()];
        cached_reduced_basis(&store, &a).unwrap();
        assert!(store.load(&r, &b).is_none());
    }

    #[test]
    fn corrupted_entry_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let store = BasisStore::open(dir.path()).unwrap();
        let r = RingCtx::lex(&["x1", "d1"]);
        let gens = vec![r.parse("x1^2 - d1").unwrap()];
        let path = cached_reduced_basis(&store, &gens)
            .map(|_| store.entry_path(&r, &generators_digest(&gens)))
            .unwrap();
        fs::write(&path, "#vars: y1\n#order: lex y1\n#gens-sha256: 00\ny1\n").unwrap();
        assert!(store.load(&r, &gens).is_none());
    }

    #[test]
    fn order_is_part_of_the_key() {
        let dir = tempfile::tempdir().unwrap();
        let store = BasisStore::open(dir.path()).unwrap();
        let plain = RingCtx::lex(&["x1", "d1"]);
        let flipped = RingCtx::lex_with_priority(&["x1", "d1"], &["d1", "x1"]);
        let gens_plain = vec![plain.parse("x1 - d1^2").unwrap()];
        let gens_flipped = vec![flipped.parse("x1 - d1^2").unwrap()];
        cached_reduced_basis(&store, &gens_plain).unwrap();
        assert!(store.load(&flipped, &gens_flipped).is_none());
    }
}
