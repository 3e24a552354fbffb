//! One JSON file per `(N, m)` holding a computed character.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use qchar_core::MultiPoly;

use crate::render::{self, ChiJson};

pub struct ChiCache {
    dir: PathBuf,
}

impl ChiCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        ChiCache { dir: dir.into() }
    }

    pub fn path(&self, rank: usize, m: usize) -> PathBuf {
        self.dir.join(format!("chi_N{rank}_m{m}.json"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// The cached polynomial, or `None` if absent or unreadable.
    pub fn load(&self, rank: usize, m: usize) -> Option<MultiPoly> {
        let text = fs::read_to_string(self.path(rank, m)).ok()?;
        let doc: ChiJson = serde_json::from_str(&text).ok()?;
        if doc.rank != rank || doc.m != m {
            return None;
        }
        render::poly_from_json(&doc)
    }

    pub fn store(&self, rank: usize, m: usize, engine: &str, poly: &MultiPoly) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let doc = render::chi_json(rank, m, engine, poly);
        let tmp = self.dir.join(format!(".chi_N{rank}_m{m}.json.tmp"));
        fs::write(&tmp, render::to_json_line(&doc) + "\n")?;
        fs::rename(tmp, self.path(rank, m))
    }
}
