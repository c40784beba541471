//! Line-oriented zero catalog with a trailing SHA-256 line.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::types::{LFunction, ZeroMethod, ZeroRecord};
use crate::error::{Error, Result};

pub const CATALOG_VERSION: &str = "v1";
const MAGIC: &str = "#zerocatalog";

/// The located zeros of one function, ordered by ordinate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Catalog {
    pub function: LFunction,
    pub records: Vec<ZeroRecord>,
    /// Height up to which the list is known complete. Not persisted; a
    /// loaded catalog vouches only for its last ordinate.
    pub scanned_to: f64,
}

impl Catalog {
    pub fn new(function: LFunction, records: Vec<ZeroRecord>) -> Self {
        let scanned_to = records.last().map_or(0.0, |r| r.ordinate);
        Catalog { function, records, scanned_to }
    }

    /// Catalog from a scan that was complete up to `height`.
    pub fn scanned(function: LFunction, records: Vec<ZeroRecord>, height: f64) -> Self {
        let mut c = Self::new(function, records);
        c.scanned_to = c.scanned_to.max(height);
        c
    }

    /// Highest ordinate the catalog vouches for.
    pub fn coverage(&self) -> f64 {
        self.scanned_to
    }

    pub fn ordinates(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.ordinate).collect()
    }

    pub fn count_up_to(&self, t: f64) -> usize {
        self.records.partition_point(|r| r.ordinate <= t)
    }

    pub fn to_text(&self) -> String {
        let mut body = format!("{MAGIC} {CATALOG_VERSION} {}\n", self.function);
        for r in &self.records {
            body.push_str(&format!("{}\t{:.16e}\t{:.16e}\t{}\n", r.index, r.ordinate, r.residual, r.method));
        }
        let digest = hex::encode(Sha256::digest(body.as_bytes()));
        body.push_str(&format!("#sha256 {digest}\n"));
        body
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let header = text.lines().next().ok_or_else(|| Error::CatalogFormat("empty file".into()))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some(MAGIC) {
            return Err(Error::CatalogFormat("missing catalog header".into()));
        }
        let version = parts.next().unwrap_or("");
        if version != CATALOG_VERSION {
            return Err(Error::VersionUnsupported(version.to_string()));
        }
        let function: LFunction = parts
            .next()
            .ok_or_else(|| Error::CatalogFormat("header lacks function tag".into()))?
            .parse()
            .map_err(Error::CatalogFormat)?;
        let cut = text.rfind("#sha256 ").ok_or(Error::ChecksumMismatch)?;
        let (body, tail) = text.split_at(cut);
        let claimed = tail["#sha256 ".len()..].trim_end_matches('\n');
        if claimed != hex::encode(Sha256::digest(body.as_bytes())) || !tail.ends_with('\n') {
            return Err(Error::ChecksumMismatch);
        }
        let mut records = Vec::new();
        for line in body.lines().skip(1) {
            let f: Vec<&str> = line.split('\t').collect();
            if f.len() != 4 {
                return Err(Error::CatalogFormat(format!("bad record `{line}`")));
            }
            let bad = |what: &str| Error::CatalogFormat(format!("bad {what} in `{line}`"));
            let method: ZeroMethod = f[3].parse().map_err(Error::CatalogFormat)?;
            records.push(ZeroRecord {
                index: f[0].parse().map_err(|_| bad("index"))?,
                ordinate: f[1].parse().map_err(|_| bad("ordinate"))?,
                residual: f[2].parse().map_err(|_| bad("residual"))?,
                function,
                method,
            });
        }
        if records.windows(2).any(|w| w[1].ordinate <= w[0].ordinate) {
            return Err(Error::CatalogFormat("ordinates are not strictly increasing".into()));
        }
        Ok(Catalog::new(function, records))
    }

    /// Writes to a temporary sibling and renames it into place.
    pub fn store(&self, path: &Path) -> Result<()> {
        if self.records.is_empty() {
            return Err(Error::CatalogFormat("refusing to store an empty catalog".into()));
        }
        let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
        let name = path.file_name().ok_or_else(|| Error::Io(format!("{} is not a file path", path.display())))?;
        let tmp = dir.join(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(self.to_text().as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_text(&fs::read_to_string(path)?)
    }
}
