//! Binary cache for monoid closures.
//!
//! Layout: magic `BHKM`, format version (u32 LE), descriptor-label hash
//! (u64 FNV-1a), group order (u32), element count (u64); then the generator
//! labels (u32 count, each u32 length + UTF-8 bytes), then every element's
//! image array (u16 LE) in id order. Mismatched versions or descriptors are
//! refused.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use bihecke::fmonoid::{TransformationMonoid, WFunction};

const MAGIC: &[u8; 4] = b"BHKM";
const VERSION: u32 = 1;

fn fnv(s: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.bytes() {
        h = (h ^ b as u64).wrapping_mul(0x100000001b3);
    }
    h
}

/// Cache file path for one (descriptor, monoid-kind) pair.
pub fn cache_path(dir: &Path, descriptor: &str, kind: &str) -> PathBuf {
    dir.join(format!("{descriptor}.{kind}.monoid"))
}

pub fn save(path: &Path, descriptor: &str, group_order: usize, m: &TransformationMonoid) -> Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&fnv(descriptor).to_le_bytes())?;
    w.write_all(&(group_order as u32).to_le_bytes())?;
    w.write_all(&(m.len() as u64).to_le_bytes())?;
    w.write_all(&(m.gen_count() as u32).to_le_bytes())?;
    for gi in 0..m.gen_count() {
        let label = m.gen_label(gi).as_bytes();
        w.write_all(&(label.len() as u32).to_le_bytes())?;
        w.write_all(label)?;
    }
    for x in 0..m.len() as u32 {
        for &v in m.element(x).0.iter() {
            w.write_all(&v.to_le_bytes())?;
        }
    }
    Ok(())
}

/// Load the raw cached data: (generator labels, element arrays).
pub fn load(path: &Path, descriptor: &str, group_order: usize) -> Result<(Vec<String>, Vec<WFunction>)> {
    let mut r = BufReader::new(File::open(path).with_context(|| format!("open {}", path.display()))?);
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        bail!("not a monoid cache file");
    }
    let mut u32b = [0u8; 4];
    let mut u64b = [0u8; 8];
    r.read_exact(&mut u32b)?;
    let version = u32::from_le_bytes(u32b);
    if version != VERSION {
        bail!("cache format version {version} is not supported (expected {VERSION})");
    }
    r.read_exact(&mut u64b)?;
    if u64::from_le_bytes(u64b) != fnv(descriptor) {
        bail!("cache was written for a different group descriptor");
    }
    r.read_exact(&mut u32b)?;
    let order = u32::from_le_bytes(u32b) as usize;
    if order != group_order {
        bail!("cache group order {order} does not match {group_order}");
    }
    r.read_exact(&mut u64b)?;
    let count = u64::from_le_bytes(u64b) as usize;
    r.read_exact(&mut u32b)?;
    let ngens = u32::from_le_bytes(u32b) as usize;
    let mut labels = Vec::with_capacity(ngens);
    for _ in 0..ngens {
        r.read_exact(&mut u32b)?;
        let len = u32::from_le_bytes(u32b) as usize;
        let mut buf = vec![0u8; len];
        r.read_exact(&mut buf)?;
        labels.push(String::from_utf8(buf)?);
    }
    let mut elements = Vec::with_capacity(count);
    let mut buf = vec![0u8; order * 2];
    for _ in 0..count {
        r.read_exact(&mut buf)?;
        let arr: Box<[u16]> = buf
            .chunks_exact(2)
            .map(|c| u16::from_le_bytes([c[0], c[1]]))
            .collect();
        elements.push(WFunction(arr));
    }
    Ok((labels, elements))
}
