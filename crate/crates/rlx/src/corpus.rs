//! On-disk cache of enumerated algebras, under `$RLX_CORPUS_DIR` when set.
//!
//! Layout: `<dir>/v<GENERATOR_VERSION>/size-<n>/<index>.rlat`, plus a
//! `complete` marker holding the count, written last.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use rlat_core::enumerate::algebras_of_size;
use rlat_core::ResiduatedLattice;

use crate::format::{parse_rlat, print_rlat};

/// Bumped whenever the enumerator's output order or labelling changes.
pub const GENERATOR_VERSION: u32 = 1;

pub const CORPUS_ENV: &str = "RLX_CORPUS_DIR";

pub fn cache_dir(root: &Path, n: usize) -> PathBuf {
    root.join(format!("v{GENERATOR_VERSION}")).join(format!("size-{n}"))
}

pub fn file_name(index: usize) -> String {
    format!("{index:05}.rlat")
}

pub fn write_corpus(dir: &Path, algebras: &[ResiduatedLattice]) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (i, a) in algebras.iter().enumerate() {
        let path = dir.join(file_name(i));
        fs::write(&path, print_rlat(&a.to_raw())).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn read_cached(dir: &Path) -> Result<Option<Vec<ResiduatedLattice>>> {
    let Ok(marker) = fs::read_to_string(dir.join("complete")) else {
        return Ok(None);
    };
    let count: usize = marker.trim().parse().with_context(|| format!("corrupt marker in {}", dir.display()))?;
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let path = dir.join(file_name(i));
        let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        let raw = parse_rlat(&text).with_context(|| format!("parsing {}", path.display()))?;
        let a = ResiduatedLattice::validate(&raw).with_context(|| format!("validating {}", path.display()))?;
        out.push(a);
    }
    Ok(Some(out))
}

/// Algebras of size `n`, from the cache when present; fills the cache
/// otherwise.
pub fn load_or_generate(n: usize, root: Option<&Path>) -> Result<Vec<ResiduatedLattice>> {
    let Some(root) = root else {
        return Ok(algebras_of_size(n)?);
    };
    let dir = cache_dir(root, n);
    if let Some(cached) = read_cached(&dir)? {
        return Ok(cached);
    }
    let algebras = algebras_of_size(n)?;
    write_corpus(&dir, &algebras)?;
    fs::write(dir.join("complete"), format!("{}\n", algebras.len()))?;
    Ok(algebras)
}

pub fn env_root() -> Option<PathBuf> {
    std::env::var_os(CORPUS_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

pub fn check_size(n: usize) -> Result<()> {
    if n == 0 || n > rlat_core::enumerate::ENUMERATION_CAP {
        bail!(rlat_core::Error::SizeCapExceeded { n, cap: rlat_core::enumerate::ENUMERATION_CAP });
    }
    Ok(())
}
