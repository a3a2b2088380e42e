//! Atomic file outputs: every artifact is written to a temp path in the
//! destination directory and renamed into place, so interrupted runs never
//! leave partial files.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

/// Run `write` against a temporary sibling of `path`, then rename over `path`.
pub fn atomic_write<E, F>(path: &Path, write: F) -> Result<(), E>
where
    E: From<io::Error>,
    F: FnOnce(&Path) -> Result<(), E>,
{
    let tmp = tmp_sibling(path)?;
    match write(&tmp) {
        Ok(()) => {
            fs::rename(&tmp, path)?;
            Ok(())
        }
        Err(e) => {
            let _ = fs::remove_file(&tmp);
            Err(e)
        }
    }
}

/// Atomically replace `path` with `bytes`.
pub fn atomic_write_bytes(path: &Path, bytes: &[u8]) -> io::Result<()> {
    atomic_write(path, |tmp| fs::write(tmp, bytes))
}

fn tmp_sibling(path: &Path) -> io::Result<PathBuf> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let name = path
        .file_name()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "path has no file name"))?;
    let mut tmp = name.to_os_string();
    tmp.push(".tmp");
    Ok(dir.join(tmp))
}
