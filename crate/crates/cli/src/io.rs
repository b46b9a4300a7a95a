use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use superpose_core::{Alphabet, DiscreteFunction};

use crate::Level;

/// Candidate alphabets for a table of `n` symbols at the given level.
fn candidates(level: Level, n: usize) -> anyhow::Result<Vec<Alphabet>> {
    match level {
        Level::Operator => {
            if n != 3 {
                bail!("operator-level tables use exactly three symbols, this one has {n}");
            }
            Ok(vec![Alphabet::operator_level()])
        }
        Level::Function => {
            if n == 3 {
                return Ok(vec![Alphabet::ternary()]);
            }
            let mut out = vec![Alphabet::modular(n)?];
            if n % 2 == 1 {
                out.push(Alphabet::balanced(n)?);
            }
            Ok(out)
        }
    }
}

/// Reads the `N=` field off the header without committing to an alphabet.
fn peek_size(text: &str, path: &Path) -> anyhow::Result<usize> {
    let header = text.lines().next().unwrap_or_default();
    header
        .split_whitespace()
        .find_map(|f| f.strip_prefix("N="))
        .and_then(|v| v.parse().ok())
        .with_context(|| format!("{}: missing `N=` in the dfun header", path.display()))
}

/// Loads a table, inferring the alphabet from the level and the header.
pub fn load_table(path: impl AsRef<Path>, level: Level) -> anyhow::Result<DiscreteFunction> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let n = peek_size(&text, path)?;
    let mut first_err = None;
    for alpha in candidates(level, n)? {
        match DiscreteFunction::parse_table(&text, &alpha) {
            Ok(f) => return Ok(f),
            Err(e) => first_err.get_or_insert(e),
        };
    }
    Err(first_err.expect("at least one candidate alphabet"))
        .with_context(|| format!("parsing {}", path.display()))
}

/// Writes a file atomically: the content lands under a temporary name in
/// the target directory and is renamed into place, so failures never leave
/// a partial artifact.
pub fn write_atomic(path: impl AsRef<Path>, content: &str) -> anyhow::Result<()> {
    let path = path.as_ref();
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent).with_context(|| format!("creating {}", parent.display()))?;
        }
    }
    let mut tmp = PathBuf::from(path);
    let file_name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    tmp.set_file_name(format!(".{file_name}.tmp-{}", std::process::id()));
    fs::write(&tmp, content).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

/// Writes to the given file, or to stdout when no path is set.
pub fn emit(out: &Option<String>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => write_atomic(path, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
