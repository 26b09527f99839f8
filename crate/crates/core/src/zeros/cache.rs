use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::lfun::Family;
use crate::{Error, Result};

use super::{find_zeros, ZeroSet};

/// Last header column; names the file format version.
pub const FORMAT_TAG: &str = "format=zetalab-zeros-v1";
const COLUMNS: &str = "family,ordinate,tolerance,certified_height";

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// Writes the set as CSV through a temporary file and a rename.
///
/// An empty set is written as a single row with an empty ordinate so that
/// the certified height survives the round trip.
pub fn save_zeros(zeros: &ZeroSet, path: &Path) -> Result<()> {
    let mut text = format!("{COLUMNS},{FORMAT_TAG}\n");
    let family = zeros.family().to_string();
    let tail = format!("{},{},", num(zeros.refinement_tolerance()), num(zeros.certified_height()));
    if zeros.is_empty() {
        text.push_str(&format!("{family},,{tail}\n"));
    }
    for &g in zeros.ordinates() {
        text.push_str(&format!("{family},{},{tail}\n", num(g)));
    }
    let tmp = path.with_extension("csv.tmp");
    let write = || -> std::io::Result<()> {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(text.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    };
    write().map_err(|e| Error::io(path, e))
}

/// Reads a file written by [`save_zeros`].
pub fn load_zeros(path: &Path) -> Result<ZeroSet> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::CorruptRow { line: 1, reason: "missing header".into() })?;
    let (columns, tag) = header
        .rsplit_once(',')
        .ok_or_else(|| Error::CorruptRow { line: 1, reason: "malformed header".into() })?;
    if !tag.starts_with("format=") {
        return Err(Error::CorruptRow { line: 1, reason: "header has no format tag".into() });
    }
    if tag != FORMAT_TAG {
        return Err(Error::FormatVersion(tag.trim_start_matches("format=").to_string()));
    }
    if columns != COLUMNS {
        return Err(Error::CorruptRow { line: 1, reason: format!("unexpected columns `{columns}`") });
    }
    let mut meta: Option<(String, f64, f64)> = None;
    let mut ordinates = Vec::new();
    for (i, row) in lines.enumerate() {
        let line = i + 2;
        if row.is_empty() {
            continue;
        }
        let bad = |reason: String| Error::CorruptRow { line, reason };
        let fields: Vec<&str> = row.split(',').collect();
        if fields.len() != 5 || !fields[4].is_empty() {
            return Err(bad(format!("expected 4 fields and a trailing comma, got `{row}`")));
        }
        let parse = |s: &str, what: &str| s.parse::<f64>().map_err(|_| bad(format!("bad {what} `{s}`")));
        let tolerance = parse(fields[2], "tolerance")?;
        let height = parse(fields[3], "certified height")?;
        let this = (fields[0].to_string(), tolerance, height);
        match &meta {
            None => meta = Some(this),
            Some(m) if m.0 != this.0 || m.1.to_bits() != this.1.to_bits() || m.2.to_bits() != this.2.to_bits() => {
                return Err(bad("family, tolerance or height differs from earlier rows".into()));
            }
            Some(_) => {}
        }
        if !fields[1].is_empty() {
            let g = parse(fields[1], "ordinate")?;
            if let Some(&last) = ordinates.last() {
                if g <= last {
                    return Err(bad("ordinates not strictly increasing".into()));
                }
            }
            if !(g > 0.0) || g > height {
                return Err(bad(format!("ordinate {g} outside (0, {height}]")));
            }
            ordinates.push(g);
        }
    }
    let (label, tolerance, height) =
        meta.ok_or_else(|| Error::CorruptRow { line: 2, reason: "no data rows".into() })?;
    let family: Family = label
        .parse()
        .map_err(|e: Error| Error::CorruptRow { line: 2, reason: e.to_string() })?;
    Ok(ZeroSet::new(family, ordinates, height, tolerance))
}

fn file_stem(family: &Family) -> String {
    format!("zeros-{}-T", family.to_string().replace(':', "_"))
}

fn version_suffix() -> String {
    format!("-v{}.csv", env!("CARGO_PKG_VERSION"))
}

/// Cache file for (family, height, crate version) inside `dir`.
pub fn cache_path(dir: &Path, family: &Family, height: f64) -> PathBuf {
    dir.join(format!("{}{height}{}", file_stem(family), version_suffix()))
}

/// Zeros up to `height`, reusing any cached set of the same family that is
/// certified at least that high, and caching fresh results.
pub fn load_or_find(dir: &Path, family: &Family, height: f64) -> Result<ZeroSet> {
    let stem = file_stem(family);
    let suffix = version_suffix();
    if let Ok(entries) = fs::read_dir(dir) {
        let mut best: Option<(f64, PathBuf)> = None;
        for entry in entries.flatten() {
            let name = entry.file_name().to_string_lossy().into_owned();
            let cached = name
                .strip_prefix(&stem)
                .and_then(|r| r.strip_suffix(&suffix))
                .and_then(|h| h.parse::<f64>().ok());
            if let Some(h) = cached {
                if h >= height && best.as_ref().map_or(true, |b| h < b.0) {
                    best = Some((h, entry.path()));
                }
            }
        }
        if let Some((_, path)) = best {
            if let Ok(set) = load_zeros(&path) {
                if set.family() == family {
                    return set.truncated(height);
                }
            }
        }
    }
    let set = find_zeros(height, family)?;
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    save_zeros(&set, &cache_path(dir, family, height))?;
    Ok(set)
}
