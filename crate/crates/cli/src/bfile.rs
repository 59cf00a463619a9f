//! OEIS b-file handling: `bNNNNNN.txt` files with `index value` lines and
//! `#` comments.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;

/// Cache filename for a sequence id: A001764 -> <dir>/b001764.txt.
pub fn cache_path(dir: &Path, seq_id: &str) -> Result<PathBuf, String> {
    let digits = seq_id.strip_prefix(['A', 'a']).unwrap_or(seq_id);
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(format!("malformed sequence id {seq_id:?} (expected like A001764)"));
    }
    Ok(dir.join(format!("b{digits:0>6}.txt")))
}

/// Parse b-file content into index -> value; blank lines and `#` comments
/// are skipped. Errors carry the 1-based line number.
pub fn parse(content: &str) -> Result<BTreeMap<i64, BigInt>, String> {
    let mut out = BTreeMap::new();
    for (lineno, line) in content.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(idx), Some(val)) = (fields.next(), fields.next()) else {
            return Err(format!("line {lineno}: expected \"index value\", got {line:?}"));
        };
        if fields.next().is_some() {
            return Err(format!("line {lineno}: trailing fields in {line:?}"));
        }
        let idx: i64 = idx
            .parse()
            .map_err(|_| format!("line {lineno}: bad index {idx:?}"))?;
        let val: BigInt = val
            .parse()
            .map_err(|_| format!("line {lineno}: bad value {val:?}"))?;
        if out.insert(idx, val).is_some() {
            return Err(format!("line {lineno}: duplicate index {idx}"));
        }
    }
    Ok(out)
}

/// Download the b-file into the cache; only called when the user passed
/// --allow-fetch.
pub fn fetch(seq_id: &str, dest: &Path) -> Result<(), String> {
    let digits = seq_id.strip_prefix(['A', 'a']).unwrap_or(seq_id);
    let url = format!("https://oeis.org/A{digits:0>6}/b{digits:0>6}.txt");
    let body = ureq::get(&url)
        .call()
        .map_err(|e| format!("fetching {url}: {e}"))?
        .body_mut()
        .read_to_string()
        .map_err(|e| format!("reading {url}: {e}"))?;
    if let Some(parent) = dest.parent() {
        std::fs::create_dir_all(parent).map_err(|e| format!("{}: {e}", parent.display()))?;
    }
    std::fs::write(dest, body).map_err(|e| format!("{}: {e}", dest.display()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_entries() {
        let text = "# header\n\n0 1\n1 1\n2 3\n";
        let map = parse(text).unwrap();
        assert_eq!(map.len(), 3);
        assert_eq!(map[&2], BigInt::from(3));
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse("0 1\nbroken\n").unwrap_err();
        assert!(err.contains("line 2"), "{err}");
        let err = parse("0 1\n1 x\n").unwrap_err();
        assert!(err.contains("line 2"), "{err}");
        let err = parse("0 1\n0 2\n").unwrap_err();
        assert!(err.contains("duplicate"), "{err}");
    }

    #[test]
    fn cache_paths() {
        let p = cache_path(Path::new("/tmp/cache"), "A001764").unwrap();
        assert_eq!(p, Path::new("/tmp/cache/b001764.txt"));
        let p = cache_path(Path::new("."), "1764").unwrap();
        assert_eq!(p, Path::new("./b001764.txt"));
        assert!(cache_path(Path::new("."), "X?").is_err());
    }
}
