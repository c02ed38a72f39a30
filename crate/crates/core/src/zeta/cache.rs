//! Plain-text zero-table cache.
//!
//! ```text
//! # t_max=1000
//! # refine_tol=0.0000000001
//! # count=649
//! 14.134725141734695
//! ...
//! ```
//!
//! Ordinates are written in the shortest form that parses back to the same
//! double, so writing a table read from a cache reproduces the file byte for
//! byte.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use super::zeros::{find_zeros, ZeroTable};
use crate::error::{io_at, Error, Result};

pub fn write_cache_to<W: Write>(table: &ZeroTable, mut out: W) -> std::io::Result<()> {
    writeln!(out, "# t_max={}", table.t_max())?;
    writeln!(out, "# refine_tol={}", table.refine_tol())?;
    writeln!(out, "# count={}", table.len())?;
    for g in table.zeros() {
        writeln!(out, "{g}")?;
    }
    Ok(())
}

pub fn write_cache(table: &ZeroTable, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path).map_err(io_at(path))?);
    write_cache_to(table, &mut w)?;
    w.flush()?;
    Ok(())
}

pub fn read_cache(path: &Path) -> Result<ZeroTable> {
    read_cache_from(File::open(path).map_err(io_at(path))?, path)
}

/// Parse a cache; `origin` only labels error messages.
pub fn read_cache_from<R: Read>(input: R, origin: &Path) -> Result<ZeroTable> {
    let err = |line: usize, message: String| Error::Format {
        path: origin.to_path_buf(),
        line,
        message,
    };
    let mut lines = BufReader::new(input).lines();
    let mut header = |key: &str, line: usize| -> Result<String> {
        let text = lines
            .next()
            .ok_or_else(|| err(line, format!("missing header `# {key}=`")))??;
        let prefix = format!("# {key}=");
        text.strip_prefix(&prefix)
            .map(str::to_owned)
            .ok_or_else(|| err(line, format!("expected `{prefix}<value>`, found `{text}`")))
    };
    let t_max: f64 = header("t_max", 1)?
        .parse()
        .map_err(|e| err(1, format!("bad t_max: {e}")))?;
    let refine_tol: f64 = header("refine_tol", 2)?
        .parse()
        .map_err(|e| err(2, format!("bad refine_tol: {e}")))?;
    let count: usize = header("count", 3)?
        .parse()
        .map_err(|e| err(3, format!("bad count: {e}")))?;

    let mut zeros = Vec::with_capacity(count);
    for (i, line) in lines.enumerate() {
        let line = line?;
        let lineno = i + 4;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let v: f64 = text
            .parse()
            .map_err(|e| err(lineno, format!("bad ordinate `{text}`: {e}")))?;
        if let Some(&last) = zeros.last() {
            if v <= last {
                return Err(err(lineno, format!("ordinates not ascending at {v}")));
            }
        }
        if v > t_max {
            return Err(err(lineno, format!("ordinate {v} above t_max {t_max}")));
        }
        zeros.push(v);
    }
    if zeros.len() != count {
        return Err(err(
            3,
            format!("header says {count} zeros, file has {}", zeros.len()),
        ));
    }
    ZeroTable::new(zeros, t_max, refine_tol)
}

/// Reuse the cache at `path` when it covers `t_max` at `refine_tol` or finer;
/// otherwise scan and rewrite it. A cache covering more than requested is
/// truncated to `t_max`.
pub fn load_or_compute(
    path: &Path,
    t_max: f64,
    grid_factor: f64,
    refine_tol: f64,
) -> Result<ZeroTable> {
    if path.exists() {
        if let Ok(table) = read_cache(path) {
            if table.t_max() >= t_max && table.refine_tol() <= refine_tol {
                let mut t = table.truncated(t_max);
                if t.t_max() != t_max {
                    t = ZeroTable::new(t.zeros().to_vec(), t_max, table.refine_tol())?;
                }
                return Ok(t);
            }
        }
    }
    let table = find_zeros(t_max, grid_factor, refine_tol)?;
    write_cache(&table, path)?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::DEFAULT_GRID_FACTOR;
    use proptest::prelude::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let table = find_zeros(300.0, DEFAULT_GRID_FACTOR, 1e-10).unwrap();
        let mut first = Vec::new();
        write_cache_to(&table, &mut first).unwrap();
        let back = read_cache_from(first.as_slice(), Path::new("mem")).unwrap();
        assert_eq!(back.zeros(), table.zeros());
        assert_eq!(back.t_max(), table.t_max());
        assert_eq!(back.refine_tol(), table.refine_tol());
        let mut second = Vec::new();
        write_cache_to(&back, &mut second).unwrap();
        assert_eq!(first, second);
        let text = String::from_utf8(first).unwrap();
        assert!(text.starts_with("# t_max=300\n# refine_tol=0.0000000001\n# count=138\n14.1347251417"));
    }

    #[test]
    fn rejects_malformed_files() {
        let cases = [
            "t_max=10\n",
            "# t_max=50\n# refine_tol=1e-10\n# count=2\n14.134725141734695\n",
            "# t_max=50\n# refine_tol=1e-10\n# count=2\n21.0\n14.0\n",
            "# t_max=20\n# refine_tol=1e-10\n# count=1\n21.0\n",
            "# t_max=50\n# refine_tol=1e-10\n# count=1\nabc\n",
        ];
        for c in cases {
            assert!(read_cache_from(c.as_bytes(), Path::new("mem")).is_err(), "{c}");
        }
    }

    #[test]
    fn cache_reuse() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("zeros.txt");
        let a = load_or_compute(&path, 60.0, DEFAULT_GRID_FACTOR, 1e-10).unwrap();
        let b = load_or_compute(&path, 40.0, DEFAULT_GRID_FACTOR, 1e-10).unwrap();
        assert_eq!(b.zeros(), &a.zeros()[..b.len()]);
        assert_eq!(b.t_max(), 40.0);
        // a stricter tolerance forces a rescan
        let c = load_or_compute(&path, 60.0, DEFAULT_GRID_FACTOR, 1e-11).unwrap();
        assert_eq!(c.refine_tol(), 1e-11);
    }

    proptest! {
        #[test]
        fn arbitrary_tables_round_trip(mut raw in proptest::collection::vec(10.0f64..1.0e6, 1..50)) {
            raw.sort_by(f64::total_cmp);
            raw.dedup();
            let table = ZeroTable::new(raw, 1.0e6, 1e-10).unwrap();
            let mut first = Vec::new();
            write_cache_to(&table, &mut first).unwrap();
            let back = read_cache_from(first.as_slice(), Path::new("mem")).unwrap();
            let mut second = Vec::new();
            write_cache_to(&back, &mut second).unwrap();
            prop_assert_eq!(first, second);
            prop_assert_eq!(back.zeros(), table.zeros());
        }
    }
}
