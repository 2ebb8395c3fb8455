//! Line declarations.
//!
//! ```text
//! # comments start with '#'
//! [line rho]
//! size = 1
//! s = 1
//! dual = rho
//!
//! [line sigma]
//! size = 2
//! s = 1/2
//! dual = sigma_dual
//! ```
//!
//! `size` is a positive integer, `s` a positive rational `p` or `p/q`,
//! `dual` an identifier defaulting to the line itself. `size` and `s` are
//! required.

use std::path::Path;

use crate::error::{Error, Result};
use crate::model::{is_identifier, Line, LineSet, Rational};

use super::expr::parse_rational_str;

/// Environment variable naming the configuration file.
pub const CONFIG_ENV: &str = "JACQUET_CONFIG";

#[derive(Default)]
struct Block {
    id: String,
    header_line: usize,
    size: Option<u32>,
    s: Option<Rational>,
    dual: Option<String>,
}

impl Block {
    fn finish(self) -> Result<Line> {
        let missing = |key: &str| Error::Config(format!("line {}: `{}` has no `{key}`", self.header_line, self.id));
        let size = self.size.ok_or_else(|| missing("size"))?;
        let s = self.s.ok_or_else(|| missing("s"))?;
        let dual = self.dual.clone().unwrap_or_else(|| self.id.clone());
        Line::new(self.id.clone(), size, s, dual)
    }
}

pub fn parse_config(text: &str) -> Result<LineSet> {
    let mut lines = Vec::new();
    let mut current: Option<Block> = None;
    for (n, raw) in text.lines().enumerate() {
        let n = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Config(format!("line {n}: {msg}"));
        if let Some(header) = line.strip_prefix('[') {
            let inner = header.strip_suffix(']').ok_or_else(|| err("unterminated section header".into()))?;
            let id = inner
                .trim()
                .strip_prefix("line")
                .map(str::trim)
                .filter(|id| is_identifier(id))
                .ok_or_else(|| err(format!("expected `[line <id>]`, got `[{inner}]`")))?;
            if let Some(done) = current.take() {
                lines.push(done.finish()?);
            }
            current = Some(Block { id: id.to_string(), header_line: n, ..Block::default() });
            continue;
        }
        let block = current.as_mut().ok_or_else(|| err("key outside a `[line <id>]` section".into()))?;
        let (key, value) = line.split_once('=').ok_or_else(|| err(format!("expected `key = value`, got `{line}`")))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "size" if block.size.is_none() => {
                block.size = Some(value.parse().map_err(|_| err(format!("size `{value}` is not a positive integer")))?)
            }
            "s" if block.s.is_none() => {
                block.s = Some(parse_rational_str(value).ok_or_else(|| err(format!("s `{value}` is not a rational")))?)
            }
            "dual" if block.dual.is_none() => {
                if !is_identifier(value) {
                    return Err(err(format!("dual `{value}` is not an identifier")));
                }
                block.dual = Some(value.to_string());
            }
            "size" | "s" | "dual" => return Err(err(format!("duplicate key `{key}`"))),
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }
    if let Some(done) = current.take() {
        lines.push(done.finish()?);
    }
    LineSet::new(lines)
}

/// Reads `path`, else the file named by `JACQUET_CONFIG`, else returns the
/// standard single line `rho` (n = 1, s = 1, self-dual).
pub fn load_config(path: Option<&Path>) -> Result<LineSet> {
    let from_env = std::env::var_os(CONFIG_ENV).filter(|v| !v.is_empty());
    let path = match (path, &from_env) {
        (Some(p), _) => p.to_path_buf(),
        (None, Some(v)) => v.into(),
        (None, None) => return Ok(LineSet::standard()),
    };
    let text = std::fs::read_to_string(&path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_blocks() {
        let set = parse_config(
            "# two lines\n[line rho]\nsize = 1\ns = 1\n\n[line a]\nsize=2\ns = 1/2 # half\ndual = b\n[line b]\nsize = 2\ns = 1/2\ndual = a\n",
        )
        .unwrap();
        assert_eq!(set.lines().len(), 3);
        let a = set.get("a").unwrap();
        assert_eq!(a.size(), 2);
        assert_eq!(a.s(), Rational::new(1, 2));
        assert_eq!(set.dual_of(a).unwrap().id(), "b");
        assert!(set.get("rho").unwrap().is_self_dual());
    }

    #[test]
    fn reports_errors() {
        let bad = [
            "size = 1",
            "[line rho]\nsize = 1",
            "[line rho]\nsize = 0\ns = 1",
            "[line rho]\nsize = 1\ns = -1",
            "[line rho]\nsize = 1\ns = 1\ncolor = red",
            "[line rho]\nsize = 1\nsize = 2\ns = 1",
            "[line rho]\nsize = 1\ns = 1\ndual = sigma",
            "[line rho]\nsize = 1\ns = 1\n[line rho]\nsize = 1\ns = 1",
            "[lines rho]\nsize = 1\ns = 1",
            "",
        ];
        for text in bad {
            assert!(parse_config(text).is_err(), "{text:?}");
        }
    }
}
