use std::str::FromStr;

use crate::error::{CliError, Result};

/// `# key=value ...` header on the first line of a TSV file.
pub(crate) struct Header<'a> {
    source: &'a str,
    pairs: Vec<(&'a str, &'a str)>,
}

impl<'a> Header<'a> {
    pub fn parse(text: &'a str, source: &'a str) -> Result<Self> {
        let first = text.lines().next().unwrap_or("");
        let body = first
            .strip_prefix('#')
            .ok_or_else(|| CliError::parse(source, 1, "expected a `# key=value` header"))?;
        let pairs = body
            .split_whitespace()
            .map(|kv| kv.split_once('=').ok_or_else(|| CliError::parse(source, 1, format!("bad header field `{kv}`"))))
            .collect::<Result<_>>()?;
        Ok(Header { source, pairs })
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<T> {
        let (_, v) = self
            .pairs
            .iter()
            .find(|(k, _)| *k == key)
            .ok_or_else(|| CliError::parse(self.source, 1, format!("header is missing `{key}=`")))?;
        v.parse().map_err(|_| CliError::parse(self.source, 1, format!("bad value for `{key}`: `{v}`")))
    }
}

/// Tab-separated rows after the header with their 1-based line numbers;
/// blank and `#` lines are skipped.
pub(crate) fn rows(text: &str) -> impl Iterator<Item = (Vec<&str>, u64)> + '_ {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(k, l)| (l.split('\t').collect(), k as u64 + 1))
}

pub(crate) fn field<T: FromStr>(rec: &[&str], i: usize, name: &str, source: &str, line: u64) -> Result<T> {
    let raw = rec.get(i).ok_or_else(|| CliError::parse(source, line, format!("missing column `{name}`")))?;
    raw.trim().parse().map_err(|_| CliError::parse(source, line, format!("bad `{name}`: `{raw}`")))
}

pub(crate) fn check_width(rec: &[&str], width: usize, source: &str, line: u64) -> Result<()> {
    if rec.len() != width {
        return Err(CliError::parse(source, line, format!("expected {width} columns, found {}", rec.len())));
    }
    Ok(())
}
