//! Text, pattern and dictionary ingestion.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

/// Reads a text file. Raw mode keeps every byte except trailing line
/// terminators; FASTA mode drops header lines starting with `>` and all
/// line breaks.
pub fn read_text(path: &Path, fasta: bool) -> Result<Vec<u8>> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let text = if fasta { parse_fasta(&bytes) } else { trim_newlines(bytes) };
    if text.is_empty() {
        bail!("{}: empty text", path.display());
    }
    Ok(text)
}

pub fn trim_newlines(mut bytes: Vec<u8>) -> Vec<u8> {
    while matches!(bytes.last(), Some(b'\n' | b'\r')) {
        bytes.pop();
    }
    bytes
}

pub fn parse_fasta(bytes: &[u8]) -> Vec<u8> {
    bytes
        .split(|&c| c == b'\n')
        .filter(|line| !line.starts_with(b">"))
        .flat_map(|line| line.strip_suffix(b"\r").unwrap_or(line))
        .copied()
        .collect()
}

/// One record per line (`\n` or `\r\n`); a final line terminator does not
/// start an extra record.
pub fn read_lines(path: &Path) -> Result<Vec<Vec<u8>>> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(split_lines(&bytes))
}

pub fn split_lines(bytes: &[u8]) -> Vec<Vec<u8>> {
    let body = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    if body.is_empty() {
        return Vec::new();
    }
    body.split(|&c| c == b'\n').map(|line| line.strip_suffix(b"\r").unwrap_or(line).to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn raw_and_fasta() {
        assert_eq!(trim_newlines(b"acgt\r\n\n".to_vec()), b"acgt");
        assert_eq!(trim_newlines(b"ac\ngt".to_vec()), b"ac\ngt");
        assert_eq!(parse_fasta(b">seq one\nACG\r\nTT\n>two\nA\n"), b"ACGTTA");
    }

    #[test]
    fn lines() {
        assert_eq!(split_lines(b"ab\ncd\n"), [b"ab".to_vec(), b"cd".to_vec()]);
        assert_eq!(split_lines(b"ab\r\n\ncd"), [b"ab".to_vec(), b"".to_vec(), b"cd".to_vec()]);
        assert!(split_lines(b"").is_empty());
    }
}
