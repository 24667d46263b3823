//! On-disk index format.
//!
//! `BDAIDX1\n`, then little-endian `u64`s: `ℓ`, `n`, anchor count `m`, the
//! `m` anchor positions (1-based, ascending), the left order and the right
//! order (each `m` 0-based indices into the anchor list). The text is kept
//! in its own file and checked against `n` when loading.

use std::io::{Read, Write};

use anyhow::{bail, ensure, Context, Result};
use bdanchors_core::index::{Mode, TextIndex};

pub const MAGIC: &[u8; 8] = b"BDAIDX1\n";

pub fn write_index(out: &mut impl Write, ix: &TextIndex) -> Result<()> {
    ensure!(ix.reduction() == 0, "only plain bd-anchor indexes can be saved");
    let anchors = ix.anchors();
    let mut buf = Vec::with_capacity(8 * (3 + 3 * anchors.len()) + MAGIC.len());
    buf.extend_from_slice(MAGIC);
    let mut put = |v: usize| buf.extend_from_slice(&(v as u64).to_le_bytes());
    put(ix.ell());
    put(ix.text().len());
    put(anchors.len());
    anchors.iter().for_each(|&a| put(a));
    ix.left_permutation().iter().for_each(|&i| put(i));
    ix.right_permutation().iter().for_each(|&i| put(i));
    out.write_all(&buf)?;
    Ok(())
}

pub fn read_index(input: &mut impl Read, text: Vec<u8>, mode: Mode) -> Result<TextIndex> {
    let mut bytes = Vec::new();
    input.read_to_end(&mut bytes)?;
    let Some(body) = bytes.strip_prefix(MAGIC.as_slice()) else {
        bail!("not an index file (bad header)");
    };
    ensure!(body.len() % 8 == 0, "truncated index file");
    let words: Vec<u64> = body.chunks_exact(8).map(|c| u64::from_le_bytes(c.try_into().unwrap())).collect();
    ensure!(words.len() >= 3, "truncated index file");
    let to_usize = |v: u64| usize::try_from(v).context("index value out of range");
    let (ell, n, m) = (to_usize(words[0])?, to_usize(words[1])?, to_usize(words[2])?);
    ensure!(
        m.checked_mul(3).and_then(|x| x.checked_add(3)) == Some(words.len()),
        "index file size does not match its anchor count"
    );
    ensure!(n == text.len(), "index was built for a text of length {n}, got {}", text.len());
    let rest = &words[3..];
    let list = |s: &[u64]| s.iter().map(|&v| to_usize(v)).collect::<Result<Vec<_>>>();
    let anchors = list(&rest[..m])?;
    let left = list(&rest[m..2 * m])?;
    let right = list(&rest[2 * m..])?;
    Ok(TextIndex::from_parts(text, ell, &anchors, left, right, mode)?)
}
