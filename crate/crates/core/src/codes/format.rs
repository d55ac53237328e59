//! Plain-text code files.
//!
//! ```text
//! n d w q
//! s_0 s_1 ... s_{n-1}
//! ...
//! ```
//!
//! Words are written one per line, sorted lexicographically as integer
//! sequences, LF terminated, with no trailing whitespace.

use std::fmt::Write as _;
use std::path::Path;

use super::code::{Code, Params};
use super::word::Word;
use crate::error::{Error, Result};

pub fn write_code(code: &Code) -> String {
    let Params { n, d, w, q } = code.params();
    let mut out = format!("{n} {d} {w} {q}\n");
    // `Code` keeps its words sorted.
    for word in code.words() {
        writeln!(out, "{word}").expect("writing to a String cannot fail");
    }
    out
}

pub fn parse_code(text: &str) -> Result<Code> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    let nums = parse_ints(header, hline + 1)?;
    let [n, d, w, q] = nums[..] else {
        return Err(Error::Parse { line: hline + 1, msg: "header must be `n d w q`".into() });
    };
    let q = u16::try_from(q).map_err(|_| Error::Parse { line: hline + 1, msg: format!("alphabet {q} too large") })?;
    let params = Params::new(n as usize, d as usize, w as usize, q);
    let mut words = Vec::new();
    for (i, line) in lines {
        let syms = parse_ints(line, i + 1)?;
        if syms.len() != params.n {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("expected {} symbols, found {}", params.n, syms.len()),
            });
        }
        let syms = syms
            .into_iter()
            .map(|s| u8::try_from(s).map_err(|_| Error::SymbolOutOfRange { symbol: s as u16, q }))
            .collect::<Result<Vec<u8>>>()?;
        words.push(Word::new(syms, q).map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })?);
    }
    Code::new(params, words, "file")
}

fn parse_ints(line: &str, lineno: usize) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|e| Error::Parse { line: lineno, msg: format!("{t:?}: {e}") }))
        .collect()
}

pub fn read_code_file(path: impl AsRef<Path>) -> Result<Code> {
    parse_code(&std::fs::read_to_string(path)?)
}

pub fn write_code_file(path: impl AsRef<Path>, code: &Code) -> Result<()> {
    std::fs::write(path, write_code(code))?;
    Ok(())
}
