//! Plain-text design files.
//!
//! ```text
//! n b
//! groups: 0,1,2,3,4;5;6        (optional)
//! 0 5 10
//! ...
//! ```
//! Blocks are written sorted, one per line, as 0-based points.

use std::fmt::Write as _;
use std::path::Path;

use crate::codes::{Block, SetSystem};
use crate::error::{Error, Result};

/// A parsed design file: the blocks and, if present, the group partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignFile {
    pub system: SetSystem,
    pub groups: Option<Vec<Vec<usize>>>,
}

pub fn write_design(system: &SetSystem, groups: Option<&[Vec<usize>]>) -> String {
    let mut out = format!("{} {}\n", system.order(), system.len());
    if let Some(groups) = groups {
        let parts: Vec<String> =
            groups.iter().map(|g| g.iter().map(usize::to_string).collect::<Vec<_>>().join(",")).collect();
        let _ = writeln!(out, "groups: {}", parts.join(";"));
    }
    for b in system.blocks() {
        let line: Vec<String> = b.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn parse_design(text: &str) -> Result<DesignFile> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty design file".into() })?;
    let nums = parse_numbers(header, hl + 1)?;
    let [n, b] = nums[..] else {
        return Err(Error::Parse { line: hl + 1, msg: "header must be `n b`".into() });
    };
    let mut groups = None;
    let mut blocks: Vec<Block> = Vec::with_capacity(b);
    for (i, line) in lines {
        let line_no = i + 1;
        if let Some(rest) = line.trim().strip_prefix("groups:") {
            if groups.is_some() || !blocks.is_empty() {
                return Err(Error::Parse { line: line_no, msg: "groups line must follow the header".into() });
            }
            let parsed = rest
                .split(';')
                .map(|g| {
                    g.split(',')
                        .map(|x| {
                            x.trim()
                                .parse::<usize>()
                                .map_err(|e| Error::Parse { line: line_no, msg: format!("bad group point {x:?}: {e}") })
                        })
                        .collect::<Result<Vec<usize>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            groups = Some(parsed);
            continue;
        }
        blocks.push(parse_numbers(line, line_no)?);
    }
    if blocks.len() != b {
        return Err(Error::Parse { line: 1, msg: format!("header declares {b} blocks, found {}", blocks.len()) });
    }
    Ok(DesignFile { system: SetSystem::new(n, blocks)?, groups })
}

fn parse_numbers(line: &str, line_no: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|x| x.parse::<usize>().map_err(|e| Error::Parse { line: line_no, msg: format!("bad number {x:?}: {e}") }))
        .collect()
}

pub fn read_design_file(path: impl AsRef<Path>) -> Result<DesignFile> {
    parse_design(&std::fs::read_to_string(path)?)
}

pub fn write_design_file(path: impl AsRef<Path>, system: &SetSystem, groups: Option<&[Vec<usize>]>) -> Result<()> {
    std::fs::write(path, write_design(system, groups))?;
    Ok(())
}
