//! The polytope text format.
//!
//! ```text
//! # comment
//! polytope P2
//! dim 2
//! v 1 0
//! v 0 1
//! v -1 -1
//! end
//! ```
//!
//! `#` starts a comment anywhere on a line, blank lines are ignored, and
//! tokens are separated by whitespace.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::polytope::FanoPolytope;

struct Block {
    name: String,
    dim: Option<usize>,
    vertices: Vec<LatticeVector>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// One polytope per block, vertices in file order.
pub fn parse(text: &str) -> Result<Vec<FanoPolytope>> {
    let mut out = Vec::new();
    let mut names = HashSet::new();
    let mut open: Option<(usize, Block)> = None;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().expect("non-empty line");
        match keyword {
            "polytope" => {
                if open.is_some() {
                    return Err(parse_err(line_no, "`polytope` inside an open block"));
                }
                let name = tokens.collect::<Vec<_>>().join(" ");
                if name.is_empty() {
                    return Err(parse_err(line_no, "missing polytope name"));
                }
                if !names.insert(name.clone()) {
                    return Err(parse_err(
                        line_no,
                        format!("duplicate polytope name `{name}`"),
                    ));
                }
                open = Some((
                    line_no,
                    Block {
                        name,
                        dim: None,
                        vertices: Vec::new(),
                    },
                ));
            }
            "dim" => {
                let (_, block) = open
                    .as_mut()
                    .ok_or_else(|| parse_err(line_no, "`dim` outside a block"))?;
                if block.dim.is_some() {
                    return Err(parse_err(line_no, "repeated `dim`"));
                }
                let value = tokens
                    .next()
                    .ok_or_else(|| parse_err(line_no, "missing dimension"))?;
                let dim: usize = value
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad dimension `{value}`")))?;
                if dim == 0 {
                    return Err(parse_err(line_no, "dimension must be positive"));
                }
                if tokens.next().is_some() {
                    return Err(parse_err(line_no, "trailing tokens after dimension"));
                }
                block.dim = Some(dim);
            }
            "v" => {
                let (_, block) = open
                    .as_mut()
                    .ok_or_else(|| parse_err(line_no, "`v` outside a block"))?;
                let dim = block
                    .dim
                    .ok_or_else(|| parse_err(line_no, "`v` before `dim`"))?;
                let coords = tokens
                    .map(|t| {
                        t.parse::<BigInt>()
                            .map_err(|_| parse_err(line_no, format!("bad integer `{t}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if coords.len() != dim {
                    return Err(Error::Shape {
                        line: line_no,
                        expected: dim,
                        found: coords.len(),
                    });
                }
                block.vertices.push(LatticeVector::new(coords));
            }
            "end" => {
                let (start, block) = open
                    .take()
                    .ok_or_else(|| parse_err(line_no, "`end` outside a block"))?;
                let dim = block
                    .dim
                    .ok_or_else(|| parse_err(start, "block without `dim`"))?;
                out.push(FanoPolytope::new(block.name, dim, block.vertices)?);
            }
            other => return Err(parse_err(line_no, format!("unknown keyword `{other}`"))),
        }
    }
    if let Some((start, _)) = open {
        return Err(parse_err(start, "block is not closed with `end`"));
    }
    Ok(out)
}

pub fn parse_file(path: &Path) -> Result<Vec<FanoPolytope>> {
    parse(&std::fs::read_to_string(path)?)
}

/// Serializes polytopes in the input format; `parse` inverts it.
pub fn to_text(polytopes: &[FanoPolytope]) -> String {
    let mut s = String::new();
    for p in polytopes {
        let _ = writeln!(s, "polytope {}", p.name());
        let _ = writeln!(s, "dim {}", p.dim());
        for v in p.vertices() {
            s.push('v');
            for c in v.coords() {
                let _ = write!(s, " {c}");
            }
            s.push('\n');
        }
        s.push_str("end\n");
    }
    s
}
