//! The `hgr` text format.
//!
//! ```text
//! hgr 1
//! vertices 4
//! edge 1 1 2 3
//! edge 1/2 3 4
//! wc 2 1
//! ```
//!
//! `#` starts a comment. `wc default <w>` sets the weight of cardinalities
//! without their own `wc` line (1 when absent).

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypercore::{Hypergraph, WeightTable};
use crate::rational::{self, Rational};

/// A parsed document: the hypergraph and the join weight table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HgrDocument {
    pub hypergraph: Hypergraph,
    pub weights: WeightTable,
}

fn err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse { line, reason: reason.into() }
}

fn number(line: usize, what: &str, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| err(line, format!("{what} {tok:?} is not a non-negative integer")))
}

fn weight(line: usize, tok: &str) -> Result<Rational> {
    let w = rational::parse(tok).map_err(|_| err(line, format!("weight {tok:?} is not a rational number")))?;
    if !rational::is_nonneg(&w) {
        return Err(err(line, format!("weight {tok} is negative")));
    }
    Ok(w)
}

pub fn parse_hgr(text: &str) -> Result<HgrDocument> {
    let mut header = false;
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut default = rational::int(1);
    let mut wc: Vec<(usize, Rational, usize)> = Vec::new();
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some(&head) = toks.first() else { continue };
        if !header {
            if toks != ["hgr", "1"] {
                return Err(err(line, "expected header \"hgr 1\""));
            }
            header = true;
            continue;
        }
        match head {
            "vertices" => {
                if n.is_some() {
                    return Err(err(line, "duplicate vertices record"));
                }
                if toks.len() != 2 {
                    return Err(err(line, "expected \"vertices <n>\""));
                }
                n = Some(number(line, "vertex count", toks[1])?);
            }
            "edge" => {
                let nv = n.ok_or_else(|| err(line, "edge before vertices record"))?;
                if toks.len() < 3 {
                    return Err(err(line, "expected \"edge <weight> <v1> ... <vk>\""));
                }
                let w = weight(line, toks[1])?;
                let vs = toks[2..].iter().map(|t| number(line, "vertex", t)).collect::<Result<Vec<_>>>()?;
                Hypergraph::new(nv, [(vs.clone(), w.clone())]).map_err(|e| err(line, e.to_string()))?;
                edges.push((vs, w));
            }
            "wc" => {
                if toks.len() != 3 {
                    return Err(err(line, "expected \"wc <c> <weight>\""));
                }
                let w = weight(line, toks[2])?;
                if toks[1] == "default" {
                    default = w;
                } else {
                    wc.push((number(line, "cardinality", toks[1])?, w, line));
                }
            }
            other => return Err(err(line, format!("unknown record {other:?}"))),
        }
    }
    if !header {
        return Err(err(last.max(1), "missing header \"hgr 1\""));
    }
    let n = n.ok_or_else(|| err(last, "missing vertices record"))?;
    let mut weights = WeightTable::constant(default)?;
    for (c, w, line) in wc {
        weights = weights.with(c, w).map_err(|e| err(line, e.to_string()))?;
    }
    Ok(HgrDocument { hypergraph: Hypergraph::new(n, edges)?, weights })
}

/// Canonical text: sorted edges, reduced rationals, `wc` lines by cardinality.
pub fn serialize_hgr(h: &Hypergraph, w: &WeightTable) -> String {
    let mut out = format!("hgr 1\nvertices {}\n", h.n());
    for e in h.edges() {
        let _ = write!(out, "edge {}", rational::format(&e.weight));
        for v in &e.vertices {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    if *w.default_weight() != rational::int(1) {
        let _ = writeln!(out, "wc default {}", rational::format(w.default_weight()));
    }
    for (c, x) in w.explicit() {
        let _ = writeln!(out, "wc {c} {}", rational::format(x));
    }
    out
}
