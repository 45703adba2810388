use std::io::Read;

use kbideal_core::catalog::CatalogDiagram;
use kbideal_core::{entry, CatalogName, LinkDiagram, TangleDiagram};

use crate::report::Failure;

/// Reads a catalog entry, a file, or standard input (`-`).
pub fn load(input: &str) -> Result<CatalogDiagram, Failure> {
    if let Ok(name) = input.parse::<CatalogName>() {
        return Ok(entry(name).diagram);
    }
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::io(input, e))?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| Failure::io(input, e))?
    };
    let is_tangle = text.lines().any(|l| l.split('#').next().unwrap_or("").trim_start().starts_with('P'));
    Ok(if is_tangle {
        CatalogDiagram::Tangle(text.parse()?)
    } else {
        CatalogDiagram::Link(text.parse()?)
    })
}

pub fn load_link(input: &str) -> Result<LinkDiagram, Failure> {
    match load(input)? {
        CatalogDiagram::Link(l) => Ok(l),
        CatalogDiagram::Tangle(_) => Err(Failure::usage(format!("{input} is a tangle; close it first with `kbideal closure`"))),
    }
}

pub fn load_tangle(input: &str) -> Result<TangleDiagram, Failure> {
    match load(input)? {
        CatalogDiagram::Tangle(t) => Ok(t),
        CatalogDiagram::Link(_) => Err(Failure::usage(format!("{input} is a link diagram, not a tangle"))),
    }
}
