//! Resolving `--form`: builtin names, JSON files, or expressions.

use std::path::Path;

use anyhow::{Context, Result};

use symdio::parse::{builtin, parse_poly};
use symdio::{Poly, SymmetricForm};

pub fn load_poly(src: &str, nvars: Option<usize>) -> Result<Poly> {
    if let Some(p) = builtin(src) {
        let p = p?;
        if let Some(n) = nvars {
            anyhow::ensure!(n == p.nvars(), "--nvars {n} contradicts {src}");
        }
        return Ok(p);
    }
    if src.ends_with(".json") {
        let text = std::fs::read_to_string(Path::new(src)).with_context(|| format!("reading {src}"))?;
        return serde_json::from_str(&text).with_context(|| format!("parsing {src}"));
    }
    Ok(parse_poly(src, nvars)?)
}

pub fn load_form(src: &str, nvars: Option<usize>) -> Result<SymmetricForm> {
    Ok(SymmetricForm::new(load_poly(src, nvars)?)?)
}
