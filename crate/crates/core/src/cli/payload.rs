//! Text and JSON payload syntax shared by the commands.
//!
//! Parabolic: `s1,s2` (standard) or `<element> : s1,s2` for g·A_X·g⁻¹, or the JSON
//! object `{"conj": ..., "gens": [...]}`.
//! Simplex: parabolics separated by `;`, or `{"vertices": [...]}`.
//! Marking: pairs `P / Q` separated by `;`, or `{"pairs": [{"base": .., "transverse": ..}]}`.

use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::marking::{Marking, MarkingJson};
use crate::parabolic::{ParabolicJson, ParabolicSubgroup};
use crate::simplex::{CparabSimplex, SimplexJson};

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { offset: e.column().saturating_sub(1), message: e.to_string() }
}

fn shifted(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse { offset: offset + by, message },
        e => e,
    }
}

pub fn parse_genset(g: &CoxeterGroup, text: &str) -> Result<GenSet> {
    let x = GenSet::parse(text, g.rank())?;
    if x.is_empty() {
        return Err(Error::Parse { offset: 0, message: "empty generator set".into() });
    }
    Ok(x)
}

pub fn parse_parabolic(g: &CoxeterGroup, text: &str) -> Result<ParabolicSubgroup> {
    let t = text.trim_start();
    if t.starts_with('{') {
        let j: ParabolicJson = serde_json::from_str(t).map_err(json_error)?;
        return g.parabolic_from_json(&j);
    }
    match text.rfind(':') {
        None => Ok(ParabolicSubgroup::new(g.one(), parse_genset(g, text)?)),
        Some(colon) => {
            let conj = g.parse_element(&text[..colon])?;
            let gens = parse_genset(g, &text[colon + 1..]).map_err(|e| shifted(e, colon + 1))?;
            Ok(ParabolicSubgroup::new(conj, gens))
        }
    }
}

fn split_offsets(text: &str, sep: char) -> impl Iterator<Item = (usize, &str)> {
    let mut at = 0;
    text.split(sep).map(move |part| {
        let here = at;
        at += part.len() + 1;
        (here, part)
    })
}

pub fn parse_simplex(g: &CoxeterGroup, text: &str) -> Result<CparabSimplex> {
    if text.trim_start().starts_with('{') {
        let j: SimplexJson = serde_json::from_str(text.trim()).map_err(json_error)?;
        return g.simplex_from_json(&j);
    }
    let vertices = split_offsets(text, ';')
        .filter(|(_, p)| !p.trim().is_empty())
        .map(|(at, p)| parse_parabolic(g, p).map_err(|e| shifted(e, at)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CparabSimplex::new(vertices))
}

pub fn parse_marking(g: &CoxeterGroup, text: &str) -> Result<Marking> {
    if text.trim_start().starts_with('{') {
        let j: MarkingJson = serde_json::from_str(text.trim()).map_err(json_error)?;
        return g.marking_from_json(&j);
    }
    let mut pairs = Vec::new();
    for (at, part) in split_offsets(text, ';') {
        if part.trim().is_empty() {
            continue;
        }
        let slash = part.find('/').ok_or(Error::Parse { offset: at, message: "expected 'P / Q'".into() })?;
        let p = parse_parabolic(g, &part[..slash]).map_err(|e| shifted(e, at))?;
        let q = parse_parabolic(g, &part[slash + 1..]).map_err(|e| shifted(e, at + slash + 1))?;
        pairs.push((p, q));
    }
    if pairs.is_empty() {
        return Err(Error::Parse { offset: 0, message: "empty marking".into() });
    }
    Ok(Marking::new(pairs))
}

pub fn format_parabolic(g: &CoxeterGroup, p: &ParabolicSubgroup) -> String {
    if p.conj.is_identity() {
        p.gens.key()
    } else {
        format!("{} : {}", g.format_element(&p.conj), p.gens.key())
    }
}

pub fn format_marking(g: &CoxeterGroup, m: &Marking) -> String {
    let parts: Vec<String> =
        m.pairs.iter().map(|(p, q)| format!("{} / {}", format_parabolic(g, p), format_parabolic(g, q))).collect();
    parts.join("; ")
}
