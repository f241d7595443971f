//! Problem files: a ring declaration followed by named ideals.
//!
//! ```text
//! format: 1
//! ring x, y, z order lex
//! weights 0, 1, 1
//! ideal I:
//!   x^2 - y
//!   x^3 - z
//! ```
//! `order` defaults to grevlex; block orders are written
//! `block(grevlex: t; lex: x, y)`. `#` starts a comment.

use std::fmt::Write as _;

use unproj_core::arith::Field;
use unproj_core::groebner::Ideal;
use unproj_core::poly::{Block, MonomialOrder, OrderKind, Polynomial, Ring, RingContext};

use crate::parse::{parse_polynomial_at, ParseError};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug)]
pub struct ProblemFile<K: Field> {
    pub ring: Ring<K>,
    pub ideals: Vec<(String, Vec<Polynomial<K>>)>,
}

impl<K: Field> ProblemFile<K> {
    pub fn ideal(&self, name: &str) -> Option<&[Polynomial<K>]> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, g)| g.as_slice())
    }

    pub fn to_ideal(&self, name: &str) -> Option<Ideal<K>> {
        self.ideal(name).map(|g| Ideal::new(&self.ring, g.to_vec()).expect("parsed over the file ring"))
    }
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, column, message: message.into() })
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn kind_of(word: &str) -> Option<OrderKind> {
    match word {
        "lex" => Some(OrderKind::Lex),
        "grevlex" => Some(OrderKind::Grevlex),
        _ => None,
    }
}

fn kind_name(k: OrderKind) -> &'static str {
    match k {
        OrderKind::Lex => "lex",
        OrderKind::Grevlex => "grevlex",
    }
}

/// Parses an order specification against the variable list `vars`.
pub fn parse_order(text: &str, vars: &[String]) -> Result<MonomialOrder, String> {
    let text = text.trim();
    if let Some(k) = kind_of(text) {
        return Ok(match k {
            OrderKind::Lex => MonomialOrder::Lex,
            OrderKind::Grevlex => MonomialOrder::Grevlex,
        });
    }
    let inner = text
        .strip_prefix("block(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| format!("unknown monomial order '{text}' (expected lex, grevlex or block(...))"))?;
    let mut blocks = Vec::new();
    for part in inner.split(';') {
        let (kind, names) = part.split_once(':').ok_or_else(|| format!("block '{}' lacks 'kind:'", part.trim()))?;
        let kind = kind_of(kind.trim()).ok_or_else(|| format!("unknown block order '{}'", kind.trim()))?;
        let mut idx = Vec::new();
        for name in names.split(',').map(str::trim) {
            let i = vars.iter().position(|v| v == name).ok_or_else(|| format!("unknown variable '{name}' in block order"))?;
            idx.push(i);
        }
        blocks.push(Block { vars: idx, kind });
    }
    Ok(MonomialOrder::Block(blocks))
}

/// Order specification text, inverse of [`parse_order`].
pub fn order_text(order: &MonomialOrder, vars: &[String]) -> String {
    match order {
        MonomialOrder::Lex => "lex".into(),
        MonomialOrder::Grevlex => "grevlex".into(),
        MonomialOrder::Block(blocks) => {
            let parts: Vec<String> = blocks
                .iter()
                .map(|b| {
                    let names: Vec<&str> = b.vars.iter().map(|&i| vars[i].as_str()).collect();
                    format!("{}: {}", kind_name(b.kind), names.join(", "))
                })
                .collect();
            format!("block({})", parts.join("; "))
        }
    }
}

/// Parses a problem file over `field`.
pub fn parse_problem_file<K: Field>(text: &str, field: K) -> Result<ProblemFile<K>, ParseError> {
    let mut ring: Option<Ring<K>> = None;
    let mut pending_ring: Option<(usize, Vec<String>, MonomialOrder)> = None;
    let mut weights: Option<(usize, Vec<u32>)> = None;
    let mut ideals: Vec<(String, Vec<Polynomial<K>>)> = Vec::new();
    let mut seen_content = false;

    let lines: Vec<&str> = text.lines().collect();
    for (k, raw) in lines.iter().enumerate() {
        let lineno = k + 1;
        let body = strip_comment(raw);
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = body.len() - body.trim_start().len();
        if let Some(rest) = trimmed.strip_prefix("format:") {
            if seen_content {
                return err(lineno, indent + 1, "'format' must be the first line");
            }
            seen_content = true;
            match rest.trim().parse::<u32>() {
                Ok(FORMAT_VERSION) => continue,
                _ => return err(lineno, indent + 1, format!("unsupported format '{}'", rest.trim())),
            }
        }
        seen_content = true;
        let word = trimmed.split_whitespace().next().unwrap_or("");
        match word {
            "ring" if ideals.is_empty() => {
                if pending_ring.is_some() {
                    return err(lineno, indent + 1, "duplicate 'ring' line");
                }
                let rest = trimmed["ring".len()..].trim();
                let (vars_text, order) = match rest.find(" order ") {
                    Some(i) => (&rest[..i], Some(&rest[i + " order ".len()..])),
                    None => match rest.strip_suffix(" order") {
                        Some(_) => return err(lineno, indent + 1, "missing order after 'order'"),
                        None => (rest, None),
                    },
                };
                let vars: Vec<String> = vars_text.split(',').map(|s| s.trim().to_owned()).collect();
                if vars.iter().any(String::is_empty) {
                    return err(lineno, indent + 1, "empty variable name in ring declaration");
                }
                let order = match order {
                    Some(o) => parse_order(o, &vars).or_else(|m| err(lineno, indent + 1, m))?,
                    None => MonomialOrder::Grevlex,
                };
                pending_ring = Some((lineno, vars, order));
            }
            "weights" if ideals.is_empty() => {
                if pending_ring.is_none() {
                    return err(lineno, indent + 1, "'weights' must follow the 'ring' line");
                }
                let mut w = Vec::new();
                for part in trimmed["weights".len()..].split(',') {
                    match part.trim().parse::<u32>() {
                        Ok(v) => w.push(v),
                        Err(_) => return err(lineno, indent + 1, format!("invalid weight '{}'", part.trim())),
                    }
                }
                weights = Some((lineno, w));
            }
            "ring" | "weights" => {
                return err(lineno, indent + 1, format!("'{word}' must precede the ideal blocks"));
            }
            "ideal" => {
                if ring.is_none() {
                    let Some((rl, vars, order)) = pending_ring.take() else {
                        return err(lineno, indent + 1, "'ideal' before the 'ring' line");
                    };
                    let grading = weights.take().map(|(_, w)| w);
                    ring = Some(
                        RingContext::new(field.clone(), vars, order, grading).or_else(|e| err(rl, 1, e.to_string()))?,
                    );
                }
                let rest = trimmed["ideal".len()..].trim();
                let Some(name) = rest.strip_suffix(':') else {
                    return err(lineno, indent + 1, "expected 'ideal NAME:'");
                };
                let name = name.trim();
                if !unproj_core::poly::is_valid_name(name) {
                    return err(lineno, indent + 1, format!("invalid ideal name '{name}'"));
                }
                if ideals.iter().any(|(n, _)| n == name) {
                    return err(lineno, indent + 1, format!("duplicate ideal name '{name}'"));
                }
                ideals.push((name.to_owned(), Vec::new()));
            }
            _ => {
                let Some((_, gens)) = ideals.last_mut() else {
                    return err(lineno, indent + 1, format!("unexpected line '{trimmed}' (expected ring, weights or ideal)"));
                };
                let r = ring.as_ref().expect("ring precedes ideals");
                gens.push(parse_polynomial_at(body, r, lineno, 0)?);
            }
        }
    }
    if ring.is_none() {
        let Some((rl, vars, order)) = pending_ring else {
            return err(lines.len().max(1), 1, "missing 'ring' line");
        };
        let grading = weights.map(|(_, w)| w);
        ring = Some(RingContext::new(field, vars, order, grading).or_else(|e| err(rl, 1, e.to_string()))?);
    }
    Ok(ProblemFile { ring: ring.expect("set above"), ideals })
}

/// Canonical text of a problem file.
pub fn emit_problem_file<K: Field>(ring: &Ring<K>, ideals: &[(&str, &[Polynomial<K>])]) -> String {
    let mut out = format!("format: {FORMAT_VERSION}\n");
    let vars = ring.variables();
    let _ = writeln!(out, "ring {} order {}", vars.join(", "), order_text(ring.order(), vars));
    if let Some(w) = ring.grading() {
        let ws: Vec<String> = w.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "weights {}", ws.join(", "));
    }
    for (name, gens) in ideals {
        let _ = writeln!(out, "ideal {name}:");
        for g in gens.iter() {
            let _ = writeln!(out, "  {g}");
        }
    }
    out
}
