use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::monomial::{Exponent, Monomial};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grevlex,
}

/// A group of variables compared with one order kind. Variables rank in the
/// listed sequence, first listed = largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block {
    pub vars: Vec<usize>,
    pub kind: OrderKind,
}

/// Global monomial order. Block orders compare block by block, earlier
/// blocks dominating.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    Block(Vec<Block>),
}

fn lex(a: &[Exponent], b: &[Exponent]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[Exponent], b: &[Exponent]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn block_cmp(block: &Block, a: &[Exponent], b: &[Exponent]) -> Ordering {
    match block.kind {
        OrderKind::Lex => {
            for &v in &block.vars {
                if a[v] != b[v] {
                    return a[v].cmp(&b[v]);
                }
            }
            Ordering::Equal
        }
        OrderKind::Grevlex => {
            let da: u64 = block.vars.iter().map(|&v| a[v] as u64).sum();
            let db: u64 = block.vars.iter().map(|&v| b[v] as u64).sum();
            if da != db {
                return da.cmp(&db);
            }
            for &v in block.vars.iter().rev() {
                if a[v] != b[v] {
                    return b[v].cmp(&a[v]);
                }
            }
            Ordering::Equal
        }
    }
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Block(blocks) => {
                for block in blocks {
                    let c = block_cmp(block, a, b);
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Checks that block variables partition `0..nvars`.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        let MonomialOrder::Block(blocks) = self else {
            return Ok(());
        };
        let mut seen = alloc::vec![false; nvars];
        for block in blocks {
            if block.vars.is_empty() {
                return Err(Error::InvalidOrder("empty block".into()));
            }
            for &v in &block.vars {
                if v >= nvars {
                    return Err(Error::InvalidOrder(format!("variable index {v} out of range")));
                }
                if core::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidOrder(format!("variable index {v} in two blocks")));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidOrder("blocks do not cover every variable".into()));
        }
        Ok(())
    }

    /// The order as an explicit block list over `0..nvars`.
    pub fn blocks(&self, nvars: usize) -> Vec<Block> {
        match self {
            MonomialOrder::Lex => alloc::vec![Block { vars: (0..nvars).collect(), kind: OrderKind::Lex }],
            MonomialOrder::Grevlex => alloc::vec![Block { vars: (0..nvars).collect(), kind: OrderKind::Grevlex }],
            MonomialOrder::Block(b) => b.clone(),
        }
    }

    fn simplify(blocks: Vec<Block>, nvars: usize) -> MonomialOrder {
        if blocks.len() == 1 && blocks[0].vars.iter().copied().eq(0..nvars) {
            return match blocks[0].kind {
                OrderKind::Lex => MonomialOrder::Lex,
                OrderKind::Grevlex => MonomialOrder::Grevlex,
            };
        }
        if blocks.is_empty() {
            return MonomialOrder::Grevlex;
        }
        MonomialOrder::Block(blocks)
    }

    /// Order induced on the variables `keep` (ascending old indices), re-indexed
    /// to `0..keep.len()`.
    pub fn restrict(&self, nvars: usize, keep: &[usize]) -> MonomialOrder {
        let mut new_index = alloc::vec![None; nvars];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = Some(i);
        }
        let blocks = self
            .blocks(nvars)
            .into_iter()
            .filter_map(|b| {
                let vars: Vec<usize> = b.vars.iter().filter_map(|&v| new_index[v]).collect();
                (!vars.is_empty()).then_some(Block { vars, kind: b.kind })
            })
            .collect();
        Self::simplify(blocks, keep.len())
    }

    /// Elimination order for `elim`: a grevlex block on `elim` dominating
    /// this order restricted to the remaining variables.
    pub fn elimination(&self, nvars: usize, elim: &[usize]) -> MonomialOrder {
        let mut is_elim = alloc::vec![false; nvars];
        for &v in elim {
            is_elim[v] = true;
        }
        let mut blocks = alloc::vec![Block { vars: elim.to_vec(), kind: OrderKind::Grevlex }];
        for b in self.blocks(nvars) {
            let vars: Vec<usize> = b.vars.into_iter().filter(|&v| !is_elim[v]).collect();
            if !vars.is_empty() {
                blocks.push(Block { vars, kind: b.kind });
            }
        }
        MonomialOrder::Block(blocks)
    }

    /// Order on `k` new leading variables followed by the current ones: a
    /// grevlex block on the new variables dominating this order.
    pub fn adjoin_front(&self, nvars: usize, k: usize) -> MonomialOrder {
        if k == 0 {
            return self.clone();
        }
        let mut blocks = alloc::vec![Block { vars: (0..k).collect(), kind: OrderKind::Grevlex }];
        blocks.extend(
            self.blocks(nvars)
                .into_iter()
                .map(|b| Block { vars: b.vars.iter().map(|v| v + k).collect(), kind: b.kind }),
        );
        MonomialOrder::Block(blocks)
    }
}

/// Compares two monomials under `order`.
pub fn monomial_compare(m1: &Monomial, m2: &Monomial, order: &MonomialOrder) -> Ordering {
    order.compare(m1, m2)
}
