use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};

/// A monomial order. Every variant is total, multiplicative and has the unit
/// monomial as its minimum, provided the inner orders of `Block` and the
/// tiebreak of `Weighted` are.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Compare the first `split` exponents with `first`, ties by the rest with `second`.
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
    /// Compare weighted degrees, ties by `tiebreak`.
    Weighted {
        weights: Vec<u64>,
        tiebreak: Box<MonomialOrder>,
    },
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::GrevLex
    }
}

impl MonomialOrder {
    /// Elimination order: the first `split` variables are greater than any
    /// monomial in the remaining ones; both blocks use grevlex.
    pub fn elimination(split: usize) -> Self {
        MonomialOrder::Block {
            split,
            first: Box::new(MonomialOrder::GrevLex),
            second: Box::new(MonomialOrder::GrevLex),
        }
    }

    pub fn is_graded(&self) -> bool {
        match self {
            MonomialOrder::GrevLex => true,
            MonomialOrder::Weighted { weights, .. } => weights.iter().all(|&w| w == 1),
            _ => false,
        }
    }

    /// Checked comparison.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.arity() != b.arity() {
            return Err(Error::ArityMismatch {
                expected: a.arity(),
                actual: b.arity(),
            });
        }
        Ok(self.cmp(a, b))
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        cmp_slices(self, a.exponents(), b.exponents())
    }
}

fn cmp_slices(ord: &MonomialOrder, a: &[u32], b: &[u32]) -> Ordering {
    match ord {
        MonomialOrder::Lex => a.cmp(b),
        MonomialOrder::GrevLex => {
            let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
            let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
            da.cmp(&db).then_with(|| {
                for (x, y) in a.iter().rev().zip(b.iter().rev()) {
                    if x != y {
                        // smaller exponent in the last differing variable wins
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            })
        }
        MonomialOrder::Block { split, first, second } => {
            let s = (*split).min(a.len());
            cmp_slices(first, &a[..s], &b[..s]).then_with(|| cmp_slices(second, &a[s..], &b[s..]))
        }
        MonomialOrder::Weighted { weights, tiebreak } => {
            let w = |v: &[u32]| -> u64 {
                v.iter()
                    .zip(weights.iter())
                    .map(|(&e, &w)| u64::from(e) * w)
                    .sum()
            };
            w(a).cmp(&w(b)).then_with(|| cmp_slices(tiebreak, a, b))
        }
    }
}
