//! Binary linear codes: exact GF(2) linear algebra, weight enumeration, the
//! doubling maps d and e, and the named families used throughout the crate.

mod code;
pub mod family;
mod word;

pub use code::{BinaryCode, DEFAULT_ENUM_CAP};
pub use family::Family;
pub use word::BinaryWord;

use crate::autsearch::{self, SearchConfig};
use crate::error::Result;
use crate::permgrp::Perm;

/// Finds a coordinate permutation carrying `a` onto `b`, if one exists.
///
/// Cheap invariants (length, dimension, weight distribution) are compared
/// first; otherwise both codes are put in canonical form and compared.
pub fn is_equivalent(a: &BinaryCode, b: &BinaryCode) -> Result<Option<Perm>> {
    is_equivalent_with(a, b, &SearchConfig::default())
}

pub fn is_equivalent_with(a: &BinaryCode, b: &BinaryCode, config: &SearchConfig) -> Result<Option<Perm>> {
    if a.len() != b.len() || a.dim() != b.dim() {
        return Ok(None);
    }
    if a == b {
        return Ok(Some(Perm::identity(a.len())));
    }
    let small = |c: &BinaryCode| c.dim().min(c.len() - c.dim()) <= DEFAULT_ENUM_CAP;
    if small(a) {
        let pick = |c: &BinaryCode| if c.dim() <= DEFAULT_ENUM_CAP { c.clone() } else { c.dual() };
        if pick(a).weight_distribution()? != pick(b).weight_distribution()? {
            return Ok(None);
        }
    }
    let (ca, la) = autsearch::canonical_form_with(a, config)?;
    let (cb, lb) = autsearch::canonical_form_with(b, config)?;
    if ca != cb {
        return Ok(None);
    }
    // la(a) = ca = cb = lb(b), so lb^{-1} ∘ la carries a to b.
    let g = la.then(&lb.inverse());
    debug_assert_eq!(a.permuted(g.images()), *b);
    Ok(Some(g))
}
