//! Canonical labelling of binary codes.
//!
//! Every leaf of the refinement tree yields a relabelling; the canonical
//! form is the least relabelled code over all leaves. Children in the same
//! orbit of the automorphism group (fixing the prefix pointwise) have
//! subtrees with identical sets of relabelled codes, so one child per orbit
//! is explored.

use super::structure::{Coloring, Structure};
use super::SearchConfig;
use crate::error::{Error, Result};
use crate::gf2::BinaryCode;
use crate::permgrp::{Perm, PermGroup};

struct Canon<'a> {
    structure: &'a Structure,
    code: &'a BinaryCode,
    config: &'a SearchConfig,
    nodes: u64,
    best: Option<(Vec<crate::gf2::BinaryWord>, Vec<usize>)>,
}

impl Canon<'_> {
    fn visit(&mut self, node: Coloring, group: PermGroup) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.config.node_budget {
            return Err(Error::BudgetExceeded {
                budget: self.config.node_budget,
                lower_bound: group.order(),
            });
        }
        let Some((_, cell)) = node.target_cell() else {
            let labels = node.ranks();
            let cert = self.code.permuted(&labels).basis().to_vec();
            if self.best.as_ref().is_none_or(|(b, _)| cert < *b) {
                self.best = Some((cert, labels));
            }
            return Ok(());
        };
        let orbits = group.orbits();
        let mut seen_orbit = vec![false; orbits.len()];
        let mut orbit_index = vec![0; self.structure.len()];
        for (k, o) in orbits.iter().enumerate() {
            for &p in o {
                orbit_index[p] = k;
            }
        }
        for &v in &cell {
            if std::mem::replace(&mut seen_orbit[orbit_index[v]], true) {
                continue;
            }
            let child = self.structure.individualize(&node, v);
            let stab = group.stabilizer(v);
            self.visit(child, stab)?;
        }
        Ok(())
    }
}

/// Canonical form given the automorphism group of `code` and a structure
/// built from the code alone.
pub(crate) fn canonical_form(
    structure: &Structure,
    code: &BinaryCode,
    aut: &PermGroup,
    config: &SearchConfig,
) -> Result<(BinaryCode, Perm)> {
    let mut canon = Canon {
        structure,
        code,
        config,
        nodes: 0,
        best: None,
    };
    canon.visit(structure.root(), aut.clone())?;
    let (_, labels) = canon.best.expect("the tree has at least one leaf");
    let perm = Perm::from_images(labels)?;
    Ok((code.permuted(perm.images()), perm))
}
