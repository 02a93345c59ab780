//! Backtracking search for the group of structure-preserving permutations
//! that satisfy an exact membership predicate.

use super::structure::{Coloring, Structure};
use super::{Progress, SearchConfig};
use crate::error::{Error, Result};
use crate::permgrp::{orbits_of, Perm, PermGroup};

/// Restricts prefixes of base images; `false` prunes the node.
pub(crate) type PrefixTest<'a> = dyn Fn(&[usize], &[usize]) -> bool + 'a;

struct PathNode {
    coloring: Coloring,
    signature: Vec<u64>,
    /// Colour and points of the target cell; `None` at the leaf.
    target: Option<(u64, Vec<usize>)>,
}

pub(crate) struct Search<'a> {
    structure: &'a Structure,
    predicate: &'a dyn Fn(&Perm) -> bool,
    prefix_test: Option<&'a PrefixTest<'a>>,
    config: &'a SearchConfig,
    nodes: u64,
    path: Vec<PathNode>,
    base: Vec<usize>,
    gens: Vec<Perm>,
    /// |b_j^{G^(j)}| once level j is complete.
    level_orbit: Vec<usize>,
    leaf_positions: Vec<(u64, usize)>,
}

impl<'a> Search<'a> {
    pub(crate) fn new(
        structure: &'a Structure,
        predicate: &'a dyn Fn(&Perm) -> bool,
        prefix_test: Option<&'a PrefixTest<'a>>,
        config: &'a SearchConfig,
    ) -> Self {
        Search {
            structure,
            predicate,
            prefix_test,
            config,
            nodes: 0,
            path: Vec::new(),
            base: Vec::new(),
            gens: Vec::new(),
            level_orbit: Vec::new(),
            leaf_positions: Vec::new(),
        }
    }

    fn degree(&self) -> usize {
        self.structure.len()
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.config.node_budget {
            let group = PermGroup::schreier_sims(self.degree(), &self.gens)?;
            return Err(Error::BudgetExceeded {
                budget: self.config.node_budget,
                lower_bound: group.order(),
            });
        }
        if self.nodes.is_multiple_of(4096) {
            self.report(None);
        }
        Ok(())
    }

    fn report(&self, level: Option<usize>) {
        if let Some(cb) = &self.config.progress {
            cb(&Progress {
                nodes: self.nodes,
                generators: self.gens.len(),
                level,
                depth: self.base.len(),
            });
        }
    }

    /// Builds the first path by always individualizing the smallest point
    /// of the target cell.
    fn first_path(&mut self) -> Result<()> {
        self.tick()?;
        let mut node = self.structure.root();
        loop {
            let target = node.target_cell();
            let signature = node.signature();
            let next = target.as_ref().map(|(_, cell)| cell[0]);
            self.path.push(PathNode {
                coloring: node.clone(),
                signature,
                target,
            });
            match next {
                Some(v) => {
                    self.base.push(v);
                    self.tick()?;
                    node = self.structure.individualize(&node, v);
                }
                None => break,
            }
        }
        let leaf = &self.path.last().unwrap().coloring;
        self.leaf_positions = leaf.colors.iter().enumerate().map(|(p, &c)| (c, p)).collect();
        self.leaf_positions.sort_unstable();
        Ok(())
    }

    /// The permutation carrying the first leaf onto `leaf`.
    fn leaf_perm(&self, leaf: &Coloring) -> Option<Perm> {
        let mut other: Vec<(u64, usize)> = leaf.colors.iter().enumerate().map(|(p, &c)| (c, p)).collect();
        other.sort_unstable();
        let mut images = vec![0; self.degree()];
        for (&(c1, p1), &(c2, p2)) in self.leaf_positions.iter().zip(&other) {
            if c1 != c2 {
                return None;
            }
            images[p1] = p2;
        }
        Perm::from_images(images).ok()
    }

    /// Looks for a good leaf below `node`, which sits at `level` of the tree
    /// and must match the first path there. `images` holds the images of
    /// base points 0..level.
    fn descend(&mut self, node: Coloring, level: usize, images: &mut Vec<usize>) -> Result<Option<Perm>> {
        let reference = &self.path[level];
        if node.trace != reference.coloring.trace || node.signature() != reference.signature {
            return Ok(None);
        }
        if let Some(test) = self.prefix_test {
            if !test(&self.base[..images.len()], images) {
                return Ok(None);
            }
        }
        let Some((color, _)) = reference.target.clone() else {
            // An automorphism carrying the first path onto this one maps the
            // first leaf onto this leaf, so it is the colour matching. A
            // matching that moves the base elsewhere is some other
            // automorphism and is not what this branch is looking for.
            let along_path = |p: &Perm| self.base.iter().zip(images.iter()).all(|(&b, &i)| p.apply(b) == i);
            return Ok(self
                .leaf_perm(&node)
                .filter(|p| along_path(p) && (self.predicate)(p)));
        };
        let cell = node.cell_of(color);
        let orbit = self.level_orbit.get(level).copied().unwrap_or(1);
        let allowed_failures = cell.len().saturating_sub(orbit);
        let mut failures = 0;
        for &v in &cell {
            self.tick()?;
            let child = self.structure.individualize(&node, v);
            images.push(v);
            let found = self.descend(child, level + 1, images)?;
            images.pop();
            if found.is_some() {
                return Ok(found);
            }
            failures += 1;
            if failures > allowed_failures {
                break;
            }
        }
        Ok(None)
    }

    /// Runs the search and returns generators of the full group.
    pub(crate) fn run(mut self) -> Result<Vec<Perm>> {
        self.first_path()?;
        let depth = self.base.len();
        self.level_orbit = vec![1; depth];
        let mut images: Vec<usize> = Vec::new();
        for level in (0..depth).rev() {
            let b = self.base[level];
            let cell = self.path[level].target.as_ref().unwrap().1.clone();
            let mut failed = vec![false; self.degree()];
            let node = self.path[level].coloring.clone();
            for &gamma in &cell {
                let orbits = orbits_of(self.degree(), &self.gens);
                let orbit_of = |x: usize| orbits.iter().position(|o| o.contains(&x)).unwrap();
                if orbit_of(gamma) == orbit_of(b) || failed[gamma] {
                    continue;
                }
                self.tick()?;
                let child = self.structure.individualize(&node, gamma);
                images.clear();
                images.extend_from_slice(&self.base[..level]);
                images.push(gamma);
                match self.descend(child, level + 1, &mut images)? {
                    Some(g) => {
                        debug_assert!(self.base[..level].iter().all(|&x| g.apply(x) == x));
                        self.gens.push(g);
                    }
                    None => {
                        for &x in &orbits[orbit_of(gamma)] {
                            failed[x] = true;
                        }
                    }
                }
            }
            let orbits = orbits_of(self.degree(), &self.gens);
            self.level_orbit[level] = orbits.iter().find(|o| o.contains(&b)).unwrap().len();
            self.report(Some(level));
        }
        Ok(self.gens)
    }

}

/// Runs the search and assembles the group; every generator is checked
/// against the predicate once more.
pub(crate) fn search_group(
    structure: &Structure,
    predicate: &dyn Fn(&Perm) -> bool,
    prefix_test: Option<&PrefixTest<'_>>,
    config: &SearchConfig,
) -> Result<PermGroup> {
    let gens = Search::new(structure, predicate, prefix_test, config).run()?;
    assert!(gens.iter().all(predicate), "search produced a non-member");
    PermGroup::schreier_sims(structure.len(), &gens)
}

/// Base of the first path; used to set up prefix tests before searching.
pub(crate) fn first_path_base(structure: &Structure) -> Vec<usize> {
    let mut node = structure.root();
    let mut base = Vec::new();
    while let Some((_, cell)) = node.target_cell() {
        base.push(cell[0]);
        node = structure.individualize(&node, cell[0]);
    }
    base
}
