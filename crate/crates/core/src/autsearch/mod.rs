//! Automorphism groups and canonical forms of codes by partition
//! refinement and backtracking.
//!
//! The search individualizes one point at a time and refines the point
//! colouring against an incidence structure that every automorphism must
//! preserve (low-weight codewords, typed minimum-weight Z4 supports). It
//! then walks the levels bottom-up, finding one group element per orbit of
//! each basic cell and pruning whole orbits on failure. Leaves are accepted
//! only after an exact membership test, so orders are exact.

mod canon;
mod search;
mod structure;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::Result;
use crate::gf2::{BinaryCode, BinaryWord};
use crate::permgrp::{Perm, PermGroup, SignedPerm};
use crate::z4::{Z4Code, DEFAULT_Z4_ENUM_LOG2};

pub use structure::{Coloring, Structure, StructureBuilder};

/// Node budget used when none is configured.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Typed minimum-weight supports beyond this count are not used as blocks.
const MAX_TYPED_BLOCKS: usize = 200_000;

/// Periodic search status.
#[derive(Clone, Debug)]
pub struct Progress {
    pub nodes: u64,
    pub generators: usize,
    /// Set when a level of the base has just been completed.
    pub level: Option<usize>,
    pub depth: usize,
}

pub type ProgressFn = Arc<dyn Fn(&Progress) + Send + Sync>;

#[derive(Clone)]
pub struct SearchConfig {
    pub node_budget: u64,
    pub progress: Option<ProgressFn>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            progress: None,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(node_budget: u64) -> Self {
        SearchConfig {
            node_budget,
            progress: None,
        }
    }
}

impl fmt::Debug for SearchConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SearchConfig")
            .field("node_budget", &self.node_budget)
            .field("progress", &self.progress.is_some())
            .finish()
    }
}

fn binary_structure(code: &BinaryCode) -> Structure {
    let mut b = StructureBuilder::new(code.len());
    b.add_code(1, code);
    b.build()
}

/// The full permutation automorphism group of a binary code.
pub fn aut_binary(code: &BinaryCode) -> Result<PermGroup> {
    aut_binary_with(code, &SearchConfig::default())
}

pub fn aut_binary_with(code: &BinaryCode, config: &SearchConfig) -> Result<PermGroup> {
    let structure = binary_structure(code);
    let pred = |p: &Perm| code.is_fixed_by(p.images());
    search::search_group(&structure, &pred, None, config)
}

/// Canonical representative under coordinate permutations, with the
/// relabelling that produces it from `code`.
pub fn canonical_form(code: &BinaryCode) -> Result<(BinaryCode, Perm)> {
    canonical_form_with(code, &SearchConfig::default())
}

pub fn canonical_form_with(code: &BinaryCode, config: &SearchConfig) -> Result<(BinaryCode, Perm)> {
    let structure = binary_structure(code);
    let pred = |p: &Perm| code.is_fixed_by(p.images());
    let aut = search::search_group(&structure, &pred, None, config)?;
    canon::canonical_form(&structure, code, &aut, config)
}

/// Signed-permutation automorphisms of a Z4-code, split along
/// 1 → R ∩ Aut(𝒞) → Aut(𝒞) → image → 1.
#[derive(Clone, Debug)]
pub struct Z4Automorphisms {
    /// log2 of the number of sign vectors fixing the code.
    pub kernel_log2: usize,
    /// A basis of those sign vectors (1 = negate).
    pub kernel_basis: Vec<BinaryWord>,
    /// The projection to Sym_n.
    pub image: PermGroup,
    /// One signed lift of each strong generator of the image.
    pub generators: Vec<SignedPerm>,
}

impl Z4Automorphisms {
    pub fn kernel_order(&self) -> BigUint {
        BigUint::from(1u32) << self.kernel_log2
    }

    pub fn total_order(&self) -> BigUint {
        self.kernel_order() * self.image.order()
    }
}

fn z4_structure(code: &Z4Code) -> Structure {
    let n = code.len();
    let mut b = StructureBuilder::new(n);
    b.add_code(1, code.residue());
    if code.torsion() != code.residue() {
        b.add_code(2, code.torsion());
    }
    if code.log2_size() > 0 {
        if let Ok(words) = code.typed_min_supports(DEFAULT_Z4_ENUM_LOG2) {
            if words.len() <= MAX_TYPED_BLOCKS {
                for (odd, two) in &words {
                    let mut inc: Vec<(u32, u8)> = odd.support().into_iter().map(|p| (p as u32, 1)).collect();
                    inc.extend(two.support().into_iter().map(|p| (p as u32, 2)));
                    b.add_block(3, inc);
                }
            }
        }
    }
    b.build()
}

/// The signed-permutation automorphism group of a Z4-code.
///
/// Candidate permutations must preserve 𝒞_0, 𝒞_1 and the typed
/// minimum-weight supports; each leaf is accepted when the linear sign
/// system has a solution.
pub fn aut_z4(code: &Z4Code) -> Result<Z4Automorphisms> {
    aut_z4_with(code, &SearchConfig::default())
}

pub fn aut_z4_with(code: &Z4Code, config: &SearchConfig) -> Result<Z4Automorphisms> {
    let structure = z4_structure(code);
    let pred = |p: &Perm| code.signs_for(p.images()).is_some();
    let image = search::search_group(&structure, &pred, None, config)?;
    let generators = image
        .strong_generators()
        .iter()
        .map(|p| SignedPerm::new(p.clone(), code.signs_for(p.images()).expect("member")))
        .collect();
    Ok(Z4Automorphisms {
        kernel_log2: code.sign_kernel_log2(),
        kernel_basis: code.sign_kernel_basis(),
        image,
        generators,
    })
}

/// {p ∈ g : p(sub) = sub}.
pub fn subcode_stabilizer(g: &PermGroup, sub: &BinaryCode) -> Result<PermGroup> {
    subcode_stabilizer_with(g, sub, &SearchConfig::default())
}

pub fn subcode_stabilizer_with(g: &PermGroup, sub: &BinaryCode, config: &SearchConfig) -> Result<PermGroup> {
    let n = g.degree();
    let mut b = StructureBuilder::new(n);
    b.add_code(1, sub);
    // Elements of g fix each g-orbit setwise, so the orbits may be used as
    // distinguishable blocks.
    for (k, orbit) in g.orbits().iter().enumerate() {
        b.add_block(structure::combine(2, k as u64), orbit.iter().map(|&p| (p as u32, 1)).collect());
    }
    let structure = b.build();
    let based = g.with_base(&search::first_path_base(&structure));
    let prefix = |_: &[usize], images: &[usize]| based.base_prefix_extends(images);
    let pred = |p: &Perm| g.contains(p) && sub.is_fixed_by(p.images());
    search::search_group(&structure, &pred, Some(&prefix), config)
}

/// The stabilizer of `sub` in Aut(`code`), searched directly without
/// computing Aut(`code`) first.
pub fn code_subcode_stabilizer(code: &BinaryCode, sub: &BinaryCode) -> Result<PermGroup> {
    code_subcode_stabilizer_with(code, sub, &SearchConfig::default())
}

pub fn code_subcode_stabilizer_with(code: &BinaryCode, sub: &BinaryCode, config: &SearchConfig) -> Result<PermGroup> {
    let mut b = StructureBuilder::new(code.len());
    b.add_code(1, code);
    b.add_code(2, sub);
    let structure = b.build();
    let pred = |p: &Perm| code.is_fixed_by(p.images()) && sub.is_fixed_by(p.images());
    search::search_group(&structure, &pred, None, config)
}
