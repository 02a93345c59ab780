//! Structure codes and Virasoro frame stabilizers of framed vertex operator
//! algebras built from Z4-codes.
//!
//! The crate is organised bottom-up: exact GF(2) and Z4 code arithmetic,
//! permutation groups with exact orders, a partition-refinement search for
//! code automorphisms, Construction A lattices, and the frame pipeline that
//! assembles stabilizer orders from all of these.

pub mod autsearch;
pub mod catalog;
pub mod error;
pub mod frames;
pub mod gf2;
pub mod lattice;
pub mod permgrp;
pub mod text;
pub mod z4;

pub use error::{Error, ParseError, Result};
pub use frames::{frame_report, FrameOptions, FrameReport, LiftOrder, StructureCodes, Variant};
pub use gf2::{BinaryCode, BinaryWord};
pub use lattice::{ALattice, LeechWord};
pub use permgrp::{Perm, PermGroup, SignedPerm};
pub use z4::{Z4Code, Z4Word};
