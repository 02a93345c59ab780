//! Built-in generator matrices, addressable by stable ids.
//!
//! Z4 matrices and the moonshine D matrix are stored as text resources and
//! checked against a SHA-256 digest when loaded. Binary family codes are
//! generated. Each entry lists invariants the pipeline must reproduce.

use std::fmt;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gf2::{family, BinaryCode};
use crate::z4::Z4Code;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Z4,
    Binary,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Kind::Z4 => "z4",
            Kind::Binary => "binary",
        })
    }
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    /// Stated in the literature the matrix was taken from.
    Published,
    /// Obtained by an independent computation and frozen here.
    Computed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub name: &'static str,
    pub value: String,
    pub origin: Origin,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    pub kind: Kind,
    pub matrix: String,
    pub description: String,
    pub expected: Vec<Expected>,
}

impl CatalogEntry {
    pub fn z4_code(&self) -> Result<Z4Code> {
        match self.kind {
            Kind::Z4 => Z4Code::parse(&self.matrix),
            Kind::Binary => Err(Error::InvalidParameters(format!("{} is a binary code", self.id))),
        }
    }

    /// The binary code of a binary entry. Z4 entries are refused.
    pub fn binary_code(&self) -> Result<BinaryCode> {
        match self.kind {
            Kind::Binary => BinaryCode::parse(&self.matrix),
            Kind::Z4 => Err(Error::InvalidParameters(format!("{} is a Z4-code", self.id))),
        }
    }

    pub fn expected(&self, name: &str) -> Option<&Expected> {
        self.expected.iter().find(|e| e.name == name)
    }
}

struct Stored {
    id: &'static str,
    text: &'static str,
    sha256: &'static str,
    description: &'static str,
    expected: &'static [(&'static str, &'static str, Origin)],
}

use Origin::{Computed, Published};

const STORED: &[Stored] = &[
    Stored {
        id: "z4-len8-1",
        text: include_str!("../data/z4-len8-1.txt"),
        sha256: "bb2c7db99990297ca1c26866f21dd12a8631bb6ef3ae5a70174ebc5709a6f5a7",
        description: "length-8 Type II code with shape 4*2^6, torsion code the even-weight code",
        expected: &[
            ("type_ii", "true", Published),
            ("k1", "1", Published),
            ("k2", "6", Published),
            ("aut_z4", "5160960", Published),
            ("lattice.dim_p", "15", Published),
            ("lattice.pointwise", "1+14", Published),
            ("lattice.h_count", "2027025", Computed),
            ("lattice.stab_order", "685597979049984000", Published),
        ],
    },
    Stored {
        id: "z4-len8-2",
        text: include_str!("../data/z4-len8-2.txt"),
        sha256: "f7fce53222620cca7aaf420872c03812a9c231f402071eb639edd5fec57813d4",
        description: "length-8 Type II code with shape 4^2*2^4",
        expected: &[
            ("type_ii", "true", Published),
            ("k1", "2", Published),
            ("k2", "4", Published),
            ("aut_z4", "73728", Published),
            ("lattice.dim_p", "14", Published),
            ("lattice.pointwise", "2+12", Published),
            ("lattice.h_count", "11025", Computed),
        ],
    },
    Stored {
        id: "z4-len8-3",
        text: include_str!("../data/z4-len8-3.txt"),
        sha256: "08bad9cb3a0de593822c25356b4760cfd0eb87159d83fb5eee5288e45b33a549",
        description: "length-8 Type II code with shape 4^3*2^2",
        expected: &[
            ("type_ii", "true", Published),
            ("k1", "3", Published),
            ("k2", "2", Published),
            ("aut_z4", "6144", Published),
            ("lattice.dim_p", "12", Published),
            ("lattice.pointwise", "3+9", Published),
            ("lattice.h_count", "81", Computed),
        ],
    },
    Stored {
        id: "z4-len8-4",
        text: include_str!("../data/z4-len8-4.txt"),
        sha256: "d18a71c0b5ed600cba20c15685be09c35cd0a2f4bcd26144af4d5e43a4f22981",
        description: "length-8 Type II code with shape 4^4, residue code the extended Hamming code",
        expected: &[
            ("type_ii", "true", Published),
            ("k1", "4", Published),
            ("k2", "0", Published),
            ("aut_z4_bar", "1344", Published),
            ("aut_z4", "2688", Computed),
            ("lattice.dim_p", "9", Published),
            ("lattice.pointwise", "4+5", Published),
            ("lattice.h_count", "1", Published),
            ("lattice.stab_order", "176160768", Published),
            ("orbifold.dim_p", "5", Published),
            ("orbifold.pointwise", "5+0", Published),
            ("orbifold.h_count", "15", Computed),
        ],
    },
    Stored {
        id: "z4-pseudo-golay-1",
        text: include_str!("../data/z4-pseudo-golay-1.txt"),
        sha256: "fde3115c235c6c804e2adb68e3a7898b6e822e09db8e128de95518115ce9e9dc",
        description: "length-24 extremal Type II code whose residue code is the Golay code, automorphism group of order 12144",
        expected: &[
            ("type_ii", "true", Published),
            ("min_euclidean_weight", "16", Published),
            ("aut_z4", "12144", Published),
            ("orbifold.dim_p", "13", Published),
            ("orbifold.pointwise", "13+0", Published),
            ("orbifold.h_count", "1", Published),
            ("orbifold.stab_order", "203742511104", Published),
        ],
    },
    Stored {
        id: "z4-pseudo-golay-2",
        text: include_str!("../data/z4-pseudo-golay-2.txt"),
        sha256: "653a0de6649228a04bc13f15b0749e20a9ec973b9b6bbbdb573d89bebfe4143e",
        description: "length-24 extremal Type II code whose residue code is the Golay code, automorphism group of order 6",
        expected: &[
            ("type_ii", "true", Published),
            ("min_euclidean_weight", "16", Published),
            ("aut_z4", "6", Published),
            ("orbifold.dim_p", "13", Published),
            ("orbifold.pointwise", "13+0", Published),
            ("orbifold.h_count", "1", Published),
        ],
    },
    Stored {
        id: "z4-leech-standard",
        text: include_str!("../data/z4-leech-standard.txt"),
        sha256: "341213a53b1aeece806a9cbde046cd39f5f3671b850611b5e8867f2b982c8209",
        description: "length-24 Type II code of the standard frame of the Leech lattice",
        expected: &[
            ("type_ii", "true", Published),
            ("k1", "6", Published),
            ("c0_min_weight", "4", Published),
            ("aut_z4", "264241152", Published),
            ("orbifold.dim_p", "27", Published),
            ("orbifold.pointwise", "7+20", Published),
            ("orbifold.h_count", "15", Computed),
            ("orbifold.stab_order", "66498463247892480", Published),
        ],
    },
    Stored {
        id: "bin-moonshine-d",
        text: include_str!("../data/bin-moonshine-d.txt"),
        sha256: "61c81ebc20db8d9de640a0e734a47da49a2b9d372dcef79f71ba0f8140d02c2d",
        description: "the 7x48 code D of the standard moonshine frame",
        expected: &[
            ("dim", "7", Published),
            ("aut", "495452160", Published),
        ],
    },
];

const FAMILIES: &[(&str, &str)] = &[
    ("bin-golay", "extended binary Golay code, cyclic construction"),
    ("bin-golay-mog", "extended binary Golay code in MOG coordinates"),
    ("bin-hamming8", "extended Hamming [8,4,4] code"),
    ("bin-rm-1-4", "Reed-Muller code RM(1,4)"),
    ("bin-rm-2-4", "Reed-Muller code RM(2,4)"),
    ("bin-even-n", "even-weight code of length n, requested as bin-even-<n>"),
];

/// Largest length accepted for bin-even-<n>.
pub const MAX_EVEN_LENGTH: usize = 4096;

/// All ids; `bin-even-n` stands for the parametric family.
pub fn list() -> Vec<String> {
    STORED
        .iter()
        .map(|s| s.id.to_string())
        .chain(FAMILIES.iter().map(|(id, _)| id.to_string()))
        .collect()
}

/// One-line descriptions, in the order of [`list`].
pub fn descriptions() -> Vec<(String, Kind, String)> {
    STORED
        .iter()
        .map(|s| (s.id.to_string(), kind_of(s.id), s.description.to_string()))
        .chain(FAMILIES.iter().map(|(id, d)| (id.to_string(), Kind::Binary, d.to_string())))
        .collect()
}

fn kind_of(id: &str) -> Kind {
    if id.starts_with("z4-") {
        Kind::Z4
    } else {
        Kind::Binary
    }
}

fn owned(expected: &[(&'static str, &'static str, Origin)]) -> Vec<Expected> {
    expected
        .iter()
        .map(|&(name, value, origin)| Expected {
            name,
            value: value.to_string(),
            origin,
        })
        .collect()
}

fn family_entry(id: &str, description: &str, code: BinaryCode, expected: Vec<Expected>) -> CatalogEntry {
    CatalogEntry {
        id: id.to_string(),
        kind: Kind::Binary,
        matrix: code.to_text(),
        description: description.to_string(),
        expected,
    }
}

fn expected(list: &[(&'static str, String, Origin)]) -> Vec<Expected> {
    list.iter()
        .map(|(name, value, origin)| Expected {
            name,
            value: value.clone(),
            origin: *origin,
        })
        .collect()
}

pub fn get(id: &str) -> Result<CatalogEntry> {
    if let Some(s) = STORED.iter().find(|s| s.id == id) {
        let digest = Sha256::digest(s.text.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        if hex != s.sha256 {
            return Err(Error::Checksum { id: id.to_string() });
        }
        return Ok(CatalogEntry {
            id: id.to_string(),
            kind: kind_of(id),
            matrix: s.text.to_string(),
            description: s.description.to_string(),
            expected: owned(s.expected),
        });
    }
    let describe = |id: &str| FAMILIES.iter().find(|(f, _)| *f == id).map(|(_, d)| *d).unwrap_or("");
    let golay = |code: BinaryCode| {
        family_entry(
            id,
            describe(id),
            code,
            expected(&[
                ("dim", "12".into(), Published),
                ("min_weight", "8".into(), Computed),
                ("aut", "244823040".into(), Published),
            ]),
        )
    };
    match id {
        "bin-golay" => Ok(golay(family::golay24())),
        "bin-golay-mog" => Ok(golay(family::golay24_mog())),
        "bin-hamming8" => Ok(family_entry(
            id,
            describe(id),
            family::hamming8(),
            expected(&[
                ("dim", "4".into(), Published),
                ("min_weight", "4".into(), Computed),
                ("aut", "1344".into(), Published),
            ]),
        )),
        "bin-rm-1-4" => Ok(family_entry(
            id,
            describe(id),
            family::reed_muller(1, 4)?,
            expected(&[
                ("dim", "5".into(), Computed),
                ("min_weight", "8".into(), Computed),
                ("aut", "322560".into(), Computed),
            ]),
        )),
        "bin-rm-2-4" => Ok(family_entry(
            id,
            describe(id),
            family::reed_muller(2, 4)?,
            expected(&[
                ("dim", "11".into(), Computed),
                ("min_weight", "4".into(), Computed),
                ("aut", "322560".into(), Published),
            ]),
        )),
        _ => {
            let n = id
                .strip_prefix("bin-even-")
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| (2..=MAX_EVEN_LENGTH).contains(&n))
                .ok_or_else(|| Error::UnknownCatalogId(id.to_string()))?;
            let factorial = (2..=n).fold(num_bigint::BigUint::from(1u32), |acc, k| acc * k);
            Ok(family_entry(
                id,
                &format!("even-weight code of length {n}"),
                family::even_weight(n),
                expected(&[
                    ("dim", (n - 1).to_string(), Computed),
                    ("min_weight", "2".into(), Computed),
                    ("aut", factorial.to_string(), Computed),
                ]),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_id_loads() {
        for id in list() {
            let id = if id == "bin-even-n" { "bin-even-16".to_string() } else { id };
            let e = get(&id).unwrap();
            match e.kind {
                Kind::Z4 => assert!(e.z4_code().unwrap().is_type_ii(), "{id}"),
                Kind::Binary => assert!(e.binary_code().unwrap().dim() > 0, "{id}"),
            }
        }
    }

    #[test]
    fn unknown_ids() {
        for id in ["z4-len8-5", "bin-even-1", "bin-even-x", ""] {
            assert!(matches!(get(id), Err(Error::UnknownCatalogId(_))), "{id}");
        }
    }

    #[test]
    fn fourth_matrix_verbatim() {
        let e = get("z4-len8-4").unwrap();
        assert_eq!(e.matrix, "3111 3111\n1111 2000\n1320 1100\n1010 1032\n");
    }
}
