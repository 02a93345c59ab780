//! Inputs shared by the benchmarks in `benches/`.

use framestab::catalog;
use framestab::{BinaryCode, Z4Code};

pub fn z4(id: &str) -> Z4Code {
    catalog::get(id).and_then(|e| e.z4_code()).expect("catalog Z4 entry")
}

pub fn binary(id: &str) -> BinaryCode {
    catalog::get(id).and_then(|e| e.binary_code()).expect("catalog binary entry")
}
