//! Named binary code families.

use super::{BinaryCode, BinaryWord};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// All even-weight words of length n.
    EvenWeight(usize),
    /// The full space GF(2)^n.
    Full(usize),
    /// {0, 1^n}.
    Repetition(usize),
    /// The extended Hamming [8,4,4] code.
    Hamming8,
    ReedMuller { r: usize, m: usize },
    /// Extended quadratic-residue construction of the [24,12,8] code.
    Golay,
    /// The [24,12,8] code in MOG coordinates (hexacode construction).
    GolayMog,
}

impl Family {
    pub fn build(self) -> Result<BinaryCode> {
        match self {
            Family::EvenWeight(n) => nonzero(n).map(|_| even_weight(n)),
            Family::Full(n) => nonzero(n).map(|_| full(n)),
            Family::Repetition(n) => nonzero(n).map(|_| repetition(n)),
            Family::Hamming8 => Ok(hamming8()),
            Family::ReedMuller { r, m } => reed_muller(r, m),
            Family::Golay => Ok(golay24()),
            Family::GolayMog => Ok(golay24_mog()),
        }
    }
}

fn nonzero(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameters("length must be positive".into()))
    } else {
        Ok(())
    }
}

/// 𝓔_n.
pub fn even_weight(n: usize) -> BinaryCode {
    let rows: Vec<BinaryWord> = (0..n.saturating_sub(1))
        .map(|i| BinaryWord::from_support(n, &[i, i + 1]))
        .collect();
    BinaryCode::span(n, &rows).unwrap()
}

pub fn full(n: usize) -> BinaryCode {
    let rows: Vec<BinaryWord> = (0..n).map(|i| BinaryWord::from_support(n, &[i])).collect();
    BinaryCode::span(n, &rows).unwrap()
}

pub fn repetition(n: usize) -> BinaryCode {
    BinaryCode::span(n, &[BinaryWord::ones(n)]).unwrap()
}

/// H8, taken as RM(1,3).
pub fn hamming8() -> BinaryCode {
    reed_muller(1, 3).unwrap()
}

/// RM(r, m) by the (u | u+v) recursion.
pub fn reed_muller(r: usize, m: usize) -> Result<BinaryCode> {
    if r > m {
        return Err(Error::InvalidParameters(format!("RM({r},{m}) needs r <= m")));
    }
    Ok(rm_rows(r as isize, m))
}

fn rm_rows(r: isize, m: usize) -> BinaryCode {
    let n = 1usize << m;
    if r < 0 {
        return BinaryCode::zero(n);
    }
    if r as usize >= m {
        return full(n);
    }
    if r == 0 {
        return repetition(n);
    }
    let u = rm_rows(r, m - 1);
    let v = rm_rows(r - 1, m - 1);
    let half = n / 2;
    let zero = BinaryWord::zeros(half);
    let mut rows: Vec<BinaryWord> = u.basis().iter().map(|b| b.concat(b)).collect();
    rows.extend(v.basis().iter().map(|b| zero.concat(b)));
    BinaryCode::span(n, &rows).unwrap()
}

/// Generator polynomial 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11 of the
/// [23,12,7] quadratic-residue code.
const GOLAY23_GENERATOR: [usize; 7] = [0, 2, 4, 5, 6, 10, 11];

/// The extended binary Golay code: the cyclic [23,12,7] code plus an
/// overall parity coordinate (coordinate 24).
pub fn golay24() -> BinaryCode {
    let rows: Vec<BinaryWord> = (0..12)
        .map(|shift| {
            let mut w = BinaryWord::zeros(24);
            for &e in &GOLAY23_GENERATOR {
                w.set(e + shift, true);
            }
            if w.weight() % 2 == 1 {
                w.set(23, true);
            }
            w
        })
        .collect();
    BinaryCode::span(24, &rows).unwrap()
}

/// GF(4) = {0, 1, ω, ω̄} encoded as 0, 1, 2, 3 with ω̄ = ω².
fn gf4_mul(a: u8, b: u8) -> u8 {
    if a == 0 || b == 0 {
        return 0;
    }
    let log = |x: u8| (x - 1) as usize; // 1 -> 0, ω -> 1, ω̄ -> 2
    [1u8, 2, 3][(log(a) + log(b)) % 3]
}

fn gf4_add(a: u8, b: u8) -> u8 {
    a ^ b
}

/// The hexacode: words (a, b, c, φ(1), φ(ω), φ(ω̄)) with φ(x) = ax² + bx + c.
fn hexacode() -> Vec<[u8; 6]> {
    let mut out = Vec::with_capacity(64);
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                let phi = |x: u8| gf4_add(gf4_add(gf4_mul(a, gf4_mul(x, x)), gf4_mul(b, x)), c);
                out.push([a, b, c, phi(1), phi(2), phi(3)]);
            }
        }
    }
    out
}

/// The Golay code on the 4×6 MOG array, numbered column by column (column
/// k holds coordinates 4k..4k+3, top row first). A 0/1 array is a codeword
/// when every column has the parity of the top row and the column scores,
/// with rows weighted 0, 1, ω, ω̄, form a hexacode word.
pub fn golay24_mog() -> BinaryCode {
    const ROW_LABEL: [u8; 4] = [0, 1, 2, 3];
    let score = |p: u8| (0..4).filter(|&r| p >> r & 1 == 1).fold(0u8, |acc, r| gf4_add(acc, ROW_LABEL[r]));
    let mut rows = Vec::new();
    for word in hexacode() {
        for parity in 0..2u32 {
            // Two column patterns share each (score, parity); they are
            // complements of each other, so pick the one with top bit 0 and
            // optionally complement.
            let base: Vec<u8> = word
                .iter()
                .map(|&s| {
                    (0u8..16)
                        .find(|&p| p & 1 == 0 && score(p) == s && p.count_ones() % 2 == parity)
                        .expect("every score has both parities")
                })
                .collect();
            for flips in 0u32..64 {
                if flips.count_ones() % 2 != parity {
                    continue;
                }
                let mut w = BinaryWord::zeros(24);
                for (k, &p) in base.iter().enumerate() {
                    let pat = if flips >> k & 1 == 1 { p ^ 0xF } else { p };
                    for r in 0..4 {
                        if pat >> r & 1 == 1 {
                            w.set(4 * k + r, true);
                        }
                    }
                }
                rows.push(w);
            }
        }
    }
    BinaryCode::span(24, &rows).unwrap()
}
