//! Construction A lattices of Z4-codes and the standard Leech lattice.
//!
//! Vectors are stored doubled: an integer row x stands for x/2, so all
//! arithmetic is exact. Gram matrices then carry a denominator of 4.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf2::{family, BinaryCode, BinaryWord};
use crate::z4::{Z4Code, Z4Word};

/// A lattice given by doubled basis rows, with a designated set of frame
/// vectors (also doubled).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ALattice {
    n: usize,
    code: Option<Z4Code>,
    /// Square, lower-left zero (Hermite normal form).
    basis: Vec<Vec<i64>>,
    frame: Vec<Vec<i64>>,
}

/// Hermite normal form of the row lattice of `rows` (full rank assumed).
fn hermite(mut rows: Vec<Vec<i64>>, n: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::with_capacity(n);
    for col in 0..n {
        // Euclid on column `col` over the remaining rows.
        loop {
            let mut nz: Vec<usize> = (0..rows.len()).filter(|&r| rows[r][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&r| rows[r][col].abs());
            let p = nz[0];
            for &r in &nz[1..] {
                let q = rows[r][col] / rows[p][col];
                let pivot_row = rows[p].clone();
                for (a, b) in rows[r].iter_mut().zip(&pivot_row) {
                    *a -= q * b;
                }
            }
        }
        let Some(p) = (0..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        let mut pivot = rows.swap_remove(p);
        if pivot[col] < 0 {
            pivot.iter_mut().for_each(|a| *a = -*a);
        }
        for prev in out.iter_mut() {
            let q = prev[col].div_euclid(pivot[col]);
            for (a, b) in prev.iter_mut().zip(&pivot) {
                *a -= q * b;
            }
        }
        out.push(pivot);
    }
    out
}

impl ALattice {
    /// A_4(𝒞) = ½{x ∈ Z^n : x mod 4 ∈ 𝒞}, with the 4-frame {2e_i}.
    pub fn construction_a(code: &Z4Code) -> ALattice {
        let n = code.len();
        let mut rows: Vec<Vec<i64>> = code
            .generators()
            .iter()
            .map(|g| g.digits().iter().map(|&d| d as i64).collect())
            .collect();
        for i in 0..n {
            let mut r = vec![0; n];
            r[i] = 4;
            rows.push(r);
        }
        let basis = hermite(rows, n);
        let frame = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 4;
                r
            })
            .collect();
        ALattice {
            n,
            code: Some(code.clone()),
            basis,
            frame,
        }
    }

    /// A lattice from doubled basis rows; the basis itself is the
    /// designated frame.
    pub fn from_doubled_basis(rows: Vec<Vec<i64>>) -> Result<ALattice> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameters("basis must be square".into()));
        }
        let basis = hermite(rows.clone(), n);
        if basis.len() != n {
            return Err(Error::InvalidParameters("basis rows are dependent".into()));
        }
        Ok(ALattice {
            n,
            code: None,
            basis,
            frame: rows,
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn code(&self) -> Option<&Z4Code> {
        self.code.as_ref()
    }

    /// Basis rows, doubled.
    pub fn doubled_basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// X·Xᵀ for the doubled basis X; the Gram matrix is this over 4.
    pub fn gram_times_4(&self) -> Vec<Vec<i64>> {
        self.basis
            .iter()
            .map(|a| self.basis.iter().map(|b| dot(a, b)).collect())
            .collect()
    }

    pub fn gram(&self) -> Vec<Vec<Ratio<i64>>> {
        self.gram_times_4()
            .into_iter()
            .map(|row| row.into_iter().map(|v| Ratio::new(v, 4)).collect())
            .collect()
    }

    /// det of the doubled basis (product of the Hermite diagonal).
    fn doubled_det(&self) -> BigInt {
        self.basis
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (i, r)| acc * BigInt::from(r[i]))
    }

    /// det(gram) = det(X)^2 / 4^n.
    pub fn gram_det(&self) -> Ratio<BigInt> {
        let d = self.doubled_det();
        Ratio::new(&d * &d, BigInt::from(4).pow(self.n as u32))
    }

    pub fn is_integral(&self) -> bool {
        self.gram_times_4().iter().flatten().all(|v| v % 4 == 0)
    }

    pub fn is_even(&self) -> bool {
        self.is_integral() && (0..self.n).all(|i| self.gram_times_4()[i][i] % 8 == 0)
    }

    pub fn is_unimodular(&self) -> bool {
        let d = self.gram_det();
        d == Ratio::one() || d == -Ratio::<BigInt>::one()
    }

    /// Whether the doubled vector x lies in the lattice.
    pub fn contains_doubled(&self, x: &[i64]) -> bool {
        if x.len() != self.n {
            return false;
        }
        let mut r = x.to_vec();
        for (i, row) in self.basis.iter().enumerate() {
            if r[i] % row[i] != 0 {
                return false;
            }
            let q = r[i] / row[i];
            for (a, b) in r.iter_mut().zip(row) {
                *a -= q * b;
            }
        }
        r.iter().all(Zero::is_zero)
    }

    /// The designated frame vectors lie in the lattice and have Gram
    /// matrix 4·I.
    pub fn four_frame_check(&self) -> bool {
        self.frame.len() == self.n
            && self.frame.iter().all(|f| self.contains_doubled(f))
            && self.frame.iter().enumerate().all(|(i, a)| {
                self.frame
                    .iter()
                    .enumerate()
                    .all(|(j, b)| dot(a, b) == if i == j { 16 } else { 0 })
            })
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Checks that v ↦ φ4(2v) maps A_4(𝒞) onto 𝒞 with kernel the frame
/// lattice: every basis vector lands in 𝒞, the frame lies in the lattice,
/// and the index det(gram F)/det(gram L) equals |𝒞|².
pub fn verify_quotient(code: &Z4Code) -> bool {
    let l = ALattice::construction_a(code);
    let into_code = l
        .doubled_basis()
        .iter()
        .all(|r| code.contains(&Z4Word::new(r.iter().map(|&v| v.rem_euclid(4) as u8).collect())));
    let frame_det = Ratio::from_integer(BigInt::from(4).pow(code.len() as u32));
    let size = BigInt::from(code.size());
    let index_ok = frame_det / l.gram_det() == Ratio::from_integer(&size * &size);
    into_code && l.four_frame_check() && index_ok
}

/// A vector of the Leech lattice scaled by √8, so all coordinates are
/// integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeechWord {
    pub x: [i64; 24],
}

impl LeechWord {
    /// The image of a doubled A_4 vector under the frame identification
    /// 2e_{2i−1} ↦ α_{2i−1}, 2e_{2i} ↦ α_{2i} of the standard Leech frame.
    pub fn from_doubled_a4(v: &[i64]) -> Result<LeechWord> {
        if v.len() != 24 {
            return Err(Error::LengthMismatch {
                expected: 24,
                found: v.len(),
            });
        }
        let mut x = [0i64; 24];
        for i in 0..12 {
            let (a, b) = (v[2 * i], v[2 * i + 1]);
            x[2 * i] = a - b;
            x[2 * i + 1] = a + b;
        }
        Ok(LeechWord { x })
    }

    pub fn neg(&self) -> LeechWord {
        LeechWord { x: self.x.map(|v| -v) }
    }

    pub fn add(&self, other: &LeechWord) -> LeechWord {
        let mut x = self.x;
        for (a, b) in x.iter_mut().zip(other.x) {
            *a += b;
        }
        LeechWord { x }
    }

    /// Squared norm of the unscaled vector, times 8.
    pub fn norm_times_8(&self) -> i64 {
        self.x.iter().map(|v| v * v).sum()
    }
}

/// The Golay code in the coordinates used for Λ: the MOG code with the
/// two coordinates of each frame pair exchanged.
pub fn leech_golay() -> BinaryCode {
    let swap: Vec<usize> = (0..24).map(|i| i ^ 1).collect();
    family::golay24_mog().permuted(&swap)
}

/// Membership in Λ = Λ0 ∪ Λ1:
/// Λ0: all coordinates even, x/2 mod 2 ∈ G24, Σx ≡ 0 mod 8;
/// Λ1: all coordinates odd, (x − 1)/2 mod 2 ∈ G24, Σx ≡ 4 mod 8.
pub fn leech_member(w: &LeechWord) -> bool {
    leech_member_in(w, &leech_golay())
}

pub fn leech_member_in(w: &LeechWord, golay: &BinaryCode) -> bool {
    let parity = w.x[0].rem_euclid(2);
    if w.x.iter().any(|v| v.rem_euclid(2) != parity) {
        return false;
    }
    let c: Vec<u8> = w.x.iter().map(|&v| ((v - parity).div_euclid(2)).rem_euclid(2) as u8).collect();
    let sum: i64 = w.x.iter().sum();
    golay.contains(&BinaryWord::from_bits(&c)) && sum.rem_euclid(8) == 4 * parity
}
