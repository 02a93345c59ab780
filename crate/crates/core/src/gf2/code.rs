use std::fmt;

use super::word::{BinaryWord, Limbs};
use crate::error::{Error, Result};
use crate::text;

/// Codes with dimension above this are not enumerated codeword by codeword.
pub const DEFAULT_ENUM_CAP: usize = 28;

/// A binary linear code stored by its reduced row-echelon basis.
///
/// Pivots are the leading (lowest) coordinates of the basis rows, strictly
/// increasing, and every pivot column has a single 1 in the basis. Two
/// codes are equal exactly when their bases are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    len: usize,
    basis: Vec<BinaryWord>,
    pivots: Vec<usize>,
}

impl BinaryCode {
    /// The GF(2)-span of `generators`; dependent or repeated rows are fine.
    pub fn span(len: usize, generators: &[BinaryWord]) -> Result<Self> {
        let mut code = BinaryCode::zero(len);
        for g in generators {
            if g.len() != len {
                return Err(Error::LengthMismatch {
                    expected: len,
                    found: g.len(),
                });
            }
            code.insert(g.clone());
        }
        Ok(code)
    }

    pub fn zero(len: usize) -> Self {
        BinaryCode {
            len,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Parses a generator matrix in the shared text format.
    pub fn parse(textual: &str) -> Result<Self> {
        let rows = text::parse_rows(textual, 1)?;
        let len = rows[0].len();
        let words: Vec<BinaryWord> = rows.iter().map(|r| BinaryWord::from_bits(r)).collect();
        Self::span(len, &words)
    }

    fn insert(&mut self, mut w: BinaryWord) -> bool {
        self.reduce(&mut w);
        let Some(p) = w.leading() else { return false };
        for b in &mut self.basis {
            if b.get(p) {
                b.xor_assign(&w);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, w);
        true
    }

    fn reduce(&self, w: &mut BinaryWord) {
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if w.get(p) {
                w.xor_assign(b);
            }
        }
    }

    /// The unique representative of `w + C` vanishing on every pivot.
    pub fn reduced(&self, w: &BinaryWord) -> BinaryWord {
        let mut r = w.clone();
        self.reduce(&mut r);
        r
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BinaryWord] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, w: &BinaryWord) -> bool {
        if w.len() != self.len {
            return false;
        }
        let mut r = w.clone();
        self.reduce(&mut r);
        r.is_zero()
    }

    pub fn is_subcode_of(&self, other: &BinaryCode) -> bool {
        self.len == other.len && self.basis.iter().all(|b| other.contains(b))
    }

    /// The dual code under ⟨x, y⟩ = |x ∩ y| mod 2.
    pub fn dual(&self) -> BinaryCode {
        let mut is_pivot = vec![false; self.len];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::with_capacity(self.len - self.dim());
        for j in (0..self.len).filter(|&j| !is_pivot[j]) {
            let mut row = BinaryWord::zeros(self.len);
            row.set(j, true);
            for (b, &p) in self.basis.iter().zip(&self.pivots) {
                if b.get(j) {
                    row.set(p, true);
                }
            }
            rows.push(row);
        }
        BinaryCode::span(self.len, &rows).expect("rows have the code length")
    }

    /// Image of the code under the coordinate map i ↦ images[i].
    pub fn permuted(&self, images: &[usize]) -> BinaryCode {
        let rows: Vec<BinaryWord> = self.basis.iter().map(|b| b.permuted(images)).collect();
        BinaryCode::span(self.len, &rows).expect("permutation preserves length")
    }

    /// True if every basis row maps into the code under i ↦ images[i].
    pub fn is_fixed_by(&self, images: &[usize]) -> bool {
        self.basis.iter().all(|b| self.contains(&b.permuted(images)))
    }

    pub fn d_map(&self) -> BinaryCode {
        let rows: Vec<BinaryWord> = self.basis.iter().map(|b| b.d_map()).collect();
        BinaryCode::span(2 * self.len, &rows).expect("consistent lengths")
    }

    pub fn e_map(&self) -> BinaryCode {
        let rows: Vec<BinaryWord> = self.basis.iter().map(|b| b.e_map()).collect();
        BinaryCode::span(2 * self.len, &rows).expect("consistent lengths")
    }

    /// Span of the union of two codes of equal length.
    pub fn sum(&self, other: &BinaryCode) -> Result<BinaryCode> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        let mut out = self.clone();
        for b in &other.basis {
            out.insert(b.clone());
        }
        Ok(out)
    }

    pub fn direct_sum(&self, other: &BinaryCode) -> BinaryCode {
        let za = BinaryWord::zeros(self.len);
        let zb = BinaryWord::zeros(other.len);
        let mut rows: Vec<BinaryWord> = self.basis.iter().map(|b| b.concat(&zb)).collect();
        rows.extend(other.basis.iter().map(|b| za.concat(b)));
        BinaryCode::span(self.len + other.len, &rows).expect("consistent lengths")
    }

    /// True if every codeword has even weight (checked on the basis).
    pub fn is_even(&self) -> bool {
        self.basis.iter().all(|b| b.weight() % 2 == 0)
    }

    /// True if every codeword has weight divisible by 4.
    pub fn is_doubly_even(&self) -> bool {
        self.basis.iter().all(|b| b.weight() % 4 == 0)
            && self
                .basis
                .iter()
                .enumerate()
                .all(|(i, a)| self.basis[i + 1..].iter().all(|b| a.intersection_count(b) % 2 == 0))
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if self.dim() > cap {
            Err(Error::EnumerationCap { dim: self.dim(), cap })
        } else {
            Ok(())
        }
    }

    /// Calls `f` on every codeword (including 0) in Gray-code order.
    pub fn for_each_codeword(&self, cap: usize, mut f: impl FnMut(&BinaryWord)) -> Result<()> {
        self.check_cap(cap)?;
        let mut acc = BinaryWord::zeros(self.len);
        f(&acc);
        let total: u64 = 1 << self.dim();
        for i in 1..total {
            acc.xor_assign(&self.basis[i.trailing_zeros() as usize]);
            f(&acc);
        }
        Ok(())
    }

    /// Raw-limb enumeration for the hot loops; `f` receives the limbs.
    pub(crate) fn for_each_codeword_limbs(&self, cap: usize, mut f: impl FnMut(&[u64])) -> Result<()> {
        self.check_cap(cap)?;
        let mut acc: Limbs = BinaryWord::zeros(self.len).limbs().into();
        f(&acc);
        let total: u64 = 1 << self.dim();
        for i in 1..total {
            let b = self.basis[i.trailing_zeros() as usize].limbs();
            for (a, x) in acc.iter_mut().zip(b) {
                *a ^= x;
            }
            f(&acc);
        }
        Ok(())
    }

    /// Number of codewords of each weight 0..=n.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        let mut dist = vec![0u64; self.len + 1];
        self.for_each_codeword_limbs(DEFAULT_ENUM_CAP, |l| {
            let w: u32 = l.iter().map(|x| x.count_ones()).sum();
            dist[w as usize] += 1;
        })?;
        Ok(dist)
    }

    /// All codewords of weight exactly `m`, in support-lexicographic order.
    pub fn weight_words(&self, m: usize) -> Result<Vec<BinaryWord>> {
        self.weight_words_with_cap(m, DEFAULT_ENUM_CAP)
    }

    pub fn weight_words_with_cap(&self, m: usize, cap: usize) -> Result<Vec<BinaryWord>> {
        let mut out = Vec::new();
        self.for_each_codeword_limbs(cap, |l| {
            let w: u32 = l.iter().map(|x| x.count_ones()).sum();
            if w as usize == m {
                out.push(BinaryWord::from_limbs(self.len, l.into()));
            }
        })?;
        out.sort();
        Ok(out)
    }

    /// Minimum nonzero weight.
    ///
    /// Full enumeration when the dimension is within the cap; above it, an
    /// information-set search over combinations of t basis rows. Every
    /// combination of t rows has weight at least t (one pivot per row), so
    /// after all combinations of at most t rows are exhausted the remaining
    /// codewords weigh at least t + 1.
    pub fn min_weight(&self) -> Result<usize> {
        self.min_weight_with_cap(DEFAULT_ENUM_CAP)
    }

    pub fn min_weight_with_cap(&self, cap: usize) -> Result<usize> {
        if self.dim() == 0 {
            return Err(Error::ZeroCode);
        }
        if self.dim() <= cap {
            let mut best = usize::MAX;
            self.for_each_codeword_limbs(cap, |l| {
                let w = l.iter().map(|x| x.count_ones() as usize).sum::<usize>();
                if w > 0 && w < best {
                    best = w;
                }
            })?;
            return Ok(best);
        }
        let k = self.dim();
        let mut best = self.basis.iter().map(|b| b.weight()).min().unwrap();
        let mut t = 1;
        while t < k && best > t + 1 {
            t += 1;
            let mut idx: Vec<usize> = (0..t).collect();
            loop {
                let mut acc = self.basis[idx[0]].clone();
                for &i in &idx[1..] {
                    acc.xor_assign(&self.basis[i]);
                }
                best = best.min(acc.weight());
                // next combination
                let mut pos = t;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    if idx[pos] < k - t + pos {
                        idx[pos] += 1;
                        for q in pos + 1..t {
                            idx[q] = idx[q - 1] + 1;
                        }
                        break;
                    }
                    if pos == 0 {
                        pos = usize::MAX;
                        break;
                    }
                }
                if pos == usize::MAX {
                    break;
                }
            }
        }
        Ok(best)
    }

    /// Renders the canonical basis in the text format.
    pub fn to_text(&self) -> String {
        let rows: Vec<Vec<u8>> = self.basis.iter().map(|b| b.to_bits()).collect();
        text::render_rows(&rows, 4)
    }
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryCode[{}, {}]", self.len, self.dim())?;
        f.debug_list().entries(self.basis.iter().map(|b| b.to_string())).finish()
    }
}
