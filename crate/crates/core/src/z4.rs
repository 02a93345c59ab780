//! Linear codes over Z4.
//!
//! A code is stored through its residue code C1 (the mod-2 image), its
//! torsion code C0 = {a : 2a ∈ 𝒞} and, for each RREF row ρ of C1, a
//! correction t with ρ + 2t ∈ 𝒞. Reducing t modulo C0 makes the data
//! unique, so two codes are equal exactly when the stored fields are.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gf2::{BinaryCode, BinaryWord};
use crate::text;

/// Euclidean weight of one digit.
const EUCLID: [usize; 4] = [0, 1, 4, 1];

/// Default cap on log2 |𝒞| for codeword enumeration.
pub const DEFAULT_Z4_ENUM_LOG2: usize = 30;

/// Above this log2 |𝒞| the Type II test switches from enumeration to the
/// generator criterion.
const TYPE_II_ENUM_LOG2: usize = 20;

/// A vector in Z4^n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z4Word {
    digits: Vec<u8>,
}

impl Z4Word {
    /// Digits are reduced mod 4.
    pub fn new(digits: Vec<u8>) -> Self {
        Z4Word {
            digits: digits.into_iter().map(|d| d & 3).collect(),
        }
    }

    pub fn zeros(n: usize) -> Self {
        Z4Word { digits: vec![0; n] }
    }

    /// Parses digits 0–3, ignoring whitespace.
    pub fn parse(s: &str) -> Option<Self> {
        let mut digits = Vec::new();
        for ch in s.chars() {
            match ch {
                '0'..='3' => digits.push(ch as u8 - b'0'),
                c if c.is_whitespace() => {}
                _ => return None,
            }
        }
        Some(Z4Word { digits })
    }

    /// The 0/1 lift of a binary word.
    pub fn lift(w: &BinaryWord) -> Self {
        Z4Word { digits: w.to_bits() }
    }

    /// 2·w for a binary word w.
    pub fn doubled(w: &BinaryWord) -> Self {
        Z4Word {
            digits: w.to_bits().into_iter().map(|b| 2 * b).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    pub fn add(&self, other: &Z4Word) -> Z4Word {
        assert_eq!(self.len(), other.len());
        Z4Word {
            digits: self.digits.iter().zip(&other.digits).map(|(a, b)| (a + b) & 3).collect(),
        }
    }

    pub fn sub(&self, other: &Z4Word) -> Z4Word {
        assert_eq!(self.len(), other.len());
        Z4Word {
            digits: self.digits.iter().zip(&other.digits).map(|(a, b)| (a + 4 - b) & 3).collect(),
        }
    }

    pub fn neg(&self) -> Z4Word {
        Z4Word {
            digits: self.digits.iter().map(|a| (4 - a) & 3).collect(),
        }
    }

    pub fn scale(&self, k: u8) -> Z4Word {
        Z4Word {
            digits: self.digits.iter().map(|a| (a * (k & 3)) & 3).collect(),
        }
    }

    /// ⟨x, y⟩ = Σ x_i y_i in Z4.
    pub fn dot(&self, other: &Z4Word) -> u8 {
        assert_eq!(self.len(), other.len());
        let s: usize = self.digits.iter().zip(&other.digits).map(|(a, b)| (a * b) as usize).sum();
        (s & 3) as u8
    }

    pub fn euclidean_weight(&self) -> usize {
        self.digits.iter().map(|&d| EUCLID[d as usize]).sum()
    }

    /// The mod-2 image φ2.
    pub fn residue(&self) -> BinaryWord {
        let bits: Vec<u8> = self.digits.iter().map(|d| d & 1).collect();
        BinaryWord::from_bits(&bits)
    }

    /// w/2 mod 2 for an all-even word; `None` if some digit is odd.
    pub fn halved(&self) -> Option<BinaryWord> {
        if self.digits.iter().any(|d| d & 1 == 1) {
            return None;
        }
        let bits: Vec<u8> = self.digits.iter().map(|d| d >> 1).collect();
        Some(BinaryWord::from_bits(&bits))
    }

    /// Moves coordinate `i` to `images[i]`.
    pub fn permuted(&self, images: &[usize]) -> Z4Word {
        assert_eq!(images.len(), self.len());
        let mut out = vec![0; self.len()];
        for (i, &d) in self.digits.iter().enumerate() {
            out[images[i]] = d;
        }
        Z4Word { digits: out }
    }
}

impl fmt::Display for Z4Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z4Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Word({self})")
    }
}

/// A linear code over Z4 in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Z4Code {
    len: usize,
    /// 𝒞_1, the residue code.
    residue: BinaryCode,
    /// 𝒞_0, the torsion code.
    torsion: BinaryCode,
    /// One correction per residue basis row, reduced modulo 𝒞_0.
    lifts: Vec<BinaryWord>,
}

impl Z4Code {
    /// The Z4-span of `generators`.
    pub fn span(len: usize, generators: &[Z4Word]) -> Result<Self> {
        for g in generators {
            if g.len() != len {
                return Err(Error::LengthMismatch {
                    expected: len,
                    found: g.len(),
                });
            }
        }
        let m = generators.len();
        // Row-reduce (residue | identity) to get C1 together with the
        // generator combinations realising each basis row, and the kernel
        // of the residue map on coefficient vectors.
        let augmented: Vec<BinaryWord> = generators
            .iter()
            .enumerate()
            .map(|(k, g)| g.residue().concat(&BinaryWord::from_support(m, &[k])))
            .collect();
        let reduced = BinaryCode::span(len + m, &augmented)?;
        let combine = |coeffs: &[usize]| -> Z4Word {
            let mut acc = Z4Word::zeros(len);
            for &k in coeffs {
                acc = acc.add(&generators[k]);
            }
            acc
        };
        let tail = |row: &BinaryWord| -> Vec<usize> {
            row.support().into_iter().filter(|&i| i >= len).map(|i| i - len).collect()
        };
        let mut residue_rows = Vec::new();
        let mut witnesses = Vec::new();
        let mut torsion_gens: Vec<BinaryWord> = generators.iter().map(|g| g.residue()).collect();
        for (row, &p) in reduced.basis().iter().zip(reduced.pivots()) {
            let x = combine(&tail(row));
            if p < len {
                residue_rows.push(x.residue());
                witnesses.push(x);
            } else {
                torsion_gens.push(x.halved().expect("kernel combination has even digits"));
            }
        }
        let residue = BinaryCode::span(len, &residue_rows)?;
        let torsion = BinaryCode::span(len, &torsion_gens)?;
        // `residue_rows` are already the RREF rows of C1 in pivot order.
        debug_assert_eq!(residue.basis(), &residue_rows[..]);
        let lifts = residue
            .basis()
            .iter()
            .zip(&witnesses)
            .map(|(rho, x)| {
                let t = x.sub(&Z4Word::lift(rho)).halved().expect("same residue");
                torsion.reduced(&t)
            })
            .collect();
        Ok(Z4Code {
            len,
            residue,
            torsion,
            lifts,
        })
    }

    pub fn zero(len: usize) -> Self {
        Z4Code {
            len,
            residue: BinaryCode::zero(len),
            torsion: BinaryCode::zero(len),
            lifts: Vec::new(),
        }
    }

    /// Parses a generator matrix of digits 0–3.
    pub fn parse(textual: &str) -> Result<Self> {
        let rows = text::parse_rows(textual, 3)?;
        let len = rows[0].len();
        let words: Vec<Z4Word> = rows.into_iter().map(Z4Word::new).collect();
        Self::span(len, &words)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// 𝒞_1 = φ2(𝒞).
    pub fn residue(&self) -> &BinaryCode {
        &self.residue
    }

    /// 𝒞_0 = {a : 2a ∈ 𝒞}.
    pub fn torsion(&self) -> &BinaryCode {
        &self.torsion
    }

    /// k1, the number of order-4 generators.
    pub fn k1(&self) -> usize {
        self.residue.dim()
    }

    /// k2, the number of additional order-2 generators.
    pub fn k2(&self) -> usize {
        self.torsion.dim() - self.residue.dim()
    }

    /// log2 |𝒞| = dim 𝒞_0 + dim 𝒞_1.
    pub fn log2_size(&self) -> usize {
        self.torsion.dim() + self.residue.dim()
    }

    pub fn size(&self) -> BigUint {
        BigUint::one() << self.log2_size()
    }

    /// Rows with unit pivots, one per residue basis row.
    pub fn pivot1_rows(&self) -> Vec<Z4Word> {
        self.residue
            .basis()
            .iter()
            .zip(&self.lifts)
            .map(|(rho, t)| Z4Word::lift(rho).add(&Z4Word::doubled(t)))
            .collect()
    }

    /// Rows 2b for the torsion basis rows b whose pivot is not a residue pivot.
    pub fn pivot2_rows(&self) -> Vec<Z4Word> {
        let p1 = self.residue.pivots();
        self.torsion
            .basis()
            .iter()
            .zip(self.torsion.pivots())
            .filter(|(_, p)| !p1.contains(p))
            .map(|(b, _)| Z4Word::doubled(b))
            .collect()
    }

    /// The canonical generator matrix: pivot-1 rows, then pivot-2 rows.
    pub fn generators(&self) -> Vec<Z4Word> {
        let mut rows = self.pivot1_rows();
        rows.extend(self.pivot2_rows());
        rows
    }

    /// Each word of 𝒞 is uniquely Σ ε_j g_j over these, with ε_j ∈ {0, 1}.
    fn binary_generators(&self) -> Vec<Z4Word> {
        let mut out = Vec::new();
        for r in self.pivot1_rows() {
            out.push(r.scale(2));
            out.push(r);
        }
        out.extend(self.pivot2_rows());
        out
    }

    pub fn contains(&self, x: &Z4Word) -> bool {
        if x.len() != self.len {
            return false;
        }
        let xr = x.residue();
        if !self.residue.contains(&xr) {
            return false;
        }
        let mut y = x.clone();
        for (r, &p) in self.pivot1_rows().iter().zip(self.residue.pivots()) {
            if xr.get(p) {
                y = y.sub(r);
            }
        }
        match y.halved() {
            Some(h) => self.torsion.contains(&h),
            None => false,
        }
    }

    pub fn is_subcode_of(&self, other: &Z4Code) -> bool {
        self.len == other.len && self.generators().iter().all(|g| other.contains(g))
    }

    /// 𝒞⊥ under the Z4 inner product.
    ///
    /// Its residue is 𝒞_0⊥ and its torsion is 𝒞_1⊥. Each residue row a lifts
    /// to a + 2b with b supported on the residue pivots of 𝒞, chosen so the
    /// inner product with every pivot-1 row vanishes.
    pub fn dual(&self) -> Z4Code {
        let rows = self.pivot1_rows();
        let pivots = self.residue.pivots();
        let mut gens = Vec::new();
        for a in self.torsion.dual().basis() {
            let la = Z4Word::lift(a);
            let mut b = BinaryWord::zeros(self.len);
            for (r, &p) in rows.iter().zip(pivots) {
                let ip = la.dot(r);
                debug_assert_eq!(ip % 2, 0);
                if ip == 2 {
                    b.set(p, true);
                }
            }
            gens.push(la.add(&Z4Word::doubled(&b)));
        }
        for c in self.residue.dual().basis() {
            gens.push(Z4Word::doubled(c));
        }
        Z4Code::span(self.len, &gens).expect("consistent lengths")
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let g = self.generators();
        g.iter().enumerate().all(|(i, a)| g[i..].iter().all(|b| a.dot(b) == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        self.log2_size() == self.len && self.is_self_orthogonal()
    }

    /// Self-dual with every Euclidean weight divisible by 8.
    ///
    /// For a self-orthogonal code wt_E(x + y) ≡ wt_E(x) + wt_E(y) mod 8, so
    /// checking the generators suffices; small codes are enumerated anyway.
    pub fn is_type_ii(&self) -> bool {
        if !self.is_self_dual() {
            return false;
        }
        if self.log2_size() <= TYPE_II_ENUM_LOG2 {
            let mut ok = true;
            self.for_each_weight(TYPE_II_ENUM_LOG2, |w| ok &= w % 8 == 0)
                .expect("within cap");
            ok
        } else {
            self.generators().iter().all(|g| g.euclidean_weight() % 8 == 0)
        }
    }

    fn check_cap(&self, cap_log2: usize) -> Result<()> {
        if self.log2_size() > cap_log2 {
            Err(Error::SizeCap {
                log2_size: self.log2_size(),
                cap: cap_log2,
            })
        } else {
            Ok(())
        }
    }

    /// Calls `f` on the Euclidean weight of every codeword.
    pub fn for_each_weight(&self, cap_log2: usize, mut f: impl FnMut(usize)) -> Result<()> {
        self.for_each_sliced(cap_log2, |_, _, w| f(w))
    }

    /// Gray-code enumeration over bitsliced words: `f(lo, hi, weight)` gets
    /// the low and high bit planes (digit = lo + 2·hi) and the Euclidean
    /// weight of every codeword.
    pub(crate) fn for_each_sliced(&self, cap_log2: usize, mut f: impl FnMut(&[u64], &[u64], usize)) -> Result<()> {
        self.check_cap(cap_log2)?;
        let limbs = self.len.div_ceil(64).max(1);
        let slice = |w: &Z4Word| -> (Vec<u64>, Vec<u64>) {
            let mut lo = vec![0u64; limbs];
            let mut hi = vec![0u64; limbs];
            for (i, &d) in w.digits().iter().enumerate() {
                lo[i / 64] |= ((d & 1) as u64) << (i % 64);
                hi[i / 64] |= ((d >> 1) as u64) << (i % 64);
            }
            (lo, hi)
        };
        // Bit-sliced (low, high) digit planes of each generator and its negative.
        type Sliced = (Vec<u64>, Vec<u64>);
        let gens: Vec<(Sliced, Sliced)> = self
            .binary_generators()
            .iter()
            .map(|g| (slice(g), slice(&g.neg())))
            .collect();
        let mut lo = vec![0u64; limbs];
        let mut hi = vec![0u64; limbs];
        let mut state = vec![false; gens.len()];
        f(&lo, &hi, 0);
        let total: u64 = 1u64 << gens.len();
        for step in 1..total {
            let j = step.trailing_zeros() as usize;
            let ((plo, phi), (nlo, nhi)) = &gens[j];
            let (glo, ghi) = if state[j] { (nlo, nhi) } else { (plo, phi) };
            state[j] = !state[j];
            let mut weight = 0usize;
            for k in 0..limbs {
                let carry = lo[k] & glo[k];
                lo[k] ^= glo[k];
                hi[k] ^= ghi[k] ^ carry;
                weight += lo[k].count_ones() as usize + 4 * (hi[k] & !lo[k]).count_ones() as usize;
            }
            f(&lo, &hi, weight);
        }
        Ok(())
    }

    /// The distinct (odd support, support of the 2s) pairs among codewords
    /// of minimum Euclidean weight, sorted. Sign changes preserve these.
    pub fn typed_min_supports(&self, cap_log2: usize) -> Result<Vec<(BinaryWord, BinaryWord)>> {
        let min = self.min_euclidean_weight_with_cap(cap_log2)?;
        let mut seen: std::collections::HashSet<(Vec<u64>, Vec<u64>)> = Default::default();
        self.for_each_sliced(cap_log2, |lo, hi, w| {
            if w == min {
                let two: Vec<u64> = lo.iter().zip(hi).map(|(l, h)| h & !l).collect();
                seen.insert((lo.to_vec(), two));
            }
        })?;
        let to_word = |limbs: &[u64]| {
            let support: Vec<usize> = (0..self.len).filter(|&i| limbs[i / 64] >> (i % 64) & 1 == 1).collect();
            BinaryWord::from_support(self.len, &support)
        };
        let mut out: Vec<(BinaryWord, BinaryWord)> = seen.iter().map(|(o, t)| (to_word(o), to_word(t))).collect();
        out.sort();
        Ok(out)
    }

    /// Calls `f` on every codeword. Slower than [`Self::for_each_weight`].
    pub fn for_each_codeword(&self, cap_log2: usize, mut f: impl FnMut(&Z4Word)) -> Result<()> {
        self.check_cap(cap_log2)?;
        let gens = self.binary_generators();
        let negs: Vec<Z4Word> = gens.iter().map(|g| g.neg()).collect();
        let mut acc = Z4Word::zeros(self.len);
        let mut state = vec![false; gens.len()];
        f(&acc);
        for step in 1..(1u64 << gens.len()) {
            let j = step.trailing_zeros() as usize;
            acc = acc.add(if state[j] { &negs[j] } else { &gens[j] });
            state[j] = !state[j];
            f(&acc);
        }
        Ok(())
    }

    /// Number of codewords of each Euclidean weight.
    pub fn euclidean_weight_distribution(&self) -> Result<BTreeMap<usize, u64>> {
        let mut dist = BTreeMap::new();
        self.for_each_weight(DEFAULT_Z4_ENUM_LOG2, |w| *dist.entry(w).or_insert(0) += 1)?;
        Ok(dist)
    }

    pub fn min_euclidean_weight(&self) -> Result<usize> {
        self.min_euclidean_weight_with_cap(DEFAULT_Z4_ENUM_LOG2)
    }

    pub fn min_euclidean_weight_with_cap(&self, cap_log2: usize) -> Result<usize> {
        if self.log2_size() == 0 {
            return Err(Error::ZeroCode);
        }
        let mut best = usize::MAX;
        self.for_each_weight(cap_log2, |w| {
            if w > 0 && w < best {
                best = w;
            }
        })?;
        Ok(best)
    }

    /// Type II with minimum Euclidean weight 8(⌊n/24⌋ + 1).
    pub fn is_extremal(&self) -> Result<bool> {
        if !self.is_type_ii() {
            return Ok(false);
        }
        Ok(self.min_euclidean_weight()? == 8 * (self.len / 24 + 1))
    }

    /// Image under the coordinate map i ↦ images[i].
    pub fn permuted(&self, images: &[usize]) -> Z4Code {
        let gens: Vec<Z4Word> = self.generators().iter().map(|g| g.permuted(images)).collect();
        Z4Code::span(self.len, &gens).expect("consistent lengths")
    }

    /// The homogeneous sign system: rows ρ ⊙ h for ρ in a basis of 𝒞_1 and h
    /// in a basis of 𝒞_0⊥. A sign vector t (negate where t is 1) fixes 𝒞
    /// exactly when it satisfies these equations.
    fn sign_equations(&self) -> Vec<BinaryWord> {
        let checks = self.torsion.dual();
        let mut rows = Vec::new();
        for rho in self.residue.basis() {
            for h in checks.basis() {
                rows.push(rho.and(h));
            }
        }
        rows
    }

    /// log2 |R ∩ Aut(𝒞)|, the number of free sign patterns.
    pub fn sign_kernel_log2(&self) -> usize {
        let rank = BinaryCode::span(self.len, &self.sign_equations()).unwrap().dim();
        self.len - rank
    }

    /// |R ∩ Aut(𝒞)|.
    pub fn sign_kernel_order(&self) -> BigUint {
        BigUint::one() << self.sign_kernel_log2()
    }

    /// A basis of the sign vectors fixing 𝒞.
    pub fn sign_kernel_basis(&self) -> Vec<BinaryWord> {
        BinaryCode::span(self.len, &self.sign_equations())
            .unwrap()
            .dual()
            .basis()
            .to_vec()
    }

    /// For a coordinate permutation, a sign vector making it an automorphism:
    /// `negate[i]` is set when coordinate i is negated before moving to
    /// images[i]. `None` if no signs work.
    pub fn signs_for(&self, images: &[usize]) -> Option<Vec<bool>> {
        let n = self.len;
        if images.len() != n {
            return None;
        }
        let checks = self.torsion.dual();
        let mut equations = Vec::new();
        for r in self.pivot1_rows() {
            let y = r.permuted(images);
            let ybar = y.residue();
            if !self.residue.contains(&ybar) {
                return None;
            }
            // c ∈ 𝒞 with the same residue as y, then v = (y − c)/2.
            let mut c = Z4Word::zeros(n);
            for (row, &p) in self.pivot1_rows().iter().zip(self.residue.pivots()) {
                if ybar.get(p) {
                    c = c.add(row);
                }
            }
            let v = y.sub(&c).halved().expect("equal residues");
            // Negating coordinate j adds 2·ȳ_j there, so we need
            // t ⊙ ȳ + v ∈ 𝒞_0: ⟨h, t ⊙ ȳ⟩ = ⟨h, v⟩ for each check h.
            for h in checks.basis() {
                let mut eq = ybar.and(h).concat(&BinaryWord::zeros(1));
                if h.dot(&v) {
                    eq.set(n, true);
                }
                equations.push(eq);
            }
        }
        for b in self.pivot2_rows() {
            let half = b.halved().unwrap();
            if !self.torsion.contains(&half.permuted(images)) {
                return None;
            }
        }
        let system = BinaryCode::span(n + 1, &equations).unwrap();
        if system.pivots().last() == Some(&n) {
            return None;
        }
        // Free variables zero; each pivot variable equals its row's constant.
        let mut t = vec![false; n];
        for (row, &p) in system.basis().iter().zip(system.pivots()) {
            t[p] = row.get(n);
        }
        // t is indexed by target coordinate; report it by source coordinate.
        let negate: Vec<bool> = (0..n).map(|i| t[images[i]]).collect();
        Some(negate)
    }

    /// Canonical generator matrix in the text format.
    pub fn to_text(&self) -> String {
        let rows: Vec<Vec<u8>> = self.generators().iter().map(|g| g.digits().to_vec()).collect();
        text::render_rows(&rows, 4)
    }
}

impl fmt::Debug for Z4Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Code[{}; 4^{} 2^{}]", self.len, self.k1(), self.k2())?;
        f.debug_list()
            .entries(self.generators().iter().map(|g| g.to_string()))
            .finish()
    }
}
